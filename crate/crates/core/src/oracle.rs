//! Brute-force reference: explicit states, collective spin matrices and the
//! perpendicular quadratic form.
//!
//! Nothing here touches the closed forms. The Dicke-basis path works for
//! `N ≤ 300`; the full `2^N` path (`N ≤ 12`) builds the state from tensor
//! products and applies Pauli operators qubit by qubit, so it does not share
//! the ladder matrices either.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::binomial;
use crate::error::SqueezeError;
use crate::state::{
    DickeClassConfig, FrameBasis, Method, SpinExpectation, SqueezingReport, FULL_HILBERT_MAX_N,
};

/// Default number of angles in [`min_perp_variance_scan`].
pub const DEFAULT_SCAN_STEPS: usize = 3600;
pub const MIN_SCAN_STEPS: usize = 360;

/// State in the Dicke basis `|N/2, N/2 - j⟩`, indexed by the number of
/// `|1⟩` excitations `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeVector {
    n: u32,
    coeffs: DVector<Complex64>,
}

impl DickeVector {
    pub fn new(n: u32, coeffs: DVector<Complex64>) -> Result<Self, SqueezeError> {
        let expected = n as usize + 1;
        if coeffs.len() != expected {
            return Err(SqueezeError::DimensionMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self { n, coeffs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &DVector<Complex64> {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    /// Probabilities `|c_j|²`.
    pub fn populations(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.norm_sqr()).collect()
    }

    /// `max_j |c_j - e^{iθ} d_j|` after removing the relative global phase.
    pub fn distance_up_to_phase(&self, other: &DickeVector) -> f64 {
        let overlap: Complex64 = self.coeffs.dotc(&other.coeffs);
        let phase = if overlap.norm() > 0.0 {
            overlap / overlap.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - phase * b).norm())
            .fold(0.0, f64::max)
    }
}

/// Amplitudes over the computational basis; bit `i` of the index is qubit `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FullStateVector {
    n: u32,
    amplitudes: Vec<Complex64>,
}

impl FullStateVector {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Components `⟨N/2, N/2 - j | ψ⟩`.
    pub fn project_to_dicke(&self) -> DickeVector {
        let n = self.n as usize;
        let mut coeffs = DVector::<Complex64>::zeros(n + 1);
        for (x, amp) in self.amplitudes.iter().enumerate() {
            coeffs[x.count_ones() as usize] += amp;
        }
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c /= binomial_f64(n, j).sqrt();
        }
        DickeVector {
            n: self.n,
            coeffs,
        }
    }

    /// Largest amplitude change under any transposition of two qubits.
    pub fn max_transposition_defect(&self) -> f64 {
        let n = self.n as usize;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                for (x, amp) in self.amplitudes.iter().enumerate() {
                    let (bi, bj) = ((x >> i) & 1, (x >> j) & 1);
                    let swapped = if bi == bj {
                        x
                    } else {
                        x ^ (1 << i) ^ (1 << j)
                    };
                    worst = worst.max((amp - self.amplitudes[swapped]).norm());
                }
            }
        }
        worst
    }

    /// `(σ·axis) ψ` summed over qubits and halved, i.e. `(S·axis) ψ`.
    pub fn apply_collective(&self, axis: [f64; 3]) -> Vec<Complex64> {
        let i = Complex64::new(0.0, 1.0);
        let mut out = vec![Complex64::zero(); self.amplitudes.len()];
        for (x, amp) in self.amplitudes.iter().enumerate() {
            if amp.is_zero() {
                continue;
            }
            for q in 0..self.n as usize {
                let bit = (x >> q) & 1;
                let flipped = x ^ (1 << q);
                // σx|b⟩ = |1-b⟩, σy|0⟩ = i|1⟩, σy|1⟩ = -i|0⟩, σz|b⟩ = (-1)^b |b⟩
                let sign = if bit == 0 { 1.0 } else { -1.0 };
                out[flipped] += amp * (axis[0] + i * sign * axis[1]) * 0.5;
                out[x] += amp * (sign * axis[2] * 0.5);
            }
        }
        out
    }

    pub fn expectation(&self, axis: [f64; 3]) -> f64 {
        let applied = self.apply_collective(axis);
        inner(&self.amplitudes, &applied).re
    }
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn binomial_f64(n: usize, k: usize) -> f64 {
    binomial(n as u64, k as i64)
        .expect("n within binomial range")
        .to_f64()
        .expect("binomial fits in f64")
}

/// `S·axis` as an `(N+1) × (N+1)` matrix in the Dicke basis.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveOperator {
    matrix: DMatrix<Complex64>,
    axis: [f64; 3],
}

impl CollectiveOperator {
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `max |A - A†|`
    pub fn hermiticity_defect(&self) -> f64 {
        let diff = &self.matrix - self.matrix.adjoint();
        diff.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Second moments of the spin in the plane perpendicular to the mean spin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerpVarianceMatrix {
    /// `⟨S²_n1⟩`
    pub t11: f64,
    /// `⟨S²_n2⟩`
    pub t22: f64,
    /// `½⟨S_n1 S_n2 + S_n2 S_n1⟩`
    pub t12: f64,
}

impl PerpVarianceMatrix {
    /// `Xᵀ T X` at `X = (cos φ, sin φ)`.
    pub fn quadratic_form(&self, phi: f64) -> f64 {
        let (s, c) = phi.sin_cos();
        self.t11 * c * c + 2.0 * self.t12 * s * c + self.t22 * s * s
    }
}

/// Expansion of the subset-sum state in the Dicke basis.
///
/// Unnormalized, the coefficient at `j` excitations is
/// `C(N-j, k) a^{N-k-j} (1-a²)^{j/2} √C(N,j)` for `j ≤ N-k` and zero beyond:
/// each of the `C(N,j)` strings with `j` ones receives one term per choice of
/// the `k` `|0⟩` slots among its `N-j` zeros. Terms are formed in log space
/// so large `N` neither overflows nor underflows before normalization.
pub fn dicke_coefficients(cfg: &DickeClassConfig) -> DickeVector {
    let n = cfg.n() as usize;
    let k = cfg.k() as usize;
    let (a, b) = (cfg.a(), cfg.b());
    let mut logs = vec![f64::NEG_INFINITY; n + 1];
    for (j, slot) in logs.iter_mut().enumerate().take(n - k + 1) {
        let a_power = (n - k - j) as f64;
        let log_a = if a_power == 0.0 { 0.0 } else { a_power * a.ln() };
        let log_b = if j == 0 { 0.0 } else { j as f64 * b.ln() };
        *slot = binomial_f64(n - j, k).ln() + log_a + log_b + 0.5 * binomial_f64(n, j).ln();
    }
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut coeffs = DVector::from_iterator(
        n + 1,
        logs.iter().map(|&l| Complex64::new((l - max).exp(), 0.0)),
    );
    let norm = coeffs.norm();
    coeffs /= Complex64::new(norm, 0.0);
    DickeVector {
        n: cfg.n(),
        coeffs,
    }
}

/// Equal-weight sum over the `C(N,k)` placements of `|0⟩` among the qubits,
/// with `(a, √(1-a²))` on the remaining ones, normalized.
///
/// Summing over all `N!` orderings instead multiplies every term by
/// `k! (N-k)!`, which normalization removes.
pub fn full_hilbert_state(cfg: &DickeClassConfig) -> Result<FullStateVector, SqueezeError> {
    let n = cfg.n();
    if n > FULL_HILBERT_MAX_N {
        return Err(SqueezeError::FullHilbertTooLarge {
            n,
            max: FULL_HILBERT_MAX_N,
        });
    }
    let unnormalized = subset_sum_state(n, cfg.k(), cfg.a());
    let norm = unnormalized.norm();
    Ok(FullStateVector {
        n,
        amplitudes: unnormalized
            .amplitudes
            .into_iter()
            .map(|c| c / norm)
            .collect(),
    })
}

/// The subset sum before normalization; its squared norm is compared
/// against the closed-form normalization constant in tests.
pub fn subset_sum_state(n: u32, k: u32, a: f64) -> FullStateVector {
    let dim = 1usize << n;
    let spinor = [a, (1.0 - a * a).sqrt()];
    let mut amplitudes = vec![Complex64::zero(); dim];
    for zeros in (0..dim).filter(|m| m.count_ones() == k) {
        // product state: |0⟩ on the bits of `zeros`, (a, b) elsewhere
        for (x, amp) in amplitudes.iter_mut().enumerate() {
            if x & zeros != 0 {
                continue;
            }
            let mut value = 1.0;
            for q in (0..n as usize).filter(|q| zeros & (1 << q) == 0) {
                value *= spinor[(x >> q) & 1];
            }
            *amp += value;
        }
    }
    FullStateVector { n, amplitudes }
}

/// `(Sx, Sy, Sz)` in the Dicke basis from the ladder matrix elements
/// `⟨m+1|S+|m⟩ = √(s(s+1) - m(m+1))`.
pub fn spin_matrices(n: u32) -> [DMatrix<Complex64>; 3] {
    let dim = n as usize + 1;
    let s = f64::from(n) / 2.0;
    let mut raise = DMatrix::<f64>::zeros(dim, dim);
    for j in 1..dim {
        let m = s - j as f64;
        raise[(j - 1, j)] = (s * (s + 1.0) - m * (m + 1.0)).sqrt();
    }
    let lower = raise.transpose();
    let sx = (&raise + &lower).map(|v| Complex64::new(0.5 * v, 0.0));
    let sy = (&raise - &lower).map(|v| Complex64::new(0.0, -0.5 * v));
    let sz = DMatrix::from_fn(dim, dim, |r, c| {
        if r == c {
            Complex64::new(s - r as f64, 0.0)
        } else {
            Complex64::zero()
        }
    });
    [sx, sy, sz]
}

/// `axis · (Sx, Sy, Sz)`; `axis` is expected to be a unit vector.
pub fn collective_operator(n: u32, axis: [f64; 3]) -> CollectiveOperator {
    let [sx, sy, sz] = spin_matrices(n);
    let matrix = sx * Complex64::new(axis[0], 0.0)
        + sy * Complex64::new(axis[1], 0.0)
        + sz * Complex64::new(axis[2], 0.0);
    CollectiveOperator { matrix, axis }
}

/// `⟨ψ|O|ψ⟩`, real part. The imaginary part vanishes for Hermitian `O`.
pub fn expectation(state: &DickeVector, op: &CollectiveOperator) -> Result<f64, SqueezeError> {
    Ok(expectation_complex(state, op)?.re)
}

pub fn expectation_complex(
    state: &DickeVector,
    op: &CollectiveOperator,
) -> Result<Complex64, SqueezeError> {
    check_dim(state, op)?;
    Ok(state.coeffs.dotc(&(op.matrix() * &state.coeffs)))
}

fn check_dim(state: &DickeVector, op: &CollectiveOperator) -> Result<(), SqueezeError> {
    if op.dim() != state.coeffs.len() {
        return Err(SqueezeError::DimensionMismatch {
            expected: state.coeffs.len(),
            found: op.dim(),
        });
    }
    Ok(())
}

pub fn mean_spin(state: &DickeVector) -> SpinExpectation {
    let [sx, sy, sz] = spin_matrices(state.n)
        .map(|m| state.coeffs.dotc(&(m * &state.coeffs)).re);
    SpinExpectation::new(sx, sy, sz)
}

/// Orthonormal frame around an arbitrary mean spin vector.
///
/// `n1` is the component of `ŷ` perpendicular to `n0` (falling back to `x̂`
/// when `n0` is close to `ŷ`) and `n2 = n0 × n1`. For a mean spin in the
/// x-z plane this is `n1 = ŷ`, `n2 = (-n0z, 0, n0x)`.
pub fn frame_for(spin: &SpinExpectation, n: u32) -> Result<FrameBasis, SqueezeError> {
    if spin.is_null(n) {
        return Err(SqueezeError::UndefinedMeanSpin);
    }
    let len = spin.norm();
    let n0 = spin.as_array().map(|c| c / len);
    let reference = if n0[1].abs() < 0.9 {
        [0.0, 1.0, 0.0]
    } else {
        [1.0, 0.0, 0.0]
    };
    let along = dot(reference, n0);
    let raw: [f64; 3] = std::array::from_fn(|i| reference[i] - along * n0[i]);
    let raw_len = dot(raw, raw).sqrt();
    let n1 = raw.map(|c| c / raw_len);
    let n2 = cross(n0, n1);
    Ok(FrameBasis { n0, n1, n2 })
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// The perpendicular second-moment matrix in the frame `(n1, n2)`.
pub fn t_matrix(state: &DickeVector, frame: &FrameBasis) -> PerpVarianceMatrix {
    let u = collective_operator(state.n, frame.n1).matrix * &state.coeffs;
    let v = collective_operator(state.n, frame.n2).matrix * &state.coeffs;
    PerpVarianceMatrix {
        t11: u.norm_squared(),
        t22: v.norm_squared(),
        t12: u.dotc(&v).re,
    }
}

/// Same matrix computed from the full `2^N` state.
pub fn t_matrix_full(state: &FullStateVector, frame: &FrameBasis) -> PerpVarianceMatrix {
    let u = state.apply_collective(frame.n1);
    let v = state.apply_collective(frame.n2);
    let norm_sq = |w: &[Complex64]| w.iter().map(|c| c.norm_sqr()).sum::<f64>();
    PerpVarianceMatrix {
        t11: norm_sq(&u),
        t22: norm_sq(&v),
        t12: inner(&u, &v).re,
    }
}

/// Smaller eigenvalue of `T` and the angle of its eigenvector in `[0, π)`.
///
/// The larger eigenvalue `λ+ = mean + hypot(Δ/2, t12)` has no cancellation;
/// the smaller one is taken as `det / λ+`. For degenerate `T` the angle is
/// `π/2`, i.e. `n2`.
pub fn min_perp_variance_eig(t: &PerpVarianceMatrix) -> (f64, f64) {
    let mean = 0.5 * (t.t11 + t.t22);
    let half_gap = 0.5 * (t.t11 - t.t22);
    let largest = mean + half_gap.hypot(t.t12);
    let smallest = if largest > 0.0 {
        (t.t11 * t.t22 - t.t12 * t.t12) / largest
    } else {
        0.0
    };
    let phi_max = 0.5 * (2.0 * t.t12).atan2(t.t11 - t.t22);
    (smallest, (phi_max + 0.5 * PI).rem_euclid(PI))
}

/// Minimum of `⟨(S·n⊥(φ))²⟩` over `φ = jπ/steps`, `j = 0..steps`.
pub fn min_perp_variance_scan(
    state: &DickeVector,
    frame: &FrameBasis,
    steps: usize,
) -> Result<f64, SqueezeError> {
    Ok(scan(state, frame, steps)?.0)
}

fn scan(state: &DickeVector, frame: &FrameBasis, steps: usize) -> Result<(f64, f64), SqueezeError> {
    if steps < MIN_SCAN_STEPS {
        return Err(SqueezeError::ScanResolution {
            steps,
            min: MIN_SCAN_STEPS,
        });
    }
    // S·n⊥(φ) = cos φ S_n1 + sin φ S_n2, so two matrix-vector products suffice
    let u = collective_operator(state.n, frame.n1).matrix * &state.coeffs;
    let v = collective_operator(state.n, frame.n2).matrix * &state.coeffs;
    let mut best = (f64::INFINITY, 0.0);
    for j in 0..steps {
        let phi = PI * j as f64 / steps as f64;
        let (s, c) = phi.sin_cos();
        let variance = (&u * Complex64::new(c, 0.0) + &v * Complex64::new(s, 0.0)).norm_squared();
        if variance < best.0 {
            best = (variance, phi);
        }
    }
    Ok(best)
}

/// `ξ` from the Dicke-basis state and the smallest eigenvalue of `T`.
/// Accepts the product edges `k = 0` and `k = N`.
pub fn squeezing_parameter_oracle(cfg: &DickeClassConfig) -> SqueezingReport {
    let state = dicke_coefficients(cfg);
    let spin = mean_spin(&state);
    match frame_for(&spin, cfg.n()) {
        Ok(frame) => {
            let (variance, phi) = min_perp_variance_eig(&t_matrix(&state, &frame));
            SqueezingReport::from_variance(*cfg, spin, variance, phi, Method::OracleEig)
        }
        Err(_) => SqueezingReport::undefined(*cfg, spin, Method::OracleEig),
    }
}

/// `ξ` from an angle scan instead of the eigenvalue.
pub fn squeezing_parameter_scan(
    cfg: &DickeClassConfig,
    steps: usize,
) -> Result<SqueezingReport, SqueezeError> {
    let state = dicke_coefficients(cfg);
    let spin = mean_spin(&state);
    Ok(match frame_for(&spin, cfg.n()) {
        Ok(frame) => {
            let (variance, phi) = scan(&state, &frame, steps)?;
            SqueezingReport::from_variance(*cfg, spin, variance, phi, Method::OracleScan)
        }
        Err(_) => SqueezingReport::undefined(*cfg, spin, Method::OracleScan),
    })
}

/// `ξ` from the full `2^N` state with qubit-wise Pauli operators.
pub fn squeezing_parameter_full(cfg: &DickeClassConfig) -> Result<SqueezingReport, SqueezeError> {
    let state = full_hilbert_state(cfg)?;
    let spin = SpinExpectation::new(
        state.expectation([1.0, 0.0, 0.0]),
        state.expectation([0.0, 1.0, 0.0]),
        state.expectation([0.0, 0.0, 1.0]),
    );
    Ok(match frame_for(&spin, cfg.n()) {
        Ok(frame) => {
            let (variance, phi) = min_perp_variance_eig(&t_matrix_full(&state, &frame));
            SqueezingReport::from_variance(*cfg, spin, variance, phi, Method::OracleEig)
        }
        Err(_) => SqueezingReport::undefined(*cfg, spin, Method::OracleEig),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::Verdict;
    use approx::assert_abs_diff_eq;

    fn cfg(n: u32, k: u32, a: f64) -> DickeClassConfig {
        DickeClassConfig::with_product_edges(n, k, a).unwrap()
    }

    fn real(v: &DickeVector) -> Vec<f64> {
        v.coeffs().iter().map(|c| c.re).collect()
    }

    #[test]
    fn two_qubit_coefficients() {
        let v = dicke_coefficients(&cfg(2, 1, 0.6));
        let c = real(&v);
        assert_abs_diff_eq!(c[0], 0.727607, epsilon = 1e-6);
        assert_abs_diff_eq!(c[1], 0.685994, epsilon = 1e-6);
        assert_eq!(c[2], 0.0);
        assert_abs_diff_eq!(c[0] / c[1], 1.2 / (2.0f64.sqrt() * 0.8), epsilon = 1e-14);
    }

    #[test]
    fn orthogonal_spinors_give_a_dicke_state() {
        for n in 2..=10 {
            for k in 0..=n {
                let c = real(&dicke_coefficients(&cfg(n, k, 0.0)));
                for (j, v) in c.iter().enumerate() {
                    let want = if j == (n - k) as usize { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(*v, want, epsilon = 1e-15);
                }
            }
        }
    }

    #[test]
    fn all_zero_edge() {
        let c = real(&dicke_coefficients(&cfg(5, 5, 0.4)));
        assert_eq!(c, vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn full_state_small_cases() {
        let s = full_hilbert_state(&cfg(2, 1, 0.0)).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let amps: Vec<f64> = s.amplitudes().iter().map(|c| c.re).collect();
        for (got, want) in amps.iter().zip([0.0, h, h, 0.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
        }

        let s = full_hilbert_state(&cfg(3, 2, 0.0)).unwrap();
        let third = 1.0 / 3.0f64.sqrt();
        for (x, amp) in s.amplitudes().iter().enumerate() {
            let want = if x.count_ones() == 1 { third } else { 0.0 };
            assert_abs_diff_eq!(amp.re, want, epsilon = 1e-15);
        }

        assert!(matches!(
            full_hilbert_state(&cfg(13, 3, 0.5)),
            Err(SqueezeError::FullHilbertTooLarge { .. })
        ));
    }

    #[test]
    fn projection_matches_coefficients() {
        let c = cfg(2, 1, 0.6);
        let projected = full_hilbert_state(&c).unwrap().project_to_dicke();
        assert!(projected.distance_up_to_phase(&dicke_coefficients(&c)) < 1e-12);
    }

    #[test]
    fn full_state_is_permutation_symmetric() {
        for (n, k, a) in [(4, 1, 0.3), (5, 2, 0.7), (6, 3, 0.0)] {
            let s = full_hilbert_state(&cfg(n, k, a)).unwrap();
            assert_abs_diff_eq!(s.norm(), 1.0, epsilon = 1e-12);
            assert!(s.max_transposition_defect() < 1e-12);
        }
    }

    #[test]
    fn spin_one_and_three_halves_matrices() {
        let sz = collective_operator(2, [0.0, 0.0, 1.0]);
        for (r, want) in [1.0, 0.0, -1.0].iter().enumerate() {
            assert_eq!(sz.matrix()[(r, r)].re, *want);
        }
        let sx = collective_operator(2, [1.0, 0.0, 0.0]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected = [[0.0, h, 0.0], [h, 0.0, h], [0.0, h, 0.0]];
        for r in 0..3 {
            for c in 0..3 {
                assert_abs_diff_eq!(sx.matrix()[(r, c)].re, expected[r][c], epsilon = 1e-15);
                assert_eq!(sx.matrix()[(r, c)].im, 0.0);
            }
        }
        let sz = collective_operator(3, [0.0, 0.0, 1.0]);
        let diag: Vec<f64> = (0..4).map(|i| sz.matrix()[(i, i)].re).collect();
        assert_eq!(diag, vec![1.5, 0.5, -0.5, -1.5]);
        assert!(sx.hermiticity_defect() < 1e-15);
    }

    #[test]
    fn expectation_values() {
        let w = dicke_coefficients(&cfg(3, 2, 0.0));
        assert_abs_diff_eq!(
            expectation(&w, &collective_operator(3, [0.0, 0.0, 1.0])).unwrap(),
            0.5,
            epsilon = 1e-15
        );
        let s = dicke_coefficients(&cfg(2, 1, 0.6));
        assert_abs_diff_eq!(
            expectation(&s, &collective_operator(2, [1.0, 0.0, 0.0])).unwrap(),
            0.705882,
            epsilon = 1e-6
        );
        let sy = expectation_complex(&s, &collective_operator(2, [0.0, 1.0, 0.0])).unwrap();
        assert!(sy.norm() < 1e-12);
        assert!(matches!(
            expectation(&s, &collective_operator(3, [0.0, 0.0, 1.0])),
            Err(SqueezeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn t_matrix_values() {
        let w = dicke_coefficients(&cfg(3, 2, 0.0));
        let frame = frame_for(&mean_spin(&w), 3).unwrap();
        let t = t_matrix(&w, &frame);
        assert_abs_diff_eq!(t.t11, 1.75, epsilon = 1e-14);
        assert_abs_diff_eq!(t.t22, 1.75, epsilon = 1e-14);
        assert_abs_diff_eq!(t.t12, 0.0, epsilon = 1e-14);

        let s = dicke_coefficients(&cfg(2, 1, 0.6));
        let frame = frame_for(&mean_spin(&s), 2).unwrap();
        let t = t_matrix(&s, &frame);
        assert_abs_diff_eq!(t.t22, 0.264706, epsilon = 1e-6);
        assert_abs_diff_eq!(t.t11, 0.735294, epsilon = 1e-6);
        assert_abs_diff_eq!(t.t12, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn eigen_closed_form() {
        let (v, phi) = min_perp_variance_eig(&PerpVarianceMatrix {
            t11: 1.75,
            t22: 1.75,
            t12: 0.0,
        });
        assert_eq!(v, 1.75);
        assert_abs_diff_eq!(phi, PI / 2.0);

        let (v, phi) = min_perp_variance_eig(&PerpVarianceMatrix {
            t11: 0.735294,
            t22: 0.264706,
            t12: 0.0,
        });
        assert_abs_diff_eq!(v, 0.264706, epsilon = 1e-15);
        assert_abs_diff_eq!(phi, PI / 2.0);

        let (v, _) = min_perp_variance_eig(&PerpVarianceMatrix {
            t11: 1.0,
            t22: 1.0,
            t12: 0.0,
        });
        assert_eq!(v, 1.0);

        // rotated diag(3, 1) by 30°: minimum 1 along 120°
        let (c, s) = ((PI / 6.0).cos(), (PI / 6.0).sin());
        let t = PerpVarianceMatrix {
            t11: 3.0 * c * c + s * s,
            t22: 3.0 * s * s + c * c,
            t12: 2.0 * s * c,
        };
        let (v, phi) = min_perp_variance_eig(&t);
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(phi, 2.0 * PI / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(t.quadratic_form(phi), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn scan_agrees_with_eigenvalue() {
        for (n, k, a) in [(2, 1, 0.6), (3, 2, 0.0), (7, 3, 0.45), (12, 5, 0.8)] {
            let c = cfg(n, k, a);
            let state = dicke_coefficients(&c);
            let frame = frame_for(&mean_spin(&state), n).unwrap();
            let (eig, _) = min_perp_variance_eig(&t_matrix(&state, &frame));
            let fine = min_perp_variance_scan(&state, &frame, 3600).unwrap();
            let coarse = min_perp_variance_scan(&state, &frame, 360).unwrap();
            assert!((fine - eig).abs() < 1e-6, "{n} {k} {a}: {fine} vs {eig}");
            assert!(fine >= eig - 1e-12);
            assert!((coarse - fine).abs() <= 1e-4);
        }
        let state = dicke_coefficients(&cfg(2, 1, 0.6));
        let frame = frame_for(&mean_spin(&state), 2).unwrap();
        assert!(matches!(
            min_perp_variance_scan(&state, &frame, 100),
            Err(SqueezeError::ScanResolution { .. })
        ));
    }

    #[test]
    fn oracle_reports() {
        let r = squeezing_parameter_oracle(&cfg(2, 1, 0.6));
        assert_abs_diff_eq!(r.xi.unwrap(), 2.0 * (0.264706f64 / 2.0).sqrt(), epsilon = 1e-6);
        assert_abs_diff_eq!(r.xi.unwrap(), 0.7276, epsilon = 1e-4);
        assert_eq!(r.verdict, Verdict::Squeezed);
        assert_eq!(r.method, Method::OracleEig);

        assert!(squeezing_parameter_oracle(&cfg(6, 1, 0.0)).xi.unwrap() > 1.0);
        let r = squeezing_parameter_oracle(&cfg(6, 3, 0.0));
        assert_eq!(r.verdict, Verdict::UndefinedMeanSpin);
        assert!(r.xi.is_none());
    }

    #[test]
    fn coherent_edges_sit_at_the_standard_limit() {
        for n in 1..=40 {
            for a in [0.0, 0.3, 0.9] {
                let r = squeezing_parameter_oracle(&cfg(n, n, a));
                assert_abs_diff_eq!(r.perp_variance_min.unwrap(), f64::from(n) / 4.0, epsilon = 1e-12);
                assert_abs_diff_eq!(r.xi.unwrap(), 1.0, epsilon = 1e-12);
                let r = squeezing_parameter_oracle(&cfg(n, 0, a));
                assert_abs_diff_eq!(r.xi.unwrap(), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn full_path_matches_dicke_path() {
        for (n, k, a) in [(2, 1, 0.6), (5, 2, 0.35), (8, 4, 0.5), (6, 3, 0.0)] {
            let dicke = squeezing_parameter_oracle(&cfg(n, k, a));
            let full = squeezing_parameter_full(&cfg(n, k, a)).unwrap();
            assert_eq!(dicke.verdict, full.verdict);
            if let (Some(x), Some(y)) = (dicke.xi, full.xi) {
                assert_abs_diff_eq!(x, y, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn large_n_coefficients_stay_finite() {
        for a in [0.005, 0.5, 0.995] {
            let v = dicke_coefficients(&cfg(300, 150, a));
            assert_abs_diff_eq!(v.norm(), 1.0, epsilon = 1e-12);
            assert!(v.coeffs().iter().all(|c| c.re.is_finite() && c.re >= 0.0));
        }
    }
}
