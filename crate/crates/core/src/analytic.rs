//! Closed-form mean spin, perpendicular frame and minimum perpendicular
//! variance for the Dicke class.
//!
//! With `q = a²`, `b = √(1-q)` and `𝒩²(q)` the squared normalization,
//!
//! ```text
//! ⟨Sx⟩ = N a b Px(q) / (2 𝒩²)
//! ⟨Sz⟩ = N Pz(q) / (2 𝒩²)
//! ⟨S²_n2⟩ = N/4 + N(N-1) / (4 𝒩²) · Σ_j Wj(q) · Πj(M1, M2, M3, a)
//! ```
//!
//! where `Px`, `Pz` and the seven `Wj` are polynomials in `q` with integer
//! coefficients built from binomials, and `Πj` are the quadratic products
//! listed in [`SecondMomentTerm`]. The integer scaling (factors 2 and 4)
//! keeps every coefficient exact.

use std::f64::consts::FRAC_PI_2;

use num_bigint::BigInt;

use crate::combinatorics::{choose, normalization_polynomial, CompensatedSum, PolyBuilder, QPolynomial};
use crate::error::{ConfigError, SqueezeError};
use crate::state::{
    DickeClassConfig, FrameBasis, FrameCoefficients, Method, SpinExpectation, SqueezingReport,
};

/// Quadratic products of the frame coefficients that weight the second moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondMomentTerm {
    /// `M1²`
    M1M1,
    /// `M1 M2 a`
    M1M2A,
    /// `M2² a²`
    M2M2AA,
    /// `M1 M3`
    M1M3,
    /// `M2²`
    M2M2,
    /// `M2 M3 a`
    M2M3A,
    /// `M3²`
    M3M3,
}

impl SecondMomentTerm {
    pub const ALL: [SecondMomentTerm; 7] = [
        SecondMomentTerm::M1M1,
        SecondMomentTerm::M1M2A,
        SecondMomentTerm::M2M2AA,
        SecondMomentTerm::M1M3,
        SecondMomentTerm::M2M2,
        SecondMomentTerm::M2M3A,
        SecondMomentTerm::M3M3,
    ];

    pub fn product(&self, m: &FrameCoefficients, a: f64) -> f64 {
        match self {
            SecondMomentTerm::M1M1 => m.m1 * m.m1,
            SecondMomentTerm::M1M2A => m.m1 * m.m2 * a,
            SecondMomentTerm::M2M2AA => m.m2 * m.m2 * a * a,
            SecondMomentTerm::M1M3 => m.m1 * m.m3,
            SecondMomentTerm::M2M2 => m.m2 * m.m2,
            SecondMomentTerm::M2M3A => m.m2 * m.m3 * a,
            SecondMomentTerm::M3M3 => m.m3 * m.m3,
        }
    }
}

/// The `(N, k)`-dependent polynomials of the closed forms.
///
/// Building them is the expensive part; evaluating at a new `a` is a handful
/// of compensated sums, so sweeps over `a` should reuse one instance.
#[derive(Debug, Clone)]
pub struct MomentPolynomials {
    n: u32,
    k: u32,
    norm: QPolynomial,
    sx: QPolynomial,
    sz: QPolynomial,
    second: [QPolynomial; 7],
}

/// Everything the closed forms produce at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticPoint {
    pub spin: SpinExpectation,
    pub normalization_sq: f64,
    /// `None` when the mean spin is null.
    pub frame: Option<(FrameBasis, FrameCoefficients)>,
    pub perp_variance: Option<f64>,
}

impl MomentPolynomials {
    /// # Panics
    /// If `(n, k)` is outside `2 ≤ n ≤ 300`, `1 ≤ k ≤ n-1`.
    pub fn new(n: u32, k: u32) -> Self {
        assert!((2..=crate::state::ANALYTIC_MAX_N).contains(&n) && (1..n).contains(&k));
        let nn = i64::from(n);
        let kk = i64::from(k);
        let l = nn - kk;

        let mut sx = PolyBuilder::new();
        let c = choose(nn - 1, l);
        for r in 0..=l {
            sx.add_term(r as usize, &c * choose(kk - 1, r) * choose(l, r + 1));
        }
        let c = choose(nn - 1, l - 1);
        for r in 0..l {
            let inner = choose(kk, r + 1) + 2 * choose(kk, r);
            sx.add_term(r as usize, &c * choose(l - 1, r) * inner);
        }

        let mut sz = PolyBuilder::new();
        let c = choose(nn - 1, l);
        for r in 0..=l {
            let w = &c * choose(kk - 1, r);
            sz.add_term(r as usize, &w * choose(l, r));
            sz.add_term(r as usize + 1, &w * choose(l, r + 1));
        }
        let c = choose(nn - 1, l - 1);
        for r in 0..l {
            let w = &c * choose(l - 1, r);
            sz.add_term(r as usize + 1, &w * choose(kk, r + 1));
            sz.add_term(r as usize + 1, &w * 2 * choose(kk, r));
            sz.add_term(r as usize, -(&w * choose(kk, r)));
        }

        let second = second_moment_polynomials(nn, kk);

        Self {
            n,
            k,
            norm: normalization_polynomial(n, k),
            sx: sx.build(),
            sz: sz.build(),
            second,
        }
    }

    pub fn for_config(cfg: &DickeClassConfig) -> Self {
        Self::new(cfg.n(), cfg.k())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn normalization(&self) -> &QPolynomial {
        &self.norm
    }

    /// `2 ⟨Sx⟩ 𝒩² / (N a b)`.
    pub fn sx_polynomial(&self) -> &QPolynomial {
        &self.sx
    }

    /// `2 ⟨Sz⟩ 𝒩² / N`.
    pub fn sz_polynomial(&self) -> &QPolynomial {
        &self.sz
    }

    /// Weight polynomial (scaled by 4) multiplying `term` in the second moment.
    pub fn second_moment_weight(&self, term: SecondMomentTerm) -> &QPolynomial {
        &self.second[term as usize]
    }

    pub fn mean_spin(&self, a: f64) -> SpinExpectation {
        let q = a * a;
        let b = (1.0 - q).sqrt();
        let n = f64::from(self.n);
        let norm = self.norm.eval(q);
        let sx = n * a * b * self.sx.eval(q) / (2.0 * norm);
        let sz = n * self.sz.eval(q) / (2.0 * norm);
        SpinExpectation::new(sx, 0.0, sz)
    }

    pub fn evaluate(&self, a: f64) -> AnalyticPoint {
        let q = a * a;
        let n = f64::from(self.n);
        let norm = self.norm.eval(q);
        let spin = self.mean_spin(a);
        let Ok(frame) = frame(&spin, self.n) else {
            return AnalyticPoint {
                spin,
                normalization_sq: norm,
                frame: None,
                perp_variance: None,
            };
        };
        let m = coefficients_unchecked(&spin, a);
        let bracket: CompensatedSum = SecondMomentTerm::ALL
            .iter()
            .map(|t| self.second[*t as usize].eval(q) * t.product(&m, a))
            .collect();
        let variance = n / 4.0 + n * (n - 1.0) * bracket.total() / (4.0 * norm);
        AnalyticPoint {
            spin,
            normalization_sq: norm,
            frame: Some((frame, m)),
            perp_variance: Some(variance),
        }
    }

    pub fn report(&self, a: f64) -> Result<SqueezingReport, ConfigError> {
        let cfg = DickeClassConfig::new(self.n, self.k, a)?;
        let point = self.evaluate(a);
        Ok(match point.perp_variance {
            Some(v) => SqueezingReport::from_variance(cfg, point.spin, v, FRAC_PI_2, Method::Analytic),
            None => SqueezingReport::undefined(cfg, point.spin, Method::Analytic),
        })
    }
}

fn second_moment_polynomials(n: i64, k: i64) -> [QPolynomial; 7] {
    let l = n - k;
    let two = BigInt::from(2);
    let pa = choose(n - 2, l);
    let pb = choose(n - 2, l - 1);
    let pe = choose(n - 2, l - 2);
    let mut w: [PolyBuilder; 7] = std::array::from_fn(|_| PolyBuilder::new());
    use SecondMomentTerm as T;

    for r in 0..=l {
        let p = r as usize;
        let c = &pa * choose(k - 2, r);
        w[T::M1M1 as usize].add_term(p, &c * choose(l, r));
        w[T::M1M2A as usize].add_term(p, &c * &two * choose(l, r + 1));
        w[T::M2M2AA as usize].add_term(p, &c * choose(l, r + 2));
    }
    for r in 0..l {
        let p = r as usize;
        let c = &pb * &two;
        w[T::M1M2A as usize].add_term(p, &c * choose(l - 1, r) * choose(k - 1, r + 1));
        w[T::M1M3 as usize].add_term(p, &c * choose(l - 1, r) * choose(k - 1, r));
        w[T::M2M2 as usize].add_term(p, &c * choose(k - 1, r) * choose(l - 1, r));
        w[T::M2M3A as usize].add_term(p, &c * choose(k - 1, r) * choose(l - 1, r + 1));
    }
    for r in 0..(l - 1) {
        let p = r as usize;
        let c = &pe * choose(l - 2, r);
        w[T::M2M2AA as usize].add_term(p, &c * choose(k, r + 2));
        w[T::M2M3A as usize].add_term(p, &c * &two * choose(k, r + 1));
        w[T::M3M3 as usize].add_term(p, &c * choose(k, r));
    }
    w.map(PolyBuilder::build)
}

/// Closed-form mean spin. `⟨Sy⟩` is exactly zero.
pub fn mean_spin(cfg: &DickeClassConfig) -> Result<SpinExpectation, ConfigError> {
    let cfg = cfg.validate()?;
    Ok(MomentPolynomials::for_config(&cfg).mean_spin(cfg.a()))
}

/// `n0 = (sx, 0, sz)/|s|`, `n1 = ŷ`, `n2 = (-sz, 0, sx)/|s|`.
pub fn frame(spin: &SpinExpectation, n: u32) -> Result<FrameBasis, SqueezeError> {
    if spin.is_null(n) {
        return Err(SqueezeError::UndefinedMeanSpin);
    }
    let len = spin.sx.hypot(spin.sz);
    Ok(FrameBasis {
        n0: [spin.sx / len, 0.0, spin.sz / len],
        n1: [0.0, 1.0, 0.0],
        n2: [-spin.sz / len, 0.0, spin.sx / len],
    })
}

/// `M1 = sx/|s|`, `M2 = (a sx - b sz)/|s|`, `M3 = ((2a²-1) sx - 2ab sz)/|s|`.
pub fn frame_coefficients(
    spin: &SpinExpectation,
    a: f64,
    n: u32,
) -> Result<FrameCoefficients, SqueezeError> {
    if spin.is_null(n) {
        return Err(SqueezeError::UndefinedMeanSpin);
    }
    Ok(coefficients_unchecked(spin, a))
}

fn coefficients_unchecked(spin: &SpinExpectation, a: f64) -> FrameCoefficients {
    let len = spin.sx.hypot(spin.sz);
    let b = (1.0 - a * a).sqrt();
    FrameCoefficients {
        m1: spin.sx / len,
        m2: (a * spin.sx - b * spin.sz) / len,
        m3: ((2.0 * a * a - 1.0) * spin.sx - 2.0 * a * b * spin.sz) / len,
    }
}

/// `⟨S²_n2⟩`, the minimum variance perpendicular to the mean spin.
pub fn perp_variance_min(cfg: &DickeClassConfig) -> Result<f64, SqueezeError> {
    let cfg = cfg.validate()?;
    MomentPolynomials::for_config(&cfg)
        .evaluate(cfg.a())
        .perp_variance
        .ok_or(SqueezeError::UndefinedMeanSpin)
}

/// `ξ = 2 √(⟨S²_n2⟩ / N)` with its verdict. A null mean spin yields a
/// report with verdict `undefined_mean_spin` and no `ξ`.
pub fn squeezing_parameter(cfg: &DickeClassConfig) -> Result<SqueezingReport, ConfigError> {
    let cfg = cfg.validate()?;
    MomentPolynomials::for_config(&cfg).report(cfg.a())
}

/// Source of the analytic quantities checked by [`crate::verify`].
///
/// [`ClosedForm`] is the production implementation; tests substitute
/// perturbed models to confirm the verification suites notice.
pub trait AnalyticModel: Sync {
    fn mean_spin(&self, cfg: &DickeClassConfig) -> Result<SpinExpectation, ConfigError>;

    fn perp_variance_min(&self, cfg: &DickeClassConfig) -> Result<f64, SqueezeError>;

    fn xi(&self, cfg: &DickeClassConfig) -> Result<f64, SqueezeError> {
        let v = self.perp_variance_min(cfg)?;
        Ok(crate::state::xi_from_variance(v, cfg.n()))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClosedForm;

impl AnalyticModel for ClosedForm {
    fn mean_spin(&self, cfg: &DickeClassConfig) -> Result<SpinExpectation, ConfigError> {
        mean_spin(cfg)
    }

    fn perp_variance_min(&self, cfg: &DickeClassConfig) -> Result<f64, SqueezeError> {
        perp_variance_min(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::Verdict;
    use approx::assert_abs_diff_eq;

    fn cfg(n: u32, k: u32, a: f64) -> DickeClassConfig {
        DickeClassConfig::new(n, k, a).unwrap()
    }

    #[test]
    fn two_qubit_mean_spin() {
        let s = mean_spin(&cfg(2, 1, 0.6)).unwrap();
        assert_abs_diff_eq!(s.sx, 2.0 * 0.6 * 0.8 / 1.36, epsilon = 1e-15);
        assert_abs_diff_eq!(s.sz, 2.0 * 0.36 / 1.36, epsilon = 1e-15);
        assert_eq!(s.sy, 0.0);
        assert_abs_diff_eq!(s.sx, 0.705882, epsilon = 1e-6);
        assert_abs_diff_eq!(s.sz, 0.529412, epsilon = 1e-6);
    }

    #[test]
    fn w_state_mean_spin() {
        let s = mean_spin(&cfg(3, 2, 0.0)).unwrap();
        assert_eq!((s.sx, s.sy, s.sz), (0.0, 0.0, 0.5));
    }

    #[test]
    fn zero_overlap_has_no_transverse_mean() {
        for n in 2..=20 {
            for k in 1..n {
                assert_eq!(mean_spin(&cfg(n, k, 0.0)).unwrap().sx, 0.0);
            }
        }
    }

    #[test]
    fn frame_axis_aligned_and_tilted() {
        let f = frame(&SpinExpectation::new(0.0, 0.0, 0.5), 3).unwrap();
        assert_eq!(f.n0, [0.0, 0.0, 1.0]);
        assert_eq!(f.n1, [0.0, 1.0, 0.0]);
        assert_eq!(f.n2, [-1.0, 0.0, 0.0]);

        let s = mean_spin(&cfg(2, 1, 0.6)).unwrap();
        assert_abs_diff_eq!(s.norm(), 0.882353, epsilon = 1e-6);
        let f = frame(&s, 2).unwrap();
        for (got, want) in f.n0.iter().zip([0.8, 0.0, 0.6]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        for (got, want) in f.n2.iter().zip([-0.6, 0.0, 0.8]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn null_mean_spin_has_no_frame() {
        let s = mean_spin(&cfg(2, 1, 0.0)).unwrap();
        assert_eq!(frame(&s, 2), Err(SqueezeError::UndefinedMeanSpin));
        assert_eq!(
            frame_coefficients(&s, 0.0, 2),
            Err(SqueezeError::UndefinedMeanSpin)
        );
    }

    #[test]
    fn frame_coefficient_values() {
        let m = frame_coefficients(&SpinExpectation::new(0.0, 0.0, 0.5), 0.0, 3).unwrap();
        assert_eq!((m.m1, m.m2, m.m3), (0.0, -1.0, 0.0));

        let s = mean_spin(&cfg(2, 1, 0.6)).unwrap();
        let m = frame_coefficients(&s, 0.6, 2).unwrap();
        assert_abs_diff_eq!(m.m1, 0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(m.m2, 0.0, epsilon = 1e-12);
        // n2 · (2ab, 0, 2a²-1) with n2 = (-0.6, 0, 0.8)
        assert_abs_diff_eq!(m.m3, -0.6 * 0.96 + 0.8 * -0.28, epsilon = 1e-12);
        assert_abs_diff_eq!(m.m3, -0.8, epsilon = 1e-12);
    }

    #[test]
    fn w_state_variance_matches_dicke_identity() {
        // (s(s+1) - m²)/2 with s = 3/2, m = 1/2
        let v = perp_variance_min(&cfg(3, 2, 0.0)).unwrap();
        assert_abs_diff_eq!(v, (1.5 * 2.5 - 0.25) / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v, 1.75, epsilon = 1e-14);
    }

    #[test]
    fn two_qubit_variance() {
        // s = 1, state ∝ (2a, √2 b, 0) in |1,1⟩, |1,0⟩, |1,-1⟩ at a = 0.6:
        // ⟨(S·n2)²⟩ evaluated by hand = 0.2647058823529...
        let v = perp_variance_min(&cfg(2, 1, 0.6)).unwrap();
        assert_abs_diff_eq!(v, 0.264706, epsilon = 1e-6);
        assert_abs_diff_eq!(v, 4.5 / 17.0, epsilon = 1e-14);
    }

    #[test]
    fn reports() {
        let r = squeezing_parameter(&cfg(3, 2, 0.0)).unwrap();
        assert_abs_diff_eq!(r.xi.unwrap(), 2.0 * (7.0f64 / 12.0).sqrt(), epsilon = 1e-12);
        assert_eq!(r.verdict, Verdict::NotSqueezed);
        assert_eq!(r.method, Method::Analytic);

        let r = squeezing_parameter(&cfg(2, 1, 0.6)).unwrap();
        assert_abs_diff_eq!(r.xi.unwrap(), 0.7276, epsilon = 1e-4);
        assert_eq!(r.verdict, Verdict::Squeezed);

        let r = squeezing_parameter(&cfg(6, 3, 0.0)).unwrap();
        assert_eq!(r.verdict, Verdict::UndefinedMeanSpin);
        assert!(r.xi.is_none() && r.perp_variance_min.is_none());
        assert_eq!(
            perp_variance_min(&cfg(6, 3, 0.0)),
            Err(SqueezeError::UndefinedMeanSpin)
        );
    }

    #[test]
    fn invalid_config_is_rejected() {
        let bad = DickeClassConfig::with_product_edges(5, 5, 0.3).unwrap();
        assert!(squeezing_parameter(&bad).is_err());
        assert!(mean_spin(&bad).is_err());
    }

    #[test]
    fn mean_spin_bounded_and_approaches_full_length() {
        for n in [2u32, 7, 30, 105] {
            for k in [1, n / 2, n - 1] {
                let k = k.max(1);
                for a in [0.05, 0.3, 0.7, 0.95] {
                    let s = mean_spin(&cfg(n, k, a)).unwrap();
                    assert!(s.norm() > 0.0 && s.norm() <= f64::from(n) / 2.0 + 1e-9);
                }
                let s = mean_spin(&cfg(n, k, 0.999_999)).unwrap();
                assert!((s.norm() - f64::from(n) / 2.0).abs() < 1e-3 * f64::from(n));
            }
        }
    }

    #[test]
    fn large_n_is_finite() {
        let p = MomentPolynomials::new(300, 150);
        for a in [0.0, 0.1, 0.5, 0.9, 0.995] {
            let pt = p.evaluate(a);
            assert!(pt.normalization_sq.is_finite());
            if a > 0.0 {
                assert!(pt.perp_variance.unwrap().is_finite());
            }
        }
    }
}
