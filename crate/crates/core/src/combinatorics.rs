//! Exact binomials, compensated summation and integer polynomials in `a²`.
//!
//! Every sum in the closed forms is a polynomial in `q = a²` whose
//! coefficients are products of binomials. Those coefficients are built
//! exactly as big integers and only converted to `f64` term by term, so all
//! floating-point rounding is confined to the final compensated summation.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::BinomialRangeError;
use crate::state::DickeClassConfig;

/// Largest row index accepted by [`binomial`].
pub const MAX_BINOMIAL_N: u64 = 1000;

/// `C(n, k)`, exact. Zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Result<BigUint, BinomialRangeError> {
    if n > MAX_BINOMIAL_N {
        return Err(BinomialRangeError {
            n,
            max: MAX_BINOMIAL_N,
        });
    }
    if k < 0 || k as u64 > n {
        return Ok(BigUint::zero());
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // acc = C(n - k + i + 1, i + 1) after each step, so the division is exact.
    for i in 0..k {
        acc *= n - k + i + 1;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Signed-argument binomial used inside the closed forms.
///
/// Also zero for `n < 0`, which lets sums with `C(k - 2, r)` run at `k = 1`
/// without special cases (their prefactor vanishes there anyway).
pub(crate) fn choose(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(n as u64, k).expect("closed-form binomial rows stay below 1000"))
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for term in iter {
            self.add(term);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

/// Polynomial in `q = a²` with exact integer coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
    coeffs_f64: Vec<f64>,
}

impl QPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let coeffs_f64 = coeffs
            .iter()
            .map(|c| c.to_f64().expect("coefficient fits in f64"))
            .collect();
        Self { coeffs, coeffs_f64 }
    }

    pub fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Evaluates at `q` with iteratively built powers and compensated summation.
    pub fn eval(&self, q: f64) -> f64 {
        let mut power = 1.0;
        let mut sum = CompensatedSum::new();
        for &c in &self.coeffs_f64 {
            sum.add(c * power);
            power *= q;
        }
        sum.total()
    }

    pub fn eval_exact(&self, q: &BigRational) -> BigRational {
        // Horner is fine here: rational arithmetic is exact.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }
}

/// Accumulates `Σ_r weight(r) · q^(r + shift)` into dense coefficients.
#[derive(Debug, Default)]
pub(crate) struct PolyBuilder {
    coeffs: Vec<BigInt>,
}

impl PolyBuilder {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add_term(&mut self, power: usize, value: BigInt) {
        if value.is_zero() {
            return;
        }
        if self.coeffs.len() <= power {
            self.coeffs.resize(power + 1, BigInt::zero());
        }
        self.coeffs[power] += value;
    }

    pub(crate) fn build(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs)
    }
}

/// `𝒩² = C(N,k) Σ_r C(k,r) C(N-k,r) a^{2r}` as a polynomial in `a²`.
pub(crate) fn normalization_polynomial(n: u32, k: u32) -> QPolynomial {
    let (n, k) = (i64::from(n), i64::from(k));
    let prefactor = choose(n, k);
    let mut poly = PolyBuilder::new();
    for r in 0..=(n - k) {
        poly.add_term(r as usize, &prefactor * choose(k, r) * choose(n - k, r));
    }
    poly.build()
}

/// Squared normalization constant of the subset-sum state.
///
/// Equals `C(N, k)` exactly at `a = 0`.
pub fn normalization_sq(cfg: &DickeClassConfig) -> f64 {
    normalization_polynomial(cfg.n(), cfg.k()).eval(cfg.a() * cfg.a())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn pascal_row(n: usize) -> Vec<BigUint> {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn small_and_out_of_range_cases() {
        assert_eq!(binomial(5, 2).unwrap(), BigUint::from(10u32));
        assert_eq!(binomial(3, 5).unwrap(), BigUint::zero());
        assert_eq!(binomial(3, -1).unwrap(), BigUint::zero());
        assert_eq!(binomial(0, 0).unwrap(), BigUint::one());
        assert!(binomial(1001, 3).is_err());
        assert!(binomial(1000, 500).is_ok());
    }

    #[test]
    fn c_105_52_matches_pascal_rows() {
        let row = pascal_row(105);
        let expected = &row[52];
        assert_eq!(expected.to_string().len(), 31);
        assert_eq!(&binomial(105, 52).unwrap(), expected);
        for (k, value) in row.iter().enumerate() {
            assert_eq!(&binomial(105, k as i64).unwrap(), value);
        }
    }

    #[test]
    fn pascal_identity_exhaustive_to_60() {
        for n in 1..=60u64 {
            for k in 0..=(n as i64) {
                let lhs = binomial(n, k).unwrap();
                let rhs = binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn symmetry_across_full_range() {
        for n in (0..=1000u64).step_by(37) {
            for k in (0..=n).step_by(11) {
                assert_eq!(
                    binomial(n, k as i64).unwrap(),
                    binomial(n, (n - k) as i64).unwrap()
                );
            }
        }
    }

    #[test]
    fn normalization_small_cases() {
        let cfg = DickeClassConfig::new(2, 1, 0.0).unwrap();
        assert_eq!(normalization_sq(&cfg), 2.0);
        let cfg = DickeClassConfig::new(2, 1, 0.5).unwrap();
        assert!((normalization_sq(&cfg) - 2.5).abs() < 1e-15);
        for a in [0.0, 0.2, 0.7, 0.95] {
            let cfg = DickeClassConfig::new(3, 2, a).unwrap();
            let expected = 3.0 * (1.0 + 2.0 * a * a);
            assert!((normalization_sq(&cfg) - expected).abs() <= 1e-14 * expected);
        }
    }

    #[test]
    fn normalization_at_zero_is_the_binomial() {
        for n in 2..=120u32 {
            for k in 1..n {
                let cfg = DickeClassConfig::new(n, k, 0.0).unwrap();
                let exact = binomial(n.into(), k.into()).unwrap().to_f64().unwrap();
                assert_eq!(normalization_sq(&cfg), exact);
            }
        }
    }

    #[test]
    fn compensated_sum_recovers_cancelled_terms() {
        let terms = [1e16, 1.0, -1e16, 1.0];
        let s: CompensatedSum = terms.into_iter().collect();
        assert_eq!(s.total(), 2.0);
    }

    fn exact_sum(terms: &[f64]) -> f64 {
        terms
            .iter()
            .map(|&t| BigRational::from_float(t).unwrap())
            .fold(BigRational::zero(), |acc, t| acc + t)
            .to_f64()
            .unwrap()
    }

    fn ulp(x: f64) -> f64 {
        let x = x.abs();
        if x == 0.0 {
            f64::from_bits(1)
        } else {
            f64::from_bits(x.to_bits() + 1) - x
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn compensated_sum_within_four_ulps(
            terms in prop::collection::vec(-1.0e3f64..1.0e3, 1..10_000)
        ) {
            let exact = exact_sum(&terms);
            let got: CompensatedSum = terms.iter().copied().collect();
            prop_assert!((got.total() - exact).abs() <= 4.0 * ulp(exact),
                "got {} exact {}", got.total(), exact);
        }

        #[test]
        fn normalization_increases_with_a(n in 2u32..60, k_frac in 0.0f64..1.0, a in 0.0f64..0.98) {
            let k = 1 + ((n - 2) as f64 * k_frac).round() as u32;
            let lo = DickeClassConfig::new(n, k, a).unwrap();
            let hi = DickeClassConfig::new(n, k, a + 0.01).unwrap();
            prop_assert!(normalization_sq(&hi) > normalization_sq(&lo));
        }

        #[test]
        fn normalization_matches_rational_evaluation(
            n in 2u32..200, k_frac in 0.0f64..1.0, num in 0u32..1024
        ) {
            let k = 1 + ((n - 2) as f64 * k_frac).round() as u32;
            // dyadic a, so a² is exact in binary floating point
            let a = f64::from(num) / 1024.0;
            let q = BigRational::new((num * num).into(), (1024u32 * 1024).into());
            let poly = normalization_polynomial(n, k);
            let exact = poly.eval_exact(&q).to_f64().unwrap();
            prop_assert!(((poly.eval(a * a) - exact) / exact).abs() <= 1e-14);
            let cfg = DickeClassConfig::new(n, k, a).unwrap();
            prop_assert!(((normalization_sq(&cfg) - exact) / exact).abs() <= 1e-14);
        }
    }
}
