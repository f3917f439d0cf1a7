//! Exact rational evaluation of the closed forms for rational `a²`.
//!
//! `⟨Sx⟩` carries the irrational factor `a√(1-a²)`, so it is returned in the
//! reduced form `⟨Sx⟩ / (a b)`. Every quadratic product of the frame
//! coefficients turns out rational once multiplied by `|⟨S⟩|²`, which makes
//! `⟨Sz⟩` and `⟨S²_n2⟩` exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::analytic::{MomentPolynomials, SecondMomentTerm};
use crate::error::{ConfigError, SqueezeError};

#[derive(Debug, Clone, PartialEq)]
pub struct ExactMoments {
    pub a_sq: BigRational,
    pub normalization_sq: BigRational,
    /// `⟨Sx⟩ / (a √(1-a²))`
    pub sx_reduced: BigRational,
    pub sz: BigRational,
    /// `|⟨S⟩|²`
    pub spin_norm_sq: BigRational,
    /// `None` when the mean spin vanishes.
    pub perp_variance: Option<BigRational>,
}

impl ExactMoments {
    /// `⟨Sx⟩` rounded to `f64`.
    pub fn sx(&self) -> f64 {
        let q = to_f64(&self.a_sq);
        (q * (1.0 - q)).sqrt() * to_f64(&self.sx_reduced)
    }

    pub fn sz(&self) -> f64 {
        to_f64(&self.sz)
    }

    pub fn perp_variance(&self) -> Option<f64> {
        self.perp_variance.as_ref().map(to_f64)
    }
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// Evaluates the closed forms exactly at `a² = a_sq`.
pub fn exact_moments(n: u32, k: u32, a_sq: &BigRational) -> Result<ExactMoments, SqueezeError> {
    if a_sq.is_negative() || *a_sq >= BigRational::one() {
        return Err(ConfigError::Overlap {
            a: to_f64(a_sq).max(0.0).sqrt(),
        }
        .into());
    }
    // reuse validation for N and k; a is only a placeholder here
    crate::state::DickeClassConfig::new(n, k, 0.0)?;
    let poly = MomentPolynomials::new(n, k);
    Ok(evaluate(&poly, a_sq))
}

pub(crate) fn evaluate(poly: &MomentPolynomials, q: &BigRational) -> ExactMoments {
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let nf = BigRational::from_integer(BigInt::from(poly.n()));
    let norm = poly.normalization().eval_exact(q);
    let x = &nf * poly.sx_polynomial().eval_exact(q) / (&two * &norm);
    let z = &nf * poly.sz_polynomial().eval_exact(q) / (&two * &norm);

    let p = q * (&one - q); // a²b²
    let spin_norm_sq = &p * &x * &x + &z * &z;

    let perp_variance = if spin_norm_sq.is_zero() {
        None
    } else {
        // each product times |⟨S⟩|²:
        // M1 |S| = ab X, M2 |S| = b (qX - Z), M3 |S| = ab ((2q-1) X - 2Z)
        let u = q * &x - &z;
        let w = (&two * q - &one) * &x - &two * &z;
        let products = |t: SecondMomentTerm| -> BigRational {
            match t {
                SecondMomentTerm::M1M1 => &p * &x * &x,
                SecondMomentTerm::M1M2A => &p * &x * &u,
                SecondMomentTerm::M2M2AA => (&one - q) * q * &u * &u,
                SecondMomentTerm::M1M3 => &p * &x * &w,
                SecondMomentTerm::M2M2 => (&one - q) * &u * &u,
                SecondMomentTerm::M2M3A => &p * &u * &w,
                SecondMomentTerm::M3M3 => &p * &w * &w,
            }
        };
        let bracket = SecondMomentTerm::ALL
            .iter()
            .fold(BigRational::zero(), |acc, t| {
                acc + poly.second_moment_weight(*t).eval_exact(q) * products(*t)
            })
            / &spin_norm_sq;
        let four = BigRational::from_integer(BigInt::from(4));
        let pairs = BigRational::from_integer(BigInt::from(poly.n()) * BigInt::from(poly.n() - 1));
        Some(&nf / &four + pairs * bracket / (four * &norm))
    };

    ExactMoments {
        a_sq: q.clone(),
        normalization_sq: norm,
        sx_reduced: x,
        sz: z,
        spin_norm_sq,
        perp_variance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn w_state_is_exact() {
        let m = exact_moments(3, 2, &ratio(0, 1)).unwrap();
        assert_eq!(m.sz, ratio(1, 2));
        assert_eq!(m.sx_reduced, ratio(3, 1));
        assert_eq!(m.perp_variance, Some(ratio(7, 4)));
    }

    #[test]
    fn two_qubit_values_are_exact() {
        // a = 0.6: ⟨Sz⟩ = 2a²/(1+a²) = 9/17, ⟨S²_n2⟩ = 9/34
        let m = exact_moments(2, 1, &ratio(9, 25)).unwrap();
        assert_eq!(m.sz, ratio(9, 17));
        assert_eq!(m.perp_variance, Some(ratio(9, 34)));
        assert!((m.sx() - 0.705882352941).abs() < 1e-12);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(exact_moments(3, 2, &ratio(1, 1)).is_err());
        assert!(exact_moments(3, 2, &ratio(-1, 4)).is_err());
        assert!(exact_moments(3, 3, &ratio(1, 4)).is_err());
    }

    #[test]
    fn null_mean_spin_has_no_variance() {
        let m = exact_moments(6, 3, &ratio(0, 1)).unwrap();
        assert!(m.spin_norm_sq.is_zero());
        assert_eq!(m.perp_variance, None);
    }

    #[test]
    fn exchange_symmetry_holds_exactly() {
        for n in 2..=9u32 {
            for k in 1..n {
                let q = ratio(1, 3);
                let lhs = exact_moments(n, k, &q).unwrap().perp_variance;
                let rhs = exact_moments(n, n - k, &q).unwrap().perp_variance;
                assert_eq!(lhs, rhs, "N={n} k={k}");
            }
        }
    }
}
