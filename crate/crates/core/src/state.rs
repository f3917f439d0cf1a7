//! Validated configurations and the geometric quantities derived from them.

use std::fmt;

use crate::error::ConfigError;

/// Largest qubit count accepted by the closed forms and the Dicke-basis oracle.
pub const ANALYTIC_MAX_N: u32 = 300;
/// Largest qubit count for the full `2^N` state construction.
pub const FULL_HILBERT_MAX_N: u32 = 12;

/// `(N, k, a)`: `k` copies of `|0⟩` and `N - k` copies of `(a, √(1-a²))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DickeClassConfig {
    n: u32,
    k: u32,
    a: f64,
}

impl DickeClassConfig {
    /// Builds a configuration inside the closed-form domain
    /// `2 ≤ N ≤ 300`, `1 ≤ k ≤ N-1`, `0 ≤ a < 1`.
    pub fn new(n: u32, k: u32, a: f64) -> Result<Self, ConfigError> {
        Self { n, k, a }.validate()
    }

    /// Like [`new`](Self::new) but also admits the product-state edges
    /// `k = 0` and `k = N`. Only the oracle accepts these.
    pub fn with_product_edges(n: u32, k: u32, a: f64) -> Result<Self, ConfigError> {
        check_n(n, 1)?;
        if k > n {
            return Err(ConfigError::Multiplicity { n, k, min: 0, max: n });
        }
        check_a(a)?;
        Ok(Self { n, k, a })
    }

    /// Returns the configuration unchanged iff it lies in the closed-form domain.
    pub fn validate(self) -> Result<Self, ConfigError> {
        check_n(self.n, 2)?;
        if self.k < 1 || self.k > self.n - 1 {
            return Err(ConfigError::Multiplicity {
                n: self.n,
                k: self.k,
                min: 1,
                max: self.n - 1,
            });
        }
        check_a(self.a)?;
        Ok(self)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `√(1 - a²)`, the `|1⟩` component of the second spinor.
    pub fn b(&self) -> f64 {
        (1.0 - self.a * self.a).sqrt()
    }

    /// Total spin `s = N/2`.
    pub fn spin(&self) -> f64 {
        f64::from(self.n) / 2.0
    }

    /// The same state with the roles of the two spinors' multiplicities swapped.
    pub fn exchanged(&self) -> Self {
        Self {
            k: self.n - self.k,
            ..*self
        }
    }
}

fn check_n(n: u32, min: u32) -> Result<(), ConfigError> {
    if n < min || n > ANALYTIC_MAX_N {
        return Err(ConfigError::QubitCount {
            n,
            min,
            max: ANALYTIC_MAX_N,
        });
    }
    Ok(())
}

fn check_a(a: f64) -> Result<(), ConfigError> {
    // the negated comparison also rejects NaN
    if !(0.0..1.0).contains(&a) {
        return Err(ConfigError::Overlap { a });
    }
    Ok(())
}

/// `(⟨Sx⟩, ⟨Sy⟩, ⟨Sz⟩)` in units of ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinExpectation {
    pub sx: f64,
    pub sy: f64,
    pub sz: f64,
}

impl SpinExpectation {
    pub fn new(sx: f64, sy: f64, sz: f64) -> Self {
        Self { sx, sy, sz }
    }

    pub fn norm(&self) -> f64 {
        self.sx.hypot(self.sy).hypot(self.sz)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.sx, self.sy, self.sz]
    }

    /// Whether the mean spin is too short to define a direction,
    /// using the cutoff `1e-9 · N/2`.
    pub fn is_null(&self, n: u32) -> bool {
        self.norm() < NULL_SPIN_RELATIVE_CUTOFF * f64::from(n) / 2.0
    }
}

pub const NULL_SPIN_RELATIVE_CUTOFF: f64 = 1e-9;

/// Mean-spin direction `n0` and the perpendicular pair `n1`, `n2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBasis {
    pub n0: [f64; 3],
    pub n1: [f64; 3],
    pub n2: [f64; 3],
}

impl FrameBasis {
    /// Unit vector `n1 cos φ + n2 sin φ` in the perpendicular plane.
    pub fn perpendicular(&self, phi: f64) -> [f64; 3] {
        let (s, c) = phi.sin_cos();
        std::array::from_fn(|i| self.n1[i] * c + self.n2[i] * s)
    }
}

/// Direction cosines that weight the second-moment sums.
///
/// `m1 = n2·ẑ`, `m2 = ⟨u2|σ·n2|0⟩`, `m3 = ⟨u2|σ·n2|u2⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameCoefficients {
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Squeezed,
    NotSqueezed,
    UndefinedMeanSpin,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Squeezed => "squeezed",
            Verdict::NotSqueezed => "not_squeezed",
            Verdict::UndefinedMeanSpin => "undefined_mean_spin",
        }
    }

    pub fn from_xi(xi: f64) -> Self {
        if xi < 1.0 {
            Verdict::Squeezed
        } else {
            Verdict::NotSqueezed
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Analytic,
    OracleEig,
    OracleScan,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::OracleEig => "oracle_eig",
            Method::OracleScan => "oracle_scan",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a squeezing evaluation.
///
/// When the mean spin is null only `spin`, `verdict` and `method` carry
/// information; the variance, `ξ` and the angle are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezingReport {
    pub config: DickeClassConfig,
    pub spin: SpinExpectation,
    pub perp_variance_min: Option<f64>,
    pub xi: Option<f64>,
    /// Minimizing angle in `[0, π)` measured from `n1` towards `n2`.
    pub phi_opt: Option<f64>,
    pub verdict: Verdict,
    pub method: Method,
}

impl SqueezingReport {
    pub(crate) fn from_variance(
        config: DickeClassConfig,
        spin: SpinExpectation,
        variance: f64,
        phi_opt: f64,
        method: Method,
    ) -> Self {
        let xi = xi_from_variance(variance, config.n());
        Self {
            config,
            spin,
            perp_variance_min: Some(variance),
            xi: Some(xi),
            phi_opt: Some(phi_opt),
            verdict: Verdict::from_xi(xi),
            method,
        }
    }

    pub(crate) fn undefined(config: DickeClassConfig, spin: SpinExpectation, method: Method) -> Self {
        Self {
            config,
            spin,
            perp_variance_min: None,
            xi: None,
            phi_opt: None,
            verdict: Verdict::UndefinedMeanSpin,
            method,
        }
    }
}

/// `ξ = 2 √(variance / N)`.
pub fn xi_from_variance(variance: f64, n: u32) -> f64 {
    2.0 * (variance.max(0.0) / f64::from(n)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn accepts_in_range() {
        let cfg = DickeClassConfig::new(8, 4, 0.3).unwrap();
        assert_eq!((cfg.n(), cfg.k(), cfg.a()), (8, 4, 0.3));
    }

    #[test]
    fn rejects_product_edges_and_bad_overlap() {
        assert!(matches!(
            DickeClassConfig::new(5, 5, 0.3),
            Err(ConfigError::Multiplicity { k: 5, .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(5, 0, 0.3),
            Err(ConfigError::Multiplicity { k: 0, .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(4, 2, 1.0),
            Err(ConfigError::Overlap { .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(4, 2, -0.1),
            Err(ConfigError::Overlap { .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(4, 2, f64::NAN),
            Err(ConfigError::Overlap { .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(1, 0, 0.5),
            Err(ConfigError::QubitCount { .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(301, 3, 0.5),
            Err(ConfigError::QubitCount { .. })
        ));
    }

    #[test]
    fn first_failing_check_wins() {
        // N, k and a all invalid: reported as a qubit-count error
        assert!(matches!(
            DickeClassConfig::new(0, 7, 2.0),
            Err(ConfigError::QubitCount { .. })
        ));
        assert!(matches!(
            DickeClassConfig::new(4, 7, 2.0),
            Err(ConfigError::Multiplicity { .. })
        ));
    }

    #[test]
    fn product_edges_only_through_the_oracle_constructor() {
        let edge = DickeClassConfig::with_product_edges(6, 6, 0.2).unwrap();
        assert!(edge.validate().is_err());
        assert!(DickeClassConfig::with_product_edges(6, 0, 0.2).is_ok());
        assert!(DickeClassConfig::with_product_edges(6, 7, 0.2).is_err());
    }

    #[test]
    fn verdict_threshold() {
        assert_eq!(Verdict::from_xi(0.999), Verdict::Squeezed);
        assert_eq!(Verdict::from_xi(1.0), Verdict::NotSqueezed);
    }

    proptest! {
        #[test]
        fn validation_is_idempotent(n in 0u32..320, k in 0u32..320, a in -0.5f64..1.5) {
            match DickeClassConfig::new(n, k, a) {
                Ok(cfg) => prop_assert_eq!(cfg.validate(), Ok(cfg)),
                Err(e) => {
                    let again = DickeClassConfig { n, k, a }.validate();
                    prop_assert_eq!(again, Err(e));
                }
            }
        }
    }
}
