//! Plain-Rust versions of the exported operations, testable off the browser.

use std::f64::consts::PI;

use dicke_squeeze::oracle::{self, squeezing_parameter_oracle};
use dicke_squeeze::{DickeClassConfig, MomentPolynomials, SqueezingReport};

/// Largest `N` offered by the page; the curves stay interactive up to here.
pub const MAX_N: u32 = 120;
pub const MAX_CURVE_POINTS: usize = 2000;
pub const MAX_PROFILE_POINTS: usize = 3600;

fn check_n(n: u32) -> Result<(), String> {
    if (2..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(format!("N must be between 2 and {MAX_N}"))
    }
}

fn config(n: u32, k: u32, a: f64) -> Result<DickeClassConfig, String> {
    check_n(n)?;
    DickeClassConfig::new(n, k, a).map_err(|e| e.to_string())
}

/// `steps` values of `a` from `a_start` to `a_end` inclusive.
pub fn a_grid(a_start: f64, a_end: f64, steps: usize) -> Result<Vec<f64>, String> {
    if !(a_start >= 0.0 && a_start < a_end && a_end < 1.0) {
        return Err("need 0 <= start < end < 1".into());
    }
    if !(2..=MAX_CURVE_POINTS).contains(&steps) {
        return Err(format!("steps must be between 2 and {MAX_CURVE_POINTS}"));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| a_start + (a_end - a_start) * (i as f64 / last))
        .collect())
}

/// `ξ` for every `k` and grid point, one block of `steps` values per `k`.
/// Undefined points are NaN.
pub fn xi_curves(n: u32, ks: &[u32], a_start: f64, a_end: f64, steps: usize) -> Result<Vec<f64>, String> {
    check_n(n)?;
    let grid = a_grid(a_start, a_end, steps)?;
    let mut out = Vec::with_capacity(ks.len() * steps);
    for &k in ks {
        config(n, k, a_start)?;
        let poly = MomentPolynomials::new(n, k);
        out.extend(grid.iter().map(|&a| {
            poly.report(a)
                .ok()
                .and_then(|r| r.xi)
                .unwrap_or(f64::NAN)
        }));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointSummary {
    pub analytic: SqueezingReport,
    pub oracle: SqueezingReport,
    pub populations: Vec<f64>,
}

pub fn evaluate_point(n: u32, k: u32, a: f64) -> Result<PointSummary, String> {
    let cfg = config(n, k, a)?;
    let analytic = MomentPolynomials::for_config(&cfg)
        .report(a)
        .map_err(|e| e.to_string())?;
    let state = oracle::dicke_coefficients(&cfg);
    let norm_sq = state.norm().powi(2);
    Ok(PointSummary {
        analytic,
        oracle: squeezing_parameter_oracle(&cfg),
        populations: state.populations().iter().map(|p| p / norm_sq).collect(),
    })
}

/// Variance of `cos φ S_n1 + sin φ S_n2` on `φ = jπ/steps`, `j = 0..steps`.
/// Empty when the mean spin vanishes.
pub fn perp_variance_profile(n: u32, k: u32, a: f64, steps: usize) -> Result<Vec<f64>, String> {
    let cfg = config(n, k, a)?;
    if !(2..=MAX_PROFILE_POINTS).contains(&steps) {
        return Err(format!("steps must be between 2 and {MAX_PROFILE_POINTS}"));
    }
    let state = oracle::dicke_coefficients(&cfg);
    let Ok(frame) = oracle::frame_for(&oracle::mean_spin(&state), n) else {
        return Ok(Vec::new());
    };
    let t = oracle::t_matrix(&state, &frame);
    Ok((0..=steps)
        .map(|j| t.quadratic_form(PI * j as f64 / steps as f64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = a_grid(0.0, 0.9, 10).unwrap();
        assert_eq!((g[0], g[9], g.len()), (0.0, 0.9, 10));
        assert!(a_grid(0.5, 0.5, 10).is_err());
        assert!(a_grid(0.0, 1.0, 10).is_err());
        assert!(a_grid(0.0, 0.9, 1).is_err());
    }
}
