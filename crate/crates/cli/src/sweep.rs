//! Grids over `a` for one `N` and several `k`.

use std::fmt;
use std::str::FromStr;

use dicke_squeeze::oracle::{squeezing_parameter_oracle, squeezing_parameter_scan, DEFAULT_SCAN_STEPS};
use dicke_squeeze::state::ANALYTIC_MAX_N;
use dicke_squeeze::{DickeClassConfig, MomentPolynomials};
use rayon::prelude::*;

use crate::csv::CsvRow;
use crate::error::CliError;

pub const DEFAULT_A_START: f64 = 0.0;
pub const DEFAULT_A_END: f64 = 0.995;
pub const DEFAULT_A_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Analytic,
    /// Dicke-basis state, smallest eigenvalue of the perpendicular form.
    Oracle,
    /// Dicke-basis state, angle scan of the perpendicular variance.
    Scan,
    /// Analytic and oracle rows side by side.
    Both,
}

impl MethodChoice {
    pub fn as_str(&self) -> &'static str {
        match self {
            MethodChoice::Analytic => "analytic",
            MethodChoice::Oracle => "oracle",
            MethodChoice::Scan => "scan",
            MethodChoice::Both => "both",
        }
    }
}

impl fmt::Display for MethodChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Self as clap::ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n: u32,
    pub k_list: Vec<u32>,
    pub a_start: f64,
    pub a_end: f64,
    pub a_steps: usize,
    pub method: MethodChoice,
    pub scan_steps: usize,
}

impl SweepSpec {
    pub fn new(n: u32, k_list: Vec<u32>) -> Self {
        Self {
            n,
            k_list,
            a_start: DEFAULT_A_START,
            a_end: DEFAULT_A_END,
            a_steps: DEFAULT_A_STEPS,
            method: MethodChoice::Analytic,
            scan_steps: DEFAULT_SCAN_STEPS,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let invalid = |msg: String| Err(CliError::Validation(msg));
        if self.n < 2 || self.n > ANALYTIC_MAX_N {
            return invalid(format!("N = {} is outside 2..={ANALYTIC_MAX_N}", self.n));
        }
        if self.k_list.is_empty() {
            return invalid("k list is empty".into());
        }
        if let Some(k) = self.k_list.iter().find(|&&k| k < 1 || k >= self.n) {
            return invalid(format!("k = {k} is outside 1..={} for N = {}", self.n - 1, self.n));
        }
        if !(self.a_start >= 0.0 && self.a_start < self.a_end && self.a_end < 1.0) {
            return invalid(format!(
                "need 0 <= a-start < a-end < 1, got a-start = {}, a-end = {}",
                self.a_start, self.a_end
            ));
        }
        if self.a_steps == 0 {
            return invalid("a-steps must be positive".into());
        }
        Ok(())
    }

    /// `a_steps` points from `a_start` to `a_end` inclusive.
    pub fn a_grid(&self) -> Vec<f64> {
        if self.a_steps == 1 {
            return vec![self.a_start];
        }
        let last = self.a_steps - 1;
        (0..self.a_steps)
            .map(|i| {
                if i == last {
                    self.a_end
                } else {
                    self.a_start + (self.a_end - self.a_start) * (i as f64 / last as f64)
                }
            })
            .collect()
    }

    pub fn row_count(&self) -> usize {
        let per_point = if self.method == MethodChoice::Both { 2 } else { 1 };
        self.k_list.len() * self.a_steps * per_point
    }
}

/// Evaluates every `(k, a)` point. Rows come out grouped by `k` in list
/// order, `a` ascending within a group; with [`MethodChoice::Both`] each
/// analytic row is followed by its oracle twin. Work is spread over threads
/// but the order never depends on scheduling.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<CsvRow>, CliError> {
    spec.validate()?;
    let grid = spec.a_grid();
    let polys: Vec<Option<MomentPolynomials>> = spec
        .k_list
        .par_iter()
        .map(|&k| {
            matches!(spec.method, MethodChoice::Analytic | MethodChoice::Both)
                .then(|| MomentPolynomials::new(spec.n, k))
        })
        .collect();

    let points: Vec<(usize, f64)> = (0..spec.k_list.len())
        .flat_map(|i| grid.iter().map(move |&a| (i, a)))
        .collect();
    let rows: Result<Vec<Vec<CsvRow>>, CliError> = points
        .par_iter()
        .map(|&(i, a)| {
            let cfg = DickeClassConfig::new(spec.n, spec.k_list[i], a)?;
            let mut out = Vec::with_capacity(2);
            if let Some(poly) = &polys[i] {
                out.push(CsvRow::from(&poly.report(a)?));
            }
            match spec.method {
                MethodChoice::Oracle | MethodChoice::Both => {
                    out.push(CsvRow::from(&squeezing_parameter_oracle(&cfg)));
                }
                MethodChoice::Scan => {
                    out.push(CsvRow::from(&squeezing_parameter_scan(&cfg, spec.scan_steps)?));
                }
                MethodChoice::Analytic => {}
            }
            Ok(out)
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use dicke_squeeze::Verdict;

    #[test]
    fn default_grid_spans_the_documented_interval() {
        let grid = SweepSpec::new(8, vec![1]).a_grid();
        assert_eq!(grid.len(), 200);
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[199], 0.995);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_bad_specs() {
        let ok = SweepSpec::new(8, vec![1, 4]);
        assert!(ok.validate().is_ok());
        for bad in [
            SweepSpec { k_list: vec![0], ..ok.clone() },
            SweepSpec { k_list: vec![8], ..ok.clone() },
            SweepSpec { k_list: vec![], ..ok.clone() },
            SweepSpec { a_start: 0.5, a_end: 0.5, ..ok.clone() },
            SweepSpec { a_end: 1.0, ..ok.clone() },
            SweepSpec { a_start: -0.1, ..ok.clone() },
            SweepSpec { a_steps: 0, ..ok.clone() },
            SweepSpec { n: 1, k_list: vec![1], ..ok.clone() },
        ] {
            assert!(matches!(bad.validate(), Err(CliError::Validation(_))), "{bad:?}");
        }
    }

    #[test]
    fn rows_are_ordered_and_paired() {
        let spec = SweepSpec {
            a_steps: 7,
            method: MethodChoice::Both,
            ..SweepSpec::new(6, vec![3, 1])
        };
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), spec.row_count());
        assert_eq!(rows[0].k, 3);
        assert_eq!(rows[0].verdict, Verdict::UndefinedMeanSpin);
        assert_eq!(rows[13].k, 3);
        assert_eq!(rows[14].k, 1);
        for pair in rows.chunks(2) {
            assert_eq!((pair[0].method, pair[1].method), ("analytic", "oracle_eig"));
            assert_eq!(pair[0].a, pair[1].a);
            match (pair[0].xi, pair[1].xi) {
                (Some(x), Some(y)) => assert!((x - y).abs() < 1e-10),
                (None, None) => {}
                other => panic!("{other:?}"),
            }
        }
    }
}
