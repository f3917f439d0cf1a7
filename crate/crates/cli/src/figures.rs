//! The six reproducible figures: `ξ` against `a` for fixed `N` and a few `k`.

use std::fmt;

use dicke_squeeze::Verdict;

use crate::csv::CsvRow;
use crate::error::CliError;
use crate::svg::{LinePlot, Series};
use crate::sweep::{run_sweep, MethodChoice, SweepSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum FigureId {
    Fig1a,
    Fig1b,
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3b,
}

impl FigureId {
    pub const ALL: [FigureId; 6] = [
        FigureId::Fig1a,
        FigureId::Fig1b,
        FigureId::Fig2a,
        FigureId::Fig2b,
        FigureId::Fig3a,
        FigureId::Fig3b,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::Fig1a => "fig1a",
            FigureId::Fig1b => "fig1b",
            FigureId::Fig2a => "fig2a",
            FigureId::Fig2b => "fig2b",
            FigureId::Fig3a => "fig3a",
            FigureId::Fig3b => "fig3b",
        }
    }

    /// `(N, k list)`. For `N = 8` and `N = 12` only `k ≤ N/2` is drawn since
    /// `k` and `N - k` give the same curve; fig2a draws such a pair at `N = 105`.
    pub fn layout(&self) -> (u32, &'static [u32]) {
        match self {
            FigureId::Fig1a => (8, &[1, 2, 3, 4]),
            FigureId::Fig1b => (12, &[1, 2, 3, 4, 5, 6]),
            FigureId::Fig2a => (105, &[15, 90]),
            FigureId::Fig2b => (105, &[15, 35, 52]),
            FigureId::Fig3a => (5, &[1]),
            FigureId::Fig3b => (6, &[3]),
        }
    }

    pub fn sweep_spec(&self) -> SweepSpec {
        let (n, ks) = self.layout();
        SweepSpec::new(n, ks.to_vec())
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub id: FigureId,
    pub rows: Vec<CsvRow>,
    pub svg: String,
}

pub fn build_figure(id: FigureId, spec: &SweepSpec) -> Result<Figure, CliError> {
    let spec = SweepSpec {
        method: match spec.method {
            // one curve per k; the oracle only replaces the analytic values
            MethodChoice::Both => MethodChoice::Analytic,
            m => m,
        },
        ..spec.clone()
    };
    let rows = run_sweep(&spec)?;
    let series = spec
        .k_list
        .iter()
        .map(|&k| Series {
            label: format!("k = {k}"),
            points: rows
                .iter()
                .filter(|r| r.k == k)
                .map(|r| (r.a, r.xi.filter(|_| r.verdict != Verdict::UndefinedMeanSpin)))
                .collect(),
        })
        .collect();
    let plot = LinePlot {
        title: format!("{id}: squeezing parameter, N = {}", spec.n),
        x_label: "a".into(),
        y_label: "xi".into(),
        x_range: (0.0, 1.0),
        series,
        reference_y: Some(1.0),
    };
    Ok(Figure { id, svg: plot.render(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balanced_six_qubit_curve_starts_undefined() {
        let fig = build_figure(FigureId::Fig3b, &FigureId::Fig3b.sweep_spec()).unwrap();
        assert_eq!(fig.rows.len(), 200);
        assert_eq!(fig.rows[0].verdict, Verdict::UndefinedMeanSpin);
        assert!(fig.rows[1..].iter().all(|r| r.xi.is_some()));
        assert!(fig.svg.contains(">undefined</text>"));
    }

    #[test]
    fn five_qubit_curve_starts_above_one() {
        let fig = build_figure(FigureId::Fig3a, &FigureId::Fig3a.sweep_spec()).unwrap();
        assert!(fig.rows[0].xi.unwrap() > 1.0);
        assert!(!fig.svg.contains(">undefined</text>"));
    }
}
