//! Golden per-configuration expressions for `N = 2..5`.
//!
//! Closed forms for individual `(N, k)`, kept as evidence for the general
//! expressions and never used by the analytic path. Two of the reference
//! rows carry errors; they are kept verbatim in `printed` and the corrected
//! expression sits in `corrected`. Table-driven checks use the corrected
//! form and separately confirm that the printed one is contradicted by the
//! brute-force oracle.

use crate::state::FrameCoefficients;

pub type MeanSpinExpr = fn(a: f64) -> f64;
pub type VarianceExpr = fn(a: f64, m: &FrameCoefficients) -> f64;

#[derive(Debug, Clone, Copy)]
pub struct GoldenRow<F> {
    pub n: u32,
    pub k: u32,
    pub printed: F,
    pub corrected: Option<F>,
}

impl<F: Copy> GoldenRow<F> {
    pub fn expr(&self) -> F {
        self.corrected.unwrap_or(self.printed)
    }

    pub fn is_misprinted(&self) -> bool {
        self.corrected.is_some()
    }
}

fn b(a: f64) -> f64 {
    (1.0 - a * a).sqrt()
}

macro_rules! row {
    ($n:expr, $k:expr, $f:expr) => {
        GoldenRow {
            n: $n,
            k: $k,
            printed: $f,
            corrected: None,
        }
    };
    ($n:expr, $k:expr, $f:expr, corrected: $g:expr) => {
        GoldenRow {
            n: $n,
            k: $k,
            printed: $f,
            corrected: Some($g),
        }
    };
}

/// `⟨Sx⟩`
pub const SX_ROWS: [GoldenRow<MeanSpinExpr>; 10] = [
    row!(2, 1, |a| 2.0 * a * b(a) / (1.0 + a * a)),
    row!(3, 2, |a| 3.0 * a * b(a) / (1.0 + 2.0 * a * a)),
    row!(3, 1, |a| 2.0 * a * b(a) * (2.0 + a * a) / (1.0 + 2.0 * a * a)),
    row!(4, 3, |a| 4.0 * a * b(a) / (1.0 + 3.0 * a * a)),
    row!(4, 2, |a| 6.0 * a * b(a) * (1.0 + a * a) / (1.0 + 4.0 * a * a + a.powi(4))),
    row!(4, 1, |a| 6.0 * a * b(a) * (1.0 + a * a) / (1.0 + 3.0 * a * a)),
    row!(5, 4, |a| 5.0 * a * b(a) / (1.0 + 4.0 * a * a)),
    row!(5, 3, |a| 4.0 * a * b(a) * (2.0 + 3.0 * a * a)
        / (1.0 + 6.0 * a * a + 3.0 * a.powi(4))),
    row!(5, 2, |a| 3.0 * a * b(a) * (3.0 + 6.0 * a * a + a.powi(4))
        / (1.0 + 6.0 * a * a + 3.0 * a.powi(4))),
    row!(5, 1, |a| 4.0 * a * b(a) * (2.0 + 3.0 * a * a) / (1.0 + 4.0 * a * a)),
];

/// `⟨Sz⟩`
pub const SZ_ROWS: [GoldenRow<MeanSpinExpr>; 10] = [
    row!(2, 1, |a| 2.0 * a * a / (1.0 + a * a)),
    row!(3, 2, |a| (1.0 + 8.0 * a * a) / (2.0 * (1.0 + 2.0 * a * a))),
    row!(3, 1, |a| (4.0 * a.powi(4) + 6.0 * a * a - 1.0) / (2.0 * (1.0 + 2.0 * a * a))),
    row!(4, 3, |a| (1.0 + 7.0 * a * a) / (1.0 + 3.0 * a * a)),
    row!(4, 2, |a| (6.0 * a.powi(4) + 6.0 * a * a) / (1.0 + 4.0 * a * a + a.powi(4))),
    row!(4, 1, |a| (6.0 * a.powi(4) + 3.0 * a * a - 1.0) / (1.0 + 3.0 * a * a)),
    row!(5, 4, |a| (3.0 + 22.0 * a * a) / (2.0 * (1.0 + 4.0 * a * a))),
    row!(5, 3, |a| (1.0 + 22.0 * a * a + 27.0 * a.powi(4))
        / (2.0 * (1.0 + 6.0 * a * a + 3.0 * a.powi(4)))),
    row!(5, 2,
        |a| (6.0 * a.powi(6) + 30.0 * a * a + 45.0 * a.powi(4) + 1.0)
            / (2.0 * (1.0 + 6.0 * a * a + 3.0 * a.powi(4))),
        corrected: |a| (6.0 * a.powi(6) + 33.0 * a.powi(4) + 12.0 * a * a - 1.0)
            / (2.0 * (1.0 + 6.0 * a * a + 3.0 * a.powi(4)))),
    row!(5, 1, |a| (4.0 * a * a + 24.0 * a.powi(4) - 3.0) / (2.0 * (1.0 + 4.0 * a * a))),
];

/// `⟨S²_n2⟩` in terms of the frame coefficients.
pub const VARIANCE_ROWS: [GoldenRow<VarianceExpr>; 9] = [
    row!(2, 1, |a, m| 0.5 + (m.m1 * m.m3 + m.m2 * m.m2) / (2.0 * (1.0 + a * a))),
    row!(3, 2, |a, m| 0.75
        + (0.5 * m.m1 * m.m1 + 2.0 * m.m1 * m.m2 * a + m.m1 * m.m3 + m.m2 * m.m2)
            / (1.0 + 2.0 * a * a)),
    row!(3, 1, |a, m| 0.75
        + (0.5 * m.m3 * m.m3 + 2.0 * m.m3 * m.m2 * a + m.m1 * m.m3 + m.m2 * m.m2)
            / (1.0 + 2.0 * a * a)),
    row!(4, 2,
        |a, m| 1.0
            + (m.m1 * m.m1
                + 4.0 * m.m1 * m.m2 * a
                + m.m2 * m.m2 * a * a
                + 2.0 * m.m1 * m.m3 * (1.0 + a * a)
                + 2.0 * m.m2 * m.m2 * (1.0 + a * a)
                + 4.0 * m.m2 * m.m3 * a
                + 0.5 * m.m3 * m.m3)
                / (2.0 * (1.0 + 4.0 * a * a + a.powi(4))),
        corrected: |a, m| 1.0
            + (0.5 * m.m1 * m.m1
                + 4.0 * m.m1 * m.m2 * a
                + m.m2 * m.m2 * a * a
                + 2.0 * m.m1 * m.m3 * (1.0 + a * a)
                + 2.0 * m.m2 * m.m2 * (1.0 + a * a)
                + 4.0 * m.m2 * m.m3 * a
                + 0.5 * m.m3 * m.m3)
                / (1.0 + 4.0 * a * a + a.powi(4))),
    row!(4, 1, |a, m| 1.0
        + 3.0 / (1.0 + 3.0 * a * a)
            * (0.5 * m.m1 * m.m3
                + 0.5 * m.m2 * m.m2
                + 2.0 * m.m2 * m.m3 * a
                + 0.5 * m.m3 * m.m3 * (1.0 + a * a))),
    row!(5, 4, |a, m| 1.25
        + 4.0 / (1.0 + 4.0 * a * a)
            * (0.5 * m.m1 * m.m3
                + 0.5 * m.m2 * m.m2
                + 3.0 * m.m2 * m.m1 * a
                + 0.75 * m.m1 * m.m1 * (1.0 + 2.0 * a * a))),
    row!(5, 3, |a, m| 1.25
        + (1.5 * m.m1 * m.m1 * (1.0 + 2.0 * a * a)
            + 6.0 * m.m1 * m.m2 * (2.0 + a * a) * a
            + 3.0 * m.m2 * m.m2 * a * a
            + 3.0 * m.m1 * m.m3 * (1.0 + 2.0 * a * a)
            + 3.0 * m.m2 * m.m2 * (1.0 + 2.0 * a * a)
            + 6.0 * m.m2 * m.m3 * a
            + 0.5 * m.m3 * m.m3)
            / (1.0 + 6.0 * a * a + 3.0 * a.powi(4))),
    row!(5, 2, |a, m| 1.25
        + (0.5 * m.m1 * m.m1
            + 6.0 * m.m1 * m.m2 * a
            + 3.0 * m.m2 * m.m2 * a * a
            + 3.0 * m.m1 * m.m3 * (1.0 + 2.0 * a * a)
            + 3.0 * m.m2 * m.m2 * (1.0 + 2.0 * a * a)
            + 6.0 * m.m2 * m.m3 * a * (2.0 + a * a)
            + 1.5 * m.m3 * m.m3 * (1.0 + 2.0 * a * a))
            / (1.0 + 6.0 * a * a + 3.0 * a.powi(4))),
    row!(5, 1, |a, m| 1.25
        + 4.0 / (1.0 + 4.0 * a * a)
            * (0.5 * m.m1 * m.m3
                + 0.5 * m.m2 * m.m2
                + 3.0 * m.m2 * m.m3 * a
                + 0.75 * m.m3 * m.m3 * (1.0 + 2.0 * a * a))),
];

/// Overlap values at which every row is compared.
pub const TABLE_GRID: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];
