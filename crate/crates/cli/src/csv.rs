//! Row format shared by `sweep` and `figure`.

use std::io::{self, Write};

use dicke_squeeze::{SqueezingReport, Verdict};

pub const HEADER: &str = "N,k,a,sx,sz,perp_var,xi,method,verdict";

/// One evaluated grid point. `xi` and `perp_var` are `None` exactly when the
/// verdict is `undefined_mean_spin`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub n: u32,
    pub k: u32,
    pub a: f64,
    pub sx: f64,
    pub sz: f64,
    pub perp_var: Option<f64>,
    pub xi: Option<f64>,
    pub method: &'static str,
    pub verdict: Verdict,
}

impl From<&SqueezingReport> for CsvRow {
    fn from(r: &SqueezingReport) -> Self {
        Self {
            n: r.config.n(),
            k: r.config.k(),
            a: r.config.a(),
            sx: r.spin.sx,
            sz: r.spin.sz,
            perp_var: r.perp_variance_min,
            xi: r.xi,
            method: r.method.as_str(),
            verdict: r.verdict,
        }
    }
}

/// 17 significant digits in scientific notation, independent of locale.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn optional(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}

impl CsvRow {
    pub fn to_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}\n",
            self.n,
            self.k,
            format_number(self.a),
            format_number(self.sx),
            format_number(self.sz),
            optional(self.perp_var),
            optional(self.xi),
            self.method,
            self.verdict
        )
    }
}

pub fn write_csv<W: Write>(mut w: W, rows: &[CsvRow]) -> io::Result<()> {
    w.write_all(HEADER.as_bytes())?;
    w.write_all(b"\n")?;
    for row in rows {
        w.write_all(row.to_line().as_bytes())?;
    }
    w.flush()
}

pub fn to_csv_string(rows: &[CsvRow]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use dicke_squeeze::{squeezing_parameter, DickeClassConfig};
    use proptest::prelude::*;

    #[test]
    fn undefined_rows_leave_xi_empty() {
        let report = squeezing_parameter(&DickeClassConfig::new(6, 3, 0.0).unwrap()).unwrap();
        let line = CsvRow::from(&report).to_line();
        assert!(line.ends_with(",,,analytic,undefined_mean_spin\n"), "{line}");
    }

    #[test]
    fn header_and_line_endings() {
        let report = squeezing_parameter(&DickeClassConfig::new(2, 1, 0.6).unwrap()).unwrap();
        let text = to_csv_string(&[CsvRow::from(&report)]);
        assert!(text.starts_with("N,k,a,sx,sz,perp_var,xi,method,verdict\n"));
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains(",squeezed\n"));
    }

    proptest! {
        #[test]
        fn numbers_round_trip_with_17_digits(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
            let s = format_number(x);
            prop_assert_eq!(s.parse::<f64>().unwrap(), x);
            let mantissa = s.split('e').next().unwrap();
            prop_assert_eq!(mantissa.chars().filter(char::is_ascii_digit).count(), 17);
        }
    }
}
