use dicke_squeeze::analytic::{AnalyticModel, ClosedForm};
use dicke_squeeze::verify::{run, VerifyOptions};
use dicke_squeeze::{ConfigError, DickeClassConfig, SpinExpectation, SqueezeError};

#[test]
fn closed_form_passes_every_suite() {
    let report = run(&ClosedForm, &VerifyOptions::default());
    for suite in &report.suites {
        println!("{suite}");
    }
    assert_eq!(report.suites.len(), 10);
    assert!(report.all_passed(), "failed: {:?}", report.failed_suites());
}

/// Closed form with a relative error injected into the variance and `⟨Sx⟩`.
struct Perturbed(f64);

impl AnalyticModel for Perturbed {
    fn mean_spin(&self, cfg: &DickeClassConfig) -> Result<SpinExpectation, ConfigError> {
        let s = ClosedForm.mean_spin(cfg)?;
        Ok(SpinExpectation::new(s.sx * (1.0 + self.0), s.sy, s.sz))
    }

    fn perp_variance_min(&self, cfg: &DickeClassConfig) -> Result<f64, SqueezeError> {
        Ok(ClosedForm.perp_variance_min(cfg)? * (1.0 + self.0))
    }
}

#[test]
fn perturbed_model_is_caught() {
    let options = VerifyOptions {
        max_n: 6,
        ..VerifyOptions::default()
    };
    let report = run(&Perturbed(1e-6), &options);
    let failed = report.failed_suites();
    for name in ["table-concordance", "oracle-equivalence", "minimum-identification"] {
        assert!(failed.contains(&name), "{name} not flagged: {failed:?}");
    }
    // model-independent suites are unaffected
    for name in ["structural-zeros", "commutators", "construction-equivalence", "exact-cross-path"] {
        assert!(!failed.contains(&name), "{name} flagged: {failed:?}");
    }
}

#[test]
fn tables_only_runs_one_suite() {
    let options = VerifyOptions {
        tables_only: true,
        ..VerifyOptions::default()
    };
    let report = run(&ClosedForm, &options);
    assert_eq!(report.suites.len(), 1);
    assert_eq!(report.suites[0].name, "table-concordance");
    assert!(report.all_passed());
}
