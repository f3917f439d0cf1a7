//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Three operations are exposed: `ξ` curves over `a`, a single-point
//! evaluation with Dicke-basis populations, and the perpendicular variance
//! as a function of the angle in the plane orthogonal to the mean spin.

pub mod model;

use wasm_bindgen::prelude::*;

fn js_err(msg: String) -> JsError {
    JsError::new(&msg)
}

#[wasm_bindgen]
pub fn max_n() -> u32 {
    model::MAX_N
}

#[wasm_bindgen]
pub fn a_grid(a_start: f64, a_end: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    model::a_grid(a_start, a_end, steps).map_err(js_err)
}

/// Flat array of `ks.len()` curves, `steps` values each; NaN where undefined.
#[wasm_bindgen]
pub fn xi_curves(n: u32, ks: Vec<u32>, a_start: f64, a_end: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    model::xi_curves(n, &ks, a_start, a_end, steps).map_err(js_err)
}

#[wasm_bindgen]
pub struct PointView {
    inner: model::PointSummary,
}

#[wasm_bindgen]
impl PointView {
    #[wasm_bindgen(getter)]
    pub fn sx(&self) -> f64 {
        self.inner.analytic.spin.sx
    }

    #[wasm_bindgen(getter)]
    pub fn sz(&self) -> f64 {
        self.inner.analytic.spin.sz
    }

    /// NaN when the mean spin vanishes.
    #[wasm_bindgen(getter)]
    pub fn perp_var(&self) -> f64 {
        self.inner.analytic.perp_variance_min.unwrap_or(f64::NAN)
    }

    #[wasm_bindgen(getter)]
    pub fn xi(&self) -> f64 {
        self.inner.analytic.xi.unwrap_or(f64::NAN)
    }

    #[wasm_bindgen(getter)]
    pub fn xi_oracle(&self) -> f64 {
        self.inner.oracle.xi.unwrap_or(f64::NAN)
    }

    #[wasm_bindgen(getter)]
    pub fn verdict(&self) -> String {
        self.inner.analytic.verdict.to_string()
    }

    /// Normalized Dicke populations, index = number of excitations.
    #[wasm_bindgen(getter)]
    pub fn populations(&self) -> Vec<f64> {
        self.inner.populations.clone()
    }
}

#[wasm_bindgen]
pub fn evaluate_point(n: u32, k: u32, a: f64) -> Result<PointView, JsError> {
    model::evaluate_point(n, k, a)
        .map(|inner| PointView { inner })
        .map_err(js_err)
}

#[wasm_bindgen]
pub fn perp_variance_profile(n: u32, k: u32, a: f64, steps: usize) -> Result<Vec<f64>, JsError> {
    model::perp_variance_profile(n, k, a, steps).map_err(js_err)
}
