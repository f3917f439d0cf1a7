//! Minimal single-panel line plots as SVG 1.1.
//!
//! All coordinates are printed with a fixed number of decimals so the same
//! data always produces the same bytes.

use std::fmt::Write;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;

const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 70.0;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    /// `(x, y)`; `y = None` marks a point where the quantity is undefined.
    pub points: Vec<(f64, Option<f64>)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinePlot {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x_range: (f64, f64),
    pub series: Vec<Series>,
    pub reference_y: Option<f64>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Round `x` up to 1, 2 or 5 times a power of ten.
fn nice_ceil(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    let p = 10f64.powf(x.log10().floor());
    let m = x / p;
    let step = [1.0, 2.0, 2.5, 5.0, 10.0].into_iter().find(|s| m <= *s + 1e-12).unwrap_or(10.0);
    step * p
}

fn tick_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let p = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 2.5, 5.0, 10.0]
        .into_iter()
        .map(|m| m * p)
        .find(|s| span / s <= 8.0)
        .unwrap_or(10.0 * p)
}

impl LinePlot {
    fn y_max(&self) -> f64 {
        let data_max = self
            .series
            .iter()
            .flat_map(|s| s.points.iter().filter_map(|p| p.1))
            .chain(self.reference_y)
            .fold(0.0, f64::max);
        nice_ceil(data_max * 1.05)
    }

    pub fn render(&self) -> String {
        let (x0, x1) = self.x_range;
        let y1 = self.y_max();
        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let px = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
        let py = |y: f64| TOP + (1.0 - y / y1) * plot_h;

        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"13\">"
        );
        let _ = writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">{}</text>",
            LEFT + plot_w / 2.0,
            escape(&self.title)
        );

        // axes and ticks
        s.push_str("<g stroke=\"#000\" stroke-width=\"1\" fill=\"none\">\n");
        let _ = writeln!(
            s,
            "<rect x=\"{LEFT:.2}\" y=\"{TOP:.2}\" width=\"{plot_w:.2}\" height=\"{plot_h:.2}\"/>"
        );
        s.push_str("</g>\n<g font-size=\"12\">\n");
        let xs = tick_step(x1 - x0);
        let mut i = 0;
        loop {
            let x = x0 + xs * f64::from(i);
            if x > x1 + 1e-9 {
                break;
            }
            let _ = writeln!(
                s,
                "<line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{0:.2}\" y2=\"{2:.2}\" stroke=\"#000\"/><text x=\"{0:.2}\" y=\"{3:.2}\" text-anchor=\"middle\">{4}</text>",
                px(x),
                TOP + plot_h,
                TOP + plot_h + 5.0,
                TOP + plot_h + 20.0,
                tick_label(x, xs)
            );
            i += 1;
        }
        let ys = tick_step(y1);
        let mut j = 0;
        loop {
            let y = ys * f64::from(j);
            if y > y1 + 1e-9 {
                break;
            }
            let _ = writeln!(
                s,
                "<line x1=\"{0:.2}\" y1=\"{1:.2}\" x2=\"{2:.2}\" y2=\"{1:.2}\" stroke=\"#000\"/><text x=\"{3:.2}\" y=\"{4:.2}\" text-anchor=\"end\">{5}</text>",
                LEFT - 5.0,
                py(y),
                LEFT,
                LEFT - 8.0,
                py(y) + 4.0,
                tick_label(y, ys)
            );
            j += 1;
        }
        s.push_str("</g>\n");
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>",
            LEFT + plot_w / 2.0,
            HEIGHT - 25.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            "<text x=\"25\" y=\"{0:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 25 {0:.2})\">{1}</text>",
            TOP + plot_h / 2.0,
            escape(&self.y_label)
        );

        if let Some(r) = self.reference_y {
            let _ = writeln!(
                s,
                "<line x1=\"{:.2}\" y1=\"{2:.2}\" x2=\"{:.2}\" y2=\"{2:.2}\" stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>",
                LEFT,
                LEFT + plot_w,
                py(r)
            );
        }

        let mut undefined = 0;
        for (idx, series) in self.series.iter().enumerate() {
            let color = PALETTE[idx % PALETTE.len()];
            let _ = writeln!(s, "<g stroke=\"{color}\" fill=\"none\" stroke-width=\"1.8\">");
            // break the curve wherever the value is undefined
            for segment in series.points.split(|p| p.1.is_none()) {
                match segment {
                    [] => {}
                    [(x, Some(y))] => {
                        let _ = writeln!(s, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"1.5\"/>", px(*x), py(*y));
                    }
                    _ => {
                        s.push_str("<polyline points=\"");
                        for (k, (x, y)) in segment.iter().enumerate() {
                            if k > 0 {
                                s.push(' ');
                            }
                            let _ = write!(s, "{:.2},{:.2}", px(*x), py(y.unwrap()));
                        }
                        s.push_str("\"/>\n");
                    }
                }
            }
            for (x, _) in series.points.iter().filter(|p| p.1.is_none()) {
                // open circle on the horizontal axis
                let _ = writeln!(
                    s,
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"white\"/>",
                    px(*x),
                    TOP + plot_h
                );
                undefined += 1;
            }
            s.push_str("</g>\n");

            let ly = TOP + 10.0 + 22.0 * idx as f64;
            let lx = LEFT + plot_w + 15.0;
            let _ = writeln!(
                s,
                "<line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" stroke=\"{color}\" stroke-width=\"2.5\"/><text x=\"{:.2}\" y=\"{:.2}\">{}</text>",
                lx + 25.0,
                lx + 32.0,
                ly + 4.0,
                escape(&series.label)
            );
        }
        if undefined > 0 {
            let ly = TOP + 10.0 + 22.0 * self.series.len() as f64;
            let lx = LEFT + plot_w + 15.0;
            let _ = writeln!(
                s,
                "<circle cx=\"{:.2}\" cy=\"{ly:.2}\" r=\"5\" fill=\"white\" stroke=\"#000\"/><text x=\"{:.2}\" y=\"{:.2}\">undefined</text>",
                lx + 12.5,
                lx + 32.0,
                ly + 4.0
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn tick_label(v: f64, step: f64) -> String {
    // fewest decimals that represent the step exactly
    let decimals = (0..6)
        .find(|&d| {
            let scaled = step * 10f64.powi(d);
            (scaled - scaled.round()).abs() < 1e-9
        })
        .unwrap_or(6) as usize;
    format!("{v:.decimals$}")
}
