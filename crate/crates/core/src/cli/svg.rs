use std::fmt::Write;

use crate::kernel::ComplexValue;

// Visible window of the w-plane.
const RE_MIN: f64 = -0.6;
const RE_MAX: f64 = 3.0;
const IM_MAX: f64 = 1.9;
const SCALE: f64 = 200.0;

fn to_px(w: ComplexValue) -> (f64, f64) {
    ((w.re - RE_MIN) * SCALE, (IM_MAX - w.im) * SCALE)
}

/// A curve drawn as one polyline.
pub struct Layer<'a> {
    pub points: &'a [ComplexValue],
    pub stroke: &'a str,
    pub closed: bool,
}

/// Static SVG with the real and imaginary axes and the given layers.
pub fn render(layers: &[Layer<'_>]) -> String {
    let width = (RE_MAX - RE_MIN) * SCALE;
    let height = 2.0 * IM_MAX * SCALE;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    );
    let (x0, y0) = to_px(ComplexValue::new(0.0, 0.0));
    let _ = writeln!(
        out,
        "<line x1=\"0\" y1=\"{y0:.3}\" x2=\"{width:.0}\" y2=\"{y0:.3}\" stroke=\"#999\" stroke-width=\"1\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{x0:.3}\" y1=\"0\" x2=\"{x0:.3}\" y2=\"{height:.0}\" stroke=\"#999\" stroke-width=\"1\"/>"
    );
    for layer in layers {
        let mut pts: Vec<String> = layer
            .points
            .iter()
            .map(|&w| {
                let (x, y) = to_px(w);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        if layer.closed {
            if let Some(first) = pts.first().cloned() {
                pts.push(first);
            }
        }
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>",
            layer.stroke,
            pts.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}
