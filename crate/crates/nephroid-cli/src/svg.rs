//! Minimal SVG export: one polyline scaled into an 800x600 viewbox.

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 20.0;

pub fn polyline_svg(points: &[(f64, f64)]) -> String {
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in points {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let span_x = (max_x - min_x).max(1e-12);
    let span_y = (max_y - min_y).max(1e-12);
    let scale = ((WIDTH - 2.0 * MARGIN) / span_x).min((HEIGHT - 2.0 * MARGIN) / span_y);

    let mut coords = String::with_capacity(points.len() * 16);
    for &(x, y) in points {
        let px = MARGIN + (x - min_x) * scale;
        // flip the vertical axis: SVG y grows downward
        let py = HEIGHT - MARGIN - (y - min_y) * scale;
        coords.push_str(&format!("{px:.3},{py:.3} "));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{}\"/>\n\
         </svg>\n",
        coords.trim_end()
    )
}
