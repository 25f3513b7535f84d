//! Deterministic SVG figures: fixed canvas, fixed number formatting, no
//! timestamps or random identifiers, so equal inputs give byte-equal output.

use std::fmt::Write;

use crate::polytope::{polygon_qr, scaled_polygon, LimitRegion, Polygon};
use crate::rational::QPoint;
use crate::Result;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 40.0;

struct Frame {
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn fit<'a>(points: impl IntoIterator<Item = &'a QPoint>) -> Frame {
        let (mut x_max, mut y_max) = (0.0f64, 0.0f64);
        for p in points {
            let (x, y) = p.to_f64();
            x_max = x_max.max(x);
            y_max = y_max.max(y);
        }
        Frame {
            x_max: if x_max > 0.0 { x_max * 1.05 } else { 1.0 },
            y_max: if y_max > 0.0 { y_max * 1.05 } else { 1.0 },
        }
    }

    fn map(&self, p: &QPoint) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (
            MARGIN + x / self.x_max * (WIDTH - 2.0 * MARGIN),
            HEIGHT - MARGIN - y / self.y_max * (HEIGHT - 2.0 * MARGIN),
        )
    }
}

fn header(title: &str) -> String {
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    );
    let _ = writeln!(s, "<title>{}</title>", escape(title));
    let _ = writeln!(s, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    s
}

fn axes(s: &mut String, frame: &Frame, x_label: &str, y_label: &str) {
    let (x0, y0) = (MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        s,
        "<path d=\"M{x0:.2} {y0:.2} H{:.2} M{x0:.2} {y0:.2} V{MARGIN:.2}\" stroke=\"black\" fill=\"none\"/>",
        WIDTH - MARGIN
    );
    let _ = writeln!(
        s,
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{} (max {:.4})</text>",
        WIDTH - MARGIN,
        HEIGHT - 12.0,
        escape(x_label),
        frame.x_max
    );
    let _ = writeln!(
        s,
        "<text x=\"6\" y=\"{:.2}\" font-size=\"11\">{} (max {:.4})</text>",
        MARGIN - 12.0,
        escape(y_label),
        frame.y_max
    );
}

fn polygon_path(s: &mut String, frame: &Frame, poly: &Polygon, stroke: &str, fill: &str) {
    let mut d = String::new();
    for (i, v) in poly.vertices.iter().enumerate() {
        let (x, y) = frame.map(v);
        let _ = write!(d, "{}{x:.2} {y:.2} ", if i == 0 { "M" } else { "L" });
    }
    d.push('Z');
    let _ = writeln!(s, "<path d=\"{d}\" stroke=\"{stroke}\" fill=\"{fill}\" fill-opacity=\"0.25\"/>");
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// `Q^r` with its vertices marked and labeled by their exact coordinates.
pub fn polygon_svg(r: usize, scaled: bool) -> Result<String> {
    let poly = if scaled { scaled_polygon(r)? } else { polygon_qr(r)? };
    let frame = Frame::fit(&poly.vertices);
    let mut s = header(&format!("Q^{r}{}", if scaled { " (scaled)" } else { "" }));
    axes(&mut s, &frame, "triangle density", "square density");
    polygon_path(&mut s, &frame, &poly, "#1f4e9a", "#7aa6e8");
    for v in &poly.vertices {
        let (x, y) = frame.map(v);
        let _ = writeln!(s, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#1f4e9a\"/>");
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">{}</text>",
            x + 5.0,
            y - 5.0,
            escape(&v.to_string())
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Sample points over `Q^r`.
pub fn scatter_svg(r: usize, points: &[QPoint]) -> Result<String> {
    let poly = polygon_qr(r)?;
    let frame = Frame::fit(poly.vertices.iter().chain(points));
    let mut s = header(&format!("{} samples over Q^{r}", points.len()));
    axes(&mut s, &frame, "triangle density", "square density");
    polygon_path(&mut s, &frame, &poly, "#1f4e9a", "#7aa6e8");
    for p in points {
        let (x, y) = frame.map(p);
        let _ = writeln!(s, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"1.5\" fill=\"#c0392b\" fill-opacity=\"0.6\"/>");
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Scaled polygons for each `r` drawn inside the limit region.
pub fn scaled_vs_limit_svg(rs: &[usize]) -> Result<String> {
    let limit = LimitRegion::default().polygon();
    let frame = Frame::fit(&limit.vertices);
    let mut s = header("scaled polygons and the limit region");
    axes(&mut s, &frame, "scaled triangle density", "scaled square density");
    polygon_path(&mut s, &frame, &limit, "black", "none");
    let palette = ["#1f4e9a", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085"];
    for (i, &r) in rs.iter().enumerate() {
        polygon_path(&mut s, &frame, &scaled_polygon(r)?, palette[i % palette.len()], "none");
    }
    s.push_str("</svg>\n");
    Ok(s)
}
