//! SVG output. Pictures only: coordinates are rounded to nine significant
//! digits and never read back.

use std::fmt::Write;

use tangle::arrangement::{ArrangementGraph, Color};
use tangle::geometry::{chain_contacts, EventKind};
use tangle::{Drawing, Point};

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    pub width: f64,
    pub height: f64,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub markers: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { width: 800.0, height: 800.0, stroke_width: 1.5, vertex_radius: 4.0, markers: false }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<(), String> {
        let dims = [self.width, self.height, self.stroke_width, self.vertex_radius];
        if dims.iter().all(|v| v.is_finite() && *v > 0.0) {
            Ok(())
        } else {
            Err("render dimensions must be positive".into())
        }
    }
}

/// Decimal with at most nine significant digits.
pub fn num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let r: f64 = format!("{v:.8e}").parse().expect("formatted float parses");
    format!("{r}")
}

/// Maps drawing coordinates into the picture, y pointing up.
struct View {
    min: (f64, f64),
    max_y: f64,
    scale: f64,
    pad: f64,
}

impl View {
    fn fit<'a>(points: impl Iterator<Item = &'a Point>, style: &RenderStyle) -> View {
        let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            let (x, y) = p.to_f64();
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if !lo.0.is_finite() {
            lo = (0.0, 0.0);
            hi = (1.0, 1.0);
        }
        let pad = 2.0 * style.vertex_radius + 0.05 * style.width.min(style.height);
        let span = ((hi.0 - lo.0).max(f64::MIN_POSITIVE), (hi.1 - lo.1).max(f64::MIN_POSITIVE));
        let scale = ((style.width - 2.0 * pad) / span.0).min((style.height - 2.0 * pad) / span.1);
        View { min: lo, max_y: hi.1, scale, pad }
    }

    fn at(&self, p: &Point) -> (String, String) {
        let (x, y) = p.to_f64();
        (num(self.pad + (x - self.min.0) * self.scale), num(self.pad + (self.max_y - y) * self.scale))
    }

    fn path(&self, pts: &[Point], close: bool) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.at(p);
            let _ = write!(d, "{}{x} {y}", if i == 0 { "M" } else { " L" });
        }
        if close {
            d.push_str(" Z");
        }
        d
    }
}

fn header(style: &RenderStyle) -> String {
    let (w, h) = (num(style.width), num(style.height));
    format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n")
}

fn body(out: &mut String, d: &Drawing, view: &View, style: &RenderStyle) {
    let sw = num(style.stroke_width);
    for e in &d.edges {
        let _ = writeln!(
            out,
            "<path class=\"edge\" data-edge=\"{}-{}\" d=\"{}\" fill=\"none\" stroke=\"#1f3b73\" stroke-width=\"{sw}\"/>",
            e.u,
            e.v,
            view.path(&e.chain, false)
        );
    }
    if style.markers {
        let s = num(2.0 * style.stroke_width + 1.0);
        let half = 0.5 * (2.0 * style.stroke_width + 1.0);
        for (i, e) in d.edges.iter().enumerate() {
            for f in &d.edges[i + 1..] {
                for c in chain_contacts(&e.chain, &f.chain).points {
                    if c.kind != EventKind::ProperCrossing {
                        continue;
                    }
                    let (x, y) = c.at.to_f64();
                    let cx = view.pad + (x - view.min.0) * view.scale - half;
                    let cy = view.pad + (view.max_y - y) * view.scale - half;
                    let _ = writeln!(
                        out,
                        "<rect class=\"crossing\" x=\"{}\" y=\"{}\" width=\"{s}\" height=\"{s}\" fill=\"#c0392b\"/>",
                        num(cx),
                        num(cy)
                    );
                }
            }
        }
    }
    let r = num(style.vertex_radius);
    for (i, p) in d.vertices.iter().enumerate() {
        let (x, y) = view.at(p);
        let _ = writeln!(
            out,
            "<circle class=\"vertex\" data-vertex=\"{i}\" cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"#000\"/>"
        );
    }
}

/// One path per edge, one circle per vertex, and small squares on
/// crossings when asked.
pub fn render_drawing(d: &Drawing, style: &RenderStyle) -> String {
    let view = View::fit(d.vertices.iter().chain(d.edges.iter().flat_map(|e| e.chain.iter())), style);
    let mut out = header(style);
    body(&mut out, d, &view, style);
    out.push_str("</svg>\n");
    out
}

/// Bounded cells filled by their chessboard color under the drawing.
pub fn render_arrangement(d: &Drawing, a: &ArrangementGraph, style: &RenderStyle) -> String {
    let view =
        View::fit(d.vertices.iter().chain(a.nodes.iter()).chain(d.edges.iter().flat_map(|e| e.chain.iter())), style);
    let mut out = header(style);
    for cell in a.faces.iter().filter(|c| c.bounded) {
        let (name, fill) = match cell.color {
            Some(Color::Black) => ("black", "#9aa5b1"),
            Some(Color::White) => ("white", "#ffffff"),
            None => ("none", "none"),
        };
        let dpath: Vec<String> = cell.boundary.iter().map(|w| view.path(&a.walk_polygon(w), true)).collect();
        let _ = writeln!(
            out,
            "<path class=\"cell\" data-cell=\"{}\" data-color=\"{name}\" d=\"{}\" fill=\"{fill}\" fill-rule=\"evenodd\"/>",
            cell.id,
            dpath.join(" ")
        );
    }
    body(&mut out, d, &view, style);
    out.push_str("</svg>\n");
    out
}
