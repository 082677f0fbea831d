//! SVG 1.1 rendering of alcove diagrams over the dominant cone.

use std::fmt::Write;

use sl3_billiards_core::{AffineElement, Weight};

use crate::diagram::AlcoveDiagram;

const UNIT: f64 = 28.0;
const MARGIN: f64 = 20.0;
const FONT: f64 = 5.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    pub ell: i64,
    /// Cone drawn up to `a + b ≤ extent`; grown to fit the diagram.
    pub extent: i64,
}

fn xy(p: Weight, height: f64) -> (f64, f64) {
    let x = MARGIN + UNIT * (p.a as f64 + p.b as f64 / 2.0);
    let y = height - MARGIN - UNIT * (p.b as f64 * 3f64.sqrt() / 2.0);
    (x, y)
}

fn centroid(x: &AffineElement, height: f64) -> (f64, f64) {
    let pts = x.vertices().map(|v| xy(v, height));
    (
        pts.iter().map(|p| p.0).sum::<f64>() / 3.0,
        pts.iter().map(|p| p.1).sum::<f64>() / 3.0,
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The dominant cone cut into unit alcoves, the `ℓ`-walls drawn heavier, and
/// each alcove's symbols stacked at its centroid. The output depends only on
/// the arguments.
pub fn render(diagram: &AlcoveDiagram, opts: SvgOptions) -> String {
    let needed = diagram
        .alcoves()
        .map(|(x, _)| x.cell.a + x.cell.b + 2)
        .max()
        .unwrap_or(0);
    let r = opts.extent.max(needed).max(1);
    let width = 2.0 * MARGIN + UNIT * r as f64;
    let height = 2.0 * MARGIN + UNIT * r as f64 * 3f64.sqrt() / 2.0;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let line = |s: &mut String, p: Weight, q: Weight, heavy: bool| {
        let (x1, y1) = xy(p, height);
        let (x2, y2) = xy(q, height);
        let (stroke, w) = if heavy { ("black", 1.2) } else { ("#bbbbbb", 0.4) };
        let _ = writeln!(
            s,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{stroke}" stroke-width="{w}"/>"#
        );
    };
    let wall = |c: i64| opts.ell > 0 && c % opts.ell == 0;
    let _ = writeln!(s, r#"<g id="grid">"#);
    for c in 0..=r {
        line(&mut s, Weight::new(c, 0), Weight::new(c, r - c), wall(c));
        line(&mut s, Weight::new(0, c), Weight::new(r - c, c), wall(c));
        if c > 0 {
            line(&mut s, Weight::new(c, 0), Weight::new(0, c), wall(c));
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r#"<g id="symbols" font-family="sans-serif" font-size="{FONT}" text-anchor="middle">"#
    );
    for (x, syms) in diagram.alcoves() {
        let (cx, cy) = centroid(x, height);
        let top = cy - FONT * (syms.len() as f64 - 1.0) / 2.0 + FONT / 3.0;
        for (j, sym) in syms.iter().enumerate() {
            let y = top + FONT * j as f64;
            let _ = writeln!(
                s,
                r#"<text x="{cx:.2}" y="{y:.2}">{}</text>"#,
                escape(&sym.to_string())
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Placement;
    use sl3_billiards_core::billiards::build_ztilde;

    fn texts(svg: &str) -> Vec<&str> {
        svg.lines()
            .filter_map(|l| l.strip_suffix("</text>"))
            .map(|l| &l[l.find('>').unwrap() + 1..])
            .collect()
    }

    #[test]
    fn empty_is_grid_only() {
        let svg = render(&AlcoveDiagram::new(), SvgOptions { ell: 5, extent: 6 });
        assert!(svg.contains("<line"));
        assert!(texts(&svg).is_empty());
    }

    #[test]
    fn five_symbols() {
        let z = build_ztilde(5, 21).unwrap();
        let d = AlcoveDiagram::from_ztilde(&z, Placement::Lower);
        let svg = render(&d, SvgOptions { ell: 5, extent: 10 });
        let mut t = texts(&svg);
        t.sort();
        assert_eq!(t, ["12(1)", "14(1)", "16(1)", "18(1)", "21(v)"]);
        assert_eq!(svg, render(&d, SvgOptions { ell: 5, extent: 10 }));
    }
}
