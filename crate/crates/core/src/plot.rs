//! Deterministic SVG rendering of colored point sets.

use std::fmt::Write;

use crate::error::Error;
use crate::point_set::{ColoredPointSet, PolygonWitness};

const PALETTE: [&str; 10] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999", "#66c2a5", "#222222",
];

const SIZE: f64 = 800.0;
const PAD: f64 = 20.0;

pub fn color_hex(color: u32) -> &'static str {
    PALETTE[(color as usize + PALETTE.len() - 1) % PALETTE.len()]
}

/// Renders the points, colored by class, with optional polygons drawn
/// underneath. Output depends only on the inputs.
pub fn render_svg(set: &ColoredPointSet, highlight: &[PolygonWitness]) -> Result<String, Error> {
    if set.is_empty() {
        return Err(Error::InvalidParameter("cannot plot an empty point set".into()));
    }
    let xy: Vec<(f64, f64)> = set.points().iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &xy {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let scale = (SIZE - 2.0 * PAD) / span;
    let map = |(x, y): (f64, f64)| (PAD + (x - x0) * scale, SIZE - PAD - (y - y0) * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for w in highlight {
        if let Some(&bad) = w.vertices.iter().find(|&&v| v >= set.len()) {
            return Err(Error::InvalidParameter(format!("witness vertex {bad} out of range")));
        }
        let pts: Vec<String> = w
            .vertices
            .iter()
            .map(|&v| {
                let (x, y) = map(xy[v]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r##"<polygon points="{}" fill="#ffd54f" fill-opacity="0.35" stroke="#333333" stroke-width="1"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }
    for (i, &p) in xy.iter().enumerate() {
        let (x, y) = map(p);
        let c = set.color(i);
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="{}"><title>{i}: color {c}</title></circle>"#, color_hex(c.0))
            .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::point_set::Color;

    #[test]
    fn three_dots() {
        let s = ColoredPointSet::new(
            vec![Point::from_ints(0, 0), Point::from_ints(3, 1), Point::from_ints(1, 4)],
            vec![Color(1), Color(2), Color(3)],
            3,
        )
        .unwrap();
        let svg = render_svg(&s, &[]).unwrap();
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg, render_svg(&s, &[]).unwrap());
        let tri = PolygonWitness { vertices: vec![0, 1, 2], convex: true, empty: true, rainbow: true };
        assert!(render_svg(&s, &[tri]).unwrap().contains("<polygon"));
    }
}
