use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::grid::{BoundingBox, Cell, Tiling};

/// Drawing constants, in pixels.
pub struct Style {
    pub unit: i64,
    pub margin: i64,
    pub stroke_width: f64,
    pub hatch_spacing: i64,
    pub hatch_width: f64,
}

pub const STYLE: Style = Style {
    unit: 20,
    margin: 10,
    stroke_width: 2.4,
    hatch_spacing: 5,
    hatch_width: 1.0,
};

type Point = (i64, i64);

/// Boundary of a set of cells as closed lattice polygons, counter-clockwise
/// with `y` pointing up, collinear vertices dropped.
pub fn outline(cells: &[Cell]) -> Vec<Vec<Point>> {
    let mut edges: BTreeMap<(Point, Point), usize> = BTreeMap::new();
    for c in cells {
        let (x, y) = (i64::from(c.col), i64::from(c.row));
        let corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
        for i in 0..4 {
            let e = (corners[i], corners[(i + 1) % 4]);
            if let Some(k) = edges.get_mut(&(e.1, e.0)) {
                *k -= 1;
                if *k == 0 {
                    edges.remove(&(e.1, e.0));
                }
            } else {
                *edges.entry(e).or_default() += 1;
            }
        }
    }
    let mut next: BTreeMap<Point, Vec<Point>> = BTreeMap::new();
    for (&(a, b), &k) in &edges {
        for _ in 0..k {
            next.entry(a).or_default().push(b);
        }
    }
    let mut loops = Vec::new();
    while let Some((&start, _)) = next.iter().next() {
        let mut ring = vec![start];
        let mut at = start;
        loop {
            let outs = next.get_mut(&at).expect("boundary edges form cycles");
            let to = outs.pop().expect("non-empty");
            if outs.is_empty() {
                next.remove(&at);
            }
            if to == start {
                break;
            }
            ring.push(to);
            at = to;
        }
        loops.push(simplify(ring));
    }
    loops
}

fn simplify(ring: Vec<Point>) -> Vec<Point> {
    let n = ring.len();
    (0..n)
        .filter(|&i| {
            let (p, q, r) = (ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]);
            (q.0 - p.0) * (r.1 - q.1) != (q.1 - p.1) * (r.0 - q.0)
        })
        .map(|i| ring[i])
        .collect()
}

fn path_data(loops: &[Vec<Point>], b: &BoundingBox) -> String {
    let s = &STYLE;
    let top = i64::from(b.max_row) + 1;
    let left = i64::from(b.min_col);
    let mut d = String::new();
    for ring in loops {
        for (i, &(x, y)) in ring.iter().enumerate() {
            let px = s.margin + (x - left) * s.unit;
            let py = s.margin + (top - y) * s.unit;
            let _ = write!(d, "{}{px} {py} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
    }
    d
}

/// Standalone SVG: one outlined path per piece, monominoes hatched.
pub fn render_svg(t: &Tiling) -> String {
    let s = &STYLE;
    let b = t.region().bounding_box().unwrap_or(BoundingBox {
        min_row: 0,
        min_col: 0,
        max_row: 0,
        max_col: 0,
    });
    let w = 2 * s.margin + b.width() as i64 * s.unit;
    let h = 2 * s.margin + b.height() as i64 * s.unit;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, "  <defs>");
    let _ = writeln!(
        out,
        r#"    <pattern id="hatch" width="{0}" height="{0}" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">"#,
        s.hatch_spacing
    );
    let _ = writeln!(
        out,
        r#"      <line x1="0" y1="0" x2="0" y2="{}" stroke="black" stroke-width="{}"/>"#,
        s.hatch_spacing, s.hatch_width
    );
    let _ = writeln!(out, "    </pattern>");
    let _ = writeln!(out, "  </defs>");
    let _ = writeln!(
        out,
        r#"  <g stroke="black" stroke-width="{}" stroke-linejoin="round" stroke-linecap="round">"#,
        s.stroke_width
    );
    for p in t.tetrominoes() {
        let d = path_data(&outline(p.cells()), &b);
        let _ = writeln!(out, r#"    <path class="tetromino" fill="white" d="{d}"/>"#);
    }
    for &c in t.monominoes() {
        let d = path_data(&outline(&[c]), &b);
        let _ = writeln!(out, r#"    <path class="monomino" fill="url(#hatch)" d="{d}"/>"#);
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}
