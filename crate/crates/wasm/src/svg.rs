//! Small SVG drawings: vertices on a circle, arrows for internal edges,
//! dashed stubs for external legs.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use hopfgraph::algebra::{Monomial, Tensor};
use hopfgraph::{Direction, OrientedGraph, VertexId};

pub const PALETTE: [&str; 8] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324",
];

const CELL: f64 = 120.0;

pub struct Style<'a> {
    pub names: Option<&'a dyn Fn(VertexId) -> String>,
    /// Fill colour index per vertex.
    pub colour: Option<&'a HashMap<VertexId, usize>>,
}

impl Style<'_> {
    pub fn plain() -> Style<'static> {
        Style {
            names: None,
            colour: None,
        }
    }
}

fn positions(g: &OrientedGraph, cx: f64, cy: f64, r: f64) -> HashMap<VertexId, (f64, f64)> {
    let n = g.vertex_count();
    g.vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if n == 1 {
                return (v, (cx, cy));
            }
            let a = -PI / 2.0 + 2.0 * PI * i as f64 / n as f64;
            (v, (cx + r * a.cos(), cy + r * a.sin()))
        })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Draws `g` inside the square of side `size` at `(x, y)`.
pub fn draw_graph(out: &mut String, g: &OrientedGraph, x: f64, y: f64, size: f64, style: &Style) {
    let (cx, cy) = (x + size / 2.0, y + size / 2.0);
    let r = if g.vertex_count() == 1 { 0.0 } else { size * 0.3 };
    let pos = positions(g, cx, cy, r);
    let vr = (size * 0.07).max(4.0);
    // parallel edges between the same pair bend apart
    let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for e in g.internal_edges() {
        let (sx, sy) = pos[&e.source];
        let (tx, ty) = pos[&e.target];
        if e.is_self_loop() {
            let k = seen.entry((e.source, e.source)).or_default();
            let lr = vr * (1.2 + 0.6 * *k as f64);
            *k += 1;
            let (dx, dy) = if r == 0.0 { (0.0, -1.0) } else { ((sx - cx) / r, (sy - cy) / r) };
            let (lx, ly) = (sx + dx * (vr + lr), sy + dy * (vr + lr));
            let _ = writeln!(
                out,
                r##"<circle cx="{lx:.1}" cy="{ly:.1}" r="{lr:.1}" fill="none" stroke="#333"/>"##
            );
            continue;
        }
        let key = if e.source < e.target { (e.source, e.target) } else { (e.target, e.source) };
        let k = seen.entry(key).or_default();
        let bend = match *k {
            0 => 0.0,
            i => (if i % 2 == 1 { 1.0 } else { -1.0 }) * (i.div_ceil(2) as f64) * size * 0.12,
        };
        *k += 1;
        let (dx, dy) = (tx - sx, ty - sy);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        // a fixed normal per unordered pair so opposite arrows bend apart too
        let sign = if e.source < e.target { 1.0 } else { -1.0 };
        let (nx, ny) = (-dy / len * sign, dx / len * sign);
        let (mx, my) = ((sx + tx) / 2.0 + nx * bend, (sy + ty) / 2.0 + ny * bend);
        let shrink = |px: f64, py: f64, qx: f64, qy: f64| {
            let (ux, uy) = (qx - px, qy - py);
            let l = (ux * ux + uy * uy).sqrt().max(1e-9);
            (px + ux / l * vr, py + uy / l * vr)
        };
        let (ax, ay) = shrink(sx, sy, mx, my);
        let (bx, by) = shrink(tx, ty, mx, my);
        let _ = writeln!(
            out,
            r##"<path d="M{ax:.1},{ay:.1} Q{mx:.1},{my:.1} {bx:.1},{by:.1}" fill="none" stroke="#333" marker-end="url(#arrow)"/>"##
        );
        if e.etype.0 != 1 {
            let _ = writeln!(out, r#"<text x="{mx:.1}" y="{my:.1}" class="type">{}</text>"#, e.etype.0);
        }
    }
    let mut legs: HashMap<VertexId, usize> = HashMap::new();
    for leg in g.external_edges() {
        let (vx, vy) = pos[&leg.vertex];
        let k = legs.entry(leg.vertex).or_default();
        let base = if r == 0.0 { -PI / 2.0 } else { (vy - cy).atan2(vx - cx) };
        let a = base + (*k as f64 - 0.5) * 0.6;
        *k += 1;
        let (ux, uy) = (a.cos(), a.sin());
        let (near, far) = (vr, vr + size * 0.16);
        let (px, py) = (vx + ux * near, vy + uy * near);
        let (qx, qy) = (vx + ux * far, vy + uy * far);
        let (from, to) = match leg.direction {
            Direction::Incoming => ((qx, qy), (px, py)),
            Direction::Outgoing => ((px, py), (qx, qy)),
        };
        let _ = writeln!(
            out,
            r##"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#777" stroke-dasharray="3,2" marker-end="url(#arrow)"/>"##,
            from.0, from.1, to.0, to.1
        );
    }
    for &v in g.vertices() {
        let (px, py) = pos[&v];
        let fill = style
            .colour
            .and_then(|c| c.get(&v))
            .map_or("#fff", |&i| PALETTE[i % PALETTE.len()]);
        let _ = writeln!(
            out,
            r##"<circle cx="{px:.1}" cy="{py:.1}" r="{vr:.1}" fill="{fill}" stroke="#000"/>"##
        );
        if let Some(names) = style.names {
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" class="name">{}</text>"#,
                px + vr + 2.0,
                py - vr,
                escape(&names(v))
            );
        }
    }
}

fn document(width: f64, height: f64, body: &str) -> String {
    format!(
        concat!(
            r##"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"##,
            "\n<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">",
            "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n",
            "<style>text {{ font: 13px sans-serif; }} .type {{ font-size: 10px; fill: #a00; }} .name {{ font-size: 11px; }}</style>\n",
            "{body}</svg>\n"
        ),
        w = width,
        h = height,
        body = body
    )
}

pub fn graph_svg(g: &OrientedGraph, style: &Style) -> String {
    let size = 260.0;
    let mut body = String::new();
    draw_graph(&mut body, g, 0.0, 0.0, size, style);
    document(size, size, &body)
}

/// One cell per factor, `1` for the unit, a product sign between factors.
fn draw_monomial(out: &mut String, m: &Monomial, x: &mut f64, y: f64) {
    if m.is_unit() {
        let _ = writeln!(out, r#"<text x="{:.1}" y="{:.1}">1</text>"#, *x + 4.0, y + CELL / 2.0);
        *x += 20.0;
        return;
    }
    for (i, k) in m.factors().iter().enumerate() {
        if i > 0 {
            *x += 4.0;
        }
        draw_graph(out, &k.to_graph(), *x, y, CELL, &Style::plain());
        *x += CELL;
    }
}

/// A tensor as rows of `coefficient  slot ⊗ slot ⊗ ...`.
pub fn tensor_svg(t: &Tensor) -> String {
    let mut body = String::new();
    let mut width: f64 = 200.0;
    let rows = t.len().max(1) as f64;
    if t.is_zero() {
        body.push_str(r#"<text x="10" y="30">0</text>"#);
    }
    for (row, (slots, c)) in t.terms().enumerate() {
        let y = row as f64 * CELL;
        let mut x = 10.0;
        let coefficient = if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        };
        let _ = writeln!(body, r#"<text x="{x:.1}" y="{:.1}">{coefficient}</text>"#, y + CELL / 2.0);
        x += 36.0;
        for (i, m) in slots.iter().enumerate() {
            if i > 0 {
                let _ = writeln!(body, r#"<text x="{:.1}" y="{:.1}">⊗</text>"#, x + 2.0, y + CELL / 2.0);
                x += 22.0;
            }
            draw_monomial(&mut body, m, &mut x, y);
        }
        width = width.max(x + 10.0);
    }
    document(width, rows * CELL, &body)
}
