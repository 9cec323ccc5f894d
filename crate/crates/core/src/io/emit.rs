//! Text, DOT, JSON and LaTeX-style renderings of graphs, elements and tensors.
//!
//! Text output is canonical: graphs print as the DSL of their canonical
//! representative (one `graph` block per component) and combinations print in
//! key order, so isomorphic inputs give identical output.

use std::fmt::Write as _;

use num_traits::One;

use crate::algebra::{AlgebraElement, Monomial, Rational, Tensor};
use crate::canon::{canonical_form, CanonicalKey};
use crate::graph::{Direction, OrientedGraph};
use crate::io::dsl::{Document, GraphDocument, NamedGraph};
use crate::io::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Dot,
    Json,
    Latexish,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            "latexish" | "latex" => Ok(Format::Latexish),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// One-line notation for a canonical graph: `{n: s->t, ..., >v, v>}` where
/// `>v` is an incoming leg at `v` and `v>` an outgoing one; `:k` marks type `k`.
pub fn compact_key(k: &CanonicalKey) -> String {
    let d = k.data();
    let ty = |t: u32| if t == 1 { String::new() } else { format!(":{t}") };
    let mut items: Vec<String> = d.edges.iter().map(|&(s, t, k)| format!("{s}->{t}{}", ty(k))).collect();
    items.extend(d.legs.iter().map(|&(v, dir, k)| {
        if dir == 0 {
            format!(">{v}{}", ty(k))
        } else {
            format!("{v}>{}", ty(k))
        }
    }));
    if items.is_empty() {
        format!("{{{}}}", d.vertices)
    } else {
        format!("{{{}: {}}}", d.vertices, items.join(", "))
    }
}

pub fn monomial_text(m: &Monomial) -> String {
    if m.is_unit() {
        "1".into()
    } else {
        m.factors().iter().map(compact_key).collect::<Vec<_>>().join(" ")
    }
}

fn coefficient_text(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical DSL text: one block per component of the canonical representative.
pub fn canonical_text(g: &OrientedGraph) -> String {
    if g.is_empty() {
        return "1\n".into();
    }
    let (_, rep) = canonical_form(g);
    let doc = Document {
        graphs: rep
            .component_graphs()
            .iter()
            .enumerate()
            .map(|(i, c)| GraphDocument::from_graph(&format!("g{i}"), c))
            .collect(),
    };
    doc.to_text()
}

pub fn emit_graph(g: &OrientedGraph, format: Format) -> String {
    match format {
        Format::Text => canonical_text(g),
        Format::Dot => graph_dot(
            &NamedGraph {
                graph: g.clone(),
                vertex_names: Default::default(),
            },
            "G",
        ),
        Format::Json => json::graph_to_json(g),
        Format::Latexish => {
            if g.is_empty() {
                "1\n".into()
            } else {
                let m = Monomial::from_graph(g, crate::algebra::Mode::Bialgebra);
                format!("{}\n", monomial_text(&m))
            }
        }
    }
}

pub fn emit_element(x: &AlgebraElement, format: Format) -> String {
    emit_tensor(&Tensor::from_element(x), format)
}

pub fn emit_tensor(t: &Tensor, format: Format) -> String {
    match format {
        Format::Text | Format::Latexish => {
            if t.is_zero() {
                return "0\n".into();
            }
            let (times, sep) = if format == Format::Text { (" * ", " (x) ") } else { (" · ", " ⊗ ") };
            let mut s = String::new();
            for (slots, c) in t.terms() {
                let body = slots.iter().map(monomial_text).collect::<Vec<_>>().join(sep);
                let _ = writeln!(s, "{}{times}{body}", coefficient_text(c));
            }
            s
        }
        Format::Json => json::tensor_to_json(t),
        Format::Dot => tensor_dot(t),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn write_graph_body(out: &mut String, ng: &NamedGraph, prefix: &str, indent: &str) {
    let g = &ng.graph;
    for &v in g.vertices() {
        let _ = writeln!(
            out,
            "{indent}\"{prefix}{v}\" [label=\"{}\"];",
            dot_escape(&ng.vertex_name(v))
        );
    }
    for e in g.internal_edges() {
        let label = if e.etype.0 == 1 {
            String::new()
        } else {
            format!(" [label=\"{}\"]", e.etype.0)
        };
        let _ = writeln!(out, "{indent}\"{prefix}{}\" -> \"{prefix}{}\"{label};", e.source, e.target);
    }
    for e in g.external_edges() {
        let leg = format!("{prefix}x{}", e.id.0);
        let _ = writeln!(out, "{indent}\"{leg}\" [shape=point];");
        let label = if e.etype.0 == 1 {
            String::new()
        } else {
            format!(", label=\"{}\"", e.etype.0)
        };
        match e.direction {
            Direction::Incoming => {
                let _ = writeln!(out, "{indent}\"{leg}\" -> \"{prefix}{}\" [style=dashed{label}];", e.vertex);
            }
            Direction::Outgoing => {
                let _ = writeln!(out, "{indent}\"{prefix}{}\" -> \"{leg}\" [style=dashed{label}];", e.vertex);
            }
        }
    }
}

/// DOT with solid internal edges and dashed external legs ending in points.
pub fn graph_dot(ng: &NamedGraph, name: &str) -> String {
    let mut s = format!("digraph \"{}\" {{\n  node [shape=circle];\n", dot_escape(name));
    write_graph_body(&mut s, ng, "", "  ");
    s.push_str("}\n");
    s
}

fn tensor_dot(t: &Tensor) -> String {
    let mut s = String::from("digraph tensor {\n  node [shape=circle, label=\"\"];\n");
    for (i, (slots, c)) in t.terms().enumerate() {
        let coef = if c.is_one() { String::new() } else { coefficient_text(c) };
        let _ = writeln!(s, "  subgraph cluster_t{i} {{\n    label=\"{coef}\";");
        for (j, m) in slots.iter().enumerate() {
            let _ = writeln!(s, "    subgraph cluster_t{i}_s{j} {{\n      label=\"slot {j}\";");
            if m.is_unit() {
                let _ = writeln!(s, "      \"t{i}s{j}unit\" [shape=plaintext, label=\"1\"];");
            }
            for (f, k) in m.factors().iter().enumerate() {
                let ng = NamedGraph {
                    graph: k.to_graph(),
                    vertex_names: Default::default(),
                };
                write_graph_body(&mut s, &ng, &format!("t{i}s{j}f{f}"), "      ");
            }
            s.push_str("    }\n");
        }
        s.push_str("  }\n");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, VertexId};
    use crate::io::dsl::parse_graph;

    #[test]
    fn unit_prints_as_one() {
        assert_eq!(emit_graph(&OrientedGraph::empty(), Format::Text), "1\n");
    }

    #[test]
    fn canonical_text_ignores_ids() {
        let g = GraphBuilder::with_vertices(3).edge(0, 1).edge(2, 1).leg_out(2).build();
        let h = g.relabel(|v| VertexId(9 - v.0));
        assert_eq!(canonical_text(&g), canonical_text(&h));
        assert!(crate::canon::are_isomorphic(&parse_graph(&canonical_text(&g)).unwrap(), &g));
    }

    #[test]
    fn compact_notation() {
        let g = GraphBuilder::with_vertices(2).typed_edge(0, 1, 2).leg_in(0).build();
        let k = crate::canon::canonical_key(&g);
        let s = compact_key(&k);
        assert!(s.starts_with("{2: "));
        assert!(s.contains("->"));
        assert!(s.contains(":2"));
        assert_eq!(compact_key(&crate::canon::canonical_key(&GraphBuilder::with_vertices(1).build())), "{1}");
    }

    #[test]
    fn dot_marks_legs_dashed() {
        let g = GraphBuilder::with_vertices(1).leg_out(0).build();
        let dot = emit_graph(&g, Format::Dot);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("style=dashed"));
    }
}
