//! Versioned JSON mirroring the DSL: `{"format": "hopfgraph/1", "graphs": [...]}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Tensor};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::io::dsl::{Declaration, Document, GraphDocument};

pub const FORMAT_TAG: &str = "hopfgraph/1";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonEdge {
    pub id: String,
    pub source: String,
    pub target: String,
    #[serde(rename = "type", default = "one")]
    pub etype: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonLeg {
    pub id: String,
    pub vertex: String,
    /// `"in"` or `"out"`.
    pub direction: String,
    #[serde(rename = "type", default = "one")]
    pub etype: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonGraph {
    pub name: String,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<JsonEdge>,
    #[serde(default)]
    pub externals: Vec<JsonLeg>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonDocument {
    pub format: String,
    pub graphs: Vec<JsonGraph>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonTerm {
    /// Exact rational as `"p"` or `"p/q"`.
    pub coefficient: String,
    /// One entry per tensor slot; each slot lists its factor graphs (empty for the unit).
    pub slots: Vec<Vec<JsonGraph>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct JsonTensor {
    pub format: String,
    pub kind: String,
    pub arity: usize,
    pub terms: Vec<JsonTerm>,
}

fn one() -> u32 {
    1
}

impl JsonGraph {
    fn from_document(gd: &GraphDocument) -> JsonGraph {
        let mut out = JsonGraph {
            name: gd.name.clone(),
            vertices: Vec::new(),
            edges: Vec::new(),
            externals: Vec::new(),
        };
        for d in &gd.declarations {
            match d {
                Declaration::Vertex { id } => out.vertices.push(id.clone()),
                Declaration::Edge { id, source, target, etype } => out.edges.push(JsonEdge {
                    id: id.clone(),
                    source: source.clone(),
                    target: target.clone(),
                    etype: *etype,
                }),
                Declaration::In { id, vertex, etype } | Declaration::Out { id, vertex, etype } => {
                    let direction = if matches!(d, Declaration::In { .. }) { "in" } else { "out" };
                    out.externals.push(JsonLeg {
                        id: id.clone(),
                        vertex: vertex.clone(),
                        direction: direction.into(),
                        etype: *etype,
                    })
                }
            }
        }
        out
    }

    fn to_document(&self) -> Result<GraphDocument> {
        let mut declarations: Vec<Declaration> =
            self.vertices.iter().map(|v| Declaration::Vertex { id: v.clone() }).collect();
        for e in &self.edges {
            declarations.push(Declaration::Edge {
                id: e.id.clone(),
                source: e.source.clone(),
                target: e.target.clone(),
                etype: e.etype,
            });
        }
        for l in &self.externals {
            let (id, vertex, etype) = (l.id.clone(), l.vertex.clone(), l.etype);
            declarations.push(match l.direction.as_str() {
                "in" => Declaration::In { id, vertex, etype },
                "out" => Declaration::Out { id, vertex, etype },
                other => return Err(Error::Json(format!("leg `{}`: unknown direction `{other}`", l.id))),
            });
        }
        Ok(GraphDocument {
            name: self.name.clone(),
            declarations,
        })
    }
}

fn graph_value(name: &str, g: &OrientedGraph) -> JsonGraph {
    JsonGraph::from_document(&GraphDocument::from_graph(name, g))
}

pub fn document_to_json(doc: &Document) -> String {
    let jd = JsonDocument {
        format: FORMAT_TAG.into(),
        graphs: doc.graphs.iter().map(JsonGraph::from_document).collect(),
    };
    serde_json::to_string_pretty(&jd).expect("serializable") + "\n"
}

pub fn document_from_json(text: &str) -> Result<Document> {
    let jd: JsonDocument = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if jd.format != FORMAT_TAG {
        return Err(Error::Json(format!("unsupported format `{}`", jd.format)));
    }
    Ok(Document {
        graphs: jd.graphs.iter().map(JsonGraph::to_document).collect::<Result<_>>()?,
    })
}

/// A graph as a one-graph document; the empty graph gives an empty `graphs` list.
pub fn graph_to_json(g: &OrientedGraph) -> String {
    let graphs = if g.is_empty() { Vec::new() } else { vec![GraphDocument::from_graph("g", g)] };
    document_to_json(&Document { graphs })
}

fn monomial_value(m: &Monomial) -> Vec<JsonGraph> {
    m.factors()
        .iter()
        .enumerate()
        .map(|(i, k)| graph_value(&format!("f{i}"), &k.to_graph()))
        .collect()
}

pub fn tensor_to_json(t: &Tensor) -> String {
    let terms = t
        .terms()
        .map(|(slots, c)| JsonTerm {
            coefficient: c.to_string(),
            slots: slots.iter().map(monomial_value).collect(),
        })
        .collect();
    let jt = JsonTensor {
        format: FORMAT_TAG.into(),
        kind: "tensor".into(),
        arity: t.arity(),
        terms,
    };
    serde_json::to_string_pretty(&jt).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::GraphBuilder;
    use crate::io::dsl::parse;

    #[test]
    fn document_roundtrip() {
        let doc = parse("graph a { vertex p; vertex q; edge e: p -> q type 2; in x: -> p; out y: q ->; }").unwrap();
        let back = document_from_json(&document_to_json(&doc)).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn graph_roundtrip_up_to_isomorphism() {
        let g = GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 1).leg_out(2).build();
        let s = graph_to_json(&g);
        assert!(s.contains("\"format\": \"hopfgraph/1\""));
        let h = document_from_json(&s).unwrap().to_named_graph().unwrap().graph;
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn rejects_wrong_tag() {
        assert!(matches!(
            document_from_json(r#"{"format":"other","graphs":[]}"#),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn tensor_json_has_coefficients() {
        let t = Tensor::unit(2).unwrap().scale(&crate::algebra::rational(3));
        let s = tensor_to_json(&t);
        assert!(s.contains("\"coefficient\": \"3\""));
        assert!(s.contains("\"arity\": 2"));
    }
}
