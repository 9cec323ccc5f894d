//! The graph description language.
//!
//! ```text
//! # a triangle
//! graph t {
//!   vertex a; vertex b; vertex c;
//!   edge e1: a -> b;
//!   edge e2: b -> c;
//!   edge e3: a -> c [type 2];
//!   in x: -> a;
//!   out y: c -> type 3;
//! }
//! ```
//!
//! The type annotation may be written `type K` or `[type K]`; it defaults to 1.
//! Several graphs in one document form their disjoint union. A bare `1`
//! stands for the empty graph.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, EdgeType, ExternalEdge, InternalEdge, OrientedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Declaration {
    Vertex { id: String },
    Edge { id: String, source: String, target: String, etype: u32 },
    In { id: String, vertex: String, etype: u32 },
    Out { id: String, vertex: String, etype: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub declarations: Vec<Declaration>,
}

/// A parsed file: zero or more graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub graphs: Vec<GraphDocument>,
}

/// A graph together with the names its vertices had in the source document.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub graph: OrientedGraph,
    pub vertex_names: HashMap<VertexId, String>,
}

impl NamedGraph {
    pub fn vertex_name(&self, v: VertexId) -> String {
        self.vertex_names.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Colon,
    Arrow,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Word(w) => format!("`{w}`"),
        Tok::LBrace => "`{`".into(),
        Tok::RBrace => "`}`".into(),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::Semi => "`;`".into(),
        Tok::Colon => "`:`".into(),
        Tok::Arrow => "`->`".into(),
    }
}

fn syntax(pos: &Position, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(Tok, Position)>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Position {
                line: ln + 1,
                column: i + 1,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let tok = match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ';' => Tok::Semi,
                ':' => Tok::Colon,
                '-' if chars.get(i + 1) == Some(&'>') => {
                    i += 1;
                    Tok::Arrow
                }
                c if is_word_char(c) => {
                    let start = i;
                    while i + 1 < chars.len() && is_word_char(chars[i + 1]) {
                        i += 1;
                    }
                    Tok::Word(chars[start..=i].iter().collect())
                }
                other => return Err(syntax(&pos, format!("unexpected character `{other}`"))),
            };
            out.push((tok, pos));
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Position)>,
    at: usize,
    end: Position,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Position {
        self.toks
            .get(self.at)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| self.end.clone())
    }

    fn next(&mut self, what: &str) -> Result<Tok> {
        match self.toks.get(self.at) {
            Some((t, _)) => {
                self.at += 1;
                Ok(t.clone())
            }
            None => Err(syntax(&self.end, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let pos = self.pos();
        let got = self.next(&describe(&want))?;
        if got == want {
            Ok(())
        } else {
            Err(syntax(&pos, format!("expected {}, found {}", describe(&want), describe(&got))))
        }
    }

    fn word(&mut self, what: &str) -> Result<String> {
        let pos = self.pos();
        match self.next(what)? {
            Tok::Word(w) => Ok(w),
            other => Err(syntax(&pos, format!("expected {what}, found {}", describe(&other)))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let pos = self.pos();
        let w = self.word(&format!("`{kw}`"))?;
        if w == kw {
            Ok(())
        } else {
            Err(syntax(&pos, format!("expected `{kw}`, found `{w}`")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        let pos = self.pos();
        let w = self.word("a type number")?;
        w.parse::<u32>()
            .map_err(|_| syntax(&pos, format!("`{w}` is not a nonnegative integer")))
    }

    /// Optional `type K` or `[type K]`.
    fn edge_type(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::LBracket) => {
                self.at += 1;
                self.keyword("type")?;
                let k = self.number()?;
                self.expect(Tok::RBracket)?;
                Ok(k)
            }
            Some(Tok::Word(w)) if w == "type" => {
                self.at += 1;
                self.number()
            }
            _ => Ok(1),
        }
    }

    fn graph(&mut self) -> Result<GraphDocument> {
        self.keyword("graph")?;
        let name = self.word("a graph name")?;
        self.expect(Tok::LBrace)?;
        let mut declarations = Vec::new();
        loop {
            let pos = self.pos();
            match self.next("a declaration or `}`")? {
                Tok::RBrace => break,
                Tok::Word(kw) => {
                    let decl = match kw.as_str() {
                        "vertex" => Declaration::Vertex {
                            id: self.word("a vertex name")?,
                        },
                        "edge" => {
                            let id = self.word("an edge name")?;
                            self.expect(Tok::Colon)?;
                            let source = self.word("a source vertex")?;
                            self.expect(Tok::Arrow)?;
                            let target = self.word("a target vertex")?;
                            let etype = self.edge_type()?;
                            Declaration::Edge { id, source, target, etype }
                        }
                        "in" => {
                            let id = self.word("a leg name")?;
                            self.expect(Tok::Colon)?;
                            self.expect(Tok::Arrow)?;
                            let vertex = self.word("a vertex")?;
                            let etype = self.edge_type()?;
                            Declaration::In { id, vertex, etype }
                        }
                        "out" => {
                            let id = self.word("a leg name")?;
                            self.expect(Tok::Colon)?;
                            let vertex = self.word("a vertex")?;
                            self.expect(Tok::Arrow)?;
                            let etype = self.edge_type()?;
                            Declaration::Out { id, vertex, etype }
                        }
                        other => {
                            return Err(syntax(
                                &pos,
                                format!("unknown declaration `{other}` (expected vertex, edge, in or out)"),
                            ))
                        }
                    };
                    self.expect(Tok::Semi)?;
                    declarations.push(decl);
                }
                other => return Err(syntax(&pos, format!("expected a declaration, found {}", describe(&other)))),
            }
        }
        Ok(GraphDocument { name, declarations })
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let toks = lex(text)?;
    let end = Position {
        line: text.lines().count().max(1),
        column: text.lines().last().map_or(1, |l| l.chars().count() + 1),
    };
    let mut p = Parser { toks, at: 0, end };
    let mut graphs = Vec::new();
    while let Some(t) = p.peek() {
        if *t == Tok::Word("1".into()) {
            p.at += 1;
            continue;
        }
        graphs.push(p.graph()?);
    }
    Ok(Document { graphs })
}

/// Parses and validates, returning the disjoint union of all graphs in the text.
pub fn parse_graph(text: &str) -> Result<OrientedGraph> {
    Ok(parse(text)?.to_named_graph()?.graph)
}

impl GraphDocument {
    pub fn to_named_graph(&self) -> Result<NamedGraph> {
        let mut ids: HashMap<&str, VertexId> = HashMap::new();
        let mut vertices = Vec::new();
        let mut names = HashMap::new();
        for d in &self.declarations {
            if let Declaration::Vertex { id } = d {
                let v = VertexId(vertices.len() as u32);
                if ids.insert(id.as_str(), v).is_some() {
                    return Err(Error::DuplicateId(id.clone()));
                }
                vertices.push(v);
                names.insert(v, id.clone());
            }
        }
        let mut next_unknown = vertices.len() as u32;
        let mut unknown: HashMap<String, VertexId> = HashMap::new();
        let mut resolve = |name: &str| -> VertexId {
            if let Some(&v) = ids.get(name) {
                return v;
            }
            *unknown.entry(name.to_string()).or_insert_with(|| {
                next_unknown += 1;
                VertexId(next_unknown - 1)
            })
        };
        let mut edge_names: HashMap<&str, ()> = HashMap::new();
        let mut internal = Vec::new();
        let mut external = Vec::new();
        for d in &self.declarations {
            let id = EdgeId((internal.len() + external.len()) as u32);
            match d {
                Declaration::Vertex { .. } => continue,
                Declaration::Edge { id: name, source, target, etype } => {
                    if edge_names.insert(name.as_str(), ()).is_some() {
                        return Err(Error::DuplicateId(name.clone()));
                    }
                    internal.push(InternalEdge {
                        id,
                        source: resolve(source),
                        target: resolve(target),
                        etype: EdgeType(*etype),
                    });
                }
                Declaration::In { id: name, vertex, etype } | Declaration::Out { id: name, vertex, etype } => {
                    if edge_names.insert(name.as_str(), ()).is_some() {
                        return Err(Error::DuplicateId(name.clone()));
                    }
                    let direction = if matches!(d, Declaration::In { .. }) {
                        Direction::Incoming
                    } else {
                        Direction::Outgoing
                    };
                    external.push(ExternalEdge {
                        id,
                        vertex: resolve(vertex),
                        direction,
                        etype: EdgeType(*etype),
                    });
                }
            }
        }
        let graph = OrientedGraph::from_parts(vertices, internal, external).validate()?;
        Ok(NamedGraph {
            graph,
            vertex_names: names,
        })
    }

    /// Describes `g` with generated names `v<i>`, `e<i>` and `x<i>`.
    pub fn from_graph(name: &str, g: &OrientedGraph) -> GraphDocument {
        let mut declarations: Vec<Declaration> = g
            .vertices()
            .iter()
            .map(|v| Declaration::Vertex { id: v.to_string() })
            .collect();
        for e in g.internal_edges() {
            declarations.push(Declaration::Edge {
                id: e.id.to_string(),
                source: e.source.to_string(),
                target: e.target.to_string(),
                etype: e.etype.0,
            });
        }
        for e in g.external_edges() {
            let id = format!("x{}", e.id.0);
            let vertex = e.vertex.to_string();
            declarations.push(match e.direction {
                Direction::Incoming => Declaration::In { id, vertex, etype: e.etype.0 },
                Direction::Outgoing => Declaration::Out { id, vertex, etype: e.etype.0 },
            });
        }
        GraphDocument {
            name: name.to_string(),
            declarations,
        }
    }

    pub fn to_text(&self) -> String {
        let ty = |k: u32| if k == 1 { String::new() } else { format!(" [type {k}]") };
        let mut s = format!("graph {} {{\n", self.name);
        for d in &self.declarations {
            let line = match d {
                Declaration::Vertex { id } => format!("vertex {id};"),
                Declaration::Edge { id, source, target, etype } => {
                    format!("edge {id}: {source} -> {target}{};", ty(*etype))
                }
                Declaration::In { id, vertex, etype } => format!("in {id}: -> {vertex}{};", ty(*etype)),
                Declaration::Out { id, vertex, etype } => format!("out {id}: {vertex} ->{};", ty(*etype)),
            };
            s.push_str("  ");
            s.push_str(&line);
            s.push('\n');
        }
        s.push_str("}\n");
        s
    }
}

impl Document {
    /// The disjoint union of all graphs. Vertex names are prefixed with the
    /// graph name when there is more than one graph.
    pub fn to_named_graph(&self) -> Result<NamedGraph> {
        let mut graph = OrientedGraph::empty();
        let mut vertex_names = HashMap::new();
        let prefix = self.graphs.len() > 1;
        for gd in &self.graphs {
            let part = gd.to_named_graph()?;
            let offset = graph.vertices().iter().map(|v| v.0 + 1).max().unwrap_or(0);
            for (v, n) in &part.vertex_names {
                let name = if prefix { format!("{}.{n}", gd.name) } else { n.clone() };
                vertex_names.insert(VertexId(v.0 + offset), name);
            }
            graph = graph.disjoint_union(&part.graph);
        }
        Ok(NamedGraph { graph, vertex_names })
    }

    pub fn to_text(&self) -> String {
        if self.graphs.is_empty() {
            return "1\n".into();
        }
        self.graphs.iter().map(|g| g.to_text()).collect::<Vec<_>>().join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::graph::GraphBuilder;

    #[test]
    fn triangle_parses() {
        let g = parse_graph("graph t { vertex a; vertex b; vertex c; edge e1: a->b; edge e2: b->c; edge e3: a->c; }")
            .unwrap();
        let t = GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build();
        assert!(are_isomorphic(&g, &t));
    }

    #[test]
    fn legs_and_types() {
        let g = parse_graph("graph u { vertex v; in x: -> v; }").unwrap();
        assert_eq!(g.external_edges()[0].direction, Direction::Incoming);
        let g = parse_graph("graph u {\n vertex v; vertex w;\n edge e: v -> w [type 2];\n out y: w -> type 3; # leg\n}").unwrap();
        assert_eq!(g.internal_edges()[0].etype, EdgeType(2));
        assert_eq!(g.external_edges()[0].etype, EdgeType(3));
        assert_eq!(g.external_edges()[0].direction, Direction::Outgoing);
    }

    #[test]
    fn semantic_errors_come_from_validation() {
        assert!(matches!(
            parse_graph("graph bad { edge e: a->b; }"),
            Err(Error::DanglingEndpoint { .. })
        ));
        assert!(matches!(
            parse_graph("graph bad { vertex a; vertex a; }"),
            Err(Error::DuplicateId(_))
        ));
        assert!(matches!(
            parse_graph("graph bad { vertex a; edge e: a -> a type 0; }"),
            Err(Error::NonPositiveType(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("graph g {\n  vertex a\n}") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 1)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("graph g { wibble a; }") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 11)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("graph g { vertex a; "), Err(Error::Syntax { .. })));
        assert!(matches!(parse("graph g { vertex $; }"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn several_graphs_form_a_union() {
        let g = parse_graph("graph a { vertex v; } graph b { vertex v; vertex w; edge e: v -> w; }").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.component_count(), 2);
        assert!(parse_graph("1").unwrap().is_empty());
        assert!(parse_graph("").unwrap().is_empty());
    }

    #[test]
    fn emitted_text_reparses() {
        let g = GraphBuilder::with_vertices(2).typed_edge(0, 1, 2).leg_in(0).leg(1, Direction::Outgoing, 3).build();
        let text = GraphDocument::from_graph("g", &g).to_text();
        assert!(are_isomorphic(&parse_graph(&text).unwrap(), &g));
    }
}
