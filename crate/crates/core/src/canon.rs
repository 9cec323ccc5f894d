//! Canonical forms of oriented graphs under isomorphism.
//!
//! Connected components are canonized independently by individualization and
//! colour refinement: vertices are coloured by their local signature, the
//! colouring is refined until stable, and ties are broken by branching on
//! each member of the first non-singleton cell. Among all leaves the
//! lexicographically smallest encoding wins. Members of a cell that are
//! interchangeable by a transposition automorphism are branched on once.
//! A disconnected graph is the concatenation of its components' canonical
//! encodings in sorted order.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::graph::{Direction, EdgeId, EdgeType, ExternalEdge, InternalEdge, OrientedGraph, VertexId};

/// Encoded graph: vertex count, sorted `(source, target, type)` triples and
/// sorted `(vertex, direction, type)` legs, all over canonical labels `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KeyData {
    pub vertices: u32,
    pub edges: Vec<(u32, u32, u32)>,
    pub legs: Vec<(u32, u8, u32)>,
}

/// An isomorphism-complete key for an oriented graph. Cheap to clone.
#[derive(Clone)]
pub struct CanonicalKey(Arc<KeyData>);

impl CanonicalKey {
    pub fn data(&self) -> &KeyData {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertices as usize
    }

    pub fn internal_count(&self) -> usize {
        self.0.edges.len()
    }

    pub fn is_empty_graph(&self) -> bool {
        self.0.vertices == 0
    }

    /// Rebuilds the canonical representative graph (vertex `i` has id `i`,
    /// internal edges come first in key order, then legs).
    pub fn to_graph(&self) -> OrientedGraph {
        decode(&self.0)
    }
}

impl PartialEq for CanonicalKey {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for CanonicalKey {}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalKey {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            Ordering::Equal
        } else {
            self.0.cmp(&other.0)
        }
    }
}

impl Hash for CanonicalKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key({})", crate::io::emit::compact_key(self))
    }
}

fn dir_code(d: Direction) -> u8 {
    match d {
        Direction::Incoming => 0,
        Direction::Outgoing => 1,
    }
}

fn dir_from_code(c: u8) -> Direction {
    if c == 0 {
        Direction::Incoming
    } else {
        Direction::Outgoing
    }
}

fn decode(k: &KeyData) -> OrientedGraph {
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        EdgeId(next - 1)
    };
    let internal = k
        .edges
        .iter()
        .map(|&(s, t, ty)| InternalEdge {
            id: fresh(),
            source: VertexId(s),
            target: VertexId(t),
            etype: EdgeType(ty),
        })
        .collect();
    let external = k
        .legs
        .iter()
        .map(|&(v, d, ty)| ExternalEdge {
            id: fresh(),
            vertex: VertexId(v),
            direction: dir_from_code(d),
            etype: EdgeType(ty),
        })
        .collect();
    OrientedGraph::from_parts((0..k.vertices).map(VertexId).collect(), internal, external)
}

/// Canonical key plus the canonical representative.
pub fn canonical_form(g: &OrientedGraph) -> (CanonicalKey, OrientedGraph) {
    let key = canonical_key(g);
    let rep = key.to_graph();
    (key, rep)
}

pub fn canonical_key(g: &OrientedGraph) -> CanonicalKey {
    let comps = g.component_graphs();
    if comps.len() <= 1 {
        return CanonicalKey(Arc::new(canonize_connected(g)));
    }
    let mut parts: Vec<KeyData> = comps.iter().map(canonize_connected).collect();
    parts.sort();
    let mut out = KeyData {
        vertices: 0,
        edges: Vec::new(),
        legs: Vec::new(),
    };
    for p in parts {
        let off = out.vertices;
        out.edges
            .extend(p.edges.iter().map(|&(s, t, ty)| (s + off, t + off, ty)));
        out.legs.extend(p.legs.iter().map(|&(v, d, ty)| (v + off, d, ty)));
        out.vertices += p.vertices;
    }
    CanonicalKey(Arc::new(out))
}

/// Canonical keys of the connected components, sorted.
pub fn component_keys(g: &OrientedGraph) -> Vec<CanonicalKey> {
    let mut keys: Vec<CanonicalKey> = g
        .component_graphs()
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| CanonicalKey(Arc::new(canonize_connected(c))))
        .collect();
    keys.sort();
    keys
}

pub fn are_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> bool {
    canonical_key(a) == canonical_key(b)
}

/// Dense local view of a graph used during the search.
struct Dense {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
    legs: Vec<(usize, u8, u32)>,
    // per vertex: (neighbour, relation, type); relation 0 = out, 1 = in, 2 = loop
    adj: Vec<Vec<(usize, u8, u32)>>,
}

impl Dense {
    fn new(g: &OrientedGraph) -> Self {
        let pos = g.position_map();
        let n = g.vertex_count();
        let edges: Vec<(usize, usize, u32)> = g
            .internal_edges()
            .iter()
            .map(|e| (pos[&e.source], pos[&e.target], e.etype.0))
            .collect();
        let legs = g
            .external_edges()
            .iter()
            .map(|e| (pos[&e.vertex], dir_code(e.direction), e.etype.0))
            .collect();
        let mut adj = vec![Vec::new(); n];
        for &(s, t, ty) in &edges {
            if s == t {
                adj[s].push((s, 2, ty));
            } else {
                adj[s].push((t, 0, ty));
                adj[t].push((s, 1, ty));
            }
        }
        Dense { n, edges, legs, adj }
    }

    fn initial_colors(&self) -> Vec<usize> {
        // (incidences, legs), each as sorted (direction, type) pairs
        type Signature = (Vec<(u8, u32)>, Vec<(u8, u32)>);
        let sigs: Vec<Signature> = (0..self.n)
            .map(|v| {
                let mut inc: Vec<(u8, u32)> = self.adj[v].iter().map(|&(_, r, ty)| (r, ty)).collect();
                inc.sort();
                let mut legs: Vec<(u8, u32)> = self
                    .legs
                    .iter()
                    .filter(|l| l.0 == v)
                    .map(|&(_, d, ty)| (d, ty))
                    .collect();
                legs.sort();
                (inc, legs)
            })
            .collect();
        rank(&sigs)
    }

    fn refine(&self, colors: &mut Vec<usize>) {
        let mut classes = count_classes(colors);
        loop {
            type Signature = (usize, Vec<(u8, u32, usize)>);
            let sigs: Vec<Signature> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<(u8, u32, usize)> =
                        self.adj[v].iter().map(|&(w, r, ty)| (r, ty, colors[w])).collect();
                    nb.sort();
                    (colors[v], nb)
                })
                .collect();
            let next = rank(&sigs);
            let next_classes = count_classes(&next);
            *colors = next;
            if next_classes == classes {
                return;
            }
            classes = next_classes;
        }
    }

    fn encode(&self, label: &[usize]) -> KeyData {
        let mut edges: Vec<(u32, u32, u32)> = self
            .edges
            .iter()
            .map(|&(s, t, ty)| (label[s] as u32, label[t] as u32, ty))
            .collect();
        edges.sort();
        let mut legs: Vec<(u32, u8, u32)> = self
            .legs
            .iter()
            .map(|&(v, d, ty)| (label[v] as u32, d, ty))
            .collect();
        legs.sort();
        KeyData {
            vertices: self.n as u32,
            edges,
            legs,
        }
    }

    /// Whether swapping `a` and `b` is an automorphism.
    fn is_twin(&self, a: usize, b: usize) -> bool {
        let swap = |x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        let mut e1 = self.edges.clone();
        let mut e2: Vec<_> = self.edges.iter().map(|&(s, t, ty)| (swap(s), swap(t), ty)).collect();
        e1.sort();
        e2.sort();
        if e1 != e2 {
            return false;
        }
        let mut l1 = self.legs.clone();
        let mut l2: Vec<_> = self.legs.iter().map(|&(v, d, ty)| (swap(v), d, ty)).collect();
        l1.sort();
        l2.sort();
        l1 == l2
    }

    fn search(&self, colors: Vec<usize>, best: &mut Option<KeyData>) {
        let mut counts = vec![0usize; self.n];
        for &c in &colors {
            counts[c] += 1;
        }
        let Some(target) = (0..self.n).find(|&c| counts[c] > 1) else {
            let enc = self.encode(&colors);
            if best.as_ref().is_none_or(|b| enc < *b) {
                *best = Some(enc);
            }
            return;
        };
        let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cell {
            if !reps.iter().any(|&r| self.is_twin(r, v)) {
                reps.push(v);
            }
        }
        for v in reps {
            let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
            next[v] = 2 * colors[v];
            let mut next = rank(&next);
            self.refine(&mut next);
            self.search(next, best);
        }
    }
}

fn rank<T: Ord + Clone>(sigs: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sigs.to_vec();
    distinct.sort();
    distinct.dedup();
    sigs.iter()
        .map(|s| distinct.binary_search(s).expect("signature present"))
        .collect()
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn canonize_connected(g: &OrientedGraph) -> KeyData {
    let d = Dense::new(g);
    if d.n == 0 {
        return KeyData {
            vertices: 0,
            edges: Vec::new(),
            legs: Vec::new(),
        };
    }
    let mut colors = d.initial_colors();
    d.refine(&mut colors);
    let mut best = None;
    d.search(colors, &mut best);
    best.expect("search visits at least one leaf")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn permuted_ids_share_a_key() {
        let t = GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build();
        let perm = [2u32, 0, 1];
        let t2 = t.relabel(|v| VertexId(perm[v.0 as usize] + 10));
        assert_eq!(canonical_key(&t), canonical_key(&t2));
    }

    #[test]
    fn types_and_orientation_matter() {
        let e1 = GraphBuilder::with_vertices(2).edge(0, 1).build();
        let e2 = GraphBuilder::with_vertices(2).typed_edge(0, 1, 2).build();
        assert_ne!(canonical_key(&e1), canonical_key(&e2));
        let double = GraphBuilder::with_vertices(2).edge(0, 1).edge(0, 1).build();
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        assert_ne!(canonical_key(&double), canonical_key(&c2));
    }

    #[test]
    fn parallel_legs_are_interchangeable() {
        let a = GraphBuilder::with_vertices(2).edge(0, 1).leg_in(0).leg_in(1).build();
        let b = GraphBuilder::with_vertices(2).edge(0, 1).leg_in(1).leg_in(0).build();
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn round_trip_through_representative() {
        let g = GraphBuilder::with_vertices(4)
            .edge(0, 1)
            .edge(2, 1)
            .typed_edge(3, 3, 2)
            .leg_out(2)
            .build();
        let (k, rep) = canonical_form(&g);
        assert_eq!(canonical_key(&rep), k);
        assert_eq!(rep.vertex_count(), 4);
    }

    #[test]
    fn large_symmetric_star_is_fast() {
        let mut b = GraphBuilder::with_vertices(12);
        for leaf in 1..12 {
            b = b.edge(0, leaf);
        }
        let star = b.build();
        let k = canonical_key(&star);
        assert_eq!(k.vertex_count(), 12);
        let iso = GraphBuilder::with_vertices(12).build();
        assert_eq!(component_keys(&iso).len(), 12);
    }
}
