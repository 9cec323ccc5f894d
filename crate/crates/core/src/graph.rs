//! Oriented Feynman graphs: vertices, typed oriented internal edges and typed
//! oriented external legs.
//!
//! Parallel edges and self-loops are allowed. Connectivity always ignores
//! orientation and only follows internal edges; external legs never join two
//! vertices.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Edge type label. Valid labels are `1, 2, 3, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeType(pub u32);

impl Default for EdgeType {
    fn default() -> Self {
        EdgeType(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    Incoming,
    Outgoing,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Incoming => Direction::Outgoing,
            Direction::Outgoing => Direction::Incoming,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InternalEdge {
    pub id: EdgeId,
    pub source: VertexId,
    pub target: VertexId,
    pub etype: EdgeType,
}

impl InternalEdge {
    pub fn is_self_loop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExternalEdge {
    pub id: EdgeId,
    pub vertex: VertexId,
    pub direction: Direction,
    pub etype: EdgeType,
}

/// A finite oriented graph with internal edges and external legs.
///
/// The empty graph is the unit of the graph algebras.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrientedGraph {
    vertices: Vec<VertexId>,
    internal: Vec<InternalEdge>,
    external: Vec<ExternalEdge>,
}

/// Per-type half-edge counts at a vertex: entry `j - 1` counts the half-edges of type `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexTypeSignature(pub Vec<u32>);

impl OrientedGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds and validates a graph.
    pub fn new(
        vertices: Vec<VertexId>,
        internal: Vec<InternalEdge>,
        external: Vec<ExternalEdge>,
    ) -> Result<Self> {
        Self::from_parts(vertices, internal, external).validate()
    }

    /// Builds a graph without checking it. Call [`OrientedGraph::validate`] before use.
    pub fn from_parts(
        vertices: Vec<VertexId>,
        internal: Vec<InternalEdge>,
        external: Vec<ExternalEdge>,
    ) -> Self {
        OrientedGraph {
            vertices,
            internal,
            external,
        }
    }

    pub fn validate(self) -> Result<Self> {
        let mut seen = HashSet::new();
        for &v in &self.vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateId(v.to_string()));
            }
        }
        let mut edge_ids = HashSet::new();
        for e in &self.internal {
            if !edge_ids.insert(e.id) {
                return Err(Error::DuplicateId(e.id.to_string()));
            }
            for v in [e.source, e.target] {
                if !seen.contains(&v) {
                    return Err(Error::DanglingEndpoint { edge: e.id, vertex: v });
                }
            }
            if e.etype.0 == 0 {
                return Err(Error::NonPositiveType(e.id));
            }
        }
        for e in &self.external {
            if !edge_ids.insert(e.id) {
                return Err(Error::DuplicateId(e.id.to_string()));
            }
            if !seen.contains(&e.vertex) {
                return Err(Error::DanglingEndpoint {
                    edge: e.id,
                    vertex: e.vertex,
                });
            }
            if e.etype.0 == 0 {
                return Err(Error::NonPositiveType(e.id));
            }
        }
        Ok(self)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn internal_edges(&self) -> &[InternalEdge] {
        &self.internal
    }

    pub fn external_edges(&self) -> &[ExternalEdge] {
        &self.external
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn internal_count(&self) -> usize {
        self.internal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub(crate) fn position_map(&self) -> HashMap<VertexId, usize> {
        self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    pub(crate) fn next_edge_id(&self) -> u32 {
        self.internal
            .iter()
            .map(|e| e.id.0)
            .chain(self.external.iter().map(|e| e.id.0))
            .max()
            .map_or(0, |m| m + 1)
    }

    fn next_vertex_id(&self) -> u32 {
        self.vertices.iter().map(|v| v.0).max().map_or(0, |m| m + 1)
    }

    /// Disjoint union; the ids of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &OrientedGraph) -> OrientedGraph {
        let dv = self.next_vertex_id();
        let de = self.next_edge_id();
        let mut out = self.clone();
        out.vertices
            .extend(other.vertices.iter().map(|v| VertexId(v.0 + dv)));
        out.internal.extend(other.internal.iter().map(|e| InternalEdge {
            id: EdgeId(e.id.0 + de),
            source: VertexId(e.source.0 + dv),
            target: VertexId(e.target.0 + dv),
            etype: e.etype,
        }));
        out.external.extend(other.external.iter().map(|e| ExternalEdge {
            id: EdgeId(e.id.0 + de),
            vertex: VertexId(e.vertex.0 + dv),
            ..*e
        }));
        out
    }

    /// The same graph with every external leg removed.
    pub fn strip_externals(&self) -> OrientedGraph {
        OrientedGraph {
            vertices: self.vertices.clone(),
            internal: self.internal.clone(),
            external: Vec::new(),
        }
    }

    /// The same graph with every orientation (internal and external) reversed.
    pub fn reversed(&self) -> OrientedGraph {
        OrientedGraph {
            vertices: self.vertices.clone(),
            internal: self
                .internal
                .iter()
                .map(|e| InternalEdge {
                    source: e.target,
                    target: e.source,
                    ..*e
                })
                .collect(),
            external: self
                .external
                .iter()
                .map(|e| ExternalEdge {
                    direction: e.direction.reversed(),
                    ..*e
                })
                .collect(),
        }
    }

    /// Applies a vertex relabeling. `map` must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> OrientedGraph {
        OrientedGraph {
            vertices: self.vertices.iter().map(|&v| map(v)).collect(),
            internal: self
                .internal
                .iter()
                .map(|e| InternalEdge {
                    source: map(e.source),
                    target: map(e.target),
                    ..*e
                })
                .collect(),
            external: self
                .external
                .iter()
                .map(|e| ExternalEdge {
                    vertex: map(e.vertex),
                    ..*e
                })
                .collect(),
        }
    }

    /// Connected components (undirected, internal edges only). Each component is
    /// sorted, and components are ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let pos = self.position_map();
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.internal {
            uf.union(pos[&e.source], pos[&e.target]);
        }
        let mut groups: HashMap<usize, Vec<VertexId>> = HashMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            groups.entry(uf.find(i)).or_default().push(v);
        }
        let mut comps: Vec<Vec<VertexId>> = groups
            .into_values()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        comps.sort();
        comps
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Splits the graph into its connected components, each with its own
    /// internal edges and external legs.
    pub fn component_graphs(&self) -> Vec<OrientedGraph> {
        let comps = self.connected_components();
        if comps.len() == 1 {
            return vec![self.clone()];
        }
        let mut block_of = HashMap::new();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                block_of.insert(v, i);
            }
        }
        let mut out: Vec<OrientedGraph> = comps
            .iter()
            .map(|c| OrientedGraph {
                vertices: c.clone(),
                internal: Vec::new(),
                external: Vec::new(),
            })
            .collect();
        for e in &self.internal {
            out[block_of[&e.source]].internal.push(*e);
        }
        for e in &self.external {
            out[block_of[&e.vertex]].external.push(*e);
        }
        out
    }

    /// Returns the edges of some directed cycle, in path order, if one exists.
    /// A self-loop is a cycle of length one.
    pub fn find_directed_cycle(&self) -> Option<Vec<EdgeId>> {
        if let Some(e) = self.internal.iter().find(|e| e.is_self_loop()) {
            return Some(vec![e.id]);
        }
        let pos = self.position_map();
        let n = self.vertices.len();
        let mut out_edges: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        for e in &self.internal {
            out_edges[pos[&e.source]].push((pos[&e.target], e.id));
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        let mut via: Vec<Option<(usize, EdgeId)>> = vec![None; n];
        for root in 0..n {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < out_edges[v].len() {
                    let (w, eid) = out_edges[v][*next];
                    *next += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            via[w] = Some((v, eid));
                            stack.push((w, 0));
                        }
                        1 => {
                            let mut cycle = vec![eid];
                            let mut cur = v;
                            while cur != w {
                                let (prev, e) = via[cur].expect("stack vertex has a parent");
                                cycle.push(e);
                                cur = prev;
                            }
                            cycle.reverse();
                            return Some(cycle);
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    pub fn is_cycle_free(&self) -> bool {
        self.find_directed_cycle().is_none()
    }

    /// `I - V + C`, the sum of the loop numbers of the components.
    pub fn loop_number(&self) -> usize {
        let i = self.internal.len();
        let v = self.vertices.len();
        let c = self.component_count();
        assert!(i + c >= v, "forest bound violated: I={i} V={v} C={c}");
        i + c - v
    }

    /// Connected and bridgeless. A single vertex is 1PI; the empty graph is not.
    pub fn is_1pi(&self) -> bool {
        self.is_connected() && self.bridges().is_empty()
    }

    /// Every connected component is 1PI (vacuously true for the empty graph).
    pub fn is_locally_1pi(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Internal edges whose removal increases the number of components.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let pos = self.position_map();
        let n = self.vertices.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (k, e) in self.internal.iter().enumerate() {
            if e.is_self_loop() {
                continue;
            }
            let (a, b) = (pos[&e.source], pos[&e.target]);
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut found = Vec::new();
        for root in 0..n {
            if disc[root] == usize::MAX {
                bridge_dfs(root, usize::MAX, &adj, &mut disc, &mut low, &mut timer, &mut found);
            }
        }
        let mut out: Vec<EdgeId> = found.into_iter().map(|k| self.internal[k].id).collect();
        out.sort();
        out
    }

    pub fn vertex_type(&self, v: VertexId) -> Result<VertexTypeSignature> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut counts: Vec<u32> = Vec::new();
        let mut bump = |t: EdgeType, by: u32| {
            let j = t.0 as usize - 1;
            if counts.len() <= j {
                counts.resize(j + 1, 0);
            }
            counts[j] += by;
        };
        for e in &self.internal {
            let hits = u32::from(e.source == v) + u32::from(e.target == v);
            if hits > 0 {
                bump(e.etype, hits);
            }
        }
        for e in self.external.iter().filter(|e| e.vertex == v) {
            bump(e.etype, 1);
        }
        Ok(VertexTypeSignature(counts))
    }

    /// The strict order `v < w` iff there is a directed path of positive length from `v` to `w`.
    pub fn reachability_order(&self) -> Result<ReachabilityPoset> {
        if !self.is_cycle_free() {
            return Err(Error::NotCycleFree);
        }
        let pos = self.position_map();
        let n = self.vertices.len();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.internal {
            succ[pos[&e.source]].push(pos[&e.target]);
        }
        let mut less = BTreeSet::new();
        for start in 0..n {
            let mut seen = vec![false; n];
            let mut stack = succ[start].clone();
            while let Some(w) = stack.pop() {
                if !seen[w] {
                    seen[w] = true;
                    less.insert((self.vertices[start], self.vertices[w]));
                    stack.extend(succ[w].iter().copied());
                }
            }
        }
        Ok(ReachabilityPoset {
            carrier: self.vertices.clone(),
            less,
        })
    }

    /// One vertex per component, no internal edges, all legs reattached.
    pub fn residue(&self) -> OrientedGraph {
        let comps = self.connected_components();
        let mut block_of = HashMap::new();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                block_of.insert(v, VertexId(i as u32));
            }
        }
        OrientedGraph {
            vertices: (0..comps.len() as u32).map(VertexId).collect(),
            internal: Vec::new(),
            external: self
                .external
                .iter()
                .map(|e| ExternalEdge {
                    vertex: block_of[&e.vertex],
                    ..*e
                })
                .collect(),
        }
    }
}

fn bridge_dfs(
    v: usize,
    parent_edge: usize,
    adj: &[Vec<(usize, usize)>],
    disc: &mut [usize],
    low: &mut [usize],
    timer: &mut usize,
    found: &mut Vec<usize>,
) {
    disc[v] = *timer;
    low[v] = *timer;
    *timer += 1;
    for &(w, k) in &adj[v] {
        if k == parent_edge {
            continue;
        }
        if disc[w] == usize::MAX {
            bridge_dfs(w, k, adj, disc, low, timer, found);
            low[v] = low[v].min(low[w]);
            if low[w] > disc[v] {
                found.push(k);
            }
        } else {
            low[v] = low[v].min(disc[w]);
        }
    }
}

/// The reachability order on the vertices of a cycle-free graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachabilityPoset {
    carrier: Vec<VertexId>,
    less: BTreeSet<(VertexId, VertexId)>,
}

impl ReachabilityPoset {
    pub fn carrier(&self) -> &[VertexId] {
        &self.carrier
    }

    pub fn is_less(&self, v: VertexId, w: VertexId) -> bool {
        self.less.contains(&(v, w))
    }

    pub fn comparable(&self, v: VertexId, w: VertexId) -> bool {
        self.is_less(v, w) || self.is_less(w, v)
    }

    pub fn relations(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.less.iter().copied()
    }

    /// No element outside `set` lies strictly between two elements of `set`.
    pub fn is_convex(&self, set: &[VertexId]) -> bool {
        let inside: HashSet<VertexId> = set.iter().copied().collect();
        self.carrier.iter().filter(|y| !inside.contains(y)).all(|&y| {
            !(set.iter().any(|&x| self.is_less(x, y)) && set.iter().any(|&z| self.is_less(y, z)))
        })
    }

    /// Every element below a member of `set` is itself a member.
    pub fn is_down_closed(&self, set: &[VertexId]) -> bool {
        let inside: HashSet<VertexId> = set.iter().copied().collect();
        self.less
            .iter()
            .all(|(x, y)| !inside.contains(y) || inside.contains(x))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Small helper for assembling graphs from dense vertex indices.
///
/// ```
/// use hopfgraph::graph::GraphBuilder;
/// let triangle = GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build();
/// assert_eq!(triangle.loop_number(), 1);
/// ```
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: u32,
    internal: Vec<(u32, u32, u32)>,
    external: Vec<(u32, Direction, u32)>,
}

impl GraphBuilder {
    pub fn with_vertices(n: u32) -> Self {
        GraphBuilder {
            vertices: n,
            ..Default::default()
        }
    }

    pub fn edge(self, source: u32, target: u32) -> Self {
        self.typed_edge(source, target, 1)
    }

    pub fn typed_edge(mut self, source: u32, target: u32, etype: u32) -> Self {
        self.internal.push((source, target, etype));
        self
    }

    pub fn leg_in(self, vertex: u32) -> Self {
        self.leg(vertex, Direction::Incoming, 1)
    }

    pub fn leg_out(self, vertex: u32) -> Self {
        self.leg(vertex, Direction::Outgoing, 1)
    }

    pub fn leg(mut self, vertex: u32, direction: Direction, etype: u32) -> Self {
        self.external.push((vertex, direction, etype));
        self
    }

    /// Panics if the description is not a valid graph.
    pub fn build(self) -> OrientedGraph {
        self.try_build().expect("GraphBuilder produced an invalid graph")
    }

    pub fn try_build(self) -> Result<OrientedGraph> {
        let mut next = 0u32;
        let mut fresh = || {
            next += 1;
            EdgeId(next - 1)
        };
        let internal = self
            .internal
            .iter()
            .map(|&(s, t, k)| InternalEdge {
                id: fresh(),
                source: VertexId(s),
                target: VertexId(t),
                etype: EdgeType(k),
            })
            .collect();
        let external = self
            .external
            .iter()
            .map(|&(v, direction, k)| ExternalEdge {
                id: fresh(),
                vertex: VertexId(v),
                direction,
                etype: EdgeType(k),
            })
            .collect();
        OrientedGraph::new((0..self.vertices).map(VertexId).collect(), internal, external)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> OrientedGraph {
        GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build()
    }

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn validation_errors() {
        assert!(OrientedGraph::empty().validate().is_ok());
        assert!(GraphBuilder::with_vertices(1).leg_out(0).try_build().is_ok());
        let dangling = GraphBuilder::with_vertices(1).edge(0, 1).try_build();
        assert!(matches!(dangling, Err(Error::DanglingEndpoint { .. })));
        let zero = GraphBuilder::with_vertices(2).typed_edge(0, 1, 0).try_build();
        assert!(matches!(zero, Err(Error::NonPositiveType(_))));
        let dup = OrientedGraph::new(vec![v(0), v(0)], vec![], vec![]);
        assert!(matches!(dup, Err(Error::DuplicateId(_))));
        let leg = GraphBuilder::with_vertices(1).leg_in(3).try_build();
        assert!(matches!(leg, Err(Error::DanglingEndpoint { .. })));
    }

    #[test]
    fn components() {
        assert!(OrientedGraph::empty().connected_components().is_empty());
        assert_eq!(triangle().connected_components(), vec![vec![v(0), v(1), v(2)]]);
        let t_plus_d = GraphBuilder::with_vertices(4).edge(0, 1).edge(1, 2).edge(0, 2).build();
        assert_eq!(
            t_plus_d.connected_components(),
            vec![vec![v(0), v(1), v(2)], vec![v(3)]]
        );
    }

    #[test]
    fn cycles() {
        assert_eq!(triangle().find_directed_cycle(), None);
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        assert_eq!(c2.find_directed_cycle(), Some(vec![EdgeId(0), EdgeId(1)]));
        let lp = GraphBuilder::with_vertices(1).edge(0, 0).build();
        assert_eq!(lp.find_directed_cycle(), Some(vec![EdgeId(0)]));
        let c3 = GraphBuilder::with_vertices(4).edge(3, 1).edge(1, 2).edge(2, 0).edge(0, 1).build();
        let cyc = c3.find_directed_cycle().unwrap();
        assert_eq!(cyc.len(), 3);
    }

    #[test]
    fn loop_numbers() {
        assert_eq!(triangle().loop_number(), 1);
        let e = GraphBuilder::with_vertices(2).edge(0, 1).build();
        assert_eq!(e.loop_number(), 0);
        assert_eq!(triangle().disjoint_union(&e).loop_number(), 1);
    }

    #[test]
    fn one_pi() {
        let t = triangle();
        let e = GraphBuilder::with_vertices(2).edge(0, 1).build();
        assert!(t.is_1pi());
        assert!(!e.is_1pi());
        assert!(GraphBuilder::with_vertices(1).build().is_1pi());
        assert!(t.disjoint_union(&t).is_locally_1pi());
        assert!(!t.disjoint_union(&t).is_1pi());
        assert!(!t.disjoint_union(&e).is_locally_1pi());
        assert!(OrientedGraph::empty().is_locally_1pi());
        let double = GraphBuilder::with_vertices(2).edge(0, 1).edge(0, 1).build();
        assert!(double.is_1pi());
        let tadpole = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 1).build();
        assert_eq!(tadpole.bridges(), vec![EdgeId(0)]);
    }

    #[test]
    fn vertex_types() {
        let lp = GraphBuilder::with_vertices(1).edge(0, 0).build();
        assert_eq!(lp.vertex_type(v(0)).unwrap(), VertexTypeSignature(vec![2]));
        assert_eq!(triangle().vertex_type(v(0)).unwrap(), VertexTypeSignature(vec![2]));
        let iso = GraphBuilder::with_vertices(1).build();
        assert_eq!(iso.vertex_type(v(0)).unwrap(), VertexTypeSignature(vec![]));
        let mixed = GraphBuilder::with_vertices(2).typed_edge(0, 1, 3).leg(0, Direction::Incoming, 1).build();
        assert_eq!(mixed.vertex_type(v(0)).unwrap(), VertexTypeSignature(vec![1, 0, 1]));
        assert!(matches!(iso.vertex_type(v(7)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn reachability() {
        let p = triangle().reachability_order().unwrap();
        let rel: Vec<_> = p.relations().collect();
        assert_eq!(rel, vec![(v(0), v(1)), (v(0), v(2)), (v(1), v(2))]);
        let anti = GraphBuilder::with_vertices(2).build().reachability_order().unwrap();
        assert_eq!(anti.relations().count(), 0);
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        assert_eq!(c2.reachability_order(), Err(Error::NotCycleFree));
    }

    #[test]
    fn convexity() {
        let p = triangle().reachability_order().unwrap();
        assert!(!p.is_convex(&[v(0), v(2)]));
        assert!(p.is_convex(&[v(0), v(1)]));
        assert!(p.is_convex(&[v(0), v(1), v(2)]));
        assert!(p.is_down_closed(&[v(0), v(1)]));
        assert!(!p.is_down_closed(&[v(1)]));
    }

    #[test]
    fn residues() {
        let r = triangle().residue();
        assert_eq!(r.vertex_count(), 1);
        assert_eq!(r.internal_count(), 0);
        assert!(OrientedGraph::empty().residue().is_empty());
        let g = GraphBuilder::with_vertices(2).edge(0, 1).leg_out(1).build();
        let r = g.residue();
        assert_eq!(r.vertex_count(), 1);
        assert_eq!(r.external_edges().len(), 1);
        assert_eq!(r.external_edges()[0].direction, Direction::Outgoing);
    }
}
