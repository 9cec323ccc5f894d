//! Subgraphs `Γ(P)`, covering subgraphs as partitions into connected blocks,
//! contraction `Γ/γ`, and admissible cuts.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::are_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, ExternalEdge, OrientedGraph, UnionFind, VertexId};

/// Whether a subgraph inherits external legs (including those created by cut
/// internal edges) or drops all of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExternalPolicy {
    Keep,
    Discard,
}

/// Which covering subgraphs enter a coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoverVariant {
    Full,
    Locally1PI,
    PosetCompatible,
    PosetCompatibleLocally1PI,
}

impl CoverVariant {
    pub const ALL: [CoverVariant; 4] = [
        CoverVariant::Full,
        CoverVariant::Locally1PI,
        CoverVariant::PosetCompatible,
        CoverVariant::PosetCompatibleLocally1PI,
    ];

    pub fn requires_cycle_free(self) -> bool {
        matches!(
            self,
            CoverVariant::PosetCompatible | CoverVariant::PosetCompatibleLocally1PI
        )
    }

    pub fn requires_1pi(self) -> bool {
        matches!(
            self,
            CoverVariant::Locally1PI | CoverVariant::PosetCompatibleLocally1PI
        )
    }
}

/// A partition of a vertex set. Blocks are kept sorted and the block list is
/// sorted, so equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPartition {
    blocks: Vec<Vec<VertexId>>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<Vec<VertexId>>) -> Self {
        let mut blocks: Vec<Vec<VertexId>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort();
                b
            })
            .collect();
        blocks.sort();
        VertexPartition { blocks }
    }

    pub fn finest(g: &OrientedGraph) -> Self {
        Self::new(g.vertices().iter().map(|&v| vec![v]).collect())
    }

    pub fn components(g: &OrientedGraph) -> Self {
        Self::new(g.connected_components())
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of each vertex.
    pub fn block_map(&self) -> HashMap<VertexId, usize> {
        let mut m = HashMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                m.insert(v, i);
            }
        }
        m
    }

    /// Checks that this is a partition of `V(g)` into connected blocks.
    pub fn validate_for(&self, g: &OrientedGraph) -> Result<()> {
        let mut seen = HashSet::new();
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            for &v in b {
                if !g.contains_vertex(v) {
                    return Err(Error::NotAPartition(format!("{v} is not a vertex of the graph")));
                }
                if !seen.insert(v) {
                    return Err(Error::NotAPartition(format!("{v} appears in two blocks")));
                }
            }
        }
        if seen.len() != g.vertex_count() {
            return Err(Error::NotAPartition("some vertices are not covered".into()));
        }
        for b in &self.blocks {
            if !block_is_connected(g, b) {
                return Err(Error::BlockNotConnected(b.clone()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Whether the internal edges with both ends in `block` connect it.
pub fn block_is_connected(g: &OrientedGraph, block: &[VertexId]) -> bool {
    if block.is_empty() {
        return false;
    }
    let idx: HashMap<VertexId, usize> = block.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(block.len());
    for e in g.internal_edges() {
        if let (Some(&a), Some(&b)) = (idx.get(&e.source), idx.get(&e.target)) {
            uf.union(a, b);
        }
    }
    let root = uf.find(0);
    (1..block.len()).all(|i| uf.find(i) == root)
}

/// `Γ(P)`: the internal edges with both ends in `P`; with [`ExternalPolicy::Keep`]
/// also the legs of `Γ` at `P` and one new leg for every internal edge with
/// exactly one end in `P`.
pub fn induced_subgraph(
    g: &OrientedGraph,
    subset: &[VertexId],
    policy: ExternalPolicy,
) -> Result<OrientedGraph> {
    for &v in subset {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let inside: HashSet<VertexId> = subset.iter().copied().collect();
    Ok(induced_unchecked(g, &inside, policy))
}

// Legs created from cut edge number `k` get id `base + 2k` (source side) or
// `base + 2k + 1` (target side), so subgraphs on disjoint blocks never collide.
fn induced_unchecked(g: &OrientedGraph, inside: &HashSet<VertexId>, policy: ExternalPolicy) -> OrientedGraph {
    let vertices: Vec<VertexId> = g.vertices().iter().copied().filter(|v| inside.contains(v)).collect();
    let internal = g
        .internal_edges()
        .iter()
        .filter(|e| inside.contains(&e.source) && inside.contains(&e.target))
        .copied()
        .collect();
    let mut external = Vec::new();
    if policy == ExternalPolicy::Keep {
        external.extend(g.external_edges().iter().filter(|e| inside.contains(&e.vertex)).copied());
        let base = g.next_edge_id();
        for (k, e) in g.internal_edges().iter().enumerate() {
            let (s_in, t_in) = (inside.contains(&e.source), inside.contains(&e.target));
            if s_in && !t_in {
                external.push(ExternalEdge {
                    id: EdgeId(base + 2 * k as u32),
                    vertex: e.source,
                    direction: Direction::Outgoing,
                    etype: e.etype,
                });
            } else if t_in && !s_in {
                external.push(ExternalEdge {
                    id: EdgeId(base + 2 * k as u32 + 1),
                    vertex: e.target,
                    direction: Direction::Incoming,
                    etype: e.etype,
                });
            }
        }
    }
    OrientedGraph::from_parts(vertices, internal, external)
}

/// Whether `Γ(P)(Q) ≅ Γ(Q)` for `Q ⊆ P`.
pub fn subgraph_transitivity_check(
    g: &OrientedGraph,
    outer: &[VertexId],
    inner: &[VertexId],
    policy: ExternalPolicy,
) -> Result<bool> {
    let gp = induced_subgraph(g, outer, policy)?;
    for v in inner {
        if !outer.contains(v) {
            return Err(Error::UnknownVertex(*v));
        }
    }
    let lhs = induced_subgraph(&gp, inner, policy)?;
    let rhs = induced_subgraph(g, inner, policy)?;
    Ok(are_isomorphic(&lhs, &rhs))
}

/// The covering subgraph of a partition: the disjoint union of `Γ(P_j)`.
pub fn covering_subgraph(
    g: &OrientedGraph,
    partition: &VertexPartition,
    policy: ExternalPolicy,
) -> Result<OrientedGraph> {
    partition.validate_for(g)?;
    Ok(covering_unchecked(g, partition, policy))
}

pub(crate) fn covering_unchecked(
    g: &OrientedGraph,
    partition: &VertexPartition,
    policy: ExternalPolicy,
) -> OrientedGraph {
    let blocks = partition.block_map();
    let vertices = g.vertices().to_vec();
    let internal = g
        .internal_edges()
        .iter()
        .filter(|e| blocks[&e.source] == blocks[&e.target])
        .copied()
        .collect();
    let mut external = Vec::new();
    if policy == ExternalPolicy::Keep {
        external.extend(g.external_edges().iter().copied());
        let base = g.next_edge_id();
        for (k, e) in g.internal_edges().iter().enumerate() {
            if blocks[&e.source] != blocks[&e.target] {
                external.push(ExternalEdge {
                    id: EdgeId(base + 2 * k as u32),
                    vertex: e.source,
                    direction: Direction::Outgoing,
                    etype: e.etype,
                });
                external.push(ExternalEdge {
                    id: EdgeId(base + 2 * k as u32 + 1),
                    vertex: e.target,
                    direction: Direction::Incoming,
                    etype: e.etype,
                });
            }
        }
    }
    OrientedGraph::from_parts(vertices, internal, external)
}

/// `Γ/γ`: every block becomes one vertex (vertex id = block index); edges
/// between blocks survive, edges inside a block vanish, and legs follow their
/// vertex.
pub fn contract(g: &OrientedGraph, partition: &VertexPartition) -> Result<OrientedGraph> {
    partition.validate_for(g)?;
    Ok(contract_unchecked(g, partition))
}

pub(crate) fn contract_unchecked(g: &OrientedGraph, partition: &VertexPartition) -> OrientedGraph {
    let blocks = partition.block_map();
    let b = |v: &VertexId| VertexId(blocks[v] as u32);
    let vertices = (0..partition.len() as u32).map(VertexId).collect();
    let internal = g
        .internal_edges()
        .iter()
        .filter(|e| blocks[&e.source] != blocks[&e.target])
        .map(|e| crate::graph::InternalEdge {
            source: b(&e.source),
            target: b(&e.target),
            ..*e
        })
        .collect();
    let external = g
        .external_edges()
        .iter()
        .map(|e| ExternalEdge {
            vertex: b(&e.vertex),
            ..*e
        })
        .collect();
    OrientedGraph::from_parts(vertices, internal, external)
}

/// The contraction of a cycle-free graph is cycle-free.
pub fn is_poset_compatible(g: &OrientedGraph, partition: &VertexPartition) -> Result<bool> {
    if !g.is_cycle_free() {
        return Err(Error::NotCycleFree);
    }
    Ok(contract(g, partition)?.is_cycle_free())
}

/// Every block of `fine` lies inside a block of `coarse`.
pub fn refines(fine: &VertexPartition, coarse: &VertexPartition) -> bool {
    let coarse_of = coarse.block_map();
    fine.blocks().iter().all(|b| {
        let first = coarse_of.get(&b[0]);
        first.is_some() && b.iter().all(|v| coarse_of.get(v) == first)
    })
}

/// `γ/δ` read on the vertices of `Γ/δ`: block `j` of `fine` (vertex `j` of the
/// contraction) goes to the block of `coarse` that contains it.
pub fn quotient_partition(coarse: &VertexPartition, fine: &VertexPartition) -> VertexPartition {
    let coarse_of = coarse.block_map();
    let mut groups: Vec<Vec<VertexId>> = vec![Vec::new(); coarse.len()];
    for (j, b) in fine.blocks().iter().enumerate() {
        groups[coarse_of[&b[0]]].push(VertexId(j as u32));
    }
    VertexPartition::new(groups.into_iter().filter(|g| !g.is_empty()).collect())
}

/// Inverse of [`quotient_partition`]: expands a partition of the vertices of
/// `Γ/δ` back to a partition of `V(Γ)`.
pub fn lift_partition(on_quotient: &VertexPartition, fine: &VertexPartition) -> VertexPartition {
    VertexPartition::new(
        on_quotient
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .flat_map(|j| fine.blocks()[j.0 as usize].iter().copied())
                    .collect()
            })
            .collect(),
    )
}

fn satisfies(g: &OrientedGraph, p: &VertexPartition, variant: CoverVariant) -> bool {
    if variant.requires_1pi()
        && !p
            .blocks()
            .iter()
            .all(|b| induced_unchecked(g, &b.iter().copied().collect(), ExternalPolicy::Discard).is_1pi())
    {
        return false;
    }
    if variant.requires_cycle_free() && !contract_unchecked(g, p).is_cycle_free() {
        return false;
    }
    true
}

/// All partitions of `V(g)` into connected blocks satisfying `variant`,
/// sorted lexicographically by their sorted blocks.
pub fn enumerate_covering_partitions(
    g: &OrientedGraph,
    variant: CoverVariant,
) -> Result<Vec<VertexPartition>> {
    if variant.requires_cycle_free() && !g.is_cycle_free() {
        return Err(Error::NotCycleFree);
    }
    // Blocks never straddle components, so partitions factor over components.
    let per_component: Vec<Vec<Vec<Vec<VertexId>>>> = g
        .connected_components()
        .iter()
        .map(|c| connected_set_partitions(g, c))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<VertexId>> = Vec::new();
    product(&per_component, 0, &mut chosen, &mut |blocks| {
        let p = VertexPartition::new(blocks.to_vec());
        if satisfies(g, &p, variant) {
            out.push(p);
        }
    });
    out.sort();
    Ok(out)
}

fn product(
    options: &[Vec<Vec<Vec<VertexId>>>],
    i: usize,
    chosen: &mut Vec<Vec<VertexId>>,
    emit: &mut dyn FnMut(&[Vec<VertexId>]),
) {
    if i == options.len() {
        emit(chosen);
        return;
    }
    for blocks in &options[i] {
        let mark = chosen.len();
        chosen.extend(blocks.iter().cloned());
        product(options, i + 1, chosen, emit);
        chosen.truncate(mark);
    }
}

/// Set partitions of `verts` whose blocks are connected in `g`, generated as
/// restricted growth strings.
fn connected_set_partitions(g: &OrientedGraph, verts: &[VertexId]) -> Vec<Vec<Vec<VertexId>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    rgs(g, verts, 0, &mut blocks, &mut out);
    out
}

fn rgs(
    g: &OrientedGraph,
    verts: &[VertexId],
    i: usize,
    blocks: &mut Vec<Vec<VertexId>>,
    out: &mut Vec<Vec<Vec<VertexId>>>,
) {
    if i == verts.len() {
        if blocks.iter().all(|b| block_is_connected(g, b)) {
            out.push(blocks.clone());
        }
        return;
    }
    for j in 0..blocks.len() {
        blocks[j].push(verts[i]);
        rgs(g, verts, i + 1, blocks, out);
        blocks[j].pop();
    }
    blocks.push(vec![verts[i]]);
    rgs(g, verts, i + 1, blocks, out);
    blocks.pop();
}

/// An ordered bipartition `(V1, V2)` with `v2 < v1` for every comparable cross pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleCut {
    pub upper: Vec<VertexId>,
    pub lower: Vec<VertexId>,
}

impl fmt::Display for AdmissibleCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &[VertexId]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "V1={{{}}} V2={{{}}}", show(&self.upper), show(&self.lower))
    }
}

/// All admissible cuts, built by deciding vertices in topological order: a
/// vertex may join the lower part only when all its direct predecessors did.
/// Sorted by `(upper, lower)`.
pub fn enumerate_admissible_cuts(g: &OrientedGraph) -> Result<Vec<AdmissibleCut>> {
    let order = topological_order(g).ok_or(Error::NotCycleFree)?;
    let pos = g.position_map();
    let n = g.vertex_count();
    let mut preds: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in g.internal_edges() {
        preds[pos[&e.target]].insert(pos[&e.source]);
    }
    let mut in_lower = vec![false; n];
    let mut out = Vec::new();
    cut_search(g, &order, 0, &preds, &mut in_lower, &mut out);
    out.sort();
    Ok(out)
}

fn cut_search(
    g: &OrientedGraph,
    order: &[usize],
    i: usize,
    preds: &[BTreeSet<usize>],
    in_lower: &mut [bool],
    out: &mut Vec<AdmissibleCut>,
) {
    if i == order.len() {
        let (mut upper, mut lower) = (Vec::new(), Vec::new());
        for (k, &v) in g.vertices().iter().enumerate() {
            if in_lower[k] {
                lower.push(v);
            } else {
                upper.push(v);
            }
        }
        upper.sort();
        lower.sort();
        out.push(AdmissibleCut { upper, lower });
        return;
    }
    let v = order[i];
    in_lower[v] = false;
    cut_search(g, order, i + 1, preds, in_lower, out);
    if preds[v].iter().all(|&p| in_lower[p]) {
        in_lower[v] = true;
        cut_search(g, order, i + 1, preds, in_lower, out);
        in_lower[v] = false;
    }
}

/// Kahn's algorithm over dense indices; `None` when there is a directed cycle.
pub(crate) fn topological_order(g: &OrientedGraph) -> Option<Vec<usize>> {
    let pos = g.position_map();
    let n = g.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.internal_edges() {
        let (s, t) = (pos[&e.source], pos[&e.target]);
        succ[s].push(t);
        indeg[t] += 1;
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::graph::GraphBuilder;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn triangle() -> OrientedGraph {
        GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build()
    }

    fn part(blocks: &[&[u32]]) -> VertexPartition {
        VertexPartition::new(blocks.iter().map(|b| b.iter().map(|&i| v(i)).collect()).collect())
    }

    #[test]
    fn induced_subgraph_keep_and_discard() {
        let t = triangle();
        let keep = induced_subgraph(&t, &[v(1), v(2)], ExternalPolicy::Keep).unwrap();
        let expect = GraphBuilder::with_vertices(2).edge(0, 1).leg_in(0).leg_in(1).build();
        assert!(are_isomorphic(&keep, &expect));
        let discard = induced_subgraph(&t, &[v(1), v(2)], ExternalPolicy::Discard).unwrap();
        assert!(are_isomorphic(&discard, &GraphBuilder::with_vertices(2).edge(0, 1).build()));
        assert!(induced_subgraph(&t, &[], ExternalPolicy::Keep).unwrap().is_empty());
        assert!(matches!(
            induced_subgraph(&t, &[v(9)], ExternalPolicy::Keep),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn subgraph_transitivity_examples() {
        let t = triangle();
        let all = [v(0), v(1), v(2)];
        assert!(subgraph_transitivity_check(&t, &all, &[v(1), v(2)], ExternalPolicy::Keep).unwrap());
        assert!(subgraph_transitivity_check(&t, &[v(1), v(2)], &[v(2)], ExternalPolicy::Keep).unwrap());
        assert!(subgraph_transitivity_check(&t, &all, &[], ExternalPolicy::Keep).unwrap());
    }

    #[test]
    fn covering_subgraphs() {
        let t = triangle();
        let finest = covering_subgraph(&t, &VertexPartition::finest(&t), ExternalPolicy::Keep).unwrap();
        assert_eq!(finest.internal_count(), 0);
        assert_eq!(finest.external_edges().len(), 6);
        let whole = covering_subgraph(&t, &part(&[&[0, 1, 2]]), ExternalPolicy::Keep).unwrap();
        assert!(are_isomorphic(&whole, &t));
        let ac_b = covering_subgraph(&t, &part(&[&[0, 2], &[1]]), ExternalPolicy::Keep).unwrap();
        let expect = GraphBuilder::with_vertices(3)
            .edge(0, 1)
            .leg_out(0)
            .leg_in(1)
            .leg_in(2)
            .leg_out(2)
            .build();
        assert!(are_isomorphic(&ac_b, &expect));
    }

    #[test]
    fn partition_errors() {
        let path = GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).build();
        assert!(matches!(
            contract(&path, &part(&[&[0, 2], &[1]])),
            Err(Error::BlockNotConnected(_))
        ));
        assert!(matches!(
            contract(&path, &part(&[&[0, 1]])),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            contract(&path, &part(&[&[0, 1], &[1, 2]])),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn contractions() {
        let t = triangle();
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        let d = GraphBuilder::with_vertices(2).edge(0, 1).edge(0, 1).build();
        assert!(are_isomorphic(&contract(&t, &part(&[&[0, 2], &[1]])).unwrap(), &c2));
        assert!(are_isomorphic(&contract(&t, &part(&[&[0, 1], &[2]])).unwrap(), &d));
        assert!(are_isomorphic(&contract(&t, &VertexPartition::finest(&t)).unwrap(), &t));
        let legged = GraphBuilder::with_vertices(3).edge(0, 1).edge(2, 1).leg_out(2).build();
        let res = contract(&legged, &VertexPartition::components(&legged)).unwrap();
        assert_eq!(canonical_key(&res), canonical_key(&legged.residue()));
    }

    #[test]
    fn poset_compatibility() {
        let t = triangle();
        assert!(!is_poset_compatible(&t, &part(&[&[0, 2], &[1]])).unwrap());
        assert!(is_poset_compatible(&t, &part(&[&[0, 1], &[2]])).unwrap());
        assert!(is_poset_compatible(&t, &VertexPartition::finest(&t)).unwrap());
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        assert_eq!(
            is_poset_compatible(&c2, &VertexPartition::finest(&c2)),
            Err(Error::NotCycleFree)
        );
    }

    #[test]
    fn triangle_cover_counts() {
        let t = triangle();
        assert_eq!(enumerate_covering_partitions(&t, CoverVariant::Full).unwrap().len(), 5);
        let l1pi = enumerate_covering_partitions(&t, CoverVariant::Locally1PI).unwrap();
        assert_eq!(l1pi, vec![part(&[&[0], &[1], &[2]]), part(&[&[0, 1, 2]])]);
        assert_eq!(
            enumerate_covering_partitions(&t, CoverVariant::PosetCompatible).unwrap().len(),
            4
        );
        assert_eq!(
            enumerate_covering_partitions(&t, CoverVariant::PosetCompatibleLocally1PI).unwrap().len(),
            2
        );
    }

    #[test]
    fn refinement() {
        let t = triangle();
        let finest = VertexPartition::finest(&t);
        let ab_c = part(&[&[0, 1], &[2]]);
        let ac_b = part(&[&[0, 2], &[1]]);
        assert!(refines(&finest, &ab_c));
        assert!(!refines(&ab_c, &ac_b));
        assert!(refines(&ab_c, &ab_c));
        let q = quotient_partition(&part(&[&[0, 1, 2]]), &ab_c);
        assert_eq!(q, part(&[&[0, 1]]));
        assert_eq!(lift_partition(&q, &ab_c), part(&[&[0, 1, 2]]));
    }

    #[test]
    fn admissible_cuts() {
        let cuts = enumerate_admissible_cuts(&triangle()).unwrap();
        let pairs: Vec<(Vec<VertexId>, Vec<VertexId>)> =
            cuts.into_iter().map(|c| (c.upper, c.lower)).collect();
        assert_eq!(
            pairs,
            vec![
                (vec![], vec![v(0), v(1), v(2)]),
                (vec![v(0), v(1), v(2)], vec![]),
                (vec![v(1), v(2)], vec![v(0)]),
                (vec![v(2)], vec![v(0), v(1)]),
            ]
        );
        let single = GraphBuilder::with_vertices(1).build();
        assert_eq!(enumerate_admissible_cuts(&single).unwrap().len(), 2);
        let anti = GraphBuilder::with_vertices(2).build();
        assert_eq!(enumerate_admissible_cuts(&anti).unwrap().len(), 4);
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        assert_eq!(enumerate_admissible_cuts(&c2), Err(Error::NotCycleFree));
    }

    #[test]
    fn hexagon_converse_failure() {
        let h6 = GraphBuilder::with_vertices(6)
            .edge(0, 1)
            .edge(2, 1)
            .edge(2, 3)
            .edge(4, 3)
            .edge(4, 5)
            .edge(0, 5)
            .build();
        let p = part(&[&[1, 2], &[3, 4], &[5, 0]]);
        let order = h6.reachability_order().unwrap();
        assert!(p.blocks().iter().all(|b| order.is_convex(b) && block_is_connected(&h6, b)));
        let contracted = contract(&h6, &p).unwrap();
        assert_eq!(contracted.find_directed_cycle().map(|c| c.len()), Some(3));
        assert!(!is_poset_compatible(&h6, &p).unwrap());
    }
}
