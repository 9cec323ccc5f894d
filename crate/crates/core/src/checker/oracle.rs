//! Brute-force reference implementations, written independently of the
//! optimized algorithms they are compared against.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::One;

use crate::algebra::{Mode, Monomial, Rational, Tensor};
use crate::error::Result;
use crate::graph::{OrientedGraph, VertexId};
use crate::partition::{induced_subgraph, CoverVariant, ExternalPolicy};

/// Dense copy of a graph: vertex positions and internal edges as index pairs.
struct Dense {
    ids: Vec<VertexId>,
    edges: Vec<(usize, usize)>,
}

impl Dense {
    fn of(g: &OrientedGraph) -> Dense {
        let ids = g.vertices().to_vec();
        let at = |v: VertexId| ids.iter().position(|&w| w == v).expect("endpoint in graph");
        let edges = g.internal_edges().iter().map(|e| (at(e.source), at(e.target))).collect();
        Dense { ids, edges }
    }
}

/// Undirected connectivity of `members` using only the edges whose index is
/// not `skip` and whose ends both lie in `members`.
fn connected_within(edges: &[(usize, usize)], members: &[usize], skip: Option<usize>) -> bool {
    if members.is_empty() {
        return false;
    }
    let mut reached = vec![members[0]];
    let mut changed = true;
    while changed {
        changed = false;
        for (i, &(s, t)) in edges.iter().enumerate() {
            if Some(i) == skip || !members.contains(&s) || !members.contains(&t) {
                continue;
            }
            let (hs, ht) = (reached.contains(&s), reached.contains(&t));
            if hs != ht {
                reached.push(if hs { t } else { s });
                changed = true;
            }
        }
    }
    reached.len() == members.len()
}

fn is_1pi_within(edges: &[(usize, usize)], members: &[usize]) -> bool {
    connected_within(edges, members, None)
        && edges.iter().enumerate().all(|(i, &(s, t))| {
            s == t || !members.contains(&s) || !members.contains(&t) || connected_within(edges, members, Some(i))
        })
}

/// Connected, and stays connected after deleting any single internal edge
/// that is not a self-loop.
pub fn is_1pi(g: &OrientedGraph) -> bool {
    let d = Dense::of(g);
    let all: Vec<usize> = (0..d.ids.len()).collect();
    is_1pi_within(&d.edges, &all)
}

/// Directed reachability by repeated relaxation; `reach[a][b]` means a path
/// of length at least one from `a` to `b`.
fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut reach = vec![vec![false; n]; n];
    for &(s, t) in edges {
        reach[s][t] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                let via = reach[k].clone();
                for (r, v) in reach[i].iter_mut().zip(via) {
                    *r |= v;
                }
            }
        }
    }
    reach
}

fn has_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    let reach = closure(n, edges);
    (0..n).any(|i| reach[i][i])
}

/// All `(upper, lower)` pairs with `lower` closed under taking predecessors
/// along internal edges. Requires a cycle-free graph.
pub fn down_set_cuts(g: &OrientedGraph) -> Vec<(Vec<VertexId>, Vec<VertexId>)> {
    let d = Dense::of(g);
    let n = d.ids.len();
    let reach = closure(n, &d.edges);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let lower = |i: usize| mask >> i & 1 == 1;
        let closed = (0..n).all(|b| !lower(b) || (0..n).all(|a| !reach[a][b] || lower(a)));
        if closed {
            let mut up: Vec<VertexId> = (0..n).filter(|&i| !lower(i)).map(|i| d.ids[i]).collect();
            let mut low: Vec<VertexId> = (0..n).filter(|&i| lower(i)).map(|i| d.ids[i]).collect();
            up.sort();
            low.sort();
            out.push((up, low));
        }
    }
    out.sort();
    out
}

fn set_partitions_cached(n: usize) -> &'static [Vec<Vec<usize>>] {
    static TABLE: OnceLock<Vec<Vec<Vec<Vec<usize>>>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| (0..=6).map(|k| all_set_partitions(k).into_iter().collect()).collect());
    assert!(n < table.len(), "brute-force partitions are limited to 6 vertices");
    &table[n]
}

/// Every set partition of the vertices, from all maps `V -> {0..n-1}`.
fn all_set_partitions(n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    let total = (n as u64).pow(n as u32);
    for code in 0..total.max(1) {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut c = code;
        for v in 0..n {
            blocks[(c % n as u64) as usize].push(v);
            c /= n as u64;
        }
        let mut p: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        p.sort();
        out.insert(p);
    }
    out
}

/// Covering partitions by filtering all set partitions: connected blocks,
/// plus 1PI blocks and an acyclic contraction when the variant asks for them.
/// Blocks are returned as sorted vertex lists, partitions in sorted order.
pub fn covering_partitions(g: &OrientedGraph, variant: CoverVariant) -> Vec<Vec<Vec<VertexId>>> {
    let d = Dense::of(g);
    let n = d.ids.len();
    let mut out = Vec::new();
    for p in set_partitions_cached(n) {
        if !p.iter().all(|b| connected_within(&d.edges, b, None)) {
            continue;
        }
        if variant.requires_1pi() && !p.iter().all(|b| is_1pi_within(&d.edges, b)) {
            continue;
        }
        if variant.requires_cycle_free() {
            let block = |v: usize| p.iter().position(|b| b.contains(&v)).expect("covered");
            let quotient: Vec<(usize, usize)> = d
                .edges
                .iter()
                .map(|&(s, t)| (block(s), block(t)))
                .filter(|(a, b)| a != b)
                .collect();
            if has_cycle(p.len(), &quotient) {
                continue;
            }
        }
        let mut blocks: Vec<Vec<VertexId>> = p
            .iter()
            .map(|b| {
                let mut ids: Vec<VertexId> = b.iter().map(|&i| d.ids[i]).collect();
                ids.sort();
                ids
            })
            .collect();
        blocks.sort();
        out.push(blocks);
    }
    out.sort();
    out
}

/// `Σ Γ(V1) ⊗ Γ(V2) ⊗ Γ(V3)` over ordered tripartitions where every edge goes
/// from a lower-or-equal part into a higher-or-equal one (`V1` on top).
pub fn cut_triple_sum(g: &OrientedGraph, policy: ExternalPolicy) -> Result<Tensor> {
    let g = match policy {
        ExternalPolicy::Keep => g.clone(),
        ExternalPolicy::Discard => g.strip_externals(),
    };
    let d = Dense::of(&g);
    let n = d.ids.len();
    let mut out = Tensor::zero(3)?;
    for code in 0..3usize.pow(n as u32) {
        let mut level = vec![0usize; n];
        let mut c = code;
        for l in level.iter_mut() {
            *l = c % 3;
            c /= 3;
        }
        // level 0 is the top part V1; a source must sit at least as low as its target
        if d.edges.iter().any(|&(s, t)| level[s] < level[t]) {
            continue;
        }
        let mut slots = Vec::with_capacity(3);
        for part in 0..3 {
            let members: Vec<VertexId> = (0..n).filter(|&i| level[i] == part).map(|i| d.ids[i]).collect();
            slots.push(Monomial::from_graph(&induced_subgraph(&g, &members, policy)?, Mode::Bialgebra));
        }
        out.add_term(slots, Rational::one());
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every vertex bijection and comparing the edge and
/// leg multisets. Only sensible for small graphs.
pub fn isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count()
        || a.internal_count() != b.internal_count()
        || a.external_edges().len() != b.external_edges().len()
    {
        return false;
    }
    let ia = |v: VertexId| a.vertices().iter().position(|&w| w == v).expect("vertex");
    let ib = |v: VertexId| b.vertices().iter().position(|&w| w == v).expect("vertex");
    let edges_b: Vec<(usize, usize, u32)> = {
        let mut e: Vec<_> = b
            .internal_edges()
            .iter()
            .map(|e| (ib(e.source), ib(e.target), e.etype.0))
            .collect();
        e.sort();
        e
    };
    let legs_b: Vec<(usize, bool, u32)> = {
        let mut l: Vec<_> = b
            .external_edges()
            .iter()
            .map(|e| (ib(e.vertex), e.direction == crate::graph::Direction::Incoming, e.etype.0))
            .collect();
        l.sort();
        l
    };
    permutations(n).into_iter().any(|p| {
        let mut e: Vec<_> = a
            .internal_edges()
            .iter()
            .map(|e| (p[ia(e.source)], p[ia(e.target)], e.etype.0))
            .collect();
        e.sort();
        if e != edges_b {
            return false;
        }
        let mut l: Vec<_> = a
            .external_edges()
            .iter()
            .map(|e| (p[ia(e.vertex)], e.direction == crate::graph::Direction::Incoming, e.etype.0))
            .collect();
        l.sort();
        l == legs_b
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn bell_numbers() {
        let sizes: Vec<usize> = (0..=5).map(|n| all_set_partitions(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn small_oracles() {
        let t = GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build();
        assert!(is_1pi(&t));
        assert!(!is_1pi(&GraphBuilder::with_vertices(2).edge(0, 1).build()));
        assert_eq!(down_set_cuts(&t).len(), 4);
        assert_eq!(covering_partitions(&t, CoverVariant::Full).len(), 5);
        assert_eq!(covering_partitions(&t, CoverVariant::PosetCompatible).len(), 4);
        assert_eq!(covering_partitions(&t, CoverVariant::Locally1PI).len(), 2);
        let u = GraphBuilder::with_vertices(3).edge(1, 2).edge(1, 0).edge(0, 2).build();
        assert!(isomorphic(&t, &u));
        let a = GraphBuilder::with_vertices(2).edge(0, 1).leg_in(0).build();
        let b = GraphBuilder::with_vertices(2).edge(0, 1).leg_in(1).build();
        assert!(!isomorphic(&a, &b));
    }

    #[test]
    fn triple_sum_of_chain() {
        // a -> b: level(a) >= level(b); 6 of the 9 level pairs qualify
        let g = GraphBuilder::with_vertices(2).edge(0, 1).build();
        assert_eq!(cut_triple_sum(&g, ExternalPolicy::Discard).unwrap().len(), 6);
    }
}
