//! Seeded random graphs and exhaustive iso-deduplicated families.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::{Direction, EdgeId, EdgeType, ExternalEdge, InternalEdge, OrientedGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub max_vertices: u32,
    pub max_internal_edges: u32,
    pub edge_type_count: u32,
    /// Chance, per vertex and per attempt, of attaching another external leg.
    pub external_leg_probability: f64,
    pub cycle_free_only: bool,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_vertices: 6,
            max_internal_edges: 8,
            edge_type_count: 1,
            external_leg_probability: 0.2,
            cycle_free_only: false,
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.edge_type_count == 0 {
            return Err(Error::InvalidConfig("edge_type_count must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.external_leg_probability) {
            return Err(Error::InvalidConfig(format!(
                "external_leg_probability {} is not in [0, 1]",
                self.external_leg_probability
            )));
        }
        Ok(())
    }
}

/// `count` random graphs, identical for identical configurations.
///
/// Vertex counts are uniform in `1..=max_vertices` (all graphs are empty when
/// the bound is 0). With `cycle_free_only` every edge goes forward along a
/// random vertex order, so the result is acyclic.
pub fn generate_graphs(cfg: &GeneratorConfig, count: usize) -> Result<Vec<OrientedGraph>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok((0..count).map(|_| random_graph(&mut rng, cfg)).collect())
}

fn random_graph(rng: &mut ChaCha8Rng, cfg: &GeneratorConfig) -> OrientedGraph {
    let n = if cfg.max_vertices == 0 {
        0
    } else {
        rng.random_range(1..=cfg.max_vertices)
    };
    let mut order: Vec<u32> = (0..n).collect();
    order.shuffle(rng);
    let m = rng.random_range(0..=cfg.max_internal_edges);
    let mut internal = Vec::new();
    let mut next_id = 0u32;
    for _ in 0..m {
        if n == 0 || (cfg.cycle_free_only && n < 2) {
            break;
        }
        let (s, t) = if cfg.cycle_free_only {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            (order[i.min(j) as usize], order[i.max(j) as usize])
        } else {
            (rng.random_range(0..n), rng.random_range(0..n))
        };
        internal.push(InternalEdge {
            id: EdgeId(next_id),
            source: VertexId(s),
            target: VertexId(t),
            etype: EdgeType(rng.random_range(1..=cfg.edge_type_count)),
        });
        next_id += 1;
    }
    let mut external = Vec::new();
    for v in 0..n {
        let mut legs = 0;
        while legs < 3 && rng.random_bool(cfg.external_leg_probability) {
            let direction = if rng.random_bool(0.5) {
                Direction::Incoming
            } else {
                Direction::Outgoing
            };
            external.push(ExternalEdge {
                id: EdgeId(next_id),
                vertex: VertexId(v),
                direction,
                etype: EdgeType(rng.random_range(1..=cfg.edge_type_count)),
            });
            next_id += 1;
            legs += 1;
        }
    }
    OrientedGraph::from_parts((0..n).map(VertexId).collect(), internal, external)
}

/// Bounds for [`exhaustive_graphs`]. Graphs carry no external legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExhaustiveBounds {
    pub max_vertices: usize,
    pub max_internal_edges: usize,
    pub connected_only: bool,
    pub cycle_free_only: bool,
    pub edge_type_count: u32,
}

impl ExhaustiveBounds {
    pub fn new(max_vertices: usize, max_internal_edges: usize) -> Self {
        ExhaustiveBounds {
            max_vertices,
            max_internal_edges,
            connected_only: false,
            cycle_free_only: false,
            edge_type_count: 1,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn cycle_free(mut self) -> Self {
        self.cycle_free_only = true;
        self
    }
}

fn with_edge(g: &OrientedGraph, add_vertex: bool, s: u32, t: u32, k: u32) -> OrientedGraph {
    let mut vertices = g.vertices().to_vec();
    if add_vertex {
        vertices.push(VertexId(vertices.len() as u32));
    }
    let mut internal = g.internal_edges().to_vec();
    let id = internal.iter().map(|e| e.id.0 + 1).max().unwrap_or(0);
    internal.push(InternalEdge {
        id: EdgeId(id),
        source: VertexId(s),
        target: VertexId(t),
        etype: EdgeType(k),
    });
    OrientedGraph::from_parts(vertices, internal, Vec::new())
}

/// Every graph within the bounds, one per isomorphism class, ordered by
/// (internal edge count, canonical key).
///
/// Grown edge by edge from edgeless graphs (or from a single vertex when
/// `connected_only`): every graph in these families loses an edge and stays
/// in the family, so each level is reached from the previous one.
pub fn exhaustive_graphs(b: ExhaustiveBounds) -> Vec<OrientedGraph> {
    let mut level: BTreeMap<CanonicalKey, OrientedGraph> = BTreeMap::new();
    if b.connected_only {
        if b.max_vertices >= 1 {
            let g = OrientedGraph::from_parts(vec![VertexId(0)], Vec::new(), Vec::new());
            level.insert(canonical_key(&g), g);
        }
    } else {
        for n in 0..=b.max_vertices as u32 {
            let g = OrientedGraph::from_parts((0..n).map(VertexId).collect(), Vec::new(), Vec::new());
            level.insert(canonical_key(&g), g);
        }
    }
    let mut out: Vec<OrientedGraph> = level.values().cloned().collect();
    for _ in 0..b.max_internal_edges {
        let mut next: BTreeMap<CanonicalKey, OrientedGraph> = BTreeMap::new();
        let mut offer = |h: OrientedGraph| {
            if b.cycle_free_only && !h.is_cycle_free() {
                return;
            }
            let key = canonical_key(&h);
            next.entry(key.clone()).or_insert_with(|| key.to_graph());
        };
        for g in level.values() {
            let n = g.vertex_count() as u32;
            for k in 1..=b.edge_type_count {
                for s in 0..n {
                    for t in 0..n {
                        offer(with_edge(g, false, s, t, k));
                    }
                    if b.connected_only && (n as usize) < b.max_vertices {
                        offer(with_edge(g, true, s, n, k));
                        offer(with_edge(g, true, n, s, k));
                    }
                }
            }
        }
        out.extend(next.values().cloned());
        level = next;
    }
    out
}

/// Every way of attaching at most one leg (incoming or outgoing, type 1) to
/// each vertex of each graph, deduplicated up to isomorphism and sorted by key.
pub fn with_leg_patterns(graphs: &[OrientedGraph]) -> Vec<OrientedGraph> {
    let mut seen: BTreeMap<CanonicalKey, OrientedGraph> = BTreeMap::new();
    for g in graphs {
        let n = g.vertex_count();
        let base = g.internal_edges().iter().map(|e| e.id.0 + 1).max().unwrap_or(0);
        for code in 0..3usize.pow(n as u32) {
            let mut external = g.external_edges().to_vec();
            let mut c = code;
            for (i, &v) in g.vertices().iter().enumerate() {
                let direction = match c % 3 {
                    0 => None,
                    1 => Some(Direction::Incoming),
                    _ => Some(Direction::Outgoing),
                };
                c /= 3;
                if let Some(direction) = direction {
                    external.push(ExternalEdge {
                        id: EdgeId(base + 1000 + i as u32),
                        vertex: v,
                        direction,
                        etype: EdgeType(1),
                    });
                }
            }
            let h = OrientedGraph::from_parts(g.vertices().to_vec(), g.internal_edges().to_vec(), external);
            let key = canonical_key(&h);
            seen.entry(key).or_insert(h);
        }
    }
    seen.into_values().collect()
}

/// Adds random legs to each graph; deterministic in `seed`.
pub fn decorate_legs(graphs: &[OrientedGraph], probability: f64, seed: u64) -> Vec<OrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    graphs
        .iter()
        .map(|g| {
            let mut external = g.external_edges().to_vec();
            let mut id = g
                .internal_edges()
                .iter()
                .map(|e| e.id.0)
                .chain(external.iter().map(|e| e.id.0))
                .max()
                .map_or(0, |m| m + 1);
            for &v in g.vertices() {
                if rng.random_bool(probability) {
                    let direction = if rng.random_bool(0.5) {
                        Direction::Incoming
                    } else {
                        Direction::Outgoing
                    };
                    external.push(ExternalEdge {
                        id: EdgeId(id),
                        vertex: v,
                        direction,
                        etype: EdgeType(1),
                    });
                    id += 1;
                }
            }
            OrientedGraph::from_parts(g.vertices().to_vec(), g.internal_edges().to_vec(), external)
        })
        .collect()
}

/// An isomorphic copy of `g` with vertex ids permuted, the edge lists
/// shuffled, and fresh edge ids.
pub fn scramble(g: &OrientedGraph, seed: u64) -> OrientedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut targets: Vec<u32> = (0..g.vertex_count() as u32).map(|i| i * 3 + 7).collect();
    targets.shuffle(&mut rng);
    let map: BTreeMap<VertexId, VertexId> = g
        .vertices()
        .iter()
        .zip(&targets)
        .map(|(&v, &t)| (v, VertexId(t)))
        .collect();
    let h = g.relabel(|v| map[&v]);
    let mut vertices = h.vertices().to_vec();
    vertices.shuffle(&mut rng);
    let mut internal = h.internal_edges().to_vec();
    internal.shuffle(&mut rng);
    let mut external = h.external_edges().to_vec();
    external.shuffle(&mut rng);
    let mut ids: Vec<u32> = (0..(internal.len() + external.len()) as u32).map(|i| 2 * i + 5).collect();
    ids.shuffle(&mut rng);
    for (e, &id) in internal.iter_mut().zip(&ids) {
        e.id = EdgeId(id);
    }
    for (e, &id) in external.iter_mut().zip(&ids[internal.len()..]) {
        e.id = EdgeId(id);
    }
    OrientedGraph::from_parts(vertices, internal, external)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let cfg = GeneratorConfig {
            seed: 42,
            ..Default::default()
        };
        assert_eq!(generate_graphs(&cfg, 30).unwrap(), generate_graphs(&cfg, 30).unwrap());
    }

    #[test]
    fn cycle_free_option() {
        let cfg = GeneratorConfig {
            cycle_free_only: true,
            max_internal_edges: 12,
            seed: 7,
            ..Default::default()
        };
        for g in generate_graphs(&cfg, 200).unwrap() {
            assert!(g.find_directed_cycle().is_none());
        }
    }

    #[test]
    fn zero_vertices_gives_empty_graphs() {
        let cfg = GeneratorConfig {
            max_vertices: 0,
            ..Default::default()
        };
        assert!(generate_graphs(&cfg, 5).unwrap().iter().all(|g| g.is_empty()));
    }

    #[test]
    fn invalid_configs() {
        let bad = GeneratorConfig {
            external_leg_probability: 1.5,
            ..Default::default()
        };
        assert!(matches!(generate_graphs(&bad, 1), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn small_family_sizes() {
        // edgeless on 0, 1, 2 vertices; one loop on 1 or 2 vertices; one arrow
        let all = exhaustive_graphs(ExhaustiveBounds::new(2, 1));
        assert_eq!(all.len(), 6);
        let connected = exhaustive_graphs(ExhaustiveBounds::new(2, 1).connected());
        assert_eq!(connected.len(), 3);
        assert!(connected.iter().all(|g| g.is_connected()));
        let dag = exhaustive_graphs(ExhaustiveBounds::new(3, 2).connected().cycle_free());
        assert!(dag.iter().all(|g| g.is_cycle_free() && g.is_connected()));
    }

    #[test]
    fn scramble_preserves_isomorphism_class() {
        let g = crate::graph::GraphBuilder::with_vertices(4)
            .edge(0, 1)
            .edge(1, 2)
            .edge(2, 0)
            .leg_in(3)
            .build();
        let h = scramble(&g, 3);
        assert!(h.clone().validate().is_ok());
        assert_eq!(canonical_key(&g), canonical_key(&h));
    }
}
