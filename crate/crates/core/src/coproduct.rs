//! Coalgebra structures on the graph algebra.
//!
//! [`CoverCoalgebra`] sums `γ ⊗ Γ/γ` over the covering subgraphs selected by a
//! [`CoverVariant`]; [`CutCoalgebra`] sums `Γ(V1) ⊗ Γ(V2)` over admissible cuts
//! of cycle-free graphs. Both are algebra morphisms, so they are computed on
//! connected generators and multiplied out. Results for generators are cached
//! by canonical key.
//!
//! With [`ExternalPolicy::Discard`] the algebra is that of graphs without
//! external legs: inputs are stripped of their legs before anything else.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Mode, Monomial, Rational, Tensor};
use crate::canon::{component_keys, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::partition::{
    contract_unchecked, covering_unchecked, enumerate_admissible_cuts, enumerate_covering_partitions,
    induced_subgraph, CoverVariant, ExternalPolicy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoalgebraConfig {
    pub variant: CoverVariant,
    pub mode: Mode,
    pub externals: ExternalPolicy,
}

impl Default for CoalgebraConfig {
    fn default() -> Self {
        CoalgebraConfig::new(CoverVariant::Full, Mode::Bialgebra, ExternalPolicy::Keep)
    }
}

impl CoalgebraConfig {
    pub fn new(variant: CoverVariant, mode: Mode, externals: ExternalPolicy) -> Self {
        CoalgebraConfig {
            variant,
            mode,
            externals,
        }
    }

    /// All sixteen combinations of variant, mode and external policy.
    pub fn all() -> Vec<CoalgebraConfig> {
        let mut out = Vec::new();
        for variant in CoverVariant::ALL {
            for mode in [Mode::Bialgebra, Mode::Hopf] {
                for externals in [ExternalPolicy::Keep, ExternalPolicy::Discard] {
                    out.push(CoalgebraConfig::new(variant, mode, externals));
                }
            }
        }
        out
    }

    /// Whether `g` belongs to the graph family this coalgebra is defined on:
    /// cycle-free for the poset-compatible variants, locally 1PI for the 1PI ones.
    pub fn accepts(&self, g: &OrientedGraph) -> bool {
        (!self.variant.requires_cycle_free() || g.is_cycle_free())
            && (!self.variant.requires_1pi() || g.is_locally_1pi())
    }

    pub fn label(&self) -> String {
        let v = match self.variant {
            CoverVariant::Full => "full",
            CoverVariant::Locally1PI => "1pi",
            CoverVariant::PosetCompatible => "cf",
            CoverVariant::PosetCompatibleLocally1PI => "cf1pi",
        };
        let m = match self.mode {
            Mode::Bialgebra => "bi",
            Mode::Hopf => "hopf",
        };
        let e = match self.externals {
            ExternalPolicy::Keep => "keep",
            ExternalPolicy::Discard => "discard",
        };
        format!("{v}/{m}/{e}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Grading {
    InternalEdges,
    LoopNumber,
    VertexCount,
}

pub fn key_degree(k: &CanonicalKey, grading: Grading) -> usize {
    match grading {
        Grading::InternalEdges => k.internal_count(),
        // connected: I - V + 1
        Grading::LoopNumber => k.internal_count() + 1 - k.vertex_count(),
        Grading::VertexCount => k.vertex_count(),
    }
}

pub fn degree(m: &Monomial, grading: Grading) -> usize {
    m.factors().iter().map(|k| key_degree(k, grading)).sum()
}

pub fn graph_degree(g: &OrientedGraph, grading: Grading) -> usize {
    match grading {
        Grading::InternalEdges => g.internal_count(),
        Grading::LoopNumber => g.loop_number(),
        Grading::VertexCount => g.vertex_count(),
    }
}

fn project_input(g: &OrientedGraph, externals: ExternalPolicy) -> OrientedGraph {
    match externals {
        ExternalPolicy::Keep => g.clone(),
        ExternalPolicy::Discard => g.strip_externals(),
    }
}

fn strip_monomial(m: &Monomial, externals: ExternalPolicy) -> Monomial {
    match externals {
        ExternalPolicy::Keep => m.clone(),
        ExternalPolicy::Discard if m.factors().iter().all(|k| k.data().legs.is_empty()) => m.clone(),
        ExternalPolicy::Discard => Monomial::from_factors(
            m.factors()
                .iter()
                .flat_map(|k| component_keys(&k.to_graph().strip_externals()))
                .collect(),
        ),
    }
}

type Cache<V> = RwLock<HashMap<CanonicalKey, V>>;

fn cached<V: Clone>(cache: &Cache<V>, key: &CanonicalKey, compute: impl FnOnce() -> Result<V>) -> Result<V> {
    if let Some(v) = cache.read().expect("cache lock poisoned").get(key) {
        return Ok(v.clone());
    }
    let v = compute()?;
    cache
        .write()
        .expect("cache lock poisoned")
        .entry(key.clone())
        .or_insert_with(|| v.clone());
    Ok(v)
}

/// Shared structure of the coalgebras: a coproduct on connected generators,
/// extended multiplicatively, plus a counit.
pub trait Coalgebra: Sync {
    /// Coproduct of one connected generator.
    fn coproduct_generator(&self, key: &CanonicalKey) -> Result<Tensor>;

    fn counit_monomial(&self, m: &Monomial) -> Rational;

    /// Monomial of the algebra represented by `g` (after input projection).
    fn element_of(&self, g: &OrientedGraph) -> AlgebraElement;

    /// Whether the antipode exists.
    fn is_hopf(&self) -> bool;

    fn grading(&self) -> Grading;

    fn antipode_cache(&self) -> &Cache<AlgebraElement>;

    /// Maps a monomial to its image in this algebra (legs stripped under
    /// `Discard`, residue factors dropped in Hopf mode).
    fn project_monomial(&self, m: &Monomial) -> Monomial;

    fn coproduct_monomial(&self, m: &Monomial) -> Result<Tensor> {
        let mut acc = Tensor::unit(2)?;
        for k in m.factors() {
            acc = acc.multiply(&self.coproduct_generator(k)?)?;
        }
        Ok(acc)
    }

    fn coproduct(&self, x: &AlgebraElement) -> Result<Tensor> {
        let mut out = Tensor::zero(2)?;
        for (m, c) in x.iter() {
            out.add_scaled(&self.coproduct_monomial(m)?, c)?;
        }
        Ok(out)
    }

    fn counit(&self, x: &AlgebraElement) -> Rational {
        x.iter()
            .map(|(m, c)| c * self.counit_monomial(m))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `S(Γ) = -Γ - Σ S(Γ')Γ''` over the reduced coproduct, extended as an
    /// algebra morphism. `key` must already be projected.
    fn antipode_generator(&self, key: &CanonicalKey) -> Result<AlgebraElement> {
        if !self.is_hopf() {
            return Err(Error::NotAHopfAlgebra);
        }
        if let Some(v) = self.antipode_cache().read().expect("cache lock poisoned").get(key) {
            return Ok(v.clone());
        }
        let gen = Monomial::from_factors(vec![key.clone()]);
        let unit = Monomial::unit();
        let delta = self.coproduct_generator(key)?;
        let mut s = AlgebraElement::zero();
        s.add_term(gen.clone(), -Rational::one());
        for (slots, c) in delta.terms() {
            let (left, right) = (&slots[0], &slots[1]);
            if (left == &gen && right == &unit) || (left == &unit && right == &gen) {
                continue;
            }
            let sl = self.antipode_monomial(left)?;
            s.add_scaled(&sl.multiply(&AlgebraElement::monomial(right.clone())), &-c);
        }
        self.antipode_cache()
            .write()
            .expect("cache lock poisoned")
            .insert(key.clone(), s.clone());
        Ok(s)
    }

    fn antipode_monomial(&self, m: &Monomial) -> Result<AlgebraElement> {
        if !self.is_hopf() {
            return Err(Error::NotAHopfAlgebra);
        }
        let mut acc = AlgebraElement::one();
        for k in self.project_monomial(m).factors() {
            acc = acc.multiply(&self.antipode_generator(k)?);
        }
        Ok(acc)
    }

    fn antipode(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        x.map_linear(|m| self.antipode_monomial(m))
    }

    /// Convolution `m ∘ (S ⊗ id) ∘ Δ`.
    fn antipode_left_convolution(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let d = self.coproduct(x)?;
        let mut out = AlgebraElement::zero();
        for (slots, c) in d.terms() {
            let s = self.antipode_monomial(&slots[0])?;
            out.add_scaled(&s.multiply(&AlgebraElement::monomial(slots[1].clone())), c);
        }
        Ok(out)
    }

    /// Convolution `m ∘ (id ⊗ S) ∘ Δ`.
    fn antipode_right_convolution(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        let d = self.coproduct(x)?;
        let mut out = AlgebraElement::zero();
        for (slots, c) in d.terms() {
            let s = self.antipode_monomial(&slots[1])?;
            out.add_scaled(&AlgebraElement::monomial(slots[0].clone()).multiply(&s), c);
        }
        Ok(out)
    }
}

/// The covering-subgraph coproduct `Δ(Γ) = Σ γ ⊗ Γ/γ`.
pub struct CoverCoalgebra {
    cfg: CoalgebraConfig,
    cache: Cache<Tensor>,
    antipodes: Cache<AlgebraElement>,
}

impl CoverCoalgebra {
    pub fn new(cfg: CoalgebraConfig) -> Self {
        CoverCoalgebra {
            cfg,
            cache: RwLock::default(),
            antipodes: RwLock::default(),
        }
    }

    pub fn config(&self) -> CoalgebraConfig {
        self.cfg
    }

    /// `Δ(g)` computed directly from the covering partitions of `g`.
    pub fn coproduct_graph(&self, g: &OrientedGraph) -> Result<Tensor> {
        let g = project_input(g, self.cfg.externals);
        if self.cfg.variant.requires_cycle_free() && !g.is_cycle_free() {
            return Err(Error::NotCycleFree);
        }
        self.coproduct_monomial(&Monomial::from_graph(&g, Mode::Bialgebra))
    }

    /// The sum over covering partitions without splitting into components.
    /// Agrees with [`CoverCoalgebra::coproduct_graph`]; kept for cross-checks.
    pub fn coproduct_direct(&self, g: &OrientedGraph) -> Result<Tensor> {
        let g = project_input(g, self.cfg.externals);
        let mut out = Tensor::zero(2)?;
        for p in enumerate_covering_partitions(&g, self.cfg.variant)? {
            let gamma = covering_unchecked(&g, &p, self.cfg.externals);
            let quotient = contract_unchecked(&g, &p);
            out.add_term(
                vec![
                    Monomial::from_graph(&gamma, self.cfg.mode),
                    Monomial::from_graph(&quotient, self.cfg.mode),
                ],
                Rational::one(),
            );
        }
        Ok(out)
    }
}

impl Coalgebra for CoverCoalgebra {
    fn coproduct_generator(&self, key: &CanonicalKey) -> Result<Tensor> {
        if self.cfg.mode == Mode::Hopf && key.internal_count() == 0 {
            return Tensor::unit(2);
        }
        cached(&self.cache, key, || self.coproduct_direct(&key.to_graph()))
    }

    fn counit_monomial(&self, m: &Monomial) -> Rational {
        let hit = match self.cfg.mode {
            Mode::Bialgebra => m.is_residue(),
            Mode::Hopf => m.project_hopf().is_unit(),
        };
        if hit {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn element_of(&self, g: &OrientedGraph) -> AlgebraElement {
        AlgebraElement::from_graph(&project_input(g, self.cfg.externals), self.cfg.mode)
    }

    fn is_hopf(&self) -> bool {
        self.cfg.mode == Mode::Hopf
    }

    fn grading(&self) -> Grading {
        Grading::InternalEdges
    }

    fn project_monomial(&self, m: &Monomial) -> Monomial {
        let m = strip_monomial(m, self.cfg.externals);
        match self.cfg.mode {
            Mode::Bialgebra => m,
            Mode::Hopf => m.project_hopf(),
        }
    }

    fn antipode_cache(&self) -> &Cache<AlgebraElement> {
        &self.antipodes
    }
}

/// The admissible-cut coproduct `Δ_c(Γ) = Σ Γ(V1) ⊗ Γ(V2)` on cycle-free graphs.
/// Connected and graded by the number of vertices.
pub struct CutCoalgebra {
    externals: ExternalPolicy,
    cache: Cache<Tensor>,
    antipodes: Cache<AlgebraElement>,
}

impl CutCoalgebra {
    pub fn new(externals: ExternalPolicy) -> Self {
        CutCoalgebra {
            externals,
            cache: RwLock::default(),
            antipodes: RwLock::default(),
        }
    }

    pub fn externals(&self) -> ExternalPolicy {
        self.externals
    }

    pub fn coproduct_graph(&self, g: &OrientedGraph) -> Result<Tensor> {
        let g = project_input(g, self.externals);
        if !g.is_cycle_free() {
            return Err(Error::NotCycleFree);
        }
        self.coproduct_monomial(&Monomial::from_graph(&g, Mode::Bialgebra))
    }

    pub fn coproduct_direct(&self, g: &OrientedGraph) -> Result<Tensor> {
        let g = project_input(g, self.externals);
        let mut out = Tensor::zero(2)?;
        for cut in enumerate_admissible_cuts(&g)? {
            let upper = induced_subgraph(&g, &cut.upper, self.externals)?;
            let lower = induced_subgraph(&g, &cut.lower, self.externals)?;
            out.add_term(
                vec![
                    Monomial::from_graph(&upper, Mode::Bialgebra),
                    Monomial::from_graph(&lower, Mode::Bialgebra),
                ],
                Rational::one(),
            );
        }
        Ok(out)
    }
}

impl Coalgebra for CutCoalgebra {
    fn coproduct_generator(&self, key: &CanonicalKey) -> Result<Tensor> {
        cached(&self.cache, key, || self.coproduct_direct(&key.to_graph()))
    }

    fn counit_monomial(&self, m: &Monomial) -> Rational {
        if m.is_unit() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn element_of(&self, g: &OrientedGraph) -> AlgebraElement {
        AlgebraElement::from_graph(&project_input(g, self.externals), Mode::Bialgebra)
    }

    fn is_hopf(&self) -> bool {
        true
    }

    fn grading(&self) -> Grading {
        Grading::VertexCount
    }

    fn project_monomial(&self, m: &Monomial) -> Monomial {
        strip_monomial(m, self.externals)
    }

    fn antipode_cache(&self) -> &Cache<AlgebraElement> {
        &self.antipodes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// The poset-compatible covering coproduct of the cycle-free bialgebra, read as
/// a coaction on the cut Hopf algebra. `Φ` and `Ψ` share their terms; `Ψ`
/// lists them as `Γ/γ ⊗ γ`.
pub struct Coaction {
    delta: CoverCoalgebra,
}

impl Coaction {
    pub fn new(externals: ExternalPolicy) -> Self {
        Coaction {
            delta: CoverCoalgebra::new(CoalgebraConfig::new(
                CoverVariant::PosetCompatible,
                Mode::Bialgebra,
                externals,
            )),
        }
    }

    pub fn apply_monomial(&self, m: &Monomial, side: Side) -> Result<Tensor> {
        let t = self.delta.coproduct_monomial(m)?;
        match side {
            Side::Left => Ok(t),
            Side::Right => t.permute(&[1, 0]),
        }
    }

    pub fn apply_graph(&self, g: &OrientedGraph, side: Side) -> Result<Tensor> {
        let t = self.delta.coproduct_graph(g)?;
        match side {
            Side::Left => Ok(t),
            Side::Right => t.permute(&[1, 0]),
        }
    }
}

/// `Φ(Γ)` or `Ψ(Γ)` for a cycle-free graph.
pub fn coaction(g: &OrientedGraph, side: Side, externals: ExternalPolicy) -> Result<Tensor> {
    Coaction::new(externals).apply_graph(g, side)
}

/// `a ⊗ b ⊗ c ⊗ d ↦ ac ⊗ b ⊗ d`.
pub fn m13(t: &Tensor) -> Result<Tensor> {
    if t.arity() != 4 {
        return Err(Error::ArityOutOfRange(t.arity()));
    }
    t.merge_slots(0, 2)
}

/// `a ⊗ b ⊗ c ⊗ d ↦ a ⊗ c ⊗ bd`, the mirror of [`m13`] for the right coaction.
pub fn m24(t: &Tensor) -> Result<Tensor> {
    if t.arity() != 4 {
        return Err(Error::ArityOutOfRange(t.arity()));
    }
    t.merge_slots(1, 3)?.permute(&[0, 2, 1])
}

/// One-shot covering coproduct of a graph.
pub fn coproduct(g: &OrientedGraph, cfg: CoalgebraConfig) -> Result<Tensor> {
    CoverCoalgebra::new(cfg).coproduct_graph(g)
}

/// One-shot admissible-cut coproduct of a graph.
pub fn cut_coproduct(g: &OrientedGraph, externals: ExternalPolicy) -> Result<Tensor> {
    CutCoalgebra::new(externals).coproduct_graph(g)
}

/// Counit of a covering coalgebra configuration.
pub fn counit(x: &AlgebraElement, cfg: CoalgebraConfig) -> Rational {
    CoverCoalgebra::new(cfg).counit(x)
}

/// Antipode in a covering Hopf algebra; fails in bialgebra mode.
pub fn antipode(x: &AlgebraElement, cfg: CoalgebraConfig) -> Result<AlgebraElement> {
    CoverCoalgebra::new(cfg).antipode(x)
}

/// Keys of the connected components of `g`, for callers that need generators.
pub fn generators(g: &OrientedGraph) -> Vec<CanonicalKey> {
    component_keys(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::graph::GraphBuilder;

    fn triangle() -> OrientedGraph {
        GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build()
    }

    fn cfg(variant: CoverVariant, mode: Mode, externals: ExternalPolicy) -> CoalgebraConfig {
        CoalgebraConfig::new(variant, mode, externals)
    }

    fn mono(g: &OrientedGraph) -> Monomial {
        Monomial::from_graph(g, Mode::Bialgebra)
    }

    #[test]
    fn triangle_term_counts() {
        let t = triangle();
        use CoverVariant::*;
        use ExternalPolicy::*;
        use Mode::*;
        assert_eq!(coproduct(&t, cfg(Full, Bialgebra, Keep)).unwrap().len(), 5);
        assert_eq!(coproduct(&t, cfg(Full, Hopf, Keep)).unwrap().len(), 5);
        assert_eq!(coproduct(&t, cfg(Locally1PI, Bialgebra, Keep)).unwrap().len(), 2);
        assert_eq!(coproduct(&t, cfg(PosetCompatible, Hopf, Keep)).unwrap().len(), 4);
        let k = coproduct(&t, cfg(Full, Hopf, Discard)).unwrap();
        assert_eq!(k.len(), 4);
        let edge = mono(&GraphBuilder::with_vertices(2).edge(0, 1).build());
        let d = mono(&GraphBuilder::with_vertices(2).edge(0, 1).edge(0, 1).build());
        assert_eq!(k.coefficient(&[edge, d]), rational(2));
    }

    #[test]
    fn c2_factor_absent_from_cycle_free_variant() {
        let c2 = mono(&GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build());
        let t = coproduct(&triangle(), cfg(CoverVariant::PosetCompatible, Mode::Hopf, ExternalPolicy::Keep)).unwrap();
        assert!(t.terms().all(|(s, _)| s[1] != c2));
    }

    #[test]
    fn cut_coproduct_examples() {
        let t = triangle();
        assert_eq!(cut_coproduct(&t, ExternalPolicy::Keep).unwrap().len(), 4);
        let v = GraphBuilder::with_vertices(1).build();
        let dv = cut_coproduct(&v, ExternalPolicy::Keep).unwrap();
        let mv = mono(&v);
        assert_eq!(dv.len(), 2);
        assert_eq!(dv.coefficient(&[mv.clone(), Monomial::unit()]), rational(1));
        assert_eq!(dv.coefficient(&[Monomial::unit(), mv]), rational(1));
        let c2 = GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build();
        assert_eq!(cut_coproduct(&c2, ExternalPolicy::Keep), Err(Error::NotCycleFree));
    }

    #[test]
    fn counits() {
        let bi = cfg(CoverVariant::Full, Mode::Bialgebra, ExternalPolicy::Keep);
        assert_eq!(counit(&AlgebraElement::one(), bi), rational(1));
        assert_eq!(counit(&AlgebraElement::from_graph(&triangle(), Mode::Bialgebra), bi), rational(0));
        let r = triangle().residue();
        assert_eq!(counit(&AlgebraElement::from_graph(&r, Mode::Bialgebra), bi), rational(1));
    }

    #[test]
    fn degrees() {
        let m = mono(&triangle());
        assert_eq!(degree(&m, Grading::InternalEdges), 3);
        assert_eq!(degree(&m, Grading::LoopNumber), 1);
        assert_eq!(degree(&m, Grading::VertexCount), 3);
    }

    #[test]
    fn antipodes() {
        let hopf_1pi = cfg(CoverVariant::Locally1PI, Mode::Hopf, ExternalPolicy::Keep);
        assert_eq!(antipode(&AlgebraElement::one(), hopf_1pi).unwrap(), AlgebraElement::one());
        let t = AlgebraElement::from_graph(&triangle(), Mode::Hopf);
        assert_eq!(antipode(&t, hopf_1pi).unwrap(), -&t);
        let cf = CoverCoalgebra::new(cfg(CoverVariant::PosetCompatible, Mode::Hopf, ExternalPolicy::Keep));
        assert!(cf.antipode_left_convolution(&t).unwrap().is_zero());
        let bi = cfg(CoverVariant::Full, Mode::Bialgebra, ExternalPolicy::Keep);
        assert_eq!(antipode(&t, bi), Err(Error::NotAHopfAlgebra));
    }

    #[test]
    fn coactions_and_m13() {
        let v = GraphBuilder::with_vertices(1).build();
        let phi = coaction(&v, Side::Left, ExternalPolicy::Keep).unwrap();
        assert_eq!(phi, Tensor::from_slots(vec![mono(&v), mono(&v)]).unwrap());
        assert_eq!(coaction(&triangle(), Side::Left, ExternalPolicy::Keep).unwrap().len(), 4);
        assert_eq!(
            coaction(&OrientedGraph::empty(), Side::Left, ExternalPolicy::Keep).unwrap(),
            Tensor::unit(2).unwrap()
        );
        let ms: Vec<Monomial> = (1..=4).map(|n| mono(&GraphBuilder::with_vertices(n).build())).collect();
        let t = Tensor::from_slots(ms.clone()).unwrap();
        let expect = Tensor::from_slots(vec![ms[0].mul(&ms[2]), ms[1].clone(), ms[3].clone()]).unwrap();
        assert_eq!(m13(&t).unwrap(), expect);
        let with_unit = Tensor::from_slots(vec![ms[0].clone(), ms[1].clone(), Monomial::unit(), ms[3].clone()]).unwrap();
        assert_eq!(
            m13(&with_unit).unwrap(),
            Tensor::from_slots(vec![ms[0].clone(), ms[1].clone(), ms[3].clone()]).unwrap()
        );
        assert!(matches!(m13(&Tensor::unit(3).unwrap()), Err(Error::ArityOutOfRange(3))));
    }
}
