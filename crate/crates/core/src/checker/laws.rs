//! The law registry. Each law looks at one corpus element (and, for binary
//! laws, its successors in the corpus) and reports pass, skip or witnesses.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::generate::scramble;
use super::{oracle, CheckReport, Witness};
use crate::algebra::{rational, AlgebraElement, Mode, Monomial, Rational, Tensor};
use crate::canon::{canonical_key, component_keys};
use crate::coproduct::{
    degree, graph_degree, m13, m24, Coaction, CoalgebraConfig, Coalgebra, CoverCoalgebra, CutCoalgebra, Grading,
    Side,
};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::io::dsl::{parse_graph, GraphDocument};
use crate::io::emit::{canonical_text, compact_key, emit_element, emit_tensor, Format};
use crate::io::json::{document_from_json, graph_to_json};
use crate::partition::{
    contract, enumerate_admissible_cuts, enumerate_covering_partitions, induced_subgraph, is_poset_compatible,
    lift_partition, quotient_partition, refines, subgraph_transitivity_check, CoverVariant, ExternalPolicy,
    VertexPartition,
};

struct Ctx {
    cfg: CoalgebraConfig,
    cover: CoverCoalgebra,
    cut: CutCoalgebra,
    coaction: Coaction,
}

impl Ctx {
    fn new(cfg: CoalgebraConfig) -> Ctx {
        Ctx {
            cfg,
            cover: CoverCoalgebra::new(cfg),
            cut: CutCoalgebra::new(cfg.externals),
            coaction: Coaction::new(cfg.externals),
        }
    }

    fn project(&self, g: &OrientedGraph) -> OrientedGraph {
        match self.cfg.externals {
            ExternalPolicy::Keep => g.clone(),
            ExternalPolicy::Discard => g.strip_externals(),
        }
    }
}

#[derive(Default)]
struct Outcome {
    ran: bool,
    failures: Vec<Witness>,
    confirmations: Vec<Witness>,
}

impl Outcome {
    fn skip() -> Outcome {
        Outcome::default()
    }

    fn ran() -> Outcome {
        Outcome {
            ran: true,
            ..Default::default()
        }
    }

    fn fail(&mut self, w: Witness) {
        self.failures.push(w);
    }

    fn check(&mut self, ok: bool, graphs: &[&OrientedGraph], expected: impl FnOnce() -> String, actual: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(Witness::new(graphs, expected(), actual()));
        }
    }

    fn tensors(&mut self, graphs: &[&OrientedGraph], expected: &Tensor, actual: &Tensor) {
        if expected != actual {
            self.failures.push(Witness::new(
                graphs,
                emit_tensor(expected, Format::Text),
                emit_tensor(actual, Format::Text),
            ));
        }
    }

    fn elements(&mut self, graphs: &[&OrientedGraph], expected: &AlgebraElement, actual: &AlgebraElement) {
        if expected != actual {
            self.failures.push(Witness::new(
                graphs,
                emit_element(expected, Format::Text),
                emit_element(actual, Format::Text),
            ));
        }
    }

    /// For inputs where the identity is known not to hold: the instance is not
    /// counted and its discrepancies become confirmations.
    fn excluded(self) -> Outcome {
        let mut confirmations = self.confirmations;
        confirmations.extend(self.failures);
        Outcome {
            ran: false,
            failures: Vec::new(),
            confirmations,
        }
    }

    fn error(graphs: &[&OrientedGraph], e: Error) -> Outcome {
        let mut o = Outcome::ran();
        o.fail(Witness::new(graphs, "a result", format!("error: {e}")));
        o
    }
}

/// Turns an `Err` raised inside a law body into a failure witness.
fn guarded(g: &OrientedGraph, body: impl FnOnce() -> Result<Outcome>) -> Outcome {
    body().unwrap_or_else(|e| Outcome::error(&[g], e))
}

type LawFn = fn(&Ctx, &[OrientedGraph], usize) -> Outcome;

/// A registered law.
#[derive(Clone, Copy)]
pub struct LawInfo {
    pub name: &'static str,
    /// The part of the library whose invariant this is.
    pub module: &'static str,
    pub summary: &'static str,
    /// Whether the result depends on the coalgebra configuration.
    pub config_dependent: bool,
    run: LawFn,
}

impl std::fmt::Debug for LawInfo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LawInfo")
            .field("name", &self.name)
            .field("module", &self.module)
            .field("config_dependent", &self.config_dependent)
            .finish()
    }
}

const fn entry(name: &'static str, module: &'static str, config_dependent: bool, summary: &'static str, run: LawFn) -> LawInfo {
    LawInfo {
        name,
        module,
        summary,
        config_dependent,
        run,
    }
}

const REGISTRY: &[LawInfo] = &[
    entry("canon-invariance", "graph-core", false, "canonical keys ignore vertex ids and edge order", canon_invariance),
    entry("canon-completeness", "graph-core", false, "equal keys exactly when brute-force isomorphic", canon_completeness),
    entry("1pi-oracle", "graph-core", false, "is_1pi agrees with single-edge deletion", one_pi_oracle),
    entry("loop-additivity", "graph-core", false, "loop number is additive over disjoint union", loop_additivity),
    entry("l1pi-loop0", "graph-core", false, "locally 1PI with loop number 0 means no internal edges", l1pi_loop0),
    entry("cycle-poset-agreement", "graph-core", false, "reachability order fails exactly on graphs with a directed cycle", cycle_poset_agreement),
    entry("vertex-type-reversal", "graph-core", false, "vertex types ignore orientation", vertex_type_reversal),
    entry("transitive-shrinking", "partition-contract", false, "contracting by a coarser partition in two steps", transitive_shrinking),
    entry("shrink-bijection", "partition-contract", false, "coarser partitions correspond to covering partitions of the contraction", shrink_bijection),
    entry("prop1", "partition-contract", false, "blocks of poset-compatible partitions are convex", prop1),
    entry("prop1-converse", "partition-contract", false, "records convex connected partitions that are not poset-compatible", prop1_converse),
    entry("cuts-ideals", "partition-contract", false, "admissible cuts are the down-closed sets", cuts_ideals),
    entry("cover-count", "partition-contract", true, "covering partitions equal filtered brute-force set partitions", cover_count),
    entry("keep-discard", "partition-contract", false, "stripping legs of kept subgraphs gives discarded subgraphs", keep_discard),
    entry("subgraph-transitivity", "partition-contract", false, "Γ(P)(Q) is isomorphic to Γ(Q)", subgraph_transitivity),
    entry("mul-laws", "tensor-algebra", true, "multiplication is commutative, associative and unital", mul_laws),
    entry("normalization", "tensor-algebra", true, "no stored zero coefficients after any operation", normalization),
    entry("from-graph-union", "tensor-algebra", true, "graph of a disjoint union is the product", from_graph_union),
    entry("hopf-projection", "tensor-algebra", false, "residue projection is multiplicative", hopf_projection),
    entry("coassoc", "coproducts", true, "covering coproduct is coassociative", coassoc),
    entry("cut-coassoc", "coproducts", true, "cut coproduct is coassociative and equals the triple-cut sum", cut_coassoc),
    entry("counit", "coproducts", true, "counit axioms for the covering coproduct", counit),
    entry("cut-counit", "coproducts", true, "counit axioms for the cut coproduct", cut_counit),
    entry("algebra-morphism", "coproducts", true, "coproducts are multiplicative", algebra_morphism),
    entry("grouplike", "coproducts", true, "residues are grouplike in bialgebra mode", grouplike),
    entry("grading", "coproducts", true, "edge count and loop number add up across every term", grading),
    entry("cut-grading", "coproducts", true, "vertex count adds up across every cut term", cut_grading),
    entry("antipode", "coproducts", true, "antipode convolution identities and involution", antipode),
    entry("cut-antipode", "coproducts", true, "same for the cut Hopf algebra", cut_antipode),
    entry("comodule", "coproducts", true, "the left coaction is a comodule coalgebra", comodule),
    entry("comodule-right", "coproducts", true, "mirrored identity for the right coaction (experimental)", comodule_right),
    entry("quotient", "coproducts", true, "Hopf coproduct is the projected bialgebra coproduct", quotient),
    entry("dsl-roundtrip", "cli-io", false, "DSL and JSON output parse back to an isomorphic graph", dsl_roundtrip),
    entry("canon-text", "cli-io", false, "canonical text ignores ids", canon_text),
];

/// All registered laws, in a stable order.
pub fn laws() -> &'static [LawInfo] {
    REGISTRY
}

pub fn law(name: &str) -> Result<&'static LawInfo> {
    REGISTRY
        .iter()
        .find(|l| l.name == name)
        .ok_or_else(|| Error::UnknownLaw(name.to_string()))
}

/// Runs `name` on every element of `corpus`. Elements are checked in
/// parallel; the report lists witnesses in corpus order.
pub fn run_law(name: &str, corpus: &[OrientedGraph], cfg: CoalgebraConfig) -> Result<CheckReport> {
    let info = law(name)?;
    let ctx = Ctx::new(cfg);
    let outcomes: Vec<Outcome> = (0..corpus.len())
        .into_par_iter()
        .map(|i| (info.run)(&ctx, corpus, i))
        .collect();
    let mut report = CheckReport::new(name);
    for o in outcomes {
        report.instances_run += usize::from(o.ran);
        report.failures.extend(o.failures);
        report.confirmations.extend(o.confirmations);
    }
    Ok(report)
}

fn seed_for(i: usize) -> u64 {
    (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0x5DEE_CE66
}

fn neighbor(corpus: &[OrientedGraph], i: usize, step: usize) -> &OrientedGraph {
    &corpus[(i + step) % corpus.len()]
}

fn subsets<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    (0u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

// ---- graph-core ----

fn canon_invariance(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let h = scramble(g, seed_for(i));
    let (a, b) = (canonical_key(g), canonical_key(&h));
    let mut o = Outcome::ran();
    o.check(a == b, &[g, &h], || compact_key(&a), || compact_key(&b));
    o
}

const BRUTE_LIMIT: usize = 7;

fn canon_completeness(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if g.vertex_count() > BRUTE_LIMIT {
        return Outcome::skip();
    }
    let mut partners = vec![neighbor(corpus, i, 1).clone(), scramble(g, seed_for(i)), g.reversed()];
    if let Some(e) = g.internal_edges().iter().find(|e| !e.is_self_loop()) {
        let flipped: Vec<_> = g
            .internal_edges()
            .iter()
            .map(|f| {
                if f.id == e.id {
                    crate::graph::InternalEdge {
                        source: f.target,
                        target: f.source,
                        ..*f
                    }
                } else {
                    *f
                }
            })
            .collect();
        partners.push(OrientedGraph::from_parts(g.vertices().to_vec(), flipped, g.external_edges().to_vec()));
    }
    let mut o = Outcome::ran();
    for h in partners.iter().filter(|h| h.vertex_count() <= BRUTE_LIMIT) {
        let keys_equal = canonical_key(g) == canonical_key(h);
        let iso = oracle::isomorphic(g, h);
        o.check(
            keys_equal == iso,
            &[g, h],
            || format!("isomorphic: {iso}"),
            || format!("keys equal: {keys_equal}"),
        );
    }
    o
}

fn one_pi_oracle(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let (fast, slow) = (g.is_1pi(), oracle::is_1pi(g));
    let mut o = Outcome::ran();
    o.check(fast == slow, &[g], || format!("1PI: {slow}"), || format!("1PI: {fast}"));
    o
}

fn loop_additivity(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let h = neighbor(corpus, i, 1);
    let mut o = Outcome::ran();
    for other in [h, g] {
        let u = g.disjoint_union(other);
        let (sum, joint) = (g.loop_number() + other.loop_number(), u.loop_number());
        o.check(sum == joint, &[g, other], || sum.to_string(), || joint.to_string());
    }
    o
}

fn l1pi_loop0(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let mut o = Outcome::ran();
    if g.is_locally_1pi() && g.loop_number() == 0 {
        o.check(g.internal_count() == 0, &[g], || "0 internal edges".into(), || {
            format!("{} internal edges", g.internal_count())
        });
    }
    o
}

fn cycle_poset_agreement(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let cycle = g.find_directed_cycle();
    let rejected = g.reachability_order().is_err();
    let mut o = Outcome::ran();
    o.check(
        rejected == cycle.is_some(),
        &[g],
        || format!("rejected: {}", cycle.is_some()),
        || format!("rejected: {rejected}"),
    );
    if let Some(c) = cycle {
        // the reported edges must close up into a directed cycle
        let edge = |id| g.internal_edges().iter().find(|e| e.id == id).copied();
        let edges: Option<Vec<_>> = c.iter().map(|&id| edge(id)).collect();
        let valid = edges.is_some_and(|es| {
            !es.is_empty() && (0..es.len()).all(|k| es[k].target == es[(k + 1) % es.len()].source)
        });
        o.check(valid, &[g], || "a closed directed walk".into(), || format!("{c:?}"));
    }
    o
}

fn vertex_type_reversal(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let r = g.reversed();
    let mut o = Outcome::ran();
    for &v in g.vertices() {
        let (a, b) = (g.vertex_type(v), r.vertex_type(v));
        o.check(a == b, &[g], || format!("{a:?}"), || format!("{b:?}"));
    }
    o
}

// ---- partition-contract ----

fn transitive_shrinking(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    guarded(g, || {
        let parts = enumerate_covering_partitions(g, CoverVariant::Full)?;
        let mut o = Outcome::ran();
        for delta in &parts {
            let small = contract(g, delta)?;
            for gamma in parts.iter().filter(|p| refines(delta, p)) {
                let direct = contract(g, gamma)?;
                let stepwise = contract(&small, &quotient_partition(gamma, delta))?;
                if canonical_key(&direct) != canonical_key(&stepwise) {
                    o.fail(Witness::new(
                        &[g],
                        format!("Γ/γ for γ = {gamma}: {}", canonical_text(&direct)),
                        format!("(Γ/δ)/(γ/δ) for δ = {delta}: {}", canonical_text(&stepwise)),
                    ));
                }
            }
        }
        Ok(o)
    })
}

fn shrink_bijection(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    guarded(g, || {
        let parts = enumerate_covering_partitions(g, CoverVariant::Full)?;
        let mut o = Outcome::ran();
        for delta in &parts {
            let coarser: Vec<&VertexPartition> = parts.iter().filter(|p| refines(delta, p)).collect();
            let images: BTreeSet<VertexPartition> = coarser.iter().map(|p| quotient_partition(p, delta)).collect();
            let target: BTreeSet<VertexPartition> =
                enumerate_covering_partitions(&contract(g, delta)?, CoverVariant::Full)?.into_iter().collect();
            o.check(
                images.len() == coarser.len() && images == target,
                &[g],
                || format!("{} covering partitions of Γ/δ for δ = {delta}", target.len()),
                || format!("{} distinct images of {} coarser partitions", images.len(), coarser.len()),
            );
            for p in &coarser {
                let back = lift_partition(&quotient_partition(p, delta), delta);
                o.check(&back == *p, &[g], || p.to_string(), || back.to_string());
            }
        }
        Ok(o)
    })
}

fn prop1(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let poset = g.reachability_order()?;
        let mut o = Outcome::ran();
        for p in enumerate_covering_partitions(g, CoverVariant::PosetCompatible)? {
            for b in p.blocks() {
                o.check(poset.is_convex(b), &[g], || format!("convex block {b:?} of {p}"), || "not convex".into());
            }
        }
        Ok(o)
    })
}

fn prop1_converse(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let poset = g.reachability_order()?;
        let mut o = Outcome::ran();
        for p in enumerate_covering_partitions(g, CoverVariant::Full)? {
            if !p.blocks().iter().all(|b| poset.is_convex(b)) || is_poset_compatible(g, &p)? {
                continue;
            }
            let q = contract(g, &p)?;
            match q.find_directed_cycle() {
                Some(cycle) => o.confirmations.push(Witness::new(
                    &[g],
                    format!("convex connected blocks {p}"),
                    format!("contraction has the directed cycle {cycle:?}:\n{}", canonical_text(&q)),
                )),
                None => o.fail(Witness::new(&[g], "a directed cycle in the contraction", "none found")),
            }
        }
        Ok(o)
    })
}

fn cuts_ideals(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let fast: Vec<_> = enumerate_admissible_cuts(g)?.into_iter().map(|c| (c.upper, c.lower)).collect();
        let slow = oracle::down_set_cuts(g);
        let mut o = Outcome::ran();
        o.check(fast == slow, &[g], || format!("{} down-sets", slow.len()), || format!("{} cuts", fast.len()));
        Ok(o)
    })
}

fn cover_count(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let variant = ctx.cfg.variant;
    if g.vertex_count() > 6 || (variant.requires_cycle_free() && !g.is_cycle_free()) {
        return Outcome::skip();
    }
    guarded(g, || {
        let fast: Vec<Vec<Vec<_>>> = enumerate_covering_partitions(g, variant)?
            .into_iter()
            .map(|p| p.blocks().to_vec())
            .collect();
        let slow = oracle::covering_partitions(g, variant);
        let mut o = Outcome::ran();
        o.check(
            fast == slow,
            &[g],
            || format!("{} partitions ({variant:?})", slow.len()),
            || format!("{} partitions", fast.len()),
        );
        Ok(o)
    })
}

fn keep_discard(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    guarded(g, || {
        let mut o = Outcome::ran();
        for p in subsets(g.vertices()) {
            let kept = induced_subgraph(g, &p, ExternalPolicy::Keep)?.strip_externals();
            let dropped = induced_subgraph(g, &p, ExternalPolicy::Discard)?;
            o.check(kept == dropped, &[g], || canonical_text(&dropped), || canonical_text(&kept));
        }
        Ok(o)
    })
}

fn subgraph_transitivity(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    guarded(g, || {
        let mut o = Outcome::ran();
        for p in subsets(g.vertices()) {
            for q in subsets(&p) {
                for policy in [ExternalPolicy::Keep, ExternalPolicy::Discard] {
                    let ok = subgraph_transitivity_check(g, &p, &q, policy)?;
                    o.check(ok, &[g], || format!("Γ(P)(Q) ≅ Γ(Q) for P = {p:?}, Q = {q:?}, {policy:?}"), || {
                        "not isomorphic".into()
                    });
                }
            }
        }
        Ok(o)
    })
}

// ---- tensor-algebra ----

fn sample_elements(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> [AlgebraElement; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(i));
    let mode = ctx.cfg.mode;
    let mut coef = || Rational::new(rng.random_range(-3..=3).into(), rng.random_range(1..=3).into());
    let x = |k: usize| AlgebraElement::from_graph(neighbor(corpus, i, k), mode);
    let a = &x(0).scale(&coef()) + &x(1).scale(&coef());
    let b = &x(1) + &AlgebraElement::one().scale(&coef());
    let c = &x(2).scale(&coef()) - &x(0);
    [a, b, c]
}

fn mul_laws(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let [a, b, c] = sample_elements(ctx, corpus, i);
    let one = AlgebraElement::one();
    let mut o = Outcome::ran();
    o.elements(&[g], &b.multiply(&a), &a.multiply(&b));
    o.elements(&[g], &a.multiply(&b.multiply(&c)), &a.multiply(&b).multiply(&c));
    o.elements(&[g], &a, &a.multiply(&one));
    o.elements(&[g], &a, &one.multiply(&a));
    o
}

fn normalization(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let [a, b, c] = sample_elements(ctx, corpus, i);
    let mut o = Outcome::ran();
    let twin = a.clone();
    let elements = [
        &a - &twin,
        &a + &b,
        &(&a * &b) - &(&b * &a),
        c.scale(&Rational::zero()),
        a.multiply(&c),
        a.project_hopf(),
        -&b,
    ];
    for x in &elements {
        o.check(!x.has_zero_coefficient(), &[g], || "no zero coefficients".into(), || emit_element(x, Format::Text));
    }
    let zero = &a - &twin;
    o.check(zero.is_zero() && zero.is_empty(), &[g], || "0".into(), || emit_element(&zero, Format::Text));
    if ctx.cfg.accepts(g) {
        if let Ok(d) = ctx.cover.coproduct_graph(g) {
            let mut t = d.clone();
            if t.add_scaled(&d, &rational(-1)).is_ok() {
                o.check(t.is_zero() && !t.has_zero_coefficient(), &[g], || "0".into(), || emit_tensor(&t, Format::Text));
            }
            let sq = d.multiply(&d).unwrap_or_else(|_| d.clone());
            o.check(!sq.has_zero_coefficient(), &[g], || "no zero coefficients".into(), || emit_tensor(&sq, Format::Text));
        }
    }
    o
}

fn from_graph_union(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let h = neighbor(corpus, i, 1);
    let mode = ctx.cfg.mode;
    let joint = AlgebraElement::from_graph(&g.disjoint_union(h), mode);
    let product = AlgebraElement::from_graph(g, mode).multiply(&AlgebraElement::from_graph(h, mode));
    let mut o = Outcome::ran();
    o.elements(&[g, h], &product, &joint);
    o
}

fn hopf_projection(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let bi_ctx = Ctx::new(CoalgebraConfig { mode: Mode::Bialgebra, ..ctx.cfg });
    let [a, b, _] = sample_elements(&bi_ctx, corpus, i);
    let mut o = Outcome::ran();
    o.elements(&[g], &a.project_hopf().multiply(&b.project_hopf()), &a.multiply(&b).project_hopf());
    o.elements(
        &[g],
        &AlgebraElement::from_graph(g, Mode::Bialgebra).project_hopf(),
        &AlgebraElement::from_graph(g, Mode::Hopf),
    );
    o
}

// ---- coproducts ----

fn coassoc(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !ctx.cfg.accepts(g) {
        return Outcome::skip();
    }
    guarded(g, || {
        let d = ctx.cover.coproduct_graph(g)?;
        let left = d.expand_slot(0, |m| ctx.cover.coproduct_monomial(m))?;
        let right = d.expand_slot(1, |m| ctx.cover.coproduct_monomial(m))?;
        let mut o = Outcome::ran();
        o.tensors(&[g], &left, &right);
        Ok(o)
    })
}

fn cut_coassoc(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let d = ctx.cut.coproduct_graph(g)?;
        let left = d.expand_slot(0, |m| ctx.cut.coproduct_monomial(m))?;
        let right = d.expand_slot(1, |m| ctx.cut.coproduct_monomial(m))?;
        let direct = oracle::cut_triple_sum(g, ctx.cfg.externals)?;
        let mut o = Outcome::ran();
        o.tensors(&[g], &left, &right);
        o.tensors(&[g], &direct, &left);
        Ok(o)
    })
}

fn counit_laws(o: &mut Outcome, g: &OrientedGraph, c: &dyn Coalgebra, x: &AlgebraElement) -> Result<()> {
    let d = c.coproduct(x)?;
    let left = d.contract_slot(0, |m| c.counit_monomial(m))?.into_element()?;
    let right = d.contract_slot(1, |m| c.counit_monomial(m))?.into_element()?;
    o.elements(&[g], x, &left);
    o.elements(&[g], x, &right);
    Ok(())
}

fn counit(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !ctx.cfg.accepts(g) {
        return Outcome::skip();
    }
    guarded(g, || {
        let mut o = Outcome::ran();
        counit_laws(&mut o, g, &ctx.cover, &ctx.cover.element_of(g))?;
        Ok(if has_self_loop(g) { tadpole(&ctx.cover, g, o)? } else { o })
    })
}

fn has_self_loop(g: &OrientedGraph) -> bool {
    g.internal_edges().iter().any(|e| e.is_self_loop())
}

/// A self-loop lies inside every block of every partition, so no covering
/// subgraph is edge-free and the counit and antipode identities cannot hold.
/// Checks that premise, then excludes the instance.
fn tadpole(c: &CoverCoalgebra, g: &OrientedGraph, o: Outcome) -> Result<Outcome> {
    let mut premise = Outcome::ran();
    for (slots, _) in c.coproduct_graph(g)?.terms() {
        let edges = degree(&slots[0], Grading::InternalEdges);
        premise.check(edges > 0, &[g], || "a self-loop in every left factor".into(), || format!("{edges} edges"));
    }
    Ok(if premise.failures.is_empty() { o.excluded() } else { premise })
}

fn cut_counit(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let mut o = Outcome::ran();
        counit_laws(&mut o, g, &ctx.cut, &ctx.cut.element_of(g))?;
        Ok(o)
    })
}

fn algebra_morphism(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let h = neighbor(corpus, i, 1);
    if !ctx.cfg.accepts(g) || !ctx.cfg.accepts(h) {
        return Outcome::skip();
    }
    guarded(g, || {
        let u = g.disjoint_union(h);
        let mut o = Outcome::ran();
        // the direct sums see the union as a single graph, not as a product
        let joint = ctx.cover.coproduct_direct(&u)?;
        let product = ctx.cover.coproduct_direct(g)?.multiply(&ctx.cover.coproduct_direct(h)?)?;
        o.tensors(&[g, h], &product, &joint);
        o.tensors(&[g], &ctx.cover.coproduct_direct(g)?, &ctx.cover.coproduct_graph(g)?);
        if u.is_cycle_free() {
            let joint = ctx.cut.coproduct_direct(&u)?;
            let product = ctx.cut.coproduct_direct(g)?.multiply(&ctx.cut.coproduct_direct(h)?)?;
            o.tensors(&[g, h], &product, &joint);
        }
        Ok(o)
    })
}

fn grouplike(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let r = ctx.project(g).residue();
    if !ctx.cfg.accepts(&r) {
        return Outcome::skip();
    }
    guarded(g, || {
        let m = Monomial::from_graph(&r, ctx.cfg.mode);
        let expected = Tensor::from_slots(vec![m.clone(), m])?;
        let mut o = Outcome::ran();
        o.tensors(&[&r], &expected, &ctx.cover.coproduct_direct(&r)?);
        Ok(o)
    })
}

fn grading(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !ctx.cfg.accepts(g) {
        return Outcome::skip();
    }
    guarded(g, || {
        let p = ctx.project(g);
        let d = ctx.cover.coproduct_graph(g)?;
        let mut o = Outcome::ran();
        for gr in [Grading::InternalEdges, Grading::LoopNumber] {
            let total = graph_degree(&p, gr);
            for (slots, _) in d.terms() {
                let sum = degree(&slots[0], gr) + degree(&slots[1], gr);
                o.check(sum == total, &[g], || format!("{gr:?} {total}"), || format!("{gr:?} {sum}"));
            }
        }
        Ok(o)
    })
}

fn cut_grading(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let d = ctx.cut.coproduct_graph(g)?;
        let total = g.vertex_count();
        let mut o = Outcome::ran();
        for (slots, _) in d.terms() {
            let sum = degree(&slots[0], Grading::VertexCount) + degree(&slots[1], Grading::VertexCount);
            o.check(sum == total, &[g], || format!("{total} vertices"), || format!("{sum} vertices"));
        }
        Ok(o)
    })
}

fn antipode_laws(o: &mut Outcome, g: &OrientedGraph, c: &dyn Coalgebra, x: &AlgebraElement) -> Result<()> {
    let expected = AlgebraElement::one().scale(&c.counit(x));
    o.elements(&[g], &expected, &c.antipode_left_convolution(x)?);
    o.elements(&[g], &expected, &c.antipode_right_convolution(x)?);
    o.elements(&[g], x, &c.antipode(&c.antipode(x)?)?);
    Ok(())
}

/// The element of `g` and each of its connected generators.
fn antipode_inputs(c: &dyn Coalgebra, g: &OrientedGraph) -> Vec<AlgebraElement> {
    let x = c.element_of(g);
    let mut out: Vec<AlgebraElement> = x
        .iter()
        .flat_map(|(m, _)| m.factors().to_vec())
        .map(|k| AlgebraElement::monomial(Monomial::from_factors(vec![k])))
        .collect();
    out.push(x);
    out
}

fn antipode(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !ctx.cfg.accepts(g) {
        return Outcome::skip();
    }
    guarded(g, || {
        let mut o = Outcome::ran();
        if ctx.cfg.mode == Mode::Bialgebra {
            let got = ctx.cover.antipode(&ctx.cover.element_of(g));
            o.check(got == Err(Error::NotAHopfAlgebra), &[g], || "NotAHopfAlgebra".into(), || format!("{got:?}"));
            return Ok(o);
        }
        for x in antipode_inputs(&ctx.cover, g) {
            antipode_laws(&mut o, g, &ctx.cover, &x)?;
        }
        Ok(if has_self_loop(g) { tadpole(&ctx.cover, g, o)? } else { o })
    })
}

fn cut_antipode(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let mut o = Outcome::ran();
        for x in antipode_inputs(&ctx.cut, g) {
            antipode_laws(&mut o, g, &ctx.cut, &x)?;
        }
        Ok(o)
    })
}

fn comodule(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let phi = |m: &Monomial| ctx.coaction.apply_monomial(m, Side::Left);
        let lhs = ctx
            .coaction
            .apply_graph(g, Side::Left)?
            .expand_slot(1, |m| ctx.cut.coproduct_monomial(m))?;
        let rhs = m13(&ctx.cut.coproduct_graph(g)?.expand_slot(0, phi)?.expand_slot(2, phi)?)?;
        let mut o = Outcome::ran();
        o.tensors(&[g], &lhs, &rhs);
        Ok(o)
    })
}

fn comodule_right(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !g.is_cycle_free() {
        return Outcome::skip();
    }
    guarded(g, || {
        let psi = |m: &Monomial| ctx.coaction.apply_monomial(m, Side::Right);
        let lhs = ctx
            .coaction
            .apply_graph(g, Side::Right)?
            .expand_slot(0, |m| ctx.cut.coproduct_monomial(m))?;
        let rhs = m24(&ctx.cut.coproduct_graph(g)?.expand_slot(0, psi)?.expand_slot(2, psi)?)?;
        let mut o = Outcome::ran();
        o.tensors(&[g], &lhs, &rhs);
        Ok(o)
    })
}

fn quotient(ctx: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    if !ctx.cfg.accepts(g) {
        return Outcome::skip();
    }
    guarded(g, || {
        let hopf = CoverCoalgebra::new(CoalgebraConfig { mode: Mode::Hopf, ..ctx.cfg });
        let bi = CoverCoalgebra::new(CoalgebraConfig { mode: Mode::Bialgebra, ..ctx.cfg });
        let projected = bi.coproduct_direct(g)?.map_monomials(Monomial::project_hopf);
        let mut o = Outcome::ran();
        o.tensors(&[g], &projected, &hopf.coproduct_direct(g)?);
        o.tensors(&[g], &projected, &hopf.coproduct_graph(g)?);
        Ok(o)
    })
}

// ---- cli-io ----

fn dsl_roundtrip(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    guarded(g, || {
        let key = canonical_key(g);
        let texts = [GraphDocument::from_graph("g", g).to_text(), canonical_text(g)];
        let mut o = Outcome::ran();
        for text in &texts {
            let back = parse_graph(text)?;
            o.check(canonical_key(&back) == key, &[g], || text.clone(), || canonical_text(&back));
        }
        let json = graph_to_json(g);
        let back = document_from_json(&json)?.to_named_graph()?.graph;
        o.check(canonical_key(&back) == key, &[g], || json.clone(), || canonical_text(&back));
        let keys: Vec<_> = component_keys(&back);
        o.check(keys == component_keys(g), &[g], || "same components".into(), || format!("{keys:?}"));
        Ok(o)
    })
}

fn canon_text(_: &Ctx, corpus: &[OrientedGraph], i: usize) -> Outcome {
    let g = &corpus[i];
    let h = scramble(g, seed_for(i) ^ 1);
    let (a, b) = (canonical_text(g), canonical_text(&h));
    let mut o = Outcome::ran();
    o.check(a == b, &[g, &h], || a.clone(), || b.clone());
    o
}
