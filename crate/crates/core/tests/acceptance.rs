//! Acceptance suite: one PASS/FAIL line per criterion, each with a time budget.
//! Runs without the libtest harness so the lines are always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopfgraph::algebra::rational;
use hopfgraph::checker::{
    decorate_legs, exhaustive_graphs, generate_graphs, golden_cases, run_law, triangle, with_leg_patterns,
    CheckReport, ExhaustiveBounds, GeneratorConfig,
};
use hopfgraph::partition::{
    block_is_connected, contract, enumerate_covering_partitions, is_poset_compatible, VertexPartition,
};
use hopfgraph::{CoalgebraConfig, CoverVariant, ExternalPolicy, GraphBuilder, Mode, OrientedGraph, VertexId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn require(report: CheckReport, label: &str) -> Result<usize, String> {
    if !report.passed() {
        let first = report.failures.first().map(|w| w.to_string()).unwrap_or_default();
        return Err(format!("{label}: {} failures, first:\n{first}", report.failures.len()));
    }
    if report.instances_run == 0 {
        return Err(format!("{label}: no instances ran"));
    }
    Ok(report.instances_run)
}

fn law(name: &str, corpus: &[OrientedGraph], cfg: CoalgebraConfig) -> Result<usize, String> {
    law_counted(name, corpus, cfg).map(|(n, _)| n)
}

/// Instances run and confirmations; for counit and antipode the confirmations
/// are the excluded graphs with self-loops.
fn law_counted(name: &str, corpus: &[OrientedGraph], cfg: CoalgebraConfig) -> Result<(usize, usize), String> {
    let report = run_law(name, corpus, cfg).map_err(|e| e.to_string())?;
    let confirmed = report.confirmations.len();
    Ok((require(report, &format!("{name} [{}]", cfg.label()))?, confirmed))
}

fn golden() -> Outcome {
    let expected_counts = [5, 5, 2, 2, 4, 4, 4, 4, 4, 4];
    let cases = golden_cases().map_err(|e| e.to_string())?;
    if cases.len() != 10 {
        return Err(format!("{} cases", cases.len()));
    }
    let mut counts = Vec::new();
    for (case, &n) in cases.iter().zip(&expected_counts) {
        if !case.passed() {
            return Err(format!("{} differs from its expectation", case.name));
        }
        if case.computed.len() != n {
            return Err(format!("{}: {} terms, expected {n}", case.name, case.computed.len()));
        }
        counts.push(case.computed.len().to_string());
    }
    for idx in [7, 8] {
        let twos = cases[idx].computed.terms().filter(|(_, c)| **c == rational(2)).count();
        let ones = cases[idx].computed.terms().filter(|(_, c)| **c == rational(1)).count();
        if (twos, ones) != (1, 3) {
            return Err(format!("{}: {twos} terms with coefficient 2, {ones} with 1", cases[idx].name));
        }
    }
    Ok(format!("term counts {}", counts.join(",")))
}

fn hexagon() -> Outcome {
    // v1..v6 are vertices 0..5
    let h6 = GraphBuilder::with_vertices(6)
        .edge(0, 1)
        .edge(2, 1)
        .edge(2, 3)
        .edge(4, 3)
        .edge(4, 5)
        .edge(0, 5)
        .build();
    let v = VertexId;
    let pi = VertexPartition::new(vec![vec![v(1), v(2)], vec![v(3), v(4)], vec![v(5), v(0)]]);
    let poset = h6.reachability_order().map_err(|e| e.to_string())?;
    for b in pi.blocks() {
        if !block_is_connected(&h6, b) || !poset.is_convex(b) {
            return Err(format!("block {b:?} is not convex and connected"));
        }
    }
    let q = contract(&h6, &pi).map_err(|e| e.to_string())?;
    let cycle = q.find_directed_cycle().ok_or("contraction is acyclic")?;
    if cycle.len() != 3 || is_poset_compatible(&h6, &pi) != Ok(false) {
        return Err(format!("unexpected cycle {cycle:?}"));
    }
    let full = enumerate_covering_partitions(&h6, CoverVariant::Full).map_err(|e| e.to_string())?;
    let cf = enumerate_covering_partitions(&h6, CoverVariant::PosetCompatible).map_err(|e| e.to_string())?;
    if !full.contains(&pi) || cf.contains(&pi) {
        return Err("enumeration disagrees".into());
    }
    let report = run_law("prop1-converse", &[h6], CoalgebraConfig::default()).map_err(|e| e.to_string())?;
    let found = report.confirmations.iter().any(|w| w.expected.contains(&pi.to_string()));
    if !report.passed() || !found {
        return Err("prop1-converse did not confirm the hexagon partition".into());
    }
    Ok(format!(
        "π = {pi} convex and connected, contraction has a 3-cycle; {} confirmations",
        report.confirmations.len()
    ))
}

fn random(cycle_free: bool, seed: u64) -> Vec<OrientedGraph> {
    let cfg = GeneratorConfig {
        max_vertices: 6,
        max_internal_edges: 7,
        external_leg_probability: 0.25,
        cycle_free_only: cycle_free,
        seed,
        ..Default::default()
    };
    generate_graphs(&cfg, 200).expect("valid generator configuration")
}

fn coalgebra_laws() -> Outcome {
    let mut corpus = exhaustive_graphs(ExhaustiveBounds::new(4, 5));
    let exhaustive = corpus.len();
    corpus.extend(random(false, 2024));
    let (mut runs, mut tadpoles) = (0, 0);
    for cfg in CoalgebraConfig::all() {
        for name in ["coassoc", "counit", "algebra-morphism", "grouplike", "grading"] {
            let (n, c) = law_counted(name, &corpus, cfg)?;
            runs += n;
            tadpoles += if name == "counit" { c } else { 0 };
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive + 200 random graphs, {runs} law instances over 16 configurations; \
         {tadpoles} counit instances with self-loops excluded"
    ))
}

fn shrinking() -> Outcome {
    let mut corpus = exhaustive_graphs(ExhaustiveBounds::new(5, 5));
    let legless = corpus.len();
    corpus.extend(
        with_leg_patterns(&exhaustive_graphs(ExhaustiveBounds::new(3, 3)))
            .into_iter()
            .filter(|g| !g.external_edges().is_empty()),
    );
    let cfg = CoalgebraConfig::default();
    let a = law("transitive-shrinking", &corpus, cfg)?;
    let b = law("subgraph-transitivity", &corpus, cfg)?;
    Ok(format!("{legless} legless + {} legged graphs; {a} + {b} instances", corpus.len() - legless))
}

fn comodule() -> Outcome {
    let mut corpus = vec![triangle()];
    corpus.extend(random(true, 77));
    let mut runs = 0;
    for externals in [ExternalPolicy::Keep, ExternalPolicy::Discard] {
        let cfg = CoalgebraConfig::new(CoverVariant::PosetCompatible, Mode::Bialgebra, externals);
        runs += law("comodule", &corpus, cfg)?;
    }
    Ok(format!("T + 200 random cycle-free graphs, {runs} instances"))
}

fn antipodes() -> Outcome {
    let legless = exhaustive_graphs(ExhaustiveBounds::new(6, 5).connected());
    let mut generators = legless.clone();
    generators.extend(decorate_legs(&legless, 0.3, 11));
    let (mut runs, mut tadpoles) = (0, 0);
    for variant in CoverVariant::ALL {
        for externals in [ExternalPolicy::Keep, ExternalPolicy::Discard] {
            let (n, c) = law_counted("antipode", &generators, CoalgebraConfig::new(variant, Mode::Hopf, externals))?;
            runs += n;
            tadpoles += c;
        }
    }
    let dags = exhaustive_graphs(ExhaustiveBounds::new(5, 6).connected().cycle_free());
    let mut cut_generators = dags.clone();
    cut_generators.extend(decorate_legs(&dags, 0.3, 12));
    for externals in [ExternalPolicy::Keep, ExternalPolicy::Discard] {
        let cfg = CoalgebraConfig::new(CoverVariant::PosetCompatible, Mode::Hopf, externals);
        runs += law("cut-antipode", &cut_generators, cfg)?;
    }
    Ok(format!(
        "{} connected generators with ≤5 edges, {} connected cycle-free with ≤5 vertices; \
         {runs} instances, {tadpoles} with self-loops excluded",
        legless.len(),
        dags.len()
    ))
}

fn oracles() -> Outcome {
    let pi_corpus = exhaustive_graphs(ExhaustiveBounds::new(5, 6));
    let a = law("1pi-oracle", &pi_corpus, CoalgebraConfig::default())?;
    let dags = exhaustive_graphs(ExhaustiveBounds::new(5, 6).cycle_free());
    let b = law("cuts-ideals", &dags, CoalgebraConfig::default())?;
    let covers = exhaustive_graphs(ExhaustiveBounds::new(5, 5));
    let mut c = 0;
    for variant in CoverVariant::ALL {
        c += law("cover-count", &covers, CoalgebraConfig::new(variant, Mode::Bialgebra, ExternalPolicy::Keep))?;
    }
    Ok(format!("1PI on {a} graphs, cuts on {b} cycle-free graphs, {c} covering enumerations"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden triangle coproducts", Duration::from_secs(1), golden),
        ("hexagon converse counterexample", Duration::from_secs(1), hexagon),
        ("coalgebra laws on all configurations", Duration::from_secs(300), coalgebra_laws),
        ("transitive shrinking and subgraph transitivity", Duration::from_secs(120), shrinking),
        ("comodule-coalgebra identity", Duration::from_secs(300), comodule),
        ("antipodes", Duration::from_secs(300), antipodes),
        ("oracle equivalences", Duration::from_secs(120), oracles),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > *budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({elapsed:.2?}) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({elapsed:.2?}) {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
