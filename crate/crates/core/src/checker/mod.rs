//! Named, seeded, reproducible law checks with failure witnesses.
//!
//! [`run_law`] evaluates one registered law on every graph of a corpus under
//! one [`CoalgebraConfig`]. Witnesses carry the offending graphs in the DSL,
//! so any failure can be replayed with the command-line tool.

mod generate;
mod golden;
mod laws;
pub mod oracle;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use generate::{
    decorate_legs, exhaustive_graphs, generate_graphs, scramble, with_leg_patterns, ExhaustiveBounds, GeneratorConfig,
};
pub use golden::{golden_cases, golden_suite, triangle, GoldenCase};
pub use laws::{law, laws, run_law, LawInfo};

use crate::coproduct::CoalgebraConfig;
use crate::error::Result;
use crate::graph::OrientedGraph;
use crate::io::dsl::GraphDocument;
use crate::partition::CoverVariant;

/// A failure, or a confirmed instance of an expected phenomenon.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// The inputs, each as a DSL document.
    pub graphs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(graphs: &[&OrientedGraph], expected: impl Into<String>, actual: impl Into<String>) -> Witness {
        Witness {
            graphs: graphs
                .iter()
                .enumerate()
                .map(|(i, g)| GraphDocument::from_graph(&format!("input{i}"), g).to_text())
                .collect(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.graphs {
            write!(f, "{g}")?;
        }
        writeln!(f, "expected:\n{}", self.expected.trim_end())?;
        writeln!(f, "actual:\n{}", self.actual.trim_end())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub law: String,
    pub instances_run: usize,
    pub failures: Vec<Witness>,
    /// Instances of a phenomenon the law is looking for, such as a
    /// counterexample to a converse.
    pub confirmations: Vec<Witness>,
}

impl CheckReport {
    pub fn new(law: impl Into<String>) -> CheckReport {
        CheckReport {
            law: law.into(),
            instances_run: 0,
            failures: Vec::new(),
            confirmations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.instances_run += other.instances_run;
        self.failures.extend(other.failures);
        self.confirmations.extend(other.confirmations);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} instances", self.law, self.instances_run)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        if !self.confirmations.is_empty() {
            write!(f, ", {} confirmations", self.confirmations.len())?;
        }
        write!(f, ")")
    }
}

/// Corpus and configuration choices for [`run_law_suite`].
#[derive(Clone, Debug, PartialEq)]
pub struct LawSuiteOptions {
    /// Bounds of the exhaustive legless part of the corpus.
    pub exhaustive_vertices: usize,
    pub exhaustive_edges: usize,
    /// Exhaustive graphs up to this many vertices also appear with every leg pattern.
    pub legged_vertices: usize,
    pub random_count: usize,
    pub random_max_vertices: u32,
    pub seed: u64,
    /// Restrict configuration-dependent laws to one variant.
    pub variant: Option<CoverVariant>,
}

impl Default for LawSuiteOptions {
    fn default() -> Self {
        LawSuiteOptions {
            exhaustive_vertices: 3,
            exhaustive_edges: 3,
            legged_vertices: 2,
            random_count: 40,
            random_max_vertices: 5,
            seed: 1,
            variant: None,
        }
    }
}

/// The exhaustive-plus-random corpus described by `opts`.
pub fn standard_corpus(opts: &LawSuiteOptions) -> Result<Vec<OrientedGraph>> {
    let exhaustive = exhaustive_graphs(ExhaustiveBounds::new(opts.exhaustive_vertices, opts.exhaustive_edges));
    let small: Vec<OrientedGraph> = exhaustive
        .iter()
        .filter(|g| g.vertex_count() <= opts.legged_vertices && g.internal_count() <= opts.exhaustive_edges.min(3))
        .cloned()
        .collect();
    let mut corpus = exhaustive;
    corpus.extend(with_leg_patterns(&small).into_iter().filter(|g| !g.external_edges().is_empty()));
    let random = GeneratorConfig {
        max_vertices: opts.random_max_vertices,
        max_internal_edges: opts.random_max_vertices + 2,
        seed: opts.seed,
        ..Default::default()
    };
    corpus.extend(generate_graphs(&random, opts.random_count)?);
    corpus.extend(generate_graphs(
        &GeneratorConfig {
            cycle_free_only: true,
            seed: opts.seed.wrapping_add(1),
            ..random
        },
        opts.random_count,
    )?);
    Ok(corpus)
}

/// Runs every registered law on [`standard_corpus`], over all sixteen
/// configurations for the laws that depend on one.
pub fn run_law_suite(opts: &LawSuiteOptions) -> Result<Vec<CheckReport>> {
    let corpus = standard_corpus(opts)?;
    let configs: Vec<CoalgebraConfig> = CoalgebraConfig::all()
        .into_iter()
        .filter(|c| opts.variant.is_none_or(|v| c.variant == v))
        .collect();
    let mut out = Vec::new();
    for info in laws() {
        if info.config_dependent {
            for cfg in &configs {
                let mut r = run_law(info.name, &corpus, *cfg)?;
                r.law = format!("{} [{}]", info.name, cfg.label());
                out.push(r);
            }
        } else {
            out.push(run_law(info.name, &corpus, configs.first().copied().unwrap_or_default())?);
        }
    }
    Ok(out)
}
