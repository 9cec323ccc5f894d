//! `hopfgraph`: coproducts, antipodes, covers, cuts and law checks on graphs
//! written in the graph DSL or its JSON mirror.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage, parse or
//! validation errors.

use std::io::{IsTerminal, Read};
use std::process::ExitCode;

use clap::{Args, ColorChoice, Parser, Subcommand, ValueEnum};

use hopfgraph::checker::{golden_suite, run_law_suite, CheckReport, LawSuiteOptions};
use hopfgraph::coproduct::Coalgebra;
use hopfgraph::io::dsl::{self, NamedGraph};
use hopfgraph::io::emit::{canonical_text, emit_element, emit_graph, emit_tensor, graph_dot, Format};
use hopfgraph::io::json;
use hopfgraph::partition::{
    contract, enumerate_admissible_cuts, enumerate_covering_partitions, is_poset_compatible, VertexPartition,
};
use hopfgraph::{
    coproduct, cut_coproduct, CoalgebraConfig, CoverCoalgebra, CoverVariant, CutCoalgebra, ExternalPolicy, Mode,
    VertexId,
};

#[derive(Parser)]
#[command(name = "hopfgraph", version, about = "Hopf algebras of oriented Feynman graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Covering-subgraph coproduct of the graph in FILE
    Coproduct {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = VariantArg::Full)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Bi)]
        mode: ModeArg,
        #[command(flatten)]
        ext: Externals,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Admissible-cut coproduct of a cycle-free graph
    Cutcoproduct {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ext: Externals,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Antipode in the Hopf quotient of a variant, or of the cut coproduct
    Antipode {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = AntipodeVariant::Full)]
        variant: AntipodeVariant,
        #[command(flatten)]
        ext: Externals,
        #[command(flatten)]
        out: OutputFormat,
    },
    /// Lists covering partitions, one per line, with compatibility flags
    Covers {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = VariantArg::Full)]
        variant: VariantArg,
    },
    /// Lists admissible cuts of a cycle-free graph
    Cuts {
        #[command(flatten)]
        input: Input,
    },
    /// Canonical text of the graph; isomorphic inputs print identically
    Canon {
        #[command(flatten)]
        input: Input,
    },
    /// Renders the graph with its own vertex names
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "dot")]
        format: Format,
    },
    /// Runs the golden suite, the law suite, or both
    Check(CheckArgs),
}

#[derive(Args)]
struct Input {
    /// Graph file in the DSL or JSON; `-` reads standard input
    file: String,
}

#[derive(Args)]
struct Externals {
    #[arg(long, value_enum, default_value_t = ExternalsArg::Keep)]
    externals: ExternalsArg,
}

#[derive(Args)]
struct OutputFormat {
    /// text, latexish, json or dot
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Largest graphs in the exhaustive and random corpora
    #[arg(long, default_value_t = 3)]
    max_vertices: u32,
    /// Random graphs per generator
    #[arg(long, default_value_t = 40)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Restrict configuration-dependent laws to one variant
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Print every law, not only failures
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Full,
    #[value(name = "1pi")]
    OnePi,
    Cf,
    #[value(name = "cf1pi")]
    CfOnePi,
}

impl From<VariantArg> for CoverVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => CoverVariant::Full,
            VariantArg::OnePi => CoverVariant::Locally1PI,
            VariantArg::Cf => CoverVariant::PosetCompatible,
            VariantArg::CfOnePi => CoverVariant::PosetCompatibleLocally1PI,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AntipodeVariant {
    Full,
    #[value(name = "1pi")]
    OnePi,
    Cf,
    #[value(name = "cf1pi")]
    CfOnePi,
    /// the admissible-cut Hopf algebra
    Cut,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Bi,
    Hopf,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Bi => Mode::Bialgebra,
            ModeArg::Hopf => Mode::Hopf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExternalsArg {
    Keep,
    Discard,
}

impl From<ExternalsArg> for ExternalPolicy {
    fn from(e: ExternalsArg) -> Self {
        match e {
            ExternalsArg::Keep => ExternalPolicy::Keep,
            ExternalsArg::Discard => ExternalPolicy::Discard,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Golden,
    Laws,
    All,
}

/// Error text and exit code for anything that stops a command.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal()
}

fn diagnostic(message: &str) {
    if use_color() {
        eprintln!("\x1b[1;31merror:\x1b[0m {message}");
    } else {
        eprintln!("error: {message}");
    }
}

fn load(path: &str) -> Result<NamedGraph, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?
    };
    let doc = if text.trim_start().starts_with('{') {
        json::document_from_json(&text)
    } else {
        dsl::parse(&text)
    }
    .map_err(|e| Failure(format!("{path}: {e}")))?;
    doc.to_named_graph().map_err(|e| Failure(format!("{path}: {e}")))
}

fn names(ng: &NamedGraph, vs: &[VertexId]) -> String {
    vs.iter().map(|&v| ng.vertex_name(v)).collect::<Vec<_>>().join(",")
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn covers_lines(ng: &NamedGraph, variant: CoverVariant) -> Result<String, Failure> {
    let g = &ng.graph;
    let mut out = String::new();
    for p in enumerate_covering_partitions(g, variant)? {
        let blocks: Vec<String> = p.blocks().iter().map(|b| format!("{{{}}}", names(ng, b))).collect();
        let one_pi = covering_is_locally_1pi(ng, &p)?;
        let cf = if g.is_cycle_free() {
            flag(is_poset_compatible(g, &p)?)
        } else {
            "n/a"
        };
        let quotient = contract(g, &p)?;
        out.push_str(&format!(
            "{}  1pi={} poset-compatible={cf} contraction-edges={}\n",
            blocks.join(" "),
            flag(one_pi),
            quotient.internal_count()
        ));
    }
    Ok(out)
}

fn covering_is_locally_1pi(ng: &NamedGraph, p: &VertexPartition) -> Result<bool, Failure> {
    let g = &ng.graph;
    for b in p.blocks() {
        let sub = hopfgraph::partition::induced_subgraph(g, b, ExternalPolicy::Discard)?;
        if !sub.is_1pi() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn render(ng: &NamedGraph, format: Format) -> String {
    match format {
        Format::Dot => graph_dot(ng, "G"),
        other => emit_graph(&ng.graph, other),
    }
}

fn print_report(r: &CheckReport, verbose: bool) {
    if verbose || !r.passed() {
        println!("{r}");
    }
    for w in &r.failures {
        println!("{w}");
    }
}

fn check(args: &CheckArgs) -> Result<ExitCode, Failure> {
    let mut reports = Vec::new();
    if args.suite != Suite::Laws {
        reports.push(golden_suite());
    }
    if args.suite != Suite::Golden {
        let opts = LawSuiteOptions {
            exhaustive_vertices: args.max_vertices as usize,
            exhaustive_edges: args.max_vertices as usize,
            random_count: args.trials,
            random_max_vertices: args.max_vertices.max(1) + 1,
            seed: args.seed,
            variant: args.variant.map(Into::into),
            ..Default::default()
        };
        reports.extend(run_law_suite(&opts)?);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        print_report(r, args.verbose);
    }
    let instances: usize = reports.iter().map(|r| r.instances_run).sum();
    println!(
        "{} {} of {} checks passed ({instances} instances)",
        if failed == 0 { "PASS" } else { "FAIL" },
        reports.len() - failed,
        reports.len()
    );
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Coproduct {
            input,
            variant,
            mode,
            ext,
            out,
        } => {
            let ng = load(&input.file)?;
            let cfg = CoalgebraConfig::new(variant.into(), mode.into(), ext.externals.into());
            print!("{}", emit_tensor(&coproduct(&ng.graph, cfg)?, out.format));
        }
        Command::Cutcoproduct { input, ext, out } => {
            let ng = load(&input.file)?;
            print!("{}", emit_tensor(&cut_coproduct(&ng.graph, ext.externals.into())?, out.format));
        }
        Command::Antipode {
            input,
            variant,
            ext,
            out,
        } => {
            let ng = load(&input.file)?;
            let externals = ext.externals.into();
            let cover = |v: CoverVariant| CoverCoalgebra::new(CoalgebraConfig::new(v, Mode::Hopf, externals));
            let s = match variant {
                AntipodeVariant::Cut => {
                    let c = CutCoalgebra::new(externals);
                    c.antipode(&c.element_of(&ng.graph))?
                }
                AntipodeVariant::Full => antipode_in(&cover(CoverVariant::Full), &ng)?,
                AntipodeVariant::OnePi => antipode_in(&cover(CoverVariant::Locally1PI), &ng)?,
                AntipodeVariant::Cf => antipode_in(&cover(CoverVariant::PosetCompatible), &ng)?,
                AntipodeVariant::CfOnePi => antipode_in(&cover(CoverVariant::PosetCompatibleLocally1PI), &ng)?,
            };
            print!("{}", emit_element(&s, out.format));
        }
        Command::Covers { input, variant } => {
            let ng = load(&input.file)?;
            print!("{}", covers_lines(&ng, variant.into())?);
        }
        Command::Cuts { input } => {
            let ng = load(&input.file)?;
            for c in enumerate_admissible_cuts(&ng.graph)? {
                println!("V1={{{}}} V2={{{}}}", names(&ng, &c.upper), names(&ng, &c.lower));
            }
        }
        Command::Canon { input } => {
            let ng = load(&input.file)?;
            print!("{}", canonical_text(&ng.graph));
        }
        Command::Render { input, format } => {
            let ng = load(&input.file)?;
            print!("{}", render(&ng, format));
        }
        Command::Check(args) => return check(&args),
    }
    Ok(ExitCode::SUCCESS)
}

fn antipode_in(c: &CoverCoalgebra, ng: &NamedGraph) -> Result<hopfgraph::AlgebraElement, Failure> {
    Ok(c.antipode(&c.element_of(&ng.graph))?)
}

fn main() -> ExitCode {
    let color = if use_color() { ColorChoice::Auto } else { ColorChoice::Never };
    let matches = <Cli as clap::CommandFactory>::command().color(color).try_get_matches();
    let cli = match matches.and_then(|m| <Cli as clap::FromArgMatches>::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure(message)) => {
            diagnostic(&message);
            ExitCode::from(2)
        }
    }
}
