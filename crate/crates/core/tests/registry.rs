use hopfgraph::checker::{golden_suite, law, laws, run_law, standard_corpus, LawSuiteOptions};
use hopfgraph::{CoalgebraConfig, Error};

const EXPECTED: [(&str, &str); 34] = [
    ("canon-invariance", "graph-core"),
    ("canon-completeness", "graph-core"),
    ("1pi-oracle", "graph-core"),
    ("loop-additivity", "graph-core"),
    ("l1pi-loop0", "graph-core"),
    ("cycle-poset-agreement", "graph-core"),
    ("vertex-type-reversal", "graph-core"),
    ("transitive-shrinking", "partition-contract"),
    ("shrink-bijection", "partition-contract"),
    ("prop1", "partition-contract"),
    ("prop1-converse", "partition-contract"),
    ("cuts-ideals", "partition-contract"),
    ("cover-count", "partition-contract"),
    ("keep-discard", "partition-contract"),
    ("subgraph-transitivity", "partition-contract"),
    ("mul-laws", "tensor-algebra"),
    ("normalization", "tensor-algebra"),
    ("from-graph-union", "tensor-algebra"),
    ("hopf-projection", "tensor-algebra"),
    ("coassoc", "coproducts"),
    ("cut-coassoc", "coproducts"),
    ("counit", "coproducts"),
    ("cut-counit", "coproducts"),
    ("algebra-morphism", "coproducts"),
    ("grouplike", "coproducts"),
    ("grading", "coproducts"),
    ("cut-grading", "coproducts"),
    ("antipode", "coproducts"),
    ("cut-antipode", "coproducts"),
    ("comodule", "coproducts"),
    ("comodule-right", "coproducts"),
    ("quotient", "coproducts"),
    ("dsl-roundtrip", "cli-io"),
    ("canon-text", "cli-io"),
];

#[test]
fn registry_matches_expected_list() {
    let got: Vec<(&str, &str)> = laws().iter().map(|l| (l.name, l.module)).collect();
    assert_eq!(got, EXPECTED);
    for l in laws() {
        assert!(!l.summary.is_empty(), "{} has no summary", l.name);
    }
}

#[test]
fn unknown_law_is_an_error() {
    assert!(matches!(law("no-such-law"), Err(Error::UnknownLaw(_))));
}

#[test]
fn every_law_passes_on_the_standard_corpus() {
    let opts = LawSuiteOptions {
        random_count: 10,
        ..Default::default()
    };
    let corpus = standard_corpus(&opts).unwrap();
    for cfg in CoalgebraConfig::all() {
        for l in laws() {
            if !l.config_dependent && cfg != CoalgebraConfig::default() {
                continue;
            }
            let r = run_law(l.name, &corpus, cfg).unwrap();
            assert!(r.passed(), "{} [{}]: {}", l.name, cfg.label(), r.failures[0]);
        }
    }
    assert!(golden_suite().passed());
}

#[test]
fn reports_are_deterministic() {
    let opts = LawSuiteOptions {
        random_count: 8,
        seed: 42,
        ..Default::default()
    };
    let a = standard_corpus(&opts).unwrap();
    let b = standard_corpus(&opts).unwrap();
    assert_eq!(a, b);
    let cfg = CoalgebraConfig::default();
    let ra = run_law("prop1-converse", &a, cfg).unwrap();
    let rb = run_law("prop1-converse", &b, cfg).unwrap();
    assert_eq!(ra, rb);
}
