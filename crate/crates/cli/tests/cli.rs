use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfgraph"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn exit_code_matrix() {
    let t = fixture("triangle.g");
    let c2 = fixture("two_cycle.g");
    let (syntax, dangling) = (fixture("syntax.g"), fixture("dangling.g"));
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["coproduct", &t], 0),
        (vec!["coproduct", &t, "--variant", "cf1pi", "--mode", "hopf", "--externals", "discard"], 0),
        (vec!["coproduct", &t, "--format", "json"], 0),
        (vec!["coproduct", &t, "--format", "dot"], 0),
        (vec!["cutcoproduct", &t, "--externals", "discard"], 0),
        (vec!["antipode", &t, "--variant", "cut"], 0),
        (vec!["antipode", &c2, "--variant", "1pi"], 0),
        (vec!["covers", &t, "--variant", "cf"], 0),
        (vec!["cuts", &t], 0),
        (vec!["canon", &c2], 0),
        (vec!["render", &c2, "--format", "json"], 0),
        (vec!["check", "--suite", "golden"], 0),
        (vec!["--help"], 0),
        (vec![], 2),
        (vec!["frobnicate"], 2),
        (vec!["coproduct"], 2),
        (vec!["coproduct", &t, "--variant", "bogus"], 2),
        (vec!["coproduct", &t, "--format", "png"], 2),
        (vec!["coproduct", "missing.g"], 2),
        (vec!["coproduct", &syntax], 2),
        (vec!["coproduct", &dangling], 2),
        (vec!["cuts", &c2], 2),
        (vec!["cutcoproduct", &c2], 2),
        (vec!["coproduct", &c2, "--variant", "cf"], 2),
        (vec!["check", "--suite", "nothing"], 2),
    ];
    for (args, expected) in cases {
        assert_eq!(code(&args), expected, "hopfgraph {}", args.join(" "));
    }
}

#[test]
fn errors_go_to_stderr() {
    let o = run(&["coproduct", &fixture("syntax.g")]);
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains("3:"), "line number missing: {err}");
    assert!(!err.contains('\x1b'), "colour despite NO_COLOR");
}

#[test]
fn triangle_outputs() {
    let t = fixture("triangle.g");
    let lines = |args: &[&str]| stdout(&run(args)).lines().count();
    assert_eq!(lines(&["coproduct", &t]), 5);
    assert_eq!(lines(&["coproduct", &t, "--mode", "hopf"]), 5);
    assert_eq!(lines(&["coproduct", &t, "--variant", "1pi", "--mode", "hopf"]), 2);
    assert_eq!(lines(&["coproduct", &t, "--variant", "cf"]), 4);
    assert_eq!(lines(&["cutcoproduct", &t]), 4);
    assert_eq!(lines(&["cuts", &t]), 4);
    assert_eq!(lines(&["covers", &t]), 5);
    assert_eq!(lines(&["covers", &t, "--variant", "1pi"]), 2);
    let hopf = stdout(&run(&["coproduct", &t, "--variant", "1pi", "--mode", "hopf"]));
    assert!(hopf.contains("1 * 1 (x) {3: 0->1, 0->2, 1->2}"), "{hopf}");
    let discard = stdout(&run(&["coproduct", &t, "--externals", "discard"]));
    assert!(discard.contains("2 * {1} {2: 0->1} (x) {2: 0->1, 0->1}"), "{discard}");
    let cuts = stdout(&run(&["cuts", &t]));
    assert!(cuts.contains("V1={c} V2={a,b}"), "{cuts}");
}

#[test]
fn hexagon_covers_flag_the_cyclic_contraction() {
    let out = stdout(&run(&["covers", &fixture("hexagon.g")]));
    let line = out.lines().find(|l| l.starts_with("{a,f} {b,c} {d,e} ")).expect("hexagon partition listed");
    assert!(line.contains("poset-compatible=no"), "{line}");
    let cf = stdout(&run(&["covers", &fixture("hexagon.g"), "--variant", "cf"]));
    assert!(!cf.contains("{a,f} {b,c} {d,e} "));
}

#[test]
fn canonical_text_ignores_names_and_order() {
    let a = stdout(&run(&["canon", &fixture("triangle.g")]));
    let b = stdout(&run(&["canon", &fixture("triangle_relabelled.g")]));
    assert_eq!(a, b);
    let c = stdout(&run(&["coproduct", &fixture("triangle.g")]));
    let d = stdout(&run(&["coproduct", &fixture("triangle_relabelled.g")]));
    assert_eq!(c, d);
}

#[test]
fn json_round_trips_through_the_cli() {
    let json = stdout(&run(&["render", &fixture("two_cycle.g"), "--format", "json"]));
    assert!(json.contains("\"format\": \"hopfgraph/1\""), "{json}");
    let path = std::env::temp_dir().join(format!("hopfgraph-cli-{}.json", std::process::id()));
    std::fs::write(&path, &json).unwrap();
    let via_json = stdout(&run(&["canon", path.to_str().unwrap()]));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(via_json, stdout(&run(&["canon", &fixture("two_cycle.g")])));
}

#[test]
fn law_check_passes_on_a_small_corpus() {
    let o = run(&["check", "--suite", "laws", "--max-vertices", "2", "--trials", "5", "--variant", "cf"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().starts_with("PASS"));
}
