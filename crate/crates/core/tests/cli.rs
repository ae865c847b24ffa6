use fours::cli::run;

fn fours(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("fours").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn mul_prints_canonical_form() {
    let (code, out, _) = fours(&["mul", "1+x", "1+(1-a)*y", "1-a*x"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 - a^2 + x - a*x"), "{out}");
    let (_, f2, _) = fours(&["--field", "fp:2", "mul", "1+x", "1+x"]);
    assert_eq!(f2.trim(), "1 + a");
}

#[test]
fn det_and_unit_verdicts() {
    let (code, out, _) = fours(&["det", "x"]);
    assert_eq!((code, out.as_str()), (0, "det = 1\nunit: true\n"));
    let (_, out, _) = fours(&["is-unit", "1+x"]);
    assert_eq!(out.trim(), "false");
    let (_, json, _) = fours(&["--json", "det", "-2*b*y"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["is_unit"], true);
    assert_eq!(v["det"], "16");
}

#[test]
fn invert_exit_codes() {
    let (code, out, _) = fours(&["invert", "2*a*x"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1/2*a^-2*x");
    let (code, out, _) = fours(&["invert", "1+x"]);
    assert_eq!(code, 1);
    assert!(out.contains("not a unit"));
}

#[test]
fn lengths_and_decompositions() {
    assert_eq!(fours(&["decompose", "c*y"]).1.trim(), "b | xyx");
    assert_eq!(fours(&["--quotient", "3", "decompose", "c*y"]).1.trim(), "c | y");
    assert_eq!(fours(&["length", "1 + a*xyx"]).1.trim(), "3");
    assert_eq!(fours(&["length", "0"]).1.trim(), "-inf");
}

#[test]
fn expand_factors_table() {
    let (code, out, _) = fours(&["expand-factors", "(1; 1; x) (1; 1-a; y) (1; -a; x)"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "xyx: -a^-1 + 1");
    assert_eq!(lines[6], "1: 1 - a^2");
    assert!(out.contains("gcd = -1 + a"));
    assert!(out.contains("unit: false"));
}

#[test]
fn chain_subcommands() {
    assert_eq!(fours(&["chains", "enumerate", "3", "x"]).1, "{b2, b2^x}\n");
    let (_, rec, _) = fours(&["chains", "recursive", "4", "y"]);
    assert_eq!(rec.lines().count(), 6);
    assert!(rec.contains("{a4, b2^y, b2^z}"));
    let (_, orbits, _) = fours(&["chains", "orbits", "4"]);
    assert_eq!(orbits.lines().filter(|l| l.starts_with("orbit")).count(), 2);
    let (_, bounded, _) = fours(&["chains", "enumerate", "4", "x", "--bound", "2"]);
    assert_eq!(bounded.lines().count(), 4);
}

#[test]
fn promislow_and_unique_products() {
    let (code, out, _) = fours(&["promislow"]);
    assert_eq!(code, 0);
    assert!(out.contains("none (196 pairs)"));

    let dir = std::env::temp_dir().join(format!("fours-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("set.txt");
    std::fs::write(&file, "# two elements\n1\nx\n").unwrap();
    let (code, out, _) = fours(&["unique-product", file.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("unique product"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn search_runs_over_finite_fields_only() {
    let (code, out, _) = fours(&["--field", "fp:2", "search", "--words", "1,x", "--exp-box", "-1..1", "--jobs", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("candidates: 262143"));
    assert!(out.contains("non-trivial units: 0"));
    let (code, _, err) = fours(&["search"]);
    assert_eq!(code, 2);
    assert!(err.contains("finite field"));
    let (code, _, err) = fours(&["--field", "f2", "search", "--max-word-len", "3", "--exp-box", "-1..1", "--budget", "1000"]);
    assert_eq!(code, 2);
    assert!(err.contains("budget"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fours(&["--field", "fp:4", "det", "x"]).0, 2);
    assert_eq!(fours(&["--quotient", "4", "length", "x"]).0, 2);
    assert_eq!(fours(&["frobnicate"]).0, 2);
    let (code, _, err) = fours(&["det", "1 + w"]);
    assert_eq!(code, 2);
    assert!(err.contains('w'));
    assert_eq!(fours(&["--help"]).0, 0);
}

#[test]
fn selftest_passes() {
    let (code, out, _) = fours(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("pass")));
}
