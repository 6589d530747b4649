use std::process::{Command, Output};

use proptest::prelude::*;

use powergraph_cli::spec::{parse_spec_with_cap, Atom, Family, GroupSpec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powergraph"))
        .args(args)
        .env_remove("PG_MAX_ORDER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "dominating", "--spec", "Q(16)"]);
    assert_eq!(o.status.code(), Some(0));
    let line: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(line["status"], "pass");
    assert_eq!(line["spec"], "Q(16)");
    assert!(line["wall_ms"].is_number());

    let o = run(&["verify", "alpha-formula", "--spec", "C(9)xC(2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("alpha = 2"));

    let o = run(&["verify", "pgroup-criterion", "--spec", "C(6)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "no-such-check"][..],
        &["verify", "dominating", "--spec", "C(6"],
        &["verify", "dominating", "--spec", "S(9)"],
        &["verify", "infinite-cyclic-window", "--spec", "C(6)"],
        &[
            "verify",
            "perfection-proxy",
            "--spec",
            "C(6)",
            "--inject-fault",
        ],
        &["analyze", "Q(12)"],
        &["export", "C(6)", "--graph", "other"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn order_cap_comes_from_the_environment() {
    let out = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_powergraph"))
            .args(["export", "C(100)", "--format", "edges"])
            .env("PG_MAX_ORDER", cap)
            .output()
            .unwrap()
    };
    assert_eq!(out("50").status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out("50").stderr).contains("exceeds the cap of 50"));
    assert_eq!(out("100").status.code(), Some(0));
}

#[test]
fn corpus_runs_keep_order_and_report_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# groups\nS(3)\n\nC(12)  # twelve\nQ(8)\n").unwrap();
    let o = run(&[
        "verify",
        "ham-connectivity",
        "--corpus",
        good.to_str().unwrap(),
        "--compare",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let specs: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["spec"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(specs, ["S(3)", "C(12)", "Q(8)"]);
    assert!(!stdout(&o).contains("wall_ms"));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "C(2)\nC(3)\nD(x)\n").unwrap();
    let o = run(&["verify", "dominating", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn corpus_skips_do_not_fail_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.txt");
    std::fs::write(&path, "C(8)\nC(6)\nD(4)\n").unwrap();
    let o = run(&[
        "verify",
        "pgroup-criterion",
        "--corpus",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let statuses: Vec<String> = stdout(&o)
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["status"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(statuses, ["pass", "skip", "pass"]);
}

#[test]
fn injected_fault_exits_1_with_counterexample() {
    let o = run(&[
        "verify",
        "adjacency-rule",
        "--spec",
        "C(4)xC(3)",
        "--inject-fault",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let line: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(line["status"], "fail");
    // first pair examined is (identity, next element): always adjacent
    assert_eq!(
        line["counterexample"]["elements"],
        serde_json::json!([0, 1])
    );
    assert_eq!(line["counterexample"]["actual"], "adjacent");
}

#[test]
fn window_and_chains_run_without_input() {
    let o = run(&["verify", "infinite-cyclic-window", "--window", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"checked\":81"));
    let o = run(&["verify", "truncation-chains", "--compare"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn analyze_formats() {
    let o = run(&["analyze", "C(6)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["power"]["alpha"], 2);
    assert_eq!(v["proper"]["vertices"], 5);
    assert_eq!(v["dominating"]["case"], "CyclicGenerators");

    let o = run(&["analyze", "S(3)", "--proper", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.contains("IdentityOnly"));
    assert!(!t.contains(" P(G)"));
    assert!(
        t.lines()
            .any(|l| l.starts_with("components") && l.ends_with('4')),
        "{t}"
    );

    assert_eq!(
        run(&["analyze", "C(300)", "--chi-cap", "50"]).status.code(),
        Some(2)
    );
}

#[test]
fn export_is_deterministic_and_sorted() {
    let a = run(&["export", "D(5)", "--format", "edges"]);
    let b = run(&["export", "D(5)", "--format", "edges"]);
    assert_eq!(a.stdout, b.stdout);
    let edges: Vec<(usize, usize)> = stdout(&a)
        .lines()
        .map(|l| {
            let (u, v) = l.split_once(' ').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert!(edges.windows(2).all(|w| w[0] < w[1]));
    assert!(edges.iter().all(|&(u, v)| u < v && v < 10));
    // D(5): identity joined to 9 others, rotations form a K4, reflections only meet 1
    assert_eq!(edges.len(), 9 + 6);

    let dot = stdout(&run(&["export", "C(3)", "--graph", "directed"]));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("1 -> 0;"));
}

fn arb_spec() -> impl Strategy<Value = GroupSpec> {
    let atom = prop_oneof![
        (1u64..=1000).prop_map(|n| Atom::new(Family::Cyclic, n)),
        (1u64..=1000).prop_map(|n| Atom::new(Family::Dihedral, n)),
        (3u32..=10).prop_map(|k| Atom::new(Family::Quaternion, 1 << k)),
        (1u64..=6).prop_map(|n| Atom::new(Family::Symmetric, n)),
    ];
    proptest::collection::vec(atom, 1..=4)
        .prop_map(|atoms| GroupSpec::new(atoms, u64::MAX).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn render_parse_round_trip(spec in arb_spec(), upper in any::<bool>()) {
        let text = spec.render();
        prop_assert_eq!(parse_spec_with_cap(&text, u64::MAX).unwrap(), spec.clone());
        let noisy = text.replace('x', if upper { " X " } else { "\tx\n" });
        let noisy = if upper { noisy } else { noisy.to_lowercase() };
        let again = parse_spec_with_cap(&noisy, u64::MAX).unwrap();
        prop_assert_eq!(again.render(), text);
    }
}
