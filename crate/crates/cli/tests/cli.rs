use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(o)))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_code_writes_manifest_and_code() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c");
    let o = run(&[
        "gen",
        "code",
        "--n",
        "20",
        "--r",
        "1",
        "--seed",
        "4",
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let m = json(&o);
    assert_eq!(m["command"], "gen code");
    assert_eq!(m["seed"], 4);
    assert!(m["outputs"]["code.txt"].is_string());
    let text = std::fs::read_to_string(out.join("code.txt")).unwrap();
    assert!(text.starts_with("trifcode 20 "));
    assert!(out.join("manifest.json").exists());
}

#[test]
fn replay_reproduces_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("two");
    let o = run(&[
        "gen",
        "two-component",
        "--ell",
        "5",
        "--a",
        "20",
        "--plant",
        "200",
        "--seed",
        "2",
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0);
    let again = dir.path().join("again");
    let r = run(&["replay", p(&out.join("manifest.json")), "--out", p(&again)]);
    assert_eq!(code(&r), 0, "{}", stdout(&r));
    let v = json(&r);
    assert_eq!(v["identical"], true);
    assert_eq!(v["manifest_hash_valid"], true);
    for name in ["chi.txt", "phi.txt", "manifest.json"] {
        assert_eq!(
            std::fs::read(out.join(name)).unwrap(),
            std::fs::read(again.join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn replay_detects_tampered_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rb");
    assert_eq!(
        code(&run(&[
            "gen",
            "rainbow",
            "--ell",
            "4",
            "--a",
            "20",
            "--seed",
            "1",
            "--out",
            p(&out)
        ])),
        0
    );
    let manifest = out.join("manifest.json");
    let text = std::fs::read_to_string(&manifest).unwrap();
    let mut m: serde_json::Value = serde_json::from_str(&text).unwrap();
    m["outputs"]["phi.txt"] = serde_json::Value::String("0".repeat(64));
    std::fs::write(&manifest, serde_json::to_string_pretty(&m).unwrap()).unwrap();
    let r = run(&["replay", p(&manifest)]);
    assert_eq!(code(&r), 1);
    assert_eq!(json(&r)["identical"], false);
}

#[test]
fn verify_checks_pass_on_generated_instances() {
    let dir = tempfile::tempdir().unwrap();
    let tight = dir.path().join("t");
    assert_eq!(
        code(&run(&[
            "gen",
            "tight",
            "--n",
            "40",
            "--r",
            "2",
            "--seed",
            "5",
            "--out",
            p(&tight)
        ])),
        0
    );
    let o = run(&[
        "verify",
        "red-tripartite",
        "--in",
        p(&tight.join("chi.txt")),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(json(&o)["passed"], true);

    let two = dir.path().join("two");
    assert_eq!(
        code(&run(&[
            "gen",
            "two-component",
            "--ell",
            "6",
            "--a",
            "20",
            "--plant",
            "500",
            "--seed",
            "3",
            "--out",
            p(&two)
        ])),
        0
    );
    let chi = two.join("chi.txt");
    let o = run(&[
        "verify",
        "phi-constancy",
        "--in",
        p(&chi),
        "--pairs",
        p(&two.join("phi.txt")),
        "--cross-law",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&[
        "verify",
        "pairwise-iterated",
        "--in",
        p(&chi),
        "--format",
        "csv",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(
        stdout(&o).lines().any(|l| l == "report,passed,true"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn biclique_and_rainbow_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rb");
    assert_eq!(
        code(&run(&[
            "gen",
            "rainbow",
            "--ell",
            "7",
            "--a",
            "20",
            "--seed",
            "8",
            "--out",
            p(&out)
        ])),
        0
    );
    let phi = out.join("phi.txt");
    let o = run(&["verify", "biclique", "--in", p(&phi)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["summary"]["classes_checked"], 140);
    let o = run(&[
        "verify",
        "rainbow-count",
        "--in",
        p(&phi),
        "--samples",
        "20",
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(json(&o)["summary"]["counts"].as_array().unwrap().len(), 20);
}

#[test]
fn corrupted_pair_coloring_fails_biclique_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rb");
    assert_eq!(
        code(&run(&[
            "gen",
            "rainbow",
            "--ell",
            "4",
            "--a",
            "20",
            "--seed",
            "1",
            "--out",
            p(&out)
        ])),
        0
    );
    let phi = out.join("phi.txt");
    let text = std::fs::read_to_string(&phi).unwrap();
    // pairs 01, 02, 12 come first; make all three one color, an odd cycle
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    let body = lines
        .iter()
        .position(|l| !l.starts_with("paircol") && !l.starts_with('#'))
        .unwrap();
    let mut colors: Vec<String> = lines[body].split_whitespace().map(str::to_owned).collect();
    colors[1] = colors[0].clone();
    colors[2] = colors[0].clone();
    lines[body] = colors.join(" ");
    std::fs::write(&phi, lines.join("\n") + "\n").unwrap();
    let o = run(&["verify", "biclique", "--in", p(&phi)]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert_eq!(json(&o)["passed"], false);
}

#[test]
fn clique_and_extraction() {
    let dir = tempfile::tempdir().unwrap();
    let blue = dir.path().join("blue.txt");
    // ten vertices, all 120 triples blue: two zero words
    std::fs::write(&blue, "tripcol 10\n0000000000000000\n0000000000000000\n").unwrap();
    let o = run(&["clique", "exact", "--in", p(&blue)]);
    assert_eq!(
        code(&o),
        0,
        "{}{}",
        stdout(&o),
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(json(&o)["size"], 10);

    let t = dir.path().join("t");
    assert_eq!(
        code(&run(&[
            "gen",
            "tight",
            "--n",
            "7",
            "--seed",
            "3",
            "--out",
            p(&t)
        ])),
        0
    );
    let o = run(&["extract", "halving", "--in", p(&t.join("chi.txt"))]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["size"].as_u64().unwrap() >= 3);
    let o = run(&["extract", "iterated", "--in", p(&blue)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(json(&o)["size"].as_u64().unwrap() >= 4);
}

#[test]
fn tree_commands() {
    let o = run(&[
        "tree",
        "score",
        "--tree",
        "((0 1) (2 3))",
        "--weight",
        "3/2",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("score 1\n"), "{}", stdout(&o));
    let o = run(&["tree", "rotate-to-balance", "--tree", "(((0 1) 2) 3)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("d_total=9->8"));
    let o = run(&["tree", "split", "--set", "0,1,2,3,5", "--ell", "3"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn t_table_rows() {
    let o = run(&["t-table", "--max-s", "9"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().last(), Some("9 30"));
}

#[test]
fn exit_codes_for_guards_and_bad_input() {
    assert_eq!(code(&run(&["t-table", "--max-s", "100"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "garbage\n").unwrap();
    let o = run(&["verify", "red-tripartite", "--in", p(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    assert_eq!(
        code(&run(&[
            "verify",
            "red-tripartite",
            "--in",
            p(&dir.path().join("missing"))
        ])),
        2
    );
    assert_eq!(code(&run(&["no-such-command"])), 2);
    let big = dir.path().join("big.txt");
    let words = (70u64 * 69 * 68 / 6).div_ceil(64);
    std::fs::write(
        &big,
        format!(
            "tripcol 70\n{}",
            "0000000000000000\n".repeat(words as usize)
        ),
    )
    .unwrap();
    assert_eq!(code(&run(&["clique", "exact", "--in", p(&big)])), 3);
}
