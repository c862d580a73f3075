use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linlayout"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn p(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let file = p(dir, name);
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", s(&file)]);
    let out = run(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    file
}

#[test]
fn gen_headers() {
    assert!(stdout(&run(&["gen", "hexdual", "3"])).starts_with("9 16\n"));
    assert!(stdout(&run(&["gen", "complete", "6"])).starts_with("6 15\n"));
    let prod = run(&["gen", "product", "--left", "star:5", "--right", "hexdual:3"]);
    assert!(stdout(&prod).starts_with("54 141\n"));
    assert_eq!(code(&run(&["gen", "nosuch", "3"])), 2);
    assert_eq!(code(&run(&["gen", "complete"])), 2);
}

#[test]
fn seeds_fix_random_graphs() {
    let a = stdout(&run(&["gen", "tree", "12", "--seed", "4"]));
    let b = stdout(&run(&["gen", "tree", "12", "--seed", "4"]));
    let c = stdout(&run(&["gen", "tree", "12", "--seed", "5"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn layout_then_verify() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let cases: &[(&[&str], &str)] = &[
        (&["tree", "9", "--seed", "1"], "tree-stack"),
        (&["tree", "9", "--seed", "1"], "tree-queue"),
        (&["unicyclic", "9", "--seed", "2"], "unicyclic-queue"),
        (&["complete", "7"], "complete-stack"),
        (&["complete", "7"], "complete-queue"),
        (
            &["complete-bipartite", "3", "4"],
            "complete-bipartite-queue",
        ),
        (&["xtree", "3"], "xtree-stack"),
        (&["xtree", "3"], "xtree-queue"),
        (&["ktree", "3", "9", "--seed", "3"], "ktree-stack"),
        (&["triangulation", "10", "--seed", "4"], "outerplanar-stack"),
        (
            &["triangulation", "10", "--seed", "4"],
            "one-stack-two-queue",
        ),
        (&["fan", "7"], "one-stack-two-queue"),
        (&["hexdual", "4"], "hex-strict-queue"),
        (&["random", "8", "14", "--seed", "5"], "rainbow"),
        (&["random", "8", "14", "--seed", "5"], "greedy-stack"),
        (&["random", "8", "14", "--seed", "5"], "exact-stack-order"),
        (&["random", "8", "14", "--seed", "5"], "vc-stack"),
        (&["complete", "5"], "exact-queue"),
        (&["complete", "5"], "exact-stack"),
        (&["cycle", "8"], "two-stack"),
    ];
    for (i, (gen_args, algo)) in cases.iter().enumerate() {
        let g = gen(d, &format!("g{i}.txt"), gen_args);
        let l = p(d, &format!("l{i}.json"));
        let out = run(&["layout", s(&g), algo, "--out", s(&l)]);
        assert_eq!(
            code(&out),
            0,
            "{algo}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(code(&run(&["verify", s(&g), s(&l)])), 0, "{algo}");
    }
}

#[test]
fn complete_seven_needs_four_stacks_here() {
    let dir = TempDir::new().unwrap();
    let g = gen(dir.path(), "k7", &["complete", "7"]);
    let l = p(dir.path(), "k7.json");
    assert_eq!(
        code(&run(&["layout", s(&g), "complete-stack", "--out", s(&l)])),
        0
    );
    let text = std::fs::read_to_string(&l).unwrap();
    assert!(text.contains("\"k\": 4"));
}

#[test]
fn subdivision_writes_both_files() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let g = gen(d, "k6", &["complete", "6"]);
    let (sg, sl) = (p(d, "sub.txt"), p(d, "sub.json"));
    let out = run(&[
        "layout",
        s(&g),
        "subdivision",
        "--graph-out",
        s(&sg),
        "--out",
        s(&sl),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["verify", s(&sg), s(&sl)])), 0);
    assert_eq!(code(&run(&["layout", s(&g), "subdivision"])), 2);
}

#[test]
fn inapplicable_algorithms_exit_three() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let u = gen(d, "u", &["unicyclic", "8", "--seed", "1"]);
    assert_eq!(code(&run(&["layout", s(&u), "complete-stack"])), 3);
    assert_eq!(code(&run(&["layout", s(&u), "tree-queue"])), 3);
    let k4 = gen(d, "k4", &["complete", "4"]);
    assert_eq!(code(&run(&["layout", s(&k4), "outerplanar-stack"])), 3);
    let k5 = gen(d, "k5", &["complete", "5"]);
    assert_eq!(code(&run(&["layout", s(&k5), "two-stack"])), 3);
    assert_eq!(code(&run(&["layout", s(&k5), "no-such-algorithm"])), 2);
}

#[test]
fn verify_reports_violations_and_input_errors() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let k4 = gen(d, "k4", &["complete", "4"]);
    let bad = p(d, "bad.json");
    let pages: Vec<String> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|(u, v)| format!("{{\"u\":{u},\"v\":{v},\"page\":1}}"))
        .collect();
    let text = format!(
        "{{\"kind\":\"queue\",\"strict\":false,\"order\":[0,1,2,3],\"k\":1,\"pages\":[{}]}}",
        pages.join(",")
    );
    std::fs::write(&bad, &text).unwrap();
    let out = run(&["verify", s(&k4), s(&bad)]);
    assert_eq!(code(&out), 1);
    let report = stdout(&out);
    assert_eq!(report.lines().filter(|l| l.starts_with("page")).count(), 1);
    assert!(report.contains("(0,3) (1,2)"));

    let truncated = p(d, "trunc.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&run(&["verify", s(&k4), s(&truncated)])), 2);
    assert_eq!(code(&run(&["verify", s(&k4), "/nonexistent/file"])), 2);
    let garbage = p(d, "garbage.txt");
    std::fs::write(&garbage, "3 1\n0 x\n").unwrap();
    assert_eq!(code(&run(&["verify", s(&garbage), s(&bad)])), 2);
}

#[test]
fn strict_flag_tightens_queues() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let s3 = gen(d, "s3", &["star", "3"]);
    let l = p(d, "s3.json");
    assert_eq!(
        code(&run(&["layout", s(&s3), "tree-queue", "--out", s(&l)])),
        0
    );
    assert_eq!(code(&run(&["verify", s(&s3), s(&l)])), 0);
    assert_eq!(code(&run(&["verify", s(&s3), s(&l), "--strict"])), 1);
}

#[test]
fn exact_and_size_limits() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let k4 = gen(d, "k4", &["complete", "4"]);
    let out = run(&["exact", "--kind", "queue", s(&k4)]);
    assert_eq!((code(&out), stdout(&out)), (0, "2\n".to_string()));
    let threaded = run(&["exact", "--kind", "stack", s(&k4), "--threads", "3"]);
    assert_eq!(stdout(&threaded), "2\n");
    let k12 = gen(d, "k12", &["complete", "12"]);
    assert_eq!(code(&run(&["exact", "--kind", "stack", s(&k12)])), 4);
}

#[test]
fn bounds_and_witnesses() {
    assert_eq!(
        stdout(&run(&["bounds", "subdivision-queue", "1", "1"])),
        "7\n"
    );
    assert_eq!(code(&run(&["bounds", "nosuch", "1"])), 2);
    let dir = TempDir::new().unwrap();
    let k6 = gen(dir.path(), "k6", &["complete", "6"]);
    let out = run(&["witness", s(&k6), "--kind", "twist", "--exact"]);
    assert_eq!(code(&out), 0);
    let w: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(w["edges"].as_array().unwrap().len(), 3);
    let out = run(&["witness", s(&k6), "--kind", "rainbow"]);
    let w: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(w["kind"], "rainbow");
    assert_eq!(w["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn pipeline_traces() {
    let out = run(&["pipeline", "-a", "6", "-n", "2"]);
    assert_eq!(code(&out), 0);
    let t: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(t["case_tag"], "case2");
    assert!(t["stack_lower_bound"].as_u64().unwrap() >= 2);
    let out = run(&["pipeline", "-a", "1", "-n", "2", "--order", "identity"]);
    let t: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(t["twist"].is_null());
    assert_eq!(t["insufficiency"]["paths"], 1);
    let a = stdout(&run(&[
        "pipeline", "-a", "9", "--order", "random", "--seed", "3",
    ]));
    let b = stdout(&run(&[
        "pipeline", "-a", "9", "--order", "random", "--seed", "3",
    ]));
    assert_eq!(a, b);
    let params: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["pipeline", "--params", "1"]))).unwrap();
    assert_eq!(params["n"], 3);
    assert_eq!(params["d"], 73);
}

#[test]
fn render_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let k4 = gen(d, "k4", &["complete", "4"]);
    let l = p(d, "k4.json");
    assert_eq!(
        code(&run(&["layout", s(&k4), "complete-stack", "--out", s(&l)])),
        0
    );
    let svg = p(d, "k4.svg");
    assert_eq!(code(&run(&["render", s(&k4), s(&l), "--out", s(&svg)])), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<path").count(), 6);
    assert!(text.starts_with("<svg"));

    // files written by the CLI read back to the same bytes
    let g_text = std::fs::read_to_string(&k4).unwrap();
    let regen = gen(d, "k4b", &["complete", "4"]);
    assert_eq!(std::fs::read_to_string(regen).unwrap(), g_text);
    let hex = gen(d, "hex", &["hexdual", "3"]);
    let hl = p(d, "hex.json");
    assert_eq!(
        code(&run(&[
            "layout",
            s(&hex),
            "hex-strict-queue",
            "--out",
            s(&hl)
        ])),
        0
    );
    let back =
        linear_layouts::layout::layout_from_json(&std::fs::read_to_string(&hl).unwrap()).unwrap();
    assert_eq!(
        linear_layouts::layout::layout_to_json(&back),
        std::fs::read_to_string(&hl).unwrap()
    );
    let g = linear_layouts::graph::parse_graph(&std::fs::read_to_string(&hex).unwrap()).unwrap();
    assert_eq!(
        linear_layouts::graph::write_graph(&g),
        std::fs::read_to_string(&hex).unwrap()
    );
}
