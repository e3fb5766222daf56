use std::io::Write;
use std::process::{Command, Stdio};

use ctl::cli::{run, EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERDICT};
use ctl::json::{CertificateJson, FractionalJson, GraphSidecar, InvariantJson, LabelingJson, PartitionJson, ThresholdJson};
use serde::de::DeserializeOwned;
use serde::Serialize;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ctl(args: &[&str], input: &str) -> Run {
    let mut argv = vec!["ctl"];
    argv.extend_from_slice(args);
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str], input: &str) -> String {
    let r = ctl(args, input);
    assert_eq!(r.code, EXIT_OK, "{args:?}: {}", r.stderr);
    r.stdout
}

/// Emit-then-parse must reproduce the same bytes.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) -> T {
    let v: T = serde_json::from_str(text).unwrap();
    assert_eq!(ctl::json::emit(&v), text);
    let again: T = serde_json::from_str(&ctl::json::emit(&v)).unwrap();
    assert_eq!(again, v);
    v
}

fn temp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("ctl-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn kneser_chromatic_number_through_a_pipe() {
    let g6 = ok(&["construct", "kneser", "5", "2"], "");
    assert_eq!(ok(&["invariant", "chi", "-"], &g6), "3\n");
}

#[test]
fn binary_pipeline_and_env_precedence() {
    let bin = env!("CARGO_BIN_EXE_ctl");
    let construct = Command::new(bin).args(["construct", "kneser", "5", "2"]).output().unwrap();
    assert!(construct.status.success());
    let mut child = Command::new(bin)
        .args(["invariant", "chi", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&construct.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"3\n");

    let g = temp("rh.g6", &ok(&["construct", "r-hajnal", "4", "1", "10", "2"], ""));
    let by_env = Command::new(bin)
        .args(["partition", "extract", "--r", "4", &g])
        .env("CTL_SEED", "5")
        .output()
        .unwrap();
    let by_flag = Command::new(bin)
        .args(["partition", "extract", "--r", "4", "--seed", "5", &g])
        .env_remove("CTL_SEED")
        .output()
        .unwrap();
    let flag_wins = Command::new(bin)
        .args(["partition", "extract", "--r", "4", "--seed", "5", &g])
        .env("CTL_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(by_env.stdout, by_flag.stdout);
    assert_eq!(flag_wins.stdout, by_flag.stdout);

    let capped = Command::new(bin)
        .args(["construct", "kneser", "12", "3"])
        .env("CTL_VERTEX_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_USAGE));
}

#[test]
fn classify_reports() {
    let k5 = ok(&["construct", "multipartite", "1", "1", "1", "1", "1"], "");
    let out = ok(&["classify", "-"], &k5);
    let t: ThresholdJson = round_trip(&out);
    assert_eq!(t.schema, "ctl/1");
    assert!(out.contains("\"delta_chi\":\"5/7\""));
    assert_eq!(t.delta_chi_vc.unwrap().0, ctl_core::rational::ratio(2, 3));

    let c5 = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let out = ok(&["classify", "-"], c5);
    assert!(out.starts_with("{\"schema\":\"ctl/1\",\"chi\":3,\"delta_chi\":\"0/1\""), "{out}");
    round_trip::<ThresholdJson>(&out);

    let k2 = ctl(&["classify", "-"], "2\n0 1\n");
    assert_eq!(k2.code, EXIT_USAGE);
}

#[test]
fn invariants() {
    let c5 = "5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    assert_eq!(ok(&["invariant", "chif", "-"], c5), "5/2\n");
    let json = ok(&["invariant", "chif", "--output", "json", "-"], c5);
    let inv: InvariantJson = round_trip(&json);
    let f: FractionalJson = serde_json::from_value(inv.detail.unwrap()).unwrap();
    assert_eq!(f.value.0, ctl_core::rational::ratio(5, 2));
    let g = ctl_core::Graph::cycle(5);
    ctl_core::fractional::verify_fractional(&g, &f.to_core(), &ctl_core::Budget::unlimited()).unwrap();

    assert_eq!(ok(&["invariant", "omega", "-"], c5), "2\n");
    assert_eq!(ok(&["invariant", "alpha", "-"], c5), "2\n");
    assert_eq!(ok(&["invariant", "girth", "-"], c5), "5\n");
    assert_eq!(ok(&["invariant", "girth", "-"], "3\n0 1\n"), "none\n");
    let shift = ok(&["construct", "shift", "6", "2"], "");
    assert_eq!(ok(&["invariant", "vc", "-"], &shift), "2\n");
}

#[test]
fn budget_and_usage_exit_codes() {
    let kn = ok(&["construct", "kneser", "7", "2"], "");
    let r = ctl(&["--budget", "10", "invariant", "chi", "-"], &kn);
    assert_eq!(r.code, EXIT_BUDGET, "{}", r.stderr);
    assert!(r.stderr.contains("budget"));

    assert_eq!(ctl(&["invariant", "chi"], "").code, EXIT_USAGE);
    assert_eq!(ctl(&["invariant", "chi", "-"], "2\n0 0\n").code, EXIT_USAGE);
    assert_eq!(ctl(&["construct", "hajnal", "1", "11", "2"], "").code, EXIT_USAGE);
    assert_eq!(ctl(&["--budget", "0", "invariant", "chi", "-"], "1\n").code, EXIT_USAGE);
    assert_eq!(ctl(&["invariant", "chi", "/nonexistent/file"], "").code, EXIT_USAGE);
    assert_eq!(ctl(&["--help"], "").code, EXIT_OK);
}

#[test]
fn construct_formats_and_sidecar() {
    let side = temp("kn.json", "");
    let el = ok(&["construct", "kneser", "5", "2", "--format", "edge-list", "--sidecar", &side], "");
    assert!(el.starts_with("10\n"));
    let s: GraphSidecar = round_trip(&std::fs::read_to_string(&side).unwrap());
    assert_eq!((s.family.as_str(), s.n, s.edges), ("kneser", 10, 15));
    assert_eq!(s.labels.as_ref().unwrap()[0], "{1,2}");
    assert_eq!(ok(&["invariant", "chi", "-"], &el), "3\n");

    let z = ok(&["construct", "zykov", "3", "1", "A_"], "");
    assert_eq!(ok(&["invariant", "omega", "-"], &z), "2\n");
    let vc = ok(&["construct", "vc-lower", "4", "5", "30"], "");
    assert_eq!(ok(&["invariant", "omega", "-"], &vc), "3\n");
    let h = ok(&["construct", "hajnal", "1", "10", "2"], "");
    assert_eq!(ok(&["invariant", "omega", "-"], &h), "2\n");
}

#[test]
fn partition_extract_verify_and_corruption() {
    let g6 = ok(&["construct", "r-hajnal", "4", "1", "20", "2"], "");
    let g = temp("rh20.g6", &g6);
    let p1 = ok(&["partition", "extract", "--r", "4", "--seed", "3", &g], "");
    let p2 = ok(&["partition", "extract", "--r", "4", "--seed", "3", &g], "");
    assert_eq!(p1, p2, "byte-deterministic per seed");
    let pj: PartitionJson = round_trip(&p1);
    assert_eq!(pj.kind, "clique_stability");
    let pf = temp("rh20.json", &p1);

    let refined = ok(&["partition", "refine", "--partition-file", &pf, &g], "");
    assert_eq!(refined, p1);

    // The Kneser clause is unknown at this size, so the overall verdict is 1.
    let r = ctl(&["verify", "clique", "--partition-file", &pf, &g], "");
    assert_eq!(r.code, EXIT_VERDICT);
    let cert: CertificateJson = round_trip(&r.stdout);
    assert!(r.stdout.contains("\"pass\":\"unknown\""));
    for c in &cert.clauses {
        if c.name != "Kneser homomorphism of A*" {
            assert_eq!(c.pass.0, ctl_core::stability::ClauseStatus::Pass, "{}", c.name);
        }
    }

    // Plant an edge inside B*_1.
    let b1 = &pj.b.as_ref().unwrap()[0];
    let graph = ctl::formats::from_graph6(&g6).unwrap();
    let mut edges: Vec<(usize, usize)> = graph.edges().collect();
    edges.push((b1[0].min(b1[1]), b1[0].max(b1[1])));
    let bad = ctl_core::Graph::from_edges(graph.n(), &edges).unwrap();
    let bad_path = temp("bad.g6", &ctl::formats::to_graph6(&bad));
    let r = ctl(&["verify", "clique", "--r", "4", "--partition-file", &pf, &bad_path], "");
    assert_eq!(r.code, EXIT_VERDICT);
    assert!(r.stderr.contains("B*_1 independent"), "{}", r.stderr);
    assert!(r.stderr.contains(&format!("edge {}-{}", b1[0], b1[1])), "{}", r.stderr);
}

#[test]
fn verify_passing_certificates() {
    let g = temp("k443.g6", &ok(&["construct", "multipartite", "4", "4", "3"], ""));
    let p = r#"{"kind":"clique_stability","r":4,"beta":"1/100","A":[10],"B":[[0,1,2,3],[4,5,6,7],[8,9]]}"#;
    let pf = temp("k443.json", p);
    let out = ok(&["verify", "clique", "--partition-file", &pf, &g], "");
    let c: CertificateJson = round_trip(&out);
    assert!(c.overall);

    let t = temp("k101010.g6", &ok(&["construct", "multipartite", "10", "10", "10"], ""));
    let tp = temp(
        "theta.json",
        r#"{"kind":"theta_stability","r":5,"beta":"1/2000","S":[20,21,22,23,24,25,26,27,28,29],"remainder":[]}"#,
    );
    let out = ok(&["verify", "theta", "--partition-file", &tp, &t], "");
    let c: CertificateJson = round_trip(&out);
    assert!(c.overall);

    let k4 = temp("k4.g6", &ok(&["construct", "multipartite", "1", "1", "1", "1"], ""));
    let lp = temp(
        "lambda.json",
        r#"{"kind":"lambda_stability","r":4,"beta":"1/100","A":[],"B":[[0,1,2,3],[4,5,6,7],[8,9,10]]}"#,
    );
    let out = ok(&["verify", "lambda", "--forbidden", &k4, "--partition-file", &lp, &g], "");
    assert!(round_trip::<CertificateJson>(&out).overall);
    assert_eq!(ctl(&["verify", "lambda", "--partition-file", &lp, &g], "").code, EXIT_USAGE);
}

#[test]
fn projection_command() {
    let l = ctl_core::fractional::KneserLabeling::identity(10, 4);
    let lf = temp("kn104.json", &ctl::json::emit(&LabelingJson::from(&l)));
    let g = temp("kn104.g6", &ok(&["construct", "kneser", "10", "4"], ""));
    let args = ["project", "--a", "10", "--b", "4", "--delta", "3/20", "--m", "120", "--seed", "1", "--graph", &g, &lf];
    let out = ok(&args, "");
    let p: LabelingJson = round_trip(&out);
    assert_eq!((p.a, p.b), (120, 30));
    assert_eq!(ok(&args, ""), out);
    assert_eq!(ctl(&["project", "--a", "9", "--delta", "3/20", "--m", "120", &lf], "").code, EXIT_USAGE);
    let hopeless = ctl(&["project", "--delta", "1/100", "--m", "10", "--max-retries", "1", &lf], "");
    assert!(hopeless.code == EXIT_VERDICT || hopeless.code == EXIT_OK);
}
