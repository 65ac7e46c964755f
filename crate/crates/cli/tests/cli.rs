//! End-to-end runs of the `rdpart` binary.

use std::process::{Command, Output};

fn rdpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdpart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn compute_family_path_csv() {
    let out = rdpart(&["compute", "--family", "path:9", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph6,n,diam,beta_p,eta_p,beta,gamma,eta,gamma_p"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[1], "9");
    assert_eq!(row[3], "2", "beta_p of a path is 2");
}

#[test]
fn compute_inline_k2_json() {
    let out = rdpart(&["compute", "--g6", "A_", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["eta_p"], 2);
    assert_eq!(v[0]["graph6"], "A_");
}

#[test]
fn compute_family_h6_has_eta_p_five() {
    let out = rdpart(&["compute", "--family", "h6:7", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[4], "5");
}

#[test]
fn compute_rejects_disconnected_with_exit_two() {
    let out = rdpart(&["compute", "--g6", "D??"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}

#[test]
fn compute_reports_parse_error_with_line_number() {
    let dir = std::env::temp_dir().join("rdpart-cli-test-badline");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    std::fs::write(&path, "A_\nnot a graph\n").unwrap();
    let out = rdpart(&["compute", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:"));
}

#[test]
fn generate_enumerate_five_yields_21_lines() {
    let out = rdpart(&["generate", "--enumerate", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 21);
}

#[test]
fn generate_lambda_seven_yields_17_lines() {
    let out = rdpart(&["generate", "--family", "lambda:7"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 17);
}

#[test]
fn generate_caterpillar_has_order_eight() {
    let out = rdpart(&["generate", "--family", "caterpillar:2,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let line = text.lines().next().unwrap();
    let g = rdpart::graph6::parse_graph6(line).unwrap();
    assert_eq!(g.order(), 8);
}

#[test]
fn augment_echoes_dominating_partition() {
    // Path on five vertices with its standard 3-part partition.
    let out = rdpart(&["augment", "--g6", "DhC", "--partition", "0|1,3|2,4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "0|1,3|2,4");
    assert_eq!(lines.next().unwrap(), "size 3");
}

#[test]
fn augment_star_grows_one_part() {
    let out = rdpart(&["augment", "--g6", "Cs", "--partition", "0,1|2|3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().nth(1).unwrap(), "size 4");
}

#[test]
fn augment_rejects_malformed_partition() {
    let out = rdpart(&["augment", "--g6", "Cs", "--partition", "0,1||3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn augment_rejects_non_resolving_partition() {
    // Triangle with both non-singleton parts tied.
    let out = rdpart(&["augment", "--g6", "Bw", "--partition", "0|1,2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not resolving"));
}

#[test]
fn verify_small_orders_pass() {
    let out = rdpart(&[
        "verify",
        "--orders",
        "3-5",
        "--checks",
        "etabeta_sandwich,gamma_p_equals_2,counting_bound",
        "--deterministic",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("etabeta_sandwich"));
}

#[test]
fn verify_writes_json_report() {
    let dir = std::env::temp_dir().join("rdpart-cli-test-report");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = rdpart(&[
        "verify",
        "--orders",
        "4-5",
        "--checks",
        "twin_bounds",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report[0]["id"], "twin_bounds");
    assert_eq!(report[0]["status"], "pass");
    assert_eq!(report[0]["corpus"]["orders"][0]["order"], 4);
}

#[test]
fn verify_corpus_file() {
    let dir = std::env::temp_dir().join("rdpart-cli-test-corpus");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    let gen = rdpart(&["generate", "--enumerate", "6"]);
    std::fs::write(&path, stdout(&gen)).unwrap();
    let out = rdpart(&[
        "verify",
        "--corpus",
        path.to_str().unwrap(),
        "--checks",
        "eta_p_n_charn,eta_p_n_minus_1_charn",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn verify_unsupported_order_suggests_corpus() {
    let out = rdpart(&["verify", "--orders", "9"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("corpus"));
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let out = rdpart(&["verify", "--orders", "4", "--checks", "bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_failing_check_exits_one() {
    // The recorded order-5 exception is refuted, so this check fails.
    let out = rdpart(&[
        "verify",
        "--orders",
        "5",
        "--checks",
        "beta_p_n_minus_1_charn",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("counterexamples"));
}
