use std::io::Write;
use std::process::{Command, Output, Stdio};

fn perfmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfmax"))
        .args(args)
        .env_remove("PERFMAX_CACHE")
        .env_remove("PERFMAX_CACHE_DIR")
        .env_remove("PERFMAX_WORKERS")
        .output()
        .expect("binary runs")
}

fn perfmax_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_perfmax"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes());
    r.records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect()
}

#[test]
fn omega_bound_is_exact() {
    let rows = csv_rows(&stdout(&perfmax(&[
        "bounds",
        "omega",
        "--vertices",
        "10",
        "--edges",
        "13",
        "--exact",
    ])));
    assert_eq!(rows[0], ["quantity", "value", "ln"]);
    assert_eq!(rows[1][..2], ["value", "12"]);
}

#[test]
fn tau_bounds_for_three() {
    let rows = csv_rows(&stdout(&perfmax(&["bounds", "tau", "--n", "3"])));
    assert_eq!(rows[1][0], "lower");
    assert_eq!(rows[2][..2], ["upper", "1"]);
}

#[test]
fn too_few_edges_is_a_precondition_error() {
    let o = perfmax(&["bounds", "omega", "--vertices", "10", "--edges", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edges"));
}

#[test]
fn exact_flag_rejects_fractional_values() {
    assert_eq!(
        perfmax(&["bounds", "tau", "--n", "5", "--exact"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn unknown_names_fail() {
    assert_eq!(
        perfmax(&["bounds", "nope", "--n", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        perfmax(&["construct", "nope", "--n", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(perfmax(&["count", "nope", "C~"]).status.code(), Some(1));
}

#[test]
fn counts_k4_from_argument_and_stdin() {
    assert_eq!(stdout(&perfmax(&["count", "perfmat", "C~"])), "3\n");
    assert_eq!(
        stdout(&perfmax_stdin(&["count", "perfmat"], "C~\nE~~w\n")),
        "3\n15\n"
    );
}

#[test]
fn malformed_graph6_exits_with_two() {
    assert_eq!(perfmax(&["count", "perfmat", "C~x"]).status.code(), Some(2));
    assert_eq!(perfmax(&["canon", "C\u{7f}"]).status.code(), Some(2));
}

#[test]
fn permanent_of_all_ones() {
    assert_eq!(
        stdout(&perfmax(&["count", "permanent", "111;111;111"])),
        "6\n"
    );
}

#[test]
fn exported_bt0_counts_sixteen() {
    let built = stdout(&perfmax(&["construct", "bt0", "--n", "4"]));
    let mut lines = built.lines();
    let code = lines.next().unwrap();
    assert_eq!(lines.next(), Some("count 16"));
    assert_eq!(stdout(&perfmax(&["count", "2factors", code])), "16\n");
}

#[test]
fn constructions_report_counts() {
    assert!(stdout(&perfmax(&["construct", "bt1", "--n", "5"])).ends_with("count 64\n"));
    let ext = stdout(&perfmax(&[
        "construct",
        "extremal",
        "--vertices",
        "10",
        "--edges",
        "13",
    ]));
    let code = ext.lines().next().unwrap();
    assert!(ext.ends_with("count 12\n"));
    // K_{2,2} and K_{3,3}: 4 + 9 edges, two components.
    assert_eq!(stdout(&perfmax(&["count", "perfmat", code])), "12\n");
    assert_eq!(
        perfmax(&["construct", "bt0", "--n", "5"]).status.code(),
        Some(1)
    );
}

#[test]
fn table1_tau_row() {
    let rows = csv_rows(&stdout(&perfmax(&["table1", "--max-n", "8"])));
    assert_eq!(rows[0], ["n", "3", "4", "5", "6", "7", "8"]);
    assert_eq!(rows[1], ["tau", "1", "1", "3", "9", "31", "102"]);
    assert_eq!(rows[2][0], "l.b.");
    assert_eq!(rows[3][..2], ["u.b.", "1"]);
}

#[test]
fn table2_cells_with_markers() {
    let rows = csv_rows(&stdout(&perfmax(&[
        "--workers",
        "2",
        "table2",
        "--n",
        "4,6",
    ])));
    assert_eq!(rows[0], ["m", "n=4", "n=6"]);
    let cell = |m: &str, col: usize| rows.iter().find(|r| r[0] == m).unwrap()[col].clone();
    assert_eq!(cell("6", 1), "3");
    assert_eq!(cell("6", 2), "2*");
    assert_eq!(cell("12", 2), "8*");
    assert_eq!(cell("15", 2), "15");
    assert_eq!(cell("7", 1), "");
}

#[test]
fn figure_data_needs_cache_or_compute() {
    let o = perfmax(&["figure-data", "--figure", "4", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sweep mu --n 6"));

    let dir = std::env::temp_dir().join(format!("perfmax-cli-test-{}", std::process::id()));
    let cache = dir.join("cache.csv");
    let cache = cache.to_str().unwrap();
    stdout(&perfmax(&["--cache", cache, "sweep", "mu", "--n", "6"]));
    let fig4 = csv_rows(&stdout(&perfmax(&[
        "--cache",
        cache,
        "figure-data",
        "--figure",
        "4",
        "--n",
        "6",
    ])));
    assert_eq!(fig4[0], ["m", "mu"]);
    let mu: Vec<u64> = fig4[1..].iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(mu.len(), 13);
    assert!(mu.windows(2).all(|w| w[0] <= w[1]));
    let fig5 = csv_rows(&stdout(&perfmax(&[
        "--cache",
        cache,
        "figure-data",
        "--figure",
        "5",
        "--n",
        "6",
    ])));
    assert_eq!(fig5[1], ["3", "1.000000"]);
    assert_eq!(fig5[7], ["9", "1.000000"]);
    assert!(fig5[1..]
        .iter()
        .all(|r| r[1].parse::<f64>().unwrap() >= 1.0));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn sweep_csv_lists_witnesses() {
    let rows = csv_rows(&stdout(&perfmax(&[
        "sweep", "mu", "--n", "6", "--edges", "6",
    ])));
    assert_eq!(rows[0][..5], ["kind", "n", "m", "max", "marker"]);
    assert_eq!(rows[1][..6], ["mu", "6", "6", "2", "*", "3"]);
    let rows = csv_rows(&stdout(&perfmax(&["sweep", "rho", "--n", "4"])));
    assert_eq!(rows[1][3], "16");
}

#[test]
fn sweep_reads_graph6_from_stdin() {
    let rows = csv_rows(&stdout(&perfmax_stdin(
        &["sweep", "mu", "--input", "-"],
        "Cr\nC]\nCw\nC~\n",
    )));
    assert_eq!(rows.len(), 4);
}

#[test]
fn sweep_size_limit_exits_with_three() {
    assert_eq!(
        perfmax(&["sweep", "tau", "--n", "13"]).status.code(),
        Some(3)
    );
}

#[test]
fn enumerate_and_canon_agree() {
    let out = stdout(&perfmax(&["enumerate", "graphs", "--n", "5"]));
    assert_eq!(out.lines().count(), 34);
    let canon = stdout(&perfmax_stdin(&["canon"], &out));
    let distinct: std::collections::BTreeSet<&str> = canon.lines().collect();
    assert_eq!(distinct.len(), 34);
    assert_eq!(stdout(&perfmax_stdin(&["canon"], &canon)), canon);
    assert_eq!(
        stdout(&perfmax(&["enumerate", "tournaments", "--n", "6"]))
            .lines()
            .count(),
        56
    );
    assert_eq!(
        stdout(&perfmax(&[
            "enumerate",
            "graphs",
            "--n",
            "5",
            "--edges",
            "5"
        ]))
        .lines()
        .count(),
        6
    );
}
