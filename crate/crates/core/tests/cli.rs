use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_longcycles"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Drops the timing field so reports can be compared byte for byte.
fn without_millis(s: &str) -> String {
    s.lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            v.as_object_mut().unwrap().remove("millis");
            v.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn enumerate_fig5_with_both_algorithms() {
    let fig5 = stdout(&run(&["construct", "fixture", "--name", "fig5"], ""));
    let dir = std::env::temp_dir().join(format!("longcycles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig5.g6");
    std::fs::write(&path, &fig5).unwrap();
    let p = path.to_str().unwrap();
    let o = run(
        &["enumerate", "--input", p, "--algorithm", "both", "--list"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("AGREEMENT"));
    let reports: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 2);
    for r in &reports {
        assert_eq!(r["schema"], 1);
        assert_eq!(r["n"], 24);
        assert_eq!(r["circumference"], 18);
        assert_eq!(r["count"], 4);
        assert_eq!(r["cycles"].as_array().unwrap().len(), 4);
    }
    assert_eq!(reports[0]["algorithm"], "dfs");
    assert_eq!(reports[1]["algorithm"], "dp");
    let again = run(
        &["enumerate", "--input", p, "--algorithm", "both", "--list"],
        "",
    );
    assert_eq!(without_millis(&stdout(&o)), without_millis(&stdout(&again)));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_edgeless_graph() {
    let o = run(&["enumerate", "--list"], "D??\n");
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["circumference"], 0);
    assert_eq!(r["cycles"], serde_json::json!([]));
}

#[test]
fn verify_aliases() {
    let o = run(&["verify", "prop2.2", "--r", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("formula=48 enumerated=48 PASS"));
    let o = run(&["verify", "prop2.1", "--r", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c1=24"));
    let o = run(
        &[
            "verify", "thm3.6", "--girth", "4", "--blocks", "1,0", "--blocks", "1,1",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["enumerate", "--algorithm", "bogus"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate"], "not graph6 !!\n").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "st-paths", "--s", "0", "--t", "0"], "C~\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["bounds", "verify", "--r-max", "20"], "")
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn census_skips_bad_records() {
    let o = run(&["census", "--non-hamiltonian"], "C~\n???bad\nIheA@GUAo\n");
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["schema"], 1);
    assert_eq!(r["records"], 3);
    assert_eq!(r["unreadable"].as_array().unwrap().len(), 1);
    assert_eq!(r["per_order"]["10"]["witness"], "IheA@GUAo");
}

#[test]
fn construct_writes_graph6_and_prediction() {
    let dir = std::env::temp_dir().join(format!("longcycles-construct-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g6 = dir.join("fam.g6");
    let js = dir.join("fam.json");
    let o = run(
        &[
            "construct",
            "family",
            "--ell",
            "2",
            "--output",
            g6.to_str().unwrap(),
            "--prediction",
            js.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let g = longcycles::parse_graph6(std::fs::read_to_string(&g6).unwrap().trim()).unwrap();
    assert_eq!(g.n(), 28);
    let p: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&js).unwrap()).unwrap();
    assert_eq!(p["order"], 28);
    assert_eq!(p["count"], "4");
    let ring = stdout(&run(&["construct", "ring", "--r", "4"], ""));
    assert_eq!(ring.lines().count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
