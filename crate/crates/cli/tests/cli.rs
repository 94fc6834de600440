use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::time::Duration;

use holefree::report::Status;
use holefree::verify::{run_with_timeout, verify_corpus, Outcome, Suite, VerifyOptions};
use holefree_core::format::to_graph6;
use holefree_core::generate::{cycle, grotzsch, petersen};
use holefree_core::Graph;
use serde_json::Value;

fn bin(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holefree")).args(args).current_dir(cwd).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write_g6(dir: &Path, name: &str, g: &Graph) {
    fs::write(dir.join(name), to_graph6(g) + "\n").unwrap();
}

#[test]
fn check_reports_a_witness() {
    let d = tempfile::tempdir().unwrap();
    write_g6(d.path(), "c9.g6", &cycle(9).unwrap());
    let out = bin(&["check", "c9.g6", "--class", "G", "--ell", "2"], d.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"], serde_json::json!([0, 1, 2, 3, 4, 5, 6, 7, 8]));
    assert_eq!(v["witness_kind"], "long-odd-hole");

    let out = bin(&["check", "c9.g6", "--class", "b", "--ell", "4"], d.path());
    assert_eq!(json(&out)["member"], true);
}

#[test]
fn color_methods() {
    let d = tempfile::tempdir().unwrap();
    write_g6(d.path(), "c7.g6", &cycle(7).unwrap());
    let out = bin(&["color", "c7.g6", "--method", "a3"], d.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["colors_used"].as_u64().unwrap() <= 4);
    assert_eq!(v["proper"], true);
    assert_eq!((v["coloring"]["3"].as_u64(), v["coloring"]["4"].as_u64()), (Some(3), Some(4)));

    for m in ["dsatur", "exact"] {
        let v = json(&bin(&["color", "c7.g6", "--method", m], d.path()));
        assert_eq!(v["colors_used"], 3, "{m}");
    }

    let v = json(&bin(&["color", "c7.g6", "--class", "G", "--ell", "2"], d.path()));
    assert_eq!((v["bound"].as_u64(), v["within"].as_bool()), (Some(1456), Some(true)));
}

#[test]
fn color_reports_evidence_and_non_members() {
    let d = tempfile::tempdir().unwrap();
    // A wheel: the first layer around the hub is a 5-cycle.
    fs::write(d.path().join("w5.txt"), "n 6\n0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
    let out = bin(&["color", "w5.txt"], d.path());
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["colored"], false);
    assert_eq!(v["evidence"]["layer"], 1);
    assert_eq!(v["evidence"]["odd_cycle"].as_array().unwrap().len(), 5);

    let out = bin(&["color", "w5.txt", "--class", "B", "--ell", "3"], d.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["kind"], "triangle");
}

#[test]
fn chroma_and_holes() {
    let d = tempfile::tempdir().unwrap();
    write_g6(d.path(), "grotzsch.g6", &grotzsch());
    let v = json(&bin(&["chroma", "grotzsch.g6"], d.path()));
    assert_eq!(v["chi"], 4);
    write_g6(d.path(), "p.g6", &petersen());
    let v = json(&bin(&["holes", "p.g6", "--max-len", "5"], d.path()));
    assert_eq!(v["count"], 12);
    // Girth 5 leaves no room for a chord in a 6-cycle, so all ten 6-cycles are induced.
    let v = json(&bin(&["holes", "p.g6", "--max-len", "6"], d.path()));
    assert_eq!(v["count"], 22);
}

#[test]
fn oracle_cap_comes_from_the_environment() {
    let d = tempfile::tempdir().unwrap();
    write_g6(d.path(), "p.g6", &petersen());
    let out = Command::new(env!("CARGO_BIN_EXE_holefree"))
        .args(["chroma", "p.g6"])
        .env(holefree::ORACLE_CAP_ENV, "5")
        .current_dir(d.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("too large"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(bin(&["frobnicate"], d.path()).status.code(), Some(2));
    assert_eq!(bin(&["check", "x.g6", "--class", "Q", "--ell", "2"], d.path()).status.code(), Some(2));
    assert_eq!(bin(&["check", "missing.g6", "--class", "G", "--ell", "2"], d.path()).status.code(), Some(2));
    assert_eq!(bin(&["check", "missing.g6", "--class", "G", "--ell", "1"], d.path()).status.code(), Some(2));
    fs::write(d.path().join("loop.txt"), "n 2\n0 0\n").unwrap();
    let out = bin(&["chroma", "loop.txt"], d.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    fs::write(d.path().join("bad.g6"), "A_?\n").unwrap();
    let out = bin(&["chroma", "bad.g6"], d.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 2"));
}

#[test]
fn gen_writes_named_members() {
    let d = tempfile::tempdir().unwrap();
    let out = bin(
        &[
            "gen",
            "--class",
            "B",
            "--ell",
            "3",
            "--seven-hole-free",
            "--n",
            "20",
            "--seed",
            "5",
            "--count",
            "2",
            "--out",
            "corpus",
        ],
        d.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 2);
    for name in ["B3+7hf_20_5.g6", "B3+7hf_20_6.g6"] {
        let path = d.path().join("corpus").join(name);
        let c = bin(&["check", path.to_str().unwrap(), "--class", "B", "--ell", "3", "--seven-hole-free"], d.path());
        assert_eq!(json(&c)["member"], true);
    }
    let out = bin(&["gen", "--class", "G", "--ell", "2", "--n", "0", "--seed", "1", "--out", "e"], d.path());
    assert_eq!(fs::read_to_string(d.path().join("e/G2_0_1.g6")).unwrap(), "?\n");
    assert_eq!(out.status.code(), Some(0));
    let out = bin(
        &["gen", "--class", "G", "--ell", "2", "--n", "9", "--seed", "1", "--density", "0", "--out", "z"],
        d.path(),
    );
    assert_eq!(json(&out)["graphs"][0]["edges"], 0);
    let bad = bin(
        &["gen", "--class", "G", "--ell", "2", "--n", "9", "--seed", "1", "--density", "2", "--out", "z"],
        d.path(),
    );
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_small_corpora() {
    let d = tempfile::tempdir().unwrap();
    let corpus = d.path().join("g2");
    fs::create_dir(&corpus).unwrap();
    write_g6(&corpus, "petersen.g6", &petersen());
    write_g6(&corpus, "c7.g6", &cycle(7).unwrap());
    let out = bin(&["verify", "g2", "--report", "r.json", "--suite", "g2"], d.path());
    assert_eq!(out.status.code(), Some(0));
    let rep: Value = serde_json::from_str(&fs::read_to_string(d.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(rep["schema_version"], "holefree-verify/1");
    let records = rep["records"].as_array().unwrap();
    assert_eq!(records[0]["file"], "c7.g6");
    assert_eq!(records[1]["file"], "petersen.g6");
    assert_eq!(rep["summary"]["pass"], 12);
    assert_eq!(rep["summary"]["fail"], 0);

    let c9 = d.path().join("c9");
    fs::create_dir(&c9).unwrap();
    write_g6(&c9, "c9.g6", &cycle(9).unwrap());
    fs::write(c9.join("junk.g6"), "not graph6\n").unwrap();
    fs::write(c9.join("notes.md"), "ignored").unwrap();
    let out = bin(&["verify", "c9", "--report", "r9.json", "--suite", "g2"], d.path());
    assert_eq!(out.status.code(), Some(0));
    let rep: Value = serde_json::from_str(&fs::read_to_string(d.path().join("r9.json")).unwrap()).unwrap();
    assert_eq!(rep["summary"]["files"], 2);
    assert_eq!(rep["summary"]["errors"], 1);
    assert_eq!(rep["summary"]["skipped"], 6);
    assert!(rep["records"][1]["error"].as_str().unwrap().contains("byte"));
    let props = rep["records"][0]["properties"].as_array().unwrap();
    assert!(props.iter().all(|p| p["status"] == "skipped" && p["reason"].as_str().unwrap().starts_with("not in G2")));

    fs::create_dir(d.path().join("empty")).unwrap();
    let out = bin(&["verify", "empty", "--report", "re.json"], d.path());
    assert_eq!(out.status.code(), Some(0));
    let rep: Value = serde_json::from_str(&fs::read_to_string(d.path().join("re.json")).unwrap()).unwrap();
    assert_eq!(rep["records"], serde_json::json!([]));
}

#[test]
fn verify_library_runs_every_suite() {
    let d = tempfile::tempdir().unwrap();
    write_g6(d.path(), "c7.g6", &cycle(7).unwrap());
    write_g6(d.path(), "c6.g6", &cycle(6).unwrap());
    let rep =
        verify_corpus(d.path(), &VerifyOptions { suites: Suite::ALL.to_vec(), ..VerifyOptions::default() }).unwrap();
    assert!(!rep.has_failures());
    let names: Vec<&str> = rep.records[0].properties.iter().map(|p| p.name.as_str()).collect();
    assert!(names.contains(&"four_color") && names.contains(&"weak_stabilize") && names.contains(&"chi_le_12l_plus_8"));
    assert!(rep.records.iter().all(|r| r.chi.is_some_and(|c| c.exact)));
}

#[test]
fn timeouts_and_panics_are_recorded() {
    let (o, _) = run_with_timeout(Duration::from_millis(20), || {
        std::thread::sleep(Duration::from_millis(500));
        Outcome { status: Status::Pass, reason: None, detail: None, witness: None }
    });
    assert_eq!(o.status, Status::Timeout);
    let (o, _) = run_with_timeout(Duration::from_secs(5), || panic!("boom"));
    assert_eq!(o.status, Status::Fail);
    assert_eq!(o.witness.unwrap()["panic"], "boom");
}
