//! End-to-end runs of the `artin` binary: exit codes, JSON schemas and
//! golden outputs on the corpus. Set `UPDATE_GOLDEN=1` to rewrite goldens.

use std::path::PathBuf;
use std::process::{Command, Output};

use artin_cli::model::{CertificateJson, ClassifyJson, SplittingsJson, VerdictJson};
use artin_core::classes::PipRpRegistry;

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

const GOLDEN_RUNS: &[(&str, &[&str])] = &[
    ("path23_splittings.txt", &["splittings", "corpus:example3_4"]),
    ("path23_splittings.json", &["splittings", "corpus:example3_4", "--json"]),
    ("path23_check.txt", &["check", "corpus:example3_4", "--x", "a,b", "--y", "b,c"]),
    ("path23_classify.txt", &["classify", "corpus:example3_4"]),
    ("union_check.json", &["check", "corpus:figure3_union", "--x", "a,b,c,e,f,g", "--y", "b,c,d,f,g,h", "--json"]),
    ("union_certificate.txt", &["certify-tits", "corpus:figure3_union"]),
    ("union_certificate.json", &["certify-tits", "corpus:figure3_union", "--json"]),
    ("union_classify.json", &["classify", "corpus:figure3_union", "--json"]),
    ("union_pairs.txt", &["splittings", "corpus:figure3_union", "--mode", "pairs"]),
    ("union.dot", &["export-dot", "corpus:figure3_union", "--highlight-odd"]),
];

#[test]
fn corpus_goldens() {
    for (name, args) in GOLDEN_RUNS {
        let o = artin(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        golden(name, &stdout(&o));
    }
}

#[test]
fn json_outputs_reparse() {
    let o = artin(&["splittings", "corpus:figure3_union", "--json"]);
    let doc: SplittingsJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.splittings.iter().any(|v| v.verdict == "acylindrical"));
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", stdout(&o));

    let o = artin(&["classify", "family:C:2,4,2,4", "--json"]);
    let doc: ClassifyJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.classes.even.holds && doc.classes.fc_type.holds);

    let o = artin(&["check", "corpus:example3_4", "--x", "a,b", "--y", "b,c", "--json"]);
    let doc: VerdictJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.witness.unwrap().word, "c b c c b c a");
}

#[test]
fn certificate_json_round_trips_byte_for_byte() {
    let o = artin(&["certify-tits", "corpus:figure3_union", "--json"]);
    let text = stdout(&o);
    let doc: CertificateJson = serde_json::from_str(&text).unwrap();
    let cert = doc.to_certificate(&PipRpRegistry::default()).unwrap();
    let again = serde_json::to_string_pretty(&CertificateJson::new(&cert)).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn verify_certificate_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, stdout(&artin(&["certify-tits", "corpus:figure3_union", "--json"]))).unwrap();
    let o = artin(&["verify-certificate", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "valid: complete certificate, depth 1\n");

    // a base class that does not hold is caught
    let tampered = std::fs::read_to_string(&path).unwrap().replacen("\"fc_type\"", "\"two_dimensional\"", 1);
    std::fs::write(&path, tampered).unwrap();
    let o = artin(&["verify-certificate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("invalid:"), "{}", stdout(&o));
}

#[test]
fn k4_has_no_splittings() {
    let o = artin(&["splittings", "family:K:4:3", "--json"]);
    let doc: SplittingsJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.splittings.is_empty());
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "v a\nv b\na b 1\n").unwrap();
    let o = artin(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3: label must be ≥ 2 (got 1)"), "{err}");

    let o = artin(&["check", "corpus:figure2_as_printed", "--x", "a,b,c,e,f,g", "--y", "b,c,d,f,g,h"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edge \"e\" -- \"h\" crosses"));

    for args in [
        &["classify", "corpus:missing"][..],
        &["classify", "/nonexistent/graph.txt"],
        &["splittings", "family:O:17"],
        &["certify-tits", "corpus:example3_4", "--bases", "bogus"],
        &["check", "corpus:example3_4", "--x", "a,z", "--y", "b,c"],
        &["no-such-command"],
    ] {
        assert_eq!(artin(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn json_graph_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    std::fs::write(&path, r#"{"name": "k2", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}"#).unwrap();
    let o = artin(&["classify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph k2: 2 vertices, 1 edges"));
}

#[test]
fn supersets_feed_the_hypothesis() {
    // the default rules pass to induced subgraphs, so a valid superset never
    // changes the outcome; an invalid one is an input error
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    std::fs::write(&g, "a b 2\nb c 4\nc d 2\nd e 2\na c 2\n").unwrap();
    let sup = dir.path().join("sup.txt");
    std::fs::write(&sup, "a b 2\nb c 4\na c 2\nc x 2\n").unwrap();
    let o = artin(&["check", g.to_str().unwrap(), "--x", "a,b,c", "--y", "c,d,e", "--x-superset", sup.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: VerdictJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.hypothesis_x.outcome, "certified");

    let not_sup = dir.path().join("not.txt");
    std::fs::write(&not_sup, "a b 2\nb c 6\n").unwrap();
    let o = artin(&["check", g.to_str().unwrap(), "--x", "a,b,c", "--y", "c,d,e", "--x-superset", not_sup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
