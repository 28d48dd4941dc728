use std::path::PathBuf;

use assert_cmd::Command;
use gentle_cli::report::ReportDocument;
use gentle_core::catalog;
use gentle_core::format::{emit_presentation, parse_presentation, parse_raw};
use predicates::prelude::*;
use tempfile::TempDir;

fn gentle() -> Command {
    Command::cargo_bin("gentle").unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn catalog_file(dir: &TempDir, name: &str) -> PathBuf {
    write(dir, &format!("{name}.quiver"), &emit_presentation(&catalog::by_name(name).unwrap()))
}

#[test]
fn classify_cyclic_path_algebra() {
    let dir = TempDir::new().unwrap();
    for n in 0..=3 {
        let f = catalog_file(&dir, &format!("a-tilde-{n}"));
        gentle()
            .arg("classify")
            .arg(&f)
            .assert()
            .success()
            .stdout("AS regular, dimension 1; CM; prime; gldim 1; injdim 1; depth 1; GKdim 1\n");
    }
}

#[test]
fn hilbert_expansion() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "hilb");
    gentle()
        .args(["hilbert", "--terms", "6"])
        .arg(&f)
        .assert()
        .success()
        .stdout("(5 - 3t^2 - t^3)/(1 - t) = 5 + 5t + 2t^2 + t^3 + t^4 + t^5 + O(t^6)\n");
}

#[test]
fn verify_kronecker_passes() {
    let dir = TempDir::new().unwrap();
    let f = catalog_file(&dir, "kronecker");
    gentle()
        .args(["verify", "--truncation", "10"])
        .arg(&f)
        .assert()
        .code(0)
        .stdout(predicate::str::contains("FAIL").not())
        .stdout(predicate::str::contains("pass  AS Gorenstein"));
}

#[test]
fn verify_catalog_examples() {
    for name in ["hilb", "c2c2", "two-loops", "a-tilde-dual-1", "repeated-witness", "chain-loops"] {
        gentle().args(["verify", "--truncation", "10", name]).assert().code(0);
    }
}

#[test]
fn invalid_presentation_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.quiver", "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\narrow c 2 3\n");
    gentle()
        .arg("validate")
        .arg(&f)
        .assert()
        .code(1)
        .stderr(predicate::str::contains("condition (iii)").and(predicate::str::contains("vertex 2")));
    let f = write(&dir, "syntax.quiver", "vertex 1\narrow a 1 1\nrel a a a\n");
    gentle().arg("validate").arg(&f).assert().code(1).stderr(predicate::str::contains("line 3"));
}

#[test]
fn hilb_missing_relation_names_vertex_two() {
    let dir = TempDir::new().unwrap();
    let text = emit_presentation(&catalog::hilb());
    let without: String = text.lines().filter(|l| *l != "rel c alpha2").map(|l| format!("{l}\n")).collect();
    assert_ne!(text, without);
    let f = write(&dir, "hilb.quiver", &without);
    gentle()
        .arg("validate")
        .arg(&f)
        .assert()
        .code(1)
        .stderr(predicate::str::contains("condition (ii)").and(predicate::str::contains("vertex 2")));
}

#[test]
fn usage_errors_exit_64() {
    gentle().arg("bogus").assert().code(64);
    gentle().args(["ext", "hilb"]).assert().code(64).stderr(predicate::str::contains("--degree"));
    gentle().args(["resolve-proj", "hilb", "--vertex", "9"]).assert().code(64);
    gentle().args(["classify", "/nonexistent/file"]).assert().code(64);
    gentle().args(["spectrum", "two-loops", "--poly", "t^2 +"]).assert().code(64);
    gentle().arg("--help").assert().code(0);
}

#[test]
fn enumerate_counts() {
    let dir = TempDir::new().unwrap();
    for n in 0..=3 {
        let q = catalog::a_tilde(n);
        let f = write(&dir, &format!("cycle{n}.quiver"), &emit_presentation(&q));
        gentle()
            .arg("enumerate")
            .arg(&f)
            .assert()
            .success()
            .stdout(predicate::str::starts_with(format!("{} presentations\n", 1 << (n + 1))));
    }
    let f = catalog_file(&dir, "kronecker");
    gentle().arg("enumerate").arg(&f).assert().success().stdout(predicate::str::starts_with("1 presentations\n"));
    let f = catalog_file(&dir, "hilb");
    gentle().arg("enumerate").arg(&f).assert().code(1).stderr(predicate::str::contains("relation"));
}

#[test]
fn enumerate_classify_is_ordered() {
    let out = gentle().args(["enumerate", "--classify", "--json", "two-loops"]).assert().success().get_output().stdout.clone();
    let doc: ReportDocument = serde_json::from_slice(&out).unwrap();
    let ps = doc.presentations.unwrap();
    assert_eq!(ps.len(), 2);
    for (i, p) in ps.iter().enumerate() {
        assert_eq!(p.index, i);
        assert!(p.classification.as_ref().unwrap().summary.starts_with("AS Gorenstein, (k, l) = (1, 0)"));
    }
}

fn json_of(args: &[&str]) -> (serde_json::Value, ReportDocument) {
    let out = gentle().args(args).arg("--json").assert().success().get_output().stdout.clone();
    let value: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let doc: ReportDocument = serde_json::from_value(value.clone()).unwrap();
    (value, doc)
}

#[test]
fn json_round_trips_for_every_command() {
    let commands: &[&[&str]] = &[
        &["validate"],
        &["invariants"],
        &["hilbert", "--terms", "8"],
        &["dual"],
        &["maximal"],
        &["center"],
        &["spectrum", "--poly", "t + 1"],
        &["resolve-proj", "--steps", "4"],
        &["resolve-inj"],
        &["ext", "--degree", "1"],
        &["classify"],
        &["verify", "--truncation", "8"],
        &["enumerate", "--classify"],
    ];
    for name in ["hilb", "two-loops", "a-tilde-dual-2"] {
        let expected = catalog::by_name(name).unwrap();
        for cmd in commands {
            let mut args: Vec<&str> = cmd.to_vec();
            args.push(name);
            if cmd[0] == "spectrum" && name == "a-tilde-dual-2" {
                args.retain(|a| *a != "--poly" && *a != "t + 1");
            }
            let (value, doc) = json_of(&args);
            assert_eq!(serde_json::to_value(&doc).unwrap(), value, "{args:?}");
            assert_eq!(doc.command, cmd[0]);
            let text = doc.presentation.to_file();
            if cmd[0] == "enumerate" {
                assert_eq!(&parse_raw(&text).unwrap().quiver().unwrap(), expected.quiver());
            } else {
                assert_eq!(parse_presentation(&text).unwrap(), expected, "{args:?}");
            }
        }
    }
}

#[test]
fn infinite_dimension_serializes_as_infinity() {
    let (value, _) = json_of(&["classify", "two-loops"]);
    assert_eq!(value["classification"]["global_dim"], "infinity");
    let (value, _) = json_of(&["classify", "hilb"]);
    assert_eq!(value["classification"]["global_dim"], 3);
}

#[test]
fn complexes_carry_summands_and_maps() {
    let (_, doc) = json_of(&["resolve-proj", "hilb", "--vertex", "3"]);
    let c = &doc.complexes.unwrap()[0];
    let shown: Vec<Vec<String>> = c.terms.iter().map(|t| t.summands.iter().map(|s| s.display.clone()).collect()).collect();
    assert_eq!(shown, vec![vec!["e_1A[-3]"], vec!["e_2A[-2]", "e_5A[-2]"], vec!["e_2A[-1]", "e_4A[-1]"], vec!["e_3A"], vec!["S(3)"]]);
    assert_eq!(c.terms[0].summands[0].shift, -3);
    assert_eq!(c.terms[0].maps[0].label, "alpha2_*");
}

#[test]
fn dual_is_printed_in_file_format() {
    let out = gentle().args(["dual", "two-loops"]).assert().success().get_output().stdout.clone();
    let text = String::from_utf8(out).unwrap();
    let dual = parse_presentation(&text).unwrap();
    assert_eq!(dual, catalog::two_loops().koszul_dual());
}

#[test]
fn spectrum_reports_irreducibility() {
    gentle()
        .args(["spectrum", "two-loops", "--poly", "t^2 + 1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("[irreducible]"))
        .stdout(predicate::str::contains("ann(J_(x)^inf) = <y>"));
}
