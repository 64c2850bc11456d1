use std::io::Write;
use std::path::{Path, PathBuf};

use tempfile::TempDir;
use tsi_bench::harness::{cmd_build, cmd_run, cmd_score, cmd_verify, VerifyOptions};
use tsi_bench::llm::{mock_model, MockBehavior};
use tsi_bench::plan::ExperimentMatrix;
use tsi_bench::render::RenderStyle;

fn matrix(name: &str) -> ExperimentMatrix {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../matrices").join(name);
    ExperimentMatrix::load(&path).unwrap()
}

fn build(dir: &Path) -> PathBuf {
    cmd_build(&matrix("smoke.toml"), &dir.join("bench"), &RenderStyle::default())
        .unwrap()
        .manifest
}

#[test]
fn smoke_build_writes_every_image_and_line() {
    let tmp = TempDir::new().unwrap();
    let summary = cmd_build(&matrix("smoke.toml"), &tmp.path().join("bench"), &RenderStyle::default()).unwrap();
    assert_eq!(summary.census.total_images, 10);
    assert_eq!(summary.census.total_datasets, 2);
    let text = std::fs::read_to_string(&summary.manifest).unwrap();
    assert_eq!(text.lines().count(), 10);
    let pngs: usize = walk(&tmp.path().join("bench"))
        .iter()
        .filter(|p| p.extension().is_some_and(|e| e == "png"))
        .count();
    assert_eq!(pngs, 10);
    assert!(tmp.path().join("bench/plan.json").exists());
}

fn walk(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

#[test]
fn builds_are_reproducible() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    let (ma, mb) = (build(a.path()), build(b.path()));
    assert_eq!(std::fs::read(&ma).unwrap(), std::fs::read(&mb).unwrap());
    let files = walk(&a.path().join("bench"));
    for f in files.iter().filter(|p| p.extension().is_some_and(|e| e == "png")) {
        let rel = f.strip_prefix(a.path()).unwrap();
        assert_eq!(std::fs::read(f).unwrap(), std::fs::read(b.path().join(rel)).unwrap(), "{rel:?}");
    }
}

#[test]
fn verify_accepts_a_fresh_build_and_flags_tampering() {
    let tmp = TempDir::new().unwrap();
    let manifest = build(tmp.path());
    let report = cmd_verify(&manifest, &VerifyOptions::default()).unwrap();
    assert_eq!(report.samples, 10);
    assert!(report.ok(), "{:?}", report.violations);

    // Move the first value of one series; its id and regeneration no longer match.
    let text = std::fs::read_to_string(&manifest).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut v: serde_json::Value = serde_json::from_str(&lines[3]).unwrap();
    let x = v.pointer_mut("/values/0/0").expect("series values");
    *x = serde_json::json!(x.as_f64().unwrap() + 1.0);
    lines[3] = v.to_string();
    std::fs::write(&manifest, lines.join("\n") + "\n").unwrap();
    let report = cmd_verify(&manifest, &VerifyOptions::default()).unwrap();
    let checks: Vec<&str> = report.violations.iter().map(|v| v.check).collect();
    assert!(checks.contains(&"id") && checks.contains(&"regenerate"), "{checks:?}");
    assert!(report.violations.iter().all(|v| v.index == report.violations[0].index));
}

#[test]
fn interrupted_run_resumes_to_identical_predictions() {
    let tmp = TempDir::new().unwrap();
    let manifest = build(tmp.path());
    let oracle = mock_model(MockBehavior::Oracle);

    let full = tmp.path().join("runs/full");
    cmd_run(&manifest, oracle.clone(), &full, 2).unwrap();
    let want = std::fs::read(full.join("predictions.jsonl")).unwrap();

    // Simulate a crash: four replies on file, then half a line.
    let cut = tmp.path().join("runs/cut");
    std::fs::create_dir_all(&cut).unwrap();
    let responses = std::fs::read_to_string(full.join("responses.jsonl")).unwrap();
    let lines: Vec<&str> = responses.lines().collect();
    let mut f = std::fs::File::create(cut.join("responses.jsonl")).unwrap();
    for l in &lines[..4] {
        writeln!(f, "{l}").unwrap();
    }
    write!(f, "{}", &lines[4][..lines[4].len() / 2]).unwrap();
    drop(f);

    let s = cmd_run(&manifest, oracle, &cut, 2).unwrap();
    assert_eq!((s.cached, s.fresh, s.failed()), (4, 6, 0));
    assert_eq!(std::fs::read(cut.join("predictions.jsonl")).unwrap(), want);
    // The torn line is skipped, later appends start on a fresh line.
    let after = std::fs::read_to_string(cut.join("responses.jsonl")).unwrap();
    let parsed = after
        .lines()
        .filter(|l| serde_json::from_str::<serde_json::Value>(l).is_ok())
        .count();
    assert_eq!(parsed, 10);
}

#[test]
fn a_run_id_stays_bound_to_its_endpoint() {
    let tmp = TempDir::new().unwrap();
    let manifest = build(tmp.path());
    let dir = tmp.path().join("runs/r1");
    cmd_run(&manifest, mock_model(MockBehavior::Oracle), &dir, 1).unwrap();
    let err = cmd_run(&manifest, mock_model(MockBehavior::Empty), &dir, 1).unwrap_err();
    assert!(err.to_string().contains("belongs to endpoint mock-oracle"), "{err}");
}

#[test]
fn scoring_writes_scores_and_report() {
    let tmp = TempDir::new().unwrap();
    let manifest = build(tmp.path());
    let dir = tmp.path().join("runs/oracle");
    cmd_run(&manifest, mock_model(MockBehavior::Oracle), &dir, 2).unwrap();
    let s = cmd_score(&dir).unwrap();
    assert_eq!((s.scored, s.unanswered), (10, 0));
    assert!(!s.rows.is_empty());
    for r in &s.rows {
        assert!((r.f1 - 100.0).abs() < 1e-9, "{r:?}");
    }
    let scores = std::fs::read_to_string(dir.join("scores.jsonl")).unwrap();
    assert_eq!(scores.lines().count(), 10);
    let md = std::fs::read_to_string(dir.join("report.md")).unwrap();
    assert!(md.contains("mock-oracle"));
}
