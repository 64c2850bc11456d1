//! The whole pipeline offline: build a small benchmark, query it with the
//! oracle, empty and runaway mock models, score each run and write a
//! combined report. Pass a directory to keep the artifacts.

use std::path::{Path, PathBuf};

use tsi_bench::harness::{cmd_build, cmd_report, cmd_run, cmd_score, cmd_verify, VerifyOptions};
use tsi_bench::llm::{mock_model, MockBehavior};
use tsi_bench::plan::ExperimentMatrix;
use tsi_bench::render::RenderStyle;

const MATRIX: &str = r#"
scenarios = ["univariate/sine", "multivariate/sine-cosine", "irregular-univariate/symbols"]
anomaly_types = ["global", "shapelet", "sawtooth"]
M_values = [4]
r_values = [0.15]
samples_per_dataset = 4
skip_excluded = true
seed = 5
"#;

pub fn run(root: &Path) -> tsi_bench::Result<()> {
    let built = cmd_build(&ExperimentMatrix::from_toml(MATRIX)?, &root.join("bench"), &RenderStyle::default())?;
    print!("{}", built.census);
    let verified = cmd_verify(&built.manifest, &VerifyOptions::default())?;
    println!("verify: {} samples, {} violations", verified.samples, verified.violations.len());

    let mut runs = Vec::new();
    for behavior in [MockBehavior::Oracle, MockBehavior::Empty, MockBehavior::Runaway] {
        let ep = mock_model(behavior);
        let dir = root.join("runs").join(&ep.name);
        let s = cmd_run(&built.manifest, ep, &dir, 2)?;
        let scored = cmd_score(&dir)?;
        for row in &scored.rows {
            println!(
                "{:<14} {:<22} {:<9} F1 {:>6.2}  R {:>6.2}  halluc. {:>6.2}",
                row.key.endpoint, row.key.scenario, row.key.anomaly_type, row.f1, row.recall, row.hallucination_rate
            );
        }
        assert_eq!(s.fresh + s.cached, s.total);
        runs.push(dir);
    }
    let dirs: Vec<&Path> = runs.iter().map(PathBuf::as_path).collect();
    cmd_report(&dirs, &root.join("report"))?;
    println!("report: {}", root.join("report/report.md").display());
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    match std::env::args_os().nth(1) {
        Some(dir) => run(Path::new(&dir)),
        None => {
            let tmp = tempfile::tempdir().expect("temp dir");
            run(tmp.path())
        }
    }
}
