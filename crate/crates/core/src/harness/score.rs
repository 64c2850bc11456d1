use std::collections::HashMap;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::run::{read_predictions, write_atomic, RunConfig};
use crate::error::{Error, Result};
use crate::manifest::manifest_read;
use crate::metrics::{aggregate, render_report, score_sample, AggregateRow, EvalRecord, Report};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreSummary {
    pub scored: usize,
    /// Manifest samples with no prediction (failed requests).
    pub unanswered: usize,
    pub rows: Vec<AggregateRow>,
}

/// Scores a run's predictions against the manifest it was run on and
/// writes `scores.jsonl`, `report.md` and the charts into the run directory.
/// Responses are only read.
pub fn cmd_score(run_dir: &Path) -> Result<ScoreSummary> {
    let config = RunConfig::load(run_dir)?;
    let samples = manifest_read(&config.manifest)?.samples;
    let by_id: HashMap<&str, usize> = samples.iter().enumerate().map(|(i, s)| (s.id.as_str(), i)).collect();
    let predictions = read_predictions(run_dir)?;
    let records = predictions
        .par_iter()
        .map(|p| {
            let &i = by_id.get(p.sample_id.as_str()).ok_or_else(|| {
                Error::MetricInput(format!("prediction for unknown sample {}", p.sample_id))
            })?;
            score_sample(&samples[i], &p.prediction, &p.endpoint)
        })
        .collect::<Result<Vec<EvalRecord>>>()?;

    let mut lines = Vec::new();
    for r in &records {
        serde_json::to_writer(&mut lines, r)?;
        lines.push(b'\n');
    }
    write_atomic(&run_dir.join("scores.jsonl"), &lines)?;
    let rows = aggregate(&records)?;
    write_report(run_dir, &format!("Run {}", config.run_id), &rows)?;
    Ok(ScoreSummary {
        scored: records.len(),
        unanswered: samples.len() - records.len(),
        rows,
    })
}

/// Combines the scores of several runs (one per endpoint, typically) into
/// one report in `out`.
pub fn cmd_report(run_dirs: &[&Path], out: &Path) -> Result<Vec<AggregateRow>> {
    let mut records: Vec<EvalRecord> = Vec::new();
    for dir in run_dirs {
        let path = dir.join("scores.jsonl");
        let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            records.push(serde_json::from_str(line)?);
        }
    }
    let rows = aggregate(&records)?;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    write_report(out, "Benchmark report", &rows)?;
    Ok(rows)
}

fn write_report(dir: &Path, title: &str, rows: &[AggregateRow]) -> Result<Report> {
    let report = render_report(title, rows)?;
    write_atomic(&dir.join("report.md"), report.markdown.as_bytes())?;
    for (name, png) in &report.charts {
        write_atomic(&dir.join(name), png)?;
    }
    Ok(report)
}
