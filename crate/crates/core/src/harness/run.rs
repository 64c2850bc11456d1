use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::image_file;
use crate::domain::Granularity;
use crate::error::{Error, Result};
use crate::llm::{build_prompt, LlmClient, ModelEndpoint, QueryRequest, ResponseCache};
use crate::manifest::manifest_read;
use crate::parse::{parse_reply, ParseLimits, Prediction};

/// Effective configuration of a run, stored as `config.json`. Holds the
/// name of the key's environment variable, never the key.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub run_id: String,
    pub manifest: PathBuf,
    pub endpoint: ModelEndpoint,
    pub concurrency: usize,
    pub parse_limits: ParseLimits,
    /// Prompt hashes by granularity.
    pub prompts: Vec<(Granularity, String)>,
}

impl RunConfig {
    pub fn new(run_id: &str, manifest: &Path, endpoint: ModelEndpoint, concurrency: usize) -> Self {
        let prompts = [Granularity::Point, Granularity::Range, Granularity::Variate]
            .into_iter()
            .map(|g| (g, build_prompt(g).sha256()))
            .collect();
        Self {
            run_id: run_id.to_string(),
            manifest: manifest.to_path_buf(),
            endpoint,
            concurrency: concurrency.max(1),
            parse_limits: ParseLimits::default(),
            prompts,
        }
    }

    pub fn load(run_dir: &Path) -> Result<Self> {
        let path = run_dir.join("config.json");
        let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// One line of `predictions.jsonl`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub sample_id: String,
    pub endpoint: String,
    pub dataset: String,
    #[serde(flatten)]
    pub prediction: Prediction,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub total: usize,
    pub cached: usize,
    pub fresh: usize,
    pub permanent_errors: usize,
    pub transient_errors: usize,
    /// First few failure messages.
    pub failures: Vec<String>,
}

impl RunSummary {
    pub fn failed(&self) -> usize {
        self.permanent_errors + self.transient_errors
    }
}

const FAILURES_KEPT: usize = 10;

/// Queries `endpoint` with every sample of the manifest. Replies already in
/// the run's cache are reused, so an interrupted run can be resumed by
/// running it again. Predictions are rewritten in manifest order.
pub fn cmd_run(
    manifest: &Path,
    endpoint: ModelEndpoint,
    run_dir: &Path,
    concurrency: usize,
) -> Result<RunSummary> {
    let run_id = run_dir
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    std::fs::create_dir_all(run_dir).map_err(|e| Error::io(run_dir, e))?;
    let config = RunConfig::new(&run_id, manifest, endpoint, concurrency);
    if let Ok(prev) = RunConfig::load(run_dir) {
        if prev.endpoint.name != config.endpoint.name {
            return Err(Error::Config(format!(
                "run {run_id} belongs to endpoint {}, not {}",
                prev.endpoint.name, config.endpoint.name
            )));
        }
    }
    write_atomic(&run_dir.join("config.json"), &serde_json::to_vec_pretty(&config)?)?;

    let loaded = manifest_read(manifest)?;
    if let Some(p) = loaded.missing_images.first() {
        return Err(Error::Config(format!(
            "{} images missing, first: {}",
            loaded.missing_images.len(),
            p.display()
        )));
    }
    let samples = loaded.samples;
    let cache = ResponseCache::open(&run_dir.join("responses.jsonl"))?;
    let client = LlmClient::new(config.endpoint.clone(), cache)?;

    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<PredictionRecord>>> = samples.iter().map(|_| Mutex::new(None)).collect();
    let summary = Mutex::new(RunSummary {
        total: samples.len(),
        ..RunSummary::default()
    });
    let done = AtomicUsize::new(0);
    let worker = || -> Result<()> {
        loop {
            let i = next.fetch_add(1, Ordering::Relaxed);
            let Some(sample) = samples.get(i) else {
                return Ok(());
            };
            let path = image_file(manifest, sample);
            let image = std::fs::read(&path).map_err(|e| Error::io(&path, e))?;
            let g = sample.label.granularity();
            let prompt = build_prompt(g);
            let outcome = client.query(&QueryRequest {
                sample,
                image: &image,
                prompt: prompt.text,
            });
            let mut s = summary.lock().unwrap_or_else(|p| p.into_inner());
            match outcome {
                Ok(rec) => {
                    if rec.retrieved_from_cache {
                        s.cached += 1;
                    } else {
                        s.fresh += 1;
                    }
                    let domain = match g {
                        Granularity::Variate => sample.series.variates(),
                        _ => sample.series.length(),
                    };
                    let prediction = parse_reply(&rec.raw_text, g, domain, &config.parse_limits);
                    *slots[i].lock().unwrap_or_else(|p| p.into_inner()) = Some(PredictionRecord {
                        sample_id: sample.id.clone(),
                        endpoint: config.endpoint.name.clone(),
                        dataset: sample.provenance.dataset.clone(),
                        prediction,
                    });
                }
                Err(e) => {
                    match e {
                        Error::PermanentEndpoint { .. } => s.permanent_errors += 1,
                        Error::TransientExhausted { .. } => s.transient_errors += 1,
                        // Missing keys and local I/O failures stop the run.
                        other => return Err(other),
                    }
                    if s.failures.len() < FAILURES_KEPT {
                        s.failures.push(format!("{}: {e}", sample.id));
                    }
                }
            }
            drop(s);
            let n = done.fetch_add(1, Ordering::Relaxed) + 1;
            if n.is_multiple_of(100) || n == samples.len() {
                log::info!("{run_id}: {n}/{} samples", samples.len());
            }
        }
    };
    let results: Vec<Result<()>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..config.concurrency).map(|_| scope.spawn(worker)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err(Error::Config("worker panicked".into()))))
            .collect()
    });
    for r in results {
        r?;
    }

    let mut out = Vec::new();
    for slot in slots {
        if let Some(rec) = slot.into_inner().unwrap_or_else(|p| p.into_inner()) {
            serde_json::to_writer(&mut out, &rec)?;
            out.push(b'\n');
        }
    }
    write_atomic(&run_dir.join("predictions.jsonl"), &out)?;
    Ok(summary.into_inner().unwrap_or_else(|p| p.into_inner()))
}

/// Reads `predictions.jsonl`.
pub fn read_predictions(run_dir: &Path) -> Result<Vec<PredictionRecord>> {
    let path = run_dir.join("predictions.jsonl");
    let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Ok(serde_json::from_str(l)?))
        .collect()
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let mut f = std::fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
    f.write_all(bytes).map_err(|e| Error::io(&tmp, e))?;
    f.sync_all().map_err(|e| Error::io(&tmp, e))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}
