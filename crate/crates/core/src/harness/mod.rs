//! Pipeline stages behind the command-line tool: build datasets, query an
//! endpoint, score, verify and report. Every stage is restartable.

mod build;
mod run;
mod score;
mod verify;

pub use build::{cmd_build, BuildSummary, Census};
pub use run::{cmd_run, read_predictions, PredictionRecord, RunConfig, RunSummary};
pub use score::{cmd_report, cmd_score, ScoreSummary};
pub use verify::{cmd_verify, VerifyOptions, VerifyReport, Violation};

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex};

use crate::domain::{
    sample_id, AnomalyLabel, AnomalyType, ArchiveOrigin, BaseGenerator, Provenance, Sample, Series,
};
use crate::error::{Error, Result};
use crate::inject::{drop_irregular, inject, refilter_label, InjectionConfig};
use crate::plan::DatasetPlan;
use crate::render::{render_series, RenderStyle};
use crate::stats::derive_seed;
use crate::synth::{
    archive_series, generate_explicit, parse_archive, GeneratorConfig, IngestedSeries,
    ARTICULARY_FIXTURE, SYMBOLS_FIXTURE,
};

/// Attempts at a drop mask that leaves at least one labeled event.
const DROP_ATTEMPTS: u64 = 32;

type ArchiveKey = (BaseGenerator, Option<String>, usize);

/// Parsed archives, shared across threads and loaded once per
/// (dataset, path, length).
#[derive(Default)]
pub struct ArchiveStore {
    loaded: Mutex<HashMap<ArchiveKey, Arc<Vec<IngestedSeries>>>>,
}

impl ArchiveStore {
    pub fn get(&self, base: BaseGenerator, path: Option<&str>, cfg: &GeneratorConfig) -> Result<Arc<Vec<IngestedSeries>>> {
        let key = (base, path.map(str::to_string), cfg.length);
        if let Some(hit) = self.loaded.lock().unwrap_or_else(|p| p.into_inner()).get(&key) {
            return Ok(hit.clone());
        }
        let text = match path {
            Some(p) => std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?,
            None => match base {
                BaseGenerator::UcrSymbols => SYMBOLS_FIXTURE.to_string(),
                _ => ARTICULARY_FIXTURE.to_string(),
            },
        };
        let cases = Arc::new(parse_archive(&text, base, cfg)?);
        self.loaded
            .lock()
            .unwrap_or_else(|p| p.into_inner())
            .insert(key, cases.clone());
        Ok(cases)
    }
}

/// Everything produced for one sample before rendering.
#[derive(Debug, Clone)]
pub struct Synthesized {
    /// Regular series before injection.
    pub base: Series,
    /// Regular series after injection.
    pub injected: Series,
    /// Label on the regular series.
    pub regular_label: AnomalyLabel,
    /// Final series and label (after dropping, when irregular).
    pub series: Series,
    pub label: AnomalyLabel,
    pub provenance: Provenance,
}

/// Seeds of sample `index` in a dataset: shared by all datasets with the
/// same seed key, so irregular variants start from the regular sample.
pub fn sample_seeds(plan_seed: u64, seed_key: &str, index: usize) -> (u64, u64) {
    let base_seed = derive_seed(plan_seed, seed_key, index as u64);
    (
        derive_seed(base_seed, "base", 0),
        derive_seed(base_seed, "inject", 0),
    )
}

fn drop_seed(base_seed: u64, attempt: u64) -> u64 {
    derive_seed(base_seed, "drop", attempt)
}

/// Generates, injects and (for irregular datasets) thins one sample.
pub fn synthesize(
    ds: &DatasetPlan,
    plan_seed: u64,
    index: usize,
    archive_path: Option<&str>,
    archives: &ArchiveStore,
) -> Result<Synthesized> {
    let (gen_seed, injection_seed) = sample_seeds(plan_seed, &ds.seed_key, index);
    let generator = GeneratorConfig {
        seed: gen_seed,
        ..ds.generator.clone()
    };
    let injection = InjectionConfig {
        seed: injection_seed,
        ..ds.injection.clone()
    };
    let (base, archive) = base_series(&generator, index, archive_path, archives)?;
    let provenance = Provenance {
        dataset: ds.name.clone(),
        sample_index: index,
        generator,
        injection,
        injection_seed,
        drop_seed: None,
        archive,
        anomaly_count: 0,
        window_lengths: Vec::new(),
        details: Vec::new(),
    };
    let ty = ds.anomaly_type;
    if ds.irregularity_r == 0.0 {
        return finish(base, ty, provenance, None);
    }
    for attempt in 0..DROP_ATTEMPTS {
        let s = finish(base.clone(), ty, provenance.clone(), Some(drop_seed(gen_seed, attempt)))?;
        if !s.label.payload().is_empty() {
            return Ok(s);
        }
    }
    Err(Error::InjectionInfeasible(format!(
        "all {DROP_ATTEMPTS} drop masks removed every labeled event"
    )))
}

/// Regenerates a sample from its provenance alone.
pub fn resynthesize(
    provenance: &Provenance,
    anomaly_type: AnomalyType,
    archives: &ArchiveStore,
) -> Result<Synthesized> {
    let path = provenance.archive.as_ref().and_then(|a| a.path.clone());
    let (base, _) = base_series(
        &provenance.generator,
        provenance.sample_index,
        path.as_deref(),
        archives,
    )?;
    finish(base, anomaly_type, provenance.clone(), provenance.drop_seed)
}

fn base_series(
    generator: &GeneratorConfig,
    index: usize,
    archive_path: Option<&str>,
    archives: &ArchiveStore,
) -> Result<(Series, Option<ArchiveOrigin>)> {
    if generator.base_generator.is_explicit() {
        return Ok((generate_explicit(generator)?, None));
    }
    let cases = archives.get(generator.base_generator, archive_path, generator)?;
    let (s, origin) = archive_series(&cases, generator, index, archive_path.map(str::to_string))?;
    Ok((s, Some(origin)))
}

fn finish(
    base: Series,
    ty: AnomalyType,
    mut provenance: Provenance,
    drop: Option<u64>,
) -> Result<Synthesized> {
    let inj = inject(&base, ty, &provenance.injection)?;
    let (series, label) = match drop {
        None => (inj.series.clone(), inj.label.clone()),
        Some(seed) => {
            let thinned = drop_irregular(&inj.series, provenance.injection.irregularity_r, seed)?;
            let label = refilter_label(&inj.label, &thinned)?;
            (thinned, label)
        }
    };
    provenance.drop_seed = drop;
    provenance.anomaly_count = label.payload().len();
    provenance.window_lengths = inj.window_lengths.clone();
    provenance.details = inj.details.clone();
    Ok(Synthesized {
        base,
        injected: inj.series,
        regular_label: inj.label,
        series,
        label,
        provenance,
    })
}

/// Renders a synthesized sample and assembles the manifest entry. Returns
/// the sample and the PNG bytes.
pub fn assemble(s: Synthesized, style: &RenderStyle) -> Result<(Sample, Vec<u8>)> {
    let (png, render_meta) = render_series(&s.series, style)?;
    let id = sample_id(&s.series, &s.label);
    let image_path = format!("{}/{:04}.png", s.provenance.dataset, s.provenance.sample_index);
    Ok((
        Sample {
            id,
            series: s.series,
            label: s.label,
            image_path,
            render_meta,
            provenance: s.provenance,
        },
        png,
    ))
}

/// Resolves a manifest-relative image path.
pub fn image_file(manifest: &Path, sample: &Sample) -> std::path::PathBuf {
    manifest
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .join(&sample.image_path)
}
