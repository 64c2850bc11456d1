use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use super::{assemble, synthesize, ArchiveStore};
use crate::domain::{AnomalyType, BaseGenerator, Sample};
use crate::error::{Error, Result};
use crate::manifest::manifest_write;
use crate::plan::{plan_datasets, Exclusion, ExperimentMatrix, Plan};
use crate::render::RenderStyle;

/// Per (scenario, anomaly type) counts of a build.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Census {
    /// `(scenario, anomaly type) -> (datasets, images)`.
    pub cells: BTreeMap<(String, AnomalyType), (usize, usize)>,
    pub total_datasets: usize,
    pub total_images: usize,
    pub excluded: Vec<Exclusion>,
}

impl Census {
    pub fn of(plan: &Plan) -> Self {
        let mut c = Census {
            excluded: plan.excluded.clone(),
            ..Census::default()
        };
        for ds in &plan.datasets {
            let cell = c
                .cells
                .entry((ds.scenario.to_string(), ds.anomaly_type))
                .or_default();
            cell.0 += 1;
            cell.1 += ds.samples;
            c.total_datasets += 1;
            c.total_images += ds.samples;
        }
        c
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<44} {:<12} {:>8} {:>8}", "scenario", "type", "datasets", "images")?;
        for ((scenario, ty), (d, n)) in &self.cells {
            writeln!(f, "{scenario:<44} {:<12} {d:>8} {n:>8}", ty.slug())?;
        }
        writeln!(
            f,
            "total: {} datasets, {} images",
            self.total_datasets, self.total_images
        )?;
        for x in &self.excluded {
            writeln!(f, "excluded: {} x {} ({})", x.scenario, x.anomaly_type.slug(), x.rule)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct BuildSummary {
    pub manifest: PathBuf,
    pub census: Census,
    pub samples: Vec<Sample>,
}

/// Generates every sample of the matrix, renders it and writes
/// `out/manifest.jsonl`, `out/plan.json` and `out/<dataset>/<index>.png`.
pub fn cmd_build(matrix: &ExperimentMatrix, out: &Path, style: &RenderStyle) -> Result<BuildSummary> {
    let plan = plan_datasets(matrix)?;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    for ds in &plan.datasets {
        let dir = out.join(&ds.name);
        std::fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    }

    let jobs: Vec<(usize, usize)> = plan
        .datasets
        .iter()
        .enumerate()
        .flat_map(|(d, ds)| (0..ds.samples).map(move |i| (d, i)))
        .collect();
    let archives = ArchiveStore::default();
    let samples = jobs
        .par_iter()
        .map(|&(d, i)| {
            let ds = &plan.datasets[d];
            let path = archive_path(&plan, ds.generator.base_generator);
            let synthesized = synthesize(ds, plan.seed, i, path, &archives)
                .map_err(|e| Error::Sample {
                    dataset: ds.name.clone(),
                    index: i,
                    source: Box::new(e),
                })?;
            let (sample, png) = assemble(synthesized, style)?;
            let file = out.join(&sample.image_path);
            std::fs::write(&file, png).map_err(|e| Error::io(&file, e))?;
            Ok(sample)
        })
        .collect::<Result<Vec<_>>>()?;

    let manifest = out.join("manifest.jsonl");
    manifest_write(&samples, &manifest)?;
    let plan_file = out.join("plan.json");
    std::fs::write(&plan_file, serde_json::to_vec_pretty(&plan)?).map_err(|e| Error::io(&plan_file, e))?;
    let census = Census::of(&plan);
    log::info!("built {} images into {}", samples.len(), out.display());
    Ok(BuildSummary {
        manifest,
        census,
        samples,
    })
}

pub(crate) fn archive_path(plan: &Plan, base: BaseGenerator) -> Option<&str> {
    match base {
        BaseGenerator::UcrSymbols => plan.symbols_path.as_deref(),
        BaseGenerator::UeaArticulatoryWordRecognition => plan.articulary_path.as_deref(),
        _ => None,
    }
}
