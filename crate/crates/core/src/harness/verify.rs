use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::{image_file, resynthesize, ArchiveStore};
use crate::domain::{sample_id, AnomalyType, Sample, SeriesKind};
use crate::inject::{locality_violation, min_dissimilarity, retained_count, validate_point_anomalies};
use crate::manifest::manifest_read;
use crate::render::grid_dims;
use crate::render::raster::decode_png;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOptions {
    /// Smallest z-normalized distance an injected range or variate must
    /// keep from its original. The default only catches injections that
    /// changed nothing: short trend ramps and seasonal windows on smooth
    /// bases legitimately come out near 0.2.
    pub min_dissimilarity: f64,
    /// Decode every image and compare its size with the render metadata.
    pub check_images: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            min_dissimilarity: 0.1,
            check_images: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub sample_id: String,
    pub dataset: String,
    pub index: usize,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerifyReport {
    pub samples: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-derives every sample from its provenance and runs the label
/// invariants and injection validators on it.
pub fn cmd_verify(manifest: &Path, opts: &VerifyOptions) -> Result<VerifyReport> {
    let loaded = manifest_read(manifest)?;
    let archives = ArchiveStore::default();
    let violations: Vec<Violation> = loaded
        .samples
        .par_iter()
        .flat_map_iter(|s| check_sample(manifest, s, opts, &archives))
        .collect();
    Ok(VerifyReport {
        samples: loaded.samples.len(),
        violations,
    })
}

fn check_sample(manifest: &Path, s: &Sample, opts: &VerifyOptions, archives: &ArchiveStore) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        out.push(Violation {
            sample_id: s.id.clone(),
            dataset: s.provenance.dataset.clone(),
            index: s.provenance.sample_index,
            check,
            detail,
        })
    };

    if sample_id(&s.series, &s.label) != s.id {
        fail("id", "id does not match series and label".into());
    }
    let (t, m) = (s.series.length(), s.series.variates());
    if let Err(e) = s.label.validate(t, m) {
        fail("label", e.to_string());
    }
    if s.label.payload().is_empty() {
        fail("label", "no labeled events".into());
    }

    let meta = s.render_meta;
    let (rows, cols) = match s.series.kind() {
        SeriesKind::Univariate => (1, 1),
        SeriesKind::Multivariate => grid_dims(m),
    };
    if (meta.grid_rows, meta.grid_cols, meta.blanks) != (rows, cols, rows * cols - m) {
        fail(
            "grid",
            format!(
                "render meta {}x{}+{} for M={m}",
                meta.grid_rows, meta.grid_cols, meta.blanks
            ),
        );
    }
    if opts.check_images {
        let path = image_file(manifest, s);
        match std::fs::read(&path).map_err(|e| e.to_string()).and_then(|b| decode_png(&b).map_err(|e| e.to_string())) {
            Ok(c) if [c.width(), c.height()] != meta.pixel_size => {
                fail("image", format!("{}x{} != {:?}", c.width(), c.height(), meta.pixel_size))
            }
            Ok(_) => {}
            Err(e) => fail("image", format!("{}: {e}", path.display())),
        }
    }

    let ty = s.label.anomaly_type();
    let regen = match resynthesize(&s.provenance, ty, archives) {
        Ok(r) => r,
        Err(e) => {
            fail("regenerate", e.to_string());
            return out;
        }
    };
    if regen.series != s.series || regen.label != s.label {
        fail("regenerate", "provenance does not reproduce the sample".into());
    }

    let cfg = &s.provenance.injection;
    match ty {
        AnomalyType::Global | AnomalyType::Contextual => {
            let context = (ty == AnomalyType::Contextual).then_some(cfg.context_k);
            if let Err(e) = validate_point_anomalies(
                regen.base.row(0),
                regen.injected.row(0),
                &regen.regular_label,
                cfg.lambda,
                context,
            ) {
                fail("threshold", e.to_string());
            }
        }
        _ => match min_dissimilarity(&regen.base, &regen.injected, &regen.regular_label) {
            Some(d) if d < opts.min_dissimilarity => fail(
                "dissimilarity",
                format!("distance {d:.4} below {}", opts.min_dissimilarity),
            ),
            _ => {}
        },
    }
    // Persistent trends shift everything after a window on purpose.
    let persistent = ty == AnomalyType::Trend && cfg.trend_persist;
    if !persistent {
        if let Some((vm, vt)) = locality_violation(&regen.base, &regen.injected, &regen.regular_label) {
            fail("locality", format!("variate {vm} changed at {vt} outside the label"));
        }
    }

    if !s.series.is_regular() {
        let want = retained_count(t, cfg.irregularity_r);
        if s.series.retained() != want {
            fail("irregularity", format!("retained {} of {t}, expected {want}", s.series.retained()));
        }
    }
    out
}
