//! JSONL dataset manifest: one sample per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::domain::{
    AnomalyLabel, AnomalyType, BaseGenerator, Granularity, IndexRange, LabelPayload, Provenance,
    RenderMeta, Sample, Series, SeriesKind,
};
use crate::error::{Error, Result};

/// Wire form of a manifest line. Field names are part of the file format.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    id: String,
    kind: SeriesKind,
    base_generator: BaseGenerator,
    seed: u64,
    #[serde(rename = "M")]
    m: usize,
    #[serde(rename = "T")]
    t: usize,
    #[serde(rename = "S")]
    s: usize,
    timestamps: Vec<usize>,
    /// One array per variate.
    values: Vec<Vec<f64>>,
    granularity: Granularity,
    anomaly_type: AnomalyType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ranges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    variates: Option<Vec<usize>>,
    image_path: String,
    render_meta: RenderMeta,
    provenance: Provenance,
}

impl From<&Sample> for Record {
    fn from(s: &Sample) -> Self {
        let (mut points, mut ranges, mut variates) = (None, None, None);
        match s.label.payload() {
            LabelPayload::Points(p) => points = Some(p.clone()),
            LabelPayload::Ranges(r) => ranges = Some(r.iter().map(|&(i, j)| [i, j]).collect()),
            LabelPayload::Variates(v) => variates = Some(v.clone()),
        }
        Record {
            id: s.id.clone(),
            kind: s.series.kind(),
            base_generator: s.series.base_generator(),
            seed: s.series.seed(),
            m: s.series.variates(),
            t: s.series.length(),
            s: s.series.retained(),
            timestamps: s.series.timestamps().to_vec(),
            values: s.series.values().to_vec(),
            granularity: s.label.granularity(),
            anomaly_type: s.label.anomaly_type(),
            points,
            ranges,
            variates,
            image_path: s.image_path.clone(),
            render_meta: s.render_meta,
            provenance: s.provenance.clone(),
        }
    }
}

impl Record {
    fn into_sample(self) -> Result<Sample> {
        let series = Series::new(
            self.kind,
            self.values,
            self.timestamps,
            self.t,
            self.base_generator,
            self.seed,
        )?;
        if series.variates() != self.m || series.retained() != self.s {
            return Err(Error::InvalidSeries(format!(
                "declared M={} S={} but data has M={} S={}",
                self.m,
                self.s,
                series.variates(),
                series.retained()
            )));
        }
        let payload = match (self.granularity, self.points, self.ranges, self.variates) {
            (Granularity::Point, Some(p), None, None) => LabelPayload::Points(p),
            (Granularity::Range, None, Some(r), None) => {
                LabelPayload::Ranges(r.into_iter().map(|[i, j]| (i, j) as IndexRange).collect())
            }
            (Granularity::Variate, None, None, Some(v)) => LabelPayload::Variates(v),
            (g, ..) => {
                return Err(Error::InvalidLabel(format!(
                    "{g} granularity needs exactly the matching payload field"
                )))
            }
        };
        let label = AnomalyLabel::new(self.anomaly_type, payload)?;
        label.validate(series.length(), series.variates())?;
        if self.render_meta.grid_rows * self.render_meta.grid_cols < series.variates()
            || self.render_meta.blanks
                != self.render_meta.grid_rows * self.render_meta.grid_cols - series.variates()
        {
            return Err(Error::InvalidSeries("render_meta grid inconsistent with M".into()));
        }
        Ok(Sample {
            id: self.id,
            series,
            label,
            image_path: self.image_path,
            render_meta: self.render_meta,
            provenance: self.provenance,
        })
    }
}

/// Serializes one sample as a manifest line (no trailing newline).
pub fn to_line(sample: &Sample) -> Result<String> {
    Ok(serde_json::to_string(&Record::from(sample))?)
}

/// Parses one manifest line.
pub fn from_line(line: &str) -> Result<Sample> {
    let record: Record = serde_json::from_str(line)?;
    record.into_sample()
}

pub fn manifest_write(samples: &[Sample], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    for s in samples {
        writeln!(w, "{}", to_line(s)?).map_err(|e| Error::io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Samples read from a manifest, plus images that were not found on disk.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedManifest {
    pub samples: Vec<Sample>,
    pub missing_images: Vec<PathBuf>,
}

/// Reads a manifest. Image paths resolve against the manifest's directory;
/// missing images are reported, not fatal.
pub fn manifest_read(path: &Path) -> Result<LoadedManifest> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let root = path.parent().unwrap_or_else(|| Path::new("."));
    let mut samples = Vec::new();
    let mut missing_images = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let sample = from_line(&line).map_err(|e| Error::ManifestLine {
            line: idx + 1,
            message: e.to_string(),
        })?;
        let image = root.join(&sample.image_path);
        if !image.is_file() {
            missing_images.push(image);
        }
        samples.push(sample);
    }
    Ok(LoadedManifest {
        samples,
        missing_images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inject::InjectionConfig;
    use crate::synth::GeneratorConfig;

    pub(crate) fn toy_sample(points: Vec<usize>) -> Sample {
        let series = Series::regular(
            vec![vec![0.1, -0.2, 0.30000000000000004, 1e-300, 7.0]],
            BaseGenerator::Sine,
            3,
        )
        .unwrap();
        let label = AnomalyLabel::points(AnomalyType::Global, points).unwrap();
        Sample {
            id: crate::domain::sample_id(&series, &label),
            series,
            label,
            image_path: "ds/x.png".into(),
            render_meta: RenderMeta {
                grid_rows: 1,
                grid_cols: 1,
                blanks: 0,
                pixel_size: [1200, 400],
                axes_drawn: true,
            },
            provenance: Provenance {
                dataset: "ds".into(),
                sample_index: 0,
                generator: GeneratorConfig::default(),
                injection: InjectionConfig::default(),
                injection_seed: 1,
                drop_seed: None,
                archive: None,
                anomaly_count: 1,
                window_lengths: vec![],
                details: vec!["t=1".into()],
            },
        }
    }

    #[test]
    fn empty_manifest_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        manifest_write(&[], &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "");
        assert!(manifest_read(&path).unwrap().samples.is_empty());
    }

    #[test]
    fn one_sample_round_trip_and_missing_image_warning() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        let s = toy_sample(vec![1, 3]);
        manifest_write(std::slice::from_ref(&s), &path).unwrap();
        let loaded = manifest_read(&path).unwrap();
        assert_eq!(loaded.samples, vec![s]);
        assert_eq!(loaded.missing_images, vec![dir.path().join("ds/x.png")]);
    }

    #[test]
    fn field_names_on_the_wire() {
        let line = to_line(&toy_sample(vec![1])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            [
                "M",
                "S",
                "T",
                "anomaly_type",
                "base_generator",
                "granularity",
                "id",
                "image_path",
                "kind",
                "points",
                "provenance",
                "render_meta",
                "seed",
                "timestamps",
                "values"
            ]
        );
    }

    #[test]
    fn malformed_line_names_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        let good = to_line(&toy_sample(vec![1])).unwrap();
        std::fs::write(&path, format!("{good}\n{{not json\n")).unwrap();
        let err = manifest_read(&path).unwrap_err();
        assert!(matches!(err, Error::ManifestLine { line: 2, .. }), "{err}");
    }

    #[test]
    fn payload_must_match_granularity() {
        let line = to_line(&toy_sample(vec![1])).unwrap();
        let bad = line.replace("\"granularity\":\"point\"", "\"granularity\":\"range\"");
        assert!(from_line(&bad).is_err());
    }
}
