//! Domain types shared by every stage: series, labels, render metadata and
//! benchmark samples.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::inject::InjectionConfig;
use crate::synth::GeneratorConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Univariate,
    Multivariate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseGenerator {
    Sine,
    SineCosine,
    UcrSymbols,
    UeaArticulatoryWordRecognition,
}

impl BaseGenerator {
    /// Closed-form generators have a known period and amplitude.
    pub fn is_explicit(self) -> bool {
        matches!(self, BaseGenerator::Sine | BaseGenerator::SineCosine)
    }

    pub fn slug(self) -> &'static str {
        match self {
            BaseGenerator::Sine => "sine",
            BaseGenerator::SineCosine => "sine-cosine",
            BaseGenerator::UcrSymbols => "symbols",
            BaseGenerator::UeaArticulatoryWordRecognition => "articulary",
        }
    }

    fn tag(self) -> u8 {
        match self {
            BaseGenerator::Sine => 0,
            BaseGenerator::SineCosine => 1,
            BaseGenerator::UcrSymbols => 2,
            BaseGenerator::UeaArticulatoryWordRecognition => 3,
        }
    }
}

/// A regular or irregular time series stored variate-major.
///
/// `values[m][s]` is the value of variate `m` at the `s`-th retained
/// timestamp `timestamps[s]`. Regular series retain every index `0..length`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    kind: SeriesKind,
    values: Vec<Vec<f64>>,
    timestamps: Vec<usize>,
    length: usize,
    base_generator: BaseGenerator,
    seed: u64,
}

impl Series {
    pub fn new(
        kind: SeriesKind,
        values: Vec<Vec<f64>>,
        timestamps: Vec<usize>,
        length: usize,
        base_generator: BaseGenerator,
        seed: u64,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSeries("no variates".into()));
        }
        if kind == SeriesKind::Univariate && values.len() != 1 {
            return Err(Error::InvalidSeries(format!(
                "univariate series with {} rows",
                values.len()
            )));
        }
        if length == 0 || timestamps.is_empty() {
            return Err(Error::InvalidSeries("zero-length series".into()));
        }
        if timestamps.len() > length {
            return Err(Error::InvalidSeries(format!(
                "{} timestamps exceed length {length}",
                timestamps.len()
            )));
        }
        if timestamps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSeries("timestamps not strictly increasing".into()));
        }
        if timestamps.last().is_some_and(|&t| t >= length) {
            return Err(Error::InvalidSeries(format!("timestamp beyond length {length}")));
        }
        for (m, row) in values.iter().enumerate() {
            if row.len() != timestamps.len() {
                return Err(Error::InvalidSeries(format!(
                    "variate {m} has {} values for {} timestamps",
                    row.len(),
                    timestamps.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidSeries(format!("variate {m} has non-finite values")));
            }
        }
        Ok(Self {
            kind,
            values,
            timestamps,
            length,
            base_generator,
            seed,
        })
    }

    /// Builds a regular series whose timestamps are `0..row_len`.
    pub fn regular(
        values: Vec<Vec<f64>>,
        base_generator: BaseGenerator,
        seed: u64,
    ) -> Result<Self> {
        let length = values.first().map_or(0, Vec::len);
        let kind = if values.len() == 1 {
            SeriesKind::Univariate
        } else {
            SeriesKind::Multivariate
        };
        Self::new(kind, values, (0..length).collect(), length, base_generator, seed)
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn row(&self, variate: usize) -> &[f64] {
        &self.values[variate]
    }

    pub fn timestamps(&self) -> &[usize] {
        &self.timestamps
    }

    /// Number of variates (M).
    pub fn variates(&self) -> usize {
        self.values.len()
    }

    /// Length of the underlying regular grid (T).
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of retained timestamps (S).
    pub fn retained(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_regular(&self) -> bool {
        self.retained() == self.length
    }

    /// r = 1 - S/T.
    pub fn irregularity_ratio(&self) -> f64 {
        1.0 - self.retained() as f64 / self.length as f64
    }

    pub fn base_generator(&self) -> BaseGenerator {
        self.base_generator
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub(crate) fn with_values(&self, values: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(
            self.kind,
            values,
            self.timestamps.clone(),
            self.length,
            self.base_generator,
            self.seed,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Granularity {
    Point,
    Range,
    Variate,
}

impl Granularity {
    fn tag(self) -> u8 {
        match self {
            Granularity::Point => 0,
            Granularity::Range => 1,
            Granularity::Variate => 2,
        }
    }
}

impl fmt::Display for Granularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Granularity::Point => "point",
            Granularity::Range => "range",
            Granularity::Variate => "variate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyType {
    Global,
    Contextual,
    Seasonal,
    Trend,
    Shapelet,
    Triangle,
    Square,
    Sawtooth,
    Random,
}

impl AnomalyType {
    pub const ALL: [AnomalyType; 9] = [
        AnomalyType::Global,
        AnomalyType::Contextual,
        AnomalyType::Seasonal,
        AnomalyType::Trend,
        AnomalyType::Shapelet,
        AnomalyType::Triangle,
        AnomalyType::Square,
        AnomalyType::Sawtooth,
        AnomalyType::Random,
    ];

    pub fn granularity(self) -> Granularity {
        match self {
            AnomalyType::Global | AnomalyType::Contextual => Granularity::Point,
            AnomalyType::Seasonal | AnomalyType::Trend | AnomalyType::Shapelet => Granularity::Range,
            AnomalyType::Triangle
            | AnomalyType::Square
            | AnomalyType::Sawtooth
            | AnomalyType::Random => Granularity::Variate,
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            AnomalyType::Global => "global",
            AnomalyType::Contextual => "contextual",
            AnomalyType::Seasonal => "seasonal",
            AnomalyType::Trend => "trend",
            AnomalyType::Shapelet => "shapelet",
            AnomalyType::Triangle => "triangle",
            AnomalyType::Square => "square",
            AnomalyType::Sawtooth => "sawtooth",
            AnomalyType::Random => "random",
        }
    }

    fn tag(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for AnomalyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.slug())
    }
}

/// Inclusive index range `[start, end]`.
pub type IndexRange = (usize, usize);

/// Payload of a label or prediction; the variant fixes the granularity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelPayload {
    Points(Vec<usize>),
    Ranges(Vec<IndexRange>),
    Variates(Vec<usize>),
}

impl LabelPayload {
    pub fn granularity(&self) -> Granularity {
        match self {
            LabelPayload::Points(_) => Granularity::Point,
            LabelPayload::Ranges(_) => Granularity::Range,
            LabelPayload::Variates(_) => Granularity::Variate,
        }
    }

    pub fn empty(granularity: Granularity) -> Self {
        match granularity {
            Granularity::Point => LabelPayload::Points(Vec::new()),
            Granularity::Range => LabelPayload::Ranges(Vec::new()),
            Granularity::Variate => LabelPayload::Variates(Vec::new()),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            LabelPayload::Points(p) | LabelPayload::Variates(p) => p.is_empty(),
            LabelPayload::Ranges(r) => r.is_empty(),
        }
    }

    /// Number of events (points, ranges or variates).
    pub fn len(&self) -> usize {
        match self {
            LabelPayload::Points(p) | LabelPayload::Variates(p) => p.len(),
            LabelPayload::Ranges(r) => r.len(),
        }
    }

    /// Inclusive intervals for point and range payloads; points become `[t, t]`.
    pub fn intervals(&self) -> Result<Vec<IndexRange>> {
        match self {
            LabelPayload::Points(p) => Ok(p.iter().map(|&t| (t, t)).collect()),
            LabelPayload::Ranges(r) => Ok(r.clone()),
            LabelPayload::Variates(_) => Err(Error::UnsupportedGranularity(
                "variate payloads have no temporal intervals".into(),
            )),
        }
    }

    pub(crate) fn ids(&self) -> Vec<u64> {
        match self {
            LabelPayload::Points(p) | LabelPayload::Variates(p) => {
                p.iter().map(|&i| i as u64).collect()
            }
            LabelPayload::Ranges(r) => r
                .iter()
                .flat_map(|&(i, j)| [i as u64, j as u64])
                .collect(),
        }
    }
}

/// Ground truth for one sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnomalyLabel {
    anomaly_type: AnomalyType,
    payload: LabelPayload,
}

impl AnomalyLabel {
    /// Builds a label, sorting and deduplicating its payload. Range overlap and
    /// type/granularity agreement are checked here; domain bounds need the
    /// series and are checked by [`AnomalyLabel::validate`].
    pub fn new(anomaly_type: AnomalyType, payload: LabelPayload) -> Result<Self> {
        if anomaly_type.granularity() != payload.granularity() {
            return Err(Error::InvalidLabel(format!(
                "{anomaly_type} anomalies need {} payloads, got {}",
                anomaly_type.granularity(),
                payload.granularity()
            )));
        }
        let payload = match payload {
            LabelPayload::Points(p) => LabelPayload::Points(sorted_unique(p)),
            LabelPayload::Variates(v) => LabelPayload::Variates(sorted_unique(v)),
            LabelPayload::Ranges(mut r) => {
                if let Some(&(i, j)) = r.iter().find(|(i, j)| i > j) {
                    return Err(Error::InvalidLabel(format!("range [{i}, {j}] is reversed")));
                }
                r.sort_unstable();
                if let Some(w) = r.windows(2).find(|w| w[1].0 <= w[0].1) {
                    return Err(Error::InvalidLabel(format!(
                        "ranges [{}, {}] and [{}, {}] overlap",
                        w[0].0, w[0].1, w[1].0, w[1].1
                    )));
                }
                LabelPayload::Ranges(r)
            }
        };
        Ok(Self {
            anomaly_type,
            payload,
        })
    }

    pub fn points(anomaly_type: AnomalyType, points: Vec<usize>) -> Result<Self> {
        Self::new(anomaly_type, LabelPayload::Points(points))
    }

    pub fn ranges(anomaly_type: AnomalyType, ranges: Vec<IndexRange>) -> Result<Self> {
        Self::new(anomaly_type, LabelPayload::Ranges(ranges))
    }

    pub fn variates(anomaly_type: AnomalyType, variates: Vec<usize>) -> Result<Self> {
        Self::new(anomaly_type, LabelPayload::Variates(variates))
    }

    pub fn anomaly_type(&self) -> AnomalyType {
        self.anomaly_type
    }

    pub fn granularity(&self) -> Granularity {
        self.anomaly_type.granularity()
    }

    pub fn payload(&self) -> &LabelPayload {
        &self.payload
    }

    /// Checks index bounds against a series of length `length` with `variates` rows.
    pub fn validate(&self, length: usize, variates: usize) -> Result<()> {
        match &self.payload {
            LabelPayload::Points(p) => {
                if let Some(&t) = p.iter().find(|&&t| t >= length) {
                    return Err(Error::InvalidLabel(format!("point {t} outside [0, {length})")));
                }
            }
            LabelPayload::Ranges(r) => {
                if let Some(&(i, j)) = r.iter().find(|&&(_, j)| j >= length) {
                    return Err(Error::InvalidLabel(format!(
                        "range [{i}, {j}] outside [0, {length})"
                    )));
                }
            }
            LabelPayload::Variates(v) => {
                if let Some(&m) = v.iter().find(|&&m| m >= variates) {
                    return Err(Error::InvalidLabel(format!("variate {m} outside [0, {variates})")));
                }
            }
        }
        Ok(())
    }

    /// Boolean mask of length `length`; true at labeled points and inside ranges.
    pub fn as_binary_mask(&self, length: usize) -> Result<Vec<bool>> {
        let mut mask = vec![false; length];
        for (i, j) in self.payload.intervals()? {
            if j >= length {
                return Err(Error::InvalidLabel(format!(
                    "interval [{i}, {j}] outside [0, {length})"
                )));
            }
            mask[i..=j].iter_mut().for_each(|b| *b = true);
        }
        Ok(mask)
    }
}

pub(crate) fn sorted_unique(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Free-function form of [`AnomalyLabel::as_binary_mask`].
pub fn label_as_binary_mask(label: &AnomalyLabel, length: usize) -> Result<Vec<bool>> {
    label.as_binary_mask(length)
}

/// Layout facts about a rendered image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderMeta {
    pub grid_rows: usize,
    pub grid_cols: usize,
    pub blanks: usize,
    /// `[width, height]` in pixels.
    pub pixel_size: [u32; 2],
    pub axes_drawn: bool,
}

/// Where an implicit-generator series came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArchiveOrigin {
    /// File path, or `None` for the bundled fixture.
    pub path: Option<String>,
    /// Archive rows (cases) the variates were drawn from, in variate order.
    pub rows: Vec<usize>,
    /// Archive dimension of each variate (always 0 for univariate archives).
    pub dimensions: Vec<usize>,
    pub class_labels: Vec<String>,
    pub normalization: String,
}

/// Generation parameters recorded with each sample, enough to regenerate it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub dataset: String,
    pub sample_index: usize,
    pub generator: GeneratorConfig,
    pub injection: InjectionConfig,
    pub injection_seed: u64,
    pub drop_seed: Option<u64>,
    pub archive: Option<ArchiveOrigin>,
    pub anomaly_count: usize,
    pub window_lengths: Vec<usize>,
    /// Per-event choices made by the injector (frequency factor, waveform).
    pub details: Vec<String>,
}

/// One benchmark item.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub id: String,
    pub series: Series,
    pub label: AnomalyLabel,
    /// Image path relative to the manifest directory.
    pub image_path: String,
    pub render_meta: RenderMeta,
    pub provenance: Provenance,
}

impl Sample {
    /// Scenario name used for grouping: `univariate`, `multivariate`,
    /// `irregular-univariate` or `irregular-multivariate`.
    pub fn scenario(&self) -> &'static str {
        scenario_name(self.series.kind(), !self.series.is_regular())
    }
}

pub(crate) fn scenario_name(kind: SeriesKind, irregular: bool) -> &'static str {
    match (kind, irregular) {
        (SeriesKind::Univariate, false) => "univariate",
        (SeriesKind::Multivariate, false) => "multivariate",
        (SeriesKind::Univariate, true) => "irregular-univariate",
        (SeriesKind::Multivariate, true) => "irregular-multivariate",
    }
}

/// Hex SHA-256 over a canonical little-endian encoding of the series and label.
pub fn sample_id(series: &Series, label: &AnomalyLabel) -> String {
    let mut h = Sha256::new();
    h.update([
        match series.kind() {
            SeriesKind::Univariate => 0u8,
            SeriesKind::Multivariate => 1,
        },
        series.base_generator().tag(),
    ]);
    h.update(series.seed().to_le_bytes());
    for n in [series.variates(), series.length(), series.retained()] {
        h.update((n as u64).to_le_bytes());
    }
    for &t in series.timestamps() {
        h.update((t as u64).to_le_bytes());
    }
    for row in series.values() {
        for v in row {
            h.update(v.to_le_bytes());
        }
    }
    h.update([label.granularity().tag(), label.anomaly_type().tag()]);
    let ids = label.payload().ids();
    h.update((ids.len() as u64).to_le_bytes());
    for id in ids {
        h.update(id.to_le_bytes());
    }
    hex::encode(h.finalize())
}

/// Set view of a point or variate payload.
pub(crate) fn id_set(ids: &[usize]) -> BTreeSet<usize> {
    ids.iter().copied().collect()
}
