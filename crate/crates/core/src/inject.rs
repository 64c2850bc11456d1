//! Labeled anomaly injection (point, range and variate granularities),
//! irregular dropping, and the experiment-matrix planner.

use std::f64::consts::TAU;

use rand::seq::{index, IndexedRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::domain::{AnomalyLabel, AnomalyType, Granularity, LabelPayload, Series, SeriesKind};
use crate::error::{Error, Result};
use crate::stats::{derive_seed, mean, rng, std_dev, znorm_distance};
use crate::synth::variate_phase;

/// Replacement waveforms used by shapelet anomalies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeletKind {
    Triangle,
    Square,
    FlatNoise,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct InjectionConfig {
    /// Threshold multiplier: delta = lambda * sigma.
    pub lambda: f64,
    /// Context half-width for contextual anomalies.
    pub context_k: usize,
    pub n_point_anomalies: [usize; 2],
    pub n_ranges: [usize; 2],
    pub range_len: [usize; 2],
    /// `None` scales with the variate count, see [`default_variate_count`].
    pub n_anomalous_variates: Option<[usize; 2]>,
    /// Extra spike scale, in units of sigma, on top of the threshold.
    pub magnitude: f64,
    pub irregularity_r: f64,
    /// Ramp peak, in units of sigma, for trend anomalies.
    pub trend_scale: [f64; 2],
    /// Keep the accumulated trend offset after each window instead of
    /// returning to baseline.
    pub trend_persist: bool,
    pub seasonal_factors: Vec<f64>,
    pub shapelet_kinds: Vec<ShapeletKind>,
    /// Minimum number of untouched samples between two range windows.
    pub range_gap: usize,
    /// Amplitude and period of the base generator, needed for seasonal
    /// re-synthesis and variate waveforms.
    pub wave_amplitude: f64,
    pub wave_period: f64,
    /// Noise added to synthetic replacement segments and rows.
    pub noise_sigma: f64,
    pub seed: u64,
}

impl Default for InjectionConfig {
    fn default() -> Self {
        Self {
            lambda: 3.0,
            context_k: 10,
            n_point_anomalies: [5, 20],
            n_ranges: [1, 3],
            range_len: [10, 40],
            n_anomalous_variates: None,
            magnitude: 1.0,
            irregularity_r: 0.0,
            trend_scale: [2.0, 4.0],
            trend_persist: false,
            seasonal_factors: vec![2.0, 3.0, 0.5],
            shapelet_kinds: vec![
                ShapeletKind::Triangle,
                ShapeletKind::Square,
                ShapeletKind::FlatNoise,
            ],
            range_gap: 1,
            wave_amplitude: 1.0,
            wave_period: 50.0,
            noise_sigma: 0.05,
            seed: 0,
        }
    }
}

/// Default anomalous-variate count range for `m` variates: `[1, 3]` up to
/// nine variates, growing to a third of the variates beyond that, and never
/// more than `(m - 1) / 2` so the majority stays normal.
pub fn default_variate_count(m: usize) -> [usize; 2] {
    let hi = m.div_ceil(3).max(3).min((m.saturating_sub(1)) / 2).max(1);
    [1, hi]
}

fn check_bounds(name: &str, b: [usize; 2], min_lo: usize) -> Result<()> {
    if b[0] < min_lo || b[0] > b[1] {
        return Err(Error::Config(format!(
            "{name} = [{}, {}] must satisfy {min_lo} <= lo <= hi",
            b[0], b[1]
        )));
    }
    Ok(())
}

impl InjectionConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.lambda > 0.0) {
            return Err(Error::Config(format!("lambda {} must be > 0", self.lambda)));
        }
        if self.context_k < 1 {
            return Err(Error::Config("context_k must be >= 1".into()));
        }
        check_bounds("n_point_anomalies", self.n_point_anomalies, 1)?;
        check_bounds("n_ranges", self.n_ranges, 1)?;
        check_bounds("range_len", self.range_len, 2)?;
        if let Some(b) = self.n_anomalous_variates {
            check_bounds("n_anomalous_variates", b, 1)?;
        }
        if !(self.magnitude > 0.0) {
            return Err(Error::Config("magnitude must be > 0".into()));
        }
        if !(0.0..=MAX_IRREGULARITY).contains(&self.irregularity_r) {
            return Err(Error::Config(format!(
                "irregularity_r {} outside [0, 0.25]",
                self.irregularity_r
            )));
        }
        if !(self.trend_scale[0] > 0.0 && self.trend_scale[0] <= self.trend_scale[1]) {
            return Err(Error::Config("trend_scale must satisfy 0 < lo <= hi".into()));
        }
        if self.seasonal_factors.is_empty()
            || self
                .seasonal_factors
                .iter()
                .any(|&f| !(f > 0.0) || (f - 1.0).abs() < 1e-9)
        {
            return Err(Error::Config(
                "seasonal_factors must be non-empty, positive and != 1".into(),
            ));
        }
        if self.shapelet_kinds.is_empty() {
            return Err(Error::Config("shapelet_kinds must be non-empty".into()));
        }
        if !(self.wave_period >= 4.0) || !self.wave_amplitude.is_finite() {
            return Err(Error::Config("wave_period must be >= 4 and amplitude finite".into()));
        }
        if !(self.noise_sigma >= 0.0) {
            return Err(Error::Config("noise_sigma must be >= 0".into()));
        }
        Ok(())
    }
}

/// Upper bound for the irregularity ratio, with slack for decimal parsing.
const MAX_IRREGULARITY: f64 = 0.25 + 1e-12;

/// Result of an injection.
#[derive(Debug, Clone, PartialEq)]
pub struct Injected {
    pub series: Series,
    pub label: AnomalyLabel,
    pub window_lengths: Vec<usize>,
    /// Per-event choices (spike size, frequency factor, waveform).
    pub details: Vec<String>,
}

/// Injects one anomaly type, dispatching on `anomaly_type`.
pub fn inject(series: &Series, anomaly_type: AnomalyType, cfg: &InjectionConfig) -> Result<Injected> {
    match anomaly_type {
        AnomalyType::Global => inject_global(series, cfg),
        AnomalyType::Contextual => inject_contextual(series, cfg),
        AnomalyType::Seasonal => inject_seasonal(series, cfg),
        AnomalyType::Trend => inject_trend(series, cfg),
        AnomalyType::Shapelet => inject_shapelet(series, cfg),
        AnomalyType::Triangle
        | AnomalyType::Square
        | AnomalyType::Sawtooth
        | AnomalyType::Random => inject_variate(series, anomaly_type, cfg),
    }
}

fn require_univariate_regular(series: &Series, what: &str) -> Result<()> {
    if series.kind() != SeriesKind::Univariate || !series.is_regular() {
        return Err(Error::Unsupported(format!(
            "{what} anomalies need a regular univariate series"
        )));
    }
    Ok(())
}

/// Largest `n` such that `n` positions with pairwise distance >= `gap` fit in `span` slots.
fn max_spaced(span: usize, gap: usize) -> usize {
    if span == 0 {
        0
    } else {
        (span - 1) / gap.max(1) + 1
    }
}

/// Draws `n` sorted positions in `[start, start + span)` with pairwise
/// distance >= `gap`, uniformly over all such configurations.
fn place_spaced(r: &mut ChaCha8Rng, start: usize, span: usize, n: usize, gap: usize) -> Vec<usize> {
    let slack = gap.max(1) - 1;
    let reduced = span - (n - 1) * slack;
    let mut picks = index::sample(r, reduced, n).into_vec();
    picks.sort_unstable();
    picks
        .into_iter()
        .enumerate()
        .map(|(i, q)| start + q + i * slack)
        .collect()
}

fn draw_count(r: &mut ChaCha8Rng, bounds: [usize; 2], feasible: usize, what: &str) -> Result<usize> {
    if bounds[0] > feasible {
        return Err(Error::InjectionInfeasible(format!(
            "cannot place {} {what}; at most {feasible} fit",
            bounds[0]
        )));
    }
    Ok(r.random_range(bounds[0]..=bounds[1].min(feasible)))
}

/// Spike size: threshold plus a uniform extra. The extra is floored at 5%
/// of `magnitude * sigma` so every spike clears the threshold strictly.
fn spike(r: &mut ChaCha8Rng, delta: f64, sigma: f64, magnitude: f64) -> f64 {
    let u: f64 = r.random::<f64>().max(0.05);
    let size = delta + u * magnitude * sigma;
    if r.random_bool(0.5) {
        size
    } else {
        -size
    }
}

/// Global point anomalies: spikes beyond `lambda * sigma(x)`.
pub fn inject_global(series: &Series, cfg: &InjectionConfig) -> Result<Injected> {
    cfg.validate()?;
    require_univariate_regular(series, "global")?;
    let before = series.row(0);
    let sigma = std_dev(before);
    if !(sigma > 0.0) {
        return Err(Error::InjectionInfeasible("zero variance".into()));
    }
    let delta = cfg.lambda * sigma;
    let mut r = rng(derive_seed(cfg.seed, "global", 0));
    let gap = 2 * cfg.context_k + 1;
    let feasible = max_spaced(before.len(), gap);
    let n = draw_count(&mut r, cfg.n_point_anomalies, feasible, "point anomalies")?;
    let points = place_spaced(&mut r, 0, before.len(), n, gap);
    let mut after = before.to_vec();
    let mut details = Vec::with_capacity(n);
    for &t in &points {
        let d = spike(&mut r, delta, sigma, cfg.magnitude);
        after[t] += d;
        details.push(format!("t={t} delta={d:.6}"));
    }
    let label = AnomalyLabel::points(AnomalyType::Global, points)?;
    validate_point_anomalies(before, &after, &label, cfg.lambda, None)?;
    Ok(Injected {
        series: series.with_values(vec![after])?,
        label,
        window_lengths: Vec::new(),
        details,
    })
}

/// Local standard deviation over `x[t-k ..= t+k]`.
pub fn local_sigma(x: &[f64], t: usize, k: usize) -> f64 {
    std_dev(&x[t - k..=t + k])
}

/// Contextual point anomalies: spikes beyond `lambda * sigma(x[t-k..=t+k])`.
pub fn inject_contextual(series: &Series, cfg: &InjectionConfig) -> Result<Injected> {
    cfg.validate()?;
    require_univariate_regular(series, "contextual")?;
    let before = series.row(0);
    let k = cfg.context_k;
    let len = before.len();
    if len < 2 * k + 1 {
        return Err(Error::InjectionInfeasible(format!(
            "series of length {len} too short for context half-width {k}"
        )));
    }
    if !(std_dev(before) > 0.0) {
        return Err(Error::InjectionInfeasible("zero variance".into()));
    }
    // Candidates keep the whole window inside the series.
    let span = len - 2 * k;
    let gap = 2 * k + 1;
    let mut r = rng(derive_seed(cfg.seed, "contextual", 0));
    let feasible = max_spaced(span, gap);
    let n = draw_count(&mut r, cfg.n_point_anomalies, feasible, "point anomalies")?;
    let mut points = Vec::new();
    for _ in 0..32 {
        points = place_spaced(&mut r, k, span, n, gap);
        if points.iter().all(|&t| local_sigma(before, t, k) > 0.0) {
            break;
        }
        points.clear();
    }
    if points.is_empty() {
        return Err(Error::InjectionInfeasible("zero local variance".into()));
    }
    let mut after = before.to_vec();
    let mut details = Vec::with_capacity(n);
    for &t in &points {
        let local = local_sigma(before, t, k);
        let d = spike(&mut r, cfg.lambda * local, local, cfg.magnitude);
        after[t] += d;
        details.push(format!("t={t} delta={d:.6} local_sigma={local:.6}"));
    }
    let label = AnomalyLabel::points(AnomalyType::Contextual, points)?;
    validate_point_anomalies(before, &after, &label, cfg.lambda, Some(k))?;
    Ok(Injected {
        series: series.with_values(vec![after])?,
        label,
        window_lengths: Vec::new(),
        details,
    })
}

/// Draws `n` disjoint windows (inclusive ranges) with lengths in
/// `cfg.range_len` and at least `cfg.range_gap` samples between them.
fn place_windows(r: &mut ChaCha8Rng, len: usize, cfg: &InjectionConfig) -> Result<Vec<(usize, usize)>> {
    let [lo, hi] = cfg.range_len;
    let gap = cfg.range_gap;
    let feasible = (len + gap) / (lo + gap);
    let n = draw_count(r, cfg.n_ranges, feasible, "range windows")?;
    let mut budget = len - (n - 1) * gap;
    let mut lengths = Vec::with_capacity(n);
    for i in 0..n {
        let reserve = (n - i - 1) * lo;
        let max_len = hi.min(budget - reserve);
        let l = r.random_range(lo..=max_len);
        lengths.push(l);
        budget -= l;
    }
    let free = budget;
    // n sorted offsets in [0, free], drawn as distinct values in [0, free + n).
    let mut offs = index::sample(r, free + n, n).into_vec();
    offs.sort_unstable();
    let mut windows = Vec::with_capacity(n);
    let mut cursor = 0;
    for (i, (&o, &l)) in offs.iter().zip(&lengths).enumerate() {
        let start = cursor + (o - i) - if i == 0 { 0 } else { offs[i - 1] - (i - 1) };
        windows.push((start, start + l - 1));
        cursor = start + l + gap;
    }
    Ok(windows)
}

fn range_result(
    series: &Series,
    anomaly_type: AnomalyType,
    after: Vec<f64>,
    windows: Vec<(usize, usize)>,
    details: Vec<String>,
) -> Result<Injected> {
    let window_lengths = windows.iter().map(|(i, j)| j - i + 1).collect();
    Ok(Injected {
        series: series.with_values(vec![after])?,
        label: AnomalyLabel::ranges(anomaly_type, windows)?,
        window_lengths,
        details,
    })
}

/// Seasonal anomalies: windows re-synthesized at a multiple of the base
/// frequency, phase-matched at the left endpoint. The residual noise is kept.
pub fn inject_seasonal(series: &Series, cfg: &InjectionConfig) -> Result<Injected> {
    cfg.validate()?;
    require_univariate_regular(series, "seasonal")?;
    let base = series.base_generator();
    if !base.is_explicit() {
        return Err(Error::Unsupported(format!(
            "seasonal anomalies need a closed-form base generator, got {}",
            base.slug()
        )));
    }
    let before = series.row(0);
    let mut r = rng(derive_seed(cfg.seed, "seasonal", 0));
    let windows = place_windows(&mut r, before.len(), cfg)?;
    let (a, p) = (cfg.wave_amplitude, cfg.wave_period);
    let phase0 = variate_phase(base, 0);
    let mut after = before.to_vec();
    let mut details = Vec::new();
    for &(i, j) in &windows {
        let f = *cfg.seasonal_factors.choose(&mut r).expect("validated non-empty");
        let theta = TAU * i as f64 / p + phase0;
        for t in i..=j {
            let clean = a * (TAU * t as f64 / p + phase0).sin();
            let altered = a * (theta + TAU * f * (t - i) as f64 / p).sin();
            after[t] = before[t] - clean + altered;
        }
        details.push(format!("[{i}, {j}] factor={f}"));
    }
    range_result(series, AnomalyType::Seasonal, after, windows, details)
}

/// Trend anomalies: a linear ramp reaching `c * sigma(x)` at the window end.
pub fn inject_trend(series: &Series, cfg: &InjectionConfig) -> Result<Injected> {
    cfg.validate()?;
    require_univariate_regular(series, "trend")?;
    let before = series.row(0);
    let sigma = std_dev(before);
    if !(sigma > 0.0) {
        return Err(Error::InjectionInfeasible("zero variance".into()));
    }
    let mut r = rng(derive_seed(cfg.seed, "trend", 0));
    let windows = place_windows(&mut r, before.len(), cfg)?;
    let mut after = before.to_vec();
    let mut details = Vec::new();
    let mut carried = 0.0;
    let mut last_end = 0;
    for &(i, j) in &windows {
        if cfg.trend_persist {
            for v in &mut after[last_end..i] {
                *v += carried;
            }
        }
        let c = r.random_range(cfg.trend_scale[0]..=cfg.trend_scale[1]);
        let sign = if r.random_bool(0.5) { 1.0 } else { -1.0 };
        let slope = sign * c * sigma / (j - i) as f64;
        for (d, v) in after[i..=j].iter_mut().enumerate() {
            *v += carried + slope * d as f64;
        }
        if cfg.trend_persist {
            carried += slope * (j - i) as f64;
        }
        last_end = j + 1;
        details.push(format!("[{i}, {j}] slope={slope:.6} peak={:.6}", slope * (j - i) as f64));
    }
    if cfg.trend_persist {
        for v in &mut after[last_end..] {
            *v += carried;
        }
    }
    range_result(series, AnomalyType::Trend, after, windows, details)
}

/// Blend weight of the replacement at offset `p` in a window of `len` samples.
fn blend_weight(p: usize, len: usize) -> f64 {
    let edge = (p + 1).min(len - p) as f64 / 3.0;
    edge.min(1.0)
}

/// Shapelet anomalies: windows replaced by a triangle, square or flat
/// segment with the window's mean and half-range, blended over two samples
/// at each end.
pub fn inject_shapelet(series: &Series, cfg: &InjectionConfig) -> Result<Injected> {
    cfg.validate()?;
    require_univariate_regular(series, "shapelet")?;
    let before = series.row(0);
    let mut r = rng(derive_seed(cfg.seed, "shapelet", 0));
    let windows = place_windows(&mut r, before.len(), cfg)?;
    let noise = Normal::new(0.0, cfg.noise_sigma).expect("validated");
    let mut after = before.to_vec();
    let mut details = Vec::new();
    for &(i, j) in &windows {
        let kind = *cfg.shapelet_kinds.choose(&mut r).expect("validated non-empty");
        let seg = &before[i..=j];
        let len = seg.len();
        let mu = mean(seg);
        let half = (seg.iter().cloned().fold(f64::MIN, f64::max)
            - seg.iter().cloned().fold(f64::MAX, f64::min))
            / 2.0;
        let cycle = (len as f64 / 2.0).max(4.0);
        for p in 0..len {
            let phase = (p as f64 / cycle).fract();
            let shape = match kind {
                ShapeletKind::Triangle => 4.0 * (phase - 0.5).abs() - 1.0,
                ShapeletKind::Square => {
                    if phase < 0.5 {
                        1.0
                    } else {
                        -1.0
                    }
                }
                ShapeletKind::FlatNoise => 0.0,
            };
            let replacement = mu + half * shape + noise.sample(&mut r);
            let w = blend_weight(p, len);
            after[i + p] = (1.0 - w) * seg[p] + w * replacement;
        }
        details.push(format!("[{i}, {j}] shape={kind:?}"));
    }
    range_result(series, AnomalyType::Shapelet, after, windows, details)
}

/// Unit waveform value in `[-1, 1]` at cycle phase `phase` in `[0, 1)`.
fn unit_wave(anomaly_type: AnomalyType, phase: f64) -> f64 {
    match anomaly_type {
        AnomalyType::Triangle => 4.0 * (phase - 0.5).abs() - 1.0,
        AnomalyType::Square => {
            if phase < 0.5 {
                1.0
            } else {
                -1.0
            }
        }
        AnomalyType::Sawtooth => 2.0 * phase - 1.0,
        _ => unreachable!("periodic variate waveform"),
    }
}

/// Variate anomalies: whole rows replaced by a triangle, square, sawtooth or
/// random-walk row.
pub fn inject_variate(
    series: &Series,
    anomaly_type: AnomalyType,
    cfg: &InjectionConfig,
) -> Result<Injected> {
    cfg.validate()?;
    if anomaly_type.granularity() != Granularity::Variate {
        return Err(Error::Config(format!("{anomaly_type} is not a variate anomaly")));
    }
    if series.kind() != SeriesKind::Multivariate || !series.is_regular() {
        return Err(Error::Unsupported(
            "variate anomalies need a regular multivariate series".into(),
        ));
    }
    let m = series.variates();
    let bounds = cfg
        .n_anomalous_variates
        .unwrap_or_else(|| default_variate_count(m));
    if bounds[1] >= m {
        return Err(Error::Config(format!(
            "up to {} anomalous variates requested but only {m} variates; the majority must stay normal",
            bounds[1]
        )));
    }
    let mut r = rng(derive_seed(cfg.seed, "variate", 0));
    let n = r.random_range(bounds[0]..=bounds[1]);
    let mut chosen = index::sample(&mut r, m, n).into_vec();
    chosen.sort_unstable();
    let len = series.retained();
    let (a, p) = (cfg.wave_amplitude, cfg.wave_period);
    let noise = Normal::new(0.0, cfg.noise_sigma).expect("validated");
    let mut rows = series.values().to_vec();
    for &v in &chosen {
        let mut vr = rng(derive_seed(cfg.seed, "variate-row", v as u64));
        let row: Vec<f64> = if anomaly_type == AnomalyType::Random {
            random_walk_row(&mut vr, len, a)
        } else {
            let offset = variate_phase(series.base_generator(), v) / TAU * p;
            (0..len)
                .map(|t| {
                    let phase = ((t as f64 + offset) / p).rem_euclid(1.0);
                    a * unit_wave(anomaly_type, phase) + noise.sample(&mut vr)
                })
                .collect()
        };
        rows[v] = row;
    }
    Ok(Injected {
        series: series.with_values(rows)?,
        label: AnomalyLabel::variates(anomaly_type, chosen)?,
        window_lengths: Vec::new(),
        details: vec![format!("{n} of {m} variates")],
    })
}

/// Gaussian unit-step random walk, centered and scaled so its largest
/// excursion equals `amplitude`.
fn random_walk_row(r: &mut ChaCha8Rng, len: usize, amplitude: f64) -> Vec<f64> {
    let step = Normal::new(0.0, 1.0).expect("unit normal");
    let mut acc = 0.0;
    let mut walk: Vec<f64> = (0..len)
        .map(|_| {
            acc += step.sample(r);
            acc
        })
        .collect();
    let mu = mean(&walk);
    let peak = walk.iter().map(|w| (w - mu).abs()).fold(0.0, f64::max);
    let scale = if peak > 0.0 { amplitude / peak } else { 0.0 };
    walk.iter_mut().for_each(|w| *w = (*w - mu) * scale);
    walk
}

/// Retained count for ratio `r`: `round((1 - r) * T)`.
pub fn retained_count(length: usize, r: f64) -> usize {
    ((1.0 - r) * length as f64).round() as usize
}

/// Drops a fraction `r` of timestamps uniformly at random, always keeping
/// the first and last index. The same mask applies to every variate.
pub fn drop_irregular(series: &Series, r: f64, seed: u64) -> Result<Series> {
    if !(r > 0.0 && r <= MAX_IRREGULARITY) {
        return Err(Error::Config(format!("irregularity ratio {r} outside (0, 0.25]")));
    }
    if !series.is_regular() {
        return Err(Error::Unsupported("series is already irregular".into()));
    }
    let length = series.length();
    let keep = retained_count(length, r);
    if keep < 2 || length < 3 {
        return Err(Error::Config(format!("series of length {length} too short to drop from")));
    }
    let mut rg = rng(derive_seed(seed, "drop", 0));
    let mut interior: Vec<usize> = index::sample(&mut rg, length - 2, keep - 2)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    interior.sort_unstable();
    let mut timestamps = Vec::with_capacity(keep);
    timestamps.push(0);
    timestamps.extend(interior);
    timestamps.push(length - 1);
    let values = series
        .values()
        .iter()
        .map(|row| timestamps.iter().map(|&t| row[t]).collect())
        .collect();
    Series::new(
        series.kind(),
        values,
        timestamps,
        length,
        series.base_generator(),
        series.seed(),
    )
}

/// Re-filters a label after dropping: dropped points disappear, ranges
/// survive when at least half their indices remain, variates are unchanged.
pub fn refilter_label(label: &AnomalyLabel, series: &Series) -> Result<AnomalyLabel> {
    let ts = series.timestamps();
    let payload = match label.payload() {
        LabelPayload::Points(p) => LabelPayload::Points(
            p.iter()
                .copied()
                .filter(|t| ts.binary_search(t).is_ok())
                .collect(),
        ),
        LabelPayload::Ranges(rs) => LabelPayload::Ranges(
            rs.iter()
                .copied()
                .filter(|&(i, j)| {
                    let survived = ts.partition_point(|&t| t <= j) - ts.partition_point(|&t| t < i);
                    2 * survived > j - i
                })
                .collect(),
        ),
        LabelPayload::Variates(v) => LabelPayload::Variates(v.clone()),
    };
    AnomalyLabel::new(label.anomaly_type(), payload)
}

/// Checks the point-anomaly threshold at every labeled index: global uses
/// `lambda * sigma(before)`, contextual (`context = Some(k)`) uses the local
/// window `before[t-k..=t+k]`.
pub fn validate_point_anomalies(
    before: &[f64],
    after: &[f64],
    label: &AnomalyLabel,
    lambda: f64,
    context: Option<usize>,
) -> Result<()> {
    let LabelPayload::Points(points) = label.payload() else {
        return Err(Error::UnsupportedGranularity("expected a point label".into()));
    };
    let global = lambda * std_dev(before);
    for &t in points {
        let delta = match context {
            None => global,
            Some(k) => {
                if t < k || t + k >= before.len() {
                    return Err(Error::InvalidLabel(format!(
                        "point {t} within {k} of the boundary"
                    )));
                }
                lambda * local_sigma(before, t, k)
            }
        };
        let dev = (after[t] - before[t]).abs();
        if !(dev > delta) {
            return Err(Error::InvalidLabel(format!(
                "point {t}: |deviation| {dev} does not exceed threshold {delta}"
            )));
        }
    }
    Ok(())
}

/// Returns the first index (variate, position) where `after` differs from
/// `before` outside the labeled region, if any. Comparison is bitwise.
pub fn locality_violation(
    before: &Series,
    after: &Series,
    label: &AnomalyLabel,
) -> Option<(usize, usize)> {
    let len = before.retained();
    let mut touched_rows = vec![false; before.variates()];
    let mut touched_cols = vec![false; len];
    match label.payload() {
        LabelPayload::Points(p) => p.iter().for_each(|&t| touched_cols[t] = true),
        LabelPayload::Ranges(rs) => rs
            .iter()
            .for_each(|&(i, j)| touched_cols[i..=j].iter_mut().for_each(|c| *c = true)),
        LabelPayload::Variates(v) => v.iter().for_each(|&m| touched_rows[m] = true),
    }
    for m in (0..before.variates()).filter(|&m| !touched_rows[m]) {
        for t in (0..len).filter(|&t| !touched_cols[t]) {
            if before.row(m)[t].to_bits() != after.row(m)[t].to_bits() {
                return Some((m, t));
            }
        }
    }
    None
}

/// Smallest z-normalized Euclidean distance between an injected segment
/// (or row) and its pre-injection counterpart. `None` for point labels.
pub fn min_dissimilarity(before: &Series, after: &Series, label: &AnomalyLabel) -> Option<f64> {
    match label.payload() {
        LabelPayload::Points(_) => None,
        LabelPayload::Ranges(rs) => rs
            .iter()
            .map(|&(i, j)| znorm_distance(&before.row(0)[i..=j], &after.row(0)[i..=j]))
            .reduce(f64::min),
        LabelPayload::Variates(v) => v
            .iter()
            .map(|&m| znorm_distance(before.row(m), after.row(m)))
            .reduce(f64::min),
    }
}
