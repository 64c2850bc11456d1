//! Base (anomaly-free) series: closed-form sine/cosine generators and
//! ingestion of UCR/UEA archive text files.

use std::f64::consts::TAU;
use std::path::Path;

use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::domain::{ArchiveOrigin, BaseGenerator, Series, SeriesKind};
use crate::error::{Error, Result};
use crate::stats::{derive_seed, rng, z_normalize};

/// Bundled stand-in for the UCR Symbols archive (UCR text layout).
pub const SYMBOLS_FIXTURE: &str = include_str!("../fixtures/symbols_fixture.txt");
/// Bundled stand-in for UEA ArticularyWordRecognition (`.ts` layout).
pub const ARTICULARY_FIXTURE: &str = include_str!("../fixtures/articulary_fixture.ts");

pub const ZNORM_NOTE: &str = "z-score per row (population std)";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub base_generator: BaseGenerator,
    /// T
    pub length: usize,
    /// M
    pub variates: usize,
    pub amplitude: f64,
    /// Samples per cycle.
    pub period: f64,
    pub noise_sigma: f64,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self {
            base_generator: BaseGenerator::Sine,
            length: 400,
            variates: 1,
            amplitude: 1.0,
            period: 50.0,
            noise_sigma: 0.05,
            seed: 0,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.length < 16 {
            return Err(Error::Config(format!("length {} < 16", self.length)));
        }
        if self.variates == 0 {
            return Err(Error::Config("variates must be >= 1".into()));
        }
        if !(self.period >= 4.0) {
            return Err(Error::Config(format!("period {} < 4", self.period)));
        }
        if !(self.noise_sigma >= 0.0) || !self.noise_sigma.is_finite() {
            return Err(Error::Config(format!("noise_sigma {} invalid", self.noise_sigma)));
        }
        if !self.amplitude.is_finite() {
            return Err(Error::Config("amplitude must be finite".into()));
        }
        Ok(())
    }
}

/// Adds seeded Gaussian noise to `row`; variate `m` always gets its own stream.
fn add_noise(row: &mut [f64], sigma: f64, seed: u64, variate: usize) {
    if sigma == 0.0 {
        return;
    }
    let normal = Normal::new(0.0, sigma).expect("sigma checked finite and >= 0");
    let mut r = rng(derive_seed(seed, "noise", variate as u64));
    row.iter_mut().for_each(|v| *v += normal.sample(&mut r));
}

fn wave(cfg: &GeneratorConfig, variate: usize, phase: f64) -> Vec<f64> {
    let mut row: Vec<f64> = (0..cfg.length)
        .map(|t| cfg.amplitude * (TAU * t as f64 / cfg.period + phase).sin())
        .collect();
    add_noise(&mut row, cfg.noise_sigma, cfg.seed, variate);
    row
}

/// Univariate noisy sine.
pub fn gen_sine(cfg: &GeneratorConfig) -> Result<Series> {
    cfg.validate()?;
    if cfg.base_generator != BaseGenerator::Sine || cfg.variates != 1 {
        return Err(Error::Config(
            "gen_sine needs base_generator = sine and variates = 1".into(),
        ));
    }
    Series::regular(vec![wave(cfg, 0, 0.0)], BaseGenerator::Sine, cfg.seed)
}

/// Multivariate series alternating sine (even IDs) and cosine (odd IDs).
pub fn gen_sine_cosine(cfg: &GeneratorConfig) -> Result<Series> {
    cfg.validate()?;
    if cfg.base_generator != BaseGenerator::SineCosine {
        return Err(Error::Config("gen_sine_cosine needs base_generator = sine_cosine".into()));
    }
    if cfg.variates < 2 {
        return Err(Error::Config(format!(
            "sine/cosine series needs at least 2 variates, got {}",
            cfg.variates
        )));
    }
    let rows = (0..cfg.variates)
        .map(|m| wave(cfg, m, if m % 2 == 0 { 0.0 } else { TAU / 4.0 }))
        .collect();
    Series::regular(rows, BaseGenerator::SineCosine, cfg.seed)
}

/// Phase offset of variate `m` for a closed-form generator.
pub fn variate_phase(base: BaseGenerator, variate: usize) -> f64 {
    match base {
        BaseGenerator::SineCosine if variate % 2 == 1 => TAU / 4.0,
        _ => 0.0,
    }
}

/// Dispatches to the closed-form generator named in `cfg`.
pub fn generate_explicit(cfg: &GeneratorConfig) -> Result<Series> {
    match cfg.base_generator {
        BaseGenerator::Sine => gen_sine(cfg),
        BaseGenerator::SineCosine => gen_sine_cosine(cfg),
        other => Err(Error::Unsupported(format!(
            "{} has no closed form; ingest an archive instead",
            other.slug()
        ))),
    }
}

/// One archive case after ingestion.
#[derive(Debug, Clone, PartialEq)]
pub struct IngestedSeries {
    pub series: Series,
    pub class_label: String,
}

/// Reads a UCR (univariate) or UEA `.ts` (multivariate) text archive.
pub fn ingest_archive(
    path: &Path,
    dataset: BaseGenerator,
    cfg: &GeneratorConfig,
) -> Result<Vec<IngestedSeries>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_archive(&text, dataset, cfg)
}

/// Same as [`ingest_archive`] on in-memory text.
pub fn parse_archive(
    text: &str,
    dataset: BaseGenerator,
    cfg: &GeneratorConfig,
) -> Result<Vec<IngestedSeries>> {
    match dataset {
        BaseGenerator::UcrSymbols => parse_ucr(text, cfg),
        BaseGenerator::UeaArticulatoryWordRecognition => parse_uea(text, cfg),
        other => Err(Error::Unsupported(format!(
            "{} is not an archive dataset",
            other.slug()
        ))),
    }
}

fn parse_values(fields: &[&str], row: usize) -> Result<Vec<f64>> {
    fields
        .iter()
        .map(|f| {
            let f = f.trim();
            f.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Archive {
                    row,
                    message: format!("unreadable value {f:?}"),
                })
        })
        .collect()
}

fn normalize_row(mut values: Vec<f64>, length: usize, row: usize) -> Result<Vec<f64>> {
    values.truncate(length);
    if values.len() < 2 {
        return Err(Error::Archive {
            row,
            message: "fewer than 2 values".into(),
        });
    }
    if !z_normalize(&mut values) {
        return Err(Error::Archive {
            row,
            message: "zero variance row".into(),
        });
    }
    Ok(values)
}

// `row` in errors is the 1-based line number.
fn parse_ucr(text: &str, cfg: &GeneratorConfig) -> Result<Vec<IngestedSeries>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let row = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split([',', '\t', ' '])
            .filter(|f| !f.is_empty())
            .collect();
        let (label, rest) = fields.split_first().ok_or_else(|| Error::Archive {
            row,
            message: "empty row".into(),
        })?;
        let values = normalize_row(parse_values(rest, row)?, cfg.length, row)?;
        let seed = derive_seed(cfg.seed, "archive", out.len() as u64);
        out.push(IngestedSeries {
            series: Series::regular(vec![values], BaseGenerator::UcrSymbols, seed)?,
            class_label: label.trim().to_string(),
        });
    }
    Ok(out)
}

fn parse_uea(text: &str, cfg: &GeneratorConfig) -> Result<Vec<IngestedSeries>> {
    let has_data_marker = text
        .lines()
        .any(|l| l.trim().eq_ignore_ascii_case("@data"));
    let mut in_data = !has_data_marker;
    let mut dims_expected: Option<usize> = None;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let row = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('@') {
            if line.eq_ignore_ascii_case("@data") {
                in_data = true;
            }
            continue;
        }
        if !in_data {
            continue;
        }
        let parts: Vec<&str> = line.split(':').collect();
        if parts.len() < 2 {
            return Err(Error::Archive {
                row,
                message: "expected dimensions separated by ':' followed by a class label".into(),
            });
        }
        let (label, dims) = parts.split_last().expect("len >= 2");
        if let Some(expected) = dims_expected {
            if dims.len() != expected {
                return Err(Error::Archive {
                    row,
                    message: format!("{} dimensions, expected {expected}", dims.len()),
                });
            }
        }
        dims_expected = Some(dims.len());
        let mut rows = Vec::with_capacity(dims.len());
        for dim in dims {
            let fields: Vec<&str> = dim.split(',').collect();
            rows.push(parse_values(&fields, row)?);
        }
        let len = rows[0].len();
        if rows.iter().any(|r| r.len() != len) {
            return Err(Error::Archive {
                row,
                message: "ragged dimensions".into(),
            });
        }
        let rows = rows
            .into_iter()
            .map(|r| normalize_row(r, cfg.length, row))
            .collect::<Result<Vec<_>>>()?;
        let seed = derive_seed(cfg.seed, "archive", out.len() as u64);
        let kind = if rows.len() == 1 {
            SeriesKind::Univariate
        } else {
            SeriesKind::Multivariate
        };
        let n = rows[0].len();
        out.push(IngestedSeries {
            series: Series::new(
                kind,
                rows,
                (0..n).collect(),
                n,
                BaseGenerator::UeaArticulatoryWordRecognition,
                seed,
            )?,
            class_label: label.trim().to_string(),
        });
    }
    Ok(out)
}

/// Builds a base series from archive cases for sample `index`.
///
/// Univariate archives use case `index mod cases`. Multivariate series take
/// `cfg.variates` rows by walking dimensions case after case starting from
/// case `index mod cases`, truncated to the shortest row. Seeded noise with
/// `cfg.noise_sigma` is added per variate so samples differ even when they
/// reuse a case.
pub fn archive_series(
    cases: &[IngestedSeries],
    cfg: &GeneratorConfig,
    index: usize,
    path: Option<String>,
) -> Result<(Series, ArchiveOrigin)> {
    cfg.validate()?;
    if cases.is_empty() {
        return Err(Error::Config("archive has no cases".into()));
    }
    let dims = cases[0].series.variates();
    let start = index % cases.len();
    let mut rows = Vec::with_capacity(cfg.variates);
    let mut origin = ArchiveOrigin {
        path,
        rows: Vec::new(),
        dimensions: Vec::new(),
        class_labels: Vec::new(),
        normalization: ZNORM_NOTE.into(),
    };
    for m in 0..cfg.variates {
        let case = (start + m / dims) % cases.len();
        let dim = m % dims;
        let src = &cases[case];
        if src.series.variates() <= dim {
            return Err(Error::Config(format!("archive case {case} lacks dimension {dim}")));
        }
        rows.push(src.series.row(dim).to_vec());
        origin.rows.push(case);
        origin.dimensions.push(dim);
        origin.class_labels.push(src.class_label.clone());
    }
    let len = rows.iter().map(Vec::len).min().unwrap_or(0).min(cfg.length);
    for (m, row) in rows.iter_mut().enumerate() {
        row.truncate(len);
        add_noise(row, cfg.noise_sigma, cfg.seed, m);
    }
    let base = cases[0].series.base_generator();
    let series = if cfg.variates == 1 {
        Series::regular(rows, base, cfg.seed)?
    } else {
        Series::new(
            SeriesKind::Multivariate,
            rows,
            (0..len).collect(),
            len,
            base,
            cfg.seed,
        )?
    };
    Ok((series, origin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{mean, std_dev};

    fn cfg(length: usize) -> GeneratorConfig {
        GeneratorConfig {
            length,
            noise_sigma: 0.0,
            ..GeneratorConfig::default()
        }
    }

    #[test]
    fn sine_identities() {
        let c = GeneratorConfig {
            period: 400.0,
            ..cfg(400)
        };
        let s = gen_sine(&c).unwrap();
        assert!(s.row(0)[0].abs() < 1e-9);
        assert!((s.row(0)[100] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sine_closed_form_without_noise() {
        let c = GeneratorConfig {
            amplitude: 2.5,
            period: 37.0,
            ..cfg(300)
        };
        let s = gen_sine(&c).unwrap();
        for (t, v) in s.row(0).iter().enumerate() {
            assert!((v - 2.5 * (TAU * t as f64 / 37.0).sin()).abs() < 1e-9);
        }
    }

    #[test]
    fn sine_is_deterministic() {
        let c = GeneratorConfig {
            seed: 11,
            ..GeneratorConfig::default()
        };
        let a = gen_sine(&c).unwrap();
        let b = gen_sine(&c).unwrap();
        let bits = |s: &Series| s.row(0).iter().map(|v| v.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&a), bits(&b));
    }

    #[test]
    fn noise_std_matches_sigma() {
        let c = GeneratorConfig {
            length: 10_000,
            noise_sigma: 0.1,
            seed: 3,
            ..GeneratorConfig::default()
        };
        let noisy = gen_sine(&c).unwrap();
        let clean = gen_sine(&GeneratorConfig {
            noise_sigma: 0.0,
            ..c.clone()
        })
        .unwrap();
        let resid: Vec<f64> = noisy
            .row(0)
            .iter()
            .zip(clean.row(0))
            .map(|(a, b)| a - b)
            .collect();
        let sd = std_dev(&resid);
        assert!((0.095..=0.105).contains(&sd), "sd = {sd}");
    }

    #[test]
    fn sine_cosine_rows() {
        let c = GeneratorConfig {
            base_generator: BaseGenerator::SineCosine,
            variates: 2,
            ..cfg(200)
        };
        let s = gen_sine_cosine(&c).unwrap();
        assert!((s.row(1)[0] - 1.0).abs() < 1e-12);
        assert!(s.row(0)[0].abs() < 1e-12);
        for t in 0..200 {
            let x = TAU * t as f64 / 50.0;
            assert!((s.row(0)[t] - x.sin()).abs() < 1e-9);
            assert!((s.row(1)[t] - x.cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn sine_cosine_nine_variates_and_stable_rows() {
        let c = GeneratorConfig {
            base_generator: BaseGenerator::SineCosine,
            variates: 9,
            seed: 5,
            ..GeneratorConfig::default()
        };
        let a = gen_sine_cosine(&c).unwrap();
        assert_eq!(a.variates(), 9);
        let b = gen_sine_cosine(&c).unwrap();
        assert_eq!(a.row(3), b.row(3));
        // Adding variates leaves earlier rows untouched.
        let wider = gen_sine_cosine(&GeneratorConfig {
            variates: 12,
            ..c.clone()
        })
        .unwrap();
        assert_eq!(a.row(3), wider.row(3));
    }

    #[test]
    fn sine_cosine_needs_two_variates() {
        let c = GeneratorConfig {
            base_generator: BaseGenerator::SineCosine,
            variates: 1,
            ..GeneratorConfig::default()
        };
        assert!(matches!(gen_sine_cosine(&c), Err(Error::Config(_))));
    }

    #[test]
    fn config_bounds() {
        assert!(cfg(15).validate().is_err());
        assert!(GeneratorConfig {
            period: 3.0,
            ..cfg(100)
        }
        .validate()
        .is_err());
        assert!(GeneratorConfig {
            noise_sigma: -0.1,
            ..cfg(100)
        }
        .validate()
        .is_err());
    }

    #[test]
    fn ucr_constant_row_rejected() {
        let err = parse_archive("1,5,5,5,5,5\n", BaseGenerator::UcrSymbols, &cfg(400)).unwrap_err();
        assert!(err.to_string().contains("zero variance row"), "{err}");
    }

    #[test]
    fn ucr_row_is_z_normalized() {
        let out = parse_archive("1, 0.0, 1.0, 2.0\n", BaseGenerator::UcrSymbols, &cfg(400)).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].class_label, "1");
        let expected = [-1.2247, 0.0, 1.2247];
        for (v, e) in out[0].series.row(0).iter().zip(expected) {
            assert!((v - e).abs() < 1e-4);
        }
    }

    #[test]
    fn ucr_bad_value_names_row() {
        let err = parse_archive("1,0,1,2\n2,0,x,1\n", BaseGenerator::UcrSymbols, &cfg(400))
            .unwrap_err();
        assert!(matches!(err, Error::Archive { row: 2, .. }), "{err}");
    }

    #[test]
    fn uea_shape() {
        let text = "@problemName Tiny\n@data\n1,2,3,4:4,1,3,2:a\n2,2,1,4:0,1,0,1:b\n5,6,5,7:1,2,3,5:a\n";
        let out = parse_archive(text, BaseGenerator::UeaArticulatoryWordRecognition, &cfg(400))
            .unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|c| c.series.variates() == 2));
        assert_eq!(out[1].class_label, "b");
    }

    #[test]
    fn uea_ragged_dims_rejected() {
        let text = "@data\n1,2,3:4,1:a\n";
        let err = parse_archive(text, BaseGenerator::UeaArticulatoryWordRecognition, &cfg(400))
            .unwrap_err();
        assert!(matches!(err, Error::Archive { row: 2, .. }), "{err}");
    }

    #[test]
    fn non_archive_dataset_rejected() {
        assert!(matches!(
            parse_archive("1,2,3", BaseGenerator::Sine, &cfg(400)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn fixtures_ingest() {
        let sym = parse_archive(SYMBOLS_FIXTURE, BaseGenerator::UcrSymbols, &cfg(400)).unwrap();
        assert_eq!(sym.len(), 6);
        assert_eq!(sym[0].series.length(), 398);
        for c in &sym {
            assert!(mean(c.series.row(0)).abs() < 1e-6);
            assert!((std_dev(c.series.row(0)) - 1.0).abs() < 1e-6);
        }
        let art = parse_archive(
            ARTICULARY_FIXTURE,
            BaseGenerator::UeaArticulatoryWordRecognition,
            &cfg(400),
        )
        .unwrap();
        assert_eq!(art.len(), 6);
        assert!(art.iter().all(|c| c.series.variates() == 9 && c.series.length() == 144));
    }

    #[test]
    fn archive_series_tiles_dimensions_across_cases() {
        let art = parse_archive(
            ARTICULARY_FIXTURE,
            BaseGenerator::UeaArticulatoryWordRecognition,
            &cfg(400),
        )
        .unwrap();
        let c = GeneratorConfig {
            base_generator: BaseGenerator::UeaArticulatoryWordRecognition,
            variates: 16,
            ..cfg(400)
        };
        let (s, origin) = archive_series(&art, &c, 2, None).unwrap();
        assert_eq!(s.variates(), 16);
        assert_eq!(origin.rows[..9], [2; 9]);
        assert_eq!(origin.rows[9..], [3; 7]);
        assert_eq!(s.row(10), art[3].series.row(1));
    }
}
