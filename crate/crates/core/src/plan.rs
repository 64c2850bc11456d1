//! Experiment matrix (TOML) and its expansion into dataset plans.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domain::{AnomalyType, BaseGenerator, Granularity, SeriesKind};
use crate::error::{Error, Result};
use crate::inject::InjectionConfig;
use crate::synth::GeneratorConfig;

pub const FULL_M_VALUES: [usize; 5] = [4, 9, 16, 25, 36];
pub const FULL_R_VALUES: [f64; 5] = [0.05, 0.10, 0.15, 0.20, 0.25];

pub const RULE_IRREGULAR_CONTEXTUAL: &str = "irregular+contextual";
pub const RULE_IMPLICIT_SEASONAL: &str = "implicit+seasonal";

/// A scenario paired with its base generator, written `scenario/base` in
/// matrix files, e.g. `irregular-univariate/sine`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scenario {
    pub kind: SeriesKind,
    pub irregular: bool,
    pub base: BaseGenerator,
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        crate::domain::scenario_name(self.kind, self.irregular)
    }

    fn accepts(&self, ty: AnomalyType) -> bool {
        match self.kind {
            SeriesKind::Univariate => ty.granularity() != Granularity::Variate,
            SeriesKind::Multivariate => ty.granularity() == Granularity::Variate,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name(), self.base.slug())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (scenario, base) = s
            .split_once('/')
            .ok_or_else(|| Error::Config(format!("scenario {s:?} must look like univariate/sine")))?;
        let (kind, irregular) = match scenario {
            "univariate" => (SeriesKind::Univariate, false),
            "multivariate" => (SeriesKind::Multivariate, false),
            "irregular-univariate" => (SeriesKind::Univariate, true),
            "irregular-multivariate" => (SeriesKind::Multivariate, true),
            other => return Err(Error::Config(format!("unknown scenario {other:?}"))),
        };
        let base = match (kind, base) {
            (SeriesKind::Univariate, "sine") => BaseGenerator::Sine,
            (SeriesKind::Univariate, "symbols") => BaseGenerator::UcrSymbols,
            (SeriesKind::Multivariate, "sine-cosine") => BaseGenerator::SineCosine,
            (SeriesKind::Multivariate, "articulary") => {
                BaseGenerator::UeaArticulatoryWordRecognition
            }
            (_, other) => {
                return Err(Error::Config(format!(
                    "base {other:?} not available for {scenario} scenarios"
                )))
            }
        };
        Ok(Scenario {
            kind,
            irregular,
            base,
        })
    }
}

impl Serialize for Scenario {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scenario {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn default_m() -> Vec<usize> {
    vec![9]
}

fn default_samples() -> usize {
    100
}

/// Generator overrides applied to every dataset.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeneratorOverrides {
    pub length: Option<usize>,
    pub amplitude: Option<f64>,
    pub period: Option<f64>,
    pub noise_sigma: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentMatrix {
    pub scenarios: Vec<Scenario>,
    pub anomaly_types: Vec<AnomalyType>,
    #[serde(rename = "M_values", default = "default_m")]
    pub m_values: Vec<usize>,
    #[serde(default)]
    pub r_values: Vec<f64>,
    #[serde(default = "default_samples")]
    pub samples_per_dataset: usize,
    /// Variate counts for irregular multivariate scenarios.
    #[serde(rename = "irregular_M_values", default = "default_m")]
    pub irregular_m_values: Vec<usize>,
    /// Drop excluded combinations from the cross product instead of failing.
    #[serde(default)]
    pub skip_excluded: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub generator: GeneratorOverrides,
    #[serde(default)]
    pub injection: InjectionConfig,
    /// UCR text file for the symbols base; the bundled fixture when absent.
    #[serde(default)]
    pub symbols_path: Option<String>,
    /// UEA `.ts` file for the articulary base; the bundled fixture when absent.
    #[serde(default)]
    pub articulary_path: Option<String>,
}

impl ExperimentMatrix {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("matrix: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    /// The full matrix: every scenario and anomaly type, five variate
    /// counts, five irregularity ratios, 100 images per dataset.
    pub fn full() -> Self {
        let scenarios = [
            "univariate/sine",
            "univariate/symbols",
            "multivariate/sine-cosine",
            "multivariate/articulary",
            "irregular-univariate/sine",
            "irregular-univariate/symbols",
            "irregular-multivariate/sine-cosine",
            "irregular-multivariate/articulary",
        ]
        .iter()
        .map(|s| s.parse().expect("static scenario"))
        .collect();
        Self {
            scenarios,
            anomaly_types: AnomalyType::ALL.to_vec(),
            m_values: FULL_M_VALUES.to_vec(),
            r_values: FULL_R_VALUES.to_vec(),
            samples_per_dataset: 100,
            irregular_m_values: vec![9],
            skip_excluded: true,
            seed: 0,
            generator: GeneratorOverrides::default(),
            injection: InjectionConfig::default(),
            symbols_path: None,
            articulary_path: None,
        }
    }
}

/// One dataset: a fixed (scenario, anomaly type, M, r) cell of the matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetPlan {
    pub name: String,
    /// Name of the regular dataset whose seeds this one shares; irregular
    /// datasets are drawn from the same base samples as their regular
    /// counterpart.
    pub seed_key: String,
    pub scenario: Scenario,
    pub anomaly_type: AnomalyType,
    pub variates: usize,
    pub irregularity_r: f64,
    pub samples: usize,
    pub generator: GeneratorConfig,
    pub injection: InjectionConfig,
}

/// A combination removed from the cross product.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Exclusion {
    pub scenario: Scenario,
    pub anomaly_type: AnomalyType,
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Plan {
    pub datasets: Vec<DatasetPlan>,
    pub excluded: Vec<Exclusion>,
    pub seed: u64,
    pub symbols_path: Option<String>,
    pub articulary_path: Option<String>,
}

impl Plan {
    pub fn total_images(&self) -> usize {
        self.datasets.iter().map(|d| d.samples).sum()
    }
}

/// The exclusion rule violated by a combination, if any.
pub fn exclusion_rule(scenario: &Scenario, ty: AnomalyType) -> Option<(&'static str, &'static str)> {
    if scenario.irregular && ty == AnomalyType::Contextual {
        return Some((
            RULE_IRREGULAR_CONTEXTUAL,
            "contextual anomalies are skipped in irregular series because dropped points damage the context window",
        ));
    }
    if !scenario.base.is_explicit() && ty == AnomalyType::Seasonal {
        return Some((
            RULE_IMPLICIT_SEASONAL,
            "seasonal anomalies are excluded for implicit base generators because their seasonality is undetermined",
        ));
    }
    None
}

fn r_slug(r: f64) -> String {
    format!("r{:02}", (r * 100.0).round() as u32)
}

/// Expands a matrix into dataset plans: the cross product of scenarios and
/// anomaly types (pairs of mismatched granularity are not combinations),
/// variate counts for multivariate scenarios and ratios for irregular ones.
pub fn plan_datasets(matrix: &ExperimentMatrix) -> Result<Plan> {
    if matrix.samples_per_dataset == 0 {
        return Err(Error::Config("samples_per_dataset must be >= 1".into()));
    }
    if let Some(&m) = matrix
        .m_values
        .iter()
        .chain(&matrix.irregular_m_values)
        .find(|&&m| m < 2)
    {
        return Err(Error::Config(format!("variate count {m} < 2")));
    }
    if let Some(&r) = matrix.r_values.iter().find(|&&r| !(r > 0.0 && r <= 0.25 + 1e-12)) {
        return Err(Error::Config(format!("irregularity ratio {r} outside (0, 0.25]")));
    }
    if matrix.scenarios.iter().any(|s| s.irregular) && matrix.r_values.is_empty() {
        return Err(Error::Config("irregular scenarios need r_values".into()));
    }
    matrix.injection.validate()?;

    let mut datasets = Vec::new();
    let mut excluded = Vec::new();
    for scenario in &matrix.scenarios {
        for &ty in &matrix.anomaly_types {
            if !scenario.accepts(ty) {
                continue;
            }
            if let Some((rule, why)) = exclusion_rule(scenario, ty) {
                if !matrix.skip_excluded {
                    return Err(Error::Excluded {
                        rule,
                        detail: format!("{scenario} x {ty}: {why}"),
                    });
                }
                excluded.push(Exclusion {
                    scenario: *scenario,
                    anomaly_type: ty,
                    rule: rule.to_string(),
                });
                continue;
            }
            let m_values: Vec<usize> = match (scenario.kind, scenario.irregular) {
                (SeriesKind::Univariate, _) => vec![1],
                (SeriesKind::Multivariate, false) => matrix.m_values.clone(),
                (SeriesKind::Multivariate, true) => matrix.irregular_m_values.clone(),
            };
            let r_values: Vec<f64> = if scenario.irregular {
                matrix.r_values.clone()
            } else {
                vec![0.0]
            };
            for &m in &m_values {
                let regular_scenario = crate::domain::scenario_name(scenario.kind, false);
                let mut seed_key = format!("{regular_scenario}-{}-{ty}", scenario.base.slug());
                if scenario.kind == SeriesKind::Multivariate {
                    seed_key.push_str(&format!("-m{m}"));
                }
                for &r in &r_values {
                    let name = if scenario.irregular {
                        format!("irregular-{seed_key}-{}", r_slug(r))
                    } else {
                        seed_key.clone()
                    };
                    datasets.push(DatasetPlan {
                        name,
                        seed_key: seed_key.clone(),
                        scenario: *scenario,
                        anomaly_type: ty,
                        variates: m,
                        irregularity_r: r,
                        samples: matrix.samples_per_dataset,
                        generator: generator_for(matrix, scenario.base, m),
                        injection: injection_for(matrix, scenario.base, r),
                    });
                }
            }
        }
    }
    Ok(Plan {
        datasets,
        excluded,
        seed: matrix.seed,
        symbols_path: matrix.symbols_path.clone(),
        articulary_path: matrix.articulary_path.clone(),
    })
}

fn generator_for(matrix: &ExperimentMatrix, base: BaseGenerator, m: usize) -> GeneratorConfig {
    let d = GeneratorConfig::default();
    let o = &matrix.generator;
    GeneratorConfig {
        base_generator: base,
        length: o.length.unwrap_or(d.length),
        variates: m,
        amplitude: o.amplitude.unwrap_or(d.amplitude),
        period: o.period.unwrap_or(d.period),
        noise_sigma: o.noise_sigma.unwrap_or(d.noise_sigma),
        seed: 0,
    }
}

fn injection_for(matrix: &ExperimentMatrix, base: BaseGenerator, r: f64) -> InjectionConfig {
    let g = generator_for(matrix, base, 1);
    let mut inj = matrix.injection.clone();
    inj.irregularity_r = r;
    inj.noise_sigma = g.noise_sigma;
    if base.is_explicit() {
        inj.wave_amplitude = g.amplitude;
        inj.wave_period = g.period;
    } else {
        // Archive rows are z-normalized: a sine with amplitude sqrt(2) has unit variance.
        inj.wave_amplitude = std::f64::consts::SQRT_2;
        inj.wave_period = (g.length as f64 / 8.0).max(4.0);
    }
    inj
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_matrix_census() {
        let plan = plan_datasets(&ExperimentMatrix::full()).unwrap();
        assert_eq!(plan.datasets.len(), 124);
        assert_eq!(plan.total_images(), 12_400);
        assert!(plan.datasets.iter().all(|d| d.samples == 100));
        let rules: Vec<&str> = plan.excluded.iter().map(|e| e.rule.as_str()).collect();
        assert!(rules.contains(&RULE_IRREGULAR_CONTEXTUAL));
        assert!(rules.contains(&RULE_IMPLICIT_SEASONAL));
    }

    #[test]
    fn irregular_contextual_rejected() {
        let m = ExperimentMatrix::from_toml(
            r#"
            scenarios = ["irregular-univariate/sine"]
            anomaly_types = ["contextual"]
            r_values = [0.05]
            samples_per_dataset = 5
            "#,
        )
        .unwrap();
        let err = plan_datasets(&m).unwrap_err();
        assert!(matches!(err, Error::Excluded { rule: RULE_IRREGULAR_CONTEXTUAL, .. }), "{err}");
    }

    #[test]
    fn symbols_seasonal_rejected() {
        let m = ExperimentMatrix::from_toml(
            r#"
            scenarios = ["univariate/symbols"]
            anomaly_types = ["seasonal"]
            "#,
        )
        .unwrap();
        let err = plan_datasets(&m).unwrap_err();
        assert!(matches!(err, Error::Excluded { rule: RULE_IMPLICIT_SEASONAL, .. }), "{err}");
    }

    #[test]
    fn smoke_matrix() {
        let m = ExperimentMatrix::from_toml(
            r#"
            scenarios = ["univariate/sine"]
            anomaly_types = ["global", "trend"]
            samples_per_dataset = 5
            seed = 42
            "#,
        )
        .unwrap();
        let plan = plan_datasets(&m).unwrap();
        assert_eq!(plan.datasets.len(), 2);
        assert_eq!(plan.total_images(), 10);
        assert_eq!(plan.datasets[0].name, "univariate-sine-global");
    }

    #[test]
    fn irregular_datasets_share_regular_seed_key() {
        let m = ExperimentMatrix::from_toml(
            r#"
            scenarios = ["multivariate/sine-cosine", "irregular-multivariate/sine-cosine"]
            anomaly_types = ["square"]
            M_values = [4, 9]
            r_values = [0.05, 0.25]
            samples_per_dataset = 2
            "#,
        )
        .unwrap();
        let plan = plan_datasets(&m).unwrap();
        let names: Vec<&str> = plan.datasets.iter().map(|d| d.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "multivariate-sine-cosine-square-m4",
                "multivariate-sine-cosine-square-m9",
                "irregular-multivariate-sine-cosine-square-m9-r05",
                "irregular-multivariate-sine-cosine-square-m9-r25",
            ]
        );
        assert_eq!(plan.datasets[3].seed_key, "multivariate-sine-cosine-square-m9");
    }

    #[test]
    fn bad_scenarios_and_ratios() {
        assert!("univariate/sine-cosine".parse::<Scenario>().is_err());
        assert!("sideways/sine".parse::<Scenario>().is_err());
        let m = ExperimentMatrix::from_toml(
            r#"
            scenarios = ["irregular-univariate/sine"]
            anomaly_types = ["global"]
            r_values = [0.3]
            "#,
        )
        .unwrap();
        assert!(plan_datasets(&m).is_err());
    }
}
