//! Scoring: affiliation metrics for point and range predictions, plain set
//! precision/recall for variate predictions, and per-dataset aggregation.

pub mod affiliation;
mod report;

pub use affiliation::{affiliation_prf, affiliation_prf_on};
pub use report::{render_report, Report};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::domain::{id_set, AnomalyType, BaseGenerator, Granularity, LabelPayload, Sample};
use crate::error::{Error, Result};
use crate::parse::{ParseStatus, Prediction};

/// Precision, recall and F1 with flags for the conventional zeros.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prf {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// Precision had no predictions to average over and is reported as 0.
    pub precision_undefined: bool,
    /// Recall had no truth to average over.
    pub recall_undefined: bool,
}

impl Prf {
    pub fn new(precision: f64, recall: f64) -> Self {
        Self {
            precision,
            recall,
            f1: f1(precision, recall),
            precision_undefined: false,
            recall_undefined: false,
        }
    }
}

/// Harmonic mean, 0 when both inputs are 0.
pub fn f1(p: f64, r: f64) -> f64 {
    if p + r > 0.0 {
        2.0 * p * r / (p + r)
    } else {
        0.0
    }
}

/// Set precision/recall over variate IDs.
///
/// Both empty scores (1, 1, 1). Empty predictions against nonempty truth
/// score precision 0 (flagged); nonempty predictions against empty truth
/// score recall 0 (flagged).
pub fn vanilla_prf(predicted: &[usize], truth: &[usize]) -> Prf {
    let (p, t) = (id_set(predicted), id_set(truth));
    match (p.is_empty(), t.is_empty()) {
        (true, true) => Prf::new(1.0, 1.0),
        (true, false) => Prf {
            precision_undefined: true,
            ..Prf::new(0.0, 0.0)
        },
        (false, true) => Prf {
            recall_undefined: true,
            ..Prf::new(0.0, 0.0)
        },
        (false, false) => {
            let hit = p.intersection(&t).count() as f64;
            Prf::new(hit / p.len() as f64, hit / t.len() as f64)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricFamily {
    Affiliation,
    Vanilla,
}

impl MetricFamily {
    pub fn for_granularity(g: Granularity) -> Self {
        match g {
            Granularity::Point | Granularity::Range => MetricFamily::Affiliation,
            Granularity::Variate => MetricFamily::Vanilla,
        }
    }
}

/// Score of one prediction on one sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub sample_id: String,
    pub endpoint: String,
    pub dataset: String,
    pub metric_family: MetricFamily,
    pub scenario: String,
    pub base_generator: BaseGenerator,
    pub anomaly_type: AnomalyType,
    #[serde(rename = "M")]
    pub variates: usize,
    pub r: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub precision_undefined: bool,
    pub recall_undefined: bool,
    pub hallucinated: bool,
    pub parse_status: ParseStatus,
}

/// Scores `pred` against the sample's label. Hallucinated and malformed
/// replies score (0, 0, 0).
pub fn score_sample(sample: &Sample, pred: &Prediction, endpoint: &str) -> Result<EvalRecord> {
    let g = sample.label.granularity();
    if pred.granularity != g {
        return Err(Error::MetricInput(format!(
            "prediction is {} but sample {} is {g}",
            pred.granularity, sample.id
        )));
    }
    let hallucinated = pred.parse_status.is_rejected();
    let prf = if hallucinated {
        Prf::new(0.0, 0.0)
    } else {
        match (&pred.payload, sample.label.payload()) {
            (LabelPayload::Variates(p), LabelPayload::Variates(t)) => vanilla_prf(p, t),
            (p, t) => affiliation_prf(&p.intervals()?, &t.intervals()?, sample.series.length())?,
        }
    };
    Ok(EvalRecord {
        sample_id: sample.id.clone(),
        endpoint: endpoint.to_string(),
        dataset: sample.provenance.dataset.clone(),
        metric_family: MetricFamily::for_granularity(g),
        scenario: sample.scenario().to_string(),
        base_generator: sample.series.base_generator(),
        anomaly_type: sample.label.anomaly_type(),
        variates: sample.series.variates(),
        r: sample.series.irregularity_ratio(),
        precision: prf.precision,
        recall: prf.recall,
        f1: prf.f1,
        precision_undefined: prf.precision_undefined,
        recall_undefined: prf.recall_undefined,
        hallucinated,
        parse_status: pred.parse_status,
    })
}

/// Grouping key of an aggregate row: one dataset seen by one endpoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupKey {
    pub endpoint: String,
    pub scenario: String,
    pub base_generator: BaseGenerator,
    pub anomaly_type: AnomalyType,
    #[serde(rename = "M")]
    pub variates: usize,
    /// Irregularity ratio in whole percent.
    pub r_pct: u32,
}

impl GroupKey {
    fn of(r: &EvalRecord) -> Self {
        Self {
            endpoint: r.endpoint.clone(),
            scenario: r.scenario.clone(),
            base_generator: r.base_generator,
            anomaly_type: r.anomaly_type,
            variates: r.variates,
            r_pct: (r.r * 100.0).round() as u32,
        }
    }

    /// The same dataset regardless of endpoint.
    pub fn dataset_key(&self) -> (String, BaseGenerator, AnomalyType, usize, u32) {
        (
            self.scenario.clone(),
            self.base_generator,
            self.anomaly_type,
            self.variates,
            self.r_pct,
        )
    }
}

/// Mean scores of one group, as percentages rounded to two decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub key: GroupKey,
    pub n: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub hallucination_rate: f64,
}

fn pct(x: f64) -> f64 {
    (x * 10_000.0).round() / 100.0
}

/// Unweighted means per (endpoint, scenario, base, type, M, r), sorted by key.
pub fn aggregate(records: &[EvalRecord]) -> Result<Vec<AggregateRow>> {
    if records.is_empty() {
        return Err(Error::MetricInput("no records to aggregate".into()));
    }
    let mut groups: BTreeMap<GroupKey, Vec<&EvalRecord>> = BTreeMap::new();
    for r in records {
        groups.entry(GroupKey::of(r)).or_default().push(r);
    }
    Ok(groups
        .into_iter()
        .map(|(key, rs)| {
            let n = rs.len() as f64;
            let mean = |f: fn(&EvalRecord) -> f64| pct(rs.iter().map(|r| f(r)).sum::<f64>() / n);
            AggregateRow {
                n: rs.len(),
                precision: mean(|r| r.precision),
                recall: mean(|r| r.recall),
                f1: mean(|r| r.f1),
                hallucination_rate: mean(|r| f64::from(u8::from(r.hallucinated))),
                key,
            }
        })
        .collect())
}

/// Report marks for one value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Best,
    Second,
    Plain,
}

/// Ranks `values` descending: the maximum is `Best`, the next distinct
/// value `Second`. Ties share a mark.
pub fn marks(values: &[f64]) -> Vec<Mark> {
    let mut distinct: Vec<f64> = values.iter().copied().filter(|v| v.is_finite()).collect();
    distinct.sort_by(|a, b| b.total_cmp(a));
    distinct.dedup();
    values
        .iter()
        .map(|v| {
            if distinct.len() < 2 {
                Mark::Plain
            } else if *v == distinct[0] {
                Mark::Best
            } else if *v == distinct[1] {
                Mark::Second
            } else {
                Mark::Plain
            }
        })
        .collect()
}
