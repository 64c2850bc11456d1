// Markdown tables and summary charts from aggregate rows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use super::{marks, AggregateRow, Mark};
use crate::domain::Granularity;
use crate::error::Result;
use crate::render::{bar_chart, line_chart, ChartSeries};

const CHART_SIZE: [u32; 2] = [960, 540];

/// A rendered report: markdown plus named PNG charts.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub markdown: String,
    pub charts: Vec<(String, Vec<u8>)>,
}

fn cell(v: f64, m: Mark) -> String {
    match m {
        Mark::Best => format!("**{v:.2}**"),
        Mark::Second => format!("<u>{v:.2}</u>"),
        Mark::Plain => format!("{v:.2}"),
    }
}

/// Marks for one column, ranked among rows of the same dataset.
fn column_marks(rows: &[&AggregateRow], get: fn(&AggregateRow) -> f64) -> Vec<Mark> {
    let mut out = vec![Mark::Plain; rows.len()];
    let mut by_dataset: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for (i, r) in rows.iter().enumerate() {
        by_dataset.entry(r.key.dataset_key()).or_default().push(i);
    }
    for idx in by_dataset.values() {
        let vals: Vec<f64> = idx.iter().map(|&i| get(rows[i])).collect();
        for (&i, m) in idx.iter().zip(marks(&vals)) {
            out[i] = m;
        }
    }
    out
}

fn table(out: &mut String, title: &str, rows: &[&AggregateRow]) {
    let _ = writeln!(out, "## {title}\n");
    out.push_str("| Endpoint | Scenario | Base | Type | M | r (%) | n | P | R | F1 | Halluc. (%) |\n");
    out.push_str("|---|---|---|---|---:|---:|---:|---:|---:|---:|---:|\n");
    let pm = column_marks(rows, |r| r.precision);
    let rm = column_marks(rows, |r| r.recall);
    let fm = column_marks(rows, |r| r.f1);
    for (i, r) in rows.iter().enumerate() {
        let k = &r.key;
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {:.2} |",
            k.endpoint,
            k.scenario,
            k.base_generator.slug(),
            k.anomaly_type.slug(),
            k.variates,
            k.r_pct,
            r.n,
            cell(r.precision, pm[i]),
            cell(r.recall, rm[i]),
            cell(r.f1, fm[i]),
            r.hallucination_rate,
        );
    }
    out.push('\n');
}

/// Mean F1 per endpoint over rows grouped by `category`.
fn series_by<K: Ord + Copy>(
    rows: &[&AggregateRow],
    category: fn(&AggregateRow) -> K,
) -> (Vec<K>, Vec<ChartSeries>) {
    let cats: Vec<K> = rows.iter().map(|r| category(r)).collect::<BTreeSet<_>>().into_iter().collect();
    let endpoints: BTreeSet<&str> = rows.iter().map(|r| r.key.endpoint.as_str()).collect();
    let series = endpoints
        .into_iter()
        .map(|e| ChartSeries {
            name: e.to_string(),
            values: cats
                .iter()
                .map(|c| {
                    let vals: Vec<f64> = rows
                        .iter()
                        .filter(|r| r.key.endpoint == e && category(r) == *c)
                        .map(|r| r.f1)
                        .collect();
                    if vals.is_empty() {
                        f64::NAN
                    } else {
                        vals.iter().sum::<f64>() / vals.len() as f64
                    }
                })
                .collect(),
        })
        .collect();
    (cats, series)
}

/// Builds markdown tables per granularity, a bar chart of F1 against the
/// number of variates and a line chart of F1 against irregularity.
pub fn render_report(title: &str, rows: &[AggregateRow]) -> Result<Report> {
    let mut md = format!("# {title}\n\n");
    md.push_str("Scores are mean percentages over samples. Bold marks the best value per dataset, underline the second best. Hallucinated and malformed replies score zero.\n\n");
    for (g, name) in [
        (Granularity::Point, "Point-wise anomalies"),
        (Granularity::Range, "Range-wise anomalies"),
        (Granularity::Variate, "Variate-wise anomalies"),
    ] {
        let sel: Vec<&AggregateRow> = rows
            .iter()
            .filter(|r| r.key.anomaly_type.granularity() == g)
            .collect();
        if !sel.is_empty() {
            table(&mut md, name, &sel);
        }
    }

    let mut charts = Vec::new();
    let multi: Vec<&AggregateRow> = rows
        .iter()
        .filter(|r| r.key.scenario == "multivariate")
        .collect();
    if !multi.is_empty() {
        let (cats, series) = series_by(&multi, |r| r.key.variates);
        let labels: Vec<String> = cats.iter().map(|m| format!("M={m}")).collect();
        charts.push((
            "f1_vs_variates.png".to_string(),
            bar_chart("F1 vs number of variates", &labels, &series, CHART_SIZE)?,
        ));
        md.push_str("![F1 vs number of variates](f1_vs_variates.png)\n\n");
    }
    let irregular: Vec<&AggregateRow> = rows.iter().filter(|r| r.key.r_pct > 0).collect();
    if !irregular.is_empty() {
        let (cats, series) = series_by(&irregular, |r| r.key.r_pct);
        let labels: Vec<String> = cats.iter().map(|r| format!("r={r}%")).collect();
        charts.push((
            "f1_vs_irregularity.png".to_string(),
            line_chart("F1 vs irregularity ratio", &labels, &series, CHART_SIZE)?,
        ));
        md.push_str("![F1 vs irregularity ratio](f1_vs_irregularity.png)\n\n");
    }
    Ok(Report {
        markdown: md,
        charts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{AnomalyType, BaseGenerator};
    use crate::metrics::GroupKey;

    fn row(endpoint: &str, m: usize, r_pct: u32, f1: f64) -> AggregateRow {
        AggregateRow {
            key: GroupKey {
                endpoint: endpoint.into(),
                scenario: if r_pct > 0 { "irregular-multivariate" } else { "multivariate" }.into(),
                base_generator: BaseGenerator::SineCosine,
                anomaly_type: AnomalyType::Triangle,
                variates: m,
                r_pct,
            },
            n: 10,
            precision: f1,
            recall: f1,
            f1,
            hallucination_rate: 0.0,
        }
    }

    #[test]
    fn marks_and_charts() {
        let rows = vec![
            row("a", 4, 0, 90.0),
            row("b", 4, 0, 80.0),
            row("c", 4, 0, 10.0),
            row("a", 9, 0, 70.0),
            row("a", 9, 5, 60.0),
        ];
        let rep = render_report("Demo", &rows).unwrap();
        assert!(rep.markdown.contains("**90.00**"));
        assert!(rep.markdown.contains("<u>80.00</u>"));
        assert!(rep.markdown.contains("| 10.00 |"));
        assert!(rep.markdown.contains("## Variate-wise anomalies"));
        let names: Vec<&str> = rep.charts.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["f1_vs_variates.png", "f1_vs_irregularity.png"]);
    }
}
