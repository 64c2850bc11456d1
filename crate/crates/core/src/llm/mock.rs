use std::fmt::Write;

use rand::seq::index;
use rand::Rng;

use super::MockBehavior;
use crate::domain::{Granularity, LabelPayload, Sample};
use crate::parse::format_payload;
use crate::stats::{derive_seed, rng};

/// The reply a mock model gives for `sample`.
pub fn mock_reply(behavior: MockBehavior, sample: &Sample, max_tokens: u32) -> String {
    let g = sample.label.granularity();
    let length = sample.series.length();
    let variates = sample.series.variates();
    match behavior {
        MockBehavior::Oracle => format_payload(sample.label.payload()),
        MockBehavior::Empty => "[]".to_string(),
        MockBehavior::Runaway => runaway(g, max_tokens),
        MockBehavior::Random(seed) => {
            let mut r = rng(derive_seed(seed, &sample.id, 0));
            let payload = match g {
                Granularity::Point => {
                    let k = r.random_range(0..=10.min(length));
                    LabelPayload::Points(sorted(index::sample(&mut r, length, k).into_vec()))
                }
                Granularity::Range => {
                    let mut ranges = Vec::new();
                    for _ in 0..r.random_range(0..=3) {
                        let len = r.random_range(1..=40.min(length));
                        let start = r.random_range(0..=length - len);
                        ranges.push((start, start + len - 1));
                    }
                    ranges.sort_unstable();
                    // Overlaps are left in; the parser merges them.
                    return format!(
                        "[{}]",
                        ranges
                            .iter()
                            .map(|(i, j)| format!("[{i}, {j}]"))
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                Granularity::Variate => {
                    let k = r.random_range(0..=3.min(variates));
                    LabelPayload::Variates(sorted(index::sample(&mut r, variates, k).into_vec()))
                }
            };
            format_payload(&payload)
        }
        MockBehavior::OffByK(k) => {
            let payload = match sample.label.payload() {
                LabelPayload::Points(p) => LabelPayload::Points(p.iter().map(|t| t + k).collect()),
                LabelPayload::Ranges(rs) => {
                    LabelPayload::Ranges(rs.iter().map(|&(i, j)| (i + k, j + k)).collect())
                }
                LabelPayload::Variates(v) => {
                    LabelPayload::Variates(sorted(v.iter().map(|m| (m + k) % variates).collect()))
                }
            };
            format_payload(&payload)
        }
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// An enumeration cut off at the token budget: roughly one token per number.
fn runaway(g: Granularity, max_tokens: u32) -> String {
    let mut s = String::from("[");
    let n = max_tokens.max(4) as usize;
    for i in 0..n {
        if i > 0 {
            s.push_str(", ");
        }
        match g {
            Granularity::Range => {
                let _ = write!(s, "[{}, {}]", 2 * i, 2 * i + 1);
            }
            _ => {
                let _ = write!(s, "{i}");
            }
        }
    }
    s
}
