//! Affiliation precision and recall.
//!
//! Events are inclusive index ranges `[i, j]`, treated as half-open
//! continuous intervals `[i, j + 1)` on the timeline `[0, T)` (or any
//! window `[a, b)`). Each truth
//! event owns the zone of points closer to it than to any other truth event.
//! Inside a zone, each predicted point's distance to the truth event (and
//! each truth point's distance to the predictions) is turned into the
//! probability that a uniformly random point of the zone would do no better.
//! All integrals below are exact: the integrands are piecewise linear.

use std::ops::Range;

use super::Prf;
use crate::domain::IndexRange;
use crate::error::{Error, Result};

/// Half-open interval `[start, end)`.
pub type Span = (f64, f64);

/// Per-zone scores; precision is `None` when the zone holds no prediction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZoneScore {
    pub zone: Span,
    pub truth: Span,
    pub precision: Option<f64>,
    pub recall: f64,
}

/// Checks events lie in `domain` and are pairwise disjoint; returns them sorted.
pub fn check_events(events: &[IndexRange], domain: &Range<usize>, what: &str) -> Result<Vec<IndexRange>> {
    let mut ev = events.to_vec();
    ev.sort_unstable();
    for &(i, j) in &ev {
        if i > j || i < domain.start || j >= domain.end {
            return Err(Error::MetricInput(format!(
                "{what} event [{i}, {j}] outside [{}, {})",
                domain.start, domain.end
            )));
        }
    }
    for w in ev.windows(2) {
        if w[1].0 <= w[0].1 {
            return Err(Error::MetricInput(format!(
                "{what} events [{}, {}] and [{}, {}] overlap",
                w[0].0, w[0].1, w[1].0, w[1].1
            )));
        }
    }
    Ok(ev)
}

pub(crate) fn to_spans(events: &[IndexRange]) -> Vec<Span> {
    events.iter().map(|&(i, j)| (i as f64, j as f64 + 1.0)).collect()
}

/// Zones around sorted, disjoint truth spans: cut at midpoints between
/// consecutive events, extended to the domain ends.
pub fn zones(truth: &[Span], domain: Span) -> Vec<Span> {
    (0..truth.len())
        .map(|k| {
            let lo = if k == 0 {
                domain.0
            } else {
                (truth[k - 1].1 + truth[k].0) / 2.0
            };
            let hi = if k + 1 == truth.len() {
                domain.1
            } else {
                (truth[k].1 + truth[k + 1].0) / 2.0
            };
            (lo, hi)
        })
        .collect()
}

/// Intersection of sorted spans with `zone`, dropping empty pieces.
pub(crate) fn clip(spans: &[Span], zone: Span) -> Vec<Span> {
    spans
        .iter()
        .map(|&(a, b)| (a.max(zone.0), b.min(zone.1)))
        .filter(|(a, b)| b > a)
        .collect()
}

/// Antiderivative of `min(d, m)` in `d`, from 0.
fn min_antiderivative(d: f64, m: f64) -> f64 {
    if d <= m {
        d * d / 2.0
    } else {
        m * m / 2.0 + m * (d - m)
    }
}

/// Integral over distances `d in [d1, d2]` of the precision survival
/// `1 - (g + d + min(d, other)) / e` for points on one side of the truth
/// event. `other` is the zone's margin on the opposite side.
fn side_integral(d1: f64, d2: f64, g: f64, other: f64, e: f64) -> f64 {
    let width = d2 - d1;
    width * (1.0 - g / e)
        - ((d2 * d2 - d1 * d1) / 2.0 + min_antiderivative(d2, other) - min_antiderivative(d1, other))
            / e
}

/// Integral of the precision probability over the predicted piece `p`,
/// which lies inside `zone`.
fn precision_integral(p: Span, truth: Span, zone: Span) -> f64 {
    let (a, b) = truth;
    let e = zone.1 - zone.0;
    let g = b - a;
    let (left_margin, right_margin) = (a - zone.0, zone.1 - b);
    let mut total = 0.0;
    // Before the truth event: d = a - x.
    let (u, v) = (p.0, p.1.min(a));
    if v > u {
        total += side_integral(a - v, a - u, g, right_margin, e);
    }
    // Inside: probability one.
    let (u, v) = (p.0.max(a), p.1.min(b));
    if v > u {
        total += v - u;
    }
    // After: d = x - b.
    let (u, v) = (p.0.max(b), p.1);
    if v > u {
        total += side_integral(u - b, v - b, g, left_margin, e);
    }
    total
}

/// Integral of the recall probability over truth points `y in [y0, y1]`
/// whose nearest prediction boundary is `c`; `left` means they lie before it.
/// The probability is one minus the zone share of `[y - d, y + d]`.
fn recall_side_integral(y0: f64, y1: f64, c: f64, zone: Span, left: bool) -> f64 {
    if y1 <= y0 {
        return 0.0;
    }
    let e = zone.1 - zone.0;
    // Window measure as a function of y, linear between breakpoints.
    let measure = |y: f64| {
        if left {
            c - (2.0 * y - c).max(zone.0)
        } else {
            (2.0 * y - c).min(zone.1) - c
        }
    };
    let knot = if left {
        (c + zone.0) / 2.0
    } else {
        (c + zone.1) / 2.0
    };
    let mut cuts = vec![y0];
    if knot > y0 && knot < y1 {
        cuts.push(knot);
    }
    cuts.push(y1);
    cuts.windows(2)
        .map(|w| (w[1] - w[0]) * (1.0 - (measure(w[0]) + measure(w[1])) / (2.0 * e)))
        .sum()
}

/// Integral of the recall probability over the truth span, given the
/// prediction pieces inside the zone (sorted, nonempty, disjoint).
fn recall_integral(truth: Span, preds: &[Span], zone: Span) -> f64 {
    let mut total = 0.0;
    for (k, &p) in preds.iter().enumerate() {
        // Truth points whose nearest prediction piece is `p`.
        let lo = if k == 0 {
            f64::NEG_INFINITY
        } else {
            (preds[k - 1].1 + p.0) / 2.0
        };
        let hi = if k + 1 == preds.len() {
            f64::INFINITY
        } else {
            (p.1 + preds[k + 1].0) / 2.0
        };
        let (t0, t1) = (truth.0.max(lo), truth.1.min(hi));
        if t1 <= t0 {
            continue;
        }
        total += recall_side_integral(t0, t1.min(p.0), p.0, zone, true);
        let (c0, c1) = (t0.max(p.0), t1.min(p.1));
        if c1 > c0 {
            total += c1 - c0;
        }
        total += recall_side_integral(t0.max(p.1), t1, p.1, zone, false);
    }
    total
}

/// Scores of every zone.
pub fn zone_scores(pred: &[Span], truth: &[Span], domain: Span) -> Vec<ZoneScore> {
    zones(truth, domain)
        .into_iter()
        .zip(truth)
        .map(|(zone, &t)| {
            let inside = clip(pred, zone);
            if inside.is_empty() {
                return ZoneScore {
                    zone,
                    truth: t,
                    precision: None,
                    recall: 0.0,
                };
            }
            let mass: f64 = inside.iter().map(|(a, b)| b - a).sum();
            let p: f64 = inside.iter().map(|&s| precision_integral(s, t, zone)).sum::<f64>() / mass;
            let r = recall_integral(t, &inside, zone) / (t.1 - t.0);
            ZoneScore {
                zone,
                truth: t,
                precision: Some(p),
                recall: r,
            }
        })
        .collect()
}

/// Affiliation precision, recall and F1 for inclusive index events on `[0, T)`.
///
/// No predictions gives precision 0 with `precision_undefined` set. No truth
/// events gives (1, 1, 1) if there are no predictions either, otherwise
/// (0, 0, 0) with `recall_undefined` set.
pub fn affiliation_prf(pred: &[IndexRange], truth: &[IndexRange], length: usize) -> Result<Prf> {
    affiliation_prf_on(pred, truth, 0..length)
}

/// [`affiliation_prf`] on the window `domain` instead of `[0, T)`.
pub fn affiliation_prf_on(pred: &[IndexRange], truth: &[IndexRange], domain: Range<usize>) -> Result<Prf> {
    if domain.is_empty() {
        return Err(Error::MetricInput("empty scoring domain".into()));
    }
    let pred = check_events(pred, &domain, "predicted")?;
    let truth = check_events(truth, &domain, "truth")?;
    if truth.is_empty() {
        return Ok(if pred.is_empty() {
            Prf::new(1.0, 1.0)
        } else {
            Prf {
                recall_undefined: true,
                ..Prf::new(0.0, 0.0)
            }
        });
    }
    let scores = zone_scores(
        &to_spans(&pred),
        &to_spans(&truth),
        (domain.start as f64, domain.end as f64),
    );
    let ps: Vec<f64> = scores.iter().filter_map(|z| z.precision).collect();
    let recall = scores.iter().map(|z| z.recall).sum::<f64>() / scores.len() as f64;
    if ps.is_empty() {
        return Ok(Prf {
            precision_undefined: true,
            ..Prf::new(0.0, recall)
        });
    }
    let precision = ps.iter().sum::<f64>() / ps.len() as f64;
    Ok(Prf::new(precision, recall))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zones_cut_at_midpoints() {
        let z = zones(&[(10.0, 20.0), (30.0, 31.0), (50.0, 60.0)], (0.0, 100.0));
        assert_eq!(z, vec![(0.0, 25.0), (25.0, 40.5), (40.5, 100.0)]);
    }

    #[test]
    fn exact_match_is_perfect() {
        let ev = [(3, 3), (40, 55), (90, 99)];
        let s = affiliation_prf(&ev, &ev, 100).unwrap();
        assert!((s.precision - 1.0).abs() < 1e-12);
        assert!((s.recall - 1.0).abs() < 1e-12);
        assert!((s.f1 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closer_is_better() {
        let far = affiliation_prf(&[(0, 0)], &[(100, 120)], 400).unwrap();
        let near = affiliation_prf(&[(99, 99)], &[(100, 120)], 400).unwrap();
        assert!(near.precision > far.precision);
        assert!(near.recall > far.recall);
    }

    #[test]
    fn empty_cases() {
        let s = affiliation_prf(&[], &[(5, 6)], 10).unwrap();
        assert!(s.precision_undefined);
        assert_eq!((s.precision, s.recall, s.f1), (0.0, 0.0, 0.0));
        let s = affiliation_prf(&[], &[], 10).unwrap();
        assert_eq!((s.precision, s.recall, s.f1), (1.0, 1.0, 1.0));
        let s = affiliation_prf(&[(1, 1)], &[], 10).unwrap();
        assert!(s.recall_undefined);
        assert_eq!(s.f1, 0.0);
    }

    #[test]
    fn invalid_events_rejected() {
        assert!(affiliation_prf(&[(1, 5), (5, 6)], &[(0, 0)], 10).is_err());
        assert!(affiliation_prf(&[(1, 10)], &[(0, 0)], 10).is_err());
        assert!(affiliation_prf(&[(3, 1)], &[(0, 0)], 10).is_err());
    }

    #[test]
    fn contained_prediction_has_full_precision() {
        // Every predicted point sits inside the truth event.
        let s = affiliation_prf(&[(12, 17)], &[(10, 19)], 100).unwrap();
        assert!((s.precision - 1.0).abs() < 1e-12);
        assert!(s.recall < 1.0 && s.recall > 0.9);
    }
}
