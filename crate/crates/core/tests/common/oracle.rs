//! Brute-force reference implementations used to check the library.
//!
//! The affiliation oracle evaluates the per-point probabilities straight
//! from their definition (measures of distance sets within the zone) and
//! integrates them with adaptive Simpson quadrature. Zone boundaries are
//! found by bisection on the nearest-event rule. Nothing here calls into
//! the library's affiliation code.

#![allow(dead_code)]

pub type Span = (f64, f64);

fn dist_point_span(x: f64, s: Span) -> f64 {
    if x < s.0 {
        s.0 - x
    } else if x > s.1 {
        x - s.1
    } else {
        0.0
    }
}

fn overlap(a: Span, b: Span) -> f64 {
    (a.1.min(b.1) - a.0.max(b.0)).max(0.0)
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let m = (a + b) / 2.0;
    (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
}

fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = (a + b) / 2.0;
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        return left + right + (left + right - whole) / 15.0;
    }
    adaptive(f, a, m, left, tol / 2.0, depth - 1) + adaptive(f, m, b, right, tol / 2.0, depth - 1)
}

/// Integral of `f` over `[a, b]`, split at `cuts` so no piece straddles a jump.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, cuts: &[f64]) -> f64 {
    let mut pts = vec![a];
    pts.extend(cuts.iter().copied().filter(|&c| c > a && c < b));
    pts.push(b);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    pts.windows(2)
        .map(|w| {
            // Evaluate just inside each piece so the jump sides are respected.
            let eps = (w[1] - w[0]) * 1e-12;
            let (lo, hi) = (w[0] + eps, w[1] - eps);
            let whole = simpson(f, lo, hi);
            adaptive(f, lo, hi, whole, 1e-13, 48) * (w[1] - w[0]) / (hi - lo)
        })
        .sum()
}

/// Zone of each truth span: points at least as close to it as to any other,
/// with the boundaries located by bisection.
pub fn oracle_zones(truth: &[Span], length: f64) -> Vec<Span> {
    let mut bounds = vec![0.0];
    for w in truth.windows(2) {
        let (mut lo, mut hi) = (w[0].1, w[1].0);
        for _ in 0..200 {
            let mid = (lo + hi) / 2.0;
            if dist_point_span(mid, w[0]) < dist_point_span(mid, w[1]) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        bounds.push((lo + hi) / 2.0);
    }
    bounds.push(length);
    bounds.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Probability that a uniform point of `zone` is at least as far from
/// `truth` as `x` is.
pub fn precision_prob(x: f64, truth: Span, zone: Span) -> f64 {
    let d = dist_point_span(x, truth);
    if d == 0.0 {
        return 1.0;
    }
    let closer = overlap((truth.0 - d, truth.1 + d), zone);
    1.0 - closer / (zone.1 - zone.0)
}

/// Probability that a uniform point of `zone` is at least as far from `y`
/// as the nearest prediction is.
pub fn recall_prob(y: f64, preds: &[Span], zone: Span) -> f64 {
    let d = preds
        .iter()
        .map(|&p| dist_point_span(y, p))
        .fold(f64::INFINITY, f64::min);
    1.0 - overlap((y - d, y + d), zone) / (zone.1 - zone.0)
}

/// (precision, recall, precision_defined) by numerical integration.
pub fn oracle_affiliation(pred: &[Span], truth: &[Span], length: f64) -> (f64, f64, bool) {
    let zones = oracle_zones(truth, length);
    let mut ps = Vec::new();
    let mut rs = Vec::new();
    for (&zone, &t) in zones.iter().zip(truth) {
        let inside: Vec<Span> = pred
            .iter()
            .map(|&(a, b)| (a.max(zone.0), b.min(zone.1)))
            .filter(|(a, b)| b > a)
            .collect();
        if inside.is_empty() {
            rs.push(0.0);
            continue;
        }
        let mut num = 0.0;
        let mut mass = 0.0;
        for &(a, b) in &inside {
            num += integrate(&|x| precision_prob(x, t, zone), a, b, &[t.0, t.1]);
            mass += b - a;
        }
        ps.push(num / mass);
        let cuts: Vec<f64> = inside.iter().flat_map(|&(a, b)| [a, b]).collect();
        let r = integrate(&|y| recall_prob(y, &inside, zone), t.0, t.1, &cuts) / (t.1 - t.0);
        rs.push(r);
    }
    let recall = rs.iter().sum::<f64>() / rs.len() as f64;
    if ps.is_empty() {
        (0.0, recall, false)
    } else {
        (ps.iter().sum::<f64>() / ps.len() as f64, recall, true)
    }
}

/// Inclusive index events to half-open spans.
pub fn spans(events: &[(usize, usize)]) -> Vec<Span> {
    events.iter().map(|&(i, j)| (i as f64, j as f64 + 1.0)).collect()
}

/// Confusion-matrix precision/recall/F1 over bitmask sets, with the same
/// conventions for empty sets as the library documents.
pub fn brute_vanilla(pred: u32, truth: u32) -> (f64, f64, f64) {
    let tp = (pred & truth).count_ones() as f64;
    let fp = (pred & !truth).count_ones() as f64;
    let fn_ = (!pred & truth).count_ones() as f64;
    if pred == 0 && truth == 0 {
        return (1.0, 1.0, 1.0);
    }
    let p = if tp + fp > 0.0 { tp / (tp + fp) } else { 0.0 };
    let r = if tp + fn_ > 0.0 { tp / (tp + fn_) } else { 0.0 };
    let f = if 2.0 * tp + fp + fn_ > 0.0 {
        2.0 * tp / (2.0 * tp + fp + fn_)
    } else {
        0.0
    };
    (p, r, f)
}

/// Brute-force grid search: the smallest n x n or n x (n+1) grid with room
/// for `m` cells.
pub fn brute_grid(m: usize) -> (usize, usize) {
    let mut best: Option<(usize, usize)> = None;
    for n in 1..=m + 1 {
        for (r, c) in [(n - 1, n), (n, n)] {
            if r == 0 || r * c < m {
                continue;
            }
            if best.is_none_or(|(br, bc)| r * c < br * bc) {
                best = Some((r, c));
            }
        }
        if n * n > m {
            break;
        }
    }
    best.unwrap()
}
