//! Turns free-text model replies into structured predictions.
//!
//! The first bracketed list in the reply is the answer. Ellipses between
//! values expand as arithmetic runs; a trailing ellipsis marks an unbounded
//! enumeration. Replies that enumerate implausibly many indices are flagged
//! as hallucinated and carry no payload.

use serde::{Deserialize, Serialize};

use crate::domain::{Granularity, IndexRange, LabelPayload};

/// Characters of the reply kept in [`Prediction::raw_excerpt`].
pub const EXCERPT_CHARS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParseStatus {
    Ok,
    Empty,
    /// The list was never closed; items read before the cut are kept.
    Truncated,
    Hallucinated,
    Malformed,
}

impl ParseStatus {
    /// Statuses scored as (0, 0, 0) with the hallucinated flag set.
    pub fn is_rejected(self) -> bool {
        matches!(self, ParseStatus::Hallucinated | ParseStatus::Malformed)
    }
}

/// Hallucination thresholds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ParseLimits {
    /// Point lists longer than this fraction of T are rejected.
    pub max_point_fraction: f64,
    /// Minimum length of a step-1 run that counts as an enumeration.
    pub run_min_len: usize,
    /// ... and the fraction of the domain such a run must exceed.
    pub run_min_fraction: f64,
    pub max_range_pairs: usize,
    /// Range unions covering more than this fraction of T are rejected.
    pub max_range_coverage: f64,
    /// Cap on values produced by one ellipsis expansion.
    pub max_expansion: usize,
}

impl Default for ParseLimits {
    fn default() -> Self {
        Self {
            max_point_fraction: 0.5,
            run_min_len: 50,
            run_min_fraction: 0.25,
            max_range_pairs: 20,
            max_range_coverage: 0.9,
            max_expansion: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub granularity: Granularity,
    pub payload: LabelPayload,
    pub parse_status: ParseStatus,
    /// Items dropped because they fell outside the valid domain.
    pub discarded: usize,
    /// Which hallucination rule fired, if any.
    pub rule: Option<String>,
    pub raw_excerpt: String,
}

impl Prediction {
    fn new(g: Granularity, payload: LabelPayload, status: ParseStatus, text: &str) -> Self {
        Self {
            granularity: g,
            payload,
            parse_status: status,
            discarded: 0,
            rule: None,
            raw_excerpt: text.chars().take(EXCERPT_CHARS).collect(),
        }
    }

    fn rejected(g: Granularity, status: ParseStatus, rule: Option<String>, text: &str) -> Self {
        Self {
            rule,
            ..Self::new(g, LabelPayload::empty(g), status, text)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Item {
    Int(i64),
    Ellipsis,
    List(Vec<Item>),
}

/// A list read from the text; `closed` is false if input ended inside it.
#[derive(Debug)]
struct RawList {
    items: Vec<Item>,
    closed: bool,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

const ELLIPSES: [&str; 6] = ["...", "\u{2026}", "\u{22ef}", "\\dots", "\\ldots", "\\cdots"];

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn rest(&self) -> &'a [u8] {
        &self.s[self.pos..]
    }

    /// Skips whitespace, commas, semicolons and the word "and".
    fn skip_separators(&mut self) {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() || b == b',' || b == b';' => self.pos += 1,
                Some(b'a') if self.rest().starts_with(b"and") && !self.ident_char_at(3) => {
                    self.pos += 3
                }
                _ => return,
            }
        }
    }

    fn ident_char_at(&self, off: usize) -> bool {
        self.s
            .get(self.pos + off)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
    }

    fn ellipsis(&mut self) -> bool {
        for e in ELLIPSES {
            if self.rest().starts_with(e.as_bytes()) {
                self.pos += e.len();
                // "...." and the like
                while self.peek() == Some(b'.') {
                    self.pos += 1;
                }
                // "\dots{}" from LaTeX sources
                if self.rest().starts_with(b"{}") {
                    self.pos += 2;
                }
                return true;
            }
        }
        false
    }

    /// Optional `x=` / `ID =` style label before a value.
    fn skip_prefix(&mut self) {
        let start = self.pos;
        let mut p = self.pos;
        while self.s.get(p).is_some_and(|b| b.is_ascii_alphabetic() || *b == b'_') {
            p += 1;
        }
        if p == start {
            return;
        }
        while self.s.get(p).is_some_and(|b| *b == b' ') {
            p += 1;
        }
        if self.s.get(p) == Some(&b'=') {
            self.pos = p + 1;
            while self.peek() == Some(b' ') {
                self.pos += 1;
            }
        }
    }

    fn int(&mut self) -> Option<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return None;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).ok()?;
        // Saturate absurdly long numbers; they are out of domain either way.
        Some(text.parse::<i64>().unwrap_or(if text.starts_with('-') {
            i64::MIN
        } else {
            i64::MAX
        }))
    }

    /// Parses a list whose opening bracket is at `self.pos`. `Err(())` means
    /// the text at this bracket is not a list.
    fn list(&mut self, close: u8, depth: usize) -> Result<RawList, ()> {
        if depth > 8 {
            return Err(());
        }
        self.pos += 1;
        let mut items = Vec::new();
        loop {
            self.skip_separators();
            let Some(b) = self.peek() else {
                return Ok(RawList {
                    items,
                    closed: false,
                });
            };
            if b == close {
                self.pos += 1;
                return Ok(RawList {
                    items,
                    closed: true,
                });
            }
            if self.ellipsis() {
                items.push(Item::Ellipsis);
                continue;
            }
            self.skip_prefix();
            match self.peek() {
                Some(b'[') | Some(b'(') => {
                    let close = if self.peek() == Some(b'[') { b']' } else { b')' };
                    let inner = self.list(close, depth + 1)?;
                    // A nested list cut off by the end of input is dropped.
                    if !inner.closed {
                        return Ok(RawList {
                            items,
                            closed: false,
                        });
                    }
                    items.push(Item::List(inner.items));
                }
                _ => match self.int() {
                    Some(v) => {
                        items.push(Item::Int(v));
                        // "12.0" style floats: accept integral ones only.
                        if self.peek() == Some(b'.') && !self.ellipsis_ahead() {
                            self.pos += 1;
                            while self.peek() == Some(b'0') {
                                self.pos += 1;
                            }
                            if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                                return Err(());
                            }
                        }
                    }
                    None if self.peek().is_none() => {
                        return Ok(RawList {
                            items,
                            closed: false,
                        })
                    }
                    None => return Err(()),
                },
            }
        }
    }

    fn ellipsis_ahead(&self) -> bool {
        self.rest().starts_with(b"...")
    }
}

/// Finds the first list in `text`. Brackets that do not open a valid list
/// are skipped.
fn first_list(text: &str) -> Option<RawList> {
    let bytes = text.as_bytes();
    let mut from = 0;
    while let Some(off) = bytes[from..].iter().position(|&b| b == b'[') {
        let start = from + off;
        let mut lx = Lexer { s: bytes, pos: start };
        if let Ok(list) = lx.list(b']', 0) {
            return Some(list);
        }
        from = start + 1;
    }
    None
}

/// Scalar values of a flat list with ellipses expanded.
struct Expanded {
    values: Vec<i64>,
    /// Raw count, including values produced by ellipses.
    count: usize,
    unbounded: bool,
}

fn expand(items: &[Item], cap: usize) -> Option<Expanded> {
    let mut values: Vec<i64> = Vec::new();
    let mut unbounded = false;
    let mut i = 0;
    while i < items.len() {
        match &items[i] {
            Item::Int(v) => values.push(*v),
            Item::List(_) => return None,
            Item::Ellipsis => match items.get(i + 1..).and_then(|r| {
                r.iter().find(|it| !matches!(it, Item::Ellipsis))
            }) {
                Some(Item::Int(next)) => {
                    if let Some(&last) = values.last() {
                        let diff = values
                            .len()
                            .checked_sub(2)
                            .map(|k| last.saturating_sub(values[k]))
                            .unwrap_or(0);
                        let step: i64 = if diff != 0 && (diff > 0) == (*next > last) {
                            diff
                        } else if *next >= last {
                            1
                        } else {
                            -1
                        };
                        let mut v = last.saturating_add(step);
                        let mut added = 0;
                        while ((step > 0 && v < *next) || (step < 0 && v > *next)) && added < cap {
                            values.push(v);
                            v = v.saturating_add(step);
                            added += 1;
                        }
                        if added == cap {
                            unbounded = true;
                        }
                    }
                }
                Some(Item::List(_)) => return None,
                _ => unbounded = true,
            },
        }
        i += 1;
    }
    Some(Expanded {
        count: values.len(),
        values,
        unbounded,
    })
}

/// Length of the longest step-1 run in sorted, deduplicated values.
fn longest_unit_run(sorted: &[usize]) -> usize {
    let mut best = usize::from(!sorted.is_empty());
    let mut cur = best;
    for w in sorted.windows(2) {
        cur = if w[1] == w[0] + 1 { cur + 1 } else { 1 };
        best = best.max(cur);
    }
    best
}

fn run_rule(sorted: &[usize], domain: usize, limits: &ParseLimits) -> bool {
    let run = longest_unit_run(sorted);
    run >= limits.run_min_len && run as f64 > limits.run_min_fraction * domain as f64
}

/// Shared path for point and variate lists over `[0, domain)`.
fn parse_ids(
    raw_text: &str,
    domain: usize,
    g: Granularity,
    max_count: f64,
    limits: &ParseLimits,
) -> Prediction {
    let Some(list) = first_list(raw_text) else {
        return Prediction::rejected(g, ParseStatus::Malformed, None, raw_text);
    };
    let Some(exp) = expand(&list.items, limits.max_expansion) else {
        return Prediction::rejected(g, ParseStatus::Malformed, None, raw_text);
    };
    let reject = |rule: &str| {
        Prediction::rejected(g, ParseStatus::Hallucinated, Some(rule.to_string()), raw_text)
    };
    if exp.unbounded {
        return reject("unbounded enumeration");
    }
    if exp.count as f64 > max_count {
        return reject("count");
    }
    if list.closed && exp.count == 0 {
        let p = Prediction::new(g, LabelPayload::empty(g), ParseStatus::Empty, raw_text);
        return p;
    }
    let mut kept: Vec<usize> = exp
        .values
        .iter()
        .filter(|&&v| v >= 0 && (v as u64) < domain as u64)
        .map(|&v| v as usize)
        .collect();
    let discarded = exp.count - kept.len();
    kept.sort_unstable();
    kept.dedup();
    if run_rule(&kept, domain, limits) {
        return reject("arithmetic run");
    }
    let status = if list.closed {
        ParseStatus::Ok
    } else {
        ParseStatus::Truncated
    };
    let payload = match g {
        Granularity::Variate => LabelPayload::Variates(kept),
        _ => LabelPayload::Points(kept),
    };
    Prediction {
        discarded,
        ..Prediction::new(g, payload, status, raw_text)
    }
}

/// Parses a point-anomaly reply for a series of length `length`.
pub fn parse_points(raw_text: &str, length: usize) -> Prediction {
    parse_points_with(raw_text, length, &ParseLimits::default())
}

pub fn parse_points_with(raw_text: &str, length: usize, limits: &ParseLimits) -> Prediction {
    let max = limits.max_point_fraction * length as f64;
    parse_ids(raw_text, length, Granularity::Point, max, limits)
}

/// Parses a variate-anomaly reply for a series with `variates` variates.
pub fn parse_variates(raw_text: &str, variates: usize) -> Prediction {
    parse_variates_with(raw_text, variates, &ParseLimits::default())
}

pub fn parse_variates_with(raw_text: &str, variates: usize, limits: &ParseLimits) -> Prediction {
    parse_ids(raw_text, variates, Granularity::Variate, variates as f64, limits)
}

/// Parses a range-anomaly reply for a series of length `length`.
pub fn parse_ranges(raw_text: &str, length: usize) -> Prediction {
    parse_ranges_with(raw_text, length, &ParseLimits::default())
}

pub fn parse_ranges_with(raw_text: &str, length: usize, limits: &ParseLimits) -> Prediction {
    let g = Granularity::Range;
    let Some(list) = first_list(raw_text) else {
        return Prediction::rejected(g, ParseStatus::Malformed, None, raw_text);
    };
    let reject = |rule: &str| {
        Prediction::rejected(g, ParseStatus::Hallucinated, Some(rule.to_string()), raw_text)
    };
    if list.closed && list.items.is_empty() {
        return Prediction::new(g, LabelPayload::empty(g), ParseStatus::Empty, raw_text);
    }
    // A single flat pair "[a, b]" reads as one range.
    let pairs: Vec<Vec<Item>> = if list.items.iter().all(|it| matches!(it, Item::Int(_)))
        && list.items.len() == 2
        && list.closed
    {
        vec![list.items.clone()]
    } else {
        let mut out = Vec::new();
        for it in &list.items {
            match it {
                Item::List(inner) => out.push(inner.clone()),
                Item::Ellipsis => return reject("unbounded enumeration"),
                Item::Int(_) => {
                    return Prediction::rejected(g, ParseStatus::Malformed, None, raw_text)
                }
            }
        }
        out
    };
    if pairs.len() > limits.max_range_pairs {
        return reject("pair count");
    }
    let mut ranges: Vec<(i64, i64)> = Vec::new();
    for p in &pairs {
        let ends: Vec<i64> = p
            .iter()
            .filter_map(|it| match it {
                Item::Int(v) => Some(*v),
                _ => None,
            })
            .collect();
        match (ends.len(), p.len()) {
            (2, 2) => ranges.push((ends[0].min(ends[1]), ends[0].max(ends[1]))),
            (1, 1) => ranges.push((ends[0], ends[0])),
            _ => return Prediction::rejected(g, ParseStatus::Malformed, None, raw_text),
        }
    }
    let hi = length as i64 - 1;
    let total = ranges.len();
    let mut clipped: Vec<IndexRange> = ranges
        .into_iter()
        .filter(|&(i, j)| j >= 0 && i <= hi)
        .map(|(i, j)| (i.max(0) as usize, j.min(hi) as usize))
        .collect();
    let discarded = total - clipped.len();
    let merged = merge(&mut clipped);
    let covered: usize = merged.iter().map(|&(i, j)| j - i + 1).sum();
    if covered as f64 > limits.max_range_coverage * length as f64 {
        return reject("coverage");
    }
    let status = if list.closed {
        ParseStatus::Ok
    } else {
        ParseStatus::Truncated
    };
    Prediction {
        discarded,
        ..Prediction::new(g, LabelPayload::Ranges(merged), status, raw_text)
    }
}

/// Sorts and merges overlapping or touching ranges.
fn merge(ranges: &mut [IndexRange]) -> Vec<IndexRange> {
    ranges.sort_unstable();
    let mut out: Vec<IndexRange> = Vec::with_capacity(ranges.len());
    for &(i, j) in ranges.iter() {
        match out.last_mut() {
            Some(last) if i <= last.1 + 1 => last.1 = last.1.max(j),
            _ => out.push((i, j)),
        }
    }
    out
}

/// Dispatches on granularity. `domain` is T for points and ranges, M for variates.
pub fn parse_reply(raw_text: &str, g: Granularity, domain: usize, limits: &ParseLimits) -> Prediction {
    match g {
        Granularity::Point => parse_points_with(raw_text, domain, limits),
        Granularity::Range => parse_ranges_with(raw_text, domain, limits),
        Granularity::Variate => parse_variates_with(raw_text, domain, limits),
    }
}

/// Writes a payload in the answer format the prompts ask for.
pub fn format_payload(payload: &LabelPayload) -> String {
    let body = match payload {
        LabelPayload::Points(p) | LabelPayload::Variates(p) => p
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        LabelPayload::Ranges(r) => r
            .iter()
            .map(|(i, j)| format!("[{i}, {j}]"))
            .collect::<Vec<_>>()
            .join(", "),
    };
    format!("[{body}]")
}

pub fn format_prediction(pred: &Prediction) -> String {
    format_payload(&pred.payload)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn points(p: &Prediction) -> Vec<usize> {
        match &p.payload {
            LabelPayload::Points(v) | LabelPayload::Variates(v) => v.clone(),
            LabelPayload::Ranges(_) => panic!("ranges"),
        }
    }

    fn ranges(p: &Prediction) -> Vec<IndexRange> {
        match &p.payload {
            LabelPayload::Ranges(v) => v.clone(),
            _ => panic!("not ranges"),
        }
    }

    #[test]
    fn appendix_point_reply() {
        let p = parse_points("[3, 9, 12, 35]", 400);
        assert_eq!(p.parse_status, ParseStatus::Ok);
        assert_eq!(points(&p), [3, 9, 12, 35]);
    }

    #[test]
    fn empty_list() {
        for g in [Granularity::Point, Granularity::Range, Granularity::Variate] {
            let p = parse_reply("[]", g, 400, &ParseLimits::default());
            assert_eq!(p.parse_status, ParseStatus::Empty);
            assert!(p.payload.is_empty());
        }
    }

    #[test]
    fn full_run_is_hallucinated() {
        let p = parse_points("[0, 1, 2, \u{2026}, 997]", 400);
        assert_eq!(p.parse_status, ParseStatus::Hallucinated);
        assert!(p.payload.is_empty());
    }

    #[test]
    fn range_replies() {
        let p = parse_ranges("[[76, 85], [131, 140]]", 400);
        assert_eq!((p.parse_status, ranges(&p)), (ParseStatus::Ok, vec![(76, 85), (131, 140)]));
        let p = parse_ranges("[[10, 5]]", 400);
        assert_eq!(ranges(&p), [(5, 10)]);
        let p = parse_ranges("The anomalies are everywhere", 400);
        assert_eq!(p.parse_status, ParseStatus::Malformed);
    }

    #[test]
    fn range_clip_merge_and_discard() {
        let p = parse_ranges("[[390, 450], [-5, 3], [2, 8], [500, 600]]", 400);
        assert_eq!(ranges(&p), [(0, 8), (390, 399)]);
        assert_eq!(p.discarded, 1);
    }

    #[test]
    fn range_hallucination_rules() {
        let many: Vec<String> = (0..21).map(|k| format!("[{}, {}]", k * 10, k * 10 + 1)).collect();
        let p = parse_ranges(&format!("[{}]", many.join(", ")), 400);
        assert_eq!(p.parse_status, ParseStatus::Hallucinated);
        let p = parse_ranges("[[0, 380]]", 400);
        assert_eq!(p.parse_status, ParseStatus::Hallucinated);
        let p = parse_ranges("[[0, 350]]", 400);
        assert_eq!(p.parse_status, ParseStatus::Ok);
    }

    #[test]
    fn variate_replies() {
        let p = parse_variates("[1, 7]", 9);
        assert_eq!((p.parse_status, points(&p)), (ParseStatus::Ok, vec![1, 7]));
        let p = parse_variates("[0, 2, 5]", 4);
        assert_eq!((points(&p), p.discarded), (vec![0, 2], 1));
        let p = parse_variates("[0, 1, 2, \\dots, 100, 101, 102, \\dots]", 9);
        assert_eq!(p.parse_status, ParseStatus::Hallucinated);
        assert!(p.payload.is_empty());
    }

    #[test]
    fn prose_fences_and_prefixes() {
        let p = parse_points("Sure! Here you go:\n```json\n[2, 51, 106]\n```\nLater: [1]", 400);
        assert_eq!(points(&p), [2, 51, 106]);
        let p = parse_points("[Note] x=2, 51, and 106 are anomalies: [x=2, x=51, x=106]", 400);
        assert_eq!(points(&p), [2, 51, 106]);
        let p = parse_variates("[ID=0, ID=2, ID=5]", 9);
        assert_eq!(points(&p), [0, 2, 5]);
        let p = parse_points("[12.0, 7, 7, 3]", 400);
        assert_eq!(points(&p), [3, 7, 12]);
    }

    #[test]
    fn unclosed_list_is_truncated() {
        let p = parse_points("[3, 9, 12", 400);
        assert_eq!((p.parse_status, points(&p)), (ParseStatus::Truncated, vec![3, 9, 12]));
        let p = parse_ranges("[[1, 4], [9, 1", 400);
        assert_eq!((p.parse_status, ranges(&p)), (ParseStatus::Truncated, vec![(1, 4)]));
    }

    #[test]
    fn short_runs_are_not_hallucinations() {
        let body: Vec<String> = (100..160).map(|v| v.to_string()).collect();
        // 60 consecutive values on T=400 cover 15%: allowed.
        let p = parse_points(&format!("[{}]", body.join(", ")), 400);
        assert_eq!(p.parse_status, ParseStatus::Ok);
        // The same run on T=200 covers 30%.
        let p = parse_points(&format!("[{}]", body.join(", ")), 200);
        assert_eq!(p.parse_status, ParseStatus::Hallucinated);
    }

    #[test]
    fn excerpt_is_bounded() {
        let text = "x".repeat(2000);
        assert_eq!(parse_points(&text, 10).raw_excerpt.chars().count(), EXCERPT_CHARS);
    }

    #[test]
    fn format_round_trip() {
        let p = parse_ranges("[[5, 9], [20, 20]]", 100);
        assert_eq!(format_prediction(&p), "[[5, 9], [20, 20]]");
        let q = parse_ranges(&format_prediction(&p), 100);
        assert_eq!(q.payload, p.payload);
    }
}
