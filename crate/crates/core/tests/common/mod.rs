#![allow(dead_code)]

pub mod oracle;
pub mod server;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random sorted, disjoint inclusive events on `[0, length)`, with at
/// least `min_gap` free indices between consecutive events.
pub fn random_events(
    rng: &mut ChaCha8Rng,
    length: usize,
    count: usize,
    max_len: usize,
    min_gap: usize,
) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for _ in 0..count * 20 {
        if out.len() == count {
            break;
        }
        let len = rng.random_range(1..=max_len);
        if len > length {
            continue;
        }
        let start = rng.random_range(0..=length - len);
        let ev = (start, start + len - 1);
        let clear = out
            .iter()
            .all(|&(a, b)| ev.1 + min_gap < a || b + min_gap < ev.0);
        if clear {
            out.push(ev);
        }
    }
    out.sort_unstable();
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
