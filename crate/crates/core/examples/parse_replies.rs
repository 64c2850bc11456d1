//! Parses typical model replies: clean lists, prose around a list, ranges,
//! truncated output and runaway enumerations.

use tsi_bench::domain::Granularity;
use tsi_bench::parse::{parse_reply, ParseLimits};

const REPLIES: &[(&str, Granularity, usize)] = &[
    ("[1, 7]", Granularity::Variate, 9),
    ("[]", Granularity::Point, 400),
    ("The anomalies are at x=12, 57 and 301: [12, 57, 301].", Granularity::Point, 400),
    ("[[76, 85], [131, 140]]", Granularity::Range, 400),
    ("[[140, 131], [135, 150], [390, 420]]", Granularity::Range, 400),
    ("[3, 9, 12, 35, 46", Granularity::Point, 400),
    ("[0, 2, 5, 8, 11, \\dots, 999]", Granularity::Variate, 16),
    ("[0, 1, 2, \\dots, 100, 101, 102, \\dots]", Granularity::Variate, 9),
    ("I cannot tell from this image.", Granularity::Point, 400),
];

pub fn run() -> tsi_bench::Result<()> {
    let limits = ParseLimits::default();
    for &(text, g, domain) in REPLIES {
        let p = parse_reply(text, g, domain, &limits);
        println!(
            "{:<45} -> {:?} {:?} discarded={}{}",
            text.chars().take(45).collect::<String>(),
            p.parse_status,
            p.payload,
            p.discarded,
            p.rule.map(|r| format!(" rule={r}")).unwrap_or_default()
        );
    }
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run()
}
