mod common;

use proptest::prelude::*;

use tsi_bench::domain::{sample_id, Granularity, LabelPayload, RenderMeta, Sample, SeriesKind};
use tsi_bench::harness::{synthesize, ArchiveStore};
use tsi_bench::inject::locality_violation;
use tsi_bench::manifest::{from_line, to_line};
use tsi_bench::metrics::{affiliation_prf, affiliation_prf_on};
use tsi_bench::parse::{format_payload, parse_reply, ParseLimits, ParseStatus, EXCERPT_CHARS};
use tsi_bench::plan::{plan_datasets, ExperimentMatrix, Plan};
use tsi_bench::render::grid_dims;

fn full_plan() -> Plan {
    plan_datasets(&ExperimentMatrix::full()).unwrap()
}

fn granularity() -> impl Strategy<Value = Granularity> {
    prop_oneof![Just(Granularity::Point), Just(Granularity::Range), Just(Granularity::Variate)]
}

/// Text that looks like model output often enough to reach deep parser states.
fn replyish() -> impl Strategy<Value = String> {
    let token = prop_oneof![
        Just("[".to_string()),
        Just("]".to_string()),
        Just(", ".to_string()),
        Just("...".to_string()),
        Just("\\dots".to_string()),
        Just("…".to_string()),
        Just("x=".to_string()),
        Just(" and ".to_string()),
        Just("-".to_string()),
        Just(".5".to_string()),
        (0u64..5000).prop_map(|n| n.to_string()),
        Just(u64::MAX.to_string()),
        "[a-z ]{0,6}",
        any::<char>().prop_map(String::from),
    ];
    prop::collection::vec(token, 0..60).prop_map(|v| v.concat())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn parser_is_total(text in prop_oneof![replyish(), ".*"], g in granularity(), domain in 1usize..3000) {
        let p = parse_reply(&text, g, domain, &ParseLimits::default());
        prop_assert_eq!(p.granularity, g);
        prop_assert_eq!(p.payload.granularity(), g);
        prop_assert!(p.raw_excerpt.chars().count() <= EXCERPT_CHARS);
        if p.parse_status.is_rejected() {
            prop_assert!(p.payload.is_empty());
        }
        if p.parse_status == ParseStatus::Empty {
            prop_assert!(p.payload.is_empty());
        }
        match &p.payload {
            LabelPayload::Points(v) | LabelPayload::Variates(v) => {
                prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(v.iter().all(|&x| x < domain));
            }
            LabelPayload::Ranges(r) => {
                prop_assert!(r.iter().all(|&(i, j)| i <= j && j < domain));
                prop_assert!(r.windows(2).all(|w| w[0].1 + 1 < w[1].0));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn format_then_parse_is_identity_for_points(
        length in 100usize..1000,
        raw in prop::collection::btree_set(0usize..1000, 1..40),
    ) {
        let pts: Vec<usize> = raw.into_iter().filter(|&t| t < length).collect();
        prop_assume!(!pts.is_empty());
        let payload = LabelPayload::Points(pts);
        let p = parse_reply(&format_payload(&payload), Granularity::Point, length, &ParseLimits::default());
        prop_assert_eq!(p.parse_status, ParseStatus::Ok);
        prop_assert_eq!(format_payload(&p.payload), format_payload(&payload));
        prop_assert_eq!(p.payload, payload);
    }

    #[test]
    fn format_then_parse_is_identity_for_ranges(
        length in 100usize..1000,
        cuts in prop::collection::btree_set(0usize..1000, 2..40),
    ) {
        // Pair consecutive cut points into ranges, leave a gap of at least one.
        let cuts: Vec<usize> = cuts.into_iter().filter(|&c| c < length).collect();
        let ranges: Vec<(usize, usize)> = cuts
            .chunks_exact(2)
            .map(|c| (c[0], c[1]))
            .filter(|&(i, j)| i < j)
            .collect();
        let ranges: Vec<(usize, usize)> = ranges
            .iter()
            .enumerate()
            .filter(|&(k, r)| k == 0 || ranges[k - 1].1 + 1 < r.0)
            .map(|(_, &r)| r)
            .collect();
        let covered: usize = ranges.iter().map(|(i, j)| j - i + 1).sum();
        prop_assume!(!ranges.is_empty() && ranges.len() <= 20 && covered * 10 <= length * 9);
        let payload = LabelPayload::Ranges(ranges);
        let p = parse_reply(&format_payload(&payload), Granularity::Range, length, &ParseLimits::default());
        prop_assert_eq!(p.parse_status, ParseStatus::Ok);
        prop_assert_eq!(p.payload, payload);
    }

    #[test]
    fn format_then_parse_is_identity_for_variates(
        m in 2usize..40,
        raw in prop::collection::btree_set(0usize..40, 1..10),
    ) {
        let ids: Vec<usize> = raw.into_iter().filter(|&v| v < m).collect();
        prop_assume!(!ids.is_empty());
        let payload = LabelPayload::Variates(ids);
        let p = parse_reply(&format_payload(&payload), Granularity::Variate, m, &ParseLimits::default());
        prop_assert_eq!(p.parse_status, ParseStatus::Ok);
        prop_assert_eq!(p.payload, payload);
    }

    #[test]
    fn affiliation_is_translation_invariant(
        seed in any::<u64>(),
        shift in 1usize..500,
    ) {
        let mut g = common::rng(seed);
        let length = 50 + (seed % 700) as usize;
        let truth = common::random_events(&mut g, length, 1 + (seed % 4) as usize, 30, 1);
        let pred = common::random_events(&mut g, length, (seed % 6) as usize, 25, 0);
        let at = |ev: &[(usize, usize)]| -> Vec<(usize, usize)> {
            ev.iter().map(|&(i, j)| (i + shift, j + shift)).collect()
        };
        let a = affiliation_prf(&pred, &truth, length).unwrap();
        let b = affiliation_prf_on(&at(&pred), &at(&truth), shift..length + shift).unwrap();
        prop_assert!((a.precision - b.precision).abs() < 1e-9, "{:?} vs {:?}", a, b);
        prop_assert!((a.recall - b.recall).abs() < 1e-9, "{:?} vs {:?}", a, b);
        prop_assert_eq!(a.precision_undefined, b.precision_undefined);
    }
}

#[test]
fn labels_are_well_formed_over_1000_seeds() {
    let plan = full_plan();
    let archives = ArchiveStore::default();
    for seed in 0..1000u64 {
        let ds = &plan.datasets[(seed as usize * 7919) % plan.datasets.len()];
        let s = synthesize(ds, seed, seed as usize, None, &archives)
            .unwrap_or_else(|e| panic!("{} seed {seed}: {e}", ds.name));
        let (t, m) = (s.series.length(), s.series.variates());
        s.label.validate(t, m).unwrap_or_else(|e| panic!("{} seed {seed}: {e}", ds.name));
        assert!(!s.label.payload().is_empty(), "{} seed {seed}: empty label", ds.name);
        assert_eq!(s.label.anomaly_type(), ds.anomaly_type);
        assert_eq!(m, ds.variates);
        if !ds.injection.trend_persist {
            assert_eq!(
                locality_violation(&s.base, &s.injected, &s.regular_label),
                None,
                "{} seed {seed}",
                ds.name
            );
        }
        if ds.irregularity_r > 0.0 {
            // Point labels sit on retained timestamps.
            if let LabelPayload::Points(p) = s.label.payload() {
                let ts = s.series.timestamps();
                assert!(p.iter().all(|t| ts.binary_search(t).is_ok()), "{} seed {seed}", ds.name);
            }
        }
    }
}

#[test]
fn manifest_lines_round_trip() {
    let plan = full_plan();
    let archives = ArchiveStore::default();
    for seed in 0..200u64 {
        let ds = &plan.datasets[(seed as usize * 31) % plan.datasets.len()];
        let s = synthesize(ds, seed, seed as usize, None, &archives).unwrap();
        let (rows, cols) = match s.series.kind() {
            SeriesKind::Univariate => (1, 1),
            SeriesKind::Multivariate => grid_dims(ds.variates),
        };
        let sample = Sample {
            id: sample_id(&s.series, &s.label),
            series: s.series,
            label: s.label,
            image_path: format!("{}/{seed:04}.png", ds.name),
            render_meta: RenderMeta {
                grid_rows: rows,
                grid_cols: cols,
                blanks: rows * cols - ds.variates,
                pixel_size: [1200, 400],
                axes_drawn: true,
            },
            provenance: s.provenance,
        };
        let line = to_line(&sample).unwrap();
        let back = from_line(&line).unwrap();
        assert_eq!(back, sample, "{} seed {seed}", ds.name);
        assert_eq!(to_line(&back).unwrap(), line);
    }
}
