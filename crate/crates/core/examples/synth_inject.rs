//! Generates a noisy sine, injects one anomaly of every univariate type and
//! checks each result with the injection validators.

use tsi_bench::domain::{AnomalyType, Granularity};
use tsi_bench::inject::{inject, locality_violation, min_dissimilarity, validate_point_anomalies, InjectionConfig};
use tsi_bench::synth::{gen_sine, GeneratorConfig};

pub fn run() -> tsi_bench::Result<()> {
    let base = gen_sine(&GeneratorConfig {
        seed: 3,
        ..GeneratorConfig::default()
    })?;
    let cfg = InjectionConfig {
        seed: 42,
        ..InjectionConfig::default()
    };
    for ty in AnomalyType::ALL.into_iter().filter(|t| t.granularity() != Granularity::Variate) {
        let out = inject(&base, ty, &cfg)?;
        let check = match ty.granularity() {
            Granularity::Point => {
                let context = (ty == AnomalyType::Contextual).then_some(cfg.context_k);
                validate_point_anomalies(base.row(0), out.series.row(0), &out.label, cfg.lambda, context)?;
                "threshold ok".to_string()
            }
            _ => format!(
                "z-norm distance {:.3}",
                min_dissimilarity(&base, &out.series, &out.label).unwrap_or(f64::NAN)
            ),
        };
        assert!(locality_violation(&base, &out.series, &out.label).is_none());
        println!("{ty:<11} {:?}  ({check})", out.label.payload());
    }
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run()
}
