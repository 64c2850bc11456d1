//! Variate-wise anomalies on a 9-variate sine/cosine base: which rows were
//! replaced and by how much they differ from the originals.

use tsi_bench::domain::{AnomalyType, BaseGenerator};
use tsi_bench::inject::{inject, locality_violation, InjectionConfig};
use tsi_bench::stats::znorm_distance;
use tsi_bench::synth::{generate_explicit, GeneratorConfig};

pub fn run() -> tsi_bench::Result<()> {
    let base = generate_explicit(&GeneratorConfig {
        base_generator: BaseGenerator::SineCosine,
        variates: 9,
        seed: 1,
        ..GeneratorConfig::default()
    })?;
    let types = [AnomalyType::Triangle, AnomalyType::Square, AnomalyType::Sawtooth, AnomalyType::Random];
    for (seed, ty) in types.into_iter().enumerate() {
        let cfg = InjectionConfig {
            seed: seed as u64,
            ..InjectionConfig::default()
        };
        let out = inject(&base, ty, &cfg)?;
        assert!(locality_violation(&base, &out.series, &out.label).is_none());
        let tsi_bench::domain::LabelPayload::Variates(rows) = out.label.payload() else {
            unreachable!()
        };
        let d: Vec<String> = rows
            .iter()
            .map(|&m| format!("{m}: {:.2}", znorm_distance(base.row(m), out.series.row(m))))
            .collect();
        println!("{ty:<9} rows {rows:?}  distances [{}]", d.join(", "));
    }
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run()
}
