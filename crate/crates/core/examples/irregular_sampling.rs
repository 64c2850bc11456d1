//! Irregular sampling: drop a fraction r of timestamps and carry the label
//! over to the thinned series.

use tsi_bench::domain::AnomalyType;
use tsi_bench::inject::{drop_irregular, inject, refilter_label, retained_count, InjectionConfig};
use tsi_bench::synth::{gen_sine, GeneratorConfig};

pub fn run() -> tsi_bench::Result<()> {
    let base = gen_sine(&GeneratorConfig::default())?;
    let out = inject(&base, AnomalyType::Shapelet, &InjectionConfig { seed: 9, ..InjectionConfig::default() })?;
    println!("regular   T={} label {:?}", base.length(), out.label.payload());
    for r in [0.05, 0.10, 0.15, 0.20, 0.25] {
        let thin = drop_irregular(&out.series, r, 17)?;
        let label = refilter_label(&out.label, &thin)?;
        assert_eq!(thin.retained(), retained_count(thin.length(), r));
        println!(
            "r={r:.2}    kept {}/{} (effective r {:.4}) label {:?}",
            thin.retained(),
            thin.length(),
            thin.irregularity_ratio(),
            label.payload()
        );
    }
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run()
}
