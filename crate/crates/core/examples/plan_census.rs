//! Expands the full experiment matrix without generating anything and
//! prints the dataset census, then shows what happens to an excluded
//! combination when exclusions are not skipped.

use tsi_bench::harness::Census;
use tsi_bench::plan::{plan_datasets, ExperimentMatrix};

pub fn run() -> tsi_bench::Result<()> {
    let plan = plan_datasets(&ExperimentMatrix::full())?;
    print!("{}", Census::of(&plan));

    let strict = ExperimentMatrix::from_toml(
        r#"
        scenarios = ["irregular-univariate/sine"]
        anomaly_types = ["contextual"]
        r_values = [0.1]
        "#,
    )?;
    match plan_datasets(&strict) {
        Err(e) => println!("strict matrix rejected: {e}"),
        Ok(_) => unreachable!("contextual anomalies are excluded under irregular sampling"),
    }
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run()
}
