//! Affiliation and vanilla precision/recall/F1 on small hand-made cases.

use tsi_bench::metrics::{affiliation_prf, vanilla_prf};

pub fn run() -> tsi_bench::Result<()> {
    let t = 400;
    let truth = [(100, 120)];
    for (name, pred) in [
        ("exact", vec![(100, 120)]),
        ("inside", vec![(105, 110)]),
        ("near", vec![(99, 99)]),
        ("far", vec![(0, 0)]),
        ("two events", vec![(100, 105), (300, 310)]),
        ("none", vec![]),
    ] {
        let s = affiliation_prf(&pred, &truth, t)?;
        println!(
            "{name:<11} P={:.4} R={:.4} F1={:.4}{}",
            s.precision,
            s.recall,
            s.f1,
            if s.precision_undefined { " (precision undefined)" } else { "" }
        );
    }
    let v = vanilla_prf(&[0, 2, 5], &[0, 5]);
    println!("variates {{0,2,5}} vs {{0,5}}: P={:.4} R={:.4} F1={:.4}", v.precision, v.recall, v.f1);
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run()
}
