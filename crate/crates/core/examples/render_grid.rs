//! Renders a univariate chart and an 11-variate grid (3x4 with one blank
//! cell). Pass a directory to keep the PNGs.

use std::path::PathBuf;

use tsi_bench::domain::BaseGenerator;
use tsi_bench::render::{grid_dims, render_series, RenderStyle};
use tsi_bench::synth::{generate_explicit, GeneratorConfig};

pub fn run(out: Option<PathBuf>) -> tsi_bench::Result<()> {
    let style = RenderStyle::default();
    for (name, base, m) in [
        ("univariate.png", BaseGenerator::Sine, 1),
        ("grid_m11.png", BaseGenerator::SineCosine, 11),
    ] {
        let series = generate_explicit(&GeneratorConfig {
            base_generator: base,
            variates: m,
            ..GeneratorConfig::default()
        })?;
        let (png, meta) = render_series(&series, &style)?;
        println!(
            "{name}: {} bytes, {}x{} px, grid {}x{} with {} blank (grid_dims({m}) = {:?})",
            png.len(),
            meta.pixel_size[0],
            meta.pixel_size[1],
            meta.grid_rows,
            meta.grid_cols,
            meta.blanks,
            grid_dims(m)
        );
        if let Some(dir) = &out {
            std::fs::write(dir.join(name), png).expect("write png");
        }
    }
    Ok(())
}

fn main() -> tsi_bench::Result<()> {
    run(std::env::args_os().nth(1).map(PathBuf::from))
}
