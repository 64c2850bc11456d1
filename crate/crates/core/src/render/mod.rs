//! Time-series images: univariate line charts with index ticks and
//! axis-free multivariate grids. Output is deterministic PNG.

mod chart;
pub mod raster;

pub use chart::{bar_chart, line_chart, ChartSeries};

use serde::{Deserialize, Serialize};

use crate::domain::{RenderMeta, Series};
use crate::error::{Error, Result};
use raster::{nice_step, tick_label, Canvas, Rgb, BLACK, GRAY};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RenderStyle {
    pub univariate_size: [u32; 2],
    pub multivariate_size: [u32; 2],
    pub stroke_width: u32,
    /// Recorded for reference only; no physical-size chunk is written.
    pub dpi: u32,
    /// Stroke colors; variate `m` uses `palette[m % len]`.
    pub palette: Vec<Rgb>,
    pub background: Rgb,
    pub font_scale: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            univariate_size: [1200, 400],
            multivariate_size: [1200, 1200],
            stroke_width: 2,
            dpi: 100,
            palette: vec![[31, 119, 180]],
            background: raster::WHITE,
            font_scale: 2,
        }
    }
}

impl RenderStyle {
    fn color(&self, variate: usize) -> Rgb {
        if self.palette.is_empty() {
            BLACK
        } else {
            self.palette[variate % self.palette.len()]
        }
    }
}

/// Grid shape for `m` subimages: `n x n` when `n(n-1) < m <= n^2`,
/// otherwise `n x (n+1)` when `n^2 < m <= n(n+1)`.
pub fn grid_dims(m: usize) -> (usize, usize) {
    let m = m.max(1);
    let mut n = (m as f64).sqrt() as usize;
    while n * n < m {
        n += 1;
    }
    while n > 1 && (n - 1) * (n - 1) >= m {
        n -= 1;
    }
    if m > n * (n - 1) {
        (n, n)
    } else {
        (n - 1, n)
    }
}

/// Splits retained points into runs of consecutive timestamps; a missing
/// index between two points ends the run.
pub fn runs(timestamps: &[usize], values: &[f64]) -> Vec<Vec<(usize, f64)>> {
    let mut out: Vec<Vec<(usize, f64)>> = Vec::new();
    for (k, (&t, &v)) in timestamps.iter().zip(values).enumerate() {
        if k == 0 || t != timestamps[k - 1] + 1 {
            out.push(Vec::new());
        }
        out.last_mut().expect("pushed above").push((t, v));
    }
    out
}

fn value_range(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    if span > 0.0 {
        (lo - 0.05 * span, hi + 0.05 * span)
    } else {
        (lo - 1.0, hi + 1.0)
    }
}

/// Pixel-space layout of a univariate chart.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariateLayout {
    /// One polyline per run of consecutive timestamps.
    pub polylines: Vec<Vec<(f64, f64)>>,
    /// (tick value, pixel x)
    pub x_ticks: Vec<(usize, f64)>,
    /// (label, pixel y)
    pub y_ticks: Vec<(String, f64)>,
    /// left, top, right, bottom of the plot area.
    pub frame: [f64; 4],
}

impl UnivariateLayout {
    pub fn vertex_count(&self) -> usize {
        self.polylines.iter().map(Vec::len).sum()
    }
}

/// Computes the univariate layout: x spans `[0, T]` with integer ticks,
/// y spans the data with a 5% margin.
pub fn univariate_layout(series: &Series, style: &RenderStyle) -> Result<UnivariateLayout> {
    if series.variates() != 1 {
        return Err(Error::Render("univariate rendering needs M = 1".into()));
    }
    let [w, h] = style.univariate_size;
    let fs = style.font_scale.max(1) as f64;
    let (left, top) = (14.0 + 8.0 * fs * 6.0, 10.0 + 4.0 * fs);
    let (right, bottom) = (w as f64 - 10.0 - 8.0 * fs * 2.0, h as f64 - 14.0 - 8.0 * fs * 1.5);
    if right <= left + 10.0 || bottom <= top + 10.0 {
        return Err(Error::Render(format!("canvas {w}x{h} too small")));
    }
    let length = series.length() as f64;
    let xp = |t: f64| left + t / length * (right - left);
    let (lo, hi) = value_range(series.row(0));
    let yp = |v: f64| bottom - (v - lo) / (hi - lo) * (bottom - top);

    let polylines = runs(series.timestamps(), series.row(0))
        .into_iter()
        .map(|run| run.into_iter().map(|(t, v)| (xp(t as f64), yp(v))).collect())
        .collect();

    let xstep = nice_step(length, 8).max(1.0) as usize;
    let x_ticks = (0..=series.length())
        .step_by(xstep)
        .map(|t| (t, xp(t as f64)))
        .collect();

    let ystep = nice_step(hi - lo, 5);
    let mut y_ticks = Vec::new();
    let mut v = (lo / ystep).ceil() * ystep;
    while v <= hi + 1e-12 {
        y_ticks.push((tick_label(v, ystep), yp(v)));
        v += ystep;
    }
    Ok(UnivariateLayout {
        polylines,
        x_ticks,
        y_ticks,
        frame: [left, top, right, bottom],
    })
}

/// Renders a univariate series as a line chart with index ticks on the x-axis.
pub fn render_univariate(series: &Series, style: &RenderStyle) -> Result<(Vec<u8>, RenderMeta)> {
    let layout = univariate_layout(series, style)?;
    let [w, h] = style.univariate_size;
    let fs = style.font_scale.max(1);
    let mut c = Canvas::new(w, h, style.background);
    let [left, top, right, bottom] = layout.frame;
    c.hline(left, right, bottom, BLACK);
    c.vline(left, top, bottom, BLACK);
    for (t, x) in &layout.x_ticks {
        c.vline(*x, bottom, bottom + 6.0, BLACK);
        let label = t.to_string();
        let tw = Canvas::text_width(&label, fs) as f64;
        c.text((x - tw / 2.0).round() as i64, (bottom + 9.0) as i64, &label, fs, BLACK);
    }
    for (label, y) in &layout.y_ticks {
        c.hline(left - 6.0, left, *y, BLACK);
        let tw = Canvas::text_width(label, fs) as f64;
        let th = 8.0 * fs as f64;
        c.text(
            (left - 9.0 - tw).round() as i64,
            (y - th / 2.0).round() as i64,
            label,
            fs,
            GRAY,
        );
    }
    let color = style.color(0);
    for pl in &layout.polylines {
        c.polyline(pl, style.stroke_width, color);
    }
    let meta = RenderMeta {
        grid_rows: 1,
        grid_cols: 1,
        blanks: 0,
        pixel_size: [w, h],
        axes_drawn: true,
    };
    Ok((c.to_png()?, meta))
}

/// Pixel rectangle `[x0, y0, x1, y1]` of subimage `m` in a grid.
pub fn cell_rect(m: usize, cols: usize, rows: usize, size: [u32; 2]) -> [f64; 4] {
    let cw = size[0] as f64 / cols as f64;
    let ch = size[1] as f64 / rows as f64;
    let (r, c) = (m / cols, m % cols);
    [c as f64 * cw, r as f64 * ch, (c + 1) as f64 * cw, (r + 1) as f64 * ch]
}

/// Renders a multivariate series as a row-major grid of axis-free
/// subimages, each with its own y scale. Trailing cells stay blank.
pub fn render_multivariate(series: &Series, style: &RenderStyle) -> Result<(Vec<u8>, RenderMeta)> {
    if series.variates() < 2 {
        return Err(Error::Render("multivariate rendering needs M >= 2".into()));
    }
    if series.retained() == 0 {
        return Err(Error::Render("zero-length rows".into()));
    }
    let m = series.variates();
    let (rows, cols) = grid_dims(m);
    let size = style.multivariate_size;
    let mut c = Canvas::new(size[0], size[1], style.background);
    let span = (series.length().max(2) - 1) as f64;
    for v in 0..m {
        let [x0, y0, x1, y1] = cell_rect(v, cols, rows, size);
        let pad_x = (x1 - x0) * 0.06;
        let pad_y = (y1 - y0) * 0.08;
        let (left, right, top, bottom) = (x0 + pad_x, x1 - pad_x, y0 + pad_y, y1 - pad_y);
        let (lo, hi) = value_range(series.row(v));
        let color = style.color(v);
        for run in runs(series.timestamps(), series.row(v)) {
            let pts: Vec<(f64, f64)> = run
                .into_iter()
                .map(|(t, val)| {
                    (
                        left + t as f64 / span * (right - left),
                        bottom - (val - lo) / (hi - lo) * (bottom - top),
                    )
                })
                .collect();
            c.polyline(&pts, style.stroke_width, color);
        }
    }
    let meta = RenderMeta {
        grid_rows: rows,
        grid_cols: cols,
        blanks: rows * cols - m,
        pixel_size: size,
        axes_drawn: false,
    };
    Ok((c.to_png()?, meta))
}

/// Renders with the layout matching the series kind.
pub fn render_series(series: &Series, style: &RenderStyle) -> Result<(Vec<u8>, RenderMeta)> {
    if series.variates() == 1 {
        render_univariate(series, style)
    } else {
        render_multivariate(series, style)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{BaseGenerator, SeriesKind};
    use crate::inject::drop_irregular;
    use crate::synth::{gen_sine, gen_sine_cosine, GeneratorConfig};
    use raster::decode_png;

    fn brute_grid(m: usize) -> (usize, usize) {
        (1..=m + 1)
            .flat_map(|n| [(n, n), (n, n + 1)])
            .filter(|(a, b)| a * b >= m)
            .min_by_key(|(a, b)| a * b)
            .unwrap()
    }

    #[test]
    fn grid_examples() {
        assert_eq!(grid_dims(9), (3, 3));
        assert_eq!(grid_dims(11), (3, 4));
        assert_eq!(grid_dims(1), (1, 1));
        assert_eq!(grid_dims(25), (5, 5));
    }

    #[test]
    fn grid_matches_brute_force() {
        for m in 1..=100 {
            assert_eq!(grid_dims(m), brute_grid(m), "M = {m}");
        }
    }

    fn sine(length: usize) -> Series {
        gen_sine(&GeneratorConfig {
            length,
            ..GeneratorConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn univariate_ticks_reach_length() {
        let layout = univariate_layout(&sine(400), &RenderStyle::default()).unwrap();
        let last = layout.x_ticks.last().unwrap().0;
        assert_eq!(last, 400);
        assert_eq!(layout.x_ticks[0].0, 0);
        let (_, meta) = render_univariate(&sine(400), &RenderStyle::default()).unwrap();
        assert_eq!(meta.pixel_size, [1200, 400]);
        assert!(meta.axes_drawn);
    }

    #[test]
    fn irregular_vertices_equal_retained() {
        let s = drop_irregular(&sine(400), 0.25, 1).unwrap();
        let layout = univariate_layout(&s, &RenderStyle::default()).unwrap();
        assert_eq!(layout.vertex_count(), 300);
        // No segment spans a missing index.
        for pl in &layout.polylines {
            for w in pl.windows(2) {
                let dt = (w[1].0 - w[0].0) / ((layout.frame[2] - layout.frame[0]) / 400.0);
                assert!((dt - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rendering_is_byte_deterministic() {
        let s = sine(400);
        let a = render_univariate(&s, &RenderStyle::default()).unwrap().0;
        let b = render_univariate(&s, &RenderStyle::default()).unwrap().0;
        assert_eq!(a, b);
    }

    #[test]
    fn multivariate_grid_meta() {
        let s = gen_sine_cosine(&GeneratorConfig {
            base_generator: BaseGenerator::SineCosine,
            variates: 11,
            ..GeneratorConfig::default()
        })
        .unwrap();
        let (png, meta) = render_multivariate(&s, &RenderStyle::default()).unwrap();
        assert_eq!((meta.grid_rows, meta.grid_cols, meta.blanks), (3, 4, 1));
        assert!(!meta.axes_drawn);
        // The blank trailing cell holds only background.
        let img = decode_png(&png).unwrap();
        let [x0, y0, x1, y1] = cell_rect(11, 4, 3, [1200, 1200]);
        for y in (y0 as u32 + 1..y1 as u32 - 1).step_by(7) {
            for x in (x0 as u32 + 1..x1 as u32 - 1).step_by(7) {
                assert_eq!(img.pixel(x, y), raster::WHITE);
            }
        }
    }

    #[test]
    fn variate_seven_sits_at_row_two_col_one() {
        assert_eq!(cell_rect(7, 3, 3, [900, 900]), [300.0, 600.0, 600.0, 900.0]);
    }

    #[test]
    fn rejects_empty_and_wrong_shapes() {
        let s = Series::new(
            SeriesKind::Multivariate,
            vec![vec![1.0], vec![2.0]],
            vec![0],
            1,
            BaseGenerator::SineCosine,
            0,
        )
        .unwrap();
        assert!(render_univariate(&s, &RenderStyle::default()).is_err());
        assert!(render_multivariate(&sine(100), &RenderStyle::default()).is_err());
    }
}
