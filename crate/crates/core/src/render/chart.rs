// Grouped bar and line charts for reports.

use super::raster::{nice_step, tick_label, Canvas, Rgb, BLACK, GRAY, LIGHT_GRAY, WHITE};
use crate::error::{Error, Result};

const PALETTE: [Rgb; 8] = [
    [31, 119, 180],
    [255, 127, 14],
    [44, 160, 44],
    [214, 39, 40],
    [148, 103, 189],
    [140, 86, 75],
    [227, 119, 194],
    [127, 127, 127],
];

/// One named series of y values, aligned with the chart's categories.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartSeries {
    pub name: String,
    pub values: Vec<f64>,
}

struct Frame {
    left: f64,
    top: f64,
    right: f64,
    bottom: f64,
    ymax: f64,
}

impl Frame {
    fn y(&self, v: f64) -> f64 {
        self.bottom - v.clamp(0.0, self.ymax) / self.ymax * (self.bottom - self.top)
    }
}

fn check(categories: &[String], series: &[ChartSeries]) -> Result<()> {
    if categories.is_empty() || series.is_empty() {
        return Err(Error::Render("chart needs categories and series".into()));
    }
    for s in series {
        if s.values.len() != categories.len() {
            return Err(Error::Render(format!(
                "series {} has {} values for {} categories",
                s.name,
                s.values.len(),
                categories.len()
            )));
        }
    }
    Ok(())
}

fn axes(c: &mut Canvas, title: &str, categories: &[String], series: &[ChartSeries]) -> Frame {
    let (w, h) = (c.width() as f64, c.height() as f64);
    let legend_rows = series.len().div_ceil(3) as f64;
    let frame = Frame {
        left: 70.0,
        top: 36.0 + legend_rows * 16.0,
        right: w - 20.0,
        bottom: h - 40.0,
        ymax: series
            .iter()
            .flat_map(|s| s.values.iter().cloned())
            .filter(|v| v.is_finite())
            .fold(0.0, f64::max)
            .max(1e-9)
            * 1.1,
    };
    c.text(frame.left as i64, 8, title, 2, BLACK);
    for (i, s) in series.iter().enumerate() {
        let x = frame.left as i64 + (i % 3) as i64 * 260;
        let y = 30 + (i / 3) as i64 * 16;
        c.fill_rect(x, y, x + 10, y + 8, PALETTE[i % PALETTE.len()]);
        c.text(x + 16, y, &s.name, 1, BLACK);
    }
    let step = nice_step(frame.ymax, 5);
    let mut v = 0.0;
    while v <= frame.ymax + 1e-12 {
        let y = frame.y(v);
        c.hline(frame.left, frame.right, y, LIGHT_GRAY);
        let label = tick_label(v, step);
        let tw = Canvas::text_width(&label, 1) as i64;
        c.text(frame.left as i64 - 8 - tw, y as i64 - 4, &label, 1, GRAY);
        v += step;
    }
    c.hline(frame.left, frame.right, frame.bottom, BLACK);
    c.vline(frame.left, frame.top, frame.bottom, BLACK);
    let slot = (frame.right - frame.left) / categories.len() as f64;
    for (i, cat) in categories.iter().enumerate() {
        let cx = frame.left + slot * (i as f64 + 0.5);
        let tw = Canvas::text_width(cat, 1) as f64;
        c.text((cx - tw / 2.0) as i64, frame.bottom as i64 + 10, cat, 1, BLACK);
    }
    frame
}

/// Grouped bar chart: one group per category, one bar per series.
pub fn bar_chart(
    title: &str,
    categories: &[String],
    series: &[ChartSeries],
    size: [u32; 2],
) -> Result<Vec<u8>> {
    check(categories, series)?;
    let mut c = Canvas::new(size[0], size[1], WHITE);
    let f = axes(&mut c, title, categories, series);
    let slot = (f.right - f.left) / categories.len() as f64;
    let bar = slot * 0.8 / series.len() as f64;
    for (si, s) in series.iter().enumerate() {
        for (ci, &v) in s.values.iter().enumerate() {
            if !v.is_finite() {
                continue;
            }
            let x0 = f.left + slot * ci as f64 + slot * 0.1 + bar * si as f64;
            c.fill_rect(
                x0.round() as i64,
                f.y(v).round() as i64,
                (x0 + bar).round() as i64 - 1,
                f.bottom as i64 - 1,
                PALETTE[si % PALETTE.len()],
            );
        }
    }
    c.to_png()
}

/// Line chart with markers; non-finite values break the line.
pub fn line_chart(
    title: &str,
    categories: &[String],
    series: &[ChartSeries],
    size: [u32; 2],
) -> Result<Vec<u8>> {
    check(categories, series)?;
    let mut c = Canvas::new(size[0], size[1], WHITE);
    let f = axes(&mut c, title, categories, series);
    let slot = (f.right - f.left) / categories.len() as f64;
    for (si, s) in series.iter().enumerate() {
        let color = PALETTE[si % PALETTE.len()];
        let mut run = Vec::new();
        for (ci, &v) in s.values.iter().enumerate() {
            if v.is_finite() {
                let p = (f.left + slot * (ci as f64 + 0.5), f.y(v));
                c.stamp(p.0, p.1, 7, color);
                run.push(p);
            } else {
                c.polyline(&run, 2, color);
                run.clear();
            }
        }
        c.polyline(&run, 2, color);
    }
    c.to_png()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::raster::decode_png;

    fn cats() -> Vec<String> {
        ["M=1", "M=9", "M=25"].map(String::from).to_vec()
    }

    #[test]
    fn charts_decode_at_requested_size() {
        let s = vec![
            ChartSeries {
                name: "a".into(),
                values: vec![10.0, 20.0, f64::NAN],
            },
            ChartSeries {
                name: "b".into(),
                values: vec![5.0, 0.0, 30.0],
            },
        ];
        for png in [
            bar_chart("F1", &cats(), &s, [640, 360]).unwrap(),
            line_chart("F1", &cats(), &s, [640, 360]).unwrap(),
        ] {
            let img = decode_png(&png).unwrap();
            assert_eq!((img.width(), img.height()), (640, 360));
        }
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let s = vec![ChartSeries {
            name: "a".into(),
            values: vec![1.0],
        }];
        assert!(bar_chart("x", &cats(), &s, [300, 200]).is_err());
    }
}
