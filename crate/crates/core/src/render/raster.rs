//! Minimal RGB canvas with thick polylines, an embedded 8x8 bitmap font and
//! metadata-free PNG encoding.

use font8x8::legacy::BASIC_LEGACY;

use crate::error::{Error, Result};

pub type Rgb = [u8; 3];

pub const WHITE: Rgb = [255, 255, 255];
pub const BLACK: Rgb = [0, 0, 0];
pub const GRAY: Rgb = [160, 160, 160];
pub const LIGHT_GRAY: Rgb = [225, 225, 225];

#[derive(Debug, Clone)]
pub struct Canvas {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl Canvas {
    pub fn new(width: u32, height: u32, background: Rgb) -> Self {
        let mut pixels = Vec::with_capacity(width as usize * height as usize * 3);
        for _ in 0..(width as usize * height as usize) {
            pixels.extend_from_slice(&background);
        }
        Self {
            width,
            height,
            pixels,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixel(&self, x: u32, y: u32) -> Rgb {
        let i = (y as usize * self.width as usize + x as usize) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn put(&mut self, x: i64, y: i64, color: Rgb) {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return;
        }
        let i = (y as usize * self.width as usize + x as usize) * 3;
        self.pixels[i..i + 3].copy_from_slice(&color);
    }

    pub fn fill_rect(&mut self, x0: i64, y0: i64, x1: i64, y1: i64, color: Rgb) {
        for y in y0.min(y1)..=y0.max(y1) {
            for x in x0.min(x1)..=x0.max(x1) {
                self.put(x, y, color);
            }
        }
    }

    /// Filled disc of diameter `width` centered at (x, y).
    pub fn stamp(&mut self, x: f64, y: f64, width: u32, color: Rgb) {
        let r = width.max(1) as f64 / 2.0;
        let (cx, cy) = (x.round() as i64, y.round() as i64);
        let reach = r.ceil() as i64;
        let r2 = (r * r).max(0.25);
        for dy in -reach..=reach {
            for dx in -reach..=reach {
                if ((dx * dx + dy * dy) as f64) <= r2 {
                    self.put(cx + dx, cy + dy, color);
                }
            }
        }
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), width: u32, color: Rgb) {
        let steps = (b.0 - a.0).abs().max((b.1 - a.1).abs()).ceil().max(1.0) as usize;
        for s in 0..=steps {
            let f = s as f64 / steps as f64;
            self.stamp(a.0 + (b.0 - a.0) * f, a.1 + (b.1 - a.1) * f, width, color);
        }
    }

    /// Draws connected segments; a single vertex becomes a dot.
    pub fn polyline(&mut self, pts: &[(f64, f64)], width: u32, color: Rgb) {
        match pts {
            [] => {}
            [p] => self.stamp(p.0, p.1, width + 1, color),
            _ => pts.windows(2).for_each(|w| self.line(w[0], w[1], width, color)),
        }
    }

    pub fn hline(&mut self, x0: f64, x1: f64, y: f64, color: Rgb) {
        let y = y.round() as i64;
        for x in x0.round() as i64..=x1.round() as i64 {
            self.put(x, y, color);
        }
    }

    pub fn vline(&mut self, x: f64, y0: f64, y1: f64, color: Rgb) {
        let x = x.round() as i64;
        for y in y0.round() as i64..=y1.round() as i64 {
            self.put(x, y, color);
        }
    }

    /// Pixel width of `text` at `scale`.
    pub fn text_width(text: &str, scale: u32) -> u32 {
        text.chars().count() as u32 * 8 * scale
    }

    /// Draws ASCII text with its top-left corner at (x, y).
    pub fn text(&mut self, x: i64, y: i64, text: &str, scale: u32, color: Rgb) {
        let scale = scale.max(1) as i64;
        for (ci, ch) in text.chars().enumerate() {
            let glyph = BASIC_LEGACY[(ch as usize).min(127)];
            let ox = x + ci as i64 * 8 * scale;
            for (row, bits) in glyph.iter().enumerate() {
                for col in 0..8 {
                    if bits >> col & 1 == 1 {
                        let px = ox + col * scale;
                        let py = y + row as i64 * scale;
                        self.fill_rect(px, py, px + scale - 1, py + scale - 1, color);
                    }
                }
            }
        }
    }

    /// RGB8 PNG with no ancillary chunks, so equal pixels give equal bytes.
    pub fn to_png(&self) -> Result<Vec<u8>> {
        let mut out = Vec::new();
        {
            let mut enc = png::Encoder::new(&mut out, self.width, self.height);
            enc.set_color(png::ColorType::Rgb);
            enc.set_depth(png::BitDepth::Eight);
            let mut writer = enc.write_header().map_err(|e| Error::Render(e.to_string()))?;
            writer
                .write_image_data(&self.pixels)
                .map_err(|e| Error::Render(e.to_string()))?;
        }
        Ok(out)
    }
}

/// Decodes an RGB8 PNG produced by [`Canvas::to_png`].
pub fn decode_png(bytes: &[u8]) -> Result<Canvas> {
    let decoder = png::Decoder::new(std::io::Cursor::new(bytes));
    let mut reader = decoder.read_info().map_err(|e| Error::Render(e.to_string()))?;
    let size = reader
        .output_buffer_size()
        .ok_or_else(|| Error::Render("image too large".into()))?;
    let mut buf = vec![0; size];
    let info = reader
        .next_frame(&mut buf)
        .map_err(|e| Error::Render(e.to_string()))?;
    if info.color_type != png::ColorType::Rgb || info.bit_depth != png::BitDepth::Eight {
        return Err(Error::Render("expected an RGB8 image".into()));
    }
    buf.truncate(info.buffer_size());
    Ok(Canvas {
        width: info.width,
        height: info.height,
        pixels: buf,
    })
}

/// A "nice" tick step (1, 2 or 5 times a power of ten) giving roughly
/// `target` intervals over `span`.
pub fn nice_step(span: f64, target: usize) -> f64 {
    if !(span > 0.0) {
        return 1.0;
    }
    let raw = span / target.max(1) as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let m = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    m * mag
}

/// Formats a tick value with just enough decimals for `step`.
pub fn tick_label(v: f64, step: f64) -> String {
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10().floor()) as usize
    };
    let s = format!("{v:.decimals$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn png_round_trip() {
        let mut c = Canvas::new(20, 10, WHITE);
        c.line((1.0, 1.0), (18.0, 8.0), 2, BLACK);
        c.text(0, 0, "4", 1, GRAY);
        let bytes = c.to_png().unwrap();
        let back = decode_png(&bytes).unwrap();
        assert_eq!(back.pixels, c.pixels);
        assert_eq!(bytes, c.to_png().unwrap());
    }

    #[test]
    fn nice_steps() {
        assert_eq!(nice_step(400.0, 8), 50.0);
        assert_eq!(nice_step(1000.0, 8), 200.0);
        assert_eq!(nice_step(100.0, 8), 20.0);
        assert!((nice_step(2.2, 5) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn tick_labels() {
        assert_eq!(tick_label(350.0, 50.0), "350");
        assert_eq!(tick_label(-0.5, 0.5), "-0.5");
        assert_eq!(tick_label(-0.0, 0.5), "0.0");
    }
}
