//! Value-semantic 8-bit raster and the primitives shared by every vision stage.
//!
//! A [`Raster`] owns row-major 8-bit samples with one (grayscale) or three
//! (RGB) channels. All operations in this crate are pure: the same input
//! raster and parameters produce a bit-identical output raster.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Quantize a real value to 8 bits: round half away from zero, clamp to [0, 255].
///
/// This is the single rounding rule used for every float-to-u8 conversion
/// in the crate.
#[inline]
pub fn quantize_u8(v: f64) -> u8 {
    let r = if v >= 0.0 { (v + 0.5).floor() } else { (v - 0.5).ceil() };
    r.clamp(0.0, 255.0) as u8
}

/// Axis-aligned pixel rectangle, `x`/`y` is the top-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x: u32,
    pub y: u32,
    pub width: u32,
    pub height: u32,
}

impl Rect {
    pub fn new(x: u32, y: u32, width: u32, height: u32) -> Self {
        Rect { x, y, width, height }
    }

    /// Column span covered by this rectangle.
    pub fn col_span(&self) -> ColSpan {
        ColSpan::new(self.x, self.x + self.width)
    }

    pub fn bottom(&self) -> u32 {
        self.y + self.height
    }

    pub fn right(&self) -> u32 {
        self.x + self.width
    }
}

/// Half-open column range `[start, end)` used to restrict row statistics
/// to the gauge-plate region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColSpan {
    pub start: u32,
    pub end: u32,
}

impl ColSpan {
    pub fn new(start: u32, end: u32) -> Self {
        ColSpan { start, end }
    }

    /// The full width of a raster.
    pub fn full(width: u32) -> Self {
        ColSpan { start: 0, end: width }
    }

    pub fn len(&self) -> u32 {
        self.end.saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    /// Error unless the span is non-empty and inside an image of `width` columns.
    pub fn validate(&self, width: u32) -> Result<()> {
        if self.is_empty() || self.end > width {
            return Err(Error::OutOfBounds(format!(
                "column span [{}, {}) invalid for width {}",
                self.start, self.end, width
            )));
        }
        Ok(())
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start as usize..self.end as usize
    }
}

/// 8-bit image grid, row-major, 1 or 3 channels.
#[derive(Clone, PartialEq, Eq)]
pub struct Raster {
    width: u32,
    height: u32,
    channels: u8,
    data: Vec<u8>,
}

impl std::fmt::Debug for Raster {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Raster")
            .field("width", &self.width)
            .field("height", &self.height)
            .field("channels", &self.channels)
            .finish()
    }
}

impl Raster {
    /// Wrap existing samples. `data.len()` must equal `width * height * channels`.
    pub fn new(width: u32, height: u32, channels: u8, data: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidRaster(format!(
                "dimensions must be >= 1, got {width}x{height}"
            )));
        }
        if channels != 1 && channels != 3 {
            return Err(Error::InvalidRaster(format!(
                "channel count must be 1 or 3, got {channels}"
            )));
        }
        let expected = width as usize * height as usize * channels as usize;
        if data.len() != expected {
            return Err(Error::InvalidRaster(format!(
                "data length {} does not match {}x{}x{} = {}",
                data.len(),
                width,
                height,
                channels,
                expected
            )));
        }
        Ok(Raster { width, height, channels, data })
    }

    /// A raster with every sample set to `value`.
    pub fn filled(width: u32, height: u32, channels: u8, value: u8) -> Result<Self> {
        let n = width as usize * height as usize * channels as usize;
        Raster::new(width, height, channels, vec![value; n])
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn channels(&self) -> u8 {
        self.channels
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<u8> {
        self.data
    }

    pub fn is_gray(&self) -> bool {
        self.channels == 1
    }

    /// Error unless this is a single-channel raster.
    pub fn expect_gray(&self) -> Result<()> {
        if self.channels != 1 {
            return Err(Error::ChannelCount { expected: 1, got: self.channels });
        }
        Ok(())
    }

    /// Error unless this is a three-channel raster.
    pub fn expect_color(&self) -> Result<()> {
        if self.channels != 3 {
            return Err(Error::ChannelCount { expected: 3, got: self.channels });
        }
        Ok(())
    }

    #[inline]
    fn index(&self, x: u32, y: u32, c: u8) -> usize {
        debug_assert!(x < self.width && y < self.height && c < self.channels);
        (y as usize * self.width as usize + x as usize) * self.channels as usize + c as usize
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32, c: u8) -> u8 {
        self.data[self.index(x, y, c)]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, c: u8, v: u8) {
        let i = self.index(x, y, c);
        self.data[i] = v;
    }

    /// Sample with edge replication: out-of-range coordinates clamp to the
    /// nearest border pixel. This is the border policy for every filter.
    #[inline]
    pub fn get_clamped(&self, x: i64, y: i64, c: u8) -> u8 {
        let xc = x.clamp(0, self.width as i64 - 1) as u32;
        let yc = y.clamp(0, self.height as i64 - 1) as u32;
        self.get(xc, yc, c)
    }

    /// Convert RGB to grayscale with the luminosity weights
    /// `0.299 R + 0.587 G + 0.114 B`, quantized by [`quantize_u8`].
    pub fn to_grayscale(&self) -> Result<Raster> {
        self.expect_color()?;
        let mut out = Vec::with_capacity(self.width as usize * self.height as usize);
        for px in self.data.chunks_exact(3) {
            let y = 0.299 * px[0] as f64 + 0.587 * px[1] as f64 + 0.114 * px[2] as f64;
            out.push(quantize_u8(y));
        }
        Raster::new(self.width, self.height, 1, out)
    }

    /// Copy out a sub-rectangle. The rectangle must lie inside the raster.
    pub fn crop(&self, rect: Rect) -> Result<Raster> {
        if rect.width == 0
            || rect.height == 0
            || rect.right() > self.width
            || rect.bottom() > self.height
        {
            return Err(Error::OutOfBounds(format!(
                "crop {rect:?} outside {}x{} raster",
                self.width, self.height
            )));
        }
        let c = self.channels as usize;
        let mut data = Vec::with_capacity(rect.width as usize * rect.height as usize * c);
        for y in rect.y..rect.bottom() {
            let row_start = (y as usize * self.width as usize + rect.x as usize) * c;
            data.extend_from_slice(&self.data[row_start..row_start + rect.width as usize * c]);
        }
        Raster::new(rect.width, rect.height, self.channels, data)
    }

    /// Fill a rectangle (clipped to the raster) with a constant color.
    /// `color` must have one entry per channel.
    pub fn fill_rect(&mut self, rect: Rect, color: &[u8]) {
        assert_eq!(color.len(), self.channels as usize, "color/channel mismatch");
        let x1 = rect.right().min(self.width);
        let y1 = rect.bottom().min(self.height);
        for y in rect.y.min(self.height)..y1 {
            for x in rect.x.min(self.width)..x1 {
                for (c, &v) in color.iter().enumerate() {
                    self.set(x, y, c as u8, v);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantize_rounds_half_away() {
        assert_eq!(quantize_u8(76.245), 76);
        assert_eq!(quantize_u8(76.5), 77);
        assert_eq!(quantize_u8(-3.0), 0);
        assert_eq!(quantize_u8(300.0), 255);
        assert_eq!(quantize_u8(0.5), 1);
    }

    #[test]
    fn new_validates_dimensions() {
        assert!(Raster::new(0, 4, 1, vec![]).is_err());
        assert!(Raster::new(2, 2, 2, vec![0; 8]).is_err());
        assert!(Raster::new(2, 2, 1, vec![0; 3]).is_err());
        assert!(Raster::new(2, 2, 1, vec![0; 4]).is_ok());
    }

    #[test]
    fn grayscale_white_and_black_are_fixed_points() {
        let white = Raster::filled(4, 3, 3, 255).unwrap();
        assert!(white.to_grayscale().unwrap().data().iter().all(|&v| v == 255));
        let black = Raster::filled(4, 3, 3, 0).unwrap();
        assert!(black.to_grayscale().unwrap().data().iter().all(|&v| v == 0));
    }

    #[test]
    fn grayscale_pure_red() {
        let mut img = Raster::filled(1, 1, 3, 0).unwrap();
        img.set(0, 0, 0, 255);
        // 0.299 * 255 = 76.245 -> 76
        assert_eq!(img.to_grayscale().unwrap().get(0, 0, 0), 76);
    }

    #[test]
    fn grayscale_rejects_single_channel() {
        let img = Raster::filled(2, 2, 1, 0).unwrap();
        assert!(matches!(
            img.to_grayscale(),
            Err(Error::ChannelCount { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn clamped_sampling_replicates_edges() {
        let mut img = Raster::filled(3, 2, 1, 0).unwrap();
        img.set(0, 0, 0, 9);
        img.set(2, 1, 0, 7);
        assert_eq!(img.get_clamped(-5, -5, 0), 9);
        assert_eq!(img.get_clamped(10, 10, 0), 7);
    }

    #[test]
    fn crop_extracts_subrect() {
        let mut img = Raster::filled(4, 4, 1, 0).unwrap();
        img.set(2, 1, 0, 50);
        let sub = img.crop(Rect::new(1, 1, 2, 2)).unwrap();
        assert_eq!(sub.get(1, 0, 0), 50);
        assert!(img.crop(Rect::new(3, 3, 2, 2)).is_err());
    }
}
