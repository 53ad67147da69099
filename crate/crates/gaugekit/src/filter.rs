//! Smoothing filters: separable Gaussian blur and order-statistic median.
//!
//! Borders are handled by edge replication throughout, so row statistics
//! computed downstream are free of zero-padding artifacts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::raster::{quantize_u8, Raster};

/// Odd-sized median window, rows x cols. Defaults to 3x3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterWindow {
    pub rows: u32,
    pub cols: u32,
}

impl Default for FilterWindow {
    fn default() -> Self {
        FilterWindow { rows: 3, cols: 3 }
    }
}

impl FilterWindow {
    pub fn new(rows: u32, cols: u32) -> Result<Self> {
        if rows == 0 || cols == 0 || rows % 2 == 0 || cols % 2 == 0 {
            return Err(Error::InvalidParam(format!(
                "filter window must have odd dimensions >= 1, got {rows}x{cols}"
            )));
        }
        Ok(FilterWindow { rows, cols })
    }
}

/// Normalized 1-D Gaussian kernel with radius `ceil(3 sigma)`.
/// Weights sum to 1 to within 1e-9.
pub fn gaussian_kernel(sigma: f64) -> Result<Vec<f64>> {
    if !(sigma > 0.0) {
        return Err(Error::InvalidParam(format!("sigma must be > 0, got {sigma}")));
    }
    let radius = (3.0 * sigma).ceil() as i64;
    let mut weights: Vec<f64> = (-radius..=radius)
        .map(|i| (-(i as f64 * i as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let sum: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= sum;
    }
    Ok(weights)
}

/// Separable Gaussian blur of a grayscale raster.
///
/// Convolves rows then columns with [`gaussian_kernel`], keeping f64
/// precision between the passes and quantizing once at the end.
pub fn gaussian_blur(img: &Raster, sigma: f64) -> Result<Raster> {
    img.expect_gray()?;
    let k = gaussian_kernel(sigma)?;
    let radius = (k.len() / 2) as i64;
    let (w, h) = (img.width() as i64, img.height() as i64);

    // Horizontal pass.
    let mut tmp = vec![0f64; (w * h) as usize];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, wt) in k.iter().enumerate() {
                acc += wt * img.get_clamped(x + i as i64 - radius, y, 0) as f64;
            }
            tmp[(y * w + x) as usize] = acc;
        }
    }

    // Vertical pass with replicated rows of the intermediate.
    let mut out = Vec::with_capacity((w * h) as usize);
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, wt) in k.iter().enumerate() {
                let yy = (y + i as i64 - radius).clamp(0, h - 1);
                acc += wt * tmp[(yy * w + x) as usize];
            }
            out.push(quantize_u8(acc));
        }
    }
    Raster::new(img.width(), img.height(), 1, out)
}

/// Order-statistic median filter over an odd window, edge-replicated.
pub fn median_filter(img: &Raster, win: FilterWindow) -> Result<Raster> {
    img.expect_gray()?;
    // Re-validate: a hand-built window could carry even dimensions.
    let win = FilterWindow::new(win.rows, win.cols)?;
    let (w, h) = (img.width() as i64, img.height() as i64);
    let (rr, rc) = (win.rows as i64 / 2, win.cols as i64 / 2);
    let mut samples = Vec::with_capacity((win.rows * win.cols) as usize);
    let mut out = Vec::with_capacity((w * h) as usize);
    for y in 0..h {
        for x in 0..w {
            samples.clear();
            for dy in -rr..=rr {
                for dx in -rc..=rc {
                    samples.push(img.get_clamped(x + dx, y + dy, 0));
                }
            }
            samples.sort_unstable();
            out.push(samples[samples.len() / 2]);
        }
    }
    Raster::new(img.width(), img.height(), 1, out)
}
