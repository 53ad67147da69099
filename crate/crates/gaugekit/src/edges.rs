//! Canny edge detection: Gaussian smoothing, Sobel gradients, non-maximum
//! suppression along the quantized gradient direction, and double-threshold
//! hysteresis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filter::gaussian_blur;
use crate::gradients::sobel_gradients;
use crate::raster::Raster;

/// Canny configuration. The gradient magnitude of a full 0-255 step edge is
/// roughly 1000 after smoothing, so the default thresholds keep strong
/// structure and drop texture.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CannyParams {
    /// Pre-smoothing Gaussian sigma.
    pub sigma: f64,
    pub low: f64,
    pub high: f64,
}

impl Default for CannyParams {
    fn default() -> Self {
        CannyParams { sigma: 1.4, low: 50.0, high: 150.0 }
    }
}

/// Canny edges with the default smoothing sigma. Output is a binary raster,
/// 255 on edge pixels.
pub fn canny_edges(img: &Raster, low: f64, high: f64) -> Result<Raster> {
    canny_edges_with(img, &CannyParams { low, high, ..CannyParams::default() })
}

pub fn canny_edges_with(img: &Raster, params: &CannyParams) -> Result<Raster> {
    img.expect_gray()?;
    if !(params.low >= 0.0 && params.low < params.high) {
        return Err(Error::InvalidParam(format!(
            "canny thresholds need 0 <= low < high, got low={} high={}",
            params.low, params.high
        )));
    }
    let blurred = gaussian_blur(img, params.sigma)?;
    let g = sobel_gradients(&blurred)?;
    let (w, h) = (img.width() as i64, img.height() as i64);

    // Non-maximum suppression. Direction is quantized to 0/45/90/135 degrees;
    // on a plateau of equal magnitudes only the last pixel along the positive
    // direction survives, which thins symmetric step responses to one pixel.
    let mut thin = vec![0f64; (w * h) as usize];
    let clamp_mag = |x: i64, y: i64| -> f64 {
        let xc = x.clamp(0, w - 1) as u32;
        let yc = y.clamp(0, h - 1) as u32;
        g.magnitude_at(xc, yc)
    };
    for y in 0..h {
        for x in 0..w {
            let i = (y * w + x) as usize;
            let m = g.magnitude[i];
            if m == 0.0 {
                continue;
            }
            let angle = (g.gy[i] as f64).atan2(g.gx[i] as f64).to_degrees();
            let angle = if angle < 0.0 { angle + 180.0 } else { angle };
            // (prev, next) neighbors along the gradient direction.
            let (prev, next) = if !(22.5..157.5).contains(&angle) {
                (clamp_mag(x - 1, y), clamp_mag(x + 1, y))
            } else if angle < 67.5 {
                (clamp_mag(x - 1, y - 1), clamp_mag(x + 1, y + 1))
            } else if angle < 112.5 {
                (clamp_mag(x, y - 1), clamp_mag(x, y + 1))
            } else {
                (clamp_mag(x + 1, y - 1), clamp_mag(x - 1, y + 1))
            };
            if m >= prev && m > next {
                thin[i] = m;
            }
        }
    }

    // Hysteresis: seed from strong pixels, grow through weak neighbors.
    let mut out = vec![0u8; (w * h) as usize];
    let mut stack = Vec::new();
    for y in 0..h {
        for x in 0..w {
            let i = (y * w + x) as usize;
            if thin[i] >= params.high && out[i] == 0 {
                out[i] = 255;
                stack.push((x, y));
                while let Some((cx, cy)) = stack.pop() {
                    for dy in -1..=1i64 {
                        for dx in -1..=1i64 {
                            let (nx, ny) = (cx + dx, cy + dy);
                            if nx < 0 || ny < 0 || nx >= w || ny >= h {
                                continue;
                            }
                            let j = (ny * w + nx) as usize;
                            if out[j] == 0 && thin[j] >= params.low {
                                out[j] = 255;
                                stack.push((nx, ny));
                            }
                        }
                    }
                }
            }
        }
    }
    Raster::new(img.width(), img.height(), 1, out)
}
