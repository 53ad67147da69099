//! Sobel gradients.

use crate::error::{Error, Result};
use crate::raster::Raster;

/// Horizontal kernel. Correlated with the image it responds to vertical
/// structure; its transpose responds to horizontal structure.
const SOBEL_X: [[i32; 3]; 3] = [[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]];

/// Per-pixel signed gradients and their magnitude.
#[derive(Debug, Clone)]
pub struct GradientField {
    width: u32,
    height: u32,
    pub gx: Vec<i32>,
    pub gy: Vec<i32>,
    pub magnitude: Vec<f64>,
}

impl GradientField {
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn idx(&self, x: u32, y: u32) -> usize {
        debug_assert!(x < self.width && y < self.height);
        y as usize * self.width as usize + x as usize
    }

    #[inline]
    pub fn gx_at(&self, x: u32, y: u32) -> i32 {
        self.gx[self.idx(x, y)]
    }

    #[inline]
    pub fn gy_at(&self, x: u32, y: u32) -> i32 {
        self.gy[self.idx(x, y)]
    }

    #[inline]
    pub fn magnitude_at(&self, x: u32, y: u32) -> f64 {
        self.magnitude[self.idx(x, y)]
    }
}

/// 3x3 Sobel cross-correlation with edge-replicated borders.
///
/// `gx` uses the horizontal kernel, `gy` its transpose, and
/// `magnitude = sqrt(gx^2 + gy^2)` per pixel.
pub fn sobel_gradients(img: &Raster) -> Result<GradientField> {
    img.expect_gray()?;
    if img.width() < 3 || img.height() < 3 {
        return Err(Error::InvalidRaster(format!(
            "sobel needs at least 3x3 pixels, got {}x{}",
            img.width(),
            img.height()
        )));
    }
    let (w, h) = (img.width(), img.height());
    let n = w as usize * h as usize;
    let mut gx = vec![0i32; n];
    let mut gy = vec![0i32; n];
    let mut magnitude = vec![0f64; n];
    for y in 0..h as i64 {
        for x in 0..w as i64 {
            let mut sx = 0i32;
            let mut sy = 0i32;
            for dy in -1..=1i64 {
                for dx in -1..=1i64 {
                    let v = img.get_clamped(x + dx, y + dy, 0) as i32;
                    sx += SOBEL_X[(dy + 1) as usize][(dx + 1) as usize] * v;
                    // Transposed kernel: swap the roles of the offsets.
                    sy += SOBEL_X[(dx + 1) as usize][(dy + 1) as usize] * v;
                }
            }
            let i = (y * w as i64 + x) as usize;
            gx[i] = sx;
            gy[i] = sy;
            magnitude[i] = ((sx as f64) * (sx as f64) + (sy as f64) * (sy as f64)).sqrt();
        }
    }
    Ok(GradientField { width: w, height: h, gx, gy, magnitude })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_image_has_zero_gradient() {
        let img = Raster::filled(8, 8, 1, 57).unwrap();
        let g = sobel_gradients(&img).unwrap();
        assert!(g.gx.iter().all(|&v| v == 0));
        assert!(g.gy.iter().all(|&v| v == 0));
        assert!(g.magnitude.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn horizontal_ramp_has_gx_eight() {
        // I(x, y) = x: interior gx = 8 per unit slope, gy = 0.
        let w = 12u32;
        let data: Vec<u8> = (0..10).flat_map(|_| (0..w as u8).collect::<Vec<_>>()).collect();
        let img = Raster::new(w, 10, 1, data).unwrap();
        let g = sobel_gradients(&img).unwrap();
        for y in 1..9 {
            for x in 1..w - 1 {
                assert_eq!(g.gx_at(x, y), 8, "at ({x},{y})");
                assert_eq!(g.gy_at(x, y), 0);
            }
        }
    }

    #[test]
    fn vertical_ramp_has_gy_eight() {
        let data: Vec<u8> = (0..10u8).flat_map(|y| vec![y; 12]).collect();
        let img = Raster::new(12, 10, 1, data).unwrap();
        let g = sobel_gradients(&img).unwrap();
        for y in 1..9 {
            for x in 1..11 {
                assert_eq!(g.gy_at(x, y), 8);
                assert_eq!(g.gx_at(x, y), 0);
            }
        }
    }

    #[test]
    fn mirroring_negates_gx() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let (w, h) = (17u32, 9u32);
        let data: Vec<u8> = (0..w * h).map(|_| rng.random()).collect();
        let img = Raster::new(w, h, 1, data).unwrap();
        let mut mirrored = Raster::filled(w, h, 1, 0).unwrap();
        for y in 0..h {
            for x in 0..w {
                mirrored.set(w - 1 - x, y, 0, img.get(x, y, 0));
            }
        }
        let g = sobel_gradients(&img).unwrap();
        let gm = sobel_gradients(&mirrored).unwrap();
        for y in 0..h {
            for x in 0..w {
                assert_eq!(g.gx_at(x, y), -gm.gx_at(w - 1 - x, y));
            }
        }
    }

    #[test]
    fn magnitude_is_hypotenuse() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let data: Vec<u8> = (0..24 * 24).map(|_| rng.random()).collect();
        let img = Raster::new(24, 24, 1, data).unwrap();
        let g = sobel_gradients(&img).unwrap();
        for i in 0..g.magnitude.len() {
            let expect = ((g.gx[i] as f64).powi(2) + (g.gy[i] as f64).powi(2)).sqrt();
            let denom = expect.max(1.0);
            assert!((g.magnitude[i] - expect).abs() / denom < 1e-6);
        }
    }

    #[test]
    fn rejects_tiny_images() {
        let img = Raster::filled(2, 5, 1, 0).unwrap();
        assert!(sobel_gradients(&img).is_err());
    }
}
