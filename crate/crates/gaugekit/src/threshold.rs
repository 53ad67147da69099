//! Global binarization with Otsu's method.

use crate::error::Result;
use crate::raster::Raster;

/// Between-class variance `w0 * w1 * (mu0 - mu1)^2` for the split at `t`
/// (class 0 holds intensities `<= t`), computed from exact integer class
/// statistics. Zero when either class is empty.
#[inline]
fn between_class_variance(n0: u64, s0: u64, n: u64, s: u64) -> f64 {
    let n1 = n - n0;
    if n0 == 0 || n1 == 0 {
        return 0.0;
    }
    let s1 = s - s0;
    let w0 = n0 as f64 / n as f64;
    let w1 = n1 as f64 / n as f64;
    let mu0 = s0 as f64 / n0 as f64;
    let mu1 = s1 as f64 / n1 as f64;
    let d = mu0 - mu1;
    w0 * w1 * d * d
}

/// Otsu threshold plus the binarized image.
///
/// Sweeps every threshold `t` in `0..=255`, maximizing the between-class
/// variance of the split `<= t` / `> t`; ties go to the smallest `t`. The
/// output is 255 where the pixel exceeds `t`, 0 otherwise. A constant image
/// yields `t` equal to that constant (binary all zero).
pub fn otsu_threshold(img: &Raster) -> Result<(u8, Raster)> {
    img.expect_gray()?;

    let mut hist = [0u64; 256];
    for &v in img.data() {
        hist[v as usize] += 1;
    }
    let n: u64 = img.data().len() as u64;
    let s: u64 = hist.iter().enumerate().map(|(v, &c)| v as u64 * c).sum();

    let threshold = match constant_value(&hist) {
        Some(v) => v,
        None => {
            let mut best_t = 0u8;
            let mut best_var = -1.0f64;
            let mut n0 = 0u64;
            let mut s0 = 0u64;
            for t in 0..=255usize {
                n0 += hist[t];
                s0 += t as u64 * hist[t];
                let var = between_class_variance(n0, s0, n, s);
                if var > best_var {
                    best_var = var;
                    best_t = t as u8;
                }
            }
            best_t
        }
    };

    let binary: Vec<u8> = img
        .data()
        .iter()
        .map(|&v| if v > threshold { 255 } else { 0 })
        .collect();
    Ok((threshold, Raster::new(img.width(), img.height(), 1, binary)?))
}

fn constant_value(hist: &[u64; 256]) -> Option<u8> {
    let mut seen = None;
    for (v, &c) in hist.iter().enumerate() {
        if c > 0 {
            if seen.is_some() {
                return None;
            }
            seen = Some(v as u8);
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent sweep: partition the raw pixel list at every t and apply
    /// the textbook variance formula directly.
    fn otsu_oracle(pixels: &[u8]) -> u8 {
        let n = pixels.len() as f64;
        let mut best_t = 0u8;
        let mut best = -1.0f64;
        for t in 0..=255u16 {
            let low: Vec<f64> = pixels.iter().filter(|&&p| p as u16 <= t).map(|&p| p as f64).collect();
            let high: Vec<f64> = pixels.iter().filter(|&&p| p as u16 > t).map(|&p| p as f64).collect();
            if low.is_empty() || high.is_empty() {
                continue;
            }
            let w0 = low.len() as f64 / n;
            let w1 = high.len() as f64 / n;
            let mu0 = low.iter().sum::<f64>() / low.len() as f64;
            let mu1 = high.iter().sum::<f64>() / high.len() as f64;
            let d = mu0 - mu1;
            let var = w0 * w1 * d * d;
            if var > best {
                best = var;
                best_t = t as u8;
            }
        }
        best_t
    }

    #[test]
    fn bimodal_tie_takes_smallest_threshold() {
        let mut data = vec![10u8; 50];
        data.extend(vec![200u8; 50]);
        let img = Raster::new(10, 10, 1, data).unwrap();
        let (t, binary) = otsu_threshold(&img).unwrap();
        assert_eq!(t, 10);
        assert_eq!(binary.data().iter().filter(|&&v| v == 255).count(), 50);
    }

    #[test]
    fn constant_image_thresholds_at_value() {
        let img = Raster::filled(6, 6, 1, 77).unwrap();
        let (t, binary) = otsu_threshold(&img).unwrap();
        assert_eq!(t, 77);
        assert!(binary.data().iter().all(|&v| v == 0));
    }

    #[test]
    fn matches_exhaustive_oracle_on_random_images() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for case in 0..100 {
            // Mix of full-range noise and narrow bimodal blobs.
            let data: Vec<u8> = if case % 2 == 0 {
                (0..32 * 32).map(|_| rng.random()).collect()
            } else {
                let a: u8 = rng.random_range(0..120);
                let b: u8 = rng.random_range(120..=255);
                (0..32 * 32)
                    .map(|_| {
                        let base = if rng.random_bool(0.5) { a } else { b };
                        base.saturating_add(rng.random_range(0..8))
                    })
                    .collect()
            };
            let img = Raster::new(32, 32, 1, data.clone()).unwrap();
            let (t, _) = otsu_threshold(&img).unwrap();
            assert_eq!(t, otsu_oracle(&data), "case {case}");
        }
    }
}
