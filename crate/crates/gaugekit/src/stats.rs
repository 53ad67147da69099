//! Shared scalar statistics: mean, median, linearly interpolated percentiles.

/// Arithmetic mean. NaN for an empty slice.
pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Copy and sort ascending. Values must be finite.
pub fn sorted_copy(xs: &[f64]) -> Vec<f64> {
    let mut v = xs.to_vec();
    v.sort_unstable_by(|a, b| a.partial_cmp(b).expect("non-finite value in statistics input"));
    v
}

/// Linearly interpolated percentile on already-sorted data.
///
/// Uses the `h = (n - 1) * p` rank convention: the result interpolates
/// between the two order statistics bracketing `h`.
pub fn percentile_sorted(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty(), "percentile of empty slice");
    assert!((0.0..=1.0).contains(&p), "percentile fraction outside [0,1]");
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
    }
}

/// Median of already-sorted data: middle value, or the mean of the two
/// middle values for an even count.
pub fn median_sorted(sorted: &[f64]) -> f64 {
    assert!(!sorted.is_empty(), "median of empty slice");
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percentile_interpolates() {
        // h = (3-1)*0.8 = 1.6 between 3 and 10
        let xs = [2.0, 3.0, 10.0];
        assert!((percentile_sorted(&xs, 0.8) - 7.2).abs() < 1e-12);
    }

    #[test]
    fn percentile_endpoints() {
        let xs = [1.0, 5.0, 9.0];
        assert_eq!(percentile_sorted(&xs, 0.0), 1.0);
        assert_eq!(percentile_sorted(&xs, 1.0), 9.0);
    }

    #[test]
    fn median_even_odd() {
        assert_eq!(median_sorted(&[1.0, 2.0, 3.0]), 2.0);
        assert_eq!(median_sorted(&[1.0, 2.0, 3.0, 4.0]), 2.5);
    }
}
