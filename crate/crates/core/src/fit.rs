//! Log–log least-squares slope fitting for scaling-law verification.
//!
//! The integral estimates only pin exponents, never constants, so every
//! scaling check here reduces to a straight-line fit of `ln value` against
//! `ln scale` over a short geometric ladder.

/// Least-squares slope of `ln y` vs `ln x` over `(x, y)` pairs.
///
/// All `x` and `y` must be strictly positive; intended for 3–5 point ladders.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> f64 {
    assert!(points.len() >= 2, "need at least two ladder points");
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        assert!(x > 0.0 && y > 0.0, "log-log fit needs positive data");
        let lx = x.ln();
        let ly = y.ln();
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Geometric ladder `base * factor^k`, `k = 0..count`.
pub fn geometric_ladder(base: f64, factor: f64, count: usize) -> Vec<f64> {
    (0..count).map(|k| base * factor.powi(k as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_pure_power_law() {
        let pts: Vec<(f64, f64)> = geometric_ladder(1e2, 10.0, 4)
            .into_iter()
            .map(|x| (x, 3.7 * x.powf(-1.25)))
            .collect();
        let s = fit_loglog_slope(&pts);
        assert!((s + 1.25).abs() < 1e-12);
    }

    #[test]
    fn ladder_shape() {
        assert_eq!(geometric_ladder(2.0, 10.0, 3), vec![2.0, 20.0, 200.0]);
    }
}
