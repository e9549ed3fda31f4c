//! Problem data `(N, μ, σ, p, η)` with validity invariants.

use crate::error::{Error, Result};
use crate::spectral::mu_star;
use serde::Serialize;

/// Relative tolerance for equality decisions on exponents and on `μ` vs `μ*`.
///
/// The closed forms involve nested square roots, so exact rational
/// comparison is impossible; two quantities are "equal" when their
/// difference is below `EQ_TOL * max(1, |x|, |y|)`.
pub const EQ_TOL: f64 = 1e-12;

/// Tolerant equality used for all regime boundaries.
pub fn nearly_equal(x: f64, y: f64) -> bool {
    (x - y).abs() <= EQ_TOL * 1.0f64.max(x.abs()).max(y.abs())
}

/// Validated problem data for
/// `u_t + Δ²u − μ|x|⁻⁴u = |x|^σ|u|^p + f` on the exterior of the unit ball.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    n: u32,
    mu: f64,
    sigma: f64,
    p: f64,
    eta: Option<f64>,
}

impl Params {
    /// Build validated parameters: `N ≥ 5`, `σ > −4`, `p > 1`, `0 < μ ≤ μ*`.
    pub fn new(n: u32, mu: f64, sigma: f64, p: f64) -> Result<Self> {
        let ms = mu_star(n as i64)?;
        if !mu.is_finite() || mu <= 0.0 || mu > ms * (1.0 + EQ_TOL) {
            return Err(Error::MuOutOfRange { mu, mu_star: ms });
        }
        if !sigma.is_finite() || sigma <= -4.0 {
            return Err(Error::InvalidParams(format!("sigma = {sigma} must be > -4")));
        }
        if !p.is_finite() || p <= 1.0 {
            return Err(Error::InvalidParams(format!("p = {p} must be > 1")));
        }
        Ok(Self { n, mu, sigma, p, eta: None })
    }

    /// Same, with a source-decay exponent `η` attached.
    pub fn with_eta(n: u32, mu: f64, sigma: f64, p: f64, eta: f64) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::InvalidParams("eta must be finite".into()));
        }
        let mut params = Self::new(n, mu, sigma, p)?;
        params.eta = Some(eta);
        Ok(params)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn eta(&self) -> Option<f64> {
        self.eta
    }

    /// Hölder conjugate `p' = p/(p−1)`.
    pub fn p_conj(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    /// Whether `μ` sits at the critical value `μ*` (to `EQ_TOL` relative).
    pub fn is_mu_star(&self) -> bool {
        let ms = mu_star(self.n as i64).expect("validated n");
        (self.mu - ms).abs() <= EQ_TOL * ms
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_identity() {
        for &p in &[1.5, 2.0, 3.0, 8.0, 17.5] {
            let params = Params::new(5, 1.0, 0.0, p).unwrap();
            let pc = params.p_conj();
            assert!(pc > 1.0);
            assert!((1.0 / p + 1.0 / pc - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(Params::new(4, 0.5, 0.0, 2.0), Err(Error::InvalidDimension(4))));
        assert!(matches!(Params::new(5, 0.0, 0.0, 2.0), Err(Error::MuOutOfRange { .. })));
        assert!(matches!(Params::new(5, -1.0, 0.0, 2.0), Err(Error::MuOutOfRange { .. })));
        assert!(matches!(Params::new(5, 2.0, 0.0, 2.0), Err(Error::MuOutOfRange { .. })));
        assert!(matches!(Params::new(5, 1.0, -4.0, 2.0), Err(Error::InvalidParams(_))));
        assert!(matches!(Params::new(5, 1.0, 0.0, 1.0), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn mu_star_detection() {
        assert!(Params::new(5, 1.5625, 0.0, 2.0).unwrap().is_mu_star());
        assert!(!Params::new(5, 1.0, 0.0, 2.0).unwrap().is_mu_star());
        // just over mu* within tolerance is accepted and treated as critical
        assert!(Params::new(5, 1.5625 * (1.0 + 5e-13), 0.0, 2.0).unwrap().is_mu_star());
    }
}
