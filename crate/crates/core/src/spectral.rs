//! Spectral quantities of the operator `L_μ = Δ² − μ|x|⁻⁴` on the exterior
//! domain, and the theorem-level regime classification.
//!
//! Power solutions `r^λ` of `L_μ u = 0` are governed by the indicial quartic
//!
//! ```text
//!   P(λ) = λ(λ−2)(λ+N−2)(λ+N−4) − μ = M(λ)·M(λ−2) − μ,   M(λ) = λ(λ+N−2).
//! ```
//!
//! For `0 < μ < μ*` the four real roots order as `β_− < α_− < α_+ < 0 < β_+`;
//! at `μ = μ*` the middle pair collapses into the double root
//! `α = −(N−4)/2`. Everything downstream (barrier, stationary family,
//! critical exponents) is a function of these roots.

use crate::error::{Error, Result};
use crate::params::{nearly_equal, Params, EQ_TOL};
use serde::Serialize;

/// Best constant `μ* = (N(N−4)/4)²` of the Hardy–Rellich inequality.
pub fn mu_star(n: i64) -> Result<f64> {
    if n < 5 {
        return Err(Error::InvalidDimension(n));
    }
    let nf = n as f64;
    let base = nf * (nf - 4.0) / 4.0;
    Ok(base * base)
}

/// `M(λ) = λ(λ + N − 2)`.
pub fn eval_m(lambda: f64, n: u32) -> f64 {
    lambda * (lambda + n as f64 - 2.0)
}

/// `M'(λ) = 2λ + N − 2`.
pub fn eval_m_prime(lambda: f64, n: u32) -> f64 {
    2.0 * lambda + n as f64 - 2.0
}

/// Indicial polynomial `P(λ) = λ(λ−2)(λ+N−2)(λ+N−4) − μ`.
pub fn eval_p(lambda: f64, n: u32, mu: f64) -> f64 {
    let nf = n as f64;
    lambda * (lambda - 2.0) * (lambda + nf - 2.0) * (lambda + nf - 4.0) - mu
}

/// `P'(λ) = M'(λ)M(λ−2) + M(λ)M'(λ−2)`.
pub fn eval_p_prime(lambda: f64, n: u32) -> f64 {
    eval_m_prime(lambda, n) * eval_m(lambda - 2.0, n) + eval_m(lambda, n) * eval_m_prime(lambda - 2.0, n)
}

/// Roots of `P`, split by multiplicity structure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Roots {
    /// `0 < μ < μ*`: four simple roots `β_− < α_− < α_+ < 0 < β_+`.
    Simple { alpha_minus: f64, alpha_plus: f64, beta_minus: f64, beta_plus: f64 },
    /// `μ = μ*`: double root `α = −(N−4)/2` plus the simple pair `β_±`.
    Degenerate { alpha: f64, beta_minus: f64, beta_plus: f64 },
}

/// All scalar spectral data derived from `(N, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralData {
    pub n: u32,
    pub mu: f64,
    /// `a = (N−4)/2`.
    pub a: f64,
    /// `A(μ) = (a+1)² + 1 − sqrt(4(a+1)² + μ)`; zero in the degenerate case.
    pub a_mu: f64,
    /// `B(μ) = (a+1)² + 1 + sqrt(4(a+1)² + μ)`.
    pub b_mu: f64,
    pub mu_star: f64,
    /// `μ_N = −α_−` (simple) `= (N−4)/2` (degenerate).
    pub mu_n: f64,
    pub roots: Roots,
    /// `c_μ = (M(β_−) − M(α_+)) / (2(α_− − α_+))`, subcritical only; `< 0`.
    pub c_mu: Option<f64>,
    /// `d_{μ*} = (M(β_−) − M(α)) / 2`, critical only; `> 0`.
    pub d_mu_star: Option<f64>,
}

impl SpectralData {
    pub fn is_degenerate(&self) -> bool {
        matches!(self.roots, Roots::Degenerate { .. })
    }

    /// Largest (most negative-decaying) root, `β_−`.
    pub fn beta_minus(&self) -> f64 {
        match self.roots {
            Roots::Simple { beta_minus, .. } | Roots::Degenerate { beta_minus, .. } => beta_minus,
        }
    }

    pub fn beta_plus(&self) -> f64 {
        match self.roots {
            Roots::Simple { beta_plus, .. } | Roots::Degenerate { beta_plus, .. } => beta_plus,
        }
    }

    /// Slowest-decaying kernel exponent: `α_+` (simple) or `α` (degenerate).
    pub fn alpha_top(&self) -> f64 {
        match self.roots {
            Roots::Simple { alpha_plus, .. } => alpha_plus,
            Roots::Degenerate { alpha, .. } => alpha,
        }
    }

    /// Fujita-type critical exponent `p_crit = 1 + (σ+4)/μ_N`.
    pub fn p_crit(&self, sigma: f64) -> f64 {
        1.0 + (sigma + 4.0) / self.mu_n
    }
}

/// One guarded Newton step on `P`; a no-op where `P'` is too flat to trust.
fn polish_root(x: f64, n: u32, mu: f64) -> f64 {
    let dp = eval_p_prime(x, n);
    if dp.abs() < 1e-8 * (1.0 + mu) {
        return x;
    }
    let step = eval_p(x, n, mu) / dp;
    if step.is_finite() {
        x - step
    } else {
        x
    }
}

/// Compute the full spectral data for `(N, μ)`, `0 < μ ≤ μ*`.
///
/// Roots come from the closed forms `−a ± sqrt(A)`, `−a ± sqrt(B)` and are
/// then polished by one Newton step on `P`, which guards against the
/// cancellation in `A(μ)` as `μ → μ*`. The degenerate branch is taken when
/// `|μ − μ*| ≤ 1e−12 · μ*`.
pub fn compute_spectral(n: u32, mu: f64) -> Result<SpectralData> {
    let ms = mu_star(n as i64)?;
    if !mu.is_finite() || mu <= 0.0 || mu > ms * (1.0 + EQ_TOL) {
        return Err(Error::MuOutOfRange { mu, mu_star: ms });
    }
    let a = (n as f64 - 4.0) / 2.0;
    let ap1sq = (a + 1.0) * (a + 1.0);
    let degenerate = (mu - ms).abs() <= EQ_TOL * ms;
    let s = (4.0 * ap1sq + mu).sqrt();
    let b_mu = ap1sq + 1.0 + s;
    let beta_minus = polish_root(-a - b_mu.sqrt(), n, mu);
    let beta_plus = polish_root(-a + b_mu.sqrt(), n, mu);
    if degenerate {
        let alpha = -a;
        let d = (eval_m(beta_minus, n) - eval_m(alpha, n)) / 2.0;
        return Ok(SpectralData {
            n,
            mu,
            a,
            a_mu: 0.0,
            b_mu,
            mu_star: ms,
            mu_n: a,
            roots: Roots::Degenerate { alpha, beta_minus, beta_plus },
            c_mu: None,
            d_mu_star: Some(d),
        });
    }
    let a_mu = ap1sq + 1.0 - s;
    if a_mu < 0.0 {
        // only reachable through rounding right at mu*, handled above
        return Err(Error::MuOutOfRange { mu, mu_star: ms });
    }
    let alpha_minus = polish_root(-a - a_mu.sqrt(), n, mu);
    let alpha_plus = polish_root(-a + a_mu.sqrt(), n, mu);
    let c_mu =
        (eval_m(beta_minus, n) - eval_m(alpha_plus, n)) / (2.0 * (alpha_minus - alpha_plus));
    Ok(SpectralData {
        n,
        mu,
        a,
        a_mu,
        b_mu,
        mu_star: ms,
        mu_n: -alpha_minus,
        roots: Roots::Simple { alpha_minus, alpha_plus, beta_minus, beta_plus },
        c_mu: Some(c_mu),
        d_mu_star: None,
    })
}

/// `c_μ` of the subcritical barrier; errors in the degenerate regime.
pub fn coefficient_c_mu(spec: &SpectralData) -> Result<f64> {
    spec.c_mu.ok_or(Error::WrongRegime { expected: "subcritical (0 < mu < mu*)" })
}

/// `d_{μ*}` of the critical barrier; errors in the simple-root regime.
pub fn coefficient_d_mu_star(spec: &SpectralData) -> Result<f64> {
    spec.d_mu_star.ok_or(Error::WrongRegime { expected: "critical (mu = mu*)" })
}

/// Fujita-type critical exponent `p_crit(μ, σ) = 1 + (σ+4)/μ_N`.
pub fn critical_exponent_p(n: u32, mu: f64, sigma: f64) -> Result<f64> {
    if !sigma.is_finite() || sigma <= -4.0 {
        return Err(Error::InvalidParams(format!("sigma = {sigma} must be > -4")));
    }
    Ok(compute_spectral(n, mu)?.p_crit(sigma))
}

/// Second critical exponent `η_crit = 4 + (σ+4)/(p−1)` (Lee–Ni sense).
pub fn critical_eta(p: f64, sigma: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidParams(format!("p = {p} must be > 1")));
    }
    Ok(4.0 + (sigma + 4.0) / (p - 1.0))
}

/// `μ → 0⁺` limits of the spectral data (diagnostic only; `μ = 0` itself is
/// outside the covered range, but the limits support comparison with the
/// potential-free reference results).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MuZeroLimits {
    pub alpha_plus: f64,
    pub alpha_minus: f64,
    pub mu_n: f64,
    pub p_crit_sigma0: f64,
}

pub fn mu_zero_limits(n: i64) -> Result<MuZeroLimits> {
    if n < 5 {
        return Err(Error::InvalidDimension(n));
    }
    let nf = n as f64;
    Ok(MuZeroLimits {
        alpha_plus: 0.0,
        alpha_minus: -(nf - 4.0),
        mu_n: nf - 4.0,
        p_crit_sigma0: 1.0 + 4.0 / (nf - 4.0),
    })
}

/// Theorem-level classification of a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegimeLabel {
    #[serde(rename = "InvalidParams")]
    InvalidParams,
    /// `1 < p < p_crit`: no weak solution for any positive source.
    #[serde(rename = "Nonexistence_Subcritical")]
    NonexistenceSubcritical,
    /// `p = p_crit`, `0 < μ < μ*`: still nonexistence.
    #[serde(rename = "Nonexistence_Critical")]
    NonexistenceCritical,
    /// `p = p_crit`, `μ = μ*`: open, no claim either way.
    #[serde(rename = "Open_MuStarCritical")]
    OpenMuStarCritical,
    /// `p > p_crit`: stationary solutions exist for some positive source.
    #[serde(rename = "Existence_SomeSource")]
    ExistenceSomeSource,
    /// `p > p_crit`, `η < η_crit`: nonexistence for sources bounded below by `|x|^{−η}`.
    #[serde(rename = "SecondNonexistence")]
    SecondNonexistence,
    /// `p > p_crit`, `η_crit ≤ η < μ_N + 4`: existence with decay-class source.
    #[serde(rename = "SecondExistence")]
    SecondExistence,
    /// `p > p_crit`, `η ≥ μ_N + 4`: outside the covered decay range.
    #[serde(rename = "EtaOutsideScope")]
    EtaOutsideScope,
}

impl std::fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegimeLabel::InvalidParams => "InvalidParams",
            RegimeLabel::NonexistenceSubcritical => "Nonexistence_Subcritical",
            RegimeLabel::NonexistenceCritical => "Nonexistence_Critical",
            RegimeLabel::OpenMuStarCritical => "Open_MuStarCritical",
            RegimeLabel::ExistenceSomeSource => "Existence_SomeSource",
            RegimeLabel::SecondNonexistence => "SecondNonexistence",
            RegimeLabel::SecondExistence => "SecondExistence",
            RegimeLabel::EtaOutsideScope => "EtaOutsideScope",
        };
        f.write_str(s)
    }
}

/// Classification outcome with the boundary values that drove the decision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeDecision {
    pub label: RegimeLabel,
    pub p_crit: Option<f64>,
    pub eta_crit: Option<f64>,
    pub mu_n: Option<f64>,
}

/// Total classifier: invalid inputs map to `InvalidParams`, never to an error.
///
/// Boundary comparisons use the crate-wide tolerant equality; the label is a
/// pure function of the inputs.
pub fn classify_regime(n: i64, mu: f64, sigma: f64, p: f64, eta: Option<f64>) -> RegimeDecision {
    let invalid = RegimeDecision { label: RegimeLabel::InvalidParams, p_crit: None, eta_crit: None, mu_n: None };
    if n < 5 || !(mu.is_finite() && sigma.is_finite() && p.is_finite()) {
        return invalid;
    }
    if sigma <= -4.0 || p <= 1.0 {
        return invalid;
    }
    if let Some(e) = eta {
        if !e.is_finite() {
            return invalid;
        }
    }
    let spec = match compute_spectral(n as u32, mu) {
        Ok(s) => s,
        Err(_) => return invalid,
    };
    let p_crit = spec.p_crit(sigma);
    let eta_crit = 4.0 + (sigma + 4.0) / (p - 1.0);
    let decision = |label| RegimeDecision {
        label,
        p_crit: Some(p_crit),
        eta_crit: Some(eta_crit),
        mu_n: Some(spec.mu_n),
    };
    if nearly_equal(p, p_crit) {
        return if spec.is_degenerate() {
            decision(RegimeLabel::OpenMuStarCritical)
        } else {
            decision(RegimeLabel::NonexistenceCritical)
        };
    }
    if p < p_crit {
        return decision(RegimeLabel::NonexistenceSubcritical);
    }
    // p > p_crit
    match eta {
        None => decision(RegimeLabel::ExistenceSomeSource),
        Some(e) => {
            let eta_cap = spec.mu_n + 4.0;
            if e >= eta_cap || nearly_equal(e, eta_cap) {
                decision(RegimeLabel::EtaOutsideScope)
            } else if e < eta_crit && !nearly_equal(e, eta_crit) {
                decision(RegimeLabel::SecondNonexistence)
            } else {
                // eta_crit <= eta < mu_N + 4; the critical eta sits on the existence side
                decision(RegimeLabel::SecondExistence)
            }
        }
    }
}

/// Classify a validated parameter set.
pub fn classify_params(params: &Params) -> RegimeDecision {
    classify_regime(params.n() as i64, params.mu(), params.sigma(), params.p(), params.eta())
}
