//! Verification laboratory for the exterior-domain biharmonic heat problem
//!
//! ```text
//!   u_t + Δ²u − μ|x|⁻⁴ u = |x|^σ |u|^p + f(x),   t > 0, |x| > 1,  N ≥ 5,
//!   u = Δu = 0 on |x| = 1,                        0 < μ ≤ μ* = (N(N−4)/4)².
//! ```
//!
//! The crate computes the two critical exponents of the problem (the
//! Fujita-type exponent `p_crit = 1 + (σ+4)/μ_N` and the source-decay
//! exponent `η_crit = 4 + (σ+4)/(p−1)`), constructs and certifies the
//! closed-form objects behind them (the barrier `H`, the cutoff test
//! functions, the stationary pairs `(u_ε, f_ε)`), numerically reproduces the
//! scaling of the integral estimates that drive the nonexistence argument,
//! and illustrates the existence/nonexistence dichotomy with a radial
//! finite-difference simulator.
//!
//! Modules map onto the pieces of that program:
//!
//! - [`spectral`]: indicial polynomial `P`, roots `α±`, `β±`, coefficients
//!   `c_μ`, `d_μ*`, critical exponents, and the regime classifier.
//! - [`closed_form`]: exact algebra of finite sums `Σ c·r^λ·(ln r)^k`,
//!   closed under `d/dr`, `Δ` and `L_μ = Δ² − μ r⁻⁴`.
//! - [`cutoff`] and [`barrier`]: smooth cutoff families, the barrier `H`
//!   solving `L_μ H = 0` with Navier conditions, and admissible test
//!   functions.
//! - [`estimates`]: quadrature of the time/space integrals together with
//!   slope fits against their predicted exponents.
//! - [`stationary`]: the family `V_q`, the smallness threshold `ε₀`, and
//!   certified source positivity/decay.
//! - [`pde`]: log-radial grid, banded mixed-formulation operator, IMEX time
//!   stepping, blow-up detection and parameter sweeps.

pub mod barrier;
pub mod closed_form;
pub mod cutoff;
pub mod error;
pub mod estimates;
pub mod fit;
pub mod params;
pub mod pde;
pub mod quad;
pub mod spectral;
pub mod stationary;

pub use error::{Error, Result};
pub use params::Params;
pub use spectral::{RegimeDecision, RegimeLabel, Roots, SpectralData};
