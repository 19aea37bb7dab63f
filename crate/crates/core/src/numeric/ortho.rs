//! Orthogonality integrals for `H_n(x|λ)` and partial orthogonality of
//! `H_n(x,y|λ)` in `x` at fixed negative `y`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::eval::{eval_bvdhp, eval_dhp};
use crate::numeric::quad::{integrate_symmetric, probe_growth, Integral, QuadResult, QuadratureConfig};
use crate::param::DegenerateParam;
use crate::Variant;

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `∫ exp(-Lx²) H_n(x|λ) H_m(x|λ) dx` over the real line.
pub fn ortho_dhp(n: u32, m: u32, param: &DegenerateParam, cfg: &QuadratureConfig) -> Result<QuadResult> {
    let l = param.l();
    let radius = cfg.gaussian_radius(l, n + m);
    integrate_symmetric(
        |x| {
            let w = (-l * x * x).exp();
            if w == 0.0 {
                return 0.0;
            }
            w * dhp_or_nan(n, x, param) * dhp_or_nan(m, x, param)
        },
        radius,
        cfg,
    )
}

/// `√π 2ⁿ n! L^(n-1/2)`.
pub fn dhp_norm(n: u32, param: &DegenerateParam) -> f64 {
    PI.sqrt() * 2f64.powi(n as i32) * factorial(n) * param.l().powf(f64::from(n) - 0.5)
}

/// `2^(n+1) n! √π (-y)^(n+1/2) L^(n-1/2)`.
pub fn partial_norm(n: u32, y: f64, param: &DegenerateParam) -> f64 {
    let nf = f64::from(n);
    2f64.powi(n as i32 + 1) * factorial(n) * PI.sqrt() * (-y).powf(nf + 0.5) * param.l().powf(nf - 0.5)
}

/// Growth factor beyond which truncated integrals are declared divergent.
pub const DIVERGENCE_GROWTH: f64 = 1e8;

/// `∫ w(x) H_n(x,y|λ) H_m(x,y|λ) dx` at fixed `y < 0`.
///
/// `Corrected` uses `w = exp(Lx²/(4y))`, which decays for `y < 0`.
/// `Paper` uses the printed `w = (1+λ)^(-x²/(4yλ)) = exp(-Lx²/(4y))`; for
/// `y < 0` it grows and the result is [`Integral::Divergent`].
pub fn partial_ortho(
    n: u32,
    m: u32,
    y: f64,
    param: &DegenerateParam,
    variant: Variant,
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    if y.is_nan() || y >= 0.0 {
        return Err(Error::Domain(format!(
            "partial orthogonality needs y < 0, got {y}"
        )));
    }
    let l = param.l();
    let sign = match variant {
        Variant::Corrected => 1.0,
        Variant::Paper => -1.0,
    };
    let exponent = sign * l / (4.0 * y);
    let integrand = move |x: f64| {
        let w = (exponent * x * x).exp();
        if w == 0.0 {
            return 0.0;
        }
        w * bvdhp_or_nan(n, x, y, param) * bvdhp_or_nan(m, x, y, param)
    };
    match variant {
        Variant::Corrected => {
            let radius = cfg.gaussian_radius(-exponent, n + m);
            integrate_symmetric(integrand, radius, cfg).map(Integral::Converged)
        }
        Variant::Paper => {
            let first = (1.0 / exponent.abs()).sqrt();
            probe_growth(integrand, first, 6, DIVERGENCE_GROWTH, cfg)
        }
    }
}

fn dhp_or_nan(n: u32, x: f64, param: &DegenerateParam) -> f64 {
    eval_dhp(n, x, param).unwrap_or(f64::NAN)
}

fn bvdhp_or_nan(n: u32, x: f64, y: f64, param: &DegenerateParam) -> f64 {
    eval_bvdhp(n, x, y, param).unwrap_or(f64::NAN)
}
