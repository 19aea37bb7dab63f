//! Gaussian moments and negative-order Hermite functions by Laplace
//! representation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::quad::{integrate, integrate_symmetric, integrate_to_infinity, QuadResult, QuadratureConfig};
use crate::numeric::special::gamma;
use crate::param::DegenerateParam;
use crate::Variant;

/// Linear term of the negative-order kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodhfKernel {
    /// `exp(-xζ - yLζ²)` as printed.
    Paper,
    /// `exp(-xLζ - yLζ²)`; reduces to `(xL)^(-μ)` at `y = 0`.
    LConsistent,
}

/// `∫_0^∞ ζ^(μ-1) g(ζ) dζ` for a decaying `g`. For `μ < 1` the piece on
/// `[0, 1]` uses `ζ = s^(1/μ)`, which removes the endpoint singularity.
fn power_weighted<G: Fn(f64) -> f64>(mu: f64, g: G, cfg: &QuadratureConfig) -> Result<QuadResult> {
    let head = if mu < 1.0 {
        integrate(|s: f64| g(s.powf(1.0 / mu)) / mu, 0.0, 1.0, cfg)?
    } else {
        integrate(|z: f64| z.powf(mu - 1.0) * g(z), 0.0, 1.0, cfg)?
    };
    let tail = integrate_to_infinity(
        |z: f64| {
            let v = g(z);
            if v == 0.0 {
                0.0
            } else {
                z.powf(mu - 1.0) * v
            }
        },
        1.0,
        cfg,
    )?;
    Ok(QuadResult {
        value: head.value + tail.value,
        abs_error: head.abs_error + tail.abs_error,
        subdivisions: head.subdivisions + tail.subdivisions,
    })
}

/// `∫_0^∞ x^(μ-1) exp(-yLx²) dx` and its closed form.
///
/// `Corrected`: `(1/2)(yL)^(-μ/2) Γ(μ/2)`.
/// `Paper`: `(1/2)(yL)^(-⌊μ/2⌋) Γ(μ/2)`, which agrees only for even `μ`.
pub fn mellin_gauss(
    mu: f64,
    y: f64,
    param: &DegenerateParam,
    variant: Variant,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    if mu.is_nan() || mu <= 0.0 {
        return Err(Error::Divergence(format!("Gaussian moment needs mu > 0, got {mu}")));
    }
    if y.is_nan() || y <= 0.0 {
        return Err(Error::Domain(format!("Gaussian moment needs y > 0, got {y}")));
    }
    let c = y * param.l();
    let quad = power_weighted(mu, |z| (-c * z * z).exp(), cfg)?.value;
    let exponent = match variant {
        Variant::Corrected => mu / 2.0,
        Variant::Paper => (mu / 2.0).floor(),
    };
    let rhs = 0.5 * c.powf(-exponent) * gamma(mu / 2.0);
    Ok((quad, rhs))
}

/// Negative-order function `(1/Γ(μ)) ∫_0^∞ ζ^(μ-1) exp(-aζ - yLζ²) dζ`,
/// with `a = xL` or `a = x` depending on `kernel`.
pub fn nodhf(
    mu: f64,
    x: f64,
    y: f64,
    param: &DegenerateParam,
    kernel: NodhfKernel,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if mu.is_nan() || mu <= 0.0 {
        return Err(Error::Divergence(format!("negative-order function needs mu > 0, got {mu}")));
    }
    if !(y > 0.0 || (y == 0.0 && x > 0.0)) {
        return Err(Error::Divergence(format!(
            "Laplace integral diverges at x = {x}, y = {y}"
        )));
    }
    let l = param.l();
    let a = match kernel {
        NodhfKernel::LConsistent => x * l,
        NodhfKernel::Paper => x,
    };
    let b = y * l;
    let q = power_weighted(mu, |z| (-a * z - b * z * z).exp(), cfg)?;
    Ok(q.value / gamma(mu))
}

/// `∫ exp(-aLx² + bLx⁴) dx` by quadrature, and `√π · nodhf(1/2, a, -b)`.
pub fn gaussian_quartic(a: f64, b: f64, param: &DegenerateParam, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    if b.is_nan() || b >= 0.0 {
        return Err(Error::Divergence(format!("quartic Gaussian needs b < 0, got {b}")));
    }
    let l = param.l();
    // aLu + |b|Lu² = cutoff exponent with u = R²
    let target = cfg.cutoff_exponent();
    let u = (-a * l + (a * a * l * l + 4.0 * b.abs() * l * target).sqrt()) / (2.0 * b.abs() * l);
    let radius = u.sqrt().max(1.0);
    let quad = integrate_symmetric(
        |x: f64| {
            let x2 = x * x;
            (-a * l * x2 + b * l * x2 * x2).exp()
        },
        radius,
        cfg,
    )?
    .value;
    let via = std::f64::consts::PI.sqrt() * nodhf(0.5, a, -b, param, NodhfKernel::LConsistent, cfg)?;
    Ok((quad, via))
}
