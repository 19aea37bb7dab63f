//! Floating-point evaluation and generating-function summation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::param::DegenerateParam;
use crate::Variant;

/// `H_n(x,y|λ)` by the three-term recurrence
/// `H_(k+1) = Lx·H_k + 2kLy·H_(k-1)`, `H_0 = 1`, `H_1 = Lx`.
pub fn eval_bvdhp(n: u32, x: f64, y: f64, param: &DegenerateParam) -> Result<f64> {
    let v = bvdhp_raw(n, x, y, param.l());
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!(
            "H_{n}({x}, {y}) exceeds the floating-point range"
        )))
    }
}

fn bvdhp_raw(n: u32, x: f64, y: f64, l: f64) -> f64 {
    let lx = l * x;
    let ly = l * y;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = lx;
    for k in 1..n {
        let next = lx * cur + 2.0 * f64::from(k) * ly * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n(x|λ) = H_n(2x, -1|λ)`.
pub fn eval_dhp(n: u32, x: f64, param: &DegenerateParam) -> Result<f64> {
    eval_bvdhp(n, 2.0 * x, -1.0, param)
}

/// Physicists' Hermite polynomial by `H_(k+1) = 2x H_k - 2k H_(k-1)`.
pub fn classical_hermite(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Classical bivariate Hermite value `Σ_k n!/((n-2k)! k!) x^(n-2k) y^k`,
/// summed term by term.
pub fn classical_bivariate(n: u32, x: f64, y: f64) -> f64 {
    let mut sum = 0.0;
    for k in 0..=n / 2 {
        let mut c = 1.0;
        for j in (n - 2 * k + 1)..=n {
            c *= f64::from(j);
        }
        for j in 1..=k {
            c /= f64::from(j);
        }
        sum += c * x.powi((n - 2 * k) as i32) * y.powi(k as i32);
    }
    sum
}

/// Argument of the generating function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GFPoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub param: DegenerateParam,
}

impl GFPoint {
    pub fn new(t: f64, x: f64, y: f64, param: DegenerateParam) -> Self {
        GFPoint { t, x, y, param }
    }

    /// `4tyL`, which must stay below 1 in magnitude for the even-index series.
    pub fn even_radius(&self) -> f64 {
        4.0 * self.t * self.y * self.param.l()
    }
}

/// `(1+λ)^((xt+yt²)/λ) = exp(L(xt + yt²))`.
pub fn gf_closed(p: &GFPoint) -> f64 {
    (p.param.l() * (p.x * p.t + p.y * p.t * p.t)).exp()
}

/// `Σ_(n≤N) H_n(x,y|λ) tⁿ/n!`, running the recurrence once.
pub fn gf_series(p: &GFPoint, terms: u32) -> f64 {
    let l = p.param.l();
    let (lx, ly) = (l * p.x, l * p.y);
    let mut prev = 1.0;
    let mut cur = lx;
    let mut sum = 1.0;
    let mut scale = 1.0; // tⁿ/n!
    for n in 1..=terms {
        if n >= 2 {
            let next = lx * cur + 2.0 * f64::from(n - 1) * ly * prev;
            prev = cur;
            cur = next;
        }
        scale *= p.t / f64::from(n);
        sum += cur * scale;
    }
    sum
}

/// Closed form and truncated series of `Σ_n H_(2n)(x,y|λ) tⁿ/n!`.
///
/// `Corrected`: `(1-4tyL)^(-1/2) exp(tL²x²/(1-4tyL))`.
/// `Paper`: `(1-q)^(-1/2) exp(t(1+λ)^(2x/λ)/(1-q))` with `q = (1+λ)^(4ty/λ)`.
pub fn even_gf(p: &GFPoint, variant: Variant, terms: u32) -> Result<(f64, f64)> {
    let l = p.param.l();
    let closed = match variant {
        Variant::Corrected => {
            let r = p.even_radius();
            if r >= 1.0 {
                return Err(Error::Domain(format!("4tyL = {r} must be below 1")));
            }
            let d = 1.0 - r;
            d.powf(-0.5) * (p.t * l * l * p.x * p.x / d).exp()
        }
        Variant::Paper => {
            let q = (4.0 * p.t * p.y * l).exp();
            if q >= 1.0 {
                return Err(Error::Domain(format!(
                    "(1+λ)^(4ty/λ) = {q} must be below 1"
                )));
            }
            let d = 1.0 - q;
            d.powf(-0.5) * (p.t * (2.0 * p.x * l).exp() / d).exp()
        }
    };
    Ok((closed, even_series(p, terms)?))
}

/// `Σ_(n≤N) H_(2n)(x,y|λ) tⁿ/n!`.
pub fn even_series(p: &GFPoint, terms: u32) -> Result<f64> {
    let mut sum = 0.0;
    let mut scale = 1.0;
    for n in 0..=terms {
        if n > 0 {
            scale *= p.t / f64::from(n);
        }
        sum += eval_bvdhp(2 * n, p.x, p.y, &p.param)? * scale;
    }
    Ok(sum)
}

/// The printed even-index closed form on the principal branch, defined
/// also where `(1+λ)^(4ty/λ) ≥ 1` and the real form is not.
pub fn even_gf_printed_complex(p: &GFPoint) -> Complex64 {
    let l = p.param.l();
    let d = Complex64::new(1.0 - (4.0 * p.t * p.y * l).exp(), 0.0);
    let num = Complex64::new(p.t * (2.0 * p.x * l).exp(), 0.0);
    d.powf(-0.5) * (num / d).exp()
}
