//! Homogeneity relations between the bivariate, one-variable and classical
//! families.

use crate::error::{Error, Result};
use crate::numeric::eval::{eval_bvdhp, eval_dhp};
use crate::param::DegenerateParam;

fn scaled_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

/// Largest residual among
/// `H_n(x,y) = y^(n/2) H_n(x/√y, 1)` (for `y > 0`),
/// `H_n(x,y) = (-y)^(n/2) H_n(x/(2√-y))` (for `y < 0`) and
/// `H_n(x|λ) = L^(n/2) H_n(x√L)` with the classical right side.
///
/// Each residual is divided by `max(1, |lhs|, |rhs|)`.
pub fn scaling_checks(n: u32, x: f64, y: f64, param: &DegenerateParam) -> Result<f64> {
    if y == 0.0 || !y.is_finite() {
        return Err(Error::Domain(format!("scaling relations need y ≠ 0, got {y}")));
    }
    let nf = f64::from(n);
    let lhs = eval_bvdhp(n, x, y, param)?;
    let branch = if y > 0.0 {
        y.powf(nf / 2.0) * eval_bvdhp(n, x / y.sqrt(), 1.0, param)?
    } else {
        let s = (-y).sqrt();
        (-y).powf(nf / 2.0) * eval_dhp(n, x / (2.0 * s), param)?
    };
    let l = param.l();
    let classical = l.powf(nf / 2.0) * eval_dhp(n, x * l.sqrt(), &DegenerateParam::classical())?;
    let dhp = eval_dhp(n, x, param)?;
    Ok(scaled_diff(lhs, branch).max(scaled_diff(dhp, classical)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;

    #[test]
    fn examples() {
        let p = make_param(1.0).unwrap();
        assert!(scaling_checks(2, 1.0, 1.0, &p).unwrap() < 1e-12);
        assert!(scaling_checks(3, 1.0, -1.0, &p).unwrap() < 1e-12);
        assert_eq!(scaling_checks(0, 0.7, 2.0, &p).unwrap(), 0.0);
        assert!(matches!(scaling_checks(2, 1.0, 0.0, &p), Err(Error::Domain(_))));
    }

    #[test]
    fn grid() {
        for lam in [-0.5, 0.5, 1.0, 2.0] {
            let p = make_param(lam).unwrap();
            for n in 0..=15 {
                for (x, y) in [(0.3, 2.0), (-1.5, -0.4), (2.0, -3.0), (1.1, 0.25)] {
                    assert!(scaling_checks(n, x, y, &p).unwrap() < 1e-11, "n={n} x={x} y={y}");
                }
            }
        }
    }
}
