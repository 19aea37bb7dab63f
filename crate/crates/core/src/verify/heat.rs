//! Explicit finite-difference solution of `∂_y u = (1/L) ∂_x² u` compared
//! against the exact polynomial.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::bvdhp;
use crate::param::DegenerateParam;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeatGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub dx: f64,
    pub y_max: f64,
    pub dy: f64,
}

impl HeatGrid {
    /// Grid on `[x_min, x_max]` with `dy` at 90% of the stability bound.
    pub fn stable(x_min: f64, x_max: f64, dx: f64, y_max: f64, param: &DegenerateParam) -> Self {
        HeatGrid {
            x_min,
            x_max,
            dx,
            y_max,
            dy: 0.45 * param.l() * dx * dx,
        }
    }

    /// Number of intervals in `x` and steps in `y`, and the step actually used
    /// so that the march lands on `y_max`.
    fn layout(&self, param: &DegenerateParam) -> Result<(usize, usize, f64)> {
        if !(self.dx > 0.0 && self.dy > 0.0 && self.x_max > self.x_min && self.y_max >= 0.0) {
            return Err(Error::Domain(format!("malformed heat grid {self:?}")));
        }
        let bound = param.l() * self.dx * self.dx / 2.0;
        if self.dy > bound {
            return Err(Error::Stability(format!(
                "dy = {} exceeds L·dx²/2 = {bound}",
                self.dy
            )));
        }
        let nx = ((self.x_max - self.x_min) / self.dx).round() as usize;
        if nx < 6 {
            return Err(Error::Domain("heat grid needs at least 6 x intervals".into()));
        }
        let steps = (self.y_max / self.dy).ceil() as usize;
        let dy = if steps == 0 { 0.0 } else { self.y_max / steps as f64 };
        Ok((nx, steps, dy))
    }
}

/// Relative sup-norm error at `y_max` over the middle third of the grid.
pub fn heat_fd_residual(n: u32, param: &DegenerateParam, grid: &HeatGrid) -> Result<f64> {
    let (nx, steps, dy) = grid.layout(param)?;
    let poly = bvdhp(n);
    let l = param.l();
    let dx = (grid.x_max - grid.x_min) / nx as f64;
    let xs: Vec<f64> = (0..=nx).map(|i| grid.x_min + dx * i as f64).collect();
    let exact = |x: f64, y: f64| poly.eval(param, x, y);

    let mut u: Vec<f64> = xs.iter().map(|&x| (l * x).powi(n as i32)).collect();
    let mut next = u.clone();
    let r = dy / (l * dx * dx);
    for k in 1..=steps {
        let y = dy * k as f64;
        for i in 1..nx {
            next[i] = u[i] + r * (u[i + 1] - 2.0 * u[i] + u[i - 1]);
        }
        next[0] = exact(xs[0], y)?;
        next[nx] = exact(xs[nx], y)?;
        std::mem::swap(&mut u, &mut next);
    }

    let (lo, hi) = (nx / 3, nx - nx / 3);
    let mut err: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in lo..=hi {
        let e = exact(xs[i], grid.y_max)?;
        err = err.max((u[i] - e).abs());
        scale = scale.max(e.abs());
    }
    Ok(if err == 0.0 { 0.0 } else { err / scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;

    #[test]
    fn quadratic_is_exact() {
        let p = make_param(1.0).unwrap();
        let g = HeatGrid::stable(-5.0, 5.0, 0.01, 0.1, &p);
        assert!(heat_fd_residual(2, &p, &g).unwrap() < 1e-10);
    }

    #[test]
    fn quartic_within_scheme_error() {
        let p = make_param(1.0).unwrap();
        let g = HeatGrid::stable(-5.0, 5.0, 0.01, 0.1, &p);
        assert!(heat_fd_residual(4, &p, &g).unwrap() < 1e-3);
    }

    #[test]
    fn constant_has_no_error() {
        let p = make_param(0.5).unwrap();
        let g = HeatGrid::stable(-1.0, 1.0, 0.1, 0.3, &p);
        assert_eq!(heat_fd_residual(0, &p, &g).unwrap(), 0.0);
    }

    #[test]
    fn unstable_step_rejected() {
        let p = make_param(1.0).unwrap();
        let mut g = HeatGrid::stable(-5.0, 5.0, 0.01, 0.1, &p);
        g.dy = p.l() * 0.01 * 0.01;
        assert!(matches!(heat_fd_residual(4, &p, &g), Err(Error::Stability(_))));
    }
}
