//! The deformation parameter λ and the constant `L = log(1+λ)/λ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Below this magnitude of λ the constant is taken from its Taylor series.
pub const SERIES_THRESHOLD: f64 = 1e-4;

/// Deformation parameter λ (> −1) together with `L = log(1+λ)/λ`.
///
/// `L` is strictly positive for every admissible λ and equals 1 at λ = 0,
/// where the classical polynomials are recovered.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegenerateParam {
    lambda: f64,
    l: f64,
}

impl DegenerateParam {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= -1.0 {
            return Err(Error::Domain(format!(
                "lambda must be a finite number greater than -1, got {lambda}"
            )));
        }
        let l = if lambda.abs() < SERIES_THRESHOLD {
            // 1 - λ/2 + λ²/3 - λ³/4 + λ⁴/5
            1.0 + lambda * (-0.5 + lambda * (1.0 / 3.0 + lambda * (-0.25 + lambda * 0.2)))
        } else {
            lambda.ln_1p() / lambda
        };
        Ok(DegenerateParam { lambda, l })
    }

    /// The classical (λ = 0) parameter.
    pub fn classical() -> Self {
        DegenerateParam {
            lambda: 0.0,
            l: 1.0,
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `log(1+λ)/λ`.
    pub fn l(&self) -> f64 {
        self.l
    }
}

/// Builds a [`DegenerateParam`]; fails when `lambda <= -1`.
pub fn make_param(lambda: f64) -> Result<DegenerateParam> {
    DegenerateParam::new(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn limit_value_at_zero() {
        assert_eq!(make_param(0.0).unwrap().l(), 1.0);
    }

    #[test]
    fn known_values() {
        // log 2 and 2 log 2
        let one = make_param(1.0).unwrap();
        assert!(rel(one.l(), std::f64::consts::LN_2) <= 4.0 * f64::EPSILON);
        let half = make_param(-0.5).unwrap();
        assert!(rel(half.l(), 1.386_294_361_119_890_6) <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn rejects_lambda_at_or_below_minus_one() {
        assert!(matches!(make_param(-1.0), Err(Error::Domain(_))));
        assert!(matches!(make_param(-2.0), Err(Error::Domain(_))));
        assert!(make_param(f64::NAN).is_err());
    }

    #[test]
    fn series_branch_is_continuous_with_direct_formula() {
        for &lam in &[1e-4, -1e-4, 9.99e-5, -9.99e-5] {
            let p = make_param(lam).unwrap();
            let direct = lam.ln_1p() / lam;
            assert!(rel(p.l(), direct) < 1e-13, "lambda={lam}");
        }
        // second-order Taylor check well inside the series region
        let lam = 1e-6;
        let expect = 1.0 - lam / 2.0 + lam * lam / 3.0;
        assert!(rel(make_param(lam).unwrap().l(), expect) < 1e-15);
    }

    #[test]
    fn positive_on_admissible_range() {
        for &lam in &[-0.999_999, -0.9, -0.5, -1e-9, 1e-9, 0.5, 1.0, 10.0, 1e6] {
            assert!(make_param(lam).unwrap().l() > 0.0);
        }
    }
}
