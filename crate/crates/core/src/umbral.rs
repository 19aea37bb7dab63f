//! Umbral vacuum and moment-functional evaluation.
//!
//! An umbral expression is a polynomial in the symbol `ĥ` with [`ExactPoly`]
//! coefficients. Evaluating it against a vacuum replaces `ĥᵏ` by the moment
//! `φ_k`, which is all the umbral calculus here ever needs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::hermite::{binomial, factorial};
use crate::poly::{ExactPoly, Monomial};

/// Moment sequence `ν ↦ φ_ν` with values in `ExactPoly` (in `y` and `L`).
#[derive(Clone)]
pub struct MomentSequence {
    moment: Arc<dyn Fn(u32) -> ExactPoly + Send + Sync>,
}

impl MomentSequence {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(u32) -> ExactPoly + Send + Sync + 'static,
    {
        MomentSequence {
            moment: Arc::new(f),
        }
    }

    /// Vacuum of the bivariate family, see [`vacuum_moment`].
    pub fn hermite_vacuum() -> Self {
        Self::new(vacuum_moment)
    }

    /// Vacuum of the one-variable family, see [`dhp_moment`].
    pub fn dhp_vacuum() -> Self {
        Self::new(dhp_moment)
    }

    pub fn moment(&self, nu: u32) -> ExactPoly {
        (self.moment)(nu)
    }
}

impl std::fmt::Debug for MomentSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MomentSequence").finish_non_exhaustive()
    }
}

/// `φ_ν`: `(2s)!/s! · yˢ Lˢ` for `ν = 2s`, zero for odd `ν`.
pub fn vacuum_moment(nu: u32) -> ExactPoly {
    if nu % 2 == 1 {
        return ExactPoly::zero();
    }
    let s = nu / 2;
    let c = factorial(2 * s) / factorial(s);
    ExactPoly::term(BigRational::from_integer(c), Monomial::new(0, s as i32, s))
}

/// `y = -1` specialization of [`vacuum_moment`]: `(-1)ˢ (2s)!/s! Lˢ`.
pub fn dhp_moment(nu: u32) -> ExactPoly {
    if nu % 2 == 1 {
        return ExactPoly::zero();
    }
    let s = nu / 2;
    let mut c = factorial(2 * s) / factorial(s);
    if s % 2 == 1 {
        c = -c;
    }
    ExactPoly::term(BigRational::from_integer(c), Monomial::new(0, 0, s))
}

/// Polynomial in `ĥ`; `coeffs[k]` multiplies `ĥᵏ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmbralExpr {
    coeffs: Vec<ExactPoly>,
}

impl UmbralExpr {
    pub fn new(mut coeffs: Vec<ExactPoly>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ExactPoly::zero());
        }
        UmbralExpr { coeffs }
    }

    /// `c · ĥᵏ`.
    pub fn power(k: usize, c: ExactPoly) -> Self {
        let mut coeffs = vec![ExactPoly::zero(); k + 1];
        coeffs[k] = c;
        UmbralExpr { coeffs }
    }

    pub fn coeffs(&self) -> &[ExactPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &UmbralExpr) -> UmbralExpr {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = ExactPoly::zero();
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                a + b
            })
            .collect();
        UmbralExpr { coeffs }
    }

    pub fn scale(&self, c: &ExactPoly) -> UmbralExpr {
        UmbralExpr {
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    /// Product in the commutative ring `ExactPoly[ĥ]`.
    pub fn mul(&self, other: &UmbralExpr) -> UmbralExpr {
        let mut coeffs = vec![ExactPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UmbralExpr { coeffs }
    }
}

/// `Σ_k coeffs[k] · φ_k`.
pub fn umbral_eval(u: &UmbralExpr, moments: &MomentSequence) -> ExactPoly {
    let mut out = ExactPoly::zero();
    for (k, c) in u.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = moments.moment(k as u32);
        if !m.is_zero() {
            out += &(c * &m);
        }
    }
    out
}

/// `(ĥ + Lx)ⁿ φ₀` built as a polynomial in `ĥ` and evaluated on `moments`.
pub fn umbral_expand_with(n: u32, moments: &MomentSequence) -> ExactPoly {
    let base = UmbralExpr::new(vec![ExactPoly::monomial(1, 1, 0, 1), ExactPoly::one()]);
    let mut acc = UmbralExpr::new(vec![ExactPoly::one()]);
    for _ in 0..n {
        acc = acc.mul(&base);
    }
    umbral_eval(&acc, moments)
}

/// Umbral representation of `H_n(x,y|λ)` on the bivariate vacuum.
pub fn umbral_expand(n: u32) -> ExactPoly {
    umbral_expand_with(n, &MomentSequence::hermite_vacuum())
}

/// `n! [tⁿ] exp(ĥt) exp(Lxt) φ₀`, from the Cauchy product of the two
/// exponential series truncated at order `n`.
pub fn umbral_gf_coefficient(n: u32) -> ExactPoly {
    let mut coeff = UmbralExpr::new(vec![ExactPoly::zero()]);
    for k in 0..=n {
        // ĥᵏ/k! · (Lx)^(n-k)/(n-k)!
        let c = BigRational::new(BigInt::one(), factorial(k) * factorial(n - k));
        let lx = ExactPoly::term(c, Monomial::new(n - k, 0, n - k));
        coeff = coeff.add(&UmbralExpr::power(k as usize, lx));
    }
    let scaled = coeff.scale(&ExactPoly::constant(BigRational::from_integer(factorial(n))));
    umbral_eval(&scaled, &MomentSequence::hermite_vacuum())
}

/// Direct binomial form `Σ_k C(n,k) (Lx)^(n-k) φ_k`, used as a cross-check
/// of the ring-product construction.
pub fn umbral_binomial(n: u32) -> ExactPoly {
    let mut out = ExactPoly::zero();
    for k in 0..=n {
        let m = vacuum_moment(k);
        if m.is_zero() {
            continue;
        }
        let c = BigRational::from_integer(binomial(n, k));
        out += &m.mul_monomial(&c, n - k, 0, n - k);
    }
    out
}

/// `φ_{2s}` at `L = 1`: `yˢ (2s)!/s!`.
pub fn classical_vacuum_moment(nu: u32) -> ExactPoly {
    vacuum_moment(nu).subs_l_one()
}
