//! Exact constructions of `H_n(x,y|λ)` and `H_n(x|λ)` and the operator
//! identities they satisfy.
//!
//! Every construction returns an [`ExactPoly`] in `x`, `y`, `L`, so two routes
//! to the same polynomial can be compared with `==`. Division by `L` is done
//! by exponent decrement ([`ExactPoly::shift_l`]); on the Hermite family the
//! exponents involved are always large enough for this to be exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::param::DegenerateParam;
use crate::poly::{rat, ratio, ExactPoly, Monomial, Var};
use crate::Variant;

/// Largest polynomial order accepted at the crate's external boundaries.
pub const MAX_INDEX: u32 = 64;

/// Polynomial order `n`, bounded by [`MAX_INDEX`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HermiteIndex(u32);

impl HermiteIndex {
    pub fn new(n: u32) -> Result<Self> {
        if n > MAX_INDEX {
            return Err(Error::Index(format!(
                "order {n} exceeds the maximum of {MAX_INDEX}"
            )));
        }
        Ok(HermiteIndex(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<i64> for HermiteIndex {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::Index(format!("order must be nonnegative, got {n}")));
        }
        u32::try_from(n)
            .map_err(|_| Error::Index(format!("order {n} is too large")))
            .and_then(HermiteIndex::new)
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n! / (n-k)!`, the falling factorial.
pub(crate) fn falling(n: u32, k: u32) -> BigInt {
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    falling(n, k) / factorial(k)
}

fn big(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `H_n(x,y|λ) = Σ_k n!/((n-2k)! k!) L^(n-k) x^(n-2k) y^k`.
pub fn bvdhp(n: u32) -> ExactPoly {
    let mut p = ExactPoly::zero();
    for k in 0..=n / 2 {
        let c = factorial(n) / (factorial(n - 2 * k) * factorial(k));
        p.add_term(Monomial::new(n - 2 * k, k as i32, n - k), big(c));
    }
    p
}

/// `H_n(x|λ) = Σ_k (-1)^k n!/(k!(n-2k)!) L^(n-k) (2x)^(n-2k)`.
///
/// The sum stops at `⌊n/2⌋`; later terms would carry a factorial of a
/// negative integer.
pub fn dhp(n: u32) -> ExactPoly {
    let mut p = ExactPoly::zero();
    for k in 0..=n / 2 {
        let mut c = factorial(n) / (factorial(k) * factorial(n - 2 * k));
        c <<= (n - 2 * k) as usize;
        if k % 2 == 1 {
            c = -c;
        }
        p.add_term(Monomial::new(n - 2 * k, 0, n - k), big(c));
    }
    p
}

/// Closed form of `∂_x^r H_n`: `n!/(n-r)! L^r H_(n-r)`, zero when `r > n`.
pub fn diff_x_closed(n: u32, r: u32) -> ExactPoly {
    if r > n {
        return ExactPoly::zero();
    }
    bvdhp(n - r).mul_monomial(&big(falling(n, r)), 0, 0, r)
}

/// Closed form of `∂_y^r H_n`: `n!/(n-2r)! L^r H_(n-2r)`, zero when `2r > n`.
pub fn diff_y_closed(n: u32, r: u32) -> ExactPoly {
    if 2 * r > n {
        return ExactPoly::zero();
    }
    bvdhp(n - 2 * r).mul_monomial(&big(falling(n, 2 * r)), 0, 0, r)
}

/// `Lx·H_n + 2nLy·H_(n-1)`, which should be `H_(n+1)`. For `n = 0` the
/// second term is absent.
pub fn recurrence_next(n: u32) -> ExactPoly {
    let one = BigRational::one();
    let mut out = bvdhp(n).mul_monomial(&one, 1, 0, 1);
    if n >= 1 {
        out += &bvdhp(n - 1).mul_monomial(&rat(2 * i64::from(n)), 0, 1, 1);
    }
    out
}

/// Raising operator `M = Lx + 2y ∂_x`.
pub fn apply_m(p: &ExactPoly) -> ExactPoly {
    let mut out = p.mul_monomial(&BigRational::one(), 1, 0, 1);
    out += &p.diff(Var::X).mul_monomial(&rat(2), 0, 1, 0);
    out
}

/// Lowering operator `P = (1/L) ∂_x`.
pub fn apply_p(p: &ExactPoly) -> Result<ExactPoly> {
    p.diff(Var::X).shift_l(-1)
}

/// `M^n {1}`.
pub fn monomial_construct(n: u32) -> ExactPoly {
    (0..n).fold(ExactPoly::one(), |acc, _| apply_m(&acc))
}

/// `x ∂_x H_n + (2y/L) ∂_x² H_n − n H_n`; the zero polynomial for every `n`.
pub fn ode_residual(n: u32) -> ExactPoly {
    let h = bvdhp(n);
    let first = h.diff(Var::X).mul_monomial(&BigRational::one(), 1, 0, 0);
    let second = h
        .diff_n(Var::X, 2)
        .shift_l(-1)
        .expect("every term of the second x-derivative of H_n carries L^2")
        .mul_monomial(&rat(2), 0, 1, 0);
    &(&first + &second) - &h.scale_int(i64::from(n))
}

/// `∂_y H_n − (1/L) ∂_x² H_n`; the zero polynomial for every `n`.
pub fn heat_residual(n: u32) -> ExactPoly {
    let h = bvdhp(n);
    let rhs = h
        .diff_n(Var::X, 2)
        .shift_l(-1)
        .expect("every term of the second x-derivative of H_n carries L^2");
    &h.diff(Var::Y) - &rhs
}

/// `H_n(x, 0|λ)`, which should be `Lⁿxⁿ`.
pub fn initial_value(n: u32) -> ExactPoly {
    bvdhp(n)
        .subs_y(&rat(0))
        .expect("H_n has no negative powers of y")
}

/// Finite expansion of `exp((y/L) ∂_x²)` applied to `(Lx)ⁿ`.
pub fn operational_construct(n: u32) -> ExactPoly {
    let base = ExactPoly::monomial(1, n, 0, n);
    let mut out = ExactPoly::zero();
    for k in 0..=n / 2 {
        let term = base
            .diff_n(Var::X, 2 * k)
            .shift_l(-(k as i32))
            .expect("(Lx)^n carries L^n and k <= n/2")
            .mul_monomial(&BigRational::new(BigInt::one(), factorial(k)), 0, k as i32, 0);
        out += &term;
    }
    out
}

/// `Σ_r (-1)^r n!/(r!(n-2r)!) L^(r-n) y^r H_(n-2r)`, which should be `xⁿ`.
///
/// The sum is accumulated with an extra factor `Lⁿ` so that each summand is
/// an honest polynomial in `L`; the factor is removed at the end, which fails
/// with a representation error if any power of `L` would go negative.
pub fn inverse_expansion(n: u32) -> Result<ExactPoly> {
    let mut scaled = ExactPoly::zero();
    for r in 0..=n / 2 {
        let mut c = factorial(n) / (factorial(r) * factorial(n - 2 * r));
        if r % 2 == 1 {
            c = -c;
        }
        scaled += &bvdhp(n - 2 * r).mul_monomial(&big(c), 0, r as i32, r);
    }
    scaled.shift_l(-(n as i32))
}

/// Outcome of the Rodrigues-type construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RodriguesForm {
    Poly(ExactPoly),
    /// The printed prefactor `(-1)^(n/2)` is not real for odd `n`.
    IllDefined,
}

/// `q_n` with `∂_xⁿ (1+λ)^(x²/4yλ) = (1+λ)^(x²/4yλ) · q_n`.
pub fn rodrigues_kernel(n: u32) -> ExactPoly {
    // Lx / (2y)
    let factor = ExactPoly::term(ratio(1, 2), Monomial::new(1, -1, 1));
    let mut q = ExactPoly::one();
    for _ in 0..n {
        q = &q.diff(Var::X) + &(&q * &factor);
    }
    q
}

/// Rodrigues-type formula. `Corrected` multiplies the kernel by `(2y)ⁿ` and
/// reproduces `H_n`; `Paper` uses the prefactor `(-1)^(n/2) / 2ⁿ`.
pub fn rodrigues(n: u32, variant: Variant) -> RodriguesForm {
    let q = rodrigues_kernel(n);
    match variant {
        Variant::Corrected => {
            let c = big(BigInt::one() << n as usize);
            RodriguesForm::Poly(q.mul_monomial(&c, 0, n as i32, 0))
        }
        Variant::Paper => {
            if n % 2 == 1 {
                return RodriguesForm::IllDefined;
            }
            let sign = if (n / 2).is_multiple_of(2) { 1 } else { -1 };
            let c = BigRational::new(BigInt::from(sign), BigInt::one() << n as usize);
            RodriguesForm::Poly(q.scale(&c))
        }
    }
}

/// `(∫_0^x H_n(ζ,y|λ) dζ, Σ_r (-1)^r/(r+1) C(n,r) x^(r+1) L^r H_(n-r))`.
pub fn integral_x_identity(n: u32) -> (ExactPoly, ExactPoly) {
    let lhs = bvdhp(n)
        .integrate(Var::X)
        .expect("x-antiderivative always exists");
    let mut rhs = ExactPoly::zero();
    for r in 0..=n {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let c = BigRational::new(BigInt::from(sign) * binomial(n, r), BigInt::from(r + 1));
        rhs += &bvdhp(n - r).mul_monomial(&c, r + 1, 0, r);
    }
    (lhs, rhs)
}

/// `(∫_0^y H_n(x,η|λ) dη, Σ_r (-1)^r/(r+1)! y^(r+1) n!/(n-2r)! L^r H_(n-2r))`.
pub fn integral_y_identity(n: u32) -> (ExactPoly, ExactPoly) {
    let lhs = bvdhp(n)
        .integrate(Var::Y)
        .expect("H_n has no negative powers of y");
    let mut rhs = ExactPoly::zero();
    for r in 0..=n / 2 {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let c = BigRational::new(BigInt::from(sign) * falling(n, 2 * r), factorial(r + 1));
        rhs += &bvdhp(n - 2 * r).mul_monomial(&c, 0, r as i32 + 1, r);
    }
    (lhs, rhs)
}

/// `k`-fold repeated integral of `cos` from 0, `I_k(x) = ∫_0^x (x-ζ)^(k-1)/(k-1)! cos ζ dζ`.
///
/// Small arguments use the alternating series `Σ_m (-1)^m x^(2m+k)/(2m+k)!`;
/// large ones use `cos(x - kπ/2)` minus its Taylor polynomial of degree `k-1`.
pub fn repeated_cos_integral(k: u32, x: f64) -> f64 {
    if k == 0 {
        return x.cos();
    }
    if x.abs() <= 8.0 {
        // first term x^k / k!
        let mut term = (1..=k).fold(1.0, |acc, j| acc * x / f64::from(j));
        let mut sum = term;
        let mut m = 0u32;
        loop {
            let a = f64::from(2 * m + k + 1);
            term *= -x * x / (a * (a + 1.0));
            sum += term;
            m += 1;
            if term.abs() <= f64::EPSILON * sum.abs() * 1e-2 || m > 200 {
                break;
            }
        }
        sum
    } else {
        let shifted = match k % 4 {
            0 => x.cos(),
            1 => x.sin(),
            2 => -x.cos(),
            _ => -x.sin(),
        };
        // cos((k-j)π/2) is 1, 0, -1, 0 for (k-j) mod 4 = 0, 1, 2, 3
        let mut poly = 0.0;
        let mut pow = 1.0;
        for j in 0..k {
            let c = match (k - j) % 4 {
                0 => 1.0,
                2 => -1.0,
                _ => 0.0,
            };
            poly += c * pow;
            pow *= x / f64::from(j + 1);
        }
        shifted - poly
    }
}

/// `∫_0^x0 H_n(ζ,y|λ) cos ζ dζ`.
///
/// `Corrected` evaluates the terminating integration-by-parts expansion
/// `Σ_r (-1)^r ∂_x^r H_n(x0,y) · I_(r+1)(x0)`. `Paper` evaluates the printed
/// right side with `cos(x0 + rπ/2)/(r+1)` in place of the repeated integrals.
pub fn cosine_integral_x(
    n: u32,
    x0: f64,
    y: f64,
    param: &DegenerateParam,
    variant: Variant,
) -> f64 {
    let l = param.l();
    let h = |m: u32| eval_h(m, x0, y, param);
    let mut sum = 0.0;
    for r in 0..=n {
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        let term = match variant {
            Variant::Corrected => {
                falling_f64(n, r) * l.powi(r as i32) * h(n - r) * repeated_cos_integral(r + 1, x0)
            }
            Variant::Paper => {
                let phase = x0 + f64::from(r) * std::f64::consts::FRAC_PI_2;
                phase.cos() / f64::from(r + 1)
                    * binomial_f64(n, r)
                    * l.powi(r as i32)
                    * h(n - r)
            }
        };
        sum += sign * term;
    }
    sum
}

/// `∫_0^y0 H_n(x,η|λ) cos η dη`.
///
/// `Paper` keeps the printed `cos(x + rπ/2)`, with `x` rather than `y0`.
pub fn cosine_integral_y(
    n: u32,
    x: f64,
    y0: f64,
    param: &DegenerateParam,
    variant: Variant,
) -> f64 {
    let l = param.l();
    let h = |m: u32| eval_h(m, x, y0, param);
    let mut sum = 0.0;
    for r in 0..=n / 2 {
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = falling_f64(n, 2 * r) * l.powi(r as i32) * h(n - 2 * r);
        let term = match variant {
            Variant::Corrected => coeff * repeated_cos_integral(r + 1, y0),
            Variant::Paper => {
                let phase = x + f64::from(r) * std::f64::consts::FRAC_PI_2;
                coeff * phase.cos() / factorial_f64(r + 1)
            }
        };
        sum += sign * term;
    }
    sum
}

fn eval_h(n: u32, x: f64, y: f64, param: &DegenerateParam) -> f64 {
    bvdhp(n)
        .eval(param, x, y)
        .expect("H_n has no negative powers of y")
}

fn factorial_f64(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

fn falling_f64(n: u32, k: u32) -> f64 {
    ((n - k + 1)..=n).map(f64::from).product()
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    falling_f64(n, k) / factorial_f64(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;

    fn p(terms: &[(i64, u32, i32, u32)]) -> ExactPoly {
        terms
            .iter()
            .fold(ExactPoly::zero(), |acc, &(c, ex, ey, el)| {
                acc + ExactPoly::monomial(c, ex, ey, el)
            })
    }

    #[test]
    fn series_examples() {
        assert_eq!(bvdhp(0), ExactPoly::one());
        assert_eq!(bvdhp(2), p(&[(1, 2, 0, 2), (2, 0, 1, 1)]));
        assert_eq!(bvdhp(4), p(&[(1, 4, 0, 4), (12, 2, 1, 3), (12, 0, 2, 2)]));
    }

    #[test]
    fn dhp_examples() {
        assert_eq!(dhp(0), ExactPoly::one());
        assert_eq!(dhp(1), p(&[(2, 1, 0, 1)]));
        assert_eq!(dhp(2), p(&[(4, 2, 0, 2), (-2, 0, 0, 1)]));
    }

    #[test]
    fn derivative_closed_forms() {
        assert_eq!(diff_x_closed(3, 1), p(&[(3, 2, 0, 3), (6, 0, 1, 2)]));
        assert_eq!(diff_x_closed(2, 0), bvdhp(2));
        assert!(diff_x_closed(2, 3).is_zero());
        assert_eq!(diff_y_closed(4, 1), p(&[(12, 2, 0, 3), (24, 0, 1, 2)]));
        assert_eq!(diff_y_closed(4, 2), p(&[(24, 0, 0, 2)]));
        assert!(diff_y_closed(3, 2).is_zero());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_next(1), bvdhp(2));
        assert_eq!(recurrence_next(2), p(&[(1, 3, 0, 3), (6, 1, 1, 2)]));
        assert_eq!(recurrence_next(0), p(&[(1, 1, 0, 1)]));
    }

    #[test]
    fn raising_and_lowering() {
        assert_eq!(apply_m(&bvdhp(1)), bvdhp(2));
        assert_eq!(apply_p(&bvdhp(2)).unwrap(), bvdhp(1).scale_int(2));
        assert_eq!(apply_m(&ExactPoly::one()), bvdhp(1));
        // x alone has no L to divide by
        assert!(matches!(apply_p(&ExactPoly::x().pow(2)), Err(Error::Representation(_))));
    }

    #[test]
    fn monomial_construction() {
        assert_eq!(monomial_construct(0), ExactPoly::one());
        assert_eq!(monomial_construct(2), p(&[(1, 2, 0, 2), (2, 0, 1, 1)]));
        assert_eq!(monomial_construct(3), p(&[(1, 3, 0, 3), (6, 1, 1, 2)]));
    }

    #[test]
    fn ode_residual_vanishes() {
        for n in [0, 2, 5] {
            assert!(ode_residual(n).is_zero(), "n={n}");
        }
    }

    #[test]
    fn operational_examples() {
        assert_eq!(operational_construct(1), p(&[(1, 1, 0, 1)]));
        assert_eq!(operational_construct(2), bvdhp(2));
        assert_eq!(operational_construct(4), p(&[(1, 4, 0, 4), (12, 2, 1, 3), (12, 0, 2, 2)]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_expansion(0).unwrap(), ExactPoly::one());
        assert_eq!(inverse_expansion(2).unwrap(), ExactPoly::x().pow(2));
        assert_eq!(inverse_expansion(4).unwrap(), ExactPoly::x().pow(4));
    }

    #[test]
    fn rodrigues_examples() {
        assert_eq!(rodrigues(1, Variant::Corrected), RodriguesForm::Poly(bvdhp(1)));
        assert_eq!(rodrigues(2, Variant::Corrected), RodriguesForm::Poly(bvdhp(2)));
        // (-1/4)(L/2y + L²x²/4y²)
        let printed = ExactPoly::term(ratio(-1, 8), Monomial::new(0, -1, 1))
            + ExactPoly::term(ratio(-1, 16), Monomial::new(2, -2, 2));
        assert_eq!(rodrigues(2, Variant::Paper), RodriguesForm::Poly(printed.clone()));
        assert_ne!(printed, bvdhp(2));
        assert_eq!(rodrigues(3, Variant::Paper), RodriguesForm::IllDefined);
    }

    #[test]
    fn integral_examples() {
        let (l, r) = integral_x_identity(0);
        assert_eq!(l, ExactPoly::x());
        assert_eq!(r, ExactPoly::x());
        let (l, r) = integral_x_identity(1);
        let half_lx2 = ExactPoly::term(ratio(1, 2), Monomial::new(2, 0, 1));
        assert_eq!(l, half_lx2);
        assert_eq!(r, half_lx2);
        let (l, r) = integral_x_identity(3);
        assert_eq!(l, r);

        let (l, r) = integral_y_identity(0);
        assert_eq!((l.clone(), r), (ExactPoly::y(), ExactPoly::y()));
        let (l, r) = integral_y_identity(2);
        assert_eq!(l, p(&[(1, 2, 1, 2), (1, 0, 2, 1)]));
        assert_eq!(l, r);
        let (l, r) = integral_y_identity(4);
        assert_eq!(l, r);
    }

    #[test]
    fn index_bounds() {
        assert!(HermiteIndex::new(64).is_ok());
        assert!(matches!(HermiteIndex::new(65), Err(Error::Index(_))));
        assert!(HermiteIndex::try_from(-1i64).is_err());
        assert_eq!(HermiteIndex::try_from(7i64).unwrap().get(), 7);
    }

    /// Composite Simpson on a fine grid; independent of the repeated-integral code.
    fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(a + h * i as f64);
        }
        s * h / 3.0
    }

    #[test]
    fn repeated_cos_integral_matches_cauchy_formula() {
        for k in 1..=8u32 {
            for &x in &[-3.0, -0.5, 0.0, 0.7, 1.0, 2.5, 7.9, 8.1, 12.0] {
                let kernel = |z: f64| (x - z).powi(k as i32 - 1) / factorial_f64(k - 1) * z.cos();
                let oracle = simpson(kernel, 0.0, x, 20_000);
                let v = repeated_cos_integral(k, x);
                let scale = 1.0f64.max(oracle.abs());
                assert!((v - oracle).abs() < 1e-9 * scale, "k={k} x={x}: {v} vs {oracle}");
            }
        }
        assert_eq!(repeated_cos_integral(1, 1.3), 1.3f64.sin());
    }

    #[test]
    fn repeated_cos_integral_branches_agree() {
        // both formulas at a point just inside the series region
        for k in 1..=10u32 {
            let x = 7.5;
            let series = repeated_cos_integral(k, x);
            let shifted = match k % 4 {
                0 => x.cos(),
                1 => x.sin(),
                2 => -x.cos(),
                _ => -x.sin(),
            };
            let mut poly = 0.0;
            for j in 0..k {
                let c = match (k - j) % 4 {
                    0 => 1.0,
                    2 => -1.0,
                    _ => 0.0,
                };
                poly += c * x.powi(j as i32) / factorial_f64(j);
            }
            let closed = shifted - poly;
            assert!((series - closed).abs() < 1e-10 * closed.abs().max(1.0), "k={k}");
        }
    }

    #[test]
    fn cosine_integral_examples() {
        let lam1 = make_param(1.0).unwrap();
        let x0 = std::f64::consts::FRAC_PI_2;
        let l = lam1.l();
        let v = cosine_integral_x(1, x0, 1.0, &lam1, Variant::Corrected);
        assert!((v - l * (x0 - 1.0)).abs() < 1e-14);
        let v0 = cosine_integral_x(0, x0, 1.0, &lam1, Variant::Corrected);
        assert!((v0 - 1.0).abs() < 1e-15);
        let vy = cosine_integral_y(0, 0.3, x0, &lam1, Variant::Corrected);
        assert!((vy - 1.0).abs() < 1e-15);

        // ∫_0^1 (L² + 2Lη) cos η dη = L² sin 1 + 2L (cos 1 + sin 1 - 1)
        let s1 = 1f64.sin();
        let c1 = 1f64.cos();
        let closed = l * l * s1 + 2.0 * l * (c1 + s1 - 1.0);
        let vy2 = cosine_integral_y(2, 1.0, 1.0, &lam1, Variant::Corrected);
        assert!((vy2 - closed).abs() < 1e-13);

        let printed = cosine_integral_x(1, x0, 1.0, &lam1, Variant::Paper);
        assert!((printed - v).abs() > 1e-3);
    }

    #[test]
    fn cosine_integral_against_simpson() {
        for &lam in &[-0.5, 0.5, 1.0, 2.0] {
            let param = make_param(lam).unwrap();
            for n in 0..=6u32 {
                let h = bvdhp(n);
                let x0 = 1.7;
                let y = -0.8;
                let oracle = simpson(|z| h.eval(&param, z, y).unwrap() * z.cos(), 0.0, x0, 4000);
                let v = cosine_integral_x(n, x0, y, &param, Variant::Corrected);
                assert!((v - oracle).abs() < 1e-10 * oracle.abs().max(1.0), "lam={lam} n={n}");

                let y0 = 1.3;
                let oracle_y = simpson(|e| h.eval(&param, 0.6, e).unwrap() * e.cos(), 0.0, y0, 4000);
                let vy = cosine_integral_y(n, 0.6, y0, &param, Variant::Corrected);
                assert!((vy - oracle_y).abs() < 1e-10 * oracle_y.abs().max(1.0), "lam={lam} n={n}");
            }
        }
    }
}
