//! Exact Laurent polynomials in `x`, `y`, `L` over arbitrary-precision rationals.
//!
//! Powers of `x` and `L` are nonnegative; powers of `y` may be negative.
//! Terms are kept in a `BTreeMap` keyed by the exponent triple with zero
//! coefficients never stored, so structural equality is exact equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::param::DegenerateParam;

/// Differentiation / integration variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Exponent triple of a term; ordered lexicographically by `(ex, ey, el)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub ex: u32,
    pub ey: i32,
    pub el: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        ex: 0,
        ey: 0,
        el: 0,
    };

    pub fn new(ex: u32, ey: i32, el: u32) -> Self {
        Monomial { ex, ey, el }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            ex: self.ex + other.ex,
            ey: self.ey + other.ey,
            el: self.el + other.el,
        }
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = ExactPoly::zero();
        p.add_term(m, c);
        p
    }

    /// `c · x^ex · y^ey · L^el` with an integer coefficient.
    pub fn monomial(c: i64, ex: u32, ey: i32, el: u32) -> Self {
        Self::term(rat(c), Monomial::new(ex, ey, el))
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1, 0)
    }

    pub fn l() -> Self {
        Self::monomial(1, 0, 0, 1)
    }

    /// Adds `c · m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Rebuilds the map from scratch; a no-op on any value produced by this
    /// module, kept for property tests of canonical form.
    pub fn normalized(&self) -> Self {
        let mut out = ExactPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    /// Multiplies by `c · x^ex · y^ey · L^el`.
    pub fn mul_monomial(&self, c: &BigRational, ex: u32, ey: i32, el: u32) -> Self {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        let shift = Monomial::new(ex, ey, el);
        ExactPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(shift), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(ExactPoly::one(), |acc, _| &acc * self)
    }

    /// Formal partial derivative. For `y`, `d/dy y^k = k y^(k-1)` for every integer `k`.
    pub fn diff(&self, var: Var) -> Self {
        let mut out = ExactPoly::zero();
        for (m, c) in &self.terms {
            match var {
                Var::X if m.ex > 0 => out.add_term(
                    Monomial::new(m.ex - 1, m.ey, m.el),
                    c * rat(i64::from(m.ex)),
                ),
                Var::Y if m.ey != 0 => out.add_term(
                    Monomial::new(m.ex, m.ey - 1, m.el),
                    c * rat(i64::from(m.ey)),
                ),
                _ => {}
            }
        }
        out
    }

    pub fn diff_n(&self, var: Var, k: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.diff(var);
        }
        p
    }

    /// Antiderivative vanishing at 0 in the given variable.
    ///
    /// Fails on a `y^-1` term (its antiderivative is not a Laurent monomial)
    /// and on any negative `y` power, whose antiderivative is unbounded at 0.
    pub fn integrate(&self, var: Var) -> Result<Self> {
        let mut out = ExactPoly::zero();
        for (m, c) in &self.terms {
            match var {
                Var::X => out.add_term(
                    Monomial::new(m.ex + 1, m.ey, m.el),
                    c / rat(i64::from(m.ex) + 1),
                ),
                Var::Y => {
                    if m.ey < 0 {
                        return Err(Error::Representation(
                            "cannot integrate a negative power of y from 0".into(),
                        ));
                    }
                    out.add_term(
                        Monomial::new(m.ex, m.ey + 1, m.el),
                        c / rat(i64::from(m.ey) + 1),
                    )
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by `L^delta`; a negative `delta` is exact exponent
    /// decrement and fails if any power of `L` would become negative.
    pub fn shift_l(&self, delta: i32) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let el = i64::from(m.el) + i64::from(delta);
            if el < 0 {
                return Err(Error::Representation(format!(
                    "power of L would become {el} for term x^{} y^{} L^{}",
                    m.ex, m.ey, m.el
                )));
            }
            terms.insert(Monomial::new(m.ex, m.ey, el as u32), c.clone());
        }
        Ok(ExactPoly { terms })
    }

    /// Substitutes `x ↦ c·x`.
    pub fn subs_x_scale(&self, c: &BigRational) -> Self {
        let mut out = ExactPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * pow_rat(c, m.ex as i32));
        }
        out
    }

    /// Substitutes `y ↦ c` for a rational constant.
    pub fn subs_y(&self, c: &BigRational) -> Result<Self> {
        let mut out = ExactPoly::zero();
        for (m, v) in &self.terms {
            if m.ey < 0 && c.is_zero() {
                return Err(Error::DivisionByZero);
            }
            out.add_term(Monomial::new(m.ex, 0, m.el), v * pow_rat(c, m.ey));
        }
        Ok(out)
    }

    /// Substitutes `L ↦ 1`.
    pub fn subs_l_one(&self) -> Self {
        let mut out = ExactPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(Monomial::new(m.ex, m.ey, 0), v.clone());
        }
        out
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.ex).max()
    }

    /// Coefficient of the highest power of `x`, as a polynomial in `y` and `L`.
    pub fn leading_x_coefficient(&self) -> ExactPoly {
        let Some(d) = self.degree_x() else {
            return ExactPoly::zero();
        };
        let mut out = ExactPoly::zero();
        for (m, v) in self.terms.iter().filter(|(m, _)| m.ex == d) {
            out.add_term(Monomial::new(0, m.ey, m.el), v.clone());
        }
        out
    }

    pub fn min_y_power(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.ey).min()
    }

    pub fn eval(&self, param: &DegenerateParam, x: f64, y: f64) -> Result<f64> {
        self.eval_with_l(param.l(), x, y)
    }

    /// Numeric evaluation with an explicit value for `L`. Terms are summed
    /// within groups of equal total degree before the groups are combined.
    pub fn eval_with_l(&self, l: f64, x: f64, y: f64) -> Result<f64> {
        let mut groups: BTreeMap<i64, f64> = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.ey < 0 && y == 0.0 {
                return Err(Error::DivisionByZero);
            }
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            let v = coeff * x.powi(m.ex as i32) * y.powi(m.ey) * l.powi(m.el as i32);
            let deg = i64::from(m.ex) + i64::from(m.ey) + i64::from(m.el);
            *groups.entry(deg).or_insert(0.0) += v;
        }
        Ok(groups.values().sum())
    }

    /// Canonical term list, sorted by `(ex, ey, eL)`.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                ex: m.ex,
                ey: m.ey,
                el: m.el,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self> {
        let mut out = ExactPoly::zero();
        for r in records {
            let num: BigInt = r
                .num
                .parse()
                .map_err(|_| Error::Representation(format!("bad numerator `{}`", r.num)))?;
            let den: BigInt = r
                .den
                .parse()
                .map_err(|_| Error::Representation(format!("bad denominator `{}`", r.den)))?;
            if den.is_zero() {
                return Err(Error::Representation("zero denominator".into()));
            }
            out.add_term(Monomial::new(r.ex, r.ey, r.el), BigRational::new(num, den));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_records()).expect("term records serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let records: Vec<TermRecord> =
            serde_json::from_str(s).map_err(|e| Error::Representation(e.to_string()))?;
        Self::from_records(&records)
    }
}

/// `c^k` for any integer `k` (`c` must be nonzero when `k < 0`).
pub fn pow_rat(c: &BigRational, k: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= c;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// One serialized term: `num/den · x^ex · y^ey · L^eL`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub ex: u32,
    pub ey: i32,
    #[serde(rename = "eL")]
    pub el: u32,
    pub num: String,
    pub den: String,
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || *m == Monomial::ONE {
                factors.push(mag.to_string());
            }
            for (name, e) in [("L", m.el as i32), ("x", m.ex as i32), ("y", m.ey)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl AddAssign<&ExactPoly> for ExactPoly {
    fn add_assign(&mut self, rhs: &ExactPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: ExactPoly) -> ExactPoly {
        self += &rhs;
        self
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl Sub<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: ExactPoly) -> ExactPoly {
        &self - &rhs
    }
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: ExactPoly) -> ExactPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;
    use proptest::prelude::*;

    // L²x² + 2Ly
    fn h2() -> ExactPoly {
        ExactPoly::monomial(1, 2, 0, 2) + ExactPoly::monomial(2, 0, 1, 1)
    }

    #[test]
    fn power_rule_examples() {
        assert_eq!(h2().diff(Var::X), ExactPoly::monomial(2, 1, 0, 2));
        assert_eq!(h2().diff(Var::Y), ExactPoly::monomial(2, 0, 0, 1));
        let p = ExactPoly::monomial(1, 1, -1, 0);
        assert_eq!(p.diff(Var::Y), ExactPoly::monomial(-1, 1, -2, 0));
    }

    #[test]
    fn eval_examples() {
        let p = make_param(1.0).unwrap();
        let ln2 = std::f64::consts::LN_2;
        assert_eq!(ExactPoly::one().eval(&p, 3.0, 7.0).unwrap(), 1.0);
        // high-precision values: (log 2)² + 2 log 2 and (log 2)³ + 6 (log 2)²
        let v = h2().eval(&p, 1.0, 1.0).unwrap();
        assert!((v - 1.866_747_375_038_092).abs() < 1e-15);
        assert!((v - (ln2 * ln2 + 2.0 * ln2)).abs() < 1e-15);
        let h3 = ExactPoly::monomial(1, 3, 0, 3) + ExactPoly::monomial(6, 1, 1, 2);
        let v3 = h3.eval(&p, 1.0, 1.0).unwrap();
        assert!((v3 - 3.215_742_735_498_138).abs() < 1e-14);
    }

    #[test]
    fn eval_negative_y_power_at_zero_fails() {
        let p = make_param(1.0).unwrap();
        let q = ExactPoly::monomial(1, 1, -1, 0);
        assert_eq!(q.eval(&p, 1.0, 0.0), Err(Error::DivisionByZero));
        assert!(q.eval(&p, 1.0, 2.0).is_ok());
    }

    #[test]
    fn canonical_form_drops_cancelled_terms() {
        let p = h2();
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).len(), 0);
        let q = &p + &ExactPoly::monomial(-2, 0, 1, 1);
        assert_eq!(q, ExactPoly::monomial(1, 2, 0, 2));
    }

    #[test]
    fn shift_l_rejects_negative_exponent() {
        assert_eq!(h2().shift_l(-1).unwrap(), ExactPoly::monomial(1, 2, 0, 1) + ExactPoly::monomial(2, 0, 1, 0));
        assert!(matches!(h2().shift_l(-2), Err(Error::Representation(_))));
    }

    #[test]
    fn json_records_sorted_and_round_trip() {
        let recs = h2().to_records();
        assert_eq!(recs.len(), 2);
        assert_eq!((recs[0].ex, recs[0].ey, recs[0].el), (0, 1, 1));
        assert_eq!((recs[1].ex, recs[1].ey, recs[1].el), (2, 0, 2));
        let json = h2().to_json();
        assert!(json.contains("\"eL\":1"));
        assert_eq!(ExactPoly::from_json(&json).unwrap(), h2());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(h2().to_string(), "L^2*x^2 + 2*L*y");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert_eq!(ExactPoly::monomial(-3, 0, 0, 0).to_string(), "-3");
    }

    fn arb_poly() -> impl Strategy<Value = ExactPoly> {
        prop::collection::vec(
            (0u32..4, -2i32..3, 0u32..3, -9i64..10, 1i64..5),
            0..8,
        )
        .prop_map(|ts| {
            let mut p = ExactPoly::zero();
            for (ex, ey, el, n, d) in ts {
                p.add_term(Monomial::new(ex, ey, el), ratio(n, d));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn distributive(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        }

        #[test]
        fn normalize_idempotent(p in arb_poly()) {
            let once = p.normalized();
            prop_assert_eq!(once.normalized(), once.clone());
            prop_assert_eq!(once, p);
        }

        #[test]
        fn mixed_partials_commute(p in arb_poly()) {
            prop_assert_eq!(p.diff(Var::X).diff(Var::Y), p.diff(Var::Y).diff(Var::X));
        }

        #[test]
        fn leibniz_rule(p in arb_poly(), q in arb_poly()) {
            for v in [Var::X, Var::Y] {
                let lhs = (&p * &q).diff(v);
                let rhs = &(&p.diff(v) * &q) + &(&p * &q.diff(v));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn eval_is_multiplicative(
            p in arb_poly(),
            q in arb_poly(),
            x in -2.0f64..2.0,
            y in 0.3f64..2.0,
            lam in -0.5f64..2.0,
        ) {
            let param = make_param(lam).unwrap();
            let pq = (&p * &q).eval(&param, x, y).unwrap();
            let prod = p.eval(&param, x, y).unwrap() * q.eval(&param, x, y).unwrap();
            // scale by the absolute term sums to keep cancellation honest
            let abs_sum = |s: &ExactPoly| -> f64 {
                s.terms()
                    .map(|(m, c)| {
                        (c.to_f64().unwrap() * x.powi(m.ex as i32) * y.powi(m.ey) * param.l().powi(m.el as i32)).abs()
                    })
                    .sum()
            };
            let scale = 1.0f64.max(abs_sum(&p) * abs_sum(&q));
            prop_assert!((pq - prod).abs() <= 1e-12 * scale);
        }

        #[test]
        fn json_round_trip(p in arb_poly()) {
            prop_assert_eq!(ExactPoly::from_json(&p.to_json()).unwrap(), p);
        }
    }
}
