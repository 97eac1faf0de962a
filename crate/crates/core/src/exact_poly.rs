//! Exact coefficient arithmetic: integer Laurent polynomials in `q`,
//! truncated power series and arbitrary-precision rationals.
//!
//! Polynomials print as `c*q^d` terms in increasing exponent order, e.g.
//! `1+q+2*q^2+q^3+q^4`, and parse back from the same format.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Converts an integer into a [`Rational`].
pub fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Encodes a big integer as a JSON number when it fits into `i64`, and as a
/// decimal string otherwise.
pub fn bigint_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::input(format!("non-integer coefficient {num}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::input(format!("bad integer literal {s:?}"))),
        other => Err(Error::input(format!("expected integer, found {other}"))),
    }
}

/// An integer-coefficient Laurent polynomial in `q`. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn leading(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact substitution `q = x`.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::Domain(
                    "cannot evaluate a negative power of q at q = 0".into(),
                ));
            }
            return Ok(Rational::from_integer(self.coeff(0)));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let base: Rational = if *e < 0 { x.recip() } else { x.clone() };
            let p: Rational = Pow::pow(&base, e.unsigned_abs());
            acc += p * Rational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Exact division. Fails when the divisor is zero or the quotient is not
    /// an integer Laurent polynomial.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dmax, dlead) = divisor
            .leading()
            .map(|(e, c)| (e, c.clone()))
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let dspan = dmax - divisor.min_exp().unwrap_or(dmax);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((rmax, rlead)) = rem.leading() {
            let rspan = rmax - rem.min_exp().unwrap_or(rmax);
            let (c, r) = rlead.div_rem(&dlead);
            if rspan < dspan || !r.is_zero() {
                return Err(Error::Internal(format!(
                    "inexact division of {self} by {divisor}"
                )));
            }
            let term = LaurentPoly::monomial(c, rmax - dmax);
            rem -= &(&term * divisor);
            quot += &term;
        }
        Ok(quot)
    }

    /// JSON form `[[exponent, coefficient], ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| Value::Array(vec![Value::from(*e), bigint_to_json(c)]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::input("polynomial must be a JSON array"))?;
        let mut p = Self::zero();
        for item in arr {
            let pair = item
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::input("polynomial term must be [exponent, coefficient]"))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| Error::input("exponent must be an integer"))?;
            p.add_term(e, bigint_from_json(&pair[1])?);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let var = match e {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => write!(f, "{v}")?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || Error::input(format!("malformed polynomial {s:?}"));
        // split on top-level signs; a sign right after '^' belongs to the exponent
        let bytes = s.as_bytes();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        pieces.push(&s[start..]);
        let mut p = Self::zero();
        for piece in pieces {
            let (neg, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, var) = match body.find('q') {
                None => (body, None),
                Some(0) => ("1", Some(&body[1..])),
                Some(idx) => {
                    let c = body[..idx].strip_suffix('*').ok_or_else(bad)?;
                    (c, Some(&body[idx + 1..]))
                }
            };
            let mut c: BigInt = coeff.parse().map_err(|_| bad())?;
            if neg {
                c = -c;
            }
            let e = match var {
                None => 0,
                Some("") => 1,
                Some(rest) => rest
                    .strip_prefix('^')
                    .and_then(|x| x.parse::<i64>().ok())
                    .ok_or_else(bad)?,
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(LaurentPoly, Add, add);
forward_owned!(LaurentPoly, Sub, sub);
forward_owned!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// A power series in `q` known only up to (and including) exponent
/// `cutoff`. Exponents are bounded below by whatever terms are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrunc {
    cutoff: i64,
    terms: BTreeMap<i64, BigInt>,
}

impl SeriesTrunc {
    pub fn zero(cutoff: i64) -> Self {
        Self {
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: &LaurentPoly, cutoff: i64) -> Self {
        Self {
            cutoff,
            terms: p
                .terms()
                .filter(|(e, _)| *e <= cutoff)
                .map(|(e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        assert!(exp <= self.cutoff, "coefficient q^{exp} lies beyond the cutoff");
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The known part as a polynomial.
    pub fn truncated(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone())))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if exp > self.cutoff || coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, rhs: &SeriesTrunc) -> SeriesTrunc {
        let mut out = SeriesTrunc::zero(self.cutoff.min(rhs.cutoff));
        for (e, c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &SeriesTrunc) -> SeriesTrunc {
        // A product coefficient at exponent e needs every factor coefficient
        // at exponents up to e minus the other factor's lowest exponent, so
        // the reliable range shrinks by the lowest exponents involved.
        let lo_l = self.terms.keys().next().copied().unwrap_or(0).min(0);
        let lo_r = rhs.terms.keys().next().copied().unwrap_or(0).min(0);
        let cutoff = (self.cutoff + lo_r).min(rhs.cutoff + lo_l);
        let mut out = SeriesTrunc::zero(cutoff);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> SeriesTrunc {
        let mut acc = SeriesTrunc::from_poly(&LaurentPoly::one(), self.cutoff);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sum of the known coefficients.
    pub fn sum_known(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.truncated(), self.cutoff + 1)
    }
}

/// `sum_{k >= 0} q^{k * ratio_exponent}` known up to `cutoff`.
pub fn geometric_series(ratio_exponent: u32, cutoff: i64) -> SeriesTrunc {
    assert!(ratio_exponent > 0, "ratio exponent must be positive");
    let mut s = SeriesTrunc::zero(cutoff);
    let step = i64::from(ratio_exponent);
    let mut e = 0;
    while e <= cutoff {
        s.add_term(e, BigInt::one());
        e += step;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_format() {
        assert_eq!(p("1+q+2*q^2+q^3+q^4").to_string(), "1+q+2*q^2+q^3+q^4");
        assert_eq!(LaurentPoly::from_terms([(-1, -1), (1, 3)]).to_string(), "-q^-1+3*q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(-2, 0).to_string(), "-2");
    }

    #[test]
    fn bar_examples() {
        let q3 = p("q^-2+1+q^2");
        assert_eq!(q3.bar(), q3);
        assert_eq!(p("q^2").bar(), p("q^-2"));
        assert_eq!(p("1+q").bar(), p("1+q^-1"));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p("q^-1+q").evaluate(&rat(1)).unwrap(), rat(2));
        assert_eq!(p("1+q+q^2").evaluate(&rat(2)).unwrap(), rat(7));
        assert!(matches!(p("q^-1").evaluate(&rat(0)), Err(Error::Domain(_))));
        assert_eq!(p("3+q").evaluate(&rat(0)).unwrap(), rat(3));
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric_series(2, 4).truncated(), p("1+q^2+q^4"));
        assert_eq!(geometric_series(2, 0).truncated(), p("1"));
        assert_eq!(geometric_series(1, 3).truncated(), p("1+q+q^2+q^3"));
    }

    #[test]
    fn exact_division() {
        let num = p("q^-2+1+q^2") * p("q^-1+q");
        assert_eq!(num.div_exact(&p("q^-1+q")).unwrap(), p("q^-2+1+q^2"));
        assert!(p("1+q^2").div_exact(&p("1+q")).is_err());
        assert!(p("1").div_exact(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = p("-q^-3+5+123456789012345678901234567890*q^7");
        let back = LaurentPoly::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn truncated_series_product() {
        let g = geometric_series(2, 6);
        let sq = g.mul(&g);
        // 1/(1-q^2)^2 = sum (k+1) q^{2k}
        assert_eq!(sq.truncated(), p("1+2*q^2+3*q^4+4*q^6"));
        let shifted = SeriesTrunc::from_poly(&p("q^-2"), 6).mul(&g);
        assert_eq!(shifted.cutoff(), 4);
        assert_eq!(shifted.truncated(), p("q^-2+1+q^2+q^4"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = LaurentPoly> {
            prop::collection::vec((-10i64..=10, -99i64..=99), 0..6)
                .prop_map(LaurentPoly::from_terms)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn ring_axioms(a in poly(), b in poly(), c in poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) - &b, a.clone());
            }

            #[test]
            fn bar_is_involutive_homomorphism(a in poly(), b in poly()) {
                prop_assert_eq!(a.bar().bar(), a.clone());
                prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
                prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            }

            #[test]
            fn string_form_parses_back(a in poly()) {
                prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
            }

            #[test]
            fn series_agree_with_polynomials(a in poly(), b in poly(), cutoff in 0i64..12) {
                let sa = SeriesTrunc::from_poly(&a, cutoff);
                let sb = SeriesTrunc::from_poly(&b, cutoff);
                let sum = sa.add(&sb);
                for e in -20..=sum.cutoff() {
                    prop_assert_eq!(sum.coeff(e), (&a + &b).coeff(e));
                }
                let prod = sa.mul(&sb);
                let exact = &a * &b;
                for e in -20..=prod.cutoff() {
                    prop_assert_eq!(prod.coeff(e), exact.coeff(e));
                }
            }
        }
    }
}
