//! Multivariate integer polynomials in `x_1..x_n`, used as the carrier of
//! the polynomial representations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exps: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn mul_var(&self, i: usize, power: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[i] += power;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, i + 1);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i) == *self
    }

    /// Exact division by `x_i - x_{i+1}`. Fails if the remainder is nonzero.
    pub fn div_by_difference(&self, i: usize) -> Result<Poly> {
        let mut rest = self.clone();
        let mut quot = Poly::zero(self.nvars);
        // leading terms are taken in an order where the x_i exponent dominates
        while let Some((e, c)) = rest
            .terms
            .iter()
            .max_by(|a, b| (a.0[i], a.0).cmp(&(b.0[i], b.0)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if e[i] == 0 {
                return Err(Error::Internal(format!(
                    "polynomial not divisible by x{} - x{}",
                    i + 1,
                    i + 2
                )));
            }
            let mut t = e.clone();
            t[i] -= 1;
            rest.add_term(e, -&c);
            let mut shifted = t.clone();
            shifted[i + 1] += 1;
            rest.add_term(shifted, c.clone());
            quot.add_term(t, c);
        }
        Ok(quot)
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Poly> {
        self.sub(&self.swap_vars(i)).div_by_difference(i)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Elementary symmetric polynomial `e_k(x_1..x_n)`.
    pub fn elementary_symmetric(n: usize, k: usize) -> Poly {
        let mut out = Poly::zero(n);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                let e = (0..n).map(|i| mask >> i & 1).collect();
                out.add_term(e, BigInt::one());
            }
        }
        out
    }
}

/// All exponent vectors in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for c in (0..=left).rev() {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// All exponent vectors of total degree at most `d`, by degree.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
                .collect();
            if !first && c > &BigInt::zero() {
                write!(f, "+")?;
            }
            first = false;
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else if *c == -BigInt::one() {
                write!(f, "-{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
