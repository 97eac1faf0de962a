//! Decategorified sl2: the subset model, divided powers, the Weyl element,
//! Gaussian binomials and Grassmannian point counts.
//!
//! A subset of `{1..n}` is a bitmask; bit `i` stands for element `i+1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_poly::{LaurentPoly, Rational};
use crate::field::Field;
use crate::linalg::RatMatrix;
use crate::report::Check;

pub const MAX_SUBSET_N: usize = 20;

/// Above this many candidate matrices per pivot set, Grassmannian points
/// are counted by cell size instead of by enumeration.
const ENUMERATION_LIMIT: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetVector {
    n: usize,
    terms: BTreeMap<u32, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    E,
    F,
}

impl SubsetVector {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_SUBSET_N, "ground set too large");
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, subset: u32) -> Self {
        let mut v = Self::zero(n);
        v.add_term(subset, Rational::one());
        v
    }

    /// Basis vector from 1-based elements.
    pub fn from_elements(n: usize, elems: &[usize]) -> Self {
        let mask = elems.iter().fold(0u32, |m, &e| m | 1 << (e - 1));
        Self::basis(n, mask)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, subset: u32) -> Rational {
        self.terms.get(&subset).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn add_term(&mut self, subset: u32, c: Rational) {
        debug_assert!(subset < 1 << self.n);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(subset).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&subset);
        }
    }

    pub fn add(&self, other: &SubsetVector) -> SubsetVector {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SubsetVector {
        let mut out = SubsetVector::zero(self.n);
        for (s, x) in &self.terms {
            out.add_term(*s, x * c);
        }
        out
    }

    /// Weight `2|S| - n` if every term has the same one.
    pub fn weight(&self) -> Option<i64> {
        let mut ws = self
            .terms
            .keys()
            .map(|s| 2 * i64::from(s.count_ones()) - self.n as i64);
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }
}

impl fmt::Display for SubsetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| {
                let elems: Vec<String> = (0..self.n)
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("{c}*{{{}}}", elems.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `e(S) = sum of T ⊃ S with |T| = |S| + 1`.
pub fn e_subset(v: &SubsetVector) -> SubsetVector {
    let mut out = SubsetVector::zero(v.n);
    for (s, c) in v.terms() {
        for i in 0..v.n {
            if s >> i & 1 == 0 {
                out.add_term(s | 1 << i, c.clone());
            }
        }
    }
    out
}

/// `f(S) = sum of T ⊂ S with |T| = |S| - 1`.
pub fn f_subset(v: &SubsetVector) -> SubsetVector {
    let mut out = SubsetVector::zero(v.n);
    for (s, c) in v.terms() {
        for i in 0..v.n {
            if s >> i & 1 == 1 {
                out.add_term(s & !(1 << i), c.clone());
            }
        }
    }
    out
}

fn apply(op: Op, v: &SubsetVector) -> SubsetVector {
    match op {
        Op::E => e_subset(v),
        Op::F => f_subset(v),
    }
}

fn factorial(p: u32) -> BigInt {
    (1..=p).fold(BigInt::one(), |a, k| a * k)
}

/// `op^p / p!`.
pub fn divided_power(op: Op, p: u32, v: &SubsetVector) -> SubsetVector {
    let mut cur = v.clone();
    for _ in 0..p {
        if cur.is_zero() {
            break;
        }
        cur = apply(op, &cur);
    }
    cur.scale(&Rational::new(BigInt::one(), factorial(p)))
}

/// Checks `(ef - fe)(S) = (2|S| - n) S` on every subset of `{1..n}`.
pub fn commutator_report(n: usize) -> Check {
    let name = format!("commutator n={n}");
    if n > MAX_SUBSET_N {
        return Check::fail(name, format!("n={n} exceeds {MAX_SUBSET_N}"));
    }
    let witness = (0u32..1 << n).into_par_iter().find_first(|&s| {
        let v = SubsetVector::basis(n, s);
        let lhs = e_subset(&f_subset(&v));
        let lhs = lhs.add(&f_subset(&e_subset(&v)).scale(&-Rational::one()));
        let r = 2 * i64::from(s.count_ones()) - n as i64;
        lhs != v.scale(&Rational::from_integer(r.into()))
    });
    Check::from_witness(
        name,
        witness.map(|s| format!("fails on {}", SubsetVector::basis(n, s))),
    )
    .with_data(json!({ "subsets": 1u64 << n }))
}

/// Matrix of a map between weight spaces of the subset model. Columns are
/// indexed by the source subsets, rows by the target subsets, both in
/// increasing bitmask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    pub n: usize,
    pub source_weight: i64,
    pub target_weight: i64,
    pub source: Vec<u32>,
    pub target: Vec<u32>,
    pub matrix: RatMatrix,
}

impl WeightMatrix {
    /// Rows and columns are subsets as sorted 1-based element lists.
    pub fn to_json(&self) -> Value {
        let subset = |s: &u32| (0..self.n).filter(|i| s >> i & 1 == 1).map(|i| i + 1).collect::<Vec<_>>();
        let rows: Vec<Vec<String>> = (0..self.matrix.rows())
            .map(|r| (0..self.matrix.cols()).map(|c| self.matrix.get(r, c).to_string()).collect())
            .collect();
        json!({
            "n": self.n,
            "source_weight": self.source_weight,
            "target_weight": self.target_weight,
            "source": self.source.iter().map(subset).collect::<Vec<_>>(),
            "target": self.target.iter().map(subset).collect::<Vec<_>>(),
            "matrix": rows,
        })
    }
}

/// Subsets of size `k`, increasing.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

fn check_weight(n: usize, r: i64) -> Result<usize> {
    if n > MAX_SUBSET_N {
        return Err(Error::input(format!("n={n} exceeds {MAX_SUBSET_N}")));
    }
    if r.abs() > n as i64 || (r + n as i64) % 2 != 0 {
        return Err(Error::input(format!("weight {r} does not occur for n={n}")));
    }
    Ok(((n as i64 + r) / 2) as usize)
}

/// `s(v) = sum_{p >= max(0, -r)} (-1)^p E^{(p)} F^{(r+p)} v` on `V_r`.
pub fn weyl_apply(v: &SubsetVector, r: i64) -> SubsetVector {
    let k = (v.n as i64 + r) / 2;
    let mut out = SubsetVector::zero(v.n);
    for p in 0.max(-r)..=(k - r) {
        let lowered = divided_power(Op::F, (r + p) as u32, v);
        let term = divided_power(Op::E, p as u32, &lowered);
        let sign = if p % 2 == 0 { Rational::one() } else { -Rational::one() };
        out = out.add(&term.scale(&sign));
    }
    out
}

pub fn weyl_s(n: usize, r: i64) -> Result<WeightMatrix> {
    let k = check_weight(n, r)?;
    let source = subsets_of_size(n, k);
    let target = subsets_of_size(n, n - k);
    let index: BTreeMap<u32, usize> = target.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut matrix = RatMatrix::zeros(target.len(), source.len());
    for (col, &s) in source.iter().enumerate() {
        let image = weyl_apply(&SubsetVector::basis(n, s), r);
        for (t, c) in image.terms() {
            let row = *index
                .get(&t)
                .ok_or_else(|| Error::Internal(format!("weyl image left V_{}", -r)))?;
            matrix.set(row, col, c.clone());
        }
    }
    Ok(WeightMatrix {
        n,
        source_weight: r,
        target_weight: -r,
        source,
        target,
        matrix,
    })
}

/// Full `2^n x 2^n` matrices of `e`, `f` and the assembled Weyl element.
pub fn full_matrices(n: usize) -> Result<(RatMatrix, RatMatrix, RatMatrix)> {
    let dim = 1usize << n;
    let mut e = RatMatrix::zeros(dim, dim);
    let mut f = RatMatrix::zeros(dim, dim);
    let mut s = RatMatrix::zeros(dim, dim);
    for col in 0..dim as u32 {
        let v = SubsetVector::basis(n, col);
        for (t, c) in e_subset(&v).terms() {
            e.set(t as usize, col as usize, c.clone());
        }
        for (t, c) in f_subset(&v).terms() {
            f.set(t as usize, col as usize, c.clone());
        }
    }
    for k in 0..=n {
        let r = 2 * k as i64 - n as i64;
        let block = weyl_s(n, r)?;
        for (ci, &src) in block.source.iter().enumerate() {
            for (ri, &tgt) in block.target.iter().enumerate() {
                s.set(tgt as usize, src as usize, block.matrix.get(ri, ci).clone());
            }
        }
    }
    Ok((e, f, s))
}

/// Invertibility of every block, `S e S^-1 = -f`, `S f S^-1 = -e`, and the
/// scalar by which `S^2` acts on each weight space.
pub fn weyl_conjugation_check(n: usize) -> Result<Check> {
    let name = format!("weyl n={n}");
    for k in 0..=n {
        let r = 2 * k as i64 - n as i64;
        let block = weyl_s(n, r)?;
        if block.matrix.inverse().is_none() {
            return Ok(Check::fail(name, format!("s is singular on V_{r}")));
        }
    }
    let (e, f, s) = full_matrices(n)?;
    let s_inv = s
        .inverse()
        .ok_or_else(|| Error::Internal("assembled S is singular".into()))?;
    if s.mul(&e).mul(&s_inv) != f.neg() {
        return Ok(Check::fail(name, "S e S^-1 != -f"));
    }
    if s.mul(&f).mul(&s_inv) != e.neg() {
        return Ok(Check::fail(name, "S f S^-1 != -e"));
    }
    let s2 = s.mul(&s);
    let mut signs = serde_json::Map::new();
    for k in 0..=n {
        let r = 2 * k as i64 - n as i64;
        let subsets = subsets_of_size(n, k);
        let first = s2.get(subsets[0] as usize, subsets[0] as usize).clone();
        let scalar = subsets.iter().all(|&a| {
            (0u32..1 << n).all(|b| {
                let v = s2.get(b as usize, a as usize);
                if b == a {
                    *v == first
                } else {
                    v.is_zero()
                }
            })
        });
        if !scalar || first.abs() != Rational::one() {
            return Ok(Check::fail(name, format!("S^2 is not +-1 on V_{r}")));
        }
        signs.insert(r.to_string(), json!(if first.is_positive() { 1 } else { -1 }));
    }
    Ok(Check::pass(name).with_data(json!({ "s_squared_sign": signs })))
}

/// Point-count Gaussian binomial: the sum of `q^{|p|}` over partitions `p`
/// in a `k x (n-k)` box.
pub fn gaussian_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::input(format!("gaussian binomial needs 0 <= k <= n, got ({n}, {k})")));
    }
    fn rec(parts_left: i64, max_part: i64, size: i64, out: &mut BTreeMap<i64, i64>) {
        if parts_left == 0 {
            *out.entry(size).or_default() += 1;
            return;
        }
        for part in 0..=max_part {
            rec(parts_left - 1, part, size + part, out);
        }
    }
    let mut counts = BTreeMap::new();
    rec(k, n - k, 0, &mut counts);
    Ok(LaurentPoly::from_terms(counts))
}

/// `q^{-k(n-k)}` times the Gaussian binomial in `q^2`: the bar-symmetric
/// normalization, comparable with `quantum_binomial`.
pub fn centered_gaussian_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    let g = gaussian_binomial(n, k)?;
    let shift = k * (n - k);
    Ok(LaurentPoly::from_terms(
        g.terms().map(|(e, c)| (2 * e - shift, c.clone())),
    ))
}

fn pivot_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets_of_size(n, k)
        .into_iter()
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Number of `k`-dimensional subspaces of `F_q^n`, counted by enumerating
/// reduced row echelon representatives.
pub fn grassmannian_count(k: usize, n: usize, q: u32) -> Result<u64> {
    let field = Field::new(q)?;
    if k > n || n > 8 {
        return Err(Error::input(format!("grassmannian count needs 0 <= k <= n <= 8, got k={k}, n={n}")));
    }
    let total = pivot_sets(n, k)
        .par_iter()
        .map(|pivots| count_echelon_cell(&field, pivots, n))
        .sum();
    Ok(total)
}

fn count_echelon_cell(field: &Field, pivots: &[usize], n: usize) -> u64 {
    let k = pivots.len();
    let free: Vec<(usize, usize)> = (0..k)
        .flat_map(|r| {
            (pivots[r] + 1..n)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (r, c))
        })
        .collect();
    let q = field.size() as u64;
    let cell = q.pow(free.len() as u32);
    if cell > ENUMERATION_LIMIT {
        return cell;
    }
    let mut base = vec![0u8; k * n];
    for (r, &p) in pivots.iter().enumerate() {
        base[r * n + p] = 1;
    }
    let mut count = 0;
    let mut digits = vec![0u8; free.len()];
    loop {
        let mut m = base.clone();
        for (&(r, c), &d) in free.iter().zip(&digits) {
            m[r * n + c] = d;
        }
        let mut reduced = m.clone();
        let found = field.rref(&mut reduced, k, n);
        if found == pivots && reduced == m {
            count += 1;
        }
        // next filling in base-q counting order
        let mut i = 0;
        while i < digits.len() {
            digits[i] += 1;
            if u64::from(digits[i]) < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            break;
        }
    }
    count
}

/// `dim H*(P^{k-1}) - dim H*(P^{n-k-1})`, from Poincaré polynomials at `q = 1`.
pub fn projective_space_defect(k: i64, n: i64) -> Result<i64> {
    if k < 0 || k > n {
        return Err(Error::input(format!("need 0 <= k <= n, got k={k}, n={n}")));
    }
    let poincare = |d: i64| LaurentPoly::from_terms((0..d).map(|j| (2 * j, 1)));
    let diff = &poincare(k) - &poincare(n - k);
    Ok(i64::try_from(diff.at_one()).expect("small"))
}
