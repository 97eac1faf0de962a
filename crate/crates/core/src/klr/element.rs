use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact_poly::{bigint_from_json, bigint_to_json};
use crate::perm::{self, Perm};
use crate::root_data::{seq, CartanDatum, RootVector};

/// `(source sequence, w, dots)` standing for `psi_w x^a e(i)`.
pub type Monomial = (Vec<u8>, Perm, Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KlrElement {
    nu: RootVector,
    terms: BTreeMap<Monomial, BigInt>,
}

/// `2|a| - sum over inversions p < q of w of <alpha_{i_p}, alpha_{i_q}>`.
pub fn monomial_degree(datum: &CartanDatum, src: &[u8], w: &[u8], dots: &[u32]) -> i64 {
    let mut d = 2 * dots.iter().map(|&x| i64::from(x)).sum::<i64>();
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            if w[p] > w[q] {
                d -= datum.a(src[p] as usize, src[q] as usize);
            }
        }
    }
    d
}

impl KlrElement {
    pub fn zero(nu: RootVector) -> Self {
        Self {
            nu,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(rank: usize, src: Vec<u8>, w: Perm, dots: Vec<u32>, coeff: BigInt) -> Self {
        assert_eq!(w.len(), src.len(), "permutation size");
        assert_eq!(dots.len(), src.len(), "dot vector size");
        let nu = crate::root_data::Sequence(src.clone()).root_vector(rank);
        let mut e = Self::zero(nu);
        e.add_term(src, w, dots, coeff);
        e
    }

    pub fn idempotent(rank: usize, src: &[u8]) -> Self {
        let m = src.len();
        Self::monomial(rank, src.to_vec(), perm::identity(m), vec![0; m], BigInt::one())
    }

    /// `x_p e(i)`.
    pub fn x(rank: usize, src: &[u8], p: usize) -> Self {
        let m = src.len();
        let mut dots = vec![0; m];
        dots[p] = 1;
        Self::monomial(rank, src.to_vec(), perm::identity(m), dots, BigInt::one())
    }

    /// `psi_k e(i)`.
    pub fn psi(rank: usize, src: &[u8], k: usize) -> Self {
        let m = src.len();
        Self::monomial(rank, src.to_vec(), perm::from_word(m, &[k as u8]), vec![0; m], BigInt::one())
    }

    /// `sum over i in Seq_nu of e(i)`.
    pub fn identity(datum: &CartanDatum, nu: &RootVector) -> Self {
        let mut e = Self::zero(nu.clone());
        for s in seq(datum, nu) {
            let m = s.len();
            e.add_term(s.0, perm::identity(m), vec![0; m], BigInt::one());
        }
        e
    }

    pub fn nu(&self) -> &RootVector {
        &self.nu
    }

    pub fn strands(&self) -> usize {
        self.nu.height() as usize
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, src: Vec<u8>, w: Perm, dots: Vec<u32>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (src, w, dots);
        let e = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((s, w, a), c) in &other.terms {
            out.add_term(s.clone(), w.clone(), a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nu.clone());
        for ((s, w, a), x) in &self.terms {
            out.add_term(s.clone(), w.clone(), a.clone(), x * c);
        }
        out
    }

    /// Common degree of all terms, if any.
    pub fn homogeneous_degree(&self, datum: &CartanDatum) -> Option<i64> {
        let mut it = self
            .terms
            .keys()
            .map(|(s, w, a)| monomial_degree(datum, s, w, a));
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn to_json(&self, datum: &CartanDatum) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((s, w, a), c)| {
                json!({
                    "idem": s.iter().map(|&v| datum.label(v as usize)).collect::<Vec<_>>(),
                    "perm": w.iter().map(|&x| x + 1).collect::<Vec<_>>(),
                    "dots": a,
                    "coeff": bigint_to_json(c),
                })
            })
            .collect();
        json!({ "nu": datum.root_vector_to_json(&self.nu), "terms": terms })
    }

    pub fn from_json(datum: &CartanDatum, v: &Value) -> Result<Self> {
        let nu = datum.root_vector_from_json(&v["nu"])?;
        let m = nu.height() as usize;
        let terms = v["terms"]
            .as_array()
            .ok_or_else(|| Error::input("KLR element needs a \"terms\" array"))?;
        let mut out = Self::zero(nu.clone());
        for t in terms {
            let idem = t["idem"]
                .as_array()
                .ok_or_else(|| Error::input("idem must be an array"))?
                .iter()
                .map(|x| {
                    let label = match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    datum.vertex(&label).map(|i| i as u8)
                })
                .collect::<Result<Vec<u8>>>()?;
            let w: Vec<u8> = serde_json::from_value(t["perm"].clone())
                .map_err(|e| Error::input(format!("perm: {e}")))?;
            let dots: Vec<u32> = serde_json::from_value(t["dots"].clone())
                .map_err(|e| Error::input(format!("dots: {e}")))?;
            let mut sorted = w.clone();
            sorted.sort_unstable();
            if idem.len() != m || dots.len() != m || sorted != (1..=m as u8).collect::<Vec<_>>() {
                return Err(Error::input("term shape does not match nu"));
            }
            if crate::root_data::Sequence(idem.clone()).root_vector(datum.rank()) != nu {
                return Err(Error::input("idempotent sequence is not in Seq_nu"));
            }
            out.add_term(idem, w.iter().map(|x| x - 1).collect(), dots, bigint_from_json(&t["coeff"])?);
        }
        Ok(out)
    }
}

/// Horizontal concatenation `R_mu x R_nu -> R_{mu+nu}`: `a` on the left strands.
pub fn concat_embed(a: &KlrElement, b: &KlrElement) -> KlrElement {
    let shift = a.strands();
    let mut out = KlrElement::zero(a.nu.add(&b.nu));
    for ((s1, w1, d1), c1) in &a.terms {
        for ((s2, w2, d2), c2) in &b.terms {
            let src = [s1.as_slice(), s2.as_slice()].concat();
            let mut w = w1.clone();
            w.extend(w2.iter().map(|&x| x + shift as u8));
            let dots = [d1.as_slice(), d2.as_slice()].concat();
            out.add_term(src, w, dots, c1 * c2);
        }
    }
    out
}
