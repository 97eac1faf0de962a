//! Normal-form rewriting for `R_nu`.
//!
//! Everything reduces to computing `psi_W e(j)` for an arbitrary word `W`:
//! non-reduced words are shortened with the quadratic relation, reduced
//! words are brought to the canonical reduced word with commutation and
//! braid moves. Dots pass through crossings with the dot-slide relation.
//! Both steps are memoized per (word, source sequence).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::convention::{RelationConvention, Square};
use super::element::KlrElement;
use crate::error::{Error, Result};
use crate::perm::{self, Perm};
use crate::root_data::CartanDatum;

/// A combination of `psi_w x^a e(j)` for one fixed source `j`.
pub(crate) type Lin = BTreeMap<(Perm, Vec<u32>), BigInt>;

fn lin_add(acc: &mut Lin, w: Perm, dots: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let key = (w, dots);
    let e = acc.entry(key.clone()).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// `acc += coeff * src * x^extra`.
fn lin_add_shifted(acc: &mut Lin, src: &Lin, coeff: &BigInt, extra: &[u32]) {
    for ((w, a), c) in src {
        let dots = a.iter().zip(extra).map(|(x, y)| x + y).collect();
        lin_add(acc, w.clone(), dots, c * coeff);
    }
}

fn unit(w: Perm) -> Lin {
    let m = w.len();
    let mut l = Lin::new();
    l.insert((w, vec![0; m]), BigInt::one());
    l
}

fn lin_sub(a: &Lin, b: &Lin) -> Lin {
    let mut out = a.clone();
    for ((w, d), c) in b {
        lin_add(&mut out, w.clone(), d.clone(), -c);
    }
    out
}

fn concat(parts: &[&[u8]]) -> Vec<u8> {
    parts.concat()
}

pub struct KlrEngine {
    datum: CartanDatum,
    conv: RelationConvention,
    nf_memo: RefCell<HashMap<(Vec<u8>, Vec<u8>), Rc<Lin>>>,
    dot_memo: RefCell<HashMap<(usize, Perm, Vec<u8>), Rc<Lin>>>,
}

impl KlrEngine {
    pub fn new(datum: &CartanDatum, conv: &RelationConvention) -> Self {
        assert_eq!(datum.rank(), conv.rank(), "convention rank");
        Self {
            datum: datum.clone(),
            conv: conv.clone(),
            nf_memo: RefCell::new(HashMap::new()),
            dot_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn convention(&self) -> &RelationConvention {
        &self.conv
    }

    /// Normal form of `psi_W e(j)`.
    pub(crate) fn nf_word(&self, word: &[u8], j: &[u8]) -> Rc<Lin> {
        let key = (word.to_vec(), j.to_vec());
        if let Some(hit) = self.nf_memo.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let m = j.len();
        let result = if word.is_empty() {
            unit(perm::identity(m))
        } else {
            // largest reduced suffix
            let mut b = perm::identity(m);
            let mut bad = None;
            for t in (0..word.len()).rev() {
                let k = word[t] as usize;
                if perm::is_left_descent(&b, k) {
                    bad = Some(t);
                    break;
                }
                b = perm::left_mul(k, &b);
            }
            match bad {
                None => self.nf_reduced(word, j, b),
                Some(t) => self.nf_nonreduced(word, t, j, b),
            }
        };
        let rc = Rc::new(result);
        self.nf_memo.borrow_mut().insert(key, Rc::clone(&rc));
        rc
    }

    /// `word[t]` is a left descent of `b = perm(word[t+1..])`.
    fn nf_nonreduced(&self, word: &[u8], t: usize, j: &[u8], b: Perm) -> Lin {
        let k = word[t] as usize;
        let head = &word[..t];
        let tail = &word[t + 1..];
        let sb = perm::left_mul(k, &b);
        let cs = perm::reduced_word(&sb);
        let kcs = concat(&[&[k as u8], &cs]);
        let above = perm::act(&sb, j);
        let mut out = Lin::new();

        // psi_k^2 on top of psi_{C(s_k b)} e(j)
        let base = unit(sb);
        let square = match self.conv.square(above[k], above[k + 1]) {
            Square::Zero => Lin::new(),
            Square::Identity => base,
            Square::Linear(s) => {
                let hi = self.left_dot(k + 1, &base, j);
                let lo = self.left_dot(k, &base, j);
                let mut d = lin_sub(&hi, &lo);
                if s < 0 {
                    d = d.into_iter().map(|(key, c)| (key, -c)).collect();
                }
                d
            }
        };
        for ((u, c), coeff) in &square {
            let w2 = concat(&[head, &perm::reduced_word(u)]);
            lin_add_shifted(&mut out, &self.nf_word(&w2, j), coeff, c);
        }

        // psi_tail differs from psi_{k C(s_k b)} by lower terms
        if tail != kcs.as_slice() {
            let diff = lin_sub(&self.nf_word(tail, j), &self.nf_word(&kcs, j));
            for ((u, c), coeff) in &diff {
                let w2 = concat(&[head, &[k as u8], &perm::reduced_word(u)]);
                lin_add_shifted(&mut out, &self.nf_word(&w2, j), coeff, c);
            }
        }
        out
    }

    /// `word` is a reduced word for `w`.
    fn nf_reduced(&self, word: &[u8], j: &[u8], w: Perm) -> Lin {
        let canonical = perm::reduced_word(&w);
        if canonical == word {
            return unit(w);
        }
        let d = canonical[0] as usize;
        let k = word[0] as usize;
        let mut out = Lin::new();
        if k == d {
            let sdw = perm::left_mul(d, &w);
            for ((u, c), coeff) in self.nf_word(&word[1..], j).iter() {
                if *u == sdw {
                    lin_add(&mut out, w.clone(), c.clone(), coeff.clone());
                } else {
                    let w2 = concat(&[&[d as u8], &perm::reduced_word(u)]);
                    lin_add_shifted(&mut out, &self.nf_word(&w2, j), coeff, c);
                }
            }
            return out;
        }

        let wp = perm::left_mul(k, &w);
        let (tail1, w2) = if k.abs_diff(d) >= 2 {
            let cv = perm::reduced_word(&perm::left_mul(d, &wp));
            (
                concat(&[&[d as u8], &cv]),
                concat(&[&[d as u8, k as u8], &cv]),
            )
        } else {
            let v = perm::left_mul(k, &perm::left_mul(d, &wp));
            let cv = perm::reduced_word(&v);
            let a = k.min(d);
            let m = perm::act(&v, j);
            let c = self.conv.braid_correction(m[a], m[a + 1], m[a + 2]);
            let coeff = if k == a + 1 { c } else { -c };
            if coeff != 0 {
                lin_add_shifted(&mut out, &unit(v), &BigInt::from(coeff), &vec![0; j.len()]);
            }
            (
                concat(&[&[d as u8, k as u8], &cv]),
                concat(&[&[d as u8, k as u8, d as u8], &cv]),
            )
        };
        lin_add_shifted(&mut out, &self.nf_word(&w2, j), &BigInt::one(), &vec![0; j.len()]);
        if word[1..] != tail1[..] {
            let diff = lin_sub(&self.nf_word(&word[1..], j), &self.nf_word(&tail1, j));
            for ((u, c), coeff) in &diff {
                let w3 = concat(&[&[k as u8], &perm::reduced_word(u)]);
                lin_add_shifted(&mut out, &self.nf_word(&w3, j), coeff, c);
            }
        }
        out
    }

    /// `x_p psi_{C(u)} e(j)`, with `p` a top position.
    fn dot_through(&self, p: usize, u: &Perm, j: &[u8]) -> Rc<Lin> {
        let key = (p, u.clone(), j.to_vec());
        if let Some(hit) = self.dot_memo.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let word = perm::reduced_word(u);
        let r = word.len();
        let mut suffix = vec![perm::identity(j.len()); r + 1];
        for t in (0..r).rev() {
            suffix[t] = perm::left_mul(word[t] as usize, &suffix[t + 1]);
        }
        let mut out = Lin::new();
        let mut pos = p;
        for t in 0..r {
            let k = word[t] as usize;
            let below = perm::act(&suffix[t + 1], j);
            if below[k] == below[k + 1] {
                let eps = if pos == k {
                    1
                } else if pos == k + 1 {
                    -1
                } else {
                    0
                };
                if eps != 0 {
                    let deleted = concat(&[&word[..t], &word[t + 1..]]);
                    lin_add_shifted(&mut out, &self.nf_word(&deleted, j), &BigInt::from(eps), &vec![0; j.len()]);
                }
            }
            if pos == k {
                pos = k + 1;
            } else if pos == k + 1 {
                pos = k;
            }
        }
        let mut dots = vec![0; j.len()];
        dots[pos] = 1;
        lin_add(&mut out, u.clone(), dots, BigInt::one());
        let rc = Rc::new(out);
        self.dot_memo.borrow_mut().insert(key, Rc::clone(&rc));
        rc
    }

    /// `x_p * lin`.
    fn left_dot(&self, p: usize, lin: &Lin, j: &[u8]) -> Lin {
        let mut out = Lin::new();
        for ((u, c), coeff) in lin {
            lin_add_shifted(&mut out, &self.dot_through(p, u, j), coeff, c);
        }
        out
    }

    /// Normal form of `psi_word e(j)` as an element.
    pub fn word_element(&self, word: &[u8], j: &[u8]) -> KlrElement {
        let nf = self.nf_word(word, j);
        self.lift(j, &nf)
    }

    fn lift(&self, j: &[u8], lin: &Lin) -> KlrElement {
        let nu = crate::root_data::Sequence(j.to_vec()).root_vector(self.datum.rank());
        let mut out = KlrElement::zero(nu);
        for ((w, d), c) in lin {
            out.add_term(j.to_vec(), w.clone(), d.clone(), c.clone());
        }
        out
    }

    /// Normal-form product `a * b` (`b` applied first).
    pub fn multiply(&self, a: &KlrElement, b: &KlrElement) -> Result<KlrElement> {
        if a.nu() != b.nu() {
            return Err(Error::Composition(format!(
                "cannot compose elements of R_nu for different nu: {:?} and {:?}",
                a.nu().0,
                b.nu().0
            )));
        }
        let mut by_source: BTreeMap<&Vec<u8>, Vec<(&Perm, &Vec<u32>, &BigInt)>> = BTreeMap::new();
        for ((s, w, d), c) in a.terms() {
            by_source.entry(s).or_default().push((w, d, c));
        }
        let mut per_source: BTreeMap<Vec<u8>, Lin> = BTreeMap::new();
        for ((j, v, beta), cb) in b.terms() {
            let target = perm::act(v, j);
            let Some(left_terms) = by_source.get(&target) else {
                continue;
            };
            let acc = per_source.entry(j.clone()).or_default();
            for &(w, alpha, ca) in left_terms {
                // x^alpha psi_v e(j)
                let mut cur = unit(v.clone());
                for (p, &k) in alpha.iter().enumerate() {
                    for _ in 0..k {
                        cur = self.left_dot(p, &cur, j);
                    }
                }
                let cw = perm::reduced_word(w);
                let coeff = ca * cb;
                for ((u, c), x) in &cur {
                    let word = concat(&[&cw, &perm::reduced_word(u)]);
                    let extra: Vec<u32> = c.iter().zip(beta).map(|(p, q)| p + q).collect();
                    lin_add_shifted(acc, &self.nf_word(&word, j), &(x * &coeff), &extra);
                }
            }
        }
        let mut out = KlrElement::zero(a.nu().clone());
        for (j, lin) in per_source {
            for ((w, d), c) in lin {
                out.add_term(j.clone(), w, d, c);
            }
        }
        Ok(out)
    }

    /// Product of a list of factors, leftmost first.
    pub fn product(&self, factors: &[KlrElement]) -> Result<KlrElement> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::input("empty product"))?;
        rest.iter().try_fold(first.clone(), |acc, f| self.multiply(&acc, f))
    }

    pub fn memo_sizes(&self) -> (usize, usize) {
        (self.nf_memo.borrow().len(), self.dot_memo.borrow().len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(d: &CartanDatum) -> KlrEngine {
        KlrEngine::new(d, &RelationConvention::default_for(d))
    }

    #[test]
    fn equal_labels_square_to_zero() {
        let a1 = CartanDatum::type_a(1);
        let e = engine(&a1);
        let psi = KlrElement::psi(1, &[0, 0], 0);
        assert!(e.multiply(&psi, &psi).unwrap().is_zero());
    }

    #[test]
    fn connected_labels_square_to_q() {
        let a2 = CartanDatum::type_a(2);
        let e = engine(&a2);
        // psi_1 e(2,1) psi_1 e(1,2) = (x_2 - x_1) e(1,2)
        let got = e
            .multiply(&KlrElement::psi(2, &[1, 0], 0), &KlrElement::psi(2, &[0, 1], 0))
            .unwrap();
        let want = KlrElement::x(2, &[0, 1], 1).sub(&KlrElement::x(2, &[0, 1], 0));
        assert_eq!(got, want);
    }

    #[test]
    fn orthogonal_labels_square_to_identity() {
        let d = CartanDatum::disconnected(2);
        let e = engine(&d);
        let got = e
            .multiply(&KlrElement::psi(2, &[0, 1], 0), &KlrElement::psi(2, &[1, 0], 0))
            .unwrap();
        assert_eq!(got, KlrElement::idempotent(2, &[1, 0]));
    }

    #[test]
    fn mismatched_idempotents_give_zero() {
        let a2 = CartanDatum::type_a(2);
        let e = engine(&a2);
        let got = e
            .multiply(&KlrElement::idempotent(2, &[0, 1]), &KlrElement::idempotent(2, &[1, 0]))
            .unwrap();
        assert!(got.is_zero());
        let err = e.multiply(&KlrElement::idempotent(2, &[0]), &KlrElement::idempotent(2, &[0, 1]));
        assert!(matches!(err, Err(Error::Composition(_))));
    }

    #[test]
    fn canonical_words_are_fixed_points() {
        let a1 = CartanDatum::type_a(1);
        let e = engine(&a1);
        let w0 = perm::longest(3);
        let nf = e.nf_word(&perm::reduced_word(&w0), &[0, 0, 0]);
        assert_eq!(*nf, unit(w0));
    }
}
