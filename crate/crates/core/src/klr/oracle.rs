//! The polynomial representation of `R_nu` on `sum over i of k[x_1..x_m] e(i)`.
//!
//! `x_p` multiplies. `psi_k` acts by the divided difference on equal labels
//! and by swapping variables and summands on unequal labels, multiplied by
//! `Q_ab(x_k, x_{k+1})` when passing from `(a, b)` to `(b, a)` against the
//! arrow `b -> a`. This is independent of the rewriting engine.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::convention::RelationConvention;
use super::element::KlrElement;
use crate::error::Result;
use crate::perm;
use crate::poly::Poly;
use crate::root_data::CartanDatum;

/// A vector of the representation: sequence -> polynomial.
pub type Summands = BTreeMap<Vec<u8>, Poly>;

pub(crate) fn psi_act(
    datum: &CartanDatum,
    conv: &RelationConvention,
    k: usize,
    m: &[u8],
    f: &Poly,
) -> Result<(Vec<u8>, Poly)> {
    let (a, b) = (m[k], m[k + 1]);
    if a == b {
        return Ok((m.to_vec(), f.divided_difference(k)?));
    }
    let mut sm = m.to_vec();
    sm.swap(k, k + 1);
    let swapped = f.swap_vars(k);
    let (a, b) = (a as usize, b as usize);
    if !conv.connected(a, b) || datum.has_arrow(a, b) {
        return Ok((sm, swapped));
    }
    // arrow b -> a: multiply by Q_ba(x_k, x_{k+1}) = sign (x_{k+1} - x_k)
    let n = f.nvars();
    let lin = Poly::var(n, k + 1)
        .sub(&Poly::var(n, k))
        .scale(&BigInt::from(conv.q_sign(b, a)));
    Ok((sm, lin.mul(&swapped)))
}

/// Applies `a` to `input`.
pub fn act_polynomial(
    datum: &CartanDatum,
    conv: &RelationConvention,
    a: &KlrElement,
    input: &Summands,
) -> Result<Summands> {
    let mut out = Summands::new();
    for ((src, w, dots), c) in a.terms() {
        let Some(f) = input.get(src) else {
            continue;
        };
        let mut g = f.mul(&Poly::monomial(dots.clone(), BigInt::one()));
        let mut m = src.clone();
        for &k in perm::reduced_word(w).iter().rev() {
            let (m2, g2) = psi_act(datum, conv, k as usize, &m, &g)?;
            m = m2;
            g = g2;
        }
        debug_assert_eq!(m, perm::act(w, src));
        let entry = out.entry(m).or_insert_with(|| Poly::zero(f.nvars()));
        *entry = entry.add(&g.scale(c));
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}
