//! Relation verification and oracle cross-checks for `R_nu`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::convention::{RelationConvention, Square};
use super::element::{concat_embed, monomial_degree, KlrElement};
use super::engine::KlrEngine;
use super::oracle::{act_polynomial, psi_act, Summands};
use crate::error::{Error, Result};
use crate::exact_poly::{geometric_series, LaurentPoly, SeriesTrunc};
use crate::linalg::{SparseEchelon, SparseVec};
use crate::nilhecke::{self, NilHeckeElement};
use crate::perm::{self, Perm};
use crate::poly::{monomials_of_degree, monomials_up_to, Poly};
use crate::report::Check;
use crate::root_data::{seq, CartanDatum, RootVector, Sequence};

pub const MAX_VERIFY_STRANDS: u32 = 4;

#[derive(Clone, Copy, Debug)]
enum G {
    X(usize),
    Psi(usize),
}

type Side = Vec<(i64, Vec<G>)>;

struct Relation {
    name: String,
    src: Vec<u8>,
    lhs: Side,
    rhs: Side,
}

fn word_name(word: &[G]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|g| match g {
            G::X(p) => format!("x{}", p + 1),
            G::Psi(k) => format!("psi{}", k + 1),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn seq_name(datum: &CartanDatum, s: &[u8]) -> String {
    format!("e({})", datum.sequence_labels(&Sequence(s.to_vec())).join(","))
}

fn relations_on(conv: &RelationConvention, m: &[u8]) -> Vec<(String, Side, Side)> {
    use G::{Psi, X};
    let n = m.len();
    let mut rels: Vec<(String, Side, Side)> = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            rels.push(("dots commute".into(), vec![(1, vec![X(p), X(q)])], vec![(1, vec![X(q), X(p)])]));
        }
    }
    for k in 0..n.saturating_sub(1) {
        let rhs = match conv.square(m[k], m[k + 1]) {
            Square::Zero => vec![],
            Square::Identity => vec![(1, vec![])],
            Square::Linear(s) => vec![(s, vec![X(k + 1)]), (-s, vec![X(k)])],
        };
        rels.push(("quadratic".into(), vec![(1, vec![Psi(k), Psi(k)])], rhs));
        let delta: Side = if m[k] == m[k + 1] { vec![(1, vec![])] } else { vec![] };
        rels.push((
            "dot slide x_k psi_k".into(),
            vec![(1, vec![X(k), Psi(k)]), (-1, vec![Psi(k), X(k + 1)])],
            delta.clone(),
        ));
        rels.push((
            "dot slide psi_k x_k".into(),
            vec![(1, vec![Psi(k), X(k)]), (-1, vec![X(k + 1), Psi(k)])],
            delta,
        ));
        for p in 0..n {
            if p != k && p != k + 1 {
                rels.push(("distant dot".into(), vec![(1, vec![X(p), Psi(k)])], vec![(1, vec![Psi(k), X(p)])]));
            }
        }
        for l in k + 2..n.saturating_sub(1) {
            rels.push(("distant crossings".into(), vec![(1, vec![Psi(k), Psi(l)])], vec![(1, vec![Psi(l), Psi(k)])]));
        }
        if k + 2 < n {
            let c = conv.braid_correction(m[k], m[k + 1], m[k + 2]);
            let rhs = if c == 0 { vec![] } else { vec![(c, vec![])] };
            rels.push((
                "braid".into(),
                vec![(1, vec![Psi(k + 1), Psi(k), Psi(k + 1)]), (-1, vec![Psi(k), Psi(k + 1), Psi(k)])],
                rhs,
            ));
        }
    }
    rels
}

fn generator_product(engine: &KlrEngine, word: &[G], src: &[u8]) -> Result<KlrElement> {
    let rank = engine.datum().rank();
    let mut cur = src.to_vec();
    let mut acc = KlrElement::idempotent(rank, src);
    for g in word.iter().rev() {
        let f = match *g {
            G::X(p) => KlrElement::x(rank, &cur, p),
            G::Psi(k) => {
                let e = KlrElement::psi(rank, &cur, k);
                cur.swap(k, k + 1);
                e
            }
        };
        acc = engine.multiply(&f, &acc)?;
    }
    Ok(acc)
}

fn side_element(engine: &KlrEngine, side: &Side, src: &[u8]) -> Result<KlrElement> {
    let nu = Sequence(src.to_vec()).root_vector(engine.datum().rank());
    let mut out = KlrElement::zero(nu);
    for (c, word) in side {
        out = out.add(&generator_product(engine, word, src)?.scale(&BigInt::from(*c)));
    }
    Ok(out)
}

fn side_on_poly(datum: &CartanDatum, conv: &RelationConvention, side: &Side, src: &[u8], f: &Poly) -> Result<Summands> {
    let mut out = Summands::new();
    for (c, word) in side {
        let mut m = src.to_vec();
        let mut g = f.clone();
        for op in word.iter().rev() {
            match *op {
                G::X(p) => g = g.mul_var(p, 1),
                G::Psi(k) => {
                    let (m2, g2) = psi_act(datum, conv, k, &m, &g)?;
                    m = m2;
                    g = g2;
                }
            }
        }
        let e = out.entry(m).or_insert_with(|| Poly::zero(f.nvars()));
        *e = e.add(&g.scale(&BigInt::from(*c)));
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

fn check_strands(nu: &RootVector) -> Result<()> {
    if nu.height() > MAX_VERIFY_STRANDS {
        return Err(Error::input(format!(
            "relation verification supports |nu| <= {MAX_VERIFY_STRANDS}, got {}",
            nu.height()
        )));
    }
    Ok(())
}

/// Every defining relation instance on every `e(i)`, `i in Seq_nu`, must
/// reduce to zero both in normal form and under the polynomial action
/// (tested on all monomials of degree at most 3).
pub fn verify_relations(conv: &RelationConvention, datum: &CartanDatum, nu: &RootVector) -> Result<Check> {
    check_strands(nu)?;
    let name = format!("KLR relations nu={:?} convention={}", nu.0, conv.name());
    let seqs = seq(datum, nu);
    let m = nu.height() as usize;
    let inputs: Vec<Poly> = monomials_up_to(m, 3)
        .into_iter()
        .map(|a| Poly::monomial(a, BigInt::one()))
        .collect();
    let outcomes: Vec<Result<(usize, Option<String>)>> = seqs
        .par_iter()
        .map(|s| {
            let engine = KlrEngine::new(datum, conv);
            let mut count = 0;
            for (rel, lhs, rhs) in relations_on(conv, &s.0) {
                let r = Relation { name: rel, src: s.0.clone(), lhs, rhs };
                count += 1;
                let diff = side_element(&engine, &r.lhs, &r.src)?.sub(&side_element(&engine, &r.rhs, &r.src)?);
                let label = |word: &Side| {
                    word.iter()
                        .map(|(c, w)| format!("{c}*{}", word_name(w)))
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                let what = format!(
                    "{} relation {} = {} on {}",
                    r.name,
                    label(&r.lhs),
                    if r.rhs.is_empty() { "0".into() } else { label(&r.rhs) },
                    seq_name(datum, &r.src)
                );
                if !diff.is_zero() {
                    return Ok((count, Some(format!("normal form: {what}; difference {}", diff.to_json(datum)))));
                }
                for f in &inputs {
                    let l = side_on_poly(datum, conv, &r.lhs, &r.src, f)?;
                    let rr = side_on_poly(datum, conv, &r.rhs, &r.src, f)?;
                    if l != rr {
                        return Ok((count, Some(format!("polynomial oracle: {what}; input {f}"))));
                    }
                }
            }
            Ok((count, None))
        })
        .collect();
    let mut instances = 0;
    for o in outcomes {
        let (c, witness) = o?;
        instances += c;
        if let Some(w) = witness {
            return Ok(Check::fail(name, w));
        }
    }
    Ok(Check::pass(name).with_data(json!({ "sequences": seqs.len(), "instances": instances })))
}

/// `e(i) e(j) = delta_ij e(i)`, and `sum e(i)` is a two-sided identity on generators.
pub fn idempotent_calculus_check(conv: &RelationConvention, datum: &CartanDatum, nu: &RootVector) -> Result<Check> {
    let name = format!("idempotent calculus nu={:?}", nu.0);
    let engine = KlrEngine::new(datum, conv);
    let rank = datum.rank();
    let seqs = seq(datum, nu);
    for a in &seqs {
        for b in &seqs {
            let p = engine.multiply(&KlrElement::idempotent(rank, &a.0), &KlrElement::idempotent(rank, &b.0))?;
            let want = if a == b {
                KlrElement::idempotent(rank, &a.0)
            } else {
                KlrElement::zero(nu.clone())
            };
            if p != want {
                return Ok(Check::fail(name, format!("{} * {}", seq_name(datum, &a.0), seq_name(datum, &b.0))));
            }
        }
    }
    let one = KlrElement::identity(datum, nu);
    for s in &seqs {
        let m = s.len();
        let mut gens: Vec<KlrElement> = (0..m).map(|p| KlrElement::x(rank, &s.0, p)).collect();
        gens.extend((0..m.saturating_sub(1)).map(|k| KlrElement::psi(rank, &s.0, k)));
        for g in gens {
            if engine.multiply(&one, &g)? != g || engine.multiply(&g, &one)? != g {
                return Ok(Check::fail(name, format!("identity fails on {}", g.to_json(datum))));
            }
        }
    }
    Ok(Check::pass(name))
}

/// All normal-form monomials `psi_w x^a e(i)` with `|a| <= max_dots`.
pub fn basis_monomials(datum: &CartanDatum, nu: &RootVector, max_dots: u32) -> Vec<(Vec<u8>, Perm, Vec<u32>)> {
    let m = nu.height() as usize;
    let mut out = vec![];
    for s in seq(datum, nu) {
        for w in perm::all_perms(m) {
            for a in monomials_up_to(m, max_dots) {
                out.push((s.0.clone(), w.clone(), a));
            }
        }
    }
    out
}

fn mono(rank: usize, m: &(Vec<u8>, Perm, Vec<u32>)) -> KlrElement {
    KlrElement::monomial(rank, m.0.clone(), m.1.clone(), m.2.clone(), BigInt::one())
}

/// `nf(a b)` acts as `a` after `b` on every composable pair of monomials
/// carrying at most `max_dots` dots between them, tested on all input
/// monomials of degree at most `input_degree`.
pub fn oracle_consistency_check(
    conv: &RelationConvention,
    datum: &CartanDatum,
    nu: &RootVector,
    max_dots: u32,
    input_degree: u32,
) -> Result<Check> {
    let name = format!("normal form vs oracle nu={:?}", nu.0);
    let rank = datum.rank();
    let m = nu.height() as usize;
    let monos = basis_monomials(datum, nu, max_dots);
    let inputs: Vec<Poly> = monomials_up_to(m, input_degree)
        .into_iter()
        .map(|a| Poly::monomial(a, BigInt::one()))
        .collect();
    let mut by_source: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for (idx, mo) in monos.iter().enumerate() {
        by_source.entry(mo.0.clone()).or_default().push(idx);
    }
    let results: Vec<Result<(usize, Option<String>)>> = monos
        .par_iter()
        .map(|b| {
            let engine = KlrEngine::new(datum, conv);
            let target = perm::act(&b.1, &b.0);
            let eb = mono(rank, b);
            let mut pairs = 0;
            let b_images: Vec<Summands> = inputs
                .iter()
                .map(|f| act_polynomial(datum, conv, &eb, &Summands::from([(b.0.clone(), f.clone())])))
                .collect::<Result<_>>()?;
            let b_dots: u32 = b.2.iter().sum();
            for &ai in by_source.get(&target).map(Vec::as_slice).unwrap_or(&[]) {
                if monos[ai].2.iter().sum::<u32>() + b_dots > max_dots {
                    continue;
                }
                let ea = mono(rank, &monos[ai]);
                let ab = engine.multiply(&ea, &eb)?;
                pairs += 1;
                for (f, fb) in inputs.iter().zip(&b_images) {
                    let lhs = act_polynomial(datum, conv, &ab, &Summands::from([(b.0.clone(), f.clone())]))?;
                    let rhs = act_polynomial(datum, conv, &ea, fb)?;
                    if lhs != rhs {
                        return Ok((
                            pairs,
                            Some(format!(
                                "a={} b={} input {f}",
                                ea.to_json(datum),
                                eb.to_json(datum)
                            )),
                        ));
                    }
                }
            }
            Ok((pairs, None))
        })
        .collect();
    let mut pairs = 0;
    for r in results {
        let (p, w) = r?;
        pairs += p;
        if let Some(w) = w {
            return Ok(Check::fail(name, w));
        }
    }
    Ok(Check::pass(name).with_data(json!({ "pairs": pairs, "inputs": inputs.len() })))
}

fn random_monomial(
    datum: &CartanDatum,
    nu: &RootVector,
    rng: &mut ChaCha8Rng,
    max_dot: u32,
    source: Option<&[u8]>,
) -> (Vec<u8>, Perm, Vec<u32>) {
    let m = nu.height() as usize;
    let src = match source {
        Some(s) => s.to_vec(),
        None => seq(datum, nu).choose(rng).unwrap().0.clone(),
    };
    let perms = perm::all_perms(m);
    let w = perms.choose(rng).unwrap().clone();
    let dots = (0..m).map(|_| rng.gen_range(0..=max_dot)).collect();
    (src, w, dots)
}

/// `nf(a b)` against composed oracle actions on random monomial pairs.
pub fn random_oracle_check(
    conv: &RelationConvention,
    datum: &CartanDatum,
    nu: &RootVector,
    trials: usize,
    seed: u64,
    input_degree: u32,
) -> Result<Check> {
    let name = format!("random products vs oracle nu={:?}", nu.0);
    let rank = datum.rank();
    let engine = KlrEngine::new(datum, conv);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<Poly> = monomials_up_to(nu.height() as usize, input_degree)
        .into_iter()
        .map(|a| Poly::monomial(a, BigInt::one()))
        .collect();
    for _ in 0..trials {
        let b = random_monomial(datum, nu, &mut rng, 2, None);
        let a = random_monomial(datum, nu, &mut rng, 2, Some(&perm::act(&b.1, &b.0)));
        let (ea, eb) = (mono(rank, &a), mono(rank, &b));
        let ab = engine.multiply(&ea, &eb)?;
        for f in &inputs {
            let input = Summands::from([(b.0.clone(), f.clone())]);
            let lhs = act_polynomial(datum, conv, &ab, &input)?;
            let rhs = act_polynomial(datum, conv, &ea, &act_polynomial(datum, conv, &eb, &input)?)?;
            if lhs != rhs {
                return Ok(Check::fail(name, format!("a={} b={} input {f}", ea.to_json(datum), eb.to_json(datum))));
            }
        }
    }
    Ok(Check::pass(name).with_data(json!({ "trials": trials })))
}

/// Homogeneous products have homogeneous normal forms of the summed degree.
pub fn degree_additivity_check(
    conv: &RelationConvention,
    datum: &CartanDatum,
    nu: &RootVector,
    trials: usize,
    seed: u64,
) -> Result<Check> {
    let name = format!("degree additivity nu={:?}", nu.0);
    let rank = datum.rank();
    let engine = KlrEngine::new(datum, conv);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let b = random_monomial(datum, nu, &mut rng, 2, None);
        let a = random_monomial(datum, nu, &mut rng, 2, Some(&perm::act(&b.1, &b.0)));
        let want = monomial_degree(datum, &a.0, &a.1, &a.2) + monomial_degree(datum, &b.0, &b.1, &b.2);
        let ab = engine.multiply(&mono(rank, &a), &mono(rank, &b))?;
        let bad = ab
            .terms()
            .map(|((s, w, d), _)| monomial_degree(datum, s, w, d))
            .find(|&d| d != want);
        if let Some(bad) = bad {
            return Ok(Check::fail(name, format!("degree {bad} in a product of degree {want}")));
        }
    }
    Ok(Check::pass(name).with_data(json!({ "trials": trials })))
}

fn oracle_row(
    datum: &CartanDatum,
    conv: &RelationConvention,
    e: &KlrElement,
    src: &[u8],
    tests: &[Poly],
    coords: &mut BTreeMap<(usize, Vec<u8>, Vec<u32>), usize>,
) -> Result<SparseVec> {
    let mut row = SparseVec::new();
    for (ti, f) in tests.iter().enumerate() {
        let image = act_polynomial(datum, conv, e, &Summands::from([(src.to_vec(), f.clone())]))?;
        for (s, p) in image {
            for (ex, c) in p.terms() {
                let next = coords.len();
                let col = *coords.entry((ti, s.clone(), ex.clone())).or_insert(next);
                row.insert(col, c.clone().into());
            }
        }
    }
    Ok(row)
}

/// Normal-form monomials with at most `max_dots` dots are linearly
/// independent as operators: the oracle rank equals their number.
pub fn basis_rank_check(conv: &RelationConvention, datum: &CartanDatum, nu: &RootVector, max_dots: u32) -> Result<Check> {
    let name = format!("basis independence nu={:?} dots<={max_dots}", nu.0);
    let rank = datum.rank();
    let m = nu.height() as usize;
    let tests: Vec<Poly> = monomials_up_to(m, (m * m.saturating_sub(1) / 2) as u32 + 1)
        .into_iter()
        .map(|a| Poly::monomial(a, BigInt::one()))
        .collect();
    let monos = basis_monomials(datum, nu, max_dots);
    let mut coords = BTreeMap::new();
    let mut basis = SparseEchelon::new();
    for mo in &monos {
        let row = oracle_row(datum, conv, &mono(rank, mo), &mo.0, &tests, &mut coords)?;
        basis.insert(row);
    }
    let data = json!({ "monomials": monos.len(), "rank": basis.rank() });
    if basis.rank() == monos.len() {
        Ok(Check::pass(name).with_data(data))
    } else {
        Ok(Check::fail(name, format!("rank {} < {} monomials", basis.rank(), monos.len())).with_data(data))
    }
}

/// `sum over w with w.i = j of q^{deg psi_w e(i)}` times `(1 - q^2)^{-m}`, truncated.
pub fn graded_dim_hom(datum: &CartanDatum, i: &Sequence, j: &Sequence, cutoff: i64) -> Result<SeriesTrunc> {
    if cutoff > 20 {
        return Err(Error::input(format!("cutoff {cutoff} exceeds 20")));
    }
    if i.root_vector(datum.rank()) != j.root_vector(datum.rank()) {
        return Err(Error::input("sequences have different content"));
    }
    let m = i.len();
    let mut crossings = LaurentPoly::zero();
    for w in perm::all_perms(m) {
        if perm::act(&w, &i.0) == j.0 {
            crossings.add_term(monomial_degree(datum, &i.0, &w, &vec![0; m]), BigInt::one());
        }
    }
    if crossings.is_zero() {
        return Ok(SeriesTrunc::zero(cutoff));
    }
    let lo = crossings.min_exp().unwrap_or(0).min(0);
    let dots = geometric_series(2, (cutoff - lo).max(0)).pow(m as u32);
    let full = SeriesTrunc::from_poly(&crossings, cutoff).mul(&dots);
    Ok(SeriesTrunc::from_poly(&full.truncated(), cutoff))
}

/// Compares every coefficient of `graded_dim_hom(i, j)` up to `cutoff` with
/// the oracle rank of the monomials of that degree.
pub fn graded_dim_rank_check(
    conv: &RelationConvention,
    datum: &CartanDatum,
    i: &Sequence,
    j: &Sequence,
    cutoff: i64,
) -> Result<Check> {
    let name = format!(
        "graded dim Hom({} -> {}) up to q^{cutoff}",
        seq_name(datum, &i.0),
        seq_name(datum, &j.0)
    );
    let series = graded_dim_hom(datum, i, j, cutoff)?;
    let rank = datum.rank();
    let m = i.len();
    let tests: Vec<Poly> = monomials_up_to(m, (m * m.saturating_sub(1) / 2) as u32 + 1)
        .into_iter()
        .map(|a| Poly::monomial(a, BigInt::one()))
        .collect();
    let mut by_degree: BTreeMap<i64, Vec<KlrElement>> = BTreeMap::new();
    for w in perm::all_perms(m) {
        if perm::act(&w, &i.0) != j.0 {
            continue;
        }
        let base = monomial_degree(datum, &i.0, &w, &vec![0; m]);
        let mut dot_deg = 0u32;
        while base + 2 * i64::from(dot_deg) <= cutoff {
            for a in monomials_of_degree(m, dot_deg) {
                by_degree
                    .entry(base + 2 * i64::from(dot_deg))
                    .or_default()
                    .push(KlrElement::monomial(rank, i.0.clone(), w.clone(), a, BigInt::one()));
            }
            dot_deg += 1;
        }
    }
    let mut table = vec![];
    let lowest = by_degree.keys().next().copied().unwrap_or(0).min(0);
    for d in lowest..=cutoff {
        let elems = by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[]);
        let mut coords = BTreeMap::new();
        let mut basis = SparseEchelon::new();
        for e in elems {
            basis.insert(oracle_row(datum, conv, e, &i.0, &tests, &mut coords)?);
        }
        let coeff = series.coeff(d);
        table.push(json!([d, basis.rank(), elems.len()]));
        if BigInt::from(basis.rank()) != coeff || elems.len() != basis.rank() {
            return Ok(Check::fail(
                name,
                format!("degree {d}: series {coeff}, monomials {}, oracle rank {}", elems.len(), basis.rank()),
            ));
        }
    }
    Ok(Check::pass(name).with_data(json!({ "series": series.to_string(), "degree_rank_count": table })))
}

fn klr_to_nilhecke(e: &KlrElement) -> NilHeckeElement {
    let n = e.strands();
    let mut out = NilHeckeElement::zero(n);
    for ((_, w, d), c) in e.terms() {
        out.add_term(w.clone(), d.clone(), c.clone());
    }
    out
}

/// For the one-vertex quiver, `x_k -> x_k`, `psi_k -> t_k` intertwines the
/// two normal-form products. Exhaustive for `n <= 2` (dots at most 2 per
/// strand), random pairs of sums for larger `n`.
pub fn a1_specialization_check(n: usize, trials: usize, seed: u64) -> Result<Check> {
    if n == 0 || n > 3 {
        return Err(Error::input(format!("A1 specialization supports 1 <= n <= 3, got {n}")));
    }
    let name = format!("A1 specialization n={n}");
    let datum = CartanDatum::type_a(1);
    let conv = RelationConvention::default_for(&datum);
    let engine = KlrEngine::new(&datum, &conv);
    let src = vec![0u8; n];
    let compare = |a: &KlrElement, b: &KlrElement| -> Result<Option<String>> {
        let klr = klr_to_nilhecke(&engine.multiply(a, b)?);
        let nh = nilhecke::multiply(&klr_to_nilhecke(a), &klr_to_nilhecke(b))?;
        Ok((klr != nh).then(|| format!("a={} b={}", a.to_json(&datum), b.to_json(&datum))))
    };
    let mut pairs = 0;
    if n <= 2 {
        let mut monos = vec![];
        for w in perm::all_perms(n) {
            for a in monomials_up_to(n, 2 * n as u32) {
                if a.iter().all(|&x| x <= 2) {
                    monos.push(KlrElement::monomial(1, src.clone(), w.clone(), a, BigInt::one()));
                }
            }
        }
        for a in &monos {
            for b in &monos {
                pairs += 1;
                if let Some(w) = compare(a, b)? {
                    return Ok(Check::fail(name, w));
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nu = RootVector(vec![n as u32]);
        let random_sum = |rng: &mut ChaCha8Rng| {
            let mut e = KlrElement::zero(nu.clone());
            for _ in 0..rng.gen_range(1..=3) {
                let (s, w, d) = random_monomial(&datum, &nu, rng, 2, None);
                e.add_term(s, w, d, BigInt::from(rng.gen_range(-3i64..=3)));
            }
            e
        };
        for _ in 0..trials {
            let a = random_sum(&mut rng);
            let b = random_sum(&mut rng);
            pairs += 1;
            if let Some(w) = compare(&a, &b)? {
                return Ok(Check::fail(name, w));
            }
        }
    }
    Ok(Check::pass(name).with_data(json!({ "pairs": pairs })))
}

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` on random monomials.
pub fn concat_homomorphism_check(
    conv: &RelationConvention,
    datum: &CartanDatum,
    mu: &RootVector,
    nu: &RootVector,
    trials: usize,
    seed: u64,
) -> Result<Check> {
    let name = format!("concatenation is multiplicative mu={:?} nu={:?}", mu.0, nu.0);
    let rank = datum.rank();
    let engine = KlrEngine::new(datum, conv);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let c = random_monomial(datum, mu, &mut rng, 1, None);
        let a = random_monomial(datum, mu, &mut rng, 1, Some(&perm::act(&c.1, &c.0)));
        let d = random_monomial(datum, nu, &mut rng, 1, None);
        let b = random_monomial(datum, nu, &mut rng, 1, Some(&perm::act(&d.1, &d.0)));
        let (a, b, c, d) = (mono(rank, &a), mono(rank, &b), mono(rank, &c), mono(rank, &d));
        let lhs = engine.multiply(&concat_embed(&a, &b), &concat_embed(&c, &d))?;
        let rhs = concat_embed(&engine.multiply(&a, &c)?, &engine.multiply(&b, &d)?);
        if lhs != rhs {
            return Ok(Check::fail(name, format!("a={} b={}", a.to_json(datum), b.to_json(datum))));
        }
    }
    Ok(Check::pass(name).with_data(json!({ "trials": trials })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_small() {
        let a1 = CartanDatum::type_a(1);
        let c = RelationConvention::default_for(&a1);
        assert!(verify_relations(&c, &a1, &RootVector(vec![3])).unwrap().passed);
        let a2 = CartanDatum::type_a(2);
        let c = RelationConvention::default_for(&a2);
        let r = verify_relations(&c, &a2, &RootVector(vec![1, 2])).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn flipped_braid_sign_fails() {
        let a2 = CartanDatum::type_a(2);
        let c = RelationConvention::flipped_braid(&a2);
        let r = verify_relations(&c, &a2, &RootVector(vec![1, 2])).unwrap();
        assert!(!r.passed);
        assert!(r.witness.unwrap().contains("braid"));
    }

    #[test]
    fn graded_dim_examples() {
        let a1 = CartanDatum::type_a(1);
        let s = graded_dim_hom(&a1, &Sequence(vec![0]), &Sequence(vec![0]), 6).unwrap();
        assert_eq!(s.truncated().to_string(), "1+q^2+q^4+q^6");
        let a2 = CartanDatum::type_a(2);
        let s = graded_dim_hom(&a2, &Sequence(vec![0, 1]), &Sequence(vec![1, 0]), 5).unwrap();
        assert_eq!(s.truncated().to_string(), "q+2*q^3+3*q^5");
        let s = graded_dim_hom(&a2, &Sequence(vec![0, 1]), &Sequence(vec![0, 1]), 4).unwrap();
        assert_eq!(s.coeff(0), BigInt::one());
    }

    #[test]
    fn a1_small() {
        assert!(a1_specialization_check(1, 0, 0).unwrap().passed);
        assert!(a1_specialization_check(2, 0, 0).unwrap().passed);
    }
}
