use std::collections::{BTreeMap, HashSet};

use klr_workbench::exact_poly::LaurentPoly;
use klr_workbench::field::Field;
use klr_workbench::nilhecke;
use klr_workbench::root_data::{kostant_count, positive_roots, quantum_binomial, CartanDatum, RootVector};
use klr_workbench::sl2_models::{centered_gaussian_binomial, gaussian_binomial, grassmannian_count};
use num_bigint::BigInt;

/// Positive solutions of the Tits form `sum b_i^2 - sum over edges b_i b_j = 1`.
fn tits_roots(d: &CartanDatum, bound: u32) -> Vec<Vec<u32>> {
    let n = d.rank();
    let mut out = vec![];
    let total = (bound + 1).pow(n as u32);
    for idx in 1..total {
        let b: Vec<u32> = (0..n).map(|i| (idx / (bound + 1).pow(i as u32)) % (bound + 1)).collect();
        let sq: i64 = b.iter().map(|&x| i64::from(x * x)).sum();
        let cross: i64 = d.edges().iter().map(|&(i, j)| i64::from(b[i] * b[j])).sum();
        if sq - cross == 1 {
            out.push(b);
        }
    }
    out
}

fn multiset_count(roots: &[Vec<u32>], nu: &[u32]) -> u64 {
    // coin change over the roots, one root at a time
    let mut dp: BTreeMap<Vec<u32>, u64> = BTreeMap::from([(vec![0; nu.len()], 1)]);
    for r in roots {
        let mut next = dp.clone();
        let keys: Vec<Vec<u32>> = {
            let mut all = vec![];
            let mut frontier: Vec<Vec<u32>> = dp.keys().cloned().collect();
            while let Some(v) = frontier.pop() {
                let w: Vec<u32> = v.iter().zip(r).map(|(a, b)| a + b).collect();
                if w.iter().zip(nu).all(|(a, b)| a <= b) {
                    all.push(w.clone());
                    frontier.push(w);
                }
            }
            all.sort();
            all.dedup();
            all
        };
        for w in keys {
            let prev: Vec<u32> = w.iter().zip(r).map(|(a, b)| a - b).collect();
            let add = next.get(&prev).copied().unwrap_or(0);
            *next.entry(w).or_insert(0) += add;
        }
        dp = next;
    }
    dp.get(nu).copied().unwrap_or(0)
}

#[test]
fn positive_roots_match_tits_form() {
    for d in [CartanDatum::type_a(3), CartanDatum::type_d(4), CartanDatum::type_d(5), CartanDatum::type_e(6)] {
        let mut ours: Vec<Vec<u32>> = positive_roots(&d).unwrap().into_iter().map(|r| r.0).collect();
        let mut oracle = tits_roots(&d, 3);
        ours.sort();
        oracle.sort();
        assert_eq!(ours, oracle);
    }
}

#[test]
fn kostant_matches_coin_change() {
    for d in [CartanDatum::type_a(2), CartanDatum::type_a(3), CartanDatum::type_d(4)] {
        let roots = tits_roots(&d, 2);
        for nu in klr_workbench::root_data::root_vectors_up_to(d.rank(), 6) {
            assert_eq!(kostant_count(&d, &nu).unwrap(), multiset_count(&roots, &nu.0), "{:?}", nu.0);
        }
    }
    let a3 = CartanDatum::type_a(3);
    assert_eq!(kostant_count(&a3, &RootVector(vec![1, 1, 1])).unwrap(), 4);
}

/// Distinct spans of all `k`-tuples of vectors in `F_q^n` having dimension `k`.
fn subspace_count(k: usize, n: usize, q: u32) -> u64 {
    let f = Field::new(q).unwrap();
    let qq = q as usize;
    let vectors: Vec<Vec<u8>> = (0..qq.pow(n as u32))
        .map(|i| (0..n).map(|t| ((i / qq.pow(t as u32)) % qq) as u8).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut idx = vec![0usize; k];
    loop {
        let rows: Vec<u8> = idx.iter().flat_map(|&i| vectors[i].clone()).collect();
        if f.rank(rows.clone(), k, n) == k {
            let mut m = rows;
            f.rref(&mut m, k, n);
            seen.insert(m);
        }
        let mut t = 0;
        loop {
            if t == k {
                return seen.len() as u64;
            }
            idx[t] += 1;
            if idx[t] < vectors.len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

#[test]
fn grassmannian_counts_match_subspace_spans() {
    for q in [2, 3, 4] {
        for n in 0..=4 {
            for k in 0..=n {
                if (q as u64).pow((n * k) as u32) > 1 << 21 {
                    continue;
                }
                assert_eq!(grassmannian_count(k, n, q).unwrap(), subspace_count(k, n, q), "k={k} n={n} q={q}");
            }
        }
    }
}

#[test]
fn gaussian_identities() {
    for n in 0..=6i64 {
        for k in 0..=n {
            let g = gaussian_binomial(n, k).unwrap();
            assert_eq!(g.at_one(), BigInt::from(num_integer::binomial(n, k)));
            assert_eq!(centered_gaussian_binomial(n, k).unwrap(), quantum_binomial(n, k).unwrap());
            assert!(quantum_binomial(n, k).unwrap().is_bar_invariant());
        }
    }
    assert_eq!(gaussian_binomial(4, 2).unwrap(), "1+q+2*q^2+q^3+q^4".parse::<LaurentPoly>().unwrap());
}

#[test]
fn nil_hecke_basis_rank() {
    for n in 1..=3 {
        let (rank, count) = nilhecke::oracle_rank(n, 2, (n * (n - 1) / 2) as u32 + 2).unwrap();
        assert_eq!(rank, count, "n={n}");
    }
}
