//! Permutations in one-line form, 0-indexed: `w[p] = w(p)`.
//!
//! Composition is `(uv)(p) = u(v(p))`. A word `(k_1, ..., k_r)` denotes the
//! product `s_{k_1} ... s_{k_r}`, where `s_k` swaps `k` and `k+1`.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn is_identity(w: &[u8]) -> bool {
    w.iter().enumerate().all(|(p, &v)| p == v as usize)
}

pub fn compose(u: &[u8], v: &[u8]) -> Perm {
    v.iter().map(|&x| u[x as usize]).collect()
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut inv = vec![0u8; w.len()];
    for (p, &x) in w.iter().enumerate() {
        inv[x as usize] = p as u8;
    }
    inv
}

/// Number of inversions.
pub fn length(w: &[u8]) -> usize {
    let mut count = 0;
    for p in 0..w.len() {
        for q in p + 1..w.len() {
            if w[p] > w[q] {
                count += 1;
            }
        }
    }
    count
}

pub fn from_word(n: usize, word: &[u8]) -> Perm {
    let mut w = identity(n);
    for &k in word {
        w.swap(k as usize, k as usize + 1);
    }
    w
}

/// `k` is a left descent of `w` when `l(s_k w) < l(w)`.
pub fn is_left_descent(w: &[u8], k: usize) -> bool {
    let pos = |v: usize| w.iter().position(|&x| x as usize == v).unwrap();
    pos(k) > pos(k + 1)
}

/// `s_k w`: swaps the values `k` and `k+1`.
pub fn left_mul(k: usize, w: &[u8]) -> Perm {
    w.iter()
        .map(|&x| match x as usize {
            v if v == k => (k + 1) as u8,
            v if v == k + 1 => k as u8,
            _ => x,
        })
        .collect()
}

/// `w s_k`: swaps the positions `k` and `k+1`.
pub fn right_mul(w: &[u8], k: usize) -> Perm {
    let mut out = w.to_vec();
    out.swap(k, k + 1);
    out
}

/// Lexicographically smallest reduced word.
pub fn reduced_word(w: &[u8]) -> Vec<u8> {
    let mut cur = w.to_vec();
    let mut word = Vec::with_capacity(length(w));
    'outer: loop {
        for k in 0..cur.len().saturating_sub(1) {
            if is_left_descent(&cur, k) {
                word.push(k as u8);
                cur = left_mul(k, &cur);
                continue 'outer;
            }
        }
        break;
    }
    word
}

pub fn is_reduced(n: usize, word: &[u8]) -> bool {
    length(&from_word(n, word)) == word.len()
}

pub fn longest(n: usize) -> Perm {
    (0..n as u8).rev().collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Moves the entry at position `p` to position `w(p)`.
pub fn act<T: Clone>(w: &[u8], items: &[T]) -> Vec<T> {
    let mut out = items.to_vec();
    for (p, item) in items.iter().enumerate() {
        out[w[p] as usize] = item.clone();
    }
    out
}

/// Block shift `w ↦ id_offset × w`, padded to `total` strands.
pub fn shift(w: &[u8], offset: usize) -> Perm {
    (0..offset as u8).chain(w.iter().map(|&x| x + offset as u8)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_products() {
        assert_eq!(from_word(3, &[0]), vec![1, 0, 2]);
        // s_0 s_1: p -> s_0(s_1(p))
        assert_eq!(from_word(3, &[0, 1]), compose(&from_word(3, &[0]), &from_word(3, &[1])));
        assert_eq!(from_word(3, &[0, 1, 0]), longest(3));
        assert_eq!(from_word(3, &[1, 0, 1]), longest(3));
    }

    #[test]
    fn reduced_words_are_lex_minimal() {
        for n in 1..=5 {
            for w in all_perms(n) {
                let word = reduced_word(&w);
                assert_eq!(from_word(n, &word), w);
                assert_eq!(word.len(), length(&w));
            }
        }
        assert_eq!(reduced_word(&longest(3)), vec![0, 1, 0]);
        assert_eq!(reduced_word(&longest(4)), vec![0, 1, 0, 2, 1, 0]);
    }

    #[test]
    fn left_and_right_multiplication() {
        for w in all_perms(4) {
            for k in 0..3 {
                let s = from_word(4, &[k as u8]);
                assert_eq!(left_mul(k, &w), compose(&s, &w));
                assert_eq!(right_mul(&w, k), compose(&w, &s));
                assert_eq!(
                    is_left_descent(&w, k),
                    length(&left_mul(k, &w)) < length(&w)
                );
            }
        }
    }

    #[test]
    fn action_is_a_left_action() {
        let items = vec!['a', 'b', 'c', 'd'];
        for u in all_perms(4) {
            for v in all_perms(4) {
                assert_eq!(act(&compose(&u, &v), &items), act(&u, &act(&v, &items)));
            }
        }
    }

    #[test]
    fn perm_count() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(0).len(), 1);
    }
}
