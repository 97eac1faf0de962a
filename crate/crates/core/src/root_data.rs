//! Cartan and quiver combinatorics for simply-laced types: the pairing on
//! simple roots, positive roots, Kostant partition counts, sequences of
//! simple roots, weights, and quantum integers and binomials.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact_poly::LaurentPoly;

/// Largest number of positive roots in a finite simply-laced type (E8).
const MAX_POSITIVE_ROOTS: usize = 120;

/// A simply-laced Cartan datum presented by an oriented Dynkin diagram
/// (the quiver `Q`). Vertices are internally indexed `0..rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

impl CartanDatum {
    /// Builds a datum from vertex labels and oriented edges `(source, target)`.
    /// Loops and multiple edges between the same pair are rejected.
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        if n > 64 {
            return Err(Error::input("at most 64 vertices are supported"));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::input("duplicate vertex label"));
        }
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            if i >= n || j >= n {
                return Err(Error::input(format!("edge ({i}, {j}) references an unknown vertex")));
            }
            if i == j {
                return Err(Error::input(format!("loop at vertex {}", labels[i])));
            }
            if matrix[i][j] != 0 {
                return Err(Error::input(format!(
                    "multiple edges between {} and {}",
                    labels[i], labels[j]
                )));
            }
            matrix[i][j] = -1;
            matrix[j][i] = -1;
        }
        Ok(Self { labels, edges, matrix })
    }

    fn numbered(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::new(labels, edges).expect("well-formed built-in datum")
    }

    /// `A_n` with edges `i -> i+1`.
    pub fn type_a(n: usize) -> Self {
        Self::numbered(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// `D_n` (n >= 4): a path `1 - ... - (n-2)` with `n-1` and `n` both
    /// attached to `n-2`.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 4);
        let mut edges: Vec<(usize, usize)> = (1..n - 2).map(|i| (i - 1, i)).collect();
        edges.push((n - 3, n - 2));
        edges.push((n - 3, n - 1));
        Self::numbered(n, edges)
    }

    /// `E_n` (n in 6..=8): a path `1 - ... - (n-1)` with `n` attached to `3`.
    pub fn type_e(n: usize) -> Self {
        assert!((6..=8).contains(&n));
        let mut edges: Vec<(usize, usize)> = (1..n - 1).map(|i| (i - 1, i)).collect();
        edges.push((2, n - 1));
        Self::numbered(n, edges)
    }

    /// Disjoint union of `count` copies of `A_1`.
    pub fn disconnected(count: usize) -> Self {
        Self::numbered(count, vec![])
    }

    /// Same vertices, edges reversed according to `flip` (bit `k` flips edge `k`).
    pub fn reoriented(&self, flip: u64) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| if flip >> k & 1 == 1 { (j, i) } else { (i, j) })
            .collect();
        Self {
            labels: self.labels.clone(),
            edges,
            matrix: self.matrix.clone(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: QuiverFile =
            serde_json::from_str(s).map_err(|e| Error::input(format!("quiver file: {e}")))?;
        let index: HashMap<&str, usize> = file
            .vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.as_str(), k))
            .collect();
        let mut edges = Vec::new();
        for [a, b] in &file.edges {
            let i = *index
                .get(a.as_str())
                .ok_or_else(|| Error::input(format!("edge uses unknown vertex {a:?}")))?;
            let j = *index
                .get(b.as_str())
                .ok_or_else(|| Error::input(format!("edge uses unknown vertex {b:?}")))?;
            edges.push((i, j));
        }
        Self::new(file.vertices.clone(), edges)
    }

    pub fn to_json(&self) -> Value {
        let file = QuiverFile {
            vertices: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| [self.labels[i].clone(), self.labels[j].clone()])
                .collect(),
        };
        serde_json::to_value(file).expect("serializable")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::input(format!("unknown vertex {label:?}")))
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::input(format!("vertex index {i} out of range")))
        }
    }

    /// `<alpha_i, alpha_j>`: 2 on the diagonal, -1 for joined vertices, 0 otherwise.
    pub fn pairing(&self, i: usize, j: usize) -> Result<i64> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(self.matrix[i][j])
    }

    /// Unchecked pairing for hot paths.
    pub(crate) fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    /// Whether the quiver has the oriented edge `i -> j`.
    pub fn has_arrow(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// Connected components, each as a sorted list of vertices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in 0..n {
                    if self.matrix[v][w] == -1 && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Names the ADE type of every connected component, or fails if some
    /// component is not a finite-type Dynkin diagram.
    pub fn finite_type(&self) -> Result<Vec<String>> {
        self.components()
            .iter()
            .map(|comp| self.classify_component(comp))
            .collect()
    }

    pub fn is_finite_type(&self) -> bool {
        self.finite_type().is_ok()
    }

    fn classify_component(&self, comp: &[usize]) -> Result<String> {
        let n = comp.len();
        let neighbours = |v: usize| comp.iter().copied().filter(move |&w| self.matrix[v][w] == -1);
        let edge_count: usize = comp.iter().map(|&v| neighbours(v).count()).sum::<usize>() / 2;
        let unsupported =
            |why: &str| Error::UnsupportedType(format!("component {:?} {why}", self.comp_labels(comp)));
        if edge_count != n - 1 {
            return Err(unsupported("contains a cycle"));
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| neighbours(v).count() > 2).collect();
        match branch.as_slice() {
            [] => Ok(format!("A{n}")),
            [center] => {
                if neighbours(*center).count() != 3 {
                    return Err(unsupported("has a vertex of degree above 3"));
                }
                let mut arms: Vec<usize> = neighbours(*center)
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (*center, start, 1);
                        loop {
                            let next: Vec<usize> = neighbours(cur).filter(|&w| w != prev).collect();
                            match next.as_slice() {
                                [] => break len,
                                [w] => {
                                    prev = cur;
                                    cur = *w;
                                    len += 1;
                                }
                                _ => break usize::MAX,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Ok(format!("D{n}")),
                    [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(format!("E{n}")),
                    _ => Err(unsupported("is not of finite type")),
                }
            }
            _ => Err(unsupported("has more than one branch vertex")),
        }
    }

    fn comp_labels(&self, comp: &[usize]) -> Vec<&str> {
        comp.iter().map(|&v| self.label(v)).collect()
    }

    pub fn ensure_finite_type(&self) -> Result<()> {
        self.finite_type().map(|_| ())
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        RootVector(v)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Weight(v)
    }

    /// The weight `sum_j beta_j alpha_j` written in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| beta[j] * self.matrix[j][i]).sum())
                .collect(),
        )
    }

    /// Parses a JSON map `{label: n}`; missing labels are zero.
    fn coords_from_json(&self, v: &Value) -> Result<Vec<i64>> {
        let map = v
            .as_object()
            .ok_or_else(|| Error::input("expected a JSON object mapping vertex -> integer"))?;
        let mut out = vec![0; self.rank()];
        for (k, val) in map {
            let i = self.vertex(k)?;
            out[i] = val
                .as_i64()
                .ok_or_else(|| Error::input(format!("coordinate for {k:?} must be an integer")))?;
        }
        Ok(out)
    }

    fn coords_to_json(&self, coords: impl Iterator<Item = i64>) -> Value {
        Value::Object(
            self.labels
                .iter()
                .cloned()
                .zip(coords.map(Value::from))
                .collect(),
        )
    }

    pub fn root_vector_from_json(&self, v: &Value) -> Result<RootVector> {
        let coords = self.coords_from_json(v)?;
        if coords.iter().any(|&c| c < 0) {
            return Err(Error::input("root vector coordinates must be nonnegative"));
        }
        Ok(RootVector(coords.into_iter().map(|c| c as u32).collect()))
    }

    pub fn root_vector_to_json(&self, nu: &RootVector) -> Value {
        self.coords_to_json(nu.0.iter().map(|&c| i64::from(c)))
    }

    pub fn weight_from_json(&self, v: &Value) -> Result<Weight> {
        Ok(Weight(self.coords_from_json(v)?))
    }

    pub fn weight_to_json(&self, w: &Weight) -> Value {
        self.coords_to_json(w.0.iter().copied())
    }

    pub fn sequence_labels(&self, s: &Sequence) -> Vec<String> {
        s.0.iter().map(|&v| self.labels[v as usize].clone()).collect()
    }

    /// A JSON array of vertex labels (strings or integers).
    pub fn sequence_from_json(&self, v: &Value) -> Result<Sequence> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::input("a sequence must be a JSON array of vertex labels"))?;
        let mut out = Vec::with_capacity(items.len());
        for x in items {
            let label = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => return Err(Error::input(format!("bad vertex label {other}"))),
            };
            out.push(self.vertex(&label)? as u8);
        }
        Ok(Sequence(out))
    }

    /// Built-in data by name: `A1`..`A8`, `D4`..`D8`, `E6`..`E8`.
    pub fn from_name(name: &str) -> Result<Self> {
        let bad = || Error::input(format!("unknown type name {name:?}"));
        let (kind, rank) = name.split_at(1.min(name.len()));
        let rank: usize = rank.parse().map_err(|_| bad())?;
        match (kind, rank) {
            ("A", 1..=8) => Ok(Self::type_a(rank)),
            ("D", 4..=8) => Ok(Self::type_d(rank)),
            ("E", 6..=8) => Ok(Self::type_e(rank)),
            _ => Err(bad()),
        }
    }
}

/// An element of the positive root cone, `sum nu_i alpha_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<u32>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `|nu| = sum nu_i`.
    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }
}

/// A weight in fundamental-weight coordinates: `lambda = sum n_i omega_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// `<lambda, alpha_i>`, the `i`-th fundamental-weight coordinate.
pub fn weight_pairing(lambda: &Weight, i: usize) -> Result<i64> {
    lambda
        .0
        .get(i)
        .copied()
        .ok_or_else(|| Error::input(format!("vertex index {i} out of range")))
}

/// A word `(i_1, ..., i_m)` in the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence(pub Vec<u8>);

impl Sequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn root_vector(&self, rank: usize) -> RootVector {
        let mut v = vec![0; rank];
        for &i in &self.0 {
            v[i as usize] += 1;
        }
        RootVector(v)
    }

    pub fn concat(&self, other: &Sequence) -> Sequence {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Sequence(v)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive roots of a finite-type datum, sorted by height then
/// lexicographically. Computed by closing the simple roots under simple
/// reflections and discarding negative vectors.
pub fn positive_roots(datum: &CartanDatum) -> Result<Vec<RootVector>> {
    datum.ensure_finite_type()?;
    let n = datum.rank();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        if found.insert(v.clone()) {
            queue.push_back(v);
        }
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // s_i(beta) = beta - <beta, alpha_i> alpha_i
            let c: i64 = (0..n).map(|j| beta[j] * datum.a(j, i)).sum();
            if c == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= c;
            if image.iter().all(|&x| x >= 0) && found.insert(image.clone()) {
                if found.len() > MAX_POSITIVE_ROOTS * n {
                    return Err(Error::UnsupportedType(
                        "reflection closure did not terminate within finite-type bounds".into(),
                    ));
                }
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<RootVector> = found
        .into_iter()
        .map(|v| RootVector(v.into_iter().map(|x| x as u32).collect()))
        .collect();
    roots.sort_by_key(|r| (r.height(), r.0.clone()));
    Ok(roots)
}

/// Number of multisets of positive roots summing to `nu`.
pub fn kostant_count(datum: &CartanDatum, nu: &RootVector) -> Result<u64> {
    let roots = positive_roots(datum)?;
    fn count(
        roots: &[RootVector],
        idx: usize,
        rest: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), u64>,
    ) -> u64 {
        if rest.iter().all(|&x| x == 0) {
            return 1;
        }
        if idx == roots.len() {
            return 0;
        }
        let key = (idx, rest.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut cur = rest.to_vec();
        loop {
            total += count(roots, idx + 1, &cur, memo);
            let fits = cur.iter().zip(&roots[idx].0).all(|(c, r)| c >= r);
            if !fits {
                break;
            }
            for (c, r) in cur.iter_mut().zip(&roots[idx].0) {
                *c -= r;
            }
        }
        memo.insert(key, total);
        total
    }
    Ok(count(&roots, 0, &nu.0, &mut HashMap::new()))
}

/// All sequences with content `nu`, in lexicographic order.
pub fn seq(datum: &CartanDatum, nu: &RootVector) -> Vec<Sequence> {
    fn rec(left: &mut [u32], cur: &mut Vec<u8>, out: &mut Vec<Sequence>) {
        if left.iter().all(|&x| x == 0) {
            out.push(Sequence(cur.clone()));
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i as u8);
                rec(left, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    assert_eq!(nu.0.len(), datum.rank(), "root vector rank mismatch");
    let mut out = Vec::new();
    rec(&mut nu.0.clone(), &mut Vec::new(), &mut out);
    out
}

/// `[r] = q^{r-1} + q^{r-3} + ... + q^{1-r}`, with `[-r] = -[r]`.
pub fn quantum_integer(r: i64) -> LaurentPoly {
    if r < 0 {
        return -quantum_integer(-r);
    }
    LaurentPoly::from_terms((0..r).map(|k| (r - 1 - 2 * k, 1)))
}

pub fn quantum_factorial(n: u32) -> LaurentPoly {
    (1..=i64::from(n)).fold(LaurentPoly::one(), |acc, r| &acc * &quantum_integer(r))
}

/// `[n]! / ([k]! [n-k]!)` by exact division.
pub fn quantum_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::input(format!("quantum binomial needs 0 <= k <= n, got ({n}, {k})")));
    }
    let (n, k) = (n as u32, k as u32);
    let den = &quantum_factorial(k) * &quantum_factorial(n - k);
    quantum_factorial(n).div_exact(&den)
}

/// Multinomial `m! / prod nu_i!`.
pub fn multinomial(nu: &RootVector) -> BigInt {
    let fact = |n: u32| (1..=n).fold(BigInt::from(1), |a, k| a * k);
    nu.0.iter().fold(fact(nu.height()), |acc, &k| acc / fact(k))
}

/// Root vectors `nu` with `|nu| <= max_height`, ordered by height then lexicographically.
pub fn root_vectors_up_to(rank: usize, max_height: u32) -> Vec<RootVector> {
    let mut out = BTreeMap::new();
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut BTreeMap<(u32, Vec<u32>), ()>) {
        if i == cur.len() {
            let h = cur.iter().sum();
            out.insert((h, cur.clone()), ());
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_height, &mut vec![0; rank], &mut out);
    out.into_keys().map(|(_, v)| RootVector(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[u32]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn pairing_examples() {
        let a2 = CartanDatum::type_a(2);
        assert_eq!(a2.pairing(0, 0).unwrap(), 2);
        assert_eq!(a2.pairing(0, 1).unwrap(), -1);
        assert_eq!(a2.pairing(1, 0).unwrap(), -1);
        let a1a1 = CartanDatum::disconnected(2);
        assert_eq!(a1a1.pairing(0, 1).unwrap(), 0);
        assert!(matches!(a2.pairing(0, 2), Err(Error::Input(_))));
    }

    #[test]
    fn weight_pairing_examples() {
        assert_eq!(weight_pairing(&Weight(vec![5]), 0).unwrap(), 5);
        assert_eq!(weight_pairing(&Weight(vec![1, 0]), 1).unwrap(), 0);
        assert_eq!(weight_pairing(&Weight(vec![1, 2]), 1).unwrap(), 2);
        assert!(weight_pairing(&Weight(vec![1, 2]), 2).is_err());
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        let l = vec!["1".to_string(), "2".to_string()];
        assert!(CartanDatum::new(l.clone(), vec![(0, 0)]).is_err());
        assert!(CartanDatum::new(l.clone(), vec![(0, 1), (1, 0)]).is_err());
        assert!(CartanDatum::new(l, vec![(0, 1)]).is_ok());
    }

    #[test]
    fn ade_classification() {
        assert_eq!(CartanDatum::type_a(3).finite_type().unwrap(), vec!["A3"]);
        assert_eq!(CartanDatum::type_d(4).finite_type().unwrap(), vec!["D4"]);
        assert_eq!(CartanDatum::type_d(6).finite_type().unwrap(), vec!["D6"]);
        for n in 6..=8 {
            assert_eq!(CartanDatum::type_e(n).finite_type().unwrap(), vec![format!("E{n}")]);
        }
        assert_eq!(CartanDatum::disconnected(2).finite_type().unwrap(), vec!["A1", "A1"]);
        // affine D4: star with four arms
        let l: Vec<String> = (1..=5).map(|i| i.to_string()).collect();
        let star = CartanDatum::new(l, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(star.finite_type(), Err(Error::UnsupportedType(_))));
        // cycle
        let l: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
        let tri = CartanDatum::new(l, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(tri.finite_type().is_err());
        // E9 shape (arms 1,2,5) is affine E8
        let l: Vec<String> = (1..=9).map(|i| i.to_string()).collect();
        let mut edges: Vec<(usize, usize)> = (1..8).map(|i| (i - 1, i)).collect();
        edges.push((2, 8));
        assert!(CartanDatum::new(l, edges).unwrap().finite_type().is_err());
    }

    #[test]
    fn positive_root_examples() {
        assert_eq!(positive_roots(&CartanDatum::type_a(1)).unwrap(), vec![rv(&[1])]);
        assert_eq!(
            positive_roots(&CartanDatum::type_a(2)).unwrap(),
            vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]
        );
        assert_eq!(positive_roots(&CartanDatum::type_a(3)).unwrap().len(), 6);
        let counts: Vec<usize> = [
            CartanDatum::type_d(4),
            CartanDatum::type_d(5),
            CartanDatum::type_e(6),
            CartanDatum::type_e(7),
            CartanDatum::type_e(8),
        ]
        .iter()
        .map(|d| positive_roots(d).unwrap().len())
        .collect();
        assert_eq!(counts, vec![12, 20, 36, 63, 120]);
    }

    #[test]
    fn kostant_examples() {
        let a2 = CartanDatum::type_a(2);
        assert_eq!(kostant_count(&a2, &rv(&[1, 0])).unwrap(), 1);
        assert_eq!(kostant_count(&a2, &rv(&[1, 1])).unwrap(), 2);
        assert_eq!(kostant_count(&a2, &rv(&[2, 1])).unwrap(), 2);
        assert_eq!(kostant_count(&a2, &rv(&[0, 0])).unwrap(), 1);
    }

    #[test]
    fn seq_examples() {
        let a1 = CartanDatum::type_a(1);
        assert_eq!(seq(&a1, &rv(&[2])), vec![Sequence(vec![0, 0])]);
        let a2 = CartanDatum::type_a(2);
        assert_eq!(seq(&a2, &rv(&[1, 0])), vec![Sequence(vec![0])]);
        assert_eq!(
            seq(&a2, &rv(&[1, 1])),
            vec![Sequence(vec![0, 1]), Sequence(vec![1, 0])]
        );
    }

    #[test]
    fn quantum_integer_examples() {
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(2).to_string(), "q^-1+q");
        assert_eq!(quantum_integer(3).to_string(), "q^-2+1+q^2");
        assert_eq!(quantum_integer(-2).to_string(), "-q^-1-q");
    }

    #[test]
    fn quantum_binomial_examples() {
        assert_eq!(quantum_binomial(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(quantum_binomial(2, 1).unwrap().to_string(), "q^-1+q");
        assert_eq!(
            quantum_binomial(4, 2).unwrap().to_string(),
            "q^-4+q^-2+2+q^2+q^4"
        );
        assert!(quantum_binomial(2, 3).is_err());
    }

    #[test]
    fn quiver_json_round_trip() {
        let s = r#"{"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["c", "b"]]}"#;
        let d = CartanDatum::from_json_str(s).unwrap();
        assert_eq!(d.pairing(0, 1).unwrap(), -1);
        assert_eq!(d.pairing(0, 2).unwrap(), 0);
        assert!(d.has_arrow(2, 1));
        let again = CartanDatum::from_json_str(&d.to_json().to_string()).unwrap();
        assert_eq!(again, d);
        assert!(CartanDatum::from_json_str(r#"{"vertices": ["1"], "edges": [], "x": 1}"#).is_err());
        assert!(CartanDatum::from_json_str(r#"{"vertices": ["1"], "edges": [["1", "1"]]}"#).is_err());
    }

    #[test]
    fn weight_and_root_json() {
        let a2 = CartanDatum::type_a(2);
        let w = a2.weight_from_json(&serde_json::json!({"1": 1, "2": 2})).unwrap();
        assert_eq!(w, Weight(vec![1, 2]));
        let nu = a2.root_vector_from_json(&serde_json::json!({"2": 3})).unwrap();
        assert_eq!(nu, rv(&[0, 3]));
        assert!(a2.root_vector_from_json(&serde_json::json!({"2": -1})).is_err());
        assert!(a2.root_vector_from_json(&serde_json::json!({"7": 1})).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn quantum_integer_at_one(r in -50i64..=50) {
                prop_assert_eq!(quantum_integer(r).at_one(), BigInt::from(r));
            }
        }

        #[test]
        fn quantum_binomials_symmetric_and_bar_invariant() {
            for n in 0..=12 {
                for k in 0..=n {
                    let b = quantum_binomial(n, k).unwrap();
                    assert_eq!(b, quantum_binomial(n, n - k).unwrap());
                    assert!(b.is_bar_invariant());
                }
            }
        }

        #[test]
        fn pairing_symmetric() {
            for d in [CartanDatum::type_a(4), CartanDatum::type_d(5), CartanDatum::type_e(6)] {
                for i in 0..d.rank() {
                    for j in 0..d.rank() {
                        assert_eq!(d.pairing(i, j).unwrap(), d.pairing(j, i).unwrap());
                    }
                }
            }
        }

        #[test]
        fn seq_has_multinomial_size() {
            for d in [CartanDatum::type_a(2), CartanDatum::type_a(3)] {
                for nu in root_vectors_up_to(d.rank(), 6) {
                    let s = seq(&d, &nu);
                    assert_eq!(BigInt::from(s.len()), multinomial(&nu));
                    assert!(s.windows(2).all(|w| w[0] < w[1]));
                    assert!(s.iter().all(|x| x.root_vector(d.rank()) == nu));
                }
            }
        }
    }
}
