//! Isomorphism classes of quiver representations over `F_q`, counted as
//! orbits of `prod GL(nu_i, F_q)` on `prod over edges i -> j of Hom(F_q^{nu_i}, F_q^{nu_j})`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::Check;
use crate::root_data::{kostant_count, CartanDatum, RootVector};

pub const MAX_SPACE: u64 = 1 << 24;
pub const MAX_BURNSIDE_GROUP: u64 = 100_000;

/// A square matrix over `F_q`, row-major.
type Mat = Vec<u8>;

/// One representation: per edge, a `nu_j x nu_i` matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRep {
    pub q: u32,
    pub matrices: Vec<Vec<u8>>,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub representative: FiniteRep,
    pub size: u64,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub q: u32,
    pub nu: RootVector,
    pub space_size: u64,
    pub group_order: BigInt,
    pub orbits: Vec<Orbit>,
    pub burnside: Option<u64>,
}

impl OrbitReport {
    pub fn count(&self) -> u64 {
        self.orbits.len() as u64
    }

    pub fn to_json(&self, datum: &CartanDatum) -> Value {
        let orbits: Vec<Value> = self
            .orbits
            .iter()
            .map(|o| {
                let mats: Vec<Value> = datum
                    .edges()
                    .iter()
                    .zip(&o.representative.matrices)
                    .map(|(&(i, j), m)| {
                        let cols = self.nu.0[i] as usize;
                        let rows: Vec<&[u8]> = if cols == 0 { vec![] } else { m.chunks(cols).collect() };
                        json!({ "edge": [datum.label(i), datum.label(j)], "matrix": rows })
                    })
                    .collect();
                json!({ "representative": mats, "size": o.size })
            })
            .collect();
        json!({
            "q": self.q,
            "nu": datum.root_vector_to_json(&self.nu),
            "orbit_count": self.count(),
            "space_size": self.space_size,
            "group_order": self.group_order.to_string(),
            "burnside_count": self.burnside,
            "orbits": orbits,
        })
    }
}

pub fn gl_order(n: u32, q: u32) -> BigInt {
    let qn = BigInt::from(q).pow(n);
    (0..n).fold(BigInt::one(), |acc, k| acc * (&qn - BigInt::from(q).pow(k)))
}

struct Space<'a> {
    field: Field,
    datum: &'a CartanDatum,
    dims: Vec<usize>,
    /// Offset of each edge's block among the coordinates.
    offsets: Vec<usize>,
    coords: usize,
}

impl<'a> Space<'a> {
    fn new(datum: &'a CartanDatum, nu: &RootVector, q: u32) -> Result<Self> {
        datum.ensure_finite_type()?;
        if nu.0.len() != datum.rank() {
            return Err(Error::input("root vector must have one entry per vertex"));
        }
        let field = Field::new(q)?;
        let dims: Vec<usize> = nu.0.iter().map(|&d| d as usize).collect();
        let mut offsets = vec![];
        let mut coords = 0;
        for &(i, j) in datum.edges() {
            offsets.push(coords);
            coords += dims[i] * dims[j];
        }
        let size = BigInt::from(q).pow(coords as u32);
        if size > BigInt::from(MAX_SPACE) {
            return Err(Error::input(format!(
                "representation space has q^{coords} = {size} points, above the bound {MAX_SPACE}"
            )));
        }
        Ok(Self {
            field,
            datum,
            dims,
            offsets,
            coords,
        })
    }

    fn size(&self) -> u64 {
        u64::from(self.field.q()).pow(self.coords as u32)
    }

    /// Big-endian base-`q` digits, so index order is lexicographic order.
    fn decode(&self, mut idx: u64, out: &mut [u8]) {
        let q = u64::from(self.field.q());
        for t in (0..self.coords).rev() {
            out[t] = (idx % q) as u8;
            idx /= q;
        }
    }

    fn encode(&self, pt: &[u8]) -> u64 {
        let q = u64::from(self.field.q());
        pt.iter().fold(0, |acc, &d| acc * q + u64::from(d))
    }

    fn mat_mul(&self, a: &[u8], b: &[u8], n: usize, k: usize, m: usize) -> Vec<u8> {
        let f = &self.field;
        let mut out = vec![0; n * m];
        for r in 0..n {
            for c in 0..m {
                let mut s = 0;
                for t in 0..k {
                    s = f.add(s, f.mul(a[r * k + t], b[t * m + c]));
                }
                out[r * m + c] = s;
            }
        }
        out
    }

    /// Applies `g` at vertex `v` (with inverse `g_inv`) to the point.
    fn act(&self, v: usize, g: &[u8], g_inv: &[u8], pt: &[u8], out: &mut Vec<u8>) {
        out.clear();
        out.extend_from_slice(pt);
        for (e, &(i, j)) in self.datum.edges().iter().enumerate() {
            let (ni, nj) = (self.dims[i], self.dims[j]);
            let block = &pt[self.offsets[e]..self.offsets[e] + ni * nj];
            let mut a = block.to_vec();
            if j == v {
                a = self.mat_mul(g, &a, nj, nj, ni);
            }
            if i == v {
                a = self.mat_mul(&a, g_inv, nj, ni, ni);
            }
            out[self.offsets[e]..self.offsets[e] + ni * nj].copy_from_slice(&a);
        }
    }

    fn identity(n: usize) -> Mat {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        m
    }

    fn inverse(&self, g: &[u8], n: usize) -> Mat {
        let mut aug = vec![0; n * 2 * n];
        for r in 0..n {
            aug[r * 2 * n..r * 2 * n + n].copy_from_slice(&g[r * n..r * n + n]);
            aug[r * 2 * n + n + r] = 1;
        }
        let pivots = self.field.rref(&mut aug, n, 2 * n);
        debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
        (0..n)
            .flat_map(|r| aug[r * 2 * n + n..r * 2 * n + 2 * n].to_vec())
            .collect()
    }

    /// Transvections `1 + c E_ab` for additive generators `c`, and the
    /// scaling `diag(w, 1, ..., 1)` by a primitive element: they generate `GL_n`.
    fn generators(&self) -> Vec<(usize, Mat, Mat)> {
        let f = &self.field;
        let mut cs = vec![1u8, f.primitive()];
        cs.dedup();
        let mut out = vec![];
        for (v, &n) in self.dims.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let mut gens = vec![];
            let mut d = Self::identity(n);
            d[0] = f.primitive();
            if d != Self::identity(n) {
                gens.push(d);
            }
            for a in 0..n {
                for b in 0..n {
                    if a != b {
                        for &c in &cs {
                            let mut t = Self::identity(n);
                            t[a * n + b] = c;
                            gens.push(t);
                        }
                    }
                }
            }
            for g in gens {
                let inv = self.inverse(&g, n);
                out.push((v, g, inv));
            }
        }
        out
    }

    fn group_elements(&self, n: usize) -> Vec<Mat> {
        let q = u64::from(self.field.q());
        let total = q.pow((n * n) as u32);
        let mut out = vec![];
        let mut m = vec![0u8; n * n];
        for idx in 0..total {
            let mut x = idx;
            for t in (0..n * n).rev() {
                m[t] = (x % q) as u8;
                x /= q;
            }
            if self.field.rank(m.clone(), n, n) == n {
                out.push(m.clone());
            }
        }
        out
    }

    /// `|Fix(g)| = q^{dim ker}` where the kernel is `{A_e : g_j A_e = A_e g_i}`.
    fn fixed_points(&self, g: &[Mat]) -> u64 {
        let f = &self.field;
        let mut dim = 0;
        for &(i, j) in self.datum.edges() {
            let (ni, nj) = (self.dims[i], self.dims[j]);
            let k = ni * nj;
            if k == 0 {
                continue;
            }
            // columns indexed by entries of A, rows by entries of g_j A - A g_i
            let mut m = vec![0u8; k * k];
            for r in 0..nj {
                for c in 0..ni {
                    let row = r * ni + c;
                    for t in 0..nj {
                        let col = t * ni + c;
                        m[row * k + col] = f.add(m[row * k + col], g[j][r * nj + t]);
                    }
                    for t in 0..ni {
                        let col = r * ni + t;
                        m[row * k + col] = f.sub(m[row * k + col], g[i][t * ni + c]);
                    }
                }
            }
            dim += k - f.rank(m, k, k);
        }
        u64::from(f.q()).pow(dim as u32)
    }
}

fn split_point(space: &Space<'_>, pt: &[u8], q: u32) -> FiniteRep {
    let matrices = space
        .datum
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(i, j))| pt[space.offsets[e]..space.offsets[e] + space.dims[i] * space.dims[j]].to_vec())
        .collect();
    FiniteRep { q, matrices }
}

/// Orbit sweep: visit points in lexicographic order; each unvisited point is
/// the canonical (least) representative of its orbit, which is then filled
/// in by a search over group generators.
pub fn enumerate_orbits(datum: &CartanDatum, nu: &RootVector, q: u32, burnside: bool) -> Result<OrbitReport> {
    let space = Space::new(datum, nu, q)?;
    let size = space.size();
    let group_order = nu.0.iter().fold(BigInt::one(), |acc, &n| acc * gl_order(n, q));
    let gens = space.generators();
    let mut visited = vec![false; size as usize];
    let mut orbits = vec![];
    let mut pt = vec![0u8; space.coords];
    let mut img = Vec::with_capacity(space.coords);
    let mut stack = vec![];
    for start in 0..size {
        if visited[start as usize] {
            continue;
        }
        visited[start as usize] = true;
        stack.push(start);
        let mut orbit_size = 0u64;
        while let Some(x) = stack.pop() {
            orbit_size += 1;
            space.decode(x, &mut pt);
            for (v, g, g_inv) in &gens {
                space.act(*v, g, g_inv, &pt, &mut img);
                let y = space.encode(&img);
                if !visited[y as usize] {
                    visited[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        space.decode(start, &mut pt);
        orbits.push(Orbit {
            representative: split_point(&space, &pt, q),
            size: orbit_size,
        });
    }
    let burnside = if burnside { burnside_count(&space, nu, &group_order)? } else { None };
    Ok(OrbitReport {
        q,
        nu: nu.clone(),
        space_size: size,
        group_order,
        orbits,
        burnside,
    })
}

/// `(1/|G|) sum over g of |Fix(g)|`, when `|G| <= MAX_BURNSIDE_GROUP`.
fn burnside_count(space: &Space<'_>, nu: &RootVector, order: &BigInt) -> Result<Option<u64>> {
    if *order > BigInt::from(MAX_BURNSIDE_GROUP) {
        return Ok(None);
    }
    let per_vertex: Vec<Vec<Mat>> = nu.0.iter().map(|&n| space.group_elements(n as usize)).collect();
    let mut tuples: Vec<Vec<Mat>> = vec![vec![]];
    for els in &per_vertex {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                els.iter().map(move |g| {
                    let mut t = t.clone();
                    t.push(g.clone());
                    t
                })
            })
            .collect();
    }
    let total: u64 = tuples.par_iter().map(|g| space.fixed_points(g)).sum();
    let order = order.to_u64().unwrap_or(u64::MAX);
    if total % order != 0 {
        return Err(Error::Internal(format!("Burnside sum {total} not divisible by |G| = {order}")));
    }
    Ok(Some(total / order))
}

/// Structural checks on an orbit report: orbit sizes sum to the space size
/// and divide the group order; the Burnside count, if present, agrees.
pub fn orbit_report_check(report: &OrbitReport) -> Check {
    let name = format!("orbit sweep nu={:?} q={}", report.nu.0, report.q);
    let sum: u64 = report.orbits.iter().map(|o| o.size).sum();
    if sum != report.space_size {
        return Check::fail(name, format!("orbit sizes sum to {sum}, space has {}", report.space_size));
    }
    if let Some(o) = report
        .orbits
        .iter()
        .find(|o| (&report.group_order % BigInt::from(o.size)) != BigInt::from(0))
    {
        return Check::fail(name, format!("orbit of size {} does not divide |G| = {}", o.size, report.group_order));
    }
    if let Some(b) = report.burnside {
        if b != report.count() {
            return Check::fail(name, format!("sweep found {} orbits, Burnside gives {b}", report.count()));
        }
    }
    Check::pass(name).with_data(json!({ "orbits": report.count(), "burnside": report.burnside }))
}

/// Orbit count against the Kostant partition function.
pub fn compare_kostant(datum: &CartanDatum, nu: &RootVector, q: u32) -> Result<Check> {
    let name = format!("orbits vs Kostant nu={:?} q={q}", nu.0);
    let report = enumerate_orbits(datum, nu, q, false)?;
    let k = kostant_count(datum, nu)?;
    let data = json!({ "orbits": report.count(), "kostant": k });
    Ok(if report.count() == k {
        Check::pass(name).with_data(data)
    } else {
        Check::fail(name, format!("{} orbits but Kostant count {k}", report.count())).with_data(data)
    })
}

/// Orbit counts agree across every orientation of the underlying graph and
/// every `q` in `qs`.
pub fn orientation_and_q_check(datum: &CartanDatum, nu: &RootVector, qs: &[u32]) -> Result<Check> {
    let name = format!("orientation and q independence nu={:?}", nu.0);
    let edges = datum.edges().len();
    let mut seen: Option<(u64, String)> = None;
    for flip in 0..(1u64 << edges) {
        let d = datum.reoriented(flip);
        for &q in qs {
            let c = enumerate_orbits(&d, nu, q, false)?.count();
            let here = format!("orientation {flip:#b} q={q}");
            match &seen {
                None => seen = Some((c, here)),
                Some((c0, first)) if *c0 != c => {
                    return Ok(Check::fail(name, format!("{c0} orbits at {first}, {c} at {here}")));
                }
                _ => {}
            }
        }
    }
    Ok(Check::pass(name).with_data(json!({ "orbits": seen.map(|s| s.0), "orientations": 1u64 << edges })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let a2 = CartanDatum::type_a(2);
        assert_eq!(enumerate_orbits(&a2, &RootVector(vec![1, 1]), 2, true).unwrap().count(), 2);
        assert_eq!(enumerate_orbits(&a2, &RootVector(vec![2, 1]), 2, true).unwrap().count(), 2);
        let a1 = CartanDatum::type_a(1);
        let r = enumerate_orbits(&a1, &RootVector(vec![3]), 2, true).unwrap();
        assert_eq!((r.count(), r.space_size), (1, 1));
        let a3 = CartanDatum::type_a(3);
        assert!(compare_kostant(&a3, &RootVector(vec![1, 1, 1]), 2).unwrap().passed);
        assert_eq!(enumerate_orbits(&a3, &RootVector(vec![1, 1, 1]), 2, false).unwrap().count(), 4);
        assert!(compare_kostant(&a3, &RootVector(vec![0, 0, 0]), 3).unwrap().passed);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 2), BigInt::from(6));
        assert_eq!(gl_order(3, 2), BigInt::from(168));
        assert_eq!(gl_order(1, 5), BigInt::from(4));
        assert_eq!(gl_order(0, 5), BigInt::from(1));
    }

    #[test]
    fn report_invariants_and_burnside() {
        let a2 = CartanDatum::type_a(2);
        for q in [2, 3, 4, 5] {
            let r = enumerate_orbits(&a2, &RootVector(vec![2, 2]), q, true).unwrap();
            assert_eq!(r.count(), 3);
            assert!(orbit_report_check(&r).passed);
        }
    }

    #[test]
    fn size_bound() {
        let a2 = CartanDatum::type_a(2);
        let err = enumerate_orbits(&a2, &RootVector(vec![5, 5]), 2, false).unwrap_err();
        assert!(matches!(err, Error::Input(m) if m.contains("2^") || m.contains("q^25")));
    }
}
