use serde_json::{json, Value};

use crate::root_data::CartanDatum;

/// Sign data for the relations that depend on orientation.
///
/// For connected `i, j`: `Q_ij(u, v) = q_sign(i, j) * (v - u)` with
/// `q_sign(j, i) = -q_sign(i, j)`, and the braid relation on `e(i, j, i)` reads
/// `psi_{k+1} psi_k psi_{k+1} = psi_k psi_{k+1} psi_k + braid_sign(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationConvention {
    q_sign: Vec<Vec<i8>>,
    braid_sign: Vec<Vec<i8>>,
    name: String,
}

/// `psi_k^2 e(i)` for the labels at strands `k, k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Square {
    Zero,
    Identity,
    /// `sign * (x_{k+1} - x_k)`
    Linear(i64),
}

impl RelationConvention {
    /// `Q_ij(u, v) = v - u` for every arrow `i -> j`, braid correction `+1`
    /// on `(i, j, i)` exactly when `Q_ij = v - u`.
    pub fn default_for(datum: &CartanDatum) -> Self {
        let n = datum.rank();
        let mut q_sign = vec![vec![0i8; n]; n];
        for &(i, j) in datum.edges() {
            q_sign[i][j] = 1;
            q_sign[j][i] = -1;
        }
        let braid_sign = q_sign.clone();
        Self {
            q_sign,
            braid_sign,
            name: "default".into(),
        }
    }

    /// The default with every braid correction negated. It must fail
    /// relation verification.
    pub fn flipped_braid(datum: &CartanDatum) -> Self {
        let mut c = Self::default_for(datum);
        for row in c.braid_sign.iter_mut() {
            for s in row.iter_mut() {
                *s = -*s;
            }
        }
        c.name = "flipped-braid".into();
        c
    }

    /// The default with the sign of every `Q` negated (braid signs follow).
    pub fn reversed(datum: &CartanDatum) -> Self {
        let mut c = Self::default_for(datum);
        for m in [&mut c.q_sign, &mut c.braid_sign] {
            for row in m.iter_mut() {
                for s in row.iter_mut() {
                    *s = -*s;
                }
            }
        }
        c.name = "reversed".into();
        c
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.q_sign.len()
    }

    pub fn connected(&self, i: usize, j: usize) -> bool {
        self.q_sign[i][j] != 0
    }

    pub fn q_sign(&self, i: usize, j: usize) -> i64 {
        i64::from(self.q_sign[i][j])
    }

    pub fn braid_sign(&self, i: usize, j: usize) -> i64 {
        i64::from(self.braid_sign[i][j])
    }

    pub fn square(&self, a: u8, b: u8) -> Square {
        let (a, b) = (a as usize, b as usize);
        if a == b {
            Square::Zero
        } else if self.connected(a, b) {
            Square::Linear(self.q_sign(a, b))
        } else {
            Square::Identity
        }
    }

    /// Braid correction coefficient for `psi_{k+1} psi_k psi_{k+1} - psi_k psi_{k+1} psi_k`
    /// on `e(m)` with labels `(a, b, c)` at strands `k, k+1, k+2`.
    pub fn braid_correction(&self, a: u8, b: u8, c: u8) -> i64 {
        if a == c && self.connected(a as usize, b as usize) {
            self.braid_sign(a as usize, b as usize)
        } else {
            0
        }
    }

    pub fn to_json(&self, datum: &CartanDatum) -> Value {
        let mut pairs = vec![];
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if self.connected(i, j) {
                    pairs.push(json!({
                        "pair": [datum.label(i), datum.label(j)],
                        "Q": if self.q_sign(i, j) > 0 { "v-u" } else { "u-v" },
                        "braid": self.braid_sign(i, j),
                    }));
                }
            }
        }
        json!({ "name": self.name, "pairs": pairs })
    }
}
