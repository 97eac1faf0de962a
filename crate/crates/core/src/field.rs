//! The finite fields F_2, F_3, F_4, F_5. Elements are `u8` in `0..q`.
//! For F_4 the element `2` is a root `a` of `a^2 + a + 1`, and `3 = a + 1`.

use crate::error::{Error, Result};

const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    q: u8,
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2..=5 => Ok(Self { q: q as u8 }),
            _ => Err(Error::input(format!("unsupported field size {q}; expected 2, 3, 4 or 5"))),
        }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn size(&self) -> usize {
        self.q as usize
    }

    fn is_f4(&self) -> bool {
        self.q == 4
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        if self.is_f4() {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if self.is_f4() || a == 0 {
            a
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if self.is_f4() {
            F4_MUL[a as usize][b as usize]
        } else {
            ((a as u16 * b as u16) % self.q as u16) as u8
        }
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> u8 {
        match self.q {
            2 => 1,
            3 => 2,
            4 => 2,
            _ => 2,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    /// Rank of a dense `rows x cols` matrix (row-major).
    pub fn rank(&self, mut m: Vec<u8>, rows: usize, cols: usize) -> usize {
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                m.swap(r * cols + k, p * cols + k);
            }
            let inv = self.inv(m[r * cols + c]);
            for k in 0..cols {
                m[r * cols + k] = self.mul(m[r * cols + k], inv);
            }
            for i in 0..rows {
                let f = m[i * cols + c];
                if i != r && f != 0 {
                    for k in 0..cols {
                        let t = self.mul(f, m[r * cols + k]);
                        m[i * cols + k] = self.sub(m[i * cols + k], t);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Reduced row echelon form of a full-rank matrix; returns the pivot columns.
    pub fn rref(&self, m: &mut [u8], rows: usize, cols: usize) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            for k in 0..cols {
                m.swap(r * cols + k, p * cols + k);
            }
            let inv = self.inv(m[r * cols + c]);
            for k in 0..cols {
                m[r * cols + k] = self.mul(m[r * cols + k], inv);
            }
            for i in 0..rows {
                let f = m[i * cols + c];
                if i != r && f != 0 {
                    for k in 0..cols {
                        let t = self.mul(f, m[r * cols + k]);
                        m[i * cols + k] = self.sub(m[i * cols + k], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in 2..=5 {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            // primitive element generates all nonzero elements
            let g = f.primitive();
            let mut seen = std::collections::BTreeSet::new();
            let mut x = 1;
            for _ in 0..q {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len(), q as usize - 1);
        }
    }

    #[test]
    fn rejects_other_sizes() {
        assert!(Field::new(6).is_err());
        assert!(Field::new(7).is_err());
    }

    #[test]
    fn rank_examples() {
        let f = Field::new(2).unwrap();
        assert_eq!(f.rank(vec![1, 1, 1, 1], 2, 2), 1);
        assert_eq!(f.rank(vec![1, 0, 1, 1], 2, 2), 2);
        let f3 = Field::new(3).unwrap();
        assert_eq!(f3.rank(vec![1, 2, 2, 1], 2, 2), 1);
    }
}
