use crate::error::{Error, Result};

/// Largest dense matrix (rows × cols) the oracle will build.
pub const MAX_ENTRIES: u128 = 100_000_000;

/// Trial division; fine for the moduli used here.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Dense row-major matrix over `Z/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FiniteFieldMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidParameter(format!(
                "modulus {p} must fit in 32 bits"
            )));
        }
        let cells = rows as u128 * cols as u128;
        if cells > MAX_ENTRIES {
            return Err(Error::TooLarge {
                cells,
                limit: MAX_ENTRIES,
            });
        }
        Ok(FiniteFieldMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    /// Adds `v` (an integer, reduced mod p) to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let p = self.p as i64;
        let cell = &mut self.data[r * self.cols + c];
        *cell = ((*cell as i64 + v.rem_euclid(p)) % p) as u64;
    }

    fn inverse(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Rank by Gaussian elimination; consumes a copy of the entries.
    pub fn rank(&self) -> usize {
        let (p, cols) = (self.p, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            let Some(pivot) = (rank..self.rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if pivot != rank {
                for k in c..cols {
                    a.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = self.inverse(a[rank * cols + c]);
            for k in c..cols {
                a[rank * cols + k] = a[rank * cols + k] * inv % p;
            }
            for r in rank + 1..self.rows {
                let f = a[r * cols + c];
                if f == 0 {
                    continue;
                }
                for k in c..cols {
                    let sub = f * a[rank * cols + k] % p;
                    a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}
