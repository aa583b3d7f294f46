//! Lattice points: exponent vectors of monomials, multidegrees in `Z^n`,
//! and the sign patterns ("signatures") that index the distinguished
//! subspaces of a tangent space.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial, a point of `N^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// `e_i` scaled by `power`.
    pub fn pure(n: usize, var: usize, power: u32) -> Self {
        let mut v = vec![0; n];
        v[var] = power;
        Exponent(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise `max(self - other, 0)`, the generator of `(x^self) : x^other`.
    pub fn saturating_sub(&self, other: &Exponent) -> Exponent {
        Exponent(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// If the only nonzero coordinate is `var` (or the vector is zero),
    /// returns that coordinate's value.
    pub fn pure_power_of(&self, var: usize) -> Option<u32> {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &c)| i == var || c == 0)
            .then(|| self.0[var])
    }

    pub fn to_multidegree(&self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|&c| c as i64).collect())
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

/// A point of `Z^n`, the grading group of the tangent space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(coords: Vec<i64>) -> Self {
        MultiDegree(coords)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coordinates.
    pub fn omega(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `α⁺`: the nonnegative parts.
    pub fn positive_part(&self) -> Exponent {
        Exponent(self.0.iter().map(|&a| a.max(0) as u32).collect())
    }

    /// `α⁻`: negated negative parts, so that `α = α⁺ - α⁻`.
    pub fn negative_part(&self) -> Exponent {
        Exponent(self.0.iter().map(|&a| (-a).max(0) as u32).collect())
    }

    pub fn signature(&self) -> Option<Signature> {
        Signature::of(self)
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// Coordinate is `>= 0`.
    P,
    /// Coordinate is `< 0`.
    N,
}

/// A non-constant pattern in `{p, n}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<Sign>);

impl Signature {
    /// Rejects constant patterns.
    pub fn new(pattern: Vec<Sign>) -> Option<Self> {
        let has_p = pattern.contains(&Sign::P);
        let has_n = pattern.contains(&Sign::N);
        (has_p && has_n).then_some(Signature(pattern))
    }

    pub fn of(alpha: &MultiDegree) -> Option<Self> {
        Signature::new(
            alpha
                .0
                .iter()
                .map(|&a| if a >= 0 { Sign::P } else { Sign::N })
                .collect(),
        )
    }

    pub fn pattern(&self) -> &[Sign] {
        &self.0
    }

    /// All `2^n - 2` signatures in `n` variables, ordered by the number of
    /// `n` entries and then by the reversed bit pattern. For `n = 3` this is
    /// ppn, pnp, npp, pnn, npn, nnp.
    pub fn all(n: usize) -> Vec<Signature> {
        let mut out: Vec<Signature> = (0u32..(1 << n))
            .filter_map(|mask| {
                Signature::new(
                    (0..n)
                        .map(|i| {
                            if mask >> (n - 1 - i) & 1 == 1 {
                                Sign::N
                            } else {
                                Sign::P
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        out.sort_by_key(|s| {
            let negatives = s.0.iter().filter(|&&x| x == Sign::N).count();
            let key: u32 = s
                .0
                .iter()
                .rev()
                .enumerate()
                .map(|(i, &x)| if x == Sign::N { 1 << i } else { 0 })
                .sum();
            (negatives, key)
        });
        out
    }

    /// Pattern with every entry flipped.
    pub fn opposite(&self) -> Signature {
        Signature(
            self.0
                .iter()
                .map(|s| match s {
                    Sign::P => Sign::N,
                    Sign::N => Sign::P,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::P => "p",
                Sign::N => "n",
            })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Signature {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pattern = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'p' => Ok(Sign::P),
                'n' => Ok(Sign::N),
                _ => Err(crate::Error::Parse {
                    position: i,
                    message: format!("unexpected `{c}` in signature"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Signature::new(pattern).ok_or_else(|| crate::Error::Parse {
            position: 0,
            message: "constant signature".into(),
        })
    }
}
