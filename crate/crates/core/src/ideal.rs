//! Monomial ideals stored by their minimal generators.
//!
//! The generator list is kept as a divisibility antichain sorted in
//! descending lexicographic order (`x > y > z`, or `x1 > x2 > ...`), so two
//! ideals are equal exactly when their generator lists are equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Exponent>,
}

/// Reduces `raw` to its divisibility antichain, in canonical order.
pub fn minimalize(raw: Vec<Exponent>, n: usize) -> Result<MonomialIdeal> {
    if let Some(bad) = raw.iter().find(|e| e.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    let mut gens = raw;
    // ascending total degree first: a divisor always precedes its multiples
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    Ok(MonomialIdeal {
        n,
        generators: kept,
    })
}

impl MonomialIdeal {
    pub fn new(n: usize, generators: Vec<Exponent>) -> Result<Self> {
        minimalize(generators, n)
    }

    /// Shorthand for tests and fixtures: rows of exponent vectors.
    pub fn from_rows(n: usize, rows: &[&[u32]]) -> Result<Self> {
        minimalize(rows.iter().map(|r| Exponent(r.to_vec())).collect(), n)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Exponent::zero(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.degree() == 0)
    }

    /// Whether `x^e` lies in the ideal.
    pub fn contains(&self, e: &Exponent) -> bool {
        debug_assert_eq!(e.n(), self.n);
        self.generators.iter().any(|g| g.divides(e))
    }

    pub fn contains_coords(&self, e: &[u32]) -> bool {
        self.generators
            .iter()
            .any(|g| g.0.iter().zip(e).all(|(a, b)| a <= b))
    }

    /// Exponent of the pure-power generator `x_var^s`, if the ideal has one.
    pub fn pure_power(&self, var: usize) -> Option<u32> {
        self.generators
            .iter()
            .filter_map(|g| g.pure_power_of(var))
            .min()
    }

    /// Pure-power exponents `s_i` for every variable.
    pub fn pure_powers(&self) -> Result<Vec<u32>> {
        (0..self.n)
            .map(|i| self.pure_power(i).ok_or(Error::NotArtinian { variable: i }))
            .collect()
    }

    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|i| self.pure_power(i).is_some())
    }

    /// Largest exponent of variable `var` over the minimal generators.
    pub fn max_generator_exponent(&self, var: usize) -> u32 {
        self.generators.iter().map(|g| g.0[var]).max().unwrap_or(0)
    }

    /// Strong stability for `x_1 > x_2 > ... > x_n`: for each generator
    /// `x^a` and `j` with `a_j > 0`, every exchange `(x_i / x_j) x^a` with
    /// `i < j` stays in the ideal. Checking the generators is enough, since
    /// a multiple `x^b x^a` exchanges to `x^b (x_i/x_j) x^a` whenever
    /// `a_j > 0`, and otherwise `x^{b - e_j} x_i x^a` is a multiple of `x^a`.
    pub fn is_strongly_stable(&self) -> bool {
        let mut buf = vec![0u32; self.n];
        self.generators.iter().all(|g| {
            (1..self.n).filter(|&j| g.0[j] > 0).all(|j| {
                (0..j).all(|i| {
                    buf.copy_from_slice(&g.0);
                    buf[j] -= 1;
                    buf[i] += 1;
                    self.contains_coords(&buf)
                })
            })
        })
    }

    /// `self : (x^e)`.
    pub fn colon_monomial(&self, e: &Exponent) -> MonomialIdeal {
        minimalize(
            self.generators.iter().map(|g| g.saturating_sub(e)).collect(),
            self.n,
        )
        .expect("dimensions agree")
    }

    /// Intersection of two monomial ideals: pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut lcms = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                lcms.push(a.lcm(b));
            }
        }
        minimalize(lcms, self.n)
    }

    /// `self : other = ∩_g (self : x^g)` over the generators of `other`.
    /// The colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut acc = MonomialIdeal::unit(self.n);
        for g in &other.generators {
            acc = acc.intersect(&self.colon_monomial(g))?;
        }
        Ok(acc)
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut all = self.generators.clone();
        all.extend(other.generators.iter().cloned());
        minimalize(all, self.n)
    }

    /// Product of ideals.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut all = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                all.push(a.add(b));
            }
        }
        minimalize(all, self.n)
    }

    /// Minimal `h` with `x_1^h` in the ideal.
    pub fn min_first_power(&self) -> Option<u32> {
        self.pure_power(0)
    }

    /// Rebuilds the ideal whose standard monomials are exactly `standard`,
    /// which must be an order ideal (closed under taking divisors).
    pub fn from_standard_set(n: usize, standard: &[Exponent]) -> Result<MonomialIdeal> {
        use std::collections::HashSet;
        if standard.is_empty() {
            return Ok(MonomialIdeal::unit(n));
        }
        let set: HashSet<&Exponent> = standard.iter().collect();
        let mut gens = Vec::new();
        for s in standard {
            if s.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: s.n(),
                });
            }
            for i in 0..n {
                let mut c = s.clone();
                c.0[i] += 1;
                if set.contains(&c) {
                    continue;
                }
                let minimal = (0..n).all(|j| {
                    if c.0[j] == 0 {
                        return true;
                    }
                    let mut below = c.clone();
                    below.0[j] -= 1;
                    set.contains(&below)
                });
                if minimal {
                    gens.push(c);
                }
            }
        }
        minimalize(gens, n)
    }

    /// Parses the ideal text grammar with `x, y, z` (implying three
    /// variables) or `x1 .. xn` (implying `n` = largest index).
    pub fn parse(text: &str) -> Result<MonomialIdeal> {
        crate::text::parse_ideal(text, None)
    }

    /// Parses in a fixed number of variables.
    pub fn parse_in(text: &str, n: usize) -> Result<MonomialIdeal> {
        crate::text::parse_ideal(text, Some(n))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&crate::text::format_monomial(g))?;
        }
        Ok(())
    }
}
