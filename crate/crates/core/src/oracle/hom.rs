//! `Hom_S(I, S/J)` as the kernel of the map dual to the Taylor
//! presentation of `I`.
//!
//! A homomorphism `φ` is fixed by the images `φ_a = φ(x^{g_a}) ∈ S/J` of
//! the minimal generators, subject to `(L/g_a) φ_a = (L/g_b) φ_b` for every
//! pair with `L = lcm(g_a, g_b)`. Multiplication by a monomial sends a
//! standard monomial of `J` to another standard monomial or to zero, so
//! the constraint matrix has entries in `{0, ±1}`.

use super::matrix::FiniteFieldMatrix;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, MultiDegree};
use crate::ideal::MonomialIdeal;
use crate::staircase::{colength, Staircase};

pub const DEFAULT_PRIME: u64 = 32003;

/// Generators and pairwise lcms of a monomial ideal: the first two terms
/// of its Taylor resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorPresentation {
    pub generator_degrees: Vec<Exponent>,
    /// `(a, b, lcm(g_a, g_b))` for `a < b`; the relation is
    /// `(lcm/g_a) e_a - (lcm/g_b) e_b`.
    pub syzygies: Vec<(usize, usize, Exponent)>,
}

impl TaylorPresentation {
    pub fn num_generators(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn num_relations(&self) -> usize {
        self.syzygies.len()
    }
}

pub fn taylor_presentation(ideal: &MonomialIdeal) -> Result<TaylorPresentation> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.generators().to_vec();
    let mut syzygies = Vec::with_capacity(gens.len() * (gens.len() - 1) / 2);
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            syzygies.push((a, b, gens[a].lcm(&gens[b])));
        }
    }
    Ok(TaylorPresentation {
        generator_degrees: gens,
        syzygies,
    })
}

fn same_n(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    if i.n() != j.n() {
        return Err(Error::DimensionMismatch {
            expected: i.n(),
            found: j.n(),
        });
    }
    Ok(())
}

fn shifted(e: &Exponent, by: &[i64]) -> Vec<i64> {
    e.0.iter().zip(by).map(|(&a, &b)| a as i64 + b).collect()
}

/// `dim_k Hom_S(I, S/J)` over `Z/p`. `J` must be artinian.
pub fn hom_dim(i: &MonomialIdeal, j: &MonomialIdeal, p: u64) -> Result<u64> {
    same_n(i, j)?;
    let pres = taylor_presentation(i)?;
    let target = Staircase::new(j)?;
    let d = target.colength();
    let m = pres.num_generators();
    let mut mat = FiniteFieldMatrix::zeros(p, pres.num_relations() * d, m * d)?;
    for (row_block, (a, b, lcm)) in pres.syzygies.iter().enumerate() {
        for (col_gen, sign) in [(*a, 1i64), (*b, -1i64)] {
            let g = &pres.generator_degrees[col_gen];
            let shift: Vec<i64> = lcm
                .0
                .iter()
                .zip(&g.0)
                .map(|(&l, &x)| l as i64 - x as i64)
                .collect();
            for (k, mu) in target.standard().iter().enumerate() {
                if let Some(nu) = target.index_of(&shifted(mu, &shift)) {
                    mat.add(row_block * d + nu, col_gen * d + k, sign);
                }
            }
        }
    }
    Ok((m * d - mat.rank()) as u64)
}

/// The degree-`α` strand of [`hom_dim`]: maps with `φ(x^{g_a}) = c_a x^{g_a + α}`.
pub fn hom_dim_graded(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    alpha: &MultiDegree,
    p: u64,
) -> Result<u64> {
    same_n(i, j)?;
    if alpha.n() != i.n() {
        return Err(Error::DimensionMismatch {
            expected: i.n(),
            found: alpha.n(),
        });
    }
    let pres = taylor_presentation(i)?;
    let target = Staircase::new(j)?;
    let live = |e: &Exponent| target.index_of(&shifted(e, alpha.coords())).is_some();

    let cols: Vec<usize> = (0..pres.num_generators())
        .filter(|&a| live(&pres.generator_degrees[a]))
        .collect();
    let rows: Vec<&(usize, usize, Exponent)> =
        pres.syzygies.iter().filter(|(_, _, l)| live(l)).collect();
    let mut col_of = vec![usize::MAX; pres.num_generators()];
    for (c, &a) in cols.iter().enumerate() {
        col_of[a] = c;
    }
    let mut mat = FiniteFieldMatrix::zeros(p, rows.len(), cols.len())?;
    for (r, (a, b, _)) in rows.iter().enumerate() {
        for (g, sign) in [(*a, 1i64), (*b, -1i64)] {
            if col_of[g] != usize::MAX {
                mat.add(r, col_of[g], sign);
            }
        }
    }
    Ok((cols.len() - mat.rank()) as u64)
}

/// Compares `dim Hom(I, S/J)` with `colength(J) + Card(Ĩ:J \ Ĩ)` for
/// 2-variable artinian ideals. Returns `(lhs, rhs, lhs == rhs)`.
pub fn two_var_length_identity_check(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    p: u64,
) -> Result<(u64, u64, bool)> {
    if i.n() != 2 || j.n() != 2 {
        return Err(Error::InvalidParameter(format!(
            "length identity needs 2 variables, got {} and {}",
            i.n(),
            j.n()
        )));
    }
    let lhs = hom_dim(i, j, p)?;
    let quotient = colength(i)? - colength(&i.colon(j)?)?;
    let rhs = (colength(j)? + quotient) as u64;
    Ok((lhs, rhs, lhs == rhs))
}
