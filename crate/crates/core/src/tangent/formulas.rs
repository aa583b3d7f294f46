//! Closed forms for fat points and lexsegment truncations.

use std::collections::BTreeMap;

use crate::binomial::{binomial, checked_binomial};
use crate::error::{Error, Result};
use crate::exponent::MultiDegree;

/// `dim |T(m^r)|_α` in `n` variables: zero unless `ω(α) = -1` and
/// `ω(α⁻) <= r`, in which case it is `C(n + r - ω(α⁻) - 1, n - 1)`.
pub fn fat_point_graded_dim(n: usize, r: u32, alpha: &MultiDegree) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    if alpha.omega() != -1 {
        return Ok(0);
    }
    let neg = alpha.negative_part().degree() as i64;
    if neg > r as i64 {
        return Ok(0);
    }
    checked_binomial(n as i64 + r as i64 - neg - 1, n as i64 - 1)
}

/// Signature dimensions of `T(m^r)` in three variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointDims {
    pub total: u64,
    pub signatures: BTreeMap<String, u64>,
}

/// `ppn = pnp = npp = C(r+3, 4)`, `pnn = npn = nnp = C(r+2, 4)`, total
/// `C(r+2, 2) C(r+1, 2)`.
pub fn fat_point_tangent_dims(r: u32) -> Result<FatPointDims> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let r = r as i64;
    let one_negative = checked_binomial(r + 3, 4)?;
    let two_negative = checked_binomial(r + 2, 4)?;
    let total = checked_binomial(r + 2, 2)?
        .checked_mul(checked_binomial(r + 1, 2)?)
        .ok_or(Error::Overflow)?;
    assert_eq!(total, 3 * one_negative + 3 * two_negative);
    let mut signatures = BTreeMap::new();
    for s in ["ppn", "pnp", "npp"] {
        signatures.insert(s.to_string(), one_negative);
    }
    for s in ["pnn", "npn", "nnp"] {
        signatures.insert(s.to_string(), two_negative);
    }
    Ok(FatPointDims { total, signatures })
}

/// `dim T(E(d))` at `d = C(r+2,3) + r + 3`:
/// `(C(r+2,2) + 1)(C(r+1,2) + 1) + 7`.
pub fn e_ideal_tangent_formula(r: u32) -> Result<u64> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("formula needs r >= 3, got {r}")));
    }
    Ok(socle_part_formula(r) + 7)
}

/// `(C(r+2,2) + 1)(C(r+1,2) + 1)`: socle part of `T(E(d))` and `T(J)` at
/// `d = C(r+2,3) + r + 3`.
pub fn socle_part_formula(r: u32) -> u64 {
    let r = r as i64;
    (binomial(r + 2, 2) + 1) * (binomial(r + 1, 2) + 1)
}

/// `C(r+2, 3) + r + 3`, the colength where `E(d)` is beaten by `J`.
pub fn counterexample_colength(r: u32) -> u64 {
    binomial(r as i64 + 2, 3) + r as u64 + 3
}

/// Least `r` with `d <= C(r+2, 3)`.
pub fn minimal_r(d: u64) -> u32 {
    let mut r = 1u32;
    while binomial(r as i64 + 2, 3) < d {
        r += 1;
    }
    r
}

/// `dim T(m^r)` in three variables.
pub fn fat_point_total(r: u32) -> u64 {
    binomial(r as i64 + 2, 2) * binomial(r as i64 + 1, 2)
}
