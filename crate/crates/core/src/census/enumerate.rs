//! Enumeration of artinian monomial ideals in three variables.
//!
//! An ideal `I ⊆ k[x, y, z]` is recorded by its fibers `I = ⊕ x^i I_i` with
//! `I_i ⊆ k[y, z]`, and each fiber by its slice heights
//! `b_j = min{c : y^j z^c ∈ I_i}`. The chain `I_0 ⊆ I_1 ⊆ ...` ends at the
//! unit ideal, and the colength is the sum of all heights.
//!
//! # Strongly stable ideals
//!
//! `I` is strongly stable iff
//!
//! 1. every fiber is strongly stable in `k[y, z]`, i.e. its heights
//!    decrease strictly until they reach 0, and
//! 2. `I_i : y ⊆ I_{i+1}` for all `i`, i.e. `b^{(i+1)}_j <= b^{(i)}_{j+1}`.
//!
//! Necessity: (1) is the `z → y` exchange inside a fiber and (2) is the
//! `y → x` exchange `x^i y^{j+1} z^c ↦ x^{i+1} y^j z^c`.
//! Sufficiency: (1) and (2) give the `z → y` and `y → x` exchanges. For
//! `z → x`, take `x^i y^j z^{c+1} ∈ I`; by (1) `y^{j+1} z^c ∈ I_i`, and by (2)
//! `y^j z^c ∈ I_{i+1}`, so `x^{i+1} y^j z^c ∈ I`. Condition (2) also implies
//! `I_i ⊆ I_{i+1}`, since `b^{(i+1)}_j <= b^{(i)}_{j+1} <= b^{(i)}_j`.
//!
//! Given fiber `i`, every later fiber has weight at most that of the
//! shifted heights, so the remaining colength is at most `Σ_j j·b^{(i)}_j`;
//! this prunes the search.
//!
//! Fibers are tried by descending weight and, within a weight, in
//! descending lexicographic order, which fixes the output order.
//!
//! # All artinian ideals
//!
//! Dropping strong stability, the heights form a plane partition: each
//! fiber is a partition (nonincreasing heights) and `b^{(i+1)}_j <= b^{(i)}_j`.

use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;

/// Largest colength accepted by [`enumerate_all_artinian`].
pub const ALL_ARTINIAN_MAX_D: u32 = 10;

/// Heights `b_0 > b_1 > ... > b_{a-1} > 0` of a strongly stable ideal in
/// `k[y, z]`: `b_j` is the number of standard monomials `y^j z^c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::InvalidParameter(format!(
                "{parts:?} is not a strictly decreasing sequence of positive integers"
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `b_j`, zero past the end.
    pub fn get(&self, j: usize) -> u32 {
        self.parts.get(j).copied().unwrap_or(0)
    }

    /// The ideal of `k[y, z]` with these heights.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let mut gens = vec![Exponent(vec![self.parts.len() as u32, 0])];
        for (j, &b) in self.parts.iter().enumerate() {
            gens.push(Exponent(vec![j as u32, b]));
        }
        MonomialIdeal::new(2, gens).expect("two coordinates")
    }
}

/// All sequences of length at most `caps.len()` with `q_j <= caps[j]`,
/// positive entries, fixed `weight`, and decreasing (strictly when
/// `strict`). Emitted in descending lexicographic order.
fn bounded_partitions(caps: &[u32], weight: u32, strict: bool, out: &mut Vec<Vec<u32>>) {
    fn rec(
        caps: &[u32],
        left: u32,
        prev: u32,
        strict: bool,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let j = cur.len();
        if j >= caps.len() {
            return;
        }
        let hi = caps[j].min(left).min(if strict { prev.saturating_sub(1) } else { prev });
        // the tail below `v` can hold at most v-1 + v-2 + ... (strict) or
        // v * (remaining slots) (plain); skip values that cannot finish
        for v in (1..=hi).rev() {
            let rest = left - v;
            let room: u64 = caps[j + 1..]
                .iter()
                .scan(v, |bound, &c| {
                    let b = if strict { bound.saturating_sub(1) } else { *bound }.min(c);
                    *bound = b;
                    Some(b as u64)
                })
                .sum();
            if (rest as u64) > room {
                break;
            }
            cur.push(v);
            rec(caps, rest, v, strict, cur, out);
            cur.pop();
        }
    }
    rec(caps, weight, u32::MAX, strict, &mut Vec::new(), out);
}

fn ideal_from_fibers(fibers: &[Vec<u32>]) -> MonomialIdeal {
    let mut standard = Vec::new();
    for (i, f) in fibers.iter().enumerate() {
        for (j, &b) in f.iter().enumerate() {
            for c in 0..b {
                standard.push(Exponent(vec![i as u32, j as u32, c]));
            }
        }
    }
    MonomialIdeal::from_standard_set(3, &standard).expect("fibers describe an order ideal")
}

/// Depth-first search over fiber chains. `strict` selects strongly stable
/// (strict heights, shifted caps) versus all artinian (plain heights,
/// unshifted caps).
fn visit_chains(d: u32, strict: bool, visit: &mut dyn FnMut(&[Vec<u32>])) {
    fn rec(
        left: u32,
        strict: bool,
        chain: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if left == 0 {
            visit(chain);
            return;
        }
        let caps: Vec<u32> = match chain.last() {
            None => vec![left; left as usize],
            Some(prev) if strict => prev.iter().skip(1).copied().collect(),
            Some(prev) => prev.clone(),
        };
        let max_weight = caps.iter().map(|&c| c as u64).sum::<u64>().min(left as u64) as u32;
        for w in (1..=max_weight).rev() {
            let mut options = Vec::new();
            bounded_partitions(&caps, w, strict, &mut options);
            for q in options {
                let rest = left - w;
                if strict {
                    let reach: u64 = q.iter().enumerate().map(|(j, &b)| j as u64 * b as u64).sum();
                    if rest as u64 > reach {
                        continue;
                    }
                }
                chain.push(q);
                rec(rest, strict, chain, visit);
                chain.pop();
            }
        }
    }
    rec(d, strict, &mut Vec::new(), visit);
}

/// Calls `visit` with each strongly stable artinian ideal of colength `d`
/// in `k[x, y, z]`, once each, in a fixed order.
pub fn visit_strongly_stable(d: u32, mut visit: impl FnMut(MonomialIdeal)) {
    if d == 0 {
        return;
    }
    visit_chains(d, true, &mut |chain| visit(ideal_from_fibers(chain)));
}

pub fn enumerate_strongly_stable(d: u32) -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    visit_strongly_stable(d, |i| out.push(i));
    out
}

/// Number of strongly stable ideals of colength `d`, without building them.
pub fn count_strongly_stable(d: u32) -> u64 {
    let mut count = 0;
    if d > 0 {
        visit_chains(d, true, &mut |_| count += 1);
    }
    count
}

/// Every artinian monomial ideal of colength `d` in `n ∈ {2, 3}`
/// variables: partitions of `d` for `n = 2`, plane partitions for `n = 3`.
pub fn enumerate_all_artinian(n: usize, d: u32) -> Result<Vec<MonomialIdeal>> {
    if d > ALL_ARTINIAN_MAX_D {
        return Err(Error::InvalidParameter(format!(
            "enumerating all ideals is limited to colength {ALL_ARTINIAN_MAX_D}, got {d}"
        )));
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    match n {
        2 => {
            let mut parts = Vec::new();
            bounded_partitions(&vec![d; d as usize], d, false, &mut parts);
            Ok(parts
                .into_iter()
                .map(|heights| {
                    let standard: Vec<Exponent> = heights
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &h)| (0..h).map(move |c| Exponent(vec![i as u32, c])))
                        .collect();
                    MonomialIdeal::from_standard_set(2, &standard).expect("order ideal")
                })
                .collect())
        }
        3 => {
            let mut out = Vec::new();
            visit_chains(d, false, &mut |chain| out.push(ideal_from_fibers(chain)));
            Ok(out)
        }
        _ => Err(Error::InvalidParameter(format!(
            "enumeration supports 2 or 3 variables, got {n}"
        ))),
    }
}

/// A random artinian monomial ideal of colength `d`, grown from `{1}` by
/// repeatedly adding a uniformly chosen addable standard monomial.
pub fn random_artinian<R: Rng + ?Sized>(rng: &mut R, n: usize, d: u32) -> Result<MonomialIdeal> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(
            "random ideals need n >= 1 and d >= 1".into(),
        ));
    }
    let mut cells: Vec<Exponent> = vec![Exponent::zero(n)];
    let mut set: HashSet<Exponent> = cells.iter().cloned().collect();
    while cells.len() < d as usize {
        let mut addable: Vec<Exponent> = Vec::new();
        for c in &cells {
            for i in 0..n {
                let mut e = c.clone();
                e.0[i] += 1;
                if set.contains(&e) || addable.contains(&e) {
                    continue;
                }
                let ok = (0..n).all(|j| {
                    e.0[j] == 0 || {
                        let mut below = e.clone();
                        below.0[j] -= 1;
                        set.contains(&below)
                    }
                });
                if ok {
                    addable.push(e);
                }
            }
        }
        addable.sort();
        let pick = addable.choose(rng).expect("an order ideal always has addable cells").clone();
        set.insert(pick.clone());
        cells.push(pick);
    }
    MonomialIdeal::from_standard_set(n, &cells)
}
