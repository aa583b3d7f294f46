//! Bounded connected components of `(Ĩ + α) \ Ĩ`.
//!
//! Each bounded component `U` gives the basis vector of `|T(I)|_α` sending
//! `x^β ↦ x^{α+β}` when `α + β ∈ U` and to zero otherwise. A component is
//! bounded exactly when it stays inside `N^n`, so only the candidate set
//! `C = {γ ∈ N^n \ Ĩ : γ - α ∈ Ĩ}` is ever materialized. A piece of `C` is
//! a whole bounded component iff none of its points `γ` with `γ_i = 0` has
//! `γ - e_i` in `Ĩ + α`; such a neighbour lies outside `N^n` and the
//! component then runs off to infinity along the other coordinates.

use crate::error::{Error, Result};
use crate::exponent::{Exponent, MultiDegree};
use crate::ideal::MonomialIdeal;
use crate::staircase::Staircase;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSet {
    pub points: Vec<Exponent>,
    pub bounded: bool,
}

/// Per-degree summary: bounded components and how many of them are
/// single points (the socle maps).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegreeCount {
    pub bounded: u64,
    pub singletons: u64,
}

/// Reusable scratch space for repeated component searches on one staircase.
pub struct ComponentSearch<'a> {
    stairs: &'a Staircase,
    coords: Vec<i64>,
    in_candidate: Vec<u32>,
    seen: Vec<u32>,
    epoch: u32,
    members: Vec<usize>,
    stack: Vec<usize>,
    point: Vec<i64>,
}

impl<'a> ComponentSearch<'a> {
    pub fn new(stairs: &'a Staircase) -> Self {
        let n = stairs.n();
        let d = stairs.colength();
        let mut coords = Vec::with_capacity(n * d);
        for s in stairs.standard() {
            coords.extend(s.0.iter().map(|&c| c as i64));
        }
        ComponentSearch {
            stairs,
            coords,
            in_candidate: vec![0; d],
            seen: vec![0; d],
            epoch: 0,
            members: Vec::new(),
            stack: Vec::new(),
            point: vec![0; n],
        }
    }

    fn mark_candidates(&mut self, alpha: &[i64]) {
        let n = self.stairs.n();
        self.epoch += 1;
        self.members.clear();
        for k in 0..self.stairs.colength() {
            let g = &self.coords[k * n..(k + 1) * n];
            let mut nonneg = true;
            for i in 0..n {
                self.point[i] = g[i] - alpha[i];
                if self.point[i] < 0 {
                    nonneg = false;
                    break;
                }
            }
            if nonneg && self.stairs.contains(&self.point) {
                self.in_candidate[k] = self.epoch;
                self.members.push(k);
            }
        }
    }

    /// Walks every component of the candidate set, calling `visit` with
    /// the member indices and the boundedness flag.
    fn walk(&mut self, alpha: &[i64], mut visit: impl FnMut(&[usize], bool)) {
        self.mark_candidates(alpha);
        let n = self.stairs.n();
        let members = std::mem::take(&mut self.members);
        let mut component = Vec::new();
        for &start in &members {
            if self.seen[start] == self.epoch {
                continue;
            }
            self.seen[start] = self.epoch;
            self.stack.push(start);
            component.clear();
            let mut bounded = true;
            while let Some(k) = self.stack.pop() {
                component.push(k);
                for i in 0..n {
                    self.point.copy_from_slice(&self.coords[k * n..(k + 1) * n]);
                    let base = self.point[i];
                    if bounded && base == 0 {
                        // γ - e_i - α ∈ Ĩ means the component leaves N^n
                        let mut escapes = true;
                        for t in 0..n {
                            let c = self.point[t] - alpha[t] - if t == i { 1 } else { 0 };
                            if c < 0 {
                                escapes = false;
                                break;
                            }
                            self.point[t] = c;
                        }
                        if escapes && self.stairs.contains(&self.point) {
                            bounded = false;
                        }
                        self.point.copy_from_slice(&self.coords[k * n..(k + 1) * n]);
                    }
                    for delta in [-1i64, 1] {
                        self.point[i] = base + delta;
                        if let Some(k2) = self.stairs.index_of(&self.point) {
                            if self.in_candidate[k2] == self.epoch && self.seen[k2] != self.epoch {
                                self.seen[k2] = self.epoch;
                                self.stack.push(k2);
                            }
                        }
                    }
                    self.point[i] = base;
                }
            }
            visit(&component, bounded);
        }
        self.members = members;
    }

    pub fn count(&mut self, alpha: &[i64]) -> DegreeCount {
        let mut out = DegreeCount::default();
        self.walk(alpha, |comp, bounded| {
            if bounded {
                out.bounded += 1;
                if comp.len() == 1 {
                    out.singletons += 1;
                }
            }
        });
        out
    }

    pub fn components(&mut self, alpha: &[i64]) -> Vec<ComponentSet> {
        let standard = self.stairs.standard();
        let mut out = Vec::new();
        self.walk(alpha, |comp, bounded| {
            let mut points: Vec<Exponent> = comp.iter().map(|&k| standard[k].clone()).collect();
            points.sort();
            out.push(ComponentSet { points, bounded });
        });
        out
    }
}

/// `dim_k |T(I)|_α` together with all components of the candidate set
/// (bounded ones are the basis; unbounded pieces are reported for
/// inspection).
pub fn graded_tangent_dim(
    ideal: &MonomialIdeal,
    alpha: &MultiDegree,
) -> Result<(u64, Vec<ComponentSet>)> {
    if alpha.n() != ideal.n() {
        return Err(Error::DimensionMismatch {
            expected: ideal.n(),
            found: alpha.n(),
        });
    }
    let stairs = Staircase::new(ideal)?;
    let mut search = ComponentSearch::new(&stairs);
    let comps = search.components(alpha.coords());
    let count = comps.iter().filter(|c| c.bounded).count() as u64;
    Ok((count, comps))
}

/// Box `[-G_i, s_i - 1]` containing every α with `|T(I)|_α ≠ 0`, where
/// `G_i` is the largest exponent of variable `i` among the minimal
/// generators and `s_i` the pure-power exponent.
///
/// A nonzero basis map sends some minimal generator `x^g` to a standard
/// monomial, so `0 <= α_i + g_i < s_i`, giving `-G_i <= α_i <= s_i - 1`.
pub fn degree_box(ideal: &MonomialIdeal) -> Result<Vec<(i64, i64)>> {
    let s = ideal.pure_powers()?;
    Ok((0..ideal.n())
        .map(|i| (-(ideal.max_generator_exponent(i) as i64), s[i] as i64 - 1))
        .collect())
}

/// Every point of a box, lexicographically.
pub fn box_points(bounds: &[(i64, i64)]) -> Vec<MultiDegree> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &(lo, hi) in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=hi {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(MultiDegree).collect()
}

/// The degrees `γ - g` for standard `γ` and minimal generator `g`: the
/// only places a nonzero graded piece can live. Sorted, deduplicated.
pub fn candidate_degrees(ideal: &MonomialIdeal, stairs: &Staircase) -> Vec<MultiDegree> {
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(stairs.colength() * ideal.num_generators());
    for s in stairs.standard() {
        for g in ideal.generators() {
            out.push(
                s.0.iter()
                    .zip(&g.0)
                    .map(|(&a, &b)| a as i64 - b as i64)
                    .collect(),
            );
        }
    }
    out.sort_unstable();
    out.dedup();
    out.into_iter().map(MultiDegree).collect()
}
