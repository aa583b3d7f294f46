//! Dense staircase of an artinian monomial ideal.
//!
//! Membership is stored as a bitmap over the box `[0, s_1) x ... x [0, s_n)`
//! where `s_i` is the pure-power exponent of variable `i`. Every point with
//! some coordinate `>= s_i` lies in the ideal, so lookups clamp instead of
//! growing the box.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;

/// Refuse to materialize boxes larger than this.
pub const MAX_CELLS: u128 = 100_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Staircase {
    n: usize,
    bounds: Vec<u32>,
    strides: Vec<usize>,
    /// cell -> index into `standard`, or `NONE` if the cell lies in the ideal
    std_index: Vec<u32>,
    standard: Vec<Exponent>,
}

impl Staircase {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.n();
        let bounds = ideal.pure_powers()?;
        let cells: u128 = bounds.iter().map(|&b| b as u128).product();
        if cells > MAX_CELLS {
            return Err(Error::TooLarge {
                cells,
                limit: MAX_CELLS,
            });
        }
        let cells = cells as usize;
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * bounds[i + 1] as usize;
        }
        let mut std_index = vec![NONE; cells];
        let mut standard = Vec::new();
        let mut point = vec![0u32; n];
        for (cell, slot) in std_index.iter_mut().enumerate() {
            let mut rest = cell;
            for i in 0..n {
                point[i] = (rest / strides[i]) as u32;
                rest %= strides[i];
            }
            if !ideal.contains_coords(&point) {
                *slot = standard.len() as u32;
                standard.push(Exponent(point.clone()));
            }
        }
        Ok(Staircase {
            n,
            bounds,
            strides,
            std_index,
            standard,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Pure-power exponents `s_i`.
    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Standard monomials in row-major order of the box (lexicographic).
    pub fn standard(&self) -> &[Exponent] {
        &self.standard
    }

    pub fn colength(&self) -> usize {
        self.standard.len()
    }

    /// Index of a standard monomial; `None` for points in the ideal or
    /// outside `N^n`.
    pub fn index_of(&self, p: &[i64]) -> Option<usize> {
        let mut cell = 0usize;
        for i in 0..self.n {
            let c = p[i];
            if c < 0 || c >= self.bounds[i] as i64 {
                return None;
            }
            cell += c as usize * self.strides[i];
        }
        let k = self.std_index[cell];
        (k != NONE).then_some(k as usize)
    }

    /// Membership of a point of `Z^n` in the staircase (points outside
    /// `N^n` are never members).
    pub fn contains(&self, p: &[i64]) -> bool {
        let mut cell = 0usize;
        for i in 0..self.n {
            let c = p[i];
            if c < 0 {
                return false;
            }
            if c >= self.bounds[i] as i64 {
                return true;
            }
            cell += c as usize * self.strides[i];
        }
        self.std_index[cell] == NONE
    }

    pub fn contains_exponent(&self, e: &Exponent) -> bool {
        let p: Vec<i64> = e.0.iter().map(|&c| c as i64).collect();
        self.contains(&p)
    }

    /// Standard monomials killed by every variable.
    pub fn socle(&self) -> SocleSet {
        let mut exponents = Vec::new();
        let mut p = vec![0i64; self.n];
        for s in &self.standard {
            for i in 0..self.n {
                p[i] = s.0[i] as i64;
            }
            let killed = (0..self.n).all(|i| {
                p[i] += 1;
                let inside = self.contains(&p);
                p[i] -= 1;
                inside
            });
            if killed {
                exponents.push(s.clone());
            }
        }
        SocleSet { exponents }
    }
}

/// Number of standard monomials of an artinian ideal.
pub fn colength(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(Staircase::new(ideal)?.colength())
}

pub fn standard_monomials(ideal: &MonomialIdeal) -> Result<Vec<Exponent>> {
    Ok(Staircase::new(ideal)?.standard)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleSet {
    pub exponents: Vec<Exponent>,
}

impl SocleSet {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

pub fn socle(ideal: &MonomialIdeal) -> Result<SocleSet> {
    Ok(Staircase::new(ideal)?.socle())
}

/// The `k[z]`-decomposition `I = ⊕ x^i y^j (z^{b_ij})` of a 3-variable
/// ideal, with `axes = [x-role, y-role, z-role]` choosing which variables
/// play which part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceTable {
    axes: [usize; 3],
    rows: usize,
    cols: usize,
    values: Vec<u32>,
}

impl SliceTable {
    pub fn axes(&self) -> [usize; 3] {
        self.axes
    }

    /// Extent of the stored rectangle; `b` vanishes outside it.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i < self.rows && j < self.cols {
            self.values[i * self.cols + j]
        } else {
            0
        }
    }

    pub fn total(&self) -> u64 {
        self.values.iter().map(|&v| v as u64).sum()
    }

    /// Nonzero entries `((i, j), b_ij)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        (0..self.rows).flat_map(move |i| {
            (0..self.cols).filter_map(move |j| {
                let v = self.get(i, j);
                (v > 0).then_some(((i, j), v))
            })
        })
    }
}

fn require_three(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.n() != 3 {
        return Err(Error::InvalidParameter(format!(
            "expected 3 variables, got {}",
            ideal.n()
        )));
    }
    Ok(())
}

pub fn z_slice_table(ideal: &MonomialIdeal, axes: [usize; 3]) -> Result<SliceTable> {
    require_three(ideal)?;
    let mut sorted = axes;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(Error::InvalidParameter(format!(
            "{axes:?} is not a permutation of 0,1,2"
        )));
    }
    let stairs = Staircase::new(ideal)?;
    let s = stairs.bounds();
    let (rows, cols) = (s[axes[0]] as usize, s[axes[1]] as usize);
    let mut values = vec![0u32; rows * cols];
    let mut p = [0i64; 3];
    for i in 0..rows {
        for j in 0..cols {
            p[axes[0]] = i as i64;
            p[axes[1]] = j as i64;
            let mut k = 0;
            loop {
                p[axes[2]] = k;
                if stairs.contains(&p) {
                    break;
                }
                k += 1;
            }
            values[i * cols + j] = k as u32;
        }
    }
    Ok(SliceTable {
        axes,
        rows,
        cols,
        values,
    })
}

/// The `k[y]`-profile of a 2-variable ideal: `b_i` = least `k` with
/// `x^i y^k` in the ideal, for `i < s_x`.
pub fn column_profile(ideal: &MonomialIdeal) -> Result<Vec<u32>> {
    if ideal.n() != 2 {
        return Err(Error::InvalidParameter(format!(
            "expected 2 variables, got {}",
            ideal.n()
        )));
    }
    let stairs = Staircase::new(ideal)?;
    let s0 = stairs.bounds()[0];
    Ok((0..s0)
        .map(|i| {
            let mut k = 0i64;
            while !stairs.contains(&[i as i64, k]) {
                k += 1;
            }
            k as u32
        })
        .collect())
}

/// `I = ⊕ x^i I_i` with `I_i ⊆ k[y, z]`; the list stops at the first
/// fiber equal to the unit ideal, whose index is `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberDecomposition {
    pub fibers: Vec<MonomialIdeal>,
}

impl FiberDecomposition {
    /// First index with `I_p = k[y, z]`, i.e. the least `p` with `x^p ∈ I`.
    pub fn p(&self) -> usize {
        self.fibers.len() - 1
    }
}

pub fn fiber_decomposition(ideal: &MonomialIdeal) -> Result<FiberDecomposition> {
    require_three(ideal)?;
    let s = ideal.pure_powers()?;
    let fibers = (0..=s[0])
        .map(|i| {
            let gens = ideal
                .generators()
                .iter()
                .filter(|g| g.0[0] <= i)
                .map(|g| Exponent(vec![g.0[1], g.0[2]]))
                .collect();
            MonomialIdeal::new(2, gens).expect("two coordinates")
        })
        .collect();
    Ok(FiberDecomposition { fibers })
}
