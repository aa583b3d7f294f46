//! Smoothness tests and the slice bound on `T_ppn`.

use super::report::{tangent_report, TangentReport};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::staircase::{z_slice_table, SliceTable};

fn require_three(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.n() != 3 {
        return Err(Error::InvalidParameter(format!(
            "expected 3 variables, got {}",
            ideal.n()
        )));
    }
    Ok(())
}

/// Smoothness verdict read off a finished report: the two-negative
/// signatures all vanish. Equivalent to `total == 3d`.
pub fn report_is_smooth(report: &TangentReport) -> bool {
    let smooth = ["pnn", "npn", "nnp"].iter().all(|s| report.sig(s) == 0);
    assert_eq!(
        smooth,
        report.total == 3 * report.d,
        "smoothness criterion disagrees with 3d for {}",
        report.ideal
    );
    smooth
}

pub fn is_smooth_monomial_point(ideal: &MonomialIdeal) -> Result<bool> {
    require_three(ideal)?;
    Ok(report_is_smooth(&tangent_report(ideal)?))
}

/// Looks for minimal generators `x^a1 y^a2`, `x^b1 z^b3`, `y^c2 z^c3`
/// (all six exponents positive) with `a1 >= b1, a2 >= c2`, or
/// `b1 >= a1, b3 >= c3`, or `c2 >= a2, c3 >= b3`. Such a triple forces a
/// socle tangent vector of a two-negative signature, hence singularity.
pub fn singular_by_generators(ideal: &MonomialIdeal) -> bool {
    if ideal.n() != 3 {
        return false;
    }
    let mixed = |zero: usize| -> Vec<[u32; 3]> {
        ideal
            .generators()
            .iter()
            .filter(|g| g.0[zero] == 0 && (0..3).filter(|&k| k != zero).all(|k| g.0[k] > 0))
            .map(|g| [g.0[0], g.0[1], g.0[2]])
            .collect()
    };
    let xy = mixed(2);
    let xz = mixed(1);
    let yz = mixed(0);
    for a in &xy {
        for b in &xz {
            for c in &yz {
                if (a[0] >= b[0] && a[1] >= c[1])
                    || (b[0] >= a[0] && b[2] >= c[2])
                    || (c[1] >= a[1] && c[2] >= b[2])
                {
                    return true;
                }
            }
        }
    }
    false
}

/// `Σ_{i >= a1, j >= a2} (b_ij - max(b_{i+1,j}, b_{i,j+1}))`, an upper
/// bound for `Σ_{α3 < 0} dim |T(I)|_{(a1, a2, α3)}`.
pub fn ppn_upper_bound(ideal: &MonomialIdeal, a1: usize, a2: usize) -> Result<u64> {
    require_three(ideal)?;
    let table = z_slice_table(ideal, [0, 1, 2])?;
    Ok(ppn_upper_bound_from(&table, a1, a2))
}

pub fn ppn_upper_bound_from(table: &SliceTable, a1: usize, a2: usize) -> u64 {
    let (rows, cols) = table.shape();
    let mut sum = 0;
    for i in a1..rows {
        for j in a2..cols {
            let b = table.get(i, j);
            let m = table.get(i + 1, j).max(table.get(i, j + 1));
            sum += (b - m) as u64;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial;
    use crate::families::power_ideal;

    fn parse(s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(s).unwrap()
    }

    #[test]
    fn curvilinear_points_are_smooth() {
        for d in 1..8 {
            let i = MonomialIdeal::from_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, d]]).unwrap();
            assert!(is_smooth_monomial_point(&i).unwrap());
            assert_eq!(tangent_report(&i).unwrap().total, 3 * d as u64);
        }
    }

    #[test]
    fn fat_square_is_singular() {
        let m2 = power_ideal(3, 2).unwrap();
        assert!(!is_smooth_monomial_point(&m2).unwrap());
        assert_eq!(tangent_report(&m2).unwrap().total, 18);
    }

    #[test]
    fn generator_triples() {
        assert!(singular_by_generators(&parse("x^3, y^3, z^3, x*y, x*z, y*z")));
        assert!(singular_by_generators(&power_ideal(3, 2).unwrap()));
        assert!(!singular_by_generators(&parse("x, y, z^3")));
        assert!(!is_smooth_monomial_point(&parse("x^3, y^3, z^3, x*y, x*z, y*z")).unwrap());
    }

    #[test]
    fn ppn_bound_on_fat_points() {
        for r in 1..6u32 {
            let m = power_ideal(3, r).unwrap();
            assert_eq!(ppn_upper_bound(&m, 0, 0).unwrap(), binomial(r as i64 + 1, 2));
            assert_eq!(ppn_upper_bound(&m, r as usize, 0).unwrap(), 0);
            assert_eq!(ppn_upper_bound(&m, 0, r as usize + 3).unwrap(), 0);
        }
    }
}
