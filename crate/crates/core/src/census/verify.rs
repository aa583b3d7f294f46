//! Runs every tangent-space identity and bound over the enumerated ideals
//! and reports, per statement, whether it held and where it first failed.

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_all_artinian, enumerate_strongly_stable};
use super::search::check_budget;
use crate::binomial::binomial;
use crate::error::Result;
use crate::families::power_ideal;
use crate::ideal::MonomialIdeal;
use crate::oracle::{hom_dim, DEFAULT_PRIME};
use crate::staircase::{column_profile, socle, z_slice_table};
use crate::tangent::{
    fat_point_total, minimal_r, ppn_upper_bound_from, singular_by_generators, tangent_report,
    TangentReport,
};

/// Exhaustive enumeration of all artinian ideals stops here.
pub const ALL_IDEALS_MAX_D: u32 = 8;
/// Two-variable checks run up to this colength.
pub const PLANE_MAX_D: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded but not asserted (open inequalities).
    Observed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub statement: String,
    pub status: Status,
    /// Number of ideals the statement was evaluated on.
    pub checked: u64,
    /// First ideal where it failed (for `Observed`, where it did not hold).
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub d_max: u32,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn row(&self, statement: &str) -> Option<&VerifyRow> {
        self.rows.iter().find(|r| r.statement == statement)
    }
}

/// Accumulates one statement over many ideals.
struct Tally {
    statement: String,
    asserted: bool,
    checked: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(statement: &str, asserted: bool) -> Self {
        Tally {
            statement: statement.to_string(),
            asserted,
            checked: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ideal: &MonomialIdeal, ok: bool) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(ideal.to_string());
        }
    }

    fn finish(self) -> VerifyRow {
        let status = match (self.counterexample.is_some(), self.asserted) {
            (false, _) => Status::Pass,
            (true, true) => Status::Fail,
            (true, false) => Status::Observed,
        };
        VerifyRow {
            statement: self.statement,
            status,
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

/// `ppn = nnp + d`, `pnp = npn + d`, `npp = pnn + d`.
pub fn pairing_holds(rep: &TangentReport) -> bool {
    [("ppn", "nnp"), ("pnp", "npn"), ("npp", "pnn")]
        .iter()
        .all(|(a, b)| rep.sig(a) == rep.sig(b) + rep.d)
}

pub fn parity_holds(rep: &TangentReport) -> bool {
    rep.total % 2 == rep.d % 2
}

/// Two-negative signatures vanish exactly when `total = 3d`.
pub fn smoothness_criterion_holds(rep: &TangentReport) -> bool {
    let vanish = rep.sig("pnn") + rep.sig("npn") + rep.sig("nnp") == 0;
    vanish == (rep.total == 3 * rep.d)
}

pub fn is_smooth(rep: &TangentReport) -> bool {
    rep.total == 3 * rep.d
}

/// Recomputes `Σ_{α1=i,α2=j} dim = b_ij + Σ_{α1=-i-1,α2=-j-1} dim` from
/// `per_degree` and the slice table, independently of `slice_pairs`.
pub fn slice_duality_holds(rep: &TangentReport) -> Result<bool> {
    let table = z_slice_table(&rep.ideal, [0, 1, 2])?;
    let plane = |a: i64, b: i64| -> u64 {
        rep.per_degree
            .iter()
            .filter(|(k, _)| k.0[0] == a && k.0[1] == b)
            .map(|(_, v)| *v)
            .sum()
    };
    let (rows, cols) = table.shape();
    for i in 0..rows {
        for j in 0..cols {
            let (a, b) = (i as i64, j as i64);
            if plane(a, b) != table.get(i, j) as u64 + plane(-a - 1, -b - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `numgens(I) · |soc(S/I)|` equals the socle dimension in the report.
pub fn socle_count_holds(rep: &TangentReport) -> Result<bool> {
    let expected = rep.ideal.num_generators() as u64 * socle(&rep.ideal)?.len() as u64;
    Ok(expected == rep.socle_dim && rep.socle_dim == rep.singleton_components)
}

/// `Σ_{α3<0} dim |T|_{(a1,a2,α3)}` is at most the slice bound for every
/// `a1, a2 >= 0`.
pub fn ppn_bound_holds(rep: &TangentReport) -> Result<bool> {
    let table = z_slice_table(&rep.ideal, [0, 1, 2])?;
    let (rows, cols) = table.shape();
    for a1 in 0..=rows {
        for a2 in 0..=cols {
            let lhs: u64 = rep
                .per_degree
                .iter()
                .filter(|(k, _)| k.0[0] == a1 as i64 && k.0[1] == a2 as i64 && k.0[2] < 0)
                .map(|(_, v)| *v)
                .sum();
            if lhs > ppn_upper_bound_from(&table, a1, a2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// In two variables: `pn = np = d`, `total = 2d`, and for each `i` the
/// `x`-degree slices `i` and `-i-1` both have dimension `b_i`.
pub fn plane_identities_hold(rep: &TangentReport) -> Result<bool> {
    let b = column_profile(&rep.ideal)?;
    let slice = |j: i64| rep.x_degree_slices.get(&j).copied().unwrap_or(0);
    let per_slice = b
        .iter()
        .enumerate()
        .all(|(i, &bi)| slice(i as i64) == bi as u64 && slice(-(i as i64) - 1) == bi as u64);
    // nothing outside the slices `-s_x .. s_x - 1`
    let s = b.len() as i64;
    let contained = rep.x_degree_slices.keys().all(|&j| -s <= j && j < s);
    Ok(rep.sig("pn") == rep.d
        && rep.sig("np") == rep.d
        && rep.total == 2 * rep.d
        && per_slice
        && contained)
}

type Compute<'a> = dyn Fn(&MonomialIdeal) -> Result<TangentReport> + Sync + 'a;

pub fn verify_theorem_suite(d_max: u32, oracle: bool) -> Result<VerifyReport> {
    verify_theorem_suite_with(d_max, oracle, &tangent_report)
}

/// [`verify_theorem_suite`] with a replaceable tangent computation, so a
/// deliberately broken engine can be shown to fail.
pub fn verify_theorem_suite_with(
    d_max: u32,
    oracle: bool,
    compute: &Compute<'_>,
) -> Result<VerifyReport> {
    check_budget(d_max, false)?;
    let all_d = d_max.min(ALL_IDEALS_MAX_D);

    let mut all_ideals = Vec::new();
    for d in 1..=all_d {
        all_ideals.extend(enumerate_all_artinian(3, d)?);
    }
    let mut stable = Vec::new();
    for d in 1..=d_max {
        stable.extend(enumerate_strongly_stable(d));
    }
    let all_reports: Vec<TangentReport> = all_ideals.par_iter().map(compute).collect::<Result<_>>()?;
    let stable_reports: Vec<TangentReport> = stable.par_iter().map(compute).collect::<Result<_>>()?;

    let mut pairing = Tally::new("signature pairing ppn = nnp + d (and rotations)", true);
    let mut parity = Tally::new("total tangent dimension has the parity of d", true);
    let mut duality = Tally::new("slice duality against the k[z]-heights", true);
    let mut socle_row = Tally::new("socle maps: numgens * |soc(S/I)| singleton components", true);
    let mut smooth = Tally::new("smooth iff pnn = npn = nnp = 0 iff total = 3d", true);
    let mut triple = Tally::new("generator triple forces a singular point", true);
    let mut ppn = Tally::new("ppn slice bound for every (a1, a2)", true);
    let mut global = Tally::new("3 * total <= 4 * dim T(m^r) for minimal r", true);

    // every ideal, general statements
    for rep in all_reports.iter().chain(&stable_reports) {
        let i = &rep.ideal;
        pairing.record(i, pairing_holds(rep));
        parity.record(i, parity_holds(rep));
        duality.record(i, slice_duality_holds(rep)?);
        socle_row.record(i, socle_count_holds(rep)?);
        smooth.record(i, smoothness_criterion_holds(rep));
        if singular_by_generators(i) {
            triple.record(i, !is_smooth(rep));
        }
        ppn.record(i, ppn_bound_holds(rep)?);
        let r = minimal_r(rep.d);
        global.record(i, 3 * rep.total <= 4 * fat_point_total(r));
    }

    let mut x_in_i = Tally::new("strongly stable: smooth iff x in I", true);
    let mut p_below_r = Tally::new("strongly stable: x^r in I when d <= C(r+2,3)", true);
    let mut linear = Tally::new("strongly stable: total <= (2p+1) d with p the least x-power", true);
    let mut quarter =
        Tally::new("strongly stable: 4p <= 3r+1 implies total <= dim T(m^r)", true);
    let mut extremal = Tally::new(
        "strongly stable at d = C(r+2,3): ppn, pnp <= C(r+3,4) and npn, nnp <= C(r+2,4), equality only at m^r",
        true,
    );
    let mut open = Tally::new(
        "strongly stable at d = C(r+2,3): npp <= C(r+3,4) and pnn <= C(r+2,4) (open)",
        false,
    );
    for rep in &stable_reports {
        let i = &rep.ideal;
        x_in_i.record(i, is_smooth(rep) == i.contains_coords(&[1, 0, 0]));
        let r = minimal_r(rep.d);
        let p = i.min_first_power().expect("artinian") as u64;
        p_below_r.record(i, p <= r as u64);
        linear.record(i, rep.total <= (2 * p + 1) * rep.d);
        if 4 * p <= 3 * r as u64 + 1 {
            quarter.record(i, rep.total <= fat_point_total(r));
        }
        if rep.d == binomial(r as i64 + 2, 3) {
            let hi = binomial(r as i64 + 3, 4);
            let lo = binomial(r as i64 + 2, 4);
            let fat = *i == power_ideal(3, r)?;
            let sides = [
                (rep.sig("ppn"), hi),
                (rep.sig("pnp"), hi),
                (rep.sig("npn"), lo),
                (rep.sig("nnp"), lo),
            ];
            let ok = sides
                .iter()
                .all(|&(v, bound)| v < bound || (v == bound && fat));
            extremal.record(i, ok);
            open.record(i, rep.sig("npp") <= hi && rep.sig("pnn") <= lo);
        }
    }

    let mut complete = Tally::new("strongly stable enumeration equals filtered brute force", true);
    for d in 1..=all_d {
        let mut filtered: Vec<MonomialIdeal> = enumerate_all_artinian(3, d)?
            .into_iter()
            .filter(|i| i.is_strongly_stable())
            .collect();
        let mut listed = enumerate_strongly_stable(d);
        filtered.sort();
        listed.sort();
        let witness = MonomialIdeal::parse(&format!("x, y, z^{d}"))?;
        complete.record(&witness, filtered == listed);
    }

    let mut plane = Tally::new("two variables: pn = np = d and x-slices equal b_i", true);
    let plane_ideals: Vec<MonomialIdeal> = (1..=d_max.min(PLANE_MAX_D))
        .map(|d| enumerate_all_artinian(2, d))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let plane_reports: Vec<TangentReport> = plane_ideals.par_iter().map(compute).collect::<Result<_>>()?;
    for rep in &plane_reports {
        plane.record(&rep.ideal, plane_identities_hold(rep)?);
    }

    let mut rows = vec![
        pairing, parity, duality, socle_row, smooth, triple, ppn, global, x_in_i, p_below_r,
        linear, quarter, extremal, open, complete, plane,
    ];

    if oracle {
        let mut agree = Tally::new("oracle: hom_dim(I, S/I) equals the tangent total", true);
        let mut primes = Tally::new("oracle: same kernel dimension at p = 2, 3, 32003", true);
        let results: Vec<(u64, [u64; 3])> = all_reports
            .par_iter()
            .map(|rep| -> Result<(u64, [u64; 3])> {
                let i = &rep.ideal;
                let at = |p| hom_dim(i, i, p);
                Ok((at(DEFAULT_PRIME)?, [at(2)?, at(3)?, at(DEFAULT_PRIME)?]))
            })
            .collect::<Result<_>>()?;
        for (rep, (h, ps)) in all_reports.iter().zip(results) {
            agree.record(&rep.ideal, h == rep.total);
            primes.record(&rep.ideal, ps[0] == ps[1] && ps[1] == ps[2]);
        }
        rows.push(agree);
        rows.push(primes);
    }

    Ok(VerifyReport {
        d_max,
        rows: rows.into_iter().map(Tally::finish).collect(),
    })
}
