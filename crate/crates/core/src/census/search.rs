//! Batch tangent computations over the strongly stable census.

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_strongly_stable;
use super::record::{flags_for, special_ideals, CensusRecord};
use crate::error::{Error, Result};
use crate::families::{counterexample_colength, counterexample_ideal, lex_truncation_ideal};
use crate::ideal::MonomialIdeal;
use crate::tangent::{e_ideal_tangent_formula, socle_part_formula, tangent_report, TangentReport};

/// Largest colength searched without an explicit override.
pub const CENSUS_BUDGET: u32 = 60;

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Keep only ideals with `x^p ∉ I`.
    pub exclude_x_power: Option<u32>,
    pub budget_override: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

/// Runs `f` on a pool with `workers` threads (or the global pool).
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Tangent reports for `ideals`, in input order, computed in parallel.
pub fn reports_in_order(ideals: &[MonomialIdeal]) -> Result<Vec<TangentReport>> {
    ideals.par_iter().map(tangent_report).collect()
}

pub fn check_budget(d: u32, budget_override: bool) -> Result<()> {
    if d > CENSUS_BUDGET && !budget_override {
        return Err(Error::Budget {
            d,
            limit: CENSUS_BUDGET,
        });
    }
    Ok(())
}

/// Strongly stable ideals of colength `d` (optionally with `x^p ∉ I`),
/// evaluated and sorted by tangent total, largest first. Ties keep the
/// enumeration order.
pub fn search_extremes(d: u32, opts: &SearchOptions) -> Result<Vec<CensusRecord>> {
    check_budget(d, opts.budget_override)?;
    let ideals: Vec<MonomialIdeal> = enumerate_strongly_stable(d)
        .into_iter()
        .filter(|i| match opts.exclude_x_power {
            Some(p) => i.min_first_power().is_none_or(|s| s > p),
            None => true,
        })
        .collect();
    let specials = special_ideals(d as u64);
    let mut records: Vec<CensusRecord> = with_workers(opts.workers, || {
        ideals
            .par_iter()
            .map(|i| {
                tangent_report(i).map(|r| CensusRecord::from_report(&r, flags_for(i, &specials)))
            })
            .collect::<Result<Vec<_>>>()
    })??;
    records.sort_by_key(|r| std::cmp::Reverse(r.total()));
    Ok(records)
}

/// Count, maximum total and every ideal attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub count: usize,
    pub max_total: u64,
    pub argmax: Vec<String>,
}

pub fn summarize(records: &[CensusRecord]) -> CensusSummary {
    let max_total = records.iter().map(|r| r.total()).max().unwrap_or(0);
    CensusSummary {
        count: records.len(),
        max_total,
        argmax: records
            .iter()
            .filter(|r| r.total() == max_total)
            .map(|r| r.report.ideal.clone())
            .collect(),
    }
}

/// `E(d)` against `J(r, i)` at `d = C(r+2,3) + r + i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub r: u32,
    pub i: u32,
    pub d: u64,
    pub e_ideal: String,
    pub e_total: u64,
    pub e_socle: u64,
    pub j_ideal: String,
    pub j_total: u64,
    pub j_socle: u64,
    /// Closed forms, available at `i = 2`.
    pub e_formula: Option<u64>,
    pub socle_formula: Option<u64>,
}

impl CounterexampleReport {
    /// Named checks: the strict gain always, plus the closed forms and the
    /// socle / non-socle split at `i = 2`.
    pub fn checks(&self) -> Vec<(String, bool)> {
        let mut out = vec![(
            format!("dim T(J) = {} > dim T(E({})) = {}", self.j_total, self.d, self.e_total),
            self.j_total > self.e_total,
        )];
        if let (Some(ef), Some(sf)) = (self.e_formula, self.socle_formula) {
            out.push((format!("dim T(E) matches closed form {ef}"), self.e_total == ef));
            out.push((format!("socle part of E is {sf}"), self.e_socle == sf));
            out.push((format!("socle part of J is {sf}"), self.j_socle == sf));
            out.push((
                "E has exactly 7 non-socle dimensions".into(),
                self.e_total - self.e_socle == 7,
            ));
            out.push((
                "J has at least 10 non-socle dimensions".into(),
                self.j_total - self.j_socle >= 10,
            ));
        }
        out
    }

    pub fn holds(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

pub fn counterexample_family_report(r: u32, i: u32) -> Result<CounterexampleReport> {
    let j = counterexample_ideal(r, i)?;
    let d = counterexample_colength(r, i);
    let e = lex_truncation_ideal(d as u32)?;
    let er = tangent_report(&e)?;
    let jr = tangent_report(&j)?;
    let closed = i == 2;
    Ok(CounterexampleReport {
        r,
        i,
        d,
        e_ideal: e.to_string(),
        e_total: er.total,
        e_socle: er.socle_dim,
        j_ideal: j.to_string(),
        j_total: jr.total,
        j_socle: jr.socle_dim,
        e_formula: if closed { Some(e_ideal_tangent_formula(r)?) } else { None },
        socle_formula: if closed { Some(socle_part_formula(r)) } else { None },
    })
}

/// The `i = 2` member of the family, at `d = C(r+2,3) + r + 3`.
pub fn counterexample_report(r: u32) -> Result<CounterexampleReport> {
    counterexample_family_report(r, 2)
}
