//! Census rows and their CSV / JSONL persistence.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::families::{counterexample_colength, counterexample_ideal, lex_truncation_ideal, power_ideal};
use crate::ideal::MonomialIdeal;
use crate::tangent::{ReportDocument, TangentReport};

pub const CSV_HEADER: [&str; 12] = [
    "ideal", "d", "total", "ppn", "pnp", "npp", "pnn", "npn", "nnp", "socle", "min_x_power", "flags",
];

const SIGNATURES: [&str; 6] = ["ppn", "pnp", "npp", "pnn", "npn", "nnp"];

/// One evaluated ideal: its tangent report plus census metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    #[serde(flatten)]
    pub report: ReportDocument,
    pub min_x_power: u32,
    pub is_strongly_stable: bool,
    /// Any of `fat_point`, `lex_truncation`, `counterexample`.
    pub flags: Vec<String>,
}

impl CensusRecord {
    pub fn from_report(report: &TangentReport, flags: Vec<String>) -> Self {
        CensusRecord {
            report: report.to_document(),
            min_x_power: report.ideal.min_first_power().unwrap_or(0),
            is_strongly_stable: report.ideal.is_strongly_stable(),
            flags,
        }
    }

    pub fn sig(&self, name: &str) -> u64 {
        self.report.signatures.get(name).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.report.total
    }

    /// Signature dims sum to the total, the pairing `ppn = nnp + d` (and
    /// its two rotations) holds, and `total ≡ d (mod 2)`.
    pub fn check_identities(&self) -> Result<()> {
        let r = &self.report;
        let sum: u64 = r.signatures.values().sum();
        if sum != r.total {
            return Err(Error::Invariant(format!(
                "{}: signatures sum to {sum}, total is {}",
                r.ideal, r.total
            )));
        }
        if r.n == 3 {
            for (hi, lo) in [("ppn", "nnp"), ("pnp", "npn"), ("npp", "pnn")] {
                if self.sig(hi) != self.sig(lo) + r.d {
                    return Err(Error::Invariant(format!(
                        "{}: {hi} = {} but {lo} + d = {}",
                        r.ideal,
                        self.sig(hi),
                        self.sig(lo) + r.d
                    )));
                }
            }
        }
        if r.total % 2 != r.d % 2 {
            return Err(Error::Invariant(format!(
                "{}: total {} and d {} differ in parity",
                r.ideal, r.total, r.d
            )));
        }
        Ok(())
    }

    fn csv_row(&self) -> Vec<String> {
        let r = &self.report;
        let mut row = vec![r.ideal.clone(), r.d.to_string(), r.total.to_string()];
        row.extend(SIGNATURES.iter().map(|s| self.sig(s).to_string()));
        row.push(r.socle_dim.to_string());
        row.push(self.min_x_power.to_string());
        row.push(self.flags.join(";"));
        row
    }
}

/// Named ideals of colength `d` in three variables, with their flag.
pub fn special_ideals(d: u64) -> Vec<(MonomialIdeal, &'static str)> {
    let mut out = Vec::new();
    let mut r = 1;
    while binomial(r as i64 + 2, 3) < d {
        r += 1;
    }
    if binomial(r as i64 + 2, 3) == d {
        out.push((power_ideal(3, r).expect("n = 3"), "fat_point"));
    }
    if let Ok(e) = lex_truncation_ideal(d as u32) {
        out.push((e, "lex_truncation"));
    }
    for r in 3u32.. {
        if counterexample_colength(r, 2) > d {
            break;
        }
        for i in 2..r {
            if counterexample_colength(r, i) == d {
                out.push((counterexample_ideal(r, i).expect("valid parameters"), "counterexample"));
            }
        }
    }
    out
}

/// Flags of `ideal` among `specials` (as produced by [`special_ideals`]).
pub fn flags_for(ideal: &MonomialIdeal, specials: &[(MonomialIdeal, &'static str)]) -> Vec<String> {
    specials
        .iter()
        .filter(|(s, _)| s == ideal)
        .map(|(_, f)| f.to_string())
        .collect()
}

/// Writes a header and one row per record; identities are rechecked
/// before each row.
pub fn write_csv<W: Write>(out: W, records: &[CensusRecord]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in records {
        rec.check_identities()?;
        w.write_record(rec.csv_row())?;
    }
    w.flush()?;
    Ok(())
}

/// One JSON object per line.
pub fn write_jsonl<W: Write>(mut out: W, records: &[CensusRecord]) -> Result<()> {
    for rec in records {
        rec.check_identities()?;
        let line = serde_json::to_string(rec).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}
