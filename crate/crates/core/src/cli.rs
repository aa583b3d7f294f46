//! The `staircase` command-line front end.
//!
//! Exit codes: 0 success, 1 failed verification or other error, 2 parse
//! or usage error, 3 non-artinian ideal, 4 oracle mismatch, 5 I/O error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::census::{
    counterexample_family_report, search_extremes, summarize, verify_theorem_suite,
    verify_theorem_suite_with, write_csv, write_jsonl, SearchOptions, Status, CSV_HEADER,
};
use crate::error::Error;
use crate::families::{counterexample_colength, counterexample_ideal, lex_truncation_ideal, power_ideal};
use crate::ideal::MonomialIdeal;
use crate::oracle::{hom_dim, DEFAULT_PRIME};
use crate::tangent::{
    e_ideal_tangent_formula, fat_point_tangent_dims, socle_part_formula, tangent_report,
    TangentReport,
};
use crate::text::parse_ideal;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_ARTINIAN: i32 = 3;
pub const EXIT_ORACLE_MISMATCH: i32 = 4;
pub const EXIT_IO: i32 = 5;

/// Environment variable overriding the census worker count.
pub const WORKERS_ENV: &str = "STAIRCASE_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "staircase", version, about = "Tangent spaces to monomial points of Hilbert schemes of points")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tangent space dimensions of one ideal.
    Tangent(TangentArgs),
    /// Tangent dimensions of every strongly stable ideal of colength d.
    Census(CensusArgs),
    /// Check every identity and bound on enumerated ideals.
    Verify(VerifyArgs),
    /// Compare E(d) with the ideal J(r, i) that beats it.
    Counterexample(CounterexampleArgs),
    /// Closed forms for m^r and E(d).
    Formulas(FormulasArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["ideal", "file", "ed", "fat", "cx"])))]
pub struct TangentArgs {
    /// Generators, e.g. "x^2, x*y, y^2, z".
    pub ideal: Option<String>,
    /// Read the ideal text from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Use the lexsegment truncation E(d).
    #[arg(long, value_name = "D")]
    pub ed: Option<u32>,
    /// Use m^r in three variables.
    #[arg(long, value_name = "R")]
    pub fat: Option<u32>,
    /// Use J(r, i); i defaults to 2.
    #[arg(long, value_name = "R [I]", num_args = 1..=2)]
    pub cx: Option<Vec<u32>>,
    /// Number of variables (defaults to 3 for x, y, z; the largest index for x1, x2, ...).
    #[arg(long)]
    pub vars: Option<usize>,
    #[arg(long)]
    pub json: bool,
    /// Cross-check the total against the linear-algebra oracle.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub d: u32,
    /// Keep only ideals not containing x^P.
    #[arg(long, value_name = "P")]
    pub filter_xpow: Option<u32>,
    #[arg(long, conflicts_with = "jsonl")]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub jsonl: Option<PathBuf>,
    /// Allow colengths above the census budget.
    #[arg(long)]
    pub budget_override: bool,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Print this many of the largest rows.
    #[arg(long, default_value_t = 5)]
    pub top: usize,
    /// Print the summary as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub d_max: u32,
    /// Add the oracle rows.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub json: bool,
    /// Run against a deliberately wrong engine (negative control).
    #[arg(long, hide = true)]
    pub mutate: bool,
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 2)]
    pub i: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FormulasArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub json: bool,
}

/// Maps a library error to its exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::NotArtinian { .. } => EXIT_NOT_ARTINIAN,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Tangent(a) => cmd_tangent(a, out),
        Command::Census(a) => cmd_census(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Counterexample(a) => cmd_counterexample(a, out),
        Command::Formulas(a) => cmd_formulas(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = Result<i32, Error>;

fn io(e: std::io::Error) -> Error {
    Error::from(e)
}

fn tangent_source(a: &TangentArgs) -> Result<MonomialIdeal, Error> {
    if let Some(text) = &a.ideal {
        return parse_ideal(text, a.vars);
    }
    if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path)?;
        return parse_ideal(text.trim(), a.vars);
    }
    if let Some(d) = a.ed {
        return lex_truncation_ideal(d);
    }
    if let Some(r) = a.fat {
        return power_ideal(3, r);
    }
    if let Some(cx) = &a.cx {
        return counterexample_ideal(cx[0], cx.get(1).copied().unwrap_or(2));
    }
    unreachable!("clap requires one source")
}

fn is_smooth_point(rep: &TangentReport) -> bool {
    rep.total == rep.n() as u64 * rep.d
}

fn cmd_tangent(a: &TangentArgs, out: &mut dyn Write) -> CmdResult {
    let ideal = tangent_source(a)?;
    ideal.pure_powers()?;
    let rep = tangent_report(&ideal)?;
    let smooth = is_smooth_point(&rep);
    let oracle = if a.oracle {
        Some(hom_dim(&ideal, &ideal, a.prime)?)
    } else {
        None
    };
    let agrees = oracle.is_none_or(|h| h == rep.total);

    if a.json {
        let mut doc = serde_json::to_value(rep.to_document()).expect("serializable");
        doc["smooth"] = json!(smooth);
        if let Some(h) = oracle {
            doc["oracle"] = json!({ "prime": a.prime, "hom_dim": h, "agrees": agrees });
        }
        writeln!(out, "{doc}").map_err(io)?;
    } else {
        let sigs = rep.signature_row();
        writeln!(out, "ideal   {}", rep.ideal).map_err(io)?;
        writeln!(out, "d       {}", rep.d).map_err(io)?;
        writeln!(out, "total   {}", rep.total).map_err(io)?;
        let names: Vec<String> = sigs.iter().map(|(s, _)| format!("{s:>6}")).collect();
        let vals: Vec<String> = sigs.iter().map(|(_, v)| format!("{v:>6}")).collect();
        writeln!(out, "        {}", names.join("")).map_err(io)?;
        writeln!(out, "        {}", vals.join("")).map_err(io)?;
        writeln!(out, "socle   {}", rep.socle_dim).map_err(io)?;
        writeln!(out, "smooth  {}", if smooth { "yes" } else { "no" }).map_err(io)?;
        if let Some(h) = oracle {
            writeln!(
                out,
                "oracle  {h} over F_{} ({})",
                a.prime,
                if agrees { "agrees" } else { "MISMATCH" }
            )
            .map_err(io)?;
        }
    }
    Ok(if agrees { EXIT_OK } else { EXIT_ORACLE_MISMATCH })
}

fn workers_from(flag: Option<usize>) -> Result<Option<usize>, Error> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::InvalidParameter(format!("{WORKERS_ENV}={v} is not a count"))),
        Err(_) => Ok(None),
    }
}

fn cmd_census(a: &CensusArgs, out: &mut dyn Write) -> CmdResult {
    let opts = SearchOptions {
        exclude_x_power: a.filter_xpow,
        budget_override: a.budget_override,
        workers: workers_from(a.workers)?,
    };
    // open outputs before the (long) search so path errors surface early
    let csv = a.csv.as_ref().map(File::create).transpose()?;
    let jsonl = a.jsonl.as_ref().map(File::create).transpose()?;
    let records = search_extremes(a.d, &opts)?;
    if let Some(f) = csv {
        write_csv(BufWriter::new(f), &records)?;
    }
    if let Some(f) = jsonl {
        write_jsonl(BufWriter::new(f), &records)?;
    }
    let summary = summarize(&records);
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&summary).expect("serializable")).map_err(io)?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "count {}  max total {}  argmax {}",
        summary.count,
        summary.max_total,
        summary.argmax.join(" | ")
    )
    .map_err(io)?;
    if a.top > 0 && !records.is_empty() {
        writeln!(out, "{}", CSV_HEADER.join("\t")).map_err(io)?;
        for rec in records.iter().take(a.top) {
            let r = &rec.report;
            let sigs: Vec<String> = ["ppn", "pnp", "npp", "pnn", "npn", "nnp"]
                .iter()
                .map(|s| rec.sig(s).to_string())
                .collect();
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.ideal,
                r.d,
                r.total,
                sigs.join("\t"),
                r.socle_dim,
                rec.min_x_power,
                rec.flags.join(";")
            )
            .map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let report = if a.mutate {
        let broken = |i: &MonomialIdeal| {
            let mut r = tangent_report(i)?;
            if let Some(v) = r.signature_totals.values_mut().next() {
                *v += 1;
            }
            r.total += 1;
            Ok(r)
        };
        verify_theorem_suite_with(a.d_max, a.oracle, &broken)?
    } else {
        verify_theorem_suite(a.d_max, a.oracle)?
    };
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("serializable")).map_err(io)?;
    } else {
        for row in &report.rows {
            let tag = match row.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Observed => "OBSERVED",
            };
            write!(out, "{tag:<9}{} [{} ideals]", row.statement, row.checked).map_err(io)?;
            if let Some(c) = &row.counterexample {
                write!(out, " first exception: {c}").map_err(io)?;
            }
            writeln!(out).map_err(io)?;
        }
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_counterexample(a: &CounterexampleArgs, out: &mut dyn Write) -> CmdResult {
    let rep = counterexample_family_report(a.r, a.i)?;
    let ok = rep.holds();
    if a.json {
        let mut doc = serde_json::to_value(&rep).expect("serializable");
        doc["holds"] = json!(ok);
        writeln!(out, "{doc}").map_err(io)?;
    } else {
        writeln!(out, "r = {}, i = {}, d = {}", rep.r, rep.i, rep.d).map_err(io)?;
        writeln!(out, "E(d) = ({})", rep.e_ideal).map_err(io)?;
        writeln!(
            out,
            "  total {}  socle {}  non-socle {}",
            rep.e_total,
            rep.e_socle,
            rep.e_total - rep.e_socle
        )
        .map_err(io)?;
        writeln!(out, "J = ({})", rep.j_ideal).map_err(io)?;
        writeln!(
            out,
            "  total {}  socle {}  non-socle {}",
            rep.j_total,
            rep.j_socle,
            rep.j_total - rep.j_socle
        )
        .map_err(io)?;
        for (what, holds) in rep.checks() {
            writeln!(out, "{} {what}", if holds { "ok  " } else { "FAIL" }).map_err(io)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_formulas(a: &FormulasArgs, out: &mut dyn Write) -> CmdResult {
    let fat = fat_point_tangent_dims(a.r)?;
    let lex = if a.r >= 3 {
        Some((
            counterexample_colength(a.r, 2),
            e_ideal_tangent_formula(a.r)?,
            socle_part_formula(a.r),
        ))
    } else {
        None
    };
    if a.json {
        let mut doc = json!({
            "r": a.r,
            "fat_point": { "total": fat.total, "signatures": fat.signatures },
        });
        if let Some((d, total, socle)) = lex {
            doc["lex_truncation"] = json!({ "d": d, "total": total, "socle": socle });
        }
        writeln!(out, "{doc}").map_err(io)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "m^{}: total {}", a.r, fat.total).map_err(io)?;
    for s in ["ppn", "pnp", "npp", "pnn", "npn", "nnp"] {
        writeln!(out, "  {s} {}", fat.signatures[s]).map_err(io)?;
    }
    match lex {
        Some((d, total, socle)) => {
            writeln!(out, "E({d}): total {total}  socle {socle}  non-socle {}", total - socle)
                .map_err(io)?
        }
        None => writeln!(out, "E(d) closed form needs r >= 3").map_err(io)?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["staircase"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["tangent", "x, y, z"]).0, EXIT_OK);
        assert_eq!(call(&["tangent", "x^^2"]).0, EXIT_PARSE);
        assert_eq!(call(&["tangent", "x, y"]).0, EXIT_NOT_ARTINIAN);
        assert_eq!(call(&["tangent"]).0, EXIT_PARSE);
        assert_eq!(call(&["tangent", "--file", "/nonexistent/ideal.txt"]).0, EXIT_IO);
    }

    #[test]
    fn tangent_table() {
        let (code, out, _) = call(&["tangent", "x^2,x*y,x*z,y^2,y*z,z^2", "--oracle"]);
        assert_eq!(code, 0);
        assert!(out.contains("total   18"));
        assert!(out.contains("smooth  no"));
        assert!(out.contains("agrees"));
    }

    #[test]
    fn formulas_json() {
        let (code, out, _) = call(&["formulas", "--r", "5", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["fat_point"]["total"], 315);
        assert_eq!(v["lex_truncation"]["total"], 359);
    }
}
