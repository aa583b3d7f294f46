//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact integer equalities or inequalities (tolerance 0).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use staircase::binomial::binomial;
use staircase::census::{
    counterexample_family_report, enumerate_all_artinian, enumerate_strongly_stable,
    is_smooth, pairing_holds, parity_holds, plane_identities_hold, ppn_bound_holds,
    random_artinian, search_extremes, slice_duality_holds, smoothness_criterion_holds,
    summarize, SearchOptions,
};
use staircase::families::{colength_39_maximizer, lex_truncation_ideal, power_ideal};
use staircase::oracle::{hom_dim, hom_dim_graded, two_var_length_identity_check};
use staircase::tangent::{
    box_points, degree_box, e_ideal_tangent_formula, fat_point_graded_dim, fat_point_total,
    graded_tangent_dim, minimal_r, tangent_report, TangentReport,
};
use staircase::Result;

type Outcome = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn all_artinian_reports(d_max: u32) -> std::result::Result<Vec<TangentReport>, String> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        for i in e(enumerate_all_artinian(3, d))? {
            out.push(e(tangent_report(&i))?);
        }
    }
    Ok(out)
}

fn strongly_stable_reports(d_max: u32) -> std::result::Result<Vec<TangentReport>, String> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        for i in enumerate_strongly_stable(d) {
            out.push(e(tangent_report(&i))?);
        }
    }
    Ok(out)
}

fn fat_point_totals() -> Outcome {
    let want = [3u64, 18, 60, 150, 315];
    for (r, &w) in (1..=5u32).zip(&want) {
        let t = e(tangent_report(&e(power_ideal(3, r))?))?.total;
        ensure(t == w, || format!("dim T(m^{r}) = {t}, expected {w}"))?;
    }
    Ok("dim T(m^r) = 3, 18, 60, 150, 315 for r = 1..5".into())
}

fn fat_point_signatures() -> Outcome {
    for r in 1..=5u32 {
        let rep = e(tangent_report(&e(power_ideal(3, r))?))?;
        let hi = binomial(r as i64 + 3, 4);
        let lo = binomial(r as i64 + 2, 4);
        for (s, w) in [("ppn", hi), ("pnp", hi), ("npp", hi), ("pnn", lo), ("npn", lo), ("nnp", lo)] {
            ensure(rep.sig(s) == w, || format!("r = {r}: {s} = {}, expected {w}", rep.sig(s)))?;
        }
    }
    Ok("one-negative signatures C(r+3,4), two-negative C(r+2,4), r = 1..5".into())
}

fn fat_point_graded() -> Outcome {
    let mut points = 0;
    for r in 1..=4u32 {
        let m = e(power_ideal(3, r))?;
        for a in box_points(&e(degree_box(&m))?) {
            let got = e(graded_tangent_dim(&m, &a))?.0;
            let want = e(fat_point_graded_dim(3, r, &a))?;
            ensure(got == want, || format!("m^{r} at {a}: {got} vs closed form {want}"))?;
            points += 1;
        }
    }
    Ok(format!("{points} degrees checked for r = 1..4"))
}

fn pairing(reps: &[TangentReport]) -> Outcome {
    for rep in reps {
        ensure(pairing_holds(rep), || format!("pairing fails at {}", rep.ideal))?;
    }
    Ok(format!("{} ideals with d <= 8", reps.len()))
}

fn parity(reps: &[TangentReport]) -> Outcome {
    for rep in reps {
        ensure(parity_holds(rep), || format!("parity fails at {}", rep.ideal))?;
    }
    Ok(format!("{} ideals with d <= 8", reps.len()))
}

fn duality(reps: &[TangentReport]) -> Outcome {
    for rep in reps {
        ensure(e(slice_duality_holds(rep))?, || format!("slice duality fails at {}", rep.ideal))?;
        ensure(rep.duality_holds(), || format!("report pairs disagree at {}", rep.ideal))?;
    }
    Ok(format!("{} ideals with d <= 8", reps.len()))
}

fn smoothness(reps: &[TangentReport]) -> Outcome {
    let mut smooth = 0;
    let mut stable = 0;
    for rep in reps {
        ensure(smoothness_criterion_holds(rep), || {
            format!("two-negative criterion disagrees with 3d at {}", rep.ideal)
        })?;
        smooth += is_smooth(rep) as usize;
        if rep.ideal.is_strongly_stable() {
            stable += 1;
            let x_in = rep.ideal.contains_coords(&[1, 0, 0]);
            ensure(is_smooth(rep) == x_in, || format!("smooth iff x in I fails at {}", rep.ideal))?;
        }
    }
    Ok(format!("{} ideals ({smooth} smooth), {stable} strongly stable", reps.len()))
}

fn plane() -> Outcome {
    let mut count = 0;
    for d in 1..=10 {
        for i in e(enumerate_all_artinian(2, d))? {
            let rep = e(tangent_report(&i))?;
            ensure(e(plane_identities_hold(&rep))?, || format!("two-variable identities fail at {i}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} two-variable ideals with d <= 10"))
}

fn oracle() -> Outcome {
    let mut ideals = Vec::new();
    for d in 1..=6 {
        ideals.extend(e(enumerate_all_artinian(3, d))?);
    }
    let exhaustive = ideals.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E);
    for _ in 0..200 {
        let d = rng.gen_range(1..=12);
        ideals.push(e(random_artinian(&mut rng, 3, d))?);
    }
    for i in &ideals {
        let t = e(tangent_report(i))?.total;
        for p in [2, 32003] {
            let h = e(hom_dim(i, i, p))?;
            ensure(h == t, || format!("{i}: oracle {h} over F_{p}, engine {t}"))?;
        }
    }
    let mut graded = 0;
    for d in 1..=4 {
        for i in e(enumerate_all_artinian(3, d))? {
            for a in box_points(&e(degree_box(&i))?) {
                let h = e(hom_dim_graded(&i, &i, &a, 32003))?;
                let t = e(graded_tangent_dim(&i, &a))?.0;
                ensure(h == t, || format!("{i} at {a}: oracle {h}, engine {t}"))?;
                graded += 1;
            }
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive + 200 random ideals at p = 2, 32003; {graded} graded strands"
    ))
}

fn length_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2B1);
    for _ in 0..500 {
        let (di, dj) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let i = e(random_artinian(&mut rng, 2, di))?;
        let j = e(random_artinian(&mut rng, 2, dj))?;
        let (lhs, rhs, ok) = e(two_var_length_identity_check(&i, &j, 32003))?;
        ensure(ok, || format!("I = ({i}), J = ({j}): {lhs} vs {rhs}"))?;
    }
    Ok("500 random pairs with colengths <= 12".into())
}

fn lex_formula() -> Outcome {
    let mut seen = Vec::new();
    for r in 3..=5u32 {
        let d = binomial(r as i64 + 2, 3) + r as u64 + 3;
        let t = e(tangent_report(&e(lex_truncation_ideal(d as u32))?))?.total;
        let f = e(e_ideal_tangent_formula(r))?;
        ensure(t == f, || format!("dim T(E({d})) = {t}, closed form {f}"))?;
        seen.push(format!("E({d}) = {t}"));
    }
    Ok(seen.join(", "))
}

fn counterexamples() -> Outcome {
    let mut n = 0;
    for r in 3..=6u32 {
        for i in 2..r {
            let rep = e(counterexample_family_report(r, i))?;
            ensure(rep.holds(), || format!("r = {r}, i = {i}: {:?}", rep.checks()))?;
            n += 1;
        }
    }
    let r3 = e(counterexample_family_report(3, 2))?;
    ensure(r3.e_socle == 77 && r3.e_total - r3.e_socle == 7, || {
        format!("E(16) split {} + {}", r3.e_socle, r3.e_total - r3.e_socle)
    })?;
    Ok(format!(
        "{n} family members beat E(d); E(16) = 77 + 7, J(3,2) = {}",
        r3.j_total
    ))
}

fn census_39() -> Outcome {
    let all = e(search_extremes(39, &SearchOptions::default()))?;
    ensure(all.len() == 39098, || format!("{} strongly stable ideals", all.len()))?;
    let filtered: Vec<_> = all.iter().filter(|r| r.min_x_power > 3).cloned().collect();
    ensure(filtered.len() == 2654, || format!("{} without x^3", filtered.len()))?;
    let s = summarize(&filtered);
    let j = colength_39_maximizer().to_string();
    ensure(s.argmax == vec![j.clone()], || format!("maximizers {:?}", s.argmax))?;
    let e39 = e(tangent_report(&e(lex_truncation_ideal(39))?))?.total;
    ensure(e39 == 327, || format!("dim T(E(39)) = {e39}"))?;
    Ok(format!(
        "39098 ideals, 2654 without x^3, unique maximizer J with total {}, dim T(E(39)) = 327",
        s.max_total
    ))
}

fn extremal(stable: &[TangentReport]) -> Outcome {
    let mut n = 0;
    for (d, r) in [(4u64, 2u32), (10, 3), (20, 4)] {
        let hi = binomial(r as i64 + 3, 4);
        let lo = binomial(r as i64 + 2, 4);
        let fat = e(power_ideal(3, r))?;
        for rep in stable.iter().filter(|x| x.d == d) {
            let is_fat = rep.ideal == fat;
            for (s, b) in [("ppn", hi), ("pnp", hi), ("npn", lo), ("nnp", lo)] {
                let v = rep.sig(s);
                ensure(v < b || (v == b && is_fat), || {
                    format!("{}: {s} = {v} against bound {b}", rep.ideal)
                })?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} strongly stable ideals at d = 4, 10, 20"))
}

fn global_bounds(stable: &[TangentReport], all: &[TangentReport]) -> Outcome {
    for rep in all.iter().chain(stable) {
        let r = minimal_r(rep.d);
        ensure(3 * rep.total <= 4 * fat_point_total(r), || {
            format!("{}: 3 * {} > 4 * dim T(m^{r})", rep.ideal, rep.total)
        })?;
    }
    let mut improved = 0;
    for rep in stable {
        let r = minimal_r(rep.d) as u64;
        let p = rep.ideal.min_first_power().unwrap_or(0) as u64;
        ensure(rep.total <= (2 * p + 1) * rep.d, || {
            format!("{}: total {} > (2p+1)d with p = {p}", rep.ideal, rep.total)
        })?;
        if 4 * p <= 3 * r + 1 {
            improved += 1;
            ensure(rep.total <= fat_point_total(r as u32), || {
                format!("{}: total {} > dim T(m^{r})", rep.ideal, rep.total)
            })?;
        }
    }
    Ok(format!(
        "{} strongly stable (d <= 20) + {} general (d <= 8); {improved} with 4p <= 3r+1",
        stable.len(),
        all.len()
    ))
}

fn ppn_bound(stable: &[TangentReport]) -> Outcome {
    let mut n = 0;
    for rep in stable.iter().filter(|r| r.d <= 12) {
        ensure(e(ppn_bound_holds(rep))?, || format!("slice bound fails at {}", rep.ideal))?;
        n += 1;
    }
    Ok(format!("{n} strongly stable ideals with d <= 12, every (a1, a2)"))
}

fn main() {
    let start = Instant::now();
    let all = all_artinian_reports(8).expect("tangent reports for d <= 8");
    let stable = strongly_stable_reports(20).expect("tangent reports for strongly stable d <= 20");

    let criteria: Vec<Criterion<'_>> = vec![
        ("fat point totals", Box::new(fat_point_totals)),
        ("fat point signature dims", Box::new(fat_point_signatures)),
        ("fat point graded dims", Box::new(fat_point_graded)),
        ("signature pairing", Box::new(|| pairing(&all))),
        ("parity", Box::new(|| parity(&all))),
        ("slice duality", Box::new(|| duality(&all))),
        ("smoothness criterion", Box::new(|| smoothness(&all))),
        ("two-variable identities", Box::new(plane)),
        ("oracle equivalence", Box::new(oracle)),
        ("two-variable length identity", Box::new(length_identity)),
        ("E(d) closed form", Box::new(lex_formula)),
        ("counterexample family", Box::new(counterexamples)),
        ("census at d = 39", Box::new(census_39)),
        ("extremal subspaces", Box::new(|| extremal(&stable))),
        ("global bounds", Box::new(|| global_bounds(&stable, &all))),
        ("ppn slice bound", Box::new(|| ppn_bound(&stable))),
    ];

    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
