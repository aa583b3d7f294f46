//! The lexsegment truncation E(d) is beaten by J(r, i) at
//! d = C(r+2,3) + r + i + 1.

use staircase::census::counterexample_family_report;

fn main() -> staircase::Result<()> {
    for r in 3..=5 {
        for i in 2..r {
            let rep = counterexample_family_report(r, i)?;
            println!(
                "r = {r}, i = {i}, d = {:>2}: dim T(E(d)) = {:>3} ({} socle), dim T(J) = {:>3} ({} socle)",
                rep.d, rep.e_total, rep.e_socle, rep.j_total, rep.j_socle
            );
            assert!(rep.holds());
        }
    }
    Ok(())
}
