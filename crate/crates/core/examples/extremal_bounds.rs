//! Signature bounds at d = C(r+2,3) and the global bounds, with the slack
//! each strongly stable ideal leaves.

use staircase::binomial::binomial;
use staircase::census::enumerate_strongly_stable;
use staircase::tangent::{fat_point_total, tangent_report};

fn main() -> staircase::Result<()> {
    let r = 3;
    let d = binomial(r + 2, 3) as u32;
    let (hi, lo) = (binomial(r + 3, 4), binomial(r + 2, 4));
    println!("d = {d}: ppn, pnp <= {hi}; npn, nnp <= {lo}; dim T(m^{r}) = {}", fat_point_total(r as u32));
    for i in enumerate_strongly_stable(d) {
        let rep = tangent_report(&i)?;
        let p = i.min_first_power().unwrap_or(0) as u64;
        println!(
            "{:<60} total {:>2}  ppn {:>2} pnp {:>2} npn {:>2} nnp {:>2}  (2p+1)d = {}",
            i.to_string(),
            rep.total,
            rep.sig("ppn"),
            rep.sig("pnp"),
            rep.sig("npn"),
            rep.sig("nnp"),
            (2 * p + 1) * rep.d
        );
    }
    Ok(())
}
