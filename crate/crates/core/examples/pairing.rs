//! The six signature dimensions of every monomial point of small colength,
//! showing ppn - nnp = pnp - npn = npp - pnn = d and total ≡ d (mod 2).

use staircase::census::enumerate_all_artinian;
use staircase::tangent::tangent_report;

fn main() -> staircase::Result<()> {
    let d = 4;
    println!("{:<34} {:>5}  ppn pnp npp pnn npn nnp", "ideal", "total");
    for i in enumerate_all_artinian(3, d)? {
        let rep = tangent_report(&i)?;
        let row: Vec<String> = rep.signature_row().iter().map(|(_, v)| format!("{v:>3}")).collect();
        println!("{:<34} {:>5}  {}", i.to_string(), rep.total, row.join(" "));
        assert_eq!(rep.sig("ppn"), rep.sig("nnp") + rep.d);
        assert_eq!(rep.sig("pnp"), rep.sig("npn") + rep.d);
        assert_eq!(rep.sig("npp"), rep.sig("pnn") + rep.d);
        assert_eq!(rep.total % 2, rep.d % 2);
    }
    Ok(())
}
