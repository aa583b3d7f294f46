//! Tangent space of m^r: totals, signatures, and one graded piece per
//! class, next to the closed forms.

use staircase::families::power_ideal;
use staircase::tangent::{fat_point_graded_dim, fat_point_tangent_dims, graded_tangent_dim, tangent_report};
use staircase::MultiDegree;

fn main() -> staircase::Result<()> {
    for r in 1..=5 {
        let rep = tangent_report(&power_ideal(3, r)?)?;
        let closed = fat_point_tangent_dims(r)?;
        println!(
            "m^{r}: d = {:>2}  total = {:>3} (closed form {:>3})  ppn = {:>2}  pnn = {:>2}",
            rep.d,
            rep.total,
            closed.total,
            rep.sig("ppn"),
            rep.sig("pnn")
        );
    }
    let m3 = power_ideal(3, 3)?;
    for alpha in [vec![-1, 0, 0], vec![1, -2, 0], vec![1, 1, -3], vec![0, 0, 0]] {
        let a = MultiDegree(alpha);
        let (dim, _) = graded_tangent_dim(&m3, &a)?;
        println!("|T(m^3)|_{a} = {dim} (closed form {})", fat_point_graded_dim(3, 3, &a)?);
    }
    Ok(())
}
