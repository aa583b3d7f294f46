//! Smooth and singular monomial points: the two-negative signatures vanish
//! exactly at smooth points, and generator triples certify singularity.

use staircase::census::enumerate_strongly_stable;
use staircase::tangent::{is_smooth_monomial_point, singular_by_generators, tangent_report};
use staircase::MonomialIdeal;

fn main() -> staircase::Result<()> {
    for text in ["x, y, z^5", "x, y^2, z^2", "x^2, x*y, y^2, z", "x^2, y^2, z^2, x*y*z", "x^2, x*y, x*z, y^2, y*z^2, z^3"] {
        let i = MonomialIdeal::parse(text)?;
        let rep = tangent_report(&i)?;
        println!(
            "{text:<32} d = {}  total = {:>2}  smooth = {:<5}  generator triple = {}",
            rep.d,
            rep.total,
            is_smooth_monomial_point(&i)?,
            singular_by_generators(&i)
        );
    }
    // for strongly stable ideals, smooth exactly when x is in the ideal
    for d in 1..=7 {
        let ideals = enumerate_strongly_stable(d);
        let smooth = ideals.iter().filter(|i| is_smooth_monomial_point(i).unwrap()).count();
        let with_x = ideals.iter().filter(|i| i.contains_coords(&[1, 0, 0])).count();
        println!("d = {d}: {} strongly stable, {smooth} smooth, {with_x} contain x", ideals.len());
    }
    Ok(())
}
