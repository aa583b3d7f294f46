//! The ideal text format: letters or indexed variables, optional `*` and
//! `^`, canonical printing, and the standard monomials behind it.

use staircase::staircase::{socle, standard_monomials};
use staircase::text::format_monomial;
use staircase::MonomialIdeal;

fn main() -> staircase::Result<()> {
    for text in ["z^2, y x, x^2, y^2, x y z", "x1^2, x1 x2, x2^3", "x1, x2, x3, x4^2", "y z, x, y^2, z^2"] {
        let i = MonomialIdeal::parse(text)?;
        let std: Vec<String> = standard_monomials(&i)?.iter().map(format_monomial).collect();
        let soc: Vec<String> = socle(&i)?.exponents.iter().map(format_monomial).collect();
        println!("{text:<28} -> ({i})");
        println!("    standard {}  socle {}", std.join(" "), soc.join(" "));
        assert_eq!(MonomialIdeal::parse_in(&i.to_string(), i.n())?, i);
    }
    match MonomialIdeal::parse("x^2, y*") {
        Err(e) => println!("error: {e}"),
        Ok(i) => println!("unexpected: {i}"),
    }
    Ok(())
}
