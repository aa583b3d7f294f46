//! Named ideal families: powers of the maximal ideal, lexsegment
//! truncations `E(d)`, and the counterexample family `J(r, i)`.

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::{minimalize, MonomialIdeal};

/// All exponent vectors of total degree `deg` in `n` variables, in
/// descending lexicographic order.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Exponent> {
    fn rec(n: usize, var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if var + 1 == n {
            cur.push(left);
            out.push(Exponent(cur.clone()));
            cur.pop();
            return;
        }
        for c in (0..=left).rev() {
            cur.push(c);
            rec(n, var + 1, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, 0, deg, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// `m^r = (x_1, ..., x_n)^r`.
pub fn power_ideal(n: usize, r: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    minimalize(monomials_of_degree(n, r), n)
}

/// `E(d)` in three variables: the lexsegment ideal of colength `d`
/// generated in degrees `r` and `r + 1`, where `C(r+2,3) <= d < C(r+3,3)`.
/// It is the first `t = C(r+3,3) - d` lex monomials of degree `r` plus
/// `m^{r+1}`.
pub fn lex_truncation_ideal(d: u32) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::InvalidParameter("E(d) needs d >= 1".into()));
    }
    let d = d as u64;
    let mut r: i64 = 1;
    while binomial(r + 3, 3) <= d {
        r += 1;
    }
    let t = (binomial(r + 3, 3) - d) as usize;
    let mut gens: Vec<Exponent> = monomials_of_degree(3, r as u32).into_iter().take(t).collect();
    gens.extend(monomials_of_degree(3, r as u32 + 1));
    minimalize(gens, 3)
}

fn three(rows: impl IntoIterator<Item = [u32; 3]>) -> Vec<Exponent> {
    rows.into_iter().map(|r| Exponent(r.to_vec())).collect()
}

/// `x^2 m^{r-2} + xy (y,z)^{r-2} + (x z^r) + y (y,z)^r + (z^{r+i})` for
/// `r >= 3` and `2 <= i <= r - 1`. Its colength is `C(r+2,3) + r + i + 1`.
pub fn counterexample_ideal(r: u32, i: u32) -> Result<MonomialIdeal> {
    if r < 3 || i < 2 || i > r - 1 {
        return Err(Error::InvalidParameter(format!(
            "counterexample family needs r >= 3 and 2 <= i <= r-1, got r={r}, i={i}"
        )));
    }
    let mut gens = Vec::new();
    for m in monomials_of_degree(3, r - 2) {
        gens.push(Exponent(vec![m.0[0] + 2, m.0[1], m.0[2]]));
    }
    for m in monomials_of_degree(2, r - 2) {
        gens.push(Exponent(vec![1, m.0[0] + 1, m.0[1]]));
    }
    gens.extend(three([[1, 0, r]]));
    for m in monomials_of_degree(2, r) {
        gens.push(Exponent(vec![0, m.0[0] + 1, m.0[1]]));
    }
    gens.extend(three([[0, 0, r + i]]));
    minimalize(gens, 3)
}

/// The 21-generator strongly stable ideal of colength 39 with the largest
/// tangent space among those not containing `x^3`.
pub fn colength_39_maximizer() -> MonomialIdeal {
    MonomialIdeal::parse(
        "x^5, x^4*y, x^4*z, x^3*y^2, x^3*y*z, x^3*z^2, x^2*y^3, x^2*y^2*z, x^2*y*z^2, x^2*z^3, \
         x*y^4, x*y^3*z, x*y^2*z^2, x*y*z^3, y^5, y^4*z, y^3*z^2, y^2*z^3, x*z^5, y*z^5, z^7",
    )
    .expect("fixed generator list parses")
}

/// Colength of `J(r, i)`.
pub fn counterexample_colength(r: u32, i: u32) -> u64 {
    binomial(r as i64 + 2, 3) + r as u64 + i as u64 + 1
}
