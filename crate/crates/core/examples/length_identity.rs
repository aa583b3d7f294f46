//! In two variables, dim Hom(I, S/J) = colength(J) + colength(I) - colength(I : J).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use staircase::census::random_artinian;
use staircase::oracle::two_var_length_identity_check;

fn main() -> staircase::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..8 {
        let (a, b) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let i = random_artinian(&mut rng, 2, a)?;
        let j = random_artinian(&mut rng, 2, b)?;
        let (lhs, rhs, ok) = two_var_length_identity_check(&i, &j, 32003)?;
        println!("I = ({i})  J = ({j})  hom {lhs}  lengths {rhs}  {}", if ok { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
