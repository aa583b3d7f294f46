//! Tangent dimensions from staircase components against the kernel of the
//! Taylor-presentation matrix over several prime fields.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use staircase::census::random_artinian;
use staircase::oracle::{hom_dim, taylor_presentation};
use staircase::tangent::tangent_report;

fn main() -> staircase::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for d in [3, 6, 9, 12] {
        let i = random_artinian(&mut rng, 3, d)?;
        let engine = tangent_report(&i)?.total;
        let pres = taylor_presentation(&i)?;
        let oracle: Vec<u64> = [2, 3, 32003]
            .iter()
            .map(|&p| hom_dim(&i, &i, p))
            .collect::<staircase::Result<_>>()?;
        println!(
            "({i})\n  d = {d}, {} generators, {} relations: engine {engine}, oracle {oracle:?}",
            pres.num_generators(),
            pres.num_relations()
        );
    }
    Ok(())
}
