use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use staircase::census::{enumerate_all_artinian, pairing_holds, parity_holds, random_artinian};
use staircase::staircase::{colength, standard_monomials};
use staircase::tangent::tangent_report;
use staircase::{minimalize, Exponent, MonomialIdeal};

fn exponents(n: usize) -> impl Strategy<Value = Vec<Exponent>> {
    prop::collection::vec(prop::collection::vec(0u32..5, n), 1..8)
        .prop_map(|rows| rows.into_iter().map(Exponent).collect())
}

fn random_ideal(seed: u64, n: usize, d: u32) -> MonomialIdeal {
    random_artinian(&mut ChaCha8Rng::seed_from_u64(seed), n, d).unwrap()
}

proptest! {
    #[test]
    fn minimalize_is_idempotent(raw in exponents(3)) {
        let once = minimalize(raw, 3).unwrap();
        let twice = minimalize(once.generators().to_vec(), 3).unwrap();
        prop_assert_eq!(&once, &twice);
        for (a, b) in once.generators().iter().zip(once.generators().iter().skip(1)) {
            prop_assert!(a > b);
        }
    }

    #[test]
    fn minimal_generators_form_an_antichain(raw in exponents(4)) {
        let i = minimalize(raw.clone(), 4).unwrap();
        let g = i.generators();
        for a in g {
            for b in g {
                prop_assert!(a == b || !a.divides(b));
            }
        }
        for e in &raw {
            prop_assert!(i.contains(e));
        }
    }

    #[test]
    fn canonical_text_round_trips(raw in exponents(3)) {
        let i = minimalize(raw, 3).unwrap();
        let back = MonomialIdeal::parse(&i.to_string()).unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn indexed_text_round_trips(raw in exponents(5)) {
        let i = minimalize(raw, 5).unwrap();
        prop_assert_eq!(MonomialIdeal::parse_in(&i.to_string(), 5).unwrap(), i);
    }

    #[test]
    fn random_points_satisfy_pairing_and_parity(seed in any::<u64>(), d in 1u32..16) {
        let i = random_ideal(seed, 3, d);
        prop_assert_eq!(colength(&i).unwrap(), d as usize);
        let rep = tangent_report(&i).unwrap();
        prop_assert!(pairing_holds(&rep), "{}", i);
        prop_assert!(parity_holds(&rep), "{}", i);
        prop_assert!(rep.duality_holds(), "{}", i);
        prop_assert!(rep.total >= 3 * rep.d);
    }

    #[test]
    fn standard_set_rebuilds_the_ideal(seed in any::<u64>(), d in 1u32..20) {
        let i = random_ideal(seed, 3, d);
        let rebuilt = MonomialIdeal::from_standard_set(3, &standard_monomials(&i).unwrap()).unwrap();
        prop_assert_eq!(rebuilt, i);
    }

    #[test]
    fn four_variable_points_have_tangent_at_least_4d(seed in any::<u64>(), d in 1u32..8) {
        let i = random_ideal(seed, 4, d);
        let rep = tangent_report(&i).unwrap();
        prop_assert!(rep.total >= 4 * rep.d);
    }
}

/// Strong stability read off generators agrees with checking every
/// exchange on every monomial of the ideal inside a box.
#[test]
fn generator_test_matches_full_exchange_check() {
    for d in 1..=6 {
        for i in enumerate_all_artinian(3, d).unwrap() {
            let s = i.pure_powers().unwrap();
            let mut full = true;
            for a in 0..=s[0] + 1 {
                for b in 0..=s[1] + 1 {
                    for c in 0..=s[2] + 1 {
                        let e = [a, b, c];
                        if !i.contains_coords(&e) {
                            continue;
                        }
                        for j in 1..3 {
                            for k in 0..j {
                                if e[j] > 0 {
                                    let mut f = e;
                                    f[j] -= 1;
                                    f[k] += 1;
                                    full &= i.contains_coords(&f);
                                }
                            }
                        }
                    }
                }
            }
            assert_eq!(i.is_strongly_stable(), full, "{i}");
        }
    }
}

#[test]
fn enumeration_is_duplicate_free() {
    for d in 1..=9 {
        let all = enumerate_all_artinian(3, d).unwrap();
        let set: BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }
}
