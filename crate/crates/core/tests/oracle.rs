use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use staircase::census::{enumerate_all_artinian, random_artinian};
use staircase::families::{lex_truncation_ideal, power_ideal};
use staircase::oracle::{hom_dim, hom_dim_graded, two_var_length_identity_check, DEFAULT_PRIME};
use staircase::staircase::colength;
use staircase::tangent::{box_points, degree_box, tangent_report};
use staircase::{MonomialIdeal, MultiDegree};

#[test]
fn characteristic_does_not_matter() {
    for d in 1..=5 {
        for i in enumerate_all_artinian(3, d).unwrap() {
            let dims: Vec<u64> = [2, 3, DEFAULT_PRIME].iter().map(|&p| hom_dim(&i, &i, p).unwrap()).collect();
            assert!(dims.windows(2).all(|w| w[0] == w[1]), "{i}: {dims:?}");
        }
    }
}

#[test]
fn fat_points_through_the_oracle() {
    assert_eq!(hom_dim(&power_ideal(3, 2).unwrap(), &power_ideal(3, 2).unwrap(), 3).unwrap(), 18);
    assert_eq!(hom_dim(&power_ideal(3, 3).unwrap(), &power_ideal(3, 3).unwrap(), 2).unwrap(), 60);
}

#[test]
fn graded_strands_on_lex_sixteen() {
    let e = lex_truncation_ideal(16).unwrap();
    let rep = tangent_report(&e).unwrap();
    let mut sum = 0;
    for a in box_points(&degree_box(&e).unwrap()) {
        let h = hom_dim_graded(&e, &e, &a, DEFAULT_PRIME).unwrap();
        assert_eq!(h, rep.per_degree.get(&a).copied().unwrap_or(0), "α = {a}");
        if a.signature().is_none() {
            assert_eq!(h, 0);
        }
        sum += h;
    }
    assert_eq!(sum, 84);
}

#[test]
fn hom_into_other_quotients() {
    // Hom(I, S/S) = 0 and Hom(S, S/J) = S/J
    let m = power_ideal(3, 1).unwrap();
    let unit = MonomialIdeal::unit(3);
    assert_eq!(hom_dim(&m, &unit, 5).unwrap(), 0);
    let j = MonomialIdeal::parse("x^2, y^2, z^2").unwrap();
    assert_eq!(hom_dim(&unit, &j, 5).unwrap(), colength(&j).unwrap() as u64);
    assert_eq!(
        hom_dim_graded(&m, &m, &MultiDegree(vec![-1, 0, 0]), 5).unwrap(),
        1
    );
}

#[test]
fn length_identity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let (a, b) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
        let i = random_artinian(&mut rng, 2, a).unwrap();
        let j = random_artinian(&mut rng, 2, b).unwrap();
        let (lhs, rhs, ok) = two_var_length_identity_check(&i, &j, 7).unwrap();
        assert!(ok, "I = ({i}), J = ({j}): {lhs} vs {rhs}");
    }
}

#[test]
fn length_identity_examples_in_y_z() {
    // (y, z) and (y, z)^2 written in the two variables of the plane
    let m = MonomialIdeal::parse_in("x, y", 2).unwrap();
    let m2 = MonomialIdeal::parse_in("x^2, x*y, y^2", 2).unwrap();
    assert_eq!(two_var_length_identity_check(&m, &m, DEFAULT_PRIME).unwrap(), (2, 2, true));
    assert_eq!(two_var_length_identity_check(&m2, &m, DEFAULT_PRIME).unwrap(), (3, 3, true));
}
