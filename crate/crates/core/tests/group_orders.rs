mod common;

use common::*;
use coxperc::{CoxeterGroup, CoxeterSystem};

#[test]
fn type_a_matches_symmetric_groups() {
    for n in 1..=6 {
        let g = CoxeterGroup::builtin(&format!("A{n}")).unwrap();
        assert_eq!(
            g.order(),
            permutation_group_order(&symmetric_generators(n + 1)),
            "A{n}"
        );
    }
}

#[test]
fn dihedral_orders() {
    for m in 2..=12 {
        let g = CoxeterGroup::builtin(&format!("I2({m})")).unwrap();
        assert_eq!(g.order(), permutation_group_order(&dihedral_generators(m)));
        assert_eq!(g.order(), 2 * m);
    }
}

#[test]
fn type_b_matches_signed_permutations() {
    for n in 2..=4 {
        let g = CoxeterGroup::builtin(&format!("B{n}")).unwrap();
        assert_eq!(
            g.order(),
            permutation_group_order(&hyperoctahedral_generators(n)),
            "B{n}"
        );
    }
}

#[test]
fn exceptional_orders_match_geometric_representation() {
    for name in ["F4", "H3", "D4", "G2", "B3", "A2xI2(2)"] {
        let sys = CoxeterSystem::builtin(name).unwrap();
        let g = CoxeterGroup::new(sys.clone()).unwrap();
        assert_eq!(g.order(), geometric_order(sys.matrix()), "{name}");
    }
}

#[test]
fn reflection_counts() {
    // |T| is the number of positive roots
    for (name, t) in [
        ("A3", 6),
        ("B3", 9),
        ("H3", 15),
        ("F4", 24),
        ("D4", 12),
        ("I2(7)", 7),
    ] {
        assert_eq!(
            CoxeterGroup::builtin(name).unwrap().reflections().len(),
            t,
            "{name}"
        );
    }
}
