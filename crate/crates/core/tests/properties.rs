mod common;

use common::subword_products;
use coxperc::percolation::{build_strong_percolating_sequence, fold, is_stack, translate_certificate, CosetSet};
use coxperc::{CoxeterGroup, Direction, FoldStep, GenSet};
use proptest::prelude::*;

const SMALL: &[&str] = &["A2", "A3", "B2", "B3", "G2", "H3", "I2(5)", "A4", "D4"];

fn group(k: usize) -> CoxeterGroup {
    CoxeterGroup::builtin(SMALL[k % SMALL.len()]).unwrap()
}

fn subset(g: &CoxeterGroup, mask: u64) -> GenSet {
    GenSet(mask & g.system().all().0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn reflection_changes_length_parity(k in 0usize..9, a in any::<usize>(), b in any::<usize>()) {
        let g = group(k);
        let refl = g.reflections();
        let t = &refl[b % refl.len()];
        let w = a % g.order();
        let tw = g.multiply(t.index(), w);
        prop_assert_eq!((g.length(tw) + g.length(w)) % 2, 1);
        prop_assert_eq!(g.length(t.index()) % 2, 1);
    }

    #[test]
    fn bruhat_is_subword_order(k in 0usize..9, a in any::<usize>(), b in any::<usize>()) {
        let g = group(k);
        prop_assume!(g.order() <= 120);
        let (u, w) = (a % g.order(), b % g.order());
        let word = g.element(w).unwrap().word;
        let below = subword_products(&word, |sub| g.from_word(sub).index);
        prop_assert_eq!(g.bruhat_leq(u, w), below.contains(&u));
    }

    #[test]
    fn factorization_is_length_additive(k in 0usize..9, a in any::<usize>(), mask in any::<u64>()) {
        let g = group(k);
        let i = subset(&g, mask);
        let table = g.quotient(i).unwrap();
        let w = a % g.order();
        let (head, tail) = g.factorize(&table, w);
        prop_assert_eq!(g.multiply(head.index, tail.index), w);
        prop_assert_eq!(head.len() + tail.len(), g.length(w));
        prop_assert!(tail.support().is_subset(i));
        prop_assert_eq!(head.index, g.min_rep(&table, g.project(&table, w)).unwrap());
    }

    #[test]
    fn stacks_survive_left_folds(k in 0usize..9, mask in any::<u64>(), level in 0usize..8, extra in any::<u64>(), b in any::<usize>()) {
        let g = group(k);
        let table = g.quotient(subset(&g, mask)).unwrap();
        let stack = CosetSet::up_to_depth(&table, level % (table.max_depth() + 1));
        prop_assert!(is_stack(&g, &table, &stack, u128::MAX).unwrap());
        let mut j = stack.clone();
        for c in 0..table.len().min(64) {
            if extra & (1 << c) != 0 {
                j.insert(c);
            }
        }
        let refl = g.reflections();
        let step = FoldStep { reflection: refl[b % refl.len()].clone(), direction: Direction::Left };
        prop_assert!(stack.is_subset(&fold(&table, &j, &step)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, rng_seed: proptest::test_runner::RngSeed::Fixed(0), ..ProptestConfig::default() })]

    #[test]
    fn translated_certificates_verify(k in 0usize..9, drop in any::<usize>(), a in any::<usize>(), p in any::<usize>()) {
        let g = group(k);
        let all = g.system().all();
        let i = all.difference(GenSet::single(drop % g.rank()));
        let table = g.quotient(i).unwrap();
        let start = 1 + a % (table.len() - 1);
        let cert = build_strong_percolating_sequence(&g, &table, start).unwrap();
        let psi = g.element(p % g.order()).unwrap().word;
        let moved = translate_certificate(&g, &table, &cert, &psi).unwrap();
        prop_assert!(moved.verdict.passed());
        let perm = table.permutation(&psi);
        let mut expect = vec![perm[0], perm[start]];
        expect.sort_unstable();
        prop_assert_eq!(&moved.start, &expect);
        prop_assert!(moved.end_set(&table).is_full());
    }
}
