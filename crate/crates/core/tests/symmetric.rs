use std::collections::HashSet;

use irrep_core::linalg::max_abs;
use irrep_core::perm::{all_permutations, Permutation};
use irrep_core::symrep::SymIrrep;
use irrep_core::tableaux::{enumerate_syt, hook_walk_sample, partitions, YoungDiagram};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

fn pair_strategy(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let images = Just((1..=n).collect::<Vec<_>>());
        (images.clone().prop_shuffle(), images.prop_shuffle())
            .prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bubblesort_word_recomposes(p in perm_strategy(10)) {
        let word = p.bubblesort_decompose();
        prop_assert_eq!(Permutation::from_adjacent_word(p.n(), &word).unwrap(), p);
    }

    #[test]
    fn sign_is_multiplicative((p, q) in pair_strategy(10)) {
        prop_assert_eq!(p.compose(&q).unwrap().sign(), p.sign() * q.sign());
    }

    #[test]
    fn cycle_type_is_a_class_function((p, g) in pair_strategy(10)) {
        let conj = g.compose(&p).unwrap().compose(&g.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
    }

    #[test]
    fn character_is_a_class_function((p, g) in pair_strategy(6), pick in any::<prop::sample::Index>()) {
        let shapes = partitions(p.n());
        let irrep = SymIrrep::new(&shapes[pick.index(shapes.len())]).unwrap();
        let conj = g.compose(&p).unwrap().compose(&g.inverse()).unwrap();
        prop_assert!((irrep.exact_character(&conj).unwrap() - irrep.exact_character(&p).unwrap()).abs() <= 1e-9);
    }
}

#[test]
fn coxeter_length_is_word_length() {
    for p in all_permutations(5) {
        assert_eq!(p.stats().coxeter_length, p.bubblesort_decompose().len());
    }
}

#[test]
fn hook_walk_reaches_every_tableau() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for n in 1..=6 {
        for shape in partitions(n) {
            let count = enumerate_syt(&shape).unwrap().len();
            let seen: HashSet<Vec<usize>> = (0..400 * count).map(|_| hook_walk_sample(&shape, &mut rng).reading_word()).collect();
            assert_eq!(seen.len(), count, "{:?}", shape.rows());
        }
    }
}

#[test]
fn conjugation_is_a_free_involution_on_self_conjugate_shapes() {
    for n in 2..=8 {
        for shape in partitions(n).into_iter().filter(YoungDiagram::is_self_conjugate) {
            for t in enumerate_syt(&shape).unwrap() {
                let c = t.conjugate();
                assert_ne!(c, t);
                assert_eq!(c.conjugate(), t);
            }
        }
    }
}

#[test]
fn axial_distance_flips_under_conjugation() {
    for n in 2..=7 {
        for shape in partitions(n) {
            for t in enumerate_syt(&shape).unwrap() {
                let c = t.conjugate();
                for i in 1..n {
                    assert_eq!(t.axial_distance(i).unwrap(), -c.axial_distance(i).unwrap());
                }
            }
        }
    }
}

#[test]
fn basis_is_subgroup_adapted() {
    for n in 3..=6 {
        for shape in partitions(n) {
            let irrep = SymIrrep::new(&shape).unwrap();
            let basis = irrep.basis();
            for k in 1..n {
                for p in all_permutations(k) {
                    let mut images = p.images();
                    images.extend(k + 1..=n);
                    let rho = irrep.rep_permutation(&Permutation::new(images).unwrap()).unwrap().into_matrix();
                    let mut off_block = rho.clone();
                    for (a, ta) in basis.iter().enumerate() {
                        for (b, tb) in basis.iter().enumerate() {
                            if ta.restricted_shape(k) == tb.restricted_shape(k) {
                                off_block[(a, b)] = 0.0.into();
                            }
                        }
                    }
                    assert!(max_abs(&off_block) <= 1e-12, "{:?} k={k}", shape.rows());
                }
            }
        }
    }
}
