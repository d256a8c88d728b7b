use proptest::prelude::*;

use kerov_core::charoracle::CycleType;
use kerov_core::functionals::{s_functional_boxes, s_functional_frobenius, ShapeVector};
use kerov_core::kerov::{kerov_candidate_triples, marriage_condition, marriage_condition_flow};
use kerov_core::{mn_character, normalized_character, Partition, Permutation};

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn pair(max_k: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_k).prop_flat_map(|k| (permutation(k), permutation(k)))
}

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..=6, 0..=max_n).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows).unwrap()
    })
}

proptest! {
    #[test]
    fn sign_is_multiplicative((a, b) in pair(9)) {
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
    }

    #[test]
    fn inverse_composes_to_identity(a in (1usize..=9).prop_flat_map(permutation)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn cycles_partition_the_points(a in (1usize..=12).prop_flat_map(permutation)) {
        let cycles = a.cycles();
        let union = cycles.iter().fold(0u64, |acc, c| {
            assert_eq!(acc & c.support(), 0);
            acc | c.support()
        });
        prop_assert_eq!(union, (1u64 << a.degree()) - 1);
        prop_assert_eq!(a.cycle_type().iter().sum::<usize>(), a.degree());
    }

    #[test]
    fn character_is_class_function((a, b) in pair(6)) {
        let n = a.degree();
        let conj = b.inverse().compose(&a).unwrap().compose(&b).unwrap();
        for lambda in Partition::all_of_size(n) {
            prop_assert_eq!(
                mn_character(&lambda, &CycleType::of(&a)).unwrap(),
                mn_character(&lambda, &CycleType::of(&conj)).unwrap()
            );
        }
    }

    #[test]
    fn s_routes_agree(lambda in partition(7), k in 2usize..=7) {
        prop_assert_eq!(s_functional_boxes(&lambda, k), s_functional_frobenius(&lambda.frobenius(), k));
    }

    #[test]
    fn conjugation_flips_odd_cumulants(lambda in partition(6), k in 2usize..=6) {
        let r = ShapeVector::r_of(&lambda, k);
        let rc = ShapeVector::r_of(&lambda.conjugate(), k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(rc.get(k).unwrap().clone(), r.get(k).unwrap() * kerov_core::Rational::from_integer(sign.into()));
    }

    #[test]
    fn first_character_is_size(lambda in partition(8)) {
        prop_assert_eq!(normalized_character(&lambda, 1), kerov_core::Rational::from_integer(lambda.size().into()));
    }
}

#[test]
fn marriage_forms_agree_on_every_triple() {
    for k in 1..=5 {
        for t in kerov_candidate_triples(k) {
            assert_eq!(
                marriage_condition(&t),
                marriage_condition_flow(&t),
                "{} {}",
                t.sigma1(),
                t.sigma2()
            );
        }
    }
}
