use numset_core::{
    compose_symmetric, numerical_set_of, partition_of, sum_gaps, sum_partitions, sum_sets,
    NumericalSet, Partition, SumKind, SymmetricShape,
};
use proptest::prelude::*;

/// Proper sets with conductor in `2..=max_c`.
fn proper_set(max_c: i64) -> impl Strategy<Value = NumericalSet> {
    (2..=max_c).prop_flat_map(|c| {
        proptest::collection::vec(any::<bool>(), (c - 2) as usize).prop_map(move |keep| {
            let mut small = vec![0];
            small.extend((1..c - 1).filter(|&i| keep[(i - 1) as usize]));
            small.push(c);
            NumericalSet::from_small_elements(&small).unwrap()
        })
    })
}

fn kind() -> impl Strategy<Value = SumKind> {
    prop_oneof![
        Just(SumKind::Bonded),
        Just(SumKind::EndToEnd),
        Just(SumKind::Conjoint)
    ]
}

proptest! {
    #[test]
    fn dual_is_an_involution(r in proper_set(40)) {
        prop_assert_eq!(r.dual().unwrap().dual().unwrap(), r);
    }

    #[test]
    fn partition_round_trip(r in proper_set(40)) {
        let p = partition_of(&r).unwrap();
        prop_assert_eq!(numerical_set_of(&p).unwrap(), r.clone());
        prop_assert_eq!(p.len(), r.genus());
        prop_assert_eq!(partition_of(&r.dual().unwrap()).unwrap(), p.transpose());
    }

    #[test]
    fn partition_side_round_trip(parts in proptest::collection::vec(1usize..12, 1..12)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(partition_of(&numerical_set_of(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn literal_round_trip(r in proper_set(40)) {
        prop_assert_eq!(r.literal().parse::<NumericalSet>().unwrap(), r.clone());
        prop_assert_eq!(r.to_string().parse::<NumericalSet>().unwrap(), r);
    }

    #[test]
    fn sums_are_associative(a in proper_set(12), b in proper_set(12), c in proper_set(12), k in kind()) {
        let left = sum_sets(&sum_sets(&a, &b, k).unwrap(), &c, k).unwrap();
        let right = sum_sets(&a, &sum_sets(&b, &c, k).unwrap(), k).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn gap_formula_and_diagram_sum(a in proper_set(16), b in proper_set(16), k in kind()) {
        let sum = sum_sets(&a, &b, k).unwrap();
        prop_assert_eq!(sum.gaps(), sum_gaps(&a, &b, k).unwrap());
        let diagram = sum_partitions(&partition_of(&a).unwrap(), &partition_of(&b).unwrap(), k).unwrap();
        prop_assert_eq!(partition_of(&sum).unwrap(), diagram);
    }

    #[test]
    fn duality_law(a in proper_set(16), b in proper_set(16), k in kind()) {
        let left = sum_sets(&a, &b, k).unwrap().dual().unwrap();
        let right = sum_sets(&b.dual().unwrap(), &a.dual().unwrap(), k.dual()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn end_to_end_identity_and_factorization(a in proper_set(16), b in proper_set(16)) {
        let n0 = NumericalSet::naturals();
        prop_assert_eq!(sum_sets(&n0, &a, SumKind::EndToEnd).unwrap(), a.clone());
        prop_assert_eq!(sum_sets(&a, &n0, SumKind::EndToEnd).unwrap(), a.clone());
        let two = NumericalSet::ordinary(2).unwrap();
        let via = sum_sets(&sum_sets(&a, &two, SumKind::Conjoint).unwrap(), &b, SumKind::Bonded).unwrap();
        prop_assert_eq!(sum_sets(&a, &b, SumKind::EndToEnd).unwrap(), via);
    }

    #[test]
    fn compositions_are_symmetric(s in proper_set(24)) {
        for shape in SymmetricShape::ALL {
            prop_assert!(compose_symmetric(&s, shape).unwrap().is_symmetric().unwrap());
        }
    }
}
