mod common;

use std::sync::Arc;

use proptest::prelude::*;
use twistspec_core::search::DEFAULT_PRODUCT_BUDGET;
use twistspec_core::{
    enumerate_endomorphisms, reidemeister_number, twisted_classes, ClassPartition, FiniteGroup,
    Method, Permutation, Subgroup,
};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = Arc<FiniteGroup>> {
    (1usize..=6)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(perm(n), 1..=2)))
        .prop_map(|(n, gens)| Arc::new(FiniteGroup::closure(n, gens).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_sizes_divide_and_sum(g in group()) {
        let c = ClassPartition::new(&g);
        prop_assert_eq!(c.sizes().iter().sum::<usize>(), g.order());
        prop_assert!(c.sizes().iter().all(|s| g.order() % s == 0));
        prop_assert_eq!(c.count(), common::class_count(&g));
    }

    #[test]
    fn subgroup_orders_divide(g in group(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3)) {
        let gens: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let h = Subgroup::generated(&g, &gens);
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert!(gens.iter().all(|&x| h.contains(x)));
    }

    #[test]
    fn odd_order_inverse_classes_differ(g in group()) {
        prop_assume!(g.order() % 2 == 1);
        let c = ClassPartition::new(&g);
        for x in 1..g.order() {
            prop_assert_ne!(c.class_of(x), c.class_of(g.inv(x)));
        }
    }

    #[test]
    fn twisted_counts_agree(g in group(), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.order() <= 24);
        let ends = enumerate_endomorphisms(&g, DEFAULT_PRODUCT_BUDGET).unwrap();
        let phi = &ends[pick.index(ends.len())];
        let c = ClassPartition::new(&g);
        let r = reidemeister_number(phi, &c, Method::FixedClasses).unwrap();
        prop_assert_eq!(r, common::twisted_count(phi));
        prop_assert_eq!(r, twisted_classes(phi).unwrap().count());
        prop_assert!(r >= 1 && r <= c.count());
        if g.order() % 2 == 1 {
            prop_assert_eq!(r % 2, 1);
        }
    }
}
