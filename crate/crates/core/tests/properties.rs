//! Randomised structural properties.

use fock_canon::canonical::{mullineux, LltEngine};
use fock_canon::fock_space::Laurent;
use fock_canon::partition_core::{core_and_quotient, from_core_and_quotient, partitions_of, Partition};
use proptest::prelude::*;

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_roundtrip(lam in partition(14)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn core_quotient_roundtrip(lam in partition(14), e in 2usize..=5) {
        let cq = core_and_quotient(&lam, e, None);
        prop_assert_eq!(from_core_and_quotient(&cq).unwrap(), lam.clone());
        prop_assert_eq!(cq.core.size() + e * cq.weight(), lam.size());
    }

    #[test]
    fn mullineux_involution(lam in partition(14), e in 2usize..=5) {
        prop_assume!(lam.is_e_regular(e));
        let star = mullineux(&lam, e).unwrap();
        prop_assert!(star.is_e_regular(e));
        prop_assert_eq!(star.size(), lam.size());
        prop_assert_eq!(mullineux(&star, e).unwrap(), lam);
    }

    #[test]
    fn columns_are_unitriangular(lam in partition(9), e in 2usize..=4) {
        prop_assume!(lam.is_e_regular(e));
        let g = LltEngine::new(e).column(&lam).unwrap().vector;
        prop_assert_eq!(g.coeff(&lam), Laurent::one());
        for (nu, c) in g.iter() {
            prop_assert!(lam.dominates(nu));
            prop_assert!(nu == &lam || (c.in_v_z_v() && c.is_nonnegative()));
        }
    }
}
