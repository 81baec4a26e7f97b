mod common;

use common as oracle;
use fundamental_bases::basis::{self, Method};
use fundamental_bases::expansion::{expand_fatom, expand_slide};
use fundamental_bases::product::{fatom_product, slide_times_fatom};
use fundamental_bases::{Composition, Polynomial};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn to_poly(p: &Polynomial) -> oracle::Poly {
    p.terms().map(|(a, k)| (a.parts().to_vec(), k.to_i64().unwrap())).collect()
}

fn composition(max_len: usize, max_part: u32) -> impl Strategy<Value = Vec<u32>> {
    (1..=max_len).prop_flat_map(move |n| prop::collection::vec(0..=max_part, n))
}

fn pair(max_len: usize, max_part: u32) -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (1..=max_len).prop_flat_map(move |n| {
        (prop::collection::vec(0..=max_part, n), prop::collection::vec(0..=max_part, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qshift_matches_reference(a in composition(8, 4)) {
        let q = Composition::new(a.clone()).qshift();
        prop_assert_eq!(q.parts().to_vec(), oracle::qshift(&a));
        prop_assert!(oracle::dominated(&a, q.parts()));
    }

    #[test]
    fn fatom_is_the_dominance_interval(a in composition(6, 2)) {
        let a_c = Composition::new(a.clone());
        prop_assert_eq!(to_poly(&basis::fatom(&a_c, Method::Operator)), oracle::fatom(&a));
    }

    #[test]
    fn slide_is_the_refinement_set(a in composition(6, 2)) {
        let a_c = Composition::new(a.clone());
        prop_assert_eq!(to_poly(&basis::slide(&a_c, Method::Operator)), oracle::slide(&a));
    }

    #[test]
    fn expansions_reconstruct(terms in prop::collection::vec((composition(4, 3), -3i64..=3), 1..6)) {
        let n = terms.iter().map(|(a, _)| a.len()).max().unwrap();
        let p = Polynomial::from_terms(
            n,
            terms.into_iter().map(|(a, k)| (Composition::with_len(a, n).unwrap(), BigInt::from(k))),
        ).unwrap();
        prop_assert_eq!(expand_fatom(&p).reconstruct(), p.clone());
        prop_assert_eq!(expand_slide(&p).reconstruct(), p);
    }

    #[test]
    fn products_reconstruct((a, b) in pair(4, 2)) {
        let (ac, bc) = (Composition::new(a.clone()), Composition::new(b.clone()));
        let want_ff = oracle::mul(&oracle::fatom(&a), &oracle::fatom(&b));
        prop_assert_eq!(to_poly(&fatom_product(&ac, &bc).unwrap().reconstruct()), want_ff);
        let want_sf = oracle::mul(&oracle::slide(&a), &oracle::fatom(&b));
        prop_assert_eq!(to_poly(&slide_times_fatom(&ac, &bc).unwrap().reconstruct()), want_sf);
    }
}
