mod common;

use common::{naive_classify, plain_sum, to_plain, Plain};
use iassl::{classify_powerset, sumset, GroundSet, LabelSet};
use proptest::collection::btree_set;
use proptest::prelude::*;

fn label() -> impl Strategy<Value = Plain> {
    btree_set(0u32..200, 1..12)
}

fn wide_label() -> impl Strategy<Value = Plain> {
    btree_set(0u32..5000, 1..6)
}

fn ls(p: &Plain) -> LabelSet {
    LabelSet::new(p.iter().copied()).unwrap()
}

fn sum(a: &LabelSet, b: &LabelSet) -> LabelSet {
    // give the sum room for a third addend in associativity checks
    let bound = 3 * a.max_member().max(b.max_member()).max(1);
    sumset(&a.rebound(bound).unwrap(), &b.rebound(bound).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn sumset_matches_pairwise_sums(a in label(), b in wide_label()) {
        prop_assert_eq!(to_plain(&sum(&ls(&a), &ls(&b))), plain_sum(&a, &b));
    }

    #[test]
    fn commutative(a in label(), b in label()) {
        prop_assert_eq!(sum(&ls(&a), &ls(&b)), sum(&ls(&b), &ls(&a)));
    }

    #[test]
    fn associative(a in label(), b in label(), c in label()) {
        let (a, b, c) = (ls(&a), ls(&b), ls(&c));
        prop_assert_eq!(to_plain(&sum(&sum(&a, &b), &c)), to_plain(&sum(&a, &sum(&b, &c))));
    }

    #[test]
    fn zero_is_identity(a in label()) {
        let zero = LabelSet::singleton(0).unwrap();
        prop_assert_eq!(to_plain(&sum(&ls(&a), &zero)), a);
    }

    #[test]
    fn extremes_add(a in label(), b in label()) {
        let s = sum(&ls(&a), &ls(&b));
        prop_assert_eq!(s.min_member(), a.first().unwrap() + b.first().unwrap());
        prop_assert_eq!(s.max_member(), a.last().unwrap() + b.last().unwrap());
    }

    #[test]
    fn cauchy_davenport_for_integers(a in label(), b in label()) {
        prop_assert!(sum(&ls(&a), &ls(&b)).len() + 1 >= a.len() + b.len());
    }

    #[test]
    fn classification_matches_pair_oracle(rest in btree_set(1u32..12, 0..5)) {
        let mut values = vec![0];
        values.extend(rest);
        let x = GroundSet::new(values.clone()).unwrap();
        let class = classify_powerset(&x).unwrap();
        let naive = naive_classify(&values);
        let got = |s: &[LabelSet]| s.iter().map(to_plain).collect::<std::collections::BTreeSet<_>>();
        prop_assert_eq!(got(class.non_sumsets()), naive.non_sumsets);
        prop_assert_eq!(got(class.sumsets()), naive.sumsets);
        prop_assert_eq!(got(class.b_family()), naive.b_family);
    }

    #[test]
    fn classification_facts(rest in btree_set(1u32..20, 1..6)) {
        let mut values = vec![0];
        values.extend(rest);
        let x = GroundSet::new(values.clone()).unwrap();
        let class = classify_powerset(&x).unwrap();
        let zero = x.label(&[0]).unwrap();
        let ends = x.label(&[0, x.max_value()]).unwrap();
        prop_assert!(class.b_family().contains(&zero));
        prop_assert!(class.b_family().contains(&ends));
        prop_assert!(class.b_family().iter().all(|b| class.non_sumsets().contains(b)));
        prop_assert_eq!(class.rho() + class.sumsets().len(), x.powerset_size());
        for (s, decomps) in class.decompositions() {
            for (b, c) in decomps {
                prop_assert_eq!(&sum(b, c), s);
            }
        }
    }
}
