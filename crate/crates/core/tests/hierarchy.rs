mod common;

use common::{random_graph, random_labels};
use iassl::search::{find_labelings, ground_sets, SearchOptions};
use iassl::verify::{check_iasgl, compute_kappa, verify};
use iassl::{GroundSet, LabeledGraph, Predicate};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sweep_grounds() -> Vec<GroundSet> {
    ground_sets(3, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn predicates_nest(seed in any::<u64>(), n in 1usize..=6, xi in 0usize..11, injective in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = &sweep_grounds()[xi];
        let g = random_graph(&mut rng, n, 0.5);
        let labels = random_labels(&mut rng, x, n, injective);
        let lg = LabeledGraph::with_labels(g, x.clone(), labels).unwrap();
        let r = verify(&lg).unwrap();
        prop_assert!(!r.is_iassi || r.is_iassl);
        prop_assert!(!r.is_iassl || r.is_iasi);
        prop_assert!(!r.is_iasi || r.is_iasl);
        prop_assert!(!r.is_iasgl || r.is_iasi);
        prop_assert_eq!(r.is_iasgl, check_iasgl(&lg).unwrap());
        prop_assert_eq!(r.kappa, compute_kappa(&lg).unwrap());
    }
}

#[test]
fn search_solutions_satisfy_identity_and_nesting() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let grounds = sweep_grounds();
    let mut seen = 0;
    for _ in 0..150 {
        let n = rng.gen_range(3..=6);
        let g = random_graph(&mut rng, n, 0.4);
        for x in &grounds {
            let r = find_labelings(&g, x, &SearchOptions::new(Predicate::Iassl).all()).unwrap();
            for sol in r.solutions {
                let lg = LabeledGraph::with_labels(g.clone(), x.clone(), sol).unwrap();
                let rep = verify(&lg).unwrap();
                assert!(rep.is_iassl && rep.is_iasi && rep.is_iasl);
                assert_eq!(rep.n_vertices + rep.n_edges - rep.kappa, x.powerset_size());
                assert_eq!((rep.n_vertices + rep.n_edges).is_multiple_of(2), rep.kappa % 2 == 1);
                if rep.is_iasgl {
                    assert!(rep.is_iassl);
                }
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}
