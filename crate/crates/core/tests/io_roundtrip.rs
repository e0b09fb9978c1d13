mod common;

use common::{random_graph, random_labels};
use iassl::io::{export_dot, graph_from_json, labeled_graph_from_json, labeled_graph_to_json, GraphFile};
use iassl::{GroundSet, LabeledGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 0usize..9, rest in proptest::collection::btree_set(1u32..30, 0..5)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values = vec![0];
        values.extend(rest);
        let x = GroundSet::new(values).unwrap();
        let g = random_graph(&mut rng, n, 0.4);
        let labels = random_labels(&mut rng, &x, n, false);
        let lg = LabeledGraph::with_labels(g.clone(), x.clone(), labels).unwrap();

        let text = labeled_graph_to_json(&lg);
        let back = labeled_graph_from_json(&text, None).unwrap();
        prop_assert_eq!(back.graph(), lg.graph());
        prop_assert_eq!(back.labels(), lg.labels());
        prop_assert_eq!(back.ground(), lg.ground());
        prop_assert_eq!(labeled_graph_to_json(&back), text);

        let unlabeled = serde_json::to_string(&GraphFile::from_graph(&g)).unwrap();
        prop_assert_eq!(&graph_from_json(&unlabeled).unwrap(), &g);

        if n > 0 {
            prop_assert_eq!(export_dot(&lg).unwrap(), export_dot(&back).unwrap());
        }
    }
}
