use iassl::construct::{construct, Cover, Mode};
use iassl::search::ground_sets;
use iassl::verify::verify;

#[test]
fn every_small_ground_set_gets_both_witnesses() {
    let grounds: Vec<_> = ground_sets(4, 6).into_iter().filter(|x| x.len() >= 2).collect();
    assert_eq!(grounds.len(), 41);
    for x in &grounds {
        for mode in [Mode::Iassl, Mode::Iassi] {
            let t = construct(x, mode).unwrap();
            let report = verify(&t.graph).unwrap();
            assert!(report.holds(mode.predicate()), "{x} {mode:?}");
            let stats = t.minimality_stats();
            assert!(stats.meets_vertex_bound());
            assert_eq!(stats.n_vertices + stats.n_edges - report.kappa, x.powerset_size());
            if mode == Mode::Iassl {
                assert!(t.graph.graph().is_connected(), "{x}");
            } else {
                assert_eq!(report.kappa, 0);
                assert!(stats.isolated_count >= t.rho_prime);
            }
            // one entry per subset, and every vertex label appears as a cover
            assert_eq!(t.coverage.len(), x.powerset_size());
            let vertices = t.coverage.iter().filter(|c| matches!(c.cover, Cover::Vertex { .. })).count();
            assert_eq!(vertices, t.rho);
        }
    }
}

#[test]
fn constructions_are_reproducible() {
    for x in ground_sets(3, 5) {
        let a = serde_json::to_string(&construct(&x, Mode::Iassl).unwrap()).unwrap();
        let b = serde_json::to_string(&construct(&x, Mode::Iassl).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
