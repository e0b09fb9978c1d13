mod common;

use std::collections::BTreeSet;

use common::brute_force_labelings;
use iassl::families::{all_graphs, connected_graphs};
use iassl::search::{find_labelings, SearchOptions};
use iassl::verify::verify;
use iassl::{GroundSet, LabeledGraph, Predicate};

fn grounds() -> Vec<GroundSet> {
    ["0", "0,1", "0,2", "0,1,2", "0,1,3"].iter().map(|s| GroundSet::parse(s).unwrap()).collect()
}

#[test]
fn search_equals_brute_force_on_small_graphs() {
    for n in 1..=4 {
        for ng in all_graphs(n).unwrap() {
            for x in grounds() {
                for p in [Predicate::Iassl, Predicate::Iassi] {
                    let r = find_labelings(&ng.graph, &x, &SearchOptions::new(p).all()).unwrap();
                    assert!(r.exhausted);
                    let got: BTreeSet<_> = r.solutions.iter().cloned().collect();
                    assert_eq!(got.len(), r.solutions.len(), "duplicates for {} {x}", ng.name);
                    assert_eq!(got, brute_force_labelings(&ng.graph, &x, p), "{} {x} {p}", ng.name);
                }
            }
        }
    }
}

#[test]
fn every_solution_reverifies() {
    for n in 1..=5 {
        for ng in connected_graphs(n).unwrap().into_iter().chain(all_graphs(n).unwrap()) {
            for x in grounds() {
                let r = find_labelings(&ng.graph, &x, &SearchOptions::new(Predicate::Iassl).all()).unwrap();
                for sol in r.solutions {
                    let lg = LabeledGraph::with_labels(ng.graph.clone(), x.clone(), sol).unwrap();
                    assert!(verify(&lg).unwrap().is_iassl);
                }
            }
        }
    }
}

#[test]
fn options_never_change_the_answer() {
    for n in 2..=5 {
        for ng in all_graphs(n).unwrap() {
            let x = GroundSet::parse("0,1,2").unwrap();
            let base = SearchOptions::new(Predicate::Iassl).all();
            let reference = find_labelings(&ng.graph, &x, &base).unwrap();
            for opts in [
                SearchOptions { parallel: true, ..base.clone() },
                SearchOptions { symmetry: true, ..base.clone() },
                SearchOptions { symmetry: true, parallel: true, ..base.clone() },
            ] {
                let r = find_labelings(&ng.graph, &x, &opts).unwrap();
                assert_eq!(r.solutions, reference.solutions, "{} {opts:?}", ng.name);
            }
            let unpruned = SearchOptions { pruning: false, ..base.clone() };
            if n <= 4 {
                let r = find_labelings(&ng.graph, &x, &unpruned).unwrap();
                assert_eq!(r.solutions, reference.solutions);
                assert!(r.nodes_expanded >= reference.nodes_expanded);
            }
        }
    }
}
