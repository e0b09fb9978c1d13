//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! bit-level machinery of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use iassl::verify::verify;
use iassl::{Graph, GroundSet, LabelSet, LabeledGraph, Predicate};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Plain = BTreeSet<u32>;

pub fn plain_sum(a: &Plain, b: &Plain) -> Plain {
    a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
}

pub fn subsets(x: &[u32]) -> Vec<Plain> {
    (1u32..(1 << x.len()))
        .map(|m| (0..x.len()).filter(|&i| m >> i & 1 == 1).map(|i| x[i]).collect())
        .collect()
}

pub struct NaiveClassification {
    pub non_sumsets: BTreeSet<Plain>,
    pub sumsets: BTreeSet<Plain>,
    pub b_family: BTreeSet<Plain>,
}

/// Checks every ordered pair of non-empty subsets.
pub fn naive_classify(x: &[u32]) -> NaiveClassification {
    let all = subsets(x);
    let ground: Plain = x.iter().copied().collect();
    let zero: Plain = [0].into_iter().collect();
    let mut sumsets = BTreeSet::new();
    let mut summands = BTreeSet::new();
    for b in &all {
        for c in &all {
            if *b == zero || *c == zero {
                continue;
            }
            let s = plain_sum(b, c);
            if s.is_subset(&ground) {
                sumsets.insert(s);
                summands.insert(b.clone());
            }
        }
    }
    let non_sumsets: BTreeSet<Plain> = all.iter().filter(|s| !sumsets.contains(*s)).cloned().collect();
    let b_family = non_sumsets.iter().filter(|s| !summands.contains(*s)).cloned().collect();
    NaiveClassification {
        non_sumsets,
        sumsets,
        b_family,
    }
}

pub fn to_plain(s: &LabelSet) -> Plain {
    s.members().collect()
}

/// Every injective assignment of non-empty subsets, checked by the verifier.
pub fn brute_force_labelings(g: &Graph, x: &GroundSet, predicate: Predicate) -> BTreeSet<Vec<LabelSet>> {
    let all: Vec<LabelSet> = subsets(x.values())
        .into_iter()
        .map(|s| LabelSet::new(s).unwrap())
        .collect();
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    fn go(
        g: &Graph,
        x: &GroundSet,
        all: &[LabelSet],
        n: usize,
        chosen: &mut Vec<usize>,
        predicate: Predicate,
        out: &mut BTreeSet<Vec<LabelSet>>,
    ) {
        if chosen.len() == n {
            let labels: Vec<LabelSet> = chosen.iter().map(|&i| all[i].clone()).collect();
            let lg = LabeledGraph::with_labels(g.clone(), x.clone(), labels.clone()).unwrap();
            if verify(&lg).unwrap().holds(predicate) {
                out.insert(labels);
            }
            return;
        }
        for i in 0..all.len() {
            if !chosen.contains(&i) {
                chosen.push(i);
                go(g, x, all, n, chosen, predicate, out);
                chosen.pop();
            }
        }
    }
    go(g, x, &all, n, &mut chosen, predicate, &mut out);
    out
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Labels drawn from the non-empty subsets of X, injective or not.
pub fn random_labels<R: Rng>(rng: &mut R, x: &GroundSet, n: usize, injective: bool) -> Vec<LabelSet> {
    let mut all: Vec<LabelSet> = subsets(x.values())
        .into_iter()
        .map(|s| LabelSet::new(s).unwrap())
        .collect();
    if injective && n <= all.len() {
        all.shuffle(rng);
        all.truncate(n);
        all
    } else {
        (0..n).map(|_| all[rng.gen_range(0..all.len())].clone()).collect()
    }
}
