//! Deterministic witnesses: for every ground set containing 0, a graph with
//! an IASSL and a graph with an IASSI.
//!
//! Both builds start from the non-sum-sets, which can only ever appear as
//! vertex labels. The sum sets are then placed one at a time in
//! value-lexicographic order: as the edge between two distinct non-sum-set
//! vertices whenever such a decomposition exists, and otherwise as an extra
//! vertex (a pendant on the `{0}` hub for IASSL, an isolated vertex for
//! IASSI). Sum sets whose only decompositions use the same summand twice
//! would need a loop, so they always take the fallback.

use serde::Serialize;

use crate::classify::{classify_powerset, PowersetClassification};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, LabeledGraph};
use crate::sets::{GroundSet, LabelSet};
use crate::verify::{verify, Predicate, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Iassl,
    Iassi,
}

impl Mode {
    pub fn predicate(self) -> Predicate {
        match self {
            Mode::Iassl => Predicate::Iassl,
            Mode::Iassi => Predicate::Iassi,
        }
    }
}

/// How one subset of X ends up in the image of `f*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "covered_by", rename_all = "snake_case")]
pub enum Cover {
    /// A non-sum-set, placed on its own vertex.
    Vertex { vertex: usize },
    /// A sum set realised as the edge between its two summands.
    Edge {
        edge: Edge,
        summands: (LabelSet, LabelSet),
    },
    /// A sum set placed on a new vertex hanging off the `{0}` hub; the hub
    /// edge carries the same set.
    Pendant { vertex: usize, hub: usize },
    /// A sum set placed on a new isolated vertex.
    Isolated { vertex: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverageEntry {
    pub set: LabelSet,
    #[serde(flatten)]
    pub cover: Cover,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionTrace {
    pub mode: Mode,
    pub ground: GroundSet,
    pub rho: usize,
    pub rho_prime: usize,
    /// One entry per non-empty subset of X, in value-lexicographic order.
    pub coverage: Vec<CoverageEntry>,
    /// Vertices added as fallbacks for sum sets with no usable decomposition.
    pub fallback_vertices: Vec<usize>,
    pub graph: LabeledGraph,
    pub report: VerificationReport,
}

impl ConstructionTrace {
    pub fn minimality_stats(&self) -> MinimalityStats {
        minimality_stats(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityStats {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub rho: usize,
    pub rho_prime: usize,
    pub pendant_count: usize,
    pub isolated_count: usize,
}

impl MinimalityStats {
    /// Every non-sum-set needs its own vertex.
    pub fn meets_vertex_bound(&self) -> bool {
        self.n_vertices >= self.rho
    }
}

pub fn minimality_stats(trace: &ConstructionTrace) -> MinimalityStats {
    let g = trace.graph.graph();
    MinimalityStats {
        n_vertices: g.vertex_count(),
        n_edges: g.edge_count(),
        rho: trace.rho,
        rho_prime: trace.rho_prime,
        pendant_count: g.pendant_count(),
        isolated_count: g.isolated_count(),
    }
}

/// Lexicographically smallest decomposition of `s` into two distinct
/// non-sum-sets.
fn distinct_summands(class: &PowersetClassification, s: u32) -> Option<(u32, u32)> {
    class
        .decomposition_masks(s)
        .into_iter()
        .find(|&(b, c)| b != c && !class.is_sumset_mask(b) && !class.is_sumset_mask(c))
}

pub fn construct_iassl_graph(x: &GroundSet) -> Result<ConstructionTrace> {
    construct(x, Mode::Iassl)
}

pub fn construct_iassi_graph(x: &GroundSet) -> Result<ConstructionTrace> {
    construct(x, Mode::Iassi)
}

pub fn construct(x: &GroundSet, mode: Mode) -> Result<ConstructionTrace> {
    let class = classify_powerset(x)?;
    let zero_mask = class.algebra().zero();
    let mut g = LabeledGraph::new(Graph::new(0), x.clone());
    let mut coverage = Vec::with_capacity(x.powerset_size());
    let mut vertex_of = std::collections::HashMap::new();

    // {0} first so that it is vertex 0, the hub
    let mut non_sums: Vec<u32> = class.non_sumset_masks().to_vec();
    non_sums.sort_by_key(|&m| m != zero_mask);
    for &m in &non_sums {
        let v = g.add_vertex(Some(x.set_of_mask(m)))?;
        vertex_of.insert(m, v);
        coverage.push(CoverageEntry {
            set: x.set_of_mask(m),
            cover: Cover::Vertex { vertex: v },
        });
    }
    let hub = vertex_of[&zero_mask];
    if mode == Mode::Iassl {
        for &m in &non_sums {
            if m != zero_mask {
                g.add_edge(hub, vertex_of[&m])?;
            }
        }
    }

    let mut fallback_vertices = Vec::new();
    for &s in class.sumset_masks() {
        let set = x.set_of_mask(s);
        let cover = match distinct_summands(&class, s) {
            Some((b, c)) => {
                let (u, v) = (vertex_of[&b], vertex_of[&c]);
                g.add_edge(u, v)?;
                Cover::Edge {
                    edge: (u.min(v), u.max(v)),
                    summands: (x.set_of_mask(b), x.set_of_mask(c)),
                }
            }
            None => {
                let v = g.add_vertex(Some(set.clone()))?;
                fallback_vertices.push(v);
                if mode == Mode::Iassl {
                    g.add_edge(hub, v)?;
                    Cover::Pendant { vertex: v, hub }
                } else {
                    Cover::Isolated { vertex: v }
                }
            }
        };
        coverage.push(CoverageEntry { set, cover });
    }
    coverage.sort_by(|a, b| a.set.cmp(&b.set));

    let report = verify(&g)?;
    let trace = ConstructionTrace {
        mode,
        ground: x.clone(),
        rho: class.rho(),
        rho_prime: class.rho_prime(),
        coverage,
        fallback_vertices,
        graph: g,
        report,
    };
    if !trace.report.holds(mode.predicate()) {
        let dump = serde_json::to_string(&trace).unwrap_or_default();
        return Err(Error::Internal(format!("construction for {x} failed verification: {dump}")));
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(s: &str) -> GroundSet {
        GroundSet::parse(s).unwrap()
    }

    fn label_strings(t: &ConstructionTrace) -> Vec<String> {
        t.graph.complete_labels().unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn iassl_over_0_1_is_the_star() {
        let t = construct_iassl_graph(&x("0,1")).unwrap();
        assert_eq!(label_strings(&t), ["{0}", "{0,1}", "{1}"]);
        assert_eq!(t.graph.graph().edges().collect::<Vec<_>>(), [(0, 1), (0, 2)]);
        assert!(t.report.is_iassl);
        let s = t.minimality_stats();
        assert_eq!((s.n_vertices, s.rho), (3, 3));
    }

    #[test]
    fn iassl_over_0_1_2() {
        let t = construct_iassl_graph(&x("0,1,2")).unwrap();
        assert_eq!(label_strings(&t), ["{0}", "{0,1}", "{0,2}", "{1}", "{0,1,2}", "{2}"]);
        let g = t.graph.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        // {1}-{0,1} covers {1,2}
        assert!(g.has_edge(1, 3));
        assert_eq!(g.degree(0), 5);
        assert_eq!(t.report.kappa, 5);
        assert_eq!(t.fallback_vertices, [4, 5]);
        let s = t.minimality_stats();
        assert_eq!((s.n_vertices, s.rho, s.pendant_count), (6, 4, 3));
    }

    #[test]
    fn iassi_over_0_1_2() {
        let t = construct_iassi_graph(&x("0,1,2")).unwrap();
        assert!(t.report.is_iassi);
        let g = t.graph.graph();
        assert_eq!(g.edges().collect::<Vec<_>>(), [(1, 3)]);
        assert_eq!(g.isolated_count(), 4);
        assert_eq!(t.rho_prime, 2);
    }

    #[test]
    fn degenerate_ground_set() {
        for mode in [Mode::Iassl, Mode::Iassi] {
            let t = construct(&x("0"), mode).unwrap();
            assert_eq!(label_strings(&t), ["{0}"]);
            assert_eq!(t.graph.graph().edge_count(), 0);
            assert_eq!(t.minimality_stats().n_vertices, 1);
        }
        let t = construct_iassi_graph(&x("0,1")).unwrap();
        assert_eq!(t.graph.graph().edge_count(), 0);
        assert_eq!(t.graph.graph().vertex_count(), 3);
    }

    #[test]
    fn coverage_lists_every_subset_once() {
        for xs in ["0,1,2", "0,1,3,4", "0,2,3,6"] {
            let x = x(xs);
            for mode in [Mode::Iassl, Mode::Iassi] {
                let t = construct(&x, mode).unwrap();
                let sets: Vec<&LabelSet> = t.coverage.iter().map(|c| &c.set).collect();
                assert_eq!(sets.len(), x.powerset_size());
                assert!(sets.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn b_family_vertices_only_touch_the_hub() {
        for xs in ["0,1,2", "0,1,2,3", "0,2,5,6"] {
            let x = x(xs);
            let t = construct_iassl_graph(&x).unwrap();
            let class = classify_powerset(&x).unwrap();
            let labels = t.graph.complete_labels().unwrap();
            for (v, l) in labels.iter().enumerate() {
                if class.b_family().contains(l) && v != 0 {
                    assert_eq!(t.graph.graph().neighbors(v).collect::<Vec<_>>(), [0], "{l}");
                }
            }
        }
    }

    #[test]
    fn rejects_ground_without_zero() {
        assert!(matches!(construct_iassl_graph(&x("1,2")), Err(Error::Domain(_))));
    }
}
