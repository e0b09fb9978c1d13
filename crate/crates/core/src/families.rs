//! Generators for the small graph families the sweeps run over.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count for which non-isomorphic graphs are enumerated.
pub const MAX_ENUMERATED_ORDER: usize = 6;

/// A generated graph with a stable display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Paths,
    Cycles,
    Stars,
    Complete,
    CompleteBipartite,
    /// All connected graphs up to isomorphism.
    Connected,
    /// All graphs up to isomorphism, isolated vertices allowed.
    All,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Paths,
        Family::Cycles,
        Family::Stars,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Connected,
        Family::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Paths => "paths",
            Family::Cycles => "cycles",
            Family::Stars => "stars",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Connected => "connected",
            Family::All => "all",
        }
    }

    /// Members of the family on exactly `n` vertices.
    pub fn members(self, n: usize) -> Result<Vec<NamedGraph>> {
        Ok(match self {
            Family::Paths if n >= 1 => vec![path(n)],
            Family::Cycles if n >= 3 => vec![cycle(n)],
            Family::Stars if n >= 2 => vec![star(n - 1)],
            Family::Complete if n >= 1 => vec![complete(n)],
            Family::CompleteBipartite => (1..=n / 2).map(|a| complete_bipartite(a, n - a)).collect(),
            Family::Connected => connected_graphs(n)?,
            Family::All => all_graphs(n)?,
            _ => Vec::new(),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paths" | "path" => Ok(Family::Paths),
            "cycles" | "cycle" => Ok(Family::Cycles),
            "stars" | "star" => Ok(Family::Stars),
            "complete" => Ok(Family::Complete),
            "complete-bipartite" | "bipartite" => Ok(Family::CompleteBipartite),
            "connected" => Ok(Family::Connected),
            "all" => Ok(Family::All),
            other => Err(Error::Domain(format!("unknown graph family {other:?}"))),
        }
    }
}

fn named(name: String, n: usize, edges: &[(usize, usize)]) -> NamedGraph {
    NamedGraph {
        name,
        graph: Graph::from_edges(n, edges).expect("generator emits simple graphs"),
    }
}

pub fn path(n: usize) -> NamedGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    named(format!("P_{n}"), n, &edges)
}

pub fn cycle(n: usize) -> NamedGraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    named(format!("C_{n}"), n, &edges)
}

/// `K_{1,k}`, centre at vertex 0.
pub fn star(k: usize) -> NamedGraph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    named(format!("K_1,{k}"), k + 1, &edges)
}

pub fn complete(n: usize) -> NamedGraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    named(format!("K_{n}"), n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> NamedGraph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    named(format!("K_{a},{b}"), a + b, &edges)
}

/// `n` vertices, one edge between 0 and 1, the rest isolated.
pub fn edge_plus_isolated(n: usize) -> NamedGraph {
    named(format!("K_2+{}K_1", n - 2), n, &[(0, 1)])
}

fn pair_bit(n: usize, u: usize, v: usize) -> u32 {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // row-major upper triangle
    (u * (2 * n - u - 1) / 2 + (v - u - 1)) as u32
}

fn code_of(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    edges
        .iter()
        .fold(0u64, |acc, &(u, v)| acc | 1u64 << pair_bit(n, perm[u], perm[v]))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
        heap(k - 1, a, out);
    }
    heap(n, &mut current, &mut out);
    out
}

/// Canonical code: the largest upper-triangle bitmask over all relabelings.
/// The maximum puts edges on low vertex ids first.
fn canonical_code(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| code_of(n, edges, p))
        .max()
        .unwrap_or(0)
}

fn decode(n: usize, code: u64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if code & (1u64 << pair_bit(n, u, v)) != 0 {
                g.add_edge(u, v).expect("decoded pairs are distinct");
            }
        }
    }
    g
}

fn graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(Error::Capacity {
            what: "vertex count for graph enumeration",
            actual: n,
            limit: MAX_ENUMERATED_ORDER,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::new(0)]);
    }
    let smaller = graphs_up_to_iso(n - 1)?;
    let perms = permutations(n);
    let mut codes = BTreeSet::new();
    for g in &smaller {
        let base: Vec<(usize, usize)> = g.edges().collect();
        for nbrs in 0u32..(1 << (n - 1)) {
            let mut edges = base.clone();
            edges.extend((0..n - 1).filter(|i| nbrs & (1 << i) != 0).map(|i| (i, n - 1)));
            codes.insert((edges.len(), std::cmp::Reverse(canonical_code(n, &edges, &perms))));
        }
    }
    Ok(codes.into_iter().map(|(_, c)| decode(n, c.0)).collect())
}

/// Every graph on `n` vertices up to isomorphism, ordered by edge count.
pub fn all_graphs(n: usize) -> Result<Vec<NamedGraph>> {
    Ok(graphs_up_to_iso(n)?
        .into_iter()
        .enumerate()
        .map(|(i, graph)| NamedGraph {
            name: format!("G{n}.{i}"),
            graph,
        })
        .collect())
}

/// Every connected graph on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<NamedGraph>> {
    Ok(graphs_up_to_iso(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .enumerate()
        .map(|(i, graph)| NamedGraph {
            name: format!("Conn{n}.{i}"),
            graph,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // graphs and connected graphs on n unlabeled vertices
        let all = [1, 1, 2, 4, 11, 34, 156];
        let conn = [0, 1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(all_graphs(n).unwrap().len(), all[n], "all n={n}");
            assert_eq!(connected_graphs(n).unwrap().len(), conn[n], "connected n={n}");
        }
        assert!(matches!(all_graphs(7), Err(Error::Capacity { .. })));
    }

    #[test]
    fn named_families() {
        assert_eq!(cycle(5).graph.edge_count(), 5);
        assert!(cycle(4).graph.is_cycle());
        assert_eq!(complete(4).graph.edge_count(), 6);
        assert!(complete_bipartite(2, 3).graph.is_complete_bipartite());
        assert_eq!(star(2).graph, path(3).graph.permuted(&[1, 0, 2]));
        assert_eq!(Family::CompleteBipartite.members(5).unwrap().len(), 2);
        assert!(Family::Cycles.members(2).unwrap().is_empty());
        assert_eq!("bipartite".parse::<Family>().unwrap(), Family::CompleteBipartite);
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(connected_graphs(5).unwrap(), connected_graphs(5).unwrap());
    }
}
