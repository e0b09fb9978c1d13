//! Finite simple undirected graphs and their set-labelings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sets::{GroundSet, LabelSet};

pub type Edge = (usize, usize);

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Rejects loops, parallel edges and unknown endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u},{v}) names a vertex outside 0..{n}")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::InvalidGraph(format!("parallel edge ({u},{v})")));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.degree(v) == 0
    }

    pub fn pendant_count(&self) -> usize {
        (0..self.vertex_count()).filter(|&v| self.is_pendant(v)).count()
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.vertex_count()).filter(|&v| self.is_isolated(v)).count()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Connected and every vertex of degree 2, with at least 3 vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3
            && self.is_connected()
            && (0..self.vertex_count()).all(|v| self.degree(v) == 2)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.edge_count() == n * (n - 1) / 2
    }

    /// Whether the graph is `K_{a,b}` for some `a, b >= 1`.
    pub fn is_complete_bipartite(&self) -> bool {
        if !self.is_connected() || self.vertex_count() < 2 {
            return false;
        }
        let n = self.vertex_count();
        let mut side = vec![usize::MAX; n];
        side[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
        let a = side.iter().filter(|&&s| s == 0).count();
        self.edge_count() == a * (n - a)
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation preserves simplicity");
        }
        g
    }
}

/// A graph together with a partial vertex labeling over a ground set.
///
/// Labels are not required to be distinct here; injectivity is a property the
/// verifier reports on. Every stored label is rebound so that the sum of any
/// two labels is representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    ground: GroundSet,
    labels: Vec<Option<LabelSet>>,
}

impl LabeledGraph {
    pub fn new(graph: Graph, ground: GroundSet) -> Self {
        let n = graph.vertex_count();
        Self {
            graph,
            ground,
            labels: vec![None; n],
        }
    }

    pub fn with_labels(graph: Graph, ground: GroundSet, labels: Vec<LabelSet>) -> Result<Self> {
        if labels.len() != graph.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        let mut g = Self::new(graph, ground);
        for (v, l) in labels.into_iter().enumerate() {
            g.set_label(v, l)?;
        }
        Ok(g)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Rebinds the labeling to another ground set.
    pub fn with_ground(&self, ground: GroundSet) -> Result<Self> {
        let mut g = Self::new(self.graph.clone(), ground);
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                g.set_label(v, l.clone())?;
            }
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: Option<LabelSet>) -> Result<usize> {
        let v = self.graph.add_vertex();
        self.labels.push(None);
        if let Some(l) = label {
            self.set_label(v, l)?;
        }
        Ok(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.graph.add_edge(u, v)
    }

    pub fn set_label(&mut self, v: usize, label: LabelSet) -> Result<()> {
        if v >= self.labels.len() {
            return Err(Error::InvalidGraph(format!("no vertex {v}")));
        }
        let bound = self.ground.bound().max(label.max_member().saturating_mul(2));
        self.labels[v] = Some(label.rebound(bound)?);
        Ok(())
    }

    pub fn label(&self, v: usize) -> Option<&LabelSet> {
        self.labels.get(v).and_then(Option::as_ref)
    }

    pub fn labels(&self) -> &[Option<LabelSet>] {
        &self.labels
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// Labels of all vertices, failing on the first unlabeled one.
    pub fn complete_labels(&self) -> Result<Vec<&LabelSet>> {
        self.labels
            .iter()
            .enumerate()
            .map(|(v, l)| l.as_ref().ok_or(Error::IncompleteLabeling(v)))
            .collect()
    }

    /// The induced edge label `f(u) + f(v)`.
    pub fn induced_edge_label(&self, (u, v): Edge) -> Result<LabelSet> {
        if !self.graph.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("({u},{v}) is not an edge")));
        }
        let a = self.label(u).ok_or(Error::IncompleteLabeling(u))?;
        let b = self.label(v).ok_or(Error::IncompleteLabeling(v))?;
        a.sum(b)
    }

    /// Vertex labels and induced edge labels with provenance.
    pub fn f_star_image(&self) -> Result<FStarImage> {
        let labels = self.complete_labels()?;
        let vertex_part: Vec<(usize, LabelSet)> =
            labels.iter().enumerate().map(|(v, l)| (v, (*l).clone())).collect();
        let edge_part = self
            .graph
            .edges()
            .map(|(u, v)| Ok(((u, v), labels[u].sum(labels[v])?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FStarImage {
            vertex_part,
            edge_part,
        })
    }
}

/// The image of `f*`, the joint extension of the vertex labeling and the
/// induced edge labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FStarImage {
    pub vertex_part: Vec<(usize, LabelSet)>,
    pub edge_part: Vec<(Edge, LabelSet)>,
}

impl FStarImage {
    /// The combined multiset: vertex labels followed by edge labels.
    pub fn combined(&self) -> Vec<&LabelSet> {
        self.vertex_part
            .iter()
            .map(|(_, l)| l)
            .chain(self.edge_part.iter().map(|(_, l)| l))
            .collect()
    }
}
