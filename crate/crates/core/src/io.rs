//! JSON graph files and DOT export.
//!
//! Graph files look like
//!
//! ```json
//! {"ground":[0,1],"vertices":[{"id":0,"label":[0]},{"id":1,"label":[1]}],"edges":[[0,1]]}
//! ```
//!
//! `ground` and `label` may be omitted for unlabeled graphs handed to the
//! search engine.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph};
use crate::sets::{GroundSet, LabelSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexRecord {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<u32>>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_labeled(g: &LabeledGraph) -> Self {
        Self {
            ground: Some(g.ground().values().to_vec()),
            vertices: g
                .labels()
                .iter()
                .enumerate()
                .map(|(id, l)| VertexRecord {
                    id,
                    label: l.as_ref().map(LabelSet::to_vec),
                })
                .collect(),
            edges: g.graph().edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self {
            ground: None,
            vertices: (0..g.vertex_count()).map(|id| VertexRecord { id, label: None }).collect(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// The topology; vertex ids must be exactly `0..n` in some order.
    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        for v in &self.vertices {
            if v.id >= n || std::mem::replace(&mut seen[v.id], true) {
                return Err(Error::InvalidGraph(format!(
                    "vertex ids must be 0..{n} without repeats, found {}",
                    v.id
                )));
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Labeled graph over `ground`, or over the file's own ground set when
    /// `ground` is `None`.
    pub fn to_labeled(&self, ground: Option<GroundSet>) -> Result<LabeledGraph> {
        let ground = match (ground, &self.ground) {
            (Some(x), _) => x,
            (None, Some(values)) => GroundSet::new(values.clone())?,
            (None, None) => return Err(Error::InvalidGraph("graph file has no ground set".into())),
        };
        let mut g = LabeledGraph::new(self.to_graph()?, ground);
        for v in &self.vertices {
            if let Some(members) = &v.label {
                g.set_label(v.id, LabelSet::new(members.iter().copied())?)?;
            }
        }
        Ok(g)
    }
}

impl Serialize for LabeledGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphFile::from_labeled(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabeledGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        GraphFile::deserialize(deserializer)?
            .to_labeled(None)
            .map_err(serde::de::Error::custom)
    }
}

pub fn labeled_graph_to_json(g: &LabeledGraph) -> String {
    serde_json::to_string(&GraphFile::from_labeled(g)).expect("graph files always serialize")
}

pub fn labeled_graph_from_json(text: &str, ground: Option<GroundSet>) -> Result<LabeledGraph> {
    serde_json::from_str::<GraphFile>(text)?.to_labeled(ground)
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphFile>(text)?.to_graph()
}

/// Deterministic DOT rendering: vertex text is the vertex label, edge text the
/// induced sum set.
pub fn export_dot(g: &LabeledGraph) -> Result<String> {
    let labels = g.complete_labels()?;
    let mut out = String::from("graph G {\n");
    for (v, l) in labels.iter().enumerate() {
        writeln!(out, "  {v} [label=\"{l}\"];").expect("writing to a String");
    }
    for (u, v) in g.graph().edges() {
        let l = g.induced_edge_label((u, v))?;
        writeln!(out, "  {u} -- {v} [label=\"{l}\"];").expect("writing to a String");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = r#"{"ground":[0,1],"vertices":[{"id":0,"label":[0]},{"id":1,"label":[1]},{"id":2,"label":[0,1]}],"edges":[[0,1],[0,2]]}"#;

    #[test]
    fn parse_and_write_back() {
        let g = labeled_graph_from_json(P3, None).unwrap();
        assert_eq!(g.graph().edge_count(), 2);
        assert_eq!(labeled_graph_to_json(&g), P3);
    }

    #[test]
    fn vertex_order_in_file_does_not_matter() {
        let shuffled = r#"{"ground":[0,1],"vertices":[{"id":2,"label":[0,1]},{"id":0,"label":[0]},{"id":1,"label":[1]}],"edges":[[0,2],[1,0]]}"#;
        let g = labeled_graph_from_json(shuffled, None).unwrap();
        assert_eq!(labeled_graph_to_json(&g), P3);
    }

    #[test]
    fn malformed_files_are_rejected() {
        let bad_ids = r#"{"vertices":[{"id":0},{"id":0}],"edges":[]}"#;
        assert!(graph_from_json(bad_ids).is_err());
        let loop_edge = r#"{"vertices":[{"id":0}],"edges":[[0,0]]}"#;
        assert!(graph_from_json(loop_edge).is_err());
        let unknown = r#"{"vertices":[],"edges":[],"colour":1}"#;
        assert!(graph_from_json(unknown).is_err());
        let empty_label = r#"{"ground":[0],"vertices":[{"id":0,"label":[]}],"edges":[]}"#;
        assert!(labeled_graph_from_json(empty_label, None).is_err());
        let no_ground = r#"{"vertices":[{"id":0,"label":[0]}],"edges":[]}"#;
        assert!(labeled_graph_from_json(no_ground, None).is_err());
    }

    #[test]
    fn dot_output() {
        let g = labeled_graph_from_json(P3, None).unwrap();
        let dot = export_dot(&g).unwrap();
        assert_eq!(
            dot,
            "graph G {\n  0 [label=\"{0}\"];\n  1 [label=\"{1}\"];\n  2 [label=\"{0,1}\"];\n  0 -- 1 [label=\"{1}\"];\n  0 -- 2 [label=\"{0,1}\"];\n}\n"
        );
        assert_eq!(dot, export_dot(&g).unwrap());

        let single = labeled_graph_from_json(r#"{"ground":[0],"vertices":[{"id":0,"label":[0]}],"edges":[]}"#, None)
            .unwrap();
        assert_eq!(export_dot(&single).unwrap(), "graph G {\n  0 [label=\"{0}\"];\n}\n");

        let unlabeled = labeled_graph_from_json(r#"{"ground":[0],"vertices":[{"id":0}],"edges":[]}"#, None).unwrap();
        assert!(matches!(export_dot(&unlabeled), Err(Error::IncompleteLabeling(0))));
    }
}
