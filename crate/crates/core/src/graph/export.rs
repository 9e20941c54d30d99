//! Graph serialisation.
//!
//! JSON form: `{"vertices": ["2", "3", "4"], "edges": [[0, 1], [1, 2]]}` with
//! vertices in index order and edges as sorted index pairs.

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> GraphJson {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

pub fn export_json(g: &SimpleGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graphs always serialize")
}

pub fn parse_json(text: &str) -> Result<SimpleGraph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut g = SimpleGraph::with_labels(j.vertices)?;
    for [u, v] in j.edges {
        if u >= g.order() || v >= g.order() || u == v {
            return Err(Error::Parse(format!("bad edge [{u}, {v}]")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT; nodes are named by index and labelled with element names.
pub fn export_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        out.push_str(&format!("  {v} [label={}];\n", quote(g.label(v))));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = SimpleGraph::complete_bipartite(3, 3);
        let text = export_json(&g);
        assert_eq!(parse_json(&text).unwrap(), g);
        assert_eq!(GraphJson::from(&g).edges.len(), 9);
        assert!(parse_json(r#"{"vertices":["a"],"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn dot() {
        let p = export_dot(&SimpleGraph::path(3));
        assert_eq!(p.matches("--").count(), 2);
        assert_eq!(p.matches("label=").count(), 3);
        assert_eq!(export_dot(&SimpleGraph::new(0).unwrap()), "graph G {\n}\n");
    }
}
