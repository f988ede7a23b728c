//! Edge-list, bipartite and arc-model input files.
//!
//! Edge lists hold one `u v` pair per line with arbitrary labels; a line with
//! a single label declares an isolated vertex. `#` starts a comment.
//! Bipartite files add `red: a b c` and `blue: x y` lines.

use std::collections::HashMap;

use sepdp::classes::ArcModel;
use sepdp::reductions::BipartiteGraph;
use sepdp::{Graph, VertexSet};

use crate::error::CliError;

#[derive(Debug, Clone)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabelledGraph {
    pub fn names(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    /// Vertices `0..n` labelled by their index.
    pub fn numbered(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        LabelledGraph { graph, labels }
    }
}

#[derive(Default)]
struct Labels {
    index: HashMap<String, usize>,
    names: Vec<String>,
}

impl Labels {
    fn id(&mut self, label: &str) -> usize {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        self.names.push(label.to_string());
        self.index.insert(label.to_string(), self.names.len() - 1);
        self.names.len() - 1
    }
}

struct Parsed {
    graph: LabelledGraph,
    reds: Option<Vec<usize>>,
    blues: Option<Vec<usize>>,
}

fn parse(text: &str, roles: bool) -> Result<Parsed, CliError> {
    let mut labels = Labels::default();
    let mut edges = Vec::new();
    let mut reds: Option<Vec<usize>> = None;
    let mut blues: Option<Vec<usize>> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| CliError::Input(format!("line {}: {msg}: {raw:?}", lineno + 1));
        if let Some((head, rest)) = line.split_once(':') {
            let slot = match head.trim() {
                "red" if roles => &mut reds,
                "blue" if roles => &mut blues,
                _ => return Err(bad("unexpected header")),
            };
            let ids = rest.split_whitespace().map(|l| labels.id(l));
            slot.get_or_insert_with(Vec::new).extend(ids);
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [v] => {
                labels.id(v);
            }
            [u, v] => {
                if u == v {
                    return Err(bad("self-loop"));
                }
                edges.push((labels.id(u), labels.id(v)));
            }
            _ => return Err(bad("expected `u v` or a single vertex")),
        }
    }
    let graph = Graph::from_edges(labels.names.len(), edges)?;
    Ok(Parsed {
        graph: LabelledGraph {
            graph,
            labels: labels.names,
        },
        reds,
        blues,
    })
}

pub fn parse_edge_list(text: &str) -> Result<LabelledGraph, CliError> {
    Ok(parse(text, false)?.graph)
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, CliError> {
    let parsed = parse(text, true)?;
    let (Some(reds), Some(blues)) = (parsed.reds, parsed.blues) else {
        return Err(CliError::Input(
            "bipartite input needs `red:` and `blue:` lines".into(),
        ));
    };
    BipartiteGraph::new(
        parsed.graph.graph,
        reds.into_iter().collect(),
        blues.into_iter().collect(),
    )
    .map_err(|e| CliError::Input(e.to_string()))
}

pub fn parse_arc_model(text: &str) -> Result<ArcModel, CliError> {
    let model: ArcModel =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("arc model: {e}")))?;
    model
        .validate()
        .map_err(|e| CliError::Input(e.to_string()))?;
    Ok(model)
}

/// Arc-model JSON is recognised by its leading `{`.
pub fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    let mut touched = VertexSet::new();
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
        touched.insert(u);
        touched.insert(v);
    }
    for v in (graph.vertices() - touched).iter() {
        out.push_str(&format!("{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_comments_and_isolated_vertices() {
        let g = parse_edge_list("# path\na b\nb c # tail\n\nd\n").unwrap();
        assert_eq!(g.labels, ["a", "b", "c", "d"]);
        assert_eq!(g.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_edge_list("a b c\n").is_err());
        assert!(parse_edge_list("a a\n").is_err());
        assert!(parse_edge_list("red: a\n").is_err());
    }

    #[test]
    fn bipartite_files() {
        let b = parse_bipartite("red: r1 r2\nblue: b\nr1 b\nr2 b\n").unwrap();
        assert_eq!(b.reds.len(), 2);
        assert_eq!(b.blues.iter().collect::<Vec<_>>(), [2]);
        assert!(parse_bipartite("red: a\nblue: b\na c\n").is_err());
        assert!(parse_bipartite("a b\n").is_err());
        assert!(parse_bipartite("red: a\nblue: b c\nb c\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap().graph, g);
    }

    #[test]
    fn arc_models() {
        let m = parse_arc_model(r#"{"n": 2, "arcs": [[0, 2], [1, 3]]}"#).unwrap();
        assert_eq!(m.arcs, vec![(0, 2), (1, 3)]);
        assert!(parse_arc_model(r#"{"n": 2, "arcs": [[0, 2], [2, 3]]}"#).is_err());
        assert!(looks_like_json("  {\"n\": 0}"));
    }
}
