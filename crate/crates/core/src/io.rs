//! Text formats: labeled edge lists, DIMACS `p edge`, DOT and a small JSON
//! graph document.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn is_comment(line: &str) -> bool {
    line.is_empty() || line.starts_with('#') || line.starts_with('%')
}

/// One edge per line, two whitespace-separated labels. Lines starting with
/// `#` or `%` and blank lines are skipped. Vertex ids follow first appearance.
pub fn parse_edge_list<'a>(text: &'a str) -> Result<Graph> {
    let mut ids: HashMap<&'a str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if is_comment(line) {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("self-loop on {}", tokens[0]),
            });
        }
        let mut id = |t: &'a str| -> usize {
            *ids.entry(t).or_insert_with(|| {
                labels.push(t.to_string());
                labels.len() - 1
            })
        };
        let u = id(tokens[0]);
        let v = id(tokens[1]);
        edges.push((u, v));
    }
    Graph::from_edges(labels.len(), edges)?.with_labels(labels)
}

/// DIMACS-style input: `c` comment lines, one `p edge <n> <m>` line, then
/// `e <u> <v>` lines with 1-based ids. Vertices are labeled `1..=n`.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |message: String| Error::Parse { line: i + 1, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if n.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if tokens.len() < 3 {
                    return Err(err("expected `p edge <n> <m>`".into()));
                }
                let count = tokens[2]
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex count {:?}", tokens[2])))?;
                n = Some(count);
            }
            "e" => {
                let count = n.ok_or_else(|| err("edge before problem line".into()))?;
                if tokens.len() != 3 {
                    return Err(err("expected `e <u> <v>`".into()));
                }
                let mut ends = [0usize; 2];
                for (k, t) in tokens[1..].iter().enumerate() {
                    let v: usize = t.parse().map_err(|_| err(format!("bad vertex {t:?}")))?;
                    if v == 0 || v > count {
                        return Err(err(format!("vertex {v} outside 1..={count}")));
                    }
                    ends[k] = v - 1;
                }
                if ends[0] == ends[1] {
                    return Err(err(format!("self-loop on {}", ends[0] + 1)));
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(err(format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing problem line".into(),
    })?;
    Graph::from_edges(n, edges)?.with_labels((1..=n).map(|v| v.to_string()).collect())
}

/// Picks DIMACS when some line is a problem line (`p` plus at least two
/// more tokens), which a valid edge list cannot contain.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let dimacs = text.lines().any(|l| {
        let mut t = l.split_whitespace();
        t.next() == Some("p") && t.count() >= 2
    });
    if dimacs {
        parse_dimacs(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub(crate) fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// JSON form of a graph: vertex count, edge list over ids, optional labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            vertex_count: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl From<Graph> for GraphDoc {
    fn from(g: Graph) -> Self {
        GraphDoc::from(&g)
    }
}

impl TryFrom<GraphDoc> for Graph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Graph> {
        Graph::try_from(&doc)
    }
}

impl TryFrom<&GraphDoc> for Graph {
    type Error = Error;

    fn try_from(doc: &GraphDoc) -> Result<Graph> {
        let g = Graph::from_edges(doc.vertex_count, doc.edges.iter().map(|e| (e[0], e[1])))?;
        match &doc.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }
}
