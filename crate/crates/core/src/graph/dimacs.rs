//! DIMACS edge/arc format.
//!
//! ```text
//! c free-form comment
//! p edge <n> <m>
//! c label <i> <text>
//! e <u> <v>
//! ```
//!
//! Vertex ids are 1-indexed. `c label` lines are an extension that carries
//! vertex labels through a round trip; they are only written when labels
//! differ from the ids. Digraphs use `p arc` and `a <u> <v>` lines.

use std::fmt::Write;

use super::{default_labels, Digraph, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseWarning {
    /// A repeated edge or arc; the copy was dropped.
    Duplicate { line: usize, u: usize, v: usize },
    /// The header's edge count disagrees with the number of distinct edges.
    CountMismatch { declared: usize, actual: usize },
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseWarning::Duplicate { line, u, v } => {
                write!(f, "line {line}: duplicate {u} {v} ignored")
            }
            ParseWarning::CountMismatch { declared, actual } => {
                write!(f, "header declares {declared} edges, found {actual}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Parsed<G> {
    pub graph: G,
    pub warnings: Vec<ParseWarning>,
}

struct Raw {
    n: usize,
    declared: usize,
    labels: Vec<Option<String>>,
    pairs: Vec<(usize, usize, usize)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_raw(text: &str, kind: &str, tag: &str) -> Result<Raw> {
    let mut raw: Option<Raw> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().expect("non-empty line");
        match head {
            "c" => {
                if parts.next() == Some("label") {
                    let Some(r) = raw.as_mut() else {
                        continue;
                    };
                    let id: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err(lineno, "label line needs a vertex id"))?;
                    if id == 0 || id > r.n {
                        return Err(err(lineno, format!("label for vertex {id} out of range")));
                    }
                    let text = line
                        .splitn(4, char::is_whitespace)
                        .nth(3)
                        .map(str::trim)
                        .unwrap_or("");
                    if text.is_empty() {
                        return Err(err(lineno, "empty label"));
                    }
                    r.labels[id - 1] = Some(text.to_string());
                }
            }
            "p" => {
                if raw.is_some() {
                    return Err(err(lineno, "second header"));
                }
                let fields: Vec<&str> = parts.collect();
                if fields.len() != 3 || fields[0] != kind {
                    return Err(err(lineno, format!("malformed header, expected `p {kind} <n> <m>`")));
                }
                let n = fields[1].parse().map_err(|_| err(lineno, "bad vertex count"))?;
                let declared = fields[2].parse().map_err(|_| err(lineno, "bad edge count"))?;
                raw = Some(Raw {
                    n,
                    declared,
                    labels: vec![None; n],
                    pairs: Vec::new(),
                });
            }
            t if t == tag => {
                let r = raw.as_mut().ok_or_else(|| err(lineno, "edge before header"))?;
                let ends: Vec<usize> = parts
                    .map(|s| s.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err(lineno, "bad vertex id"))?;
                if ends.len() != 2 {
                    return Err(err(lineno, format!("expected `{tag} <u> <v>`")));
                }
                let (u, v) = (ends[0], ends[1]);
                if u == 0 || v == 0 || u > r.n || v > r.n {
                    return Err(err(lineno, format!("vertex out of range 1..={}", r.n)));
                }
                if u == v {
                    return Err(err(lineno, format!("loop at vertex {u}")));
                }
                r.pairs.push((lineno, u - 1, v - 1));
            }
            other => return Err(err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    raw.ok_or_else(|| err(0, "missing header"))
}

fn resolve_labels(raw: &Raw) -> Vec<String> {
    let defaults = default_labels(raw.n);
    raw.labels
        .iter()
        .zip(defaults)
        .map(|(l, d)| l.clone().unwrap_or(d))
        .collect()
}

/// Parses an undirected DIMACS graph.
pub fn parse_graph(text: &str) -> Result<Parsed<Graph>> {
    let raw = parse_raw(text, "edge", "e")?;
    let mut graph = Graph::with_labels(resolve_labels(&raw))?;
    let mut warnings = Vec::new();
    for &(line, u, v) in &raw.pairs {
        if !graph.add_edge(u, v)? {
            warnings.push(ParseWarning::Duplicate { line, u: u + 1, v: v + 1 });
        }
    }
    if graph.edge_count() != raw.declared {
        warnings.push(ParseWarning::CountMismatch {
            declared: raw.declared,
            actual: graph.edge_count(),
        });
    }
    Ok(Parsed { graph, warnings })
}

pub fn parse_digraph(text: &str) -> Result<Parsed<Digraph>> {
    let raw = parse_raw(text, "arc", "a")?;
    let mut graph = Digraph::with_labels(resolve_labels(&raw))?;
    let mut warnings = Vec::new();
    for &(line, u, v) in &raw.pairs {
        if !graph.add_arc(u, v)? {
            warnings.push(ParseWarning::Duplicate { line, u: u + 1, v: v + 1 });
        }
    }
    if graph.arc_count() != raw.declared {
        warnings.push(ParseWarning::CountMismatch {
            declared: raw.declared,
            actual: graph.arc_count(),
        });
    }
    Ok(Parsed { graph, warnings })
}

fn write_labels(out: &mut String, labels: &[String]) {
    if labels != default_labels(labels.len()).as_slice() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(out, "c label {} {}", i + 1, l).unwrap();
        }
    }
}

/// Canonical DIMACS text: header, optional label lines, sorted `e u v` with `u < v`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    write_labels(&mut out, g.labels());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "p arc {} {}", d.n(), d.arc_count()).unwrap();
    write_labels(&mut out, d.labels());
    for (u, v) in d.arcs() {
        writeln!(out, "a {} {}", u + 1, v + 1).unwrap();
    }
    out
}
