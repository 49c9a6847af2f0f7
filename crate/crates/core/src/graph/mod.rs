//! Simple graphs and digraphs with stable, ordered vertex labels.

mod dimacs;
pub mod generators;
mod line;

pub use dimacs::{parse_digraph, parse_graph, serialize_digraph, serialize_graph, ParseWarning, Parsed};
pub use line::{line_digraph, underlying_graph, ArcVertex, LineDigraph};

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Labels `"1"..="n"`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A simple undirected graph. Vertices are `0..n` with one label each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph labelled `1..=n`, matching DIMACS vertex ids.
    pub fn empty(n: usize) -> Graph {
        Graph::with_labels(default_labels(n))
            .expect("decimal labels are distinct")
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Graph> {
        let mut seen = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![BitSet::new(n); n],
            edge_count: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Same vertices; `{u, v}` is an edge iff it is a non-edge here.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph {
            labels: self.labels.clone(),
            adj: vec![BitSet::new(n); n],
            edge_count: 0,
        };
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                    g.edge_count += 1;
                }
            }
        }
        g
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::with_labels(labels).expect("distinct labels");
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }

    /// Same edges, vertex `v` renamed to `perm[v]`; labels follow their vertex.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let mut g = Graph::with_labels(labels).expect("permutation of distinct labels");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("in range");
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A simple digraph without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    out: Vec<BitSet>,
    arc_count: usize,
}

impl Digraph {
    pub fn with_labels(labels: Vec<String>) -> Result<Digraph> {
        let g = Graph::with_labels(labels)?;
        let n = g.n();
        Ok(Digraph {
            labels: g.labels,
            out: vec![BitSet::new(n); n],
            arc_count: 0,
        })
    }

    pub fn empty(n: usize) -> Digraph {
        Digraph::with_labels(default_labels(n)).expect("distinct labels")
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("arc ({u},{v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.out[u].contains(v) {
            return Ok(false);
        }
        self.out[u].insert(v);
        self.arc_count += 1;
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.out[u].iter().map(move |v| (u, v)))
            .collect()
    }
}
