use std::collections::HashMap;

use super::{Digraph, Graph};

/// A vertex of the line digraph: the arc `tail -> head` of the source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcVertex {
    pub tail: usize,
    pub head: usize,
}

/// The line digraph of a graph together with the provenance of its vertices.
///
/// Vertex `i` of `digraph` is the arc `arcs[i]` of the source graph; arcs are
/// sorted by `(tail, head)` and labelled `"tail>head"` from source labels.
#[derive(Clone, Debug)]
pub struct LineDigraph {
    pub digraph: Digraph,
    pub arcs: Vec<ArcVertex>,
    source_n: usize,
    index: HashMap<ArcVertex, usize>,
}

impl LineDigraph {
    pub fn index_of(&self, tail: usize, head: usize) -> Option<usize> {
        self.index.get(&ArcVertex { tail, head }).copied()
    }

    /// H-vertices `(x, y)` whose head is `y`, by increasing tail.
    pub fn in_arcs(&self, y: usize) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&i| self.arcs[i].head == y).collect()
    }

    /// H-vertices `(y, z)` whose tail is `y`, by increasing head.
    pub fn out_arcs(&self, y: usize) -> Vec<usize> {
        (0..self.arcs.len()).filter(|&i| self.arcs[i].tail == y).collect()
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    /// The graph H obtained by ignoring arc directions.
    pub fn underlying(&self) -> Graph {
        underlying_graph(&self.digraph)
    }
}

/// Line digraph of `g`, each edge replaced by two opposite arcs.
///
/// Arc `(x,y) -> (z,w)` iff `y == z`; this includes `(x,y) -> (y,x)`.
pub fn line_digraph(g: &Graph) -> LineDigraph {
    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    for tail in 0..g.n() {
        for head in g.neighbors(tail) {
            arcs.push(ArcVertex { tail, head });
        }
    }
    let labels = arcs
        .iter()
        .map(|a| format!("{}>{}", g.label(a.tail), g.label(a.head)))
        .collect();
    let index: HashMap<ArcVertex, usize> = arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    // Distinct source labels give distinct "tail>head" labels unless a label
    // itself contains '>'; fall back to indices then.
    let mut digraph = Digraph::with_labels(labels).unwrap_or_else(|_| {
        Digraph::with_labels(arcs.iter().map(|a| format!("{}>{}", a.tail, a.head)).collect())
            .expect("index labels are distinct")
    });
    for (i, a) in arcs.iter().enumerate() {
        for head in g.neighbors(a.head) {
            let j = index[&ArcVertex { tail: a.head, head }];
            digraph.add_arc(i, j).expect("distinct arc vertices");
        }
    }
    LineDigraph {
        digraph,
        arcs,
        source_n: g.n(),
        index,
    }
}

/// `{u, v}` is an edge iff `(u, v)` or `(v, u)` is an arc.
pub fn underlying_graph(d: &Digraph) -> Graph {
    let mut g = Graph::with_labels(d.labels().to_vec()).expect("digraph labels are distinct");
    for (u, v) in d.arcs() {
        g.add_edge(u, v).expect("no loops in digraph");
    }
    g
}
