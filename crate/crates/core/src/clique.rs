//! Exact maximum clique by branch and bound with a greedy colouring bound.

use crate::bitset::BitSet;
use crate::budget::{Budget, SearchLimits};
use crate::error::Result;
use crate::graph::Graph;

/// Clique number and a maximum clique (sorted). Among maximum cliques the
/// first one reached in the fixed branching order is returned.
pub fn clique_number(g: &Graph, limits: &SearchLimits) -> Result<(usize, Vec<usize>)> {
    let mut budget = limits.start();
    let mut best = Vec::new();
    let mut cur = Vec::new();
    let all = BitSet::full(g.n());
    expand(g, &mut cur, all, &mut best, &mut budget)?;
    best.sort_unstable();
    Ok((best.len(), best))
}

/// Greedy colour classes over `cand`; returns vertices with their colour
/// bound in nondecreasing order.
fn color_order(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut uncolored = cand.clone();
    let mut out = Vec::with_capacity(cand.count());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(g.neighbor_set(v));
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

fn expand(
    g: &Graph,
    cur: &mut Vec<usize>,
    mut cand: BitSet,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let order = color_order(g, &cand);
    for &(v, bound) in order.iter().rev() {
        if cur.len() + bound <= best.len() {
            return Ok(());
        }
        cur.push(v);
        let mut next = cand.clone();
        next.intersect_with(g.neighbor_set(v));
        if next.is_empty() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
        } else {
            expand(g, cur, next, best, budget)?;
        }
        cur.pop();
        cand.remove(v);
    }
    Ok(())
}

/// Whether `vertices` are pairwise adjacent in `g`.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// A maximal clique grown greedily from each vertex; the largest is kept.
pub(crate) fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for s in 0..g.n() {
        let mut clique = vec![s];
        let mut cand = g.neighbor_set(s).clone();
        while let Some(v) = cand
            .iter()
            .max_by_key(|&v| (cand.intersection_count(g.neighbor_set(v)), usize::MAX - v))
        {
            clique.push(v);
            cand.intersect_with(g.neighbor_set(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}
