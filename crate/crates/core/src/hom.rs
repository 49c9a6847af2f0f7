//! Backtracking homomorphism search into an explicit target graph.
//!
//! Variables are source vertices, values are target vertices. Assigning
//! `v -> t` intersects every unassigned neighbour's domain with `N(t)`
//! (forward checking). The next variable is the one with the smallest
//! domain, ties broken by larger degree and then smaller index; values are
//! tried in increasing target index, so the first witness found is fixed.

use crate::bitset::BitSet;
use crate::budget::{Budget, SearchLimits};
use crate::error::{guard, Result};
use crate::graph::Graph;

/// A vertex map given as target indices, one per source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }
}

/// Whether `h` maps every edge of `g` onto an edge of `t`.
pub fn verify_homomorphism(g: &Graph, t: &Graph, h: &Homomorphism) -> bool {
    h.map.len() == g.n()
        && h.map.iter().all(|&x| x < t.n())
        && g.edges().iter().all(|&(u, v)| t.has_edge(h.map[u], h.map[v]))
}

#[derive(Clone, Debug)]
pub struct HomOptions<'a> {
    pub limits: SearchLimits,
    /// Upper bound on `|V(G)| * |V(T)|`.
    pub max_product: u128,
    /// Generators of an automorphism group of the target, as permutations of
    /// its vertex indices. Only used to restrict the first vertex of each
    /// component to one representative per orbit.
    pub symmetry: Option<&'a [Vec<usize>]>,
}

impl Default for HomOptions<'_> {
    fn default() -> Self {
        HomOptions {
            limits: SearchLimits::unlimited(),
            max_product: 20_000_000,
            symmetry: None,
        }
    }
}

/// First homomorphism from `g` to `t` under the canonical search order, or
/// `None` once the search space is exhausted.
pub fn find_homomorphism(g: &Graph, t: &Graph, opts: &HomOptions) -> Result<Option<Homomorphism>> {
    guard(
        "homomorphism search size |V(G)|*|V(T)|",
        g.n() as u128 * t.n() as u128,
        opts.max_product,
    )?;
    let mut budget = opts.limits.start();
    find_with_budget(g, t, opts.symmetry, &mut budget)
}

pub(crate) fn find_with_budget(
    g: &Graph,
    t: &Graph,
    symmetry: Option<&[Vec<usize>]>,
    budget: &mut Budget,
) -> Result<Option<Homomorphism>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Homomorphism { map: Vec::new() }));
    }
    if t.n() == 0 {
        return Ok(None);
    }
    let mut nonisolated = BitSet::new(t.n());
    for x in 0..t.n() {
        if t.degree(x) > 0 {
            nonisolated.insert(x);
        }
    }
    let representatives = symmetry.map(|gens| orbit_representatives(t.n(), gens));

    let mut search = Search {
        g,
        t,
        domains: vec![nonisolated.clone(); n],
        assign: vec![None; n],
        budget,
    };
    for comp in g.components() {
        if comp.len() == 1 {
            search.assign[comp[0]] = Some(0);
            continue;
        }
        if nonisolated.is_empty() {
            return Ok(None);
        }
        let mut root_domain = None;
        if let Some(reps) = &representatives {
            let root = search.select(&comp);
            let mut d = search.domains[root].clone();
            d.intersect_with(reps);
            root_domain = Some((root, d));
        }
        if !search.solve(&comp, comp.len(), root_domain)? {
            return Ok(None);
        }
    }
    let map = search.assign.into_iter().map(|a| a.expect("all assigned")).collect();
    Ok(Some(Homomorphism { map }))
}

/// Smallest member of every orbit of the group generated by `gens`.
fn orbit_representatives(n: usize, gens: &[Vec<usize>]) -> BitSet {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for perm in gens {
        for (x, &y) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut reps = BitSet::new(n);
    for x in 0..n {
        if find(&mut parent, x) == x {
            reps.insert(x);
        }
    }
    reps
}

struct Search<'a, 'b> {
    g: &'a Graph,
    t: &'a Graph,
    domains: Vec<BitSet>,
    assign: Vec<Option<usize>>,
    budget: &'b mut Budget,
}

impl Search<'_, '_> {
    fn select(&self, comp: &[usize]) -> usize {
        let mut best: Option<(usize, usize, usize)> = None;
        for &v in comp {
            if self.assign[v].is_some() {
                continue;
            }
            let key = (self.domains[v].count(), usize::MAX - self.g.degree(v), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.expect("an unassigned vertex").2
    }

    fn solve(
        &mut self,
        comp: &[usize],
        remaining: usize,
        forced: Option<(usize, BitSet)>,
    ) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        self.budget.tick()?;
        let (v, domain) = match forced {
            Some(f) => f,
            None => {
                let v = self.select(comp);
                (v, self.domains[v].clone())
            }
        };
        let open: Vec<usize> = self
            .g
            .neighbors(v)
            .filter(|&u| self.assign[u].is_none())
            .collect();
        for x in domain.iter() {
            let saved: Vec<BitSet> = open.iter().map(|&u| self.domains[u].clone()).collect();
            let mut wiped = false;
            for &u in &open {
                self.domains[u].intersect_with(self.t.neighbor_set(x));
                if self.domains[u].is_empty() {
                    wiped = true;
                    break;
                }
            }
            if !wiped {
                self.assign[v] = Some(x);
                if self.solve(comp, remaining - 1, None)? {
                    return Ok(true);
                }
                self.assign[v] = None;
            }
            for (&u, d) in open.iter().zip(saved) {
                self.domains[u] = d;
            }
        }
        Ok(false)
    }
}
