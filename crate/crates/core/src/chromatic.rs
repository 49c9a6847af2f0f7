//! Exact chromatic number, colouring checks, and the colouring transfers
//! between a graph and the underlying graph of its line digraph.

use num_bigint::BigUint;

use crate::budget::{Budget, SearchLimits};
use crate::clique::greedy_clique;
use crate::error::{guard, Error, Result};
use crate::gf::combinations;
use crate::graph::{line_digraph, Graph};

/// A vertex colouring with colours in `[0, palette)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Coloring> {
        if let Some(&c) = colors.iter().find(|&&c| c >= palette) {
            return Err(Error::InvalidInput(format!("colour {c} outside palette {palette}")));
        }
        Ok(Coloring { colors, palette })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of distinct colours actually used.
    pub fn used(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// Every vertex coloured inside the palette and every edge bichromatic.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    c.colors.len() == g.n()
        && c.colors.iter().all(|&x| x < c.palette)
        && g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v])
}

/// `b(n) = binom(n, floor(n/2))`, exact. `b(0) = 1`.
pub fn b(n: u64) -> BigUint {
    let k = n / 2;
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Least `n >= 0` with `chi <= b(n)`.
pub fn line_chromatic_target(chi: usize) -> usize {
    let chi = BigUint::from(chi);
    (0u64..)
        .find(|&n| chi <= b(n))
        .expect("b is unbounded") as usize
}

#[derive(Clone, Copy, Debug)]
pub struct ChromaticOptions {
    pub max_vertices: usize,
    pub limits: SearchLimits,
}

impl Default for ChromaticOptions {
    fn default() -> Self {
        ChromaticOptions {
            max_vertices: 80,
            limits: SearchLimits::unlimited(),
        }
    }
}

/// An optimal colouring; `chi - 1` colours were ruled out by exhausted search
/// (or by a clique of size `chi`).
#[derive(Clone, Debug)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Coloring,
    pub clique_bound: usize,
    pub nodes: u64,
}

/// Exact `χ(G)`: clique lower bound, DSATUR upper bound, then a DSATUR
/// branch-and-bound decision for each `k` upward from the lower bound.
pub fn chromatic_number(g: &Graph, opts: &ChromaticOptions) -> Result<ChromaticResult> {
    guard("vertices for chromatic search", g.n() as u128, opts.max_vertices as u128)?;
    let mut budget = opts.limits.start();
    if g.n() == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            coloring: Coloring::new(Vec::new(), 0)?,
            clique_bound: 0,
            nodes: 0,
        });
    }
    let lb = greedy_clique(g).len().max(1);
    let upper = dsatur_greedy(g);
    let ub = upper.palette;
    for k in lb..ub {
        if let Some(c) = k_coloring_with_budget(g, k, &mut budget)? {
            return Ok(ChromaticResult {
                chi: k,
                coloring: c,
                clique_bound: lb,
                nodes: budget.nodes(),
            });
        }
    }
    Ok(ChromaticResult {
        chi: ub,
        coloring: upper,
        clique_bound: lb,
        nodes: budget.nodes(),
    })
}

/// A proper `k`-colouring if one exists.
pub fn k_coloring(g: &Graph, k: usize, limits: &SearchLimits) -> Result<Option<Coloring>> {
    let mut budget = limits.start();
    k_coloring_with_budget(g, k, &mut budget)
}

fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut state = Dsatur::new(g, n.max(1));
    for _ in 0..n {
        let v = state.select().expect("uncoloured vertex");
        let c = (0..n).find(|&c| state.counts[v][c] == 0).expect("free colour");
        state.set(v, c);
    }
    let palette = state.colors.iter().map(|c| c.unwrap() + 1).max().unwrap_or(0);
    Coloring::new(state.colors.iter().map(|c| c.unwrap()).collect(), palette).expect("in palette")
}

fn k_coloring_with_budget(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Coloring>> {
    if g.n() == 0 {
        return Ok(Some(Coloring::new(Vec::new(), k)?));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut state = Dsatur::new(g, k);
    if state.search(k, 0, budget)? {
        let colors = state.colors.iter().map(|c| c.unwrap()).collect();
        Ok(Some(Coloring::new(colors, k)?))
    } else {
        Ok(None)
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<Option<usize>>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`.
    counts: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    open_degree: Vec<usize>,
    uncolored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            colors: vec![None; n],
            counts: vec![vec![0; k]; n],
            saturation: vec![0; n],
            open_degree: (0..n).map(|v| g.degree(v)).collect(),
            uncolored: n,
        }
    }

    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.open_degree[v], usize::MAX - v))
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        self.uncolored -= 1;
        for u in self.g.neighbors(v) {
            self.open_degree[u] -= 1;
            if self.counts[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.counts[u][c] += 1;
        }
    }

    fn unset(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        self.uncolored += 1;
        for u in self.g.neighbors(v) {
            self.open_degree[u] += 1;
            self.counts[u][c] -= 1;
            if self.counts[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// Colours are introduced in order: a vertex may take any used colour
    /// or the next fresh one.
    fn search(&mut self, k: usize, used: usize, budget: &mut Budget) -> Result<bool> {
        if self.uncolored == 0 {
            return Ok(true);
        }
        budget.tick()?;
        let v = self.select().expect("uncoloured vertex");
        if self.saturation[v] >= k {
            return Ok(false);
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if self.counts[v][c] != 0 {
                continue;
            }
            self.set(v, c);
            let dead = self
                .g
                .neighbors(v)
                .any(|u| self.colors[u].is_none() && self.saturation[u] >= k);
            if !dead && self.search(k, used.max(c + 1), budget)? {
                return Ok(true);
            }
            self.unset(v, c);
        }
        Ok(false)
    }
}

/// Proper `n`-colouring of H from a proper colouring of G with palette at
/// most `b(n)`.
///
/// Colour `i` of G is sent to the `i`-th `floor(n/2)`-subset `A_i` of `[n]`
/// in lexicographic order; the H-vertex `(x, y)` gets `min(A_c(x) \ A_c(y))`.
/// Adjacent H-vertices `(x,y), (y,z)` then get colours inside `[n] \ A_c(y)`
/// and inside `A_c(y)` respectively.
pub fn lift_coloring_to_line(g: &Graph, c: &Coloring, n: usize) -> Result<Coloring> {
    if !verify_coloring(g, c) {
        return Err(Error::InvalidInput("input colouring is not proper".into()));
    }
    if BigUint::from(c.palette()) > b(n as u64) {
        return Err(Error::InvalidInput(format!(
            "palette {} exceeds b({n}) = {}",
            c.palette(),
            b(n as u64)
        )));
    }
    let subsets = combinations(n, n / 2);
    let line = line_digraph(g);
    let colors = line
        .arcs
        .iter()
        .map(|a| {
            let (sx, sy) = (&subsets[c.color(a.tail)], &subsets[c.color(a.head)]);
            *sx.iter().find(|i| !sy.contains(i)).expect("distinct equal-size subsets")
        })
        .collect();
    Coloring::new(colors, n)
}

/// Proper colouring of G from a proper colouring `phi` of H: vertex `y` gets
/// the set `{phi(x, y)}` of colours on its in-arcs, encoded as a bitmask,
/// with palette `2^n` for `n = phi.palette()`.
pub fn set_coloring_from_line(g: &Graph, phi: &Coloring) -> Result<Coloring> {
    let line = line_digraph(g);
    let h = line.underlying();
    if !verify_coloring(&h, phi) {
        return Err(Error::InvalidInput("colouring of H is not proper".into()));
    }
    let n = phi.palette();
    if n >= usize::BITS as usize {
        return Err(Error::GuardExceeded {
            what: "palette bits",
            value: n as u128,
            limit: usize::BITS as u128 - 1,
        });
    }
    let mut sets = vec![0usize; g.n()];
    for (i, a) in line.arcs.iter().enumerate() {
        sets[a.head] |= 1 << phi.color(i);
    }
    Coloring::new(sets, 1 << n)
}
