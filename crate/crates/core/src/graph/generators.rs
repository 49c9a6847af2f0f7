//! Named graph families and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::gf::combinations;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("simple");
        }
    }
    g
}

/// The cycle `1-2-...-n-1`; for `n < 3` this is a path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).expect("simple");
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v).expect("simple");
    }
    g
}

fn set_label(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Kneser graph K(n, k): `k`-subsets of `[n]`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Graph {
    let sets = combinations(n, k);
    let mut g = Graph::with_labels(sets.iter().map(|s| set_label(s)).collect()).expect("distinct");
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().all(|x| !sets[j].contains(x)) {
                g.add_edge(i, j).expect("simple");
            }
        }
    }
    g
}

pub fn petersen() -> Graph {
    kneser(5, 2)
}

/// Double shift graph on the 3-subsets of `[n]`: `{x1<x2<x3}` and `{y1<y2<y3}`
/// are adjacent iff `(x2,x3) = (y1,y2)` or `(x1,x2) = (y2,y3)`.
pub fn double_shift(n: usize) -> Graph {
    let sets = combinations(n, 3);
    let mut g = Graph::with_labels(sets.iter().map(|s| set_label(s)).collect()).expect("distinct");
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (x, y) = (&sets[i], &sets[j]);
            if (x[1] == y[0] && x[2] == y[1]) || (x[0] == y[1] && x[1] == y[2]) {
                g.add_edge(i, j).expect("simple");
            }
        }
    }
    g
}

/// Erdős–Rényi G(n, p), deterministic per seed: pairs `u < v` in
/// lexicographic order, each kept when a uniform draw falls below `p`.
pub fn random(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).expect("simple");
            }
        }
    }
    g
}

/// Resolves names such as `C5`, `K4`, `E3` (edgeless), `P4` (path),
/// `petersen`, `kneser:5:2`, `double-shift:7`, `random:8:0.5:42`.
pub fn by_name(name: &str) -> Result<Graph> {
    let bad = || Error::InvalidInput(format!("unknown graph name `{name}`"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["petersen"] => Ok(petersen()),
        ["kneser", n, k] => Ok(kneser(num(n)?, num(k)?)),
        ["double-shift", n] => Ok(double_shift(num(n)?)),
        ["random", n, p, seed] => {
            let p: f64 = p.parse().map_err(|_| bad())?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad());
            }
            Ok(random(num(n)?, p, seed.parse().map_err(|_| bad())?))
        }
        [single] if single.len() >= 2 => {
            let (kind, rest) = single.split_at(1);
            let n = num(rest)?;
            match kind {
                "C" => Ok(cycle(n)),
                "K" => Ok(complete(n)),
                "E" => Ok(Graph::empty(n)),
                "P" => Ok(path(n)),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}
