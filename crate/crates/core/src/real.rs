//! Floating-point subspaces of R^n: the rounding colouring of S(R,n), the
//! sign-vector colouring of O(R,n), and a seeded generator of adjacent
//! pairs in S(R,n).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub use crate::graph::generators::double_shift as double_shift_graph;

/// Tolerance for orthonormality and for treating a coordinate as zero.
pub const TOL: f64 = 1e-9;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A subspace of R^n given by an orthonormal basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RealSubspace {
    n: usize,
    basis: Vec<Vec<f64>>,
}

impl RealSubspace {
    /// Checks that `basis` is orthonormal within [`TOL`].
    pub fn new(n: usize, basis: Vec<Vec<f64>>) -> Result<RealSubspace> {
        if basis.len() > n || basis.iter().any(|b| b.len() != n) {
            return Err(Error::InvalidInput(format!("basis does not fit in R^{n}")));
        }
        for (i, a) in basis.iter().enumerate() {
            if (dot(a, a) - 1.0).abs() > TOL {
                return Err(Error::InvalidInput(format!("basis vector {i} is not a unit vector")));
            }
            for (j, b) in basis.iter().enumerate().skip(i + 1) {
                if dot(a, b).abs() > TOL {
                    return Err(Error::InvalidInput(format!("basis vectors {i} and {j} are not orthogonal")));
                }
            }
        }
        Ok(RealSubspace { n, basis })
    }

    /// Gram–Schmidt over `vectors` in order, dropping dependent ones.
    pub fn span(n: usize, vectors: &[Vec<f64>]) -> Result<RealSubspace> {
        let mut basis: Vec<Vec<f64>> = Vec::new();
        for v in vectors {
            if let Some(u) = orthonormalize_against(v, &basis) {
                basis.push(u);
            }
        }
        RealSubspace::new(n, basis)
    }

    pub fn zero(n: usize) -> RealSubspace {
        RealSubspace { n, basis: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    /// Orthogonal projection onto the subspace.
    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for b in &self.basis {
            let c = dot(b, v);
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    pub fn contains(&self, v: &[f64]) -> bool {
        let p = self.project(v);
        p.iter().zip(v).all(|(a, b)| (a - b).abs() <= 1e3 * TOL)
    }

    pub fn is_orthogonal_to(&self, v: &[f64]) -> bool {
        self.basis.iter().all(|b| dot(b, v).abs() <= 1e3 * TOL)
    }
}

/// Unit vector along the part of `v` orthogonal to the orthonormal `basis`,
/// or `None` when that part is negligible.
fn orthonormalize_against(v: &[f64], basis: &[Vec<f64>]) -> Option<Vec<f64>> {
    let mut w = v.to_vec();
    // two passes keep the result orthogonal to working precision
    for _ in 0..2 {
        for b in basis {
            let c = dot(&w, b);
            for (x, y) in w.iter_mut().zip(b) {
                *x -= c * y;
            }
        }
    }
    let norm = dot(&w, &w).sqrt();
    if norm < 1e-6 {
        return None;
    }
    Some(w.into_iter().map(|x| x / norm).collect())
}

/// An `n x n` matrix of integer multiples of `1/n`, stored as numerators in
/// row-major order. Column `j` is the rounded `j`-th basis vector; columns
/// past the dimension are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundedColor {
    n: usize,
    numerators: Vec<i32>,
}

impl RoundedColor {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(row, col)` as a numerator over `n`.
    pub fn numerator(&self, row: usize, col: usize) -> i32 {
        self.numerators[row * self.n + col]
    }

    pub fn numerators(&self) -> &[i32] {
        &self.numerators
    }

    pub fn value(&self, row: usize, col: usize) -> f64 {
        f64::from(self.numerator(row, col)) / self.n as f64
    }
}

/// Nearest multiple of `1/n`; exact ties go to the smaller multiple.
fn round_to_grid(x: f64, n: usize) -> i32 {
    (x * n as f64 - 0.5).ceil() as i32
}

/// Rounds each basis entry to the nearest multiple of `1/n`.
pub fn subspace_color(u: &RealSubspace) -> RoundedColor {
    let n = u.n;
    let mut numerators = vec![0; n * n];
    for (col, b) in u.basis.iter().enumerate() {
        for (row, &x) in b.iter().enumerate() {
            numerators[row * n + col] = round_to_grid(x, n);
        }
    }
    RoundedColor { n, numerators }
}

/// Largest `|rounded - original|` over all entries of the basis matrix.
pub fn rounding_error(u: &RealSubspace, c: &RoundedColor) -> f64 {
    let mut worst: f64 = 0.0;
    for (col, b) in u.basis.iter().enumerate() {
        for (row, &x) in b.iter().enumerate() {
            worst = worst.max((c.value(row, col) - x).abs());
        }
    }
    worst
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

/// Componentwise sign; `|x| <= TOL` counts as zero.
pub fn sign_coloring(v: &[f64]) -> Vec<Sign> {
    v.iter()
        .map(|&x| {
            if x > TOL {
                Sign::Pos
            } else if x < -TOL {
                Sign::Neg
            } else {
                Sign::Zero
            }
        })
        .collect()
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "-",
            Sign::Zero => "0",
            Sign::Pos => "+",
        })
    }
}

fn gaussian(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.sample(StandardNormal)).collect()
}

/// A pair `(U, V)` adjacent in S(R,n), deterministic per seed.
///
/// Draws orthonormal `u, v`, then grows `U` from `u` inside `v^⊥` and `V`
/// from `v` inside `u^⊥` by a random number of extra Gaussian directions,
/// so that `u in U ∩ V^⊥` and `v in V ∩ U^⊥`. Returns the witnesses too.
pub fn random_adjacent_s_pair_with_witnesses(n: usize, seed: u64) -> Result<(RealSubspace, RealSubspace, Vec<f64>, Vec<f64>)> {
    if n < 2 {
        return Err(Error::InvalidInput("adjacent pairs need n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (u, v) = loop {
        let a = gaussian(&mut rng, n);
        let Some(u) = orthonormalize_against(&a, &[]) else { continue };
        let b = gaussian(&mut rng, n);
        if let Some(v) = orthonormalize_against(&b, std::slice::from_ref(&u)) {
            break (u, v);
        }
    };
    let extra_u = rng.random_range(0..=n - 2);
    let extra_v = rng.random_range(0..=n - 2);
    let grow = |rng: &mut ChaCha8Rng, first: &Vec<f64>, avoid: &Vec<f64>, extra: usize| {
        // the avoided vector sits in front so every new direction is orthogonal to it
        let mut frame = vec![avoid.clone(), first.clone()];
        while frame.len() < extra + 2 {
            let g = gaussian(rng, n);
            if let Some(w) = orthonormalize_against(&g, &frame) {
                frame.push(w);
            }
        }
        frame.split_off(1)
    };
    let ub = grow(&mut rng, &u, &v, extra_u);
    let vb = grow(&mut rng, &v, &u, extra_v);
    Ok((RealSubspace::new(n, ub)?, RealSubspace::new(n, vb)?, u, v))
}

pub fn random_adjacent_s_pair(n: usize, seed: u64) -> Result<(RealSubspace, RealSubspace)> {
    random_adjacent_s_pair_with_witnesses(n, seed).map(|(a, b, _, _)| (a, b))
}
