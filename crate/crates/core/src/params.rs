//! The target graphs O(F,k) and O'(F,k), and exact orthogonality dimension
//! and minrank computed as homomorphism thresholds into them.
//!
//! Searches run over projective representatives: in O every vector is taken
//! with leading coordinate 1, in O' both halves of a pair are. Adjacency and
//! non-isotropy are unchanged by nonzero scaling, so the thresholds are the
//! same as for the full graphs.

use std::collections::HashMap;
use std::fmt;

use crate::budget::{Budget, SearchLimits};
use crate::clique::greedy_clique;
use crate::error::{guard, Error, Result};
use crate::gf::{all_vectors, projective_points, Field, GfMatrix, GfVector};
use crate::graph::Graph;
use crate::hom::find_with_budget;

/// Limit on the number of coordinate vectors enumerated while building a
/// target graph (`q^k` for O, `q^(2k)` for O').
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TargetGuard {
    pub max_enumerated: u128,
}

impl Default for TargetGuard {
    fn default() -> Self {
        TargetGuard { max_enumerated: 1 << 16 }
    }
}

/// O(F,k) or a projective slice of it, with the vector behind each vertex.
#[derive(Clone, Debug)]
pub struct VectorGraph {
    pub field: Field,
    pub k: usize,
    pub graph: Graph,
    pub vectors: Vec<GfVector>,
}

/// O'(F,k) or a projective slice of it, with the pair behind each vertex.
#[derive(Clone, Debug)]
pub struct PairGraph {
    pub field: Field,
    pub k: usize,
    pub graph: Graph,
    pub pairs: Vec<(GfVector, GfVector)>,
}

fn enumeration_guard(field: Field, exponent: usize, g: &TargetGuard) -> Result<()> {
    let count = field.checked_power(exponent).unwrap_or(u128::MAX);
    guard("target vectors q^k", count, g.max_enumerated)
}

fn vector_graph(field: Field, k: usize, vectors: Vec<GfVector>) -> Result<VectorGraph> {
    let labels = vectors.iter().map(|v| v.to_string()).collect();
    let mut graph = Graph::with_labels(labels)?;
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if field.dot(vectors[i].coords(), vectors[j].coords()) == 0 {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(VectorGraph { field, k, graph, vectors })
}

fn pair_label(u: &GfVector, w: &GfVector) -> String {
    format!("{u}|{w}")
}

fn pair_graph(field: Field, k: usize, pairs: Vec<(GfVector, GfVector)>) -> Result<PairGraph> {
    let labels = pairs.iter().map(|(u, w)| pair_label(u, w)).collect();
    let mut graph = Graph::with_labels(labels)?;
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if pairs_adjacent(field, &pairs[i], &pairs[j]) {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(PairGraph { field, k, graph, pairs })
}

fn pairs_adjacent(field: Field, a: &(GfVector, GfVector), b: &(GfVector, GfVector)) -> bool {
    field.dot(a.0.coords(), b.1.coords()) == 0 && field.dot(b.0.coords(), a.1.coords()) == 0
}

/// O(F,k): every non-self-orthogonal vector of F^k, distinct orthogonal
/// vectors adjacent. Vertices in lexicographic order.
pub fn build_o(field: Field, k: usize, g: &TargetGuard) -> Result<VectorGraph> {
    enumeration_guard(field, k, g)?;
    let vectors = all_vectors(field, k)
        .map(|c| GfVector::from_reduced(field, c))
        .filter(|v| !v.is_self_orthogonal())
        .collect();
    vector_graph(field, k, vectors)
}

/// The subgraph of O(F,k) induced by vectors with leading coordinate 1.
pub fn build_o_projective(field: Field, k: usize, g: &TargetGuard) -> Result<VectorGraph> {
    enumeration_guard(field, k, g)?;
    let vectors = projective_points(field, k)
        .map(|c| GfVector::from_reduced(field, c))
        .filter(|v| !v.is_self_orthogonal())
        .collect();
    vector_graph(field, k, vectors)
}

/// O'(F,k): pairs `(u, w)` with `<u,w> != 0`; `(u1,w1) ~ (u2,w2)` iff
/// `<u1,w2> = <u2,w1> = 0`. Vertices in lexicographic order of `(u, w)`.
pub fn build_oprime(field: Field, k: usize, g: &TargetGuard) -> Result<PairGraph> {
    enumeration_guard(field, 2 * k, g)?;
    let vs: Vec<GfVector> = all_vectors(field, k).map(|c| GfVector::from_reduced(field, c)).collect();
    pair_graph(field, k, nonorthogonal_pairs(field, &vs))
}

/// The subgraph of O'(F,k) induced by pairs whose halves both have leading
/// coordinate 1.
pub fn build_oprime_projective(field: Field, k: usize, g: &TargetGuard) -> Result<PairGraph> {
    enumeration_guard(field, 2 * k, g)?;
    let vs: Vec<GfVector> = projective_points(field, k)
        .map(|c| GfVector::from_reduced(field, c))
        .collect();
    pair_graph(field, k, nonorthogonal_pairs(field, &vs))
}

fn nonorthogonal_pairs(field: Field, vs: &[GfVector]) -> Vec<(GfVector, GfVector)> {
    let mut out = Vec::new();
    for u in vs {
        for w in vs {
            if field.dot(u.coords(), w.coords()) != 0 {
                out.push((u.clone(), w.clone()));
            }
        }
    }
    out
}

/// A generator of the multiplicative group of the field.
fn primitive_element(field: Field) -> u32 {
    let q = field.q();
    if q == 2 {
        return 1;
    }
    let order = u64::from(q - 1);
    let mut factors = Vec::new();
    let mut m = order;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            factors.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..q)
        .find(|&g| factors.iter().all(|&f| field.pow(g, order / f) != 1))
        .expect("cyclic group")
}

type CoordMap = Box<dyn Fn(&[u32]) -> Vec<u32>>;

/// Monomial maps generating the coordinate symmetries: swap the first two
/// coordinates, rotate all coordinates, and scale the first coordinate by a
/// primitive element. Each returns the image coordinates.
fn monomial_generators(field: Field, k: usize) -> Vec<CoordMap> {
    let mut gens: Vec<CoordMap> = Vec::new();
    if k >= 2 {
        gens.push(Box::new(|c: &[u32]| {
            let mut d = c.to_vec();
            d.swap(0, 1);
            d
        }));
    }
    if k >= 3 {
        gens.push(Box::new(|c: &[u32]| {
            let mut d = c.to_vec();
            d.rotate_left(1);
            d
        }));
    }
    if k >= 1 && field.q() > 2 {
        let g = primitive_element(field);
        gens.push(Box::new(move |c: &[u32]| {
            let mut d = c.to_vec();
            d[0] = field.mul(d[0], g);
            d
        }));
    }
    gens
}

impl VectorGraph {
    /// Vertex permutations induced by monomial maps, for a graph whose vertex
    /// set is closed under them up to normalization.
    pub fn symmetry(&self) -> Vec<Vec<usize>> {
        let index: HashMap<&[u32], usize> =
            self.vectors.iter().enumerate().map(|(i, v)| (v.coords(), i)).collect();
        let normalize = self.vectors.iter().all(|v| v.normalized() == *v);
        monomial_generators(self.field, self.k)
            .iter()
            .filter_map(|f| {
                self.vectors
                    .iter()
                    .map(|v| {
                        let mut img = GfVector::from_reduced(self.field, f(v.coords()));
                        if normalize {
                            img = img.normalized();
                        }
                        index.get(img.coords()).copied()
                    })
                    .collect::<Option<Vec<usize>>>()
            })
            .collect()
    }
}

impl PairGraph {
    /// Vertex permutations induced by `(u, w) -> (Au, A^{-T} w)` for the
    /// monomial generators `A`, plus the swap `(u, w) -> (w, u)`.
    pub fn symmetry(&self) -> Vec<Vec<usize>> {
        let field = self.field;
        let index: HashMap<(&[u32], &[u32]), usize> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(i, (u, w))| ((u.coords(), w.coords()), i))
            .collect();
        let normalize = self.pairs.iter().all(|(u, w)| u.normalized() == *u && w.normalized() == *w);
        let lookup = |u: Vec<u32>, w: Vec<u32>| {
            let (mut u, mut w) = (GfVector::from_reduced(field, u), GfVector::from_reduced(field, w));
            if normalize {
                u = u.normalized();
                w = w.normalized();
            }
            index.get(&(u.coords(), w.coords())).copied()
        };
        let mut out = Vec::new();
        let k = self.k;
        if k >= 2 {
            out.push(self.map_pairs(|u, w| {
                let (mut a, mut b) = (u.to_vec(), w.to_vec());
                a.swap(0, 1);
                b.swap(0, 1);
                lookup(a, b)
            }));
        }
        if k >= 3 {
            out.push(self.map_pairs(|u, w| {
                let (mut a, mut b) = (u.to_vec(), w.to_vec());
                a.rotate_left(1);
                b.rotate_left(1);
                lookup(a, b)
            }));
        }
        if k >= 1 && field.q() > 2 {
            let g = primitive_element(field);
            let g_inv = field.inv(g).expect("nonzero");
            out.push(self.map_pairs(|u, w| {
                let (mut a, mut b) = (u.to_vec(), w.to_vec());
                a[0] = field.mul(a[0], g);
                b[0] = field.mul(b[0], g_inv);
                lookup(a, b)
            }));
        }
        out.push(self.map_pairs(|u, w| lookup(w.to_vec(), u.to_vec())));
        out.into_iter().flatten().collect()
    }

    fn map_pairs(&self, f: impl Fn(&[u32], &[u32]) -> Option<usize>) -> Option<Vec<usize>> {
        self.pairs.iter().map(|(u, w)| f(u.coords(), w.coords())).collect()
    }
}

/// A k-dimensional orthogonal representation: one non-self-orthogonal
/// vector per vertex, adjacent vertices orthogonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthRep {
    pub field: Field,
    pub k: usize,
    pub vectors: Vec<GfVector>,
}

/// One pair `(u, w)` with `<u,w> != 0` per vertex, with `<u_i,w_j> = 0` and
/// `<u_j,w_i> = 0` for adjacent `i, j`; a homomorphism into O'(F,k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRep {
    pub field: Field,
    pub k: usize,
    pub pairs: Vec<(GfVector, GfVector)>,
}

/// A matrix representing a graph, with its claimed rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReprMatrix {
    pub matrix: GfMatrix,
    pub rank: usize,
}

fn vector_ok(v: &GfVector, field: Field, k: usize) -> bool {
    v.field() == field && v.len() == k
}

pub fn verify_orth_rep(g: &Graph, r: &OrthRep) -> bool {
    r.vectors.len() == g.n()
        && r.vectors.iter().all(|v| vector_ok(v, r.field, r.k) && !v.is_self_orthogonal())
        && g
            .edges()
            .iter()
            .all(|&(a, b)| r.field.dot(r.vectors[a].coords(), r.vectors[b].coords()) == 0)
}

pub fn verify_pair_rep(g: &Graph, r: &PairRep) -> bool {
    let f = r.field;
    r.pairs.len() == g.n()
        && r.pairs.iter().all(|(u, w)| {
            vector_ok(u, f, r.k) && vector_ok(w, f, r.k) && f.dot(u.coords(), w.coords()) != 0
        })
        && g
            .edges()
            .iter()
            .all(|&(a, b)| pairs_adjacent(f, &r.pairs[a], &r.pairs[b]))
}

/// Nonzero diagonal, zero at every non-adjacent off-diagonal position, and
/// the claimed rank equals the actual rank.
pub fn verify_repr_matrix(g: &Graph, m: &ReprMatrix) -> bool {
    let a = &m.matrix;
    let n = g.n();
    if a.rows() != n || a.cols() != n {
        return false;
    }
    for i in 0..n {
        if a.get(i, i) == 0 {
            return false;
        }
        for j in 0..n {
            if i != j && !g.has_edge(i, j) && a.get(i, j) != 0 {
                return false;
            }
        }
    }
    a.rank() == m.rank
}

/// `M_ij = <u_i, w_j>`.
pub fn matrix_from_pairs(r: &PairRep) -> ReprMatrix {
    let n = r.pairs.len();
    let mut m = GfMatrix::zeros(r.field, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, r.field.dot(r.pairs[i].0.coords(), r.pairs[j].1.coords()));
        }
    }
    let rank = m.rank();
    ReprMatrix { matrix: m, rank }
}

#[derive(Clone, Copy, Debug)]
pub struct ParamOptions {
    pub limits: SearchLimits,
    /// Upper bound on `|V(G)| * |V(target)|` for each homomorphism search.
    pub max_product: u128,
    pub target: TargetGuard,
    /// Restrict the first vertex of each component to orbit representatives
    /// of the target's coordinate symmetries.
    pub symmetry: bool,
}

impl Default for ParamOptions {
    fn default() -> Self {
        ParamOptions {
            limits: SearchLimits::unlimited(),
            max_product: 20_000_000,
            target: TargetGuard::default(),
            symmetry: true,
        }
    }
}

/// An exact parameter value with its witness. Every `k` in
/// `clique.len()..value` was refuted by exhausted search; values below
/// `clique.len()` are excluded by the clique itself.
#[derive(Clone, Debug)]
pub struct ParamValue<W> {
    pub value: usize,
    pub witness: W,
    pub clique: Vec<usize>,
}

fn run_search(g: &Graph, t: &Graph, sym: &[Vec<usize>], opts: &ParamOptions, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    guard(
        "homomorphism search size |V(G)|*|V(T)|",
        g.n() as u128 * t.n() as u128,
        opts.max_product,
    )?;
    let sym = if opts.symmetry { Some(sym) } else { None };
    Ok(find_with_budget(g, t, sym, budget)?.map(|h| h.map))
}

fn orth_rep_with_budget(g: &Graph, field: Field, k: usize, opts: &ParamOptions, budget: &mut Budget) -> Result<Option<OrthRep>> {
    let t = build_o_projective(field, k, &opts.target)?;
    let sym = t.symmetry();
    Ok(run_search(g, &t.graph, &sym, opts, budget)?.map(|map| OrthRep {
        field,
        k,
        vectors: map.into_iter().map(|i| t.vectors[i].clone()).collect(),
    }))
}

fn pair_rep_with_budget(g: &Graph, field: Field, k: usize, opts: &ParamOptions, budget: &mut Budget) -> Result<Option<PairRep>> {
    let t = build_oprime_projective(field, k, &opts.target)?;
    let sym = t.symmetry();
    Ok(run_search(g, &t.graph, &sym, opts, budget)?.map(|map| PairRep {
        field,
        k,
        pairs: map.into_iter().map(|i| t.pairs[i].clone()).collect(),
    }))
}

/// A k-dimensional orthogonal representation of `g` over `field`, if any.
pub fn find_orth_rep(g: &Graph, field: Field, k: usize, opts: &ParamOptions) -> Result<Option<OrthRep>> {
    orth_rep_with_budget(g, field, k, opts, &mut opts.limits.start())
}

/// A homomorphism from `g` into O'(field, k), if any.
pub fn find_pair_rep(g: &Graph, field: Field, k: usize, opts: &ParamOptions) -> Result<Option<PairRep>> {
    pair_rep_with_budget(g, field, k, opts, &mut opts.limits.start())
}

/// Ascend from the clique bound; `Ok(None)` means the value exceeds `k_max`.
fn threshold<W>(
    g: &Graph,
    k_max: usize,
    opts: &ParamOptions,
    empty: impl FnOnce() -> W,
    mut decide: impl FnMut(usize, &mut Budget) -> Result<Option<W>>,
) -> Result<Option<ParamValue<W>>> {
    if g.n() == 0 {
        return Ok(Some(ParamValue {
            value: 0,
            witness: empty(),
            clique: Vec::new(),
        }));
    }
    let clique = greedy_clique(g);
    let mut budget = opts.limits.start();
    for k in clique.len().max(1)..=k_max {
        if let Some(w) = decide(k, &mut budget)? {
            return Ok(Some(ParamValue { value: k, witness: w, clique }));
        }
    }
    Ok(None)
}

/// `od_F(G)`: least `k <= k_max` admitting a k-dimensional orthogonal
/// representation.
pub fn orthogonality_dimension(
    g: &Graph,
    field: Field,
    k_max: usize,
    opts: &ParamOptions,
) -> Result<Option<ParamValue<OrthRep>>> {
    threshold(
        g,
        k_max,
        opts,
        || OrthRep { field, k: 0, vectors: Vec::new() },
        |k, budget| orth_rep_with_budget(g, field, k, opts, budget),
    )
}

/// Witness for `minrank_F(G)`: the pairs of a homomorphism from the
/// complement into O'(F,k) and the matrix they assemble into.
#[derive(Clone, Debug)]
pub struct MinrankWitness {
    pub pairs: PairRep,
    pub matrix: ReprMatrix,
}

/// `minrank_F(G)`: least `k <= k_max` with a homomorphism from the
/// complement of `g` into O'(F,k). The clique in the result is a clique of
/// the complement.
pub fn minrank(g: &Graph, field: Field, k_max: usize, opts: &ParamOptions) -> Result<Option<ParamValue<MinrankWitness>>> {
    let gc = g.complement();
    let r = threshold(
        &gc,
        k_max,
        opts,
        || PairRep { field, k: 0, pairs: Vec::new() },
        |k, budget| pair_rep_with_budget(&gc, field, k, opts, budget),
    )?;
    r.map(|p| {
        let matrix = matrix_from_pairs(&p.witness);
        if matrix.rank != p.value || !verify_repr_matrix(g, &matrix) {
            return Err(Error::InvalidInput("assembled matrix does not represent the graph".into()));
        }
        Ok(ParamValue {
            value: p.value,
            witness: MinrankWitness { pairs: p.witness, matrix },
            clique: p.clique,
        })
    })
    .transpose()
}

impl fmt::Display for OrthRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vectors.iter().enumerate() {
            writeln!(f, "{} {v}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chromatic_number, ChromaticOptions};
    use crate::graph::generators::{complete, cycle, petersen, random};
    use crate::hom::find_homomorphism;

    fn gf(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    fn v(q: u32, c: &[i64]) -> GfVector {
        GfVector::new(gf(q), c.iter().copied())
    }

    fn od(g: &Graph, q: u32) -> usize {
        let r = orthogonality_dimension(g, gf(q), 8, &ParamOptions::default()).unwrap().unwrap();
        assert!(verify_orth_rep(g, &r.witness));
        assert_eq!(r.witness.k, r.value);
        r.value
    }

    fn mr(g: &Graph, q: u32) -> usize {
        let r = minrank(g, gf(q), 8, &ParamOptions::default()).unwrap().unwrap();
        assert!(verify_repr_matrix(g, &r.witness.matrix));
        assert!(verify_pair_rep(&g.complement(), &r.witness.pairs));
        assert_eq!(r.witness.matrix.rank, r.value);
        r.value
    }

    #[test]
    fn o_examples() {
        let o = build_o(gf(2), 2, &TargetGuard::default()).unwrap();
        assert_eq!(o.vectors, vec![v(2, &[0, 1]), v(2, &[1, 0])]);
        assert_eq!(o.graph.edges(), vec![(0, 1)]);

        let o = build_o(gf(2), 3, &TargetGuard::default()).unwrap();
        assert_eq!(o.graph.n(), 4);
        assert_eq!(o.graph.edge_count(), 3);
        let all_ones = o.vectors.iter().position(|x| *x == v(2, &[1, 1, 1])).unwrap();
        assert_eq!(o.graph.degree(all_ones), 0);

        let o = build_o(gf(3), 1, &TargetGuard::default()).unwrap();
        assert_eq!(o.graph.n(), 2);
        assert_eq!(o.graph.edge_count(), 0);
    }

    #[test]
    fn oprime_examples() {
        let o = build_oprime(gf(2), 1, &TargetGuard::default()).unwrap();
        assert_eq!(o.graph.n(), 1);
        assert_eq!(o.graph.label(0), "(1)|(1)");
        let o = build_oprime(gf(2), 2, &TargetGuard::default()).unwrap();
        assert_eq!(o.graph.n(), 6);
        for (q, k) in [(2, 3), (3, 2), (5, 1), (3, 3)] {
            let f = gf(q);
            let direct = all_vectors(f, k)
                .flat_map(|u| all_vectors(f, k).map(move |w| (u.clone(), w)))
                .filter(|(u, w)| f.dot(u, w) != 0)
                .count();
            assert_eq!(build_oprime(f, k, &TargetGuard::default()).unwrap().graph.n(), direct);
        }
    }

    #[test]
    fn target_guard() {
        let small = TargetGuard { max_enumerated: 8 };
        assert!(build_o(gf(2), 3, &small).is_ok());
        assert!(build_o(gf(2), 4, &small).unwrap_err().is_unknown());
        assert!(build_oprime(gf(2), 2, &small).unwrap_err().is_unknown());
    }

    #[test]
    fn symmetries_are_automorphisms() {
        for (q, k) in [(2, 3), (3, 3), (5, 2), (2, 4)] {
            let t = build_o_projective(gf(q), k, &TargetGuard::default()).unwrap();
            for p in t.symmetry() {
                for (a, b) in t.graph.edges() {
                    assert!(t.graph.has_edge(p[a], p[b]));
                }
            }
            let t = build_oprime_projective(gf(q), k, &TargetGuard::default()).unwrap();
            let sym = t.symmetry();
            assert!(!sym.is_empty());
            for p in sym {
                for (a, b) in t.graph.edges() {
                    assert!(t.graph.has_edge(p[a], p[b]));
                }
            }
        }
    }

    #[test]
    fn od_examples() {
        assert_eq!(od(&Graph::empty(4), 2), 1);
        let r = orthogonality_dimension(&Graph::empty(4), gf(2), 3, &ParamOptions::default())
            .unwrap()
            .unwrap();
        assert!(r.witness.vectors.iter().all(|x| *x == v(2, &[1])));
        assert_eq!(od(&complete(3), 2), 3);
        assert_eq!(od(&cycle(5), 2), 3);
        assert_eq!(od(&Graph::empty(0), 2), 0);
    }

    #[test]
    fn od_exceeds_bound() {
        let r = orthogonality_dimension(&complete(4), gf(2), 3, &ParamOptions::default()).unwrap();
        assert!(r.is_none());
    }

    #[test]
    fn minrank_examples() {
        for n in 1..=5 {
            assert_eq!(mr(&complete(n), 2), 1);
            assert_eq!(mr(&complete(n), 3), 1);
            assert_eq!(mr(&Graph::empty(n), 2), n);
            assert_eq!(mr(&Graph::empty(n), 3), n);
        }
        assert_eq!(mr(&cycle(5), 2), 3);
    }

    #[test]
    fn verifier_examples() {
        let f = gf(2);
        let e = |i| GfVector::unit(f, 3, i);
        let good = OrthRep { field: f, k: 3, vectors: vec![e(0), e(1), e(2)] };
        assert!(verify_orth_rep(&complete(3), &good));
        let same = OrthRep { field: f, k: 2, vectors: vec![v(2, &[1, 0]), v(2, &[1, 0])] };
        assert!(!verify_orth_rep(&complete(2), &same));
        let iso = OrthRep { field: f, k: 2, vectors: vec![v(2, &[1, 1])] };
        assert!(!verify_orth_rep(&complete(1), &iso));

        let ones = GfMatrix::from_rows(f, 3, &[[1, 1, 1], [1, 1, 1], [1, 1, 1]]).unwrap();
        assert!(verify_repr_matrix(&complete(3), &ReprMatrix { matrix: ones.clone(), rank: 1 }));
        assert!(!verify_repr_matrix(&complete(3), &ReprMatrix { matrix: ones, rank: 2 }));
        let id = GfMatrix::identity(f, 2);
        assert!(verify_repr_matrix(&Graph::empty(2), &ReprMatrix { matrix: id, rank: 2 }));
        let zd = GfMatrix::from_rows(f, 2, &[[0, 1], [1, 0]]).unwrap();
        assert!(!verify_repr_matrix(&complete(2), &ReprMatrix { matrix: zd, rank: 2 }));
    }

    /// Smallest k such that some assignment of nonzero vectors of F^k
    /// satisfies the representation constraints; all assignments tried.
    fn naive_od(g: &Graph, f: Field) -> usize {
        (1..).find(|&k| {
            let vs: Vec<Vec<u32>> = all_vectors(f, k).filter(|x| f.dot(x, x) != 0).collect();
            let mut idx = vec![0usize; g.n()];
            loop {
                let ok = g.edges().iter().all(|&(a, b)| f.dot(&vs[idx[a]], &vs[idx[b]]) == 0);
                if ok {
                    return true;
                }
                let mut i = 0;
                while i < idx.len() {
                    idx[i] += 1;
                    if idx[i] < vs.len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == idx.len() {
                    return false;
                }
            }
        })
        .unwrap()
    }

    /// Least rank over all matrices with nonzero diagonal and free entries
    /// exactly at edges; every such matrix is enumerated.
    fn naive_minrank(g: &Graph, f: Field) -> usize {
        let n = g.n();
        let q = f.q() as usize;
        let mut slots: Vec<(usize, usize, bool)> = (0..n).map(|i| (i, i, true)).collect();
        for (a, b) in g.edges() {
            slots.push((a, b, false));
            slots.push((b, a, false));
        }
        let mut vals = slots.iter().map(|s| if s.2 { 1 } else { 0 }).collect::<Vec<usize>>();
        let mut best = n;
        loop {
            let mut m = GfMatrix::zeros(f, n, n);
            for (s, &x) in slots.iter().zip(&vals) {
                m.set(s.0, s.1, x as u32);
            }
            best = best.min(m.rank());
            let mut i = 0;
            while i < slots.len() {
                vals[i] += 1;
                if vals[i] < q {
                    break;
                }
                vals[i] = if slots[i].2 { 1 } else { 0 };
                i += 1;
            }
            if i == slots.len() {
                return best;
            }
        }
    }

    fn small_corpus() -> Vec<Graph> {
        let mut out = vec![complete(3), cycle(4), cycle(5), Graph::empty(3), complete(1)];
        for seed in 0..12 {
            out.push(random(5, 0.5, seed));
        }
        out.push(random(6, 0.3, 7));
        out
    }

    #[test]
    fn matches_naive_enumerators() {
        for g in small_corpus() {
            assert_eq!(od(&g, 2), naive_od(&g, gf(2)), "od2 {:?}", g.edges());
            assert_eq!(mr(&g, 2), naive_minrank(&g, gf(2)), "mr2 {:?}", g.edges());
            if g.n() <= 5 {
                assert_eq!(od(&g, 3), naive_od(&g, gf(3)), "od3 {:?}", g.edges());
            }
            if g.edge_count() <= 5 {
                assert_eq!(mr(&g, 3), naive_minrank(&g, gf(3)), "mr3 {:?}", g.edges());
            }
        }
    }

    #[test]
    fn symmetry_does_not_change_values() {
        let plain = ParamOptions { symmetry: false, ..Default::default() };
        for g in small_corpus().into_iter().chain([cycle(7)]) {
            for q in [2, 3] {
                let a = orthogonality_dimension(&g, gf(q), 8, &plain).unwrap().unwrap().value;
                assert_eq!(a, od(&g, q));
                let b = minrank(&g, gf(q), 8, &plain).unwrap().unwrap().value;
                assert_eq!(b, mr(&g, q));
            }
        }
    }

    #[test]
    fn chain_on_small_graphs() {
        for g in small_corpus().into_iter().chain([petersen()]) {
            let chi = chromatic_number(&g, &ChromaticOptions::default()).unwrap().chi;
            for q in [2u32, 3] {
                let (o, m) = (od(&g, q), mr(&g.complement(), q));
                assert!(m <= o && o <= chi);
                assert!((q as f64).powi(m as i32) >= chi as f64);
            }
        }
    }

    #[test]
    fn monotone_under_homomorphism() {
        let gs = small_corpus();
        for a in &gs {
            for b in &gs {
                if find_homomorphism(a, b, &Default::default()).unwrap().is_some() {
                    assert!(od(a, 2) <= od(b, 2));
                    assert!(mr(&a.complement(), 2) <= mr(&b.complement(), 2));
                }
            }
        }
    }

    #[test]
    fn matrix_from_pairs_is_gram() {
        let f = gf(3);
        let r = PairRep {
            field: f,
            k: 2,
            pairs: vec![(v(3, &[1, 0]), v(3, &[1, 1])), (v(3, &[0, 1]), v(3, &[2, 1]))],
        };
        let m = matrix_from_pairs(&r);
        assert_eq!(m.matrix.row_vecs(), vec![vec![1, 2], vec![1, 1]]);
        assert_eq!(m.rank, 2);
    }

    #[test]
    fn node_limit_is_unknown() {
        let opts = ParamOptions { limits: SearchLimits::nodes(2), ..Default::default() };
        let e = orthogonality_dimension(&petersen(), gf(2), 6, &opts).unwrap_err();
        assert!(e.is_unknown());
    }
}
