//! The subspace graph S(F,n), the subspace-pair graph S'(F,n), and the
//! translators between homomorphisms of a graph G into them and
//! homomorphisms of the underlying graph H of its line digraph into O(F,n)
//! and O'(F,n).

use std::collections::HashMap;

use crate::chromatic::{chromatic_number, ChromaticOptions};
use crate::clique::clique_number;
use crate::error::{guard, Error, Result};
use crate::gf::{combinations, enumerate_subspaces, Field, GfVector, Subspace, SubspaceGuard};
use crate::graph::{line_digraph, Graph};
use crate::params::{verify_orth_rep, verify_pair_rep, OrthRep, PairRep};
use crate::SearchLimits;

/// S(F,n): all subspaces of F^n in canonical order.
#[derive(Clone, Debug)]
pub struct SubspaceGraph {
    pub field: Field,
    pub n: usize,
    pub graph: Graph,
    pub subspaces: Vec<Subspace>,
}

/// S'(F,n): all ordered pairs of subspaces; pair `(a, b)` of canonical
/// indices sits at vertex `a * N + b`.
#[derive(Clone, Debug)]
pub struct PairSubspaceGraph {
    pub field: Field,
    pub n: usize,
    pub graph: Graph,
    pub pairs: Vec<(Subspace, Subspace)>,
}

impl SubspaceGraph {
    pub fn index_of(&self, u: &Subspace) -> Option<usize> {
        self.subspaces.binary_search(u).ok()
    }
}

impl PairSubspaceGraph {
    pub fn index_of(&self, p: &(Subspace, Subspace)) -> Option<usize> {
        self.pairs.binary_search(p).ok()
    }
}

/// `U ∩ W^⊥`.
fn meet_perp(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.intersect(&w.orthogonal_complement())
}

/// Some `w in U1 ∩ U2^⊥` with `<w,w> != 0` and some `w' in U2 ∩ U1^⊥` with
/// `<w',w'> != 0`.
pub fn s_adjacent(u1: &Subspace, u2: &Subspace, g: &SubspaceGuard) -> Result<bool> {
    Ok(meet_perp(u1, u2)?.find_nonisotropic(g)?.is_some()
        && meet_perp(u2, u1)?.find_nonisotropic(g)?.is_some())
}

/// The lexicographically least `(u, w)` with `u in X`, `w in Y` and
/// `<u,w> != 0`, by enumerating both subspaces.
pub fn find_nonorthogonal_pair(x: &Subspace, y: &Subspace, g: &SubspaceGuard) -> Result<Option<(GfVector, GfVector)>> {
    let f = x.field();
    let mut xs = x.vectors(g)?;
    let mut ys = y.vectors(g)?;
    xs.sort();
    ys.sort();
    for u in &xs {
        for w in &ys {
            if f.dot(u, w) != 0 {
                return Ok(Some((GfVector::from_reduced(f, u.clone()), GfVector::from_reduced(f, w.clone()))));
            }
        }
    }
    Ok(None)
}

/// `(U1,W1) ~ (U2,W2)` in S': some `u in U1 ∩ W2^⊥`, `w in W1 ∩ U2^⊥` with
/// `<u,w> != 0`, and the same with the roles of the two pairs swapped.
pub fn sprime_adjacent(a: &(Subspace, Subspace), b: &(Subspace, Subspace), g: &SubspaceGuard) -> Result<bool> {
    Ok(
        find_nonorthogonal_pair(&meet_perp(&a.0, &b.1)?, &meet_perp(&a.1, &b.0)?, g)?.is_some()
            && find_nonorthogonal_pair(&meet_perp(&b.0, &a.1)?, &meet_perp(&b.1, &a.0)?, g)?.is_some(),
    )
}

/// Table `meet[i][j]` = index of `S_i ∩ S_j^⊥`.
fn meet_table(subs: &[Subspace]) -> Result<Vec<Vec<usize>>> {
    let index: HashMap<&Subspace, usize> = subs.iter().enumerate().map(|(i, s)| (s, i)).collect();
    subs.iter()
        .map(|a| {
            subs.iter()
                .map(|b| Ok(index[&meet_perp(a, b)?]))
                .collect::<Result<Vec<usize>>>()
        })
        .collect()
}

pub fn build_s(field: Field, n: usize, g: &SubspaceGuard) -> Result<SubspaceGraph> {
    let subspaces = enumerate_subspaces(field, n, g)?;
    let meet = meet_table(&subspaces)?;
    let nonisotropic = subspaces
        .iter()
        .map(|s| Ok(s.find_nonisotropic(g)?.is_some()))
        .collect::<Result<Vec<bool>>>()?;
    let labels = subspaces.iter().map(|s| s.to_string()).collect();
    let mut graph = Graph::with_labels(labels)?;
    for i in 0..subspaces.len() {
        for j in i + 1..subspaces.len() {
            if nonisotropic[meet[i][j]] && nonisotropic[meet[j][i]] {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(SubspaceGraph { field, n, graph, subspaces })
}

/// Default limit on the number of S' vertices.
pub const MAX_SPRIME_VERTICES: usize = 5000;

pub fn build_sprime(field: Field, n: usize, g: &SubspaceGuard) -> Result<PairSubspaceGraph> {
    let subspaces = enumerate_subspaces(field, n, g)?;
    let m = subspaces.len();
    guard("S' vertices", (m * m) as u128, MAX_SPRIME_VERTICES as u128)?;
    let meet = meet_table(&subspaces)?;
    let mut nonorth = vec![vec![false; m]; m];
    for (x, row) in nonorth.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = find_nonorthogonal_pair(&subspaces[x], &subspaces[y], g)?.is_some();
        }
    }
    let mut pairs = Vec::with_capacity(m * m);
    let mut labels = Vec::with_capacity(m * m);
    for a in &subspaces {
        for b in &subspaces {
            labels.push(format!("{a}|{b}"));
            pairs.push((a.clone(), b.clone()));
        }
    }
    let mut graph = Graph::with_labels(labels)?;
    for v1 in 0..m * m {
        let (a1, b1) = (v1 / m, v1 % m);
        for v2 in v1 + 1..m * m {
            let (a2, b2) = (v2 / m, v2 % m);
            if nonorth[meet[a1][b2]][meet[b1][a2]] && nonorth[meet[a2][b1]][meet[b2][a1]] {
                graph.add_edge(v1, v2)?;
            }
        }
    }
    Ok(PairSubspaceGraph { field, n, graph, pairs })
}

fn check_ambient<'a>(field: Field, n: usize, subs: impl IntoIterator<Item = &'a Subspace>) -> Result<()> {
    for s in subs {
        if s.field() != field || s.ambient_dim() != n {
            return Err(Error::Translation(format!("subspace {s} is not in {field}^{n}")));
        }
    }
    Ok(())
}

/// Whether `subs` (one subspace of F^n per vertex) is a homomorphism from
/// `g` into S(F,n).
pub fn verify_subspace_hom(g: &Graph, field: Field, n: usize, subs: &[Subspace], guard_cfg: &SubspaceGuard) -> Result<bool> {
    if subs.len() != g.n() || check_ambient(field, n, subs).is_err() {
        return Ok(false);
    }
    for (a, b) in g.edges() {
        if !s_adjacent(&subs[a], &subs[b], guard_cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `pairs` is a homomorphism from `g` into S'(F,n).
pub fn verify_subspace_pair_hom(
    g: &Graph,
    field: Field,
    n: usize,
    pairs: &[(Subspace, Subspace)],
    guard_cfg: &SubspaceGuard,
) -> Result<bool> {
    if pairs.len() != g.n() || check_ambient(field, n, pairs.iter().flat_map(|(u, w)| [u, w])).is_err() {
        return Ok(false);
    }
    for (a, b) in g.edges() {
        if !sprime_adjacent(&pairs[a], &pairs[b], guard_cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// From a homomorphism `h: H -> O(F,n)` (indexed by the line digraph's
/// vertex order) to `g: G -> S(F,n)` with `g(y)` the span of `h` over the
/// arcs entering `y`.
pub fn hom_line_to_subspaces(g: &Graph, h: &OrthRep, guard_cfg: &SubspaceGuard) -> Result<Vec<Subspace>> {
    let line = line_digraph(g);
    if !verify_orth_rep(&line.underlying(), h) {
        return Err(Error::Translation("input is not an orthogonal representation of H".into()));
    }
    let out = (0..g.n())
        .map(|y| {
            let vs: Vec<GfVector> = line.in_arcs(y).into_iter().map(|a| h.vectors[a].clone()).collect();
            Subspace::span(h.field, h.k, &vs)
        })
        .collect::<Result<Vec<Subspace>>>()?;
    if !verify_subspace_hom(g, h.field, h.k, &out, guard_cfg)? {
        return Err(Error::Translation("spans do not form a homomorphism into S".into()));
    }
    Ok(out)
}

/// From `g: G -> S(F,n)` to `h: H -> O(F,n)` with `h(x,y)` the least
/// non-self-orthogonal vector of `g(x) ∩ g(y)^⊥`.
pub fn hom_subspaces_to_line(g: &Graph, field: Field, n: usize, subs: &[Subspace], guard_cfg: &SubspaceGuard) -> Result<OrthRep> {
    if subs.len() != g.n() {
        return Err(Error::Translation("one subspace per vertex required".into()));
    }
    check_ambient(field, n, subs)?;
    let line = line_digraph(g);
    let mut vectors = Vec::with_capacity(line.arcs.len());
    for a in &line.arcs {
        let v = meet_perp(&subs[a.tail], &subs[a.head])?
            .find_nonisotropic(guard_cfg)?
            .ok_or_else(|| {
                Error::Translation(format!(
                    "vertices {} and {} are adjacent but their subspaces are not",
                    g.label(a.tail),
                    g.label(a.head)
                ))
            })?;
        vectors.push(v);
    }
    let rep = OrthRep { field, k: n, vectors };
    if !verify_orth_rep(&line.underlying(), &rep) {
        return Err(Error::Translation("translated vectors are not a representation of H".into()));
    }
    Ok(rep)
}

/// From `h: H -> O'(F,n)` to `g: G -> S'(F,n)` with `g(y) = (U_y, W_y)`, the
/// spans of the first and second halves of `h` over the arcs entering `y`.
pub fn hom_line_to_subspace_pairs(g: &Graph, h: &PairRep, guard_cfg: &SubspaceGuard) -> Result<Vec<(Subspace, Subspace)>> {
    let line = line_digraph(g);
    if !verify_pair_rep(&line.underlying(), h) {
        return Err(Error::Translation("input is not a homomorphism from H into O'".into()));
    }
    let out = (0..g.n())
        .map(|y| {
            let arcs = line.in_arcs(y);
            let us: Vec<GfVector> = arcs.iter().map(|&a| h.pairs[a].0.clone()).collect();
            let ws: Vec<GfVector> = arcs.iter().map(|&a| h.pairs[a].1.clone()).collect();
            Ok((Subspace::span(h.field, h.k, &us)?, Subspace::span(h.field, h.k, &ws)?))
        })
        .collect::<Result<Vec<_>>>()?;
    if !verify_subspace_pair_hom(g, h.field, h.k, &out, guard_cfg)? {
        return Err(Error::Translation("spans do not form a homomorphism into S'".into()));
    }
    Ok(out)
}

/// From `g: G -> S'(F,n)` to `h: H -> O'(F,n)` with `h(x,y)` the least
/// `(u, w)`, `u in U_x ∩ W_y^⊥`, `w in W_x ∩ U_y^⊥`, `<u,w> != 0`.
pub fn hom_subspace_pairs_to_line(
    g: &Graph,
    field: Field,
    n: usize,
    pairs: &[(Subspace, Subspace)],
    guard_cfg: &SubspaceGuard,
) -> Result<PairRep> {
    if pairs.len() != g.n() {
        return Err(Error::Translation("one subspace pair per vertex required".into()));
    }
    check_ambient(field, n, pairs.iter().flat_map(|(u, w)| [u, w]))?;
    let line = line_digraph(g);
    let mut out = Vec::with_capacity(line.arcs.len());
    for a in &line.arcs {
        let (ux, wx) = &pairs[a.tail];
        let (uy, wy) = &pairs[a.head];
        let p = find_nonorthogonal_pair(&meet_perp(ux, wy)?, &meet_perp(wx, uy)?, guard_cfg)?.ok_or_else(|| {
            Error::Translation(format!(
                "vertices {} and {} are adjacent but their subspace pairs are not",
                g.label(a.tail),
                g.label(a.head)
            ))
        })?;
        out.push(p);
    }
    let rep = PairRep { field, k: n, pairs: out };
    if !verify_pair_rep(&line.underlying(), &rep) {
        return Err(Error::Translation("translated pairs are not a homomorphism from H into O'".into()));
    }
    Ok(rep)
}

/// The coordinate subspaces `span{e_i : i in A}` for every `floor(n/2)`-subset
/// `A` of `[n]`, in lexicographic order of `A`. They are pairwise adjacent
/// in S(F,n) for every field.
pub fn canonical_clique_s(field: Field, n: usize) -> Vec<Subspace> {
    combinations(n, n / 2)
        .iter()
        .map(|a| Subspace::coordinate(field, n, a))
        .collect()
}

/// Whether the given subspaces are pairwise adjacent in S(F,n).
pub fn is_s_clique(subs: &[Subspace], guard_cfg: &SubspaceGuard) -> Result<bool> {
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if !s_adjacent(&subs[i], &subs[j], guard_cfg)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A representation of H of dimension `n`, obtained by sending each colour
/// class of an optimal colouring of G to one member of a maximum clique of
/// S(F,n) and translating. `Ok(None)` when `χ(G)` exceeds the clique number.
#[derive(Clone, Debug)]
pub struct CliqueRoute {
    pub chi: usize,
    pub omega: usize,
    pub subspaces: Vec<Subspace>,
    pub rep: OrthRep,
}

pub fn representation_via_clique(
    g: &Graph,
    field: Field,
    n: usize,
    guard_cfg: &SubspaceGuard,
    limits: &SearchLimits,
) -> Result<Option<CliqueRoute>> {
    let chi = chromatic_number(g, &ChromaticOptions { limits: *limits, ..Default::default() })?;
    let s = build_s(field, n, guard_cfg)?;
    let (omega, clique) = clique_number(&s.graph, limits)?;
    if chi.chi > omega {
        return Ok(None);
    }
    let subspaces: Vec<Subspace> = chi
        .coloring
        .colors()
        .iter()
        .map(|&c| s.subspaces[clique[c]].clone())
        .collect();
    let rep = hom_subspaces_to_line(g, field, n, &subspaces, guard_cfg)?;
    Ok(Some(CliqueRoute { chi: chi.chi, omega, subspaces, rep }))
}
