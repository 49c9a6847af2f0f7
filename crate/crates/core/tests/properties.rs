use odlab_core::chromatic::{
    chromatic_number, line_chromatic_target, lift_coloring_to_line, set_coloring_from_line, verify_coloring,
    ChromaticOptions,
};
use odlab_core::gf::{enumerate_subspaces, Field, GfMatrix, Subspace, SubspaceGuard};
use odlab_core::graph::generators::{complete, random};
use odlab_core::graph::{line_digraph, parse_graph, serialize_graph, Graph};
use odlab_core::hom::{find_homomorphism, verify_homomorphism, HomOptions};
use proptest::prelude::*;

fn chi(g: &Graph) -> usize {
    chromatic_number(g, &ChromaticOptions::default()).unwrap().chi
}

/// Determinant by cofactor expansion.
fn det(f: Field, m: &[Vec<u32>]) -> u32 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut acc = 0;
    for j in 0..n {
        let minor: Vec<Vec<u32>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = f.mul(m[0][j], det(f, &minor));
        acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest size of a nonzero square minor.
fn rank_by_minors(f: Field, m: &[Vec<u32>], cols: usize) -> usize {
    (1..=m.len().min(cols))
        .rev()
        .find(|&k| {
            subsets(m.len(), k).iter().any(|rs| {
                subsets(cols, k).iter().any(|cs| {
                    let sub: Vec<Vec<u32>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                    det(f, &sub) != 0
                })
            })
        })
        .unwrap_or(0)
}

/// Number of k-dimensional subspaces of GF(q)^n.
fn gaussian_binomial(q: u128, n: u32, k: u32) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

#[test]
fn subspace_counts_match_gaussian_binomials() {
    for (q, n) in [(2u32, 1usize), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (3, 4)] {
        let f = Field::new(q).unwrap();
        let expected: u128 = (0..=n as u32).map(|k| gaussian_binomial(q as u128, n as u32, k)).sum();
        let subs = enumerate_subspaces(f, n, &SubspaceGuard::default()).unwrap();
        assert_eq!(subs.len() as u128, expected, "q={q} n={n}");
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }
}

fn small_field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_map(|q| Field::new(q).unwrap())
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..f.q(), cols), rows)
}

fn field_and_matrix() -> impl Strategy<Value = (Field, usize, Vec<Vec<u32>>)> {
    (small_field(), 1usize..=4, 1usize..=4)
        .prop_flat_map(|(f, r, c)| (Just(f), Just(c), matrix(f, r, c)))
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| random(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_minor_oracle((f, cols, rows) in field_and_matrix()) {
        let m = GfMatrix::from_reduced_rows(f, cols, &rows);
        prop_assert_eq!(m.rank(), rank_by_minors(f, &rows, cols));
    }

    #[test]
    fn subspace_dimension_identities((f, cols, a) in field_and_matrix()) {
        let b: Vec<Vec<u32>> = a.iter().rev().map(|r| r.iter().map(|&x| f.mul(x, 2 % f.q())).collect()).collect();
        let u = Subspace::span_rows(f, cols, &a);
        let w = Subspace::span_rows(f, cols, &a[..a.len() / 2 + 1].iter().cloned().chain(b).collect::<Vec<_>>());
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert_eq!(u.orthogonal_complement().dim(), cols - u.dim());
        prop_assert_eq!(u.orthogonal_complement().orthogonal_complement(), u.clone());
        for v in i.basis_vectors() {
            prop_assert!(u.contains(v.coords()) && w.contains(v.coords()));
        }
    }

    #[test]
    fn line_chromatic_number(g in graph(7)) {
        let h = line_digraph(&g).underlying();
        prop_assert_eq!(chi(&h), line_chromatic_target(chi(&g)));
    }

    #[test]
    fn coloring_transfers(g in graph(7)) {
        let c = chromatic_number(&g, &ChromaticOptions::default()).unwrap().coloring;
        let n = line_chromatic_target(c.palette());
        let lifted = lift_coloring_to_line(&g, &c, n).unwrap();
        let h = line_digraph(&g).underlying();
        prop_assert!(verify_coloring(&h, &lifted));
        prop_assert_eq!(lifted.palette(), n);
        let back = set_coloring_from_line(&g, &lifted).unwrap();
        prop_assert!(verify_coloring(&g, &back));
        prop_assert!(back.palette() <= 1 << n);
    }

    #[test]
    fn hom_into_complete_iff_colorable(g in graph(7), k in 1usize..5) {
        let h = find_homomorphism(&g, &complete(k), &HomOptions::default()).unwrap();
        if let Some(h) = &h {
            prop_assert!(verify_homomorphism(&g, &complete(k), h));
        }
        prop_assert_eq!(h.is_some(), chi(&g) <= k);
    }

    #[test]
    fn dimacs_round_trip(g in graph(9)) {
        let text = serialize_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(parsed.graph.edges(), g.edges());
        prop_assert_eq!(serialize_graph(&parsed.graph), text);
    }
}
