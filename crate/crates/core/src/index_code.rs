//! Index codes over the alphabet `{0, ..., s-1}`: verification, linear codes
//! from representing matrices, exhaustive optimal search, and the two
//! colouring extractions.
//!
//! Messages `x in Σ^n` are indexed lexicographically with `x_1` most
//! significant. Receiver `i` wants `x_i` and knows `x_j` for `j` in its
//! neighbourhood. Decoders are never stored: a code is decodable iff no two
//! messages with the same codeword and the same side information at `i`
//! differ at `i`.

use std::collections::HashMap;

use crate::chromatic::{k_coloring, Coloring};
use crate::error::{guard, Error, Result};
use crate::gf::{Field, GfMatrix};
use crate::graph::{line_digraph, Graph};
use crate::params::{verify_repr_matrix, ReprMatrix};
use crate::SearchLimits;

/// Largest message space scanned exhaustively.
pub const MAX_MESSAGES: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Encoder {
    /// Codeword of every message, in message order.
    Table(Vec<Vec<u32>>),
    /// `k x n` matrix over GF(s): `E(x) = A x`.
    Linear(GfMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCode {
    s: u32,
    n: usize,
    k: usize,
    encoder: Encoder,
}

fn pow(s: u32, e: usize) -> Option<u128> {
    (0..e).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(s)))
}

fn message_count(s: u32, n: usize) -> Result<usize> {
    let count = pow(s, n).unwrap_or(u128::MAX);
    guard("messages s^n", count, MAX_MESSAGES)?;
    Ok(count as usize)
}

/// Digits of `index` in base `s`, most significant first.
pub fn message(s: u32, n: usize, mut index: usize) -> Vec<u32> {
    let mut x = vec![0; n];
    for d in x.iter_mut().rev() {
        *d = (index % s as usize) as u32;
        index /= s as usize;
    }
    x
}

fn word_index(s: u32, word: &[u32]) -> usize {
    word.iter().fold(0, |acc, &d| acc * s as usize + d as usize)
}

impl IndexCode {
    pub fn table(s: u32, n: usize, k: usize, codewords: Vec<Vec<u32>>) -> Result<IndexCode> {
        if s < 2 {
            return Err(Error::InvalidInput("alphabet needs at least two symbols".into()));
        }
        let count = message_count(s, n)?;
        if codewords.len() != count {
            return Err(Error::InvalidInput(format!(
                "encoder table has {} rows, expected s^n = {count}",
                codewords.len()
            )));
        }
        if codewords.iter().any(|w| w.len() != k || w.iter().any(|&d| d >= s)) {
            return Err(Error::InvalidInput(format!("every codeword must be {k} symbols below {s}")));
        }
        Ok(IndexCode { s, n, k, encoder: Encoder::Table(codewords) })
    }

    /// A linear code over GF(s) given by its `k x n` encoding matrix.
    pub fn linear(matrix: GfMatrix) -> IndexCode {
        IndexCode {
            s: matrix.field().q(),
            n: matrix.cols(),
            k: matrix.rows(),
            encoder: Encoder::Linear(matrix),
        }
    }

    /// `E(x) = x`.
    pub fn identity(field: Field, n: usize) -> IndexCode {
        IndexCode::linear(GfMatrix::identity(field, n))
    }

    pub fn alphabet(&self) -> u32 {
        self.s
    }

    pub fn receivers(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.k
    }

    pub fn encoder(&self) -> &Encoder {
        &self.encoder
    }

    pub fn encode(&self, x: &[u32]) -> Vec<u32> {
        match &self.encoder {
            Encoder::Table(t) => t[word_index(self.s, x)].clone(),
            Encoder::Linear(m) => m.mul_vec(x),
        }
    }

    /// The full encoder table.
    pub fn to_table(&self) -> Result<Vec<Vec<u32>>> {
        let count = message_count(self.s, self.n)?;
        Ok((0..count).map(|i| self.encode(&message(self.s, self.n, i))).collect())
    }
}

/// Every receiver of `g` can decode its symbol from every codeword.
///
/// Linear codes are checked algebraically: receiver `i` decodes iff `e_i`
/// lies in the row space of the encoder plus `span{e_j : j in N(i)}`. Table
/// codes are checked exhaustively.
pub fn verify_index_code(g: &Graph, code: &IndexCode) -> Result<bool> {
    match &code.encoder {
        Encoder::Linear(a) if code.n == g.n() => Ok((0..g.n()).all(|i| linear_decodable(g, a, i))),
        _ => verify_index_code_exhaustive(g, code),
    }
}

fn linear_decodable(g: &Graph, a: &GfMatrix, i: usize) -> bool {
    let n = a.cols();
    let unit = |j: usize| {
        let mut e = vec![0u32; n];
        e[j] = 1;
        e
    };
    let mut rows = a.row_vecs();
    rows.extend(g.neighbors(i).map(unit));
    let base = GfMatrix::from_reduced_rows(a.field(), n, &rows).rank();
    rows.push(unit(i));
    GfMatrix::from_reduced_rows(a.field(), n, &rows).rank() == base
}

/// [`verify_index_code`] by scanning all `s^n` messages, for any encoder.
pub fn verify_index_code_exhaustive(g: &Graph, code: &IndexCode) -> Result<bool> {
    if code.n != g.n() {
        return Ok(false);
    }
    let (s, n) = (code.s, code.n);
    let count = message_count(s, n)?;
    let words: Vec<usize> = (0..count).map(|i| word_index(s, &code.encode(&message(s, n, i)))).collect();
    let messages: Vec<Vec<u32>> = (0..count).map(|i| message(s, n, i)).collect();
    for i in 0..n {
        let nb: Vec<usize> = g.neighbors(i).collect();
        let mut seen: HashMap<(usize, usize), u32> = HashMap::new();
        for (x, &w) in messages.iter().zip(&words) {
            let side = nb.iter().fold(0usize, |acc, &j| acc * s as usize + x[j] as usize);
            if let Some(&prev) = seen.get(&(w, side)) {
                if prev != x[i] {
                    return Ok(false);
                }
            } else {
                seen.insert((w, side), x[i]);
            }
        }
    }
    Ok(true)
}

/// The linear code whose encoder is a row basis of a matrix representing
/// `g`. Row `i` of the matrix lies in the row space, and its entries outside
/// `{i} ∪ N(i)` vanish, so receiver `i` recovers `M_ii x_i`.
pub fn linear_code_from_matrix(g: &Graph, m: &ReprMatrix) -> Result<IndexCode> {
    if !verify_repr_matrix(g, m) {
        return Err(Error::InvalidInput("matrix does not represent the graph".into()));
    }
    let (basis, _) = m.matrix.rref();
    Ok(IndexCode::linear(basis))
}

/// Messages that some receiver must tell apart: they differ at `i` and agree
/// on `N(i)`.
fn confusion_graph(g: &Graph, s: u32) -> Result<Graph> {
    let n = g.n();
    let count = message_count(s, n)?;
    let messages: Vec<Vec<u32>> = (0..count).map(|i| message(s, n, i)).collect();
    let mut c = Graph::empty(count);
    for a in 0..count {
        for b in a + 1..count {
            let (x, y) = (&messages[a], &messages[b]);
            if (0..n).any(|i| x[i] != y[i] && g.neighbors(i).all(|j| x[j] == y[j])) {
                c.add_edge(a, b)?;
            }
        }
    }
    Ok(c)
}

/// Hard limits for the exhaustive optimum.
pub const BRUTE_MAX_RECEIVERS: usize = 4;
pub const BRUTE_MAX_MESSAGES: u128 = 128;

/// Least length `k <= k_max` of any (possibly nonlinear) index code for `g`
/// over `s` symbols, with a code attaining it.
///
/// Codewords are assigned to messages in message order, a message taking
/// either a codeword already used or the next unused one; a length-`k` code
/// exists iff the messages can be so labelled with `s^k` codewords while
/// every receiver can still decode.
pub fn optimal_index_code_bruteforce(
    g: &Graph,
    s: u32,
    k_max: usize,
    limits: &SearchLimits,
) -> Result<Option<(usize, IndexCode)>> {
    if s < 2 {
        return Err(Error::InvalidInput("alphabet needs at least two symbols".into()));
    }
    guard("receivers", g.n() as u128, BRUTE_MAX_RECEIVERS as u128)?;
    guard("messages s^n", pow(s, g.n()).unwrap_or(u128::MAX), BRUTE_MAX_MESSAGES)?;
    let c = confusion_graph(g, s)?;
    for k in 0..=k_max {
        let words = pow(s, k).unwrap_or(u128::MAX).min(c.n() as u128 + 1) as usize;
        if let Some(col) = k_coloring(&c, words, limits)? {
            let table = col.colors().iter().map(|&w| message(s, k, w)).collect();
            return Ok(Some((k, IndexCode::table(s, g.n(), k, table)?)));
        }
    }
    Ok(None)
}

/// Truth tables over `Σ^k` as bitmasks need `s^k` bits.
/// Most codewords a truth-table colour may range over.
pub const MAX_TABLE_WORDS: u128 = 1 << 16;

/// A set of codewords, one bit per word index.
type Table = Vec<u64>;

fn table_words(code: &IndexCode) -> Result<usize> {
    let words = pow(code.s, code.k).unwrap_or(u128::MAX);
    guard("codewords s^k for truth-table colours", words, MAX_TABLE_WORDS)?;
    Ok(words as usize)
}

fn empty_table(words: usize) -> Table {
    vec![0; words.div_ceil(64).max(1)]
}

fn insert(t: &mut Table, w: usize) {
    t[w / 64] |= 1 << (w % 64);
}

/// For receiver `i`: which codewords force a nonzero `x_i` when all of its
/// side information is zero. Codewords outside that slice of the image
/// decode to 0.
fn nonzero_on_zero_side(x_graph: &Graph, i: usize, messages: &[Vec<u32>], words: &[usize], total: usize) -> Table {
    let mut t = empty_table(total);
    for (x, &w) in messages.iter().zip(words) {
        if x[i] != 0 && x_graph.neighbors(i).all(|j| x[j] == 0) {
            insert(&mut t, w);
        }
    }
    t
}

/// Per receiver, the set of codewords on which the decoder outputs a
/// nonzero symbol given all-zero side information.
fn zero_side_tables(x_graph: &Graph, code: &IndexCode) -> Result<Vec<Table>> {
    let total = table_words(code)?;
    if let Encoder::Linear(a) = &code.encoder {
        // x with x_N = 0 and A x = y: solve over the columns outside N
        return Ok((0..code.n)
            .map(|i| {
                let keep: Vec<usize> = (0..code.n).filter(|&j| !x_graph.has_edge(i, j)).collect();
                let pos = keep.iter().position(|&j| j == i).expect("no loops");
                let mut sub = GfMatrix::zeros(a.field(), a.rows(), keep.len());
                for r in 0..a.rows() {
                    for (c, &j) in keep.iter().enumerate() {
                        sub.set(r, c, a.get(r, j));
                    }
                }
                let mut t = empty_table(total);
                for w in 0..total {
                    if matches!(sub.solve(&message(code.s, code.k, w)), Some(z) if z[pos] != 0) {
                        insert(&mut t, w);
                    }
                }
                t
            })
            .collect());
    }
    let (messages, words) = all_words(code)?;
    Ok((0..code.n)
        .map(|i| nonzero_on_zero_side(x_graph, i, &messages, &words, total))
        .collect())
}

fn all_words(code: &IndexCode) -> Result<(Vec<Vec<u32>>, Vec<usize>)> {
    let count = message_count(code.s, code.n)?;
    let messages: Vec<Vec<u32>> = (0..count).map(|i| message(code.s, code.n, i)).collect();
    let words = messages.iter().map(|x| word_index(code.s, &code.encode(x))).collect();
    Ok((messages, words))
}

/// Truth tables as colours. With at most 63 codewords the colour is the
/// table read as a bitmask and the palette is `2^(s^k)`. Wider tables are
/// numbered by rank among the distinct tables that occur, so the palette is
/// the number of distinct tables, which is at most `2^(s^k)`.
fn tables_to_coloring(tables: Vec<Table>, words: usize) -> Result<Coloring> {
    if words <= 63 {
        let colors = tables.iter().map(|t| t[0] as usize).collect();
        return Coloring::new(colors, 1 << words);
    }
    let mut distinct = tables.clone();
    distinct.sort();
    distinct.dedup();
    let colors = tables
        .iter()
        .map(|t| distinct.binary_search(t).expect("present"))
        .collect();
    Coloring::new(colors, distinct.len())
}

/// A proper colouring of `g` from an index code for its complement: vertex
/// `i` gets the truth table of `y -> [decoder i outputs nonzero on codeword
/// y with all-zero side information]`.
pub fn coloring_from_index_code(g: &Graph, code: &IndexCode) -> Result<Coloring> {
    let gc = g.complement();
    if !verify_index_code(&gc, code)? {
        return Err(Error::InvalidInput("not an index code for the complement".into()));
    }
    let tables = zero_side_tables(&gc, code)?;
    let c = tables_to_coloring(tables, table_words(code)?)?;
    debug_assert!(crate::chromatic::verify_coloring(g, &c));
    Ok(c)
}

/// A proper colouring of `g` from an index code for the complement of `H`
/// (receivers in line-digraph vertex order): vertex `v` gets the truth table
/// of `y -> [some receiver (u, v) outputs nonzero on y with all-zero side
/// information]`.
pub fn line_coloring_from_index_code(g: &Graph, code: &IndexCode) -> Result<Coloring> {
    let line = line_digraph(g);
    let hc = line.underlying().complement();
    if !verify_index_code(&hc, code)? {
        return Err(Error::InvalidInput("not an index code for the complement of H".into()));
    }
    let words = table_words(code)?;
    let tables = zero_side_tables(&hc, code)?;
    let colors = (0..g.n())
        .map(|v| {
            line.in_arcs(v).into_iter().fold(empty_table(words), |mut acc, a| {
                for (x, y) in acc.iter_mut().zip(&tables[a]) {
                    *x |= y;
                }
                acc
            })
        })
        .collect();
    tables_to_coloring(colors, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::verify_coloring;
    use crate::graph::generators::{complete, cycle, path, random};
    use crate::params::minrank;
    use crate::params::ParamOptions;
    use proptest::prelude::*;

    fn gf2() -> Field {
        Field::new(2).unwrap()
    }

    fn xor_code(n: usize) -> IndexCode {
        IndexCode::linear(GfMatrix::from_reduced_rows(gf2(), n, &[vec![1; n]]))
    }

    #[test]
    fn verify_examples() {
        assert!(verify_index_code(&complete(2), &xor_code(2)).unwrap());
        let first = IndexCode::linear(GfMatrix::from_reduced_rows(gf2(), 2, &[vec![1, 0]]));
        assert!(!verify_index_code(&Graph::empty(2), &first).unwrap());
        for g in [Graph::empty(3), cycle(4), complete(3)] {
            assert!(verify_index_code(&g, &IndexCode::identity(gf2(), g.n())).unwrap());
        }
        assert!(!verify_index_code(&complete(3), &xor_code(2)).unwrap());
    }

    #[test]
    fn table_and_linear_agree() {
        let code = xor_code(3);
        let t = IndexCode::table(2, 3, 1, code.to_table().unwrap()).unwrap();
        for i in 0..8 {
            let x = message(2, 3, i);
            assert_eq!(t.encode(&x), code.encode(&x));
        }
        assert!(verify_index_code(&complete(3), &t).unwrap());
        assert!(IndexCode::table(2, 2, 1, vec![vec![0]; 3]).is_err());
        assert!(IndexCode::table(2, 1, 1, vec![vec![0], vec![2]]).is_err());
    }

    #[test]
    fn message_order() {
        assert_eq!(message(2, 3, 1), vec![0, 0, 1]);
        assert_eq!(message(3, 2, 5), vec![1, 2]);
        assert_eq!(word_index(3, &[1, 2]), 5);
    }

    #[test]
    fn guard() {
        let g = Graph::empty(21);
        assert!(verify_index_code_exhaustive(&g, &IndexCode::identity(gf2(), 21)).unwrap_err().is_unknown());
        assert!(verify_index_code(&g, &IndexCode::identity(gf2(), 21)).unwrap());
    }

    fn linear_code(q: u32, n: usize, rows: Vec<Vec<u32>>) -> IndexCode {
        IndexCode::linear(GfMatrix::from_reduced_rows(Field::new(q).unwrap(), n, &rows))
    }

    fn as_table(code: &IndexCode) -> IndexCode {
        IndexCode::table(code.alphabet(), code.receivers(), code.length(), code.to_table().unwrap()).unwrap()
    }

    proptest! {
        #[test]
        fn algebraic_matches_exhaustive(
            q in prop::sample::select(vec![2u32, 3]),
            n in 1usize..=5,
            k in 0usize..=3,
            seed in any::<u64>(),
            p in 0.0f64..1.0,
        ) {
            let g = random(n, p, seed);
            let mut state = seed;
            let rows: Vec<Vec<u32>> = (0..k)
                .map(|_| (0..n).map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % q as u64) as u32
                }).collect())
                .collect();
            let code = linear_code(q, n, rows);
            let fast = verify_index_code(&g, &code).unwrap();
            prop_assert_eq!(fast, verify_index_code_exhaustive(&g, &code).unwrap());
            if fast && code.length() > 0 {
                let gcomp = g.complement();
                let a = coloring_from_index_code(&gcomp, &code).unwrap();
                let b = coloring_from_index_code(&gcomp, &as_table(&code)).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn linear_from_matrix_examples() {
        let k2 = complete(2);
        let ones = ReprMatrix { matrix: GfMatrix::from_reduced_rows(gf2(), 2, &[vec![1, 1], vec![1, 1]]), rank: 1 };
        let c = linear_code_from_matrix(&k2, &ones).unwrap();
        assert_eq!(c.length(), 1);
        assert_eq!(c, xor_code(2));

        let e = Graph::empty(4);
        let id = ReprMatrix { matrix: GfMatrix::identity(gf2(), 4), rank: 4 };
        let c = linear_code_from_matrix(&e, &id).unwrap();
        assert_eq!(c, IndexCode::identity(gf2(), 4));

        let c5 = cycle(5);
        let w = minrank(&c5, gf2(), 5, &ParamOptions::default()).unwrap().unwrap();
        let c = linear_code_from_matrix(&c5, &w.witness.matrix).unwrap();
        assert_eq!(c.length(), 3);
        assert!(verify_index_code(&c5, &c).unwrap());

        let bad = ReprMatrix { matrix: GfMatrix::zeros(gf2(), 2, 2), rank: 0 };
        assert!(linear_code_from_matrix(&k2, &bad).is_err());
    }

    /// All encoders `Σ^n -> Σ^k` tried, smallest `k` first.
    fn naive_optimum(g: &Graph, s: u32) -> usize {
        let n = g.n();
        let count = s.pow(n as u32) as usize;
        (0..)
            .find(|&k| {
                let words = s.pow(k as u32) as usize;
                let total = words.pow(count as u32);
                (0..total).any(|mut code| {
                    let table: Vec<Vec<u32>> = (0..count)
                        .map(|_| {
                            let w = code % words;
                            code /= words;
                            message(s, k, w)
                        })
                        .collect();
                    verify_index_code(g, &IndexCode::table(s, n, k, table).unwrap()).unwrap()
                })
            })
            .unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let lim = SearchLimits::unlimited();
        let opt = |g: &Graph, s| {
            let (k, code) = optimal_index_code_bruteforce(g, s, 4, &lim).unwrap().unwrap();
            assert!(verify_index_code(g, &code).unwrap());
            k
        };
        assert_eq!(opt(&Graph::empty(2), 2), 2);
        assert_eq!(opt(&complete(2), 2), 1);
        assert_eq!(opt(&complete(3), 2), 1);
        for g in [Graph::empty(2), complete(2), complete(3), path(3), Graph::empty(1), Graph::empty(0)] {
            assert_eq!(opt(&g, 2), naive_optimum(&g, 2));
        }
        assert_eq!(opt(&complete(2), 3), naive_optimum(&complete(2), 3));
        assert!(optimal_index_code_bruteforce(&cycle(5), 2, 5, &lim).unwrap_err().is_unknown());
        assert!(optimal_index_code_bruteforce(&Graph::empty(3), 2, 2, &lim).unwrap().is_none());
    }

    #[test]
    fn bruteforce_at_most_minrank() {
        let lim = SearchLimits::unlimited();
        for seed in 0..10 {
            let g = random(4, 0.5, seed);
            let (k, _) = optimal_index_code_bruteforce(&g, 2, 4, &lim).unwrap().unwrap();
            let r = minrank(&g, gf2(), 4, &ParamOptions::default()).unwrap().unwrap();
            assert!(k <= r.value);
        }
    }

    #[test]
    fn extraction_examples() {
        let k2 = complete(2);
        let c = coloring_from_index_code(&k2, &IndexCode::identity(gf2(), 2)).unwrap();
        assert!(verify_coloring(&k2, &c));
        assert_eq!(c.palette(), 16);

        for g in [cycle(5), complete(4), random(5, 0.5, 3)] {
            let c = coloring_from_index_code(&g, &IndexCode::identity(gf2(), g.n())).unwrap();
            assert!(verify_coloring(&g, &c));
        }

        let single = Graph::empty(1);
        let c = coloring_from_index_code(&single, &IndexCode::identity(gf2(), 1)).unwrap();
        assert_eq!(c.used(), 1);

        assert!(coloring_from_index_code(&k2, &xor_code(2)).is_err());
    }

    #[test]
    fn line_extraction_examples() {
        let k2 = complete(2);
        let c = line_coloring_from_index_code(&k2, &IndexCode::identity(gf2(), 2)).unwrap();
        assert!(verify_coloring(&k2, &c));

        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let c = line_coloring_from_index_code(&g, &IndexCode::identity(gf2(), 2)).unwrap();
        assert_eq!(c.color(2), 0);
        assert!(verify_coloring(&g, &c));

        let c5 = cycle(5);
        let hc = line_digraph(&c5).underlying().complement();
        let w = minrank(&hc, gf2(), 6, &ParamOptions::default()).unwrap().unwrap();
        let code = linear_code_from_matrix(&hc, &w.witness.matrix).unwrap();
        let c = line_coloring_from_index_code(&c5, &code).unwrap();
        assert!(verify_coloring(&c5, &c));
        assert_eq!(c.palette(), 1 << (1 << code.length()));
    }

    #[test]
    fn wide_tables_are_ranked() {
        let g = random(7, 0.5, 4);
        let c = coloring_from_index_code(&g, &IndexCode::identity(gf2(), 7)).unwrap();
        assert!(verify_coloring(&g, &c));
        assert_eq!(c.palette(), c.used());

        let gf3 = Field::new(3).unwrap();
        let k4 = complete(4);
        let hc = line_digraph(&k4).underlying().complement();
        let w = minrank(&hc, gf3, 6, &ParamOptions::default()).unwrap().unwrap();
        let code = linear_code_from_matrix(&hc, &w.witness.matrix).unwrap();
        assert!(3usize.pow(code.length() as u32) > 63);
        let c = line_coloring_from_index_code(&k4, &code).unwrap();
        assert!(verify_coloring(&k4, &c));
        assert_eq!(c.used(), 4);
    }
}
