//! Self-contained, re-checkable witnesses. Every certificate embeds its
//! graph as DIMACS text so it can be verified in isolation.

use serde::{Deserialize, Serialize};

use odlab_core::chromatic::{k_coloring, verify_coloring, Coloring};
use odlab_core::clique::is_clique;
use odlab_core::gf::{Field, GfMatrix, GfVector};
use odlab_core::graph::{parse_graph, serialize_graph, Graph};
use odlab_core::index_code::{verify_index_code, Encoder, IndexCode};
use odlab_core::params::{
    find_orth_rep, find_pair_rep, matrix_from_pairs, verify_orth_rep, verify_pair_rep, verify_repr_matrix,
    OrthRep, ParamOptions, ParamValue, PairRep, ReprMatrix,
};
use odlab_core::{Error, SearchLimits};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Exact chromatic number: a proper colouring with `value` colours, and
    /// either a clique of size `value` or a refutation at `value - 1`.
    ChromaticNumber {
        graph: String,
        value: usize,
        colors: Vec<usize>,
        clique: Vec<usize>,
    },
    /// Exact orthogonality dimension.
    OrthogonalityDimension {
        graph: String,
        field: u32,
        value: usize,
        vectors: Vec<Vec<u32>>,
        clique: Vec<usize>,
    },
    /// Exact minrank; `pairs` is a homomorphism from the complement into
    /// O'(F, value) whose Gram matrix is `matrix`, `clique` a clique of the
    /// complement.
    Minrank {
        graph: String,
        field: u32,
        value: usize,
        matrix: Vec<Vec<u32>>,
        pairs: Vec<[Vec<u32>; 2]>,
        clique: Vec<usize>,
    },
    /// An orthogonal representation (an upper bound only).
    OrthogonalRepresentation {
        graph: String,
        field: u32,
        dimension: usize,
        vectors: Vec<Vec<u32>>,
    },
    /// A proper colouring inside a palette (an upper bound only).
    Coloring {
        graph: String,
        palette: u64,
        colors: Vec<u64>,
    },
    /// A decodable index code for the graph.
    IndexCode { graph: String, code: CodeSpec },
}

/// Serialized index code: a linear encoding matrix or a full table of
/// codewords written as base-`alphabet` digit strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub alphabet: u32,
    pub receivers: usize,
    pub length: usize,
    pub encoder: EncoderSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EncoderSpec {
    Linear(Vec<Vec<u32>>),
    Table(Vec<String>),
}

const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

impl CodeSpec {
    pub fn from_code(code: &IndexCode) -> CodeSpec {
        let encoder = match code.encoder() {
            Encoder::Linear(m) => EncoderSpec::Linear(m.row_vecs()),
            Encoder::Table(t) => EncoderSpec::Table(
                t.iter()
                    .map(|w| w.iter().map(|&d| DIGITS[d as usize] as char).collect())
                    .collect(),
            ),
        };
        CodeSpec {
            alphabet: code.alphabet(),
            receivers: code.receivers(),
            length: code.length(),
            encoder,
        }
    }

    pub fn to_code(&self) -> Result<IndexCode, String> {
        match &self.encoder {
            EncoderSpec::Linear(rows) => {
                let f = Field::new(self.alphabet).map_err(|e| e.to_string())?;
                if rows.len() != self.length || rows.iter().any(|r| r.len() != self.receivers) {
                    return Err("encoding matrix shape disagrees with length and receivers".into());
                }
                let m = matrix(f, self.receivers, rows)?;
                Ok(IndexCode::linear(m))
            }
            EncoderSpec::Table(words) => {
                if self.alphabet as usize > DIGITS.len() {
                    return Err("table encoders support at most 36 symbols".into());
                }
                let table = words
                    .iter()
                    .map(|w| {
                        w.chars()
                            .map(|c| {
                                c.to_digit(36)
                                    .filter(|&d| d < self.alphabet)
                                    .ok_or_else(|| format!("bad symbol `{c}`"))
                            })
                            .collect::<Result<Vec<u32>, String>>()
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                IndexCode::table(self.alphabet, self.receivers, self.length, table).map_err(|e| e.to_string())
            }
        }
    }
}

fn matrix(f: Field, cols: usize, rows: &[Vec<u32>]) -> Result<GfMatrix, String> {
    if rows.iter().any(|r| r.len() != cols || r.iter().any(|&x| x >= f.q())) {
        return Err(format!("matrix entries must be {cols} per row and below {}", f.q()));
    }
    Ok(GfMatrix::from_reduced_rows(f, cols, rows))
}

fn vectors(f: Field, k: usize, vs: &[Vec<u32>]) -> Result<Vec<GfVector>, String> {
    vs.iter()
        .map(|v| {
            if v.len() != k || v.iter().any(|&x| x >= f.q()) {
                Err(format!("vector {v:?} is not in GF({})^{k}", f.q()))
            } else {
                Ok(GfVector::from_reduced(f, v.clone()))
            }
        })
        .collect()
}

/// Outcome of re-checking one certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Rejected(String),
    /// A minimality refutation could not finish within the limits.
    Unknown(String),
}

impl Certificate {
    pub fn chromatic(g: &Graph, value: usize, coloring: &Coloring, clique: &[usize]) -> Certificate {
        Certificate::ChromaticNumber {
            graph: serialize_graph(g),
            value,
            colors: coloring.colors().to_vec(),
            clique: clique.to_vec(),
        }
    }

    pub fn orthogonality_dimension(g: &Graph, r: &ParamValue<OrthRep>) -> Certificate {
        Certificate::OrthogonalityDimension {
            graph: serialize_graph(g),
            field: r.witness.field.q(),
            value: r.value,
            vectors: r.witness.vectors.iter().map(|v| v.coords().to_vec()).collect(),
            clique: r.clique.clone(),
        }
    }

    pub fn minrank(g: &Graph, r: &ParamValue<odlab_core::params::MinrankWitness>) -> Certificate {
        Certificate::Minrank {
            graph: serialize_graph(g),
            field: r.witness.pairs.field.q(),
            value: r.value,
            matrix: r.witness.matrix.matrix.row_vecs(),
            pairs: r
                .witness
                .pairs
                .pairs
                .iter()
                .map(|(u, w)| [u.coords().to_vec(), w.coords().to_vec()])
                .collect(),
            clique: r.clique.clone(),
        }
    }

    pub fn representation(g: &Graph, r: &OrthRep) -> Certificate {
        Certificate::OrthogonalRepresentation {
            graph: serialize_graph(g),
            field: r.field.q(),
            dimension: r.k,
            vectors: r.vectors.iter().map(|v| v.coords().to_vec()).collect(),
        }
    }

    pub fn coloring(g: &Graph, c: &Coloring) -> Certificate {
        Certificate::Coloring {
            graph: serialize_graph(g),
            palette: c.palette() as u64,
            colors: c.colors().iter().map(|&x| x as u64).collect(),
        }
    }

    pub fn index_code(g: &Graph, code: &IndexCode) -> Certificate {
        Certificate::IndexCode {
            graph: serialize_graph(g),
            code: CodeSpec::from_code(code),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ChromaticNumber { .. } => "chromatic_number",
            Certificate::OrthogonalityDimension { .. } => "orthogonality_dimension",
            Certificate::Minrank { .. } => "minrank",
            Certificate::OrthogonalRepresentation { .. } => "orthogonal_representation",
            Certificate::Coloring { .. } => "coloring",
            Certificate::IndexCode { .. } => "index_code",
        }
    }

    /// The number the certificate stands for: the exact value, the
    /// dimension, the palette size, or the code length.
    pub fn value(&self) -> u64 {
        match self {
            Certificate::ChromaticNumber { value, .. }
            | Certificate::OrthogonalityDimension { value, .. }
            | Certificate::Minrank { value, .. } => *value as u64,
            Certificate::OrthogonalRepresentation { dimension, .. } => *dimension as u64,
            Certificate::Coloring { palette, .. } => *palette,
            Certificate::IndexCode { code, .. } => code.length as u64,
        }
    }

    fn graph_text(&self) -> &str {
        match self {
            Certificate::ChromaticNumber { graph, .. }
            | Certificate::OrthogonalityDimension { graph, .. }
            | Certificate::Minrank { graph, .. }
            | Certificate::OrthogonalRepresentation { graph, .. }
            | Certificate::Coloring { graph, .. }
            | Certificate::IndexCode { graph, .. } => graph,
        }
    }

    /// Re-checks the witness from scratch. Exact-value certificates also
    /// re-run the refutation one below the claimed value unless their clique
    /// already rules it out.
    pub fn verify(&self, limits: &SearchLimits) -> Verdict {
        match self.check(limits) {
            Ok(()) => Verdict::Verified,
            Err(Check::Rejected(m)) => Verdict::Rejected(m),
            Err(Check::Unknown(m)) => Verdict::Unknown(m),
        }
    }

    fn check(&self, limits: &SearchLimits) -> Result<(), Check> {
        let g = parse_graph(self.graph_text()).map_err(|e| reject(format!("graph: {e}")))?.graph;
        let n = g.n();
        let opts = ParamOptions { limits: *limits, ..Default::default() };
        match self {
            Certificate::ChromaticNumber { value, colors, clique, .. } => {
                let c = Coloring::new(colors.clone(), *value).map_err(|e| reject(e.to_string()))?;
                ensure(verify_coloring(&g, &c), "colouring is not proper")?;
                check_clique(&g, clique, *value)?;
                if clique.len() < *value {
                    let lower = k_coloring(&g, value - 1, limits).map_err(unknown)?;
                    ensure(lower.is_none(), "a colouring with fewer colours exists")?;
                }
                Ok(())
            }
            Certificate::OrthogonalityDimension { field, value, vectors: vs, clique, .. } => {
                let f = Field::new(*field).map_err(|e| reject(e.to_string()))?;
                let rep = OrthRep { field: f, k: *value, vectors: vectors(f, *value, vs).map_err(reject)? };
                ensure(verify_orth_rep(&g, &rep), "vectors are not an orthogonal representation")?;
                ensure(n > 0 || *value == 0, "the empty graph has value 0")?;
                check_clique(&g, clique, *value)?;
                if clique.len() < *value {
                    let lower = find_orth_rep(&g, f, value - 1, &opts).map_err(unknown)?;
                    ensure(lower.is_none(), "a smaller representation exists")?;
                }
                Ok(())
            }
            Certificate::Minrank { field, value, matrix: rows, pairs, clique, .. } => {
                let f = Field::new(*field).map_err(|e| reject(e.to_string()))?;
                let m = ReprMatrix { matrix: matrix(f, n, rows).map_err(reject)?, rank: *value };
                ensure(rows.len() == n, "matrix must be square")?;
                ensure(verify_repr_matrix(&g, &m), "matrix does not represent the graph with the claimed rank")?;
                let gc = g.complement();
                if !pairs.is_empty() || n == 0 {
                    let pr = PairRep {
                        field: f,
                        k: *value,
                        pairs: pairs
                            .iter()
                            .map(|[u, w]| {
                                let v = vectors(f, *value, &[u.clone(), w.clone()])?;
                                Ok((v[0].clone(), v[1].clone()))
                            })
                            .collect::<Result<Vec<_>, String>>()
                            .map_err(reject)?,
                    };
                    ensure(verify_pair_rep(&gc, &pr), "pairs are not a homomorphism of the complement")?;
                    ensure(matrix_from_pairs(&pr).matrix == m.matrix, "matrix is not the Gram matrix of the pairs")?;
                }
                check_clique(&gc, clique, *value)?;
                if clique.len() < *value {
                    let lower = find_pair_rep(&gc, f, value - 1, &opts).map_err(unknown)?;
                    ensure(lower.is_none(), "a smaller rank is possible")?;
                }
                Ok(())
            }
            Certificate::OrthogonalRepresentation { field, dimension, vectors: vs, .. } => {
                let f = Field::new(*field).map_err(|e| reject(e.to_string()))?;
                let rep = OrthRep { field: f, k: *dimension, vectors: vectors(f, *dimension, vs).map_err(reject)? };
                ensure(verify_orth_rep(&g, &rep), "vectors are not an orthogonal representation")
            }
            Certificate::Coloring { palette, colors, .. } => {
                let palette = usize::try_from(*palette).map_err(|_| reject("palette too large".into()))?;
                let colors = colors.iter().map(|&c| c as usize).collect();
                let c = Coloring::new(colors, palette).map_err(|e| reject(e.to_string()))?;
                ensure(verify_coloring(&g, &c), "colouring is not proper")
            }
            Certificate::IndexCode { code, .. } => {
                let code = code.to_code().map_err(reject)?;
                ensure(code.receivers() == n, "receiver count differs from the graph")?;
                let ok = verify_index_code(&g, &code).map_err(unknown)?;
                ensure(ok, "some receiver cannot decode")
            }
        }
    }
}

enum Check {
    Rejected(String),
    Unknown(String),
}

fn reject(m: String) -> Check {
    Check::Rejected(m)
}

fn unknown(e: Error) -> Check {
    if e.is_unknown() {
        Check::Unknown(e.to_string())
    } else {
        Check::Rejected(e.to_string())
    }
}

fn ensure(ok: bool, msg: &str) -> Result<(), Check> {
    if ok {
        Ok(())
    } else {
        Err(Check::Rejected(msg.into()))
    }
}

fn check_clique(g: &Graph, clique: &[usize], value: usize) -> Result<(), Check> {
    ensure(clique.iter().all(|&v| v < g.n()), "clique vertex out of range")?;
    ensure(is_clique(g, clique), "claimed clique is not a clique")?;
    ensure(clique.len() <= value, "clique is larger than the claimed value")
}
