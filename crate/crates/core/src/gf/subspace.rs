use std::cmp::Ordering;
use std::fmt;

use super::{Field, GfMatrix, GfVector};
use crate::error::{guard, Error, Result};

/// Limits for exhaustive subspace work. Defaults keep `q <= 5`, `n <= 4`,
/// and at most 2^20 vectors per subspace scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubspaceGuard {
    pub max_q: u32,
    pub max_n: usize,
    pub max_vectors: u128,
}

impl Default for SubspaceGuard {
    fn default() -> Self {
        SubspaceGuard {
            max_q: 5,
            max_n: 4,
            max_vectors: 1 << 20,
        }
    }
}

/// A subspace of GF(q)^n stored by its unique RREF basis.
///
/// Two values compare equal iff they are the same subspace. The ordering is
/// by dimension, then by the flattened RREF basis; this is the canonical
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: GfMatrix,
}

impl Subspace {
    pub fn zero(field: Field, n: usize) -> Subspace {
        Subspace {
            ambient: n,
            basis: GfMatrix::zeros(field, 0, n),
        }
    }

    pub fn full(field: Field, n: usize) -> Subspace {
        Subspace {
            ambient: n,
            basis: GfMatrix::identity(field, n),
        }
    }

    /// Span of the given coordinate vectors (already reduced mod q).
    pub fn span_rows(field: Field, n: usize, rows: &[Vec<u32>]) -> Subspace {
        let m = GfMatrix::from_reduced_rows(field, n, rows);
        let (basis, _) = m.rref();
        Subspace { ambient: n, basis }
    }

    pub fn span(field: Field, n: usize, vectors: &[GfVector]) -> Result<Subspace> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.q(),
                    right: v.field().q(),
                });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: v.len(),
                });
            }
            rows.push(v.coords().to_vec());
        }
        Ok(Subspace::span_rows(field, n, &rows))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &GfMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<GfVector> {
        self.basis
            .row_vecs()
            .into_iter()
            .map(|r| GfVector::from_reduced(self.field(), r))
            .collect()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        GfMatrix::from_reduced_rows(self.field(), self.ambient, &rows).rank() == self.dim()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().q(),
                right: other.field().q(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// `U^⊥ = { w : <w,u> = 0 for all u in U }`.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        let ns = self.basis.null_space();
        Subspace::span_rows(self.field(), self.ambient, &ns)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.basis.row_vecs();
        rows.extend(other.basis.row_vecs());
        Ok(Subspace::span_rows(self.field(), self.ambient, &rows))
    }

    /// `U ∩ W`, computed as the null space of the stacked complements.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.orthogonal_complement().basis.row_vecs();
        rows.extend(other.orthogonal_complement().basis.row_vecs());
        if rows.is_empty() {
            return Ok(Subspace::full(self.field(), self.ambient));
        }
        let stacked = GfMatrix::from_reduced_rows(self.field(), self.ambient, &rows);
        Ok(Subspace::span_rows(
            self.field(),
            self.ambient,
            &stacked.null_space(),
        ))
    }

    /// Number of vectors, `q^dim`, or `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        self.field().checked_power(self.dim())
    }

    /// All vectors of the subspace (including zero), as coefficient
    /// combinations of the basis in lexicographic coefficient order.
    pub fn vectors(&self, guard_cfg: &SubspaceGuard) -> Result<Vec<Vec<u32>>> {
        let size = self.size().unwrap_or(u128::MAX);
        guard("vectors in subspace", size, guard_cfg.max_vectors)?;
        let f = self.field();
        let k = self.dim();
        let mut out = Vec::with_capacity(size as usize);
        for coeffs in super::all_vectors(f, k) {
            let mut v = vec![0u32; self.ambient];
            for (i, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, x) in v.iter_mut().enumerate() {
                    *x = f.add(*x, f.mul(c, self.basis.get(i, j)));
                }
            }
            out.push(v);
        }
        Ok(out)
    }

    /// The lexicographically least vector `w` of the subspace with `<w,w> != 0`.
    ///
    /// Self-orthogonality is scale invariant, so the result always has leading
    /// coordinate 1.
    pub fn find_nonisotropic(&self, guard_cfg: &SubspaceGuard) -> Result<Option<GfVector>> {
        let f = self.field();
        Ok(self
            .vectors(guard_cfg)?
            .into_iter()
            .filter(|v| f.dot(v, v) != 0)
            .min()
            .map(|v| GfVector::from_reduced(f, v)))
    }

    /// Spanned by the standard unit vectors with the given indices.
    pub fn coordinate(field: Field, n: usize, indices: &[usize]) -> Subspace {
        let rows: Vec<Vec<u32>> = indices
            .iter()
            .map(|&i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        Subspace::span_rows(field, n, &rows)
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field(), self.ambient, self.dim(), self.basis.data()).cmp(&(
            other.field(),
            other.ambient,
            other.dim(),
            other.basis.data(),
        ))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 0 {
            return f.write_str("{0}");
        }
        f.write_str("span{")?;
        for (i, v) in self.basis_vectors().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// `U^⊥` of `u`.
pub fn orthogonal_complement(u: &Subspace) -> Subspace {
    u.orthogonal_complement()
}

pub fn intersect(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.intersect(w)
}

pub fn find_nonisotropic(u: &Subspace, guard_cfg: &SubspaceGuard) -> Result<Option<GfVector>> {
    u.find_nonisotropic(guard_cfg)
}

/// Every subspace of GF(q)^n exactly once, in canonical order.
///
/// Walks RREF shapes directly: for each pivot set, every assignment of the
/// free entries right of each pivot that are not in a pivot column.
pub fn enumerate_subspaces(field: Field, n: usize, guard_cfg: &SubspaceGuard) -> Result<Vec<Subspace>> {
    guard("field size", field.q() as u128, guard_cfg.max_q as u128)?;
    guard("ambient dimension", n as u128, guard_cfg.max_n as u128)?;
    let q = field.q();
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let mut free = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for c in p + 1..n {
                    if !pivots.contains(&c) {
                        free.push((i, c));
                    }
                }
            }
            for assignment in super::all_vectors(field, free.len()) {
                let mut basis = GfMatrix::zeros(field, k, n);
                for (i, &p) in pivots.iter().enumerate() {
                    basis.set(i, p, 1);
                }
                for (&(i, c), &v) in free.iter().zip(&assignment) {
                    debug_assert!(v < q);
                    basis.set(i, c, v);
                }
                out.push(Subspace { ambient: n, basis });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Whether GF(q)^n contains a nonzero self-orthogonal vector, by enumeration.
pub fn has_nonzero_isotropic(field: Field, n: usize, guard_cfg: &SubspaceGuard) -> Result<bool> {
    let size = field.checked_power(n).unwrap_or(u128::MAX);
    guard("vectors in ambient space", size, guard_cfg.max_vectors)?;
    Ok(super::all_vectors(field, n).any(|v| v.iter().any(|&c| c != 0) && field.dot(&v, &v) == 0))
}
