//! Exact arithmetic and linear algebra over prime fields GF(q).

mod field;
mod matrix;
mod subspace;
mod vector;

pub use field::{Field, MAX_MODULUS};
pub use matrix::{rank, GfMatrix};
pub use subspace::{
    combinations, enumerate_subspaces, find_nonisotropic, has_nonzero_isotropic, intersect,
    orthogonal_complement, Subspace, SubspaceGuard,
};
pub use vector::{all_vectors, inner_product, projective_points, GfVector};
