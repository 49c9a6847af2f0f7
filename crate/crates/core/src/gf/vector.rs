use std::fmt;

use super::Field;
use crate::error::{Error, Result};

/// A vector of GF(q)^n with reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfVector {
    field: Field,
    coords: Vec<u32>,
}

impl GfVector {
    pub fn new(field: Field, coords: impl IntoIterator<Item = i64>) -> GfVector {
        GfVector {
            field,
            coords: coords.into_iter().map(|c| field.reduce(c)).collect(),
        }
    }

    /// Builds from coordinates already in `[0, q)`.
    pub fn from_reduced(field: Field, coords: Vec<u32>) -> GfVector {
        debug_assert!(coords.iter().all(|&c| c < field.q()));
        GfVector { field, coords }
    }

    pub fn zero(field: Field, n: usize) -> GfVector {
        GfVector {
            field,
            coords: vec![0; n],
        }
    }

    pub fn unit(field: Field, n: usize, i: usize) -> GfVector {
        let mut v = GfVector::zero(field, n);
        v.coords[i] = 1;
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `<x, x> = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.field.dot(&self.coords, &self.coords) == 0
    }

    /// The projective representative: first nonzero coordinate scaled to 1.
    pub fn normalized(&self) -> GfVector {
        match self.coords.iter().find(|&&c| c != 0) {
            None => self.clone(),
            Some(&lead) => {
                let s = self.field.inv(lead).expect("nonzero lead");
                self.scaled(s)
            }
        }
    }

    pub fn scaled(&self, s: u32) -> GfVector {
        GfVector {
            field: self.field,
            coords: self.coords.iter().map(|&c| self.field.mul(c, s)).collect(),
        }
    }
}

/// Standard bilinear form `sum x_i y_i` over the common field.
pub fn inner_product(x: &GfVector, y: &GfVector) -> Result<u32> {
    if x.field != y.field {
        return Err(Error::FieldMismatch {
            left: x.field.q(),
            right: y.field.q(),
        });
    }
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.field.dot(&x.coords, &y.coords))
}

/// Every vector of GF(q)^n in lexicographic order (first coordinate most significant).
pub fn all_vectors(field: Field, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let q = field.q();
    let mut next = Some(vec![0u32; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < q {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    })
}

/// Nonzero vectors whose first nonzero coordinate is 1, in lexicographic order.
pub fn projective_points(field: Field, n: usize) -> impl Iterator<Item = Vec<u32>> {
    all_vectors(field, n).filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
}

impl fmt::Display for GfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
