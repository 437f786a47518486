//! Canonical subspaces of a fixed coordinate space.
//!
//! A subspace is stored as the reduced row-echelon basis of its row space,
//! with zero rows dropped. Two subspaces are equal exactly when their basis
//! matrices are identical, which makes the set equalities of the
//! correspondence layer decidable by direct comparison.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FieldKind, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub field: FieldKind,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Which factor of a bilinear pairing a subspace lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingSide {
    Left,
    Right,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, field: FieldKind) -> Subspace {
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::zero(0, ambient_dim, field),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize, field: FieldKind) -> Subspace {
        Subspace::from_matrix(Matrix::identity(ambient_dim, field))
    }

    /// Canonicalize a spanning set.
    pub fn from_matrix(m: Matrix) -> Subspace {
        let ambient_dim = m.cols;
        let field = m.field;
        let (r, pivots) = m.rref_with_pivots();
        let rows: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::from_rows(rows, ambient_dim, field),
            pivots,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, ambient_dim: usize, field: FieldKind) -> Subspace {
        Subspace::from_matrix(Matrix::from_rows(rows, ambient_dim, field))
    }

    pub fn span_of(vectors: &[Vec<Scalar>], ambient_dim: usize, field: FieldKind) -> Subspace {
        Subspace::from_rows(vectors.to_vec(), ambient_dim, field)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.rows_vec()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// Canonical residue of `v` modulo this subspace; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut v = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for j in 0..self.ambient_dim {
                v[j] = v[j].sub(&c.mul(self.basis.get(row, j)));
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` over the canonical basis, if `v` is a member.
    pub fn express(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            coords.push(c.clone());
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient_dim {
                v[j] = v[j].sub(&c.mul(self.basis.get(row, j)));
            }
        }
        if v.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(rows, self.ambient_dim, self.field))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // Left kernel of the stacked matrix [U; V] gives the relations
        // alpha·U + beta·V = 0, and alpha·U then spans the intersection.
        let ru = self.dim();
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        let stacked = Matrix::from_rows(rows, self.ambient_dim, self.field);
        let left_kernel = stacked.transpose().kernel_basis();
        let vectors: Vec<Vec<Scalar>> = left_kernel
            .iter()
            .map(|coef| {
                let mut v = vec![self.field.zero(); self.ambient_dim];
                for (i, c) in coef[..ru].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient_dim {
                        v[j] = v[j].add(&c.mul(self.basis.get(i, j)));
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_rows(vectors, self.ambient_dim, self.field))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other
            .basis_rows()
            .iter()
            .all(|row| self.contains_vector(row)))
    }

    /// Orthogonal complement under a bilinear pairing given by its matrix
    /// (rows index the left space, columns the right space). With
    /// `PairingSide::Left` the subspace lives in the left factor and the
    /// complement {y : ⟨x, y⟩ = 0 for all x} is returned in the right
    /// factor; `PairingSide::Right` is the mirror image.
    pub fn ortho_complement(&self, pairing: &Matrix, side: PairingSide) -> Result<Subspace> {
        let (my_dim, other_dim) = match side {
            PairingSide::Left => (pairing.rows, pairing.cols),
            PairingSide::Right => (pairing.cols, pairing.rows),
        };
        if self.ambient_dim != my_dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace ambient {} does not match pairing side of dimension {}",
                self.ambient_dim, my_dim
            )));
        }
        // conditions: one row per basis vector of self
        let cond = match side {
            PairingSide::Left => self.basis.matmul(pairing),
            PairingSide::Right => self.basis.matmul(&pairing.transpose()),
        };
        let kernel = cond.kernel_basis();
        Ok(Subspace::from_rows(kernel, other_dim, self.field))
    }
}

/// Subspace spanned by the kernel of a matrix (right null space).
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::from_rows(m.kernel_basis(), m.cols, m.field)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rational;

    fn span(rows: &[&[i64]], ambient: usize) -> Subspace {
        let s = Subspace::from_matrix(Matrix::from_i64(rows, Q));
        assert_eq!(s.ambient_dim, ambient);
        s
    }

    #[test]
    fn lattice_examples() {
        let e1 = span(&[&[1, 0]], 2);
        let e2 = span(&[&[0, 1]], 2);
        let full = Subspace::full(2, Q);
        assert_eq!(e1.sum(&e2).unwrap(), full);

        let diag = span(&[&[1, 1]], 2);
        assert!(e1.intersect(&diag).unwrap().is_zero());
        assert!(full.contains(&diag).unwrap());
        assert!(full.contains(&Subspace::zero(2, Q)).unwrap());
    }

    #[test]
    fn dimension_formula() {
        let u = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let v = span(&[&[0, 1, 1], &[1, 0, 1]], 3);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert_eq!(u.dim() + v.dim(), s.dim() + i.dim());
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let u = span(&[&[1, 0]], 2);
        let v = span(&[&[1, 0, 0]], 3);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
        assert!(u.contains(&v).is_err());
    }

    #[test]
    fn ortho_complement_examples() {
        let id = Matrix::identity(3, Q);
        let zero = Subspace::zero(3, Q);
        assert_eq!(
            zero.ortho_complement(&id, PairingSide::Left).unwrap(),
            Subspace::full(3, Q)
        );
        let e1 = span(&[&[1, 0, 0]], 3);
        let c = e1.ortho_complement(&id, PairingSide::Left).unwrap();
        assert_eq!(c, span(&[&[0, 1, 0], &[0, 0, 1]], 3));
    }

    #[test]
    fn ortho_involution_nondegenerate() {
        let pairing = Matrix::from_i64(&[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]], Q);
        assert!(pairing.is_invertible());
        let s = span(&[&[1, 5, 0], &[0, 2, 1]], 3);
        let c = s.ortho_complement(&pairing, PairingSide::Left).unwrap();
        assert_eq!(s.dim() + c.dim(), 3);
        let back = c.ortho_complement(&pairing, PairingSide::Right).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn express_coordinates() {
        let s = span(&[&[1, 0, 2], &[0, 1, 3]], 3);
        let v: Vec<Scalar> = [2, -1, 1].iter().map(|&x| Q.from_i64(x)).collect();
        let coords = s.express(&v).unwrap();
        assert_eq!(coords, vec![Q.from_i64(2), Q.from_i64(-1)]);
        let w: Vec<Scalar> = [0, 0, 1].iter().map(|&x| Q.from_i64(x)).collect();
        assert!(s.express(&w).is_none());
    }
}
