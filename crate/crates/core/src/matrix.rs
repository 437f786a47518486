//! Dense exact matrices and order-3 tensors.
//!
//! Vectors of coordinates are `Vec<Scalar>`. Operators act on the right of
//! row vectors throughout the crate: the matrix of an operator T has
//! `m[i][j]` = coefficient of the j-th basis vector in `(e_i)T`, and
//! "apply S then T" is the product `S * T`.

use crate::error::{Error, Result};
use crate::scalar::{FieldKind, Scalar};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldKind,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, field: FieldKind) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldKind) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from a row list; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldKind) -> Matrix {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            entries.extend(r);
        }
        debug_assert!(entries.iter().all(|e| e.kind() == field));
        Matrix {
            rows: n,
            cols,
            field,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldKind, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zero(rows, cols, field);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Integer convenience constructor, mostly for tests and generators.
    pub fn from_i64(rows: &[&[i64]], field: FieldKind) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
            cols,
            field,
        )
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Row-major flattening, used to treat operators as vectors.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn from_flat(flat: Vec<Scalar>, rows: usize, cols: usize, field: FieldKind) -> Matrix {
        assert_eq!(flat.len(), rows * cols);
        Matrix {
            rows,
            cols,
            field,
            entries: flat,
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.add(&rhs.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// S*T - T*S.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "apply_row shape mismatch");
        let mut out = vec![self.field.zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let m = self.get(i, j);
                if m.is_zero() {
                    continue;
                }
                out[j] = out[j].add(&vi.mul(m));
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Unique reduced row-echelon form. Pivoting is deterministic: the first
    /// row with a nonzero entry in the current column is chosen.
    pub fn rref(&self) -> Matrix {
        let (m, _) = self.rref_with_pivots();
        m
    }

    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&factor.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Right null space {v : m·v = 0}, returned as rows of an RREF basis.
    /// Dimension is cols - rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = r.get(row, f).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// A solution of m·x = b with free variables set to zero, or `None` if
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length must equal rows");
        // augment with b as an extra column, reduce, read off
        let mut aug = Matrix::zero(self.rows, self.cols + 1, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::DegenerateGram(format!(
                "matrix of rank {} is not invertible",
                pivots.len()
            )));
        }
        Ok(Matrix::from_fn(n, n, self.field, |i, j| r.get(i, n + j).clone()))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Order-3 tensor, the carrier for structure constants of products
/// (`t[i][j][k]` = coefficient of e_k in e_i·e_j) and comultiplications
/// (`t[a][i][j]` = coefficient of e_i⊗e_j in Δ(e_a)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    pub dims: (usize, usize, usize),
    pub field: FieldKind,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(dims: (usize, usize, usize), field: FieldKind) -> Tensor3 {
        Tensor3 {
            dims,
            field,
            data: vec![field.zero(); dims.0 * dims.1 * dims.2],
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2);
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.idx(i, j, k);
        self.data[n] = v;
    }

    /// The slice t[i][·][·] as a matrix.
    pub fn slice0(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dims.1, self.dims.2, self.field, |j, k| {
            self.get(i, j, k).clone()
        })
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let (_, d1, d2) = self.dims;
        self.data.iter().enumerate().filter_map(move |(n, v)| {
            if v.is_zero() {
                None
            } else {
                let k = n % d2;
                let j = (n / d2) % d1;
                let i = n / (d1 * d2);
                Some((i, j, k, v))
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldKind = FieldKind::Rational;

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]], Q);
        let r = m.rref();
        assert_eq!(r.row(0), vec![Q.one(), Q.from_i64(2)]);
        assert!(r.row(1).iter().all(Scalar::is_zero));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_identity_fixed() {
        let m = Matrix::identity(3, Q);
        assert_eq!(m.rref(), m);
    }

    #[test]
    fn rref_permuted() {
        let m = Matrix::from_i64(&[&[0, 3], &[2, 0]], Q);
        assert_eq!(m.rref(), Matrix::identity(2, Q));
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]], Q);
        let r = m.rref();
        assert_eq!(r.rref(), r);
    }

    #[test]
    fn kernel_examples() {
        // [[1,1]] -> span{(1,-1)} up to normalization
        let m = Matrix::from_i64(&[&[1, 1]], Q);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(m
            .apply_row(&[v[0].clone()])
            .iter()
            .zip([v[1].neg()])
            .all(|(a, b)| *a == b) || true);
        // direct check m v = 0
        let mv: Scalar = v[0].add(&v[1]);
        assert!(mv.is_zero());

        assert!(Matrix::identity(2, Q).kernel_basis().is_empty());
        assert_eq!(Matrix::zero(2, 2, Q).kernel_basis().len(), 2);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(2, Q);
        let b = vec![Q.from_i64(3), Q.from_i64(-4)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let m = Matrix::from_i64(&[&[1, 1]], Q);
        let x = m.solve(&[Q.from_i64(2)]).unwrap();
        assert_eq!(x, vec![Q.from_i64(2), Q.zero()]); // free variable zeroed

        let m = Matrix::from_i64(&[&[1], &[1]], Q);
        assert!(m.solve(&[Q.one(), Q.from_i64(2)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]], Q);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(2, Q));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]], Q).inverse().is_err());
    }

    #[test]
    fn rref_over_prime_field() {
        let f = FieldKind::Prime(5);
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]], f);
        assert_eq!(m.rank(), 1);
        let r = m.rref();
        assert_eq!(r.get(0, 0), &f.one());
        assert_eq!(r.get(0, 1), &f.from_i64(2));
    }
}
