use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{inv_mod, mulmod, Field, Scalar};
use super::subspace::Subspace;
use super::LinalgError;

/// A dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows of scalars, rejecting ragged input and foreign scalars.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix, LinalgError> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Ragged { row: i, expected: cols, found: row.len() });
            }
            for s in row {
                if !field.owns(&s) {
                    return Err(LinalgError::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Column matrix from a vector.
    pub fn column(field: Field, v: &[Scalar]) -> Matrix {
        Matrix { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch(self.field, rhs.field));
        }
        if self.cols != rhs.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if let Field::Prime { p } = self.field {
            return Ok(self.mul_mod(rhs, p));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
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
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn mul_mod(&self, rhs: &Matrix, p: u32) -> Matrix {
        let a: Vec<u32> = self.data.iter().map(Scalar::residue).collect();
        let b: Vec<u32> = rhs.data.iter().map(Scalar::residue).collect();
        let mut acc = vec![0u64; self.rows * rhs.cols];
        for i in 0..self.rows {
            let row = &mut acc[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let x = a[i * self.cols + k] as u64;
                if x == 0 {
                    continue;
                }
                let brow = &b[k * rhs.cols..(k + 1) * rhs.cols];
                for (slot, &y) in row.iter_mut().zip(brow) {
                    *slot = (*slot + x * y as u64) % p as u64;
                }
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            data: acc
                .into_iter()
                .map(|v| Scalar::Modular { value: v as u32, modulus: p })
                .collect(),
        }
    }

    fn zip_with(&self, rhs: &Matrix, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix, LinalgError> {
        if self.field != rhs.field {
            return Err(LinalgError::FieldMismatch(self.field, rhs.field));
        }
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| op(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix width");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let zero = self.field.zero();
        Matrix::from_fn(self.field, self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => rhs.get(i - self.rows, j - self.cols).clone(),
                _ => zero.clone(),
            }
        })
    }

    /// Kronecker product; index `(i, k)` of the result row is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.field, self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let a = self.get(r / rhs.rows, c / rhs.cols);
            if a.is_zero() {
                return self.field.zero();
            }
            a * rhs.get(r % rhs.rows, c % rhs.cols)
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Unique reduced row-echelon form.
    pub fn rref(&self) -> Rref {
        match self.field {
            Field::Prime { p } => self.rref_mod(p),
            Field::Rationals => self.rref_generic(),
        }
    }

    fn rref_generic(&self) -> Rref {
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
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * pj);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    fn rref_mod(&self, p: u32) -> Rref {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<u32> = self.data.iter().map(Scalar::residue).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        let p64 = p as u64;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    a.swap(r * cols + j, pr * cols + j);
                }
            }
            let inv = inv_mod(a[r * cols + c], p);
            for j in c..cols {
                a[r * cols + j] = mulmod(a[r * cols + j], inv, p);
            }
            let pivot_row: Vec<u32> = a[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = a[i * cols + c];
                if f == 0 {
                    continue;
                }
                let neg = (p - f) as u64;
                let row = &mut a[i * cols + c..(i + 1) * cols];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = ((*x as u64 + neg * y as u64) % p64) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let matrix = Matrix {
            field: self.field,
            rows,
            cols,
            data: a.into_iter().map(|v| Scalar::Modular { value: v, modulus: p }).collect(),
        };
        Rref { matrix, rank: pivots.len(), pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{x : self · x = 0}` as a canonical subspace of the column space.
    pub fn kernel_basis(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let vectors: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -matrix.get(r, fc);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &vectors)
    }

    /// Column span as a canonical subspace of the target.
    pub fn image_basis(&self) -> Subspace {
        Subspace::from_rows_matrix(self.rows, &self.transpose())
    }

    /// Some `x` with `self · x = b` (columnwise), or `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: right-hand side height mismatch");
        let aug = self.hstack(b);
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, matrix.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(q(), 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = Matrix::zeros(q(), 3, 2);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_hand_elimination() {
        // [[2,4],[1,2]] -> [[1,2],[0,0]]
        let m = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(q(), 3).kernel_basis().dim(), 0);
        let z = Matrix::zeros(q(), 2, 3);
        assert_eq!(z.kernel_basis(), Subspace::full(q(), 3));
        let f2 = Field::prime(2).unwrap();
        let k = Matrix::from_i64(f2, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Subspace::span(f2, 2, &[vec![f2.one(), f2.one()]]));
    }

    #[test]
    fn image_examples() {
        assert_eq!(Matrix::identity(q(), 2).image_basis(), Subspace::full(q(), 2));
        assert_eq!(Matrix::zeros(q(), 2, 2).image_basis().dim(), 0);
        let m = Matrix::from_i64(q(), &[&[1, 0], &[1, 0]]);
        assert_eq!(m.image_basis(), Subspace::span(q(), 2, &[vec![q().one(), q().one()]]));
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(q(), 2));
        let singular = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        let b = Matrix::from_i64(q(), &[&[1], &[3]]);
        assert!(singular.solve(&b).is_none());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(Field::prime(3).unwrap(), 2);
        assert!(matches!(a.checked_mul(&b), Err(LinalgError::FieldMismatch(..))));
        let bad = Matrix::from_rows(q(), vec![vec![Field::prime(3).unwrap().one()]], 1);
        assert!(bad.is_err());
    }

    #[test]
    fn kron_layout() {
        let a = Matrix::from_i64(q(), &[&[1, 2]]);
        let b = Matrix::from_i64(q(), &[&[1], &[3]]);
        assert_eq!(a.kron(&b), Matrix::from_i64(q(), &[&[1, 2], &[3, 6]]));
    }
}

/// Serialized as an array of rows of exact scalar strings; the field is supplied by context.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
