use super::field::{Field, Scalar};
use super::matrix::Matrix;
use super::LinalgError;

/// A linear subspace of `F^n`, stored by the RREF of a basis so that equality is syntactic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Coordinates on `F^n / S`: `projection` has kernel exactly `S`, `section` is a right inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub projection: Matrix,
    pub section: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of vectors of length `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let rows = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        Subspace::from_rows_matrix(ambient, &rows)
    }

    /// Row span of `rows`.
    pub fn from_rows_matrix(ambient: usize, rows: &Matrix) -> Subspace {
        assert_eq!(rows.cols(), ambient, "spanning vectors have the wrong length");
        let r = rows.rref();
        let keep: Vec<usize> = (0..r.rank).collect();
        Subspace { ambient, basis: r.matrix.select_rows(&keep), pivots: r.pivots }
    }

    /// Column span of `cols`.
    pub fn from_columns(cols: &Matrix) -> Subspace {
        cols.image_basis()
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as columns: the inclusion `F^dim -> F^ambient` in basis coordinates.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field() != other.field() {
            return Err(LinalgError::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::Dimension(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::from_rows_matrix(self.ambient, &self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of `[U^T | W^T]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let system = self.inclusion().hstack(&(-&other.inclusion()));
        let k = system.kernel_basis();
        let du = self.dim();
        let coeffs = Matrix::from_fn(self.field(), k.dim(), du, |i, j| k.basis().get(i, j).clone());
        Ok(Subspace::from_rows_matrix(self.ambient, &(&coeffs * &self.basis)))
    }

    /// `{x : m x ∈ self}` inside the domain of `m`.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.rows() != self.ambient {
            return Err(LinalgError::Dimension(format!(
                "preimage under a map into F^{} of a subspace of F^{}",
                m.rows(),
                self.ambient
            )));
        }
        let q = self.quotient_presentation();
        Ok(q.projection.checked_mul(m)?.kernel_basis())
    }

    /// `m · self` inside the codomain of `m`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.cols() != self.ambient {
            return Err(LinalgError::Dimension(format!(
                "image under a map from F^{} of a subspace of F^{}",
                m.cols(),
                self.ambient
            )));
        }
        Ok(m.checked_mul(&self.inclusion())?.image_basis())
    }

    /// Whether `m · self ⊆ target`, without eliminating.
    pub fn maps_into(&self, m: &Matrix, target: &Subspace) -> Result<bool, LinalgError> {
        if m.cols() != self.ambient || m.rows() != target.ambient {
            return Err(LinalgError::Dimension(format!(
                "a {}x{} matrix between F^{} and F^{}",
                m.rows(),
                m.cols(),
                self.ambient,
                target.ambient
            )));
        }
        if self.is_zero() || target.is_full() {
            return Ok(true);
        }
        let proj = target.quotient_presentation().projection;
        Ok(proj.checked_mul(m)?.checked_mul(&self.inclusion())?.is_zero())
    }

    /// Functionals vanishing on `self`, in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel_basis()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.field() == other.field()
            && self.ambient == other.ambient
            && self.coordinates_of_columns(&other.inclusion()).is_ok()
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v ∉ self`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        // v must equal sum c_i basis_i
        for j in 0..self.ambient {
            let mut acc = self.field().zero();
            for (i, ci) in c.iter().enumerate() {
                let b = self.basis.get(i, j);
                if !ci.is_zero() && !b.is_zero() {
                    acc = &acc + &(ci * b);
                }
            }
            if acc != v[j] {
                return None;
            }
        }
        Some(c)
    }

    /// Coordinates of every column of `m` (each assumed to lie in `self`), as a `dim × m.cols()` matrix.
    pub fn coordinates_of_columns(&self, m: &Matrix) -> Result<Matrix, LinalgError> {
        if m.rows() != self.ambient {
            return Err(LinalgError::Dimension(format!(
                "columns of length {} in F^{}",
                m.rows(),
                self.ambient
            )));
        }
        let c = m.select_rows(&self.pivots);
        if &self.inclusion() * &c != *m {
            return Err(LinalgError::NotContained("a column is not in the subspace".into()));
        }
        Ok(c)
    }

    /// Projection onto non-pivot coordinates with kernel `self`, and the coordinate section.
    pub fn quotient_presentation(&self) -> QuotientPresentation {
        let field = self.field();
        let mut pivot_row = vec![None; self.ambient];
        for (i, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = Some(i);
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&c| pivot_row[c].is_none()).collect();
        // x -> x[c] - sum_i x[p_i] R[i, c] for each free column c
        let projection = Matrix::from_fn(field, free.len(), self.ambient, |j, col| {
            let c = free[j];
            if col == c {
                return field.one();
            }
            match pivot_row[col] {
                Some(i) => -self.basis.get(i, c),
                None => field.zero(),
            }
        });
        let section = Matrix::from_fn(field, self.ambient, free.len(), |i, j| {
            if free[j] == i {
                field.one()
            } else {
                field.zero()
            }
        });
        QuotientPresentation { projection, section }
    }

    /// Coordinates of `self` seen inside a larger subspace `outer ⊇ self` (as a subspace of `F^{dim outer}`).
    pub fn relative_to(&self, outer: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(outer)?;
        let coords = outer.coordinates_of_columns(&self.inclusion())?;
        Ok(coords.image_basis())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn e(i: usize, n: usize) -> Vec<Scalar> {
        (0..n).map(|j| if i == j { q().one() } else { q().zero() }).collect()
    }

    #[test]
    fn sum_of_axes_is_everything() {
        let a = Subspace::span(q(), 2, &[e(0, 2)]);
        let b = Subspace::span(q(), 2, &[e(1, 2)]);
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn annihilator_of_full_space_is_zero() {
        assert!(Subspace::full(q(), 3).annihilator().is_zero());
        assert!(Subspace::zero(q(), 3).annihilator().is_full());
    }

    #[test]
    fn diagonal_meets_axis_trivially() {
        let diag = Subspace::span(q(), 2, &[vec![q().one(), q().one()]]);
        let axis = Subspace::span(q(), 2, &[e(0, 2)]);
        assert!(diag.intersect(&axis).unwrap().is_zero());
        assert_eq!(diag.intersect(&diag).unwrap(), diag);
    }

    #[test]
    fn quotient_presentation_examples() {
        let zero = Subspace::zero(q(), 2);
        assert_eq!(zero.quotient_presentation().projection, Matrix::identity(q(), 2));
        let full = Subspace::full(q(), 2);
        assert_eq!(full.quotient_presentation().projection.rows(), 0);

        let diag = Subspace::span(q(), 2, &[vec![q().one(), q().one()]]);
        let qp = diag.quotient_presentation();
        assert_eq!(qp.projection, Matrix::from_i64(q(), &[&[-1, 1]]));
        assert!((&qp.projection * &diag.inclusion()).is_zero());
        assert_eq!(&qp.projection * &qp.section, Matrix::identity(q(), 1));
    }

    #[test]
    fn preimage_and_dimension_errors() {
        let m = Matrix::from_i64(q(), &[&[1, 0], &[0, 0]]);
        let axis = Subspace::span(q(), 2, &[e(1, 2)]);
        // m x ∈ span(e2) iff x_1 = 0
        assert_eq!(axis.preimage(&m).unwrap(), Subspace::span(q(), 2, &[e(1, 2)]));
        let other = Subspace::zero(q(), 3);
        assert!(axis.sum(&other).is_err());
        assert!(axis.intersect(&other).is_err());
    }
}
