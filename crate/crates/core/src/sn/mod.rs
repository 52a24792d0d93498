//! The quasi-abelian category of pair spaces.
//!
//! An object `(V, N)` is a finite-dimensional vector space with a distinguished
//! null subspace. It stands in for a seminormed space whose vectors of seminorm
//! zero form `N`; the closure of a subspace `S` is `S + N`. A morphism is a linear
//! map carrying `N` into the target's null subspace.

mod duality;
mod ladder;
mod limits;
mod tensor;

pub use duality::{
    biduality_unit, delta_map, delta_space, dual_cokernel_iso, dual_image_iso, dual_map, dual_space,
    hausdorff_map, hausdorffify, null_map, null_part,
};
pub use ladder::HomologyLadder;
pub use limits::{Biproduct, Cokernel, Kernel, Pullback, Pushout};
pub use tensor::{curry_iso, hom, tensor, tensor_map, HomSpace};

use thiserror::Error;

use crate::linalg::{Field, LinalgError, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnError {
    #[error("map is not bounded: it does not carry the null subspace into the target null subspace")]
    NotBounded,
    #[error("maps are not composable: {0}")]
    Composability(String),
    #[error("composite is not zero")]
    NotAComplex,
    #[error("no factorization: {0}")]
    Factorization(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite-dimensional space with a null subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairSpace {
    null: Subspace,
}

impl PairSpace {
    pub fn new(null: Subspace) -> PairSpace {
        PairSpace { null }
    }

    /// `(F^dim, span(null_vectors))`.
    pub fn from_null_vectors(field: Field, dim: usize, null_vectors: &[Vec<crate::Scalar>]) -> PairSpace {
        PairSpace { null: Subspace::span(field, dim, null_vectors) }
    }

    /// `(F^dim, 0)`: the Hausdorff (normed) case.
    pub fn hausdorff(field: Field, dim: usize) -> PairSpace {
        PairSpace { null: Subspace::zero(field, dim) }
    }

    /// `(F^dim, F^dim)`: everything has seminorm zero.
    pub fn indiscrete(field: Field, dim: usize) -> PairSpace {
        PairSpace { null: Subspace::full(field, dim) }
    }

    pub fn zero(field: Field) -> PairSpace {
        PairSpace::hausdorff(field, 0)
    }

    pub fn field(&self) -> Field {
        self.null.field()
    }

    pub fn dim(&self) -> usize {
        self.null.ambient()
    }

    pub fn null(&self) -> &Subspace {
        &self.null
    }

    pub fn null_dim(&self) -> usize {
        self.null.dim()
    }

    pub fn is_hausdorff(&self) -> bool {
        self.null.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn identity(&self) -> PairMap {
        PairMap::new_unchecked(self.clone(), self.clone(), Matrix::identity(self.field(), self.dim()))
    }

    pub fn zero_map(&self, target: &PairSpace) -> PairMap {
        PairMap::new_unchecked(self.clone(), target.clone(), Matrix::zeros(self.field(), target.dim(), self.dim()))
    }

    /// Pairs are classified by `(dim, null_dim)`; builds an explicit isomorphism when they agree.
    pub fn iso_to(&self, other: &PairSpace) -> Option<PairMap> {
        if self.dim() != other.dim() || self.null_dim() != other.null_dim() {
            return None;
        }
        let adapted = |s: &PairSpace| {
            let qp = s.null.quotient_presentation();
            s.null.inclusion().hstack(&qp.section)
        };
        let src = adapted(self);
        let dst = adapted(other);
        let m = &dst * &src.inverse().expect("adapted basis is invertible");
        Some(PairMap::new_unchecked(self.clone(), other.clone(), m))
    }

    pub fn is_isomorphic(&self, other: &PairSpace) -> bool {
        self.dim() == other.dim() && self.null_dim() == other.null_dim()
    }
}

/// A null-preserving linear map between pair spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairMap {
    domain: PairSpace,
    codomain: PairSpace,
    matrix: Matrix,
}

impl PairMap {
    /// Validates shape and boundedness (`matrix · N ⊆ N'`).
    pub fn new(domain: PairSpace, codomain: PairSpace, matrix: Matrix) -> Result<PairMap, SnError> {
        if matrix.field() != domain.field() || matrix.field() != codomain.field() {
            return Err(LinalgError::FieldMismatch(matrix.field(), domain.field()).into());
        }
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(SnError::Shape(format!(
                "matrix is {}x{} but map is {} -> {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        if !domain.null.maps_into(&matrix, &codomain.null)? {
            return Err(SnError::NotBounded);
        }
        Ok(PairMap { domain, codomain, matrix })
    }

    pub(crate) fn new_unchecked(domain: PairSpace, codomain: PairSpace, matrix: Matrix) -> PairMap {
        debug_assert!(matrix.rows() == codomain.dim() && matrix.cols() == domain.dim());
        PairMap { domain, codomain, matrix }
    }

    pub fn domain(&self) -> &PairSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &PairSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PairMap) -> Result<PairMap, SnError> {
        if inner.codomain != self.domain {
            return Err(SnError::Composability(format!(
                "codomain (dim {}) differs from domain (dim {})",
                inner.codomain.dim(),
                self.domain.dim()
            )));
        }
        Ok(PairMap::new_unchecked(inner.domain.clone(), self.codomain.clone(), &self.matrix * &inner.matrix))
    }

    /// `self ∘ inner` for maps known to be composable.
    pub fn after(&self, inner: &PairMap) -> PairMap {
        self.compose(inner).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn add(&self, other: &PairMap) -> Result<PairMap, SnError> {
        self.same_shape(other)?;
        Ok(PairMap::new_unchecked(self.domain.clone(), self.codomain.clone(), &self.matrix + &other.matrix))
    }

    pub fn sub(&self, other: &PairMap) -> Result<PairMap, SnError> {
        self.same_shape(other)?;
        Ok(PairMap::new_unchecked(self.domain.clone(), self.codomain.clone(), &self.matrix - &other.matrix))
    }

    pub fn neg(&self) -> PairMap {
        PairMap::new_unchecked(self.domain.clone(), self.codomain.clone(), -&self.matrix)
    }

    pub fn scale(&self, s: &crate::Scalar) -> PairMap {
        PairMap::new_unchecked(self.domain.clone(), self.codomain.clone(), self.matrix.scale(s))
    }

    fn same_shape(&self, other: &PairMap) -> Result<(), SnError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(SnError::Shape("maps have different endpoints".into()));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Injective.
    pub fn is_monic(&self) -> bool {
        self.matrix.rank() == self.domain.dim()
    }

    /// Dense range: `im + N' = V'`.
    pub fn is_epic(&self) -> bool {
        self.matrix
            .image_basis()
            .sum(self.codomain.null())
            .map(|s| s.is_full())
            .unwrap_or(false)
    }

    /// Set-theoretically onto; the categorical epimorphisms of the pair category.
    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.codomain.dim()
    }

    /// `f(N) = im f ∩ N'`, equivalently `Coim f -> Im f` is an isomorphism of pairs.
    pub fn is_strict(&self) -> bool {
        let fn_ = self.domain.null.image_under(&self.matrix).expect("shapes checked");
        let im = self.matrix.image_basis();
        let meet = im.intersect(self.codomain.null()).expect("shapes checked");
        fn_ == meet
    }

    pub fn is_iso(&self) -> bool {
        self.matrix.is_invertible()
            && self.domain.null.image_under(&self.matrix).expect("shapes checked") == *self.codomain.null()
    }

    /// Two-sided inverse in the pair category (requires strictness as well as bijectivity).
    pub fn inverse(&self) -> Option<PairMap> {
        if !self.is_iso() {
            return None;
        }
        let inv = self.matrix.inverse()?;
        Some(PairMap::new_unchecked(self.codomain.clone(), self.domain.clone(), inv))
    }

    pub fn kernel(&self) -> Kernel {
        Kernel::of(self)
    }

    pub fn cokernel(&self) -> Cokernel {
        Cokernel::of(self)
    }

    /// Kernel of the cokernel.
    pub fn image(&self) -> Kernel {
        Kernel::of(&self.cokernel().projection)
    }

    /// Cokernel of the kernel.
    pub fn coimage(&self) -> Cokernel {
        Cokernel::of(&self.kernel().inclusion)
    }

    /// The canonical map `Coim f -> Im f`.
    pub fn comparison(&self) -> PairMap {
        let im = self.image();
        let through_image = im.lift(self).expect("f factors through its image");
        self.coimage()
            .descend(&through_image)
            .expect("the image factorization kills the kernel")
    }
}

/// Whether `0 -> A -i-> B -p-> C -> 0` is a kernel-cokernel pair (a strict short exact sequence).
pub fn is_kernel_cokernel_pair(i: &PairMap, p: &PairMap) -> bool {
    i.codomain() == p.domain()
        && i.is_monic()
        && p.is_surjective()
        && i.matrix().image_basis() == p.matrix().kernel_basis()
        && i.is_strict()
        && p.is_strict()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    fn q() -> Field {
        Field::Rationals
    }

    fn f0() -> PairSpace {
        PairSpace::hausdorff(q(), 1)
    }

    fn ff() -> PairSpace {
        PairSpace::indiscrete(q(), 1)
    }

    fn e(i: usize, n: usize) -> Vec<Scalar> {
        (0..n).map(|j| if i == j { q().one() } else { q().zero() }).collect()
    }

    #[test]
    fn validate_map_examples() {
        let id = Matrix::identity(q(), 1);
        assert_eq!(PairMap::new(ff(), f0(), id.clone()), Err(SnError::NotBounded));
        assert!(PairMap::new(f0(), ff(), id).is_ok());
        let v = PairSpace::from_null_vectors(q(), 2, &[e(0, 2)]);
        let swap = Matrix::from_i64(q(), &[&[0, 1], &[1, 0]]);
        assert_eq!(PairMap::new(v.clone(), v, swap), Err(SnError::NotBounded));
    }

    #[test]
    fn monic_epic_strict_examples() {
        let i = PairMap::new(f0(), ff(), Matrix::identity(q(), 1)).unwrap();
        assert!(i.is_monic() && i.is_epic() && !i.is_strict());
        assert!(!i.is_iso());

        let v = PairSpace::from_null_vectors(q(), 3, &[e(1, 3)]);
        let id = v.identity();
        assert!(id.is_monic() && id.is_epic() && id.is_strict() && id.is_iso());

        let z = f0().zero_map(&f0());
        assert!(z.is_strict() && !z.is_monic() && !z.is_epic());
    }

    #[test]
    fn kernel_examples() {
        // [1 0] : (F^2, span e2) -> (F, F)
        let dom = PairSpace::from_null_vectors(q(), 2, &[e(1, 2)]);
        let f = PairMap::new(dom.clone(), ff(), Matrix::from_i64(q(), &[&[1, 0]])).unwrap();
        let k = f.kernel();
        assert_eq!((k.object.dim(), k.object.null_dim()), (1, 1));
        assert_eq!(dom.identity().kernel().object.dim(), 0);
        assert_eq!(dom.zero_map(&ff()).kernel().object, dom);
    }

    #[test]
    fn comparison_detects_non_strictness() {
        let i = PairMap::new(f0(), ff(), Matrix::identity(q(), 1)).unwrap();
        assert_eq!(i.coimage().object, f0());
        assert_eq!(i.image().object, ff());
        let c = i.comparison();
        assert!(c.matrix().is_invertible());
        assert!(c.inverse().is_none());
    }

    #[test]
    fn iso_to_builds_an_isomorphism() {
        let a = PairSpace::from_null_vectors(q(), 3, &[e(0, 3)]);
        let b = PairSpace::from_null_vectors(q(), 3, &[vec![q().one(), q().one(), q().one()]]);
        let iso = a.iso_to(&b).unwrap();
        assert!(iso.is_iso());
        assert!(a.iso_to(&PairSpace::hausdorff(q(), 3)).is_none());
    }
}
