//! The contravariant functors `D` (continuous dual) and `Δ` (formal self-duality),
//! together with Hausdorffification `Hd` and the null part `Nul`.
//!
//! `D(V, N) = (Ann N, 0)` in the RREF basis of `Ann N`; `Δ(V, N) = (V*, Ann N)`.
//! On the nose, `D = Nul ∘ Δ`, and `D ∘ D ≅ Hd`.

use super::{Cokernel, PairMap, PairSpace, SnError};

pub fn dual_space(a: &PairSpace) -> PairSpace {
    PairSpace::hausdorff(a.field(), a.null().annihilator().dim())
}

/// `D(f) : D(B) -> D(A)`, precomposition with `f`.
pub fn dual_map(f: &PairMap) -> PairMap {
    let ann_a = f.domain().null().annihilator();
    let ann_b = f.codomain().null().annihilator();
    let pulled = &f.matrix().transpose() * &ann_b.inclusion();
    let m = ann_a
        .coordinates_of_columns(&pulled)
        .expect("precomposition with a bounded map preserves the annihilator");
    PairMap::new_unchecked(dual_space(f.codomain()), dual_space(f.domain()), m)
}

pub fn delta_space(a: &PairSpace) -> PairSpace {
    PairSpace::new(a.null().annihilator())
}

/// `Δ(f) = f^T : Δ(B) -> Δ(A)`.
pub fn delta_map(f: &PairMap) -> PairMap {
    PairMap::new_unchecked(delta_space(f.codomain()), delta_space(f.domain()), f.matrix().transpose())
}

/// `Hd(V, N) = (V/N, 0)` as the cokernel of the null inclusion.
pub fn hausdorffify(a: &PairSpace) -> Cokernel {
    let n = a.null();
    let incl = PairMap::new_unchecked(PairSpace::indiscrete(a.field(), n.dim()), a.clone(), n.inclusion());
    Cokernel::of(&incl)
}

pub fn hausdorff_map(f: &PairMap) -> PairMap {
    let src = hausdorffify(f.domain());
    let dst = hausdorffify(f.codomain());
    src.descend(&dst.projection.after(f)).expect("bounded maps preserve null subspaces")
}

/// `Nul(V, N) = (N, 0)`.
pub fn null_part(a: &PairSpace) -> PairSpace {
    PairSpace::hausdorff(a.field(), a.null_dim())
}

pub fn null_map(f: &PairMap) -> PairMap {
    let n_a = f.domain().null();
    let n_b = f.codomain().null();
    let m = n_b
        .coordinates_of_columns(&(f.matrix() * &n_a.inclusion()))
        .expect("bounded maps preserve null subspaces");
    PairMap::new_unchecked(null_part(f.domain()), null_part(f.codomain()), m)
}

/// The canonical isomorphism `D(Coker f) -> Ker D(f)`.
pub fn dual_cokernel_iso(f: &PairMap) -> Result<PairMap, SnError> {
    let coker = f.cokernel();
    dual_map(f).kernel().lift(&dual_map(&coker.projection))
}

/// The canonical isomorphism `D(Im f) -> Coim D(f)`, inverse of the restriction map.
pub fn dual_image_iso(f: &PairMap) -> Result<PairMap, SnError> {
    let im = f.image();
    let restrict = dual_map(f).coimage().descend(&dual_map(&im.inclusion))?;
    restrict
        .inverse()
        .ok_or_else(|| SnError::Factorization("restriction Coim D(f) -> D(Im f) is not invertible".into()))
}

/// Biduality unit `A -> D(D(A))`; the matrix is the annihilator basis.
pub fn biduality_unit(a: &PairSpace) -> PairMap {
    let ann = a.null().annihilator();
    let dd = dual_space(&dual_space(a));
    PairMap::new_unchecked(a.clone(), dd, ann.basis().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix};

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn dual_examples() {
        let f0 = PairSpace::hausdorff(q(), 1);
        let ff = PairSpace::indiscrete(q(), 1);
        assert!(dual_space(&ff).is_zero());
        assert_eq!(dual_space(&f0), f0);
        let i = PairMap::new(f0.clone(), ff.clone(), Matrix::identity(q(), 1)).unwrap();
        assert!(i.is_monic());
        let di = dual_map(&i);
        assert!(di.domain().is_zero());
        assert_eq!(di.codomain(), &f0);
        assert!(!di.is_epic());
    }

    #[test]
    fn delta_examples() {
        let f0 = PairSpace::hausdorff(q(), 1);
        let ff = PairSpace::indiscrete(q(), 1);
        assert_eq!(delta_space(&f0), ff);
        assert_eq!(delta_space(&ff), f0);
        let i = PairMap::new(f0.clone(), ff.clone(), Matrix::identity(q(), 1)).unwrap();
        assert_eq!(delta_map(&delta_map(&i)), i);
    }

    #[test]
    fn dual_is_null_part_of_delta() {
        let a = PairSpace::from_null_vectors(q(), 3, &[vec![q().one(), q().from_i64(2), q().zero()]]);
        assert_eq!(dual_space(&a), null_part(&delta_space(&a)));
        let b = PairSpace::hausdorff(q(), 2);
        let f = PairMap::new(b, a, Matrix::from_i64(q(), &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(dual_map(&f), null_map(&delta_map(&f)));
    }

    #[test]
    fn biduality_unit_is_hausdorffification() {
        let a = PairSpace::from_null_vectors(q(), 3, &[vec![q().one(), q().one(), q().one()]]);
        let unit = biduality_unit(&a);
        assert!(unit.is_surjective());
        assert_eq!(&unit.matrix().kernel_basis(), a.null());
        assert!(unit.codomain().is_isomorphic(&hausdorffify(&a).object));
    }
}
