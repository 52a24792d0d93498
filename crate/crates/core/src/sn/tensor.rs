use crate::linalg::{Matrix, Subspace};

use super::{PairMap, PairSpace, SnError};

/// `A ⊗ B` with null `N_A ⊗ B + A ⊗ N_B`; basis vector `(i, j)` sits at index `i·dim B + j`.
pub fn tensor(a: &PairSpace, b: &PairSpace) -> PairSpace {
    let field = a.field();
    let left = a.null().inclusion().kron(&Matrix::identity(field, b.dim()));
    let right = Matrix::identity(field, a.dim()).kron(&b.null().inclusion());
    PairSpace::new(Subspace::from_columns(&left.hstack(&right)))
}

pub fn tensor_map(f: &PairMap, g: &PairMap) -> PairMap {
    PairMap::new_unchecked(
        tensor(f.domain(), g.domain()),
        tensor(f.codomain(), g.codomain()),
        f.matrix().kron(g.matrix()),
    )
}

/// The pair of bounded maps `A -> B`.
///
/// `carrier` is the subspace of row-major vectorized `dim B × dim A` matrices
/// that are bounded; coordinates on `object` are coordinates in its RREF basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub object: PairSpace,
    pub carrier: Subspace,
    pub source: PairSpace,
    pub target: PairSpace,
}

pub fn hom(a: &PairSpace, b: &PairSpace) -> HomSpace {
    let field = a.field();
    let (n, m) = (a.dim(), b.dim());
    let p = b.null().quotient_presentation().projection;
    // F -> P F N_A^T, row-major
    let bounded = p.kron(&a.null().basis().clone()).kernel_basis();
    // maps landing in N_B: P F = 0
    let into_null = p.kron(&Matrix::identity(field, n)).kernel_basis();
    debug_assert_eq!(bounded.ambient(), m * n);
    let null = into_null.relative_to(&bounded).expect("maps into N_B are bounded");
    HomSpace { object: PairSpace::new(null), carrier: bounded, source: a.clone(), target: b.clone() }
}

impl HomSpace {
    /// Coordinates of a bounded map.
    pub fn coordinates(&self, f: &PairMap) -> Result<Vec<crate::Scalar>, SnError> {
        if f.domain() != &self.source || f.codomain() != &self.target {
            return Err(SnError::Shape("map does not belong to this hom space".into()));
        }
        let flat: Vec<crate::Scalar> = (0..f.matrix().rows()).flat_map(|i| f.matrix().row(i).to_vec()).collect();
        self.carrier
            .coordinates(&flat)
            .ok_or_else(|| SnError::Factorization("map is not in the carrier".into()))
    }

    /// The map with the given coordinates.
    pub fn element(&self, coords: &[crate::Scalar]) -> PairMap {
        let field = self.source.field();
        let flat = self.carrier.inclusion().apply(coords);
        let n = self.source.dim();
        let m = Matrix::from_fn(field, self.target.dim(), n, |i, j| flat[i * n + j].clone());
        PairMap::new_unchecked(self.source.clone(), self.target.clone(), m)
    }
}

/// The adjunction isomorphism `Hom(A ⊗ B, C) -> Hom(A, Hom(B, C))`, as a pair map
/// between the hom objects, plus the two hom spaces.
pub fn curry_iso(a: &PairSpace, b: &PairSpace, c: &PairSpace) -> (PairMap, HomSpace, HomSpace) {
    let field = a.field();
    let src = hom(&tensor(a, b), c);
    let inner = hom(b, c);
    let dst = hom(a, &inner.object);
    let (bd, cd) = (b.dim(), c.dim());
    let columns: Vec<Vec<crate::Scalar>> = (0..src.object.dim())
        .map(|k| {
            let mut e = vec![field.zero(); src.object.dim()];
            e[k] = field.one();
            let f = src.element(&e);
            let parts: Vec<Vec<crate::Scalar>> = (0..a.dim())
                .map(|i| {
                    let fi = Matrix::from_fn(field, cd, bd, |r, j| f.matrix().get(r, i * bd + j).clone());
                    let fi = PairMap::new_unchecked(b.clone(), c.clone(), fi);
                    inner.coordinates(&fi).expect("each slice of a bounded map is bounded")
                })
                .collect();
            let curried = Matrix::from_columns(field, inner.object.dim(), &parts);
            let curried = PairMap::new_unchecked(a.clone(), inner.object.clone(), curried);
            dst.coordinates(&curried).expect("curried map is bounded")
        })
        .collect();
    let m = Matrix::from_columns(field, dst.object.dim(), &columns);
    let iso = PairMap::new_unchecked(src.object.clone(), dst.object.clone(), m);
    (iso, src, dst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn tensor_examples() {
        let f0 = PairSpace::hausdorff(q(), 1);
        let ff = PairSpace::indiscrete(q(), 1);
        let v = PairSpace::from_null_vectors(q(), 3, &[vec![q().one(), q().zero(), q().one()]]);
        assert_eq!(tensor(&f0, &v), v);
        assert_eq!(tensor(&ff, &f0), ff);
    }

    #[test]
    fn hom_examples() {
        let f0 = PairSpace::hausdorff(q(), 1);
        let ff = PairSpace::indiscrete(q(), 1);
        let h = hom(&ff, &f0);
        assert_eq!((h.object.dim(), h.object.null_dim()), (0, 0));
        let h = hom(&f0, &ff);
        assert_eq!((h.object.dim(), h.object.null_dim()), (1, 1));
        let h = hom(&PairSpace::hausdorff(q(), 2), &PairSpace::hausdorff(q(), 3));
        assert_eq!((h.object.dim(), h.object.null_dim()), (6, 0));
    }

    #[test]
    fn curry_is_an_isomorphism() {
        let a = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().one()]]);
        let b = PairSpace::hausdorff(q(), 1);
        let c = PairSpace::from_null_vectors(q(), 2, &[vec![q().zero(), q().one()]]);
        let (iso, _, _) = curry_iso(&a, &b, &c);
        assert!(iso.is_iso());
    }
}
