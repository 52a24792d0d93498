//! Representations of the quiver `• -> •` and complexes of them.
//!
//! A pair space `(V, N)` embeds as the representation `N ↪ V`; this embedding is
//! exact and reflects exactness, so cohomology of pair complexes in the left heart
//! reduces to row-wise linear algebra here.

use crate::linalg::{Field, Matrix, Subspace};
use crate::sn::{null_map, PairMap};

use super::SnComplex;

/// `t : V_1 -> V_0` (top row to bottom row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Rep {
    pub top: usize,
    pub bottom: usize,
    pub t: Matrix,
}

impl A2Rep {
    /// `(dim ker t, rank t, dim coker t)`.
    pub fn invariants(&self) -> (usize, usize, usize) {
        let r = self.t.rank();
        (self.top - r, r, self.bottom - r)
    }

    pub fn is_zero(&self) -> bool {
        self.top == 0 && self.bottom == 0
    }
}

/// A morphism of representations: one matrix per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Morphism {
    pub top: Matrix,
    pub bottom: Matrix,
}

impl A2Morphism {
    /// Rows of a pair map: on null subspaces (RREF coordinates) and on ambient spaces.
    pub fn of_pair_map(f: &PairMap) -> A2Morphism {
        A2Morphism { top: null_map(f).matrix().clone(), bottom: f.matrix().clone() }
    }

    /// Map on cohomology induced by the pair map `f` between the underlying degree-`n` objects.
    pub fn induced(src: &A2Homology, dst: &A2Homology, f: &PairMap) -> A2Morphism {
        let rows = A2Morphism::of_pair_map(f);
        A2Morphism {
            top: src.top.induced(&dst.top, &rows.top),
            bottom: src.bottom.induced(&dst.bottom, &rows.bottom),
        }
    }

    pub fn is_iso(&self) -> bool {
        self.top.is_invertible() && self.bottom.is_invertible()
    }

    pub fn inverse(&self) -> Option<A2Morphism> {
        Some(A2Morphism { top: self.top.inverse()?, bottom: self.bottom.inverse()? })
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &A2Morphism) -> A2Morphism {
        A2Morphism { top: &self.top * &inner.top, bottom: &self.bottom * &inner.bottom }
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.bottom.is_zero()
    }
}

/// `Z / B` for subspaces `B ⊆ Z ⊆ F^n`, with chosen coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    numerator: Subspace,
    denominator: Subspace,
    projection: Matrix,
    section: Matrix,
}

impl Subquotient {
    pub fn new(numerator: Subspace, denominator: Subspace) -> Subquotient {
        let rel = denominator
            .relative_to(&numerator)
            .expect("denominator of a subquotient lies in the numerator");
        let qp = rel.quotient_presentation();
        Subquotient { numerator, denominator, projection: qp.projection, section: qp.section }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn numerator(&self) -> &Subspace {
        &self.numerator
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    /// Classes of the columns of `m`, each of which must lie in the numerator.
    pub fn project(&self, m: &Matrix) -> Matrix {
        let coords = self
            .numerator
            .coordinates_of_columns(m)
            .expect("projected vectors lie in the numerator");
        &self.projection * &coords
    }

    /// Representatives of the basis classes, as columns in the ambient space.
    pub fn lift(&self) -> Matrix {
        &self.numerator.inclusion() * &self.section
    }

    /// Matrix of the map induced by the ambient map `m` into `target`.
    pub fn induced(&self, target: &Subquotient, m: &Matrix) -> Matrix {
        target.project(&(m * &self.lift()))
    }
}

/// A complex of A2 representations: two rows joined by vertical maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Complex {
    field: Field,
    lo: i64,
    tops: Vec<usize>,
    bottoms: Vec<usize>,
    verticals: Vec<Matrix>,
    top_d: Vec<Matrix>,
    bottom_d: Vec<Matrix>,
}

/// Cohomology in one degree: the representation and the two row subquotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Homology {
    pub rep: A2Rep,
    pub top: Subquotient,
    pub bottom: Subquotient,
}

impl A2Complex {
    pub fn embed(c: &SnComplex) -> A2Complex {
        let tops = c.objects().iter().map(|o| o.null_dim()).collect();
        let bottoms = c.objects().iter().map(|o| o.dim()).collect();
        let verticals = c.objects().iter().map(|o| o.null().inclusion()).collect();
        let top_d = c.differentials().iter().map(|d| null_map(d).matrix().clone()).collect();
        let bottom_d = c.differentials().iter().map(|d| d.matrix().clone()).collect();
        A2Complex { field: c.field(), lo: c.lo(), tops, bottoms, verticals, top_d, bottom_d }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.tops.len() as i64 - 1
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n >= self.lo && n <= self.hi()).then(|| (n - self.lo) as usize)
    }

    /// `(top, bottom)` dimensions in degree `n`.
    pub fn dims(&self, n: i64) -> (usize, usize) {
        self.index(n).map(|k| (self.tops[k], self.bottoms[k])).unwrap_or((0, 0))
    }

    pub fn vertical(&self, n: i64) -> Matrix {
        match self.index(n) {
            Some(k) => self.verticals[k].clone(),
            None => Matrix::zeros(self.field, 0, 0),
        }
    }

    /// Row differential in degree `n`; `top` selects the null row.
    pub fn d(&self, top: bool, n: i64) -> Matrix {
        let dims = |m: i64| if top { self.dims(m).0 } else { self.dims(m).1 };
        match self.index(n) {
            Some(k) if k + 1 < self.tops.len() => {
                if top {
                    self.top_d[k].clone()
                } else {
                    self.bottom_d[k].clone()
                }
            }
            _ => Matrix::zeros(self.field, dims(n + 1), dims(n)),
        }
    }

    fn row_cohomology(&self, top: bool, n: i64) -> Subquotient {
        let z = self.d(top, n).kernel_basis();
        let b = self.d(top, n - 1).image_basis();
        Subquotient::new(z, b)
    }

    pub fn cohomology(&self, n: i64) -> A2Homology {
        let top = self.row_cohomology(true, n);
        let bottom = self.row_cohomology(false, n);
        let (t_dim, b_dim) = self.dims(n);
        let vertical = if self.index(n).is_some() {
            self.vertical(n)
        } else {
            Matrix::zeros(self.field, b_dim, t_dim)
        };
        let t = top.induced(&bottom, &vertical);
        A2Homology { rep: A2Rep { top: top.dim(), bottom: bottom.dim(), t }, top, bottom }
    }

    /// Both rows exact in every degree.
    pub fn is_acyclic(&self) -> bool {
        (self.lo..=self.hi()).all(|n| {
            let h = self.cohomology(n);
            h.top.dim() == 0 && h.bottom.dim() == 0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sn::PairSpace;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn embedding_of_dense_inclusion() {
        let i = PairMap::new(PairSpace::hausdorff(q(), 1), PairSpace::indiscrete(q(), 1), Matrix::identity(q(), 1)).unwrap();
        let a2 = SnComplex::two_term(&i, -1).embed_to_a2();
        assert_eq!(a2.dims(-1), (0, 1));
        assert_eq!(a2.dims(0), (1, 1));
        let h = a2.cohomology(0);
        assert_eq!(h.rep.invariants(), (1, 0, 0));
        assert!(SnComplex::zero(q()).embed_to_a2().is_acyclic());
    }

    #[test]
    fn contractible_complex_is_acyclic() {
        let v = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().zero()]]);
        let c = SnComplex::two_term(&v.identity(), 0);
        assert!(c.embed_to_a2().is_acyclic());
    }
}
