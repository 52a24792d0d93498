use crate::complexes::{joint_window, A2Morphism, ChainMap, SnComplex};
use crate::linalg::Matrix;
use crate::sn::{Biproduct, PairMap};

use super::HeartError;

/// A morphism in the derived category: a chain map, or a roof `X <-s- Z -f-> Y`
/// whose left leg is a quasi-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeartMorphism {
    Direct(ChainMap),
    Roof { left: ChainMap, right: ChainMap },
}

impl HeartMorphism {
    pub fn roof(left: ChainMap, right: ChainMap) -> Result<HeartMorphism, HeartError> {
        if left.source() != right.source() {
            return Err(HeartError::EndpointMismatch("roof legs start at different complexes".into()));
        }
        if !left.is_quasi_iso() {
            return Err(HeartError::NotQuasiIso);
        }
        Ok(HeartMorphism::Roof { left, right })
    }

    pub fn source(&self) -> &SnComplex {
        match self {
            HeartMorphism::Direct(f) => f.source(),
            HeartMorphism::Roof { left, .. } => left.target(),
        }
    }

    pub fn target(&self) -> &SnComplex {
        match self {
            HeartMorphism::Direct(f) => f.target(),
            HeartMorphism::Roof { right, .. } => right.target(),
        }
    }

    /// Both legs, with the identity as left leg for direct maps.
    pub fn legs(&self) -> (ChainMap, ChainMap) {
        match self {
            HeartMorphism::Direct(f) => (f.source().identity(), f.clone()),
            HeartMorphism::Roof { left, right } => (left.clone(), right.clone()),
        }
    }

    /// The induced map on degree-`n` cohomology of the A2 embeddings.
    pub fn realize(&self, n: i64) -> Result<A2Morphism, HeartError> {
        match self {
            HeartMorphism::Direct(f) => Ok(f.a2_induced(n)),
            HeartMorphism::Roof { left, right } => {
                let inv = left.a2_induced(n).inverse().ok_or(HeartError::NotQuasiIso)?;
                Ok(right.a2_induced(n).after(&inv))
            }
        }
    }
}

/// Equality in the heart, compared through realized A2 morphisms in degree 0.
pub fn roof_equal(m1: &HeartMorphism, m2: &HeartMorphism) -> Result<bool, HeartError> {
    if m1.source() != m2.source() || m1.target() != m2.target() {
        return Err(HeartError::EndpointMismatch("morphisms have different endpoints".into()));
    }
    Ok(m1.realize(0)? == m2.realize(0)?)
}

/// `m2 ∘ m1`, composing spans through the homotopy pullback of the middle cospan.
pub fn roof_compose(m1: &HeartMorphism, m2: &HeartMorphism) -> Result<HeartMorphism, HeartError> {
    if m1.target() != m2.source() {
        return Err(HeartError::EndpointMismatch("middle objects differ".into()));
    }
    let (s1, f1) = m1.legs();
    let (s2, f2) = m2.legs();
    let (p, q, y) = (f1.source(), s2.source(), f1.target());
    let field = y.field();

    let (mut lo, mut hi) = joint_window(p, q);
    if !y.is_empty() {
        lo = lo.min(y.lo() + 1);
        hi = hi.max(y.hi() + 1);
    }
    let r = SnComplex::assemble(
        field,
        lo,
        hi,
        |n| Biproduct::of(&Biproduct::of(&p.object(n), &q.object(n)).object, &y.object(n - 1)).object,
        |n, src, dst| {
            let (pn, qn, yn1) = (p.object(n).dim(), q.object(n).dim(), y.object(n - 1).dim());
            let (pn1, qn1) = (p.object(n + 1).dim(), q.object(n + 1).dim());
            let z = |r, c| Matrix::zeros(field, r, c);
            let row_p = p.differential(n).matrix().hstack(&z(pn1, qn)).hstack(&z(pn1, yn1));
            let row_q = z(qn1, pn).hstack(q.differential(n).matrix()).hstack(&z(qn1, yn1));
            let row_y = f1
                .component(n)
                .matrix()
                .hstack(&(-s2.component(n).matrix()))
                .hstack(&(-y.differential(n - 1).matrix()));
            let m = row_p.vstack(&row_q).vstack(&row_y);
            PairMap::new(src.clone(), dst.clone(), m).expect("homotopy pullback differential is bounded")
        },
    );
    let projection = |first: bool| {
        ChainMap::from_matrices(&r, if first { p } else { q }, |n| {
            let (pn, qn, yn1) = (p.object(n).dim(), q.object(n).dim(), y.object(n - 1).dim());
            let (rows, before, after) = if first { (pn, 0, qn + yn1) } else { (qn, pn, yn1) };
            Matrix::zeros(field, rows, before)
                .hstack(&Matrix::identity(field, rows))
                .hstack(&Matrix::zeros(field, rows, after))
        })
    };
    let to_p = projection(true)?;
    let to_q = projection(false)?;
    HeartMorphism::roof(s1.compose(&to_p)?, f2.compose(&to_q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hearts::{iota_l, LeftHeartObject};
    use crate::linalg::Field;
    use crate::sn::PairSpace;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn identity_roofs_compose_to_identity() {
        let v = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().zero()]]);
        let x = iota_l(&v).complex();
        let id = HeartMorphism::roof(x.identity(), x.identity()).unwrap();
        let comp = roof_compose(&id, &id).unwrap();
        assert!(roof_equal(&comp, &HeartMorphism::Direct(x.identity())).unwrap());
        assert_eq!(comp.target(), &x);
    }

    #[test]
    fn roof_needs_quasi_iso_left_leg() {
        let s = LeftHeartObject::new(
            PairMap::new(PairSpace::hausdorff(q(), 1), PairSpace::indiscrete(q(), 1), Matrix::identity(q(), 1)).unwrap(),
        )
        .unwrap()
        .complex();
        assert_eq!(HeartMorphism::roof(s.zero_map(&s), s.identity()).unwrap_err(), HeartError::NotQuasiIso);
    }
}
