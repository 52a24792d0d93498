//! The left and right hearts of the derived category of pair spaces.
//!
//! A left heart object is a monic `a : A -> B` in degrees `-1, 0`; a right heart
//! object is an epimorphism `b : B -> C` in degrees `0, 1`. Left objects are
//! realized as A2 representations `T(a) = (N_B / a(N_A) -> B / a(A))`; right
//! objects are handled through the self-duality `Δ`, which exchanges the two hearts.

mod les;
mod morphism;

pub use les::{
    les_of_ses, q_r_non_exactness_witness, section_morphism, section_object, Les, LesNode, NodeKind, RightSequence,
    ShortExact,
};
pub use morphism::{roof_compose, roof_equal, HeartMorphism};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{A2Homology, A2Morphism, ChainMap, ComplexError, SnComplex};
use crate::linalg::Matrix;
use crate::sn::{delta_map, dual_cokernel_iso, dual_image_iso, dual_map, Cokernel, Kernel, PairMap, PairSpace, SnError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeartError {
    #[error("left heart objects need a monic (injective) map")]
    NotMonic,
    #[error("right heart objects need an epimorphism (surjective map)")]
    NotEpic,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("morphism endpoints do not match: {0}")]
    EndpointMismatch(String),
    #[error("degree {0} of the sequence is not a kernel-cokernel pair")]
    NotStrictExact(i64),
    #[error("left leg of the roof is not a quasi-isomorphism")]
    NotQuasiIso,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Sn(#[from] SnError),
}

/// Multiplicities of the three indecomposable A2 representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HeartInvariants {
    /// Copies of `F -> 0`: the non-strict (singular) part.
    pub w: usize,
    /// Copies of `F -> F`.
    pub h_null: usize,
    /// Copies of `0 -> F`.
    pub h_quot: usize,
}

impl HeartInvariants {
    pub fn from_triple((w, h_null, h_quot): (usize, usize, usize)) -> HeartInvariants {
        HeartInvariants { w, h_null, h_quot }
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.w, self.h_null, self.h_quot)
    }

    pub fn is_zero(&self) -> bool {
        self.triple() == (0, 0, 0)
    }
}

/// A monic `a : A -> B`, read as a complex in degrees `-1, 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftHeartObject {
    a: PairMap,
}

impl LeftHeartObject {
    pub fn new(a: PairMap) -> Result<LeftHeartObject, HeartError> {
        if !a.is_monic() {
            return Err(HeartError::NotMonic);
        }
        Ok(LeftHeartObject { a })
    }

    pub fn map(&self) -> &PairMap {
        &self.a
    }

    pub fn complex(&self) -> SnComplex {
        SnComplex::two_term(&self.a, -1)
    }

    /// `T(X)`: degree-0 cohomology of the A2 embedding.
    pub fn realization(&self) -> A2Homology {
        self.complex().embed_to_a2().cohomology(0)
    }

    pub fn invariants(&self) -> HeartInvariants {
        HeartInvariants::from_triple(self.realization().rep.invariants())
    }

    /// `q_ℓ(X) = Coker a`.
    pub fn q_l(&self) -> Cokernel {
        self.a.cokernel()
    }

    /// Unit `X -> ι_ℓ q_ℓ X` of `q_ℓ ⊣ ι_ℓ`.
    pub fn unit(&self) -> HeartMorphism {
        let target = iota_l(&self.q_l().object);
        let src = self.complex();
        let proj = self.q_l().projection;
        let map = ChainMap::from_matrices(&src, &target.complex(), |n| {
            if n == 0 {
                proj.matrix().clone()
            } else {
                Matrix::zeros(src.field(), target.complex().object(n).dim(), src.object(n).dim())
            }
        })
        .expect("projection onto the cokernel is a chain map");
        HeartMorphism::Direct(map)
    }
}

/// An epimorphism `b : B -> C`, read as a complex in degrees `0, 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightHeartObject {
    b: PairMap,
}

impl RightHeartObject {
    pub fn new(b: PairMap) -> Result<RightHeartObject, HeartError> {
        if !b.is_surjective() {
            return Err(HeartError::NotEpic);
        }
        Ok(RightHeartObject { b })
    }

    pub fn map(&self) -> &PairMap {
        &self.b
    }

    pub fn complex(&self) -> SnComplex {
        SnComplex::two_term(&self.b, 0)
    }

    /// `Δ(X)`, a left heart object.
    pub fn delta(&self) -> LeftHeartObject {
        LeftHeartObject::new(delta_map(&self.b)).expect("transpose of a surjection is injective")
    }

    /// Invariants of `T(ΔX)` with the null and quotient counts exchanged,
    /// so that `ι_r(V, N)` reads `(0, dim N, dim V - dim N)`.
    pub fn invariants(&self) -> HeartInvariants {
        let (w, h_null, h_quot) = self.delta().invariants().triple();
        HeartInvariants { w, h_null: h_quot, h_quot: h_null }
    }

    /// `q_r(X) = Ker b`.
    pub fn q_r(&self) -> Kernel {
        self.b.kernel()
    }
}

impl LeftHeartObject {
    /// `Δ(X)`, a right heart object.
    pub fn delta(&self) -> RightHeartObject {
        RightHeartObject::new(delta_map(&self.a)).expect("transpose of an injection is surjective")
    }
}

impl RightHeartObject {
    /// Counit `ι_r q_r Y -> Y` of `ι_r ⊣ q_r`.
    pub fn counit(&self) -> ChainMap {
        let src = iota_r(&self.q_r().object).complex();
        let tgt = self.complex();
        let incl = self.q_r().inclusion;
        ChainMap::from_matrices(&src, &tgt, |n| {
            if n == 0 {
                incl.matrix().clone()
            } else {
                Matrix::zeros(src.field(), tgt.object(n).dim(), src.object(n).dim())
            }
        })
        .expect("kernel inclusion is a chain map")
    }
}

/// `q_ℓ` on a chain map between left heart objects.
pub fn q_l_map(x: &LeftHeartObject, y: &LeftHeartObject, f: &ChainMap) -> Result<PairMap, HeartError> {
    let (cx, cy) = (x.q_l(), y.q_l());
    Ok(cx.descend(&cy.projection.after(&f.component(0)))?)
}

/// `q_r` on a chain map between right heart objects.
pub fn q_r_map(x: &RightHeartObject, y: &RightHeartObject, f: &ChainMap) -> Result<PairMap, HeartError> {
    let (kx, ky) = (x.q_r(), y.q_r());
    Ok(ky.lift(&f.component(0).after(&kx.inclusion))?)
}

/// The chain map `ι_ℓ(h) : ι_ℓ A -> ι_ℓ B`.
pub fn iota_l_map(h: &PairMap) -> ChainMap {
    let (x, y) = (iota_l(h.domain()).complex(), iota_l(h.codomain()).complex());
    ChainMap::from_matrices(&x, &y, |n| {
        if n == 0 {
            h.matrix().clone()
        } else {
            Matrix::zeros(h.field(), 0, 0)
        }
    })
    .expect("ι_ℓ of a map is a chain map")
}

/// The chain map `ι_r(h) : ι_r A -> ι_r B`.
pub fn iota_r_map(h: &PairMap) -> ChainMap {
    let (x, y) = (iota_r(h.domain()).complex(), iota_r(h.codomain()).complex());
    ChainMap::from_matrices(&x, &y, |n| {
        if n == 0 {
            h.matrix().clone()
        } else {
            Matrix::zeros(h.field(), 0, 0)
        }
    })
    .expect("ι_r of a map is a chain map")
}

/// Triangle identities for `q_ℓ ⊣ ι_ℓ` at `x` and `ι_r ⊣ q_r` at `y`; returns the failing ones.
pub fn adjunction_failures(x: &LeftHeartObject, y: &RightHeartObject) -> Vec<&'static str> {
    let mut out = Vec::new();
    // ε_{q X} ∘ q(η_X) = id, with ε the identity q ι = id
    let HeartMorphism::Direct(eta) = x.unit() else { unreachable!() };
    let qx = iota_l(&x.q_l().object);
    match q_l_map(x, &qx, &eta) {
        Ok(m) if m == x.q_l().object.identity() => {}
        _ => out.push("q_l triangle"),
    }
    // ι(ε_B) ∘ η_{ι B} = id
    let b = x.q_l().object;
    let HeartMorphism::Direct(eta_b) = iota_l(&b).unit() else { unreachable!() };
    if eta_b != iota_l(&b).complex().identity() {
        out.push("iota_l triangle");
    }
    // q(ε_Y) ∘ η_{q Y} = id
    let ry = iota_r(&y.q_r().object);
    match q_r_map(&ry, y, &y.counit()) {
        Ok(m) if m == y.q_r().object.identity() => {}
        _ => out.push("q_r triangle"),
    }
    // ε_{ι A} ∘ ι(η_A) = id
    let a = y.q_r().object;
    if iota_r(&a).counit() != iota_r(&a).complex().identity() {
        out.push("iota_r triangle");
    }
    out
}

/// `ι_ℓ(A) = (0 -> A)`.
pub fn iota_l(a: &PairSpace) -> LeftHeartObject {
    LeftHeartObject { a: PairSpace::zero(a.field()).zero_map(a) }
}

/// `ι_r(A) = (A -> 0)`.
pub fn iota_r(a: &PairSpace) -> RightHeartObject {
    RightHeartObject { b: a.zero_map(&PairSpace::zero(a.field())) }
}

/// `[b : B ->> C] ↦ [D(b) : D(C) ↪ D(B)]`.
pub fn heart_dual(x: &RightHeartObject) -> LeftHeartObject {
    LeftHeartObject::new(dual_map(&x.b)).expect("dual of a surjection is injective")
}

/// Isomorphism in the heart, decided by the invariant triple.
pub fn heart_iso_left(x: &LeftHeartObject, y: &LeftHeartObject) -> bool {
    x.invariants() == y.invariants()
}

pub fn heart_iso_right(x: &RightHeartObject, y: &RightHeartObject) -> bool {
    x.invariants() == y.invariants()
}

/// `φ : Coim f -> Ker g` for composable `f, g` with `g f = 0`.
fn phi(f: &PairMap, g: &PairMap) -> Result<(PairMap, Kernel), HeartError> {
    let ker_g = g.kernel();
    let phi = f.coimage().descend(&ker_g.lift(f)?)?;
    Ok((phi, ker_g))
}

/// `ψ : Coker f -> Im g`.
fn psi(f: &PairMap, g: &PairMap) -> Result<PairMap, HeartError> {
    let im_g = g.image();
    Ok(f.cokernel().descend(&im_g.lift(g)?)?)
}

/// `H_ℓ^n(A)`, represented by `φ : Coim d^{n-1} -> Ker d^n`.
pub fn h_left(a: &SnComplex, n: i64) -> Result<LeftHeartObject, HeartError> {
    let (phi, _) = phi(&a.differential(n - 1), &a.differential(n))?;
    LeftHeartObject::new(phi)
}

/// The A2 isomorphism `T(H_ℓ^n(A)) -> H^n(embed(A))` induced by `Ker d^n ↪ A^n`.
pub fn realization_witness(a: &SnComplex, n: i64) -> Result<A2Morphism, HeartError> {
    let (phi, ker) = phi(&a.differential(n - 1), &a.differential(n))?;
    let t = LeftHeartObject::new(phi)?.realization();
    let h = a.embed_to_a2().cohomology(n);
    let w = A2Morphism::induced(&t, &h, &ker.inclusion);
    if !w.is_iso() {
        return Err(HeartError::InternalInconsistency(format!("realization map in degree {n} is not invertible")));
    }
    Ok(w)
}

/// `H_r^n(A)` by both recipes, with the comparison between them.
#[derive(Clone, Debug)]
pub struct RightHomology {
    /// `ψ : Coker d^{n-1} -> Im d^n`.
    pub direct: RightHeartObject,
    /// `Δ(H_ℓ^{-n}(ΔA))`.
    pub transported: RightHeartObject,
    /// `Coker d^{n-1} -> Δ(Ker Δd^{n-1})`, a pair isomorphism.
    pub alpha: PairMap,
    /// `Im d^n -> Δ(Coim Δd^n)`, a pair isomorphism.
    pub beta: PairMap,
}

/// `H_r^n(A)`, computed by `Δ`-transport and checked against the direct `ψ`.
pub fn h_right(a: &SnComplex, n: i64) -> Result<RightHomology, HeartError> {
    let f = a.differential(n - 1);
    let g = a.differential(n);
    let direct = RightHeartObject::new(psi(&f, &g)?)?;
    let transported = h_left(&a.delta(), -n)?.delta();

    let alpha = {
        let incl = delta_map(&f).kernel().inclusion;
        f.cokernel().descend(&delta_map(&incl))?
    };
    let beta = {
        let p = delta_map(&g).coimage().projection;
        let gamma = g.image().lift(&delta_map(&p))?;
        gamma
            .inverse()
            .ok_or_else(|| HeartError::InternalInconsistency("Δ(Coim Δg) -> Im g is not an isomorphism".into()))?
    };
    if !alpha.is_iso() {
        return Err(HeartError::InternalInconsistency("Coker f -> Δ(Ker Δf) is not an isomorphism".into()));
    }
    if alpha.codomain() != transported.map().domain() || beta.codomain() != transported.map().codomain() {
        return Err(HeartError::InternalInconsistency("transported object has unexpected endpoints".into()));
    }
    if beta.after(direct.map()) != transported.map().after(&alpha) {
        return Err(HeartError::InternalInconsistency(format!("Δ-transport and ψ disagree in degree {n}")));
    }
    Ok(RightHomology { direct, transported, alpha, beta })
}

/// The isomorphism `q_ℓ H_ℓ^n(A) = Coker φ -> Ker ψ = q_r H_r^n(A)`.
pub fn q_comparison(a: &SnComplex, n: i64) -> Result<PairMap, HeartError> {
    let ladder = crate::sn::HomologyLadder::new(&a.differential(n - 1), &a.differential(n))?;
    let inv = ladder
        .x_to_coker_phi
        .inverse()
        .ok_or_else(|| HeartError::InternalInconsistency("X -> Coker φ is not invertible".into()))?;
    Ok(ladder.x_to_ker_psi.after(&inv))
}

/// Witness for `heart_dual(H_r^{-n}(A)) ≅ H_ℓ^n(D A)`: pair isomorphisms on the
/// domains and codomains of the two representing monics, forming a commuting square.
pub fn heart_dual_witness(a: &SnComplex, n: i64) -> Result<(PairMap, PairMap), HeartError> {
    let f = a.differential(-n - 1);
    let g = a.differential(-n);
    let left = heart_dual(&h_right(a, -n)?.direct);
    let right = h_left(&a.dual(), n)?;
    let on_domain = dual_image_iso(&g)?;
    let on_codomain = dual_cokernel_iso(&f)?;
    if on_domain.domain() != left.map().domain()
        || on_domain.codomain() != right.map().domain()
        || on_codomain.domain() != left.map().codomain()
        || on_codomain.codomain() != right.map().codomain()
    {
        return Err(HeartError::InternalInconsistency("duality witness has unexpected endpoints".into()));
    }
    if right.map().after(&on_domain) != on_codomain.after(left.map()) {
        return Err(HeartError::InternalInconsistency("duality square does not commute".into()));
    }
    if !on_domain.is_iso() || !on_codomain.is_iso() {
        return Err(HeartError::InternalInconsistency("duality witness is not invertible".into()));
    }
    Ok((on_domain, on_codomain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rationals
    }

    fn f0() -> PairSpace {
        PairSpace::hausdorff(q(), 1)
    }

    fn ff() -> PairSpace {
        PairSpace::indiscrete(q(), 1)
    }

    fn dense_map() -> PairMap {
        PairMap::new(f0(), ff(), Matrix::identity(q(), 1)).unwrap()
    }

    fn inv(x: (usize, usize, usize)) -> HeartInvariants {
        HeartInvariants::from_triple(x)
    }

    #[test]
    fn h_left_examples() {
        let v = PairSpace::from_null_vectors(q(), 3, &[vec![q().one(), q().zero(), q().zero()]]);
        let x = h_left(&SnComplex::concentrated(&v, 0), 0).unwrap();
        assert_eq!(x, iota_l(&v));
        let s = h_left(&SnComplex::two_term(&dense_map(), -1), 0).unwrap();
        assert_eq!(s.invariants(), inv((1, 0, 0)));
        assert!(s.q_l().object.is_zero());
    }

    #[test]
    fn h_right_examples() {
        let v = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().one()]]);
        let r = h_right(&SnComplex::concentrated(&v, 0), 0).unwrap();
        assert_eq!(r.direct, iota_r(&v));
        let s_r = h_right(&SnComplex::two_term(&dense_map(), 0), 0).unwrap();
        assert_eq!(s_r.direct.invariants(), inv((1, 0, 0)));
        assert!(s_r.direct.q_r().object.is_zero());
    }

    #[test]
    fn iota_invariants() {
        assert!(iota_l(&PairSpace::zero(q())).invariants().is_zero());
        assert_eq!(iota_l(&ff()).invariants(), inv((0, 1, 0)));
        assert_eq!(iota_r(&f0()).invariants(), inv((0, 0, 1)));
        let v = PairSpace::from_null_vectors(q(), 3, &[vec![q().one(), q().zero(), q().zero()]]);
        assert_eq!(iota_l(&v).invariants(), inv((0, 1, 2)));
        assert_eq!(iota_r(&v).invariants(), inv((0, 1, 2)));
        assert_eq!(iota_l(&v).q_l().object, v);
    }

    #[test]
    fn heart_dual_examples() {
        let v = PairSpace::hausdorff(q(), 2);
        assert!(heart_iso_left(&heart_dual(&iota_r(&v)), &iota_l(&v)));
        assert!(heart_dual(&iota_r(&ff())).invariants().is_zero());
        let s_r = RightHeartObject::new(dense_map()).unwrap();
        assert_eq!(heart_dual(&s_r), iota_l(&f0()));
    }

    #[test]
    fn singular_object_is_not_hausdorff_iota() {
        let s = LeftHeartObject::new(dense_map()).unwrap();
        assert!(!heart_iso_left(&s, &iota_l(&f0())));
        assert!(heart_iso_left(&s, &s));
    }

    #[test]
    fn adjunction_triangles() {
        let s = LeftHeartObject::new(dense_map()).unwrap();
        let v = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().one()]]);
        assert!(adjunction_failures(&s, &RightHeartObject::new(dense_map()).unwrap()).is_empty());
        assert!(adjunction_failures(&iota_l(&v), &iota_r(&v)).is_empty());
    }

    #[test]
    fn non_monic_rejected() {
        assert_eq!(LeftHeartObject::new(f0().zero_map(&f0())), Err(HeartError::NotMonic));
        assert_eq!(RightHeartObject::new(f0().zero_map(&f0())), Err(HeartError::NotEpic));
    }
}
