//! `D ℋ_n(G, M) ≅ ℋ_b^n(G, D M)` with explicit witnesses.

use serde::Serialize;

use crate::complexes::{ChainMap, SnComplex};
use crate::hearts::{h_left, heart_dual, heart_dual_witness, HeartInvariants, LeftHeartObject};
use crate::linalg::Matrix;
use crate::sn::{dual_cokernel_iso, PairMap, PairSpace};

use super::resolution::{bar_segment, cobar_segment};
use super::{FiniteGroup, GMap, GPairModule, GroupError, Limits};

/// `e_{(g, j)} ↦ e_{(g^{-1}, j)}` on `F[G^k] ⊗ F^a`, tuples inverted coordinatewise.
fn inversion(group: &FiniteGroup, k: usize, a: usize, field: crate::Field) -> Matrix {
    let n = group.tuple_count(k);
    let perm = Matrix::from_fn(field, n, n, |r, c| {
        let t: Vec<usize> = group.tuple(k, c).into_iter().map(|g| group.inv(g)).collect();
        if group.tuple_index(&t) == r {
            field.one()
        } else {
            field.zero()
        }
    });
    perm.kron(&Matrix::identity(field, a))
}

/// `D(↑E) -> ⇑D(E)`, `λ ↦ (x ↦ λ(x^{-1} ⊗ ·))`.
pub fn induced_dual_iso(group: &FiniteGroup, e: &PairSpace) -> Result<GMap, GroupError> {
    let src = GPairModule::induce(group, e).dual();
    let tgt = GPairModule::coinduce(group, &crate::sn::dual_space(e));
    let m = inversion(group, 1, tgt.dim() / group.order().max(1), e.field());
    let map = PairMap::new(src.forget(), tgt.forget(), m)?;
    let g = GMap::new(src, tgt, map)?;
    if !g.map().is_iso() {
        return Err(GroupError::InternalInconsistency("D(↑E) -> ⇑D(E) is not invertible".into()));
    }
    Ok(g)
}

/// `D(M_G) -> (D M)^G`.
pub fn coinvariants_duality(m: &GPairModule) -> Result<PairMap, GroupError> {
    let iso = dual_cokernel_iso(&m.coinvariant_bundle())?;
    let inv = m.dual().invariants();
    let ker = crate::sn::dual_map(&m.coinvariant_bundle()).kernel();
    if ker.subspace() != inv.subspace() {
        return Err(GroupError::InternalInconsistency("Ker D(bundle) differs from (D M)^G".into()));
    }
    let out = PairMap::new(iso.domain().clone(), inv.object, iso.matrix().clone())?;
    if !out.is_iso() {
        return Err(GroupError::InternalInconsistency("D(M_G) -> (D M)^G is not invertible".into()));
    }
    Ok(out)
}

/// Maps induced by a chain map on the domain and codomain of `H_ℓ^n`.
fn h_left_induced(f: &ChainMap, n: i64) -> Result<(PairMap, PairMap), GroupError> {
    let (s, t) = (f.source(), f.target());
    let coim_s = s.differential(n - 1).coimage();
    let coim_t = t.differential(n - 1).coimage();
    let on_domain = coim_s.descend(&coim_t.projection.after(&f.component(n - 1)))?;
    let ker_s = s.differential(n).kernel();
    let ker_t = t.differential(n).kernel();
    let on_codomain = ker_t.lift(&f.component(n).after(&ker_s.inclusion))?;
    Ok((on_domain, on_codomain))
}

/// The witness square `heart_dual(ℋ_n(G, M)) -> ℋ_b^n(G, D M)`: both sides and the
/// pair isomorphisms on the domains and codomains of their representing monics.
pub fn duality_witness(
    m: &GPairModule,
    n: usize,
    limits: &Limits,
) -> Result<(LeftHeartObject, LeftHeartObject, PairMap, PairMap), GroupError> {
    limits.admit(m.group())?;
    limits.check(m.group().order(), n, m.dim())?;
    let group = m.group();
    let ni = n as i64;
    let from = n.saturating_sub(1);
    let chains = bar_segment(m, from, n + 1)?;
    let dm = m.dual();
    let cochains = cobar_segment(&dm, from, n + 1)?;
    let dual_chains: SnComplex = chains.dual();

    let (wd, wc) = heart_dual_witness(&chains, ni)?;
    let theta =
        ChainMap::from_matrices(&dual_chains, &cochains, |k| inversion(group, k as usize, dm.dim(), dm.field()))?;
    let (td, tc) = h_left_induced(&theta, ni)?;

    let left = heart_dual(&super::l1_homology(m, n, limits)?);
    let right = h_left(&cochains, ni)?;
    let on_domain = td.after(&wd);
    let on_codomain = tc.after(&wc);
    if on_domain.domain() != left.map().domain() || on_codomain.domain() != left.map().codomain() {
        return Err(GroupError::InternalInconsistency("duality witness starts at the wrong object".into()));
    }
    if right.map().after(&on_domain) != on_codomain.after(left.map()) || !on_domain.is_iso() || !on_codomain.is_iso() {
        return Err(GroupError::InternalInconsistency(format!("duality witness fails in degree {n}")));
    }
    Ok((left, right, on_domain, on_codomain))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDuality {
    pub degree: usize,
    pub homology_dual: HeartInvariants,
    pub cohomology: HeartInvariants,
    pub witness_domain: Matrix,
    pub witness_codomain: Matrix,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub degrees: Vec<DegreeDuality>,
    /// `D(↑E) ≅ ⇑D(E)` for `E = ↓M`.
    pub induced_dual: bool,
    /// `D((⊥_k M)_G) ≅ (D ⊥_k M)^G` for `k = -1, 0`, where `⊥_{-1} M = M`.
    pub intertwining: bool,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.induced_dual && self.intertwining && self.degrees.iter().all(|d| d.passed)
    }
}

/// Both sides of the duality theorem in degrees `0..=max_degree`, compared by
/// invariant triples and certified by explicit witnesses.
pub fn duality_check(m: &GPairModule, max_degree: usize, limits: &Limits) -> Result<DualityReport, GroupError> {
    limits.check(m.group().order(), max_degree, m.dim())?;
    let mut degrees = Vec::new();
    for n in 0..=max_degree {
        let (left, right, wd, wc) = duality_witness(m, n, limits)?;
        degrees.push(DegreeDuality {
            degree: n,
            homology_dual: left.invariants(),
            cohomology: right.invariants(),
            witness_domain: wd.matrix().clone(),
            witness_codomain: wc.matrix().clone(),
            passed: left.invariants() == right.invariants(),
        });
    }
    let induced_dual = induced_dual_iso(m.group(), m.space()).is_ok();
    let bottom0 = GPairModule::induce(m.group(), m.space());
    let intertwining = coinvariants_duality(m).is_ok() && coinvariants_duality(&bottom0).is_ok();
    Ok(DualityReport { degrees, induced_dual, intertwining })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hearts::iota_l;
    use crate::linalg::Field;

    fn fp(p: u32) -> Field {
        Field::Prime { p }
    }

    #[test]
    fn trivial_group_duality_is_dual_of_coefficients() {
        let g = FiniteGroup::trivial();
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).one(), fp(3).zero()]]);
        let m = GPairModule::trivial(&g, &e);
        let (left, right, _, _) = duality_witness(&m, 0, &Limits::default()).unwrap();
        assert_eq!(right, iota_l(&crate::sn::dual_space(&e)));
        assert_eq!(left.invariants(), right.invariants());
    }

    #[test]
    fn z2_trivial_coefficients() {
        let g = FiniteGroup::cyclic(2);
        let m = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(2), 1));
        let r = duality_check(&m, 2, &Limits::default()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn non_hausdorff_coefficients() {
        let g = FiniteGroup::cyclic(3);
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).one(), fp(3).one()]]);
        for m in [GPairModule::trivial(&g, &e), GPairModule::induce(&g, &PairSpace::indiscrete(fp(3), 1))] {
            let r = duality_check(&m, 2, &Limits::default()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
