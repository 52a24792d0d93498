//! Units and counits of `↑ ⊣ ↓ ⊣ ⇑` and `( )_G ⊣ ε ⊣ ( )^G`.

use serde::Serialize;

use crate::linalg::Matrix;
use crate::sn::{PairMap, PairSpace};

use super::{FiniteGroup, GMap, GPairModule};

/// `η_E : E -> ↓↑E`, `e ↦ 1 ⊗ e`.
pub fn induction_unit(group: &FiniteGroup, e: &PairSpace) -> PairMap {
    let field = e.field();
    let mut pick = Matrix::zeros(field, group.order(), 1);
    pick.set(group.identity(), 0, field.one());
    let m = pick.kron(&Matrix::identity(field, e.dim()));
    PairMap::new_unchecked(e.clone(), GPairModule::induce(group, e).forget(), m)
}

/// `ε_M : ↑↓M -> M`, `g ⊗ m ↦ g·m`.
pub fn induction_counit(m: &GPairModule) -> GMap {
    let field = m.field();
    let src = GPairModule::induce(m.group(), m.space());
    let mat = m.action().iter().fold(Matrix::zeros(field, m.dim(), 0), |acc, r| acc.hstack(r));
    GMap::new(src.clone(), m.clone(), PairMap::new_unchecked(src.forget(), m.forget(), mat))
        .expect("the induction counit is equivariant")
}

/// `η_M : M -> ⇑↓M`, `(η m)(x) = x·m`.
pub fn coinduction_unit(m: &GPairModule) -> GMap {
    let field = m.field();
    let tgt = GPairModule::coinduce(m.group(), m.space());
    let mat = m.action().iter().fold(Matrix::zeros(field, 0, m.dim()), |acc, r| acc.vstack(r));
    GMap::new(m.clone(), tgt.clone(), PairMap::new_unchecked(m.forget(), tgt.forget(), mat))
        .expect("the coinduction unit is equivariant")
}

/// `ε_E : ↓⇑E -> E`, `Φ ↦ Φ(1)`.
pub fn coinduction_counit(group: &FiniteGroup, e: &PairSpace) -> PairMap {
    let field = e.field();
    let mut pick = Matrix::zeros(field, 1, group.order());
    pick.set(0, group.identity(), field.one());
    let m = pick.kron(&Matrix::identity(field, e.dim()));
    PairMap::new_unchecked(GPairModule::coinduce(group, e).forget(), e.clone(), m)
}

/// `M -> ε(M_G)`, the coinvariant projection.
pub fn coinvariants_unit(m: &GPairModule) -> GMap {
    let co = m.coinvariants();
    GMap::new(m.clone(), GPairModule::trivial(m.group(), &co.object), co.projection)
        .expect("coinvariant projection is equivariant")
}

/// `(εE)_G -> E`; the coinvariants of a trivial module are the module itself.
pub fn coinvariants_counit(group: &FiniteGroup, e: &PairSpace) -> PairMap {
    let co = GPairModule::trivial(group, e).coinvariants();
    co.descend(&e.identity()).expect("the bundle of a trivial module is zero")
}

/// `E -> (εE)^G`.
pub fn invariants_unit(group: &FiniteGroup, e: &PairSpace) -> PairMap {
    let inv = GPairModule::trivial(group, e).invariants();
    inv.lift(&e.identity()).expect("the bundle of a trivial module is zero")
}

/// `ε(M^G) -> M`, the invariant inclusion.
pub fn invariants_counit(m: &GPairModule) -> GMap {
    let inv = m.invariants();
    GMap::new(GPairModule::trivial(m.group(), &inv.object), m.clone(), inv.inclusion)
        .expect("invariant inclusion is equivariant")
}

/// `f_G : M_G -> N_G`.
pub fn coinvariants_map(f: &GMap) -> PairMap {
    let src = f.source().coinvariants();
    let tgt = f.target().coinvariants();
    src.descend(&tgt.projection.after(f.map())).expect("equivariant maps preserve the bundle image")
}

/// `f^G : M^G -> N^G`.
pub fn invariants_map(f: &GMap) -> PairMap {
    let src = f.source().invariants();
    let tgt = f.target().invariants();
    tgt.lift(&f.map().after(&src.inclusion)).expect("equivariant maps preserve invariants")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub checks: Vec<LawCheck>,
}

impl AdjunctionReport {
    fn record(&mut self, name: String, passed: bool) {
        self.checks.push(LawCheck { name, passed });
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Triangle identities on every sample module and space, and naturality of the
/// units and counits along every sample map.
pub fn verify_adjunctions(
    group: &FiniteGroup,
    modules: &[GPairModule],
    spaces: &[PairSpace],
    module_maps: &[GMap],
    space_maps: &[PairMap],
) -> AdjunctionReport {
    let mut r = AdjunctionReport::default();
    for (k, e) in spaces.iter().enumerate() {
        // ↑ ⊣ ↓ : ε_{↑E} ∘ ↑η_E = id
        let up = GPairModule::induce(group, e);
        let lhs = induction_counit(&up).map().after(GMap::induce(group, &induction_unit(group, e)).map());
        r.record(format!("induce-restrict triangle on space {k}"), lhs == up.space().identity());
        // ↓ ⊣ ⇑ : ⇑ε_E ∘ η_{⇑E} = id
        let co = GPairModule::coinduce(group, e);
        let lhs = GMap::coinduce(group, &coinduction_counit(group, e)).map().after(coinduction_unit(&co).map());
        r.record(format!("restrict-coinduce triangle on space {k}"), lhs == co.space().identity());
        // ( )_G ⊣ ε : counit_E ∘ (unit_{εE}) = id
        let triv = GPairModule::trivial(group, e);
        let lhs = coinvariants_counit(group, e).after(coinvariants_unit(&triv).map());
        r.record(format!("coinvariants-trivial triangle on space {k}"), lhs == e.identity());
        // ε ⊣ ( )^G : counit_{εE} ∘ unit_E = id
        let lhs = invariants_counit(&triv).map().after(&invariants_unit(group, e));
        r.record(format!("trivial-invariants triangle on space {k}"), lhs == e.identity());
    }
    for (k, m) in modules.iter().enumerate() {
        // ↓ε_M ∘ η_{↓M} = id
        let lhs = induction_counit(m).map().after(&induction_unit(group, m.space()));
        r.record(format!("induce-restrict triangle on module {k}"), lhs == m.space().identity());
        // ε_{↓M} ∘ ↓η_M = id
        let lhs = coinduction_counit(group, m.space()).after(coinduction_unit(m).map());
        r.record(format!("restrict-coinduce triangle on module {k}"), lhs == m.space().identity());
        // ε(counit) ∘ unit_{ε M_G} ... : unit_M descends to the identity of M_G
        let unit = coinvariants_unit(m);
        let lhs = coinvariants_counit(group, &m.coinvariants().object).after(&coinvariants_map(&unit));
        r.record(format!("coinvariants-trivial triangle on module {k}"), lhs == m.coinvariants().object.identity());
        let counit = invariants_counit(m);
        let lhs = invariants_map(&counit).after(&invariants_unit(group, &m.invariants().object));
        r.record(format!("trivial-invariants triangle on module {k}"), lhs == m.invariants().object.identity());
    }
    for (k, f) in module_maps.iter().enumerate() {
        let (a, b) = (f.source(), f.target());
        let up = GMap::induce(group, f.map());
        r.record(
            format!("induction counit natural along module map {k}"),
            induction_counit(b).map().after(up.map()) == f.map().after(induction_counit(a).map()),
        );
        let co = GMap::coinduce(group, f.map());
        r.record(
            format!("coinduction unit natural along module map {k}"),
            co.map().after(coinduction_unit(a).map()) == coinduction_unit(b).map().after(f.map()),
        );
        r.record(
            format!("coinvariants unit natural along module map {k}"),
            coinvariants_unit(b).map().after(f.map()) == coinvariants_map(f).after(coinvariants_unit(a).map()),
        );
        r.record(
            format!("invariants counit natural along module map {k}"),
            invariants_counit(b).map().after(&invariants_map(f)) == f.map().after(invariants_counit(a).map()),
        );
    }
    for (k, h) in space_maps.iter().enumerate() {
        let up = GMap::induce(group, h);
        r.record(
            format!("induction unit natural along space map {k}"),
            up.map().after(&induction_unit(group, h.domain())) == induction_unit(group, h.codomain()).after(h),
        );
        let co = GMap::coinduce(group, h);
        r.record(
            format!("coinduction counit natural along space map {k}"),
            coinduction_counit(group, h.codomain()).after(co.map()) == h.after(&coinduction_counit(group, h.domain())),
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn f2() -> Field {
        Field::Prime { p: 2 }
    }

    #[test]
    fn fold_map_is_the_counit_on_a_trivial_module() {
        let g = FiniteGroup::cyclic(2);
        let t = GPairModule::trivial(&g, &PairSpace::hausdorff(f2(), 1));
        assert_eq!(*induction_counit(&t).map().matrix(), Matrix::from_i64(f2(), &[&[1, 1]]));
    }

    #[test]
    fn trivial_group_adjunctions_are_identities() {
        let g = FiniteGroup::trivial();
        let e = PairSpace::from_null_vectors(f2(), 2, &[vec![f2().one(), f2().zero()]]);
        assert_eq!(induction_unit(&g, &e), e.identity());
        assert_eq!(coinduction_counit(&g, &e), e.identity());
        let m = GPairModule::trivial(&g, &e);
        assert_eq!(*induction_counit(&m).map(), e.identity());
        assert_eq!(*coinvariants_unit(&m).map(), e.identity());
        assert_eq!(*invariants_counit(&m).map(), e.identity());
        let r = verify_adjunctions(&g, &[m.clone()], &[e.clone()], &[GMap::identity(&m)], &[e.identity()]);
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn adjunctions_on_klein_samples() {
        let g = FiniteGroup::klein();
        let e = PairSpace::from_null_vectors(f2(), 2, &[vec![f2().one(), f2().one()]]);
        let ind = GPairModule::induce(&g, &e);
        let co = GPairModule::coinduce(&g, &e);
        let counit = induction_counit(&GPairModule::trivial(&g, &e));
        let h = PairMap::new(e.clone(), PairSpace::indiscrete(f2(), 1), Matrix::from_i64(f2(), &[&[1, 0]])).unwrap();
        let r = verify_adjunctions(&g, &[ind, co, counit.target().clone()], &[e.clone()], &[counit], &[h]);
        assert!(r.passed(), "{:?}", r.failures());
        assert!(r.checks.len() > 10);
    }
}
