//! Finite groups acting on pair spaces, and the homology theories built from them.

mod adjunctions;
mod classical;
mod duality;
mod resolution;
mod tensor;

use thiserror::Error;

use crate::complexes::ComplexError;
use crate::hearts::HeartError;
use crate::linalg::{Field, LinalgError, Matrix, Subspace};
use crate::sn::{Biproduct, Cokernel, Kernel, PairMap, PairSpace, SnError};

pub use adjunctions::{
    coinduction_counit, coinduction_unit, coinvariants_counit, coinvariants_map, coinvariants_unit, induction_counit,
    induction_unit, invariants_counit, invariants_map, invariants_unit, verify_adjunctions, AdjunctionReport,
    LawCheck,
};
pub use classical::{
    classical_l1, hausdorff_les, hausdorff_les_witness, hausdorffified, hausdorffified_comparison, les_coefficients,
    q_comparison_l1, HausdorffLes, ModuleSes, SesMorphism,
};
pub use duality::{
    coinvariants_duality, duality_check, duality_witness, induced_dual_iso, DegreeDuality, DualityReport,
};
pub use resolution::{
    bar_complex, bar_resolution, bounded_cohomology, cobar_complex, coinvariant_oracle, equivariant_splitting,
    l1_homology, ResolutionData,
};
pub use tensor::{bot_section, hom_g, is_bot_projective, tensor_over_g};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group of order {order} exceeds the order cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("map is not equivariant")]
    NotEquivariant,
    #[error("modules over different groups or fields")]
    Mismatch,
    #[error("short sequence is not strict exact: {0}")]
    NotStrictExact(String),
    #[error("resource limit exceeded: {needed} > {cap}")]
    ResourceLimit { needed: u128, cap: u128 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Heart(#[from] HeartError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Sn(#[from] SnError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Caps on group order and on bar-complex size `|G|^{n+1}·dim M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub resource_cap: u128,
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { resource_cap: 100_000, max_order: 12 }
    }
}

impl Limits {
    /// Fails when `|G|^{n+1}·dim` exceeds the resource cap.
    pub fn check(&self, order: usize, n: usize, dim: usize) -> Result<(), GroupError> {
        let mut needed = dim.max(1) as u128;
        for _ in 0..=n {
            needed = needed.saturating_mul(order as u128);
        }
        if needed > self.resource_cap {
            return Err(GroupError::ResourceLimit { needed, cap: self.resource_cap });
        }
        Ok(())
    }

    pub fn admit(&self, group: &FiniteGroup) -> Result<(), GroupError> {
        if group.order() > self.max_order {
            return Err(GroupError::OrderCap { order: group.order(), cap: self.max_order });
        }
        Ok(())
    }
}

/// A finite group given by its multiplication table: `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty element list".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotAGroup(format!("table is not {n}x{n}")));
        }
        if let Some(bad) = table.iter().flatten().find(|&&x| x >= n) {
            return Err(GroupError::NotAGroup(format!("entry {bad} out of range")));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!(
                            "({0}{1}){2} != {0}({1}{2})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| GroupError::NotAGroup(format!("{} has no inverse", names[a])))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup { names, table, identity, inverses })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0, "cyclic group of order 0");
        let names = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(names, table).expect("cyclic table is a group")
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// `G × H`, element `(g, h)` at index `g·|H| + h`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let m = h.order();
        let n = g.order() * m;
        let names = (0..n).map(|i| format!("({},{})", g.names[i / m], h.names[i % m])).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m)).collect())
            .collect();
        FiniteGroup::new(names, table).expect("product of groups is a group")
    }

    pub fn klein() -> FiniteGroup {
        FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of a tuple of group elements, first coordinate most significant.
    pub fn tuple_index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.order() + x)
    }

    /// The tuple of length `k` with the given index.
    pub fn tuple(&self, k: usize, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = index % self.order();
            index /= self.order();
        }
        t
    }

    pub fn tuple_count(&self, k: usize) -> usize {
        self.order().pow(k as u32)
    }

    /// Left regular permutation matrix of `g`: `e_h ↦ e_{gh}`.
    fn left_regular(&self, field: Field, g: usize) -> Matrix {
        let n = self.order();
        Matrix::from_fn(field, n, n, |r, c| if r == self.mul(g, c) { field.one() } else { field.zero() })
    }

    /// `e_x ↦ e_{x g^{-1}}`, so that `(gΦ)(x) = Φ(xg)` on functions.
    fn right_regular(&self, field: Field, g: usize) -> Matrix {
        let n = self.order();
        Matrix::from_fn(field, n, n, |r, c| if c == self.mul(r, g) { field.one() } else { field.zero() })
    }
}

/// A pair space with a null-preserving linear action of a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPairModule {
    group: FiniteGroup,
    space: PairSpace,
    action: Vec<Matrix>,
}

impl GPairModule {
    /// Validates shape, the homomorphism law and null preservation.
    pub fn new(group: FiniteGroup, space: PairSpace, action: Vec<Matrix>) -> Result<GPairModule, GroupError> {
        let (n, d) = (group.order(), space.dim());
        if action.len() != n {
            return Err(GroupError::NotAModule(format!("{} action matrices for a group of order {n}", action.len())));
        }
        for (g, m) in action.iter().enumerate() {
            if m.rows() != d || m.cols() != d || m.field() != space.field() {
                return Err(GroupError::NotAModule(format!("action of {} has the wrong shape", group.names[g])));
            }
            if space.null().image_under(m).map(|img| !space.null().contains(&img)).unwrap_or(true) {
                return Err(GroupError::NotAModule(format!("action of {} does not preserve the null", group.names[g])));
            }
        }
        if action[group.identity] != Matrix::identity(space.field(), d) {
            return Err(GroupError::NotAModule("identity does not act trivially".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if &action[a] * &action[b] != action[group.mul(a, b)] {
                    return Err(GroupError::NotAModule(format!(
                        "ρ({})ρ({}) != ρ({})",
                        group.names[a],
                        group.names[b],
                        group.names[group.mul(a, b)]
                    )));
                }
            }
        }
        Ok(GPairModule { group, space, action })
    }

    pub(crate) fn new_unchecked(group: FiniteGroup, space: PairSpace, action: Vec<Matrix>) -> GPairModule {
        debug_assert!(GPairModule::new(group.clone(), space.clone(), action.clone()).is_ok());
        GPairModule { group, space, action }
    }

    /// `E` with every element acting as the identity.
    pub fn trivial(group: &FiniteGroup, e: &PairSpace) -> GPairModule {
        let id = Matrix::identity(e.field(), e.dim());
        GPairModule { group: group.clone(), space: e.clone(), action: vec![id; group.order()] }
    }

    /// `↑E = F[G] ⊗ E`, `h·(g ⊗ e) = hg ⊗ e`; basis `(g, i)` at `g·dim E + i`.
    pub fn induce(group: &FiniteGroup, e: &PairSpace) -> GPairModule {
        let field = e.field();
        let space = group_indexed(group, e);
        let id = Matrix::identity(field, e.dim());
        let action = (0..group.order()).map(|h| group.left_regular(field, h).kron(&id)).collect();
        GPairModule::new_unchecked(group.clone(), space, action)
    }

    /// `⇑E = Maps(G, E)`, `(hΦ)(x) = Φ(xh)`; the value at `x` sits in block `x`.
    pub fn coinduce(group: &FiniteGroup, e: &PairSpace) -> GPairModule {
        let field = e.field();
        let space = group_indexed(group, e);
        let id = Matrix::identity(field, e.dim());
        let action = (0..group.order()).map(|h| group.right_regular(field, h).kron(&id)).collect();
        GPairModule::new_unchecked(group.clone(), space, action)
    }

    /// The underlying pair space.
    pub fn forget(&self) -> PairSpace {
        self.space.clone()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn space(&self) -> &PairSpace {
        &self.space
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn rho(&self, g: usize) -> &Matrix {
        &self.action[g]
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn action_map(&self, g: usize) -> PairMap {
        PairMap::new_unchecked(self.space.clone(), self.space.clone(), self.action[g].clone())
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = Matrix::identity(self.field(), self.dim());
        self.action.iter().all(|m| *m == id)
    }

    /// `D M` with the contragredient action `g ↦ D(ρ(g^{-1}))`.
    pub fn dual(&self) -> GPairModule {
        let space = crate::sn::dual_space(&self.space);
        let action = (0..self.group.order())
            .map(|g| crate::sn::dual_map(&self.action_map(self.group.inv(g))).matrix().clone())
            .collect();
        GPairModule::new_unchecked(self.group.clone(), space, action)
    }

    pub fn direct_sum(&self, other: &GPairModule) -> Result<GPairModule, GroupError> {
        self.compatible(other)?;
        let space = Biproduct::of(&self.space, &other.space).object;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.block_diag(b)).collect();
        Ok(GPairModule::new_unchecked(self.group.clone(), space, action))
    }

    /// The diagonal action on `A ⊗ B`.
    pub fn tensor(&self, other: &GPairModule) -> Result<GPairModule, GroupError> {
        self.compatible(other)?;
        let space = crate::sn::tensor(&self.space, &other.space);
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.kron(b)).collect();
        Ok(GPairModule::new_unchecked(self.group.clone(), space, action))
    }

    pub(crate) fn compatible(&self, other: &GPairModule) -> Result<(), GroupError> {
        if self.group != other.group || self.field() != other.field() {
            return Err(GroupError::Mismatch);
        }
        Ok(())
    }

    /// The submodule generated by a vector: the span of its orbit.
    pub fn orbit_span(&self, v: &[crate::Scalar]) -> Subspace {
        let vectors: Vec<Vec<crate::Scalar>> = self.action.iter().map(|m| m.apply(v)).collect();
        Subspace::span(self.field(), self.dim(), &vectors)
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        self.action.iter().all(|m| s.image_under(m).map(|img| s.contains(&img)).unwrap_or(false))
    }

    /// An invariant subspace as a module with the induced (strict) null, and its inclusion.
    pub fn submodule(&self, s: &Subspace) -> Result<GMap, GroupError> {
        if !self.is_invariant(s) {
            return Err(GroupError::NotAModule("subspace is not invariant".into()));
        }
        let null = s.intersect(self.space.null())?.relative_to(s)?;
        let space = PairSpace::new(null);
        let incl = s.inclusion();
        let action = self
            .action
            .iter()
            .map(|m| s.coordinates_of_columns(&(m * &incl)))
            .collect::<Result<Vec<_>, _>>()?;
        let sub = GPairModule::new_unchecked(self.group.clone(), space.clone(), action);
        let map = PairMap::new(space, self.space.clone(), incl)?;
        GMap::new(sub, self.clone(), map)
    }

    /// The quotient by an invariant subspace with the image null, and the projection.
    pub fn quotient(&self, s: &Subspace) -> Result<GMap, GroupError> {
        if !self.is_invariant(s) {
            return Err(GroupError::NotAModule("subspace is not invariant".into()));
        }
        let qp = s.quotient_presentation();
        let space = PairSpace::new(self.space.null().image_under(&qp.projection)?);
        let action = self.action.iter().map(|m| &(&qp.projection * m) * &qp.section).collect();
        let quo = GPairModule::new_unchecked(self.group.clone(), space.clone(), action);
        let map = PairMap::new(self.space.clone(), space, qp.projection)?;
        GMap::new(self.clone(), quo, map)
    }

    /// `(m_g)_g ↦ Σ_g (m_g − g m_g)` from `⊕_G M`; coinvariants are its cokernel.
    pub fn coinvariant_bundle(&self) -> PairMap {
        let field = self.field();
        let id = Matrix::identity(field, self.dim());
        let blocks = self.action.iter().fold(Matrix::zeros(field, self.dim(), 0), |acc, m| acc.hstack(&(&id - m)));
        PairMap::new_unchecked(group_indexed(&self.group, &self.space), self.space.clone(), blocks)
    }

    /// `m ↦ (m − g m)_g` into `Maps(G, M)`; invariants are its kernel.
    pub fn invariant_bundle(&self) -> PairMap {
        let field = self.field();
        let id = Matrix::identity(field, self.dim());
        let blocks = self.action.iter().fold(Matrix::zeros(field, 0, self.dim()), |acc, m| acc.vstack(&(&id - m)));
        PairMap::new_unchecked(self.space.clone(), group_indexed(&self.group, &self.space), blocks)
    }

    /// `M_G` with its projection.
    pub fn coinvariants(&self) -> Cokernel {
        self.coinvariant_bundle().cokernel()
    }

    /// `M^G` with its inclusion.
    pub fn invariants(&self) -> Kernel {
        self.invariant_bundle().kernel()
    }
}

/// `F[G] ⊗ E` as a pair space: `|G|` copies of `E` with null `F[G] ⊗ N_E`.
pub(crate) fn group_indexed(group: &FiniteGroup, e: &PairSpace) -> PairSpace {
    blocks(group.order(), e)
}

/// `⊕^k E` with the product null.
pub(crate) fn blocks(k: usize, e: &PairSpace) -> PairSpace {
    let field = e.field();
    let null = Matrix::identity(field, k).kron(&e.null().inclusion());
    PairSpace::new(Subspace::from_columns(&null))
}

/// An equivariant bounded map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMap {
    source: GPairModule,
    target: GPairModule,
    map: PairMap,
}

impl GMap {
    pub fn new(source: GPairModule, target: GPairModule, map: PairMap) -> Result<GMap, GroupError> {
        source.compatible(&target)?;
        if map.domain() != source.space() || map.codomain() != target.space() {
            return Err(GroupError::Sn(SnError::Shape("map endpoints differ from the module spaces".into())));
        }
        for g in 0..source.group.order() {
            if map.matrix() * source.rho(g) != target.rho(g) * map.matrix() {
                return Err(GroupError::NotEquivariant);
            }
        }
        Ok(GMap { source, target, map })
    }

    pub fn identity(m: &GPairModule) -> GMap {
        GMap { source: m.clone(), target: m.clone(), map: m.space.identity() }
    }

    pub fn source(&self) -> &GPairModule {
        &self.source
    }

    pub fn target(&self) -> &GPairModule {
        &self.target
    }

    pub fn map(&self) -> &PairMap {
        &self.map
    }

    pub fn compose(&self, inner: &GMap) -> Result<GMap, GroupError> {
        if inner.target != self.source {
            return Err(GroupError::Sn(SnError::Composability("GMap endpoints do not match".into())));
        }
        Ok(GMap { source: inner.source.clone(), target: self.target.clone(), map: self.map.compose(&inner.map)? })
    }

    pub fn scale(&self, s: &crate::Scalar) -> GMap {
        GMap { source: self.source.clone(), target: self.target.clone(), map: self.map.scale(s) }
    }

    /// `↑f = F[G] ⊗ f`.
    pub fn induce(group: &FiniteGroup, f: &PairMap) -> GMap {
        let src = GPairModule::induce(group, f.domain());
        let tgt = GPairModule::induce(group, f.codomain());
        let m = Matrix::identity(f.field(), group.order()).kron(f.matrix());
        GMap { map: PairMap::new_unchecked(src.space.clone(), tgt.space.clone(), m), source: src, target: tgt }
    }

    /// `⇑f = Maps(G, f)`.
    pub fn coinduce(group: &FiniteGroup, f: &PairMap) -> GMap {
        let src = GPairModule::coinduce(group, f.domain());
        let tgt = GPairModule::coinduce(group, f.codomain());
        let m = Matrix::identity(f.field(), group.order()).kron(f.matrix());
        GMap { map: PairMap::new_unchecked(src.space.clone(), tgt.space.clone(), m), source: src, target: tgt }
    }

    /// A bounded map between trivial modules.
    pub fn trivial(group: &FiniteGroup, f: &PairMap) -> GMap {
        GMap {
            source: GPairModule::trivial(group, f.domain()),
            target: GPairModule::trivial(group, f.codomain()),
            map: f.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::Prime { p: 2 }
    }

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn group_validation() {
        let bad = FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 1]]);
        assert!(matches!(bad, Err(GroupError::NotAGroup(_))));
        assert_eq!(FiniteGroup::klein().order(), 4);
        let g = FiniteGroup::cyclic(3);
        assert_eq!(g.inv(1), 2);
        assert_eq!(g.tuple(2, g.tuple_index(&[2, 1])), vec![2, 1]);
        assert!(Limits::default().admit(&FiniteGroup::cyclic(13)).is_err());
    }

    #[test]
    fn induce_swaps_over_z2() {
        let g = FiniteGroup::cyclic(2);
        let m = GPairModule::induce(&g, &PairSpace::hausdorff(f2(), 1));
        assert_eq!(m.dim(), 2);
        assert_eq!(*m.rho(1), Matrix::from_i64(f2(), &[&[0, 1], &[1, 0]]));
        let c = GPairModule::coinduce(&g, &PairSpace::zero(f2()));
        assert_eq!(c.dim(), 0);
        let e = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().zero()]]);
        let k = GPairModule::induce(&FiniteGroup::klein(), &e);
        assert_eq!(k.forget().dim(), 8);
        assert_eq!(k.space().null_dim(), 4);
    }

    #[test]
    fn coinvariants_and_invariants_examples() {
        let g = FiniteGroup::cyclic(2);
        let swap = GPairModule::induce(&g, &PairSpace::hausdorff(q(), 1));
        let co = swap.coinvariants();
        assert_eq!(co.object, PairSpace::hausdorff(q(), 1));
        let inv = swap.invariants();
        assert_eq!(inv.subspace(), &Subspace::span(q(), 2, &[vec![q().one(), q().one()]]));

        let e = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().one()]]);
        let t = GPairModule::trivial(&FiniteGroup::klein(), &e);
        assert_eq!(t.coinvariants().object, e);
        assert_eq!(t.invariants().object, e);

        let ind = GPairModule::induce(&FiniteGroup::cyclic(3), &e);
        assert!(ind.coinvariants().object.is_isomorphic(&e));
    }

    #[test]
    fn submodule_and_quotient() {
        let g = FiniteGroup::cyclic(2);
        let m = GPairModule::induce(&g, &PairSpace::hausdorff(f2(), 1));
        let s = m.orbit_span(&[f2().one(), f2().one()]);
        assert_eq!(s.dim(), 1);
        let i = m.submodule(&s).unwrap();
        let p = m.quotient(&s).unwrap();
        assert!(i.source().is_trivial_action());
        assert!(p.target().is_trivial_action());
        assert!(crate::sn::is_kernel_cokernel_pair(i.map(), p.map()));
        let not_inv = Subspace::span(f2(), 2, &[vec![f2().one(), f2().zero()]]);
        assert!(m.submodule(&not_inv).is_err());
    }

    #[test]
    fn dual_module_is_a_module() {
        let e = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().zero()]]);
        let m = GPairModule::induce(&FiniteGroup::cyclic(3), &e);
        let d = m.dual();
        assert!(GPairModule::new(d.group().clone(), d.space().clone(), d.action().to_vec()).is_ok());
        assert_eq!(d.dim(), 3);
    }

    #[test]
    fn equivariance_is_checked() {
        let g = FiniteGroup::cyclic(2);
        let m = GPairModule::induce(&g, &PairSpace::hausdorff(q(), 1));
        let t = GPairModule::trivial(&g, &PairSpace::hausdorff(q(), 1));
        let proj = PairMap::new(m.forget(), t.forget(), Matrix::from_i64(q(), &[&[1, 0]])).unwrap();
        assert_eq!(GMap::new(m.clone(), t.clone(), proj).unwrap_err(), GroupError::NotEquivariant);
        let fold = PairMap::new(m.forget(), t.forget(), Matrix::from_i64(q(), &[&[1, 1]])).unwrap();
        assert!(GMap::new(m, t, fold).is_ok());
    }
}
