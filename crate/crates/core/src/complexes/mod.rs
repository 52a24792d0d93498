//! Bounded cochain complexes of pair spaces.

mod a2;
mod truncate;

pub use a2::{A2Complex, A2Homology, A2Morphism, A2Rep, Subquotient};
pub use truncate::{Bound, Side};

use thiserror::Error;

use crate::linalg::{Field, Matrix};
use crate::sn::{delta_map, delta_space, dual_map, dual_space, Biproduct, PairMap, PairSpace, SnError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("differential {0} does not start at the object in degree {0}")]
    Endpoints(i64),
    #[error("d^{} ∘ d^{} ≠ 0", .0 + 1, .0)]
    NotAComplex(i64),
    #[error("chain map does not commute with differentials in degree {0}")]
    NotAChainMap(i64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Sn(#[from] SnError),
}

/// `A^lo -> A^{lo+1} -> … -> A^hi`, zero outside the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnComplex {
    field: Field,
    lo: i64,
    objects: Vec<PairSpace>,
    diffs: Vec<PairMap>,
}

impl SnComplex {
    /// `diffs[k]` maps `objects[k]` to `objects[k + 1]`.
    pub fn new(field: Field, lo: i64, objects: Vec<PairSpace>, diffs: Vec<PairMap>) -> Result<SnComplex, ComplexError> {
        if diffs.len() != objects.len().saturating_sub(1) {
            return Err(ComplexError::Shape(format!(
                "{} objects need {} differentials, got {}",
                objects.len(),
                objects.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.domain() != &objects[k] || d.codomain() != &objects[k + 1] {
                return Err(ComplexError::Endpoints(lo + k as i64));
            }
        }
        if objects.iter().any(|o| o.field() != field) {
            return Err(ComplexError::Shape("objects over a different field".into()));
        }
        for k in 1..diffs.len() {
            if !diffs[k].after(&diffs[k - 1]).is_zero() {
                return Err(ComplexError::NotAComplex(lo + k as i64 - 1));
            }
        }
        Ok(SnComplex { field, lo, objects, diffs })
    }

    pub fn zero(field: Field) -> SnComplex {
        SnComplex { field, lo: 0, objects: Vec::new(), diffs: Vec::new() }
    }

    /// `a` placed in degree `degree`.
    pub fn concentrated(a: &PairSpace, degree: i64) -> SnComplex {
        SnComplex { field: a.field(), lo: degree, objects: vec![a.clone()], diffs: Vec::new() }
    }

    /// A two-term complex `f` with domain in degree `degree`.
    pub fn two_term(f: &PairMap, degree: i64) -> SnComplex {
        SnComplex {
            field: f.field(),
            lo: degree,
            objects: vec![f.domain().clone(), f.codomain().clone()],
            diffs: vec![f.clone()],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Last degree of the window; `lo - 1` for an empty window.
    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object(&self, n: i64) -> PairSpace {
        self.index(n)
            .map(|k| self.objects[k].clone())
            .unwrap_or_else(|| PairSpace::zero(self.field))
    }

    pub fn differential(&self, n: i64) -> PairMap {
        match self.index(n) {
            Some(k) if k < self.diffs.len() => self.diffs[k].clone(),
            _ => self.object(n).zero_map(&self.object(n + 1)),
        }
    }

    fn index(&self, n: i64) -> Option<usize> {
        if n >= self.lo && n <= self.hi() {
            Some((n - self.lo) as usize)
        } else {
            None
        }
    }

    pub fn objects(&self) -> &[PairSpace] {
        &self.objects
    }

    pub fn differentials(&self) -> &[PairMap] {
        &self.diffs
    }

    /// Builds a complex on `[lo, hi]` from per-degree objects and differentials.
    pub(crate) fn assemble(
        field: Field,
        lo: i64,
        hi: i64,
        mut object: impl FnMut(i64) -> PairSpace,
        mut differential: impl FnMut(i64, &PairSpace, &PairSpace) -> PairMap,
    ) -> SnComplex {
        if hi < lo {
            return SnComplex::zero(field);
        }
        let objects: Vec<PairSpace> = (lo..=hi).map(&mut object).collect();
        let diffs = (0..objects.len().saturating_sub(1))
            .map(|k| differential(lo + k as i64, &objects[k], &objects[k + 1]))
            .collect();
        SnComplex::new(field, lo, objects, diffs).expect("assembled complex is valid")
    }

    /// Drops zero objects at both ends of the window.
    pub fn trimmed(&self) -> SnComplex {
        let first = self.objects.iter().position(|o| !o.is_zero());
        let Some(first) = first else {
            return SnComplex::zero(self.field);
        };
        let last = self.objects.iter().rposition(|o| !o.is_zero()).expect("nonempty");
        SnComplex {
            field: self.field,
            lo: self.lo + first as i64,
            objects: self.objects[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    /// Same complex on a larger window, padded with zero objects.
    pub fn on_window(&self, lo: i64, hi: i64) -> SnComplex {
        let lo = lo.min(self.lo);
        let hi = hi.max(self.hi());
        SnComplex::assemble(self.field, lo, hi, |n| self.object(n), |n, _, _| self.differential(n))
    }

    /// `(Σ^n A)^k = A^{k+n}` with differentials multiplied by `(-1)^n`.
    pub fn shift(&self, n: i64) -> SnComplex {
        let sign = if n.rem_euclid(2) == 0 { self.field.one() } else { -&self.field.one() };
        SnComplex {
            field: self.field,
            lo: self.lo - n,
            objects: self.objects.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// `(ΔA)^k = Δ(A^{-k})`, with differential `Δ(d^{-k-1})`.
    pub fn delta(&self) -> SnComplex {
        SnComplex::assemble(
            self.field,
            -self.hi(),
            -self.lo,
            |k| delta_space(&self.object(-k)),
            |k, _, _| delta_map(&self.differential(-k - 1)),
        )
    }

    /// `(DA)^k = D(A^{-k})`, with differential `D(d^{-k-1})`.
    pub fn dual(&self) -> SnComplex {
        SnComplex::assemble(
            self.field,
            -self.hi(),
            -self.lo,
            |k| dual_space(&self.object(-k)),
            |k, _, _| dual_map(&self.differential(-k - 1)),
        )
    }

    pub fn direct_sum(&self, other: &SnComplex) -> SnComplex {
        let (lo, hi) = joint_window(self, other);
        SnComplex::assemble(
            self.field,
            lo,
            hi,
            |n| Biproduct::of(&self.object(n), &other.object(n)).object,
            |n, a, b| {
                let m = self.differential(n).matrix().block_diag(other.differential(n).matrix());
                PairMap::new(a.clone(), b.clone(), m).expect("sum of bounded maps")
            },
        )
    }

    pub fn identity(&self) -> ChainMap {
        ChainMap {
            source: self.clone(),
            target: self.clone(),
            lo: self.lo,
            components: self.objects.iter().map(PairSpace::identity).collect(),
        }
    }

    pub fn zero_map(&self, target: &SnComplex) -> ChainMap {
        let (lo, hi) = joint_window(self, target);
        ChainMap {
            source: self.clone(),
            target: target.clone(),
            lo,
            components: (lo..=hi).map(|n| self.object(n).zero_map(&target.object(n))).collect(),
        }
    }

    /// Total ambient dimension, summed over the window.
    pub fn total_dim(&self) -> usize {
        self.objects.iter().map(PairSpace::dim).sum()
    }

    pub fn embed_to_a2(&self) -> A2Complex {
        A2Complex::embed(self)
    }

    /// `true` when every object is zero.
    pub fn is_zero(&self) -> bool {
        self.objects.iter().all(PairSpace::is_zero)
    }
}

pub fn joint_window(a: &SnComplex, b: &SnComplex) -> (i64, i64) {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => (0, -1),
        (true, false) => (b.lo(), b.hi()),
        (false, true) => (a.lo(), a.hi()),
        (false, false) => (a.lo().min(b.lo()), a.hi().max(b.hi())),
    }
}

/// A degreewise family of pair maps commuting with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: SnComplex,
    target: SnComplex,
    lo: i64,
    components: Vec<PairMap>,
}

impl PartialEq for ChainMap {
    fn eq(&self, other: &ChainMap) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let (lo, hi) = joint_window(&self.source, &self.target);
        (lo..=hi).all(|n| self.component(n) == other.component(n))
    }
}

impl Eq for ChainMap {}

impl ChainMap {
    /// `components[k]` is the map in degree `lo + k`; degrees outside are zero.
    pub fn new(source: &SnComplex, target: &SnComplex, lo: i64, components: Vec<PairMap>) -> Result<ChainMap, ComplexError> {
        let map = ChainMap { source: source.clone(), target: target.clone(), lo, components };
        for (k, c) in map.components.iter().enumerate() {
            let n = lo + k as i64;
            if c.domain() != &source.object(n) || c.codomain() != &target.object(n) {
                return Err(ComplexError::Shape(format!("component in degree {n} has wrong endpoints")));
            }
        }
        let (wlo, whi) = joint_window(source, target);
        for n in (wlo - 1)..=whi {
            let left = target.differential(n).after(&map.component(n));
            let right = map.component(n + 1).after(&source.differential(n));
            if left != right {
                return Err(ComplexError::NotAChainMap(n));
            }
        }
        Ok(map)
    }

    pub fn source(&self) -> &SnComplex {
        &self.source
    }

    pub fn target(&self) -> &SnComplex {
        &self.target
    }

    pub fn component(&self, n: i64) -> PairMap {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.components.len() {
            self.components[k as usize].clone()
        } else {
            self.source.object(n).zero_map(&self.target.object(n))
        }
    }

    /// Builds the chain map from per-degree matrices on the joint window, validating everything.
    pub fn from_matrices(
        source: &SnComplex,
        target: &SnComplex,
        mut matrix: impl FnMut(i64) -> Matrix,
    ) -> Result<ChainMap, ComplexError> {
        let (lo, hi) = joint_window(source, target);
        let components = (lo..=hi)
            .map(|n| PairMap::new(source.object(n), target.object(n), matrix(n)))
            .collect::<Result<Vec<_>, _>>()?;
        ChainMap::new(source, target, lo, components)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ChainMap) -> Result<ChainMap, ComplexError> {
        if inner.target != self.source {
            return Err(ComplexError::Shape("chain maps are not composable".into()));
        }
        let (lo, hi) = joint_window(&inner.source, &self.target);
        let (lo, hi) = (lo.min(self.source.lo()), hi.max(self.source.hi()));
        let components = (lo..=hi).map(|n| self.component(n).after(&inner.component(n))).collect();
        Ok(ChainMap { source: inner.source.clone(), target: self.target.clone(), lo, components })
    }

    fn pointwise(&self, other: &ChainMap, op: impl Fn(&PairMap, &PairMap) -> PairMap) -> Result<ChainMap, ComplexError> {
        if self.source != other.source || self.target != other.target {
            return Err(ComplexError::Shape("chain maps have different endpoints".into()));
        }
        let (lo, hi) = joint_window(&self.source, &self.target);
        let components = (lo..=hi).map(|n| op(&self.component(n), &other.component(n))).collect();
        Ok(ChainMap { source: self.source.clone(), target: self.target.clone(), lo, components })
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap, ComplexError> {
        self.pointwise(other, |a, b| a.add(b).expect("same endpoints"))
    }

    pub fn sub(&self, other: &ChainMap) -> Result<ChainMap, ComplexError> {
        self.pointwise(other, |a, b| a.sub(b).expect("same endpoints"))
    }

    /// `d h + h d` for a family `h^n : A^n -> B^{n-1}`; always a chain map.
    pub fn null_homotopic(source: &SnComplex, target: &SnComplex, h: impl Fn(i64) -> PairMap) -> ChainMap {
        let (lo, hi) = joint_window(source, target);
        let components = (lo..=hi)
            .map(|n| {
                let dh = target.differential(n - 1).after(&h(n));
                let hd = h(n + 1).after(&source.differential(n));
                dh.add(&hd).expect("same endpoints")
            })
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), lo, components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(PairMap::is_zero)
    }

    /// Mapping cone: `C^n = A^{n+1} ⊕ B^n`, `d(a, b) = (-d a, f a + d b)`.
    pub fn cone(&self) -> SnComplex {
        let (a, b) = (&self.source, &self.target);
        let (lo, hi) = joint_window(a, b);
        let field = a.field();
        SnComplex::assemble(
            field,
            lo - 1,
            hi,
            |n| Biproduct::of(&a.object(n + 1), &b.object(n)).object,
            |n, src, dst| {
                let top = (-a.differential(n + 1).matrix()).hstack(&Matrix::zeros(field, a.object(n + 2).dim(), b.object(n).dim()));
                let bottom = self.component(n + 1).matrix().hstack(b.differential(n).matrix());
                PairMap::new(src.clone(), dst.clone(), top.vstack(&bottom)).expect("cone differential is bounded")
            },
        )
    }

    /// Quasi-isomorphism test: the cone is acyclic in both rows of its A2 embedding.
    pub fn is_quasi_iso(&self) -> bool {
        self.cone().embed_to_a2().is_acyclic()
    }

    /// Induced map on `a2_cohomology(embed(-), n)`.
    pub fn a2_induced(&self, n: i64) -> A2Morphism {
        let src = self.source.embed_to_a2().cohomology(n);
        let dst = self.target.embed_to_a2().cohomology(n);
        A2Morphism::induced(&src, &dst, &self.component(n))
    }

    /// `Δ(f) : ΔB -> ΔA`.
    pub fn delta(&self) -> ChainMap {
        let (s, t) = (self.target.delta(), self.source.delta());
        let (lo, hi) = joint_window(&s, &t);
        let components = (lo..=hi).map(|k| delta_map(&self.component(-k))).collect();
        ChainMap { source: s, target: t, lo, components }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn dense() -> SnComplex {
        let i = PairMap::new(PairSpace::hausdorff(q(), 1), PairSpace::indiscrete(q(), 1), Matrix::identity(q(), 1)).unwrap();
        SnComplex::two_term(&i, -1)
    }

    #[test]
    fn validation() {
        let a = PairSpace::hausdorff(q(), 1);
        let err = SnComplex::new(q(), 0, vec![a.clone(), a.clone(), a.clone()], vec![a.identity(), a.identity()]);
        assert_eq!(err.unwrap_err(), ComplexError::NotAComplex(0));
    }

    #[test]
    fn shift_examples() {
        let c = dense();
        assert_eq!(c.shift(0), c);
        assert_eq!(c.shift(3).shift(-3), c);
        let one = SnComplex::concentrated(&PairSpace::hausdorff(q(), 2), 0);
        assert_eq!(one.shift(2).lo(), -2);
    }

    #[test]
    fn delta_is_an_involution() {
        let c = dense();
        assert_eq!(c.delta().delta(), c);
        assert_eq!(c.delta().lo(), 0);
    }

    #[test]
    fn quasi_iso_examples() {
        let c = dense();
        assert!(c.identity().is_quasi_iso());
        assert!(!c.zero_map(&c).is_quasi_iso());
    }

    #[test]
    fn cone_is_a_complex() {
        let c = dense();
        let cone = c.identity().cone();
        assert_eq!(cone.lo(), -2);
        assert!(cone.embed_to_a2().is_acyclic());
    }
}
