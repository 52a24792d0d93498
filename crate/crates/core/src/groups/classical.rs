//! Classical seminormed homology, its Hausdorffification, and long exact sequences
//! in the coefficients.

use serde::Serialize;

use crate::complexes::{A2Morphism, ChainMap, SnComplex};
use crate::hearts::{h_left, les_of_ses, q_comparison, Les, ShortExact};
use crate::linalg::{Matrix, Subspace};
use crate::sn::{hausdorff_map, hausdorffify, is_kernel_cokernel_pair, PairMap, PairSpace};

use super::resolution::bar_segment;
use super::{bar_complex, GMap, GPairModule, GroupError, Limits};

/// `Ker ∂_n / Im ∂_{n+1}` with the induced null: the cokernel of the `H_ℓ^{-n}` representative.
pub fn classical_l1(m: &GPairModule, n: usize, limits: &Limits) -> Result<PairSpace, GroupError> {
    limits.admit(m.group())?;
    limits.check(m.group().order(), n, m.dim())?;
    let c = bar_segment(m, n.saturating_sub(1), n + 1)?;
    Ok(h_left(&c, -(n as i64))?.q_l().object)
}

/// `Hd(classical_l1)`.
pub fn hausdorffified(m: &GPairModule, n: usize, limits: &Limits) -> Result<PairSpace, GroupError> {
    Ok(hausdorffify(&classical_l1(m, n, limits)?).object)
}

/// The pair isomorphism `q_ℓ H_ℓ^{-n} -> q_r H_r^{-n}` on the bar complex.
pub fn q_comparison_l1(m: &GPairModule, n: usize, limits: &Limits) -> Result<PairMap, GroupError> {
    limits.admit(m.group())?;
    limits.check(m.group().order(), n, m.dim())?;
    let c = bar_segment(m, n.saturating_sub(1), n + 1)?;
    let iso = q_comparison(&c, -(n as i64))?;
    if !iso.is_iso() {
        return Err(GroupError::InternalInconsistency(format!("q_ℓ H_ℓ and q_r H_r differ in degree {n}")));
    }
    Ok(iso)
}

/// `Hd(classical_l1) -> Hd(q_r ℋ_n)`, an isomorphism.
pub fn hausdorffified_comparison(m: &GPairModule, n: usize, limits: &Limits) -> Result<PairMap, GroupError> {
    let iso = hausdorff_map(&q_comparison_l1(m, n, limits)?);
    let q_r = super::l1_homology(m, n, limits)?.q_r().object;
    if iso.codomain() != &hausdorffify(&q_r).object || !iso.is_iso() {
        return Err(GroupError::InternalInconsistency(format!("Hausdorffified comparison fails in degree {n}")));
    }
    Ok(iso)
}

/// A strict short exact sequence `0 -> M' -i-> M -p-> M'' -> 0` of modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSes {
    pub i: GMap,
    pub p: GMap,
}

impl ModuleSes {
    pub fn new(i: GMap, p: GMap) -> Result<ModuleSes, GroupError> {
        if i.target() != p.source() {
            return Err(GroupError::NotStrictExact("middle modules differ".into()));
        }
        if !is_kernel_cokernel_pair(i.map(), p.map()) {
            return Err(GroupError::NotStrictExact("not a kernel-cokernel pair".into()));
        }
        Ok(ModuleSes { i, p })
    }

    /// `0 -> S -> M -> M/S -> 0` for an invariant subspace `S`, with induced nulls.
    pub fn from_submodule(m: &GPairModule, s: &Subspace) -> Result<ModuleSes, GroupError> {
        ModuleSes::new(m.submodule(s)?, m.quotient(s)?)
    }

    /// `0 -> A -> A ⊕ B -> B -> 0`.
    pub fn split(a: &GPairModule, b: &GPairModule) -> Result<ModuleSes, GroupError> {
        let sum = a.direct_sum(b)?;
        let field = a.field();
        let (da, db) = (a.dim(), b.dim());
        let inc = Matrix::identity(field, da).vstack(&Matrix::zeros(field, db, da));
        let proj = Matrix::zeros(field, db, da).hstack(&Matrix::identity(field, db));
        let i = GMap::new(a.clone(), sum.clone(), PairMap::new(a.forget(), sum.forget(), inc)?)?;
        let p = GMap::new(sum.clone(), b.clone(), PairMap::new(sum.forget(), b.forget(), proj)?)?;
        ModuleSes::new(i, p)
    }

    pub fn sub(&self) -> &GPairModule {
        self.i.source()
    }

    pub fn total(&self) -> &GPairModule {
        self.i.target()
    }

    pub fn quotient(&self) -> &GPairModule {
        self.p.target()
    }
}

/// A morphism of short exact sequences, `(f', f, f'')` with commuting squares.
#[derive(Clone, Debug)]
pub struct SesMorphism {
    pub sub: GMap,
    pub total: GMap,
    pub quotient: GMap,
}

impl SesMorphism {
    pub fn new(from: &ModuleSes, to: &ModuleSes, sub: GMap, total: GMap, quotient: GMap) -> Result<SesMorphism, GroupError> {
        let ok = total.map().after(from.i.map()) == to.i.map().after(sub.map())
            && quotient.map().after(from.p.map()) == to.p.map().after(total.map());
        if !ok {
            return Err(GroupError::InternalInconsistency("squares of the morphism do not commute".into()));
        }
        Ok(SesMorphism { sub, total, quotient })
    }

    pub fn identity(s: &ModuleSes) -> SesMorphism {
        SesMorphism {
            sub: GMap::identity(s.sub()),
            total: GMap::identity(s.total()),
            quotient: GMap::identity(s.quotient()),
        }
    }
}

/// `F[G^k] ⊗ f` on the bar complexes in degrees `-top..=0`.
fn bar_map(f: &GMap, src: &SnComplex, dst: &SnComplex) -> Result<ChainMap, GroupError> {
    let group = f.source().group();
    let field = f.source().field();
    Ok(ChainMap::from_matrices(src, dst, |n| {
        Matrix::identity(field, group.tuple_count((-n) as usize)).kron(f.map().matrix())
    })?)
}

/// The short exact sequence of coinvariant bar complexes in degrees `-top..=0`.
fn bar_ses(sigma: &ModuleSes, top: usize, limits: &Limits) -> Result<ShortExact, GroupError> {
    let c: Vec<SnComplex> = [sigma.sub(), sigma.total(), sigma.quotient()]
        .iter()
        .map(|m| bar_complex(m, top, limits))
        .collect::<Result<_, _>>()?;
    let i = bar_map(&sigma.i, &c[0], &c[1])?;
    let p = bar_map(&sigma.p, &c[1], &c[2])?;
    ShortExact::new(i, p).map_err(|e| GroupError::NotStrictExact(e.to_string()))
}

/// The long exact sequence of `ℋ_*` in degrees `0..=max_degree`, computed as the left
/// LES of the `Δ`-dual sequence of bar complexes: `H^n(ΔC'') -> H^n(ΔC) -> H^n(ΔC') -δ-> H^{n+1}(ΔC'')`.
/// When a morphism of sequences into `sigma` is given, naturality of `δ` is also returned.
pub fn les_coefficients(
    sigma: &ModuleSes,
    max_degree: usize,
    morphism: Option<(&ModuleSes, &SesMorphism)>,
    limits: &Limits,
) -> Result<(Les, Option<bool>), GroupError> {
    let top = max_degree + 1;
    for m in [sigma.sub(), sigma.total(), sigma.quotient()] {
        limits.check(m.group().order(), max_degree, m.dim())?;
    }
    let ses = bar_ses(sigma, top, limits)?;
    let les = les_of_ses(&ses.delta(), 0, max_degree as i64)?;
    let natural = match morphism {
        None => None,
        Some((from, mor)) => {
            let other = bar_ses(from, top, limits)?;
            let other_les = les_of_ses(&other.delta(), 0, max_degree as i64)?;
            // Δ reverses direction: the morphism induces maps from this LES to the other one.
            let sub = bar_map(&mor.sub, other.i.source(), ses.i.source())?.delta();
            let quo = bar_map(&mor.quotient, other.p.target(), ses.p.target())?.delta();
            let deltas = les.connecting();
            let other_deltas = other_les.connecting();
            let ok = (0..max_degree).all(|n| {
                let n = n as i64;
                let lhs: A2Morphism = other_deltas[n as usize].after(&sub.a2_induced(n));
                let rhs = quo.a2_induced(n + 1).after(deltas[n as usize]);
                lhs == rhs
            });
            Some(ok)
        }
    };
    Ok((les, natural))
}

/// The classical sequence `… -> H_n(M') -> H_n(M) -> H_n(M'') -δ-> H_{n-1}(M') -> …`
/// after Hausdorffification, in degrees `max_degree` down to `0`.
#[derive(Clone, Debug, Serialize)]
pub struct HausdorffLes {
    pub dims: Vec<usize>,
    /// Interior node indices where the Hausdorffified sequence is not exact.
    pub failures: Vec<usize>,
    /// Whether the unHausdorffified heart sequence is exact.
    pub heart_exact: bool,
}

/// Builds the heart LES of the bar complexes and applies `Hd` to every node.
///
/// The classical null of `H^n` is the image of the null row, so `Hd` of a node is the
/// cokernel of its vertical map.
pub fn hausdorff_les(sigma: &ModuleSes, max_degree: usize, limits: &Limits) -> Result<HausdorffLes, GroupError> {
    let ses = bar_ses(sigma, max_degree + 1, limits)?;
    let les = les_of_ses(&ses, -(max_degree as i64), 0)?;
    let quotients: Vec<_> = les
        .nodes
        .iter()
        .map(|node| Subspace::from_columns(&node.homology.rep.t).quotient_presentation())
        .collect();
    let dims = quotients.iter().map(|q| q.projection.rows()).collect();
    let maps: Vec<Matrix> = les
        .maps
        .iter()
        .enumerate()
        .map(|(k, m)| &(&quotients[k + 1].projection * &m.bottom) * &quotients[k].section)
        .collect();
    let failures = (1..les.nodes.len() - 1)
        .filter(|&k| {
            let (inc, out) = (&maps[k - 1], &maps[k]);
            out.kernel_basis() != inc.image_basis()
        })
        .collect();
    Ok(HausdorffLes { dims, failures, heart_exact: les.is_exact() })
}

/// A coefficient sequence whose Hausdorffified homology sequence is not exact.
///
/// `G = ℤ/2`, `M = F_2[G]` with null `F_2·(1 + g)`, and `S` that same line, so
/// `0 -> (F_2, F_2) -> M -> (F_2, 0) -> 0`. `Hd ℋ_n` vanishes on the first two terms
/// for `n ≥ 1` and is `F_2` on the third.
pub fn hausdorff_les_witness() -> ModuleSes {
    let f = crate::linalg::Field::Prime { p: 2 };
    let group = super::FiniteGroup::cyclic(2);
    let line = Subspace::span(f, 2, &[vec![f.one(), f.one()]]);
    let regular = GPairModule::induce(&group, &PairSpace::hausdorff(f, 1));
    let m = GPairModule::new(group, PairSpace::new(line.clone()), regular.action().to_vec())
        .expect("the diagonal line is invariant");
    ModuleSes::from_submodule(&m, &line).expect("submodule sequences are strict exact")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::linalg::Field;

    fn fp(p: u32) -> Field {
        Field::Prime { p }
    }

    #[test]
    fn degree_zero_classical_is_coinvariants() {
        let g = FiniteGroup::cyclic(2);
        let e = PairSpace::from_null_vectors(fp(2), 2, &[vec![fp(2).one(), fp(2).one()]]);
        let m = GPairModule::induce(&g, &e);
        let lim = Limits::default();
        assert_eq!(classical_l1(&m, 0, &lim).unwrap(), m.coinvariants().object);
        assert_eq!(hausdorffified(&m, 0, &lim).unwrap(), hausdorffify(&m.coinvariants().object).object);
        assert!(hausdorffified_comparison(&m, 0, &lim).is_ok());
    }

    #[test]
    fn indiscrete_coefficients_hausdorffify_to_zero() {
        let g = FiniteGroup::cyclic(2);
        let m = GPairModule::trivial(&g, &PairSpace::indiscrete(fp(2), 1));
        let lim = Limits::default();
        for n in 0..=3 {
            assert!(hausdorffified(&m, n, &lim).unwrap().is_zero());
            assert!(!super::super::l1_homology(&m, n, &lim).unwrap().invariants().is_zero());
        }
    }

    #[test]
    fn split_sequence_has_zero_connecting_maps() {
        let g = FiniteGroup::cyclic(3);
        let a = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(3), 1));
        let b = GPairModule::induce(&g, &PairSpace::indiscrete(fp(3), 1));
        let s = ModuleSes::split(&a, &b).unwrap();
        let (les, natural) = les_coefficients(&s, 2, Some((&s, &SesMorphism::identity(&s))), &Limits::default()).unwrap();
        assert!(les.is_exact());
        assert!(les.connecting().iter().all(|d| d.is_zero()));
        assert_eq!(natural, Some(true));
    }

    #[test]
    fn stored_witness_breaks_hausdorffified_exactness() {
        let s = hausdorff_les_witness();
        let h = hausdorff_les(&s, 2, &Limits::default()).unwrap();
        assert!(h.heart_exact);
        assert_eq!(h.dims, vec![0, 0, 1, 0, 0, 1, 0, 1, 1]);
        assert_eq!(h.failures, vec![2, 5]);
    }

    #[test]
    fn augmentation_sequence_shifts_dimension() {
        let p = 3;
        let g = FiniteGroup::cyclic(p);
        let f = fp(p as u32);
        let reg = GPairModule::induce(&g, &PairSpace::hausdorff(f, 1));
        let ideal = Subspace::span(f, p, &[vec![f.one(), f.from_i64(-1), f.zero()], vec![f.zero(), f.one(), f.from_i64(-1)]]);
        let s = ModuleSes::from_submodule(&reg, &ideal).unwrap();
        assert!(s.quotient().is_trivial_action());
        let (les, natural) = les_coefficients(&s, 3, Some((&s, &SesMorphism::identity(&s))), &Limits::default()).unwrap();
        assert!(les.is_exact());
        assert_eq!(natural, Some(true));
        // ℋ_n(F[G]) = 0 for n ≥ 1, so δ : ℋ_{n+1}(F) -> ℋ_n(I) is an isomorphism and each is 1-dimensional.
        for node in les.nodes.iter().filter(|n| n.degree >= 1) {
            let (w, hn, hq) = node.homology.rep.invariants();
            let total = w + hn + hq;
            match node.kind {
                crate::hearts::NodeKind::Total => assert_eq!(total, 0),
                _ => assert_eq!(total, 1),
            }
        }
    }
}
