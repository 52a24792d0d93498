//! The bar resolution `⊥_*M -> M`, the inhomogeneous chain and cochain complexes,
//! and the heart-valued homology and cohomology computed from them.

use crate::complexes::{ChainMap, SnComplex};
use crate::hearts::{h_left, h_right, LeftHeartObject, RightHeartObject};
use crate::linalg::{Field, Matrix};
use crate::sn::{PairMap, PairSpace};

use super::adjunctions::{induction_counit, induction_unit};
use super::{blocks, FiniteGroup, GMap, GPairModule, GroupError, Limits};

/// Where a block of a tuple-indexed matrix acts: the identity or `ρ(g)`.
#[derive(Clone, Copy)]
enum Block {
    Identity,
    Act(usize),
}

/// Assembles a matrix between `rows·d` and `cols·d` spaces from weighted blocks
/// `(row tuple, column tuple, block, sign)`.
fn block_matrix(
    field: Field,
    rho: &[Matrix],
    d: usize,
    rows: usize,
    cols: usize,
    entries: impl Iterator<Item = (usize, usize, Block, i64)>,
) -> Matrix {
    let mut m = Matrix::zeros(field, rows * d, cols * d);
    for (r, c, block, sign) in entries {
        let s = field.from_i64(sign);
        for a in 0..d {
            for b in 0..d {
                let v = match block {
                    Block::Identity if a == b => s.clone(),
                    Block::Identity => continue,
                    Block::Act(g) => {
                        let x = rho[g].get(a, b);
                        if x.is_zero() {
                            continue;
                        }
                        x * &s
                    }
                };
                let (i, j) = (r * d + a, c * d + b);
                let cur = m.get(i, j) + &v;
                m.set(i, j, cur);
            }
        }
    }
    m
}

fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The truncated simplicial resolution `⊥_top M -> … -> ⊥_0 M -> M`, `⊥ = ↑↓`.
///
/// `⊥_k M` has basis `(g_0, …, g_k, i)`, with `G` acting on `g_0`.
#[derive(Clone, Debug)]
pub struct ResolutionData {
    pub module: GPairModule,
    pub top: usize,
    /// `⊥_0 M, …, ⊥_top M`.
    pub objects: Vec<GPairModule>,
    /// `faces[k][i] = d_i : ⊥_k -> ⊥_{k-1}` for `1 ≤ k ≤ top`; `faces[0] = [ε]`.
    pub faces: Vec<Vec<PairMap>>,
    /// `boundaries[k - 1] = ∂_k = Σ (−1)^i d_i` for `1 ≤ k ≤ top`.
    pub boundaries: Vec<PairMap>,
    pub augmentation: PairMap,
    /// `homotopy[k + 1] = h_k : ⊥_k -> ⊥_{k+1}`, `x ↦ e ⊗ x`, for `-1 ≤ k < top`.
    pub homotopy: Vec<PairMap>,
}

impl ResolutionData {
    pub fn object(&self, k: usize) -> &GPairModule {
        &self.objects[k]
    }

    pub fn boundary(&self, k: usize) -> &PairMap {
        &self.boundaries[k - 1]
    }

    /// `⊥_k M` placed in degree `-k`.
    pub fn complex(&self) -> SnComplex {
        let field = self.module.field();
        let top = self.top as i64;
        SnComplex::assemble(
            field,
            -top,
            0,
            |n| self.objects[(-n) as usize].forget(),
            |n, _, _| self.boundaries[(-n - 1) as usize].clone(),
        )
    }

    /// Checks `ε s_{-1} = id`, `∂_1 s_0 + s_{-1} ε = id` and `∂_{k+1} s_k + s_{k-1} ∂_k = id`
    /// for a family `s[k + 1] = s_k`, returning the failing degrees.
    pub fn contraction_failures(&self, s: &[PairMap]) -> Vec<String> {
        let mut out = Vec::new();
        if s.len() != self.top + 1 {
            out.push(format!("expected {} homotopy maps, got {}", self.top + 1, s.len()));
            return out;
        }
        if self.augmentation.compose(&s[0]).ok() != Some(self.module.space().identity()) {
            out.push("ε s_-1 != id".into());
        }
        for k in 0..self.top {
            let bottom = if k == 0 {
                s[0].compose(&self.augmentation)
            } else {
                s[k].compose(self.boundary(k))
            };
            let top = self.boundary(k + 1).compose(&s[k + 1]);
            let sum = match (top, bottom) {
                (Ok(t), Ok(b)) => t.add(&b).ok(),
                _ => None,
            };
            if sum != Some(self.objects[k].space().identity()) {
                out.push(format!("homotopy identity fails on ⊥_{k}"));
            }
        }
        out
    }

    /// Checks `∂∂ = 0`, `ε ∂_1 = 0` and equivariance of faces and boundaries.
    pub fn structure_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.top >= 1 && !self.augmentation.after(self.boundary(1)).is_zero() {
            out.push("ε ∂_1 != 0".into());
        }
        for k in 2..=self.top {
            if !self.boundary(k - 1).after(self.boundary(k)).is_zero() {
                out.push(format!("∂_{} ∂_{k} != 0", k - 1));
            }
        }
        for k in 1..=self.top {
            for (i, d) in self.faces[k].iter().enumerate() {
                if GMap::new(self.objects[k].clone(), self.objects[k - 1].clone(), d.clone()).is_err() {
                    out.push(format!("d_{i} on ⊥_{k} is not equivariant"));
                }
            }
        }
        out
    }
}

/// Builds `⊥_* M` up to degree `top`, with faces, boundaries, augmentation and the
/// contracting homotopy of the underlying complex.
pub fn bar_resolution(m: &GPairModule, top: usize, limits: &Limits) -> Result<ResolutionData, GroupError> {
    let group = m.group();
    limits.admit(group)?;
    limits.check(group.order(), top, m.dim())?;
    let field = m.field();
    let (q, d) = (group.order(), m.dim());

    let mut objects: Vec<GPairModule> = Vec::with_capacity(top + 1);
    let mut prev = m.clone();
    for _ in 0..=top {
        let next = GPairModule::induce(group, prev.space());
        objects.push(next.clone());
        prev = next;
    }
    let augmentation = induction_counit(m).map().clone();

    let mut faces = vec![vec![augmentation.clone()]];
    let mut boundaries = Vec::with_capacity(top);
    for k in 1..=top {
        let (src, tgt) = (objects[k].forget(), objects[k - 1].forget());
        let fs: Vec<PairMap> = (0..=k)
            .map(|i| {
                let entries = (0..group.tuple_count(k + 1)).map(|c| {
                    let t = group.tuple(k + 1, c);
                    if i < k {
                        let mut u = t[..i].to_vec();
                        u.push(group.mul(t[i], t[i + 1]));
                        u.extend_from_slice(&t[i + 2..]);
                        (group.tuple_index(&u), c, Block::Identity, 1)
                    } else {
                        (group.tuple_index(&t[..k]), c, Block::Act(t[k]), 1)
                    }
                });
                let mat = block_matrix(field, m.action(), d, q.pow(k as u32), q.pow(k as u32 + 1), entries);
                PairMap::new(src.clone(), tgt.clone(), mat)
            })
            .collect::<Result<_, _>>()?;
        let mut sum = src.zero_map(&tgt);
        for (i, f) in fs.iter().enumerate() {
            sum = sum.add(&f.scale(&field.from_i64(sign(i))))?;
        }
        boundaries.push(sum);
        faces.push(fs);
    }

    let mut homotopy = vec![induction_unit(group, m.space())];
    for k in 0..top {
        homotopy.push(induction_unit(group, objects[k].space()));
    }
    Ok(ResolutionData { module: m.clone(), top, objects, faces, boundaries, augmentation, homotopy })
}

/// For `M = ↑E`: the equivariant contraction `s'_k = (−1)^{k+1} (F[G^{k+2}] ⊗ η_E)`
/// of `⊥_*↑E -> ↑E`, indexed `s[k + 1] = s'_k`, as `G`-maps.
pub fn equivariant_splitting(group: &FiniteGroup, e: &PairSpace, top: usize, limits: &Limits) -> Result<(ResolutionData, Vec<GMap>), GroupError> {
    let up = GPairModule::induce(group, e);
    let res = bar_resolution(&up, top, limits)?;
    let field = e.field();
    let eta = induction_unit(group, e);
    let mut s = Vec::with_capacity(top + 1);
    for k in -1..top as i64 {
        let src = if k < 0 { up.clone() } else { res.objects[k as usize].clone() };
        let tgt = res.objects[(k + 1) as usize].clone();
        let mat = Matrix::identity(field, group.tuple_count((k + 2) as usize))
            .kron(eta.matrix())
            .scale(&field.from_i64(sign((k + 1) as usize)));
        let map = PairMap::new(src.forget(), tgt.forget(), mat)?;
        s.push(GMap::new(src, tgt, map)?);
    }
    Ok((res, s))
}

/// Inhomogeneous chains `C_k = F[G^k] ⊗ M` for `from ≤ k ≤ to`, with `C_k` in degree `-k`
/// and `∂ = Σ (−1)^i d_i`: `d_0` drops `g_1`, `d_i` merges `g_i g_{i+1}`, `d_k` acts by `g_k`.
pub(crate) fn bar_segment(m: &GPairModule, from: usize, to: usize) -> Result<SnComplex, GroupError> {
    let group = m.group();
    let field = m.field();
    let d = m.dim();
    let objects: Vec<PairSpace> = (from..=to).rev().map(|k| blocks(group.tuple_count(k), m.space())).collect();
    let mut diffs = Vec::new();
    for k in (from + 1..=to).rev() {
        let entries = (0..group.tuple_count(k)).flat_map(|c| {
            let t = group.tuple(k, c);
            let mut out = vec![(group.tuple_index(&t[1..]), c, Block::Identity, 1)];
            for i in 1..k {
                let mut u = t[..i - 1].to_vec();
                u.push(group.mul(t[i - 1], t[i]));
                u.extend_from_slice(&t[i + 1..]);
                out.push((group.tuple_index(&u), c, Block::Identity, sign(i)));
            }
            out.push((group.tuple_index(&t[..k - 1]), c, Block::Act(t[k - 1]), sign(k)));
            out
        });
        let mat = block_matrix(field, m.action(), d, group.tuple_count(k - 1), group.tuple_count(k), entries);
        let (src, tgt) = (&objects[to - k], &objects[to - k + 1]);
        diffs.push(PairMap::new(src.clone(), tgt.clone(), mat)?);
    }
    Ok(SnComplex::new(field, -(to as i64), objects, diffs)?)
}

/// The coinvariant bar complex `C_k = ↓⊥_{k-1}M ≅ (⊥_k M)_G` in degree `-k`, `0 ≤ k ≤ top`.
pub fn bar_complex(m: &GPairModule, top: usize, limits: &Limits) -> Result<SnComplex, GroupError> {
    limits.admit(m.group())?;
    if top > 0 {
        limits.check(m.group().order(), top - 1, m.dim())?;
    }
    bar_segment(m, 0, top)
}

/// `ℋ_n(G, M) = H_r^{-n}` of the coinvariant bar complex.
pub fn l1_homology(m: &GPairModule, n: usize, limits: &Limits) -> Result<RightHeartObject, GroupError> {
    limits.admit(m.group())?;
    limits.check(m.group().order(), n, m.dim())?;
    let c = bar_segment(m, n.saturating_sub(1), n + 1)?;
    Ok(h_right(&c, -(n as i64))?.direct)
}

/// Inhomogeneous cochains `C^k = Maps(G^k, M)` for `from ≤ k ≤ to`, with
/// `(dΨ)(x_1..x_{k+1}) = Ψ(x_2..) + Σ_i (−1)^i Ψ(.., x_{i+1}x_i, ..) + (−1)^{k+1} x_{k+1}·Ψ(x_1..x_k)`.
pub(crate) fn cobar_segment(m: &GPairModule, from: usize, to: usize) -> Result<SnComplex, GroupError> {
    let group = m.group();
    let field = m.field();
    let d = m.dim();
    let objects: Vec<PairSpace> = (from..=to).map(|k| blocks(group.tuple_count(k), m.space())).collect();
    let mut diffs = Vec::new();
    for k in from..to {
        let entries = (0..group.tuple_count(k + 1)).flat_map(|r| {
            let x = group.tuple(k + 1, r);
            let mut out = vec![(r, group.tuple_index(&x[1..]), Block::Identity, 1)];
            for i in 1..=k {
                let mut u = x[..i - 1].to_vec();
                u.push(group.mul(x[i], x[i - 1]));
                u.extend_from_slice(&x[i + 1..]);
                out.push((r, group.tuple_index(&u), Block::Identity, sign(i)));
            }
            out.push((r, group.tuple_index(&x[..k]), Block::Act(x[k]), sign(k + 1)));
            out
        });
        let mat = block_matrix(field, m.action(), d, group.tuple_count(k + 1), group.tuple_count(k), entries);
        diffs.push(PairMap::new(objects[k - from].clone(), objects[k - from + 1].clone(), mat)?);
    }
    Ok(SnComplex::new(field, from as i64, objects, diffs)?)
}

/// The invariant cobar complex `C^k = (⊤^{k+1}M)^G ≅ Maps(G^k, M)`, `0 ≤ k ≤ top`.
pub fn cobar_complex(m: &GPairModule, top: usize, limits: &Limits) -> Result<SnComplex, GroupError> {
    limits.admit(m.group())?;
    if top > 0 {
        limits.check(m.group().order(), top - 1, m.dim())?;
    }
    cobar_segment(m, 0, top)
}

/// `ℋ_b^n(G, M) = H_ℓ^n` of the invariant cobar complex.
pub fn bounded_cohomology(m: &GPairModule, n: usize, limits: &Limits) -> Result<LeftHeartObject, GroupError> {
    limits.admit(m.group())?;
    limits.check(m.group().order(), n, m.dim())?;
    let c = cobar_segment(m, n.saturating_sub(1), n + 1)?;
    Ok(h_left(&c, n as i64)?)
}

/// The literal coinvariants `(⊥_k M)_G` of the homogeneous resolution, as a complex
/// in degrees `-top..=0`, with the chain isomorphism onto the inhomogeneous bar complex
/// induced by `(g_0, g_1, …, g_k, m) ↦ (g_1, …, g_k, m)`.
pub fn coinvariant_oracle(res: &ResolutionData, limits: &Limits) -> Result<ChainMap, GroupError> {
    let m = &res.module;
    let group = m.group();
    let field = m.field();
    let top = res.top;
    let cokers: Vec<_> = res.objects.iter().map(GPairModule::coinvariants).collect();
    let literal = SnComplex::assemble(
        field,
        -(top as i64),
        0,
        |n| cokers[(-n) as usize].object.clone(),
        |n, _, _| {
            let k = (-n) as usize;
            cokers[k]
                .descend(&cokers[k - 1].projection.after(res.boundary(k)))
                .expect("boundaries are equivariant")
        },
    );
    let bar = bar_complex(m, top, limits)?;
    let fold = Matrix::from_fn(field, 1, group.order(), |_, _| field.one());
    let components = (0..=top)
        .rev()
        .map(|k| {
            let rest = Matrix::identity(field, group.tuple_count(k) * m.dim());
            let phi = PairMap::new(res.objects[k].forget(), bar.object(-(k as i64)), fold.kron(&rest))?;
            Ok(cokers[k].descend(&phi)?)
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    let theta = ChainMap::new(&literal, &bar, -(top as i64), components)?;
    if (0..=top).any(|k| !theta.component(-(k as i64)).is_iso()) {
        return Err(GroupError::InternalInconsistency("literal coinvariants are not isomorphic to the bar complex".into()));
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hearts::{iota_l, iota_r, HeartInvariants};

    fn fp(p: u32) -> Field {
        Field::Prime { p }
    }

    #[test]
    fn bar_dimensions_over_z2() {
        let g = FiniteGroup::cyclic(2);
        let m = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(2), 1));
        let res = bar_resolution(&m, 3, &Limits::default()).unwrap();
        let dims: Vec<usize> = res.objects.iter().map(GPairModule::dim).collect();
        assert_eq!(dims, vec![2, 4, 8, 16]);
        assert!(res.structure_failures().is_empty());
        assert!(res.contraction_failures(&res.homotopy).is_empty());
    }

    #[test]
    fn trivial_group_resolution_alternates() {
        let g = FiniteGroup::trivial();
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).one(), fp(3).zero()]]);
        let res = bar_resolution(&GPairModule::trivial(&g, &e), 3, &Limits::default()).unwrap();
        for k in 1..=3 {
            let expect = if k % 2 == 0 { e.identity() } else { e.zero_map(&e) };
            assert_eq!(*res.boundary(k), expect);
        }
    }

    #[test]
    fn resource_limit_is_enforced() {
        let g = FiniteGroup::klein();
        let m = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(2), 3));
        let tight = Limits { resource_cap: 100, max_order: 12 };
        assert!(matches!(bar_resolution(&m, 3, &tight), Err(GroupError::ResourceLimit { .. })));
        assert!(matches!(l1_homology(&m, 3, &tight), Err(GroupError::ResourceLimit { needed: 768, .. })));
    }

    #[test]
    fn degree_zero_is_coinvariants_on_the_nose() {
        let g = FiniteGroup::cyclic(3);
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).one(), fp(3).one()]]);
        let m = GPairModule::induce(&g, &e);
        let h0 = l1_homology(&m, 0, &Limits::default()).unwrap();
        assert_eq!(h0, iota_r(&m.coinvariants().object));
        let b0 = bounded_cohomology(&m, 0, &Limits::default()).unwrap();
        assert_eq!(b0, iota_l(&m.invariants().object));
    }

    #[test]
    fn cyclic_group_trivial_coefficients() {
        for p in [2, 3] {
            let g = FiniteGroup::cyclic(p as usize);
            let m = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(p), 1));
            for n in 0..=3 {
                let h = l1_homology(&m, n, &Limits::default()).unwrap();
                assert_eq!(h.invariants(), HeartInvariants::from_triple((0, 0, 1)), "p={p} n={n}");
                let b = bounded_cohomology(&m, n, &Limits::default()).unwrap();
                assert_eq!(b.invariants(), HeartInvariants::from_triple((0, 0, 1)), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn induced_and_coinduced_are_acyclic() {
        let g = FiniteGroup::cyclic(2);
        let e = PairSpace::from_null_vectors(fp(2), 2, &[vec![fp(2).one(), fp(2).zero()]]);
        for n in 1..=3 {
            assert!(l1_homology(&GPairModule::induce(&g, &e), n, &Limits::default()).unwrap().invariants().is_zero());
            assert!(bounded_cohomology(&GPairModule::coinduce(&g, &e), n, &Limits::default())
                .unwrap()
                .invariants()
                .is_zero());
        }
    }

    #[test]
    fn equivariant_splitting_of_induced_module() {
        let g = FiniteGroup::cyclic(3);
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).zero(), fp(3).one()]]);
        let (res, s) = equivariant_splitting(&g, &e, 2, &Limits::default()).unwrap();
        let maps: Vec<PairMap> = s.iter().map(|x| x.map().clone()).collect();
        assert!(res.contraction_failures(&maps).is_empty());
    }

    #[test]
    fn literal_coinvariants_match_inhomogeneous_chains() {
        let g = FiniteGroup::klein();
        let e = PairSpace::from_null_vectors(fp(2), 2, &[vec![fp(2).one(), fp(2).one()]]);
        let m = GPairModule::coinduce(&g, &e);
        let res = bar_resolution(&m, 2, &Limits::default()).unwrap();
        assert!(coinvariant_oracle(&res, &Limits::default()).is_ok());
    }
}
