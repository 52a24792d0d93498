//! Long exact sequences in the left heart, and the section from A2 representations
//! back to heart objects.

use crate::complexes::{joint_window, A2Complex, A2Homology, A2Morphism, A2Rep, ChainMap, SnComplex};
use crate::linalg::{Matrix, Subspace};
use crate::sn::{is_kernel_cokernel_pair, PairMap, PairSpace};

use super::{iota_r, HeartError, LeftHeartObject, RightHeartObject};

/// `0 -> A' -i-> A -p-> A'' -> 0`, a kernel-cokernel pair in every degree.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub i: ChainMap,
    pub p: ChainMap,
}

impl ShortExact {
    pub fn new(i: ChainMap, p: ChainMap) -> Result<ShortExact, HeartError> {
        if i.target() != p.source() {
            return Err(HeartError::EndpointMismatch("middle complexes differ".into()));
        }
        let (lo, hi) = joint_window(i.source(), p.target());
        let (lo, hi) = (lo.min(i.target().lo()), hi.max(i.target().hi()));
        for n in lo..=hi {
            if !is_kernel_cokernel_pair(&i.component(n), &p.component(n)) {
                return Err(HeartError::NotStrictExact(n));
            }
        }
        Ok(ShortExact { i, p })
    }

    /// `0 -> ΔA'' -> ΔA -> ΔA' -> 0`.
    pub fn delta(&self) -> ShortExact {
        ShortExact { i: self.p.delta(), p: self.i.delta() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum NodeKind {
    Sub,
    Total,
    Quotient,
}

#[derive(Clone, Debug)]
pub struct LesNode {
    pub degree: i64,
    pub kind: NodeKind,
    pub homology: A2Homology,
}

/// `… -> H^n(A') -> H^n(A) -> H^n(A'') -δ-> H^{n+1}(A') -> …` realized in A2
/// representations; `maps[k]` goes from `nodes[k]` to `nodes[k + 1]`.
#[derive(Clone, Debug)]
pub struct Les {
    pub nodes: Vec<LesNode>,
    pub maps: Vec<A2Morphism>,
}

impl Les {
    /// Exactness at `nodes[k]`, both rows: kernel of the outgoing map equals image of the incoming one.
    pub fn exact_at(&self, k: usize) -> bool {
        if k == 0 || k + 1 >= self.nodes.len() {
            return true;
        }
        let (inc, out) = (&self.maps[k - 1], &self.maps[k]);
        let row = |a: &Matrix, b: &Matrix| b.kernel_basis() == a.image_basis();
        row(&inc.top, &out.top) && row(&inc.bottom, &out.bottom)
    }

    /// Indices of interior nodes where exactness fails.
    pub fn failures(&self) -> Vec<usize> {
        (1..self.nodes.len().saturating_sub(1)).filter(|&k| !self.exact_at(k)).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.failures().is_empty()
    }

    /// The connecting maps `H^n(A'') -> H^{n+1}(A')`.
    pub fn connecting(&self) -> Vec<&A2Morphism> {
        self.nodes
            .iter()
            .zip(&self.maps)
            .filter(|(node, _)| node.kind == NodeKind::Quotient)
            .map(|(_, m)| m)
            .collect()
    }
}

fn row_matrix(f: &PairMap, top: bool) -> Matrix {
    let m = A2Morphism::of_pair_map(f);
    if top {
        m.top
    } else {
        m.bottom
    }
}

/// Snake-lemma connecting map on one row.
fn connecting_row(
    sigma: &ShortExact,
    mid: &A2Complex,
    src: &A2Homology,
    dst: &A2Homology,
    n: i64,
    top: bool,
) -> Result<Matrix, HeartError> {
    let (s, d) = if top { (&src.top, &dst.top) } else { (&src.bottom, &dst.bottom) };
    let reps = s.lift();
    let p = row_matrix(&sigma.p.component(n), top);
    let x = p
        .solve(&reps)
        .ok_or_else(|| HeartError::InternalInconsistency("projection is not onto a cycle representative".into()))?;
    let dx = &mid.d(top, n) * &x;
    let i = row_matrix(&sigma.i.component(n + 1), top);
    let y = i
        .solve(&dx)
        .ok_or_else(|| HeartError::InternalInconsistency("boundary does not come from the subcomplex".into()))?;
    Ok(d.project(&y))
}

/// The long exact sequence of heart cohomology for degrees `lo..=hi`, with connecting maps.
pub fn les_of_ses(sigma: &ShortExact, lo: i64, hi: i64) -> Result<Les, HeartError> {
    let a2 = [
        sigma.i.source().embed_to_a2(),
        sigma.i.target().embed_to_a2(),
        sigma.p.target().embed_to_a2(),
    ];
    let mut nodes = Vec::new();
    let mut maps = Vec::new();
    for n in lo..=hi {
        let h: Vec<A2Homology> = a2.iter().map(|c| c.cohomology(n)).collect();
        for (k, kind) in [NodeKind::Sub, NodeKind::Total, NodeKind::Quotient].into_iter().enumerate() {
            nodes.push(LesNode { degree: n, kind, homology: h[k].clone() });
        }
        maps.push(A2Morphism::induced(&h[0], &h[1], &sigma.i.component(n)));
        maps.push(A2Morphism::induced(&h[1], &h[2], &sigma.p.component(n)));
        if n < hi {
            let next = a2[0].cohomology(n + 1);
            maps.push(A2Morphism {
                top: connecting_row(sigma, &a2[1], &h[2], &next, n, true)?,
                bottom: connecting_row(sigma, &a2[1], &h[2], &next, n, false)?,
            });
        }
    }
    Ok(Les { nodes, maps })
}

/// A left heart object realizing a given A2 representation `t : V_1 -> V_0`:
/// `A = (ker t, 0)`, `B = (V_0 ⊕ ker t, im t ⊕ ker t)`, `a(k) = (0, k)`.
pub fn section_object(rep: &A2Rep) -> LeftHeartObject {
    let field = rep.t.field();
    let k = rep.t.kernel_basis().dim();
    let im = rep.t.image_basis();
    let null_rows = im.basis().block_diag(&Matrix::identity(field, k));
    let b = PairSpace::new(Subspace::from_rows_matrix(rep.bottom + k, &null_rows));
    let a = PairSpace::hausdorff(field, k);
    let m = Matrix::zeros(field, rep.bottom, k).vstack(&Matrix::identity(field, k));
    LeftHeartObject::new(PairMap::new(a, b, m).expect("section map is bounded")).expect("section map is injective")
}

/// The chain map `Sec(t) -> Sec(t')` induced by a morphism `(α, β)` of representations.
pub fn section_morphism(src: &A2Rep, dst: &A2Rep, m: &A2Morphism) -> Result<ChainMap, HeartError> {
    let (x, y) = (section_object(src), section_object(dst));
    let (ks, kt) = (src.t.kernel_basis(), dst.t.kernel_basis());
    let on_kernels = kt
        .coordinates_of_columns(&(&m.top * &ks.inclusion()))
        .map_err(|_| HeartError::InternalInconsistency("morphism does not preserve kernels".into()))?;
    let (cx, cy) = (x.complex(), y.complex());
    Ok(ChainMap::from_matrices(&cx, &cy, |n| match n {
        -1 => on_kernels.clone(),
        0 => m.bottom.block_diag(&on_kernels),
        _ => Matrix::zeros(cx.field(), 0, 0),
    })?)
}

/// Three right heart objects with chain maps `X -> Y -> Z`.
#[derive(Clone, Debug)]
pub struct RightSequence {
    pub objects: [RightHeartObject; 3],
    pub maps: [ChainMap; 2],
}

impl RightSequence {
    /// Short exactness in the right heart, certified on the `Δ`-transported A2 realizations.
    pub fn heart_exact(&self) -> bool {
        let h: Vec<A2Homology> = self.objects.iter().map(|o| o.delta().realization()).collect();
        let g = A2Morphism::induced(&h[2], &h[1], &self.maps[1].delta().component(0));
        let f = A2Morphism::induced(&h[1], &h[0], &self.maps[0].delta().component(0));
        let rows = [(&g.top, &f.top), (&g.bottom, &f.bottom)];
        rows.iter().all(|(g, f)| {
            g.kernel_basis().is_zero() && f.rank() == f.rows() && f.kernel_basis() == g.image_basis()
        })
    }

    /// Whether `q_r` of the sequence is a kernel-cokernel pair of pair spaces.
    pub fn q_r_exact(&self) -> bool {
        let k: Vec<_> = self.objects.iter().map(|o| o.q_r()).collect();
        let f = k[1].lift(&self.maps[0].component(0).after(&k[0].inclusion)).expect("chain maps preserve kernels");
        let g = k[2].lift(&self.maps[1].component(0).after(&k[1].inclusion)).expect("chain maps preserve kernels");
        is_kernel_cokernel_pair(&f, &g)
    }
}

/// `0 -> S_r -> ι_r(F,0) -> ι_r(F,F) -> 0`: exact in the right heart, while
/// `q_r` gives `0 -> 0 -> (F,0) -> (F,F) -> 0`, which is not strict exact.
pub fn q_r_non_exactness_witness(field: crate::Field) -> RightSequence {
    let f0 = PairSpace::hausdorff(field, 1);
    let ff = PairSpace::indiscrete(field, 1);
    let one = Matrix::identity(field, 1);
    let s_r = RightHeartObject::new(PairMap::new(f0.clone(), ff.clone(), one.clone()).expect("bounded"))
        .expect("identity is onto");
    let x = iota_r(&f0);
    let y = iota_r(&ff);
    let empty = |c: &SnComplex, d: &SnComplex, n: i64| Matrix::zeros(field, d.object(n).dim(), c.object(n).dim());
    let (cs, cx, cy) = (s_r.complex(), x.complex(), y.complex());
    let first = ChainMap::from_matrices(&cs, &cx, |n| if n == 0 { one.clone() } else { empty(&cs, &cx, n) })
        .expect("chain map");
    let second = ChainMap::from_matrices(&cx, &cy, |n| if n == 0 { one.clone() } else { empty(&cx, &cy, n) })
        .expect("chain map");
    RightSequence { objects: [s_r, x, y], maps: [first, second] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn section_realizes_the_representation() {
        let t = Matrix::from_i64(q(), &[&[1, 0, 0], &[0, 0, 0]]);
        let rep = A2Rep { top: 3, bottom: 2, t };
        let x = section_object(&rep);
        assert_eq!(x.invariants().triple(), rep.invariants());
        let id = A2Morphism { top: Matrix::identity(q(), 3), bottom: Matrix::identity(q(), 2) };
        let m = section_morphism(&rep, &rep, &id).unwrap();
        assert!(m.a2_induced(0).is_iso());
    }

    #[test]
    fn split_sequence_has_zero_connecting_maps() {
        let a = PairSpace::from_null_vectors(q(), 2, &[vec![q().one(), q().zero()]]);
        let b = PairSpace::hausdorff(q(), 1);
        let f = PairMap::new(a.clone(), a.clone(), Matrix::from_i64(q(), &[&[0, 1], &[0, 0]])).unwrap();
        let ca = SnComplex::two_term(&f, 0);
        let cb = SnComplex::two_term(&b.identity(), 0);
        let sum = ca.direct_sum(&cb);
        let i = ChainMap::from_matrices(&ca, &sum, |n| {
            let (r, c) = (sum.object(n).dim(), ca.object(n).dim());
            Matrix::identity(q(), c).vstack(&Matrix::zeros(q(), r - c, c))
        })
        .unwrap();
        let p = ChainMap::from_matrices(&sum, &cb, |n| {
            let (r, c) = (cb.object(n).dim(), sum.object(n).dim());
            Matrix::zeros(q(), r, c - r).hstack(&Matrix::identity(q(), r))
        })
        .unwrap();
        let sigma = ShortExact::new(i, p).unwrap();
        let les = les_of_ses(&sigma, -1, 2).unwrap();
        assert!(les.is_exact());
        assert!(les.connecting().iter().all(|m| m.is_zero()));
    }

    #[test]
    fn q_r_is_not_exact() {
        let w = q_r_non_exactness_witness(q());
        assert!(w.heart_exact());
        assert!(!w.q_r_exact());
    }
}
