//! Seeded random instances for property suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complexes::SnComplex;
use crate::groups::{FiniteGroup, GPairModule, ModuleSes};
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::sn::{PairMap, PairSpace};

/// The generator used by every seeded suite.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `index` of the generator for `(seed, salt)`.
pub fn case_rng(seed: u64, salt: u64, index: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    r.set_stream(index);
    r
}

/// Uniform over `F_p`; small integers and halves over `ℚ`.
pub fn scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Prime { p } => field.from_i64(rng.gen_range(0..p as i64)),
        Field::Rationals => {
            let n = field.from_i64(rng.gen_range(-2..=2));
            if rng.gen_bool(0.15) {
                &n * &field.from_i64(2).inv().expect("2 is invertible")
            } else {
                n
            }
        }
    }
}

pub fn matrix<R: Rng + ?Sized>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| scalar(field, rng))
}

/// Span of a random number of random vectors, biased towards the extremes.
pub fn subspace<R: Rng + ?Sized>(field: Field, ambient: usize, rng: &mut R) -> Subspace {
    match rng.gen_range(0..6) {
        0 => Subspace::zero(field, ambient),
        1 => Subspace::full(field, ambient),
        _ => {
            let k = rng.gen_range(0..=ambient);
            Subspace::from_rows_matrix(ambient, &matrix(field, k, ambient, rng))
        }
    }
}

pub fn pair_space<R: Rng + ?Sized>(field: Field, max_dim: usize, rng: &mut R) -> PairSpace {
    let n = rng.gen_range(0..=max_dim);
    PairSpace::new(subspace(field, n, rng))
}

/// A random bounded map: null basis vectors go to random null vectors, a complement anywhere.
pub fn pair_map<R: Rng + ?Sized>(a: &PairSpace, b: &PairSpace, rng: &mut R) -> PairMap {
    let field = a.field();
    let (n, m) = (a.dim(), b.dim());
    let na = a.null().inclusion();
    let comp = a.null().quotient_presentation().section;
    let basis = na.hstack(&comp);
    let on_null = &b.null().inclusion() * &matrix(field, b.null_dim(), na.cols(), rng);
    let on_comp = matrix(field, m, comp.cols(), rng);
    let images = on_null.hstack(&on_comp);
    let inv = basis.inverse().expect("null basis and coordinate section span the space");
    let mat = if n == 0 { Matrix::zeros(field, m, 0) } else { &images * &inv };
    PairMap::new(a.clone(), b.clone(), mat).expect("constructed map is bounded")
}

/// A bounded map `b -> c` vanishing on the image of `f`.
pub fn killing_map<R: Rng + ?Sized>(f: &PairMap, c: &PairSpace, rng: &mut R) -> PairMap {
    let coker = f.cokernel();
    pair_map(&coker.object, c, rng).after(&coker.projection)
}

/// A composable pair `A -f-> B -g-> C` with `g f = 0`.
pub fn composable_pair<R: Rng + ?Sized>(field: Field, max_dim: usize, rng: &mut R) -> (PairMap, PairMap) {
    let a = pair_space(field, max_dim, rng);
    let b = pair_space(field, max_dim, rng);
    let c = pair_space(field, max_dim, rng);
    let f = pair_map(&a, &b, rng);
    let g = killing_map(&f, &c, rng);
    (f, g)
}

/// A complex with at most `max_len` objects of dimension at most `max_dim`, starting at `lo`.
pub fn complex<R: Rng + ?Sized>(field: Field, lo: i64, max_len: usize, max_dim: usize, rng: &mut R) -> SnComplex {
    let len = rng.gen_range(1..=max_len.max(1));
    let objects: Vec<PairSpace> = (0..len).map(|_| pair_space(field, max_dim, rng)).collect();
    let mut diffs: Vec<PairMap> = Vec::new();
    for k in 0..len.saturating_sub(1) {
        let d = match diffs.last() {
            None => pair_map(&objects[k], &objects[k + 1], rng),
            Some(prev) => killing_map(prev, &objects[k + 1], rng),
        };
        diffs.push(d);
    }
    SnComplex::new(field, lo, objects, diffs).expect("consecutive differentials compose to zero")
}

/// The prime field matching a sample group: `F_2` for 2-groups, `F_3` for `ℤ/3`.
pub fn sample_groups() -> Vec<(FiniteGroup, Field)> {
    vec![
        (FiniteGroup::cyclic(2), Field::Prime { p: 2 }),
        (FiniteGroup::cyclic(3), Field::Prime { p: 3 }),
        (FiniteGroup::klein(), Field::Prime { p: 2 }),
    ]
}

/// A subquotient of a cyclic submodule of `F[G]`, of dimension at most `max_dim`.
fn cyclic_piece<R: Rng + ?Sized>(group: &FiniteGroup, field: Field, max_dim: usize, rng: &mut R) -> GPairModule {
    let regular = GPairModule::induce(group, &PairSpace::hausdorff(field, 1));
    let v: Vec<Scalar> = (0..group.order()).map(|_| scalar(field, rng)).collect();
    let mut m = regular.submodule(&regular.orbit_span(&v)).expect("orbit spans are invariant").source().clone();
    while m.dim() > max_dim {
        let w: Vec<Scalar> = (0..m.dim()).map(|_| scalar(field, rng)).collect();
        let s = m.orbit_span(&w);
        if s.is_zero() {
            continue;
        }
        m = m.quotient(&s).expect("orbit spans are invariant").target().clone();
    }
    m
}

/// A random module of dimension at most `max_dim` (at least 1 when `max_dim ≥ 1`):
/// a direct sum of cyclic subquotients of `F[G]`, conjugated by a random basis change,
/// with a random invariant null subspace.
pub fn module<R: Rng + ?Sized>(group: &FiniteGroup, field: Field, max_dim: usize, rng: &mut R) -> GPairModule {
    let mut m = cyclic_piece(group, field, max_dim, rng);
    while m.dim() < max_dim && rng.gen_bool(0.5) {
        let piece = cyclic_piece(group, field, max_dim - m.dim(), rng);
        m = m.direct_sum(&piece).expect("same group and field");
    }
    let d = m.dim();
    let p = loop {
        let p = matrix(field, d, d, rng);
        if p.is_invertible() {
            break p;
        }
    };
    let pinv = p.inverse().expect("invertible");
    let action: Vec<Matrix> = m.action().iter().map(|r| &(&p * r) * &pinv).collect();
    let plain = GPairModule::new(group.clone(), PairSpace::hausdorff(field, d), action).expect("conjugate action");
    let null = match rng.gen_range(0..4) {
        0 => Subspace::zero(field, d),
        1 => Subspace::full(field, d),
        _ => {
            let v: Vec<Scalar> = (0..d).map(|_| scalar(field, rng)).collect();
            plain.orbit_span(&v)
        }
    };
    GPairModule::new(group.clone(), PairSpace::new(null), plain.action().to_vec()).expect("null is invariant")
}

/// A random module whose null subspace is nonzero.
pub fn non_hausdorff_module<R: Rng + ?Sized>(group: &FiniteGroup, field: Field, max_dim: usize, rng: &mut R) -> GPairModule {
    loop {
        let m = module(group, field, max_dim, rng);
        if !m.space().is_hausdorff() {
            return m;
        }
    }
}

/// `0 -> S -> M -> M/S -> 0` for a random module `M` and a random cyclic submodule `S`.
pub fn module_ses<R: Rng + ?Sized>(group: &FiniteGroup, field: Field, max_dim: usize, rng: &mut R) -> ModuleSes {
    let m = module(group, field, max_dim, rng);
    let s = match rng.gen_range(0..5) {
        0 => Subspace::zero(field, m.dim()),
        1 => Subspace::full(field, m.dim()),
        _ => {
            let v: Vec<Scalar> = (0..m.dim()).map(|_| scalar(field, rng)).collect();
            m.orbit_span(&v)
        }
    };
    ModuleSes::from_submodule(&m, &s).expect("submodule sequences are strict exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_valid() {
        for (g, f) in sample_groups() {
            let a = module_ses(&g, f, 3, &mut rng(5));
            let b = module_ses(&g, f, 3, &mut rng(5));
            assert_eq!(a, b);
            assert!(a.total().dim() <= 3);
        }
        let mut r = rng(1);
        for field in [Field::Rationals, Field::Prime { p: 5 }] {
            for _ in 0..20 {
                let (f, g) = composable_pair(field, 4, &mut r);
                assert!(g.after(&f).is_zero());
                let c = complex(field, -1, 4, 4, &mut r);
                assert!(c.objects().len() <= 4);
            }
        }
    }
}
