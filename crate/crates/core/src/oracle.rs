//! Independent oracles: exhaustive roof search over `F_2` and plain rank counts
//! for group homology with trivial coefficients.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::complexes::{ChainMap, SnComplex};
use crate::groups::FiniteGroup;
use crate::hearts::LeftHeartObject;
use crate::linalg::{Field, Matrix, Subspace};
use crate::sn::{PairMap, PairSpace};

const F2: Field = Field::Prime { p: 2 };

/// Every subspace of `F_2^n`, each exactly once.
fn subspaces_f2(n: usize) -> Vec<Subspace> {
    let mut seen = Vec::new();
    for mask in 0u32..(1 << (n * n)) {
        let rows = Matrix::from_fn(F2, n, n, |i, j| F2.from_i64(((mask >> (i * n + j)) & 1) as i64));
        let s = Subspace::from_rows_matrix(n, &rows);
        if !seen.contains(&s) {
            seen.push(s);
        }
    }
    seen
}

fn all_matrices_f2(rows: usize, cols: usize) -> impl Iterator<Item = Matrix> {
    let bits = rows * cols;
    (0u64..(1 << bits)).map(move |mask| Matrix::from_fn(F2, rows, cols, |i, j| F2.from_i64(((mask >> (i * cols + j)) & 1) as i64)))
}

/// All monic pair maps over `F_2` with `dim A^{-1} + dim A^0 ≤ max_total`, in a fixed order.
pub fn monics_f2(max_total: usize) -> Vec<PairMap> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for d in 0..=total / 2 {
            let c = total - d;
            for nd in subspaces_f2(d) {
                for nc in subspaces_f2(c) {
                    let (a, b) = (PairSpace::new(nd.clone()), PairSpace::new(nc));
                    for m in all_matrices_f2(c, d) {
                        if let Ok(f) = PairMap::new(a.clone(), b.clone(), m) {
                            if f.is_monic() {
                                out.push(f);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `(dim N_0 / a N_{-1}, dim V_0 / a V_{-1})`: row-wise cohomology, which any
/// quasi-isomorphism must preserve.
fn row_dims(a: &PairMap) -> (usize, usize) {
    let image_null = a.matrix() * &a.domain().null().inclusion();
    let top = a.codomain().null_dim() - image_null.rank();
    (top, a.codomain().dim() - a.matrix().rank())
}

/// Whether some chain map `[z] -> [x]` of two-term complexes is a quasi-isomorphism,
/// by enumerating every bounded degree-0 component.
pub fn quasi_iso_exists(z: &PairMap, x: &PairMap) -> bool {
    if row_dims(z) != row_dims(x) {
        return false;
    }
    let (cz, cx) = (SnComplex::two_term(z, -1), SnComplex::two_term(x, -1));
    all_matrices_f2(x.codomain().dim(), z.codomain().dim()).any(|m| {
        let Ok(f0) = PairMap::new(z.codomain().clone(), x.codomain().clone(), m) else {
            return false;
        };
        let target = f0.after(z);
        let Some(sol) = x.matrix().solve(target.matrix()) else {
            return false;
        };
        let Ok(f1) = PairMap::new(z.domain().clone(), x.domain().clone(), sol) else {
            return false;
        };
        ChainMap::new(&cz, &cx, -1, vec![f1, f0]).map(|c| c.is_quasi_iso()).unwrap_or(false)
    })
}

/// The enumerated objects and, for each ordered pair, whether a quasi-isomorphism
/// from the first to the second exists.
pub struct RoofOracle {
    pub objects: Vec<PairMap>,
    reach: Vec<Vec<bool>>,
}

impl RoofOracle {
    pub fn build(max_total: usize) -> RoofOracle {
        let objects = monics_f2(max_total);
        let reach = objects.par_iter().map(|z| objects.iter().map(|x| quasi_iso_exists(z, x)).collect()).collect();
        RoofOracle { objects, reach }
    }

    /// The shared oracle for total dimension `≤ 3`.
    pub fn small() -> &'static RoofOracle {
        static ORACLE: OnceLock<RoofOracle> = OnceLock::new();
        ORACLE.get_or_init(|| RoofOracle::build(3))
    }

    pub fn index_of(&self, a: &PairMap) -> Option<usize> {
        self.objects.iter().position(|o| o == a)
    }

    /// A roof `x <- z -> y` with both legs quasi-isomorphisms, apex drawn from the enumeration.
    pub fn roof_apex(&self, x: usize, y: usize) -> Option<usize> {
        (0..self.objects.len()).find(|&z| self.reach[z][x] && self.reach[z][y])
    }

    /// Compares the two isomorphism tests on `objects[i]` against every object;
    /// returns the indices where they disagree.
    pub fn disagreements(&self, i: usize) -> Vec<usize> {
        let inv = |k: usize| LeftHeartObject::new(self.objects[k].clone()).expect("enumerated maps are monic").invariants();
        let xi = inv(i);
        (0..self.objects.len()).filter(|&j| (xi == inv(j)) != self.roof_apex(i, j).is_some()).collect()
    }
}

/// Rank of a matrix over `F_p` by plain elimination on residues.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let k = rows[r][c];
                for j in 0..cols {
                    rows[r][j] = (rows[r][j] + (p - k) * rows[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// The inhomogeneous boundary `F_p[G^k] -> F_p[G^{k-1}]` for trivial coefficients, as rows.
fn trivial_boundary(group: &FiniteGroup, k: usize, p: u64) -> Vec<Vec<u64>> {
    let q = group.order();
    let (rows, cols) = (q.pow(k as u32 - 1), q.pow(k as u32));
    let mut m = vec![vec![0u64; cols]; rows];
    let index = |t: &[usize]| t.iter().fold(0, |acc, &g| acc * q + g);
    for c in 0..cols {
        let mut t = vec![0; k];
        let mut rest = c;
        for slot in t.iter_mut().rev() {
            *slot = rest % q;
            rest /= q;
        }
        let mut add = |u: Vec<usize>, sign: bool| {
            let r = index(&u);
            m[r][c] = (m[r][c] + if sign { 1 } else { p - 1 }) % p;
        };
        add(t[1..].to_vec(), true);
        for i in 0..k - 1 {
            let mut u = t[..i].to_vec();
            u.push(group.mul(t[i], t[i + 1]));
            u.extend_from_slice(&t[i + 2..]);
            add(u, (i + 1) % 2 == 0);
        }
        add(t[..k - 1].to_vec(), k % 2 == 0);
    }
    m
}

/// `dim H_n(G; F_p)` for `n = 0..=top`, from ranks of the inhomogeneous bar complex.
pub fn trivial_homology_dims(group: &FiniteGroup, p: u32, top: usize) -> Vec<usize> {
    let p = p as u64;
    let ranks: Vec<usize> = (1..=top + 1).map(|k| rank_mod_p(trivial_boundary(group, k, p), p)).collect();
    (0..=top)
        .map(|n| {
            let chains = group.order().pow(n as u32);
            let out = if n == 0 { 0 } else { ranks[n - 1] };
            chains - out - ranks[n]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        assert_eq!(subspaces_f2(2).len(), 5);
        assert_eq!(subspaces_f2(3).len(), 16);
        assert_eq!(monics_f2(0).len(), 1);
        // the zero object, and 0 -> F with either null
        assert_eq!(monics_f2(1).len(), 3);
    }

    #[test]
    fn rank_oracle_on_cyclic_groups() {
        assert_eq!(trivial_homology_dims(&FiniteGroup::cyclic(2), 2, 3), vec![1, 1, 1, 1]);
        assert_eq!(trivial_homology_dims(&FiniteGroup::cyclic(3), 3, 3), vec![1, 1, 1, 1]);
        assert_eq!(trivial_homology_dims(&FiniteGroup::cyclic(3), 2, 3), vec![1, 0, 0, 0]);
        assert_eq!(trivial_homology_dims(&FiniteGroup::klein(), 2, 3), vec![1, 2, 3, 4]);
    }

    #[test]
    fn roof_search_separates_singular_from_hausdorff() {
        let s = PairMap::new(PairSpace::hausdorff(F2, 1), PairSpace::indiscrete(F2, 1), Matrix::identity(F2, 1)).unwrap();
        let i = PairMap::new(PairSpace::zero(F2), PairSpace::hausdorff(F2, 1), Matrix::zeros(F2, 1, 0)).unwrap();
        assert!(!quasi_iso_exists(&s, &i));
        assert!(quasi_iso_exists(&s, &s));
    }
}
