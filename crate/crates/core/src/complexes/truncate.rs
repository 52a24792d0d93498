use super::SnComplex;

/// Which canonical t-structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    AtMost(i64),
    AtLeast(i64),
}

impl SnComplex {
    /// The truncation functors of the left and right t-structures, cut directly at `n`.
    ///
    /// * left `≤ n`:  `… -> A^{n-1} -> Ker d^n`
    /// * left `≥ n`:  `Coim d^{n-1} -> A^n -> …`
    /// * right `≤ n`: `… -> A^n -> Im d^n`
    /// * right `≥ n`: `Coker d^{n-1} -> A^{n+1} -> …`
    pub fn truncate(&self, side: Side, bound: Bound) -> SnComplex {
        let field = self.field();
        let (lo, hi) = if self.is_empty() { (0, -1) } else { (self.lo(), self.hi()) };
        match (side, bound) {
            (Side::Left, Bound::AtMost(n)) => {
                let ker = self.differential(n).kernel();
                SnComplex::assemble(
                    field,
                    lo.min(n),
                    n,
                    |k| if k == n { ker.object.clone() } else { self.object(k) },
                    |k, _, _| {
                        if k == n - 1 {
                            ker.lift(&self.differential(k)).expect("d^n d^{n-1} = 0")
                        } else {
                            self.differential(k)
                        }
                    },
                )
            }
            (Side::Left, Bound::AtLeast(n)) => {
                let coim = self.differential(n - 1).coimage();
                SnComplex::assemble(
                    field,
                    n - 1,
                    hi.max(n),
                    |k| if k == n - 1 { coim.object.clone() } else { self.object(k) },
                    |k, _, _| {
                        if k == n - 1 {
                            coim.descend(&self.differential(k)).expect("d kills its kernel")
                        } else {
                            self.differential(k)
                        }
                    },
                )
            }
            (Side::Right, Bound::AtMost(n)) => {
                let im = self.differential(n).image();
                SnComplex::assemble(
                    field,
                    lo.min(n),
                    n + 1,
                    |k| if k == n + 1 { im.object.clone() } else { self.object(k) },
                    |k, _, _| {
                        if k == n {
                            im.lift(&self.differential(k)).expect("d factors through its image")
                        } else {
                            self.differential(k)
                        }
                    },
                )
            }
            (Side::Right, Bound::AtLeast(n)) => {
                let coker = self.differential(n - 1).cokernel();
                SnComplex::assemble(
                    field,
                    n,
                    hi.max(n),
                    |k| if k == n { coker.object.clone() } else { self.object(k) },
                    |k, _, _| {
                        if k == n {
                            coker.descend(&self.differential(k)).expect("d^n d^{n-1} = 0")
                        } else {
                            self.differential(k)
                        }
                    },
                )
            }
        }
    }

    /// The same truncation computed as `Σ^{-n} ∘ τ^{(0)} ∘ Σ^n`.
    pub fn truncate_via_shift(&self, side: Side, bound: Bound) -> SnComplex {
        let (n, at_zero) = match bound {
            Bound::AtMost(n) => (n, Bound::AtMost(0)),
            Bound::AtLeast(n) => (n, Bound::AtLeast(0)),
        };
        self.shift(n).truncate(side, at_zero).shift(-n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix};
    use crate::sn::{PairMap, PairSpace};

    fn q() -> Field {
        Field::Rationals
    }

    fn dense() -> SnComplex {
        let i = PairMap::new(PairSpace::hausdorff(q(), 1), PairSpace::indiscrete(q(), 1), Matrix::identity(q(), 1)).unwrap();
        SnComplex::two_term(&i, -1)
    }

    #[test]
    fn left_truncation_of_concentrated_complex() {
        let c = SnComplex::concentrated(&PairSpace::indiscrete(q(), 2), 0);
        assert_eq!(c.truncate(Side::Left, Bound::AtMost(0)), c);
    }

    #[test]
    fn left_at_least_keeps_monic_differential() {
        let c = dense();
        let t = c.truncate(Side::Left, Bound::AtLeast(0));
        assert_eq!(t, c);
    }

    #[test]
    fn right_at_most_appends_image() {
        let c = dense();
        let t = c.truncate(Side::Right, Bound::AtMost(0));
        assert_eq!(t.lo(), -1);
        assert_eq!(t.hi(), 1);
        assert!(t.object(1).is_zero());
        assert_eq!(t.object(0), PairSpace::indiscrete(q(), 1));
    }

    #[test]
    fn direct_and_shifted_truncations_agree() {
        let c = dense();
        for side in [Side::Left, Side::Right] {
            for n in -2..=2 {
                for b in [Bound::AtMost(n), Bound::AtLeast(n)] {
                    assert_eq!(c.truncate(side, b), c.truncate_via_shift(side, b));
                }
            }
        }
    }
}
