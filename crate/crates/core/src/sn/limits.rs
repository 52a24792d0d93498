use crate::linalg::{Matrix, Subspace};

use super::{PairMap, PairSpace, SnError};

/// `Ker f = (ker f, ker f ∩ N)` with its inclusion.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub object: PairSpace,
    pub inclusion: PairMap,
    subspace: Subspace,
    of: PairMap,
}

impl Kernel {
    pub fn of(f: &PairMap) -> Kernel {
        let k = f.matrix().kernel_basis();
        let null = k
            .intersect(f.domain().null())
            .and_then(|meet| meet.relative_to(&k))
            .expect("kernel lives in the domain");
        let object = PairSpace::new(null);
        let inclusion = PairMap::new_unchecked(object.clone(), f.domain().clone(), k.inclusion());
        Kernel { object, inclusion, subspace: k, of: f.clone() }
    }

    /// The kernel as a subspace of the domain.
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// The unique `h'` with `inclusion ∘ h' = h`, for `h : T -> dom f` with `f ∘ h = 0`.
    pub fn lift(&self, h: &PairMap) -> Result<PairMap, SnError> {
        if h.codomain() != self.of.domain() {
            return Err(SnError::Composability("lift target is not the kernel's ambient object".into()));
        }
        if !self.of.after(h).is_zero() {
            return Err(SnError::Factorization("map does not compose to zero".into()));
        }
        let coords = self.subspace.coordinates_of_columns(h.matrix())?;
        PairMap::new(h.domain().clone(), self.object.clone(), coords)
    }
}

/// `Coker f = (V'/im f, (N' + im f)/im f)` with its projection and a linear section.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub object: PairSpace,
    pub projection: PairMap,
    section: Matrix,
    of: PairMap,
}

impl Cokernel {
    pub fn of(f: &PairMap) -> Cokernel {
        let im = f.matrix().image_basis();
        let qp = im.quotient_presentation();
        let null = f
            .codomain()
            .null()
            .image_under(&qp.projection)
            .expect("projection acts on the codomain");
        let object = PairSpace::new(null);
        let projection = PairMap::new_unchecked(f.codomain().clone(), object.clone(), qp.projection);
        Cokernel { object, projection, section: qp.section, of: f.clone() }
    }

    /// Linear (not necessarily bounded) right inverse of the projection.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// The unique `h'` with `h' ∘ projection = h`, for `h : cod f -> T` with `h ∘ f = 0`.
    pub fn descend(&self, h: &PairMap) -> Result<PairMap, SnError> {
        if h.domain() != self.of.codomain() {
            return Err(SnError::Composability("map does not start at the cokernel's ambient object".into()));
        }
        if !h.after(&self.of).is_zero() {
            return Err(SnError::Factorization("map does not kill the image".into()));
        }
        PairMap::new(self.object.clone(), h.codomain().clone(), h.matrix() * &self.section)
    }
}

/// `A ⊕ B` with injections and projections.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub object: PairSpace,
    pub inj: [PairMap; 2],
    pub proj: [PairMap; 2],
}

impl Biproduct {
    pub fn of(a: &PairSpace, b: &PairSpace) -> Biproduct {
        let field = a.field();
        let (m, n) = (a.dim(), b.dim());
        let null = Subspace::from_rows_matrix(m + n, &a.null().basis().block_diag(b.null().basis()));
        let object = PairSpace::new(null);
        let i1 = Matrix::identity(field, m).vstack(&Matrix::zeros(field, n, m));
        let i2 = Matrix::zeros(field, m, n).vstack(&Matrix::identity(field, n));
        let p1 = i1.transpose();
        let p2 = i2.transpose();
        Biproduct {
            inj: [
                PairMap::new_unchecked(a.clone(), object.clone(), i1),
                PairMap::new_unchecked(b.clone(), object.clone(), i2),
            ],
            proj: [
                PairMap::new_unchecked(object.clone(), a.clone(), p1),
                PairMap::new_unchecked(object.clone(), b.clone(), p2),
            ],
            object,
        }
    }
}

/// Pullback of `f : A -> C <- B : g`, computed as `Ker [f, -g]`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: PairSpace,
    pub to_left: PairMap,
    pub to_right: PairMap,
    kernel: Kernel,
}

impl Pullback {
    pub fn of(f: &PairMap, g: &PairMap) -> Result<Pullback, SnError> {
        if f.codomain() != g.codomain() {
            return Err(SnError::Shape("pullback needs a common codomain".into()));
        }
        let sum = Biproduct::of(f.domain(), g.domain());
        let m = f.matrix().hstack(&(-g.matrix()));
        let diff = PairMap::new_unchecked(sum.object.clone(), f.codomain().clone(), m);
        let kernel = Kernel::of(&diff);
        Ok(Pullback {
            object: kernel.object.clone(),
            to_left: sum.proj[0].after(&kernel.inclusion),
            to_right: sum.proj[1].after(&kernel.inclusion),
            kernel,
        })
    }

    /// The map `T -> P` induced by a commuting pair `f h1 = g h2`.
    pub fn lift(&self, h1: &PairMap, h2: &PairMap) -> Result<PairMap, SnError> {
        if h1.domain() != h2.domain() {
            return Err(SnError::Shape("cone legs have different sources".into()));
        }
        let into_sum = PairMap::new(
            h1.domain().clone(),
            self.kernel.inclusion.codomain().clone(),
            h1.matrix().vstack(h2.matrix()),
        )?;
        self.kernel.lift(&into_sum)
    }
}

/// Pushout of `f : B <- A -> C : g`, computed as `Coker [f; -g]`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: PairSpace,
    pub from_left: PairMap,
    pub from_right: PairMap,
    cokernel: Cokernel,
}

impl Pushout {
    pub fn of(f: &PairMap, g: &PairMap) -> Result<Pushout, SnError> {
        if f.domain() != g.domain() {
            return Err(SnError::Shape("pushout needs a common domain".into()));
        }
        let sum = Biproduct::of(f.codomain(), g.codomain());
        let m = f.matrix().vstack(&(-g.matrix()));
        let diff = PairMap::new_unchecked(f.domain().clone(), sum.object.clone(), m);
        let cokernel = Cokernel::of(&diff);
        Ok(Pushout {
            object: cokernel.object.clone(),
            from_left: cokernel.projection.after(&sum.inj[0]),
            from_right: cokernel.projection.after(&sum.inj[1]),
            cokernel,
        })
    }

    /// The map `Q -> T` induced by a commuting pair `h1 f = h2 g`.
    pub fn descend(&self, h1: &PairMap, h2: &PairMap) -> Result<PairMap, SnError> {
        if h1.codomain() != h2.codomain() {
            return Err(SnError::Shape("cocone legs have different targets".into()));
        }
        let from_sum = PairMap::new(
            self.cokernel.projection.domain().clone(),
            h1.codomain().clone(),
            h1.matrix().hstack(h2.matrix()),
        )?;
        self.cokernel.descend(&from_sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn cokernel_examples() {
        let f0 = PairSpace::hausdorff(q(), 1);
        let ff = PairSpace::indiscrete(q(), 1);
        let i = PairMap::new(f0.clone(), ff.clone(), Matrix::identity(q(), 1)).unwrap();
        assert!(i.cokernel().object.is_zero());
        assert_eq!(ff.zero_map(&ff).cokernel().object, ff);

        // x -> (x, 0) into (F,F) ⊕ (F,0)
        let sum = Biproduct::of(&ff, &f0).object;
        let f = PairMap::new(f0, sum, Matrix::from_i64(q(), &[&[1], &[0]])).unwrap();
        let c = f.cokernel().object;
        assert_eq!((c.dim(), c.null_dim()), (1, 0));
    }

    #[test]
    fn trivial_pushouts_and_pullbacks() {
        let a = PairSpace::indiscrete(q(), 2);
        let b = PairSpace::hausdorff(q(), 1);
        let z = PairSpace::zero(q());
        let po = Pushout::of(&z.zero_map(&a), &z.zero_map(&b)).unwrap();
        assert!(po.object.is_isomorphic(&Biproduct::of(&a, &b).object));
        let pb = Pullback::of(&a.zero_map(&z), &b.zero_map(&z)).unwrap();
        assert!(pb.object.is_isomorphic(&Biproduct::of(&a, &b).object));
    }

    #[test]
    fn pushout_of_dense_inclusion() {
        let f0 = PairSpace::hausdorff(q(), 1);
        let ff = PairSpace::indiscrete(q(), 1);
        let i = PairMap::new(f0.clone(), ff.clone(), Matrix::identity(q(), 1)).unwrap();
        let po = Pushout::of(&i, &f0.identity()).unwrap();
        assert_eq!((po.object.dim(), po.object.null_dim()), (1, 1));
    }

    #[test]
    fn kernel_lift_rejects_nonzero_composites() {
        let a = PairSpace::hausdorff(q(), 2);
        let f = PairMap::new(a.clone(), PairSpace::hausdorff(q(), 1), Matrix::from_i64(q(), &[&[1, 1]])).unwrap();
        let k = f.kernel();
        assert!(k.lift(&a.identity()).is_err());
        let h = PairMap::new(
            PairSpace::hausdorff(q(), 1),
            a.clone(),
            Matrix::from_i64(q(), &[&[2], &[-2]]),
        )
        .unwrap();
        let lifted = k.lift(&h).unwrap();
        assert_eq!(k.inclusion.after(&lifted), h);
    }
}
