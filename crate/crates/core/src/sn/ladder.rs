use super::{Cokernel, Kernel, PairMap, SnError};

/// The diagram attached to `A -f-> B -g-> C` with `g f = 0`, together with
/// explicit comparison maps between the several models of its homology.
#[derive(Clone, Debug)]
pub struct HomologyLadder {
    pub f: PairMap,
    pub g: PairMap,
    pub coim_f: Cokernel,
    pub ker_g: Kernel,
    pub coker_f: Cokernel,
    pub im_g: Kernel,
    pub im_f: Kernel,
    /// `Coim f -> Ker g`, monic.
    pub phi: PairMap,
    /// `Coker f -> Im g`, epic.
    pub psi: PairMap,
    /// `Ker g -> Coker f`.
    pub u: PairMap,
    /// `Im f -> Ker g`.
    pub v: PairMap,
    /// `X = Coker v`.
    pub x: Cokernel,
    pub x_to_coker_phi: PairMap,
    pub x_to_ker_psi: PairMap,
    pub x_to_im_u: PairMap,
    pub coim_u_to_im_u: PairMap,
    pub im_f_to_ker_u: PairMap,
    pub coker_u_to_coim_g: PairMap,
}

impl HomologyLadder {
    pub fn new(f: &PairMap, g: &PairMap) -> Result<HomologyLadder, SnError> {
        if f.codomain() != g.domain() {
            return Err(SnError::Composability("codomain of f is not the domain of g".into()));
        }
        if !g.after(f).is_zero() {
            return Err(SnError::NotAComplex);
        }
        let coim_f = f.coimage();
        let ker_g = g.kernel();
        let coker_f = f.cokernel();
        let im_g = g.image();
        let im_f = f.image();

        let phi = coim_f.descend(&ker_g.lift(f)?)?;
        let psi = coker_f.descend(&im_g.lift(g)?)?;
        let u = coker_f.projection.after(&ker_g.inclusion);
        let v = ker_g.lift(&im_f.inclusion)?;
        let x = v.cokernel();

        let coker_phi = phi.cokernel();
        let x_to_coker_phi = x.descend(&coker_phi.projection)?;
        let ker_psi = psi.kernel();
        let x_to_ker_psi = x.descend(&ker_psi.lift(&u)?)?;
        let im_u = u.image();
        let x_to_im_u = x.descend(&im_u.lift(&u)?)?;
        let coim_u_to_im_u = u.comparison();
        let im_f_to_ker_u = u.kernel().lift(&v)?;
        let coim_g = g.coimage();
        let coker_u = u.cokernel();
        let coker_u_to_coim_g = coker_u.descend(&coker_f.descend(&coim_g.projection)?)?;

        Ok(HomologyLadder {
            f: f.clone(),
            g: g.clone(),
            coim_f,
            ker_g,
            coker_f,
            im_g,
            im_f,
            phi,
            psi,
            u,
            v,
            x,
            x_to_coker_phi,
            x_to_ker_psi,
            x_to_im_u,
            coim_u_to_im_u,
            im_f_to_ker_u,
            coker_u_to_coim_g,
        })
    }

    /// Names of the identities that fail; empty when the ladder is coherent.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.phi.is_monic() {
            out.push("phi monic");
        }
        if !self.psi.is_epic() || !self.psi.is_surjective() {
            out.push("psi epic");
        }
        if !self.u.is_strict() || !self.coim_u_to_im_u.is_iso() {
            out.push("u strict");
        }
        let witnesses = [
            ("X = Coker phi", &self.x_to_coker_phi),
            ("X = Ker psi", &self.x_to_ker_psi),
            ("X = Im u", &self.x_to_im_u),
            ("Ker u = Im f", &self.im_f_to_ker_u),
            ("Coker u = Coim g", &self.coker_u_to_coim_g),
        ];
        for (name, w) in witnesses {
            if !w.is_iso() {
                out.push(name);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, Matrix};
    use crate::sn::{Biproduct, PairSpace};

    #[test]
    fn dense_inclusion_ladder_has_zero_homology() {
        let q = Field::Rationals;
        let f0 = PairSpace::hausdorff(q, 1);
        let ff = PairSpace::indiscrete(q, 1);
        let mid = Biproduct::of(&ff, &f0).object;
        let f = PairMap::new(f0.clone(), mid.clone(), Matrix::from_i64(q, &[&[1], &[0]])).unwrap();
        let g = PairMap::new(mid, ff.clone(), Matrix::from_i64(q, &[&[0, 1]])).unwrap();
        let l = HomologyLadder::new(&f, &g).unwrap();
        assert_eq!(l.coim_f.object, f0);
        assert_eq!((l.ker_g.object.dim(), l.ker_g.object.null_dim()), (1, 1));
        assert_eq!((l.coker_f.object.dim(), l.coker_f.object.null_dim()), (1, 0));
        assert_eq!(l.im_g.object, ff);
        assert!(l.x.object.is_zero());
        assert!(l.u.is_zero());
        assert!(!l.phi.is_strict() && !l.phi.is_iso());
        assert!(!l.psi.is_strict() && !l.psi.is_iso());
        assert!(l.failures().is_empty());
    }

    #[test]
    fn zero_differentials_give_the_object_back() {
        let q = Field::Rationals;
        let v = PairSpace::from_null_vectors(q, 2, &[vec![q.one(), q.from_i64(3)]]);
        let z = v.zero_map(&v);
        let l = HomologyLadder::new(&z, &z).unwrap();
        assert!(l.x.object.is_isomorphic(&v));
        assert!(l.failures().is_empty());
    }

    #[test]
    fn rejects_non_complexes() {
        let q = Field::Rationals;
        let v = PairSpace::hausdorff(q, 1);
        assert_eq!(HomologyLadder::new(&v.identity(), &v.identity()).unwrap_err(), SnError::NotAComplex);
    }
}
