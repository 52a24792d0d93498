//! `⊗_G`, `Hom_G` and `⊥`-projectivity.

use crate::linalg::Matrix;
use crate::sn::{hom, Cokernel, HomSpace, Kernel, PairMap};

use super::adjunctions::induction_counit;
use super::{GMap, GPairModule, GroupError};

/// `A ⊗_G B`: coinvariants of the diagonal action on `A ⊗ B`.
pub fn tensor_over_g(a: &GPairModule, b: &GPairModule) -> Result<Cokernel, GroupError> {
    Ok(a.tensor(b)?.coinvariants())
}

/// `Hom_G(A, B)`: invariants of `g·f = ρ_B(g) f ρ_A(g^{-1})` on the hom pair.
pub fn hom_g(a: &GPairModule, b: &GPairModule) -> Result<(HomSpace, Kernel), GroupError> {
    a.compatible(b)?;
    let h = hom(a.space(), b.space());
    let group = a.group();
    let n = h.object.dim();
    let field = a.field();
    let action = (0..group.order())
        .map(|g| {
            let cols = (0..n)
                .map(|j| {
                    let mut e = vec![field.zero(); n];
                    e[j] = field.one();
                    let f = h.element(&e);
                    let moved = &(b.rho(g) * f.matrix()) * a.rho(group.inv(g));
                    let moved = PairMap::new(a.forget(), b.forget(), moved)?;
                    Ok(h.coordinates(&moved)?)
                })
                .collect::<Result<Vec<_>, GroupError>>()?;
            Ok(Matrix::from_columns(field, n, &cols))
        })
        .collect::<Result<Vec<_>, GroupError>>()?;
    let module = GPairModule::new(group.clone(), h.object.clone(), action)?;
    let inv = module.invariants();
    Ok((h, inv))
}

/// An equivariant bounded section of the counit `⊥M -> M`, if one exists.
pub fn bot_section(m: &GPairModule) -> Result<Option<GMap>, GroupError> {
    let field = m.field();
    let eps = induction_counit(m);
    let bot = eps.source().clone();
    let (d, big) = (m.dim(), bot.dim());
    let id_d = Matrix::identity(field, d);
    let id_big = Matrix::identity(field, big);
    // unknown X (big × d), row-major; A X B = C  <=>  (A ⊗ Bᵀ) vec X = vec C
    let mut system = eps.map().matrix().kron(&id_d);
    let mut rhs: Vec<crate::Scalar> = (0..d).flat_map(|i| id_d.row(i).to_vec()).collect();
    for g in 0..m.group().order() {
        let eq = &id_big.kron(&m.rho(g).transpose()) - &bot.rho(g).kron(&id_d);
        rhs.extend(std::iter::repeat(field.zero()).take(eq.rows()));
        system = system.vstack(&eq);
    }
    let p = bot.space().null().quotient_presentation().projection;
    let bounded = p.kron(m.space().null().basis());
    rhs.extend(std::iter::repeat(field.zero()).take(bounded.rows()));
    system = system.vstack(&bounded);

    let Some(x) = system.solve(&Matrix::column(field, &rhs)) else {
        return Ok(None);
    };
    let s = Matrix::from_fn(field, big, d, |i, j| x.get(i * d + j, 0).clone());
    let map = PairMap::new(m.forget(), bot.forget(), s)?;
    Ok(Some(GMap::new(m.clone(), bot, map)?))
}

/// Whether `M` is a retract of `⊥M` through the counit.
pub fn is_bot_projective(m: &GPairModule) -> Result<bool, GroupError> {
    Ok(bot_section(m)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::linalg::Field;
    use crate::sn::PairSpace;

    fn fp(p: u32) -> Field {
        Field::Prime { p }
    }

    #[test]
    fn trivial_tensor_is_coinvariants() {
        let g = FiniteGroup::cyclic(3);
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).one(), fp(3).zero()]]);
        let m = GPairModule::induce(&g, &e);
        let t = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(3), 1));
        assert_eq!(tensor_over_g(&t, &m).unwrap().object, m.coinvariants().object);
    }

    #[test]
    fn hom_from_trivial_is_invariants() {
        let g = FiniteGroup::cyclic(2);
        let e = PairSpace::from_null_vectors(fp(2), 2, &[vec![fp(2).one(), fp(2).one()]]);
        let m = GPairModule::coinduce(&g, &e);
        let t = GPairModule::trivial(&g, &PairSpace::hausdorff(fp(2), 1));
        let (_, inv) = hom_g(&t, &m).unwrap();
        assert!(inv.object.is_isomorphic(&m.invariants().object));
    }

    #[test]
    fn bot_projectivity() {
        let g = FiniteGroup::cyclic(3);
        let e = PairSpace::from_null_vectors(fp(3), 2, &[vec![fp(3).one(), fp(3).one()]]);
        assert!(is_bot_projective(&GPairModule::induce(&g, &e)).unwrap());
        assert!(!is_bot_projective(&GPairModule::trivial(&g, &PairSpace::hausdorff(fp(3), 1))).unwrap());
        let s = bot_section(&GPairModule::induce(&g, &e)).unwrap().unwrap();
        let eps = induction_counit(s.source());
        assert_eq!(eps.map().after(s.map()), s.source().space().identity());
    }
}
