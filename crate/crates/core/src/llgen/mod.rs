//! The Lie algebra generated by all `L_ω` and `Λ_ω` for `ω` in the Kähler cone.
//!
//! Generation uses a finite spanning family of cone classes: a fixed class
//! `ω₀` plus, for each real basis vector `e` of `H²`, the class `e + cω₀` with
//! the smallest `c ≥ 0` that lands in the cone.

mod closure;
mod phi;

pub use closure::{ideal_probe, lie_closure, minimal_ideals, OperatorLieAlgebra, DEFAULT_CAP};
pub use phi::{phi_form, so_phi_equality, PhiForm, SoPhiVerdict};

pub use crate::lefschetz::counting_operator;

use crate::error::{Error, Result};
use crate::exactlin::{add_vectors, kernel, scale_vector, Matrix, Scalar, Vector};
use crate::lefschetz::{kahler_cone_membership, BigradedAlgebra, ConeMode, Lefschetz};

/// Largest multiple of `ω₀` tried when pushing a basis vector into the cone.
const MAX_SHIFT: i64 = 64;

/// First listed Kähler class in the full cone, or a class found among the real
/// basis of `H²` and the sum of that basis.
pub fn default_class(alg: &BigradedAlgebra) -> Option<Vector> {
    if let Some(w) = alg
        .kahler_classes()
        .iter()
        .find(|w| kahler_cone_membership(alg, w, ConeMode::Full))
    {
        return Some(w.clone());
    }
    let real = alg.real_basis(&alg.degree_indices(2));
    let sum = real
        .iter()
        .fold(crate::exactlin::zero_vector(alg.dim()), |a, v| add_vectors(&a, v));
    real.into_iter()
        .chain(std::iter::once(sum))
        .find(|w| kahler_cone_membership(alg, w, ConeMode::Full))
}

/// `ω₀` together with `e + cω₀` for each real basis vector `e` of `H²`.
pub fn spanning_family(alg: &BigradedAlgebra, omega0: &[Scalar]) -> Result<Vec<Vector>> {
    if !kahler_cone_membership(alg, omega0, ConeMode::Full) {
        return Err(Error::NotInCone("ω₀".into()));
    }
    let mut family = vec![omega0.to_vec()];
    for e in alg.real_basis(&alg.degree_indices(2)) {
        let member = (0..=MAX_SHIFT)
            .map(|c| add_vectors(&e, &scale_vector(&Scalar::from(c), omega0)))
            .find(|w| kahler_cone_membership(alg, w, ConeMode::Full))
            .ok_or_else(|| Error::NotInCone("no shift e + cω₀ lies in the cone".into()))?;
        if !family.contains(&member) {
            family.push(member);
        }
    }
    Ok(family)
}

/// `L_ω` and `Λ_ω` for each family member.
pub fn generators(alg: &BigradedAlgebra, family: &[Vector]) -> Result<Vec<Matrix>> {
    let mut out = Vec::with_capacity(2 * family.len());
    for w in family {
        let lf = Lefschetz::new(alg, w)?;
        out.push(lf.operator().clone());
        out.push(lf.lambda()?);
    }
    Ok(out)
}

/// Result of a generation run.
#[derive(Clone, Debug)]
pub struct Generated {
    pub family: Vec<Vector>,
    pub generators: Vec<Matrix>,
    pub algebra: OperatorLieAlgebra,
}

pub fn generate(alg: &BigradedAlgebra, family: Vec<Vector>, cap: usize) -> Result<Generated> {
    let generators = generators(alg, &family)?;
    let algebra = lie_closure(&generators, cap)?;
    Ok(Generated {
        family,
        generators,
        algebra,
    })
}

/// `g_even`: generation on the even subalgebra, whose full cone is `K_even`.
pub fn g_even(alg: &BigradedAlgebra, cap: usize) -> Result<(BigradedAlgebra, Generated)> {
    let even = alg.even_subalgebra();
    let w = default_class(&even).ok_or_else(|| Error::NotInCone("no class in K_even".into()))?;
    let family = spanning_family(&even, &w)?;
    let generated = generate(&even, family, cap)?;
    Ok((even, generated))
}

/// Re-runs generation with one more cone class and reports whether the
/// closure stayed the same.
pub fn stable_under_enlargement(
    alg: &BigradedAlgebra,
    generated: &Generated,
    cap: usize,
) -> Result<bool> {
    let mut extra = generated.family[0].clone();
    for w in &generated.family[1..] {
        extra = add_vectors(&extra, w);
    }
    let shifted = (1..=MAX_SHIFT)
        .map(|c| add_vectors(&extra, &scale_vector(&Scalar::from(c), &generated.family[0])))
        .find(|w| kahler_cone_membership(alg, w, ConeMode::Full))
        .ok_or_else(|| Error::NotInCone("enlargement class".into()))?;
    let mut family = generated.family.clone();
    family.push(shifted);
    let bigger = generate(alg, family, cap)?;
    Ok(bigger.algebra == generated.algebra)
}

/// `ker(Λ_ω | H²) = ker(L_ω | H²)`.
pub fn lambda_kernel_matches(alg: &BigradedAlgebra, omega: &[Scalar]) -> Result<bool> {
    let lf = Lefschetz::new(alg, omega)?;
    let lambda = lf.lambda()?;
    let h2 = alg.degree_indices(2);
    let all: Vec<usize> = (0..alg.dim()).collect();
    let kl = kernel(&lf.operator().submatrix(&all, &h2));
    let kb = kernel(&lambda.submatrix(&all, &h2));
    Ok(kl == kb)
}

/// `N` copies of the `S²` cohomology with the family `Σ w_k` and `Σ w_j + w_k`.
pub fn product_model(n: usize) -> Result<(BigradedAlgebra, Vec<Vector>)> {
    let alg = crate::catalog::product_model(n)?;
    let family = alg.kahler_classes().to_vec();
    Ok((alg, family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn so5_from_three_classes() {
        let m = catalog::g2_family(3).unwrap();
        let (even, gen) = g_even(&m, DEFAULT_CAP).unwrap();
        assert_eq!(gen.family.len(), 4);
        assert_eq!(gen.algebra.dim(), 10);
        let phi = phi_form(&even).unwrap();
        assert!(so_phi_equality(&phi, &gen.algebra).equal);
        assert!(gen.generators.iter().all(|x| phi.annihilated_by(x)));
    }

    #[test]
    fn so_phi_dimensions() {
        for (m, d) in [(2, 6), (5, 21)] {
            let alg = catalog::g2_family(m).unwrap();
            let (even, gen) = g_even(&alg, DEFAULT_CAP).unwrap();
            let v = so_phi_equality(&phi_form(&even).unwrap(), &gen.algebra);
            assert_eq!((v.dim, v.equal), (d, true));
        }
    }

    #[test]
    fn single_triple_is_proper_subalgebra() {
        let alg = catalog::g2_family(2).unwrap();
        let even = alg.even_subalgebra();
        let w = default_class(&even).unwrap();
        let gen = generate(&even, vec![w], DEFAULT_CAP).unwrap();
        let v = so_phi_equality(&phi_form(&even).unwrap(), &gen.algebra);
        assert_eq!(v.dim, 3);
        assert!(!v.equal && v.members_annihilate);
    }

    #[test]
    fn product_model_splits() {
        for n in [1, 2, 3] {
            let (alg, family) = product_model(n).unwrap();
            let gen = generate(&alg, family, DEFAULT_CAP).unwrap();
            assert_eq!(gen.algebra.dim(), 3 * n);
            let ideals = minimal_ideals(&gen.algebra).unwrap();
            assert_eq!(ideals.len(), n);
            assert!(ideals.iter().all(|i| i.dim() == 3 && i.derived() == *i));
            assert_eq!(gen.algebra.center().dim(), 0);
        }
    }

    #[test]
    fn probe_in_product_factor_is_proper() {
        let (alg, family) = product_model(3).unwrap();
        let gen = generate(&alg, family, DEFAULT_CAP).unwrap();
        let seed = gen.algebra.basis()[0].clone();
        assert_eq!(ideal_probe(&gen.algebra, &seed).unwrap().dim(), 3);
    }

    #[test]
    fn lambda_kernel_property_on_g2_models() {
        for alg in [catalog::k3_mock(), catalog::g2_family(4).unwrap()] {
            for w in alg.kahler_classes() {
                assert!(lambda_kernel_matches(&alg, w).unwrap());
            }
        }
    }

    #[test]
    fn closure_is_stable_under_enlargement() {
        let alg = catalog::g2_family(3).unwrap();
        let (even, gen) = g_even(&alg, DEFAULT_CAP).unwrap();
        assert!(stable_under_enlargement(&even, &gen, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn counting_operator_example() {
        let t = catalog::torus();
        let b = counting_operator(&t);
        assert_eq!(b.get(0, 0), &Scalar::from(1));
        assert_eq!(b.get(3, 3), &Scalar::from(-1));
    }
}
