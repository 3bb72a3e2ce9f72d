use serde::Serialize;

use super::BigradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{symmetric_signature, Inertia, Matrix, Subspace, Vector};
use crate::report::{Check, Report};

/// Signature of the middle-degree intersection form, computed two ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeSignature {
    /// `Σ_{p≡q (2)} (−1)^p h^{p,q}`.
    pub formula: i64,
    /// Signature of `I(α,β) = ν(α ∪ β)` on a real basis of `H^g`.
    pub congruence: i64,
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl HodgeSignature {
    pub fn agree(&self) -> bool {
        self.formula == self.congruence
    }
}

pub fn hodge_signature_formula(alg: &BigradedAlgebra) -> i64 {
    let g = alg.g();
    let mut s = 0i64;
    for p in 0..=g {
        for q in (0..=g).filter(|q| (p + q) % 2 == 0) {
            let sign = if p % 2 == 0 { 1 } else { -1 };
            s += sign * alg.hodge_number(p, q) as i64;
        }
    }
    s
}

/// Gram matrix of `ν(α ∪ β)` on a real basis of the middle degree.
pub fn middle_intersection_gram(alg: &BigradedAlgebra) -> Matrix {
    let real: Vec<Vector> = alg.real_basis(&alg.degree_indices(alg.g()));
    let n = real.len();
    Matrix::from_fn(n, n, |i, j| alg.pairing(&real[i], &real[j]))
}

pub fn hodge_signature(alg: &BigradedAlgebra) -> Result<HodgeSignature> {
    if alg.g() % 2 != 0 {
        return Err(Error::Precondition(
            "the signature is defined for even g".into(),
        ));
    }
    let Inertia { plus, minus, zero } = symmetric_signature(&middle_intersection_gram(alg))?;
    Ok(HodgeSignature {
        formula: hodge_signature_formula(alg),
        congruence: plus as i64 - minus as i64,
        plus,
        minus,
        zero,
    })
}

/// Descending chain `F^0 ⊇ F^1 ⊇ … ⊇ F^{n+1} = 0` on degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeFiltration {
    pub degree: usize,
    pub steps: Vec<Subspace>,
}

impl HodgeFiltration {
    /// `F^i`, zero beyond the last step.
    pub fn step(&self, i: usize) -> Subspace {
        self.steps
            .get(i)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.steps[0].ambient()))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(Subspace::dim).collect()
    }

    /// `F^i ∩ conj(F^{n−i+1}) = 0` and `F^i + conj(F^{n−i+1}) = H^n` for all `i`.
    pub fn opposedness(&self, alg: &BigradedAlgebra) -> Report {
        let n = self.degree;
        let whole = self.step(0);
        (0..=n + 1)
            .map(|i| {
                let a = self.step(i);
                let b = conj_subspace(alg, &self.step(n + 1 - i));
                let failure = if !a.intersection(&b).is_zero() {
                    Some(format!("F^{i} meets conj F^{}", n + 1 - i))
                } else if a.sum(&b) != whole {
                    Some(format!("F^{i} + conj F^{} is not H^{n}", n + 1 - i))
                } else {
                    None
                };
                Check::from_failure(format!("opposed_n{n}_i{i}"), failure)
            })
            .collect()
    }
}

pub fn conj_subspace(alg: &BigradedAlgebra, s: &Subspace) -> Subspace {
    let vs: Vec<Vector> = s.basis().iter().map(|v| alg.conj(v)).collect();
    Subspace::span(alg.dim(), &vs)
}

/// `F^i = ⊕_{p ≥ i} H^{p,n−p}`.
pub fn hodge_filtration(alg: &BigradedAlgebra, n: usize) -> HodgeFiltration {
    let steps = (0..=n + 1)
        .map(|i| {
            let idx: Vec<usize> = alg
                .degree_indices(n)
                .into_iter()
                .filter(|&j| alg.basis()[j].p >= i)
                .collect();
            Subspace::coordinate(alg.dim(), &idx)
        })
        .collect();
    HodgeFiltration { degree: n, steps }
}

/// Full rank of `H^{p,q} × H^{g−p,g−q} → ℂ`, `(a,b) ↦ ν(a ∪ b)`, for every `(p,q)`.
pub fn serre_pairing_check(alg: &BigradedAlgebra) -> Report {
    let g = alg.g();
    let mut report = Report::new();
    for p in 0..=g {
        for q in 0..=g {
            let left = alg.bidegree_indices(p, q);
            let right = alg.bidegree_indices(g - p, g - q);
            let m = Matrix::from_fn(left.len(), right.len(), |i, j| {
                alg.pairing(&alg.basis_vector(left[i]), &alg.basis_vector(right[j]))
            });
            let rank = m.rank();
            let failure = (rank != left.len() || rank != right.len()).then(|| {
                format!(
                    "pairing H^{{{p},{q}}} x H^{{{},{}}} has rank {rank} (dims {}, {})",
                    g - p,
                    g - q,
                    left.len(),
                    right.len()
                )
            });
            report.push(Check::from_failure(format!("serre_{p}_{q}"), failure));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn signatures() {
        let k3 = hodge_signature(&catalog::k3_mock()).unwrap();
        assert_eq!((k3.formula, k3.congruence, k3.plus, k3.minus), (-16, -16, 3, 19));
        let ab = hodge_signature(&catalog::abelian_surface()).unwrap();
        assert_eq!((ab.formula, ab.congruence), (0, 0));
        for m in 1..=6 {
            let s = hodge_signature(&catalog::g2_family(m).unwrap()).unwrap();
            assert!(s.agree());
            assert_eq!(s.formula, 2 - m as i64);
        }
        assert!(hodge_signature(&catalog::torus()).is_err());
    }

    #[test]
    fn point_model_formula_disagrees_with_congruence() {
        // No middle-degree classes: the formula counts H^{0,0} and H^{2,2}.
        let s = hodge_signature(&catalog::point_model()).unwrap();
        assert_eq!((s.formula, s.congruence), (2, 0));
        assert!(!s.agree());
    }

    #[test]
    fn filtration_examples() {
        let t = catalog::torus();
        let f = hodge_filtration(&t, 1);
        assert_eq!(f.dims(), vec![2, 1, 0]);
        assert_eq!(f.step(1), Subspace::coordinate(4, &[t.index_of("a").unwrap()]));
        assert!(f.opposedness(&t).passed());
        let ab = catalog::abelian_surface();
        for n in 0..=4 {
            let f = hodge_filtration(&ab, n);
            assert_eq!(f.step(0).dim(), ab.betti(n));
            assert!(f.step(n + 1).is_zero());
            assert!(f.opposedness(&ab).passed());
        }
    }

    #[test]
    fn serre_examples() {
        assert!(serre_pairing_check(&catalog::torus()).passed());
        let k3 = serre_pairing_check(&catalog::k3_mock());
        assert!(k3.passed());
        let bad = serre_pairing_check(&catalog::degenerate_torus());
        assert!(!bad.get("serre_1_0").unwrap().passed);
    }
}
