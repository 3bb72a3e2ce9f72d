use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::{BigradedAlgebra, Lefschetz};
use crate::error::{Error, Result};
use crate::exactlin::{hermitian_definiteness, Definiteness, Matrix, Scalar, Vector};
use crate::report::{Check, Report};

/// Multiplication by `i^{p−q}` on each `H^{p,q}`.
pub fn weil_operator(alg: &BigradedAlgebra) -> Matrix {
    let d: Vec<Scalar> = alg
        .basis()
        .iter()
        .map(|b| Scalar::i_pow(b.p as i64 - b.q as i64))
        .collect();
    Matrix::diagonal(&d)
}

fn common_degree(alg: &BigradedAlgebra, a: &[Scalar], b: &[Scalar]) -> Result<Option<usize>> {
    let zero = |x: &[Scalar]| x.iter().all(Zero::is_zero);
    if zero(a) || zero(b) {
        return Ok(None);
    }
    match (alg.homogeneous_degree(a), alg.homogeneous_degree(b)) {
        (Some(r), Some(s)) if r == s => Ok(Some(r)),
        _ => Err(Error::MixedDegree(
            "Q needs homogeneous arguments of equal degree".into(),
        )),
    }
}

impl Lefschetz<'_> {
    fn require_kahler_type(&self) -> Result<()> {
        if self.is_kahler_type() {
            Ok(())
        } else {
            Err(Error::Unsupported("a real class of bidegree (1,1)".into()))
        }
    }

    /// `Q` from precomputed decompositions of two degree-`r` elements.
    fn q_from_parts(&self, r: usize, a: &[(usize, Vector)], b: &[(usize, Vector)]) -> Scalar {
        let g = self.algebra().g();
        let bs: BTreeMap<usize, &Vector> = b.iter().map(|(s, v)| (*s, v)).collect();
        let base = (r * (r + 1) / 2) as i64;
        let mut total = Scalar::zero();
        for (s, a_s) in a {
            let Some(b_s) = bs.get(s) else { continue };
            let prod = self.algebra().mul(a_s, b_s);
            let k = g + 2 * s - r;
            let v = self.algebra().nu(&self.apply_power(k, &prod));
            total += &Scalar::sign(*s as i64 + base) * &v;
        }
        total
    }

    /// `Q(a,b) = Σ_s (−1)^{s + r(r+1)/2} ν(L^{g−r+2s}(a_s ∪ b_s))`.
    pub fn polarization_form(&self, a: &[Scalar], b: &[Scalar]) -> Result<Scalar> {
        self.require_kahler_type()?;
        let Some(r) = common_degree(self.algebra(), a, b)? else {
            return Ok(Scalar::zero());
        };
        Ok(self.q_from_parts(r, &self.decompose(a)?, &self.decompose(b)?))
    }

    /// `T(a,b) = Q(a, J b̄)`.
    pub fn hodge_inner_product(&self, a: &[Scalar], b: &[Scalar]) -> Result<Scalar> {
        let jb = weil_operator(self.algebra()).apply(&self.algebra().conj(b));
        self.polarization_form(a, &jb)
    }

    /// Gram matrix of `form(e_i, e_j)` over the degree-`r` basis.
    fn gram(&self, r: usize, twist: bool) -> Result<Matrix> {
        self.require_kahler_type()?;
        let alg = self.algebra();
        let idx = alg.degree_indices(r);
        let j = weil_operator(alg);
        let left: Vec<Vec<(usize, Vector)>> = idx
            .par_iter()
            .map(|&i| self.decompose(&alg.basis_vector(i)))
            .collect::<Result<_>>()?;
        let right: Vec<Vec<(usize, Vector)>> = idx
            .par_iter()
            .map(|&i| {
                let e = alg.basis_vector(i);
                let v = if twist { j.apply(&alg.conj(&e)) } else { e };
                self.decompose(&v)
            })
            .collect::<Result<_>>()?;
        let n = idx.len();
        let entries: Vec<Scalar> = (0..n * n)
            .into_par_iter()
            .map(|k| self.q_from_parts(r, &left[k / n], &right[k % n]))
            .collect();
        Matrix::from_data(n, n, entries)
    }

    pub fn polarization_gram(&self, r: usize) -> Result<Matrix> {
        self.gram(r, false)
    }

    /// Gram matrix of `T` on degree `r`.
    pub fn hodge_gram(&self, r: usize) -> Result<Matrix> {
        self.gram(r, true)
    }

    /// Gram matrix of `T` restricted to the primitive subspace of degree `r`.
    pub fn primitive_hodge_gram(&self, r: usize) -> Result<Matrix> {
        self.require_kahler_type()?;
        let alg = self.algebra();
        let j = weil_operator(alg);
        let basis = self.primitive(r).basis().to_vec();
        let n = basis.len();
        let entries: Vec<Scalar> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let b = j.apply(&alg.conj(&basis[k % n]));
                self.polarization_form(&basis[k / n], &b)
            })
            .collect::<Result<_>>()?;
        Matrix::from_data(n, n, entries)
    }

    /// Positive-definiteness of `T` on degree `r`, by leading minors.
    pub fn hodge_positive(&self, r: usize) -> Result<bool> {
        let g = self.hodge_gram(r)?;
        if g.rows() == 0 {
            return Ok(true);
        }
        Ok(hermitian_definiteness(&g)? == Definiteness::PositiveDefinite)
    }

    /// Per degree `r`: `Q(b,a) = (−1)^r Q(a,b)`, `Q(Ja,Jb) = Q(a,b)`, and `T`
    /// positive definite on the whole degree and on its primitive part.
    pub fn polarization_checks(&self) -> Result<Report> {
        let alg = self.algebra();
        let j = weil_operator(alg);
        let mut rep = Report::new();
        for r in 0..=alg.max_degree() {
            let idx = alg.degree_indices(r);
            let q = self.polarization_gram(r)?;
            let sign = Scalar::sign(r as i64);
            rep.push(Check::from_failure(
                format!("q_symmetry_r{r}"),
                (q.transpose() != q.scale(&sign)).then(|| format!("Q is not (−1)^{r}-symmetric")),
            ));
            let jr = j.submatrix(&idx, &idx);
            rep.push(Check::from_failure(
                format!("q_weil_invariant_r{r}"),
                (jr.transpose().mul(&q).mul(&jr) != q).then(|| "Q(Ja,Jb) ≠ Q(a,b)".to_string()),
            ));
            rep.push(Check::from_failure(
                format!("t_positive_r{r}"),
                (!self.hodge_positive(r)?).then(|| "T is not positive definite".to_string()),
            ));
            let pg = self.primitive_hodge_gram(r)?;
            let ok = pg.rows() == 0 || hermitian_definiteness(&pg)? == Definiteness::PositiveDefinite;
            rep.push(Check::from_failure(
                format!("t_positive_primitive_r{r}"),
                (!ok).then(|| "T is not positive definite on primitives".to_string()),
            ));
        }
        Ok(rep)
    }
}

pub fn polarization_form(
    alg: &BigradedAlgebra,
    omega: &[Scalar],
    a: &[Scalar],
    b: &[Scalar],
) -> Result<Scalar> {
    Lefschetz::new(alg, omega)?.polarization_form(a, b)
}

pub fn hodge_inner_product(
    alg: &BigradedAlgebra,
    omega: &[Scalar],
    a: &[Scalar],
    b: &[Scalar],
) -> Result<Scalar> {
    Lefschetz::new(alg, omega)?.hodge_inner_product(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::zero_vector;

    fn one() -> Scalar {
        Scalar::from(1)
    }

    #[test]
    fn weil_examples() {
        let ab = catalog::abelian_surface();
        let j = weil_operator(&ab);
        for (i, b) in ab.basis().iter().enumerate() {
            let expect = match (b.p, b.q) {
                (1, 1) | (0, 0) | (2, 2) => one(),
                (1, 0) | (2, 1) => Scalar::i(),
                (2, 0) | (0, 2) => -one(),
                _ => -Scalar::i(),
            };
            assert_eq!(j.get(i, i), &expect, "{}", b.name);
        }
    }

    #[test]
    fn weil_squares_to_sign_and_commutes_with_conj() {
        let ab = catalog::abelian_surface();
        let j = weil_operator(&ab);
        let j2 = j.mul(&j);
        for i in 0..ab.dim() {
            assert_eq!(j2.get(i, i), &Scalar::sign(ab.degree(i) as i64));
            let e = ab.basis_vector(i);
            assert_eq!(j.apply(&ab.conj(&e)), ab.conj(&j.apply(&e)));
        }
    }

    #[test]
    fn q_examples() {
        let ab = catalog::abelian_surface();
        let om = ab.kahler_classes()[0].clone();
        let lf = Lefschetz::new(&ab, &om).unwrap();
        let unit = ab.unit().unwrap();
        let om2 = ab.mul(&om, &om);
        assert_eq!(lf.polarization_form(&unit, &unit).unwrap(), ab.nu(&om2));

        let t = catalog::torus();
        let w = t.element(&[("w", one())]);
        let lf = Lefschetz::new(&t, &w).unwrap();
        let x = t.element(&[("a", Scalar::frac(1, 2)), ("b", Scalar::frac(1, 2))]);
        let y = t.element(&[("a", -Scalar::i()), ("b", Scalar::i())]);
        assert_eq!(lf.polarization_form(&x, &y).unwrap(), -one());
        assert_eq!(lf.polarization_form(&y, &x).unwrap(), one());
    }

    #[test]
    fn levels_pair_to_zero() {
        let k3 = catalog::k3_mock();
        let om = k3.kahler_classes()[1].clone();
        let lf = Lefschetz::new(&k3, &om).unwrap();
        let prim = lf.primitive(2).basis().to_vec();
        for p in &prim {
            assert!(lf.polarization_form(p, &om).unwrap().is_zero());
        }
    }

    #[test]
    fn t_examples() {
        let ab = catalog::abelian_surface();
        let lf = Lefschetz::new(&ab, &ab.kahler_classes()[3]).unwrap();
        for i in 0..ab.dim() {
            let e = ab.basis_vector(i);
            let t = lf.hodge_inner_product(&e, &e).unwrap();
            assert!(t.is_real() && t.real_sign() == Some(1), "{}", ab.basis()[i].name);
        }
        let a = ab.element(&[("a1", one())]);
        let b = ab.element(&[("b1", one())]);
        assert!(lf.hodge_inner_product(&a, &b).unwrap().is_zero());
        let z = zero_vector(ab.dim());
        assert!(lf.hodge_inner_product(&z, &z).unwrap().is_zero());
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        let t = catalog::torus();
        let lf = Lefschetz::new(&t, &t.kahler_classes()[0]).unwrap();
        let a = t.element(&[("a", one())]);
        let w = t.element(&[("w", one())]);
        assert!(matches!(lf.polarization_form(&a, &w), Err(Error::MixedDegree(_))));
    }

    #[test]
    fn polarization_checks_pass_on_catalog() {
        for a in [catalog::torus(), catalog::abelian_surface(), catalog::k3_mock()] {
            for om in a.kahler_classes() {
                let rep = Lefschetz::new(&a, om).unwrap().polarization_checks().unwrap();
                assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
                assert_eq!(rep.checks.len(), 4 * (a.max_degree() + 1));
            }
        }
    }
}
