use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use super::BigradedAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{
    add_vectors, kernel, solve, sub_vectors, zero_vector, Matrix, Scalar, Subspace, Vector,
};
use crate::report::{Check, Report};

/// Which powers `L^k : H^{g−k} → H^{g+k}` must be bijective.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeMode {
    Full,
    /// `k ≡ g (mod 2)`: the even-degree half.
    Even,
    /// `k ≢ g (mod 2)`: the odd-degree half.
    Odd,
}

impl ConeMode {
    pub fn requires(self, g: usize, k: usize) -> bool {
        match self {
            ConeMode::Full => true,
            ConeMode::Even => k % 2 == g % 2,
            ConeMode::Odd => k % 2 != g % 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConeMode::Full => "full",
            ConeMode::Even => "even",
            ConeMode::Odd => "odd",
        }
    }
}

impl FromStr for ConeMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(ConeMode::Full),
            "even" => Ok(ConeMode::Even),
            "odd" => Ok(ConeMode::Odd),
            _ => Err(Error::InvalidParameter(format!(
                "cone mode `{s}` (expected full, even or odd)"
            ))),
        }
    }
}

/// The endomorphism `x ↦ x ∪ ω`.
pub fn lefschetz_operator(alg: &BigradedAlgebra, omega: &[Scalar]) -> Matrix {
    alg.right_mult(omega)
}

/// `L^k` as a map from degree `from` to degree `from + 2k`.
fn block(alg: &BigradedAlgebra, lk: &Matrix, k: usize, from: usize) -> Matrix {
    lk.submatrix(&alg.degree_indices(from + 2 * k), &alg.degree_indices(from))
}

fn degree_two(alg: &BigradedAlgebra, omega: &[Scalar]) -> bool {
    omega.len() == alg.dim() && alg.lies_in_degree(omega, 2)
}

/// Rank test for every required `L^k : H^{g−k} → H^{g+k}`.
pub fn kahler_cone_membership(alg: &BigradedAlgebra, omega: &[Scalar], mode: ConeMode) -> bool {
    if !degree_two(alg, omega) {
        return false;
    }
    let g = alg.g();
    let l = lefschetz_operator(alg, omega);
    let mut lk = Matrix::identity(alg.dim());
    for k in 0..=g {
        if k > 0 {
            lk = lk.mul(&l);
        }
        if !mode.requires(g, k) {
            continue;
        }
        let src = alg.betti(g - k);
        if src != alg.betti(g + k) {
            return false;
        }
        if src > 0 && block(alg, &lk, k, g - k).rank() != src {
            return false;
        }
    }
    true
}

/// `ker L^{g−r+1}` on degree `r`; zero for `r > g`.
pub fn primitive_subspace(alg: &BigradedAlgebra, omega: &[Scalar], r: usize) -> Subspace {
    let n = alg.dim();
    let g = alg.g();
    if r > g {
        return Subspace::zero(n);
    }
    let idx = alg.degree_indices(r);
    let lk = lefschetz_operator(alg, omega).pow(g - r + 1);
    let restricted = lk.submatrix(&(0..n).collect::<Vec<_>>(), &idx);
    let k = kernel(&restricted);
    let lifted: Vec<Vector> = k
        .basis()
        .iter()
        .map(|c| {
            let mut v = zero_vector(n);
            for (pos, &i) in idx.iter().enumerate() {
                v[i] = c[pos].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &lifted)
}

/// `(L, Λ, B)` on the total space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Triple {
    pub l: Matrix,
    pub lambda: Matrix,
    pub b: Matrix,
}

impl SL2Triple {
    /// `[Λ,L] = B`, `[B,L] = −2L`, `[B,Λ] = 2Λ` as exact identities.
    pub fn relations(&self) -> Report {
        let two = Scalar::from(2);
        [
            Check::from_failure(
                "lambda_l_is_b",
                (self.lambda.commutator(&self.l) != self.b).then(|| "[Λ,L] ≠ B".to_string()),
            ),
            Check::from_failure(
                "b_l_is_minus_2l",
                (self.b.commutator(&self.l) != self.l.scale(&-&two))
                    .then(|| "[B,L] ≠ −2L".to_string()),
            ),
            Check::from_failure(
                "b_lambda_is_2lambda",
                (self.b.commutator(&self.lambda) != self.lambda.scale(&two))
                    .then(|| "[B,Λ] ≠ 2Λ".to_string()),
            ),
        ]
        .into_iter()
        .collect()
    }

    pub fn holds(&self) -> bool {
        self.relations().passed()
    }
}

/// Multiplication by `g − r` on degree `r`.
pub fn counting_operator(alg: &BigradedAlgebra) -> Matrix {
    let g = alg.g() as i64;
    let d: Vec<Scalar> = (0..alg.dim())
        .map(|i| Scalar::from(g - alg.degree(i) as i64))
        .collect();
    Matrix::diagonal(&d)
}

/// Lefschetz data for a fixed class `ω` in the full Kähler cone.
///
/// Caches the powers of `L` and the primitive subspaces.
#[derive(Clone, Debug)]
pub struct Lefschetz<'a> {
    alg: &'a BigradedAlgebra,
    omega: Vector,
    powers: Vec<Matrix>,
    primitives: Vec<Subspace>,
}

impl<'a> Lefschetz<'a> {
    pub fn new(alg: &'a BigradedAlgebra, omega: &[Scalar]) -> Result<Self> {
        if !degree_two(alg, omega) {
            return Err(Error::InvalidClass(
                "ω must be a degree-2 element of the algebra".into(),
            ));
        }
        if !kahler_cone_membership(alg, omega, ConeMode::Full) {
            return Err(Error::NotInCone(
                "some L^k : H^{g-k} → H^{g+k} is not bijective".into(),
            ));
        }
        let g = alg.g();
        let l = lefschetz_operator(alg, omega);
        let mut powers = vec![Matrix::identity(alg.dim())];
        for k in 1..=2 * g + 1 {
            let next = powers[k - 1].mul(&l);
            powers.push(next);
        }
        let primitives = (0..=2 * g)
            .map(|r| primitive_subspace(alg, omega, r))
            .collect();
        Ok(Lefschetz {
            alg,
            omega: omega.to_vec(),
            powers,
            primitives,
        })
    }

    pub fn algebra(&self) -> &'a BigradedAlgebra {
        self.alg
    }

    pub fn omega(&self) -> &[Scalar] {
        &self.omega
    }

    pub fn operator(&self) -> &Matrix {
        &self.powers[1]
    }

    /// `L^k`; zero for `k > 2g`.
    pub fn power(&self, k: usize) -> Matrix {
        self.powers
            .get(k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.alg.dim(), self.alg.dim()))
    }

    pub fn apply_power(&self, k: usize, x: &[Scalar]) -> Vector {
        match self.powers.get(k) {
            Some(m) => m.apply(x),
            None => zero_vector(self.alg.dim()),
        }
    }

    /// Real and of bidegree (1,1): the hypothesis for polarizations.
    pub fn is_kahler_type(&self) -> bool {
        self.alg.is_real(&self.omega) && self.alg.lies_in_bidegree(&self.omega, 1, 1)
    }

    pub fn primitive(&self, r: usize) -> &Subspace {
        &self.primitives[r]
    }

    /// `L^{g−r} : H^r → H^{2g−r}` is bijective for each `r < g`, and `ω^g ≠ 0`.
    pub fn hard_lefschetz(&self) -> Report {
        let g = self.alg.g();
        let mut report = Report::new();
        for r in 0..g {
            let m = block(self.alg, &self.powers[g - r], g - r, r);
            let ok = self.alg.betti(r) == self.alg.betti(2 * g - r) && m.rank() == self.alg.betti(r);
            report.push(Check::from_failure(
                format!("hard_lefschetz_r{r}"),
                (!ok).then(|| format!("L^{} is not bijective on degree {r}", g - r)),
            ));
        }
        let top = self.apply_power(g, &self.alg.unit().unwrap_or_default());
        report.push(Check::from_failure(
            "omega_g_nonzero",
            top.iter().all(Zero::is_zero).then(|| "ω^g = 0".to_string()),
        ));
        report
    }

    /// `x = Σ_s L^s x_s` with `x_s` primitive of degree `r − 2s`, by downward
    /// induction on `s`. Zero components are omitted; order is increasing `s`.
    pub fn decompose(&self, x: &[Scalar]) -> Result<Vec<(usize, Vector)>> {
        let Some(r) = self.alg.homogeneous_degree(x) else {
            if x.iter().all(Zero::is_zero) {
                return Ok(Vec::new());
            }
            return Err(Error::MixedDegree(
                "primitive decomposition needs a homogeneous element".into(),
            ));
        };
        let g = self.alg.g();
        let s_min = r.saturating_sub(g);
        let s_max = r / 2;
        let mut residual = x.to_vec();
        let mut parts = Vec::new();
        for s in (s_min..=s_max).rev() {
            let d = r - 2 * s;
            let j = g + s - r;
            // L^j kills every lower level; what survives is L^{g−d} x_s.
            let target = self.apply_power(j, &residual);
            let src = self.alg.degree_indices(d);
            let dst = self.alg.degree_indices(2 * g - d);
            let m = self.powers[g - d].submatrix(&dst, &src);
            let rhs: Vector = dst.iter().map(|&i| target[i].clone()).collect();
            let sol = solve(&m, &rhs)?.ok_or_else(|| {
                Error::Internal("hard Lefschetz block is not invertible".into())
            })?;
            let mut xs = zero_vector(self.alg.dim());
            for (pos, &i) in src.iter().enumerate() {
                xs[i] = sol[pos].clone();
            }
            if xs.iter().all(Zero::is_zero) {
                continue;
            }
            residual = sub_vectors(&residual, &self.apply_power(s, &xs));
            parts.push((s, xs));
        }
        if residual.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal("decomposition left a residual".into()));
        }
        parts.reverse();
        Ok(parts)
    }

    pub fn reassemble(&self, parts: &[(usize, Vector)]) -> Vector {
        parts.iter().fold(zero_vector(self.alg.dim()), |acc, (s, xs)| {
            add_vectors(&acc, &self.apply_power(*s, xs))
        })
    }

    /// Basis of the total space adapted to the decomposition: `L^s ξ` for each
    /// primitive basis vector `ξ` of degree `d ≤ g` and `0 ≤ s ≤ g − d`.
    fn adapted_basis(&self) -> Vec<(usize, usize, Vector)> {
        let g = self.alg.g();
        let mut out = Vec::new();
        for d in 0..=g {
            let m = g - d;
            for xi in self.primitives[d].basis() {
                for s in 0..=m {
                    out.push((m, s, self.apply_power(s, xi)));
                }
            }
        }
        out
    }

    /// Constructive `Λ`: `Λ(L^s ξ) = s(m − s + 1) L^{s−1} ξ` with `m = g − deg ξ`.
    pub fn lambda(&self) -> Result<Matrix> {
        let n = self.alg.dim();
        let adapted = self.adapted_basis();
        if adapted.len() != n {
            return Err(Error::Internal(format!(
                "Lefschetz decomposition has {} vectors, expected {n}",
                adapted.len()
            )));
        }
        let mut images = Vec::with_capacity(n);
        let mut lower: Option<&Vector> = None;
        for (m, s, v) in &adapted {
            if *s == 0 {
                images.push(zero_vector(n));
            } else {
                let c = Scalar::from((*s * (*m + 1 - *s)) as i64);
                images.push(lower.expect("s > 0 follows s − 1").iter().map(|x| x * &c).collect());
            }
            lower = Some(v);
        }
        let cols: Vec<Vector> = adapted.into_iter().map(|(_, _, v)| v).collect();
        let v = Matrix::from_columns(n, &cols);
        let w = Matrix::from_columns(n, &images);
        let vinv = v
            .inverse()
            .ok_or_else(|| Error::Internal("adapted basis is singular".into()))?;
        Ok(w.mul(&vinv))
    }

    /// The unique degree −2 solution of `[Λ, L] = B`, by a dense linear solve.
    ///
    /// Even and odd degrees decouple and are solved separately.
    pub fn lambda_by_solve(&self) -> Result<Matrix> {
        let n = self.alg.dim();
        let g = self.alg.g();
        let l = self.operator();
        let b = counting_operator(self.alg);
        let mut out = Matrix::zeros(n, n);
        let parts: Vec<Result<Vec<(usize, usize, Scalar)>>> = (0..2usize)
            .into_par_iter()
            .map(|parity| {
                let degrees: Vec<usize> = (0..=2 * g).filter(|r| r % 2 == parity).collect();
                // Unknowns Λ[i][j] with deg j = deg i + 2.
                let mut unknowns = Vec::new();
                for &r in &degrees {
                    for i in self.alg.degree_indices(r) {
                        for j in self.alg.degree_indices(r + 2) {
                            unknowns.push((i, j));
                        }
                    }
                }
                let col_of: std::collections::HashMap<(usize, usize), usize> =
                    unknowns.iter().enumerate().map(|(k, &u)| (u, k)).collect();
                let mut rows = Vec::new();
                let mut rhs = Vec::new();
                for &r in &degrees {
                    let idx = self.alg.degree_indices(r);
                    for &a in &idx {
                        for &c in &idx {
                            let mut row = zero_vector(unknowns.len());
                            // (ΛL)[a][c] = Σ_k Λ[a][k] L[k][c]
                            for k in self.alg.degree_indices(r + 2) {
                                if let Some(&col) = col_of.get(&(a, k)) {
                                    row[col] += l.get(k, c);
                                }
                            }
                            // −(LΛ)[a][c] = −Σ_k L[a][k] Λ[k][c]
                            if r >= 2 {
                                for k in self.alg.degree_indices(r - 2) {
                                    if let Some(&col) = col_of.get(&(k, c)) {
                                        row[col] -= l.get(a, k);
                                    }
                                }
                            }
                            rows.push(row);
                            rhs.push(b.get(a, c).clone());
                        }
                    }
                }
                if unknowns.is_empty() {
                    return if rhs.iter().all(Zero::is_zero) {
                        Ok(Vec::new())
                    } else {
                        Err(Error::Internal("[Λ,L] = B has no solution".into()))
                    };
                }
                let m = Matrix::from_rows(rows)?;
                if m.rank() != unknowns.len() {
                    return Err(Error::Internal("[Λ,L] = B has no unique solution".into()));
                }
                let sol = solve(&m, &rhs)?
                    .ok_or_else(|| Error::Internal("[Λ,L] = B has no solution".into()))?;
                Ok(unknowns
                    .into_iter()
                    .zip(sol)
                    .map(|((i, j), x)| (i, j, x))
                    .collect())
            })
            .collect();
        for part in parts {
            for (i, j, x) in part? {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    pub fn triple(&self) -> Result<SL2Triple> {
        Ok(SL2Triple {
            l: self.operator().clone(),
            lambda: self.lambda()?,
            b: counting_operator(self.alg),
        })
    }
}

/// The sl2 triple of a class in the full cone.
pub fn dual_lefschetz(alg: &BigradedAlgebra, omega: &[Scalar]) -> Result<SL2Triple> {
    Lefschetz::new(alg, omega)?.triple()
}

pub fn primitive_decompose(
    alg: &BigradedAlgebra,
    omega: &[Scalar],
    x: &[Scalar],
) -> Result<Vec<(usize, Vector)>> {
    Lefschetz::new(alg, omega)?.decompose(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn one() -> Scalar {
        Scalar::from(1)
    }

    #[test]
    fn operator_examples() {
        let t = catalog::torus();
        let w = t.element(&[("w", one())]);
        let zero = zero_vector(4);
        assert!(lefschetz_operator(&t, &zero).is_zero());
        let l = lefschetz_operator(&t, &w);
        assert_eq!(l.apply(&t.element(&[("1", one())])), w);
        assert!(l.apply(&w).iter().all(Zero::is_zero));

        let k3 = catalog::k3_mock();
        let om = k3.kahler_classes()[0].clone();
        let l = lefschetz_operator(&k3, &om);
        assert_eq!(l.apply(&k3.unit().unwrap()), om);
        let h2 = k3.degree_indices(2);
        let h4 = k3.degree_indices(4);
        assert_eq!(l.submatrix(&h4, &h2).rank(), 1);
    }

    #[test]
    fn operator_commutes_with_conjugation() {
        let k3 = catalog::k3_mock();
        let om = k3.kahler_classes()[2].clone();
        let l = lefschetz_operator(&k3, &om);
        for i in 0..k3.dim() {
            let e = k3.basis_vector(i);
            assert_eq!(k3.conj(&l.apply(&e)), l.apply(&k3.conj(&e)));
        }
    }

    #[test]
    fn cone_examples() {
        let t = catalog::torus();
        assert!(!kahler_cone_membership(&t, &zero_vector(4), ConeMode::Full));
        assert!(kahler_cone_membership(&t, &t.element(&[("w", one())]), ConeMode::Full));
        // ω = e0 + e1 is isotropic in the g = 2 family.
        let m = catalog::g2_family(3).unwrap();
        let iso = m.element(&[("e0", one()), ("e1", one())]);
        assert!(!kahler_cone_membership(&m, &iso, ConeMode::Even));
        assert!(kahler_cone_membership(&m, &m.kahler_classes()[0], ConeMode::Even));
        // Degree-1 input is never a class.
        assert!(!kahler_cone_membership(&t, &t.element(&[("a", one())]), ConeMode::Full));
    }

    #[test]
    fn primitive_examples() {
        let t = catalog::torus();
        let w = t.element(&[("w", one())]);
        assert_eq!(primitive_subspace(&t, &w, 0).dim(), 1);
        assert_eq!(primitive_subspace(&t, &w, 2).dim(), 0);
        let k3 = catalog::k3_mock();
        let om = k3.kahler_classes()[0].clone();
        assert_eq!(primitive_subspace(&k3, &om, 2).dim(), 21);
        assert!(primitive_subspace(&k3, &om, 3).is_zero());
    }

    #[test]
    fn decomposition_examples() {
        let k3 = catalog::k3_mock();
        let om = k3.kahler_classes()[0].clone(); // e + f
        let lf = Lefschetz::new(&k3, &om).unwrap();
        let unit = k3.unit().unwrap();
        assert_eq!(lf.decompose(&om).unwrap(), vec![(1, unit.clone())]);
        // e − f is orthogonal to e + f, hence primitive.
        let e = k3.element(&[("e", one()), ("f", -one())]);
        assert_eq!(lf.decompose(&e).unwrap(), vec![(0, e.clone())]);
        let x = add_vectors(&om, &e);
        assert_eq!(lf.decompose(&x).unwrap(), vec![(0, e), (1, unit)]);
        let mixed = add_vectors(&om, &k3.unit().unwrap());
        assert!(matches!(lf.decompose(&mixed), Err(Error::MixedDegree(_))));
    }

    #[test]
    fn lambda_on_g2_matches_explicit_values() {
        for alg in [catalog::k3_mock(), catalog::g2_family(4).unwrap(), catalog::abelian_surface()] {
            for om in alg.kahler_classes() {
                let lf = Lefschetz::new(&alg, om).unwrap();
                let t = lf.triple().unwrap();
                let unit = alg.unit().unwrap();
                let two = Scalar::from(2);
                assert_eq!(t.lambda.apply(om), unit.iter().map(|c| c * &two).collect::<Vec<_>>());
                let om2 = alg.mul(om, om);
                assert_eq!(t.lambda.apply(&om2), om.iter().map(|c| c * &two).collect::<Vec<_>>());
                assert!(t.lambda.apply(&unit).iter().all(Zero::is_zero));
                assert!(t.holds());
            }
        }
    }

    #[test]
    fn constructive_lambda_equals_solved_lambda() {
        for alg in [catalog::torus(), catalog::abelian_surface(), catalog::k3_mock()] {
            let om = &alg.kahler_classes()[0];
            let lf = Lefschetz::new(&alg, om).unwrap();
            assert_eq!(lf.lambda().unwrap(), lf.lambda_by_solve().unwrap());
        }
    }

    #[test]
    fn not_in_cone_is_rejected() {
        let m = catalog::point_model();
        assert!(matches!(
            dual_lefschetz(&m, &zero_vector(m.dim())),
            Err(Error::NotInCone(_))
        ));
    }

    #[test]
    fn counting_operator_on_torus() {
        let t = catalog::torus();
        let b = counting_operator(&t);
        let d: Vec<Scalar> = [1, 0, 0, -1].iter().map(|&x| Scalar::from(x)).collect();
        assert_eq!(b, Matrix::diagonal(&d));
    }
}
