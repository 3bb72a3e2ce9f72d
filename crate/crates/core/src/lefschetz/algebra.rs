use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{conj_vector, solve, unit_vector, zero_vector, Matrix, Scalar, Vector};

/// A basis element of bidegree `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub name: String,
    pub p: usize,
    pub q: usize,
}

impl BasisElement {
    pub fn new(name: impl Into<String>, p: usize, q: usize) -> Self {
        BasisElement {
            name: name.into(),
            p,
            q,
        }
    }

    pub fn degree(&self) -> usize {
        self.p + self.q
    }
}

/// Sparse product value: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type Terms = Vec<(usize, Scalar)>;

/// Finite-dimensional bigraded algebra with conjugation and an integration functional.
///
/// `conjugation` is the matrix `C` with `conj(x) = C · x̄`. Structural checks on
/// the axioms live in [`validate_algebra`](super::validate_algebra); construction
/// only enforces shapes and index ranges.
#[derive(Clone, Debug)]
pub struct BigradedAlgebra {
    g: usize,
    basis: Vec<BasisElement>,
    products: BTreeMap<(usize, usize), Terms>,
    conjugation: Matrix,
    nu: Vector,
    kahler_classes: Vec<Vector>,
}

fn sparse(v: &[Scalar]) -> Terms {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl BigradedAlgebra {
    pub fn new(
        g: usize,
        basis: Vec<BasisElement>,
        products: impl IntoIterator<Item = ((usize, usize), Vector)>,
        conjugation: Matrix,
        nu: Vector,
    ) -> Result<Self> {
        let n = basis.len();
        let mut names = BTreeSet::new();
        for b in &basis {
            if b.p > g || b.q > g {
                return Err(Error::InvalidAlgebra(format!(
                    "basis element `{}` has bidegree ({},{}) outside 0..={g}",
                    b.name, b.p, b.q
                )));
            }
            if !names.insert(b.name.as_str()) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate basis name `{}`",
                    b.name
                )));
            }
        }
        if conjugation.rows() != n || conjugation.cols() != n {
            return Err(Error::InvalidAlgebra(format!(
                "conjugation must be {n}x{n}"
            )));
        }
        if nu.len() != n {
            return Err(Error::InvalidAlgebra(format!("nu must have length {n}")));
        }
        let mut table = BTreeMap::new();
        for ((i, j), v) in products {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::InvalidAlgebra(format!(
                    "product entry ({i},{j}) out of range"
                )));
            }
            let t = sparse(&v);
            if !t.is_empty() {
                table.insert((i, j), t);
            }
        }
        Ok(BigradedAlgebra {
            g,
            basis,
            products: table,
            conjugation,
            nu,
            kahler_classes: Vec::new(),
        })
    }

    pub fn with_kahler_classes(mut self, classes: Vec<Vector>) -> Result<Self> {
        if classes.iter().any(|c| c.len() != self.dim()) {
            return Err(Error::InvalidAlgebra(
                "Kähler class has wrong length".into(),
            ));
        }
        self.kahler_classes = classes;
        Ok(self)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn products(&self) -> &BTreeMap<(usize, usize), Terms> {
        &self.products
    }

    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.products.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    pub fn conjugation(&self) -> &Matrix {
        &self.conjugation
    }

    pub fn nu_vector(&self) -> &[Scalar] {
        &self.nu
    }

    pub fn kahler_classes(&self) -> &[Vector] {
        &self.kahler_classes
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].degree()
    }

    pub fn degree_indices(&self, r: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == r).collect()
    }

    pub fn bidegree_indices(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].p == p && self.basis[i].q == q)
            .collect()
    }

    pub fn hodge_number(&self, p: usize, q: usize) -> usize {
        self.basis.iter().filter(|b| b.p == p && b.q == q).count()
    }

    pub fn betti(&self, r: usize) -> usize {
        self.basis.iter().filter(|b| b.degree() == r).count()
    }

    pub fn max_degree(&self) -> usize {
        2 * self.g
    }

    pub fn element(&self, terms: &[(&str, Scalar)]) -> Vector {
        let mut v = zero_vector(self.dim());
        for (name, c) in terms {
            let i = self
                .index_of(name)
                .unwrap_or_else(|| panic!("no basis element `{name}`"));
            v[i] += c;
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let terms = self.product_terms(i, j);
                if terms.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in terms {
                    out[*k] += &c * t;
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ x ∪ w`.
    pub fn right_mult(&self, w: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.basis_vector(j), w)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of `x ↦ w ∪ x`.
    pub fn left_mult(&self, w: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(w, &self.basis_vector(j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn conj(&self, x: &[Scalar]) -> Vector {
        self.conjugation.apply(&conj_vector(x))
    }

    pub fn is_real(&self, x: &[Scalar]) -> bool {
        self.conj(x) == x
    }

    pub fn nu(&self, x: &[Scalar]) -> Scalar {
        self.nu.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `ν(x ∪ y)`.
    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.nu(&self.mul(x, y))
    }

    /// Total degree of a nonzero homogeneous element; `None` for zero or mixed input.
    pub fn homogeneous_degree(&self, x: &[Scalar]) -> Option<usize> {
        let mut degs = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| self.degree(i));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Whether every nonzero coefficient of `x` sits in total degree `r`.
    pub fn lies_in_degree(&self, x: &[Scalar], r: usize) -> bool {
        x.iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || self.degree(i) == r)
    }

    pub fn lies_in_bidegree(&self, x: &[Scalar], p: usize, q: usize) -> bool {
        x.iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (self.basis[i].p == p && self.basis[i].q == q))
    }

    /// The two-sided unit, found by solving `u ∪ e_j = e_j` for all `j`.
    pub fn unit(&self) -> Option<Vector> {
        let n = self.dim();
        // Row (j, k) of the system: Σ_i u_i (e_i e_j)_k = δ_jk.
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for j in 0..n {
            let mut block = vec![zero_vector(n); n];
            for i in 0..n {
                for (k, c) in self.product_terms(i, j) {
                    block[*k][i] = c.clone();
                }
            }
            for (k, row) in block.into_iter().enumerate() {
                rows.push(row);
                rhs.push(if j == k { Scalar::from(1) } else { Scalar::zero() });
            }
        }
        if n == 0 {
            return None;
        }
        let a = Matrix::from_rows(rows).ok()?;
        let u = solve(&a, &rhs).ok()??;
        // The solve gives a left unit; require it to be two-sided.
        (0..n)
            .all(|j| self.mul(&self.basis_vector(j), &u) == self.basis_vector(j))
            .then_some(u)
    }

    /// The subalgebra spanned by even-degree basis elements.
    pub fn even_subalgebra(&self) -> BigradedAlgebra {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| self.degree(i) % 2 == 0).collect();
        self.restrict(&keep)
    }

    /// Restriction to a set of basis indices closed under the product and conjugation.
    fn restrict(&self, keep: &[usize]) -> BigradedAlgebra {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let proj = |v: &[Scalar]| -> Vector { keep.iter().map(|&i| v[i].clone()).collect() };
        let mut products = BTreeMap::new();
        for (&(i, j), t) in &self.products {
            if let (Some(&a), Some(&b)) = (pos.get(&i), pos.get(&j)) {
                let terms: Terms = t
                    .iter()
                    .filter_map(|(k, c)| pos.get(k).map(|&kk| (kk, c.clone())))
                    .collect();
                if !terms.is_empty() {
                    products.insert((a, b), terms);
                }
            }
        }
        BigradedAlgebra {
            g: self.g,
            basis: keep.iter().map(|&i| self.basis[i].clone()).collect(),
            products,
            conjugation: self.conjugation.submatrix(keep, keep),
            nu: proj(&self.nu),
            kahler_classes: self.kahler_classes.iter().map(|c| proj(c)).collect(),
        }
    }

    /// Embeds a vector of the even subalgebra back into the full space.
    pub fn even_projection(&self, x: &[Scalar]) -> Vector {
        (0..self.dim())
            .filter(|&i| self.degree(i) % 2 == 0)
            .map(|i| x[i].clone())
            .collect()
    }

    /// Real vectors spanning the given indices: `v + conj v` and `i(v − conj v)`,
    /// reduced to a linearly independent subset.
    pub fn real_basis(&self, indices: &[usize]) -> Vec<Vector> {
        let mut span = crate::exactlin::Subspace::zero(self.dim());
        let mut out = Vec::new();
        for &i in indices {
            let v = self.basis_vector(i);
            let c = self.conj(&v);
            let plus: Vector = v.iter().zip(&c).map(|(a, b)| a + b).collect();
            let minus: Vector = v
                .iter()
                .zip(&c)
                .map(|(a, b)| &Scalar::i() * &(a - b))
                .collect();
            for cand in [plus, minus] {
                if span.insert(&cand) {
                    out.push(cand);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn torus_products_and_unit() {
        let t = catalog::torus();
        let a = t.element(&[("a", Scalar::from(1))]);
        let b = t.element(&[("b", Scalar::from(1))]);
        let w = t.element(&[("w", Scalar::from(1))]);
        assert_eq!(t.mul(&a, &b), t.element(&[("w", -Scalar::i())]));
        assert_eq!(t.mul(&b, &a), t.element(&[("w", Scalar::i())]));
        assert_eq!(t.unit().unwrap(), t.element(&[("1", Scalar::from(1))]));
        assert_eq!(t.nu(&w), Scalar::from(1));
        assert_eq!(t.conj(&a), b);
        assert!(t.is_real(&w));
    }

    #[test]
    fn torus_real_generators_pair_to_one() {
        let t = catalog::torus();
        let x = t.element(&[("a", Scalar::frac(1, 2)), ("b", Scalar::frac(1, 2))]);
        let y = t.element(&[("a", -Scalar::i()), ("b", Scalar::i())]);
        assert!(t.is_real(&x) && t.is_real(&y));
        assert_eq!(t.pairing(&x, &y), Scalar::from(1));
    }

    #[test]
    fn even_subalgebra_drops_odd_degrees() {
        let ab = catalog::abelian_surface();
        let ev = ab.even_subalgebra();
        assert_eq!(ev.dim(), 1 + 6 + 1);
        assert!(ev.unit().is_some());
        assert_eq!(ev.betti(1), 0);
    }

    #[test]
    fn real_basis_has_full_rank() {
        let k3 = catalog::k3_mock();
        let idx = k3.degree_indices(2);
        let rb = k3.real_basis(&idx);
        assert_eq!(rb.len(), 22);
        assert!(rb.iter().all(|v| k3.is_real(v)));
    }

    #[test]
    fn rejects_out_of_range_bidegree() {
        let r = BigradedAlgebra::new(
            1,
            vec![BasisElement::new("x", 2, 0)],
            [],
            Matrix::identity(1),
            vec![Scalar::from(1)],
        );
        assert!(matches!(r, Err(Error::InvalidAlgebra(_))));
    }
}
