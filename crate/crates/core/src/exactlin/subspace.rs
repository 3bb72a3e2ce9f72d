use num_traits::Zero;

use super::matrix::{axpy, is_zero_vector, rref, scale_vector, unit_vector, zero_vector, Matrix, Vector};
use super::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of Q(i)^n stored by its reduced row echelon basis.
///
/// The basis is canonical: two spans of the same subspace compare equal
/// regardless of the vectors or order used to build them.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<'a, I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vector>,
    {
        let rows: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector outside ambient space"))
            .filter(|v| !is_zero_vector(v))
            .cloned()
            .collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = rref(&Matrix::from_rows(rows).expect("rectangular"));
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of coordinate vectors `e_i` for the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| unit_vector(ambient, i)).collect();
        Subspace::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.ambient);
        for (c, row) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, row);
        }
        out
    }

    /// Adds `v` to the span, keeping the basis in reduced echelon form.
    /// Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        r = scale_vector(&inv, &r);
        for row in &mut self.basis {
            let c = row[p].clone();
            if !c.is_zero() {
                axpy(row, &-c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve a·A = b·B: kernel of the stacked [A; -B]^T.
        let k = self.dim();
        let cols: Vec<Vector> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()))
            .collect();
        let m = Matrix::from_columns(self.ambient, &cols);
        let ker = kernel(&m);
        let vs: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|c| self.combine(&c[..k]))
            .collect();
        Subspace::span(self.ambient, &vs)
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vs: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(m.rows(), &vs)
    }
}

/// Kernel of a matrix as a subspace of its domain.
pub fn kernel(a: &Matrix) -> Subspace {
    let (r, pivots) = rref(a);
    let n = a.cols();
    let mut vs = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    let free: Vec<usize> = (0..n)
        .filter(|c| {
            if pivot_iter.peek() == Some(&c) {
                pivot_iter.next();
                false
            } else {
                true
            }
        })
        .collect();
    for &f in &free {
        let mut v = zero_vector(n);
        v[f] = Scalar::from(1);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, f).clone();
        }
        vs.push(v);
    }
    Subspace::span(n, &vs)
}

/// Column space of a matrix as a subspace of its codomain.
pub fn image(a: &Matrix) -> Subspace {
    let cols: Vec<Vector> = (0..a.cols()).map(|j| a.column(j)).collect();
    Subspace::span(a.rows(), &cols)
}

pub fn kernel_image(a: &Matrix) -> (Subspace, Subspace) {
    (kernel(a), image(a))
}

/// Canonical complement of `im d_in` inside `ker d_out`.
///
/// The representatives have zero coordinates at every pivot of `im d_in`,
/// which pins down a unique complement.
pub fn quotient_cohomology(d_in: &Matrix, d_out: &Matrix) -> Result<Subspace> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch(format!(
            "d_in lands in dimension {}, d_out starts from {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NotAComplex);
    }
    let ker = kernel(d_out);
    let im = image(d_in);
    let reps: Vec<Vector> = ker.basis().iter().map(|v| im.reduce(v)).collect();
    Ok(Subspace::span(ker.ambient(), &reps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_image_examples() {
        let (k, i) = kernel_image(&Matrix::zeros(3, 3));
        assert_eq!((k.dim(), i.dim()), (3, 0));
        let (k, i) = kernel_image(&Matrix::identity(3));
        assert_eq!((k.dim(), i.dim()), (0, 3));
        let (k, i) = kernel_image(&m(&[&[1, 1], &[1, 1]]));
        assert_eq!((k.dim(), i.dim()), (1, 1));
        assert!(k.contains(&[Scalar::int(1), Scalar::int(-1)]));
    }

    #[test]
    fn quotient_cohomology_examples() {
        let z = Matrix::zeros(3, 3);
        assert_eq!(quotient_cohomology(&z, &z).unwrap().dim(), 3);

        // 0 -> Q -> Q -> 0 with identity: exact.
        let id = Matrix::identity(1);
        assert_eq!(
            quotient_cohomology(&id, &Matrix::zeros(0, 1)).unwrap().dim(),
            0
        );

        // Q^2 -> Q^2 of rank 1, followed by zero: H = 2 - 1.
        let d = m(&[&[1, 2], &[2, 4]]);
        let h = quotient_cohomology(&d, &Matrix::zeros(0, 2)).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(quotient_cohomology(&d, &d).is_err());
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::span(
            3,
            &[vec![Scalar::int(0), Scalar::int(1), Scalar::int(1)]],
        );
        assert_eq!(a.intersection(&b).dim(), 0);
        assert_eq!(a.sum(&b).dim(), 3);
        let c = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(a.intersection(&c), Subspace::coordinate(3, &[1]));
    }

    fn small_vec(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
        proptest::collection::vec((-3i64..=3, -2i64..=2), n)
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in small_vec(12)) {
            let a = Matrix::from_data(3, 4, entries.iter().map(|&(r, i)| Scalar::gaussian(r, i)).collect()).unwrap();
            let (k, i) = kernel_image(&a);
            prop_assert_eq!(k.dim() + i.dim(), 4);
            for v in k.basis() {
                prop_assert!(is_zero_vector(&a.apply(v)));
            }
        }

        #[test]
        fn echelon_span_is_order_independent(entries in small_vec(12), rot in 0usize..4) {
            let vs: Vec<Vector> = entries
                .chunks(3)
                .map(|c| c.iter().map(|&(r, i)| Scalar::gaussian(r, i)).collect())
                .collect();
            let mut shuffled = vs.clone();
            shuffled.rotate_left(rot);
            shuffled.reverse();
            let a = Subspace::span(3, &vs);
            let b = Subspace::span(3, &shuffled);
            prop_assert_eq!(&a, &b);
            // Canonicalization is idempotent.
            prop_assert_eq!(&Subspace::span(3, a.basis()), &a);
            let mut inc = Subspace::zero(3);
            for v in &vs {
                inc.insert(v);
            }
            prop_assert_eq!(&inc, &a);
        }
    }
}
