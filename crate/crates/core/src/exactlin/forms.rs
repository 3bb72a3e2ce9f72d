use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Matrix;
use crate::error::{Error, Result};

/// Inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    Not,
}

/// Sylvester inertia by symmetric Gaussian elimination (`G ↦ Pᵀ G P`).
pub fn symmetric_signature(g: &Matrix) -> Result<Inertia> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch("form matrix must be square".into()));
    }
    if !g.is_real() {
        return Err(Error::NotReal);
    }
    if g.transpose() != *g {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| g.get(i, j).re().clone()).collect())
        .collect();
    let mut inertia = Inertia {
        plus: 0,
        minus: 0,
        zero: 0,
    };
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in &mut a {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // row_k += row_j, col_k += col_j makes a[k][k] = 2 a[k][j].
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for row in &mut a {
                    let t = row[j].clone();
                    row[k] += t;
                }
            } else {
                inertia.zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            inertia.plus += 1;
        } else {
            inertia.minus += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let t = &f * &a[k][c];
                a[i][c] -= t;
            }
            for row in a.iter_mut().skip(k) {
                let t = &f * &row[k];
                row[i] -= t;
            }
        }
    }
    Ok(inertia)
}

/// Leading principal minors of a Hermitian matrix, computed exactly.
pub fn leading_minors(g: &Matrix) -> Result<Vec<BigRational>> {
    if !g.is_square() {
        return Err(Error::DimensionMismatch("form matrix must be square".into()));
    }
    if g.adjoint() != *g {
        return Err(Error::NotHermitian);
    }
    let n = g.rows();
    let mut minors = Vec::with_capacity(n);
    for k in 1..=n {
        let idx: Vec<usize> = (0..k).collect();
        let d = g.submatrix(&idx, &idx).determinant();
        // Hermitian minors are real.
        debug_assert!(d.is_real());
        minors.push(d.re().clone());
    }
    Ok(minors)
}

/// Positive-definiteness by the leading-principal-minor criterion.
pub fn hermitian_definiteness(g: &Matrix) -> Result<Definiteness> {
    let minors = leading_minors(g)?;
    Ok(if minors.iter().all(Signed::is_positive) {
        Definiteness::PositiveDefinite
    } else {
        Definiteness::Not
    })
}

/// Convenience: is `g` Hermitian positive-definite? Non-Hermitian input is `false`.
pub fn is_positive_definite(g: &Matrix) -> bool {
    matches!(
        hermitian_definiteness(g),
        Ok(Definiteness::PositiveDefinite)
    )
}

#[cfg(test)]
pub(crate) fn real_matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| super::Scalar::int(x)).collect())
            .collect(),
    )
    .expect("rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Scalar;
    use proptest::prelude::*;

    #[test]
    fn signature_examples() {
        let d = Matrix::diagonal(&[Scalar::int(1), Scalar::int(1), Scalar::int(-1)]);
        assert_eq!(
            symmetric_signature(&d).unwrap(),
            Inertia { plus: 2, minus: 1, zero: 0 }
        );
        let h = real_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            symmetric_signature(&h).unwrap(),
            Inertia { plus: 1, minus: 1, zero: 0 }
        );
        let z = real_matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(symmetric_signature(&z).unwrap().zero, 2);
    }

    #[test]
    fn signature_rejects_bad_input() {
        assert!(matches!(
            symmetric_signature(&real_matrix(&[&[0, 1], &[2, 0]])),
            Err(Error::NotSymmetric)
        ));
        assert!(matches!(
            symmetric_signature(&Matrix::diagonal(&[Scalar::i()])),
            Err(Error::NotReal)
        ));
    }

    #[test]
    fn definiteness_examples() {
        assert_eq!(
            hermitian_definiteness(&Matrix::identity(3)).unwrap(),
            Definiteness::PositiveDefinite
        );
        assert_eq!(
            hermitian_definiteness(&Matrix::diagonal(&[Scalar::int(1), Scalar::int(-1)])).unwrap(),
            Definiteness::Not
        );
        let g = Matrix::from_rows(vec![
            vec![Scalar::int(2), Scalar::i()],
            vec![Scalar::gaussian(0, -1), Scalar::int(2)],
        ])
        .unwrap();
        let minors = leading_minors(&g).unwrap();
        assert_eq!(minors, vec![BigRational::from_integer(2.into()), BigRational::from_integer(3.into())]);
        assert_eq!(hermitian_definiteness(&g).unwrap(), Definiteness::PositiveDefinite);
        assert!(matches!(
            hermitian_definiteness(&Matrix::from_rows(vec![vec![Scalar::int(1), Scalar::i()], vec![Scalar::i(), Scalar::int(1)]]).unwrap()),
            Err(Error::NotHermitian)
        ));
    }

    proptest! {
        #[test]
        fn signature_congruence_invariant(
            diag in proptest::collection::vec(-2i64..=2, 4),
            p_entries in proptest::collection::vec(-3i64..=3, 16),
        ) {
            let g = Matrix::diagonal(&diag.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>());
            let p = Matrix::from_data(4, 4, p_entries.iter().map(|&x| Scalar::int(x)).collect()).unwrap();
            prop_assume!(!p.determinant().is_zero());
            let congruent = p.transpose().mul(&g).mul(&p);
            prop_assert_eq!(symmetric_signature(&g).unwrap(), symmetric_signature(&congruent).unwrap());
        }
    }
}
