use serde::Serialize;

use super::OperatorLieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::lefschetz::BigradedAlgebra;

/// Symmetric form on the even part of a `g = 2` model: `ν(uv)` between `H⁰`
/// and `H⁴`, `−ν(uv)` on `H²`, zero otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiForm {
    pub matrix: Matrix,
}

/// `φ` on the even subalgebra `even` (all of whose basis elements have even degree).
pub fn phi_form(even: &BigradedAlgebra) -> Result<PhiForm> {
    if even.g() != 2 {
        return Err(Error::Precondition("φ is defined for g = 2".into()));
    }
    if (0..even.dim()).any(|i| even.degree(i) % 2 == 1) {
        return Err(Error::Precondition("φ lives on the even part".into()));
    }
    let n = even.dim();
    let m = Matrix::from_fn(n, n, |i, j| {
        let (di, dj) = (even.degree(i), even.degree(j));
        if di + dj != 4 {
            return crate::exactlin::Scalar::from(0);
        }
        let v = even.pairing(&even.basis_vector(i), &even.basis_vector(j));
        if di == 2 {
            -v
        } else {
            v
        }
    });
    Ok(PhiForm { matrix: m })
}

impl PhiForm {
    /// `φ(Xu,v) + φ(u,Xv) = 0` for all `u, v`, i.e. `XᵀΦ + ΦX = 0`.
    pub fn annihilated_by(&self, x: &Matrix) -> bool {
        x.transpose().mul(&self.matrix).add(&self.matrix.mul(x)).is_zero()
    }

    pub fn nondegenerate(&self) -> bool {
        self.matrix.rank() == self.matrix.rows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoPhiVerdict {
    pub dim: usize,
    pub expected_dim: usize,
    pub members_annihilate: bool,
    pub phi_nondegenerate: bool,
    pub equal: bool,
}

/// Whether a closed algebra on `H^even` equals `so(H^even, φ)`.
pub fn so_phi_equality(phi: &PhiForm, l: &OperatorLieAlgebra) -> SoPhiVerdict {
    let n = phi.matrix.rows();
    let members_annihilate = l.basis().iter().all(|x| phi.annihilated_by(x));
    let phi_nondegenerate = phi.nondegenerate();
    let expected_dim = n * n.saturating_sub(1) / 2;
    SoPhiVerdict {
        dim: l.dim(),
        expected_dim,
        members_annihilate,
        phi_nondegenerate,
        equal: members_annihilate && phi_nondegenerate && l.is_closed() && l.dim() == expected_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::Scalar;

    #[test]
    fn phi_examples() {
        let m = catalog::g2_family(3).unwrap();
        let ev = m.even_subalgebra();
        let phi = phi_form(&ev).unwrap();
        let (one, e0, top) = (
            ev.index_of("1").unwrap(),
            ev.index_of("e0").unwrap(),
            ev.index_of("top").unwrap(),
        );
        assert_eq!(phi.matrix.get(e0, e0), &Scalar::from(-1));
        assert_eq!(phi.matrix.get(top, one), &Scalar::from(1));
        assert_eq!(phi.matrix.get(one, e0), &Scalar::from(0));
        assert!(phi.nondegenerate());
        assert!(phi_form(&catalog::torus().even_subalgebra()).is_err());
    }
}
