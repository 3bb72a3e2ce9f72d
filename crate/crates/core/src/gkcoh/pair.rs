use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    hermitian_definiteness, kernel, zero_vector, Definiteness, Matrix, Scalar, Vector,
};
use crate::report::{Check, Report};

/// A real Lie algebra `g₁ = k₁ ⊕ p₁` with an invariant form `B` and a central
/// element `z0` of `k₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductivePair {
    name: String,
    names: Vec<String>,
    /// `brackets[i][j]` holds the coordinates of `[e_i, e_j]`.
    brackets: Vec<Vec<Vector>>,
    k: Vec<usize>,
    p: Vec<usize>,
    b: Matrix,
    z0: Vector,
}

impl ReductivePair {
    /// `constants` lists `(i, j, k, c)` meaning `[e_i, e_j]` has `c` at `e_k`.
    /// Entries are taken literally; antisymmetry is checked by `validate_pair`.
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        k: Vec<usize>,
        p: Vec<usize>,
        b: Matrix,
        z0: Vector,
    ) -> Result<Self> {
        let d = names.len();
        let mut brackets = vec![vec![zero_vector(d); d]; d];
        for (i, j, l, c) in constants {
            if i >= d || j >= d || l >= d {
                return Err(Error::InvalidPair(format!(
                    "structure constant ({i}, {j}, {l}) outside dimension {d}"
                )));
            }
            brackets[i][j][l] += c;
        }
        if b.rows() != d || b.cols() != d {
            return Err(Error::DimensionMismatch(format!("B is not {d}×{d}")));
        }
        if z0.len() != d {
            return Err(Error::DimensionMismatch(format!("z0 has length {}", z0.len())));
        }
        if let Some(&i) = k.iter().chain(&p).find(|&&i| i >= d) {
            return Err(Error::InvalidPair(format!("subspace marker {i} outside dimension {d}")));
        }
        Ok(ReductivePair {
            name: name.into(),
            names,
            brackets,
            k,
            p,
            b,
            z0,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn k_indices(&self) -> &[usize] {
        &self.k
    }

    pub fn p_indices(&self) -> &[usize] {
        &self.p
    }

    pub fn form(&self) -> &Matrix {
        &self.b
    }

    pub fn z0(&self) -> &[Scalar] {
        &self.z0
    }

    /// Nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    let c = &self.brackets[i][j][l];
                    if !c.is_zero() {
                        out.push((i, j, l, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(d);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xi * yj;
                for (o, v) in out.iter_mut().zip(&self.brackets[i][j]) {
                    if !v.is_zero() {
                        *o += &c * v;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x` on `g₁`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.bracket(x, &basis(d, j))).collect();
        Matrix::from_columns(d, &cols)
    }

    /// Complex-bilinear extension of `B`.
    pub fn b(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let by = self.b.apply(y);
        x.iter().zip(&by).map(|(a, b)| a * b).sum()
    }

    /// `J = ad z0` restricted to `p₁`, in the coordinates of `p_indices`.
    pub fn complex_structure(&self) -> Matrix {
        self.ad(&self.z0).submatrix(&self.p, &self.p)
    }

    /// Direct sum of two pairs, with the second pair's basis shifted.
    pub fn product(&self, other: &ReductivePair) -> Result<ReductivePair> {
        let (d1, d2) = (self.dim(), other.dim());
        let names = self
            .names
            .iter()
            .map(|n| format!("{n}₁"))
            .chain(other.names.iter().map(|n| format!("{n}₂")))
            .collect();
        let constants = self.constants().into_iter().chain(
            other
                .constants()
                .into_iter()
                .map(|(i, j, l, c)| (i + d1, j + d1, l + d1, c)),
        );
        let mut b = Matrix::zeros(d1 + d2, d1 + d2);
        for i in 0..d1 {
            for j in 0..d1 {
                b.set(i, j, self.b.get(i, j).clone());
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                b.set(i + d1, j + d1, other.b.get(i, j).clone());
            }
        }
        let shift = |v: &[usize]| v.iter().map(|i| i + d1).collect::<Vec<_>>();
        ReductivePair::new(
            format!("{}×{}", self.name, other.name),
            names,
            constants,
            self.k.iter().copied().chain(shift(&other.k)).collect(),
            self.p.iter().copied().chain(shift(&other.p)).collect(),
            b,
            self.z0.iter().chain(&other.z0).cloned().collect(),
        )
    }
}

fn basis(d: usize, i: usize) -> Vector {
    crate::exactlin::unit_vector(d, i)
}

/// `sl₂(ℝ)` with basis `W = [[0,1],[−1,0]]`, `H = diag(1,−1)`, `X = [[0,1],[1,0]]`,
/// `k₁ = ℝW`, trace form `B` and `z0 = W/2`.
pub fn sl2_pair() -> ReductivePair {
    let c = |i, j, l, v: i64| [(i, j, l, Scalar::int(v)), (j, i, l, Scalar::int(-v))];
    let constants: Vec<_> = [c(1, 2, 0, 2), c(0, 1, 2, -2), c(0, 2, 1, 2)]
        .into_iter()
        .flatten()
        .collect();
    ReductivePair::new(
        "sl2",
        vec!["W".into(), "H".into(), "X".into()],
        constants,
        vec![0],
        vec![1, 2],
        Matrix::diagonal(&[Scalar::int(-2), Scalar::int(2), Scalar::int(2)]),
        vec![Scalar::frac(1, 2), Scalar::int(0), Scalar::int(0)],
    )
    .expect("sl2 data is well formed")
}

pub fn sl2_product_pair() -> ReductivePair {
    sl2_pair().product(&sl2_pair()).expect("dimensions match")
}

fn in_span(d: usize, idx: &[usize], v: &[Scalar]) -> bool {
    (0..d).all(|i| idx.contains(&i) || v[i].is_zero())
}

/// Checks every structural requirement on the pair and reports each one.
pub fn validate_pair(pr: &ReductivePair) -> Report {
    let d = pr.dim();
    let e = |i| basis(d, i);
    let mut r = Report::new();

    let mut markers = pr.k.iter().chain(&pr.p).copied().collect::<Vec<_>>();
    markers.sort_unstable();
    let partition = if markers != (0..d).collect::<Vec<_>>() {
        Some("k₁ and p₁ markers do not partition the basis".to_string())
    } else if pr.p.is_empty() {
        Some("p₁ is zero".to_string())
    } else {
        None
    };
    r.push(Check::from_failure("markers_partition", partition));

    let antisym = (0..d)
        .flat_map(|i| (i..d).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let s = crate::exactlin::add_vectors(&pr.brackets[i][j], &pr.brackets[j][i]);
            !crate::exactlin::is_zero_vector(&s)
        })
        .map(|(i, j)| format!("[{}, {}] + [{1}, {0}] ≠ 0", pr.names[i], pr.names[j]));
    r.push(Check::from_failure("antisymmetry", antisym));

    let jacobi = (0..d)
        .flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |l| (i, j, l))))
        .find(|&(i, j, l)| {
            let (x, y, z) = (e(i), e(j), e(l));
            let a = pr.bracket(&x, &pr.bracket(&y, &z));
            let b = pr.bracket(&y, &pr.bracket(&z, &x));
            let c = pr.bracket(&z, &pr.bracket(&x, &y));
            !crate::exactlin::is_zero_vector(&crate::exactlin::add_vectors(
                &crate::exactlin::add_vectors(&a, &b),
                &c,
            ))
        })
        .map(|(i, j, l)| format!("({}, {}, {})", pr.names[i], pr.names[j], pr.names[l]));
    r.push(Check::from_failure("jacobi", jacobi));

    let cartan = |name: &str, left: &[usize], right: &[usize], target: &[usize]| {
        let bad = left.iter().find_map(|&i| {
            right
                .iter()
                .find(|&&j| !in_span(d, target, &pr.brackets[i][j]))
                .map(|&j| format!("[{}, {}] leaves its subspace", pr.names[i], pr.names[j]))
        });
        Check::from_failure(name, bad)
    };
    r.push(cartan("bracket_kk_in_k", &pr.k, &pr.k, &pr.k));
    r.push(cartan("bracket_kp_in_p", &pr.k, &pr.p, &pr.p));
    r.push(cartan("bracket_pp_in_k", &pr.p, &pr.p, &pr.k));

    r.push(Check::from_failure(
        "form_symmetric",
        (pr.b != pr.b.transpose()).then(|| "B ≠ Bᵀ".to_string()),
    ));
    let invariant = (0..d)
        .flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |l| (i, j, l))))
        .find(|&(i, j, l)| {
            let (x, y, z) = (e(i), e(j), e(l));
            !(pr.b(&pr.bracket(&x, &y), &z) + pr.b(&y, &pr.bracket(&x, &z))).is_zero()
        })
        .map(|(i, j, l)| format!("B([{}, {}], {}) + B({1}, [{0}, {2}]) ≠ 0", pr.names[i], pr.names[j], pr.names[l]));
    r.push(Check::from_failure("form_invariant", invariant));

    let definite = |name: &str, idx: &[usize], sign: i64| {
        let block = pr.b.submatrix(idx, idx).scale(&Scalar::int(sign));
        let ok = idx.is_empty()
            || matches!(hermitian_definiteness(&block), Ok(Definiteness::PositiveDefinite));
        Check::from_failure(name, (!ok).then(|| "wrong definiteness".to_string()))
    };
    r.push(definite("form_negative_on_k", &pr.k, -1));
    r.push(definite("form_positive_on_p", &pr.p, 1));

    r.push(Check::from_failure(
        "z0_in_k",
        (!in_span(d, &pr.k, &pr.z0)).then(|| "z0 has a p₁ component".to_string()),
    ));
    let central = pr
        .k
        .iter()
        .find(|&&i| !crate::exactlin::is_zero_vector(&pr.bracket(&pr.z0, &e(i))))
        .map(|&i| format!("[z0, {}] ≠ 0", pr.names[i]));
    r.push(Check::from_failure("z0_central_in_k", central));

    let j = pr.complex_structure();
    let jj = j.mul(&j);
    let minus_one = Matrix::identity(pr.p.len()).scale(&Scalar::int(-1));
    let cs = (jj != minus_one).then(|| {
        let c = jj.get(0, 0).clone();
        if jj == Matrix::identity(pr.p.len()).scale(&c) {
            format!("(ad z0)² = {c} on p₁")
        } else {
            "(ad z0)² is not −1 on p₁".to_string()
        }
    });
    r.push(Check::from_failure("complex_structure", cs));
    r
}

/// Bases of `p₁⁺` and `p₁⁻` inside `p₁ ⊗ ℂ`, in coordinates of `g₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSplit {
    pub plus: Vec<Vector>,
    pub minus: Vec<Vector>,
}

impl PSplit {
    pub fn dims(&self) -> (usize, usize) {
        (self.plus.len(), self.minus.len())
    }
}

/// Eigenspaces of `ad z0` on `p₁ ⊗ ℂ` for `±i`.
pub fn split_p(pr: &ReductivePair) -> Result<PSplit> {
    let j = pr.complex_structure();
    let n = pr.p.len();
    if n == 0 {
        return Err(Error::InvalidPair("p₁ is zero".into()));
    }
    let eig = |lambda: Scalar| -> Vec<Vector> {
        let shifted = j.sub(&Matrix::identity(n).scale(&lambda));
        kernel(&shifted)
            .basis()
            .iter()
            .map(|v| {
                let lead = v.iter().find(|c| !c.is_zero()).and_then(Scalar::inv);
                let v = crate::exactlin::scale_vector(&lead.unwrap_or_else(|| Scalar::int(1)), v);
                let mut full = zero_vector(pr.dim());
                for (c, &i) in v.iter().zip(&pr.p) {
                    full[i] = c.clone();
                }
                full
            })
            .collect()
    };
    let plus = eig(Scalar::i());
    let minus = eig(-Scalar::i());
    if plus.len() != minus.len() || plus.len() + minus.len() != n {
        return Err(Error::InvalidPair(format!(
            "ad z0 eigenspaces for ±i have dimensions ({}, {}) in a {n}-dimensional p₁",
            plus.len(),
            minus.len()
        )));
    }
    Ok(PSplit { plus, minus })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_z0(pr: &ReductivePair, z0: Vector) -> ReductivePair {
        let mut q = pr.clone();
        q.z0 = z0;
        q
    }

    #[test]
    fn sl2_is_valid() {
        let r = validate_pair(&sl2_pair());
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(validate_pair(&sl2_product_pair()).passed());
    }

    #[test]
    fn doubled_z0_is_rejected() {
        let pr = sl2_pair();
        let bad = with_z0(&pr, vec![Scalar::int(1), Scalar::int(0), Scalar::int(0)]);
        let r = validate_pair(&bad);
        let c = r.get("complex_structure").unwrap();
        assert!(!c.passed);
        assert!(c.detail.as_deref().unwrap().contains("-4"));
        assert!(split_p(&bad).is_err());
    }

    #[test]
    fn wrong_sign_on_k_is_rejected() {
        let mut pr = sl2_pair();
        pr.b.set(0, 0, Scalar::int(2));
        let r = validate_pair(&pr);
        assert!(!r.get("form_negative_on_k").unwrap().passed);
        assert!(!r.get("form_invariant").unwrap().passed);
    }

    #[test]
    fn split_dimensions() {
        let s = split_p(&sl2_pair()).unwrap();
        assert_eq!(s.dims(), (1, 1));
        // E₊ = H + iX
        assert_eq!(s.plus[0], vec![Scalar::int(0), Scalar::int(1), Scalar::i()]);
        assert_eq!(split_p(&sl2_product_pair()).unwrap().dims(), (2, 2));
    }

    #[test]
    fn zero_z0_has_no_split() {
        let pr = with_z0(&sl2_pair(), zero_vector(3));
        assert!(!validate_pair(&pr).passed());
        assert!(split_p(&pr).is_err());
    }
}
