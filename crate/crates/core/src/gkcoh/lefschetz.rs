use std::collections::BTreeMap;

use num_traits::Zero;

use super::complex::{normalize, RelativeComplex};
use super::pair::ReductivePair;
use crate::error::{Error, Result};
use crate::exactlin::{zero_vector, Matrix, Scalar, Vector};

/// `ω₀(x, y) = −½ B(x, [z0, y])`.
pub fn omega0(pr: &ReductivePair, x: &[Scalar], y: &[Scalar]) -> Scalar {
    -(Scalar::frac(1, 2) * pr.b(x, &pr.bracket(pr.z0(), y)))
}

/// Wedge with `ω₀`, `C^{p,q} → C^{p+1,q+1}`, keyed by the source bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexLefschetz {
    pub g: usize,
    pub maps: BTreeMap<(usize, usize), Matrix>,
}

impl ComplexLefschetz {
    /// `L^k` out of `C^{p,q}`.
    pub fn power(&self, k: usize, p: usize, q: usize) -> Option<Matrix> {
        let mut acc: Option<Matrix> = None;
        for s in 0..k {
            let step = self.maps.get(&(p + s, q + s))?;
            acc = Some(match acc {
                None => step.clone(),
                Some(a) => step.mul(&a),
            });
        }
        acc
    }

    /// `rank L^{g−r}` from degree `r` to `2g − r`, summed over bidegrees.
    pub fn hard_lefschetz_rank(&self, r: usize) -> usize {
        let k = self.g - r;
        (0..=r)
            .map(|p| {
                if k == 0 {
                    return 0;
                }
                self.power(k, p, r - p).map_or(0, |m| m.rank())
            })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.values().all(Matrix::is_zero)
    }
}

/// `(ω₀ ∧ f)(x_0, …, x_{n+1}) = Σ_{a<b} (−1)^{a+b−1} ω₀(x_a, x_b) f(… x̂_a … x̂_b …)`.
pub fn lefschetz_on_complex(pr: &ReductivePair, c: &RelativeComplex) -> Result<ComplexLefschetz> {
    if !c.differential_vanishes() {
        return Err(Error::Precondition(
            "cochains are cohomology only when d ≡ 0".into(),
        ));
    }
    let factors = c.factors();
    let n = factors.len();
    let omega: Vec<Vec<Scalar>> = (0..n)
        .map(|a| (0..n).map(|b| omega0(pr, &factors[a], &factors[b])).collect())
        .collect();
    if omega.iter().flatten().all(Zero::is_zero) {
        return Err(Error::Precondition("ω₀ vanishes on p₁".into()));
    }
    let mut maps = BTreeMap::new();
    for p in 0..c.g {
        for q in 0..c.g {
            let (Some(src), Some(tgt)) = (c.space(p, q), c.space(p + 1, q + 1)) else {
                continue;
            };
            let w = src.width();
            let cols: Vec<Vector> = src
                .basis()
                .basis()
                .iter()
                .map(|f| {
                    let mut out = zero_vector(tgt.monomials().len() * w);
                    for (ti, mono) in tgt.monomials().iter().enumerate() {
                        for a in 0..mono.len() {
                            for b in a + 1..mono.len() {
                                let om = &omega[mono[a]][mono[b]];
                                if om.is_zero() {
                                    continue;
                                }
                                let rest: Vec<usize> = mono
                                    .iter()
                                    .enumerate()
                                    .filter(|&(i, _)| i != a && i != b)
                                    .map(|(_, &x)| x)
                                    .collect();
                                let Some((s, rest)) = normalize(rest) else {
                                    continue;
                                };
                                let Some(si) = src.index_of(&rest) else {
                                    continue;
                                };
                                let coef = Scalar::sign((a + b + 1) as i64) * Scalar::int(s) * om;
                                for (o, v) in out[ti * w..(ti + 1) * w].iter_mut().zip(src.value(f, si)) {
                                    *o += &coef * v;
                                }
                            }
                        }
                    }
                    tgt.basis().coordinates(&out).ok_or_else(|| {
                        Error::Internal("ω₀ ∧ f is not invariant".into())
                    })
                })
                .collect::<Result<_>>()?;
            maps.insert((p, q), Matrix::from_columns(tgt.dim(), &cols));
        }
    }
    Ok(ComplexLefschetz { g: c.g, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkcoh::complex::build_complex;
    use crate::gkcoh::module::{discrete_series, sl2_adjoint, sl2_generators, trivial_module};
    use crate::gkcoh::pair::{sl2_pair, sl2_product_pair, split_p};
    use crate::gkcoh::module::AdmissibleModule;

    #[test]
    fn omega0_on_e_plus_e_minus() {
        let g = sl2_generators();
        assert_eq!(omega0(&sl2_pair(), &g[1].coords, &g[2].coords), Scalar::gaussian(0, 2));
        assert_eq!(omega0(&sl2_pair(), &g[1].coords, &g[1].coords), Scalar::int(0));
    }

    #[test]
    fn trivial_module_l_is_iso() {
        let pr = sl2_pair();
        let c = build_complex(&pr, &split_p(&pr).unwrap(), &trivial_module(sl2_generators(), 2).unwrap())
            .unwrap();
        let l = lefschetz_on_complex(&pr, &c).unwrap();
        assert_eq!(l.maps[&(0, 0)], Matrix::diagonal(&[Scalar::gaussian(0, 2)]));
        assert_eq!(l.hard_lefschetz_rank(0), 1);
    }

    #[test]
    fn discrete_series_l_vanishes() {
        let pr = sl2_pair();
        let c = build_complex(&pr, &split_p(&pr).unwrap(), &discrete_series(2, 1, 6).unwrap()).unwrap();
        let l = lefschetz_on_complex(&pr, &c).unwrap();
        assert!(l.is_zero());
    }

    #[test]
    fn nonvanishing_differential_is_rejected() {
        let pr = sl2_pair();
        let c = build_complex(&pr, &split_p(&pr).unwrap(), &sl2_adjoint(4).unwrap()).unwrap();
        assert!(matches!(lefschetz_on_complex(&pr, &c), Err(Error::Precondition(_))));
    }

    #[test]
    fn product_pair_trivial_module() {
        let pr = sl2_product_pair();
        let t = trivial_module(sl2_generators(), 4).unwrap();
        let m = AdmissibleModule::external_tensor(&t, &t, 3, 3).unwrap();
        let c = build_complex(&pr, &split_p(&pr).unwrap(), &m).unwrap();
        assert_eq!(c.total_dims(), vec![1, 0, 2, 0, 1]);
        let l = lefschetz_on_complex(&pr, &c).unwrap();
        assert_eq!((l.hard_lefschetz_rank(0), l.hard_lefschetz_rank(1)), (1, 0));
    }
}
