use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::Lefschetz;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::report::{Check, Report};

/// Per-degree outcome of the Gram identity `T(fa, fb) = q^n T(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub preconditions: Report,
    pub degrees: Vec<DegreeVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub passed: bool,
}

impl FrobeniusReport {
    pub fn passed(&self) -> bool {
        self.preconditions.passed() && self.degrees.iter().all(|d| d.passed)
    }

    pub fn failed_degrees(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .filter(|d| !d.passed)
            .map(|d| d.degree)
            .collect()
    }
}

/// Checks `f` against the hypotheses (unital, multiplicative, real, preserving
/// each `H^{p,q}`, `f(ω) = qω`) and then the Gram identity in every degree.
///
/// Precondition failures are reported, not fatal, so a violator still gets its
/// per-degree verdicts.
pub fn frobenius_check(lf: &Lefschetz<'_>, f: &Matrix, q: &BigRational) -> Result<FrobeniusReport> {
    let alg = lf.algebra();
    let n = alg.dim();
    if f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch(format!("f must be {n}x{n}")));
    }
    if !q.is_positive() {
        return Err(Error::InvalidParameter("q must be positive".into()));
    }
    let qs = Scalar::real(q.clone());
    let mut pre = Report::new();

    let unit = alg.unit().unwrap_or_default();
    pre.push(Check::from_failure(
        "unital",
        (f.apply(&unit) != unit).then(|| "f(1) ≠ 1".to_string()),
    ));

    let mut mult_fail = None;
    'outer: for i in 0..n {
        let fi = f.column(i);
        for j in 0..n {
            let lhs = f.apply(&alg.mul(&alg.basis_vector(i), &alg.basis_vector(j)));
            if lhs != alg.mul(&fi, &f.column(j)) {
                mult_fail = Some(format!(
                    "f({} ∪ {}) ≠ f({0}) ∪ f({1})",
                    alg.basis()[i].name,
                    alg.basis()[j].name
                ));
                break 'outer;
            }
        }
    }
    pre.push(Check::from_failure("multiplicative", mult_fail));

    // f ∘ conj = conj ∘ f  ⇔  f C = C f̄
    let c = alg.conjugation();
    pre.push(Check::from_failure(
        "commutes_with_conjugation",
        (f.mul(c) != c.mul(&f.conj())).then(|| "f does not commute with conjugation".to_string()),
    ));

    let bideg_fail = (0..n).find_map(|j| {
        let b = &alg.basis()[j];
        (!alg.lies_in_bidegree(&f.column(j), b.p, b.q))
            .then(|| format!("f moves `{}` out of H^{{{},{}}}", b.name, b.p, b.q))
    });
    pre.push(Check::from_failure("preserves_bidegree", bideg_fail));

    let fw = f.apply(lf.omega());
    let qw: Vec<Scalar> = lf.omega().iter().map(|x| x * &qs).collect();
    pre.push(Check::from_failure(
        "scales_omega",
        (fw != qw).then(|| "f(ω) ≠ q·ω".to_string()),
    ));

    let mut degrees = Vec::new();
    for r in 0..=alg.max_degree() {
        let idx = alg.degree_indices(r);
        if idx.is_empty() {
            continue;
        }
        let gram = lf.hodge_gram(r)?;
        let qn = qs.pow(r as u32);
        let mut ok = true;
        'pairs: for (a, &i) in idx.iter().enumerate() {
            let x = f.column(i);
            for (b, &j) in idx.iter().enumerate() {
                let y = f.column(j);
                if lf.hodge_inner_product(&x, &y)? != &qn * gram.get(a, b) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        degrees.push(DegreeVerdict {
            degree: r,
            passed: ok,
        });
    }
    Ok(FrobeniusReport {
        preconditions: pre,
        degrees,
    })
}
