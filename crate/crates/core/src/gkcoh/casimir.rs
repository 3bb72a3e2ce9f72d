use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::complex::{cohomology_bigraded, RelativeComplex};
use super::module::{AdmissibleModule, Weight};
use super::pair::ReductivePair;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CasimirValue {
    Scalar(Scalar),
    NonScalar,
}

/// Casimir action on each weight space whose compositions stay in the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirTable {
    pub entries: BTreeMap<Weight, CasimirValue>,
    /// Weight spaces at the edge of the window, where it cannot be composed.
    pub edge: Vec<Weight>,
}

impl CasimirTable {
    /// The common scalar, if every interior weight space carries the same one.
    pub fn scalar(&self) -> Option<Scalar> {
        let mut it = self.entries.values();
        let first = match it.next()? {
            CasimirValue::Scalar(c) => c.clone(),
            CasimirValue::NonScalar => return None,
        };
        it.all(|v| v == &CasimirValue::Scalar(first.clone()))
            .then_some(first)
    }
}

/// `C = Σ ρ(y_a)ρ(y^a)` with `y^a` the `B`-dual basis of the generators.
pub fn casimir_action(pr: &ReductivePair, m: &AdmissibleModule) -> Result<CasimirTable> {
    let gens = m.generators();
    let n = gens.len();
    let gram = Matrix::from_fn(n, n, |a, b| pr.b(&gens[a].coords, &gens[b].coords));
    let dual = gram
        .inverse()
        .ok_or_else(|| Error::InvalidPair("B is degenerate on the generators".into()))?;
    let terms: Vec<(usize, usize, Scalar)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter_map(|(a, b)| {
            let c = dual.get(a, b);
            (!c.is_zero()).then(|| (a, b, c.clone()))
        })
        .collect();
    for (a, b, _) in &terms {
        if gens[*a].weight.iter().zip(&gens[*b].weight).any(|(x, y)| x + y != 0) {
            return Err(Error::InvalidPair("B pairs generators of non-opposite weight".into()));
        }
    }
    let mut entries = BTreeMap::new();
    let mut edge = Vec::new();
    'weights: for (w, s) in m.spaces().iter().filter(|(_, s)| s.dim > 0) {
        let mut acc = Matrix::zeros(s.dim, s.dim);
        for (a, b, c) in &terms {
            let mid: Weight = w.iter().zip(&gens[*b].weight).map(|(x, y)| x + y).collect();
            if !m.in_window(&mid) {
                edge.push(w.clone());
                continue 'weights;
            }
            let step = m.rho(*a, &mid)?.mul(&m.rho(*b, w)?);
            acc = acc.add(&step.scale(c));
        }
        let c0 = acc.get(0, 0).clone();
        let value = if acc == Matrix::identity(s.dim).scale(&c0) {
            CasimirValue::Scalar(c0)
        } else {
            CasimirValue::NonScalar
        };
        entries.insert(w.clone(), value);
    }
    if entries.is_empty() && !edge.is_empty() {
        return Err(Error::InsufficientWindow(
            "no weight space is interior enough to compose the Casimir".into(),
        ));
    }
    Ok(CasimirTable { entries, edge })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    CasimirZero,
    CasimirNonzero,
    NotApplicable,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::CasimirZero => "casimir_zero",
            Branch::CasimirNonzero => "casimir_nonzero",
            Branch::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyVerdict {
    pub branch: Branch,
    pub casimir: Option<String>,
    /// `d ≡ 0` on the zero branch, `H = 0` on the nonzero branch.
    pub holds: bool,
    pub detail: Option<String>,
}

/// Casimir zero forces `d ≡ 0`; a nonzero scalar forces `H = 0`.
pub fn vanishing_dichotomy(
    m: &AdmissibleModule,
    c: &RelativeComplex,
    table: &CasimirTable,
) -> Result<DichotomyVerdict> {
    let Some(scalar) = table.scalar() else {
        return Ok(DichotomyVerdict {
            branch: Branch::NotApplicable,
            casimir: None,
            holds: false,
            detail: Some("Casimir does not act by a single scalar".into()),
        });
    };
    let uncertified = table.edge.iter().find(|w| c.probes_weight(w) && m.dim_at(w) > 0);
    if let Some(w) = uncertified {
        return Err(Error::InsufficientWindow(format!(
            "Casimir cannot be composed at probed weight {w:?}"
        )));
    }
    let verdict = if scalar.is_zero() {
        let holds = c.differential_vanishes();
        DichotomyVerdict {
            branch: Branch::CasimirZero,
            casimir: Some(scalar.to_string()),
            holds,
            detail: (!holds).then(|| "d ≠ 0 although the Casimir vanishes".into()),
        }
    } else {
        let h = cohomology_bigraded(c)?;
        let holds = h.bettis().iter().all(|&b| b == 0);
        DichotomyVerdict {
            branch: Branch::CasimirNonzero,
            casimir: Some(scalar.to_string()),
            holds,
            detail: (!holds).then(|| format!("nonzero cohomology {:?}", h.bettis())),
        }
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkcoh::complex::build_complex;
    use crate::gkcoh::module::{discrete_series, sl2_adjoint, sl2_generators, trivial_module};
    use crate::gkcoh::pair::{sl2_pair, split_p};

    fn verdict(m: &AdmissibleModule) -> (CasimirTable, DichotomyVerdict) {
        let pr = sl2_pair();
        let c = build_complex(&pr, &split_p(&pr).unwrap(), m).unwrap();
        let t = casimir_action(&pr, m).unwrap();
        let v = vanishing_dichotomy(m, &c, &t).unwrap();
        (t, v)
    }

    #[test]
    fn casimir_scalars() {
        let (t, v) = verdict(&trivial_module(sl2_generators(), 4).unwrap());
        assert_eq!(t.scalar(), Some(Scalar::int(0)));
        assert_eq!((v.branch, v.holds), (Branch::CasimirZero, true));

        let (t, v) = verdict(&sl2_adjoint(4).unwrap());
        assert_eq!(t.scalar(), Some(Scalar::int(4)));
        assert_eq!((v.branch, v.holds), (Branch::CasimirNonzero, true));

        let (t, v) = verdict(&discrete_series(2, 1, 6).unwrap());
        assert_eq!(t.scalar(), Some(Scalar::int(0)));
        assert_eq!(t.edge, vec![vec![6]]);
        assert_eq!((v.branch, v.holds), (Branch::CasimirZero, true));
    }

    #[test]
    fn casimir_on_discrete_series_is_lambda_formula() {
        // λ(λ−2)/2
        for lambda in 1..6 {
            let m = discrete_series(lambda, -1, lambda + 6).unwrap();
            let t = casimir_action(&sl2_pair(), &m).unwrap();
            assert_eq!(t.scalar(), Some(Scalar::frac(lambda * (lambda - 2), 2)));
        }
    }

    #[test]
    fn reducible_module_is_not_applicable() {
        let m = AdmissibleModule::direct_sum(
            &trivial_module(sl2_generators(), 4).unwrap(),
            &sl2_adjoint(4).unwrap(),
        )
        .unwrap();
        let (t, v) = verdict(&m);
        assert_eq!(t.entries[&vec![0]], CasimirValue::NonScalar);
        assert_eq!(v.branch, Branch::NotApplicable);
    }

    #[test]
    fn casimir_needs_room() {
        let m = discrete_series(2, 1, 2).unwrap();
        assert!(matches!(
            casimir_action(&sl2_pair(), &m),
            Err(Error::InsufficientWindow(_))
        ));
    }
}
