//! Hodge diamonds assembled from a mock spectrum of modules.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gkcoh::{HodgeNumbers, ModuleSummary};
use crate::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub module: String,
    pub multiplicity: u64,
    pub k2_inv_dim: u64,
}

impl SpectrumEntry {
    pub fn new(module: impl Into<String>, multiplicity: u64, k2_inv_dim: u64) -> Self {
        SpectrumEntry {
            module: module.into(),
            multiplicity,
            k2_inv_dim,
        }
    }

    pub fn factor(&self) -> u64 {
        self.multiplicity * self.k2_inv_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub p: usize,
    pub q: usize,
    pub module: String,
    pub factor: u64,
    pub module_h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssembledCohomology {
    pub hodge: HodgeNumbers,
    pub ledger: Vec<Contribution>,
    /// Modules off the Casimir-zero branch; they contribute nothing.
    pub flagged: Vec<String>,
    /// `Σ factor · rank L^{g−r}` out of degree `r`, for `r < g`.
    pub lefschetz_ranks: Vec<usize>,
}

impl AssembledCohomology {
    pub fn bettis(&self) -> Vec<usize> {
        self.hodge.bettis()
    }
}

/// `dim H^{p,q} = Σ multiplicity · k2_inv_dim · h^{p,q}(module)`.
pub fn assemble(
    g: usize,
    entries: &[SpectrumEntry],
    modules: &BTreeMap<String, ModuleSummary>,
) -> Result<AssembledCohomology> {
    let mut hodge = HodgeNumbers::zero(g);
    let mut ledger = Vec::new();
    let mut flagged = Vec::new();
    let mut lefschetz_ranks = vec![0; g];
    for e in entries {
        let m = modules
            .get(&e.module)
            .ok_or_else(|| Error::DanglingModule(e.module.clone()))?;
        if m.hodge.g != g {
            return Err(Error::DimensionMismatch(format!(
                "module `{}` has g = {}, the spectrum g = {g}",
                e.module, m.hodge.g
            )));
        }
        if e.factor() == 0 {
            continue;
        }
        if !m.contributes() {
            if !flagged.contains(&e.module) {
                flagged.push(e.module.clone());
            }
            continue;
        }
        let f = usize::try_from(e.factor())
            .map_err(|_| Error::InvalidParameter("multiplicity overflow".into()))?;
        for p in 0..=g {
            for q in 0..=g {
                let h = m.hodge.get(p, q);
                if h > 0 {
                    hodge.h[p][q] += f * h;
                    ledger.push(Contribution {
                        p,
                        q,
                        module: e.module.clone(),
                        factor: e.factor(),
                        module_h: h,
                    });
                }
            }
        }
        for (acc, r) in lefschetz_ranks.iter_mut().zip(&m.lefschetz_ranks) {
            *acc += f * r;
        }
    }
    ledger.sort_by(|a, b| (a.p, a.q, &a.module).cmp(&(b.p, b.q, &b.module)));
    Ok(AssembledCohomology {
        hodge,
        ledger,
        flagged,
        lefschetz_ranks,
    })
}

/// Symmetries and hard Lefschetz on an assembled diamond.
pub fn diamond_checks(a: &AssembledCohomology) -> Report {
    let h = &a.hodge;
    let g = h.g;
    let pairs = || (0..=g).flat_map(|p| (0..=g).map(move |q| (p, q)));
    let mut r = Report::new();
    r.push(Check::from_failure(
        "hodge_symmetry",
        pairs()
            .find(|&(p, q)| h.get(p, q) != h.get(q, p))
            .map(|(p, q)| format!("h^{{{p},{q}}} = {} ≠ h^{{{q},{p}}} = {}", h.get(p, q), h.get(q, p))),
    ));
    let b = h.bettis();
    r.push(Check::from_failure(
        "odd_betti_even",
        (0..b.len())
            .find(|&n| n % 2 == 1 && b[n] % 2 == 1)
            .map(|n| format!("b_{n} = {}", b[n])),
    ));
    r.push(Check::from_failure(
        "serre_symmetry",
        pairs()
            .find(|&(p, q)| h.get(p, q) != h.get(g - p, g - q))
            .map(|(p, q)| {
                format!(
                    "h^{{{p},{q}}} = {} ≠ h^{{{},{}}} = {}",
                    h.get(p, q),
                    g - p,
                    g - q,
                    h.get(g - p, g - q)
                )
            }),
    ));
    r.push(Check::from_failure(
        "hard_lefschetz_dimensions",
        (0..g)
            .find(|&k| k + 2 < b.len() && b[k] > b[k + 2])
            .map(|k| format!("b_{k} = {} > b_{} = {}", b[k], k + 2, b[k + 2])),
    ));
    r.push(Check::from_failure(
        "hard_lefschetz_operator",
        (0..g)
            .find(|&k| a.lefschetz_ranks[k] != b[k] || b[k] != b[2 * g - k])
            .map(|k| {
                format!(
                    "rank L^{} = {} on H^{k} (b_{k} = {}, b_{} = {})",
                    g - k,
                    a.lefschetz_ranks[k],
                    b[k],
                    2 * g - k,
                    b[2 * g - k]
                )
            }),
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkcoh::{discrete_series, sl2_adjoint, sl2_generators, sl2_pair, summarize, trivial_module};

    fn modules() -> BTreeMap<String, ModuleSummary> {
        let pr = sl2_pair();
        [
            ("trivial", trivial_module(sl2_generators(), 6).unwrap()),
            ("D+", discrete_series(2, 1, 6).unwrap()),
            ("D-", discrete_series(2, -1, 6).unwrap()),
            ("adjoint", sl2_adjoint(6).unwrap()),
        ]
        .into_iter()
        .map(|(k, m)| (k.to_string(), summarize(&pr, &m).unwrap()))
        .collect()
    }

    fn genus2(k2: u64) -> Vec<SpectrumEntry> {
        vec![
            SpectrumEntry::new("trivial", 1, 1),
            SpectrumEntry::new("D+", 2, k2),
            SpectrumEntry::new("D-", 2, k2),
        ]
    }

    #[test]
    fn empty_spectrum() {
        let a = assemble(1, &[], &modules()).unwrap();
        assert_eq!(a.hodge, HodgeNumbers::zero(1));
    }

    #[test]
    fn genus_two_curve() {
        let ms = modules();
        let a = assemble(1, &genus2(1), &ms).unwrap();
        assert_eq!(a.hodge.h, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(a.bettis(), vec![1, 4, 1]);
        assert!(diamond_checks(&a).passed());
        let a3 = assemble(1, &genus2(3), &ms).unwrap();
        assert_eq!((a3.hodge.get(1, 0), a3.hodge.get(0, 1)), (6, 6));
    }

    #[test]
    fn holomorphic_only_is_flagged() {
        let a = assemble(1, &[SpectrumEntry::new("D+", 1, 1)], &modules()).unwrap();
        let r = diamond_checks(&a);
        assert!(!r.get("hodge_symmetry").unwrap().passed);
        assert!(!r.get("odd_betti_even").unwrap().passed);
    }

    #[test]
    fn trivial_only_passes() {
        let a = assemble(1, &[SpectrumEntry::new("trivial", 1, 1)], &modules()).unwrap();
        assert!(diamond_checks(&a).passed());
    }

    #[test]
    fn adjoint_is_flagged_and_dangling_is_an_error() {
        let ms = modules();
        let a = assemble(1, &[SpectrumEntry::new("adjoint", 3, 1)], &ms).unwrap();
        assert_eq!(a.flagged, vec!["adjoint".to_string()]);
        assert_eq!(a.hodge, HodgeNumbers::zero(1));
        assert!(matches!(
            assemble(1, &[SpectrumEntry::new("nope", 1, 1)], &ms),
            Err(Error::DanglingModule(_))
        ));
    }
}
