//! Relative Lie algebra cohomology `H•(g₁, K₁, V)` with its `(p,q)`-bigrading.
//!
//! Modules are weight-windowed: only the finitely many `K₁`-types that the
//! complex `Hom_{K₁}(Λ^p p₁⁺ ⊗ Λ^q p₁⁻, V)` can probe are stored. `h^{p,q}` is
//! the `d''`-cohomology of the bigraded complex; its totals are checked against
//! the ungraded complex and against harmonic forms.

mod casimir;
mod complex;
mod lefschetz;
mod module;
mod pair;

pub use casimir::{casimir_action, vanishing_dichotomy, Branch, CasimirTable, CasimirValue, DichotomyVerdict};
pub use complex::{
    build_complex, build_ungraded, cohomology_bigraded, complex_checks, CochainSpace, HodgeNumbers,
    RelativeComplex, UngradedComplex,
};
pub use lefschetz::{lefschetz_on_complex, omega0, ComplexLefschetz};
pub use module::{
    discrete_series, sl2_adjoint, sl2_generators, trivial_module, unitarity, validate_module,
    AdmissibleModule, Generator, Role, Weight, WeightSpace,
};
pub use pair::{sl2_pair, sl2_product_pair, split_p, validate_pair, PSplit, ReductivePair};

use serde::Serialize;

use crate::error::Result;
use crate::report::{Check, Report};

/// Everything the assembler and the CLI need to know about one module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleSummary {
    pub module: String,
    pub window: i64,
    pub cochains: HodgeNumbers,
    pub hodge: HodgeNumbers,
    pub casimir: Vec<(Weight, String)>,
    pub dichotomy: DichotomyVerdict,
    pub unitary: bool,
    /// `rank L^{g−r}` out of degree `r`, for `r < g`; empty off the zero branch.
    pub lefschetz_ranks: Vec<usize>,
    pub checks: Report,
}

impl ModuleSummary {
    /// Contributes to an assembly only on the Casimir-zero branch.
    pub fn contributes(&self) -> bool {
        self.dichotomy.branch == Branch::CasimirZero && self.dichotomy.holds
    }
}

/// Validates `m`, builds both complexes and runs the dichotomy.
pub fn summarize(pr: &ReductivePair, m: &AdmissibleModule) -> Result<ModuleSummary> {
    let split = split_p(pr)?;
    let mut checks = validate_module(pr, &split, m);
    let c = build_complex(pr, &split, m)?;
    let u = build_ungraded(pr, &split, m)?;
    checks.extend(complex_checks(&c, &u)?);
    let table = casimir_action(pr, m)?;
    let dichotomy = vanishing_dichotomy(m, &c, &table)?;
    checks.push(Check::from_failure(
        "dichotomy",
        if dichotomy.branch == Branch::NotApplicable {
            None
        } else {
            dichotomy.detail.clone()
        },
    ));
    let hodge = cohomology_bigraded(&c)?;
    let lefschetz_ranks = if dichotomy.branch == Branch::CasimirZero && dichotomy.holds {
        let l = lefschetz_on_complex(pr, &c)?;
        (0..c.g).map(|r| l.hard_lefschetz_rank(r)).collect()
    } else {
        Vec::new()
    };
    let casimir = table
        .entries
        .iter()
        .map(|(w, v)| {
            let s = match v {
                CasimirValue::Scalar(c) => c.to_string(),
                CasimirValue::NonScalar => "non-scalar".to_string(),
            };
            (w.clone(), s)
        })
        .collect();
    Ok(ModuleSummary {
        module: m.name().to_string(),
        window: m.window(),
        cochains: c.dims(),
        hodge,
        casimir,
        dichotomy,
        unitary: unitarity(m).passed,
        lefschetz_ranks,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summaries() {
        let pr = sl2_pair();
        let t = summarize(&pr, &trivial_module(sl2_generators(), 4).unwrap()).unwrap();
        assert!(t.checks.passed() && t.contributes() && t.unitary);
        assert_eq!(t.lefschetz_ranks, vec![1]);

        let a = summarize(&pr, &sl2_adjoint(4).unwrap()).unwrap();
        assert!(a.checks.passed() && !a.contributes() && !a.unitary);
        assert_eq!(a.dichotomy.casimir.as_deref(), Some("4"));
        assert!(a.lefschetz_ranks.is_empty());
    }
}
