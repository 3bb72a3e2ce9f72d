//! Built-in models used by the tests, the acceptance suite and `hlk catalog`.

mod algebras;

pub use algebras::{
    abelian_surface, abelian_threefold, asymmetric_model, degenerate_torus, exterior, g2_family,
    k3_lattice, k3_mock, point_model, product_model, torus, torus_without_nu, ExteriorAlgebra,
};

use crate::assembler::SpectrumEntry;
use crate::error::{Error, Result};
use crate::gkcoh::{
    discrete_series, sl2_adjoint, sl2_generators, sl2_pair, sl2_product_pair, trivial_module,
};
use crate::io::{algebra_to_json, canonical, module_to_json, pair_to_json, spectrum_to_json};

/// Window used when none is given.
pub const DEFAULT_WINDOW: i64 = 6;

/// Name, parameter meaning and a one-line description for each entry.
pub const ENTRIES: &[(&str, &str, &str)] = &[
    ("torus", "", "g = 1 exterior algebra on two generators"),
    ("abelian-surface", "", "g = 2 exterior algebra"),
    ("abelian-threefold", "", "g = 3 exterior algebra"),
    ("k3-mock", "", "g = 2 model with h^{1,1} = 20"),
    ("g2-family", "m = dim H^{1,1} (default 3)", "g = 2 dense-leaf models"),
    ("point", "", "only H^{0,0} and H^{2,2} (no Kähler class)"),
    ("s1s2", "N = number of factors (default 3)", "product of N copies of S² cohomology"),
    ("sl2", "", "the pair sl₂(ℝ) ⊃ so(2)"),
    ("sl2xsl2", "", "product pair"),
    ("trivial", "", "trivial sl₂ module"),
    ("d-plus", "λ (default 2)", "holomorphic discrete series"),
    ("d-minus", "λ (default 2)", "antiholomorphic discrete series"),
    ("adjoint", "", "adjoint sl₂ module"),
    ("genus2", "", "pair, modules and the genus-2 mock spectrum"),
    ("dplus-only", "", "pair, D⁺ module and a spectrum with only D⁺"),
];

/// Canonical files `(file name, contents)` for a catalog entry.
pub fn files(name: &str, param: Option<i64>, window: Option<i64>) -> Result<Vec<(String, String)>> {
    let window = window.unwrap_or(DEFAULT_WINDOW);
    let count = |default: i64| -> Result<usize> {
        let n = param.unwrap_or(default);
        usize::try_from(n).map_err(|_| Error::InvalidParameter(format!("{n} is not a count")))
    };
    let alg = |file: &str, a: crate::lefschetz::BigradedAlgebra| {
        vec![(format!("{file}.json"), canonical(&algebra_to_json(file, &a)))]
    };
    let module = |m: crate::gkcoh::AdmissibleModule| {
        let file = file_stem(m.name());
        (format!("{file}.json"), canonical(&module_to_json(&m)))
    };
    let pair = |p: crate::gkcoh::ReductivePair| (format!("{}.json", p.name()), canonical(&pair_to_json(&p)));
    let lambda = param.unwrap_or(2);
    Ok(match name {
        "torus" => alg(name, torus()),
        "abelian-surface" => alg(name, abelian_surface()),
        "abelian-threefold" => alg(name, abelian_threefold()),
        "k3-mock" => alg(name, k3_mock()),
        "g2-family" => {
            let m = count(3)?;
            alg(&format!("g2-family-{m}"), g2_family(m)?)
        }
        "point" => alg(name, point_model()),
        "s1s2" => {
            let n = count(3)?;
            alg(&format!("s1s2-{n}"), product_model(n)?)
        }
        "sl2" => vec![pair(sl2_pair())],
        "sl2xsl2" => vec![pair(sl2_product_pair())],
        "trivial" => vec![module(trivial_module(sl2_generators(), window)?)],
        "d-plus" => vec![module(discrete_series(lambda, 1, window)?)],
        "d-minus" => vec![module(discrete_series(lambda, -1, window)?)],
        "adjoint" => vec![module(sl2_adjoint(window)?)],
        "genus2" => {
            let (t, p, m) = (
                trivial_module(sl2_generators(), window)?,
                discrete_series(2, 1, window)?,
                discrete_series(2, -1, window)?,
            );
            let spectrum = vec![
                SpectrumEntry::new(t.name(), 1, 1),
                SpectrumEntry::new(p.name(), 2, 1),
                SpectrumEntry::new(m.name(), 2, 1),
            ];
            vec![
                pair(sl2_pair()),
                module(t),
                module(p),
                module(m),
                ("genus2-spectrum.json".into(), canonical(&spectrum_to_json(&spectrum))),
            ]
        }
        "dplus-only" => {
            let p = discrete_series(2, 1, window)?;
            let spectrum = vec![SpectrumEntry::new(p.name(), 1, 1)];
            vec![
                pair(sl2_pair()),
                module(p),
                ("dplus-only-spectrum.json".into(), canonical(&spectrum_to_json(&spectrum))),
            ]
        }
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    })
}

/// `D+(2)` becomes `dplus-2`, other names are lower-cased.
fn file_stem(name: &str) -> String {
    let mut s = String::new();
    for ch in name.chars() {
        match ch {
            '+' => s.push_str("plus"),
            '-' => s.push_str("minus"),
            '(' => s.push('-'),
            ')' => {}
            c => s.extend(c.to_lowercase()),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_generates() {
        for (name, _, _) in ENTRIES {
            let f = files(name, None, None).unwrap();
            assert!(!f.is_empty(), "{name}");
            assert!(f.iter().all(|(_, text)| text.ends_with('\n')));
        }
        assert!(matches!(files("nope", None, None), Err(Error::UnknownCatalog(_))));
        assert!(files("s1s2", Some(-1), None).is_err());
    }

    #[test]
    fn module_file_names() {
        assert_eq!(file_stem("D+(2)"), "dplus-2");
        assert_eq!(file_stem("trivial"), "trivial");
    }
}
