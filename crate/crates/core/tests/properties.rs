use std::collections::BTreeMap;

use proptest::prelude::*;

use hlk::assembler::{assemble, diamond_checks, SpectrumEntry};
use hlk::catalog;
use hlk::exactlin::{add_vectors, scale_vector, Scalar, Vector};
use hlk::gkcoh::{
    discrete_series, sl2_adjoint, sl2_generators, sl2_pair, summarize, trivial_module,
    ModuleSummary,
};
use hlk::lefschetz::{hodge_signature, weil_operator, BigradedAlgebra, Lefschetz};

fn models() -> Vec<BigradedAlgebra> {
    vec![catalog::torus(), catalog::abelian_surface(), catalog::k3_mock()]
}

/// A positive integer combination of the stored Kähler classes.
fn class(alg: &BigradedAlgebra, weights: &[u8]) -> Vector {
    let classes = alg.kahler_classes();
    let mut acc = classes[0].clone();
    for (c, &w) in classes.iter().zip(weights).skip(1) {
        acc = add_vectors(&acc, &scale_vector(&Scalar::int(w as i64), c));
    }
    acc
}

fn homogeneous(alg: &BigradedAlgebra, r: usize, coeffs: &[i8]) -> Vector {
    let mut v = vec![Scalar::int(0); alg.dim()];
    for (&i, &c) in alg.degree_indices(r).iter().zip(coeffs.iter().cycle()) {
        v[i] = Scalar::gaussian(c as i64, (c as i64) % 3);
    }
    v
}

fn summaries() -> BTreeMap<String, ModuleSummary> {
    let pr = sl2_pair();
    let w = catalog::DEFAULT_WINDOW;
    [
        trivial_module(sl2_generators(), w).unwrap(),
        discrete_series(2, 1, w).unwrap(),
        discrete_series(2, -1, w).unwrap(),
        sl2_adjoint(w).unwrap(),
    ]
    .into_iter()
    .map(|m| (m.name().to_string(), summarize(&pr, &m).unwrap()))
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cone_combinations_satisfy_hard_lefschetz(
        which in 0usize..3,
        weights in prop::collection::vec(0u8..4, 4),
    ) {
        let alg = &models()[which];
        let w = class(alg, &weights);
        let lf = Lefschetz::new(alg, &w).unwrap();
        prop_assert!(lf.hard_lefschetz().passed());
        prop_assert_eq!(lf.lambda().unwrap(), lf.lambda_by_solve().unwrap());
        prop_assert!(lf.triple().unwrap().holds());
    }

    #[test]
    fn decomposition_round_trips(
        which in 0usize..3,
        weights in prop::collection::vec(0u8..4, 4),
        r in 0usize..5,
        coeffs in prop::collection::vec(-5i8..6, 1..8),
    ) {
        let alg = &models()[which];
        let r = r % (alg.max_degree() + 1);
        let lf = Lefschetz::new(alg, &class(alg, &weights)).unwrap();
        let x = homogeneous(alg, r, &coeffs);
        let parts = lf.decompose(&x).unwrap();
        for (s, xs) in &parts {
            prop_assert!(lf.primitive(r - 2 * s).contains(xs));
        }
        prop_assert_eq!(lf.reassemble(&parts), x);
    }

    #[test]
    fn polarization_symmetry_and_positivity(
        which in 0usize..3,
        weights in prop::collection::vec(0u8..4, 4),
    ) {
        let alg = &models()[which];
        let lf = Lefschetz::new(alg, &class(alg, &weights)).unwrap();
        let j = weil_operator(alg);
        for r in 0..=alg.max_degree() {
            let idx = alg.degree_indices(r);
            let q = lf.polarization_gram(r).unwrap();
            prop_assert_eq!(q.transpose(), q.scale(&Scalar::sign(r as i64)));
            let jr = j.submatrix(&idx, &idx);
            prop_assert_eq!(jr.transpose().mul(&q).mul(&jr), q);
            prop_assert!(lf.hodge_positive(r).unwrap());
        }
    }

    #[test]
    fn assembly_is_additive_and_scales(
        mults in prop::collection::vec(0u64..5, 3),
        k2 in 1u64..4,
        scale in 1u64..4,
    ) {
        let by_name = summaries();
        let names = ["trivial", "D+(2)", "D-(2)"];
        let spectrum: Vec<SpectrumEntry> = names
            .iter()
            .zip(&mults)
            .map(|(n, &m)| SpectrumEntry::new(*n, m, k2))
            .collect();
        let whole = assemble(1, &spectrum, &by_name).unwrap();
        let mut sum = vec![vec![0usize; 2]; 2];
        for e in &spectrum {
            let part = assemble(1, std::slice::from_ref(e), &by_name).unwrap();
            for (p, row) in sum.iter_mut().enumerate() {
                for (q, h) in row.iter_mut().enumerate() {
                    *h += part.hodge.get(p, q);
                }
            }
        }
        prop_assert_eq!(&whole.hodge.h, &sum);
        let scaled: Vec<SpectrumEntry> = spectrum
            .iter()
            .map(|e| SpectrumEntry::new(e.module.clone(), e.multiplicity * scale, e.k2_inv_dim))
            .collect();
        let big = assemble(1, &scaled, &by_name).unwrap();
        for p in 0..2 {
            for q in 0..2 {
                prop_assert_eq!(big.hodge.get(p, q), scale as usize * whole.hodge.get(p, q));
            }
        }
        // The adjoint is flagged and leaves the diamond unchanged.
        let mut with_adj = spectrum.clone();
        with_adj.push(SpectrumEntry::new("adjoint", 1, k2));
        let a = assemble(1, &with_adj, &by_name).unwrap();
        prop_assert_eq!(&a.hodge, &whole.hodge);
        prop_assert_eq!(a.flagged, vec!["adjoint".to_string()]);
        if mults[1] == mults[2] {
            prop_assert!(diamond_checks(&whole).get("hodge_symmetry").unwrap().passed);
        }
    }

    #[test]
    fn truncation_matches_direct_construction(
        lambda in 2i64..5,
        sign in prop::sample::select(vec![1i64, -1]),
        extra in 0i64..3,
    ) {
        let pr = sl2_pair();
        let w = catalog::DEFAULT_WINDOW + 2;
        let big = discrete_series(lambda, sign, w + 2 * extra).unwrap();
        let cut = big.truncate(w).unwrap();
        let direct = discrete_series(lambda, sign, w).unwrap();
        let (a, b) = (summarize(&pr, &cut).unwrap(), summarize(&pr, &direct).unwrap());
        prop_assert_eq!(a.hodge, b.hodge);
        prop_assert_eq!(a.cochains, b.cochains);
    }
}

#[test]
fn window_independence_of_sl2_modules() {
    let pr = sl2_pair();
    let at = |w: i64| -> Vec<ModuleSummary> {
        [
            trivial_module(sl2_generators(), w).unwrap(),
            discrete_series(2, 1, w).unwrap(),
            discrete_series(3, -1, w).unwrap(),
            sl2_adjoint(w).unwrap(),
        ]
        .iter()
        .map(|m| summarize(&pr, m).unwrap())
        .collect()
    };
    let base = at(catalog::DEFAULT_WINDOW);
    for w in [catalog::DEFAULT_WINDOW + 2, catalog::DEFAULT_WINDOW + 4] {
        for (x, y) in base.iter().zip(at(w)) {
            assert_eq!(x.hodge, y.hodge, "{}", x.module);
            assert_eq!(x.cochains, y.cochains, "{}", x.module);
            assert_eq!(x.dichotomy, y.dichotomy, "{}", x.module);
        }
    }
}

#[test]
fn signature_matches_hodge_number_sum() {
    for alg in [catalog::abelian_surface(), catalog::k3_mock(), catalog::g2_family(4).unwrap()] {
        let oracle: i64 = (0..=2)
            .flat_map(|p| (0..=2).map(move |q| (p, q)))
            .map(|(p, q)| {
                let sign = if p % 2 == 0 { 1 } else { -1 };
                sign * alg.hodge_number(p, q) as i64
            })
            .sum();
        let s = hodge_signature(&alg).unwrap();
        assert_eq!(s.formula, oracle);
        assert!(s.agree());
    }
}

#[test]
fn every_catalog_class_is_accepted() {
    for alg in models() {
        for w in alg.kahler_classes() {
            assert!(Lefschetz::new(&alg, w).unwrap().hard_lefschetz().passed());
        }
    }
}
