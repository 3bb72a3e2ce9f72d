use num_traits::Zero;
use rayon::prelude::*;

use super::{kahler_cone_membership, BigradedAlgebra, ConeMode};
use crate::exactlin::{Matrix, Scalar};
use crate::report::{Check, Report};

fn name(a: &BigradedAlgebra, i: usize) -> &str {
    &a.basis()[i].name
}

fn pair(a: &BigradedAlgebra, i: usize, j: usize) -> String {
    format!("({}, {})", name(a, i), name(a, j))
}

fn bidegree_additivity(a: &BigradedAlgebra) -> Option<String> {
    a.products().iter().find_map(|(&(i, j), terms)| {
        let (bi, bj) = (&a.basis()[i], &a.basis()[j]);
        terms.iter().find_map(|(k, _)| {
            let bk = &a.basis()[*k];
            (bk.p != bi.p + bj.p || bk.q != bi.q + bj.q)
                .then(|| format!("{} lands on `{}`", pair(a, i, j), bk.name))
        })
    })
}

fn associativity(a: &BigradedAlgebra) -> Option<String> {
    let n = a.dim();
    (0..n).into_par_iter().find_map_first(|i| {
        let ei = a.basis_vector(i);
        (0..n).find_map(|j| {
            let eij = a.mul(&ei, &a.basis_vector(j));
            (0..n).find_map(|k| {
                let ek = a.basis_vector(k);
                let left = a.mul(&eij, &ek);
                let right = a.mul(&ei, &a.mul(&a.basis_vector(j), &ek));
                (left != right).then(|| {
                    format!(
                        "({} {} {}) is not associative",
                        name(a, i),
                        name(a, j),
                        name(a, k)
                    )
                })
            })
        })
    })
}

fn graded_commutativity(a: &BigradedAlgebra) -> Option<String> {
    let n = a.dim();
    (0..n).find_map(|i| {
        (i..n).find_map(|j| {
            let sign = Scalar::sign((a.degree(i) * a.degree(j)) as i64);
            let ij = a.mul(&a.basis_vector(i), &a.basis_vector(j));
            let ji = a.mul(&a.basis_vector(j), &a.basis_vector(i));
            let ok = ij.iter().zip(&ji).all(|(x, y)| x == &(&sign * y));
            (!ok).then(|| pair(a, i, j))
        })
    })
}

fn conjugation_swaps_bidegree(a: &BigradedAlgebra) -> Option<String> {
    let c = a.conjugation();
    (0..a.dim()).find_map(|j| {
        let bj = &a.basis()[j];
        (!a.lies_in_bidegree(&c.column(j), bj.q, bj.p))
            .then(|| format!("conj(`{}`) leaves H^{{{},{}}}", bj.name, bj.q, bj.p))
    })
}

fn conjugation_involution(a: &BigradedAlgebra) -> Option<String> {
    let c = a.conjugation();
    let cc = c.mul(&c.conj());
    (cc != Matrix::identity(a.dim())).then(|| {
        let j = (0..a.dim())
            .find(|&j| cc.column(j) != a.basis_vector(j))
            .unwrap_or(0);
        format!("conj(conj(`{}`)) ≠ `{0}`", name(a, j))
    })
}

fn conjugation_multiplicative(a: &BigradedAlgebra) -> Option<String> {
    let n = a.dim();
    (0..n).find_map(|i| {
        (0..n).find_map(|j| {
            let (ei, ej) = (a.basis_vector(i), a.basis_vector(j));
            let lhs = a.conj(&a.mul(&ei, &ej));
            let rhs = a.mul(&a.conj(&ei), &a.conj(&ej));
            (lhs != rhs).then(|| pair(a, i, j))
        })
    })
}

fn unit(a: &BigradedAlgebra) -> Option<String> {
    match a.unit() {
        None => Some("no two-sided unit".into()),
        Some(u) if !a.lies_in_bidegree(&u, 0, 0) => Some("unit is not of bidegree (0,0)".into()),
        Some(_) => None,
    }
}

fn pairing_nondegenerate(a: &BigradedAlgebra) -> Option<String> {
    let n = a.dim();
    let gram = Matrix::from_fn(n, n, |i, j| a.pairing(&a.basis_vector(i), &a.basis_vector(j)));
    if gram.rank() == n {
        return None;
    }
    let k = crate::exactlin::kernel(&gram);
    let v = &k.basis()[0];
    let i = v.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let j = (0..n).find(|&j| j != i && a.degree(j) + a.degree(i) == a.max_degree());
    Some(match j {
        Some(j) => format!("ν(x ∪ y) is degenerate; witness pair {}", pair(a, i, j)),
        None => format!("ν(x ∪ y) is degenerate at `{}`", name(a, i)),
    })
}

/// Checks every axiom of a dense-leaf bigraded model and reports each one.
pub fn validate_algebra(a: &BigradedAlgebra) -> Report {
    validate(a, false)
}

/// Like [`validate_algebra`] for a product of `h^{0,0}` dense-leaf factors:
/// the top bidegree has one class per factor instead of exactly one.
pub fn validate_product_algebra(a: &BigradedAlgebra) -> Report {
    validate(a, true)
}

/// `dim H^{0,0}` above one means the model is a product of several factors.
pub fn is_product_model(a: &BigradedAlgebra) -> bool {
    a.hodge_number(0, 0) > 1
}

fn validate(a: &BigradedAlgebra, product: bool) -> Report {
    let g = a.g();
    let mut r = Report::new();
    r.push(Check::from_failure("bidegree_additivity", bidegree_additivity(a)));
    r.push(Check::from_failure("associativity", associativity(a)));
    r.push(Check::from_failure("unit", unit(a)));
    r.push(Check::from_failure("graded_commutativity", graded_commutativity(a)));
    r.push(Check::from_failure("conjugation_swaps_bidegree", conjugation_swaps_bidegree(a)));
    r.push(Check::from_failure("conjugation_involution", conjugation_involution(a)));
    r.push(Check::from_failure("conjugation_multiplicative", conjugation_multiplicative(a)));

    let top = a.hodge_number(g, g);
    let expected = if product { a.hodge_number(0, 0) } else { 1 };
    r.push(Check::from_failure(
        "top_dimension",
        (top != expected).then(|| format!("dim H^{{{g},{g}}} = {top}, expected {expected}")),
    ));
    let top_idx = a.bidegree_indices(g, g);
    r.push(Check::from_failure(
        "nu_nonzero",
        top_idx
            .iter()
            .all(|&i| a.nu_vector()[i].is_zero())
            .then(|| "ν vanishes".to_string()),
    ));
    r.push(Check::from_failure(
        "nu_support",
        (0..a.dim())
            .find(|&i| !top_idx.contains(&i) && !a.nu_vector()[i].is_zero())
            .map(|i| format!("ν is nonzero on `{}` outside H^{{{g},{g}}}", name(a, i))),
    ));
    r.push(Check::from_failure(
        "nu_real",
        (0..a.dim())
            .find(|&i| {
                let e = a.basis_vector(i);
                a.nu(&a.conj(&e)) != a.nu(&e).conj()
            })
            .map(|i| format!("ν(conj `{}`) ≠ conj ν(`{0}`)", name(a, i))),
    ));
    r.push(Check::from_failure("pairing_nondegenerate", pairing_nondegenerate(a)));

    let odd = (0..=a.max_degree())
        .filter(|d| d % 2 == 1)
        .find(|&d| a.betti(d) % 2 != 0)
        .map(|d| format!("dim H^{d} = {} is odd", a.betti(d)));
    r.push(Check::from_failure("odd_degree_even_dimension", odd));

    let asym = (0..=g)
        .flat_map(|p| (p + 1..=g).map(move |q| (p, q)))
        .find(|&(p, q)| a.hodge_number(p, q) != a.hodge_number(q, p))
        .map(|(p, q)| {
            format!(
                "h^{{{p},{q}}} = {} but h^{{{q},{p}}} = {}",
                a.hodge_number(p, q),
                a.hodge_number(q, p)
            )
        });
    r.push(Check::from_failure("hodge_symmetry", asym));

    for (k, w) in a.kahler_classes().iter().enumerate() {
        let failure = if !a.lies_in_bidegree(w, 1, 1) {
            Some("not of bidegree (1,1)".to_string())
        } else if !a.is_real(w) {
            Some("not real".to_string())
        } else if !kahler_cone_membership(a, w, ConeMode::Full) {
            Some("not in the Kähler cone".to_string())
        } else {
            None
        };
        r.push(Check::from_failure(format!("kahler_class_{k}"), failure));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_algebras_are_valid() {
        for a in [
            catalog::torus(),
            catalog::abelian_surface(),
            catalog::k3_mock(),
            catalog::g2_family(3).unwrap(),
            catalog::point_model(),
        ] {
            let r = validate_algebra(&a);
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn vanishing_nu_is_reported() {
        let r = validate_algebra(&catalog::torus_without_nu());
        let c = r.get("nu_nonzero").unwrap();
        assert!(!c.passed);
        assert_eq!(c.detail.as_deref(), Some("ν vanishes"));
    }

    #[test]
    fn asymmetric_dimensions_are_reported() {
        let r = validate_algebra(&catalog::asymmetric_model());
        assert!(!r.get("hodge_symmetry").unwrap().passed);
        assert!(!r.get("odd_degree_even_dimension").unwrap().passed);
    }

    #[test]
    fn product_model_has_large_top() {
        let a = catalog::product_model(3).unwrap();
        assert!(is_product_model(&a) && !is_product_model(&catalog::torus()));
        let r = validate_algebra(&a);
        assert!(!r.get("top_dimension").unwrap().passed);
        assert!(r.get("associativity").unwrap().passed);
        let r = validate_product_algebra(&a);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
