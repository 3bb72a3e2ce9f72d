use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::{scalar_json, Node};
use crate::error::Result;
use crate::exactlin::{zero_vector, Matrix, Scalar, Vector};
use crate::lefschetz::{BasisElement, BigradedAlgebra};

/// An algebra together with the name it is stored under.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: BigradedAlgebra,
}

fn terms_json(alg: &BigradedAlgebra, v: &[Scalar]) -> Value {
    Value::Array(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| json!({"basis": alg.basis()[i].name, "coeff": scalar_json(c)}))
            .collect(),
    )
}

pub fn algebra_to_json(name: &str, alg: &BigradedAlgebra) -> Value {
    let n = alg.dim();
    let basis: Vec<Value> = alg
        .basis()
        .iter()
        .map(|b| json!({"name": b.name, "p": b.p, "q": b.q}))
        .collect();
    let products: Vec<Value> = alg
        .products()
        .iter()
        .map(|(&(i, j), terms)| {
            let mut v = zero_vector(n);
            for (k, c) in terms {
                v[*k] = c.clone();
            }
            json!({
                "left": alg.basis()[i].name,
                "right": alg.basis()[j].name,
                "terms": terms_json(alg, &v),
            })
        })
        .collect();
    let conjugation: Vec<Value> = (0..n)
        .map(|j| json!({"source": alg.basis()[j].name, "terms": terms_json(alg, &alg.conjugation().column(j))}))
        .collect();
    let mut o = Map::new();
    o.insert("name".into(), json!(name));
    o.insert("g".into(), json!(alg.g()));
    o.insert("basis".into(), Value::Array(basis));
    o.insert("products".into(), Value::Array(products));
    o.insert("conjugation".into(), Value::Array(conjugation));
    o.insert("nu".into(), terms_json(alg, alg.nu_vector()));
    if !alg.kahler_classes().is_empty() {
        o.insert(
            "kahler_classes".into(),
            Value::Array(alg.kahler_classes().iter().map(|w| terms_json(alg, w)).collect()),
        );
    }
    Value::Object(o)
}

fn parse_terms(node: &Node<'_>, names: &[String]) -> Result<Vector> {
    let mut v = zero_vector(names.len());
    for t in node.items()? {
        let t = t.node();
        let b = t.field("basis")?;
        let name = b.node().str()?;
        let i = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| b.node().err(format!("unknown basis element `{name}`")))?;
        v[i] += t.field("coeff")?.node().scalar()?;
    }
    Ok(v)
}

fn index(node: &Node<'_>, names: &[String]) -> Result<usize> {
    let name = node.str()?;
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| node.err(format!("unknown basis element `{name}`")))
}

pub fn algebra_from_json(v: &Value) -> Result<AlgebraFile> {
    let root = Node::root(v);
    let name = match root.opt("name") {
        Some(n) => n.node().str()?.to_string(),
        None => "algebra".to_string(),
    };
    let g = root.field("g")?.node().usize()?;
    let mut basis = Vec::new();
    for b in root.field("basis")?.node().items()? {
        let b = b.node();
        basis.push(BasisElement::new(
            b.field("name")?.node().str()?,
            b.field("p")?.node().usize()?,
            b.field("q")?.node().usize()?,
        ));
    }
    let names: Vec<String> = basis.iter().map(|b| b.name.clone()).collect();
    let n = names.len();

    let mut products = Vec::new();
    if let Some(ps) = root.opt("products") {
        for p in ps.node().items()? {
            let p = p.node();
            let i = index(p.field("left")?.node(), &names)?;
            let j = index(p.field("right")?.node(), &names)?;
            products.push(((i, j), parse_terms(p.field("terms")?.node(), &names)?));
        }
    }

    let mut conj = Matrix::zeros(n, n);
    let mut seen = vec![false; n];
    for c in root.field("conjugation")?.node().items()? {
        let c = c.node();
        let src = c.field("source")?;
        let j = index(src.node(), &names)?;
        if std::mem::replace(&mut seen[j], true) {
            return Err(src.node().err("conjugation listed twice"));
        }
        for (i, x) in parse_terms(c.field("terms")?.node(), &names)?.into_iter().enumerate() {
            conj.set(i, j, x);
        }
    }
    if let Some(j) = seen.iter().position(|s| !s) {
        return Err(root.err(format!("conjugation of `{}` is missing", names[j])));
    }

    let nu = parse_terms(root.field("nu")?.node(), &names)?;
    let mut alg = BigradedAlgebra::new(g, basis, products, conj, nu)?;
    if let Some(ks) = root.opt("kahler_classes") {
        let classes = ks
            .node()
            .items()?
            .iter()
            .map(|k| parse_terms(k.node(), &names))
            .collect::<Result<Vec<_>>>()?;
        alg = alg.with_kahler_classes(classes)?;
    }
    Ok(AlgebraFile { name, algebra: alg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::io::{canonical, parse};

    #[test]
    fn catalog_round_trips() {
        for (name, a) in [("torus", catalog::torus()), ("k3-mock", catalog::k3_mock())] {
            let text = canonical(&algebra_to_json(name, &a));
            let back = algebra_from_json(&parse(&text).unwrap()).unwrap();
            assert_eq!(back.name, name);
            assert_eq!(canonical(&algebra_to_json(&back.name, &back.algebra)), text);
            assert_eq!(back.algebra.kahler_classes(), a.kahler_classes());
        }
    }

    #[test]
    fn unknown_names_are_located() {
        let mut v = algebra_to_json("torus", &catalog::torus());
        v["products"][0]["terms"][0]["basis"] = json!("zz");
        let e = algebra_from_json(&v).unwrap_err().to_string();
        assert!(e.contains("$.products[0].terms[0].basis") && e.contains("zz"), "{e}");
    }
}
