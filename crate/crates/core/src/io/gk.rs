use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{matrix_json, scalar_json, vector_json, Node};
use crate::assembler::SpectrumEntry;
use crate::error::Result;
use crate::gkcoh::{AdmissibleModule, Generator, ReductivePair, Role, WeightSpace};

pub fn pair_to_json(pr: &ReductivePair) -> Value {
    let names = pr.names();
    let pick = |idx: &[usize]| idx.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
    let constants: Vec<Value> = pr
        .constants()
        .into_iter()
        .map(|(i, j, k, c)| {
            let mut v = scalar_json(&c);
            v["i"] = json!(i);
            v["j"] = json!(j);
            v["k"] = json!(k);
            v
        })
        .collect();
    json!({
        "name": pr.name(),
        "basis": names,
        "k": pick(pr.k_indices()),
        "p": pick(pr.p_indices()),
        "structure_constants": constants,
        "form": matrix_json(pr.form()),
        "z0": vector_json(pr.z0()),
    })
}

fn indices(node: &Node<'_>, names: &[String]) -> Result<Vec<usize>> {
    node.items()?
        .iter()
        .map(|o| {
            let n = o.node();
            let s = n.str()?;
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| n.err(format!("unknown basis element `{s}`")))
        })
        .collect()
}

pub fn pair_from_json(v: &Value) -> Result<ReductivePair> {
    let root = Node::root(v);
    let name = root.field("name")?.node().str()?.to_string();
    let names: Vec<String> = root
        .field("basis")?
        .node()
        .items()?
        .iter()
        .map(|o| o.node().str().map(str::to_string))
        .collect::<Result<_>>()?;
    let d = names.len();
    let k = indices(root.field("k")?.node(), &names)?;
    let p = indices(root.field("p")?.node(), &names)?;
    let mut constants = Vec::new();
    for c in root.field("structure_constants")?.node().items()? {
        let c = c.node();
        let idx = |key: &str| -> Result<usize> {
            let f = c.field(key)?;
            let i = f.node().usize()?;
            if i >= d {
                return Err(f.node().err(format!("index {i} outside dimension {d}")));
            }
            Ok(i)
        };
        let val = c.scalar()?;
        if !val.is_real() {
            return Err(c.err("structure constants are real"));
        }
        constants.push((idx("i")?, idx("j")?, idx("k")?, val));
    }
    let form = root.field("form")?.node().matrix(d, d)?;
    let z0 = root.field("z0")?.node().vector()?;
    ReductivePair::new(name, names, constants, k, p, form, z0)
}

fn weight_json(w: &[i64]) -> Value {
    json!(w)
}

pub fn module_to_json(m: &AdmissibleModule) -> Value {
    let gens = m.generators();
    let generators: Vec<Value> = gens
        .iter()
        .map(|g| {
            json!({
                "name": g.name,
                "coords": vector_json(&g.coords),
                "weight": weight_json(&g.weight),
                "role": g.role.as_str(),
            })
        })
        .collect();
    let spaces: Vec<Value> = m
        .spaces()
        .iter()
        .map(|(w, s)| {
            let actions: Vec<Value> = m
                .actions()
                .iter()
                .filter(|((_, from), _)| from == w)
                .map(|((a, from), mat)| {
                    json!({
                        "generator": gens[*a].name,
                        "from_weight": weight_json(from),
                        "matrix": matrix_json(mat),
                    })
                })
                .collect();
            json!({
                "weight": weight_json(w),
                "dim": s.dim,
                "form": matrix_json(&s.form),
                "actions": actions,
            })
        })
        .collect();
    json!({
        "name": m.name(),
        "window": m.window(),
        "generators": generators,
        "weight_spaces": spaces,
    })
}

pub fn module_from_json(v: &Value) -> Result<AdmissibleModule> {
    let root = Node::root(v);
    let name = root.field("name")?.node().str()?.to_string();
    let window = root.field("window")?.node().i64()?;
    let mut gens = Vec::new();
    for g in root.field("generators")?.node().items()? {
        let g = g.node();
        let role = g.field("role")?;
        gens.push(Generator {
            name: g.field("name")?.node().str()?.to_string(),
            coords: g.field("coords")?.node().vector()?,
            weight: g.field("weight")?.node().weight()?,
            role: role.node().str()?.parse().map_err(|e| role.node().err(e))?,
        });
    }
    let items = root.field("weight_spaces")?.node().items()?;
    let mut spaces = BTreeMap::new();
    for s in &items {
        let s = s.node();
        let w = s.field("weight")?.node().weight()?;
        let dim = s.field("dim")?.node().usize()?;
        let form = s.field("form")?.node().matrix(dim, dim)?;
        if spaces.insert(w.clone(), WeightSpace { dim, form }).is_some() {
            return Err(s.err(format!("weight {w:?} listed twice")));
        }
    }
    let mut actions = BTreeMap::new();
    for s in &items {
        let s = s.node();
        let w = s.field("weight")?.node().weight()?;
        let Some(list) = s.opt("actions") else {
            continue;
        };
        for a in list.node().items()? {
            let a = a.node();
            let gf = a.field("generator")?;
            let gname = gf.node().str()?;
            let gi = gens
                .iter()
                .position(|g| g.name == gname)
                .ok_or_else(|| gf.node().err(format!("unknown generator `{gname}`")))?;
            if gens[gi].role == Role::K {
                return Err(gf.node().err("toral generators act through their weight"));
            }
            let from = match a.opt("from_weight") {
                Some(f) => f.node().weight()?,
                None => w.clone(),
            };
            if from != w {
                return Err(a.err("from_weight differs from the enclosing weight space"));
            }
            let target: Vec<i64> = w.iter().zip(&gens[gi].weight).map(|(x, y)| x + y).collect();
            let rows = spaces.get(&target).map_or(0, |s: &WeightSpace| s.dim);
            let cols = spaces[&w].dim;
            let mat = a.field("matrix")?.node().matrix(rows, cols)?;
            actions.insert((gi, w.clone()), mat);
        }
    }
    AdmissibleModule::new(name, gens, window, spaces, actions)
}

pub fn spectrum_to_json(entries: &[SpectrumEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| json!({"module": e.module, "multiplicity": e.multiplicity, "k2_inv_dim": e.k2_inv_dim}))
            .collect(),
    )
}

pub fn spectrum_from_json(v: &Value) -> Result<Vec<SpectrumEntry>> {
    Node::root(v)
        .items()?
        .iter()
        .map(|o| {
            let n = o.node();
            Ok(SpectrumEntry {
                module: n.field("module")?.node().str()?.to_string(),
                multiplicity: n.field("multiplicity")?.node().u64()?,
                k2_inv_dim: n.field("k2_inv_dim")?.node().u64()?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkcoh::{discrete_series, sl2_adjoint, sl2_pair, sl2_product_pair};
    use crate::io::{canonical, parse};

    #[test]
    fn pair_round_trip() {
        for pr in [sl2_pair(), sl2_product_pair()] {
            let text = canonical(&pair_to_json(&pr));
            let back = pair_from_json(&parse(&text).unwrap()).unwrap();
            assert_eq!(back, pr);
            assert_eq!(canonical(&pair_to_json(&back)), text);
        }
    }

    #[test]
    fn module_round_trip() {
        for m in [discrete_series(3, 1, 9).unwrap(), sl2_adjoint(4).unwrap()] {
            let text = canonical(&module_to_json(&m));
            let back = module_from_json(&parse(&text).unwrap()).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn spectrum_round_trip() {
        let s = vec![SpectrumEntry::new("trivial", 1, 1), SpectrumEntry::new("D+", 2, 3)];
        assert_eq!(spectrum_from_json(&spectrum_to_json(&s)).unwrap(), s);
        let bad = json!([{"module": "x", "multiplicity": -1, "k2_inv_dim": 1}]);
        let e = spectrum_from_json(&bad).unwrap_err().to_string();
        assert!(e.contains("$[0].multiplicity"), "{e}");
    }
}
