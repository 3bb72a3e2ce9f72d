use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::pair::{PSplit, ReductivePair};
use crate::error::{Error, Result};
use crate::exactlin::{
    is_positive_definite, is_zero_vector, scale_vector, sub_vectors, Matrix, Scalar, Subspace,
    Vector,
};
use crate::report::{Check, Report};

/// Integer eigenvalue labels: `ρ(k_j) v = i·w_j·v` for the `j`-th toral generator.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    K,
    Plus,
    Minus,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::K => "k",
            Role::Plus => "plus",
            Role::Minus => "minus",
        }
    }
}

impl std::str::FromStr for Role {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "k" => Ok(Role::K),
            "plus" => Ok(Role::Plus),
            "minus" => Ok(Role::Minus),
            _ => Err(Error::InvalidModule(format!("unknown generator role `{s}`"))),
        }
    }
}

/// A weight vector of `g₁ ⊗ ℂ` through which the module acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub coords: Vector,
    /// Adjoint weight; zero for toral generators.
    pub weight: Weight,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub dim: usize,
    pub form: Matrix,
}

/// Weight-windowed data for an admissible `(g₁, K₁)`-module.
///
/// Weight spaces live in the box `|w_j| ≤ window`. Actions of the non-toral
/// generators are stored per source weight; missing entries inside the box
/// are zero. Toral generators act by `i·w_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleModule {
    name: String,
    generators: Vec<Generator>,
    window: i64,
    spaces: BTreeMap<Weight, WeightSpace>,
    actions: BTreeMap<(usize, Weight), Matrix>,
}

fn shifted(w: &[i64], a: &[i64]) -> Weight {
    w.iter().zip(a).map(|(x, y)| x + y).collect()
}

impl AdmissibleModule {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        window: i64,
        spaces: BTreeMap<Weight, WeightSpace>,
        actions: BTreeMap<(usize, Weight), Matrix>,
    ) -> Result<Self> {
        let name = name.into();
        let rank = generators.iter().filter(|g| g.role == Role::K).count();
        if window < 0 {
            return Err(Error::InvalidModule("negative window".into()));
        }
        for g in &generators {
            if g.weight.len() != rank {
                return Err(Error::InvalidModule(format!(
                    "generator `{}` has a weight of length {}, expected {rank}",
                    g.name,
                    g.weight.len()
                )));
            }
            if g.role == Role::K && g.weight.iter().any(|&x| x != 0) {
                return Err(Error::InvalidModule(format!(
                    "toral generator `{}` must have weight 0",
                    g.name
                )));
            }
        }
        let m = AdmissibleModule {
            name,
            generators,
            window,
            spaces,
            actions,
        };
        for (w, s) in &m.spaces {
            if w.len() != rank || !m.in_window(w) {
                return Err(Error::InvalidModule(format!("weight {w:?} outside the window")));
            }
            if s.form.rows() != s.dim || s.form.cols() != s.dim {
                return Err(Error::InvalidModule(format!("form at weight {w:?} is not {0}×{0}", s.dim)));
            }
        }
        for ((a, w), mat) in &m.actions {
            let g = m.generators.get(*a).ok_or_else(|| {
                Error::InvalidModule(format!("action references generator {a}"))
            })?;
            if g.role == Role::K {
                return Err(Error::InvalidModule(format!(
                    "toral generator `{}` acts through its weight, not a matrix",
                    g.name
                )));
            }
            let t = shifted(w, &g.weight);
            if w.len() != rank || !m.in_window(w) || !m.in_window(&t) {
                return Err(Error::InvalidModule(format!(
                    "action of `{}` from {w:?} leaves the window",
                    g.name
                )));
            }
            if mat.rows() != m.dim_at(&t) || mat.cols() != m.dim_at(w) {
                return Err(Error::InvalidModule(format!(
                    "action of `{}` from {w:?} has shape {}×{}, expected {}×{}",
                    g.name,
                    mat.rows(),
                    mat.cols(),
                    m.dim_at(&t),
                    m.dim_at(w)
                )));
            }
        }
        Ok(m)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Restriction to a smaller window, dropping weights and actions outside it.
    pub fn truncate(&self, window: i64) -> Result<AdmissibleModule> {
        if window > self.window {
            return Err(Error::InsufficientWindow(format!(
                "module `{}` only has data up to {}",
                self.name, self.window
            )));
        }
        let inside = |w: &[i64]| w.iter().all(|x| x.abs() <= window);
        let spaces = self
            .spaces
            .iter()
            .filter(|(w, _)| inside(w))
            .map(|(w, s)| (w.clone(), s.clone()))
            .collect();
        let actions = self
            .actions
            .iter()
            .filter(|((a, w), _)| inside(w) && inside(&shifted(w, &self.generators[*a].weight)))
            .map(|(k, m)| (k.clone(), m.clone()))
            .collect();
        AdmissibleModule::new(self.name.clone(), self.generators.clone(), window, spaces, actions)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn spaces(&self) -> &BTreeMap<Weight, WeightSpace> {
        &self.spaces
    }

    pub fn actions(&self) -> &BTreeMap<(usize, Weight), Matrix> {
        &self.actions
    }

    /// Number of toral generators.
    pub fn rank(&self) -> usize {
        self.generators.iter().filter(|g| g.role == Role::K).count()
    }

    pub fn in_window(&self, w: &[i64]) -> bool {
        w.iter().all(|x| x.abs() <= self.window)
    }

    pub fn dim_at(&self, w: &[i64]) -> usize {
        self.spaces.get(w).map_or(0, |s| s.dim)
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(|s| s.dim).sum()
    }

    /// Generator indices with the given role, in order.
    pub fn role_indices(&self, role: Role) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&a| self.generators[a].role == role)
            .collect()
    }

    /// Block of `ρ(y_a)` from weight `w` to `w + α_a`.
    pub fn rho(&self, a: usize, w: &[i64]) -> Result<Matrix> {
        let g = &self.generators[a];
        let t = shifted(w, &g.weight);
        if !self.in_window(w) || !self.in_window(&t) {
            return Err(Error::InsufficientWindow(format!(
                "`{}` maps weight {w:?} to {t:?}, outside window {}",
                g.name, self.window
            )));
        }
        let n = self.dim_at(w);
        if g.role == Role::K {
            let j = self.role_indices(Role::K).iter().position(|&b| b == a).unwrap_or(0);
            return Ok(Matrix::identity(n).scale(&(Scalar::i() * Scalar::int(w[j]))));
        }
        Ok(self
            .actions
            .get(&(a, w.to_vec()))
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim_at(&t), n)))
    }

    /// Coordinates of `x ∈ g₁ ⊗ ℂ` in the generator basis.
    pub fn generator_coordinates(&self, x: &[Scalar]) -> Result<Vector> {
        let d = x.len();
        let cols: Vec<Vector> = self.generators.iter().map(|g| g.coords.clone()).collect();
        let m = Matrix::from_columns(d, &cols);
        crate::exactlin::solve(&m, x)?
            .ok_or_else(|| Error::InvalidModule("element outside the generator span".into()))
    }

    /// `ρ(x)` from weight `w`, for `x` a combination of generators of a single
    /// weight `α`.
    pub fn rho_combination(&self, coeffs: &[Scalar], w: &[i64]) -> Result<Option<Matrix>> {
        let mut acc: Option<(Weight, Matrix)> = None;
        for (a, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let term = self.rho(a, w)?.scale(c);
            let wt = self.generators[a].weight.clone();
            acc = Some(match acc {
                None => (wt, term),
                Some((w0, m)) if w0 == wt => (w0, m.add(&term)),
                Some(_) => {
                    return Err(Error::InvalidModule(
                        "combination mixes generator weights".into(),
                    ))
                }
            });
        }
        Ok(acc.map(|(_, m)| m))
    }

    /// Weight spaces of `a ⊕ b` over the same generators.
    pub fn direct_sum(a: &AdmissibleModule, b: &AdmissibleModule) -> Result<AdmissibleModule> {
        if a.generators != b.generators {
            return Err(Error::InvalidModule("direct sum needs equal generators".into()));
        }
        let window = a.window.min(b.window);
        let mut spaces = BTreeMap::new();
        let weights: std::collections::BTreeSet<Weight> =
            a.spaces.keys().chain(b.spaces.keys()).cloned().collect();
        for w in weights.iter().filter(|w| w.iter().all(|x| x.abs() <= window)) {
            let (da, db) = (a.dim_at(w), b.dim_at(w));
            let fa = a.spaces.get(w).map(|s| s.form.clone()).unwrap_or_else(|| Matrix::zeros(0, 0));
            let fb = b.spaces.get(w).map(|s| s.form.clone()).unwrap_or_else(|| Matrix::zeros(0, 0));
            spaces.insert(
                w.clone(),
                WeightSpace {
                    dim: da + db,
                    form: block_diag(&fa, &fb),
                },
            );
        }
        let mut actions = BTreeMap::new();
        for ai in (0..a.generators.len()).filter(|&i| a.generators[i].role != Role::K) {
            for w in &weights {
                let t = shifted(w, &a.generators[ai].weight);
                if !(w.iter().chain(&t).all(|x| x.abs() <= window)) {
                    continue;
                }
                let (ma, mb) = (a.rho(ai, w)?, b.rho(ai, w)?);
                let m = block_diag(&ma, &mb);
                if !m.is_zero() {
                    actions.insert((ai, w.clone()), m);
                }
            }
        }
        AdmissibleModule::new(
            format!("{}+{}", a.name, b.name),
            a.generators.clone(),
            window,
            spaces,
            actions,
        )
    }

    /// External tensor product over the product pair, `a` on the first factor.
    pub fn external_tensor(
        a: &AdmissibleModule,
        b: &AdmissibleModule,
        da: usize,
        db: usize,
    ) -> Result<AdmissibleModule> {
        let (ra, rb) = (a.rank(), b.rank());
        let pad = |g: &Generator, left: bool| -> Generator {
            let zeros = vec![Scalar::zero(); if left { db } else { da }];
            let coords = if left {
                g.coords.iter().cloned().chain(zeros).collect()
            } else {
                zeros.into_iter().chain(g.coords.iter().cloned()).collect()
            };
            let weight = if left {
                g.weight.iter().copied().chain(std::iter::repeat(0).take(rb)).collect()
            } else {
                std::iter::repeat(0).take(ra).chain(g.weight.iter().copied()).collect()
            };
            Generator {
                name: format!("{}{}", g.name, if left { "₁" } else { "₂" }),
                coords,
                weight,
                role: g.role,
            }
        };
        let gens: Vec<Generator> = a
            .generators
            .iter()
            .map(|g| pad(g, true))
            .chain(b.generators.iter().map(|g| pad(g, false)))
            .collect();
        let window = a.window.min(b.window);
        let mut spaces = BTreeMap::new();
        for (wa, sa) in &a.spaces {
            for (wb, sb) in &b.spaces {
                let w: Weight = wa.iter().chain(wb).copied().collect();
                if w.iter().all(|x| x.abs() <= window) {
                    spaces.insert(
                        w,
                        WeightSpace {
                            dim: sa.dim * sb.dim,
                            form: kron(&sa.form, &sb.form),
                        },
                    );
                }
            }
        }
        let na = a.generators.len();
        let mut actions = BTreeMap::new();
        for w in spaces.keys() {
            let (wa, wb) = w.split_at(ra);
            for (gi, g) in gens.iter().enumerate().filter(|(_, g)| g.role != Role::K) {
                let t = shifted(w, &g.weight);
                if !t.iter().all(|x| x.abs() <= window) {
                    continue;
                }
                let m = if gi < na {
                    kron(&a.rho(gi, wa)?, &Matrix::identity(b.dim_at(wb)))
                } else {
                    kron(&Matrix::identity(a.dim_at(wa)), &b.rho(gi - na, wb)?)
                };
                let tdim = spaces.get(&t).map_or(0, |s: &WeightSpace| s.dim);
                if !m.is_zero() && m.rows() == tdim {
                    actions.insert((gi, w.clone()), m);
                }
            }
        }
        AdmissibleModule::new(format!("{}⊠{}", a.name, b.name), gens, window, spaces, actions)
    }
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    m
}

pub(crate) fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        a.get(i / b.rows(), j / b.cols()) * b.get(i % b.rows(), j % b.cols())
    })
}

fn span_of(d: usize, vs: &[&Vector]) -> Subspace {
    Subspace::span(d, vs.iter().copied())
}

/// Structural checks on a module over a pair. Unitarity is reported
/// separately by [`unitarity`].
pub fn validate_module(pr: &ReductivePair, split: &PSplit, m: &AdmissibleModule) -> Report {
    let d = pr.dim();
    let gens = m.generators();
    let mut r = Report::new();

    let shape = gens
        .iter()
        .find(|g| g.coords.len() != d)
        .map(|g| format!("`{}` has {} coordinates, the pair has dimension {d}", g.name, g.coords.len()));
    let shape_ok = shape.is_none();
    r.push(Check::from_failure("generator_shape", shape));
    if !shape_ok {
        return r;
    }
    let all: Vec<&Vector> = gens.iter().map(|g| &g.coords).collect();
    r.push(Check::from_failure(
        "generators_form_basis",
        (gens.len() != d || span_of(d, &all).dim() != d)
            .then(|| format!("{} generators do not form a basis of g₁ ⊗ ℂ", gens.len())),
    ));

    let of_role = |role| -> Vec<&Vector> {
        gens.iter().filter(|g| g.role == role).map(|g| &g.coords).collect()
    };
    let k_span = Subspace::span(
        d,
        pr.k_indices().iter().map(|&i| crate::exactlin::unit_vector(d, i)).collect::<Vec<_>>().iter(),
    );
    let ks = of_role(Role::K);
    let toral = if ks.len() != pr.k_indices().len() || !k_span.contains_subspace(&span_of(d, &ks)) {
        Some("toral generators do not span k₁".to_string())
    } else if ks
        .iter()
        .any(|x| ks.iter().any(|y| !is_zero_vector(&pr.bracket(x, y))))
    {
        Some("k₁ is not abelian".to_string())
    } else {
        None
    };
    r.push(Check::from_failure("k_toral", toral));

    let plus: Vec<&Vector> = split.plus.iter().collect();
    let minus: Vec<&Vector> = split.minus.iter().collect();
    r.push(Check::from_failure(
        "plus_generators_span_p_plus",
        (span_of(d, &of_role(Role::Plus)) != span_of(d, &plus)).then(|| "mismatch".to_string()),
    ));
    r.push(Check::from_failure(
        "minus_generators_span_p_minus",
        (span_of(d, &of_role(Role::Minus)) != span_of(d, &minus)).then(|| "mismatch".to_string()),
    ));

    let weights = gens.iter().find_map(|g| {
        ks.iter().enumerate().find_map(|(j, k)| {
            let lhs = pr.bracket(k, &g.coords);
            let rhs = scale_vector(&(Scalar::i() * Scalar::int(g.weight[j])), &g.coords);
            (!is_zero_vector(&sub_vectors(&lhs, &rhs)))
                .then(|| format!("`{}` is not of the declared weight", g.name))
        })
    });
    r.push(Check::from_failure("adjoint_weights", weights));

    let forms = m
        .spaces()
        .iter()
        .find(|(_, s)| s.dim > 0 && !is_positive_definite(&s.form))
        .map(|(w, _)| format!("form at weight {w:?} is not positive definite"));
    r.push(Check::from_failure("forms_positive_definite", forms));

    r.push(Check::from_failure("bracket_compatibility", bracket_compatibility(pr, m)));
    r
}

fn bracket_compatibility(pr: &ReductivePair, m: &AdmissibleModule) -> Option<String> {
    let gens = m.generators();
    for a in 0..gens.len() {
        for b in 0..gens.len() {
            let c = match m.generator_coordinates(&pr.bracket(&gens[a].coords, &gens[b].coords)) {
                Ok(c) => c,
                Err(e) => return Some(e.to_string()),
            };
            for w in m.spaces().keys() {
                let wa = shifted(w, &gens[a].weight);
                let wb = shifted(w, &gens[b].weight);
                let wab = shifted(&wa, &gens[b].weight);
                if ![&wa, &wb, &wab].iter().all(|x| m.in_window(x)) {
                    continue;
                }
                let lhs = match m.rho_combination(&c, w) {
                    Ok(l) => l.unwrap_or_else(|| Matrix::zeros(m.dim_at(&wab), m.dim_at(w))),
                    Err(e) => return Some(e.to_string()),
                };
                let rhs = (|| -> Result<Matrix> {
                    let ab = m.rho(a, &wb)?.mul(&m.rho(b, w)?);
                    let ba = m.rho(b, &wa)?.mul(&m.rho(a, w)?);
                    Ok(ab.sub(&ba))
                })();
                match rhs {
                    Ok(rhs) if rhs == lhs => {}
                    Ok(_) => {
                        return Some(format!(
                            "ρ([{}, {}]) ≠ [ρ({0}), ρ({1})] at weight {w:?}",
                            gens[a].name, gens[b].name
                        ))
                    }
                    Err(e) => return Some(e.to_string()),
                }
            }
        }
    }
    None
}

/// `ρ(x)` is skew-Hermitian for real `x`: `⟨ρ(y)u, v⟩ = −⟨u, ρ(ȳ)v⟩`.
pub fn unitarity(m: &AdmissibleModule) -> Check {
    let gens = m.generators();
    let failure = (|| -> Result<Option<String>> {
        for (a, g) in gens.iter().enumerate() {
            let cbar = m.generator_coordinates(&crate::exactlin::conj_vector(&g.coords))?;
            for (w, s) in m.spaces() {
                let t = shifted(w, &g.weight);
                if !m.in_window(&t) {
                    continue;
                }
                let r = m.rho(a, w)?;
                let back = m
                    .rho_combination(&cbar, &t)?
                    .unwrap_or_else(|| Matrix::zeros(s.dim, m.dim_at(&t)));
                let gt = m.spaces().get(&t).map(|s| s.form.clone()).unwrap_or_else(|| Matrix::zeros(0, 0));
                let lhs = gt.mul(&r);
                let rhs = back.adjoint().mul(&s.form).scale(&Scalar::int(-1));
                if lhs != rhs {
                    return Ok(Some(format!("`{}` is not skew-Hermitian at weight {w:?}", g.name)));
                }
            }
        }
        Ok(None)
    })();
    Check::from_failure(
        "unitarity",
        match failure {
            Ok(f) => f,
            Err(e) => Some(e.to_string()),
        },
    )
}

/// `W` (toral), `E₊ = H + iX` and `E₋ = H − iX` for `sl₂(ℝ)`.
pub fn sl2_generators() -> Vec<Generator> {
    let s = |v: [Scalar; 3]| v.to_vec();
    vec![
        Generator {
            name: "W".into(),
            coords: s([Scalar::int(1), Scalar::int(0), Scalar::int(0)]),
            weight: vec![0],
            role: Role::K,
        },
        Generator {
            name: "E+".into(),
            coords: s([Scalar::int(0), Scalar::int(1), Scalar::i()]),
            weight: vec![2],
            role: Role::Plus,
        },
        Generator {
            name: "E-".into(),
            coords: s([Scalar::int(0), Scalar::int(1), -Scalar::i()]),
            weight: vec![-2],
            role: Role::Minus,
        },
    ]
}

fn one_dim(form: Scalar) -> WeightSpace {
    WeightSpace {
        dim: 1,
        form: Matrix::diagonal(&[form]),
    }
}

fn scalar_1x1(c: Scalar) -> Matrix {
    Matrix::diagonal(&[c])
}

pub fn trivial_module(generators: Vec<Generator>, window: i64) -> Result<AdmissibleModule> {
    let rank = generators.iter().filter(|g| g.role == Role::K).count();
    let spaces = BTreeMap::from([(vec![0; rank], one_dim(Scalar::int(1)))]);
    AdmissibleModule::new("trivial", generators, window, spaces, BTreeMap::new())
}

/// Holomorphic (`sign = +1`) or antiholomorphic (`sign = −1`) discrete series
/// of `sl₂(ℝ)` with extreme weight `±λ`, truncated to `|w| ≤ window`.
///
/// With `v_k` of weight `±(λ + 2k)`, the raising operator sends `v_k` to
/// `2v_{k+1}`, the lowering one sends `v_k` to `−2k(λ+k−1)v_{k−1}`, and
/// `|v_{k+1}|² = (k+1)(λ+k)|v_k|²`.
pub fn discrete_series(lambda: i64, sign: i64, window: i64) -> Result<AdmissibleModule> {
    if lambda < 1 {
        return Err(Error::InvalidParameter(format!("λ = {lambda} must be positive")));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidParameter("sign must be ±1".into()));
    }
    let (up, down) = if sign == 1 { (1, 2) } else { (2, 1) };
    let mut spaces = BTreeMap::new();
    let mut actions = BTreeMap::new();
    let mut norm = Scalar::int(1);
    let mut k = 0;
    while lambda + 2 * k <= window {
        let w = sign * (lambda + 2 * k);
        spaces.insert(vec![w], one_dim(norm.clone()));
        if lambda + 2 * k + 2 <= window {
            actions.insert((up, vec![w]), scalar_1x1(Scalar::int(2)));
        }
        if k > 0 {
            actions.insert((down, vec![w]), scalar_1x1(Scalar::int(-2 * k * (lambda + k - 1))));
        }
        norm = norm * Scalar::int((k + 1) * (lambda + k));
        k += 1;
    }
    let name = format!("D{}({lambda})", if sign == 1 { "+" } else { "-" });
    AdmissibleModule::new(name, sl2_generators(), window, spaces, actions)
}

/// The adjoint representation of `sl₂`, basis `E₋, W, E₊` by weight.
pub fn sl2_adjoint(window: i64) -> Result<AdmissibleModule> {
    if window < 2 {
        return Err(Error::InsufficientWindow(format!(
            "the adjoint module needs window ≥ 2, got {window}"
        )));
    }
    let spaces = BTreeMap::from([
        (vec![-2], one_dim(Scalar::int(1))),
        (vec![0], one_dim(Scalar::int(1))),
        (vec![2], one_dim(Scalar::int(1))),
    ]);
    let i = Scalar::i();
    let c = |k: i64| scalar_1x1(i.clone() * Scalar::int(k));
    // [E₊, W] = −2iE₊, [E₊, E₋] = −4iW, [E₋, W] = 2iE₋, [E₋, E₊] = 4iW
    let actions = BTreeMap::from([
        ((1, vec![0]), c(-2)),
        ((1, vec![-2]), c(-4)),
        ((2, vec![0]), c(2)),
        ((2, vec![2]), c(4)),
    ]);
    AdmissibleModule::new("adjoint", sl2_generators(), window, spaces, actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkcoh::pair::{sl2_pair, sl2_product_pair, split_p};

    fn check(m: &AdmissibleModule) -> Report {
        let pr = sl2_pair();
        validate_module(&pr, &split_p(&pr).unwrap(), m)
    }

    #[test]
    fn catalog_modules_are_valid() {
        for m in [
            trivial_module(sl2_generators(), 6).unwrap(),
            discrete_series(2, 1, 6).unwrap(),
            discrete_series(2, -1, 6).unwrap(),
            discrete_series(5, 1, 11).unwrap(),
            sl2_adjoint(4).unwrap(),
        ] {
            let r = check(&m);
            assert!(r.passed(), "{}: {:?}", m.name(), r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn discrete_series_is_unitary_adjoint_is_not() {
        assert!(unitarity(&discrete_series(2, 1, 8).unwrap()).passed);
        assert!(unitarity(&discrete_series(3, -1, 9).unwrap()).passed);
        assert!(unitarity(&trivial_module(sl2_generators(), 2).unwrap()).passed);
        assert!(!unitarity(&sl2_adjoint(2).unwrap()).passed);
    }

    #[test]
    fn broken_action_fails_bracket_check() {
        let m = discrete_series(2, 1, 6).unwrap();
        let mut actions = m.actions().clone();
        actions.insert((1, vec![2]), scalar_1x1(Scalar::int(3)));
        let bad = AdmissibleModule::new("bad", sl2_generators(), 6, m.spaces().clone(), actions)
            .unwrap();
        assert!(!check(&bad).get("bracket_compatibility").unwrap().passed);
    }

    #[test]
    fn window_exit_is_an_error() {
        let m = discrete_series(2, 1, 4).unwrap();
        assert!(matches!(m.rho(1, &[4]), Err(Error::InsufficientWindow(_))));
        assert_eq!(m.rho(2, &[2]).unwrap(), Matrix::zeros(0, 1));
    }

    #[test]
    fn tensor_over_product_pair() {
        let pr = sl2_product_pair();
        let split = split_p(&pr).unwrap();
        let m = AdmissibleModule::external_tensor(
            &discrete_series(2, 1, 6).unwrap(),
            &sl2_adjoint(6).unwrap(),
            3,
            3,
        )
        .unwrap();
        let r = validate_module(&pr, &split, &m);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(m.total_dim(), 3 * 3);
    }

    #[test]
    fn direct_sum_is_valid() {
        let m = AdmissibleModule::direct_sum(
            &trivial_module(sl2_generators(), 4).unwrap(),
            &sl2_adjoint(4).unwrap(),
        )
        .unwrap();
        assert!(check(&m).passed());
        assert_eq!(m.dim_at(&[0]), 2);
    }

    #[test]
    fn truncation_matches_direct_construction() {
        let big = discrete_series(2, 1, 10).unwrap();
        assert_eq!(big.truncate(6).unwrap(), discrete_series(2, 1, 6).unwrap());
        assert_eq!(sl2_adjoint(8).unwrap().truncate(4).unwrap(), sl2_adjoint(4).unwrap());
        assert!(matches!(big.truncate(12), Err(Error::InsufficientWindow(_))));
    }
}
