use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::module::{AdmissibleModule, Role, Weight};
use super::pair::{PSplit, ReductivePair};
use crate::error::{Error, Result};
use crate::exactlin::{
    is_zero_vector, kernel, quotient_cohomology, zero_vector, Matrix, Scalar, Subspace, Vector,
};
use crate::report::{Check, Report};

/// Cochain values are laid out weight space after weight space.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    blocks: Vec<(Weight, usize, usize)>,
    offsets: HashMap<Weight, usize>,
    total: usize,
}

impl Layout {
    pub(crate) fn new(m: &AdmissibleModule) -> Self {
        let mut blocks = Vec::new();
        let mut offsets = HashMap::new();
        let mut total = 0;
        for (w, s) in m.spaces().iter().filter(|(_, s)| s.dim > 0) {
            blocks.push((w.clone(), total, s.dim));
            offsets.insert(w.clone(), total);
            total += s.dim;
        }
        Layout {
            blocks,
            offsets,
            total,
        }
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }

    pub(crate) fn blocks(&self) -> &[(Weight, usize, usize)] {
        &self.blocks
    }

    /// Gram matrix of the stored forms on the whole window.
    pub(crate) fn gram(&self, m: &AdmissibleModule) -> Matrix {
        let mut g = Matrix::zeros(self.total, self.total);
        for (w, off, dim) in &self.blocks {
            let f = &m.spaces()[w].form;
            for i in 0..*dim {
                for j in 0..*dim {
                    g.set(off + i, off + j, f.get(i, j).clone());
                }
            }
        }
        g
    }

    /// `ρ(y_a) v` for `v` spread over the window; errors only if a nonzero
    /// component would leave the window.
    pub(crate) fn apply(&self, m: &AdmissibleModule, a: usize, v: &[Scalar]) -> Result<Vector> {
        let mut out = zero_vector(self.total);
        for (w, off, dim) in &self.blocks {
            let comp = &v[*off..off + dim];
            if is_zero_vector(comp) {
                continue;
            }
            let block = m.rho(a, w)?;
            if block.rows() == 0 {
                continue;
            }
            let t: Weight = w.iter().zip(&m.generators()[a].weight).map(|(x, y)| x + y).collect();
            let toff = self.offsets[&t];
            for (i, x) in block.apply(comp).into_iter().enumerate() {
                out[toff + i] += x;
            }
        }
        Ok(out)
    }
}

/// Basis of `p₁ ⊗ ℂ` used for exterior monomials: the `plus` generators, then
/// the `minus` generators.
#[derive(Clone, Debug)]
pub(crate) struct PBasis {
    gens: Vec<usize>,
    roles: Vec<Role>,
    weights: Vec<Weight>,
    /// `ad(k_j)` on the basis, one matrix per toral generator.
    ad_k: Vec<Matrix>,
    d: usize,
}

impl PBasis {
    pub(crate) fn new(pr: &ReductivePair, m: &AdmissibleModule) -> Result<Self> {
        let plus = m.role_indices(Role::Plus);
        let minus = m.role_indices(Role::Minus);
        if plus.len() != minus.len() {
            return Err(Error::InvalidModule("p₁⁺ and p₁⁻ generator counts differ".into()));
        }
        let gens: Vec<usize> = plus.iter().chain(&minus).copied().collect();
        let gd = m.generators();
        let mut ad_k = Vec::new();
        for &kj in &m.role_indices(Role::K) {
            let mut mat = Matrix::zeros(gens.len(), gens.len());
            for (c, &a) in gens.iter().enumerate() {
                let coords = m.generator_coordinates(&pr.bracket(&gd[kj].coords, &gd[a].coords))?;
                for (r, &b) in gens.iter().enumerate() {
                    mat.set(r, c, coords[b].clone());
                }
                let outside = (0..gd.len()).any(|b| !gens.contains(&b) && !coords[b].is_zero());
                if outside {
                    return Err(Error::InvalidPair("[k₁, p₁] leaves p₁".into()));
                }
            }
            ad_k.push(mat);
        }
        Ok(PBasis {
            roles: gens.iter().map(|&a| gd[a].role).collect(),
            weights: gens.iter().map(|&a| gd[a].weight.clone()).collect(),
            gens,
            ad_k,
            d: plus.len(),
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.gens.len()
    }

    pub(crate) fn half(&self) -> usize {
        self.d
    }

    pub(crate) fn generator(&self, pos: usize) -> usize {
        self.gens[pos]
    }

    pub(crate) fn weight_of(&self, mono: &[usize], rank: usize) -> Weight {
        let mut w = vec![0; rank];
        for &i in mono {
            for (x, y) in w.iter_mut().zip(&self.weights[i]) {
                *x += y;
            }
        }
        w
    }
}

/// Sorts `list` and returns the permutation sign, or `None` on a repeat.
pub(crate) fn normalize(mut list: Vec<usize>) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1;
    for i in 1..list.len() {
        let mut j = i;
        while j > 0 && list[j - 1] > list[j] {
            list.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if list.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, list))
}

pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// `Hom_{K₁}(span(monomials), V)` as a subspace of all maps.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    width: usize,
    basis: Subspace,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub(crate) fn index_of(&self, mono: &[usize]) -> Option<usize> {
        self.index.get(mono).copied()
    }

    pub(crate) fn width(&self) -> usize {
        self.width
    }

    pub(crate) fn value<'a>(&self, f: &'a [Scalar], mono: usize) -> &'a [Scalar] {
        &f[mono * self.width..(mono + 1) * self.width]
    }

    fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.basis.ambient(), self.basis.basis())
    }
}

pub(crate) struct Builder<'a> {
    pub(crate) m: &'a AdmissibleModule,
    pub(crate) layout: Layout,
    pub(crate) pb: PBasis,
}

impl<'a> Builder<'a> {
    pub(crate) fn new(pr: &ReductivePair, split: &PSplit, m: &'a AdmissibleModule) -> Result<Self> {
        let pb = PBasis::new(pr, m)?;
        if pb.half() != split.plus.len() {
            return Err(Error::InvalidModule(format!(
                "module has {} holomorphic generators, p₁⁺ has dimension {}",
                pb.half(),
                split.plus.len()
            )));
        }
        let rank = m.rank();
        let all: Vec<usize> = (0..pb.len()).collect();
        for n in 0..=pb.len() {
            for mono in combinations(&all, n) {
                let w = pb.weight_of(&mono, rank);
                if !m.in_window(&w) {
                    return Err(Error::InsufficientWindow(format!(
                        "Λp₁ has weight {w:?}, outside window {}",
                        m.window()
                    )));
                }
            }
        }
        Ok(Builder {
            m,
            layout: Layout::new(m),
            pb,
        })
    }

    /// Solves `ρ(k_j) f(μ) = f(ad(k_j) μ)` for all toral `k_j` and monomials `μ`.
    pub(crate) fn space(&self, monomials: Vec<Vec<usize>>) -> Result<CochainSpace> {
        let n = self.layout.total();
        let count = monomials.len();
        let index: HashMap<Vec<usize>, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let k_gens = self.m.role_indices(Role::K);
        let mut rows: Vec<Vector> = Vec::new();
        for (j, &kj) in k_gens.iter().enumerate() {
            // ad(k_j) on monomials, column μ holds the coefficients of ad(k_j)μ.
            let mut ad = Matrix::zeros(count, count);
            for (mi, mono) in monomials.iter().enumerate() {
                for t in 0..mono.len() {
                    for c in 0..self.pb.len() {
                        let coef = self.pb.ad_k[j].get(c, mono[t]);
                        if coef.is_zero() {
                            continue;
                        }
                        let mut list = mono.clone();
                        list[t] = c;
                        if let Some((s, nu)) = normalize(list) {
                            let ni = *index.get(&nu).ok_or_else(|| {
                                Error::InvalidPair("ad k₁ does not preserve the bidegree".into())
                            })?;
                            *ad.entry_mut(ni, mi) += Scalar::int(s) * coef;
                        }
                    }
                }
            }
            for mi in 0..count {
                for r in 0..n {
                    let mut row = zero_vector(count * n);
                    for (w, off, dim) in self.layout.blocks() {
                        if (*off..off + dim).contains(&r) {
                            let rho = self.m.rho(kj, w)?;
                            for c in 0..*dim {
                                row[mi * n + off + c] += rho.get(r - off, c).clone();
                            }
                        }
                    }
                    for ni in 0..count {
                        let a = ad.get(ni, mi);
                        if !a.is_zero() {
                            row[ni * n + r] -= a.clone();
                        }
                    }
                    if !is_zero_vector(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let basis = if rows.is_empty() {
            Subspace::full(count * n)
        } else {
            kernel(&Matrix::from_rows(rows)?)
        };
        Ok(CochainSpace {
            monomials,
            index,
            width: n,
            basis,
        })
    }

    /// `(df)(μ') = Σ_k (−1)^k ρ(x_k) f(μ' ∖ x_k)`, restricted to factors of
    /// the given role when `only` is set.
    pub(crate) fn differential(
        &self,
        src: &CochainSpace,
        tgt: &CochainSpace,
        only: Option<Role>,
    ) -> Result<Matrix> {
        let n = self.layout.total();
        let cols: Vec<Vector> = src
            .basis
            .basis()
            .par_iter()
            .map(|f| -> Result<Vector> {
                let mut out = zero_vector(tgt.monomials.len() * n);
                for (ti, mono) in tgt.monomials.iter().enumerate() {
                    for k in 0..mono.len() {
                        if only.is_some_and(|r| self.pb.roles[mono[k]] != r) {
                            continue;
                        }
                        let mut rest = mono.clone();
                        let pos = rest.remove(k);
                        let Some(&si) = src.index.get(&rest) else {
                            continue;
                        };
                        let val = src.value(f, si);
                        if is_zero_vector(val) {
                            continue;
                        }
                        let term = self.layout.apply(self.m, self.pb.generator(pos), val)?;
                        let sign = Scalar::sign(k as i64);
                        for (o, t) in out[ti * n..(ti + 1) * n].iter_mut().zip(term) {
                            *o += &sign * &t;
                        }
                    }
                }
                tgt.basis.coordinates(&out).ok_or_else(|| {
                    Error::Internal("differential leaves the invariant cochains".into())
                })
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(tgt.dim(), &cols))
    }

    fn bidegree_monomials(&self, p: usize, q: usize) -> Vec<Vec<usize>> {
        let d = self.pb.half();
        let plus: Vec<usize> = (0..d).collect();
        let minus: Vec<usize> = (d..2 * d).collect();
        let mut out = Vec::new();
        for a in combinations(&plus, p) {
            for b in combinations(&minus, q) {
                out.push(a.iter().chain(&b).copied().collect());
            }
        }
        out
    }
}

/// Dimensions `h^{p,q}` for `0 ≤ p, q ≤ g`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HodgeNumbers {
    pub g: usize,
    pub h: Vec<Vec<usize>>,
}

impl HodgeNumbers {
    pub fn zero(g: usize) -> Self {
        HodgeNumbers {
            g,
            h: vec![vec![0; g + 1]; g + 1],
        }
    }

    pub fn get(&self, p: usize, q: usize) -> usize {
        self.h.get(p).and_then(|r| r.get(q)).copied().unwrap_or(0)
    }

    pub fn betti(&self, n: usize) -> usize {
        (0..=n).map(|p| self.get(p, n - p)).sum()
    }

    pub fn bettis(&self) -> Vec<usize> {
        (0..=2 * self.g).map(|n| self.betti(n)).collect()
    }
}

/// The bigraded complex `C^{p,q} = Hom_{K₁}(Λ^p p₁⁺ ⊗ Λ^q p₁⁻, V)` with `d = d' + d''`.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    pub module: String,
    pub g: usize,
    spaces: BTreeMap<(usize, usize), CochainSpace>,
    /// Coordinates in `g₁ ⊗ ℂ` of the monomial factors.
    factors: Vec<Vector>,
    probed: BTreeSet<Weight>,
    /// `d'`: `C^{p,q} → C^{p+1,q}`.
    d_plus: BTreeMap<(usize, usize), Matrix>,
    /// `d''`: `C^{p,q} → C^{p,q+1}`.
    d_minus: BTreeMap<(usize, usize), Matrix>,
}

/// `C^n = Hom_{K₁}(Λ^n p₁, V)` built from unsplit monomials.
#[derive(Clone, Debug)]
pub struct UngradedComplex {
    spaces: Vec<CochainSpace>,
    d: Vec<Matrix>,
    gram: Vec<Matrix>,
}

pub fn build_complex(
    pr: &ReductivePair,
    split: &PSplit,
    m: &AdmissibleModule,
) -> Result<RelativeComplex> {
    let b = Builder::new(pr, split, m)?;
    let g = b.pb.half();
    let keys: Vec<(usize, usize)> = (0..=g).flat_map(|p| (0..=g).map(move |q| (p, q))).collect();
    let spaces: BTreeMap<_, _> = keys
        .par_iter()
        .map(|&(p, q)| Ok(((p, q), b.space(b.bidegree_monomials(p, q))?)))
        .collect::<Result<_>>()?;
    let mut d_plus = BTreeMap::new();
    let mut d_minus = BTreeMap::new();
    for &(p, q) in &keys {
        if p < g {
            let m = b.differential(&spaces[&(p, q)], &spaces[&(p + 1, q)], Some(Role::Plus))?;
            d_plus.insert((p, q), m);
        }
        if q < g {
            let m = b.differential(&spaces[&(p, q)], &spaces[&(p, q + 1)], Some(Role::Minus))?;
            d_minus.insert((p, q), m);
        }
    }
    let probed = spaces
        .values()
        .flat_map(|s| s.monomials.iter().map(|mono| b.pb.weight_of(mono, m.rank())))
        .collect();
    let factors = (0..b.pb.len())
        .map(|i| m.generators()[b.pb.generator(i)].coords.clone())
        .collect();
    Ok(RelativeComplex {
        module: m.name().to_string(),
        g,
        spaces,
        factors,
        probed,
        d_plus,
        d_minus,
    })
}

pub fn build_ungraded(
    pr: &ReductivePair,
    split: &PSplit,
    m: &AdmissibleModule,
) -> Result<UngradedComplex> {
    let b = Builder::new(pr, split, m)?;
    let all: Vec<usize> = (0..b.pb.len()).collect();
    let spaces: Vec<CochainSpace> = (0..=all.len())
        .into_par_iter()
        .map(|n| b.space(combinations(&all, n)))
        .collect::<Result<_>>()?;
    let d = spaces
        .windows(2)
        .map(|w| b.differential(&w[0], &w[1], None))
        .collect::<Result<Vec<_>>>()?;
    let vg = b.layout.gram(m);
    let gram = spaces
        .iter()
        .map(|s| {
            let bm = s.basis_matrix();
            let big = block_repeat(&vg, s.monomials.len());
            bm.adjoint().mul(&big).mul(&bm)
        })
        .collect();
    Ok(UngradedComplex { spaces, d, gram })
}

fn block_repeat(a: &Matrix, times: usize) -> Matrix {
    super::module::kron(&Matrix::identity(times), a)
}

fn zero_map(rows: usize, cols: usize) -> Matrix {
    Matrix::zeros(rows, cols)
}

impl RelativeComplex {
    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.spaces.get(&(p, q)).map_or(0, |s| s.dim())
    }

    /// Whether some cochain takes values in weight `w`.
    pub fn probes_weight(&self, w: &[i64]) -> bool {
        self.probed.contains(w)
    }

    pub(crate) fn factors(&self) -> &[Vector] {
        &self.factors
    }

    pub fn space(&self, p: usize, q: usize) -> Option<&CochainSpace> {
        self.spaces.get(&(p, q))
    }

    pub fn dims(&self) -> HodgeNumbers {
        let mut h = HodgeNumbers::zero(self.g);
        for (&(p, q), s) in &self.spaces {
            h.h[p][q] = s.dim();
        }
        h
    }

    pub fn total_dims(&self) -> Vec<usize> {
        self.dims().bettis()
    }

    /// `d'` out of `C^{p,q}`, or a map to the zero space at the edge.
    pub fn d_plus(&self, p: usize, q: usize) -> Matrix {
        self.d_plus
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| zero_map(0, self.dim(p, q)))
    }

    pub fn d_minus(&self, p: usize, q: usize) -> Matrix {
        self.d_minus
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| zero_map(0, self.dim(p, q)))
    }

    /// `d''` into `C^{p,q}`.
    fn d_minus_in(&self, p: usize, q: usize) -> Matrix {
        if q == 0 {
            zero_map(self.dim(p, q), 0)
        } else {
            self.d_minus(p, q - 1)
        }
    }

    pub fn differential_vanishes(&self) -> bool {
        self.d_plus.values().chain(self.d_minus.values()).all(Matrix::is_zero)
    }

    /// `d'² = 0`, `d''² = 0` and `d'd'' + d''d' = 0`.
    pub fn checks(&self) -> Report {
        let g = self.g;
        let mut r = Report::new();
        let mut pp = None;
        let mut mm = None;
        let mut mixed = None;
        for p in 0..=g {
            for q in 0..=g {
                if p + 2 <= g && !self.d_plus(p + 1, q).mul(&self.d_plus(p, q)).is_zero() {
                    pp.get_or_insert(format!("at ({p},{q})"));
                }
                if q + 2 <= g && !self.d_minus(p, q + 1).mul(&self.d_minus(p, q)).is_zero() {
                    mm.get_or_insert(format!("at ({p},{q})"));
                }
                if p < g && q < g {
                    let a = self.d_minus(p + 1, q).mul(&self.d_plus(p, q));
                    let b = self.d_plus(p, q + 1).mul(&self.d_minus(p, q));
                    if !a.add(&b).is_zero() {
                        mixed.get_or_insert(format!("at ({p},{q})"));
                    }
                }
            }
        }
        r.push(Check::from_failure("d_plus_squared_zero", pp));
        r.push(Check::from_failure("d_minus_squared_zero", mm));
        r.push(Check::from_failure("d_plus_d_minus_anticommute", mixed));
        r
    }
}

/// `h^{p,q}` as `d''`-cohomology of `C^{p,•}`.
pub fn cohomology_bigraded(c: &RelativeComplex) -> Result<HodgeNumbers> {
    let mut h = HodgeNumbers::zero(c.g);
    for p in 0..=c.g {
        for q in 0..=c.g {
            let d_in = c.d_minus_in(p, q);
            let d_out = c.d_minus(p, q);
            h.h[p][q] = quotient_cohomology(&d_in, &d_out)?.dim();
        }
    }
    Ok(h)
}

impl UngradedComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(CochainSpace::dim).collect()
    }

    fn d_out(&self, n: usize) -> Matrix {
        self.d
            .get(n)
            .cloned()
            .unwrap_or_else(|| zero_map(0, self.spaces[n].dim()))
    }

    fn d_in(&self, n: usize) -> Matrix {
        if n == 0 {
            zero_map(self.spaces[0].dim(), 0)
        } else {
            self.d[n - 1].clone()
        }
    }

    pub fn d_squared_zero(&self) -> bool {
        self.d.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    pub fn differential_vanishes(&self) -> bool {
        self.d.iter().all(Matrix::is_zero)
    }

    pub fn cohomology(&self) -> Result<Vec<usize>> {
        (0..self.spaces.len())
            .map(|n| Ok(quotient_cohomology(&self.d_in(n), &self.d_out(n))?.dim()))
            .collect()
    }

    /// `dim ker Δ_n` with `Δ = dd* + d*d` and `d* = M_n⁻¹ d^H M_{n+1}`.
    pub fn harmonic(&self) -> Result<Vec<usize>> {
        let star = |n: usize| -> Result<Matrix> {
            // adjoint of d_n: C^n → C^{n+1}
            let mn = self.gram[n]
                .inverse()
                .ok_or_else(|| Error::Internal("singular cochain Gram matrix".into()))?;
            Ok(mn.mul(&self.d[n].adjoint()).mul(&self.gram[n + 1]))
        };
        let top = self.spaces.len() - 1;
        (0..=top)
            .map(|n| {
                let dim = self.spaces[n].dim();
                let mut lap = Matrix::zeros(dim, dim);
                if n < top {
                    lap = lap.add(&star(n)?.mul(&self.d[n]));
                }
                if n > 0 {
                    lap = lap.add(&self.d[n - 1].mul(&star(n - 1)?));
                }
                Ok(dim - lap.rank())
            })
            .collect()
    }
}

/// Cross-checks between the bigraded and the ungraded complexes.
pub fn complex_checks(c: &RelativeComplex, u: &UngradedComplex) -> Result<Report> {
    let mut r = c.checks();
    r.push(Check::from_failure(
        "d_squared_zero",
        (!u.d_squared_zero()).then(|| "d² ≠ 0 on Hom_K(Λp₁, V)".to_string()),
    ));
    let graded = c.total_dims();
    let ungraded = u.dims();
    r.push(Check::from_failure(
        "cochain_totals_match",
        (graded != ungraded).then(|| format!("bigraded {graded:?} vs ungraded {ungraded:?}")),
    ));
    let h = cohomology_bigraded(c)?.bettis();
    let hu = u.cohomology()?;
    r.push(Check::from_failure(
        "cohomology_totals_match",
        (h != hu).then(|| format!("Σ h^{{p,q}} = {h:?}, ungraded {hu:?}")),
    ));
    let harm = u.harmonic()?;
    r.push(Check::from_failure(
        "harmonic_dimensions",
        (harm != hu).then(|| format!("ker Δ {harm:?} vs cohomology {hu:?}")),
    ));
    r.push(Check::from_failure(
        "differential_pure",
        (c.differential_vanishes() != u.differential_vanishes())
            .then(|| "d' + d'' vanishes on one complex only".to_string()),
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkcoh::module::{discrete_series, sl2_adjoint, sl2_generators, trivial_module};
    use crate::gkcoh::pair::{sl2_pair, split_p};

    fn complexes(m: &AdmissibleModule) -> (RelativeComplex, UngradedComplex) {
        let pr = sl2_pair();
        let s = split_p(&pr).unwrap();
        (build_complex(&pr, &s, m).unwrap(), build_ungraded(&pr, &s, m).unwrap())
    }

    #[test]
    fn normalize_signs() {
        assert_eq!(normalize(vec![2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(normalize(vec![1, 0]), Some((-1, vec![0, 1])));
        assert_eq!(normalize(vec![1, 1]), None);
    }

    #[test]
    fn trivial_module_complex() {
        let (c, u) = complexes(&trivial_module(sl2_generators(), 4).unwrap());
        assert_eq!(c.total_dims(), vec![1, 0, 1]);
        assert_eq!(u.dims(), vec![1, 0, 1]);
        assert!(c.differential_vanishes());
        let h = cohomology_bigraded(&c).unwrap();
        assert_eq!(h.h, vec![vec![1, 0], vec![0, 1]]);
        assert!(complex_checks(&c, &u).unwrap().passed());
    }

    #[test]
    fn discrete_series_complexes() {
        let (c, _) = complexes(&discrete_series(2, 1, 6).unwrap());
        assert_eq!(c.dims().h, vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(cohomology_bigraded(&c).unwrap().get(1, 0), 1);
        let (c, _) = complexes(&discrete_series(2, -1, 6).unwrap());
        let h = cohomology_bigraded(&c).unwrap();
        assert_eq!(h.h, vec![vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn adjoint_complex_is_exact() {
        let (c, u) = complexes(&sl2_adjoint(4).unwrap());
        assert_eq!(u.dims(), vec![1, 2, 1]);
        assert!(!c.differential_vanishes());
        assert_eq!(cohomology_bigraded(&c).unwrap(), HodgeNumbers::zero(1));
        assert_eq!(u.cohomology().unwrap(), vec![0, 0, 0]);
        let r = complex_checks(&c, &u).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn small_window_is_rejected() {
        let pr = sl2_pair();
        let s = split_p(&pr).unwrap();
        let m = trivial_module(sl2_generators(), 1).unwrap();
        assert!(matches!(build_complex(&pr, &s, &m), Err(Error::InsufficientWindow(_))));
    }

    #[test]
    fn window_independence() {
        for (a, b) in [
            (discrete_series(2, 1, 4).unwrap(), discrete_series(2, 1, 6).unwrap()),
            (sl2_adjoint(2).unwrap(), sl2_adjoint(4).unwrap()),
        ] {
            let (ca, _) = complexes(&a);
            let (cb, _) = complexes(&b);
            assert_eq!(ca.dims(), cb.dims());
            assert_eq!(cohomology_bigraded(&ca).unwrap(), cohomology_bigraded(&cb).unwrap());
        }
    }
}
