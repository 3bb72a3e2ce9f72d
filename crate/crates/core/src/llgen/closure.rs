use num_traits::Zero;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::{kernel, Matrix, Scalar, Subspace, Vector};

pub const DEFAULT_CAP: usize = 2000;

const FRONTIER_CHUNK: usize = 16;

/// A span of `n×n` matrices, stored as a canonical echelon subspace of the
/// flattened `n²`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorLieAlgebra {
    n: usize,
    span: Subspace,
    closed: bool,
}

fn flatten(m: &Matrix) -> Vector {
    m.data().to_vec()
}

impl OperatorLieAlgebra {
    pub fn zero(n: usize) -> Self {
        OperatorLieAlgebra {
            n,
            span: Subspace::zero(n * n),
            closed: true,
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.span
            .basis()
            .iter()
            .map(|v| Matrix::from_data(self.n, self.n, v.clone()).expect("square"))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rows() == self.n && m.cols() == self.n && self.span.contains(m.data())
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        self.span.coordinates(m.data())
    }

    pub fn combine(&self, coords: &[Scalar]) -> Matrix {
        Matrix::from_data(self.n, self.n, self.span.combine(coords)).expect("square")
    }

    pub fn contains_algebra(&self, other: &OperatorLieAlgebra) -> bool {
        self.span.contains_subspace(&other.span)
    }

    /// `c_ij^k` with `[b_i, b_j] = Σ_k c_ij^k b_k`, as rows `i·d + j`.
    pub fn structure_constants(&self) -> Result<Vec<Vector>> {
        let basis = self.basis();
        let d = basis.len();
        (0..d * d)
            .into_par_iter()
            .map(|k| {
                let br = basis[k / d].commutator(&basis[k % d]);
                self.coordinates(&br).ok_or(Error::NotInAlgebra)
            })
            .collect()
    }

    /// Coordinates of `ad x` in the canonical basis.
    pub fn ad(&self, x: &Matrix) -> Result<Matrix> {
        let cols: Vec<Vector> = self
            .basis()
            .iter()
            .map(|b| self.coordinates(&x.commutator(b)).ok_or(Error::NotInAlgebra))
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(self.dim(), &cols))
    }

    /// `K(b_i, b_j) = tr(ad b_i ∘ ad b_j)`.
    pub fn killing_form(&self) -> Result<Matrix> {
        let ads: Vec<Matrix> = self
            .basis()
            .par_iter()
            .map(|b| self.ad(b))
            .collect::<Result<_>>()?;
        let d = ads.len();
        let entries: Vec<Scalar> = (0..d * d)
            .into_par_iter()
            .map(|k| ads[k / d].mul(&ads[k % d]).trace())
            .collect();
        Matrix::from_data(d, d, entries)
    }

    /// Common centralizer of the basis, narrowed one basis element at a time.
    pub fn center(&self) -> OperatorLieAlgebra {
        let nn = self.n * self.n;
        let mut current: Vec<Matrix> = self.basis();
        for y in self.basis() {
            if current.is_empty() {
                break;
            }
            let cols: Vec<Vector> = current.par_iter().map(|x| flatten(&x.commutator(&y))).collect();
            let k = kernel(&Matrix::from_columns(nn, &cols));
            current = k
                .basis()
                .iter()
                .map(|c| {
                    let mut m = Matrix::zeros(self.n, self.n);
                    for (x, t) in current.iter().zip(c) {
                        if !t.is_zero() {
                            m = m.add(&x.scale(t));
                        }
                    }
                    m
                })
                .collect();
        }
        let vs: Vec<Vector> = current.iter().map(flatten).collect();
        OperatorLieAlgebra {
            n: self.n,
            span: Subspace::span(nn, &vs),
            closed: true,
        }
    }

    /// `[L, L]`.
    pub fn derived(&self) -> OperatorLieAlgebra {
        let basis = self.basis();
        let d = basis.len();
        let mut span = Subspace::zero(self.n * self.n);
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        for chunk in pairs.chunks(FRONTIER_CHUNK * 8) {
            if span.dim() == d {
                break;
            }
            let residuals: Vec<Vector> = chunk
                .par_iter()
                .map(|&(i, j)| span.reduce(basis[i].commutator(&basis[j]).data()))
                .filter(|r| !r.iter().all(Zero::is_zero))
                .collect();
            for r in residuals {
                span.insert(&r);
            }
        }
        OperatorLieAlgebra {
            n: self.n,
            span,
            closed: true,
        }
    }

    /// Jacobi identity on structure constants, over all basis triples when
    /// there are at most `max_triples` of them and an evenly strided subset otherwise.
    pub fn jacobi_holds(&self, max_triples: usize) -> Result<bool> {
        let d = self.dim();
        let c = self.structure_constants()?;
        let triples: Vec<(usize, usize, usize)> = (0..d)
            .flat_map(|i| (i + 1..d).flat_map(move |j| (j + 1..d).map(move |k| (i, j, k))))
            .collect();
        let stride = (triples.len() / max_triples.max(1)).max(1);
        // [b_a, [b_b, b_c]] via constants.
        let nested = |a: usize, b: usize, cc: usize| -> Vector {
            let mut out = vec![Scalar::zero(); d];
            for (l, x) in c[b * d + cc].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (m, y) in c[a * d + l].iter().enumerate() {
                    if !y.is_zero() {
                        out[m] += x * y;
                    }
                }
            }
            out
        };
        Ok(triples
            .par_iter()
            .step_by(stride)
            .all(|&(i, j, k)| {
                let (x, y, z) = (nested(i, j, k), nested(j, k, i), nested(k, i, j));
                x.iter().zip(&y).zip(&z).all(|((a, b), c)| (a + b + c).is_zero())
            }))
    }

    /// SHA-256 of the bracket table in the canonical basis.
    pub fn bracket_table_hash(&self) -> Result<String> {
        let c = self.structure_constants()?;
        let d = self.dim();
        let mut h = Sha256::new();
        h.update(format!("n={};d={};", self.n, d));
        for v in self.span.basis() {
            for x in v {
                h.update(format!("{x},"));
            }
            h.update(";");
        }
        for (row, v) in c.iter().enumerate() {
            for (k, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    h.update(format!("{},{},{k}:{x};", row / d, row % d));
                }
            }
        }
        Ok(hex::encode(h.finalize()))
    }
}

/// Smallest span containing `start` and stable under `ad(a)` for every actor `a`.
fn close_under(
    n: usize,
    start: &[Matrix],
    actors: &[Matrix],
    cap: usize,
) -> OperatorLieAlgebra {
    let nn = n * n;
    let mut span = Subspace::zero(nn);
    let mut frontier = Vec::new();
    for m in start {
        if span.insert(&flatten(m)) {
            frontier.push(m.clone());
        }
    }
    let mut closed = true;
    'grow: while !frontier.is_empty() {
        if span.dim() > cap {
            closed = false;
            break;
        }
        let mut next = Vec::new();
        // Chunked so that only a bounded number of brackets is alive at once;
        // reduction against the current span runs in parallel.
        for chunk in frontier.chunks(FRONTIER_CHUNK) {
            let residuals: Vec<(Matrix, Vector)> = chunk
                .par_iter()
                .flat_map_iter(|x| actors.iter().map(move |a| a.commutator(x)))
                .filter_map(|c| {
                    let r = span.reduce(c.data());
                    (!r.iter().all(Zero::is_zero)).then_some((c, r))
                })
                .collect();
            for (c, r) in residuals {
                if span.insert(&r) {
                    next.push(c);
                    if span.dim() > cap {
                        closed = false;
                        break 'grow;
                    }
                }
            }
        }
        frontier = next;
    }
    OperatorLieAlgebra { n, span, closed }
}

/// Lie algebra generated by `generators`: the span of right-normed brackets,
/// grown by `ad` of the generators until stable or larger than `cap`.
pub fn lie_closure(generators: &[Matrix], cap: usize) -> Result<OperatorLieAlgebra> {
    let Some(first) = generators.first() else {
        return Ok(OperatorLieAlgebra::zero(0));
    };
    let n = first.rows();
    if generators.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::DimensionMismatch(
            "generators must be square of a common size".into(),
        ));
    }
    Ok(close_under(n, generators, generators, cap))
}

/// Smallest ideal of `l` containing `seed`.
pub fn ideal_probe(l: &OperatorLieAlgebra, seed: &Matrix) -> Result<OperatorLieAlgebra> {
    if !l.contains(seed) {
        return Err(Error::NotInAlgebra);
    }
    Ok(close_under(l.n, std::slice::from_ref(seed), &l.basis(), usize::MAX))
}

/// Smallest subspace of coordinate space containing `start` and stable under `ads`.
fn close_coordinates(d: usize, start: &[Vector], ads: &[Matrix]) -> Subspace {
    let mut span = Subspace::zero(d);
    let mut frontier: Vec<Vector> = start.iter().filter(|v| span.insert(v)).cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for a in ads {
                let v = a.apply(x);
                if span.insert(&v) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    span
}

/// Distinct minimal members of the family of ideals generated from basis seeds,
/// refined by pairwise intersection. Works in the coordinates of `l`, through
/// its structure constants, so `l` must be closed.
pub fn minimal_ideals(l: &OperatorLieAlgebra) -> Result<Vec<OperatorLieAlgebra>> {
    let d = l.dim();
    let c = l.structure_constants()?;
    // ad(b_a) has column j equal to the coordinates of [b_a, b_j].
    let ads: Vec<Matrix> = (0..d)
        .map(|a| Matrix::from_columns(d, &c[a * d..(a + 1) * d]))
        .collect();
    let unit = |i: usize| -> Vector {
        (0..d).map(|j| if i == j { Scalar::from(1) } else { Scalar::zero() }).collect()
    };
    let seeds: Vec<Subspace> = (0..d)
        .into_par_iter()
        .map(|i| close_coordinates(d, &[unit(i)], &ads))
        .collect();
    let mut family: Vec<Subspace> = Vec::new();
    for i in seeds {
        if !family.contains(&i) {
            family.push(i);
        }
    }
    loop {
        let mut grew = false;
        let snapshot = family.clone();
        for (a, x) in snapshot.iter().enumerate() {
            for y in &snapshot[a + 1..] {
                let meet = x.intersection(y);
                if !meet.is_zero() && !family.contains(&meet) {
                    family.push(meet);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let nn = l.n * l.n;
    Ok(family
        .iter()
        .filter(|x| !family.iter().any(|y| y.dim() < x.dim() && x.contains_subspace(y)))
        .map(|x| {
            let vs: Vec<Vector> = x.basis().iter().map(|v| l.span.combine(v)).collect();
            OperatorLieAlgebra {
                n: l.n,
                span: Subspace::span(nn, &vs),
                closed: true,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::lefschetz::Lefschetz;

    fn sl2_matrices() -> Vec<Matrix> {
        let t = catalog::torus();
        let lf = Lefschetz::new(&t, &t.kahler_classes()[0]).unwrap();
        let tr = lf.triple().unwrap();
        vec![tr.l, tr.lambda, tr.b]
    }

    #[test]
    fn single_triple_closes_to_sl2() {
        let l = lie_closure(&sl2_matrices(), DEFAULT_CAP).unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.is_closed());
        assert!(l.center().dim() == 0);
        assert_eq!(l.derived(), l);
        assert_eq!(l.killing_form().unwrap().rank(), 3);
        assert!(l.jacobi_holds(1000).unwrap());
    }

    #[test]
    fn zero_generators_give_zero_algebra() {
        let l = lie_closure(&[Matrix::zeros(3, 3)], DEFAULT_CAP).unwrap();
        assert_eq!(l.dim(), 0);
        assert_eq!(lie_closure(&[], DEFAULT_CAP).unwrap().dim(), 0);
    }

    #[test]
    fn closure_is_order_independent() {
        let mut g = sl2_matrices();
        let a = lie_closure(&g, DEFAULT_CAP).unwrap();
        g.reverse();
        let b = lie_closure(&g[1..], DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.bracket_table_hash().unwrap(), b.bracket_table_hash().unwrap());
    }

    #[test]
    fn cap_flags_partial_result() {
        let l = lie_closure(&sl2_matrices(), 1).unwrap();
        assert!(!l.is_closed());
    }

    #[test]
    fn ideal_probe_examples() {
        let l = lie_closure(&sl2_matrices(), DEFAULT_CAP).unwrap();
        let z = ideal_probe(&l, &Matrix::zeros(4, 4)).unwrap();
        assert_eq!(z.dim(), 0);
        let b = l.basis()[0].clone();
        assert_eq!(ideal_probe(&l, &b).unwrap().dim(), 3);
        assert!(matches!(
            ideal_probe(&l, &Matrix::identity(4)),
            Err(Error::NotInAlgebra)
        ));
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        assert!(lie_closure(&[Matrix::zeros(2, 2), Matrix::zeros(3, 3)], 10).is_err());
    }
}
