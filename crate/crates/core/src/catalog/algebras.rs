use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{zero_vector, Matrix, Scalar, Vector};
use crate::lefschetz::{BasisElement, BigradedAlgebra};

/// Incremental construction of an algebra whose basis element 0 is the unit.
struct Builder {
    g: usize,
    basis: Vec<BasisElement>,
    products: Vec<((usize, usize), Vector)>,
    conj: Vec<(usize, usize, Scalar)>,
    nu: Vec<(usize, Scalar)>,
}

impl Builder {
    fn new(g: usize, basis: Vec<BasisElement>) -> Self {
        Builder {
            g,
            basis,
            products: Vec::new(),
            conj: Vec::new(),
            nu: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.basis.len()
    }

    fn product(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let mut v = zero_vector(self.n());
        v[k] = c;
        self.products.push(((i, j), v));
    }

    /// Unit products for a unit at `u` acting on the given element indices.
    fn unit_on(&mut self, u: usize, elems: impl IntoIterator<Item = usize>) {
        for x in elems {
            self.product(u, x, x, Scalar::from(1));
            if x != u {
                self.product(x, u, x, Scalar::from(1));
            }
        }
    }

    /// `conj(e_src) = c · e_dst`.
    fn conj(&mut self, src: usize, dst: usize, c: Scalar) {
        self.conj.push((dst, src, c));
    }

    fn build(self, classes: Vec<Vector>) -> BigradedAlgebra {
        let n = self.n();
        let mut c = Matrix::zeros(n, n);
        for (dst, src, x) in self.conj {
            c.set(dst, src, x);
        }
        let mut nu = zero_vector(n);
        for (i, x) in self.nu {
            nu[i] = x;
        }
        BigradedAlgebra::new(self.g, self.basis, self.products, c, nu)
            .and_then(|a| a.with_kahler_classes(classes))
            .expect("catalog algebra is well formed")
    }
}

fn inversions(seq: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                n += 1;
            }
        }
    }
    n
}

fn bits(mask: usize, width: usize) -> Vec<usize> {
    (0..width).filter(|b| mask >> b & 1 == 1).collect()
}

/// Cohomology of a complex torus of dimension `g`: the exterior algebra on
/// `a_j` of type (1,0) and `b_j = conj(a_j)` of type (0,1).
///
/// Self-conjugate monomials that conjugation sends to their negative are
/// rescaled by `i` so that every basis element is real or paired.
pub fn exterior(g: usize) -> ExteriorAlgebra {
    let width = 2 * g;
    let gen_name = |s: usize| {
        if s < g {
            format!("a{}", s + 1)
        } else {
            format!("b{}", s - g + 1)
        }
    };
    let sigma = |s: usize| (s + g) % width;
    let mut masks: Vec<usize> = (0..1usize << width).collect();
    masks.sort_by_key(|&m| {
        let p = (m & ((1 << g) - 1)).count_ones();
        (m.count_ones(), std::cmp::Reverse(p), m)
    });
    let index: std::collections::HashMap<usize, usize> =
        masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();

    // conj(m_S) = sign · m_{σS}
    let conj_of = |m: usize| -> (usize, i64) {
        let img: Vec<usize> = bits(m, width).into_iter().map(sigma).collect();
        let target = img.iter().fold(0, |acc, &s| acc | 1 << s);
        (target, if inversions(&img) % 2 == 0 { 1 } else { -1 })
    };
    let scale: Vec<Scalar> = masks
        .iter()
        .map(|&m| {
            let (t, s) = conj_of(m);
            if t == m && s == -1 {
                Scalar::i()
            } else {
                Scalar::from(1)
            }
        })
        .collect();

    let basis: Vec<BasisElement> = masks
        .iter()
        .map(|&m| {
            let p = (m & ((1 << g) - 1)).count_ones() as usize;
            let q = (m >> g).count_ones() as usize;
            let name = if m == 0 {
                "1".to_string()
            } else {
                bits(m, width).into_iter().map(gen_name).collect()
            };
            BasisElement::new(name, p, q)
        })
        .collect();
    let mut b = Builder::new(g, basis);
    for (i, &s) in masks.iter().enumerate() {
        for (j, &t) in masks.iter().enumerate() {
            if s & t != 0 {
                continue;
            }
            let mut seq = bits(s, width);
            seq.extend(bits(t, width));
            let sign = Scalar::sign(inversions(&seq) as i64);
            let k = index[&(s | t)];
            let c = &(&(&scale[i] * &scale[j]) * &sign) / &scale[k];
            b.product(i, j, k, c);
        }
        let (t, sign) = conj_of(s);
        let k = index[&t];
        b.conj(i, k, &(&scale[i].conj() * &Scalar::from(sign)) / &scale[k]);
    }
    let top = masks.len() - 1;
    b.nu.push((top, Scalar::from(1)));
    let mono_index = move |m: usize| index[&m];
    ExteriorAlgebra {
        algebra: b.build(Vec::new()),
        g,
        scale,
        mono_index: Box::new(mono_index),
    }
}

/// An exterior algebra together with the data needed to write down Kähler forms.
pub struct ExteriorAlgebra {
    pub algebra: BigradedAlgebra,
    g: usize,
    scale: Vec<Scalar>,
    mono_index: Box<dyn Fn(usize) -> usize>,
}

impl ExteriorAlgebra {
    /// `ω = i Σ h_jk a_j b_k` for a Hermitian matrix `h`.
    pub fn kahler_form(&self, h: &Matrix) -> Vector {
        assert_eq!((h.rows(), h.cols()), (self.g, self.g));
        let mut w = zero_vector(self.algebra.dim());
        for j in 0..self.g {
            for k in 0..self.g {
                let idx = (self.mono_index)(1 << j | 1 << (self.g + k));
                w[idx] += &(&Scalar::i() * h.get(j, k)) / &self.scale[idx];
            }
        }
        w
    }

    pub fn with_forms(self, hs: &[Matrix]) -> BigradedAlgebra {
        let classes = hs.iter().map(|h| self.kahler_form(h)).collect();
        self.algebra
            .with_kahler_classes(classes)
            .expect("lengths match")
    }
}

fn diag(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&x| Scalar::from(x)).collect::<Vec<_>>())
}

/// Elliptic curve: the `g = 1` exterior algebra with basis `1, a, b, w`.
pub fn torus() -> BigradedAlgebra {
    let mut ex = exterior(1);
    // Rename to the conventional short names.
    let basis: Vec<BasisElement> = ["1", "a", "b", "w"]
        .iter()
        .zip(ex.algebra.basis())
        .map(|(n, e)| BasisElement::new(*n, e.p, e.q))
        .collect();
    ex.algebra = BigradedAlgebra::new(
        1,
        basis,
        dense_products(&ex.algebra),
        ex.algebra.conjugation().clone(),
        ex.algebra.nu_vector().to_vec(),
    )
    .expect("torus");
    let w = ex.kahler_form(&diag(&[1]));
    let classes = vec![
        w.clone(),
        w.iter().map(|c| c * &Scalar::from(2)).collect(),
        w.iter().map(|c| c * &Scalar::frac(1, 3)).collect(),
    ];
    ex.algebra.with_kahler_classes(classes).expect("torus")
}

/// Complex 2-torus with four sample Kähler forms.
pub fn abelian_surface() -> BigradedAlgebra {
    let h3 = Matrix::from_rows(vec![
        vec![Scalar::from(2), Scalar::from(1)],
        vec![Scalar::from(1), Scalar::from(1)],
    ])
    .expect("2x2");
    let h4 = Matrix::from_rows(vec![
        vec![Scalar::from(2), Scalar::i()],
        vec![-Scalar::i(), Scalar::from(1)],
    ])
    .expect("2x2");
    exterior(2).with_forms(&[diag(&[1, 1]), diag(&[1, 2]), h3, h4])
}

/// Complex 3-torus with three sample Kähler forms.
pub fn abelian_threefold() -> BigradedAlgebra {
    let h = Matrix::from_rows(vec![
        vec![Scalar::from(2), Scalar::from(1), Scalar::zero()],
        vec![Scalar::from(1), Scalar::from(2), Scalar::i()],
        vec![Scalar::zero(), -Scalar::i(), Scalar::from(1)],
    ])
    .expect("3x3");
    exterior(3).with_forms(&[diag(&[1, 1, 1]), diag(&[1, 2, 3]), h])
}

/// Negative of the E8 Cartan matrix.
fn e8_negative() -> Vec<Vec<i64>> {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)];
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (i, j) in edges {
        m[i][j] = 1;
        m[j][i] = 1;
    }
    m
}

/// Intersection form on the (1,1) part of the K3 model: `U ⊕ E8(−1)² ⊕ ⟨−1⟩²`.
pub fn k3_lattice() -> Vec<Vec<i64>> {
    let n = 20;
    let mut g = vec![vec![0i64; n]; n];
    g[0][1] = 1;
    g[1][0] = 1;
    let e8 = e8_negative();
    for off in [2, 10] {
        for i in 0..8 {
            for j in 0..8 {
                g[off + i][off + j] = e8[i][j];
            }
        }
    }
    g[18][18] = -1;
    g[19][19] = -1;
    g
}

/// Algebra with unit, a middle-degree part and a one-dimensional top, for
/// `g = 2` models whose `H²` has extra (2,0)/(0,2) classes or none.
fn surface_model(
    h11_names: Vec<String>,
    gram: &[Vec<i64>],
    with_sigma: bool,
    classes: Vec<Vec<(usize, i64)>>,
) -> BigradedAlgebra {
    let mut basis = vec![BasisElement::new("1", 0, 0)];
    if with_sigma {
        basis.push(BasisElement::new("sigma", 2, 0));
        basis.push(BasisElement::new("sigmab", 0, 2));
    }
    let off = basis.len();
    for n in &h11_names {
        basis.push(BasisElement::new(n.clone(), 1, 1));
    }
    basis.push(BasisElement::new("top", 2, 2));
    let n = basis.len();
    let top = n - 1;
    let mut b = Builder::new(2, basis);
    b.unit_on(0, 0..n);
    if with_sigma {
        b.product(1, 2, top, Scalar::from(1));
        b.product(2, 1, top, Scalar::from(1));
        b.conj(1, 2, Scalar::from(1));
        b.conj(2, 1, Scalar::from(1));
    }
    for (i, row) in gram.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            b.product(off + i, off + j, top, Scalar::from(x));
        }
    }
    for i in (0..off.min(1)).chain(off..n) {
        b.conj(i, i, Scalar::from(1));
    }
    b.nu.push((top, Scalar::from(1)));
    let class_vectors = classes
        .into_iter()
        .map(|terms| {
            let mut v = zero_vector(n);
            for (i, c) in terms {
                v[off + i] = Scalar::from(c);
            }
            v
        })
        .collect();
    b.build(class_vectors)
}

/// K3-type model: `h^{2,0} = h^{0,2} = 1`, `h^{1,1} = 20`, intersection form of
/// signature (3,19) on `H²`.
pub fn k3_mock() -> BigradedAlgebra {
    let mut names = vec!["e".to_string(), "f".to_string()];
    names.extend((1..=8).map(|i| format!("u{i}")));
    names.extend((1..=8).map(|i| format!("v{i}")));
    names.extend(["n1".to_string(), "n2".to_string()]);
    surface_model(
        names,
        &k3_lattice(),
        true,
        vec![
            vec![(0, 1), (1, 1)],
            vec![(0, 2), (1, 1)],
            vec![(0, 3), (1, 2), (2, 1)],
        ],
    )
}

/// `g = 2` model with `H² = H^{1,1}` of dimension `m` and form `diag(1, −1, …, −1)`.
pub fn g2_family(m: usize) -> Result<BigradedAlgebra> {
    if m == 0 {
        return Err(Error::InvalidParameter("h2 must be at least 1".into()));
    }
    let names = (0..m).map(|i| format!("e{i}")).collect();
    let gram: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| if i != j { 0 } else if i == 0 { 1 } else { -1 }).collect())
        .collect();
    let mut classes = vec![vec![(0, 1)]];
    if m >= 2 {
        classes.push(vec![(0, 2), (1, 1)]);
        let mut third = vec![(0, 3)];
        third.extend((1..m.min(5)).map(|i| (i, if i % 2 == 0 { 1 } else { -1 })));
        classes.push(third);
    } else {
        classes.push(vec![(0, 2)]);
        classes.push(vec![(0, 3)]);
    }
    Ok(surface_model(names, &gram, false, classes))
}

/// `g = 2` model with only `H^{0,0}` and `H^{2,2}`. It has no Kähler class.
pub fn point_model() -> BigradedAlgebra {
    surface_model(Vec::new(), &[], false, Vec::new())
}

/// `N` copies of the cohomology of `S²` (`g = 1`), one per point of the leaf space.
pub fn product_model(n: usize) -> Result<BigradedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let mut basis = Vec::new();
    for k in 1..=n {
        basis.push(BasisElement::new(format!("1_{k}"), 0, 0));
    }
    for k in 1..=n {
        basis.push(BasisElement::new(format!("w_{k}"), 1, 1));
    }
    let mut b = Builder::new(1, basis);
    for k in 0..n {
        b.unit_on(k, [k, n + k]);
        b.conj(k, k, Scalar::from(1));
        b.conj(n + k, n + k, Scalar::from(1));
        b.nu.push((n + k, Scalar::from(1)));
    }
    let dim = 2 * n;
    let sum: Vector = (0..dim)
        .map(|i| Scalar::from(if i >= n { 1 } else { 0 }))
        .collect();
    let mut classes = vec![sum.clone()];
    for k in 0..n {
        let mut v = sum.clone();
        v[n + k] += Scalar::from(1);
        classes.push(v);
    }
    Ok(b.build(classes))
}

/// The torus with `ν = 0`: fails validation.
pub fn torus_without_nu() -> BigradedAlgebra {
    let t = torus();
    BigradedAlgebra::new(
        1,
        t.basis().to_vec(),
        dense_products(&t),
        t.conjugation().clone(),
        zero_vector(4),
    )
    .expect("shape")
}

/// A `g = 1` model with `h^{1,0} = 1` and `h^{0,1} = 2`: fails Hodge symmetry.
pub fn asymmetric_model() -> BigradedAlgebra {
    let basis = vec![
        BasisElement::new("1", 0, 0),
        BasisElement::new("a", 1, 0),
        BasisElement::new("b1", 0, 1),
        BasisElement::new("b2", 0, 1),
        BasisElement::new("w", 1, 1),
    ];
    let mut b = Builder::new(1, basis);
    b.unit_on(0, 0..5);
    b.product(1, 2, 4, Scalar::from(1));
    b.product(2, 1, 4, Scalar::from(-1));
    for i in 0..5 {
        b.conj(i, i, Scalar::from(1));
    }
    b.nu.push((4, Scalar::from(1)));
    b.build(Vec::new())
}

/// The torus with `ν(a ∪ b) = 0` forced by removing the degree-1 products.
pub fn degenerate_torus() -> BigradedAlgebra {
    let t = torus();
    let products: Vec<_> = dense_products(&t)
        .into_iter()
        .filter(|((i, j), _)| t.degree(*i) + t.degree(*j) != 2 || *i == 0 || *j == 0)
        .collect();
    BigradedAlgebra::new(
        1,
        t.basis().to_vec(),
        products,
        t.conjugation().clone(),
        t.nu_vector().to_vec(),
    )
    .expect("shape")
}

pub(crate) fn dense_products(a: &BigradedAlgebra) -> Vec<((usize, usize), Vector)> {
    a.products()
        .iter()
        .map(|(&k, t)| {
            let mut v = zero_vector(a.dim());
            for (i, c) in t {
                v[*i] = c.clone();
            }
            (k, v)
        })
        .collect()
}
