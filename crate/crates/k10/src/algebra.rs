//! Structure-constant superalgebras: the Kaplansky superalgebra K, the Kac
//! superalgebra K10 in the Racine-basis presentation and in the tensor
//! presentation `F1 + K (x) K`, together with product evaluation, the
//! supercommutativity scan, and an isomorphism search between the two
//! presentations.

use num_rational::BigRational;
use num_traits::Zero;

use crate::cyclo::{rational_string, CycNum};
use crate::linalg::{independent, Matrix, Subspace};
use crate::report::{Report, ReportBuilder};
use crate::Error;

pub const EVEN: u8 = 0;
pub const ODD: u8 = 1;

/// A finite-dimensional superalgebra given by a dense structure-constant
/// table `b_i b_j = sum_k c[i][j][k] b_k` and a parity per basis index.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    id: String,
    dim: usize,
    basis_names: Vec<String>,
    parity: Vec<u8>,
    structure: Vec<CycNum>, // flattened [i][j][k]
}

impl SuperAlgebra {
    pub fn new(
        id: impl Into<String>,
        basis_names: Vec<&str>,
        parity: Vec<u8>,
        products: impl Fn(usize, usize) -> Vec<(usize, CycNum)>,
    ) -> Self {
        let dim = basis_names.len();
        assert_eq!(parity.len(), dim);
        let mut structure = vec![CycNum::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in products(i, j) {
                    structure[(i * dim + j) * dim + k] = c;
                }
            }
        }
        SuperAlgebra {
            id: id.into(),
            dim,
            basis_names: basis_names.into_iter().map(String::from).collect(),
            parity,
            structure,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.parity[i] == EVEN).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.parity[i] == ODD).collect()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &CycNum {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// The product `b_i b_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<CycNum> {
        (0..self.dim)
            .map(|k| self.structure_constant(i, j, k).clone())
            .collect()
    }

    pub fn element(&self, coords: Vec<CycNum>) -> AlgElement {
        assert_eq!(coords.len(), self.dim);
        AlgElement {
            algebra: self.id.clone(),
            coords,
        }
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut coords = vec![CycNum::zero(); self.dim];
        coords[i] = CycNum::one();
        self.element(coords)
    }

    /// Bilinear product of two elements.
    pub fn product(&self, u: &AlgElement, v: &AlgElement) -> Result<AlgElement, Error> {
        if u.algebra != self.id || v.algebra != self.id {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.element(self.product_coords(&u.coords, &v.coords)))
    }

    /// Product on raw coordinate vectors.
    pub fn product_coords(&self, u: &[CycNum], v: &[CycNum]) -> Vec<CycNum> {
        let mut out = vec![CycNum::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for k in 0..self.dim {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// The two-sided multiplicative unit, if one exists.
    pub fn unit(&self) -> Option<Vec<CycNum>> {
        // solve u * b_j = b_j for all j (left) and check right
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                // sum_i u_i c[i][j][k] = delta_{jk}
                let row: Vec<CycNum> = (0..n)
                    .map(|i| self.structure_constant(i, j, k).clone())
                    .collect();
                rows.push(row);
                rhs.push(if j == k { CycNum::one() } else { CycNum::zero() });
            }
        }
        let u = Matrix::from_rows(rows).solve(&rhs)?;
        // right-unit check
        for j in 0..n {
            let bj = crate::linalg::unit_vector(n, j);
            if self.product_coords(&bj, &u) != bj {
                return None;
            }
        }
        Some(u)
    }

    /// Verify `b_i b_j = (-1)^{|i||j|} b_j b_i` on all basis pairs, and the
    /// parity-closure invariant of the table.
    pub fn check_supercommutativity(&self) -> Report {
        let mut rb = ReportBuilder::new(format!("{}: supercommutativity + parity closure", self.id));
        let mut pairs = 0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                pairs += 1;
                let ij = self.basis_product(i, j);
                let ji = self.basis_product(j, i);
                let sign_flip = self.parity[i] == ODD && self.parity[j] == ODD;
                let expected: Vec<CycNum> = if sign_flip {
                    ji.iter().map(|c| -c).collect()
                } else {
                    ji
                };
                rb.assert_that(ij == expected, || {
                    format!(
                        "supercommutativity fails at pair ({}, {})",
                        self.basis_names[i], self.basis_names[j]
                    )
                });
                let p = (self.parity[i] + self.parity[j]) % 2;
                for (k, c) in ij.iter().enumerate() {
                    rb.assert_that(c.is_zero() || self.parity[k] == p, || {
                        format!(
                            "parity closure fails at ({}, {}) -> {}",
                            self.basis_names[i], self.basis_names[j], self.basis_names[k]
                        )
                    });
                }
            }
        }
        rb.note("basis pairs checked", pairs.to_string());
        rb.finish()
    }

    /// JSON dump with sparse structure triples and exact rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut triples = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        let q = c
                            .as_rational()
                            .map(rational_string)
                            .unwrap_or_else(|| c.to_string());
                        triples.push(serde_json::json!([i, j, k, q]));
                    }
                }
            }
        }
        serde_json::json!({
            "basis_names": self.basis_names,
            "parity": self.parity,
            "structure": triples,
        })
    }
}

/// An element of a named algebra as a coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement {
    algebra: String,
    coords: Vec<CycNum>,
}

impl AlgElement {
    pub fn coords(&self) -> &[CycNum] {
        &self.coords
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &CycNum) -> AlgElement {
        AlgElement {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|x| c * x).collect(),
        }
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        assert_eq!(self.algebra, other.algebra);
        AlgElement {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        self.add(&other.scale(&CycNum::from_integer(-1)))
    }
}

fn half() -> CycNum {
    CycNum::from_ratio(1, 2)
}

fn num(n: i64) -> CycNum {
    CycNum::from_integer(n)
}

/// The 3-dimensional Kaplansky superalgebra on basis (e, x, y).
pub fn kaplansky() -> SuperAlgebra {
    // e^2 = e, ex = xe = x/2, ey = ye = y/2, xy = e = -yx, x^2 = y^2 = 0
    const E: usize = 0;
    const X: usize = 1;
    const Y: usize = 2;
    SuperAlgebra::new("kaplansky", vec!["e", "x", "y"], vec![EVEN, ODD, ODD], |i, j| {
        match (i, j) {
            (E, E) => vec![(E, num(1))],
            (E, X) | (X, E) => vec![(X, half())],
            (E, Y) | (Y, E) => vec![(Y, half())],
            (X, Y) => vec![(E, num(1))],
            (Y, X) => vec![(E, num(-1))],
            _ => vec![],
        }
    })
}

/// K10 on the Racine basis (e, v1, v2, v3, v4, f, x1, x2, y1, y2).
///
/// Structure constants follow the published multiplication table, with one
/// sign fixed: the (y1, f) cell must read +y1/2, forced by supercommutativity
/// with the (f, y1) cell and by e + f acting as the unit.
pub fn k10_racine() -> SuperAlgebra {
    let names = vec!["e", "v1", "v2", "v3", "v4", "f", "x1", "x2", "y1", "y2"];
    // index shorthands
    let (e, v1, v2, v3, v4, f, x1, x2, y1, y2) = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9);
    let parity = vec![EVEN, EVEN, EVEN, EVEN, EVEN, EVEN, ODD, ODD, ODD, ODD];
    // rows of the table, one closure call per (i, j)
    let table = move |i: usize, j: usize| -> Vec<(usize, CycNum)> {
        let h = half;
        match (i, j) {
            // row e
            (a, b) if a == e && b == e => vec![(e, num(1))],
            (a, b) if a == e && (v1..=v4).contains(&b) => vec![(b, num(1))],
            (a, b) if a == e && b == f => vec![],
            (a, b) if a == e && b >= x1 => vec![(b, h())],
            // row v1
            (a, b) if a == v1 && b == e => vec![(v1, num(1))],
            (a, b) if a == v1 && b == v2 => vec![(e, num(2))],
            (a, b) if a == v1 && b == y1 => vec![(x2, num(1))],
            (a, b) if a == v1 && b == y2 => vec![(x1, num(-1))],
            // row v2
            (a, b) if a == v2 && b == e => vec![(v2, num(1))],
            (a, b) if a == v2 && b == v1 => vec![(e, num(2))],
            (a, b) if a == v2 && b == x1 => vec![(y2, num(-1))],
            (a, b) if a == v2 && b == x2 => vec![(y1, num(1))],
            // row v3
            (a, b) if a == v3 && b == e => vec![(v3, num(1))],
            (a, b) if a == v3 && b == v4 => vec![(e, num(2))],
            (a, b) if a == v3 && b == x2 => vec![(x1, num(1))],
            (a, b) if a == v3 && b == y1 => vec![(y2, num(1))],
            // row v4
            (a, b) if a == v4 && b == e => vec![(v4, num(1))],
            (a, b) if a == v4 && b == v3 => vec![(e, num(2))],
            (a, b) if a == v4 && b == x1 => vec![(x2, num(1))],
            (a, b) if a == v4 && b == y2 => vec![(y1, num(1))],
            // row f
            (a, b) if a == f && b == f => vec![(f, num(1))],
            (a, b) if a == f && b >= x1 => vec![(b, h())],
            // row x1
            (a, b) if a == x1 && (b == e || b == f) => vec![(x1, h())],
            (a, b) if a == x1 && b == v2 => vec![(y2, num(-1))],
            (a, b) if a == x1 && b == v4 => vec![(x2, num(1))],
            (a, b) if a == x1 && b == x2 => vec![(v1, num(1))],
            (a, b) if a == x1 && b == y1 => vec![(e, num(1)), (f, num(-3))],
            (a, b) if a == x1 && b == y2 => vec![(v3, num(1))],
            // row x2
            (a, b) if a == x2 && (b == e || b == f) => vec![(x2, h())],
            (a, b) if a == x2 && b == v2 => vec![(y1, num(1))],
            (a, b) if a == x2 && b == v3 => vec![(x1, num(1))],
            (a, b) if a == x2 && b == x1 => vec![(v1, num(-1))],
            (a, b) if a == x2 && b == y1 => vec![(v4, num(1))],
            (a, b) if a == x2 && b == y2 => vec![(e, num(1)), (f, num(-3))],
            // row y1
            (a, b) if a == y1 && (b == e || b == f) => vec![(y1, h())],
            (a, b) if a == y1 && b == v1 => vec![(x2, num(1))],
            (a, b) if a == y1 && b == v3 => vec![(y2, num(1))],
            (a, b) if a == y1 && b == x1 => vec![(f, num(3)), (e, num(-1))],
            (a, b) if a == y1 && b == x2 => vec![(v4, num(-1))],
            (a, b) if a == y1 && b == y2 => vec![(v2, num(1))],
            // row y2
            (a, b) if a == y2 && (b == e || b == f) => vec![(y2, h())],
            (a, b) if a == y2 && b == v1 => vec![(x1, num(-1))],
            (a, b) if a == y2 && b == v4 => vec![(y1, num(1))],
            (a, b) if a == y2 && b == x1 => vec![(v3, num(-1))],
            (a, b) if a == y2 && b == x2 => vec![(f, num(3)), (e, num(-1))],
            (a, b) if a == y2 && b == y1 => vec![(v2, num(-1))],
            _ => vec![],
        }
    };
    SuperAlgebra::new("k10_racine", names, parity, table)
}

/// Basis order of the tensor presentation, matching the fixed basis
/// `B = (1, e(x)e, x(x)x, x(x)y, y(x)x, y(x)y, e(x)x, x(x)e, e(x)y, y(x)e)`.
pub const TENSOR_BASIS: [&str; 10] = [
    "1", "e⊗e", "x⊗x", "x⊗y", "y⊗x", "y⊗y", "e⊗x", "x⊗e", "e⊗y", "y⊗e",
];

/// Weights of the tensor basis under the maximal torus: `t_{l,m}` scales
/// `u(x)v` by `l^a m^b` with `(a, b)` as listed here.
pub const TENSOR_WEIGHTS: [(i64, i64); 10] = [
    (0, 0),
    (0, 0),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
    (0, 1),
    (1, 0),
    (0, -1),
    (-1, 0),
];

/// K10 as `F1 + K (x) K` with the super-product
/// `(a(x)b)(c(x)d) = (-1)^{|b||c|} (ac (x) bd - 3/4 (a|c)(b|d) 1)`.
pub fn k10_tensor() -> SuperAlgebra {
    // factor labels within K: 0 = e, 1 = x, 2 = y
    let kap = kaplansky();
    // tensor basis index for (u, v) in K x K
    let pair_index = |u: usize, v: usize| -> usize {
        match (u, v) {
            (0, 0) => 1,
            (1, 1) => 2,
            (1, 2) => 3,
            (2, 1) => 4,
            (2, 2) => 5,
            (0, 1) => 6,
            (1, 0) => 7,
            (0, 2) => 8,
            (2, 0) => 9,
            _ => unreachable!(),
        }
    };
    let kp = |u: usize, v: usize| kap.basis_product(u, v);
    let form = |u: usize, v: usize| -> BigRational {
        match (u, v) {
            (0, 0) => BigRational::new(1.into(), 2.into()),
            (1, 2) => BigRational::from_integer(1.into()),
            (2, 1) => BigRational::from_integer((-1).into()),
            _ => BigRational::zero(),
        }
    };
    let kparity = |u: usize| if u == 0 { 0u8 } else { 1u8 };
    let parity = vec![EVEN, EVEN, EVEN, EVEN, EVEN, EVEN, ODD, ODD, ODD, ODD];
    let table = move |i: usize, j: usize| -> Vec<(usize, CycNum)> {
        if i == 0 {
            return vec![(j, num(1))];
        }
        if j == 0 {
            return vec![(i, num(1))];
        }
        // decompose the basis indices back into K-factor pairs
        let unpair = |k: usize| -> (usize, usize) {
            match k {
                1 => (0, 0),
                2 => (1, 1),
                3 => (1, 2),
                4 => (2, 1),
                5 => (2, 2),
                6 => (0, 1),
                7 => (1, 0),
                8 => (0, 2),
                9 => (2, 0),
                _ => unreachable!(),
            }
        };
        let (a, b) = unpair(i);
        let (c, d) = unpair(j);
        let sign = if kparity(b) == 1 && kparity(c) == 1 { -1i64 } else { 1 };
        let mut out: Vec<(usize, CycNum)> = Vec::new();
        let ac = kp(a, c);
        let bd = kp(b, d);
        for (u, cu) in ac.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (v, cv) in bd.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let coeff = &(cu * cv) * &num(sign);
                out.push((pair_index(u, v), coeff));
            }
        }
        let scalar = form(a, c) * form(b, d);
        if !scalar.is_zero() {
            let coeff = CycNum::from_rational(scalar * BigRational::new((-3 * sign).into(), 4.into()));
            out.push((0, coeff));
        }
        // merge duplicate targets
        let mut merged: Vec<(usize, CycNum)> = Vec::new();
        for (k, c) in out {
            if let Some(entry) = merged.iter_mut().find(|(kk, _)| *kk == k) {
                entry.1 += &c;
            } else {
                merged.push((k, c));
            }
        }
        merged
    };
    SuperAlgebra::new("k10_tensor", TENSOR_BASIS.to_vec(), parity, table)
}

/// A linear map between two algebras, columns = images of source basis.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub source: String,
    pub target: String,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn apply(&self, coords: &[CycNum]) -> Vec<CycNum> {
        self.matrix.apply(coords)
    }

    /// Does the map intertwine products on all basis pairs and preserve
    /// parity spans?
    pub fn is_isomorphism(&self, src: &SuperAlgebra, dst: &SuperAlgebra) -> bool {
        if self.matrix.inverse().is_none() {
            return false;
        }
        let n = src.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(&src.basis_product(i, j));
                let rhs = dst.product_coords(&self.matrix.column(i), &self.matrix.column(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        // parity preservation: image of even (odd) basis lies in even (odd) span
        let even_dst = Subspace::span(
            dst.dim(),
            dst.even_indices()
                .iter()
                .map(|&i| crate::linalg::unit_vector(dst.dim(), i))
                .collect(),
        );
        let odd_dst = Subspace::span(
            dst.dim(),
            dst.odd_indices()
                .iter()
                .map(|&i| crate::linalg::unit_vector(dst.dim(), i))
                .collect(),
        );
        for i in 0..n {
            let col = self.matrix.column(i);
            let target = if src.parity(i) == EVEN { &even_dst } else { &odd_dst };
            if !target.contains(&col) {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = (0..self.matrix.nrows())
            .map(|i| {
                self.matrix
                    .row(i)
                    .iter()
                    .map(|c| {
                        c.as_rational()
                            .map(rational_string)
                            .unwrap_or_else(|| c.to_string())
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "source": self.source,
            "target": self.target,
            "matrix": rows,
        })
    }
}

/// Search for a parity-preserving isomorphism `src -> dst`.
///
/// The search maps unit to unit, aligns the two distinguished idempotents by
/// their Peirce eigenvalue profile, then enumerates images of the four odd
/// generators over the target's odd basis with scalars solved exactly from
/// the odd pairing products. Every candidate is verified multiplicatively on
/// all basis pairs before being returned; ties are broken by the first match
/// in the deterministic enumeration order.
pub fn find_isomorphism(src: &SuperAlgebra, dst: &SuperAlgebra) -> Result<LinearMap, Error> {
    if src.dim() != dst.dim() {
        return Err(Error::NoIsomorphismFound);
    }
    if src.even_indices().len() != dst.even_indices().len() {
        return Err(Error::NoIsomorphismFound);
    }
    let unit_src = src.unit().ok_or(Error::NoIsomorphismFound)?;
    let unit_dst = dst.unit().ok_or(Error::NoIsomorphismFound)?;

    let (e_src, f_src) = idempotent_pair(src, &unit_src).ok_or(Error::NoIsomorphismFound)?;
    let (e_dst, f_dst) = idempotent_pair(dst, &unit_dst).ok_or(Error::NoIsomorphismFound)?;

    // images of e - 3f on both sides; odd pairings must map onto this element
    let target_e3f: Vec<CycNum> = e_dst
        .iter()
        .zip(&f_dst)
        .map(|(a, b)| a - &b.scale(&BigRational::from_integer(3.into())).clone())
        .collect();
    let src_e3f: Vec<CycNum> = e_src
        .iter()
        .zip(&f_src)
        .map(|(a, b)| a - &b.scale(&BigRational::from_integer(3.into())).clone())
        .collect();

    let odd_src = src.odd_indices();
    let odd_dst = dst.odd_indices();
    if odd_src.len() != 4 || odd_dst.len() != 4 {
        return Err(Error::NoIsomorphismFound);
    }

    // split the source odd basis into two pairs (o1, o3), (o2, o4) whose
    // products are scalar multiples of e - 3f
    let n = src.dim();
    let scalar_of = |v: &[CycNum], w: &[CycNum]| -> Option<CycNum> {
        // v = c * w for some scalar c, w nonzero
        let pivot = w.iter().position(|c| !c.is_zero())?;
        let c = &v[pivot] * &w[pivot].inverse().ok()?;
        let ok = v
            .iter()
            .zip(w)
            .all(|(a, b)| *a == &c * b);
        ok.then_some(c)
    };

    for arrangement in permutations4() {
        let [s1, s2, s3, s4] = arrangement.map(|i| odd_src[i]);
        let p13 = src.basis_product(s1, s3);
        let p24 = src.basis_product(s2, s4);
        let Some(c13) = scalar_of(&p13, &src_e3f) else { continue };
        let Some(c24) = scalar_of(&p24, &src_e3f) else { continue };
        if c13.is_zero() || c24.is_zero() {
            continue;
        }
        for darr in permutations4() {
            let [d1, d2, d3, d4] = darr.map(|i| odd_dst[i]);
            let q13 = dst.basis_product(d1, d3);
            let q24 = dst.basis_product(d2, d4);
            let Some(k13) = scalar_of(&q13, &target_e3f) else { continue };
            let Some(k24) = scalar_of(&q24, &target_e3f) else { continue };
            if k13.is_zero() || k24.is_zero() {
                continue;
            }
            // phi(s1) = d1, phi(s3) = gamma d3 with gamma = c13 / k13, etc.
            let gamma = &c13 * &k13.inverse().expect("nonzero");
            let delta = &c24 * &k24.inverse().expect("nonzero");
            let mut columns: Vec<Option<Vec<CycNum>>> = vec![None; n];
            let unit_col = |idx: usize, scale: &CycNum| -> Vec<CycNum> {
                let mut v = vec![CycNum::zero(); n];
                v[idx] = scale.clone();
                v
            };
            columns[s1] = Some(unit_col(d1, &CycNum::one()));
            columns[s2] = Some(unit_col(d2, &CycNum::one()));
            columns[s3] = Some(unit_col(d3, &gamma));
            columns[s4] = Some(unit_col(d4, &delta));
            // even images: e, f, and products of odd images
            for &i in &src.even_indices() {
                let bi = crate::linalg::unit_vector(n, i);
                if bi == e_src {
                    columns[i] = Some(e_dst.clone());
                } else if bi == f_src {
                    columns[i] = Some(f_dst.clone());
                }
            }
            // derive remaining even columns from products of odd generators:
            // for each unresolved even index k, find odd pair (a, b) with
            // b_a b_b having a nonzero k-component and all other components
            // already resolved
            let odd_pairs: Vec<(usize, usize)> = odd_src
                .iter()
                .flat_map(|&a| odd_src.iter().map(move |&b| (a, b)))
                .collect();
            let mut progress = true;
            while progress && columns.iter().any(|c| c.is_none()) {
                progress = false;
                for &(a, b) in &odd_pairs {
                    let prod = src.basis_product(a, b);
                    // which unresolved indices does this product touch?
                    let unresolved: Vec<usize> = prod
                        .iter()
                        .enumerate()
                        .filter(|(k, c)| !c.is_zero() && columns[*k].is_none())
                        .map(|(k, _)| k)
                        .collect();
                    if unresolved.len() != 1 {
                        continue;
                    }
                    let k = unresolved[0];
                    // phi(prod) = phi(b_a) phi(b_b)
                    let img = dst.product_coords(
                        columns[a].as_ref().expect("odd resolved"),
                        columns[b].as_ref().expect("odd resolved"),
                    );
                    // img = sum_j prod[j] * phi(b_j); solve for phi(b_k)
                    let mut rest = img;
                    for (j, c) in prod.iter().enumerate() {
                        if j != k && !c.is_zero() {
                            let col = columns[j].as_ref().expect("resolved");
                            for (x, y) in rest.iter_mut().zip(col) {
                                *x -= &(c * y);
                            }
                        }
                    }
                    let inv = prod[k].inverse().expect("nonzero component");
                    columns[k] = Some(rest.iter().map(|c| c * &inv).collect());
                    progress = true;
                }
            }
            if columns.iter().any(|c| c.is_none()) {
                continue;
            }
            let cols: Vec<Vec<CycNum>> = columns.into_iter().map(|c| c.unwrap()).collect();
            if !independent(&cols) {
                continue;
            }
            let map = LinearMap {
                source: src.id.clone(),
                target: dst.id.clone(),
                matrix: Matrix::from_columns(cols),
            };
            if map.is_isomorphism(src, dst) {
                return Ok(map);
            }
        }
    }
    Err(Error::NoIsomorphismFound)
}

/// The pair of orthogonal idempotents acting by 1/2 on the odd part, ordered
/// so that the first has the larger eigenvalue-1 Peirce space (that is the
/// analogue of `e` in the Racine basis).
fn idempotent_pair(alg: &SuperAlgebra, unit: &[CycNum]) -> Option<(Vec<CycNum>, Vec<CycNum>)> {
    let n = alg.dim();
    let even = alg.even_indices();
    let odd = alg.odd_indices();
    // solve the linear system u * o = o/2 for all odd basis o, u even
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &o in &odd {
        for k in 0..n {
            let row: Vec<CycNum> = even
                .iter()
                .map(|&i| alg.structure_constant(i, o, k).clone())
                .collect();
            rows.push(row);
            rhs.push(if k == o { CycNum::from_ratio(1, 2) } else { CycNum::zero() });
        }
    }
    let m = Matrix::from_rows(rows);
    let particular = m.solve(&rhs)?;
    let kernel = m.kernel();
    if kernel.len() != 1 {
        return None;
    }
    // affine line u = particular + s * direction; intersect with u^2 = u
    let expand = |coeffs: &[CycNum]| -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(); n];
        for (c, &i) in coeffs.iter().zip(&even) {
            v[i] = c.clone();
        }
        v
    };
    let u0 = expand(&particular);
    let d = expand(&kernel[0]);
    // (u0 + s d)^2 - (u0 + s d) = 0 componentwise: quadratic in s
    let u0u0 = alg.product_coords(&u0, &u0);
    let u0d = alg.product_coords(&u0, &d);
    let du0 = alg.product_coords(&d, &u0);
    let dd = alg.product_coords(&d, &d);
    // pick a component with a nonzero quadratic or linear part and solve;
    // cross-check the full vector equation afterwards
    let mut roots: Vec<CycNum> = Vec::new();
    for k in 0..n {
        let a2 = dd[k].clone();
        let a1 = &(&u0d[k] + &du0[k]) - &d[k];
        let a0 = &u0u0[k] - &u0[k];
        if a2.is_zero() && a1.is_zero() {
            continue;
        }
        if a2.is_zero() {
            roots.push(-&(&a0 * &a1.inverse().ok()?));
        } else {
            // s = (-a1 +- sqrt(a1^2 - 4 a2 a0)) / (2 a2), rational discriminant
            let disc = &(&a1 * &a1) - &(&(&a2 * &a0) * &CycNum::from_integer(4));
            let q = disc.as_rational()?;
            let sq = rational_sqrt(q)?;
            let sq = CycNum::from_rational(sq);
            let inv2a = (&a2 * &CycNum::from_integer(2)).inverse().ok()?;
            roots.push(&(&-&a1 + &sq) * &inv2a);
            roots.push(&(&-&a1 - &sq) * &inv2a);
        }
        break;
    }
    let mut idems: Vec<Vec<CycNum>> = Vec::new();
    for s in roots {
        let u: Vec<CycNum> = u0.iter().zip(&d).map(|(a, b)| a + &(&s * b)).collect();
        if alg.product_coords(&u, &u) == u && !u.iter().all(|c| c.is_zero()) && u != *unit {
            if !idems.contains(&u) {
                idems.push(u);
            }
        }
    }
    if idems.len() == 1 {
        // complementary idempotent
        let u = idems[0].clone();
        let v: Vec<CycNum> = unit.iter().zip(&u).map(|(a, b)| a - b).collect();
        idems.push(v);
    }
    if idems.len() != 2 {
        return None;
    }
    // order by the dimension of the eigenvalue-1 space of left multiplication
    let peirce_dim = |u: &[CycNum]| -> usize {
        let cols: Vec<Vec<CycNum>> = (0..n)
            .map(|j| {
                let mut col = alg.product_coords(u, &crate::linalg::unit_vector(n, j));
                col[j] = &col[j] - &CycNum::one();
                col
            })
            .collect();
        Matrix::from_columns(cols).kernel().len()
    };
    let (a, b) = (idems[0].clone(), idems[1].clone());
    if peirce_dim(&a) >= peirce_dim(&b) {
        Some((a, b))
    } else {
        Some((b, a))
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    use num_bigint::BigInt;
    use num_traits::Signed;
    if q.is_negative() {
        return None;
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    let cand = BigRational::new(ns.clone(), ds.clone());
    if &(&cand * &cand) == q {
        Some(cand)
    } else {
        let _ = BigInt::from(0);
        None
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    let idx = [0usize, 1, 2, 3];
    for a in 0..4 {
        for b in 0..4 {
            if b == a {
                continue;
            }
            for c in 0..4 {
                if c == a || c == b {
                    continue;
                }
                let d = 6 - a - b - c;
                out.push([idx[a], idx[b], idx[c], idx[d]]);
            }
        }
    }
    out
}

/// A deliberately corrupted Racine table (the x2 x1 cell set to +v1), used as
/// a negative-control fixture by the CLI.
pub fn k10_racine_bad_sign() -> SuperAlgebra {
    let good = k10_racine();
    let names: Vec<&str> = good.basis_names.iter().map(|s| s.as_str()).collect();
    let (x1, x2, v1) = (6usize, 7usize, 1usize);
    SuperAlgebra::new(
        "k10_racine[bad-sign]",
        names,
        good.parity.clone(),
        |i, j| {
            if (i, j) == (x2, x1) {
                vec![(v1, num(1))]
            } else {
                (0..good.dim)
                    .filter_map(|k| {
                        let c = good.structure_constant(i, j, k);
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(alg: &SuperAlgebra, name: &str) -> AlgElement {
        alg.basis_element(alg.basis_index(name).unwrap())
    }

    #[test]
    fn kaplansky_products() {
        let k = kaplansky();
        let (e, x, y) = (el(&k, "e"), el(&k, "x"), el(&k, "y"));
        assert_eq!(k.product(&e, &x).unwrap(), x.scale(&half()));
        assert!(k.product(&x, &x).unwrap().is_zero());
        assert_eq!(k.product(&y, &x).unwrap(), e.scale(&num(-1)));
        assert_eq!(k.product(&x, &y).unwrap(), e);
    }

    #[test]
    fn racine_table_spot_checks() {
        let a = k10_racine();
        let prod = |u: &str, v: &str| {
            a.product(&el(&a, u), &el(&a, v)).unwrap()
        };
        assert_eq!(prod("v1", "v2"), el(&a, "e").scale(&num(2)));
        assert_eq!(prod("x1", "y1"), el(&a, "e").sub(&el(&a, "f").scale(&num(3))));
        assert_eq!(prod("y1", "x1"), el(&a, "f").scale(&num(3)).sub(&el(&a, "e")));
    }

    #[test]
    fn racine_unit_is_e_plus_f() {
        let a = k10_racine();
        let unit = a.unit().unwrap();
        let mut expected = vec![CycNum::zero(); 10];
        expected[0] = CycNum::one();
        expected[5] = CycNum::one();
        assert_eq!(unit, expected);
        // e, f orthogonal idempotents
        let e = el(&a, "e");
        let f = el(&a, "f");
        assert_eq!(a.product(&e, &e).unwrap(), e);
        assert_eq!(a.product(&f, &f).unwrap(), f);
        assert!(a.product(&e, &f).unwrap().is_zero());
        assert!(a.product(&f, &e).unwrap().is_zero());
        // (e + f) b = b on all basis elements
        let unit_el = a.element(unit);
        for i in 0..10 {
            let b = a.basis_element(i);
            assert_eq!(a.product(&unit_el, &b).unwrap(), b);
        }
    }

    #[test]
    fn tensor_products_match_hand_evaluation() {
        let t = k10_tensor();
        let prod = |u: &str, v: &str| t.product(&el(&t, u), &el(&t, v)).unwrap();
        // (x(x)y)(y(x)x) = e(x)e - 3/4
        let expected = el(&t, "e⊗e").sub(&el(&t, "1").scale(&CycNum::from_ratio(3, 4)));
        assert_eq!(prod("x⊗y", "y⊗x"), expected);
        // (e(x)e)(e(x)e) = e(x)e - 3/16
        let expected = el(&t, "e⊗e").sub(&el(&t, "1").scale(&CycNum::from_ratio(3, 16)));
        assert_eq!(prod("e⊗e", "e⊗e"), expected);
        // 1 is the identity
        for name in TENSOR_BASIS {
            assert_eq!(prod("1", name), el(&t, name));
            assert_eq!(prod(name, "1"), el(&t, name));
        }
    }

    #[test]
    fn supercommutativity_scans() {
        assert!(k10_racine().check_supercommutativity().passed());
        assert!(k10_tensor().check_supercommutativity().passed());
        assert!(kaplansky().check_supercommutativity().passed());
        let bad = k10_racine_bad_sign();
        let report = bad.check_supercommutativity();
        assert!(!report.passed());
        assert!(report.failures().any(|d| d.item.contains("x2") && d.item.contains("x1")));
    }

    #[test]
    fn product_bilinearity() {
        let a = k10_racine();
        let zero = a.element(vec![CycNum::zero(); 10]);
        let x1 = el(&a, "x1");
        assert!(a.product(&zero, &x1).unwrap().is_zero());
        let alpha = CycNum::from_integer(3);
        let beta = CycNum::from_ratio(-1, 2);
        let u = el(&a, "v1").add(&el(&a, "y2"));
        let v = el(&a, "x1").add(&el(&a, "e"));
        let lhs = a.product(&u.scale(&alpha), &v.scale(&beta)).unwrap();
        let rhs = a.product(&u, &v).unwrap().scale(&(&alpha * &beta));
        assert_eq!(lhs, rhs);
        // mismatch error
        let t = k10_tensor();
        assert!(matches!(
            a.product(&x1, &t.basis_element(0)),
            Err(Error::AlgebraMismatch)
        ));
    }

    #[test]
    fn isomorphism_racine_to_tensor() {
        let src = k10_racine();
        let dst = k10_tensor();
        let phi = find_isomorphism(&src, &dst).unwrap();
        assert!(phi.is_isomorphism(&src, &dst));
    }

    #[test]
    fn isomorphism_racine_to_itself_contains_identity() {
        let a = k10_racine();
        let b = k10_racine();
        let phi = find_isomorphism(&a, &b).unwrap();
        assert!(phi.is_isomorphism(&a, &b));
        assert_eq!(phi.matrix, Matrix::identity(10));
    }

    #[test]
    fn isomorphism_negative_control() {
        let src = k10_racine();
        let abelian = SuperAlgebra::new(
            "abelian10",
            vec!["a0", "a1", "a2", "a3", "a4", "a5", "b0", "b1", "b2", "b3"],
            vec![EVEN, EVEN, EVEN, EVEN, EVEN, EVEN, ODD, ODD, ODD, ODD],
            |_, _| vec![],
        );
        assert!(matches!(
            find_isomorphism(&src, &abelian),
            Err(Error::NoIsomorphismFound)
        ));
    }
}
