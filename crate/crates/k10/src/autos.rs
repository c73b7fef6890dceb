//! The automorphism group of K10 as `SL2 x SL2` extended by the factor swap
//! `delta`, acting concretely on the tensor basis by 10x10 matrices over
//! `Q(zeta_120)`.
//!
//! An `SL2Matrix` acts on the Kaplansky superalgebra fixing `e` and sending
//! `x` and `y` to its columns; a pair acts factorwise on `K (x) K`; `delta`
//! swaps the factors with the sign `(-1)^{|u||v|}`.

use crate::algebra::SuperAlgebra;
use crate::cyclo::{rational_string, CycNum, RootSpec};
use crate::linalg::Matrix;
use crate::report::{Report, ReportBuilder};
use crate::Error;

/// A 2x2 matrix over `Q(zeta_120)` with determinant 1, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Matrix {
    entries: [CycNum; 4],
}

impl SL2Matrix {
    pub fn new(entries: [CycNum; 4]) -> Result<Self, Error> {
        let det = &(&entries[0] * &entries[3]) - &(&entries[1] * &entries[2]);
        if !det.is_one() {
            return Err(Error::NotUnimodular);
        }
        Ok(SL2Matrix { entries })
    }

    pub fn identity() -> Self {
        SL2Matrix {
            entries: [CycNum::one(), CycNum::zero(), CycNum::zero(), CycNum::one()],
        }
    }

    /// The order-4 rotation `x -> y -> -x`. Under the column convention
    /// (images of `x`, `y` are the columns) its matrix is `[[0, -1], [1, 0]]`.
    pub fn sigma() -> Self {
        SL2Matrix {
            entries: [
                CycNum::zero(),
                -&CycNum::one(),
                CycNum::one(),
                CycNum::zero(),
            ],
        }
    }

    /// `diag(lambda, lambda^-1)`, scaling `x` by `lambda` and `y` by its
    /// inverse.
    pub fn toral(lambda: &CycNum) -> Result<Self, Error> {
        let inv = lambda.inverse()?;
        Ok(SL2Matrix {
            entries: [lambda.clone(), CycNum::zero(), CycNum::zero(), inv],
        })
    }

    pub fn toral_root(spec: RootSpec) -> Self {
        Self::toral(&CycNum::root_of(spec)).expect("roots of unity are invertible")
    }

    pub fn entry(&self, row: usize, col: usize) -> &CycNum {
        &self.entries[row * 2 + col]
    }

    pub fn mul(&self, other: &SL2Matrix) -> SL2Matrix {
        let e = |r: usize, c: usize| -> CycNum {
            &(self.entry(r, 0) * other.entry(0, c)) + &(self.entry(r, 1) * other.entry(1, c))
        };
        SL2Matrix {
            entries: [e(0, 0), e(0, 1), e(1, 0), e(1, 1)],
        }
    }

    pub fn inverse(&self) -> SL2Matrix {
        // adjugate; determinant is 1 by the invariant
        SL2Matrix {
            entries: [
                self.entries[3].clone(),
                -&self.entries[1],
                -&self.entries[2],
                self.entries[0].clone(),
            ],
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries[1].is_zero() && self.entries[2].is_zero()
    }

    /// Image of an element of K written as coordinates `(e, x, y)`: `e` is
    /// fixed, `x` and `y` map to the columns.
    pub fn act_on_k(&self, v: &[CycNum; 3]) -> [CycNum; 3] {
        [
            v[0].clone(),
            &(self.entry(0, 0) * &v[1]) + &(self.entry(0, 1) * &v[2]),
            &(self.entry(1, 0) * &v[1]) + &(self.entry(1, 1) * &v[2]),
        ]
    }
}

/// An element `(a, b) delta^swap` of the automorphism group, applied as
/// "swap first, pair second".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutElement {
    pub a: SL2Matrix,
    pub b: SL2Matrix,
    pub swap: bool,
}

impl AutElement {
    pub fn identity() -> Self {
        AutElement {
            a: SL2Matrix::identity(),
            b: SL2Matrix::identity(),
            swap: false,
        }
    }

    pub fn pair(a: SL2Matrix, b: SL2Matrix) -> Self {
        AutElement { a, b, swap: false }
    }

    pub fn delta() -> Self {
        AutElement {
            a: SL2Matrix::identity(),
            b: SL2Matrix::identity(),
            swap: true,
        }
    }

    /// `self` after `other` (function composition), using
    /// `(a, b) delta = delta (b, a)`.
    pub fn compose(&self, other: &AutElement) -> AutElement {
        let (oa, ob) = if self.swap {
            (other.b.clone(), other.a.clone())
        } else {
            (other.a.clone(), other.b.clone())
        };
        AutElement {
            a: self.a.mul(&oa),
            b: self.b.mul(&ob),
            swap: self.swap != other.swap,
        }
    }

    pub fn inverse(&self) -> AutElement {
        let (ia, ib) = (self.a.inverse(), self.b.inverse());
        if self.swap {
            AutElement {
                a: ib,
                b: ia,
                swap: true,
            }
        } else {
            AutElement {
                a: ia,
                b: ib,
                swap: false,
            }
        }
    }

    /// `self . other . self^-1`.
    pub fn conjugate(&self, other: &AutElement) -> AutElement {
        self.compose(other).compose(&self.inverse())
    }

    /// The 10x10 matrix of the action on the tensor basis
    /// `(1, e(x)e, x(x)x, x(x)y, y(x)x, y(x)y, e(x)x, x(x)e, e(x)y, y(x)e)`.
    pub fn matrix(&self) -> Matrix {
        // K-factor labels 0 = e, 1 = x, 2 = y; see the tensor constructor
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
        let kparity = |u: usize| -> u8 {
            if u == 0 {
                0
            } else {
                1
            }
        };
        let mut columns: Vec<Vec<CycNum>> = Vec::with_capacity(10);
        columns.push(crate::linalg::unit_vector(10, 0));
        for idx in 1..10 {
            let (mut u, mut v) = unpair(idx);
            let mut sign = 1i64;
            if self.swap {
                if kparity(u) == 1 && kparity(v) == 1 {
                    sign = -1;
                }
                std::mem::swap(&mut u, &mut v);
            }
            // factorwise images in K coordinates (e, x, y)
            let basis_k = |w: usize| -> [CycNum; 3] {
                let mut arr = [CycNum::zero(), CycNum::zero(), CycNum::zero()];
                arr[w] = CycNum::one();
                arr
            };
            let au = self.a.act_on_k(&basis_k(u));
            let bv = self.b.act_on_k(&basis_k(v));
            let mut col = vec![CycNum::zero(); 10];
            for (p, cp) in au.iter().enumerate() {
                if cp.is_zero() {
                    continue;
                }
                for (q, cq) in bv.iter().enumerate() {
                    if cq.is_zero() {
                        continue;
                    }
                    let mut c = cp * cq;
                    if sign < 0 {
                        c = -&c;
                    }
                    col[pair_index(p, q)] += &c;
                }
            }
            columns.push(col);
        }
        Matrix::from_columns(columns)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dump = |m: &SL2Matrix| -> Vec<Vec<String>> {
            (0..2)
                .map(|r| {
                    (0..2)
                        .map(|c| {
                            let e = m.entry(r, c);
                            e.as_rational()
                                .map(rational_string)
                                .unwrap_or_else(|| e.to_string())
                        })
                        .collect()
                })
                .collect()
        };
        serde_json::json!({
            "a": dump(&self.a),
            "b": dump(&self.b),
            "swap": self.swap,
        })
    }
}

/// Parameters of the toral automorphism `t_{lambda,mu}`, both entries roots
/// of unity of order dividing 120.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ToralParam {
    pub lambda: RootSpec,
    pub mu: RootSpec,
}

impl ToralParam {
    pub fn new(lambda: RootSpec, mu: RootSpec) -> Self {
        ToralParam { lambda, mu }
    }

    pub fn aut(&self) -> AutElement {
        AutElement::pair(
            SL2Matrix::toral_root(self.lambda),
            SL2Matrix::toral_root(self.mu),
        )
    }

    pub fn matrix(&self) -> Matrix {
        self.aut().matrix()
    }

    /// `(zeta_120 exponent of lambda, of mu)`, the canonical identity of the
    /// toral element.
    pub fn exponents(&self) -> (i64, i64) {
        (self.lambda.zeta120_exponent(), self.mu.zeta120_exponent())
    }

    pub fn from_exponents(a: i64, b: i64) -> Self {
        ToralParam {
            lambda: RootSpec::new(a, 120).expect("120 divides 120"),
            mu: RootSpec::new(b, 120).expect("120 divides 120"),
        }
    }
}

impl std::fmt::Display for ToralParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t({}, {})", self.lambda, self.mu)
    }
}

/// Check that a 10x10 matrix is an automorphism of the given algebra:
/// invertible, multiplicative on all basis pairs, parity-preserving.
pub fn verify_automorphism(alg: &SuperAlgebra, m: &Matrix) -> Report {
    let mut rb = ReportBuilder::new(format!("{}: automorphism check", alg.id()));
    let n = alg.dim();
    rb.check(
        "matrix invertible",
        "true",
        m.inverse().is_some().to_string(),
        m.inverse().is_some(),
    );
    for i in 0..n {
        for j in 0..n {
            let lhs = m.apply(&alg.basis_product(i, j));
            let rhs = alg.product_coords(&m.column(i), &m.column(j));
            rb.assert_that(lhs == rhs, || {
                format!(
                    "multiplicativity fails at ({}, {})",
                    alg.basis_names()[i],
                    alg.basis_names()[j]
                )
            });
        }
    }
    for j in 0..n {
        let col = m.column(j);
        let ok = col
            .iter()
            .enumerate()
            .all(|(k, c)| c.is_zero() || alg.parity(k) == alg.parity(j));
        rb.assert_that(ok, || {
            format!("parity not preserved on {}", alg.basis_names()[j])
        });
    }
    rb.finish()
}

/// One element of a toral conjugacy orbit: the parameters together with an
/// automorphism `w` such that `w t w^-1` is the element.
#[derive(Clone, Debug)]
pub struct OrbitElement {
    pub param: ToralParam,
    pub witness: AutElement,
}

/// The orbit of `t_{lambda,mu}` under conjugation by `(sigma, 1)`, `(1,
/// sigma)` and `delta`: inversion of either parameter and the parameter
/// swap. Every witness is verified by matrix conjugation before the orbit is
/// returned. Deterministic order: breadth-first from the seed, exponents
/// ordered lexicographically.
pub fn weyl_orbit(p: ToralParam) -> Vec<OrbitElement> {
    let sigma1 = AutElement::pair(SL2Matrix::sigma(), SL2Matrix::identity());
    let sigma2 = AutElement::pair(SL2Matrix::identity(), SL2Matrix::sigma());
    let delta = AutElement::delta();
    let moves: [(&AutElement, fn((i64, i64)) -> (i64, i64)); 3] = [
        (&sigma1, |(a, b)| ((-a).rem_euclid(120), b)),
        (&sigma2, |(a, b)| (a, (-b).rem_euclid(120))),
        (&delta, |(a, b)| (b, a)),
    ];
    let seed = p.exponents();
    let mut seen: Vec<(i64, i64)> = vec![seed];
    let mut out: Vec<OrbitElement> = vec![OrbitElement {
        param: p,
        witness: AutElement::identity(),
    }];
    let base_matrix = p.matrix();
    let mut head = 0;
    while head < out.len() {
        let current = out[head].clone();
        for (w, step) in &moves {
            let target = step(current.param.exponents());
            if seen.contains(&target) {
                continue;
            }
            let witness = w.compose(&current.witness);
            let param = ToralParam::from_exponents(target.0, target.1);
            // verify by matrix conjugation
            let wm = witness.matrix();
            let conj = wm
                .mul(&base_matrix)
                .mul(&wm.inverse().expect("group element"));
            assert_eq!(conj, param.matrix(), "orbit witness failed verification");
            seen.push(target);
            out.push(OrbitElement { param, witness });
        }
        head += 1;
    }
    out.sort_by_key(|e| e.param.exponents());
    out
}

/// `p` with `p sigma p^-1 = t_i = diag(i, -i)`: entries built from the
/// eighth root of unity via `c = (1 + i)/2` (so `c^2 = i/2`),
/// `p = [[c, ci], [c, -ci]]`.
pub fn sigma_toralization_witness() -> SL2Matrix {
    let i = CycNum::root_of(RootSpec::new(1, 4).expect("4 divides 120"));
    let c = (&CycNum::one() + &i).scale(&num_rational::BigRational::new(
        1.into(),
        2.into(),
    ));
    let ci = &c * &i;
    SL2Matrix::new([c.clone(), ci.clone(), c, -&ci]).expect("determinant 1 by construction")
}

/// A witness conjugating `t_lambda sigma` into the diagonal torus: with
/// `s^2 = lambda` the element `p t_s^-1` sends it to `t_i`. Requires the
/// order of `lambda` to divide 60 so the square root stays a 120th root.
pub fn toral_sigma_witness(lambda: RootSpec) -> Result<SL2Matrix, Error> {
    let exp = lambda.zeta120_exponent();
    if exp % 2 != 0 {
        return Err(Error::UnsupportedOrder(lambda.order()));
    }
    let s = RootSpec::new(exp / 2, 120)?;
    Ok(sigma_toralization_witness().mul(&SL2Matrix::toral_root(s).inverse()))
}

/// Check that the 10x10 matrix of `t_{lambda,mu}` equals
/// `diag(1, 1, lm, l/m, m/l, 1/(lm), m, l, 1/m, 1/l)` for the pair
/// `(zeta_5, zeta_3)` and `samples` further pseudorandom parameter pairs,
/// and that each matrix is a parity-preserving automorphism of the tensor
/// presentation.
pub fn check_toral_matrices(seed: u64, samples: usize) -> Report {
    use rand::{Rng, SeedableRng};
    let mut rb = ReportBuilder::new("toral automorphism matrices");
    let alg = crate::algebra::k10_tensor();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = vec![ToralParam::new(
        RootSpec::new(1, 5).expect("5 divides 120"),
        RootSpec::new(1, 3).expect("3 divides 120"),
    )];
    for _ in 0..samples {
        pairs.push(ToralParam::from_exponents(
            rng.gen_range(0..120),
            rng.gen_range(0..120),
        ));
    }
    for p in pairs {
        let l = CycNum::root_of(p.lambda);
        let m = CycNum::root_of(p.mu);
        let inv = |c: &CycNum| c.inverse().expect("root of unity");
        let lm = &l * &m;
        let expected = Matrix::diagonal(vec![
            CycNum::one(),
            CycNum::one(),
            lm.clone(),
            &l * &inv(&m),
            &m * &inv(&l),
            inv(&lm),
            m.clone(),
            l.clone(),
            inv(&m),
            inv(&l),
        ]);
        let actual = p.matrix();
        rb.check(
            format!("{} matrix shape", p),
            "expected diagonal",
            if actual == expected {
                "expected diagonal".to_string()
            } else {
                "different matrix".to_string()
            },
            actual == expected,
        );
        let auto = verify_automorphism(&alg, &actual);
        rb.assert_that(auto.passed(), || {
            format!("{} is not an automorphism of the tensor presentation", p)
        });
    }
    rb.finish()
}

/// Element of the finite subgroup `N_120`: toral exponents `(a, b)` mod 120,
/// a sigma flag per factor, and the swap flag. Multiplication is symbolic,
/// using `sigma t_a = t_{-a} sigma`, `sigma^2 = t_60` (that is `t_{-1}`),
/// and the factor swap of `delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NElem {
    pub a: i64,
    pub b: i64,
    pub s1: bool,
    pub s2: bool,
    pub d: bool,
}

impl NElem {
    pub fn new(a: i64, b: i64, s1: bool, s2: bool, d: bool) -> Self {
        NElem {
            a: a.rem_euclid(120),
            b: b.rem_euclid(120),
            s1,
            s2,
            d,
        }
    }

    /// `self . other` in the same "apply right factor first" convention as
    /// `AutElement::compose`.
    pub fn compose(&self, other: &NElem) -> NElem {
        let (oa, os1, ob, os2) = if self.d {
            (other.b, other.s2, other.a, other.s1)
        } else {
            (other.a, other.s1, other.b, other.s2)
        };
        let factor = |x: i64, sx: bool, y: i64, sy: bool| -> (i64, bool) {
            // (t_x sigma^sx)(t_y sigma^sy)
            let sign = if sx { -1 } else { 1 };
            let extra = if sx && sy { 60 } else { 0 };
            ((x + sign * y + extra).rem_euclid(120), sx != sy)
        };
        let (na, ns1) = factor(self.a, self.s1, oa, os1);
        let (nb, ns2) = factor(self.b, self.s2, ob, os2);
        NElem {
            a: na,
            b: nb,
            s1: ns1,
            s2: ns2,
            d: self.d != other.d,
        }
    }

    pub fn commutes_with(&self, other: &NElem) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn aut(&self) -> AutElement {
        let sl2 = |e: i64, s: bool| -> SL2Matrix {
            let t = SL2Matrix::toral_root(RootSpec::new(e, 120).expect("order 120"));
            if s {
                t.mul(&SL2Matrix::sigma())
            } else {
                t
            }
        };
        AutElement {
            a: sl2(self.a, self.s1),
            b: sl2(self.b, self.s2),
            swap: self.d,
        }
    }
}

/// All 115,200 elements of `N_120` in a fixed order.
pub fn n120_elements() -> Vec<NElem> {
    let mut out = Vec::with_capacity(115_200);
    for a in 0..120 {
        for b in 0..120 {
            for s1 in [false, true] {
                for s2 in [false, true] {
                    for d in [false, true] {
                        out.push(NElem::new(a, b, s1, s2, d));
                    }
                }
            }
        }
    }
    out
}

/// Desk-scale support for the classification of the maximal abelian
/// diagonalizable subgroups: commutativity of the diagonal-plus-swap family,
/// self-centralizing behaviour of both candidates inside the finite group
/// `N_120`, and the conjugation identities the argument rests on.
pub fn mad_desk_check() -> Report {
    let mut rb = ReportBuilder::new("MAD desk check in N_120");

    // (a) the diagonal family {t_{l,l}} together with delta is commutative
    let mut diag_gens: Vec<NElem> = (0..120).map(|a| NElem::new(a, a, false, false, false)).collect();
    diag_gens.push(NElem::new(0, 0, false, false, true));
    let mut commutative = true;
    'outer: for g in &diag_gens {
        for h in &diag_gens {
            if !g.commutes_with(h) {
                commutative = false;
                break 'outer;
            }
        }
    }
    rb.check(
        "diagonal family with swap is commutative",
        "true",
        commutative.to_string(),
        commutative,
    );

    // (b) centralizers inside N_120
    let all = n120_elements();
    rb.note("order of N_120", all.len().to_string());

    // the swap-diagonal subgroup M = {t_{a,a}} x {1, delta}
    let m_gens = [
        NElem::new(1, 1, false, false, false),
        NElem::new(0, 0, false, false, true),
    ];
    let m_set: Vec<NElem> = all
        .iter()
        .copied()
        .filter(|g| g.a == g.b && !g.s1 && !g.s2)
        .collect();
    let m_centralizer: Vec<NElem> = all
        .iter()
        .copied()
        .filter(|g| m_gens.iter().all(|h| g.commutes_with(h)))
        .collect();
    rb.check_eq("|M meet N_120|", 240usize, m_set.len());
    rb.check(
        "centralizer of M equals M",
        "equal sets",
        if m_centralizer == m_set { "equal sets" } else { "different" }.to_string(),
        m_centralizer == m_set,
    );

    // the full torus T^2 meet N_120
    let t_gens = [
        NElem::new(1, 0, false, false, false),
        NElem::new(0, 1, false, false, false),
    ];
    let t_set: Vec<NElem> = all
        .iter()
        .copied()
        .filter(|g| !g.s1 && !g.s2 && !g.d)
        .collect();
    let t_centralizer: Vec<NElem> = all
        .iter()
        .copied()
        .filter(|g| t_gens.iter().all(|h| g.commutes_with(h)))
        .collect();
    rb.check_eq("|T^2 meet N_120|", 14_400usize, t_set.len());
    rb.check(
        "centralizer of T^2 equals T^2",
        "equal sets",
        if t_centralizer == t_set { "equal sets" } else { "different" }.to_string(),
        t_centralizer == t_set,
    );

    // (c) the conjugation identities behind the argument, on samples,
    // verified on actual 10x10 matrices
    let delta = AutElement::delta();
    for (ea, eb) in [(7, 11), (30, 45), (1, 119)] {
        let f = SL2Matrix::toral_root(RootSpec::new(ea, 120).expect("120")).mul(&SL2Matrix::sigma());
        let g = SL2Matrix::toral_root(RootSpec::new(eb, 120).expect("120"));
        let fg = AutElement::pair(f.clone(), g.clone());
        let swapped = AutElement::pair(g, f);
        let ok = delta.conjugate(&fg) == swapped;
        rb.check(
            format!("delta (f,g) delta^-1 = (g,f) at sample ({}, {})", ea, eb),
            "true",
            ok.to_string(),
            ok,
        );
    }
    for e in [24, 40, 17] {
        // sigma t sigma^-1 = t^-1, checked on the matrix action
        let t = ToralParam::from_exponents(e, 0);
        let w = AutElement::pair(SL2Matrix::sigma(), SL2Matrix::identity());
        let lhs = w.conjugate(&t.aut()).matrix();
        let rhs = ToralParam::from_exponents(-e, 0).matrix();
        rb.check(
            format!("sigma t sigma^-1 = t^-1 at exponent {}", e),
            "equal matrices",
            if lhs == rhs { "equal matrices" } else { "different" }.to_string(),
            lhs == rhs,
        );
    }
    {
        let p = sigma_toralization_witness();
        let i = CycNum::root_of(RootSpec::new(1, 4).expect("4 divides 120"));
        let conj = p.mul(&SL2Matrix::sigma()).mul(&p.inverse());
        let expected = SL2Matrix::toral(&i).expect("unit");
        rb.check(
            "p sigma p^-1 = t_i",
            "equal",
            if conj == expected { "equal" } else { "different" }.to_string(),
            conj == expected,
        );
    }

    // encoding sanity: symbolic composition agrees with matrix composition
    let samples = [
        NElem::new(3, 7, true, false, false),
        NElem::new(10, 50, false, true, true),
        NElem::new(119, 60, true, true, false),
        NElem::new(0, 1, false, false, true),
    ];
    for g in &samples {
        for h in &samples {
            let sym = g.compose(h).aut().matrix();
            let mat = g.aut().matrix().mul(&h.aut().matrix());
            rb.assert_that(sym == mat, || {
                format!("N_120 encoding disagrees with matrices at {:?} . {:?}", g, h)
            });
        }
    }
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::k10_tensor;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zeta(k: i64, n: i64) -> RootSpec {
        RootSpec::new(k, n).unwrap()
    }

    #[test]
    fn sigma_action_and_order() {
        let s = SL2Matrix::sigma();
        // x -> y, y -> -x
        let x = [CycNum::zero(), CycNum::one(), CycNum::zero()];
        let y = [CycNum::zero(), CycNum::zero(), CycNum::one()];
        assert_eq!(s.act_on_k(&x), y);
        assert_eq!(
            s.act_on_k(&y),
            [CycNum::zero(), -&CycNum::one(), CycNum::zero()]
        );
        // order 4, square = t_{-1}
        let s2 = s.mul(&s);
        assert_eq!(s2, SL2Matrix::toral(&CycNum::from_integer(-1)).unwrap());
        assert_eq!(s2.mul(&s2), SL2Matrix::identity());
        assert_ne!(s2, SL2Matrix::identity());
    }

    #[test]
    fn unimodularity_enforced() {
        let bad = SL2Matrix::new([
            CycNum::from_integer(2),
            CycNum::zero(),
            CycNum::zero(),
            CycNum::one(),
        ]);
        assert!(matches!(bad, Err(Error::NotUnimodular)));
    }

    #[test]
    fn toral_matrix_is_the_expected_diagonal() {
        let lam = CycNum::root_of(zeta(1, 5));
        let mu = CycNum::root_of(zeta(1, 3));
        let t = ToralParam::new(zeta(1, 5), zeta(1, 3));
        let m = t.matrix();
        let inv = |c: &CycNum| c.inverse().unwrap();
        let expected = Matrix::diagonal(vec![
            CycNum::one(),
            CycNum::one(),
            &lam * &mu,
            &lam * &inv(&mu),
            &mu * &inv(&lam),
            inv(&(&lam * &mu)),
            mu.clone(),
            lam.clone(),
            inv(&mu),
            inv(&lam),
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn delta_matrix_signs() {
        let d = AutElement::delta().matrix();
        let t = k10_tensor();
        let xx = t.basis_index("x⊗x").unwrap();
        let ex = t.basis_index("e⊗x").unwrap();
        let xe = t.basis_index("x⊗e").unwrap();
        assert_eq!(d[(xx, xx)], -&CycNum::one());
        assert_eq!(d[(xe, ex)], CycNum::one());
        assert_eq!(d[(ex, ex)], CycNum::zero());
        // delta squared is the identity
        assert_eq!(d.mul(&d), Matrix::identity(10));
        assert_eq!(AutElement::identity().matrix(), Matrix::identity(10));
    }

    #[test]
    fn automorphism_checks() {
        let alg = k10_tensor();
        let t = ToralParam::new(zeta(1, 5), zeta(1, 3));
        assert!(verify_automorphism(&alg, &t.matrix()).passed());
        assert!(verify_automorphism(&alg, &AutElement::delta().matrix()).passed());
        // negative control: a diagonal scaling that is not multiplicative
        let mut bad = vec![CycNum::one(); 10];
        bad[9] = CycNum::from_integer(2);
        assert!(!verify_automorphism(&alg, &Matrix::diagonal(bad)).passed());
    }

    #[test]
    fn matrix_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let g = NElem::new(
                rng.gen_range(0..120),
                rng.gen_range(0..120),
                rng.gen(),
                rng.gen(),
                rng.gen(),
            );
            let h = NElem::new(
                rng.gen_range(0..120),
                rng.gen_range(0..120),
                rng.gen(),
                rng.gen(),
                rng.gen(),
            );
            let lhs = g.aut().compose(&h.aut()).matrix();
            let rhs = g.aut().matrix().mul(&h.aut().matrix());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conjugation_on_torals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sigma1 = AutElement::pair(SL2Matrix::sigma(), SL2Matrix::identity());
        let sigma2 = AutElement::pair(SL2Matrix::identity(), SL2Matrix::sigma());
        let delta = AutElement::delta();
        for _ in 0..20 {
            let (a, b) = (rng.gen_range(0..120), rng.gen_range(0..120));
            let t = ToralParam::from_exponents(a, b);
            assert_eq!(
                sigma1.conjugate(&t.aut()).matrix(),
                ToralParam::from_exponents(-a, b).matrix()
            );
            assert_eq!(
                sigma2.conjugate(&t.aut()).matrix(),
                ToralParam::from_exponents(a, -b).matrix()
            );
            assert_eq!(
                delta.conjugate(&t.aut()).matrix(),
                ToralParam::from_exponents(b, a).matrix()
            );
        }
    }

    #[test]
    fn weyl_orbit_shapes() {
        let orbit = weyl_orbit(ToralParam::new(zeta(1, 3), zeta(1, 4)));
        assert_eq!(orbit.len(), 8);
        // contains the swapped pair, reached through delta
        let target = ToralParam::new(zeta(1, 4), zeta(1, 3)).exponents();
        assert!(orbit.iter().any(|e| e.param.exponents() == target));

        let trivial = weyl_orbit(ToralParam::new(zeta(0, 1), zeta(0, 1)));
        assert_eq!(trivial.len(), 1);

        // inverting one parameter only
        let orbit = weyl_orbit(ToralParam::new(zeta(5, 6), zeta(1, 3)));
        let target = ToralParam::new(zeta(5, 6), zeta(2, 3)).exponents();
        assert!(orbit.iter().any(|e| e.param.exponents() == target));
    }

    #[test]
    fn sigma_toralization() {
        let p = sigma_toralization_witness();
        let i = CycNum::root_of(zeta(1, 4));
        let conj = p.mul(&SL2Matrix::sigma()).mul(&p.inverse());
        assert_eq!(conj, SL2Matrix::toral(&i).unwrap());

        // t_{zeta_6} sigma conjugates into the torus via s = t_{zeta_12}
        let lam = zeta(1, 6);
        let w = toral_sigma_witness(lam).unwrap();
        let t_sigma = SL2Matrix::toral_root(lam).mul(&SL2Matrix::sigma());
        let conj = w.mul(&t_sigma).mul(&w.inverse());
        assert!(conj.is_diagonal());
        assert_eq!(conj, SL2Matrix::toral(&i).unwrap());
    }

    #[test]
    fn mad_desk_check_passes() {
        let report = mad_desk_check();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }
}
