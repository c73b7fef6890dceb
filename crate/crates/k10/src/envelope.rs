//! Grassmann envelope of a superalgebra and the super-Jordan check.
//!
//! The envelope pairs even basis elements with even Grassmann monomials and
//! odd basis elements with odd ones, over at most four anticommuting
//! generators. On the envelope the super-product becomes an honest
//! commutative product, so the super-Jordan property of the algebra is
//! equivalent to the Jordan identity holding in the envelope; the check below
//! verifies the fully linearized identity on all structured basis quadruples,
//! which suffices by multilinearity.

use std::collections::BTreeMap;

use crate::algebra::SuperAlgebra;
use crate::cyclo::CycNum;
use crate::report::{Report, ReportBuilder};
use crate::Error;

pub const MAX_GENERATORS: u32 = 4;

/// Element of the Grassmann envelope: a map from (basis index, Grassmann
/// monomial mask) to an exact coefficient. Bit `g` of the mask means the
/// generator `theta_g` appears; monomials are kept sorted by generator index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnvelopeElement {
    terms: BTreeMap<(usize, u8), CycNum>,
}

impl EnvelopeElement {
    pub fn zero() -> Self {
        EnvelopeElement::default()
    }

    /// `b_i (x) theta_mask`, where `mask` selects Grassmann generators.
    pub fn structured(basis: usize, mask: u8) -> Result<Self, Error> {
        if mask >= 1 << MAX_GENERATORS {
            return Err(Error::TooManyGenerators);
        }
        let mut terms = BTreeMap::new();
        terms.insert((basis, mask), CycNum::one());
        Ok(EnvelopeElement { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, u8), &CycNum)> {
        self.terms.iter()
    }

    fn insert(&mut self, key: (usize, u8), value: CycNum) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &EnvelopeElement) -> EnvelopeElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &EnvelopeElement) -> EnvelopeElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.insert(*k, -v);
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> EnvelopeElement {
        if c.is_zero() {
            return EnvelopeElement::zero();
        }
        EnvelopeElement {
            terms: self.terms.iter().map(|(k, v)| (*k, c * v)).collect(),
        }
    }

    /// Envelope product: algebra product on the first leg, exterior product
    /// with inversion-count sign on the Grassmann leg; intersecting monomials
    /// vanish.
    pub fn mul(&self, other: &EnvelopeElement, alg: &SuperAlgebra) -> EnvelopeElement {
        let mut out = EnvelopeElement::zero();
        for (&(i, m1), c1) in &self.terms {
            for (&(j, m2), c2) in &other.terms {
                if m1 & m2 != 0 {
                    continue;
                }
                let sign = grassmann_sign(m1, m2);
                let mut coeff = c1 * c2;
                if sign < 0 {
                    coeff = -&coeff;
                }
                let mask = m1 | m2;
                for k in 0..alg.dim() {
                    let sc = alg.structure_constant(i, j, k);
                    if !sc.is_zero() {
                        out.insert((k, mask), &coeff * sc);
                    }
                }
            }
        }
        out
    }
}

/// Sign of reordering the concatenation `theta_{m1} theta_{m2}` into the
/// canonical sorted monomial: parity of the number of pairs `(a in m1,
/// b in m2)` with `a > b`. Assumes disjoint masks.
fn grassmann_sign(m1: u8, m2: u8) -> i32 {
    let mut inversions = 0u32;
    for a in 0..MAX_GENERATORS {
        if m1 & (1 << a) != 0 {
            inversions += (m2 & ((1 << a) - 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Check that the envelope product is commutative on structured elements:
/// this is exactly supercommutativity of the underlying algebra, expressed
/// through the Grassmann signs.
pub fn check_envelope_commutativity(alg: &SuperAlgebra) -> Report {
    let mut rb = ReportBuilder::new(format!("{}: envelope commutativity", alg.id()));
    let n = alg.dim();
    for i in 0..n {
        let mi = if alg.parity(i) == 1 { 0b01 } else { 0 };
        let u = EnvelopeElement::structured(i, mi).expect("small mask");
        for j in 0..n {
            let mj = if alg.parity(j) == 1 { 0b10 } else { 0 };
            let v = EnvelopeElement::structured(j, mj).expect("small mask");
            let uv = u.mul(&v, alg);
            let vu = v.mul(&u, alg);
            rb.assert_that(uv == vu, || {
                format!(
                    "envelope product not commutative at ({}, {})",
                    alg.basis_names()[i],
                    alg.basis_names()[j]
                )
            });
        }
    }
    rb.note("pairs checked", (n * n).to_string());
    rb.finish()
}

/// Linearization core `L(x, y) = ((x x) y) x - (x x)(y x)`.
fn jordan_core(x: &EnvelopeElement, y: &EnvelopeElement, alg: &SuperAlgebra) -> EnvelopeElement {
    let sq = x.mul(x, alg);
    let lhs = sq.mul(y, alg).mul(x, alg);
    let rhs = sq.mul(&y.mul(x, alg), alg);
    lhs.sub(&rhs)
}

/// Full linearization of `L` in its first argument, extracted by the
/// third-order finite difference over subsets of `{u, v, w}`. Vanishing of
/// this multilinear expression on a spanning set, together with vanishing of
/// `L` itself on the same set, is equivalent to the Jordan identity.
fn linearized_jordan(
    u: &EnvelopeElement,
    v: &EnvelopeElement,
    w: &EnvelopeElement,
    y: &EnvelopeElement,
    alg: &SuperAlgebra,
) -> EnvelopeElement {
    let mut total = EnvelopeElement::zero();
    for bits in 1u8..8 {
        let mut x = EnvelopeElement::zero();
        if bits & 1 != 0 {
            x = x.add(u);
        }
        if bits & 2 != 0 {
            x = x.add(v);
        }
        if bits & 4 != 0 {
            x = x.add(w);
        }
        let term = jordan_core(&x, y, alg);
        if (3 - bits.count_ones()) % 2 == 0 {
            total = total.add(&term);
        } else {
            total = total.sub(&term);
        }
    }
    total
}

/// Verify the super-Jordan property of `alg` through its Grassmann envelope:
/// the linearized Jordan identity on all `dim^4` structured basis quadruples
/// (odd slots carry distinct Grassmann generators), plus envelope
/// commutativity.
pub fn check_jordan_envelope(alg: &SuperAlgebra) -> Report {
    let comm = check_envelope_commutativity(alg);
    let mut rb = ReportBuilder::new(format!("{}: super-Jordan via Grassmann envelope", alg.id()));
    rb.check(
        "envelope commutativity",
        "pass",
        if comm.passed() { "pass" } else { "fail" },
        comm.passed(),
    );
    let n = alg.dim();
    let structured = |i: usize, gen: u8| -> EnvelopeElement {
        let mask = if alg.parity(i) == 1 { 1 << gen } else { 0 };
        EnvelopeElement::structured(i, mask).expect("within generator budget")
    };
    let mut quadruples = 0usize;
    for i in 0..n {
        let u = structured(i, 0);
        for j in 0..n {
            let v = structured(j, 1);
            for k in 0..n {
                let w = structured(k, 2);
                for l in 0..n {
                    let y = structured(l, 3);
                    quadruples += 1;
                    let t = linearized_jordan(&u, &v, &w, &y, alg);
                    rb.assert_that(t.is_zero(), || {
                        format!(
                            "linearized Jordan identity fails at ({}, {}, {}, {})",
                            alg.basis_names()[i],
                            alg.basis_names()[j],
                            alg.basis_names()[k],
                            alg.basis_names()[l]
                        )
                    });
                }
            }
        }
    }
    rb.note("quadruples checked", quadruples.to_string());
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{kaplansky, SuperAlgebra, EVEN};

    #[test]
    fn grassmann_signs() {
        assert_eq!(grassmann_sign(0b01, 0b10), 1); // theta1 theta2 in order
        assert_eq!(grassmann_sign(0b10, 0b01), -1); // theta2 theta1 swaps
        assert_eq!(grassmann_sign(0b00, 0b11), 1);
        assert_eq!(grassmann_sign(0b101, 0b010), -1); // theta1 theta3 * theta2
    }

    #[test]
    fn odd_squares_vanish_in_envelope() {
        let k = kaplansky();
        let x = EnvelopeElement::structured(1, 0b01).unwrap();
        assert!(x.mul(&x, &k).is_zero());
    }

    #[test]
    fn generator_budget_enforced() {
        assert!(matches!(
            EnvelopeElement::structured(0, 0b10000),
            Err(Error::TooManyGenerators)
        ));
    }

    #[test]
    fn kaplansky_envelope_is_jordan() {
        let report = check_jordan_envelope(&kaplansky());
        assert!(report.passed());
    }

    #[test]
    fn non_jordan_commutative_algebra_fails() {
        // commutative two-dimensional algebra with a a = b, a b = a, b b = 0:
        // ((a a) a) a = a a = b but (a a)(a a) = b b = 0, so not Jordan
        let bad = SuperAlgebra::new(
            "non-jordan",
            vec!["a", "b"],
            vec![EVEN, EVEN],
            |i, j| match (i, j) {
                (0, 0) => vec![(1, CycNum::one())],
                (0, 1) | (1, 0) => vec![(0, CycNum::one())],
                _ => vec![],
            },
        );
        let report = check_jordan_envelope(&bad);
        assert!(!report.passed());
    }
}
