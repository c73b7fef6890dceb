//! Exact arithmetic in the cyclotomic field `Q(zeta_120)`.
//!
//! Every root of unity used by the grading computations (omega of order 3,
//! i of order 4, kappa of order 5, -omega of order 6, and the order-8 roots
//! needed to toralize sigma) lives in this field, since lcm(3,4,5,6,8) = 120.
//! Elements are polynomials in the primitive root `zeta_120`, reduced modulo
//! the 120th cyclotomic polynomial
//!
//! ```text
//! Phi_120(x) = x^32 + x^28 - x^20 - x^16 - x^12 + x^4 + 1
//! ```
//!
//! of degree phi(120) = 32, with arbitrary-precision rational coefficients.
//! Equality is coefficient-wise, so all checks downstream are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::Error;

/// Degree of `Phi_120`, i.e. phi(120).
pub const DEGREE: usize = 32;

/// Order of the generating root of unity.
pub const ORDER: u64 = 120;

/// Coefficients of `Phi_120(x)`, index = power of x.
pub static PHI_120: Lazy<[i64; DEGREE + 1]> = Lazy::new(|| {
    let mut c = [0i64; DEGREE + 1];
    c[32] = 1;
    c[28] = 1;
    c[20] = -1;
    c[16] = -1;
    c[12] = -1;
    c[4] = 1;
    c[0] = 1;
    c
});

// Reduction table: REDUCE[d - DEGREE] = x^d mod Phi_120 for d in DEGREE..ORDER.
// This covers both raw powers of zeta (degree < 120) and products of two
// reduced polynomials (degree <= 62).
static REDUCE: Lazy<Vec<[i64; DEGREE]>> = Lazy::new(|| {
    let entries = ORDER as usize - DEGREE;
    let mut table: Vec<[i64; DEGREE]> = Vec::with_capacity(entries);
    // x^32 = -x^28 + x^20 + x^16 + x^12 - x^4 - 1
    let mut cur = [0i64; DEGREE];
    for k in 0..DEGREE {
        cur[k] = -PHI_120[k];
    }
    table.push(cur);
    for _ in 1..entries {
        // multiply by x, folding the overflowing top coefficient back in
        let top = cur[DEGREE - 1];
        let mut next = [0i64; DEGREE];
        for k in (1..DEGREE).rev() {
            next[k] = cur[k - 1];
        }
        if top != 0 {
            for k in 0..DEGREE {
                next[k] += top * table[0][k];
            }
        }
        cur = next;
        table.push(cur);
    }
    table
});

/// An element of `Q(zeta_120)` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            coeffs: vec![BigRational::zero(); DEGREE],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = q;
        z
    }

    /// `zeta_120^k` for any integer exponent.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(ORDER as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Self::reduce(raw)
    }

    /// The root of unity denoted by `spec`, i.e. `zeta_n^k = zeta_120^(120k/n)`.
    pub fn root_of(spec: RootSpec) -> Self {
        Self::zeta_pow(spec.k * (ORDER as i64 / spec.n))
    }

    fn reduce(mut raw: Vec<BigRational>) -> Self {
        for d in (DEGREE..raw.len()).rev() {
            if raw[d].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut raw[d], BigRational::zero());
            let row = &REDUCE[d - DEGREE];
            for (k, &m) in row.iter().enumerate() {
                if m != 0 {
                    let add = &c * BigRational::from_integer(BigInt::from(m));
                    raw[k] += add;
                }
            }
        }
        raw.truncate(DEGREE);
        raw.resize(DEGREE, BigRational::zero());
        CycNum { coeffs: raw }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// Highest index with a nonzero coefficient, or `None` for zero.
    fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// If the element is rational (degree 0), return the coefficient.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self.degree() {
            None => Some(&self.coeffs[0]),
            Some(0) => Some(&self.coeffs[0]),
            Some(_) => None,
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Multiplicative inverse via extended Euclid against `Phi_120`.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        // Extended gcd of self (as polynomial) and Phi_120 over Q[x].
        // Phi_120 is irreducible, so the gcd is a nonzero constant.
        let phi: Vec<BigRational> = PHI_120
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let a = trim(self.coeffs.clone());
        let (g, _, t) = poly_ext_gcd(phi, a);
        // g is a constant; inverse = t / g
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let coeffs: Vec<BigRational> = t.into_iter().map(|c| c * &ginv).collect();
        Ok(Self::reduce(coeffs))
    }

    /// `self^k` for any integer exponent (negative uses the inverse).
    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order, if the element is a root of unity of order
    /// dividing 120.
    pub fn unit_order(&self) -> Option<u64> {
        let mut p = self.clone();
        for n in 1..=ORDER {
            if p.is_one() {
                return Some(n);
            }
            p = &p * self;
        }
        None
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycNum {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_sub_scaled(a: &mut Vec<BigRational>, b: &[BigRational], factor: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (i, bc) in b.iter().enumerate() {
        if !bc.is_zero() {
            a[i + shift] -= bc * factor;
        }
    }
    *a = trim(std::mem::take(a));
}

/// Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g.
fn poly_ext_gcd(
    a: Vec<BigRational>,
    b: Vec<BigRational>,
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let zero = || vec![BigRational::zero()];
    let one = || vec![BigRational::one()];
    let (mut r0, mut r1) = (trim(a), trim(b));
    let (mut s0, mut s1) = (one(), zero());
    let (mut t0, mut t1) = (zero(), one());
    while !(r1.len() == 1 && r1[0].is_zero()) {
        // divide r0 by r1
        let mut rem = r0.clone();
        let mut quo: Vec<BigRational> = vec![BigRational::zero(); rem.len().saturating_sub(r1.len()) + 1];
        while rem.len() >= r1.len() && !(rem.len() == 1 && rem[0].is_zero()) {
            let shift = rem.len() - r1.len();
            let factor = &rem[rem.len() - 1] / &r1[r1.len() - 1];
            if factor.is_zero() {
                break;
            }
            quo[shift] += &factor;
            poly_sub_scaled(&mut rem, &r1.clone(), &factor, shift);
            if rem.len() == 1 && rem[0].is_zero() {
                break;
            }
        }
        let quo = trim(quo);
        let next_s = poly_sub_mul(&s0, &quo, &s1);
        let next_t = poly_sub_mul(&t0, &quo, &t1);
        r0 = r1;
        r1 = trim(rem);
        s0 = s1;
        s1 = next_s;
        t0 = t1;
        t1 = next_t;
    }
    (r0, s0, t0)
}

/// a - q*b in Q[x].
fn poly_sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); (q.len() + b.len()).max(a.len() + 1)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, qc) in q.iter().enumerate() {
        if qc.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                out[i + j] -= qc * bc;
            }
        }
    }
    trim(out)
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        let (da, db) = match (self.degree(), rhs.degree()) {
            (Some(da), Some(db)) => (da, db),
            _ => return CycNum::zero(),
        };
        // scalar fast paths keep the purely rational computations cheap
        if da == 0 {
            return rhs.scale(&self.coeffs[0]);
        }
        if db == 0 {
            return self.scale(&rhs.coeffs[0]);
        }
        let mut raw = vec![BigRational::zero(); da + db + 1];
        for i in 0..=da {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in 0..=db {
                let b = &rhs.coeffs[j];
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycNum::reduce(raw)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({})", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "z^{}", k)?;
            } else {
                write!(f, "{}*z^{}", a, k)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Exact rational string "p/q" (or "p" for integers), as used in JSON dumps.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A root of unity `zeta_n^k`, written `k/n` in the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSpec {
    k: i64,
    n: i64,
}

impl RootSpec {
    pub fn new(k: i64, n: i64) -> Result<Self, Error> {
        if n <= 0 || ORDER as i64 % n != 0 {
            return Err(Error::UnsupportedOrder(n));
        }
        let k = k.rem_euclid(n);
        let g = num_integer::gcd(k, n);
        if g > 1 {
            Ok(RootSpec { k: k / g, n: n / g })
        } else {
            Ok(RootSpec { k, n })
        }
    }

    /// Exponent of `zeta_120` representing this root.
    pub fn zeta120_exponent(&self) -> i64 {
        self.k * (ORDER as i64 / self.n)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Order of the root as a group element.
    pub fn order(&self) -> i64 {
        if self.k == 0 {
            1
        } else {
            self.n
        }
    }

    pub fn inverse(&self) -> Self {
        RootSpec {
            k: (-self.k).rem_euclid(self.n),
            n: self.n,
        }
    }

    /// Parse the CLI syntax "k/n".
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (k, n) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected k/n, got {:?}", s)))?;
        let k: i64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {:?}", s)))?;
        let n: i64 = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad order in {:?}", s)))?;
        Self::new(k, n)
    }
}

impl fmt::Display for RootSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

/// A small pseudorandom field element: a short rational combination of
/// powers of the generator.
fn pseudorandom_element(rng: &mut impl rand::Rng) -> CycNum {
    let mut c = CycNum::zero();
    for _ in 0..4 {
        let k = rng.gen_range(0..DEGREE);
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=4);
        c += &CycNum::zeta_pow(k as i64).scale(&BigRational::new(num.into(), den.into()));
    }
    c
}

/// Spot-check the field axioms (associativity, commutativity,
/// distributivity, inverses) on `samples` pseudorandom triples drawn from a
/// seeded generator; every comparison is exact.
pub fn check_field_axioms(seed: u64, samples: usize) -> crate::report::Report {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rb = crate::report::ReportBuilder::new("cyclotomic field axioms");
    for i in 0..samples {
        let a = pseudorandom_element(&mut rng);
        let b = pseudorandom_element(&mut rng);
        let c = pseudorandom_element(&mut rng);
        rb.assert_that(&(&a * &b) * &c == &a * &(&b * &c), || {
            format!("sample {}: multiplication is not associative", i)
        });
        rb.assert_that(&a * &b == &b * &a, || {
            format!("sample {}: multiplication is not commutative", i)
        });
        rb.assert_that(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || {
            format!("sample {}: distributivity fails", i)
        });
        rb.assert_that(&(&a + &b) + &c == &a + &(&b + &c), || {
            format!("sample {}: addition is not associative", i)
        });
        if !a.is_zero() {
            let inv = a.inverse().expect("nonzero element");
            rb.assert_that((&a * &inv).is_one(), || {
                format!("sample {}: inverse does not multiply back to 1", i)
            });
        }
    }
    rb.note("samples", samples.to_string());
    rb.note("seed", seed.to_string());
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn zeta(k: i64, n: i64) -> CycNum {
        CycNum::root_of(RootSpec::new(k, n).unwrap())
    }

    #[test]
    fn phi_120_divides_x120_minus_1_and_has_degree_32() {
        assert_eq!(PHI_120[DEGREE], 1);
        // zeta^120 = 1 is exactly the statement that Phi_120 | x^120 - 1
        // once zeta is reduced mod Phi_120.
        assert!(CycNum::zeta_pow(120).is_one());
        // long division check: x^120 - 1 mod Phi_120 == 0
        let mut rem: Vec<BigRational> = vec![BigRational::zero(); 121];
        rem[120] = BigRational::one();
        rem[0] = -BigRational::one();
        let phi: Vec<BigRational> = PHI_120
            .iter()
            .map(|&c| BigRational::from_integer(num_bigint::BigInt::from(c)))
            .collect();
        while rem.len() >= phi.len() {
            let shift = rem.len() - phi.len();
            let factor = rem.last().unwrap().clone();
            poly_sub_scaled(&mut rem, &phi, &factor, shift);
            if rem.len() == 1 {
                break;
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn generator_is_primitive() {
        let mut p = CycNum::one();
        let z = CycNum::zeta_pow(1);
        for k in 1..120 {
            p = &p * &z;
            assert!(!p.is_one(), "zeta^{} must not be 1", k);
        }
        assert!((&p * &z).is_one());
    }

    #[test]
    fn addition_examples() {
        let i = zeta(1, 4);
        assert_eq!(&i + &i, i.scale(&BigRational::from_integer(2.into())));
        assert!((&CycNum::one() + &-&CycNum::one()).is_zero());
        // zeta_3 + zeta_3^2 = -1
        let w = zeta(1, 3);
        let w2 = zeta(2, 3);
        assert_eq!(&w + &w2, CycNum::from_integer(-1));
    }

    #[test]
    fn multiplication_examples() {
        // zeta_120^60 = -1, squares to 1
        let m = CycNum::zeta_pow(60);
        assert_eq!(m, CycNum::from_integer(-1));
        assert!((&m * &m).is_one());
        // zeta_3 * zeta_4 = zeta_120^70 = zeta_12^7
        assert_eq!(&zeta(1, 3) * &zeta(1, 4), CycNum::zeta_pow(70));
        assert_eq!(zeta(7, 12), CycNum::zeta_pow(70));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            CycNum::from_integer(2).inverse().unwrap(),
            CycNum::from_ratio(1, 2)
        );
        assert_eq!(
            CycNum::zeta_pow(1).inverse().unwrap(),
            CycNum::zeta_pow(119)
        );
        // (1+i)^-1 = (1-i)/2, oracle: multiply back
        let one_plus_i = &CycNum::one() + &zeta(1, 4);
        let inv = one_plus_i.inverse().unwrap();
        let expected = (&CycNum::one() - &zeta(1, 4)).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(inv, expected);
        assert!((&one_plus_i * &inv).is_one());
        assert!(matches!(CycNum::zero().inverse(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn root_of_examples() {
        assert!(zeta(1, 1).is_one());
        let i = zeta(1, 4);
        assert_eq!(&i * &i, CycNum::from_integer(-1));
        let w = zeta(1, 3);
        assert!((&(&w * &w) * &w).is_one());
        assert!(!w.is_one());
        assert!(matches!(RootSpec::new(1, 7), Err(Error::UnsupportedOrder(7))));
    }

    #[test]
    fn root_orders() {
        for n in [1i64, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120] {
            for k in 0..n {
                if num_integer::gcd(k, n) != 1 {
                    continue;
                }
                let r = zeta(k, n);
                let expected = if k == 0 { 1 } else { n as u64 };
                assert_eq!(r.unit_order(), Some(expected), "order of zeta_{}^{}", n, k);
            }
        }
    }

    fn random_cyc(rng: &mut impl Rng) -> CycNum {
        pseudorandom_element(rng)
    }

    #[test]
    fn field_axioms_on_pseudorandom_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            let a = random_cyc(&mut rng);
            let b = random_cyc(&mut rng);
            let c = random_cyc(&mut rng);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }
    }

    #[test]
    fn inverse_roundtrip_on_pseudorandom_elements() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut checked = 0;
        while checked < 50 {
            let x = random_cyc(&mut rng);
            if x.is_zero() {
                continue;
            }
            assert!((&x * &x.inverse().unwrap()).is_one());
            checked += 1;
        }
    }

    #[test]
    fn root_spec_parse_and_reduce() {
        let r = RootSpec::parse("2/6").unwrap();
        assert_eq!((r.k(), r.n()), (1, 3));
        assert_eq!(RootSpec::parse("0/1").unwrap().order(), 1);
        assert!(RootSpec::parse("nonsense").is_err());
    }
}
