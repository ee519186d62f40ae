//! Exact scalars: arbitrary-precision rationals and cyclotomic numbers.
//!
//! A [`CycNum`] is an element of the cyclotomic field generated by a primitive
//! `order`-th root of unity `z`, stored canonically as its coordinate vector in
//! the power basis `1, z, z^2, ...` of length `deg Phi_order` (the coordinates
//! are reduced modulo the cyclotomic polynomial). Values of different orders
//! interoperate: binary operations first embed both sides into the field of
//! the least common multiple order, using the compatible-system convention
//! that the `m`-th power of a primitive `mn`-th root is the chosen primitive
//! `n`-th root. Equality is coordinate-wise after such an embedding, so it is
//! exact and decidable.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Arbitrary-precision rational.
pub type Rat = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// `p/q` as a rational. Panics on `q == 0` (callers pass literals).
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(Int::from(p), Int::from(q))
}

/// Integer `k` as a rational.
pub fn rint(k: i64) -> Rat {
    Rat::from_integer(Int::from(k))
}

/// Parse `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let p: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {num:?}")))?;
    let q: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {den:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(p, q))
}

/// Render a rational as `"p/q"` (always with an explicit denominator).
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn gcd64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm64(a: u64, b: u64) -> u64 {
    a / gcd64(a, b) * b
}

/// Euler totient by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            ds.push(i);
            if i != n / i {
                ds.push(n / i);
            }
        }
        i += 1;
    }
    ds.sort_unstable();
    ds
}

/// Remainder of `a` modulo the monic polynomial `m` (ascending coefficients).
fn poly_rem(mut a: Vec<Rat>, m: &[Rat]) -> Vec<Rat> {
    let deg_m = m.len() - 1;
    debug_assert!(m[deg_m].is_one(), "modulus must be monic");
    while a.len() > deg_m {
        let top = a.len() - 1;
        let c = a[top].clone();
        a.pop();
        if !c.is_zero() {
            for j in 0..deg_m {
                let t = &c * &m[j];
                a[top - deg_m + j] -= t;
            }
        }
    }
    a.resize(deg_m.max(1), Rat::zero());
    if deg_m == 0 {
        // degenerate; not reachable for cyclotomic moduli
        a = vec![Rat::zero()];
    }
    a
}

/// Exact quotient of `a` by monic `m`; panics if the division is not exact.
fn poly_exact_div(mut a: Vec<Rat>, m: &[Rat]) -> Vec<Rat> {
    let deg_m = m.len() - 1;
    assert!(a.len() >= m.len());
    let mut q = vec![Rat::zero(); a.len() - deg_m];
    for i in (0..q.len()).rev() {
        let c = a[i + deg_m].clone();
        q[i] = c.clone();
        if !c.is_zero() {
            for j in 0..=deg_m {
                let t = &c * &m[j];
                a[i + j] -= t;
            }
        }
    }
    assert!(a.iter().all(|c| c.is_zero()), "inexact polynomial division");
    q
}

static CYCLOTOMIC_CACHE: OnceLock<Mutex<HashMap<u64, Vec<Rat>>>> = OnceLock::new();

/// The `n`-th cyclotomic polynomial, ascending coefficients, monic.
///
/// Computed by dividing `x^n - 1` by the cyclotomic polynomials of the proper
/// divisors of `n`; results are cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Vec<Rat> {
    assert!(n >= 1);
    let cache = CYCLOTOMIC_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![rint(-1), rint(1)]
    } else {
        let mut num = vec![Rat::zero(); (n + 1) as usize];
        num[0] = rint(-1);
        num[n as usize] = rint(1);
        let mut q = num;
        for d in divisors(n) {
            if d < n {
                let phi_d = cyclotomic_polynomial(d);
                q = poly_exact_div(q, &phi_d);
            }
        }
        q
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Degree of the `n`-th cyclotomic polynomial (= Euler totient of `n`).
pub fn phi_degree(n: u64) -> usize {
    totient(n) as usize
}

/// An element of the cyclotomic field of the given order.
///
/// Invariant: `coeffs.len() == phi_degree(order)` and the vector is the
/// canonical reduction modulo the cyclotomic polynomial, so two values of the
/// same order are equal iff their coordinate vectors are equal.
#[derive(Clone)]
pub struct CycNum {
    order: u64,
    coeffs: Vec<Rat>,
}

impl CycNum {
    /// Order of the ambient cyclotomic field this value is expressed in.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coordinates (length = totient of the order).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn zero() -> Self {
        CycNum { order: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycNum { order: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNum { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(rint(k))
    }

    /// Build from raw power-basis coordinates in the order-`n` field.
    /// Longer vectors are reduced modulo the cyclotomic polynomial; shorter
    /// ones are zero-padded.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rat>) -> Self {
        let deg = phi_degree(order);
        let reduced = if coeffs.len() > deg {
            poly_rem(coeffs, &cyclotomic_polynomial(order))
        } else {
            let mut c = coeffs;
            c.resize(deg, Rat::zero());
            c
        };
        CycNum { order, coeffs: reduced }
    }

    /// The chosen primitive `n`-th root of unity.
    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// `zeta(n)^k`, with `k` arbitrary (negative allowed).
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rat::zero(); e + 1];
        raw[e] = Rat::one();
        Self::from_coeffs(n, raw)
    }

    /// The paper-style power `zeta^q` for a rational exponent `q = a/b` in
    /// lowest terms: the `a`-th power of the primitive `b`-th root of unity.
    pub fn root_of_unity(q: &Rat) -> Self {
        let b = q.denom().clone();
        let a = q.numer().clone();
        let b_u: u64 = (&b).try_into().expect("root-of-unity denominator too large");
        // reduce a modulo b into u64 range first
        let a_mod = ((a % &b) + &b) % &b;
        let a_u: u64 = (&a_mod).try_into().unwrap();
        Self::zeta_pow(b_u, a_u as i64)
    }

    /// Embed into the cyclotomic field of order `m` (requires `order | m`),
    /// sending the primitive root of this order to the `m/order`-th power of
    /// the primitive `m`-th root.
    pub fn lift(&self, m: u64) -> Result<Self> {
        if m % self.order != 0 {
            return Err(Error::NotDivisible { small: self.order, big: m });
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let t = (m / self.order) as usize;
        let mut raw = vec![Rat::zero(); (self.coeffs.len() - 1) * t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * t] = c.clone();
            }
        }
        Ok(Self::from_coeffs(m, raw))
    }

    /// Both values embedded in the smallest common field.
    fn promoted(&self, other: &Self) -> (Self, Self, u64) {
        let m = lcm64(self.order, other.order);
        (
            self.lift(m).expect("lcm is a multiple"),
            other.lift(m).expect("lcm is a multiple"),
            m,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// If the value is rational, return it.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b, m) = self.promoted(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        CycNum { order: m, coeffs: a.coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, m) = self.promoted(other);
        let mut raw = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::from_coeffs(m, raw)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclid algorithm in `Q[x]`
    /// against the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(Self::from_rat(Rat::one() / r));
        }
        let modulus = cyclotomic_polynomial(self.order);
        // extended gcd of (self as poly, modulus): find u with u*a = gcd (mod Phi)
        let (mut r0, mut r1) = (trim(self.coeffs.clone()), modulus.clone());
        let (mut s0, mut s1) = (vec![Rat::one()], vec![Rat::zero()]);
        while !is_zero_poly(&r1) {
            let (q, rem) = poly_divrem(&r0, &r1);
            let s_new = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd (nonzero constant for a unit mod an irreducible factor pattern)
        if r0.len() != 1 {
            // self shares a factor with the cyclotomic polynomial: impossible
            // for a nonzero canonical representative, since Phi is irreducible.
            unreachable!("nonzero cyclotomic number with non-unit gcd");
        }
        let c = r0[0].clone();
        let inv_coeffs: Vec<Rat> = s0.iter().map(|x| x / &c).collect();
        Ok(Self::from_coeffs(self.order, inv_coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative exponents via the inverse).
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Field automorphism sending the primitive root to its `j`-th power
    /// (`j` must be coprime to the order).
    pub fn galois(&self, j: u64) -> Result<Self> {
        if gcd64(j % self.order, self.order) != 1 && self.order > 1 {
            return Err(Error::Parse(format!(
                "galois exponent {j} not coprime to order {}",
                self.order
            )));
        }
        let n = self.order;
        let mut raw = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((i as u64) * j % n) as usize;
                raw[e] += c;
            }
        }
        Ok(Self::from_coeffs(n, raw))
    }

    /// Re-express the value in the smallest cyclotomic subfield (by order
    /// divisor) that contains it. Used for canonical sort keys and output.
    pub fn minimized(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        if let Some(r) = self.as_rat() {
            return Self::from_rat(r);
        }
        for d in divisors(self.order) {
            if d == self.order || d < 3 {
                continue;
            }
            if let Some(down) = self.try_descend(d) {
                return down;
            }
        }
        self.clone()
    }

    /// Attempt to express the value in the order-`d` subfield (`d | order`).
    fn try_descend(&self, d: u64) -> Option<CycNum> {
        let deg_d = phi_degree(d);
        let deg_n = phi_degree(self.order);
        // columns: lift of each subfield basis power; solve for coordinates
        let mut cols = Vec::with_capacity(deg_d);
        for i in 0..deg_d {
            let b = CycNum::zeta_pow(d, i as i64).lift(self.order).unwrap();
            cols.push(b.coeffs);
        }
        let x = solve_dense(&cols, deg_n, &self.coeffs)?;
        Some(CycNum::from_coeffs(d, x))
    }

    /// Deterministic ordering key: minimized order, then coordinates.
    pub fn sort_key(&self) -> (u64, Vec<Rat>) {
        let m = self.minimized();
        (m.order, m.coeffs)
    }
}

/// Solve `A x = b` where `A` is given by columns of length `rows`; exact.
fn solve_dense(cols: &[Vec<Rat>], rows: usize, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = cols.len();
    let mut aug: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..n {
        let pr = (prow..rows).find(|&r| !aug[r][col].is_zero());
        let Some(pr) = pr else { continue };
        aug.swap(prow, pr);
        let p = aug[prow][col].clone();
        for c in col..=n {
            aug[prow][c] = &aug[prow][c] / &p;
        }
        for r in 0..rows {
            if r != prow && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let t = &f * &aug[prow][c];
                    aug[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    // consistency
    for r in prow..rows {
        if !aug[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = aug[i][n].clone();
    }
    Some(x)
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn is_zero_poly(p: &[Rat]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if is_zero_poly(a) || is_zero_poly(b) {
        return vec![Rat::zero()];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

/// Division with remainder in `Q[x]` (divisor need not be monic).
fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    let deg_b = b.len() - 1;
    let lead = b[deg_b].clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (vec![Rat::zero()], rem);
    }
    let mut q = vec![Rat::zero(); rem.len() - deg_b];
    while rem.len() >= b.len() && !is_zero_poly(&rem) {
        let d = rem.len() - 1;
        let c = &rem[d] / &lead;
        if c.is_zero() {
            rem.pop();
            continue;
        }
        q[d - deg_b] = c.clone();
        for j in 0..=deg_b {
            let t = &c * &b[j];
            rem[d - deg_b + j] -= t;
        }
        rem = trim(rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (trim(q), trim(rem))
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.promoted(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "z{}^{}", self.order, i)?;
            } else {
                write!(f, "{a}*z{}^{}", self.order, i)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        // independent hand values
        let p1 = cyclotomic_polynomial(1);
        assert_eq!(p1, vec![rint(-1), rint(1)]);
        let p2 = cyclotomic_polynomial(2);
        assert_eq!(p2, vec![rint(1), rint(1)]);
        let p4 = cyclotomic_polynomial(4);
        assert_eq!(p4, vec![rint(1), rint(0), rint(1)]);
        let p6 = cyclotomic_polynomial(6);
        assert_eq!(p6, vec![rint(1), rint(-1), rint(1)]);
        let p12 = cyclotomic_polynomial(12);
        assert_eq!(p12, vec![rint(1), rint(0), rint(-1), rint(0), rint(1)]);
    }

    #[test]
    fn lift_of_square_root_convention() {
        // zeta_2 lifted into the order-4 field is zeta_4^2
        let l = CycNum::zeta(2).lift(4).unwrap();
        assert_eq!(l, CycNum::zeta_pow(4, 2));
        // and zeta_4^2 = -1
        assert_eq!(l, CycNum::from_int(-1));
    }

    #[test]
    fn lift_zeta3_into_order6() {
        // oracle: reduce x^2 modulo x^2 - x + 1 by hand => x - 1,
        // so zeta_3 = zeta_6^2 = -1 + zeta_6 in the power basis of order 6.
        let l = CycNum::zeta(3).lift(6).unwrap();
        assert_eq!(l.coeffs(), &[rint(-1), rint(1)]);
        assert_eq!(l, CycNum::zeta_pow(6, 2));
    }

    #[test]
    fn root_of_unity_half_is_minus_one() {
        let r = CycNum::root_of_unity(&rat(1, 2));
        assert_eq!(r, CycNum::from_int(-1));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = CycNum::zeta(4);
        assert_eq!(z.mul(&z), CycNum::from_int(-1));
    }

    #[test]
    fn inverse_of_zeta3() {
        let z = CycNum::zeta(3);
        let inv = z.inv().unwrap();
        assert_eq!(inv, CycNum::zeta_pow(3, 2));
        assert!(z.mul(&inv).is_one());
    }

    #[test]
    fn mixed_order_equality_and_sum() {
        // zeta_6^3 = -1 equals the rational -1 of order 1
        assert_eq!(CycNum::zeta_pow(6, 3), CycNum::from_int(-1));
        // zeta_3 + zeta_3^2 = -1 (sum of nontrivial cube roots)
        let s = CycNum::zeta(3).add(&CycNum::zeta_pow(3, 2));
        assert_eq!(s, CycNum::from_int(-1));
    }

    #[test]
    fn zero_inverse_fails() {
        assert!(matches!(CycNum::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn lift_requires_divisibility() {
        assert!(matches!(
            CycNum::zeta(4).lift(6),
            Err(Error::NotDivisible { small: 4, big: 6 })
        ));
    }

    #[test]
    fn minimization_descends() {
        let z = CycNum::zeta(3).lift(12).unwrap();
        let m = z.minimized();
        assert_eq!(m.order(), 3);
        assert_eq!(m, CycNum::zeta(3));
    }

    #[test]
    fn galois_conjugation_fixes_rationals_and_permutes_roots() {
        let z = CycNum::zeta(5);
        let g = z.galois(2).unwrap();
        assert_eq!(g, CycNum::zeta_pow(5, 2));
        let r = CycNum::from_rat(rat(7, 3)).galois(1).unwrap();
        assert_eq!(r, CycNum::from_rat(rat(7, 3)));
    }

    #[test]
    fn compatible_power_identity() {
        // the defining compatibility: zeta_{mn}^m = zeta_n, here m=4, n=6
        let lhs = CycNum::zeta_pow(24, 4);
        let rhs = CycNum::zeta(6);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pow_negative_exponent() {
        let z = CycNum::zeta(12);
        let p = z.pow(-5).unwrap();
        assert_eq!(p, CycNum::zeta_pow(12, 7));
    }
}
