//! Prime fields F_p and their extensions F_{p^m} = F_p[y]/(h(y)).
//!
//! Elements are stored densely as a fixed-size array of base-field
//! coefficients (ascending powers of `y`). An element carries no reference to
//! its field; every operation goes through the owning [`Field`].

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported extension degree `m`.
pub const MAX_EXT_DEGREE: usize = 8;

/// Largest supported field order `p^m`.
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

pub type FieldRef = Arc<Field>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic must be odd, got {0}")]
    EvenCharacteristic(u64),
    #[error("extension degree {0} outside 1..={MAX_EXT_DEGREE}")]
    BadDegree(usize),
    #[error("field order {p}^{m} exceeds the supported maximum")]
    TooLarge { p: u64, m: usize },
    #[error("modulus must be a monic polynomial of degree {expected} with coefficients below {p}")]
    MalformedModulus { expected: usize, p: u64 },
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u64>),
    #[error("element encoding {value} out of range for a field of order {order}")]
    OutOfRange { value: u64, order: u64 },
    #[error("zero is not invertible")]
    ZeroInverse,
    #[error("{0} is undefined for zero")]
    ZeroElement(&'static str),
}

/// A field element: coefficients of a polynomial in `y` of degree `< m`.
///
/// Entries at positions `>= m` are always zero, so derived equality and
/// hashing agree with field equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe([u32; MAX_EXT_DEGREE]);

impl Fe {
    pub const ZERO: Fe = Fe([0; MAX_EXT_DEGREE]);

    #[inline]
    pub fn is_zero(&self) -> bool {
        *self == Fe::ZERO
    }

    /// Raw coefficient array (ascending powers of `y`).
    #[inline]
    pub fn raw(&self) -> &[u32; MAX_EXT_DEGREE] {
        &self.0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.0.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        write!(f, "Fe{:?}", &self.0[..len])
    }
}

/// Serialized form of a field: `{p, m, modulus}` with the monic modulus given
/// as an ascending coefficient list (leading 1 included).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u64>,
}

/// The finite field F_{p^m}.
#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    m: usize,
    /// Monic, ascending, length `m + 1`.
    modulus: Vec<u32>,
    order: u64,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p, self.m, self.modulus)
    }
}

impl Field {
    /// Builds F_{p^m}. Without an explicit modulus the smallest monic
    /// irreducible polynomial of degree `m` is used, where polynomials are
    /// ordered by the integer `sum c_i p^i` of their lower coefficients.
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<FieldRef, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p == 2 {
            return Err(FieldError::EvenCharacteristic(p));
        }
        if m == 0 || m > MAX_EXT_DEGREE {
            return Err(FieldError::BadDegree(m));
        }
        let order = p
            .checked_pow(m as u32)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(FieldError::TooLarge { p, m })?;
        let modulus = match modulus {
            Some(h) => {
                if h.len() != m + 1 || h[m] != 1 || h.iter().any(|&c| c >= p) {
                    return Err(FieldError::MalformedModulus { expected: m, p });
                }
                let h: Vec<u32> = h.iter().map(|&c| c as u32).collect();
                if !fp_poly::is_irreducible(&h, p as u32) {
                    return Err(FieldError::ReducibleModulus(h.iter().map(|&c| c as u64).collect()));
                }
                h
            }
            None => default_modulus(p as u32, m),
        };
        Ok(Arc::new(Field {
            p: p as u32,
            m,
            modulus,
            order,
        }))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<FieldRef, FieldError> {
        Field::new(spec.p, spec.m, Some(&spec.modulus))
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.p as u64,
            m: self.m,
            modulus: self.modulus.iter().map(|&c| c as u64).collect(),
        }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// `p^m`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fe {
        self.from_prime(1)
    }

    /// Image of an integer under Z -> F_p -> F_{p^m}.
    #[inline]
    pub fn from_prime(&self, c: i64) -> Fe {
        let mut e = Fe::ZERO;
        e.0[0] = c.rem_euclid(self.p as i64) as u32;
        e
    }

    /// The class of `y`.
    pub fn generator(&self) -> Fe {
        if self.m == 1 {
            self.neg(self.from_prime(self.modulus[0] as i64))
        } else {
            let mut e = Fe::ZERO;
            e.0[1] = 1;
            e
        }
    }

    /// Decodes the canonical integer encoding `sum coeffs[i] * p^i`.
    pub fn element(&self, value: u64) -> Result<Fe, FieldError> {
        if value >= self.order {
            return Err(FieldError::OutOfRange {
                value,
                order: self.order,
            });
        }
        Ok(self.decode(value))
    }

    #[inline]
    fn decode(&self, mut value: u64) -> Fe {
        let mut e = Fe::ZERO;
        for c in e.0.iter_mut().take(self.m) {
            *c = (value % self.p as u64) as u32;
            value /= self.p as u64;
        }
        e
    }

    /// Canonical integer encoding of `a`.
    #[inline]
    pub fn encode(&self, a: Fe) -> u64 {
        a.0[..self.m]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// Builds an element from base-field coefficients, reducing each mod p.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Fe {
        assert!(coeffs.len() <= self.m, "too many coefficients for degree {}", self.m);
        let mut e = Fe::ZERO;
        for (slot, &c) in e.0.iter_mut().zip(coeffs) {
            *slot = c.rem_euclid(self.p as i64) as u32;
        }
        e
    }

    pub fn coeffs<'a>(&self, a: &'a Fe) -> &'a [u32] {
        &a.0[..self.m]
    }

    /// All elements in order of their canonical encoding.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(move |v| self.decode(v))
    }

    /// All nonzero elements in order of their canonical encoding.
    pub fn units(&self) -> impl Iterator<Item = Fe> + '_ {
        (1..self.order).map(move |v| self.decode(v))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p;
        let mut r = Fe::ZERO;
        for i in 0..self.m {
            let s = a.0[i] + b.0[i];
            r.0[i] = if s >= p { s - p } else { s };
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let mut r = Fe::ZERO;
        for i in 0..self.m {
            r.0[i] = if a.0[i] == 0 { 0 } else { self.p - a.0[i] };
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u64;
        if self.m == 1 {
            let mut r = Fe::ZERO;
            r.0[0] = ((a.0[0] as u64 * b.0[0] as u64) % p) as u32;
            return r;
        }
        let m = self.m;
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE];
        for i in 0..m {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + a.0[i] as u64 * b.0[j] as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let t = c * self.modulus[i] as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - t) % p;
            }
        }
        let mut r = Fe::ZERO;
        for (slot, &c) in r.0.iter_mut().zip(&prod[..m]) {
            *slot = c as u32;
        }
        r
    }

    /// Multiplies by an element of the prime field.
    #[inline]
    pub fn scale(&self, a: Fe, c: u32) -> Fe {
        let mut r = Fe::ZERO;
        for i in 0..self.m {
            r.0[i] = ((a.0[i] as u64 * c as u64) % self.p as u64) as u32;
        }
        r
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm on representatives.
    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let rep = fp_poly::trim(a.0[..self.m].to_vec());
        let inv = fp_poly::inverse_mod(&rep, &self.modulus, self.p)
            .expect("nonzero residue modulo an irreducible polynomial is invertible");
        let mut r = Fe::ZERO;
        r.0[..inv.len()].copy_from_slice(&inv);
        Ok(r)
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Smallest `k >= 1` with `a^k = 1`.
    pub fn mult_order(&self, a: Fe) -> Result<u64, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroElement("multiplicative order"));
        }
        let group = self.order - 1;
        let mut k = group;
        for (prime, _) in factorize(group) {
            while k % prime == 0 && self.pow(a, k / prime) == self.one() {
                k /= prime;
            }
        }
        Ok(k)
    }

    /// The unique `a0` with `a0^(p^s) = a`, namely `a^c` with
    /// `c = (p^s)^{-1} mod (p^m - 1)`.
    pub fn ps_root(&self, a: Fe, s: u32) -> Result<Fe, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroElement("p^s-th root"));
        }
        let group = self.order - 1;
        let ps = mod_pow(self.p as u64, s as u64, group);
        let c = mod_inverse(ps, group).expect("p is coprime to p^m - 1");
        let root = self.pow(a, c);
        debug_assert_eq!(self.pow(root, ps), a);
        Ok(root)
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as `(prime, multiplicity)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn mod_pow(base: u64, mut e: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (modulus as i128, a as i128 % modulus as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(modulus as i128) as u64)
}

fn default_modulus(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    for k in 0..count {
        let mut h = Vec::with_capacity(m + 1);
        let mut v = k;
        for _ in 0..m {
            h.push((v % p as u64) as u32);
            v /= p as u64;
        }
        h.push(1);
        if fp_poly::is_irreducible(&h, p) {
            return h;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Dense polynomials over F_p used for modulus checks and inversion.
mod fp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_p(a: u32, p: u32) -> u32 {
        super::mod_pow(a as u64, p as u64 - 2, p as u64) as u32
    }

    /// `(q, r)` with `a = q b + r`; `b` must be nonzero.
    pub fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let p64 = p as u64;
        let lead_inv = inv_p(*b.last().unwrap(), p) as u64;
        let mut q = vec![0u32; r.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + b.len() - 1] as u64 * lead_inv % p64;
            q[k] = c as u32;
            if c == 0 {
                continue;
            }
            for (i, &bi) in b.iter().enumerate() {
                let t = c * bi as u64 % p64;
                r[k + i] = ((r[k + i] as u64 + p64 - t) % p64) as u32;
            }
        }
        (trim(q), trim(r))
    }

    fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    /// Inverse of `a` modulo `h` by the extended Euclidean algorithm.
    pub fn inverse_mod(a: &[u32], h: &[u32], p: u32) -> Option<Vec<u32>> {
        let (mut r0, mut r1) = (trim(h.to_vec()), divrem(a, h, p).1);
        let (mut t0, mut t1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let t2 = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = inv_p(r0[0], p) as u64;
        let t: Vec<u32> = t0.iter().map(|&x| (x as u64 * c % p as u64) as u32).collect();
        Some(divrem(&t, h, p).1)
    }

    /// Exhaustive search for a monic divisor of degree `1..=deg/2`.
    pub fn is_irreducible(h: &[u32], p: u32) -> bool {
        let deg = h.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for k in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut v = k;
                for _ in 0..d {
                    g.push((v % p as u64) as u32);
                    v /= p as u64;
                }
                g.push(1);
                if divrem(h, &g, p).1.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldRef {
        Field::new(3, 1, None).unwrap()
    }

    fn f9() -> FieldRef {
        Field::new(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn construction() {
        let f = f3();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 3);
        assert_eq!(f9().order(), 9);
        assert_eq!(Field::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(4, 1, None).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(Field::new(2, 1, None).unwrap_err(), FieldError::EvenCharacteristic(2));
        // y^2 + 2 = (y - 1)(y + 1)
        assert!(matches!(
            Field::new(3, 2, Some(&[2, 0, 1])),
            Err(FieldError::ReducibleModulus(_))
        ));
        assert!(matches!(
            Field::new(3, 2, Some(&[1, 0, 2])),
            Err(FieldError::MalformedModulus { .. })
        ));
    }

    #[test]
    fn small_arithmetic() {
        let f = f3();
        assert_eq!(f.inv(f.from_prime(2)).unwrap(), f.from_prime(2));
        let g = f9();
        let y = g.generator();
        assert_eq!(g.mul(y, y), g.from_prime(2));
        assert_eq!(g.inv(y).unwrap(), g.scale(y, 2));
        assert_eq!(g.inv(Fe::ZERO), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn orders() {
        let f = f3();
        assert_eq!(f.mult_order(f.one()).unwrap(), 1);
        assert_eq!(f.mult_order(f.from_prime(2)).unwrap(), 2);
        let g = f9();
        assert_eq!(g.mult_order(g.generator()).unwrap(), 4);
        assert!(g.mult_order(Fe::ZERO).is_err());
    }

    #[test]
    fn ps_roots() {
        let f = f3();
        assert_eq!(f.ps_root(f.from_prime(2), 1).unwrap(), f.from_prime(2));
        let g = f9();
        for s in 0..3 {
            assert_eq!(g.ps_root(g.one(), s).unwrap(), g.one());
        }
        let y = g.generator();
        assert_eq!(g.ps_root(y, 1).unwrap(), g.scale(y, 2));
        assert!(g.ps_root(Fe::ZERO, 1).is_err());
    }

    fn small_fields() -> Vec<FieldRef> {
        let mut out = Vec::new();
        for (p, m) in [(3u64, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2)] {
            if p.pow(m as u32) <= 81 {
                out.push(Field::new(p, m, None).unwrap());
            }
        }
        out
    }

    #[test]
    fn lagrange_exhaustive() {
        for f in small_fields() {
            for a in f.units() {
                assert_eq!(f.pow(a, f.order() - 1), f.one(), "{f:?}");
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                assert_eq!((f.order() - 1) % f.mult_order(a).unwrap(), 0);
            }
        }
    }

    #[test]
    fn ps_root_exhaustive() {
        for f in small_fields() {
            for s in 0..=2u32 {
                let ps = f.p().pow(s);
                for a in f.units() {
                    let r = f.ps_root(a, s).unwrap();
                    assert_eq!(f.pow(r, ps), a);
                    // uniqueness: the p^s power map is a bijection on units
                    assert_eq!(f.units().filter(|&b| f.pow(b, ps) == a).count(), 1);
                }
            }
        }
    }

    #[test]
    fn encoding_round_trip() {
        for f in small_fields() {
            for v in 0..f.order() {
                assert_eq!(f.encode(f.element(v).unwrap()), v);
            }
            assert!(f.element(f.order()).is_err());
        }
    }

    #[test]
    fn distributivity_exhaustive_f9() {
        let f = f9();
        let all: Vec<Fe> = f.elements().collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &all {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn spec_round_trip() {
        let f = Field::new(5, 3, None).unwrap();
        let json = serde_json::to_string(&f.spec()).unwrap();
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(*Field::from_spec(&back).unwrap(), *f);
    }
}
