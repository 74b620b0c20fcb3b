//! Dense univariate polynomials over F_{p^m}, factorization of binomials
//! `x^n - a0`, reciprocals, and the binomial irreducibility criterion.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldRef, FieldSpec};

/// Default seed of the equal-degree splitter.
pub const DEFAULT_SPLIT_SEED: u64 = 0x00c0_ffee_5eed;

/// A polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(Fe::is_zero) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients given by canonical field-element encodings.
    pub fn from_ints(field: &FieldRef, coeffs: &[u64]) -> Result<Poly> {
        let coeffs = coeffs
            .iter()
            .map(|&c| field.element(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &FieldRef) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &FieldRef) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &FieldRef, c: Fe) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: &FieldRef, c: Fe, k: usize) -> Poly {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    pub fn x(field: &FieldRef) -> Poly {
        Poly::monomial(field, field.one(), 1)
    }

    /// `x^n - a`.
    pub fn binomial(field: &FieldRef, n: usize, a: Fe) -> Poly {
        let mut coeffs = vec![Fe::ZERO; n + 1];
        coeffs[n] = field.one();
        coeffs[0] = field.sub(coeffs[0], a);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == self.field.one()
    }

    pub fn eval(&self, a: Fe) -> Fe {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if std::sync::Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    fn neg_ref(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Fe::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, coeffs)
    }

    /// Scales to a monic polynomial; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.lead())?;
        let mut quo = vec![Fe::ZERO; rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quo[k] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quo), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; panics in debug builds if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "inexact division");
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.try_mul(other)?.rem(modulus)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_prime((i as u64 % f.p()) as i64)))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Largest `k <= cap` with `factor^k | self`; the zero polynomial gets `cap`.
    pub fn valuation(&self, factor: &Poly, cap: u32) -> Result<u32> {
        let mut cur = self.clone();
        let mut k = 0;
        while k < cap {
            if cur.is_zero() {
                return Ok(cap);
            }
            let (q, r) = cur.divrem(factor)?;
            if !r.is_zero() {
                break;
            }
            cur = q;
            k += 1;
        }
        Ok(k)
    }

    /// Monic normalization of `x^d f(1/x)`.
    pub fn reciprocal_monic(&self) -> Result<Poly> {
        match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            _ => {}
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let rev: Vec<Fe> = self.coeffs.iter().rev().copied().collect();
        Ok(Poly::new(&self.field, rev).monic())
    }

    /// Canonical ordering: by degree, then by the integer whose base-`q`
    /// digits are the coefficient encodings, i.e. comparing from the highest
    /// coefficient down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        let f = &self.field;
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            let a = self.coeffs.iter().rev().map(|&c| f.encode(c));
            let b = other.coeffs.iter().rev().map(|&c| f.encode(c));
            a.cmp(b)
        })
    }

    pub fn to_ints(&self) -> Vec<u64> {
        self.coeffs.iter().map(|&c| self.field.encode(c)).collect()
    }

    /// Parses the text form, e.g. `1*x^4 + 2*x^3 + 1*x + 1`, `x^2 + 1` or `0`.
    pub fn parse(field: &FieldRef, text: &str) -> Result<Poly> {
        let err = |detail: String| Error::Parse {
            what: "polynomial",
            detail,
        };
        let text = text.trim();
        if text.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut coeffs: Vec<Fe> = Vec::new();
        for term in text.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            let (coef, power) = match term.split_once('x') {
                None => (term.as_str(), 0usize),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let c = if c.is_empty() { "1" } else { c };
                    let k = match rest.strip_prefix('^') {
                        Some(k) => k.parse().map_err(|_| err(format!("bad exponent in {term:?}")))?,
                        None if rest.is_empty() => 1,
                        None => return Err(err(format!("unexpected {rest:?} in {term:?}"))),
                    };
                    (c, k)
                }
            };
            let v: u64 = coef
                .parse()
                .map_err(|_| err(format!("bad coefficient in {term:?}")))?;
            let c = field.element(v)?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Fe::ZERO);
            }
            coeffs[power] = field.add(coeffs[power], c);
        }
        Ok(Poly::new(field, coeffs))
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            ctx: self.field.spec(),
            coeffs: self.to_ints(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Poly> {
        let field = crate::gf::Field::from_spec(&json.ctx)?;
        Poly::from_ints(&field, &json.coeffs)
    }
}

/// JSON form of a polynomial: `{ctx, coeffs}` with ascending integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub ctx: FieldSpec,
    pub coeffs: Vec<u64>,
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.field.encode(c);
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomials over different fields")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials over different fields")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials over different fields")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

/// Extended gcd: `(d, a, b)` with `d` monic, `a f + b g = d` and
/// `deg a < deg g - deg d` whenever `deg g > deg d`.
pub fn egcd(f: &Poly, g: &Poly) -> Result<(Poly, Poly, Poly)> {
    f.check(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let field = f.field();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
    let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = field.inv(r0.lead())?;
    Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
}

pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    Ok(egcd(f, g)?.0)
}

/// The complete factorization of `x^n - alpha0` into monic irreducibles.
#[derive(Clone, Debug)]
pub struct BinomialFactorization {
    pub n: usize,
    pub alpha0: Fe,
    factors: Vec<Poly>,
}

impl BinomialFactorization {
    /// Factors in canonical order.
    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree().unwrap()).collect()
    }

    pub fn product(&self) -> Poly {
        let field = self.factors[0].field();
        self.factors.iter().fold(Poly::one(field), |acc, f| &acc * f)
    }

    pub fn position(&self, factor: &Poly) -> Option<usize> {
        self.factors.iter().position(|f| f == factor)
    }
}

/// Factors `x^n - alpha0` with the default splitter seed.
pub fn factor_binomial(field: &FieldRef, n: usize, alpha0: Fe) -> Result<BinomialFactorization> {
    factor_binomial_seeded(field, n, alpha0, DEFAULT_SPLIT_SEED)
}

pub fn factor_binomial_seeded(
    field: &FieldRef,
    n: usize,
    alpha0: Fe,
    seed: u64,
) -> Result<BinomialFactorization> {
    if n == 0 {
        return Err(Error::LengthTooSmall { n, min: 1 });
    }
    if n as u64 % field.p() == 0 {
        return Err(Error::LengthNotCoprime { n, p: field.p() });
    }
    if alpha0.is_zero() {
        return Err(Error::ZeroParameter("alpha0"));
    }
    let binomial = Poly::binomial(field, n, alpha0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = factor_squarefree(&binomial, &mut rng)?;
    factors.sort_by(Poly::canonical_cmp);
    Ok(BinomialFactorization { n, alpha0, factors })
}

/// Factors a monic square-free polynomial: distinct-degree factorization
/// followed by Cantor–Zassenhaus equal-degree splitting.
pub fn factor_squarefree<R: Rng>(f: &Poly, rng: &mut R) -> Result<Vec<Poly>> {
    let field = f.field();
    let f = f.monic();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    if !gcd(&f, &f.derivative())?.is_one() {
        return Err(Error::NotSquareFree);
    }
    let q = field.order();
    let x = Poly::x(field);
    let mut rest = f;
    let mut h = x.clone();
    let mut d = 1;
    let mut out = Vec::new();
    while rest.degree().unwrap() >= 2 * d {
        h = h.pow_mod(q, &rest)?;
        let g = gcd(&(&h - &x), &rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            split_equal_degree(&g, d, rng, &mut out)?;
        }
        d += 1;
    }
    if rest.degree().unwrap() > 0 {
        out.push(rest);
    }
    Ok(out)
}

fn split_equal_degree<R: Rng>(g: &Poly, d: usize, rng: &mut R, out: &mut Vec<Poly>) -> Result<()> {
    let deg = g.degree().unwrap();
    if deg == d {
        out.push(g.clone());
        return Ok(());
    }
    let field = g.field();
    let q = field.order();
    let one = Poly::one(field);
    loop {
        let a = Poly::new(
            field,
            (0..deg)
                .map(|_| field.element(rng.gen_range(0..q)).unwrap())
                .collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2)
        let mut frob = a.clone();
        let mut norm = a.clone();
        for _ in 1..d {
            frob = frob.pow_mod(q, g)?;
            norm = norm.mul_mod(&frob, g)?;
        }
        let b = norm.pow_mod((q - 1) / 2, g)?;
        let u = gcd(&(&b - &one), g)?;
        let du = u.degree().unwrap();
        if du > 0 && du < deg {
            let v = g.div_exact(&u)?;
            split_equal_degree(&u, d, rng, out)?;
            split_equal_degree(&v, d, rng, out)?;
            return Ok(());
        }
    }
}

/// Decides irreducibility of `x^n - alpha0` from `n` and the order of `alpha0`:
/// every prime divisor of `n` divides `ord(alpha0)` but not
/// `(q - 1)/ord(alpha0)`, and `4 | n` forces `4 | q - 1`.
pub fn binomial_irreducible(field: &FieldRef, n: usize, alpha0: Fe) -> Result<bool> {
    if n < 2 {
        return Err(Error::LengthTooSmall { n, min: 2 });
    }
    let kappa = field.mult_order(alpha0)?;
    if kappa == 1 {
        return Err(Error::TrivialOrder);
    }
    let group = field.order() - 1;
    let cofactor = group / kappa;
    let primes_ok = crate::gf::factorize(n as u64)
        .iter()
        .all(|&(r, _)| kappa % r == 0 && cofactor % r != 0);
    let four_ok = n % 4 != 0 || group % 4 == 0;
    Ok(primes_ok && four_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn f3() -> FieldRef {
        Field::new(3, 1, None).unwrap()
    }

    fn p(field: &FieldRef, c: &[u64]) -> Poly {
        Poly::from_ints(field, c).unwrap()
    }

    #[test]
    fn example_product() {
        let f = f3();
        let prod = &(&p(&f, &[1, 0, 1]) * &p(&f, &[1, 2, 0, 1, 1])) * &p(&f, &[1, 1, 0, 2, 1]);
        assert_eq!(prod, p(&f, &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
        assert!((&prod * &Poly::zero(&f)).is_zero());
    }

    #[test]
    fn synthetic_division() {
        let f = f3();
        let (q, r) = p(&f, &[0, 0, 0, 1]).divrem(&p(&f, &[1, 1])).unwrap();
        assert_eq!(q, p(&f, &[1, 2, 1]));
        assert_eq!(r, p(&f, &[2]));
        assert_eq!(p(&f, &[1]).divrem(&Poly::zero(&f)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn mismatched_fields() {
        let a = p(&f3(), &[1, 1]);
        let b = p(&Field::new(5, 1, None).unwrap(), &[1, 1]);
        assert_eq!(a.try_mul(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.divrem(&b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn egcd_examples() {
        let f = f3();
        let a = p(&f, &[1, 0, 1]);
        let b = p(&f, &[2, 1]);
        let (d, s, t) = egcd(&a, &b).unwrap();
        assert!(d.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), d);

        let g = p(&f, &[2, 0, 2]);
        let (d, s, t) = egcd(&g, &g).unwrap();
        assert_eq!(d, g.monic());
        assert!(s.is_zero());
        assert_eq!(t, Poly::constant(&f, f.inv(g.lead()).unwrap()));

        let x10 = Poly::binomial(&f, 10, f.from_prime(2));
        assert_eq!(gcd(&x10, &a).unwrap(), a);
        assert_eq!(egcd(&Poly::zero(&f), &Poly::zero(&f)).unwrap_err(), Error::BothZero);
    }

    #[test]
    fn factor_examples() {
        let f = f3();
        let two = f.from_prime(2);
        let fac = factor_binomial(&f, 10, two).unwrap();
        assert_eq!(
            fac.factors(),
            &[p(&f, &[1, 0, 1]), p(&f, &[1, 2, 0, 1, 1]), p(&f, &[1, 1, 0, 2, 1])]
        );
        let fac = factor_binomial(&f, 2, f.one()).unwrap();
        assert_eq!(fac.factors(), &[p(&f, &[1, 1]), p(&f, &[2, 1])]);
        let fac = factor_binomial(&f, 4, two).unwrap();
        assert_eq!(fac.factors(), &[p(&f, &[2, 1, 1]), p(&f, &[2, 2, 1])]);
        assert_eq!(
            factor_binomial(&f, 3, two).unwrap_err(),
            Error::LengthNotCoprime { n: 3, p: 3 }
        );
        assert!(factor_binomial(&f, 2, Fe::ZERO).is_err());
    }

    #[test]
    fn seed_independence() {
        let f = Field::new(3, 2, None).unwrap();
        let a = f.generator();
        let reference = factor_binomial(&f, 8, a).unwrap();
        for seed in 0..5 {
            let other = factor_binomial_seeded(&f, 8, a, seed).unwrap();
            assert_eq!(other.factors(), reference.factors());
        }
    }

    #[test]
    fn reciprocals() {
        let f = f3();
        assert_eq!(
            p(&f, &[1, 2, 0, 1, 1]).reciprocal_monic().unwrap(),
            p(&f, &[1, 1, 0, 2, 1])
        );
        assert_eq!(p(&f, &[1, 0, 1]).reciprocal_monic().unwrap(), p(&f, &[1, 0, 1]));
        assert_eq!(p(&f, &[2, 1]).reciprocal_monic().unwrap(), p(&f, &[2, 1]));
        assert_eq!(p(&f, &[0, 1]).reciprocal_monic().unwrap_err(), Error::ZeroConstantTerm);
        assert_eq!(p(&f, &[2]).reciprocal_monic().unwrap_err(), Error::ConstantPolynomial);
    }

    /// Brute-force root search: a quadratic is irreducible iff it has no root.
    fn has_root(f: &Poly) -> bool {
        f.field().elements().any(|a| f.eval(a).is_zero())
    }

    #[test]
    fn binomial_criterion_examples() {
        let f = f3();
        assert!(binomial_irreducible(&f, 2, f.from_prime(2)).unwrap());
        assert!(!has_root(&Poly::binomial(&f, 2, f.from_prime(2))));
        assert!(!binomial_irreducible(&f, 4, f.from_prime(2)).unwrap());
        assert_eq!(binomial_irreducible(&f, 2, f.one()).unwrap_err(), Error::TrivialOrder);
        assert!(binomial_irreducible(&f, 2, Fe::ZERO).is_err());

        // over F_9 with kappa(y) = 4: the prime 2 divides 8/4, so reducible;
        // the root search agrees since y is a square.
        let g = Field::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let y = g.generator();
        assert!(has_root(&Poly::binomial(&g, 2, y)));
        assert!(!binomial_irreducible(&g, 2, y).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let f = f3();
        let a = p(&f, &[1, 2, 0, 1, 1]);
        assert_eq!(a.to_string(), "1*x^4 + 1*x^3 + 2*x + 1");
        assert_eq!(Poly::parse(&f, &a.to_string()).unwrap(), a);
        assert_eq!(Poly::parse(&f, "x^2 + 1").unwrap(), p(&f, &[1, 0, 1]));
        assert_eq!(Poly::parse(&f, "0").unwrap(), Poly::zero(&f));
        assert!(Poly::parse(&f, "3*x").is_err());
        assert!(Poly::parse(&f, "x^").is_err());
        let json = serde_json::to_string(&a.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Poly::from_json(&back).unwrap(), a);
    }
}
