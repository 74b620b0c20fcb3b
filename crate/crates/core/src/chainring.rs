//! The chain ring R = F_q + uF_q (u^2 = 0), polynomials over R, the quotient
//! R[x]/(x^N - lambda), and the maps relating it to F_q[x]/((x^N - alpha)^2).

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldRef};
use crate::poly::Poly;

/// The element `a + u b` of R.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct RElem {
    pub a: Fe,
    pub b: Fe,
}

impl RElem {
    pub const ZERO: RElem = RElem {
        a: Fe::ZERO,
        b: Fe::ZERO,
    };

    pub fn new(a: Fe, b: Fe) -> RElem {
        RElem { a, b }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        !self.a.is_zero()
    }
}

/// R = F_q[u]/(u^2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRing {
    field: FieldRef,
}

impl ChainRing {
    pub fn new(field: &FieldRef) -> ChainRing {
        ChainRing {
            field: field.clone(),
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    /// `|R| = q^2`.
    pub fn order(&self) -> u64 {
        self.field.order() * self.field.order()
    }

    pub fn one(&self) -> RElem {
        RElem::new(self.field.one(), Fe::ZERO)
    }

    pub fn u(&self) -> RElem {
        RElem::new(Fe::ZERO, self.field.one())
    }

    pub fn embed(&self, a: Fe) -> RElem {
        RElem::new(a, Fe::ZERO)
    }

    #[inline]
    pub fn add(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.add(x.a, y.a), f.add(x.b, y.b))
    }

    #[inline]
    pub fn sub(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.sub(x.a, y.a), f.sub(x.b, y.b))
    }

    #[inline]
    pub fn neg(&self, x: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.neg(x.a), f.neg(x.b))
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)`.
    #[inline]
    pub fn mul(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)))
    }

    /// `(a + ub)^{-1} = a^{-1} - u a^{-2} b`.
    pub fn inv(&self, z: RElem) -> Result<RElem> {
        if !z.is_unit() {
            return Err(Error::NotUnit(self.format(z)));
        }
        let f = &self.field;
        let ai = f.inv(z.a)?;
        Ok(RElem::new(ai, f.neg(f.mul(f.mul(ai, ai), z.b))))
    }

    /// All `q^2` elements, `a` varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = RElem> + '_ {
        let q = self.field.order();
        (0..q * q).map(move |v| {
            RElem::new(
                self.field.element(v % q).unwrap(),
                self.field.element(v / q).unwrap(),
            )
        })
    }

    /// `a+u*b` with canonical integer encodings.
    pub fn format(&self, z: RElem) -> String {
        format!("{}+u*{}", self.field.encode(z.a), self.field.encode(z.b))
    }

    /// Accepts `a+u*b`, `a`, or `u*b`.
    pub fn parse(&self, text: &str) -> Result<RElem> {
        let err = || Error::Parse {
            what: "ring element",
            detail: text.to_string(),
        };
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let num = |s: &str| -> Result<Fe> {
            let v: u64 = s.parse().map_err(|_| err())?;
            Ok(self.field.element(v)?)
        };
        if let Some(b) = t.strip_prefix("u*") {
            return Ok(RElem::new(Fe::ZERO, num(b)?));
        }
        match t.split_once("+u*") {
            Some((a, b)) => Ok(RElem::new(num(a)?, num(b)?)),
            None => Ok(RElem::new(num(&t)?, Fe::ZERO)),
        }
    }

    pub fn poly_add(&self, x: &RPoly, y: &RPoly) -> RPoly {
        let n = x.coeffs.len().max(y.coeffs.len());
        RPoly::new((0..n).map(|i| self.add(x.coeff(i), y.coeff(i))).collect())
    }

    pub fn poly_sub(&self, x: &RPoly, y: &RPoly) -> RPoly {
        let n = x.coeffs.len().max(y.coeffs.len());
        RPoly::new((0..n).map(|i| self.sub(x.coeff(i), y.coeff(i))).collect())
    }

    pub fn poly_scale(&self, x: &RPoly, c: RElem) -> RPoly {
        RPoly::new(x.coeffs.iter().map(|&z| self.mul(z, c)).collect())
    }

    pub fn poly_mul(&self, x: &RPoly, y: &RPoly) -> RPoly {
        if x.is_zero() || y.is_zero() {
            return RPoly::zero();
        }
        let mut out = vec![RElem::ZERO; x.coeffs.len() + y.coeffs.len() - 1];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(a, b));
            }
        }
        RPoly::new(out)
    }

    pub fn format_poly(&self, x: &RPoly) -> Vec<String> {
        x.coeffs.iter().map(|&z| self.format(z)).collect()
    }

    pub fn parse_poly<S: AsRef<str>>(&self, items: &[S]) -> Result<RPoly> {
        let coeffs = items
            .iter()
            .map(|s| self.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(RPoly::new(coeffs))
    }
}

/// A polynomial over R with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct RPoly {
    coeffs: Vec<RElem>,
}

impl RPoly {
    pub fn new(mut coeffs: Vec<RElem>) -> RPoly {
        while coeffs.last().is_some_and(RElem::is_zero) {
            coeffs.pop();
        }
        RPoly { coeffs }
    }

    pub fn zero() -> RPoly {
        RPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RElem) -> RPoly {
        RPoly::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: RElem, k: usize) -> RPoly {
        let mut coeffs = vec![RElem::ZERO; k + 1];
        coeffs[k] = c;
        RPoly::new(coeffs)
    }

    /// `a0(x) + u a1(x)`.
    pub fn from_parts(a0: &Poly, a1: &Poly) -> RPoly {
        let n = a0.coeffs().len().max(a1.coeffs().len());
        RPoly::new((0..n).map(|i| RElem::new(a0.coeff(i), a1.coeff(i))).collect())
    }

    /// Lifts a polynomial over F_q into R[x].
    pub fn embed(a: &Poly) -> RPoly {
        RPoly::new(a.coeffs().iter().map(|&c| RElem::new(c, Fe::ZERO)).collect())
    }

    /// The unique decomposition `self = a0(x) + u a1(x)`.
    pub fn split(&self, field: &FieldRef) -> (Poly, Poly) {
        (
            Poly::new(field, self.coeffs.iter().map(|z| z.a).collect()),
            Poly::new(field, self.coeffs.iter().map(|z| z.b).collect()),
        )
    }

    pub fn coeffs(&self) -> &[RElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RElem {
        self.coeffs.get(i).copied().unwrap_or(RElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient vector padded with zeros to length `len`.
    pub fn dense(&self, len: usize) -> Vec<RElem> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), RElem::ZERO);
        v
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|z| !z.is_zero()).count()
    }
}

/// The quotient ring R[x]/(x^N - lambda) with `lambda` a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    ring: ChainRing,
    len: usize,
    lambda: RElem,
}

impl Quotient {
    pub fn new(ring: ChainRing, len: usize, lambda: RElem) -> Result<Quotient> {
        if len == 0 {
            return Err(Error::LengthTooSmall { n: 0, min: 1 });
        }
        if !lambda.is_unit() {
            return Err(Error::NotUnit(ring.format(lambda)));
        }
        Ok(Quotient { ring, len, lambda })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    /// The code length `N`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lambda(&self) -> RElem {
        self.lambda
    }

    pub fn is_normal(&self, f: &RPoly) -> bool {
        f.coeffs.len() <= self.len
    }

    pub(crate) fn check_normal(&self, f: &RPoly) -> Result<()> {
        if self.is_normal(f) {
            Ok(())
        } else {
            Err(Error::DegreeOutOfRange {
                degree: f.degree().unwrap_or(0),
                bound: self.len,
            })
        }
    }

    /// Normal form of degree `< N`, substituting `x^N -> lambda` from the top.
    pub fn reduce(&self, f: &RPoly) -> RPoly {
        if f.coeffs.len() <= self.len {
            return f.clone();
        }
        let mut c = f.coeffs.clone();
        for k in (self.len..c.len()).rev() {
            let top = std::mem::take(&mut c[k]);
            if !top.is_zero() {
                c[k - self.len] = self.ring.add(c[k - self.len], self.ring.mul(top, self.lambda));
            }
        }
        c.truncate(self.len);
        RPoly::new(c)
    }

    pub fn add(&self, x: &RPoly, y: &RPoly) -> RPoly {
        self.ring.poly_add(x, y)
    }

    pub fn sub(&self, x: &RPoly, y: &RPoly) -> RPoly {
        self.ring.poly_sub(x, y)
    }

    pub fn mul(&self, x: &RPoly, y: &RPoly) -> RPoly {
        self.reduce(&self.ring.poly_mul(x, y))
    }

    /// `x * f`: the lambda-twisted cyclic shift of the coefficient vector.
    pub fn mul_x(&self, f: &RPoly) -> RPoly {
        let mut c = f.dense(self.len);
        let top = c.pop().unwrap();
        c.insert(0, self.ring.mul(top, self.lambda));
        RPoly::new(c)
    }

    /// Embeds a polynomial over F_q and reduces it.
    pub fn from_poly(&self, a: &Poly) -> RPoly {
        self.reduce(&RPoly::embed(a))
    }
}

/// The ring R[x]/(x^N - (alpha + u beta)) together with its model
/// F_q[x]/((x^N - alpha)^2) and the structural maps between them.
#[derive(Clone, Debug)]
pub struct ConstaRing {
    field: FieldRef,
    alpha: Fe,
    beta: Fe,
    quotient: Quotient,
    /// `(x^N - alpha)^2`
    model_modulus: Poly,
    /// `beta^{-1}(x^N - alpha)`, the preimage of `u`.
    rho: Poly,
}

impl ConstaRing {
    pub fn new(field: &FieldRef, len: usize, alpha: Fe, beta: Fe) -> Result<ConstaRing> {
        if alpha.is_zero() {
            return Err(Error::ZeroParameter("alpha"));
        }
        if beta.is_zero() {
            return Err(Error::ZeroParameter("beta"));
        }
        let ring = ChainRing::new(field);
        let quotient = Quotient::new(ring, len, RElem::new(alpha, beta))?;
        let base = Poly::binomial(field, len, alpha);
        let rho = base.scale(field.inv(beta)?);
        Ok(ConstaRing {
            field: field.clone(),
            alpha,
            beta,
            quotient,
            model_modulus: &base * &base,
            rho,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn ring(&self) -> &ChainRing {
        self.quotient.ring()
    }

    pub fn len(&self) -> usize {
        self.quotient.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alpha(&self) -> Fe {
        self.alpha
    }

    pub fn beta(&self) -> Fe {
        self.beta
    }

    pub fn lambda(&self) -> RElem {
        self.quotient.lambda()
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn model_modulus(&self) -> &Poly {
        &self.model_modulus
    }

    /// `beta^{-1}(x^N - alpha)`.
    pub fn rho(&self) -> &Poly {
        &self.rho
    }

    /// Reduction into the model ring F_q[x]/((x^N - alpha)^2).
    pub fn model_reduce(&self, a: &Poly) -> Poly {
        a.rem(&self.model_modulus).expect("same field")
    }

    pub fn model_mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.model_reduce(&(a * b))
    }

    /// The ring for `lambda^{-1} = alpha^{-1} + u(-alpha^{-2} beta)`.
    pub fn inverse(&self) -> ConstaRing {
        let f = &self.field;
        let ai = f.inv(self.alpha).unwrap();
        let beta = f.neg(f.mul(f.mul(ai, ai), self.beta));
        ConstaRing::new(f, self.len(), ai, beta).unwrap()
    }

    /// Phi: model ring -> quotient. Writes `a = a0 + rho * a1` by division
    /// and returns `a0 + u a1`.
    pub fn phi(&self, a: &Poly) -> Result<RPoly> {
        let bound = 2 * self.len();
        if a.coeffs().len() > bound {
            return Err(Error::DegreeOutOfRange {
                degree: a.degree().unwrap(),
                bound,
            });
        }
        let (a1, a0) = a.divrem(&self.rho)?;
        Ok(RPoly::from_parts(&a0, &a1))
    }

    /// Phi applied after reducing an arbitrary polynomial into the model ring.
    pub fn phi_reduced(&self, a: &Poly) -> RPoly {
        self.phi(&self.model_reduce(a)).expect("reduced input has degree < 2N")
    }

    /// Inverse of [`ConstaRing::phi`]: `a0 + u a1 -> a0 + rho * a1`.
    pub fn phi_inv(&self, c: &RPoly) -> Result<Poly> {
        self.quotient.check_normal(c)?;
        let (a0, a1) = c.split(&self.field);
        Ok(&a0 + &(&self.rho * &a1))
    }

    /// `c(x) -> c(x^{-1})` into the ring of `lambda^{-1}`, via the closed form
    /// `c_0 + lambda * sum_{i >= 1} c_i x^{N - i}`.
    pub fn tau_bar(&self, c: &RPoly) -> Result<RPoly> {
        self.quotient.check_normal(c)?;
        let n = self.len();
        let ring = self.ring();
        let mut out = vec![RElem::ZERO; n];
        out[0] = c.coeff(0);
        for i in 1..c.coeffs().len() {
            out[n - i] = ring.mul(self.lambda(), c.coeff(i));
        }
        Ok(RPoly::new(out))
    }

    /// Reference route for `tau_bar`: pull back to the model ring, substitute
    /// `x^{-1} = alpha^2 x^{N-1}(2 alpha^{-1} - x^N)` in the model ring of the
    /// inverse twist, and push forward again. Quadratic in `N`; used as a
    /// cross-check.
    pub fn tau_bar_by_substitution(&self, c: &RPoly) -> Result<RPoly> {
        let target = self.inverse();
        let f = &self.field;
        let a = self.phi_inv(c)?;
        let n = self.len();
        let ai = f.inv(self.alpha)?;
        let x_inv = {
            let two_ai = Poly::constant(f, f.add(ai, ai));
            let xn = Poly::monomial(f, f.one(), n);
            let inner = &two_ai - &xn;
            let outer = Poly::monomial(f, f.mul(self.alpha, self.alpha), n - 1);
            target.model_reduce(&(&outer * &inner))
        };
        // Horner in the target model ring
        let mut acc = Poly::zero(f);
        for &coef in a.coeffs().iter().rev() {
            acc = target.model_mul(&acc, &x_inv);
            acc = &acc + &Poly::constant(f, coef);
        }
        target.phi(&acc)
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use proptest::prelude::*;

    fn f3() -> FieldRef {
        Field::new(3, 1, None).unwrap()
    }

    fn r(f: &FieldRef, a: i64, b: i64) -> RElem {
        RElem::new(f.from_prime(a), f.from_prime(b))
    }

    #[test]
    fn inverses() {
        let f = f3();
        let ring = ChainRing::new(&f);
        assert_eq!(ring.inv(r(&f, 2, 1)).unwrap(), r(&f, 2, 2));
        assert_eq!(ring.inv(ring.one()).unwrap(), ring.one());
        assert!(matches!(ring.inv(ring.u()), Err(Error::NotUnit(_))));
    }

    #[test]
    fn inverses_exhaustive() {
        for (p, m) in [(3, 1), (3, 2), (5, 1), (7, 1)] {
            let f = Field::new(p, m, None).unwrap();
            let ring = ChainRing::new(&f);
            for z in ring.elements().filter(RElem::is_unit) {
                assert_eq!(ring.mul(z, ring.inv(z).unwrap()), ring.one());
            }
        }
    }

    #[test]
    fn format_round_trip() {
        let f = Field::new(3, 2, None).unwrap();
        let ring = ChainRing::new(&f);
        for z in ring.elements() {
            assert_eq!(ring.parse(&ring.format(z)).unwrap(), z);
        }
        assert_eq!(ring.parse("u*1").unwrap(), ring.u());
        assert_eq!(ring.parse("1").unwrap(), ring.one());
        assert!(ring.parse("9+u*0").is_err());
        assert!(ring.parse("a+u*0").is_err());
    }

    #[test]
    fn reduction() {
        let f = f3();
        let ring = ChainRing::new(&f);
        let lambda = r(&f, 2, 1);
        let q = Quotient::new(ring.clone(), 3, lambda).unwrap();
        assert_eq!(q.reduce(&RPoly::monomial(ring.one(), 3)), RPoly::constant(lambda));
        let low = RPoly::new(vec![r(&f, 1, 2), r(&f, 0, 1)]);
        assert_eq!(q.reduce(&low), low);
        assert_eq!(q.reduce(&RPoly::monomial(ring.one(), 6)), RPoly::constant(r(&f, 1, 1)));
        assert!(Quotient::new(ring, 3, r(&f, 0, 1)).is_err());
    }

    #[test]
    fn phi_examples() {
        let f = f3();
        let cr = ConstaRing::new(&f, 3, f.from_prime(2), f.one()).unwrap();
        assert_eq!(cr.phi(cr.rho()).unwrap(), RPoly::constant(cr.ring().u()));
        assert_eq!(cr.phi(&Poly::one(&f)).unwrap(), RPoly::constant(cr.ring().one()));
        assert_eq!(cr.phi_reduced(cr.model_modulus()), RPoly::zero());
        assert!(cr.phi(cr.model_modulus()).is_err());
        assert_eq!(cr.phi_inv(&RPoly::constant(cr.ring().u())).unwrap(), *cr.rho());
        assert_eq!(cr.phi_inv(&RPoly::constant(cr.ring().one())).unwrap(), Poly::one(&f));
        assert!(cr.phi_inv(&RPoly::monomial(cr.ring().one(), 3)).is_err());
    }

    #[test]
    fn phi_agrees_with_quotient_reduction() {
        // Phi(a) is literally a mod x^N - lambda
        let f = Field::new(3, 2, None).unwrap();
        let cr = ConstaRing::new(&f, 2, f.generator(), f.from_prime(2)).unwrap();
        for k in 0..4 {
            let a = Poly::monomial(&f, f.one(), k);
            assert_eq!(cr.phi(&a).unwrap(), cr.quotient().from_poly(&a));
        }
    }

    #[test]
    fn tau_bar_examples() {
        let f = f3();
        let cr = ConstaRing::new(&f, 3, f.from_prime(2), f.one()).unwrap();
        let ring = cr.ring();
        let c = RPoly::constant(r(&f, 2, 1));
        assert_eq!(cr.tau_bar(&c).unwrap(), c);
        let u = RPoly::constant(ring.u());
        assert_eq!(cr.tau_bar(&u).unwrap(), u);
        // x -> lambda x^{N-1}
        let x = RPoly::monomial(ring.one(), 1);
        assert_eq!(cr.tau_bar(&x).unwrap(), RPoly::monomial(cr.lambda(), 2));
        let target = cr.inverse();
        assert_eq!(target.lambda(), r(&f, 2, 2));
        // tau_bar(x) is the inverse of x in the target ring
        let prod = target.quotient().mul(&cr.tau_bar(&x).unwrap(), &x);
        assert_eq!(prod, RPoly::constant(ring.one()));
    }

    fn arb_rpoly(len: usize) -> impl Strategy<Value = Vec<(u64, u64)>> {
        proptest::collection::vec((0u64..9, 0u64..9), len)
    }

    fn to_rpoly(f: &FieldRef, v: &[(u64, u64)]) -> RPoly {
        RPoly::new(
            v.iter()
                .map(|&(a, b)| RElem::new(f.element(a).unwrap(), f.element(b).unwrap()))
                .collect(),
        )
    }

    proptest! {
        #[test]
        fn quotient_ring_axioms(a in arb_rpoly(4), b in arb_rpoly(4), c in arb_rpoly(4)) {
            let f = Field::new(3, 2, None).unwrap();
            let cr = ConstaRing::new(&f, 4, f.generator(), f.from_prime(2)).unwrap();
            let q = cr.quotient();
            let (a, b, c) = (to_rpoly(&f, &a), to_rpoly(&f, &b), to_rpoly(&f, &c));
            prop_assert_eq!(q.mul(&q.mul(&a, &b), &c), q.mul(&a, &q.mul(&b, &c)));
            prop_assert_eq!(q.mul(&a, &q.add(&b, &c)), q.add(&q.mul(&a, &b), &q.mul(&a, &c)));
            prop_assert_eq!(q.mul(&a, &b), q.mul(&b, &a));
        }

        #[test]
        fn tau_bar_routes_agree(a in arb_rpoly(4), b in arb_rpoly(4)) {
            let f = Field::new(3, 2, None).unwrap();
            let cr = ConstaRing::new(&f, 4, f.generator(), f.from_prime(5)).unwrap();
            let (a, b) = (to_rpoly(&f, &a), to_rpoly(&f, &b));
            prop_assert_eq!(cr.tau_bar(&a).unwrap(), cr.tau_bar_by_substitution(&a).unwrap());
            let target = cr.inverse();
            let lhs = cr.tau_bar(&cr.quotient().mul(&a, &b)).unwrap();
            let rhs = target.quotient().mul(&cr.tau_bar(&a).unwrap(), &cr.tau_bar(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
            // the inverse twist maps back
            prop_assert_eq!(target.tau_bar(&cr.tau_bar(&a).unwrap()).unwrap(), a);
        }

        #[test]
        fn phi_round_trip(a in proptest::collection::vec(0u64..9, 8), b in proptest::collection::vec(0u64..9, 8)) {
            let f = Field::new(3, 2, None).unwrap();
            let cr = ConstaRing::new(&f, 4, f.from_prime(2), f.generator()).unwrap();
            let a = Poly::from_ints(&f, &a).unwrap();
            let b = Poly::from_ints(&f, &b).unwrap();
            let pa = cr.phi(&a).unwrap();
            prop_assert_eq!(cr.phi_inv(&pa).unwrap(), a.clone());
            let lhs = cr.phi(&cr.model_mul(&a, &b)).unwrap();
            let rhs = cr.quotient().mul(&pa, &cr.phi(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
