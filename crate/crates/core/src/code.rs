//! The family of `(alpha + u beta)`-constacyclic codes of length `p^s n`.
//!
//! With `alpha0^(p^s) = alpha` and `x^n - alpha0 = f_1 ... f_r`, the model
//! ring `A = F_q[x]/((x^N - alpha)^2)` splits by the CRT into the chain rings
//! `F_q[x]/(f_j^(2p^s))`. Every code is `<f_1^l_1 ... f_r^l_r>` for a unique
//! exponent vector with `0 <= l_j <= 2p^s`, and its dual lives over
//! `lambda^{-1}` with exponent `2p^s - l_j` on the reciprocal of `f_j`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use crate::chainring::{ConstaRing, RElem, RPoly};
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldRef};
use crate::poly::{egcd, factor_binomial_seeded, BinomialFactorization, Poly, DEFAULT_SPLIT_SEED};

/// Default cap on enumerated codewords.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Everything fixed by `(p, m, s, n, alpha, beta)`.
pub struct Ambient {
    s: u32,
    n: usize,
    ps: usize,
    ring: ConstaRing,
    alpha0: Fe,
    factorization: BinomialFactorization,
    /// `f_j^(2p^s)`
    prime_powers: Vec<Poly>,
    seed: u64,
    dual: OnceLock<DualLink>,
    idempotents: OnceLock<IdempotentSet>,
}

struct DualLink {
    ambient: Arc<Ambient>,
    /// `pairing[j]` is the index of the monic reciprocal of `f_j` among the
    /// dual factors.
    pairing: Vec<usize>,
}

impl fmt::Debug for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        f.debug_struct("Ambient")
            .field("p", &field.p())
            .field("m", &field.m())
            .field("s", &self.s)
            .field("n", &self.n)
            .field("alpha", &field.encode(self.alpha()))
            .field("beta", &field.encode(self.beta()))
            .field("factors", &self.factorization.factors())
            .finish()
    }
}

impl Ambient {
    pub fn new(field: &FieldRef, s: u32, n: usize, alpha: Fe, beta: Fe) -> Result<Arc<Ambient>> {
        Ambient::with_seed(field, s, n, alpha, beta, DEFAULT_SPLIT_SEED)
    }

    pub fn with_seed(
        field: &FieldRef,
        s: u32,
        n: usize,
        alpha: Fe,
        beta: Fe,
        seed: u64,
    ) -> Result<Arc<Ambient>> {
        if n == 0 {
            return Err(Error::LengthTooSmall { n, min: 1 });
        }
        if n as u64 % field.p() == 0 {
            return Err(Error::LengthNotCoprime { n, p: field.p() });
        }
        if alpha.is_zero() {
            return Err(Error::ZeroParameter("alpha"));
        }
        if beta.is_zero() {
            return Err(Error::ZeroParameter("beta"));
        }
        let ps = field
            .p()
            .checked_pow(s)
            .and_then(|v| usize::try_from(v).ok())
            .filter(|v| v.checked_mul(2 * n).is_some())
            .ok_or(Error::DegreeOutOfRange {
                degree: usize::MAX,
                bound: usize::MAX,
            })?;
        let ring = ConstaRing::new(field, ps * n, alpha, beta)?;
        let alpha0 = field.ps_root(alpha, s)?;
        let factorization = factor_binomial_seeded(field, n, alpha0, seed)?;
        let prime_powers = factorization
            .factors()
            .iter()
            .map(|f| f.pow(2 * ps as u64))
            .collect();
        Ok(Arc::new(Ambient {
            s,
            n,
            ps,
            ring,
            alpha0,
            factorization,
            prime_powers,
            seed,
            dual: OnceLock::new(),
            idempotents: OnceLock::new(),
        }))
    }

    pub fn field(&self) -> &FieldRef {
        self.ring.field()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p^s`.
    pub fn ps(&self) -> usize {
        self.ps
    }

    /// Code length `N = p^s n`.
    pub fn len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn alpha(&self) -> Fe {
        self.ring.alpha()
    }

    pub fn beta(&self) -> Fe {
        self.ring.beta()
    }

    pub fn alpha0(&self) -> Fe {
        self.alpha0
    }

    pub fn lambda(&self) -> RElem {
        self.ring.lambda()
    }

    pub fn ring(&self) -> &ConstaRing {
        &self.ring
    }

    pub fn factorization(&self) -> &BinomialFactorization {
        &self.factorization
    }

    pub fn factors(&self) -> &[Poly] {
        self.factorization.factors()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factorization.degrees()
    }

    /// Number of irreducible factors of `x^n - alpha0`.
    pub fn r(&self) -> usize {
        self.factorization.len()
    }

    /// `2p^s`, the nilpotency index of each `f_j` in its chain ring.
    pub fn max_exponent(&self) -> u32 {
        2 * self.ps as u32
    }

    /// `f_j^(2p^s)`.
    pub fn prime_powers(&self) -> &[Poly] {
        &self.prime_powers
    }

    /// `(2p^s + 1)^r`.
    pub fn code_count(&self) -> BigUint {
        BigUint::from(self.max_exponent() + 1).pow(self.r() as u32)
    }

    /// `|R|^N = p^(2mN)`.
    pub fn ambient_size(&self) -> BigUint {
        let f = self.field();
        BigUint::from(f.p()).pow((2 * f.m() * self.len()) as u32)
    }

    /// Whether both describe the same `(field, s, n, alpha, beta)`.
    pub fn same_instance(&self, other: &Ambient) -> bool {
        **self.field() == **other.field()
            && self.s == other.s
            && self.n == other.n
            && self.alpha() == other.alpha()
            && self.beta() == other.beta()
    }

    fn dual_link(&self) -> &DualLink {
        self.dual.get_or_init(|| {
            let target = self.ring.inverse();
            let ambient = Ambient::with_seed(
                self.field(),
                self.s,
                self.n,
                target.alpha(),
                target.beta(),
                self.seed,
            )
            .expect("the inverse twist satisfies the same preconditions");
            let pairing = self
                .factors()
                .iter()
                .map(|f| {
                    let rec = f.reciprocal_monic().expect("f_j(0) != 0 since alpha0 != 0");
                    ambient
                        .factorization
                        .position(&rec)
                        .expect("the dual factors are the reciprocals of the primal factors")
                })
                .collect();
            DualLink { ambient, pairing }
        })
    }

    /// The ambient for `lambda^{-1}`, built on first use.
    pub fn dual_ambient(&self) -> &Arc<Ambient> {
        &self.dual_link().ambient
    }

    /// `pairing()[j]` is the dual factor index of the reciprocal of `f_j`.
    pub fn pairing(&self) -> &[usize] {
        &self.dual_link().pairing
    }

    pub fn idempotents(&self) -> &IdempotentSet {
        self.idempotents.get_or_init(|| {
            let field = self.field();
            let thetas = (0..self.r())
                .map(|j| {
                    let cofactor = self
                        .prime_powers
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != j)
                        .fold(Poly::one(field), |acc, (_, f)| &acc * f);
                    let (d, g, _h) = egcd(&cofactor, &self.prime_powers[j]).expect("nonzero");
                    debug_assert!(d.is_one());
                    self.ring.model_mul(&g, &cofactor)
                })
                .collect();
            IdempotentSet { thetas }
        })
    }

    /// `a -> (a mod f_1^(2p^s), ..., a mod f_r^(2p^s))`.
    pub fn crt_decompose(&self, a: &Poly) -> Result<Vec<Poly>> {
        let bound = 2 * self.len();
        if a.coeffs().len() > bound {
            return Err(Error::DegreeOutOfRange {
                degree: a.degree().unwrap(),
                bound,
            });
        }
        self.prime_powers.iter().map(|pp| a.rem(pp)).collect()
    }

    /// `(a_1, ..., a_r) -> sum theta_j a_j` in the model ring.
    pub fn crt_compose(&self, parts: &[Poly]) -> Result<Poly> {
        if parts.len() != self.r() {
            return Err(Error::ExponentCount {
                expected: self.r(),
                got: parts.len(),
            });
        }
        let field = self.field();
        let thetas = &self.idempotents().thetas;
        let sum = thetas
            .iter()
            .zip(parts)
            .fold(Poly::zero(field), |acc, (t, a)| &acc + &(t * a));
        Ok(self.ring.model_reduce(&sum))
    }

    /// `v_j` is the largest `k <= 2p^s` with `f_j^k` dividing the image of `c`
    /// in `F_q[x]/(f_j^(2p^s))`.
    pub fn valuation_vector(&self, c: &RPoly) -> Result<Vec<u32>> {
        let a = self.ring.phi_inv(c)?;
        let cap = self.max_exponent();
        self.factors()
            .iter()
            .zip(&self.prime_powers)
            .map(|(f, pp)| a.rem(pp)?.valuation(f, cap))
            .collect()
    }

    fn check_exponents(&self, exponents: &[u32]) -> Result<()> {
        if exponents.len() != self.r() {
            return Err(Error::ExponentCount {
                expected: self.r(),
                got: exponents.len(),
            });
        }
        let max = self.max_exponent();
        if let Some((index, &value)) = exponents.iter().enumerate().find(|(_, &l)| l > max) {
            return Err(Error::ExponentOutOfRange { index, value, max });
        }
        Ok(())
    }

    /// Every exponent vector in lexicographic order.
    pub fn exponent_vectors(&self) -> ExponentVectors {
        ExponentVectors {
            max: self.max_exponent(),
            next: Some(vec![0; self.r()]),
        }
    }

    /// For `r = 1`: the simplified generators `(x^n - alpha0)^l` for
    /// `l < p^s` and `u (x^n - alpha0)^(l - p^s)` for `l >= p^s`.
    pub fn single_factor_generators(&self) -> Result<Vec<SingleFactorGenerator>> {
        if self.r() != 1 {
            return Err(Error::NotSingleFactor(self.r()));
        }
        let field = self.field();
        let base = Poly::binomial(field, self.n, self.alpha0);
        let quotient = self.ring.quotient();
        let u = self.ring.ring().u();
        Ok((0..=self.max_exponent())
            .map(|l| {
                let (form, generator) = if (l as usize) < self.ps {
                    (GeneratorForm::Power(l), quotient.from_poly(&base.pow(l as u64)))
                } else {
                    let k = l - self.ps as u32;
                    let g = quotient.from_poly(&base.pow(k as u64));
                    (GeneratorForm::UPower(k), self.ring.ring().poly_scale(&g, u))
                };
                SingleFactorGenerator { l, form, generator }
            })
            .collect())
    }
}

/// Extension methods needing a shared handle on the ambient.
pub trait AmbientExt {
    fn code(&self, exponents: &[u32]) -> Result<Code>;
    fn codes(&self) -> Box<dyn Iterator<Item = Code> + '_>;
}

impl AmbientExt for Arc<Ambient> {
    fn code(&self, exponents: &[u32]) -> Result<Code> {
        Code::new(self, exponents)
    }

    /// All codes, exponent vectors in lexicographic order.
    fn codes(&self) -> Box<dyn Iterator<Item = Code> + '_> {
        Box::new(self.exponent_vectors().map(|l| Code::new(self, &l).unwrap()))
    }
}

/// Lexicographic odometer over `{0..=max}^r`.
pub struct ExponentVectors {
    max: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for ExponentVectors {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.max {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    }
}

/// The CRT idempotents `theta_j = g_j F_j` of the model ring.
#[derive(Clone, Debug)]
pub struct IdempotentSet {
    pub thetas: Vec<Poly>,
}

impl IdempotentSet {
    /// `sum theta_j = 1`, `theta_j^2 = theta_j`, `theta_j theta_l = 0`.
    pub fn holds(&self, ring: &ConstaRing) -> bool {
        let field = ring.field();
        let sum = self.thetas.iter().fold(Poly::zero(field), |acc, t| &acc + t);
        if !ring.model_reduce(&sum).is_one() {
            return false;
        }
        for (j, a) in self.thetas.iter().enumerate() {
            for (l, b) in self.thetas.iter().enumerate().skip(j) {
                let prod = ring.model_mul(a, b);
                let ok = if j == l { prod == *a } else { prod.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorForm {
    /// `(x^n - alpha0)^k`
    Power(u32),
    /// `u (x^n - alpha0)^k`
    UPower(u32),
}

#[derive(Clone, Debug)]
pub struct SingleFactorGenerator {
    pub l: u32,
    pub form: GeneratorForm,
    pub generator: RPoly,
}

impl fmt::Display for GeneratorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorForm::Power(k) => write!(f, "(x^n - alpha0)^{k}"),
            GeneratorForm::UPower(k) => write!(f, "u(x^n - alpha0)^{k}"),
        }
    }
}

/// The code `<f_1^l_1 ... f_r^l_r>` in `R[x]/(x^N - lambda)`.
#[derive(Clone)]
pub struct Code {
    ambient: Arc<Ambient>,
    exponents: Vec<u32>,
    model_generator: Poly,
    generator: RPoly,
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Code")
            .field("len", &self.ambient.len())
            .field("exponents", &self.exponents)
            .finish()
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Code) -> bool {
        self.exponents == other.exponents && self.ambient.same_instance(&other.ambient)
    }
}

impl Code {
    pub fn new(ambient: &Arc<Ambient>, exponents: &[u32]) -> Result<Code> {
        ambient.check_exponents(exponents)?;
        let ring = ambient.ring();
        let field = ambient.field();
        let mut g = Poly::one(field);
        for (f, &l) in ambient.factors().iter().zip(exponents) {
            g = ring.model_mul(&g, &f.pow(l as u64));
        }
        let generator = ring.phi(&g)?;
        Ok(Code {
            ambient: ambient.clone(),
            exponents: exponents.to_vec(),
            model_generator: g,
            generator,
        })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Normal form of `f_1^l_1 ... f_r^l_r` modulo `x^N - lambda`.
    pub fn generator(&self) -> &RPoly {
        &self.generator
    }

    /// The generator in the model ring, `prod f_j^l_j mod (x^N - alpha)^2`.
    pub fn model_generator(&self) -> &Poly {
        &self.model_generator
    }

    /// `log_p |C| = m (2N - sum d_j l_j)`.
    pub fn size_exponent(&self) -> u64 {
        let m = self.ambient.field().m() as u64;
        let used: u64 = self
            .ambient
            .degrees()
            .iter()
            .zip(&self.exponents)
            .map(|(&d, &l)| d as u64 * l as u64)
            .sum();
        m * (2 * self.ambient.len() as u64 - used)
    }

    /// `|C| = p^(m (2N - sum d_j l_j))`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.ambient.field().p()).pow(self.size_exponent() as u32)
    }

    pub fn is_zero_code(&self) -> bool {
        self.size_exponent() == 0
    }

    pub fn contains(&self, c: &RPoly) -> Result<bool> {
        let v = self.ambient.valuation_vector(c)?;
        Ok(v.iter().zip(&self.exponents).all(|(a, b)| a >= b))
    }

    /// Whether `self` is a subcode of `other`.
    pub fn is_subcode_of(&self, other: &Code) -> bool {
        self.ambient.same_instance(&other.ambient)
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a >= b)
    }

    /// The Euclidean dual, a code over `lambda^{-1}` with exponent
    /// `2p^s - l_j` on the reciprocal of `f_j`.
    pub fn dual(&self) -> Code {
        let target = self.ambient.dual_ambient();
        let max = self.ambient.max_exponent();
        let mut exps = vec![0; self.exponents.len()];
        for (j, &dj) in self.ambient.pairing().iter().enumerate() {
            exps[dj] = max - self.exponents[j];
        }
        Code::new(target, &exps).expect("dual exponents are in range")
    }

    /// Streams every codeword exactly once, in CRT coordinates.
    pub fn codewords(&self, budget: u64) -> Result<Codewords> {
        let exponent = self.size_exponent();
        let p = self.ambient.field().p();
        let count = p.checked_pow(exponent as u32).filter(|&c| c <= budget);
        let Some(count) = count else {
            return Err(Error::BudgetExceeded {
                what: "codeword enumeration",
                required: self.size().to_string(),
                budget,
            });
        };
        Ok(Codewords::new(self, count))
    }
}

/// Odometer over an F_p-basis of the code: each step adds one basis vector
/// per changed digit, since wrapping a digit from `p - 1` to `0` is also an
/// addition of that vector.
pub struct Codewords {
    ring: crate::chainring::ChainRing,
    basis: Vec<Vec<RElem>>,
    p: u32,
    digits: Vec<u32>,
    current: Vec<RElem>,
    remaining: u64,
}

impl Codewords {
    fn new(code: &Code, count: u64) -> Codewords {
        let ambient = &code.ambient;
        let field = ambient.field();
        let ring = ambient.ring();
        let len = ambient.len();
        let thetas = &ambient.idempotents().thetas;
        let x = Poly::x(field);
        let mut basis = Vec::new();
        for (j, f) in ambient.factors().iter().enumerate() {
            let l = code.exponents[j];
            let d = f.degree().unwrap();
            let span = d * (ambient.max_exponent() - l) as usize;
            let mut w = ring.model_mul(&thetas[j], &f.pow(l as u64));
            for _ in 0..span {
                let mut y_pow = field.one();
                for _ in 0..field.m() {
                    let v = ring.phi(&w.scale(y_pow)).expect("reduced");
                    basis.push(v.dense(len));
                    y_pow = field.mul(y_pow, field.generator());
                }
                w = ring.model_mul(&w, &x);
            }
        }
        debug_assert_eq!(basis.len() as u64, code.size_exponent());
        Codewords {
            ring: ring.ring().clone(),
            p: field.p() as u32,
            digits: vec![0; basis.len()],
            basis,
            current: vec![RElem::ZERO; len],
            remaining: count,
        }
    }

    fn add_basis(&mut self, i: usize) {
        for (c, &b) in self.current.iter_mut().zip(&self.basis[i]) {
            *c = self.ring.add(*c, b);
        }
    }
}

impl Iterator for Codewords {
    type Item = RPoly;

    fn next(&mut self) -> Option<RPoly> {
        if self.remaining == 0 {
            return None;
        }
        let out = RPoly::new(self.current.clone());
        self.remaining -= 1;
        if self.remaining > 0 {
            for i in 0..self.digits.len() {
                self.add_basis(i);
                self.digits[i] += 1;
                if self.digits[i] < self.p {
                    break;
                }
                self.digits[i] = 0;
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}
