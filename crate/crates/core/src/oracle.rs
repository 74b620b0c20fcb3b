//! Brute-force checks on tiny instances.
//!
//! Nothing here relies on the classification: ideals are found by taking
//! the submodule generated by every single element, duals by testing every
//! vector of `R^N`. Elements of `R^N` are handled as F_p-vectors of length
//! `2mN`; the integer encoding of a vector is `sum_i enc(a_i) q^{2i} +
//! enc(b_i) q^{2i+1}` with `q = p^m`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chainring::{ConstaRing, RElem, RPoly};
use crate::code::{Ambient, AmbientExt, Code};
use crate::distance;
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldRef};
use crate::poly::Poly;

/// Default cap on the number of elements of `R^N` an oracle walks.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

const SAMPLE_SEED: u64 = 0x0ac1_e5ee;

/// `R^N` with the twist `lambda`, as seen by the oracle.
#[derive(Clone, Debug)]
pub struct Space {
    field: FieldRef,
    len: usize,
    lambda: RElem,
    p: u32,
    dim: usize,
}

impl Space {
    pub fn new(field: &FieldRef, len: usize, lambda: RElem) -> Space {
        Space {
            field: field.clone(),
            len,
            lambda,
            p: field.p() as u32,
            dim: 2 * field.m() * len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of vectors, or `None` past `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        (self.p as u64).checked_pow(self.dim as u32)
    }

    fn check_budget(&self, what: &'static str, budget: u64) -> Result<u64> {
        self.cardinality()
            .filter(|&c| c <= budget)
            .ok_or_else(|| Error::BudgetExceeded {
                what,
                required: format!("{}^{}", self.p, self.dim),
                budget,
            })
    }

    fn mul(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        RElem::new(f.mul(x.a, y.a), f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)))
    }

    fn add(&self, x: RElem, y: RElem) -> RElem {
        RElem::new(self.field.add(x.a, y.a), self.field.add(x.b, y.b))
    }

    /// `(c_0, ..., c_{N-1}) -> (lambda c_{N-1}, c_0, ..., c_{N-2})`.
    pub fn twisted_shift(&self, v: &[RElem]) -> Vec<RElem> {
        let mut out = Vec::with_capacity(v.len());
        out.push(self.mul(self.lambda, v[v.len() - 1]));
        out.extend_from_slice(&v[..v.len() - 1]);
        out
    }

    fn scale(&self, v: &[RElem], c: RElem) -> Vec<RElem> {
        v.iter().map(|&z| self.mul(c, z)).collect()
    }

    pub fn inner(&self, a: &[RElem], b: &[RElem]) -> RElem {
        a.iter()
            .zip(b)
            .fold(RElem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    pub fn encode(&self, v: &[RElem]) -> u64 {
        let q = self.field.order();
        v.iter()
            .rev()
            .fold(0u64, |acc, z| (acc * q + self.field.encode(z.b)) * q + self.field.encode(z.a))
    }

    pub fn decode(&self, mut k: u64) -> Vec<RElem> {
        let q = self.field.order();
        let f = &self.field;
        (0..self.len)
            .map(|_| {
                let a = f.element(k % q).unwrap();
                let b = f.element(k / q % q).unwrap();
                k /= q * q;
                RElem::new(a, b)
            })
            .collect()
    }

    fn digits(&self, v: &[RElem]) -> Vec<u32> {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.dim);
        for z in v {
            out.extend_from_slice(f.coeffs(&z.a));
            out.extend_from_slice(f.coeffs(&z.b));
        }
        out
    }

    fn undigits(&self, d: &[u32]) -> Vec<RElem> {
        let f = &self.field;
        let m = f.m();
        let coeffs = |s: &[u32]| f.from_coeffs(&s.iter().map(|&c| c as i64).collect::<Vec<_>>());
        d.chunks(2 * m)
            .map(|c| RElem::new(coeffs(&c[..m]), coeffs(&c[m..])))
            .collect()
    }

    /// F_p-basis `{y^t, u y^t}` of R.
    fn scalars(&self) -> Vec<RElem> {
        let f = &self.field;
        let mut out = Vec::new();
        let mut y_pow = f.one();
        for _ in 0..f.m() {
            out.push(RElem::new(y_pow, Fe::ZERO));
            out.push(RElem::new(Fe::ZERO, y_pow));
            y_pow = f.mul(y_pow, f.generator());
        }
        out
    }

    /// F_p-spanning set of the submodule generated by `g`.
    fn span_of(&self, g: &[RElem], scalars: &[RElem]) -> Vec<Vec<u32>> {
        let mut rows = Vec::with_capacity(self.dim);
        let mut shifted = g.to_vec();
        for _ in 0..self.len {
            for &c in scalars {
                rows.push(self.digits(&self.scale(&shifted, c)));
            }
            shifted = self.twisted_shift(&shifted);
        }
        rows
    }

    /// The ideal generated by `g`, given by its `N` coefficients.
    pub fn principal_ideal(&self, g: &[RElem]) -> OracleIdeal {
        OracleIdeal {
            witness: self.encode(g),
            space: Subspace::from_rows(self.span_of(g, &self.scalars()), self.p),
        }
    }
}

/// Row reduction over F_p on digit vectors; keeps the nonzero rows.
fn rref_mod_p(rows: &mut Vec<Vec<u32>>, p: u32) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(sel) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = inverse_mod_p(rows[rank][col], p);
        for c in rows[rank].iter_mut() {
            *c = *c * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let factor = row[col];
            if r == rank || factor == 0 {
                continue;
            }
            for (c, &pv) in row.iter_mut().zip(&pivot) {
                *c = (*c + (p - factor) * pv) % p;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

fn inverse_mod_p(a: u32, p: u32) -> u32 {
    crate::gf::mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

/// An F_p-subspace of `R^N` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_rows(mut rows: Vec<Vec<u32>>, p: u32) -> Subspace {
        let pivots = rref_mod_p(&mut rows, p);
        Subspace { basis: rows, pivots }
    }

    /// `log_p` of the size.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn contains(&self, v: &[u32], p: u32) -> bool {
        let mut v = v.to_vec();
        for (row, &col) in self.basis.iter().zip(&self.pivots) {
            let factor = v[col];
            if factor != 0 {
                for (c, &r) in v.iter_mut().zip(row) {
                    *c = (*c + (p - factor) * r) % p;
                }
            }
        }
        v.iter().all(|&c| c == 0)
    }
}

/// One ideal found by brute force.
#[derive(Clone, Debug)]
pub struct OracleIdeal {
    /// Encoding of a generator that produced it first.
    pub witness: u64,
    pub space: Subspace,
}

impl OracleIdeal {
    pub fn size_exponent(&self) -> usize {
        self.space.rank()
    }

    /// Sorted encodings of every element.
    pub fn codewords(&self, space: &Space) -> Vec<u64> {
        let p = space.p;
        let basis = &self.space.basis;
        let mut current = vec![0u32; space.dim];
        let mut digits = vec![0u32; basis.len()];
        let total = (p as u64).pow(basis.len() as u32);
        let mut out = Vec::with_capacity(total as usize);
        for _ in 0..total {
            out.push(space.encode(&space.undigits(&current)));
            for i in 0..basis.len() {
                for (c, &b) in current.iter_mut().zip(&basis[i]) {
                    *c = (*c + b) % p;
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
            }
        }
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Debug)]
pub struct IdealSet {
    pub space: Space,
    /// Largest first.
    pub ideals: Vec<OracleIdeal>,
    /// Members failing the ideal test.
    pub closure_failures: usize,
    /// Pairs whose sum is not among the principal ideals found.
    pub nonprincipal_sums: usize,
}

impl IdealSet {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

/// Every principal ideal of `R[x]/(x^N - lambda)`, with the closure checks
/// recorded rather than enforced.
pub fn enumerate_ideals_unchecked(space: &Space, budget: u64) -> Result<IdealSet> {
    let total = space.check_budget("brute-force ideal enumeration", budget)?;
    let p = space.p;
    let scalars = space.scalars();
    let found: HashMap<Subspace, u64> = (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Subspace, u64>, k| {
            let g = space.decode(k);
            let sub = Subspace::from_rows(space.span_of(&g, &scalars), p);
            acc.entry(sub).and_modify(|w| *w = (*w).min(k)).or_insert(k);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (sub, k) in b {
                a.entry(sub).and_modify(|w| *w = (*w).min(k)).or_insert(k);
            }
            a
        });

    let mut ideals: Vec<OracleIdeal> = found
        .into_iter()
        .map(|(space, witness)| OracleIdeal { witness, space })
        .collect();
    ideals.sort_by(|a, b| b.size_exponent().cmp(&a.size_exponent()).then(a.witness.cmp(&b.witness)));

    let closure_failures = ideals
        .iter()
        .filter(|ideal| {
            ideal.space.basis.iter().any(|row| {
                let v = space.undigits(row);
                let mut images: Vec<Vec<RElem>> = scalars.iter().map(|&c| space.scale(&v, c)).collect();
                images.push(space.twisted_shift(&v));
                images.iter().any(|w| !ideal.space.contains(&space.digits(w), p))
            })
        })
        .count();

    let keys: HashSet<&Subspace> = ideals.iter().map(|i| &i.space).collect();
    let mut nonprincipal_sums = 0;
    for (i, a) in ideals.iter().enumerate() {
        for b in &ideals[i + 1..] {
            let mut rows = a.space.basis.clone();
            rows.extend(b.space.basis.iter().cloned());
            if !keys.contains(&Subspace::from_rows(rows, p)) {
                nonprincipal_sums += 1;
            }
        }
    }

    Ok(IdealSet {
        space: space.clone(),
        ideals,
        closure_failures,
        nonprincipal_sums,
    })
}

/// Like [`enumerate_ideals_unchecked`], failing when a found set is not an
/// ideal or a sum of two found ideals is missing from the list.
pub fn enumerate_ideals_bruteforce(space: &Space, budget: u64) -> Result<IdealSet> {
    let set = enumerate_ideals_unchecked(space, budget)?;
    if set.closure_failures > 0 || set.nonprincipal_sums > 0 {
        return Err(Error::NonPrincipalIdeal);
    }
    Ok(set)
}

pub fn space_of(ambient: &Ambient) -> Space {
    Space::new(ambient.field(), ambient.len(), ambient.lambda())
}

/// Sorted encodings of the codewords of `code`.
pub fn code_words(code: &Code, budget: u64) -> Result<Vec<u64>> {
    let space = space_of(code.ambient());
    let mut words: Vec<u64> = code
        .codewords(budget)?
        .map(|w| space.encode(&w.dense(space.len)))
        .collect();
    words.sort_unstable();
    Ok(words)
}

/// Sorted encodings of `{a in R^N : sum a_i c_i = 0 for all c in code}`.
/// Only the rows `x^i g` are tested; the inner product is R-bilinear.
pub fn bruteforce_dual(code: &Code, budget: u64) -> Result<Vec<u64>> {
    let space = space_of(code.ambient());
    let total = space.check_budget("brute-force dual", budget)?;
    let mut rows = Vec::with_capacity(space.len);
    let mut row = code.generator().dense(space.len);
    for _ in 0..space.len {
        rows.push(row.clone());
        row = space.twisted_shift(&row);
    }
    let mut out: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&k| {
            let a = space.decode(k);
            rows.iter().all(|r| space.inner(&a, r).is_zero())
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub instance: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Skipped).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<VerificationReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "verification report",
            detail: e.to_string(),
        })
    }
}

/// Tally for a check run over many items, some of which may be skipped.
#[derive(Default)]
struct Tally {
    ran: usize,
    skipped: usize,
    failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.ran += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn finish(self, check: &str, instance: &str) -> CheckResult {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.ran == 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        let mut detail = format!("ran {}, skipped {} over budget", self.ran, self.skipped);
        if !self.failures.is_empty() {
            let shown: Vec<&str> = self.failures.iter().take(5).map(String::as_str).collect();
            detail.push_str(&format!("; failed: {}", shown.join(", ")));
        }
        CheckResult {
            check: check.to_string(),
            instance: instance.to_string(),
            status,
            detail,
        }
    }
}

fn instance_label(a: &Ambient) -> String {
    let f = a.field();
    format!(
        "({},{},{},{},{},{})",
        f.p(),
        f.m(),
        a.s(),
        a.n(),
        f.encode(a.alpha()),
        f.encode(a.beta())
    )
}

fn random_poly(rng: &mut ChaCha8Rng, field: &FieldRef, len: usize) -> Poly {
    let q = field.order();
    let coeffs = (0..len).map(|_| field.element(rng.gen_range(0..q)).unwrap()).collect();
    Poly::new(field, coeffs)
}

fn random_rpoly(rng: &mut ChaCha8Rng, field: &FieldRef, len: usize) -> RPoly {
    RPoly::from_parts(&random_poly(rng, field, len), &random_poly(rng, field, len))
}

const SAMPLES: usize = 64;
const MEMBERSHIP_SAMPLES: usize = 512;

fn check_phi(ring: &ConstaRing, rng: &mut ChaCha8Rng, tally: &mut Tally) {
    let f = ring.field();
    let q = ring.quotient();
    for i in 0..SAMPLES {
        let a = random_poly(rng, f, 2 * ring.len());
        let b = random_poly(rng, f, 2 * ring.len());
        let (pa, pb) = (ring.phi(&a).unwrap(), ring.phi(&b).unwrap());
        let ok = ring.phi(&ring.model_reduce(&(&a + &b))).unwrap() == q.add(&pa, &pb)
            && ring.phi(&ring.model_mul(&a, &b)).unwrap() == q.mul(&pa, &pb)
            && ring.phi_inv(&pa).unwrap() == a;
        tally.record(ok, || format!("sample {i}"));
    }
}

fn check_tau(ring: &ConstaRing, rng: &mut ChaCha8Rng, tally: &mut Tally) {
    let target = ring.inverse();
    let (q, tq) = (ring.quotient(), target.quotient());
    for i in 0..SAMPLES {
        let c = random_rpoly(rng, ring.field(), ring.len());
        let d = random_rpoly(rng, ring.field(), ring.len());
        let (tc, td) = (ring.tau_bar(&c).unwrap(), ring.tau_bar(&d).unwrap());
        let ok = ring.tau_bar(&q.mul(&c, &d)).unwrap() == tq.mul(&tc, &td)
            && ring.tau_bar(&q.add(&c, &d)).unwrap() == tq.add(&tc, &td)
            && target.tau_bar(&tc).unwrap() == c
            && ring.tau_bar_by_substitution(&c).unwrap() == tc;
        tally.record(ok, || format!("sample {i}"));
    }
}

/// Runs every check that fits in `budget` and reports the rest as skipped.
pub fn verify_ambient(ambient: &std::sync::Arc<Ambient>, budget: u64) -> VerificationReport {
    let instance = instance_label(ambient);
    let ring = ambient.ring();
    let space = space_of(ambient);
    let within = space.cardinality().is_some_and(|c| c <= budget);
    let codes: Vec<Code> = ambient.codes().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut checks = Vec::new();

    let mut t = Tally::default();
    t.record(ambient.idempotents().holds(ring), || "identities".into());
    checks.push(t.finish("idempotents", &instance));

    let mut t = Tally::default();
    check_phi(ring, &mut rng, &mut t);
    checks.push(t.finish("phi-isomorphism", &instance));

    let mut t = Tally::default();
    check_tau(ring, &mut rng, &mut t);
    checks.push(t.finish("tau-isomorphism", &instance));

    // |C| |C^perp| = |R|^N from the size formulas alone
    let mut t = Tally::default();
    let full = ambient.ambient_size();
    for code in &codes {
        let dual = code.dual();
        let ok = code.size() * dual.size() == full
            && dual.ambient().dual_ambient().same_instance(ambient)
            && dual.dual().exponents() == code.exponents();
        t.record(ok, || format!("{:?}", code.exponents()));
    }
    checks.push(t.finish("dual-sizes", &instance));

    // distinct enumerated codewords; membership on a prefix of each stream
    let mut t = Tally::default();
    for code in &codes {
        match code.codewords(budget) {
            Ok(words) => {
                let mut seen = HashSet::new();
                let mut ok = true;
                for (i, w) in words.enumerate() {
                    if i < MEMBERSHIP_SAMPLES {
                        ok &= code.contains(&w).unwrap_or(false);
                    }
                    ok &= seen.insert(space.digits(&w.dense(space.len)));
                }
                ok &= num_bigint::BigUint::from(seen.len()) == code.size();
                t.record(ok, || format!("{:?}", code.exponents()));
            }
            Err(_) => t.skipped += 1,
        }
    }
    checks.push(t.finish("code-sizes", &instance));

    let mut t = Tally::default();
    if within {
        match enumerate_ideals_unchecked(&space, budget) {
            Ok(set) => {
                t.record(set.closure_failures == 0, || format!("{} non-ideals", set.closure_failures));
                t.record(set.nonprincipal_sums == 0, || {
                    format!("{} non-principal sums", set.nonprincipal_sums)
                });
                t.record(num_bigint::BigUint::from(set.len()) == ambient.code_count(), || {
                    format!("{} ideals, expected {}", set.len(), ambient.code_count())
                });
                let mut unmatched: HashMap<Vec<u64>, usize> = HashMap::new();
                for ideal in &set.ideals {
                    *unmatched.entry(ideal.codewords(&space)).or_default() += 1;
                }
                for code in &codes {
                    let words = code_words(code, budget).unwrap_or_default();
                    let ok = match unmatched.get_mut(&words) {
                        Some(n) if *n > 0 => {
                            *n -= 1;
                            true
                        }
                        _ => false,
                    };
                    t.record(ok, || format!("{:?} has no ideal", code.exponents()));
                }
            }
            Err(e) => t.record(false, || e.to_string()),
        }
    } else {
        t.skipped += 1;
    }
    checks.push(t.finish("ideal-classification", &instance));

    let mut t = Tally::default();
    for code in &codes {
        if !within {
            t.skipped += 1;
            continue;
        }
        let brute = bruteforce_dual(code, budget);
        let predicted = code_words(&code.dual(), budget);
        match (brute, predicted) {
            (Ok(b), Ok(d)) => {
                let ok = b == d && code.size() * b.len() == space.cardinality().unwrap().into();
                t.record(ok, || format!("{:?}", code.exponents()));
            }
            _ => t.skipped += 1,
        }
    }
    checks.push(t.finish("duality", &instance));

    let mut t = Tally::default();
    for code in &codes {
        let fast = distance::min_distance(code, budget);
        let slow = distance::min_weight_exhaustive(code, budget);
        match (fast, slow) {
            (Ok(a), Ok(b)) => {
                let mut ok = a.distance == b.distance;
                let parts = distance::residue_parts(code);
                if !parts.g0_is_zero {
                    let (d0, _) = distance::linear_code_distance(ambient.field(), &parts.c0, u64::MAX)
                        .unwrap_or((None, 0));
                    if let (distance::Distance::Finite(d), Some(d0)) = (a.distance, d0) {
                        ok &= d <= d0;
                    }
                }
                t.record(ok, || format!("{:?}", code.exponents()));
            }
            _ => t.skipped += 1,
        }
    }
    checks.push(t.finish("distance-identity", &instance));

    VerificationReport { checks }
}
