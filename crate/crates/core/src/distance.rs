//! Minimum Hamming distance through the residue code.
//!
//! Writing the generator matrix of a code over R as `G0 + u G1`, the
//! codewords of the form `u w` are exactly `w in C = rowspace(G0) +
//! {a G1 : a G0 = 0}`, and `d(code) = d(C)`. The distance is then found by
//! exhaustive traversal of the F_q-span of `C`. An independent check walks
//! every codeword over R.

use std::fmt;

use serde_json::{json, Value};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Matrix};

/// Default cap on the number of enumerated vectors.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Finite(usize),
    /// The code has no nonzero codeword.
    ZeroCode,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::ZeroCode => write!(f, "zero-code"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Residue,
    Exhaustive,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Residue => "residue",
            Method::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: Distance,
    pub method: Method,
    /// Residue method: dimension of the residue code over F_q. Exhaustive
    /// method: `log_q |C|`.
    pub dimension: usize,
    /// Vectors visited, including zero.
    pub enumerated: u64,
}

impl DistanceReport {
    pub fn to_json(&self) -> Value {
        let d = match self.distance {
            Distance::Finite(d) => json!(d),
            Distance::ZeroCode => json!("zero-code"),
        };
        json!({
            "d": d,
            "method": self.method.as_str(),
            "dimension": self.dimension,
            "enumerated": self.enumerated,
        })
    }

    pub fn from_json(v: &Value) -> Result<DistanceReport> {
        let err = |detail: &str| Error::Parse {
            what: "distance report",
            detail: detail.to_string(),
        };
        let distance = match &v["d"] {
            Value::String(s) if s == "zero-code" => Distance::ZeroCode,
            Value::Number(n) => Distance::Finite(n.as_u64().ok_or_else(|| err("d"))? as usize),
            _ => return Err(err("d")),
        };
        let method = match v["method"].as_str() {
            Some("residue") => Method::Residue,
            Some("exhaustive") => Method::Exhaustive,
            _ => return Err(err("method")),
        };
        Ok(DistanceReport {
            distance,
            method,
            dimension: v["dimension"].as_u64().ok_or_else(|| err("dimension"))? as usize,
            enumerated: v["enumerated"].as_u64().ok_or_else(|| err("enumerated"))?,
        })
    }
}

/// `G0 + u G1`, where row `i` is the normal form of `x^i g(x)`.
#[derive(Clone, Debug)]
pub struct GeneratorMatrixPair {
    pub g0: Matrix,
    pub g1: Matrix,
}

pub fn generator_matrix(code: &Code) -> GeneratorMatrixPair {
    let ambient = code.ambient();
    let quotient = ambient.ring().quotient();
    let len = ambient.len();
    let mut g0 = Vec::with_capacity(len);
    let mut g1 = Vec::with_capacity(len);
    let mut row = code.generator().clone();
    for _ in 0..len {
        let dense = row.dense(len);
        g0.push(dense.iter().map(|z| z.a).collect());
        g1.push(dense.iter().map(|z| z.b).collect());
        row = quotient.mul_x(&row);
    }
    GeneratorMatrixPair { g0, g1 }
}

/// A linear code over F_q given by a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    pub len: usize,
    pub basis: Matrix,
}

impl LinearCode {
    pub fn from_spanning(field: &Field, len: usize, rows: &[Vec<Fe>]) -> LinearCode {
        LinearCode {
            len,
            basis: linalg::rref(field, rows).0,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, field: &Field, v: &[Fe]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        linalg::rank(field, &rows) == self.basis.len()
    }

    pub fn is_subspace_of(&self, field: &Field, other: &LinearCode) -> bool {
        self.basis.iter().all(|v| other.contains(field, v))
    }
}

/// The pieces of the residue construction.
#[derive(Clone, Debug)]
pub struct ResidueParts {
    /// `C0 = rowspace(G0)`.
    pub c0: LinearCode,
    /// `C = rowspace(G0) + ker(G0) G1`.
    pub residue: LinearCode,
    pub g0_is_zero: bool,
    /// Whether `a G1 = 0` for every `a` with `a G0 = 0`.
    pub kernel_annihilates_g1: bool,
}

pub fn residue_parts(code: &Code) -> ResidueParts {
    let field = code.ambient().field();
    let len = code.ambient().len();
    let GeneratorMatrixPair { g0, g1 } = generator_matrix(code);
    let kernel = linalg::left_kernel(field, &g0);
    let images: Matrix = kernel.iter().map(|a| linalg::vec_mul(field, a, &g1)).collect();
    let kernel_annihilates_g1 = images.iter().all(|v| v.iter().all(Fe::is_zero));
    let mut spanning = g0.clone();
    spanning.extend(images);
    ResidueParts {
        c0: LinearCode::from_spanning(field, len, &g0),
        residue: LinearCode::from_spanning(field, len, &spanning),
        g0_is_zero: g0.iter().all(|r| r.iter().all(Fe::is_zero)),
        kernel_annihilates_g1,
    }
}

pub fn residue_code(code: &Code) -> LinearCode {
    residue_parts(code).residue
}

/// Minimum weight of a nonzero vector in the span of `code.basis`, by
/// walking all `q^k` combinations. Returns `(None, visited)` for `k = 0`.
pub fn linear_code_distance(field: &Field, code: &LinearCode, budget: u64) -> Result<(Option<usize>, u64)> {
    let k = code.dimension();
    if k == 0 {
        return Ok((None, 1));
    }
    let p = field.p();
    let digits = field.m() * k;
    let total = p
        .checked_pow(digits as u32)
        .filter(|&t| t <= budget)
        .ok_or_else(|| Error::BudgetExceeded {
            what: "residue code traversal",
            required: format!("{p}^{digits}"),
            budget,
        })?;
    // F_p-basis {y^t b_i}
    let mut basis = Vec::with_capacity(digits);
    for row in &code.basis {
        let mut y_pow = field.one();
        for _ in 0..field.m() {
            basis.push(row.iter().map(|&c| field.mul(c, y_pow)).collect::<Vec<_>>());
            y_pow = field.mul(y_pow, field.generator());
        }
    }
    let mut current = vec![Fe::ZERO; code.len];
    let mut state = vec![0u64; digits];
    let mut best = usize::MAX;
    let mut visited = 1u64;
    while visited < total {
        for i in 0..digits {
            for (c, &b) in current.iter_mut().zip(&basis[i]) {
                *c = field.add(*c, b);
            }
            state[i] += 1;
            if state[i] < p {
                break;
            }
            state[i] = 0;
        }
        visited += 1;
        let w = current.iter().filter(|c| !c.is_zero()).count();
        if w > 0 && w < best {
            best = w;
            if best == 1 {
                break;
            }
        }
    }
    Ok((Some(best), visited))
}

/// Distance via the residue code.
pub fn min_distance(code: &Code, budget: u64) -> Result<DistanceReport> {
    let field = code.ambient().field();
    let residue = residue_code(code);
    let dimension = residue.dimension();
    if code.is_zero_code() {
        return Ok(DistanceReport {
            distance: Distance::ZeroCode,
            method: Method::Residue,
            dimension,
            enumerated: 0,
        });
    }
    let (d, enumerated) = linear_code_distance(field, &residue, budget)?;
    let distance = d.map_or(Distance::ZeroCode, Distance::Finite);
    Ok(DistanceReport {
        distance,
        method: Method::Residue,
        dimension,
        enumerated,
    })
}

/// Minimum weight over every codeword over R.
pub fn min_weight_exhaustive(code: &Code, budget: u64) -> Result<DistanceReport> {
    let m = code.ambient().field().m() as u64;
    let dimension = (code.size_exponent() / m) as usize;
    if code.is_zero_code() {
        return Ok(DistanceReport {
            distance: Distance::ZeroCode,
            method: Method::Exhaustive,
            dimension,
            enumerated: 0,
        });
    }
    let mut best = usize::MAX;
    let mut enumerated = 0u64;
    for word in code.codewords(budget)? {
        enumerated += 1;
        let w = word.weight();
        if w > 0 && w < best {
            best = w;
        }
    }
    Ok(DistanceReport {
        distance: Distance::Finite(best),
        method: Method::Exhaustive,
        dimension,
        enumerated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::{RElem, RPoly};
    use crate::code::{Ambient, AmbientExt};
    use crate::gf::{Field, FieldRef};
    use std::sync::Arc;

    fn ambient(n: usize) -> Arc<Ambient> {
        let f = Field::new(3, 1, None).unwrap();
        Ambient::new(&f, 1, n, f.from_prime(2), f.one()).unwrap()
    }

    #[test]
    fn matrices() {
        let a = ambient(1);
        let full = generator_matrix(&a.code(&[0]).unwrap());
        let f = a.field();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(full.g0[i][j], if i == j { f.one() } else { Fe::ZERO });
                assert!(full.g1[i][j].is_zero());
            }
        }
        // l = 3 is <u>: G0 = 0, G1 = identity up to the unit beta
        let u_code = generator_matrix(&a.code(&[3]).unwrap());
        assert!(u_code.g0.iter().flatten().all(Fe::is_zero));
        let scale = u_code.g1[0][0];
        assert!(!scale.is_zero());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(u_code.g1[i][j], if i == j { scale } else { Fe::ZERO });
            }
        }
        // rows are x^i g computed directly in the quotient
        let code = a.code(&[4]).unwrap();
        let gm = generator_matrix(&code);
        let q = a.ring().quotient();
        let ring = a.ring().ring();
        for i in 0..3 {
            let xi = RPoly::monomial(ring.one(), i);
            let row = q.mul(&xi, code.generator()).dense(3);
            assert_eq!(row.iter().map(|z| z.a).collect::<Vec<_>>(), gm.g0[i]);
            assert_eq!(row.iter().map(|z| z.b).collect::<Vec<_>>(), gm.g1[i]);
        }
    }

    /// `{w : u w in C}` by searching all of F_q^N.
    fn residue_by_search(code: &Code) -> Vec<Vec<Fe>> {
        let f: &FieldRef = code.ambient().field();
        let len = code.ambient().len();
        let q = f.order();
        let mut out = Vec::new();
        for v in 0..q.pow(len as u32) {
            let w: Vec<Fe> = (0..len)
                .map(|i| f.element(v / q.pow(i as u32) % q).unwrap())
                .collect();
            let uw = RPoly::new(w.iter().map(|&c| RElem::new(Fe::ZERO, c)).collect());
            if code.contains(&uw).unwrap() {
                out.push(w);
            }
        }
        out
    }

    #[test]
    fn residue_matches_definition() {
        let a = ambient(1);
        let f = a.field().clone();
        for code in a.codes() {
            let residue = residue_code(&code);
            let found = residue_by_search(&code);
            assert_eq!(f.order().pow(residue.dimension() as u32), found.len() as u64);
            assert!(found.iter().all(|w| residue.contains(&f, w)));
        }
        assert_eq!(residue_code(&a.code(&[0]).unwrap()).dimension(), 3);
    }

    #[test]
    fn distances_length_three() {
        let a = ambient(1);
        assert_eq!(
            min_distance(&a.code(&[0]).unwrap(), 1000).unwrap().distance,
            Distance::Finite(1)
        );
        assert_eq!(min_distance(&a.code(&[6]).unwrap(), 1000).unwrap().distance, Distance::ZeroCode);
        assert_eq!(
            min_weight_exhaustive(&a.code(&[6]).unwrap(), 1000).unwrap().distance,
            Distance::ZeroCode
        );
        assert_eq!(min_distance(&a.code(&[5]).unwrap(), 1000).unwrap().distance, Distance::Finite(3));
        let mut last = 0;
        for code in a.codes() {
            let fast = min_distance(&code, 1000).unwrap();
            let slow = min_weight_exhaustive(&code, 1000).unwrap();
            assert_eq!(fast.distance, slow.distance, "{:?}", code.exponents());
            if let Distance::Finite(d) = fast.distance {
                assert!(d >= last);
                last = d;
            }
        }
    }

    #[test]
    fn over_budget() {
        let a = ambient(10);
        let code = a.code(&[0, 0, 0]).unwrap();
        assert!(matches!(min_distance(&code, 1000), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(min_weight_exhaustive(&code, 1000), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn report_json_round_trip() {
        for r in [
            DistanceReport {
                distance: Distance::Finite(3),
                method: Method::Residue,
                dimension: 2,
                enumerated: 9,
            },
            DistanceReport {
                distance: Distance::ZeroCode,
                method: Method::Exhaustive,
                dimension: 0,
                enumerated: 0,
            },
        ] {
            assert_eq!(DistanceReport::from_json(&r.to_json()).unwrap(), r);
        }
    }
}
