//! JSON forms of instances and codes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::{Ambient, AmbientExt, Code};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::Poly;

/// Parameters of an ambient ring: `F_{p^m}`, length `p^s n`, and the unit
/// `alpha + u beta` with both parts given by their integer encodings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub p: u64,
    pub m: usize,
    pub s: u32,
    pub n: usize,
    pub alpha: u64,
    pub beta: u64,
    /// Ascending coefficients of the monic modulus of `F_{p^m}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl InstanceSpec {
    pub fn ambient(&self) -> Result<Arc<Ambient>> {
        let field = Field::new(self.p, self.m, self.modulus.as_deref())?;
        let alpha = field.element(self.alpha)?;
        let beta = field.element(self.beta)?;
        Ambient::new(&field, self.s, self.n, alpha, beta)
    }

    pub fn of(ambient: &Ambient) -> InstanceSpec {
        let f = ambient.field();
        InstanceSpec {
            p: f.p(),
            m: f.m(),
            s: ambient.s(),
            n: ambient.n(),
            alpha: f.encode(ambient.alpha()),
            beta: f.encode(ambient.beta()),
            modulus: Some(f.spec().modulus),
        }
    }
}

/// Self-describing form of a code. Only the instance and `exponents` carry
/// information; the remaining fields are checked on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub p: u64,
    pub m: usize,
    pub s: u32,
    pub n: usize,
    pub alpha: u64,
    pub beta: u64,
    pub modulus: Vec<u64>,
    pub factors: Vec<String>,
    pub exponents: Vec<u32>,
    /// Coefficients of the generator, ascending, as `"a+u*b"`.
    pub generator: Vec<String>,
    /// Number of codewords, in decimal.
    pub size: String,
}

impl CodeDescriptor {
    pub fn from_code(code: &Code) -> CodeDescriptor {
        let ambient = code.ambient();
        let spec = InstanceSpec::of(ambient);
        CodeDescriptor {
            p: spec.p,
            m: spec.m,
            s: spec.s,
            n: spec.n,
            alpha: spec.alpha,
            beta: spec.beta,
            modulus: spec.modulus.unwrap_or_default(),
            factors: ambient.factors().iter().map(Poly::to_string).collect(),
            exponents: code.exponents().to_vec(),
            generator: ambient.ring().ring().format_poly(code.generator()),
            size: code.size().to_string(),
        }
    }

    pub fn instance(&self) -> InstanceSpec {
        InstanceSpec {
            p: self.p,
            m: self.m,
            s: self.s,
            n: self.n,
            alpha: self.alpha,
            beta: self.beta,
            modulus: Some(self.modulus.clone()),
        }
    }

    /// Rebuilds the code and checks every derived field against it.
    pub fn to_code(&self) -> Result<Code> {
        let ambient = self.instance().ambient()?;
        let code = ambient.code(&self.exponents)?;
        let field = ambient.field();
        let factors = self
            .factors
            .iter()
            .map(|t| Poly::parse(field, t))
            .collect::<Result<Vec<_>>>()?;
        if factors != ambient.factors() {
            return Err(Error::InconsistentDescriptor("factor list differs".into()));
        }
        let generator = ambient.ring().ring().parse_poly(&self.generator)?;
        if &generator != code.generator() {
            return Err(Error::InconsistentDescriptor("generator differs".into()));
        }
        if self.size != code.size().to_string() {
            return Err(Error::InconsistentDescriptor(format!(
                "size {} does not match {}",
                self.size,
                code.size()
            )));
        }
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    pub fn from_json(text: &str) -> Result<CodeDescriptor> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "code descriptor",
            detail: e.to_string(),
        })
    }
}
