use std::fs;
use std::io::{self, Read, Write};
use std::sync::Arc;

use serde_json::json;

use constacyclic::chainring::{ChainRing, RPoly};
use constacyclic::code::{Ambient, AmbientExt, Code};
use constacyclic::distance::{self, Distance, DEFAULT_DISTANCE_BUDGET};
use constacyclic::gf::{factorize, Field, FieldRef};
use constacyclic::oracle::{self, DEFAULT_ORACLE_BUDGET};
use constacyclic::poly::{binomial_irreducible, factor_binomial, Poly};
use constacyclic::serial::{CodeDescriptor, InstanceSpec};

use crate::{CodeArgs, Failure, InstanceArgs, MethodArg};

pub struct Context {
    pub instance: InstanceArgs,
    pub json: bool,
    pub budget: Option<u64>,
}

type Out<'a> = dyn Write + 'a;

fn required<T: Copy>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::precondition(format!("missing --{flag}")))
}

impl Context {
    fn field(&self) -> Result<FieldRef, Failure> {
        let i = &self.instance;
        Ok(Field::new(required(i.p, "p")?, i.m, i.modulus.as_deref()).map_err(constacyclic::Error::from)?)
    }

    fn spec(&self) -> Result<InstanceSpec, Failure> {
        let i = &self.instance;
        Ok(InstanceSpec {
            p: required(i.p, "p")?,
            m: i.m,
            s: required(i.s, "s")?,
            n: required(i.n, "n")?,
            alpha: required(i.alpha, "alpha")?,
            beta: required(i.beta, "beta")?,
            modulus: i.modulus.clone(),
        })
    }

    fn ambient(&self) -> Result<Arc<Ambient>, Failure> {
        Ok(self.spec()?.ambient()?)
    }

    fn code(&self, args: &CodeArgs) -> Result<Code, Failure> {
        if let Some(path) = &args.descriptor {
            let text = if path == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(path).map_err(|e| Failure::precondition(format!("{path}: {e}")))?
            };
            return Ok(CodeDescriptor::from_json(&text)?.to_code()?);
        }
        let exponents = args
            .exponents
            .as_ref()
            .ok_or_else(|| Failure::precondition("missing --exponents or --descriptor"))?;
        Ok(self.ambient()?.code(exponents)?)
    }
}

/// `c_k*x^k + ... + c_0` with coefficients written as `a+u*b`.
fn rpoly_text(ring: &ChainRing, f: &RPoly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, &c)| {
            let c = ring.format(c);
            match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            }
        })
        .collect();
    terms.join(" + ")
}

pub fn factor(ctx: &Context, out: &mut Out) -> Result<(), Failure> {
    let field = ctx.field()?;
    let s = required(ctx.instance.s, "s")?;
    let n = required(ctx.instance.n, "n")?;
    let alpha = field
        .element(required(ctx.instance.alpha, "alpha")?)
        .map_err(constacyclic::Error::from)?;
    if alpha.is_zero() {
        return Err(Failure::precondition("alpha must be nonzero"));
    }
    let alpha0 = field.ps_root(alpha, s).map_err(constacyclic::Error::from)?;
    let fact = factor_binomial(&field, n, alpha0)?;
    let binomial = Poly::binomial(&field, n, alpha0);
    let product_matches = fact.product() == binomial;
    let kappa = field.mult_order(alpha0).map_err(constacyclic::Error::from)?;

    let criterion = if n >= 2 && kappa > 1 {
        let irreducible = binomial_irreducible(&field, n, alpha0)?;
        let group = field.order() - 1;
        let mut reasons = Vec::new();
        for (r, _) in factorize(n as u64) {
            if kappa % r != 0 {
                reasons.push(format!("{r} divides n but not ord(alpha0) = {kappa}"));
            } else if (group / kappa) % r == 0 {
                reasons.push(format!("{r} divides (p^m - 1)/ord(alpha0) = {}", group / kappa));
            }
        }
        if n % 4 == 0 && group % 4 != 0 {
            reasons.push("4 divides n but not p^m - 1".to_string());
        }
        Some((irreducible, reasons))
    } else {
        None
    };

    if ctx.json {
        let factors: Vec<_> = fact
            .factors()
            .iter()
            .map(|f| json!({"poly": f.to_string(), "degree": f.degree()}))
            .collect();
        let criterion = criterion.map(|(irreducible, reasons)| json!({"irreducible": irreducible, "reasons": reasons}));
        let v = json!({
            "alpha0": field.encode(alpha0),
            "order": kappa,
            "binomial": binomial.to_string(),
            "factors": factors,
            "product_matches": product_matches,
            "criterion": criterion,
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "alpha0 = {}  (order {kappa})", field.encode(alpha0))?;
        writeln!(out, "x^{n} - alpha0 = {binomial}")?;
        for (j, f) in fact.factors().iter().enumerate() {
            writeln!(out, "f{} = {f}  (degree {})", j + 1, f.degree().unwrap())?;
        }
        writeln!(out, "product check: {}", if product_matches { "ok" } else { "MISMATCH" })?;
        match criterion {
            Some((true, _)) => writeln!(out, "order criterion: irreducible")?,
            Some((false, reasons)) => writeln!(out, "order criterion: reducible ({})", reasons.join("; "))?,
            None => writeln!(out, "order criterion: not applicable (needs n >= 2 and ord(alpha0) > 1)")?,
        }
    }
    if !product_matches {
        return Err(Failure {
            code: 2,
            message: "factor product differs from the binomial".into(),
        });
    }
    Ok(())
}

fn code_line(code: &Code) -> String {
    let field = code.ambient().field();
    format!(
        "{:?}  |C| = {}^{} = {}",
        code.exponents(),
        field.p(),
        code.size_exponent(),
        code.size()
    )
}

pub fn list_codes(ctx: &Context, limit: Option<u64>, out: &mut Out) -> Result<(), Failure> {
    let ambient = ctx.ambient()?;
    let limit = limit.unwrap_or(u64::MAX);
    for code in ambient.codes().take(usize::try_from(limit).unwrap_or(usize::MAX)) {
        if ctx.json {
            writeln!(out, "{}", CodeDescriptor::from_code(&code).to_json())?;
        } else {
            writeln!(out, "{}", code_line(&code))?;
        }
    }
    let total = ambient.code_count().to_string();
    if ctx.json {
        writeln!(out, "{}", json!({ "total": total }))?;
    } else {
        writeln!(out, "total: {total}")?;
    }
    Ok(())
}

fn describe(code: &Code, out: &mut Out) -> Result<(), Failure> {
    let ambient = code.ambient();
    let field = ambient.field();
    let ring = ambient.ring().ring();
    writeln!(
        out,
        "instance: p={} m={} s={} n={}  length {}  lambda = {}",
        field.p(),
        field.m(),
        ambient.s(),
        ambient.n(),
        ambient.len(),
        ring.format(ambient.lambda())
    )?;
    for (j, f) in ambient.factors().iter().enumerate() {
        writeln!(out, "f{} = {f}", j + 1)?;
    }
    writeln!(out, "exponents: {:?}", code.exponents())?;
    writeln!(out, "generator: {}", rpoly_text(ring, code.generator()))?;
    writeln!(out, "size: {}^{} = {}", field.p(), code.size_exponent(), code.size())?;
    Ok(())
}

pub fn info(ctx: &Context, args: &CodeArgs, out: &mut Out) -> Result<(), Failure> {
    let code = ctx.code(args)?;
    if ctx.json {
        writeln!(out, "{}", CodeDescriptor::from_code(&code).to_json())?;
    } else {
        describe(&code, out)?;
        writeln!(out, "dual exponents: {:?}", code.dual().exponents())?;
    }
    Ok(())
}

pub fn dual(ctx: &Context, args: &CodeArgs, out: &mut Out) -> Result<(), Failure> {
    let dual = ctx.code(args)?.dual();
    if ctx.json {
        writeln!(out, "{}", CodeDescriptor::from_code(&dual).to_json())?;
    } else {
        describe(&dual, out)?;
    }
    Ok(())
}

pub fn distance(ctx: &Context, args: &CodeArgs, method: MethodArg, out: &mut Out) -> Result<(), Failure> {
    let code = ctx.code(args)?;
    let budget = ctx.budget.unwrap_or(DEFAULT_DISTANCE_BUDGET);
    let report = match method {
        MethodArg::Residue => distance::min_distance(&code, budget)?,
        MethodArg::Exhaustive => distance::min_weight_exhaustive(&code, budget)?,
    };
    if ctx.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        let d = match report.distance {
            Distance::Finite(d) => d.to_string(),
            Distance::ZeroCode => "zero-code".to_string(),
        };
        writeln!(
            out,
            "d = {d}  (method {}, dimension {}, enumerated {})",
            report.method.as_str(),
            report.dimension,
            report.enumerated
        )?;
    }
    Ok(())
}

pub fn verify(ctx: &Context, out: &mut Out) -> Result<(), Failure> {
    let ambient = ctx.ambient()?;
    let budget = ctx.budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
    let report = oracle::verify_ambient(&ambient, budget);
    if ctx.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        for c in &report.checks {
            writeln!(out, "{:<8} {:<22} {}  {}", c.status, c.check, c.instance, c.detail)?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 2,
            message: "verification failed".into(),
        })
    }
}
