//! Command implementations. Each returns a JSON result payload plus a terminal rendering.

use std::fmt::Write as _;

use poisson_kit::diagnostics::{
    degeneracy_divisor, holonomy_verdict_with_budget, modular_foliation_generators,
    surface_h2_report_with_budget, surface_leaf_report_with_budget, Verdict,
};
use poisson_kit::error::{Error, ErrorClass};
use poisson_kit::graded::cohomology_table_with_cap;
use poisson_kit::groebner::{tjurina_at, tjurina_global_with_budget};
use poisson_kit::identities::run_suite;
use poisson_kit::poisson::jacobiator;
use poisson_kit::poly::{Poly, Rational};
use serde_json::{json, Value};
use thiserror::Error;

use crate::structure::{FileError, StructureFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::File(_) => 2,
            CliError::Core(e) => match e.class() {
                ErrorClass::Parse => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::Resource => 4,
            },
        }
    }

    pub fn class(&self) -> &'static str {
        match self.exit_code() {
            2 => "parse",
            3 => "precondition",
            _ => "resource",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "class": self.class(), "message": self.to_string() });
        if let CliError::File(f) = self {
            v["line"] = json!(f.line);
            v["column"] = json!(f.column);
        }
        if let CliError::Core(Error::JacobiFailure { jacobiator }) = self {
            v["jacobiator"] = json!(jacobiator);
        }
        json!({ "error": v })
    }
}

/// A successful computation. `precondition_failed` marks reports whose subject
/// violates a requirement (exit code 3) although the report itself is complete.
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub precondition_failed: bool,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Outcome { result, text, precondition_failed: false }
    }
}

fn chart_json(file: &StructureFile) -> Value {
    json!({ "variables": file.chart.names(), "weights": file.chart.weights() })
}

pub fn check(file: &StructureFile) -> Result<Outcome, CliError> {
    let pi = file.bivector()?;
    let jac = jacobiator(&pi)?;
    let holds = jac.is_zero();
    let text = if holds {
        format!("pi = {pi}\nJacobi identity holds: [pi, pi] = 0\n")
    } else {
        format!("pi = {pi}\nJacobi identity FAILS: [pi, pi] = {jac}\n")
    };
    Ok(Outcome {
        result: json!({
            "chart": chart_json(file),
            "bivector": pi,
            "jacobi_holds": holds,
            "jacobiator": jac,
        }),
        text,
        precondition_failed: !holds,
    })
}

pub fn modular(file: &StructureFile) -> Result<Outcome, CliError> {
    let p = file.structure()?;
    let zeta = p.modular_field();
    let symmetry = zeta.lie_derivative(p.bivector())?.is_zero();
    let text = format!(
        "pi = {}\nzeta = {}\nL_zeta pi = 0: {}\n",
        p.bivector(),
        if zeta.is_zero() { "0".to_string() } else { zeta.to_string() },
        if symmetry { "verified" } else { "FAILED" }
    );
    Ok(Outcome::ok(
        json!({
            "chart": chart_json(file),
            "bivector": p.bivector(),
            "modular_field": zeta,
            "unimodular": zeta.is_zero(),
            "lie_derivative_vanishes": symmetry,
        }),
        text,
    ))
}

fn soft<T: serde::Serialize>(r: Result<T, Error>) -> Result<Value, CliError> {
    match r {
        Ok(v) => Ok(json!(v)),
        Err(e) if e.class() == ErrorClass::Resource => Err(e.into()),
        Err(e) => Ok(json!({ "error": e.to_string() })),
    }
}

pub fn report(file: &StructureFile, betti: Option<&[u64]>, budget: u64) -> Result<Outcome, CliError> {
    let p = file.structure()?;
    let n = p.chart().dim();
    let mut text = format!("pi = {}\n", p.bivector());

    let divisor = degeneracy_divisor(&p);
    match &divisor {
        Ok((f, reduced)) => {
            let _ = writeln!(text, "Pfaffian = {f} ({})", if *reduced { "reduced" } else { "not reduced" });
        }
        Err(e) => {
            let _ = writeln!(text, "Pfaffian: {e}");
        }
    }
    let divisor = soft(divisor.map(|(f, reduced)| json!({ "pfaffian": f, "reduced": reduced })))?;
    let verdict = holonomy_verdict_with_budget(&p, budget);
    if let Ok(v) = &verdict {
        let _ = writeln!(text, "verdict: {}", verdict_text(v.verdict));
    }
    let verdict = soft(verdict)?;
    let surface = if n == 2 {
        let leaves = soft(surface_leaf_report_with_budget(&p, budget))?;
        let h2 = soft(surface_h2_report_with_budget(&p, betti, budget))?;
        if let Some(t) = leaves.get("tjurina_total") {
            let _ = writeln!(text, "singular locus dimension {}, total Tjurina number {}", leaves["singular_dimension"], t);
        }
        if let Some(formula) = h2.get("formula").and_then(Value::as_str) {
            let _ = writeln!(text, "dim H^2 = {formula}");
        }
        json!({ "leaves": leaves, "h2": h2 })
    } else {
        Value::Null
    };
    let generators = p.dmodule_generators();
    text.push_str("D-ideal generators zeta(f) + H_f:\n");
    for g in &generators {
        let _ = writeln!(text, "  f = {}: {} + {}", g.source, g.scalar_part, g.vector_part);
    }
    Ok(Outcome::ok(
        json!({
            "chart": chart_json(file),
            "bivector": p.bivector(),
            "modular_field": p.modular_field(),
            "degeneracy_divisor": divisor,
            "holonomy": verdict,
            "surface": surface,
            "dmodule_generators": generators,
            "modular_foliation": modular_foliation_generators(&p),
        }),
        text,
    ))
}

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::NotLogSymplectic => "not log symplectic, hence not holonomic",
        Verdict::ObstructedByModularLeaves => "not holonomic: positive-dimensional family of zero-dimensional modular leaves",
        Verdict::SurfaceHolonomic => "holonomic (log symplectic surface)",
        Verdict::NoObstructionFound => "no obstruction found (not a holonomicity certificate)",
    }
}

pub fn cohomology(file: &StructureFile, k_max: usize, w_max: i64, cap: usize) -> Result<Outcome, CliError> {
    let p = file.structure()?;
    let table = cohomology_table_with_cap(&p, k_max, w_max, cap)?;
    let mut result = json!(table);
    let text = table.to_text();
    result["text"] = json!(text);
    result["euler_consistent"] = json!(table.euler_consistent());
    Ok(Outcome::ok(result, text))
}

pub fn tjurina(f: &Poly, point: Option<&[Rational]>, budget: u64) -> Result<Outcome, CliError> {
    let (value, scope) = match point {
        Some(pt) => (tjurina_at(f, pt, budget)?, "local"),
        None => (tjurina_global_with_budget(f, budget)?, "global"),
    };
    let point_json = point.map(|pt| pt.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    let text = match point {
        Some(pt) => {
            let coords: Vec<String> = pt.iter().map(|q| q.to_string()).collect();
            format!("tau({f}) at ({}) = {value}\n", coords.join(", "))
        }
        None => format!("tau({f}) = {value}\n"),
    };
    Ok(Outcome::ok(
        json!({
            "f": f,
            "variables": f.chart().names(),
            "scope": scope,
            "point": point_json,
            "tjurina": value,
        }),
        text,
    ))
}

pub fn identities(seed: u64, cases: usize) -> Result<Outcome, CliError> {
    let report = run_suite(seed, cases)?;
    let mut text = String::new();
    for o in &report.outcomes {
        let _ = writeln!(
            text,
            "n={} {:<60} {}/{} {}",
            o.chart_dim,
            o.formula,
            o.cases - o.failures,
            o.cases,
            if o.failures == 0 { "ok" } else { "FAILED" }
        );
    }
    let failed = !report.all_hold();
    let mut result = json!(report);
    result["all_hold"] = json!(!failed);
    Ok(Outcome { result, text, precondition_failed: failed })
}
