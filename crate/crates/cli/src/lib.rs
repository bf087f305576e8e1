//! Command-line front end for `poisson-kit`: structure files, commands and the JSON
//! report envelope.

pub mod commands;
pub mod structure;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

/// The sign system used by every computation, echoed in each report.
pub fn conventions() -> Value {
    json!({
        "polyvectors": "odd variables theta_i stand for the frame vectors d/dx_i",
        "schouten": "[P,Q] = sum_i (P dR/dtheta_i) (d/dx_i Q) - (-1)^((p-1)(q-1)) (Q dR/dtheta_i) (d/dx_i P), right theta-derivatives; [X, f] = X(f)",
        "contraction": "iota_{dx_i} is the left theta-derivative",
        "bv_operator": "Delta = sum_i d/dx_i dL/dtheta_i for the covolume d/dx_1 ^ ... ^ d/dx_n; L_X mu = -(Delta X) mu",
        "hamiltonian": "H_f = iota_{df} pi, {f,g} = H_f(g), {x_i,x_j} = coefficient of d/dx_i ^ d/dx_j",
        "lichnerowicz": "d_pi = [pi, -], so d_pi f = -H_f",
        "modular_field": "zeta = Delta pi",
        "weights": "weight(x^a d/dx_I) = wdeg(x^a) - sum of weights in I",
    })
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn envelope(command: &str, input_digest: &str, result: Value, timing_ms: f64) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input_digest": input_digest,
        "conventions": conventions(),
        "result": result,
        "timing_ms": timing_ms,
    })
}
