//! Text renderings of circuits and reports.

use serde_json::{json, Value};
use triprep::analysis::{concurrence, separability_gap, Classification};
use triprep::synth::{fmt_g17, Circuit, Gate};
use triprep::Complex64;

/// OPENQASM 2.0 text; `p` becomes `u1` and the global phase is a trailing comment.
pub fn to_qasm(c: &Circuit<f64>) -> String {
    let mut out = format!(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[{}];\n",
        c.qubits
    );
    for g in &c.gates {
        let line = match *g {
            Gate::Ry { q, angle } => format!("ry({}) q[{q}];", fmt_g17(angle)),
            Gate::Rz { q, angle } => format!("rz({}) q[{q}];", fmt_g17(angle)),
            Gate::P { q, angle } => format!("u1({}) q[{q}];", fmt_g17(angle)),
            Gate::X { q } => format!("x q[{q}];"),
            Gate::Cx { control, target } => format!("cx q[{control}],q[{target}];"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str(&format!("// global_phase {}\n", fmt_g17(c.global_phase)));
    out
}

pub fn cvec(v: &[Complex64]) -> Value {
    Value::Array(v.iter().map(|z| json!([z.re, z.im])).collect())
}

/// Classification report for a three-qubit state.
pub fn classify_report(cl: &Classification<f64>, s: &[Complex64; 8]) -> Value {
    let kind = cl.kind();
    let gap = separability_gap(s);
    let (lambda, alpha, beta) = match cl {
        Classification::FullySeparable { a, bc } => {
            (vec![1.0, 0.0], vec![cvec(a)], vec![cvec(&bc.state())])
        }
        Classification::Biseparable { a, bc, .. } => {
            (vec![1.0, 0.0], vec![cvec(a)], vec![cvec(bc)])
        }
        _ => {
            let sd = cl.schmidt3().expect("entangled types carry Schmidt data");
            (
                sd.lambda.to_vec(),
                sd.alpha.iter().map(|a| cvec(a)).collect(),
                sd.beta.iter().map(|b| cvec(b)).collect(),
            )
        }
    };
    let mut margins = json!({ "abc_separability_gap": gap });
    if let Some(sd) = cl.schmidt3() {
        margins["lambda_min"] = json!(sd.lambda[1]);
        margins["lambda_gap"] = json!(sd.lambda[0] - sd.lambda[1]);
    }
    if let Classification::Biseparable { concurrence, .. } = cl {
        margins["bc_concurrence"] = json!(concurrence);
    }
    let mut out = json!({
        "type": kind.name(),
        "lambda": lambda,
        "alpha": alpha,
        "beta": beta,
        "beta_concurrences": cl.beta_concurrences().map(|c| c.to_vec()),
        "raw_margins": margins,
    });
    match cl {
        Classification::Ss { orthogonal, .. } => {
            out["orthogonal_side"] = json!(format!("{orthogonal:?}"))
        }
        Classification::Se { separable, .. } => out["separable_index"] = json!(separable),
        _ => {}
    }
    out
}

/// Report for a two-qubit input.
pub fn classify_report2(d: &[Complex64; 4], tau: [f64; 2], zero: f64) -> Value {
    let conc = concurrence(d);
    json!({
        "type": if tau[1] > zero { "Entangled" } else { "Product" },
        "tau": tau.to_vec(),
        "concurrence": conc,
    })
}

/// Indented JSON that keeps arrays of scalars and `[re, im]` pairs on one line.
pub fn render(v: &Value, indent: usize, out: &mut String) {
    let flat = |v: &Value| match v {
        Value::Array(xs) => xs.iter().all(|x| {
            !x.is_object()
                && !x
                    .as_array()
                    .is_some_and(|a| a.iter().any(|y| y.is_array() || y.is_object()))
        }),
        Value::Object(m) => indent > 0 && m.values().all(|x| !x.is_array() && !x.is_object()),
        _ => true,
    };
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(m) if !m.is_empty() && !flat(v) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(k.clone())));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        Value::Array(xs) if !flat(v) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                render(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) if !m.is_empty() => {
            let parts: Vec<String> = m
                .iter()
                .map(|(k, x)| format!("{}: {x}", Value::String(k.clone())))
                .collect();
            out.push_str(&format!("{{{}}}", parts.join(", ")));
        }
        _ => out.push_str(&serde_json::to_string(v).expect("values are serializable")),
    }
}
