//! Gate list representation, layered depth and the JSON exchange format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{pauli_x, phase, ry, rz, Mat2};
use crate::scalar::{lit, wrap_angle, Real};

/// One gate. Qubit indices count from the most significant qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate<T> {
    Ry {
        q: usize,
        angle: T,
    },
    Rz {
        q: usize,
        angle: T,
    },
    /// `diag(1, e^{iφ})`.
    P {
        q: usize,
        angle: T,
    },
    X {
        q: usize,
    },
    Cx {
        control: usize,
        target: usize,
    },
}

impl<T: Real> Gate<T> {
    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::Ry { q, .. } | Gate::Rz { q, .. } | Gate::P { q, .. } | Gate::X { q } => {
                (q, None)
            }
            Gate::Cx { control, target } => (control, Some(target)),
        }
    }

    /// 2x2 matrix of a single-qubit gate; `None` for CNOT.
    pub fn matrix(&self) -> Option<Mat2<T>> {
        match *self {
            Gate::Ry { angle, .. } => Some(ry(angle)),
            Gate::Rz { angle, .. } => Some(rz(angle)),
            Gate::P { angle, .. } => Some(phase(angle)),
            Gate::X { .. } => Some(pauli_x()),
            Gate::Cx { .. } => None,
        }
    }

    /// Same gate with every qubit index passed through `map`.
    pub fn remap(&self, map: &[usize]) -> Self {
        match *self {
            Gate::Ry { q, angle } => Gate::Ry { q: map[q], angle },
            Gate::Rz { q, angle } => Gate::Rz { q: map[q], angle },
            Gate::P { q, angle } => Gate::P { q: map[q], angle },
            Gate::X { q } => Gate::X { q: map[q] },
            Gate::Cx { control, target } => Gate::Cx {
                control: map[control],
                target: map[target],
            },
        }
    }

    pub fn is_cnot(&self) -> bool {
        matches!(self, Gate::Cx { .. })
    }
}

/// Ordered gate list acting on `|0…0⟩`, times `e^{i·global_phase}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit<T> {
    pub qubits: usize,
    pub gates: Vec<Gate<T>>,
    pub global_phase: T,
}

impl<T: Real> Circuit<T> {
    pub fn new(qubits: usize) -> Self {
        Self {
            qubits,
            gates: Vec::new(),
            global_phase: T::zero(),
        }
    }

    pub fn push(&mut self, g: Gate<T>) -> &mut Self {
        self.gates.push(g);
        self
    }

    /// Drops rotations and phase gates that act as the identity within `eps`.
    pub(crate) fn elide_zero(mut self, eps: T) -> Self {
        self.gates.retain(|g| match *g {
            Gate::Ry { angle, .. } | Gate::Rz { angle, .. } => angle.abs() >= eps,
            Gate::P { angle, .. } => wrap_angle(angle).abs() >= eps,
            _ => true,
        });
        self
    }

    pub fn add_phase(&mut self, p: T) {
        self.global_phase = wrap_angle(self.global_phase + p);
    }

    /// Appends `other` with its qubit `k` mapped to `map[k]`, adding its global phase.
    pub fn append_mapped(&mut self, other: &Circuit<T>, map: &[usize]) {
        self.gates.extend(other.gates.iter().map(|g| g.remap(map)));
        self.add_phase(other.global_phase);
    }

    pub fn cnot_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.gates.iter().filter_map(|g| match *g {
            Gate::Cx { control, target } => Some((control, target)),
            _ => None,
        })
    }

    /// Checks operand ranges and CNOT operand distinctness.
    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.qubits) {
            return Err(Error::MalformedCircuit(format!(
                "unsupported qubit count {}",
                self.qubits
            )));
        }
        if !self.global_phase.is_finite() {
            return Err(Error::MalformedCircuit("non-finite global phase".into()));
        }
        for g in &self.gates {
            let (a, b) = g.qubits();
            for q in std::iter::once(a).chain(b) {
                if q >= self.qubits {
                    return Err(Error::IndexOutOfRange {
                        index: q,
                        qubits: self.qubits,
                    });
                }
            }
            if b == Some(a) {
                return Err(Error::MalformedCircuit("cnot control equals target".into()));
            }
            let finite = match *g {
                Gate::Ry { angle, .. } | Gate::Rz { angle, .. } | Gate::P { angle, .. } => {
                    angle.is_finite()
                }
                _ => true,
            };
            if !finite {
                return Err(Error::MalformedCircuit("non-finite angle".into()));
            }
        }
        Ok(())
    }

    /// True when every CNOT acts on neighbouring qubits of the line.
    pub fn adjacency_ok(&self) -> bool {
        self.cnot_pairs().all(|(c, t)| c.abs_diff(t) == 1)
    }

    /// Greedy layered depth; a gate starts one layer after the latest busy layer of its operands.
    pub fn depth(&self) -> usize {
        let mut busy = vec![0usize; self.qubits.max(1)];
        for g in &self.gates {
            let (a, b) = g.qubits();
            let layer = 1 + b.map_or(busy[a], |b| busy[a].max(busy[b]));
            busy[a] = layer;
            if let Some(b) = b {
                busy[b] = layer;
            }
        }
        busy.into_iter().max().unwrap_or(0)
    }

    pub fn to_f64(&self) -> Circuit<f64> {
        let f = |x: T| x.to_f64().unwrap_or(f64::NAN);
        let gates = self
            .gates
            .iter()
            .map(|g| match *g {
                Gate::Ry { q, angle } => Gate::Ry { q, angle: f(angle) },
                Gate::Rz { q, angle } => Gate::Rz { q, angle: f(angle) },
                Gate::P { q, angle } => Gate::P { q, angle: f(angle) },
                Gate::X { q } => Gate::X { q },
                Gate::Cx { control, target } => Gate::Cx { control, target },
            })
            .collect();
        Circuit {
            qubits: self.qubits,
            gates,
            global_phase: f(self.global_phase),
        }
    }

    pub fn from_f64(c: &Circuit<f64>) -> Self {
        let gates = c
            .gates
            .iter()
            .map(|g| match *g {
                Gate::Ry { q, angle } => Gate::Ry {
                    q,
                    angle: lit(angle),
                },
                Gate::Rz { q, angle } => Gate::Rz {
                    q,
                    angle: lit(angle),
                },
                Gate::P { q, angle } => Gate::P {
                    q,
                    angle: lit(angle),
                },
                Gate::X { q } => Gate::X { q },
                Gate::Cx { control, target } => Gate::Cx { control, target },
            })
            .collect();
        Circuit {
            qubits: c.qubits,
            gates,
            global_phase: lit(c.global_phase),
        }
    }
}

/// Formats a float with 17 significant digits, `%.17g` style.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let e = format!("{:.16e}", x);
    let (mant, exp) = e.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let s = format!("{:.*}", (16 - exp).max(0) as usize, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let m = if mant.contains('.') {
            mant.trim_end_matches('0').trim_end_matches('.')
        } else {
            mant
        };
        format!("{m}e{exp}")
    }
}

#[derive(Serialize, Deserialize)]
struct GateRecord {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    angle: Option<f64>,
    target: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    control: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct CircuitRecord {
    qubits: usize,
    #[serde(default)]
    global_phase: f64,
    gates: Vec<GateRecord>,
}

impl Circuit<f64> {
    /// Serializes to the circuit JSON schema with 17 significant digits per angle.
    pub fn to_json(&self) -> String {
        let mut out = format!(
            "{{\n  \"qubits\": {},\n  \"global_phase\": {},\n  \"gates\": [",
            self.qubits,
            fmt_g17(self.global_phase)
        );
        for (i, g) in self.gates.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(&match *g {
                Gate::Ry { q, angle } => format!(
                    "{{\"kind\": \"ry\", \"angle\": {}, \"target\": {q}}}",
                    fmt_g17(angle)
                ),
                Gate::Rz { q, angle } => format!(
                    "{{\"kind\": \"rz\", \"angle\": {}, \"target\": {q}}}",
                    fmt_g17(angle)
                ),
                Gate::P { q, angle } => format!(
                    "{{\"kind\": \"p\", \"angle\": {}, \"target\": {q}}}",
                    fmt_g17(angle)
                ),
                Gate::X { q } => format!("{{\"kind\": \"x\", \"target\": {q}}}"),
                Gate::Cx { control, target } => {
                    format!("{{\"kind\": \"cx\", \"target\": {target}, \"control\": {control}}}")
                }
            });
        }
        if !self.gates.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    /// Parses and validates the circuit JSON schema.
    pub fn from_json(text: &str) -> Result<Self> {
        let rec: CircuitRecord =
            serde_json::from_str(text).map_err(|e| Error::MalformedCircuit(e.to_string()))?;
        let mut c = Circuit::new(rec.qubits);
        c.global_phase = rec.global_phase;
        for g in rec.gates {
            let angle = || {
                g.angle.ok_or_else(|| {
                    Error::MalformedCircuit(format!("{} gate without angle", g.kind))
                })
            };
            let q = g.target;
            let gate = match g.kind.as_str() {
                "ry" => Gate::Ry { q, angle: angle()? },
                "rz" => Gate::Rz { q, angle: angle()? },
                "p" => Gate::P { q, angle: angle()? },
                "x" => Gate::X { q },
                "cx" => Gate::Cx {
                    control: g
                        .control
                        .ok_or_else(|| Error::MalformedCircuit("cx gate without control".into()))?,
                    target: q,
                },
                k => return Err(Error::MalformedCircuit(format!("unknown gate kind `{k}`"))),
            };
            c.gates.push(gate);
        }
        c.validate()?;
        Ok(c)
    }
}
