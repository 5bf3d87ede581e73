//! Statevector simulation, fidelity and resource metrics.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{apply_cnot, apply_gate_matrix, inner, C};
use crate::scalar::{cis, Real};
use crate::synth::{Circuit, Gate};

/// Applies `gates` left to right to `state`.
pub fn apply_gates<T: Real>(gates: &[Gate<T>], state: &[C<T>]) -> Result<Vec<C<T>>> {
    let mut s = state.to_vec();
    for g in gates {
        s = match *g {
            Gate::Cx { control, target } => apply_cnot(control, target, &s)?,
            _ => {
                let (q, _) = g.qubits();
                apply_gate_matrix(&g.matrix().expect("single-qubit gate"), q, &s)?
            }
        };
    }
    Ok(s)
}

/// Output of the circuit on `|0…0⟩`, including the global phase.
pub fn simulate<T: Real>(c: &Circuit<T>) -> Result<Vec<C<T>>> {
    c.validate()?;
    let mut s = vec![C::new(T::zero(), T::zero()); 1 << c.qubits];
    s[0] = C::new(T::one(), T::zero());
    let ph = cis(c.global_phase);
    Ok(apply_gates(&c.gates, &s)?
        .into_iter()
        .map(|x| x * ph)
        .collect())
}

/// `|⟨a|b⟩|²`.
pub fn fidelity<T: Real>(a: &[C<T>], b: &[C<T>]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(inner(a, b).norm_sqr().min(T::one()))
}

/// Gate counts, layered depth and CNOT adjacency of a circuit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SynthReport {
    pub n_ry: usize,
    /// Includes phase gates, each counted as one `Rz`.
    pub n_rz: usize,
    pub n_cnot: usize,
    pub n_other: usize,
    pub depth: usize,
    pub adjacency_ok: bool,
}

impl SynthReport {
    pub fn total(&self) -> usize {
        self.n_ry + self.n_rz + self.n_cnot + self.n_other
    }
}

pub fn metrics<T: Real>(c: &Circuit<T>) -> SynthReport {
    let mut r = SynthReport {
        depth: c.depth(),
        adjacency_ok: c.adjacency_ok(),
        ..Default::default()
    };
    for g in &c.gates {
        match g {
            Gate::Ry { .. } => r.n_ry += 1,
            Gate::Rz { .. } | Gate::P { .. } => r.n_rz += 1,
            Gate::Cx { .. } => r.n_cnot += 1,
            Gate::X { .. } => r.n_other += 1,
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn ghz_circuit() -> Circuit<f64> {
        let mut c = Circuit::new(3);
        c.push(Gate::Ry {
            q: 0,
            angle: PI / 2.0,
        })
        .push(Gate::Cx {
            control: 0,
            target: 1,
        })
        .push(Gate::Cx {
            control: 1,
            target: 2,
        });
        c
    }

    #[test]
    fn empty_circuit_gives_ground_state() {
        let s = simulate(&Circuit::<f64>::new(3)).unwrap();
        assert_eq!(s[0], C::new(1.0, 0.0));
        assert!(s[1..].iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn ghz_by_hand() {
        let s = simulate(&ghz_circuit()).unwrap();
        for (j, x) in s.iter().enumerate() {
            let want = if j == 0 || j == 7 { FRAC_1_SQRT_2 } else { 0.0 };
            assert!((x - C::new(want, 0.0)).norm() < 1e-15, "index {j}");
        }
    }

    #[test]
    fn fidelity_examples() {
        let g = simulate(&ghz_circuit()).unwrap();
        assert!((fidelity(&g, &g).unwrap() - 1.0).abs() < 1e-15);
        let rotated: Vec<_> = g.iter().map(|x| x * cis(0.73)).collect();
        assert!((fidelity(&g, &rotated).unwrap() - 1.0).abs() < 1e-15);
        let mut a = vec![C::new(0.0, 0.0); 8];
        let mut b = a.clone();
        a[0] = C::new(1.0, 0.0);
        b[7] = C::new(1.0, 0.0);
        assert_eq!(fidelity(&a, &b).unwrap(), 0.0);
        assert!(matches!(
            fidelity(&a, &b[..4]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn metrics_of_ghz_and_empty() {
        let r = metrics(&ghz_circuit());
        assert_eq!((r.n_ry, r.n_rz, r.n_cnot, r.depth), (1, 0, 2, 3));
        assert!(r.adjacency_ok);
        assert_eq!(
            metrics(&Circuit::<f64>::new(3)),
            SynthReport {
                adjacency_ok: true,
                ..Default::default()
            }
        );
    }

    #[test]
    fn malformed_circuit_is_rejected() {
        let mut c = Circuit::<f64>::new(2);
        c.push(Gate::X { q: 2 });
        assert!(simulate(&c).is_err());
    }
}
