//! Peephole pass merging single-qubit runs between CNOTs.

use crate::linalg::{mat2_mul, Mat2};
use crate::scalar::{Real, Tolerances};

use super::circuit::{Circuit, Gate};
use super::local::{prep1_unchecked, zyz};

struct Run<T> {
    pending: Option<Mat2<T>>,
    /// No CNOT has touched the qubit yet, so it is still in `|0⟩` before the run.
    fresh: bool,
}

/// Merges each maximal run of single-qubit gates into at most three rotations.
///
/// Runs on a qubit no CNOT has touched act on `|0⟩` and are re-emitted as a state
/// preparation (at most `Ry`, `Rz`); other runs go through [`zyz`]. CNOTs keep
/// their order, and the output contains only `Ry`, `Rz` and CNOT gates.
pub fn simplify<T: Real>(c: &Circuit<T>, tol: &Tolerances<T>) -> Circuit<T> {
    let mut runs: Vec<Run<T>> = (0..c.qubits)
        .map(|_| Run {
            pending: None,
            fresh: true,
        })
        .collect();
    let mut out = Circuit::new(c.qubits);
    out.global_phase = c.global_phase;
    for g in &c.gates {
        match *g {
            Gate::Cx { control, target } => {
                flush(&mut out, &mut runs, control, tol);
                flush(&mut out, &mut runs, target, tol);
                runs[control].fresh = false;
                runs[target].fresh = false;
                out.push(*g);
            }
            _ => {
                let (q, _) = g.qubits();
                let m = g.matrix().expect("single-qubit gate");
                let run = &mut runs[q];
                run.pending = Some(match run.pending {
                    Some(p) => mat2_mul(&m, &p),
                    None => m,
                });
            }
        }
    }
    for q in 0..c.qubits {
        flush(&mut out, &mut runs, q, tol);
    }
    out
}

fn flush<T: Real>(out: &mut Circuit<T>, runs: &mut [Run<T>], q: usize, tol: &Tolerances<T>) {
    let Some(u) = runs[q].pending.take() else {
        return;
    };
    let sub = if runs[q].fresh {
        prep1_unchecked(&[u[0][0], u[1][0]], tol)
    } else {
        // Accumulated products of unitary gate matrices are unitary to rounding.
        let relaxed = Tolerances {
            unit: tol.unit.max(T::epsilon().sqrt()),
            ..*tol
        };
        zyz(&u, &relaxed).expect("product of unitary gates is unitary")
    };
    out.append_mapped(&sub, &[q]);
}
