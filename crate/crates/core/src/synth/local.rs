//! Single-qubit decompositions and the one- and two-qubit preparation blocks.

use crate::analysis::{concurrence, schmidt2_state, SchmidtData2, TwoQubitState};
use crate::error::{Error, Result};
use crate::linalg::{
    inner, is_unitary2, mat2_from_cols, mat2_identity, mat2_mul, mat2_vec, max_abs_diff, norm_sq,
    polar, Mat2, Vec2, C,
};
use crate::scalar::{cis, lit, wrap_angle, Real, Tolerances};

use super::circuit::{Circuit, Gate};

/// Product of single-qubit gates applied left to right.
pub fn compose<T: Real>(gates: &[Gate<T>]) -> Mat2<T> {
    gates
        .iter()
        .filter_map(|g| g.matrix())
        .fold(mat2_identity(), |acc, m| mat2_mul(&m, &acc))
}

fn angle_gates<T: Real>(seq: &[(bool, T)], q: usize, tol: T) -> Vec<Gate<T>> {
    seq.iter()
        .map(|&(is_y, a)| (is_y, wrap_angle(a)))
        .filter(|&(_, a)| a.abs() >= tol)
        .map(|(is_y, angle)| {
            if is_y {
                Gate::Ry { q, angle }
            } else {
                Gate::Rz { q, angle }
            }
        })
        .collect()
}

/// Phase `g` with `e^{ig}·m ≈ u` in the least-squares sense.
fn phase_between<T: Real>(m: &Mat2<T>, u: &Mat2<T>) -> T {
    let mut acc = C::new(T::zero(), T::zero());
    for i in 0..2 {
        for j in 0..2 {
            acc = acc + m[i][j].conj() * u[i][j];
        }
    }
    polar(acc).1
}

fn fewest<T: Real>(cands: Vec<Vec<Gate<T>>>) -> Vec<Gate<T>> {
    cands
        .into_iter()
        .min_by_key(|c| c.len())
        .unwrap_or_default()
}

/// Euler decomposition `U = e^{ig} Rz(φ2) Ry(θ) Rz(φ1)`, gates listed in application order.
///
/// Among equivalent forms (the sign-flipped `(φ1+π, -θ, φ2-π)` variant included)
/// the one with the fewest surviving rotations is returned.
pub fn zyz<T: Real>(u: &Mat2<T>, tol: &Tolerances<T>) -> Result<Circuit<T>> {
    if !is_unitary2(u, tol.unit) {
        return Err(Error::NonUnitaryInput);
    }
    let (ma, pa) = polar(u[0][0]);
    let (_, pb) = polar(u[0][1]);
    let (mc, pc) = polar(u[1][0]);
    let (_, pd) = polar(u[1][1]);
    let pi = T::PI();
    let cands = if ma <= tol.zero {
        vec![angle_gates(
            &[(true, pi), (false, pc - pb + pi)],
            0,
            tol.angle,
        )]
    } else {
        let theta = lit::<T>(2.0) * mc.atan2(ma);
        if theta < tol.angle {
            vec![angle_gates(&[(false, pd - pa)], 0, tol.angle)]
        } else {
            let (f1, f2) = (pd - pc, pc - pa);
            vec![
                angle_gates(&[(false, f1), (true, theta), (false, f2)], 0, tol.angle),
                angle_gates(
                    &[(false, f1 + pi), (true, -theta), (false, f2 - pi)],
                    0,
                    tol.angle,
                ),
            ]
        }
    };
    let gates = fewest(cands);
    let g = phase_between(&compose(&gates), u);
    Ok(Circuit {
        qubits: 1,
        gates,
        global_phase: g,
    })
}

/// Prepares a single-qubit state from `|0⟩` with `Ry` then `Rz`.
pub fn prep1<T: Real>(t: &Vec2<T>, tol: &Tolerances<T>) -> Result<Circuit<T>> {
    let n = norm_sq(t);
    if (n - T::one()).abs() > tol.norm {
        return Err(Error::NotNormalized {
            norm_sq: n.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(prep1_unchecked(t, tol))
}

/// [`prep1`] without the normalization check; the output phase matches `t` up to its norm.
pub(crate) fn prep1_unchecked<T: Real>(t: &Vec2<T>, tol: &Tolerances<T>) -> Circuit<T> {
    let (ma, pa) = polar(t[0]);
    let (mb, pb) = polar(t[1]);
    let pi = T::PI();
    let theta = lit::<T>(2.0) * mb.atan2(ma);
    let gates = if theta < tol.angle {
        Vec::new()
    } else if pi - theta < tol.angle {
        angle_gates(&[(true, pi)], 0, tol.angle)
    } else {
        let rel = pb - pa;
        fewest(vec![
            angle_gates(&[(true, theta), (false, rel)], 0, tol.angle),
            angle_gates(&[(true, -theta), (false, rel - pi)], 0, tol.angle),
        ])
    };
    let out = mat2_vec(
        &compose(&gates),
        &[C::new(T::one(), T::zero()), C::new(T::zero(), T::zero())],
    );
    let g = polar(inner(&out, t)).1;
    Circuit {
        qubits: 1,
        gates,
        global_phase: g,
    }
}

/// Prepares an entangled two-qubit state (qubit 0 = B, qubit 1 = C) with one CNOT.
pub fn prep2<T: Real>(
    t: &TwoQubitState<T>,
    sd: &SchmidtData2<T>,
    tol: &Tolerances<T>,
) -> Result<Circuit<T>> {
    if concurrence(t) <= tol.zero {
        return Err(Error::SeparableInput);
    }
    if max_abs_diff(&schmidt2_state(sd), t) > tol.norm {
        return Err(Error::InconsistentClassification(
            max_abs_diff(&schmidt2_state(sd), t)
                .to_f64()
                .unwrap_or(f64::NAN),
        ));
    }
    let mut c = Circuit::new(2);
    let theta = lit::<T>(2.0) * sd.tau[1].atan2(sd.tau[0]);
    if theta.abs() >= tol.angle {
        c.push(Gate::Ry { q: 0, angle: theta });
    }
    c.push(Gate::Cx {
        control: 0,
        target: 1,
    });
    let (vb, vc) = redistribute(
        mat2_from_cols(&sd.b[0], &sd.b[1]),
        mat2_from_cols(&sd.c[0], &sd.c[1]),
    );
    c.append_mapped(&zyz(&vb, tol)?, &[0]);
    c.append_mapped(&zyz(&vc, tol)?, &[1]);
    Ok(c)
}

/// Moves the phase of the second column from `vb` to `vc`, which leaves
/// `vb ⊗ vc` unchanged on the span of `|00⟩, |11⟩` and removes one rotation of `vb`.
pub(crate) fn redistribute<T: Real>(vb: Mat2<T>, vc: Mat2<T>) -> (Mat2<T>, Mat2<T>) {
    let (_, pc) = polar(vb[1][0]);
    let (_, pd) = polar(vb[1][1]);
    let y = pc - pd;
    let e = cis(y);
    let mut vb2 = vb;
    let mut vc2 = vc;
    vb2[0][1] = vb[0][1] * e;
    vb2[1][1] = vb[1][1] * e;
    vc2[0][1] = vc[0][1] * e.conj();
    vc2[1][1] = vc[1][1] * e.conj();
    (vb2, vc2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::schmidt2;
    use crate::linalg::{hadamard, mat2_max_abs_diff, mat2_scale, pauli_x};
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn tol() -> Tolerances<f64> {
        Tolerances::standard()
    }

    fn recompose(c: &Circuit<f64>) -> Mat2<f64> {
        mat2_scale(&compose(&c.gates), cis(c.global_phase))
    }

    #[test]
    fn zyz_identity_is_empty() {
        let c = zyz(&mat2_identity(), &tol()).unwrap();
        assert!(c.gates.is_empty());
        assert_eq!(c.global_phase, 0.0);
    }

    #[test]
    fn zyz_pauli_x_uses_two_rotations() {
        let c = zyz(&pauli_x(), &tol()).unwrap();
        assert_eq!(c.gates.len(), 2);
        assert!(matches!(c.gates[0], Gate::Ry { angle, .. } if (angle - PI).abs() < 1e-15));
        assert!(mat2_max_abs_diff(&recompose(&c), &pauli_x()) < 1e-15);
    }

    #[test]
    fn zyz_hadamard_recomposes() {
        let c = zyz(&hadamard(), &tol()).unwrap();
        assert!(c.gates.len() <= 3);
        assert!(mat2_max_abs_diff(&recompose(&c), &hadamard()) < 1e-12);
    }

    #[test]
    fn zyz_negative_ry_stays_single() {
        let u = crate::linalg::ry(-0.7);
        let c = zyz(&u, &tol()).unwrap();
        assert_eq!(c.gates, vec![Gate::Ry { q: 0, angle: -0.7 }]);
    }

    #[test]
    fn zyz_rejects_non_unitary() {
        let m = [
            [C::new(1.0, 0.0), C::new(1.0, 0.0)],
            [C::new(0.0, 0.0), C::new(1.0, 0.0)],
        ];
        assert_eq!(zyz(&m, &tol()).unwrap_err(), Error::NonUnitaryInput);
    }

    fn prep_out(c: &Circuit<f64>) -> Vec2<f64> {
        let v = mat2_vec(&compose(&c.gates), &[C::new(1.0, 0.0), C::new(0.0, 0.0)]);
        [v[0] * cis(c.global_phase), v[1] * cis(c.global_phase)]
    }

    #[test]
    fn prep1_examples() {
        let zero = [C::new(1.0, 0.0), C::new(0.0, 0.0)];
        assert!(prep1(&zero, &tol()).unwrap().gates.is_empty());
        let plus = [C::new(FRAC_1_SQRT_2, 0.0), C::new(FRAC_1_SQRT_2, 0.0)];
        let c = prep1(&plus, &tol()).unwrap();
        assert_eq!(c.gates.len(), 1);
        assert!(
            (c.gates[0]
                == Gate::Ry {
                    q: 0,
                    angle: PI / 2.0
                })
                || matches!(c.gates[0], Gate::Ry { angle, .. } if (angle - PI / 2.0).abs() < 1e-15)
        );
        let plus_i = [C::new(FRAC_1_SQRT_2, 0.0), C::new(0.0, FRAC_1_SQRT_2)];
        let c = prep1(&plus_i, &tol()).unwrap();
        assert_eq!(c.gates.len(), 2);
        assert!(matches!(c.gates[1], Gate::Rz { angle, .. } if (angle - PI / 2.0).abs() < 1e-15));
        assert!(max_abs_diff(&prep_out(&c), &plus_i) < 1e-15);
        let minus = [C::new(FRAC_1_SQRT_2, 0.0), C::new(-FRAC_1_SQRT_2, 0.0)];
        let c = prep1(&minus, &tol()).unwrap();
        assert_eq!(c.gates.len(), 1);
        assert!(max_abs_diff(&prep_out(&c), &minus) < 1e-15);
        assert!(prep1(&[C::new(1.0, 0.0), C::new(1.0, 0.0)], &tol()).is_err());
    }

    #[test]
    fn prep2_bell_is_ry_and_cnot() {
        let s = FRAC_1_SQRT_2;
        let bell = [
            C::new(s, 0.0),
            C::new(0.0, 0.0),
            C::new(0.0, 0.0),
            C::new(s, 0.0),
        ];
        let sd = schmidt2(&bell, &tol()).unwrap();
        let c = prep2(&bell, &sd, &tol()).unwrap();
        assert_eq!(c.gates.len(), 2);
        assert!(matches!(c.gates[0], Gate::Ry { q: 0, angle } if (angle - PI / 2.0).abs() < 1e-15));
        assert_eq!(
            c.gates[1],
            Gate::Cx {
                control: 0,
                target: 1
            }
        );
    }

    #[test]
    fn prep2_rejects_product() {
        let d = [
            C::new(1.0, 0.0),
            C::new(0.0, 0.0),
            C::new(0.0, 0.0),
            C::new(0.0, 0.0),
        ];
        let sd = SchmidtData2 {
            tau: [1.0, 0.0],
            b: [crate::linalg::basis2(0), crate::linalg::basis2(1)],
            c: [crate::linalg::basis2(0), crate::linalg::basis2(1)],
            used_fallback: false,
        };
        assert_eq!(prep2(&d, &sd, &tol()).unwrap_err(), Error::SeparableInput);
    }
}
