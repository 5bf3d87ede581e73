//! General three-qubit preparation from a classification.

use crate::analysis::{classify, reconstruction_error, Classification, Side, ThreeQubitState};
use crate::error::{Error, Result};
use crate::linalg::{
    inner, kron2, mat2_dagger, mat2_from_cols, mat2_vec, normalized, perp, scale, Mat2, Vec2, Vec4,
};
use crate::scalar::{cr, lit, Real, Tolerances};

use super::circuit::{Circuit, Gate};
use super::cores::{core_ee, core_se, core_ss};
use super::local::{prep1_unchecked, prep2, zyz};
use super::simplify::simplify;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

/// Raw (unsimplified) preparation circuit for `s` following its classification.
pub fn prep3<T: Real>(
    c: &Classification<T>,
    s: &ThreeQubitState<T>,
    tol: &Tolerances<T>,
) -> Result<Circuit<T>> {
    let err = reconstruction_error(c, s);
    if err.is_nan() || err > tol.norm {
        return Err(Error::InconsistentClassification(
            err.to_f64().unwrap_or(f64::NAN),
        ));
    }
    match c {
        Classification::FullySeparable { a, bc } => {
            let mut out = Circuit::new(3);
            out.append_mapped(&prep1_unchecked(a, tol), &[A]);
            out.append_mapped(&prep1_unchecked(&bc.b, tol), &[B]);
            out.append_mapped(&prep1_unchecked(&bc.c, tol), &[C]);
            Ok(out)
        }
        Classification::Biseparable {
            a, bc, bc_schmidt, ..
        } => {
            let mut out = Circuit::new(3);
            out.append_mapped(&prep1_unchecked(a, tol), &[A]);
            out.append_mapped(&prep2(bc, bc_schmidt, tol)?, &[B, C]);
            Ok(out)
        }
        Classification::Ss {
            schmidt,
            products,
            orthogonal: Side::B,
        } => {
            let (g0, g1) = (products[0].b, products[1].b);
            let (d0, d1) = (products[0].c, products[1].c);
            let wb = mat2_from_cols(&g0, &orthonormal_partner(&g0, &g1));
            let wc = mat2_from_cols(&d0, &perp(&d0));
            let pq = mat2_vec(&mat2_dagger(&wc), &d1);
            let theta = pq[0].norm().atan2(pq[1].norm());
            let core = core_ss(theta, pq[0].arg(), pq[1].arg());
            template(schmidt.lambda, schmidt.alpha, &core, &wb, &wc, tol)
        }
        Classification::Ss {
            schmidt,
            products,
            orthogonal: Side::C,
        } => ss_c_orthogonal(schmidt.lambda, schmidt.alpha, products, tol),
        Classification::Se {
            schmidt,
            separable,
            product,
            ..
        } => {
            let (p, e) = (*separable, 1 - *separable);
            let lambda = [schmidt.lambda[p], schmidt.lambda[e]];
            let alpha = [schmidt.alpha[p], schmidt.alpha[e]];
            let wb = mat2_from_cols(&product.b, &perp(&product.b));
            let wc = mat2_from_cols(&product.c, &perp(&product.c));
            let t = coords(&wb, &wc, &schmidt.beta[e]);
            let theta0 = t[1].norm().hypot(t[3].norm()).atan2(t[2].norm());
            let theta1 = t[1].norm().atan2(t[3].norm());
            let core = core_se(theta0, theta1, t[1].arg(), t[2].arg(), t[3].arg());
            template(lambda, alpha, &core, &wb, &wc, tol)
        }
        Classification::Ee {
            schmidt,
            bc_schmidt: sd,
            ..
        } => {
            let g1 = scale(&sd.b[1], cr(-T::one()));
            let wb = mat2_from_cols(&sd.b[0], &g1);
            let wc = mat2_from_cols(&sd.c[0], &sd.c[1]);
            let theta0 = sd.tau[1].atan2(sd.tau[0]);
            let t = coords(&wb, &wc, &schmidt.beta[1]);
            let v10 = t[0] * cr(theta0.sin()) + t[3] * cr(theta0.cos());
            let theta1 = t[1].norm().hypot(t[2].norm()).atan2(v10.norm());
            let theta2 = t[1].norm().atan2(t[2].norm());
            let core = core_ee(theta0, theta1, theta2, v10.arg(), t[1].arg(), t[2].arg());
            template(schmidt.lambda, schmidt.alpha, &core, &wb, &wc, tol)
        }
    }
}

/// `classify`, `prep3` and `simplify` in sequence.
pub fn compile<T: Real>(
    s: &ThreeQubitState<T>,
    tol: &Tolerances<T>,
) -> Result<(Classification<T>, Circuit<T>)> {
    let c = classify(s, tol)?;
    let raw = prep3(&c, s, tol)?;
    Ok((c, simplify(&raw, tol)))
}

/// Unit vector completing `v0` to an orthonormal basis, keeping the phase of `v1`.
fn orthonormal_partner<T: Real>(v0: &Vec2<T>, v1: &Vec2<T>) -> Vec2<T> {
    let o = inner(v0, v1);
    let r = [v1[0] - v0[0] * o, v1[1] - v0[1] * o];
    let n = r[0].norm_sqr() + r[1].norm_sqr();
    if n > lit(0.25) {
        normalized(&r)
    } else {
        perp(v0)
    }
}

/// Coordinates of `v` in the product basis `wb[:, j] ⊗ wc[:, k]`.
fn coords<T: Real>(wb: &Mat2<T>, wc: &Mat2<T>, v: &Vec4<T>) -> Vec4<T> {
    let col = |m: &Mat2<T>, k: usize| [m[0][k], m[1][k]];
    let mut t = [cr(T::zero()); 4];
    for j in 0..2 {
        for k in 0..2 {
            t[2 * j + k] = inner(&kron2(&col(wb, j), &col(wc, k)), v);
        }
    }
    t
}

/// `Ry` on A, `CX(A→B)`, the core on (B, C), then `U_A ⊗ W_B ⊗ W_C`.
///
/// A leading phase gate of the core on B commutes to A, where the qubits are
/// still perfectly correlated.
fn template<T: Real>(
    lambda: [T; 2],
    alpha: [Vec2<T>; 2],
    core: &[Gate<T>],
    wb: &Mat2<T>,
    wc: &Mat2<T>,
    tol: &Tolerances<T>,
) -> Result<Circuit<T>> {
    let mut out = Circuit::new(3);
    out.push(Gate::Ry {
        q: A,
        angle: lit::<T>(2.0) * lambda[1].atan2(lambda[0]),
    });
    out.push(Gate::Cx {
        control: A,
        target: B,
    });
    let mut rest = core;
    if let Some(Gate::P { q: 0, angle }) = core.first() {
        out.push(Gate::P {
            q: A,
            angle: *angle,
        });
        rest = &core[1..];
    }
    out.gates.extend(rest.iter().map(|g| g.remap(&[B, C])));
    out.append_mapped(&zyz(&mat2_from_cols(&alpha[0], &alpha[1]), tol)?, &[A]);
    out.append_mapped(&zyz(wb, tol)?, &[B]);
    out.append_mapped(&zyz(wc, tol)?, &[C]);
    Ok(out)
}

/// SS state whose C-side pair is the orthogonal one: the branch qubit is copied
/// to C and B is rotated under control of C, which costs a third CNOT.
fn ss_c_orthogonal<T: Real>(
    lambda: [T; 2],
    alpha: [Vec2<T>; 2],
    products: &[crate::analysis::ProductPair<T>; 2],
    tol: &Tolerances<T>,
) -> Result<Circuit<T>> {
    let (g0, g1) = (products[0].b, products[1].b);
    let (d0, d1) = (products[0].c, products[1].c);
    let wb = mat2_from_cols(&g0, &perp(&g0));
    let wc = mat2_from_cols(&d0, &orthonormal_partner(&d0, &d1));
    let pq = mat2_vec(&mat2_dagger(&wb), &g1);
    let theta = pq[1].norm().atan2(pq[0].norm());
    let omega = pq[1].arg() - T::PI();
    let eps = pq[0].arg() - omega;
    let mut out = Circuit::new(3);
    out.push(Gate::Ry {
        q: A,
        angle: lit::<T>(2.0) * lambda[1].atan2(lambda[0]),
    })
    .push(Gate::Cx {
        control: A,
        target: B,
    })
    .push(Gate::P { q: A, angle: omega })
    .push(Gate::Cx {
        control: B,
        target: C,
    })
    .push(Gate::Rz { q: B, angle: eps })
    .push(Gate::Ry { q: B, angle: theta })
    .push(Gate::Cx {
        control: C,
        target: B,
    })
    .push(Gate::Ry {
        q: B,
        angle: -theta,
    })
    .push(Gate::Rz { q: B, angle: -eps });
    out.append_mapped(&zyz(&mat2_from_cols(&alpha[0], &alpha[1]), tol)?, &[A]);
    out.append_mapped(&zyz(&wb, tol)?, &[B]);
    out.append_mapped(&zyz(&wc, tol)?, &[C]);
    Ok(out)
}
