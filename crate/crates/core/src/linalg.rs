//! Fixed-size complex linear algebra for one, two and three qubits.
//!
//! Amplitude index `j` of an `n`-qubit vector encodes the bits of the qubits
//! with qubit 0 (A) as the most significant bit.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{c1, cr, cz, lit, Real, Tolerances};

pub type C<T> = Complex<T>;
pub type Vec2<T> = [C<T>; 2];
pub type Vec4<T> = [C<T>; 4];
pub type Vec8<T> = [C<T>; 8];
/// Row-major 2x2 matrix.
pub type Mat2<T> = [[C<T>; 2]; 2];
/// Row-major 4x4 matrix.
pub type Mat4<T> = [[C<T>; 4]; 4];

/// Magnitude and argument in `(-π, π]`, with `Arg(0) = 0`.
pub fn polar<T: Real>(z: C<T>) -> (T, T) {
    let r = z.norm();
    if r == T::zero() {
        (T::zero(), T::zero())
    } else {
        (r, z.arg())
    }
}

pub fn inner<T: Real>(a: &[C<T>], b: &[C<T>]) -> C<T> {
    a.iter().zip(b).fold(cz(), |acc, (x, y)| acc + x.conj() * y)
}

pub fn norm_sq<T: Real>(a: &[C<T>]) -> T {
    a.iter().fold(T::zero(), |acc, x| acc + x.norm_sqr())
}

pub fn norm<T: Real>(a: &[C<T>]) -> T {
    norm_sq(a).sqrt()
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff<T: Real>(a: &[C<T>], b: &[C<T>]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |m, (x, y)| m.max((x - y).norm()))
}

pub fn scale<T: Real, const N: usize>(v: &[C<T>; N], s: C<T>) -> [C<T>; N] {
    let mut out = *v;
    out.iter_mut().for_each(|x| *x = *x * s);
    out
}

/// Divides by the Euclidean norm; the zero vector is returned unchanged.
pub fn normalized<T: Real, const N: usize>(v: &[C<T>; N]) -> [C<T>; N] {
    let n = norm(v);
    if n == T::zero() {
        *v
    } else {
        scale(v, cr(n.recip()))
    }
}

pub fn kron2<T: Real>(a: &Vec2<T>, b: &Vec2<T>) -> Vec4<T> {
    [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
}

pub fn kron24<T: Real>(a: &Vec2<T>, b: &Vec4<T>) -> Vec8<T> {
    let mut out = [cz(); 8];
    for i in 0..2 {
        for j in 0..4 {
            out[4 * i + j] = a[i] * b[j];
        }
    }
    out
}

/// The unit vector orthogonal to `v` obtained as `(-v1*, v0*)`.
pub fn perp<T: Real>(v: &Vec2<T>) -> Vec2<T> {
    [-v[1].conj(), v[0].conj()]
}

pub fn basis2<T: Real>(k: usize) -> Vec2<T> {
    let mut v = [cz(); 2];
    v[k] = c1();
    v
}

pub fn mat2_identity<T: Real>() -> Mat2<T> {
    [[c1(), cz()], [cz(), c1()]]
}

pub fn mat2_mul<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> Mat2<T> {
    let mut out = [[cz(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat2_vec<T: Real>(a: &Mat2<T>, v: &Vec2<T>) -> Vec2<T> {
    [
        a[0][0] * v[0] + a[0][1] * v[1],
        a[1][0] * v[0] + a[1][1] * v[1],
    ]
}

pub fn mat2_dagger<T: Real>(a: &Mat2<T>) -> Mat2<T> {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

/// Matrix whose columns are `c0` and `c1`.
pub fn mat2_from_cols<T: Real>(c0: &Vec2<T>, c1: &Vec2<T>) -> Mat2<T> {
    [[c0[0], c1[0]], [c0[1], c1[1]]]
}

pub fn mat2_scale<T: Real>(a: &Mat2<T>, s: C<T>) -> Mat2<T> {
    [[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]]
}

pub fn mat2_max_abs_diff<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> T {
    max_abs_diff(
        &[a[0][0], a[0][1], a[1][0], a[1][1]],
        &[b[0][0], b[0][1], b[1][0], b[1][1]],
    )
}

pub fn is_unitary2<T: Real>(u: &Mat2<T>, tol: T) -> bool {
    let p = mat2_mul(&mat2_dagger(u), u);
    mat2_max_abs_diff(&p, &mat2_identity()) <= tol
}

pub fn mat4_identity<T: Real>() -> Mat4<T> {
    let mut m = [[cz(); 4]; 4];
    (0..4).for_each(|i| m[i][i] = c1());
    m
}

pub fn mat4_mul<T: Real>(a: &Mat4<T>, b: &Mat4<T>) -> Mat4<T> {
    let mut out = [[cz(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).fold(cz(), |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    out
}

pub fn mat4_vec<T: Real>(a: &Mat4<T>, v: &Vec4<T>) -> Vec4<T> {
    let mut out = [cz(); 4];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..4).fold(cz(), |acc, k| acc + a[i][k] * v[k]);
    }
    out
}

pub fn kron_mat2<T: Real>(a: &Mat2<T>, b: &Mat2<T>) -> Mat4<T> {
    let mut out = [[cz(); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
        }
    }
    out
}

/// `Ry(θ) = [[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]]`.
pub fn ry<T: Real>(theta: T) -> Mat2<T> {
    let h = theta / lit(2.0);
    let (s, c) = h.sin_cos();
    [[cr(c), cr(-s)], [cr(s), cr(c)]]
}

/// `Rz(θ) = diag(e^{-iθ/2}, e^{iθ/2})`.
pub fn rz<T: Real>(theta: T) -> Mat2<T> {
    let h = theta / lit(2.0);
    [
        [C::new(h.cos(), -h.sin()), cz()],
        [cz(), C::new(h.cos(), h.sin())],
    ]
}

/// `P(φ) = diag(1, e^{iφ})`.
pub fn phase<T: Real>(phi: T) -> Mat2<T> {
    [[c1(), cz()], [cz(), C::new(phi.cos(), phi.sin())]]
}

pub fn pauli_x<T: Real>() -> Mat2<T> {
    [[cz(), c1()], [c1(), cz()]]
}

pub fn hadamard<T: Real>() -> Mat2<T> {
    let s = cr(T::FRAC_1_SQRT_2());
    [[s, s], [s, -s]]
}

/// Result of [`hermitian_eig2`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eig2<T> {
    /// Descending.
    pub values: [T; 2],
    pub vectors: [Vec2<T>; 2],
    /// True when the gap fell below the degeneracy threshold.
    pub degenerate: bool,
}

fn fix_phase<T: Real>(v: Vec2<T>, zero: T) -> Vec2<T> {
    let pivot = if v[0].norm() > zero { v[0] } else { v[1] };
    let r = pivot.norm();
    if r == T::zero() {
        return v;
    }
    scale(&v, pivot.conj() / cr(r))
}

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
pub fn hermitian_eig2<T: Real>(m: &Mat2<T>, tol: &Tolerances<T>) -> Result<Eig2<T>> {
    if (m[0][1] - m[1][0].conj()).norm() > tol.unit
        || m[0][0].im.abs() > tol.unit
        || m[1][1].im.abs() > tol.unit
    {
        return Err(Error::NonHermitianInput);
    }
    let two = lit::<T>(2.0);
    let (a, d) = (m[0][0].re, m[1][1].re);
    let b = (m[0][1] + m[1][0].conj()) / cr(two);
    let mean = (a + d) / two;
    let half = (a - d) / two;
    let r = half.hypot(b.norm());
    let values = [mean + r, mean - r];
    if r + r < tol.degen {
        return Ok(Eig2 {
            values,
            vectors: [basis2(0), basis2(1)],
            degenerate: true,
        });
    }
    // Choose the row of (M - λ0 I) with the larger pivot.
    let v0 = if half >= T::zero() {
        [cr(half + r), b.conj()]
    } else {
        [b, cr(r - half)]
    };
    let v0 = normalized(&v0);
    let v1 = perp(&v0);
    Ok(Eig2 {
        values,
        vectors: [fix_phase(v0, tol.zero), fix_phase(v1, tol.zero)],
        degenerate: false,
    })
}

fn check_target(target: usize, len: usize) -> Result<usize> {
    let qubits = match len {
        2 => 1,
        4 => 2,
        8 => 3,
        _ => return Err(Error::MalformedCircuit(format!("state length {len}"))),
    };
    if target >= qubits {
        return Err(Error::IndexOutOfRange {
            index: target,
            qubits,
        });
    }
    Ok(qubits)
}

/// Applies `u` to qubit `target` of a 1-, 2- or 3-qubit state.
pub fn apply_gate_matrix<T: Real>(u: &Mat2<T>, target: usize, state: &[C<T>]) -> Result<Vec<C<T>>> {
    let n = check_target(target, state.len())?;
    let bit = 1usize << (n - 1 - target);
    let mut out = state.to_vec();
    for j in (0..state.len()).filter(|j| j & bit == 0) {
        let (x0, x1) = (state[j], state[j | bit]);
        out[j] = u[0][0] * x0 + u[0][1] * x1;
        out[j | bit] = u[1][0] * x0 + u[1][1] * x1;
    }
    Ok(out)
}

/// Applies a CNOT with the given control and target qubits.
pub fn apply_cnot<T: Real>(control: usize, target: usize, state: &[C<T>]) -> Result<Vec<C<T>>> {
    let n = check_target(target, state.len())?;
    check_target(control, state.len())?;
    if control == target {
        return Err(Error::MalformedCircuit("cnot control equals target".into()));
    }
    let cb = 1usize << (n - 1 - control);
    let tb = 1usize << (n - 1 - target);
    let mut out = state.to_vec();
    for j in (0..state.len()).filter(|j| j & cb != 0 && j & tb == 0) {
        out.swap(j, j | tb);
    }
    Ok(out)
}
