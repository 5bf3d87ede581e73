//! Independent reference computations used to cross-check the analysis code.

use crate::linalg::C;
use crate::scalar::Real;

/// Singular values (descending) of a 2×n matrix given by its rows, via
/// one-sided Jacobi rotations that orthogonalize the rows.
pub fn row_singular_values<T: Real>(r0: &[C<T>], r1: &[C<T>]) -> [T; 2] {
    let mut a = r0.to_vec();
    let mut b = r1.to_vec();
    for _ in 0..8 {
        let alpha = a.iter().fold(T::zero(), |s, x| s + x.norm_sqr());
        let beta = b.iter().fold(T::zero(), |s, x| s + x.norm_sqr());
        let gamma = a
            .iter()
            .zip(&b)
            .fold(C::new(T::zero(), T::zero()), |s, (x, y)| s + x.conj() * y);
        let g = gamma.norm();
        if g <= T::epsilon() * (alpha * beta).sqrt() || g == T::zero() {
            break;
        }
        let ph = gamma / C::new(g, T::zero());
        let zeta = (beta - alpha) / (g + g);
        let sign = if zeta >= T::zero() {
            T::one()
        } else {
            -T::one()
        };
        let t = sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
        let c = (T::one() + t * t).sqrt().recip();
        let s = c * t;
        for (x, y) in a.iter_mut().zip(b.iter_mut()) {
            let yt = *y * ph.conj();
            let nx = *x * c - yt * s;
            let ny = *x * s + yt * c;
            *x = nx;
            *y = ny;
        }
    }
    let na = a.iter().fold(T::zero(), |s, x| s + x.norm_sqr()).sqrt();
    let nb = b.iter().fold(T::zero(), |s, x| s + x.norm_sqr()).sqrt();
    if na >= nb {
        [na, nb]
    } else {
        [nb, na]
    }
}

/// Schmidt rank and coefficients of a three-qubit state across A|BC.
pub fn oracle_schmidt3<T: Real>(s: &[C<T>; 8], zero: T) -> (usize, [T; 2]) {
    let sv = row_singular_values(&s[..4], &s[4..]);
    (sv.iter().filter(|&&x| x > zero).count(), sv)
}

/// Schmidt coefficients of a two-qubit state.
pub fn oracle_schmidt2<T: Real>(d: &[C<T>; 4]) -> [T; 2] {
    row_singular_values(&d[..2], &d[2..])
}
