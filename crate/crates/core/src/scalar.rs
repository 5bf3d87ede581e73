//! Scalar abstraction and numerical tolerances.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar usable by every routine in the crate (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

#[inline]
pub(crate) fn cz<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

#[inline]
pub(crate) fn c1<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

#[inline]
pub(crate) fn cr<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// `e^{iθ}`.
#[inline]
pub fn cis<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle<T: Real>(x: T) -> T {
    let two_pi = T::PI() + T::PI();
    let mut y = x % two_pi;
    if y > T::PI() {
        y = y - two_pi;
    } else if y <= -T::PI() {
        y = y + two_pi;
    }
    y
}

/// Thresholds shared by analysis, synthesis and verification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances<T> {
    /// Magnitudes at or below this count as zero.
    pub zero: T,
    /// Allowed deviation of a squared norm from one.
    pub norm: T,
    /// Allowed deviation in unitarity and hermiticity checks.
    pub unit: T,
    /// Eigenvalue gap below which a spectrum is treated as degenerate.
    pub degen: T,
    /// Rotation angles below this are dropped.
    pub angle: T,
    /// Cauchy-Schwarz gap for the A|BC product test.
    pub sep: T,
}

impl<T: Real> Tolerances<T> {
    /// Defaults scaled to the machine epsilon of `T`.
    pub fn standard() -> Self {
        if T::epsilon() < lit(1e-10) {
            Self {
                zero: lit(1e-10),
                norm: lit(1e-9),
                unit: lit(1e-9),
                degen: lit(1e-9),
                angle: lit(1e-12),
                sep: lit(1e-10),
            }
        } else {
            Self {
                zero: lit(1e-4),
                norm: lit(1e-4),
                unit: lit(1e-4),
                degen: lit(1e-4),
                angle: lit(1e-6),
                sep: lit(1e-4),
            }
        }
    }

    /// Same tolerances with a different zero threshold; `sep` follows it.
    pub fn with_zero(mut self, zero: T) -> Self {
        self.zero = zero;
        self.sep = zero;
        self
    }
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self::standard()
    }
}
