//! Fast paths for the four restricted-support classes.

use crate::error::{Error, Result};
use crate::scalar::{Real, Tolerances};

use super::circuit::{Circuit, Gate};

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

fn check<T: Real>(r: &[T], phi: &[T], tol: &Tolerances<T>) -> Result<()> {
    if r.iter().chain(phi).any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameters("non-finite parameter".into()));
    }
    if let Some(j) = r.iter().position(|&x| x <= tol.zero) {
        return Err(Error::InvalidParameters(format!("r{j} must be positive")));
    }
    let n = r.iter().fold(T::zero(), |acc, &x| acc + x * x);
    if (n - T::one()).abs() > tol.norm {
        return Err(Error::InvalidParameters(format!(
            "squared weights sum to {n}, expected 1"
        )));
    }
    Ok(())
}

fn two<T: Real>() -> T {
    T::one() + T::one()
}

/// `r0 e^{iφ0}|000⟩ + r1 e^{iφ1}|111⟩`.
pub fn synth_r1<T: Real>(r: [T; 2], phi: [T; 2], tol: &Tolerances<T>) -> Result<Circuit<T>> {
    check(&r, &phi, tol)?;
    let mut c = Circuit::new(3);
    c.push(Gate::Ry {
        q: A,
        angle: two::<T>() * r[1].atan2(r[0]),
    })
    .push(Gate::Cx {
        control: A,
        target: B,
    })
    .push(Gate::P {
        q: A,
        angle: phi[1] - phi[0],
    })
    .push(Gate::Cx {
        control: B,
        target: C,
    });
    c.add_phase(phi[0]);
    Ok(c.elide_zero(tol.angle))
}

/// `r0 e^{iφ0}|000⟩ + r1 e^{iφ1}|110⟩ + r2 e^{iφ2}|111⟩`.
pub fn synth_r2<T: Real>(r: [T; 3], phi: [T; 3], tol: &Tolerances<T>) -> Result<Circuit<T>> {
    check(&r, &phi, tol)?;
    let s = r[1].hypot(r[2]);
    let theta0 = two::<T>() * s.atan2(r[0]);
    let theta1 = r[1].atan2(r[2]);
    let mut c = Circuit::new(3);
    c.push(Gate::Ry {
        q: A,
        angle: theta0,
    })
    .push(Gate::Ry {
        q: C,
        angle: theta1,
    })
    .push(Gate::Cx {
        control: A,
        target: B,
    })
    .push(Gate::Cx {
        control: B,
        target: C,
    })
    .push(Gate::Ry {
        q: C,
        angle: -theta1,
    })
    .push(Gate::P {
        q: A,
        angle: phi[1] - phi[0],
    })
    .push(Gate::P {
        q: C,
        angle: phi[2] - phi[1],
    });
    c.add_phase(phi[0]);
    Ok(c.elide_zero(tol.angle))
}

/// `r0 e^{iφ0}|001⟩ + r1 e^{iφ1}|010⟩ + r2 e^{iφ2}|100⟩`.
pub fn synth_r3<T: Real>(r: [T; 3], phi: [T; 3], tol: &Tolerances<T>) -> Result<Circuit<T>> {
    check(&r, &phi, tol)?;
    let pi = T::PI();
    let s = r[0].hypot(r[1]);
    let theta0 = two::<T>() * s.atan2(r[2]);
    let theta1 = -T::FRAC_PI_2() - r[0].atan2(r[1]);
    let mut c = Circuit::new(3);
    c.push(Gate::Ry {
        q: A,
        angle: theta0,
    })
    .push(Gate::Ry {
        q: C,
        angle: theta1,
    })
    .push(Gate::Cx {
        control: A,
        target: B,
    })
    .push(Gate::Cx {
        control: B,
        target: C,
    })
    .push(Gate::Ry {
        q: C,
        angle: -theta1,
    })
    .push(Gate::Cx {
        control: C,
        target: B,
    })
    .push(Gate::X { q: A })
    .push(Gate::P {
        q: A,
        angle: phi[2] - phi[1] + pi,
    })
    .push(Gate::P {
        q: C,
        angle: phi[0] - phi[1],
    });
    c.add_phase(phi[1] - pi);
    Ok(c.elide_zero(tol.angle))
}

/// `r0 e^{iφ0}|000⟩ + r1 e^{iφ1}|011⟩ + r2 e^{iφ2}|101⟩ + r3 e^{iφ3}|110⟩`.
pub fn synth_r4<T: Real>(r: [T; 4], phi: [T; 4], tol: &Tolerances<T>) -> Result<Circuit<T>> {
    check(&r, &phi, tol)?;
    let pi = T::PI();
    let half = T::one() / two::<T>();
    let (n0, n1) = (r[0].hypot(r[1]), r[2].hypot(r[3]));
    let theta0 = two::<T>() * n1.atan2(n0);
    let theta1 = T::FRAC_PI_2() - r[2].atan2(r[3]);
    let theta2 = -r[1].atan2(r[0]);
    let ph1 = (-phi[0] - phi[1] + phi[2] + phi[3]) * half;
    let ph2 = (-phi[0] + phi[1] + phi[2] - phi[3]) * half;
    let ph3 = (-phi[0] + phi[1] - phi[2] + phi[3]) * half + pi;
    let mut c = Circuit::new(3);
    c.push(Gate::Ry {
        q: A,
        angle: theta0,
    })
    .push(Gate::Cx {
        control: A,
        target: B,
    })
    .push(Gate::P { q: A, angle: ph1 })
    .push(Gate::Cx {
        control: B,
        target: C,
    })
    .push(Gate::Ry {
        q: B,
        angle: -theta1 - theta2,
    })
    .push(Gate::Cx {
        control: C,
        target: B,
    })
    .push(Gate::Ry {
        q: B,
        angle: theta1 - theta2,
    })
    .push(Gate::Cx {
        control: B,
        target: C,
    })
    .push(Gate::P {
        q: B,
        angle: ph3 - pi,
    })
    .push(Gate::P { q: C, angle: ph2 });
    c.add_phase(phi[0]);
    Ok(c.elide_zero(tol.angle))
}
