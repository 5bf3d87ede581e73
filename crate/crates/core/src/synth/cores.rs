//! Two-qubit core mappings used by the SS, SE and EE templates.
//!
//! Each core acts on (B, C) = (0, 1), fixes `|00⟩` (EE: sends it to
//! `cos θ0|00⟩ − sin θ0|11⟩`) and sends `|10⟩` to the stated target.

use crate::scalar::{lit, Real};

use super::circuit::Gate;

const B: usize = 0;
const C: usize = 1;

/// `|10⟩ → |1⟩ ⊗ (sin θ e^{iφ0}|0⟩ + cos θ e^{iφ1}|1⟩)`, one CNOT.
pub fn core_ss<T: Real>(theta: T, phi0: T, phi1: T) -> Vec<Gate<T>> {
    vec![
        Gate::P { q: B, angle: phi0 },
        Gate::Rz {
            q: C,
            angle: phi0 - phi1,
        },
        Gate::Ry { q: C, angle: theta },
        Gate::Cx {
            control: B,
            target: C,
        },
        Gate::Ry {
            q: C,
            angle: -theta,
        },
        Gate::Rz {
            q: C,
            angle: phi1 - phi0,
        },
    ]
}

/// `|10⟩ → sin θ0 sin θ1 e^{iφ1}|01⟩ + cos θ0 e^{iφ2}|10⟩ + sin θ0 cos θ1 e^{iφ3}|11⟩`, two CNOTs.
pub fn core_se<T: Real>(theta0: T, theta1: T, phi1: T, phi2: T, phi3: T) -> Vec<Gate<T>> {
    let pi = T::PI();
    let a = T::FRAC_PI_2() - theta0;
    let b = T::FRAC_PI_2() - theta1;
    vec![
        Gate::P {
            q: B,
            angle: phi1 + phi2 - phi3 + pi,
        },
        Gate::Ry { q: C, angle: a },
        Gate::Cx {
            control: B,
            target: C,
        },
        Gate::Ry { q: C, angle: -a },
        Gate::Ry { q: B, angle: b },
        Gate::Cx {
            control: C,
            target: B,
        },
        Gate::Ry { q: B, angle: -b },
        Gate::P {
            q: B,
            angle: phi3 - phi1 - pi,
        },
        Gate::P {
            q: C,
            angle: phi3 - phi2 - pi,
        },
    ]
}

/// Three-CNOT core for two entangled Schmidt vectors.
///
/// `|00⟩ → cos θ0|00⟩ − sin θ0|11⟩` and
/// `|10⟩ → cos θ1 e^{iφ0}(sin θ0|00⟩ + cos θ0|11⟩) + sin θ1(sin θ2 e^{iφ1}|01⟩ + cos θ2 e^{iφ2}|10⟩)`.
pub fn core_ee<T: Real>(
    theta0: T,
    theta1: T,
    theta2: T,
    phi0: T,
    phi1: T,
    phi2: T,
) -> Vec<Gate<T>> {
    let pi = T::PI();
    let half = lit::<T>(0.5);
    let kappa0 = T::FRAC_PI_2() + theta1;
    let kappa1 = T::FRAC_PI_2() + theta0 - theta2;
    let sigma0 = (phi1 + phi2 - pi) * half - phi0;
    let sigma1 = (pi - phi1 + phi2) * half;
    let a = pi - kappa0;
    let b = -kappa1;
    let x = sigma1 - T::FRAC_PI_2();
    vec![
        Gate::P { q: B, angle: phi0 },
        Gate::Ry { q: C, angle: a },
        Gate::Cx {
            control: B,
            target: C,
        },
        Gate::Ry { q: C, angle: -a },
        Gate::Ry { q: B, angle: b },
        Gate::Cx {
            control: C,
            target: B,
        },
        Gate::Ry { q: B, angle: -b },
        Gate::Ry {
            q: B,
            angle: -(theta0 + theta0),
        },
        Gate::P {
            q: C,
            angle: sigma0 + T::FRAC_PI_2(),
        },
        Gate::Cx {
            control: B,
            target: C,
        },
        Gate::P { q: B, angle: x },
        Gate::P { q: C, angle: -x },
    ]
}
