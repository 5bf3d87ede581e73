//! Classification and exact circuit synthesis for three-qubit pure states.
//!
//! Qubits are named A, B, C (indices 0, 1, 2) on a line; amplitude index
//! `j = 4a + 2b + c`.
//!
//! ```
//! use triprep::sim::{fidelity, simulate};
//! use triprep::synth::compile;
//! use triprep::{Complex64, Tolerances64};
//!
//! let h = std::f64::consts::FRAC_1_SQRT_2;
//! let mut ghz = [Complex64::new(0.0, 0.0); 8];
//! ghz[0] = Complex64::new(h, 0.0);
//! ghz[7] = Complex64::new(h, 0.0);
//! let (class, circuit) = compile(&ghz, &Tolerances64::standard())?;
//! assert_eq!(class.kind().name(), "SS");
//! assert_eq!(circuit.cnot_pairs().count(), 2);
//! assert!(fidelity(&simulate(&circuit)?, &ghz)? > 1.0 - 1e-12);
//! # Ok::<(), triprep::Error>(())
//! ```

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod random;
pub mod scalar;
pub mod sim;
pub mod synth;

pub use error::{Error, Result};
pub use scalar::{Real, Tolerances};

/// Double-precision complex amplitude.
pub type Complex64 = num_complex::Complex<f64>;
pub type State3 = analysis::ThreeQubitState<f64>;
pub type State2 = analysis::TwoQubitState<f64>;
pub type Tolerances64 = Tolerances<f64>;
pub type Classification64 = analysis::Classification<f64>;
pub type Circuit64 = synth::Circuit<f64>;
