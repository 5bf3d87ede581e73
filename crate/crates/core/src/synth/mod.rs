//! Circuit synthesis: building blocks, templates, class fast paths and simplification.

pub mod circuit;
pub mod classes;
pub mod cores;
pub mod general;
pub mod local;
pub mod simplify;

pub use circuit::{fmt_g17, Circuit, Gate};
pub use classes::{synth_r1, synth_r2, synth_r3, synth_r4};
pub use cores::{core_ee, core_se, core_ss};
pub use general::{compile, prep3};
pub use local::{compose, prep1, prep2, zyz};
pub use simplify::simplify;
