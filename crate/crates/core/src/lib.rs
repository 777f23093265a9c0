//! Two-by-two and four-by-four matrix methods for ray optics.
//!
//! The crate covers the SL(2,C) and Lorentz representations (`sl2`), Jones,
//! Stokes and Mueller polarization calculus (`polarization`), ABCD lens and
//! cavity optics (`lens_cavity`), Bargmann/Iwasawa style factorizations
//! (`decompositions`), periodic multilayer stacks (`multilayer`) and the
//! squeezed-oscillator expansion (`oscillator`).

pub mod decompositions;
pub mod error;
pub mod lens_cavity;
pub mod matrix;
pub mod multilayer;
pub mod oscillator;
pub mod polarization;
pub mod sl2;

pub use error::{Error, Result};
pub use matrix::{FourVector, Mat2C, Mat4C, Mat4R, RayMatrix, MINKOWSKI};

/// Numerical tolerances shared across modules.
pub mod tol {
    /// Allowed `|det − 1|` for inputs declared unimodular.
    pub const UNIMODULAR: f64 = 1e-10;
    /// Allowed Hermitian residual, relative to the largest entry.
    pub const HERMITIAN: f64 = 1e-12;
    /// Allowed negative determinant for a coherency matrix.
    pub const PSD: f64 = 1e-12;
    /// Allowed deviation of ensemble weights from a unit sum.
    pub const WEIGHT_SUM: f64 = 1e-12;
    /// Relative threshold separating pure/random states from partial ones.
    pub const CLASSIFY: f64 = 1e-9;
}
