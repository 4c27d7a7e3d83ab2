//! Finite affine geometry underpinning of prime-dimensional Hilbert spaces.
//!
//! For an odd prime `d`, the d(d+1) states of the d+1 mutually unbiased bases
//! are the points of a dual affine plane, and each of its d² lines carries a
//! Hermitian involution `P_j` (the sum of the projectors on the line minus the
//! identity). The `P_j` are trace-orthogonal, so every operator is recovered
//! from the real numbers `tr(B P_j)`: a discrete quasi-distribution on lines.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below pin the double-precision build used by the CLI.

pub mod error;
pub mod formats;
pub mod geometry;
pub mod matrix;
pub mod modular;
pub mod mub;
pub mod operators;
pub mod phasespace;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use geometry::{ApgLine, ApgPoint, Basis, LineLabel, PointLabel};
pub use matrix::{CMatrix, Tolerance};
pub use modular::{Modulus, ZElem};
pub use num_complex::Complex;
pub use report::{AxiomReport, Check};
pub use scalar::Real;

pub type Complex64 = Complex<f64>;
pub type CMatrix64 = CMatrix<f64>;
pub type CMatrix32 = CMatrix<f32>;
pub type Tolerance64 = Tolerance<f64>;
pub type MubFamily64 = mub::MubFamily<f64>;
pub type OperatorSet64 = operators::OperatorSet<f64>;
pub type PhaseSpace64 = phasespace::PhaseSpace<f64>;
pub type QuasiDistribution64 = phasespace::QuasiDistribution<f64>;
pub type MubProbabilities64 = phasespace::MubProbabilities<f64>;
pub type DensityMatrix64 = phasespace::DensityMatrix<f64>;
