//! Exact scattering on the Lambert-W step potential
//!
//! `V(x) = V0 / (1 + W(exp(-(x - x0)/sigma)))` is a smooth, asymmetric step
//! whose stationary Schrödinger equation is solved in closed form by
//! confluent hypergeometric functions. This crate provides
//!
//! - [`specfun`]: the special functions the solution needs (real Lambert W,
//!   complex log-Gamma, Kummer `M`, Tricomi `U`, principal-branch powers),
//!   written from scratch;
//! - [`potentials`]: the Lambert barrier and its relatives (abrupt step,
//!   Fermi/tanh step, the five-parameter generalized barrier, the
//!   square-root ratio barrier) and the coordinate map `z(x)`;
//! - [`analytic`]: the closed-form wavefunction, reflection coefficients and
//!   asymptotic wave decomposition;
//! - [`oracle`]: an independent Numerov integration of the Schrödinger
//!   equation with WKB-phase matching, used to certify the closed forms;
//! - [`heun`]: the bi-confluent Heun machinery from which the potential is
//!   derived, including its reduction to Kummer functions.
//!
//! Units are set by [`PhysicsConfig`]; the default `m = 1/2`, `hbar = 1`
//! makes `2m/hbar^2 = 1`, so energies and squared wave numbers coincide.

pub mod analytic;
mod error;
pub mod heun;
pub mod oracle;
pub mod potentials;
pub mod specfun;
pub mod waves;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use potentials::PhysicsConfig;

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;
