//! Hydrogen-atom spectrum of the Klein-Gordon equation with a Coulomb
//! potential in non-commutative space-time, to second order in the
//! non-commutativity parameter θ.
//!
//! Every closed-form result (energies, radial wavefunctions, inverse-power
//! moments, θ-induced energy shifts) is cross-validated against independent
//! numerical-quadrature oracles. All internal computation is done in natural
//! units (ℏ = c = 1, energies in units of the electron mass); conversion to
//! eV happens at the API boundary.

pub mod bounds;
pub mod cli;
pub mod core;
pub mod error;
pub mod kgnc;
pub mod ncfield;
pub mod nrlimit;
pub mod nu;
pub mod output;
pub mod quadrature;
pub mod specfun;
pub mod verify;

pub use error::Error;
