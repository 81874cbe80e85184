//! Exact simulation of a five-mode fermionic Fock space `(A, c_I, d_I, c_II, d_II)`
//! for an inertial observer (Alice) sharing a Grassmann scalar field state
//! with a uniformly accelerated one.
//!
//! The crate builds Unruh-mode states over Rindler modes, maps them to qubit
//! registers under arbitrary operator orderings, traces out region II and
//! measures the negativity left between Alice and region I. An
//! ordering-independent reduced state, defined through expectation values of
//! region-I observables, serves as the reference every qubit-based route is
//! compared against.

pub mod entanglement;
pub mod error;
pub mod fock;
pub mod unruh;

pub use entanglement::{DensityMatrix, OperatorOrdering};
pub use error::{Error, Result};
pub use fock::{BasisState, ModeTable, OperatorExpr, StateVector};
pub use unruh::{StateFamily, UnruhParams};
