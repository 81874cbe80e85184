//! Fermion-qubit mappings, partial traces and negativity of the Alice | region-I cut.

pub mod density;
pub mod ordering;
pub mod reduced;

pub use density::{
    hermitian_eigenvalues, negativity, negativity_from_spectrum, partial_transpose_spectrum,
    DensityMatrix,
};
pub use ordering::{to_qubit_basis, OperatorOrdering, LEGACY_INTERLEAVED, PHYSICAL};
pub use reduced::{
    candidate_orderings, classify_orderings, infinite_acceleration_reduced_state,
    ordering_negativity, ordering_spread, qubit_partial_trace, reduced_state, reduced_state_of,
    subalgebra_reduced_state, subalgebra_reduction, OrderingSpread, CONVERGENCE_TOL,
    RETAINED_MODES,
};
