//! States, reduced density matrices, the purity-based measure `E_t`,
//! completely entangled subspaces and symmetric product states.

pub mod ces;
pub mod density;
pub mod measure;
pub mod product;
pub mod state;

pub use ces::{
    antisymmetric_pairs, ces_intersection_closed_form, ces_intersection_qubit_qudit,
    ces_orthocomplement_basis, ces_qubit_qudit_basis, ces_qudit_qubit_basis,
};
pub use density::{amplitude_matrix, reduced_density, trace_distance, DensityMatrix};
pub use measure::{
    basis_type, cut_entanglement, entanglement_e1, entanglement_et, exchange_entanglement_check,
    gamma_entanglement_closed_form, ghz_entanglement_closed_form, is_product_across,
    linear_entropy, min_entanglement_estimate, schmidt_coefficients,
};
pub use product::{
    check_symmetric_product, symmetric_product_constraints, symmetric_product_families,
    ConstraintSystem, ProductFamily, ProductTerm,
};
pub use state::{
    chi1, chi2, gamma_state, ghz_like, ghz_state, haar_in_span, haar_random_state, haar_random_state_with, psi_p, random_phase,
    sigma_state, StateVector,
};
