//! Operators `T̂_{d,σ}`, exact root-of-unity spectra, cycle eigenvectors,
//! eigenspaces and the symmetric / antisymmetric sums over `S_k`.

pub mod cyclic;
pub mod eigen;
pub mod operator;
pub mod projectors;
pub mod root;

pub use cyclic::{cyclic_shift_dims, cyclic_sym_dim, cyclic_sym_dim_enumerated};
pub use eigen::{
    all_eigenspaces, cycle_eigenvector, eigenspace, spectrum, transformed_basis, EigenspaceBasis,
};
pub use operator::{build_operator, PermOperator};
pub use projectors::{
    antisymmetric_is_zero, antisymmetric_projector, binomial, factorial, permutation_sum,
    rho_family, symmetric_projector,
};
pub use root::{RootOfUnity, Spectrum};
