//! Subsystem permutation symmetry for heterogeneous tensor-product spaces.
//!
//! A state in `C^N` can be read in any tensor-product shape `d = [d1, .., dk]`
//! with `d1 * .. * dk = N`. Permuting the subsystems (labels *and* dimensions)
//! by `σ ∈ S_k` induces a permutation `π(d, σ) ∈ S_N` on computational basis
//! labels. This crate builds that permutation, reads off its spectrum and
//! eigenspaces in closed form, and analyses the entanglement of states living
//! in those eigenspaces.
//!
//! Module map:
//!
//! * [`partitions`]: multiplicative partitions of `N`, classes, primitive shape.
//! * [`index_map`]: flat label ↔ mixed-radix multi-index conversion.
//! * [`perm_engine`]: subsystem permutations, label kernels, cycle structure.
//! * [`spectral`]: operators, root-of-unity spectra, eigenspaces, projectors.
//! * [`entanglement`]: states, reduced density matrices, purity measure, CES.
//! * [`report`]: JSON / CSV renderings used by the command-line front-end.
//! * [`scans`]: parameter sweeps behind the tabulated and plotted data.

pub mod entanglement;
pub mod error;
pub mod index_map;
pub mod linalg;
pub mod partitions;
pub mod perm_engine;
pub mod report;
pub mod scans;
pub mod spectral;

pub use error::{Error, Result};
pub use index_map::MultiIndex;
pub use partitions::{Dims, PartitionClass};
pub use perm_engine::{CycleDecomp, LabelPerm, SubsystemPerm};
pub use spectral::{EigenspaceBasis, PermOperator, RootOfUnity};

/// Complex amplitude type used throughout.
pub type C64 = num_complex::Complex64;

/// Resource limits shared by the operations that can blow up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible `N` for a shape.
    pub max_n: u64,
    /// Largest `N` for which dense `N x N` matrices are materialised.
    pub dense_max_n: usize,
    /// Largest number of `(σ1, σ2)` pairs the coarse-graining search may visit.
    pub search_budget: u64,
    /// Largest `k` for which sums over all of `S_k` are attempted.
    pub max_sum_k: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 1 << 31,
            dense_max_n: 212,
            search_budget: 518_400,
            max_sum_k: 6,
        }
    }
}
