//! The label permutation `π(d, σ) ∈ S_N` induced by permuting tensor slots.

pub mod counting;
pub mod cycles;
pub mod kernel;
pub mod relations;
pub mod sigma;

pub use counting::{cycle_count, divisors, l_star, mobius};
pub use cycles::{canonicalize, parse_cycle_notation, render_cycles, CycleDecomp, LabelPerm};
pub use kernel::{builtin_kernels, KernelRegistry, LabelKernel};
pub use relations::{
    bipartite_step, coarse_grain_match, compose_check, cycle_decomposition,
    cycle_decomposition_with, inverse_check, label_perm, step, CoarseMatch,
};
pub use sigma::SubsystemPerm;
