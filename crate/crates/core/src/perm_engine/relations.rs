use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{apply_perm, omega, primitive_partition, Dims};
use crate::perm_engine::kernel::{exchange_step, LabelKernel, MixedRadix};
use crate::perm_engine::{CycleDecomp, LabelPerm, SubsystemPerm};
use crate::Limits;

fn check_sizes(d: &Dims, sigma: &SubsystemPerm) -> Result<()> {
    if d.k() != sigma.k() {
        return Err(Error::domain(format!(
            "permutation {sigma} acts on {} slots but shape {d} has {}",
            sigma.k(),
            d.k()
        )));
    }
    Ok(())
}

/// Image of the basis label `L` under `T̂_{d,σ}`, read back in `C^N`.
pub fn step(label: usize, d: &Dims, sigma: &SubsystemPerm) -> Result<usize> {
    check_sizes(d, sigma)?;
    if label >= d.n() {
        return Err(Error::domain(format!("label {label} is outside 0..{}", d.n())));
    }
    Ok(MixedRadix.image(label, d, sigma))
}

/// The exchange recurrence on `[d1, d2]`.
pub fn bipartite_step(label: usize, d1: usize, d2: usize) -> Result<usize> {
    let d = Dims::bipartite(d1, d2)?;
    if label >= d.n() {
        return Err(Error::domain(format!("label {label} is outside 0..{}", d.n())));
    }
    Ok(exchange_step(label, d1, d2))
}

/// `π(d, σ)` as an image table.
pub fn label_perm(d: &Dims, sigma: &SubsystemPerm) -> Result<LabelPerm> {
    MixedRadix.label_perm(d, sigma)
}

pub fn cycle_decomposition(d: &Dims, sigma: &SubsystemPerm) -> Result<CycleDecomp> {
    let p = label_perm(d, sigma)?;
    Ok(CycleDecomp::new(d.clone(), sigma.clone(), &p))
}

/// Same as [`cycle_decomposition`] with an explicit kernel.
pub fn cycle_decomposition_with(
    kernel: &dyn LabelKernel,
    d: &Dims,
    sigma: &SubsystemPerm,
) -> Result<CycleDecomp> {
    let p = kernel.label_perm(d, sigma)?;
    Ok(CycleDecomp::new(d.clone(), sigma.clone(), &p))
}

/// Both sides of `π(d, σ1∘σ2) = π(σ2(d), σ1) ∘ π(d, σ2)`.
pub fn compose_check(
    d: &Dims,
    sigma1: &SubsystemPerm,
    sigma2: &SubsystemPerm,
) -> Result<(LabelPerm, LabelPerm)> {
    let lhs = label_perm(d, &sigma1.compose(sigma2)?)?;
    let inner = label_perm(d, sigma2)?;
    let outer = label_perm(&apply_perm(sigma2, d)?, sigma1)?;
    Ok((lhs, outer.compose(&inner)?))
}

/// `π(σ(d), σ⁻¹) = π(d, σ)⁻¹`.
pub fn inverse_check(d: &Dims, sigma: &SubsystemPerm) -> Result<bool> {
    let fwd = label_perm(d, sigma)?;
    let back = label_perm(&apply_perm(sigma, d)?, &sigma.inverse())?;
    Ok(back == fwd.inverse())
}

/// A pair realising a coarse-grained permutation on the primitive shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoarseMatch {
    pub primitive: Dims,
    pub sigma1: SubsystemPerm,
    /// `σ1(d_p)`, the reordered primitive shape.
    pub reordered: Dims,
    pub sigma2: SubsystemPerm,
}

impl CoarseMatch {
    /// Recomputes both label permutations and compares them.
    pub fn verify(&self, coarse: &Dims, coarse_sigma: &SubsystemPerm) -> Result<bool> {
        Ok(label_perm(&self.reordered, &self.sigma2)? == label_perm(coarse, coarse_sigma)?)
    }
}

/// Searches `S_Ω × S_Ω` in lexicographic order for `(σ1, σ2)` with
/// `π(σ1(d_p), σ2) = π(d', σ')`. `Ok(None)` means the search finished
/// without a match.
pub fn coarse_grain_match(
    coarse: &Dims,
    coarse_sigma: &SubsystemPerm,
    limits: &Limits,
) -> Result<Option<CoarseMatch>> {
    check_sizes(coarse, coarse_sigma)?;
    let n = coarse.n() as u64;
    let w = omega(n)?;
    if w <= coarse.k() {
        return Err(Error::domain(format!(
            "{coarse} is already as fine as the primitive shape of {n}"
        )));
    }
    let fact: u128 = (1..=w as u128).product();
    let needed = fact * fact;
    if needed > limits.search_budget as u128 {
        return Err(Error::Budget {
            what: "coarse-graining search pairs",
            needed,
            limit: limits.search_budget as u128,
        });
    }
    let primitive = primitive_partition(n)?;
    let target = label_perm(coarse, coarse_sigma)?;
    let mut tried: Vec<Dims> = Vec::new();
    for sigma1 in SubsystemPerm::all(w) {
        let reordered = apply_perm(&sigma1, &primitive)?;
        // π(σ1(d_p), σ2) depends on σ1 only through σ1(d_p); an earlier σ1
        // with the same reordering already failed for every σ2.
        if tried.contains(&reordered) {
            continue;
        }
        for sigma2 in SubsystemPerm::all(w) {
            if MixedRadix::table(&reordered, &sigma2) == target.images() {
                return Ok(Some(CoarseMatch {
                    primitive,
                    sigma1,
                    reordered,
                    sigma2,
                }));
            }
        }
        tried.push(reordered);
    }
    Ok(None)
}
