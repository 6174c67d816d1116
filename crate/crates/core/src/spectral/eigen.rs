use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::linalg::projector;
use crate::partitions::Dims;
use crate::perm_engine::{cycle_decomposition, SubsystemPerm};
use crate::spectral::{PermOperator, RootOfUnity, Spectrum};
use crate::C64;

/// Spectrum of `T̂_{d,σ}` read off the cycle lengths.
pub fn spectrum(d: &Dims, sigma: &SubsystemPerm) -> Result<Spectrum> {
    Ok(Spectrum::from_cycles(&cycle_decomposition(d, sigma)?))
}

fn snap(x: f64) -> f64 {
    if x.abs() < 1e-15 {
        0.0
    } else {
        x
    }
}

/// `(1/√l) Σ_r λ^{−(r−1)} |L_r>` with `λ = e^{2πi m/l}` for the cycle
/// `L_1 → L_2 → .. → L_l`, rotated to start at its smallest label so that
/// coefficient is real and positive.
pub fn cycle_eigenvector(n: usize, cycle: &[usize], m: u64) -> Result<StateVector> {
    let l = cycle.len();
    if l == 0 {
        return Err(Error::domain("empty cycle"));
    }
    if m >= l as u64 {
        return Err(Error::domain(format!("exponent {m} must be below the cycle length {l}")));
    }
    if cycle.iter().any(|&x| x >= n) {
        return Err(Error::domain(format!("cycle {cycle:?} leaves 0..{n}")));
    }
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &x)| x)
        .map(|(i, _)| i)
        .unwrap();
    let a = 1.0 / (l as f64).sqrt();
    let mut v = DVector::zeros(n);
    for r in 0..l {
        let label = cycle[(start + r) % l];
        // λ^{−r}; reduce the angle first to keep phases exact for long cycles.
        let k = (m as u128 * r as u128 % l as u128) as f64;
        let z = C64::from_polar(a, -TAU * k / l as f64);
        // Quarter-turn phases leave ~1e-17 residue in the vanishing part.
        v[label] = C64::new(snap(z.re), snap(z.im));
    }
    StateVector::new(v)
}

/// Orthonormal basis of the `η`-eigenspace of `T̂_{d,σ}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenspaceBasis {
    pub eigenvalue: RootOfUnity,
    pub dimension: usize,
    pub vectors: Vec<StateVector>,
    #[serde(skip)]
    pub d: Dims,
    #[serde(skip)]
    pub sigma: SubsystemPerm,
}

impl EigenspaceBasis {
    pub fn projector(&self) -> DMatrix<C64> {
        let vs: Vec<DVector<C64>> = self.vectors.iter().map(|v| v.amplitudes().clone()).collect();
        projector(&vs, self.d.n())
    }

    /// Largest `‖T̂v − ηv‖` over the basis.
    pub fn max_residual(&self, op: &PermOperator) -> Result<f64> {
        let eta = self.eigenvalue.value();
        let mut worst: f64 = 0.0;
        for v in &self.vectors {
            let tv = op.apply(v.amplitudes())?;
            worst = worst.max((tv - v.amplitudes() * eta).norm());
        }
        Ok(worst)
    }
}

/// One vector per cycle whose length is a multiple of `η`'s order; empty if
/// `η` is not an eigenvalue.
pub fn eigenspace(d: &Dims, sigma: &SubsystemPerm, eta: RootOfUnity) -> Result<EigenspaceBasis> {
    let cd = cycle_decomposition(d, sigma)?;
    let (o, e) = (eta.order(), eta.exponent());
    let mut vectors = Vec::new();
    for c in &cd.cycles {
        let l = c.len() as u64;
        if l % o == 0 {
            vectors.push(cycle_eigenvector(d.n(), c, e * (l / o))?);
        }
    }
    Ok(EigenspaceBasis {
        eigenvalue: eta,
        dimension: vectors.len(),
        vectors,
        d: d.clone(),
        sigma: sigma.clone(),
    })
}

/// Every eigenspace, ordered by eigenvalue angle.
pub fn all_eigenspaces(d: &Dims, sigma: &SubsystemPerm) -> Result<Vec<EigenspaceBasis>> {
    spectrum(d, sigma)?
        .entries
        .iter()
        .map(|(eta, _)| eigenspace(d, sigma, *eta))
        .collect()
}

/// The eigenbasis `𝔹^T`: all cycle eigenvectors, cycle by cycle, `m = 0..l−1`.
pub fn transformed_basis(d: &Dims, sigma: &SubsystemPerm) -> Result<Vec<StateVector>> {
    let cd = cycle_decomposition(d, sigma)?;
    let mut out = Vec::with_capacity(d.n());
    for c in &cd.cycles {
        for m in 0..c.len() as u64 {
            out.push(cycle_eigenvector(d.n(), c, m)?);
        }
    }
    Ok(out)
}
