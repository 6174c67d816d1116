use std::f64::consts::TAU;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Dims;
use crate::C64;

const NORM_TOL: f64 = 1e-12;

/// A unit vector in `C^N`. Shapes are supplied per operation.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<C64>,
}

impl StateVector {
    /// Wraps an already normalised amplitude vector.
    pub fn new(amps: DVector<C64>) -> Result<Self> {
        let norm = amps.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain(format!("state has norm {norm}, expected 1")));
        }
        Ok(StateVector { amps })
    }

    /// Normalises `amps`; the zero vector is rejected.
    pub fn normalized(amps: DVector<C64>) -> Result<Self> {
        let norm = amps.norm();
        if norm < 1e-300 {
            return Err(Error::domain("cannot normalise the zero vector"));
        }
        Ok(StateVector {
            amps: amps.unscale(norm),
        })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::normalized(DVector::from_iterator(
            amps.len(),
            amps.iter().map(|&x| C64::new(x, 0.0)),
        ))
    }

    /// Computational basis state `|label>` of `C^n`.
    pub fn basis(n: usize, label: usize) -> Result<Self> {
        if label >= n {
            return Err(Error::domain(format!("label {label} is outside 0..{n}")));
        }
        let mut v = DVector::zeros(n);
        v[label] = C64::new(1.0, 0.0);
        Ok(StateVector { amps: v })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn into_amplitudes(self) -> DVector<C64> {
        self.amps
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amps.dotc(&other.amps)
    }

    /// `|<self|other>| ≥ 1 − tol`.
    pub fn equal_up_to_phase(&self, other: &StateVector, tol: f64) -> bool {
        self.dim() == other.dim() && self.inner(other).norm() >= 1.0 - tol
    }
}

impl Serialize for StateVector {
    /// `[[re, im], ..]`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.amps.iter().map(|z| [z.re, z.im]).collect();
        pairs.serialize(s)
    }
}

fn real_vector(n: usize, f: impl Fn(usize) -> f64) -> DVector<C64> {
    DVector::from_fn(n, |i, _| C64::new(f(i), 0.0))
}

/// `|Γ_N> = (|1> + .. + |N−2>) / √(N−2)`.
pub fn gamma_state(n: usize) -> Result<StateVector> {
    if n < 3 {
        return Err(Error::domain(format!("Γ_N needs N >= 3, got {n}")));
    }
    let a = 1.0 / ((n - 2) as f64).sqrt();
    Ok(StateVector {
        amps: real_vector(n, |i| if i == 0 || i == n - 1 { 0.0 } else { a }),
    })
}

/// Uniform superposition of all `N` labels.
pub fn sigma_state(n: usize) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::domain("Σ_N needs N >= 1"));
    }
    let a = 1.0 / (n as f64).sqrt();
    Ok(StateVector {
        amps: real_vector(n, |_| a),
    })
}

/// `Σ_i |i i .. i> / √d` on `k` copies of `C^d`.
pub fn ghz_state(k: usize, d: usize) -> Result<StateVector> {
    ghz_like(&Dims::homogeneous(d, k)?)
}

/// `Σ_{i < d_min} |i i .. i>_d / √d_min` on a possibly heterogeneous shape.
pub fn ghz_like(d: &Dims) -> Result<StateVector> {
    let dmin = d.min_entry();
    let mut v = DVector::zeros(d.n());
    let a = 1.0 / (dmin as f64).sqrt();
    for i in 0..dmin {
        let label = d.entries().iter().fold(0, |acc, &r| acc * r + i);
        v[label] = C64::new(a, 0.0);
    }
    Ok(StateVector { amps: v })
}

fn check_weight(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("mixing weight p = {p} is outside [0,1]")));
    }
    Ok(())
}

/// `√p |0> + √(1−p) (|1> − |2> − |3> + |4>)/2` in `C^6`.
pub fn psi_p(p: f64) -> Result<StateVector> {
    check_weight(p)?;
    let (s, a) = (p.sqrt(), (1.0 - p).sqrt() / 2.0);
    Ok(StateVector {
        amps: real_vector(6, |i| match i {
            0 => s,
            1 | 4 => a,
            2 | 3 => -a,
            _ => 0.0,
        }),
    })
}

/// `√p (|0> + |N−1>)/√2 + √(1−p) |Γ_N>`.
pub fn chi1(n: usize, p: f64) -> Result<StateVector> {
    check_weight(p)?;
    let g = gamma_state(n)?;
    let edge = (p / 2.0).sqrt();
    let mut v = g.amps.scale((1.0 - p).sqrt());
    v[0] = C64::new(edge, 0.0);
    v[n - 1] = C64::new(edge, 0.0);
    Ok(StateVector { amps: v })
}

/// `√p |0> + e^{iφ} √(1−p) |Γ_N>`.
pub fn chi2(n: usize, p: f64, phi: f64) -> Result<StateVector> {
    check_weight(p)?;
    let g = gamma_state(n)?;
    let mut v = g.amps * C64::from_polar((1.0 - p).sqrt(), phi);
    v[0] = C64::new(p.sqrt(), 0.0);
    Ok(StateVector { amps: v })
}

/// Haar-random unit vector: i.i.d. complex normal amplitudes, normalised.
pub fn haar_random_state(dim: usize, seed: u64) -> Result<StateVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_random_state_with(dim, &mut rng)
}

pub fn haar_random_state_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<StateVector> {
    if dim == 0 {
        return Err(Error::domain("cannot sample a state in dimension 0"));
    }
    let v = DVector::from_fn(dim, |_, _| complex_normal(rng));
    StateVector::normalized(v)
}

/// Haar-random unit vector in the span of an orthonormal list.
pub fn haar_in_span<R: Rng + ?Sized>(basis: &[StateVector], rng: &mut R) -> Result<StateVector> {
    let first = basis
        .first()
        .ok_or_else(|| Error::domain("cannot sample from an empty basis"))?;
    let mut v = DVector::zeros(first.dim());
    for b in basis {
        v.axpy(complex_normal(rng), &b.amps, C64::new(1.0, 0.0));
    }
    StateVector::normalized(v)
}

pub(crate) fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im)
}

/// Uniform phase on `[0, 2π)`.
pub fn random_phase<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random::<f64>() * TAU
}
