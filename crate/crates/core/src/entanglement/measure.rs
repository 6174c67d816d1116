//! The purity-based measure `E_t` and the quantities built on it.

use nalgebra::{DMatrix, SVD};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::entanglement::density::amplitude_matrix;
use crate::entanglement::state::haar_in_span;
use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::partitions::Dims;
use crate::perm_engine::SubsystemPerm;
use crate::spectral::build_operator;
use crate::C64;

/// Basis vectors with `E_1` above this count as entangled.
pub const PRODUCT_TOL: f64 = 1e-9;

/// `1 − Tr ρ_A²` for a normalised amplitude matrix, from the 2×2 minors:
/// `(Tr ρ)² − Tr ρ² = 2 Σ |M_ab M_a'b' − M_ab' M_a'b|²`.
///
/// Summing non-negative terms keeps near-product states accurate, where the
/// direct difference loses everything below ~1e-8.
fn linear_entropy_of(m: &DMatrix<C64>) -> f64 {
    let (r, c) = (m.nrows(), m.ncols());
    let norm2: f64 = m.iter().map(|z| z.norm_sqr()).sum();
    let mut acc = 0.0;
    for a in 0..r {
        for a2 in a + 1..r {
            for b in 0..c {
                let (x, y) = (m[(a, b)], m[(a2, b)]);
                for b2 in b + 1..c {
                    acc += (x * m[(a2, b2)] - m[(a, b2)] * y).norm_sqr();
                }
            }
        }
    }
    2.0 * acc / (norm2 * norm2)
}

/// `1 − Tr ρ_A²` for the cut keeping `keep`.
pub fn linear_entropy(psi: &StateVector, d: &Dims, keep: &[usize]) -> Result<f64> {
    Ok(linear_entropy_of(&amplitude_matrix(psi, d, keep)?))
}

/// `√(d_A/(d_A−1) · (1 − Tr ρ_A²))` for a single cut.
pub fn cut_entanglement(psi: &StateVector, d: &Dims, keep: &[usize]) -> Result<f64> {
    let da = d.product_of(keep) as f64;
    let s = linear_entropy(psi, d, keep)?;
    Ok((da / (da - 1.0) * s).max(0.0).sqrt())
}

/// Subsets of `0..k` with `t` elements, lexicographic.
pub(crate) fn subsets(k: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(start: usize, k: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for s in start..k {
            cur.push(s);
            rec(s + 1, k, t, cur, out);
            cur.pop();
        }
    }
    rec(0, k, t, &mut cur, &mut out);
    out
}

/// `E_t(ψ)`: the minimum of [`cut_entanglement`] over all `t`-slot subsets.
pub fn entanglement_et(psi: &StateVector, d: &Dims, t: usize) -> Result<f64> {
    if t == 0 || t > d.k() / 2 {
        return Err(Error::domain(format!(
            "t = {t} is outside 1..={} for shape {d}",
            d.k() / 2
        )));
    }
    let mut best = f64::INFINITY;
    for a in subsets(d.k(), t) {
        best = best.min(cut_entanglement(psi, d, &a)?);
    }
    Ok(best)
}

pub fn entanglement_e1(psi: &StateVector, d: &Dims) -> Result<f64> {
    entanglement_et(psi, d, 1)
}

/// Schmidt coefficients (singular values of the amplitude matrix), descending.
pub fn schmidt_coefficients(psi: &StateVector, d: &Dims, keep: &[usize]) -> Result<Vec<f64>> {
    let m = amplitude_matrix(psi, d, keep)?;
    Ok(SVD::new(m, false, false).singular_values.iter().copied().collect())
}

/// Product across the cut when the leading Schmidt weight is `≥ 1 − 1e-9`.
pub fn is_product_across(psi: &StateVector, d: &Dims, keep: &[usize]) -> Result<bool> {
    let s = schmidt_coefficients(psi, d, keep)?;
    Ok(s[0] * s[0] >= 1.0 - PRODUCT_TOL)
}

/// `(E_t of ψ in d, E_t of T̂ψ in σ(d))`; the two agree for every state.
pub fn exchange_entanglement_check(
    psi: &StateVector,
    d: &Dims,
    sigma: &SubsystemPerm,
    t: usize,
) -> Result<(f64, f64)> {
    let op = build_operator(d, sigma)?;
    let moved = op.apply_state(psi)?;
    Ok((entanglement_et(psi, d, t)?, entanglement_et(&moved, op.target_dims(), t)?))
}

/// Closed form for `E_1(Γ_N)` with `d = max(d)`, `d' = N/d`:
/// `√( d/(d−1) · (4(d−1)(d'−1) − 2) / (N−2)² )`.
pub fn gamma_entanglement_closed_form(d: &Dims) -> Result<f64> {
    let n = d.n() as f64;
    if d.n() <= 2 {
        return Err(Error::domain("Γ_N is undefined for N <= 2"));
    }
    let big = d.max_entry() as f64;
    let rest = n / big;
    let num = 4.0 * (big - 1.0) * (rest - 1.0) - 2.0;
    Ok((big / (big - 1.0) * num / ((n - 2.0) * (n - 2.0))).sqrt())
}

/// Closed form for `E_1` of the GHZ-like state on `d_min` levels:
/// `√( d_max (d_min − 1) / (d_min (d_max − 1)) )`.
pub fn ghz_entanglement_closed_form(d: &Dims) -> f64 {
    let (lo, hi) = (d.min_entry() as f64, d.max_entry() as f64);
    (hi * (lo - 1.0) / (lo * (hi - 1.0))).sqrt()
}

/// `(p, q)`: how many vectors have `E_1 > 1e-9` and how many do not.
pub fn basis_type(vectors: &[StateVector], d: &Dims) -> Result<(usize, usize)> {
    let mut p = 0;
    for v in vectors {
        if entanglement_e1(v, d)? > PRODUCT_TOL {
            p += 1;
        }
    }
    Ok((p, vectors.len() - p))
}

/// Smallest `E_1` over `samples` Haar-random vectors of `span(basis)`.
///
/// This is an estimate from above of the true minimum, deterministic given `seed`.
pub fn min_entanglement_estimate(
    basis: &[StateVector],
    d: &Dims,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    if basis.is_empty() {
        return Err(Error::domain("cannot sample from an empty basis"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for _ in 0..samples.max(1) {
        let psi = haar_in_span(basis, &mut rng)?;
        best = best.min(entanglement_e1(&psi, d)?);
    }
    Ok(best)
}
