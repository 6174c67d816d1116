use nalgebra::DMatrix;

use crate::entanglement::DensityMatrix;
use crate::error::{Error, Result};
use crate::partitions::Dims;
use crate::perm_engine::{label_perm, SubsystemPerm};
use crate::{Limits, C64};

/// `Σ_σ s(σ) T̂_{d,σ}` over all of `S_k` with integer entries, where `s` is 1
/// or the sign of `σ`. Dividing by `k!` gives `Ŝ_d` or `Â_d`.
pub fn permutation_sum(d: &Dims, signed: bool, limits: &Limits) -> Result<DMatrix<i64>> {
    let k = d.k();
    if k > limits.max_sum_k {
        return Err(Error::Budget {
            what: "subsystem count for a sum over S_k",
            needed: k as u128,
            limit: limits.max_sum_k as u128,
        });
    }
    let n = d.n();
    if n > limits.dense_max_n {
        return Err(Error::Budget {
            what: "dense matrix dimension",
            needed: n as u128,
            limit: limits.dense_max_n as u128,
        });
    }
    let mut acc = DMatrix::<i64>::zeros(n, n);
    for sigma in SubsystemPerm::all(k) {
        let s = if signed { sigma.sign() as i64 } else { 1 };
        let perm = label_perm(d, &sigma)?;
        for l in 0..n {
            acc[(perm.apply(l), l)] += s;
        }
    }
    Ok(acc)
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r as u64
}

fn scaled(m: DMatrix<i64>, k: usize) -> DMatrix<f64> {
    let f = factorial(k) as f64;
    m.map(|x| x as f64 / f)
}

/// `Ŝ_d = (1/k!) Σ_σ T̂_{d,σ}`.
pub fn symmetric_projector(d: &Dims, limits: &Limits) -> Result<DMatrix<f64>> {
    Ok(scaled(permutation_sum(d, false, limits)?, d.k()))
}

/// `Â_d = (1/k!) Σ_σ sgn(σ) T̂_{d,σ}`.
pub fn antisymmetric_projector(d: &Dims, limits: &Limits) -> Result<DMatrix<f64>> {
    Ok(scaled(permutation_sum(d, true, limits)?, d.k()))
}

/// Exact test that `Â_d` vanishes.
pub fn antisymmetric_is_zero(d: &Dims, limits: &Limits) -> Result<bool> {
    Ok(permutation_sum(d, true, limits)?.iter().all(|&x| x == 0))
}

/// `ρ(p) = p Ŝ/C(d+k−1,k) + (1−p) Â/C(d,k)` on a homogeneous shape.
pub fn rho_family(d: &Dims, p: f64, limits: &Limits) -> Result<DensityMatrix> {
    if !d.is_homogeneous() {
        return Err(Error::domain(format!("{d} is not homogeneous")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("mixing weight {p} outside [0,1]")));
    }
    let (q, k) = (d.entries()[0] as u64, d.k() as u64);
    let cs = binomial(q + k - 1, k) as f64;
    let mut rho = symmetric_projector(d, limits)?.map(|x| x * p / cs);
    if p < 1.0 {
        if k > q {
            return Err(Error::domain(format!(
                "{d} has no antisymmetric subspace, so only p = 1 is defined"
            )));
        }
        let ca = binomial(q, k) as f64;
        rho += antisymmetric_projector(d, limits)?.map(|x| x * (1.0 - p) / ca);
    }
    DensityMatrix::new(rho.map(|x| C64::new(x, 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    #[test]
    fn two_qubits() {
        let d = Dims::homogeneous(2, 2).unwrap();
        let lim = Limits::default();
        let s = symmetric_projector(&d, &lim).unwrap();
        let a = antisymmetric_projector(&d, &lim).unwrap();
        assert_eq!(rank(&s, 1e-10), 3);
        assert_eq!(rank(&a, 1e-10), 1);
        assert_eq!(&s * &s, s);
        let rho = rho_family(&d, 0.0, &lim).unwrap();
        assert!((rho.matrix()[(1, 1)].re - 0.5).abs() < 1e-15);
        assert!((rho.matrix()[(1, 2)].re + 0.5).abs() < 1e-15);
    }

    #[test]
    fn antisymmetric_vanishing() {
        let lim = Limits::default();
        assert!(antisymmetric_is_zero(&Dims::homogeneous(2, 3).unwrap(), &lim).unwrap());
        assert!(!antisymmetric_is_zero(&Dims::homogeneous(3, 3).unwrap(), &lim).unwrap());
        assert!(rho_family(&Dims::homogeneous(2, 3).unwrap(), 0.5, &lim).is_err());
        assert!(rho_family(&Dims::homogeneous(2, 3).unwrap(), 1.0, &lim).is_ok());
        let big = Dims::homogeneous(2, 7).unwrap();
        assert!(matches!(
            symmetric_projector(&big, &lim),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(factorial(6), 720);
    }
}
