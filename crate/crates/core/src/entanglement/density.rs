use nalgebra::DMatrix;
use serde::{Serialize, Serializer};

use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::index_map::{digits_into, from_digits};
use crate::linalg::hermitian_eigenvalues;
use crate::partitions::Dims;
use crate::C64;

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: DMatrix<C64>,
}

impl DensityMatrix {
    pub fn new(m: DMatrix<C64>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::domain("a density matrix must be square and non-empty"));
        }
        let herm = (&m - m.adjoint()).camax();
        if herm > 1e-12 {
            return Err(Error::domain(format!("matrix is not Hermitian (defect {herm:e})")));
        }
        let tr = m.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::domain(format!("trace is {tr}, expected 1")));
        }
        let lo = hermitian_eigenvalues(&m)[0];
        if lo < -1e-10 {
            return Err(Error::domain(format!("matrix has negative eigenvalue {lo:e}")));
        }
        Ok(DensityMatrix { m })
    }

    pub(crate) fn new_unchecked(m: DMatrix<C64>) -> Self {
        DensityMatrix { m }
    }

    pub fn pure(psi: &StateVector) -> Self {
        let v = psi.amplitudes();
        DensityMatrix {
            m: v * v.adjoint(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.m.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.m)
    }
}

impl Serialize for DensityMatrix {
    /// Row-major list of rows of `[re, im]` pairs.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| [self.m[(i, j)].re, self.m[(i, j)].im]).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Sorted, de-duplicated kept slots; rejects empty, full or out-of-range sets.
pub(crate) fn check_cut(d: &Dims, keep: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut a: Vec<usize> = keep.to_vec();
    a.sort_unstable();
    a.dedup();
    if a.iter().any(|&s| s >= d.k()) {
        return Err(Error::domain(format!("slot set {keep:?} is out of range for {d}")));
    }
    if a.is_empty() || a.len() == d.k() {
        return Err(Error::domain(format!(
            "kept slots {keep:?} must be a nonempty proper subset of the {} slots",
            d.k()
        )));
    }
    let rest = (0..d.k()).filter(|s| !a.contains(s)).collect();
    Ok((a, rest))
}

/// Amplitudes arranged as a `d_A × d_B` matrix, rows indexed by the kept slots.
pub fn amplitude_matrix(psi: &StateVector, d: &Dims, keep: &[usize]) -> Result<DMatrix<C64>> {
    if psi.dim() != d.n() {
        return Err(Error::domain(format!(
            "state of dimension {} does not fit shape {d}",
            psi.dim()
        )));
    }
    let (a, b) = check_cut(d, keep)?;
    let ra: Vec<usize> = a.iter().map(|&s| d.entries()[s]).collect();
    let rb: Vec<usize> = b.iter().map(|&s| d.entries()[s]).collect();
    let (da, db) = (ra.iter().product(), rb.iter().product());
    let mut m = DMatrix::zeros(da, db);
    let mut digits = vec![0; d.k()];
    let mut da_digits = vec![0; a.len()];
    let mut db_digits = vec![0; b.len()];
    for (l, z) in psi.amplitudes().iter().enumerate() {
        digits_into(l, d.entries(), &mut digits);
        for (t, &s) in a.iter().enumerate() {
            da_digits[t] = digits[s];
        }
        for (t, &s) in b.iter().enumerate() {
            db_digits[t] = digits[s];
        }
        m[(from_digits(&da_digits, &ra), from_digits(&db_digits, &rb))] = *z;
    }
    Ok(m)
}

/// `ρ_A = Tr_Ā |ψ><ψ|` for the kept (0-based) slots `A`.
pub fn reduced_density(psi: &StateVector, d: &Dims, keep: &[usize]) -> Result<DensityMatrix> {
    let m = amplitude_matrix(psi, d, keep)?;
    Ok(DensityMatrix::new_unchecked(&m * m.adjoint()))
}

/// `½ Σ |λ_i|` over the eigenvalues of `ρ − σ`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::domain(format!(
            "cannot compare density matrices of dimension {} and {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let diff = &rho.m - &sigma.m;
    Ok(0.5 * hermitian_eigenvalues(&diff).iter().map(|x| x.abs()).sum::<f64>())
}
