use nalgebra::{DMatrix, DVector};

use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::partitions::{apply_perm, Dims};
use crate::perm_engine::kernel::exchange_matrix_entry;
use crate::perm_engine::{label_perm, CycleDecomp, LabelPerm, SubsystemPerm};
use crate::{Limits, C64};

/// `T̂_{d,σ}` as a label image table: `T̂|L> = |π(L)>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PermOperator {
    d: Dims,
    sigma: SubsystemPerm,
    target: Dims,
    perm: LabelPerm,
}

pub fn build_operator(d: &Dims, sigma: &SubsystemPerm) -> Result<PermOperator> {
    Ok(PermOperator {
        d: d.clone(),
        sigma: sigma.clone(),
        target: apply_perm(sigma, d)?,
        perm: label_perm(d, sigma)?,
    })
}

impl PermOperator {
    pub fn n(&self) -> usize {
        self.d.n()
    }

    pub fn dims(&self) -> &Dims {
        &self.d
    }

    pub fn sigma(&self) -> &SubsystemPerm {
        &self.sigma
    }

    /// `σ(d)`, the shape in which the image should be read.
    pub fn target_dims(&self) -> &Dims {
        &self.target
    }

    pub fn label_perm(&self) -> &LabelPerm {
        &self.perm
    }

    pub fn cycles(&self) -> CycleDecomp {
        CycleDecomp::new(self.d.clone(), self.sigma.clone(), &self.perm)
    }

    pub fn apply(&self, v: &DVector<C64>) -> Result<DVector<C64>> {
        if v.len() != self.n() {
            return Err(Error::domain(format!(
                "vector of length {} does not fit N = {}",
                v.len(),
                self.n()
            )));
        }
        let mut out = DVector::zeros(self.n());
        for (l, z) in v.iter().enumerate() {
            out[self.perm.apply(l)] = *z;
        }
        Ok(out)
    }

    pub fn apply_state(&self, psi: &StateVector) -> Result<StateVector> {
        StateVector::normalized(self.apply(psi.amplitudes())?)
    }

    /// Dense 0/1 matrix with `M[π(L), L] = 1`; refused above `limits.dense_max_n`.
    pub fn dense(&self, limits: &Limits) -> Result<DMatrix<f64>> {
        let n = self.n();
        if n > limits.dense_max_n {
            return Err(Error::Budget {
                what: "dense matrix dimension",
                needed: n as u128,
                limit: limits.dense_max_n as u128,
            });
        }
        let mut m = DMatrix::zeros(n, n);
        for l in 0..n {
            m[(self.perm.apply(l), l)] = 1.0;
        }
        Ok(m)
    }

    /// For a two-slot exchange, the 1-based `(m, n)` entries where the
    /// closed-form matrix elements disagree with the image table.
    pub fn matrix_formula_disagreements(&self) -> Result<Vec<(usize, usize)>> {
        if self.d.k() != 2 || self.sigma.is_identity() {
            return Err(Error::domain("the closed-form matrix elements cover two-slot exchanges only"));
        }
        let (d1, d2) = (self.d.entries()[0], self.d.entries()[1]);
        let n = self.n();
        let mut bad = Vec::new();
        for col in 1..=n {
            let expect = self.perm.apply(col - 1) + 1;
            for row in 1..=n {
                if exchange_matrix_entry(row, col, d1, d2) != (row == expect) {
                    bad.push((row, col));
                }
            }
        }
        Ok(bad)
    }
}
