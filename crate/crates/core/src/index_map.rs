//! Flat basis labels of `C^N` versus mixed-radix multi-indices of a shape.
//!
//! Slot 1 is the most significant digit, so `L = Σ_r i_r · Π_{j>r} d_j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Dims;

/// A product basis element `|i1 i2 .. ik>_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiIndex {
    indices: Vec<usize>,
    shape: Dims,
}

impl MultiIndex {
    pub fn new(indices: Vec<usize>, shape: Dims) -> Result<Self> {
        if indices.len() != shape.k() {
            return Err(Error::domain(format!(
                "multi-index {indices:?} has {} digits but shape {shape} has {} slots",
                indices.len(),
                shape.k()
            )));
        }
        if let Some((r, _)) = indices
            .iter()
            .zip(shape.entries())
            .enumerate()
            .find(|(_, (i, d))| *i >= *d)
        {
            return Err(Error::domain(format!(
                "digit {} of {indices:?} is out of range for shape {shape}",
                r + 1
            )));
        }
        Ok(MultiIndex { indices, shape })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn shape(&self) -> &Dims {
        &self.shape
    }

    /// Ket notation, e.g. `|101>`; digits above 9 are comma separated.
    pub fn ket(&self) -> String {
        let sep = if self.shape.max_entry() > 10 { "," } else { "" };
        let body = self
            .indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(sep);
        format!("|{body}>")
    }
}

fn check_label(label: usize, n: usize) -> Result<()> {
    if label >= n {
        return Err(Error::domain(format!("label {label} is outside 0..{n}")));
    }
    Ok(())
}

/// Mixed-radix digits of `label` in `shape`, most significant first.
pub fn flat_to_multi(label: usize, shape: &Dims) -> Result<MultiIndex> {
    check_label(label, shape.n())?;
    let mut indices = vec![0; shape.k()];
    digits_into(label, shape.entries(), &mut indices);
    Ok(MultiIndex {
        indices,
        shape: shape.clone(),
    })
}

pub fn multi_to_flat(m: &MultiIndex) -> usize {
    from_digits(&m.indices, m.shape.entries())
}

/// `(⌊L/d2⌋, L mod d2)`.
pub fn bipartite_flat_to_pair(label: usize, d1: usize, d2: usize) -> Result<(usize, usize)> {
    let n = d1
        .checked_mul(d2)
        .ok_or_else(|| Error::domain("d1 * d2 overflows"))?;
    check_label(label, n)?;
    Ok((label / d2, label % d2))
}

pub fn bipartite_pair_to_flat(i: usize, j: usize, d1: usize, d2: usize) -> Result<usize> {
    if i >= d1 || j >= d2 {
        return Err(Error::domain(format!(
            "pair ({i},{j}) is out of range for [{d1},{d2}]"
        )));
    }
    Ok(i * d2 + j)
}

/// Unchecked digit extraction into a caller-owned buffer.
#[inline]
pub(crate) fn digits_into(mut label: usize, radices: &[usize], out: &mut [usize]) {
    for r in (0..radices.len()).rev() {
        out[r] = label % radices[r];
        label /= radices[r];
    }
}

#[inline]
pub(crate) fn from_digits(digits: &[usize], radices: &[usize]) -> usize {
    digits
        .iter()
        .zip(radices)
        .fold(0, |acc, (&i, &d)| acc * d + i)
}
