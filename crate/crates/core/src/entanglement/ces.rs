//! Completely entangled subspaces (no product vectors) of `C^d1 ⊗ C^d2`.

use nalgebra::DVector;

use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::linalg::{complement, intersection, orthonormalize};
use crate::C64;

fn vectors(basis: &[StateVector]) -> Vec<DVector<C64>> {
    basis.iter().map(|s| s.amplitudes().clone()).collect()
}

fn wrap(v: Vec<DVector<C64>>) -> Vec<StateVector> {
    v.into_iter()
        .map(|x| StateVector::normalized(x).expect("orthonormal vectors are nonzero"))
        .collect()
}

fn check_dims(d1: usize, d2: usize) -> Result<()> {
    if d1 < 2 || d2 < 2 {
        return Err(Error::domain(format!("CES needs d1, d2 >= 2, got [{d1},{d2}]")));
    }
    Ok(())
}

/// The largest CES `R_[d1,d2]`: the orthogonal complement of the anti-diagonal
/// sums `Σ_{i1+i2=n} |i1 i2>`, `n = 0..d1+d2−2`. Dimension `(d1−1)(d2−1)`.
pub fn ces_orthocomplement_basis(d1: usize, d2: usize) -> Result<Vec<StateVector>> {
    check_dims(d1, d2)?;
    let n = d1 * d2;
    let sums: Vec<DVector<C64>> = (0..=d1 + d2 - 2)
        .map(|s| {
            DVector::from_fn(n, |l, _| {
                let (i, j) = (l / d2, l % d2);
                C64::new(if i + j == s { 1.0 } else { 0.0 }, 0.0)
            })
        })
        .collect();
    let span = orthonormalize(&sums, 1e-10);
    Ok(wrap(complement(&span, n)))
}

fn pair(n: usize, plus: usize, minus: usize) -> StateVector {
    let r = 0.5f64.sqrt();
    let mut v = DVector::zeros(n);
    v[plus] = C64::new(r, 0.0);
    v[minus] = C64::new(-r, 0.0);
    StateVector::new(v).expect("unit by construction")
}

/// `(|0,i> − |1,i−1>)/√2`, `i = 1..d−1`, in `[2, d]`.
pub fn ces_qubit_qudit_basis(d: usize) -> Result<Vec<StateVector>> {
    check_dims(2, d)?;
    Ok((1..d).map(|i| pair(2 * d, i, d + i - 1)).collect())
}

/// `(|i−1,1> − |i,0>)/√2`, `i = 1..d−1`, in `[d, 2]`.
pub fn ces_qudit_qubit_basis(d: usize) -> Result<Vec<StateVector>> {
    check_dims(d, 2)?;
    Ok((1..d).map(|i| pair(2 * d, 2 * i - 1, 2 * i)).collect())
}

/// `R_[2,d] ∩ R_[d,2]` via principal angles between the two bases.
pub fn ces_intersection_qubit_qudit(d: usize) -> Result<Vec<StateVector>> {
    let a = vectors(&ces_qubit_qudit_basis(d)?);
    let b = vectors(&ces_qudit_qubit_basis(d)?);
    Ok(wrap(intersection(&a, &b, 2 * d, 1e-9)))
}

/// Closed-form description of the intersection: for odd `d` the vectors
/// `½(|2i−1> − |2i> − |d+2i−2> + |d+2i−1>)`, `i = 1..(d−1)/2`; for even `d` the
/// alternating sum over `|1>..|2(d−1)>`.
pub fn ces_intersection_closed_form(d: usize) -> Result<Vec<StateVector>> {
    check_dims(2, d)?;
    let n = 2 * d;
    if d % 2 == 1 {
        Ok((1..=(d - 1) / 2)
            .map(|i| {
                let mut v = vec![0.0; n];
                v[2 * i - 1] = 0.5;
                v[2 * i] = -0.5;
                v[d + 2 * i - 2] = -0.5;
                v[d + 2 * i - 1] = 0.5;
                StateVector::from_real(&v).expect("nonzero")
            })
            .collect())
    } else {
        let mut v = vec![0.0; n];
        for (i, x) in v.iter_mut().enumerate().take(2 * (d - 1) + 1).skip(1) {
            *x = if i % 2 == 1 { 1.0 } else { -1.0 };
        }
        Ok(vec![StateVector::from_real(&v)?])
    }
}

/// Basis of the antisymmetric subspace `(|ij> − |ji>)/√2`, `i > j`, of `[d, d]`.
pub fn antisymmetric_pairs(d: usize) -> Result<Vec<StateVector>> {
    check_dims(d, d)?;
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..i {
            out.push(pair(d * d, i * d + j, j * d + i));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::projector;

    #[test]
    fn dimensions() {
        for d1 in 2..=5 {
            for d2 in 2..=5 {
                assert_eq!(ces_orthocomplement_basis(d1, d2).unwrap().len(), (d1 - 1) * (d2 - 1));
            }
        }
    }

    #[test]
    fn printed_qubit_qudit_basis_spans_complement() {
        for d in 2..=6 {
            let printed = vectors(&ces_qubit_qudit_basis(d).unwrap());
            let computed = vectors(&ces_orthocomplement_basis(2, d).unwrap());
            let diff = projector(&printed, 2 * d) - projector(&computed, 2 * d);
            assert!(diff.camax() < 1e-12, "d = {d}");
            let printed = vectors(&ces_qudit_qubit_basis(d).unwrap());
            let computed = vectors(&ces_orthocomplement_basis(d, 2).unwrap());
            let diff = projector(&printed, 2 * d) - projector(&computed, 2 * d);
            assert!(diff.camax() < 1e-12, "d = {d}");
        }
    }

    #[test]
    fn intersections() {
        let i2 = ces_intersection_qubit_qudit(2).unwrap();
        assert_eq!(i2.len(), 1);
        assert!((i2[0].amplitudes()[1].norm() - 0.5f64.sqrt()).abs() < 1e-12);
        for d in 2..=7 {
            let got = vectors(&ces_intersection_qubit_qudit(d).unwrap());
            let expect = vectors(&ces_intersection_closed_form(d).unwrap());
            assert_eq!(got.len(), if d % 2 == 1 { (d - 1) / 2 } else { 1 });
            let diff = projector(&got, 2 * d) - projector(&expect, 2 * d);
            assert!(diff.camax() < 1e-9, "d = {d}");
        }
    }
}
