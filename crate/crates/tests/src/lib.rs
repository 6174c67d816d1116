//! Reference computations used by the acceptance gate. They deliberately
//! avoid the library's own shortcuts: dense eigenvalues instead of cycle
//! spectra, explicit Kronecker powers, plain shape enumeration.

use nalgebra::{DMatrix, DVector};
use permsym::entanglement::haar_random_state_with;
use permsym::partitions::all_partitions;
use permsym::{Dims, C64};
use rand_chacha::ChaCha8Rng;

/// Ordered pairs `(d1, d2)`, both at least 2, with `d1 * d2 <= max_n`.
pub fn bipartitions(max_n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for d1 in 2..=max_n / 2 {
        for d2 in 2..=max_n / d1 {
            v.push((d1, d2));
        }
    }
    v
}

/// Every shape with at least two slots and `4 <= N <= max_n`.
pub fn shapes_up_to(max_n: usize) -> Vec<Dims> {
    (4..=max_n as u64)
        .flat_map(|n| all_partitions(n).expect("n >= 2"))
        .filter(|d| d.k() >= 2)
        .collect()
}

/// Greedy nearest matching of two complex multisets within `tol`.
pub fn multiset_match(a: &[C64], b: &[C64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let best = b
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|(_, p), (_, q)| (*p - x).norm().total_cmp(&(*q - x).norm()));
        match best {
            Some((i, y)) if (y - x).norm() <= tol => used[i] = true,
            _ => return false,
        }
    }
    true
}

/// Unitary from the QR factor of a complex Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<C64> {
    let cols: Vec<DVector<C64>> = (0..n)
        .map(|_| haar_random_state_with(n, rng).expect("n > 0").into_amplitudes())
        .collect();
    DMatrix::from_columns(&cols).qr().q()
}

/// `u ⊗ u ⊗ .. ⊗ u`, `k` factors.
pub fn kron_power(u: &DMatrix<C64>, k: usize) -> DMatrix<C64> {
    let mut out = u.clone();
    for _ in 1..k {
        out = out.kronecker(u);
    }
    out
}

pub fn real_diag(v: &[f64]) -> DMatrix<C64> {
    DMatrix::from_diagonal(&DVector::from_iterator(v.len(), v.iter().map(|&x| C64::new(x, 0.0))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn helpers() {
        assert!(bipartitions(6).contains(&(2, 3)) && bipartitions(6).contains(&(3, 2)));
        assert!(!bipartitions(6).contains(&(2, 4)));
        let a = [C64::new(1.0, 0.0), C64::new(-1.0, 0.0)];
        let b = [C64::new(-1.0, 1e-12), C64::new(1.0, 0.0)];
        assert!(multiset_match(&a, &b, 1e-9));
        assert!(!multiset_match(&a, &b[..1], 1e-9));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_unitary(3, &mut rng);
        assert!((&u * u.adjoint() - DMatrix::identity(3, 3)).camax() < 1e-12);
        assert_eq!(kron_power(&u, 2).nrows(), 9);
    }
}
