//! Small dense helpers: orthonormal bases, complements, subspace intersection,
//! eigenvalues, and exact integer elimination.

use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen, SVD};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::C64;

/// Gram-Schmidt with one re-orthogonalisation pass. Vectors whose residual
/// norm falls below `tol` are dropped.
pub fn orthonormalize(vectors: &[DVector<C64>], tol: f64) -> Vec<DVector<C64>> {
    let mut out: Vec<DVector<C64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                let c = q.dotc(&w);
                w.axpy(-c, q, C64::new(1.0, 0.0));
            }
        }
        let norm = w.norm();
        if norm > tol {
            out.push(w.unscale(norm));
        }
    }
    out
}

/// Orthonormal basis of the complement of `span(basis)` in `C^n`.
/// `basis` must already be orthonormal.
pub fn complement(basis: &[DVector<C64>], n: usize) -> Vec<DVector<C64>> {
    let mut all = basis.to_vec();
    let k = all.len();
    for i in 0..n {
        if all.len() == n {
            break;
        }
        let e = DVector::from_fn(n, |r, _| C64::new(if r == i { 1.0 } else { 0.0 }, 0.0));
        let mut w = e;
        for _ in 0..2 {
            for q in &all {
                let c = q.dotc(&w);
                w.axpy(-c, q, C64::new(1.0, 0.0));
            }
        }
        let norm = w.norm();
        if norm > 1e-8 {
            all.push(w.unscale(norm));
        }
    }
    all.split_off(k)
}

/// Columns as a matrix.
pub fn basis_matrix(vectors: &[DVector<C64>], n: usize) -> DMatrix<C64> {
    let mut m = DMatrix::zeros(n, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        m.set_column(j, v);
    }
    m
}

/// `Σ |v><v|` over an orthonormal list.
pub fn projector(vectors: &[DVector<C64>], n: usize) -> DMatrix<C64> {
    let b = basis_matrix(vectors, n);
    &b * b.adjoint()
}

/// Intersection of two subspaces given by orthonormal bases. A direction is
/// shared when its principal cosine is at least `1 − tol`.
pub fn intersection(a: &[DVector<C64>], b: &[DVector<C64>], n: usize, tol: f64) -> Vec<DVector<C64>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let qa = basis_matrix(a, n);
    let qb = basis_matrix(b, n);
    let m = qa.adjoint() * &qb;
    let svd = SVD::new(m, true, false);
    let u = svd.u.expect("left singular vectors requested");
    let picked: Vec<DVector<C64>> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= 1.0 - tol)
        .map(|(i, _)| &qa * u.column(i))
        .collect();
    orthonormalize(&picked, 1e-8)
}

/// Numerical rank from singular values above `tol`.
pub fn rank<T: nalgebra::ComplexField<RealField = f64>>(m: &DMatrix<T>, tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    SVD::new(m.clone(), false, false)
        .singular_values
        .iter()
        .filter(|&&s| s > tol)
        .count()
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Eigenvalues of a general real matrix.
///
/// Permutation matrices are a known hard case for unshifted QR sweeps; if the
/// Schur iteration stalls the matrix is conjugated by a random orthogonal
/// matrix (same spectrum) and retried.
pub fn real_eigenvalues_complex(m: &DMatrix<f64>) -> Vec<C64> {
    let n = m.nrows();
    if let Some(s) = Schur::try_new(m.clone(), 1e-15, 10_000 * n.max(1)) {
        return s.complex_eigenvalues().iter().copied().collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..8 {
        let g = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(&mut rng));
        let q = g.qr().q();
        let conj = q.transpose() * m * &q;
        if let Some(s) = Schur::try_new(conj, 1e-15, 10_000 * n.max(1)) {
            return s.complex_eigenvalues().iter().copied().collect();
        }
    }
    panic!("Schur iteration failed to converge on a {n}x{n} matrix");
}

/// Largest eigenvalue magnitude of a real matrix.
pub fn spectral_radius_real(m: &DMatrix<f64>) -> f64 {
    real_eigenvalues_complex(m)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Rank over the rationals of an integer matrix (fraction-free elimination).
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..nrows {
            if i != r && a[i][c] != 0 {
                let (f, g) = (a[r][c], a[i][c]);
                for j in 0..ncols {
                    a[i][j] = a[i][j] * f - a[r][j] * g;
                }
                let h = a[i].iter().fold(0i128, |acc, &x| gcd_i(acc, x));
                if h > 1 {
                    a[i].iter_mut().for_each(|x| *x /= h);
                }
            }
        }
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

fn gcd_i(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Nonzero diagonal entries of an integer diagonalisation (Smith form up to
/// the divisibility ordering). Their product is the order of the torsion part
/// of `Z^n / rowspace`.
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let m = a.len();
    if m == 0 {
        return Vec::new();
    }
    let n = a[0].len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..m {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in t..n {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    done = false;
                    if a[i][t].abs() < a[t][t].abs() {
                        a.swap(t, i);
                    }
                }
            }
            for j in t + 1..n {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    done = false;
                    if a[t][j].abs() < a[t][t].abs() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if done {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}
