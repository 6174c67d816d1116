//! Exchange-symmetric product states `(Σ α_i |i>) ⊗ (Σ β_j |j>)` on `[d1, d2]`.
//!
//! The coefficient of `|L>` is `α_{⌊L/d2⌋} β_{L mod d2}`; the state is symmetric
//! exactly when these products are constant along every cycle of `π(d1, d2)`.

use std::fmt;

use nalgebra::DVector;
use serde::Serialize;

use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::linalg::{integer_rank, smith_diagonal};
use crate::partitions::Dims;
use crate::perm_engine::{cycle_decomposition, SubsystemPerm};
use crate::C64;

/// The product `α_alpha · β_beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProductTerm {
    pub alpha: usize,
    pub beta: usize,
}

impl fmt::Display for ProductTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}b{}", self.alpha, self.beta)
    }
}

/// Equal products along one cycle, in cycle order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintChain {
    pub cycle: Vec<usize>,
    pub terms: Vec<ProductTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintSystem {
    pub d1: usize,
    pub d2: usize,
    /// One chain per cycle of length at least 2.
    pub chains: Vec<ConstraintChain>,
}

impl ConstraintSystem {
    /// Consecutive equalities; a cycle of length `l` contributes `l − 1`.
    pub fn equalities(&self) -> Vec<(ProductTerm, ProductTerm)> {
        self.chains
            .iter()
            .flat_map(|c| c.terms.windows(2).map(|w| (w[0], w[1])))
            .collect()
    }

    /// Rows of the log-linear system `x_a + y_b − x_a' − y_b' = 0` over
    /// `(x_0..x_{d1−1}, y_0..y_{d2−1})`, valid where all coefficients are nonzero.
    pub fn log_rows(&self) -> Vec<Vec<i64>> {
        log_rows(self.d1, self.d2, &self.equalities())
    }

    /// Whether two equality lists define the same log-linear constraints.
    pub fn equivalent_to(&self, equalities: &[(ProductTerm, ProductTerm)]) -> bool {
        let a = self.log_rows();
        let b = log_rows(self.d1, self.d2, equalities);
        let ra = integer_rank(&a);
        let rb = integer_rank(&b);
        let both: Vec<Vec<i64>> = a.iter().chain(b.iter()).cloned().collect();
        ra == rb && integer_rank(&both) == ra
    }

    /// `a0b1 = a0b2 = a1b1 = a1b0`-style rendering, one chain per line.
    pub fn render(&self) -> String {
        self.chains
            .iter()
            .map(|c| {
                c.terms
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn log_rows(d1: usize, d2: usize, eqs: &[(ProductTerm, ProductTerm)]) -> Vec<Vec<i64>> {
    eqs.iter()
        .map(|(l, r)| {
            let mut row = vec![0i64; d1 + d2];
            row[l.alpha] += 1;
            row[d1 + l.beta] += 1;
            row[r.alpha] -= 1;
            row[d1 + r.beta] -= 1;
            row
        })
        .collect()
}

fn term(label: usize, d2: usize) -> ProductTerm {
    ProductTerm {
        alpha: label / d2,
        beta: label % d2,
    }
}

/// Constraint chains for every non-trivial cycle of `π(d1, d2)`.
pub fn symmetric_product_constraints(d1: usize, d2: usize) -> Result<ConstraintSystem> {
    let cd = cycle_decomposition(&Dims::bipartite(d1, d2)?, &SubsystemPerm::swap())?;
    let chains = cd
        .cycles
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| ConstraintChain {
            cycle: c.clone(),
            terms: c.iter().map(|&l| term(l, d2)).collect(),
        })
        .collect();
    Ok(ConstraintSystem { d1, d2, chains })
}

fn normalize_coeffs(v: &[C64], len: usize, name: &str) -> Result<Vec<C64>> {
    if v.len() != len {
        return Err(Error::domain(format!("{name} has {} coefficients, expected {len}", v.len())));
    }
    let n: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if n < 1e-300 {
        return Err(Error::domain(format!("{name} is the zero vector")));
    }
    Ok(v.iter().map(|z| z / n).collect())
}

/// Whether `α ⊗ β` (each normalised first) satisfies every chain to 1e-10.
pub fn check_symmetric_product(alpha: &[C64], beta: &[C64], d1: usize, d2: usize) -> Result<bool> {
    let a = normalize_coeffs(alpha, d1, "alpha")?;
    let b = normalize_coeffs(beta, d2, "beta")?;
    let sys = symmetric_product_constraints(d1, d2)?;
    Ok(sys.equalities().iter().all(|(l, r)| {
        (a[l.alpha] * b[l.beta] - a[r.alpha] * b[r.beta]).norm() <= 1e-10
    }))
}

pub fn product_state(alpha: &[C64], beta: &[C64]) -> Result<StateVector> {
    let v = DVector::from_iterator(
        alpha.len() * beta.len(),
        alpha.iter().flat_map(|a| beta.iter().map(move |b| a * b)),
    );
    StateVector::normalized(v)
}

/// Symmetric product states whose coefficients are nonzero exactly on
/// `support_alpha × support_beta`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductFamily {
    pub support_alpha: Vec<usize>,
    pub support_beta: Vec<usize>,
    /// Continuous parameters left after fixing scale and the `α ↔ β` gauge.
    pub free_parameters: usize,
    /// Number of disconnected phase solutions.
    pub phase_components: u128,
    /// The member with uniform coefficients on the support.
    #[serde(skip)]
    pub uniform: StateVector,
}

impl ProductFamily {
    /// The family is the single uniform state.
    pub fn is_rigid(&self) -> bool {
        self.free_parameters == 0 && self.phase_components == 1
    }
}

/// Enumerates every support pattern that is a union of cycles and solves the
/// chain equalities restricted to it.
///
/// With all coefficients on the support nonzero, the chains are linear in
/// `log α`, `log β`: moduli give a real system whose null space (less the two
/// trivial directions) counts free parameters, and phases give a system
/// modulo `2π` whose extra discrete solutions are counted by the product of
/// the nonzero Smith invariants.
pub fn symmetric_product_families(d1: usize, d2: usize) -> Result<Vec<ProductFamily>> {
    let d = Dims::bipartite(d1, d2)?;
    if d1 > 16 || d2 > 16 {
        return Err(Error::Budget {
            what: "support patterns",
            needed: 1u128 << (d1 + d2),
            limit: 1u128 << 32,
        });
    }
    let cd = cycle_decomposition(&d, &SubsystemPerm::swap())?;
    let n = d.n();
    let mut cycle_of = vec![0; n];
    for (ci, c) in cd.cycles.iter().enumerate() {
        for &l in c {
            cycle_of[l] = ci;
        }
    }
    let mut out = Vec::new();
    for amask in 1u32..(1 << d1) {
        for bmask in 1u32..(1 << d2) {
            let in_support = |l: usize| amask >> (l / d2) & 1 == 1 && bmask >> (l % d2) & 1 == 1;
            let closed = (0..n)
                .filter(|&l| in_support(l))
                .all(|l| cd.cycles[cycle_of[l]].iter().all(|&m| in_support(m)));
            if !closed {
                continue;
            }
            let sa: Vec<usize> = (0..d1).filter(|i| amask >> i & 1 == 1).collect();
            let sb: Vec<usize> = (0..d2).filter(|j| bmask >> j & 1 == 1).collect();
            let eqs: Vec<(ProductTerm, ProductTerm)> = cd
                .cycles
                .iter()
                .filter(|c| c.len() > 1 && in_support(c[0]))
                .flat_map(|c| c.windows(2).map(|w| (term(w[0], d2), term(w[1], d2))))
                .collect();
            // Columns restricted to the support variables.
            let cols: Vec<usize> = sa.iter().copied().chain(sb.iter().map(|j| d1 + j)).collect();
            let rows: Vec<Vec<i64>> = log_rows(d1, d2, &eqs)
                .into_iter()
                .map(|r| cols.iter().map(|&c| r[c]).collect())
                .collect();
            let rank = integer_rank(&rows);
            let free = cols.len() - rank - 2;
            let torsion: u128 = smith_diagonal(&rows)
                .iter()
                .map(|&x| x as u128)
                .product();
            let alpha: Vec<C64> = (0..d1)
                .map(|i| C64::new(if sa.contains(&i) { 1.0 } else { 0.0 }, 0.0))
                .collect();
            let beta: Vec<C64> = (0..d2)
                .map(|j| C64::new(if sb.contains(&j) { 1.0 } else { 0.0 }, 0.0))
                .collect();
            out.push(ProductFamily {
                support_alpha: sa,
                support_beta: sb,
                free_parameters: free,
                phase_components: torsion,
                uniform: product_state(&alpha, &beta)?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(alpha: usize, beta: usize) -> ProductTerm {
        ProductTerm { alpha, beta }
    }

    fn re(v: &[f64]) -> Vec<C64> {
        v.iter().map(|&x| C64::new(x, 0.0)).collect()
    }

    #[test]
    fn chains_for_two_by_three() {
        let s = symmetric_product_constraints(2, 3).unwrap();
        assert_eq!(s.chains.len(), 1);
        assert_eq!(s.chains[0].terms, vec![t(0, 1), t(0, 2), t(1, 1), t(1, 0)]);
        assert_eq!(s.equalities().len(), 3);
        assert_eq!(s.render(), "a0b1 = a0b2 = a1b1 = a1b0");
    }

    #[test]
    fn two_by_four_reduces_to_printed_form() {
        let s = symmetric_product_constraints(2, 4).unwrap();
        assert_eq!(s.equalities().len(), 4);
        let reduced = [
            (t(0, 1), t(0, 2)),
            (t(0, 1), t(1, 0)),
            (t(0, 3), t(1, 1)),
        ];
        assert!(s.equivalent_to(&reduced));
        assert!(!s.equivalent_to(&reduced[..2]));
    }

    #[test]
    fn checks() {
        assert!(check_symmetric_product(&re(&[1.0, 1.0]), &re(&[1.0, 1.0, 1.0]), 2, 3).unwrap());
        assert!(!check_symmetric_product(&re(&[1.0, 0.0]), &re(&[0.0, 1.0, 0.0]), 2, 3).unwrap());
        assert!(check_symmetric_product(
            &re(&[0.0, 1.0, 0.0]),
            &re(&[0.0, 0.0, 1.0, 0.0, 0.0]),
            3,
            5
        )
        .unwrap());
        assert!(check_symmetric_product(&re(&[1.0, 0.0]), &re(&[1.0, 0.0, 0.0]), 2, 3).unwrap());
        assert!(check_symmetric_product(&re(&[0.0, 0.0]), &re(&[1.0, 0.0, 0.0]), 2, 3).is_err());
    }

    #[test]
    fn families_two_by_three() {
        let f = symmetric_product_families(2, 3).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|x| x.is_rigid()));
    }
}
