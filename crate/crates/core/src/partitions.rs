//! Multiplicative partitions of `N`: ordered shapes, permutation classes and
//! the primitive (all-prime) decomposition.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm_engine::SubsystemPerm;
use crate::Limits;

/// An ordered multiplicative partition `[d1, .., dk]` of `N`, i.e. the shape of
/// the tensor-product space `C^d1 ⊗ .. ⊗ C^dk`.
///
/// Every entry is at least 2, there are at least two entries and the product
/// never exceeds the configured `N` limit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Dims {
    entries: Vec<usize>,
    n: usize,
}

impl Dims {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        Self::with_limit(entries, Limits::default().max_n)
    }

    pub fn with_limit(entries: Vec<usize>, max_n: u64) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::domain(format!(
                "a tensor-product shape needs at least two subsystems, got {entries:?}"
            )));
        }
        let mut n: u64 = 1;
        for &d in &entries {
            if d < 2 {
                return Err(Error::domain(format!(
                    "subsystem dimensions must be at least 2, got {entries:?}"
                )));
            }
            n = n
                .checked_mul(d as u64)
                .filter(|&n| n <= max_n)
                .ok_or_else(|| {
                    Error::domain(format!("product of {entries:?} exceeds the N limit {max_n}"))
                })?;
        }
        Ok(Dims {
            entries,
            n: n as usize,
        })
    }

    /// Bipartite shape `[d1, d2]`.
    pub fn bipartite(d1: usize, d2: usize) -> Result<Self> {
        Self::new(vec![d1, d2])
    }

    /// Homogeneous shape `[d; k]`.
    pub fn homogeneous(d: usize, k: usize) -> Result<Self> {
        Self::new(vec![d; k])
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of subsystems, `n(d)`.
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// Total dimension `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_homogeneous(&self) -> bool {
        self.entries.iter().all(|&d| d == self.entries[0])
    }

    pub fn min_entry(&self) -> usize {
        *self.entries.iter().min().unwrap()
    }

    pub fn max_entry(&self) -> usize {
        *self.entries.iter().max().unwrap()
    }

    /// Product of the entries at the given (0-based) slots.
    pub fn product_of(&self, slots: &[usize]) -> usize {
        slots.iter().map(|&s| self.entries[s]).product()
    }

    /// `σ(d)`; see [`apply_perm`].
    pub fn permuted(&self, sigma: &SubsystemPerm) -> Result<Dims> {
        apply_perm(sigma, self)
    }

    /// Shape label used in CSV output, e.g. `2x2x3`.
    pub fn label(&self) -> String {
        self.entries
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn is_sorted(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Dims {
    type Err = Error;

    /// Parses `2,2,3`, `[2,2,3]` or `2x2x3`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let entries = body
            .split([',', 'x'])
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad dimension {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Dims::new(entries)
    }
}

impl TryFrom<Vec<usize>> for Dims {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Dims::new(v)
    }
}

impl From<Dims> for Vec<usize> {
    fn from(d: Dims) -> Self {
        d.entries
    }
}

/// The permutation class `E(d_e)` of a shape: every distinct reordering of its
/// entries, labelled by the non-decreasing representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionClass {
    pub representative: Dims,
    pub members: Vec<Dims>,
}

impl PartitionClass {
    pub fn contains(&self, d: &Dims) -> bool {
        self.members.binary_search(d).is_ok()
    }
}

/// Prime factors of `n` with multiplicity, in non-decreasing order.
/// The length of the result is `Ω(n)`.
pub fn prime_factor_multiset(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::domain(format!("prime factorisation needs N >= 2, got {n}")));
    }
    let mut out = Vec::new();
    let mut rem = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rem {
        while rem % p == 0 {
            out.push(p);
            rem /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rem > 1 {
        out.push(rem);
    }
    Ok(out)
}

/// `Ω(n)`, the number of prime factors counted with multiplicity.
pub fn omega(n: u64) -> Result<usize> {
    Ok(prime_factor_multiset(n)?.len())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factor_multiset(n).map(|f| f.len() == 1).unwrap_or(false)
}

/// The primitive decomposition `d_p`: the sorted prime factors of `N` as a shape.
pub fn primitive_partition(n: u64) -> Result<Dims> {
    let factors = prime_factor_multiset(n)?;
    if factors.len() < 2 {
        return Err(Error::domain(format!(
            "N = {n} is prime; it admits no tensor-product shape"
        )));
    }
    Dims::new(factors.into_iter().map(|p| p as usize).collect())
}

/// Every ordered multiplicative partition of `N` with at least two factors,
/// each at least 2, in lexicographic order.
///
/// Prime `N` has none and yields an empty list.
pub fn all_partitions(n: u64) -> Result<Vec<Dims>> {
    if n < 2 {
        return Err(Error::domain(format!("N must be at least 2, got {n}")));
    }
    if n > Limits::default().max_n {
        return Err(Error::domain(format!("N = {n} exceeds the N limit")));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    ordered_factorisations(n as usize, &mut prefix, &mut out);
    // `[N]` itself is produced last among sequences starting with N; drop length-1 tuples.
    Ok(out
        .into_iter()
        .filter(|v| v.len() >= 2)
        .map(|v| Dims::new(v).expect("factorisation entries are valid"))
        .collect())
}

fn ordered_factorisations(rem: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rem == 1 {
        out.push(prefix.clone());
        return;
    }
    for f in 2..=rem {
        if rem % f == 0 {
            prefix.push(f);
            ordered_factorisations(rem / f, prefix, out);
            prefix.pop();
        }
    }
}

/// `P_k(N)`: ordered partitions with exactly `k` factors. Out-of-range `k`
/// gives an empty list.
pub fn partitions_with_k(n: u64, k: usize) -> Result<Vec<Dims>> {
    Ok(all_partitions(n)?
        .into_iter()
        .filter(|d| d.k() == k)
        .collect())
}

/// All distinct reorderings of `d`, with the sorted representative.
pub fn equivalence_class(d: &Dims) -> PartitionClass {
    let mut sorted = d.entries().to_vec();
    sorted.sort_unstable();
    let mut members = Vec::new();
    let mut cur = sorted.clone();
    loop {
        members.push(Dims::new(cur.clone()).expect("reordering keeps validity"));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    PartitionClass {
        representative: Dims::new(sorted).expect("reordering keeps validity"),
        members,
    }
}

/// Classes of `P(N)` (all `k`), ordered by representative.
pub fn classes(n: u64) -> Result<Vec<PartitionClass>> {
    let reps: BTreeSet<Dims> = all_partitions(n)?
        .into_iter()
        .filter(|d| d.is_sorted())
        .collect();
    Ok(reps.iter().map(equivalence_class).collect())
}

/// Representative (sorted) partitions of `N`, in lexicographic order.
pub fn representatives(n: u64) -> Result<Vec<Dims>> {
    Ok(all_partitions(n)?
        .into_iter()
        .filter(|d| d.is_sorted())
        .collect())
}

/// `σ(d) = [d_{σ⁻¹(1)}, .., d_{σ⁻¹(k)}]`.
pub fn apply_perm(sigma: &SubsystemPerm, d: &Dims) -> Result<Dims> {
    if sigma.k() != d.k() {
        return Err(Error::domain(format!(
            "permutation acts on {} slots but shape {d} has {}",
            sigma.k(),
            d.k()
        )));
    }
    let inv = sigma.inverse();
    let entries = (0..d.k()).map(|r| d.entries()[inv.apply(r)]).collect();
    Ok(Dims {
        entries,
        n: d.n(),
    })
}

/// Lexicographic successor in place; `false` once the last ordering is reached.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
