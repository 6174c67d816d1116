use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::next_permutation;

/// A permutation `σ ∈ S_k` of tensor slots.
///
/// Stored 0-based as the image list `images[i] = σ(i)`. Text input and output
/// use 1-based slots, matching the usual cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsystemPerm {
    images: Vec<usize>,
}

impl SubsystemPerm {
    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::domain(format!("{images:?} is not a permutation of 0..{k}")));
            }
            seen[i] = true;
        }
        if k == 0 {
            return Err(Error::domain("a permutation needs at least one slot"));
        }
        Ok(SubsystemPerm { images })
    }

    /// From 1-based images, as typed on the command line (`2,3,1` is `(1,2,3)`).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::domain(format!("slot numbers are 1-based, got {images:?}")));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// From 1-based cycles; slots not mentioned are fixed.
    pub fn from_cycles(k: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut touched = vec![false; k];
        for cyc in cycles {
            for (pos, &s) in cyc.iter().enumerate() {
                if s == 0 || s > k || touched[s - 1] {
                    return Err(Error::domain(format!("bad cycle {cyc:?} for k = {k}")));
                }
                touched[s - 1] = true;
                images[s - 1] = cyc[(pos + 1) % cyc.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn identity(k: usize) -> Self {
        SubsystemPerm {
            images: (0..k).collect(),
        }
    }

    /// The transposition of two slots.
    pub fn swap() -> Self {
        SubsystemPerm { images: vec![1, 0] }
    }

    /// `σ_c = (1,2,..,k)`: slot `i` moves to slot `i+1`, the last wraps to 1.
    pub fn cyclic_shift(k: usize) -> Self {
        SubsystemPerm {
            images: (0..k).map(|i| (i + 1) % k).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for a 0-based slot.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.k()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s] = i;
        }
        SubsystemPerm { images: inv }
    }

    /// `self ∘ other`, i.e. `other` acts first.
    pub fn compose(&self, other: &SubsystemPerm) -> Result<Self> {
        if self.k() != other.k() {
            return Err(Error::domain(format!(
                "cannot compose permutations of {} and {} slots",
                self.k(),
                other.k()
            )));
        }
        Ok(SubsystemPerm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// `+1` for even, `-1` for odd permutations.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 1-based cycles, each starting at its smallest slot, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.k()];
        let mut out = Vec::new();
        for start in 0..self.k() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            out.push(cyc);
        }
        out
    }

    /// All of `S_k` in lexicographic order of image lists; identity first.
    pub fn all(k: usize) -> impl Iterator<Item = SubsystemPerm> {
        let mut cur: Option<Vec<usize>> = Some((0..k).collect());
        std::iter::from_fn(move || {
            let out = cur.take()?;
            let mut next = out.clone();
            if next_permutation(&mut next) {
                cur = Some(next);
            }
            Some(SubsystemPerm { images: out })
        })
    }

    /// Full cycle notation with fixed points, e.g. `((1),(2),(3,4))`.
    pub fn full_notation(&self) -> String {
        let body = self
            .cycles()
            .iter()
            .map(|c| format!("({})", join(c)))
            .collect::<Vec<_>>()
            .join(",");
        format!("({body})")
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SubsystemPerm {
    /// A single cycle through every slot prints bare, e.g. `(1,4,3,2)`;
    /// anything else prints in full notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.len() == 1 && self.k() > 1 {
            write!(f, "({})", join(&cycles[0]))
        } else {
            write!(f, "{}", self.full_notation())
        }
    }
}

impl FromStr for SubsystemPerm {
    type Err = Error;

    /// Accepts a 1-based image list (`2,3,1`) or cycle notation (`(1,2,3)`,
    /// `((1),(2),(3,4))`). Cycle notation infers `k` from the largest slot.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles = crate::perm_engine::parse_cycle_notation(s)?;
            let k = cycles.iter().flatten().copied().max().unwrap_or(0);
            let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            return SubsystemPerm::from_cycles(k, &refs);
        }
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad slot {t:?} in permutation {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SubsystemPerm::from_one_based(&images)
            .map_err(|e| Error::parse(format!("{s:?}: {e}")))
    }
}

impl Serialize for SubsystemPerm {
    /// Serialized as the 1-based image list.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}
