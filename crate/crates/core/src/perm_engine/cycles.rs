use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Dims;
use crate::perm_engine::SubsystemPerm;

/// A permutation of basis labels `0..N`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelPerm {
    image: Vec<usize>,
}

impl LabelPerm {
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            if i >= n || seen[i] {
                return Err(Error::domain("image table is not a bijection"));
            }
            seen[i] = true;
        }
        Ok(LabelPerm { image })
    }

    pub(crate) fn from_images_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(image.clone()).is_ok());
        LabelPerm { image }
    }

    pub fn identity(n: usize) -> Self {
        LabelPerm {
            image: (0..n).collect(),
        }
    }

    /// Builds the permutation from disjoint cycles covering `0..n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cyc in cycles {
            for (pos, &l) in cyc.iter().enumerate() {
                if l >= n || seen[l] {
                    return Err(Error::domain(format!("cycle {cyc:?} is not disjoint within 0..{n}")));
                }
                seen[l] = true;
                image[l] = cyc[(pos + 1) % cyc.len()];
            }
        }
        Ok(LabelPerm { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, label: usize) -> usize {
        self.image[label]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (l, &m) in self.image.iter().enumerate() {
            inv[m] = l;
        }
        LabelPerm { image: inv }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &LabelPerm) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::domain("cannot compose label permutations of different size"));
        }
        Ok(LabelPerm {
            image: other.image.iter().map(|&l| self.image[l]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// Canonical cycles: each starts at its minimum, sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        // Scanning starts in increasing order, so each cycle is discovered at its minimum.
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut l = start;
            while !seen[l] {
                seen[l] = true;
                cyc.push(l);
                l = self.image[l];
            }
            out.push(cyc);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `π(d, σ)` as disjoint cycles over `0..N` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomp {
    pub d: Dims,
    pub sigma: SubsystemPerm,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomp {
    pub fn new(d: Dims, sigma: SubsystemPerm, perm: &LabelPerm) -> Self {
        CycleDecomp {
            d,
            sigma,
            cycles: perm.cycles(),
        }
    }

    pub fn n(&self) -> usize {
        self.d.n()
    }

    pub fn to_label_perm(&self) -> LabelPerm {
        LabelPerm::from_cycles(self.n(), &self.cycles).expect("canonical cycles are disjoint")
    }

    /// Number of cycles of each length.
    pub fn length_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in &self.cycles {
            *m.entry(c.len()).or_insert(0) += 1;
        }
        m
    }

    pub fn order(&self) -> u64 {
        self.cycles
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Parenthesised notation, e.g. `((0),(1,2,4,3),(5))`.
    pub fn notation(&self) -> String {
        render_cycles(&self.cycles)
    }
}

impl fmt::Display for CycleDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

pub fn render_cycles(cycles: &[Vec<usize>]) -> String {
    let body = cycles
        .iter()
        .map(|c| {
            let inner = c.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",");
            format!("({inner})")
        })
        .collect::<Vec<_>>()
        .join(",");
    format!("({body})")
}

/// Rotates each cycle to start at its minimum and sorts cycles by that minimum.
pub fn canonicalize(cycles: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = cycles
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            let pos = c
                .iter()
                .enumerate()
                .min_by_key(|(_, &l)| l)
                .map(|(i, _)| i)
                .unwrap();
            let mut r = c.clone();
            r.rotate_left(pos);
            r
        })
        .collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// Parses `((0),(1,2,4,3),(5))`, `(1,2,3)` or `(1,4,2)(3,5,6)`.
pub fn parse_cycle_notation(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur: Option<String> = None;
    for ch in s.trim().chars() {
        match ch {
            '(' => {
                depth += 1;
                cur = Some(String::new());
            }
            ')' => {
                if depth == 0 {
                    return Err(Error::parse(format!("unbalanced ')' in {s:?}")));
                }
                depth -= 1;
                if let Some(body) = cur.take() {
                    let cyc = body
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<usize>()
                                .map_err(|_| Error::parse(format!("bad element {t:?} in {s:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    out.push(cyc);
                }
            }
            ',' | ' ' if cur.is_none() => {}
            c => match cur.as_mut() {
                Some(b) => b.push(c),
                None => return Err(Error::parse(format!("unexpected {c:?} in {s:?}"))),
            },
        }
    }
    if depth != 0 {
        return Err(Error::parse(format!("unbalanced '(' in {s:?}")));
    }
    if out.is_empty() {
        return Err(Error::parse(format!("no cycles in {s:?}")));
    }
    Ok(out)
}
