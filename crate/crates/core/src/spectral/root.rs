use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm_engine::cycles::gcd;
use crate::perm_engine::CycleDecomp;
use crate::C64;

/// `e^{2πi m/l}` kept as an exact reduced fraction `m/l`, `0 ≤ m < l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RootOfUnity {
    order: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, exponent: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::domain("root of unity needs order >= 1"));
        }
        let e = exponent % order;
        let g = gcd(e, order);
        Ok(if e == 0 {
            RootOfUnity {
                order: 1,
                exponent: 0,
            }
        } else {
            RootOfUnity {
                order: order / g,
                exponent: e / g,
            }
        })
    }

    pub fn one() -> Self {
        RootOfUnity {
            order: 1,
            exponent: 0,
        }
    }

    pub fn minus_one() -> Self {
        RootOfUnity {
            order: 2,
            exponent: 1,
        }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn value(&self) -> C64 {
        C64::from_polar(1.0, TAU * self.exponent as f64 / self.order as f64)
    }

    pub fn conj(&self) -> Self {
        RootOfUnity::new(self.order, self.order - self.exponent).expect("order is positive")
    }

    pub fn pow(&self, k: u64) -> Self {
        RootOfUnity::new(
            self.order,
            ((self.exponent as u128 * k as u128) % self.order as u128) as u64,
        )
        .expect("order is positive")
    }
}

impl Ord for RootOfUnity {
    /// By angle in `[0, 2π)`.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.exponent as u128 * other.order as u128)
            .cmp(&(other.exponent as u128 * self.order as u128))
    }
}

impl PartialOrd for RootOfUnity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (4, 1) => write!(f, "i"),
            (4, 3) => write!(f, "-i"),
            (l, m) => write!(f, "exp(2pi*i*{m}/{l})"),
        }
    }
}

impl FromStr for RootOfUnity {
    type Err = Error;

    /// `1`, `-1`, `i`, `-i`, or `m/l` for `e^{2πi m/l}`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Self::one()),
            "-1" => Ok(Self::minus_one()),
            "i" => RootOfUnity::new(4, 1),
            "-i" => RootOfUnity::new(4, 3),
            t => {
                let (m, l) = t
                    .split_once('/')
                    .ok_or_else(|| Error::parse(format!("bad eigenvalue {t:?}; use 1, -1, i, -i or m/l")))?;
                let m: u64 = m.trim().parse().map_err(|_| Error::parse(format!("bad exponent in {t:?}")))?;
                let l: u64 = l.trim().parse().map_err(|_| Error::parse(format!("bad order in {t:?}")))?;
                RootOfUnity::new(l, m).map_err(|e| Error::parse(e.to_string()))
            }
        }
    }
}

/// Eigenvalues with multiplicities, ordered by angle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub entries: Vec<(RootOfUnity, usize)>,
}

impl Spectrum {
    /// Every cycle of length `l` contributes each `l`-th root of unity once.
    pub fn from_cycles(cd: &CycleDecomp) -> Self {
        let mut m: BTreeMap<RootOfUnity, usize> = BTreeMap::new();
        for (l, count) in cd.length_counts() {
            for e in 0..l as u64 {
                *m.entry(RootOfUnity::new(l as u64, e).unwrap()).or_insert(0) += count;
            }
        }
        Spectrum {
            entries: m.into_iter().collect(),
        }
    }

    pub fn multiplicity(&self, eta: &RootOfUnity) -> usize {
        self.entries
            .iter()
            .find(|(r, _)| r == eta)
            .map(|&(_, c)| c)
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    /// Each eigenvalue repeated by multiplicity, as complex numbers.
    pub fn values(&self) -> Vec<C64> {
        self.entries
            .iter()
            .flat_map(|(r, c)| std::iter::repeat_n(r.value(), *c))
            .collect()
    }
}
