//! Parameter sweeps behind the tabulated and plotted data.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::entanglement::{
    chi1, chi2, entanglement_e1, psi_p, random_phase, reduced_density, trace_distance,
};
use crate::error::{Error, Result};
use crate::partitions::{partitions_with_k, representatives, Dims};
use crate::perm_engine::{coarse_grain_match, cycle_decomposition, SubsystemPerm};
use crate::report::{fmt_num, Csv, Grid};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimsRow {
    pub d: usize,
    pub sym: usize,
    pub antisym: usize,
}

/// Dimensions of the `+1` and `−1` eigenspaces of the `[2, d]` exchange.
pub fn dims_scan(dmax: usize) -> Result<Vec<DimsRow>> {
    if dmax < 2 {
        return Err(Error::domain(format!("dmax = {dmax} < 2")));
    }
    (2..=dmax)
        .map(|d| {
            let cd = cycle_decomposition(&Dims::bipartite(2, d)?, &SubsystemPerm::swap())?;
            Ok(DimsRow {
                d,
                sym: cd.cycles.len(),
                antisym: cd.cycles.iter().filter(|c| c.len() % 2 == 0).count(),
            })
        })
        .collect()
}

pub fn dims_csv(rows: &[DimsRow]) -> Csv {
    let mut csv = Csv::new(&["d", "sym", "antisym"]);
    for r in rows {
        csv.push(vec![r.d.to_string(), r.sym.to_string(), r.antisym.to_string()]);
    }
    csv
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceRow {
    pub p: f64,
    pub d2: f64,
    pub d3: f64,
}

/// Trace distances between the reduced states of `ψ(p)` read as `[2,3]` and
/// as `[3,2]`: `d2` compares the two-level factors, `d3` the three-level ones.
pub fn trace_distances(p: f64) -> Result<TraceRow> {
    let psi = psi_p(p)?;
    let a = Dims::bipartite(2, 3)?;
    let b = Dims::bipartite(3, 2)?;
    let d2 = trace_distance(&reduced_density(&psi, &a, &[0])?, &reduced_density(&psi, &b, &[1])?)?;
    let d3 = trace_distance(&reduced_density(&psi, &a, &[1])?, &reduced_density(&psi, &b, &[0])?)?;
    Ok(TraceRow { p, d2, d3 })
}

pub fn trace_distance_scan(grid: &Grid) -> Result<Vec<TraceRow>> {
    grid.points().into_iter().map(trace_distances).collect()
}

pub fn trace_csv(rows: &[TraceRow]) -> Csv {
    let mut csv = Csv::new(&["p", "d2", "d3"]);
    for r in rows {
        csv.push(vec![fmt_num(r.p), fmt_num(r.d2), fmt_num(r.d3)]);
    }
    csv
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChiFamily {
    /// `√p (|0> + |N−1>)/√2 + √(1−p) |Γ_N>`.
    Edges,
    /// `√p |0> + e^{iφ} √(1−p) |Γ_N>` with a seeded random `φ` per grid point.
    Phase,
}

impl std::str::FromStr for ChiFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(ChiFamily::Edges),
            "2" => Ok(ChiFamily::Phase),
            _ => Err(Error::parse(format!("family must be 1 or 2, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChiRow {
    pub p: f64,
    pub partition: Dims,
    pub e: f64,
}

/// `E_1` of a chi family over the grid, for every representative partition
/// of `N`. Rows are grouped by `p`, partitions in representative order.
pub fn chi_scan(n: usize, family: ChiFamily, grid: &Grid, seed: u64) -> Result<Vec<ChiRow>> {
    let reps: Vec<Dims> = representatives(n as u64)?
        .into_iter()
        .filter(|d| d.k() >= 2)
        .collect();
    if reps.is_empty() {
        return Err(Error::domain(format!("{n} has no factorisation into two or more parts")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for p in grid.points() {
        let psi = match family {
            ChiFamily::Edges => chi1(n, p)?,
            ChiFamily::Phase => chi2(n, p, random_phase(&mut rng))?,
        };
        for d in &reps {
            out.push(ChiRow {
                p,
                partition: d.clone(),
                e: entanglement_e1(&psi, d)?,
            });
        }
    }
    Ok(out)
}

pub fn chi_csv(rows: &[ChiRow]) -> Csv {
    let mut csv = Csv::new(&["p", "partition", "E"]);
    for r in rows {
        csv.push(vec![fmt_num(r.p), r.partition.label(), fmt_num(r.e)]);
    }
    csv
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoarseRow {
    pub coarse: Dims,
    pub sigma1: SubsystemPerm,
    pub reordered: Dims,
    pub sigma2: SubsystemPerm,
    pub verified: bool,
}

/// For every two-factor shape of `N`, the first `(σ1, σ2)` reproducing its
/// exchange on the primitive shape.
pub fn coarse_table(n: usize, limits: &Limits) -> Result<Vec<CoarseRow>> {
    let shapes = partitions_with_k(n as u64, 2)?;
    let mut out = Vec::new();
    for d in shapes {
        let swap = SubsystemPerm::swap();
        let m = coarse_grain_match(&d, &swap, limits)?
            .ok_or_else(|| Error::domain(format!("no coarse-graining pair for {d}")))?;
        let verified = m.verify(&d, &swap)?;
        out.push(CoarseRow {
            coarse: d,
            sigma1: m.sigma1,
            reordered: m.reordered,
            sigma2: m.sigma2,
            verified,
        });
    }
    Ok(out)
}
