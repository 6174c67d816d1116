//! Text renderings shared by the command-line front-end: CSV numbers, grids
//! and JSON payloads.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm_engine::CycleDecomp;
use crate::spectral::{RootOfUnity, Spectrum};

/// Rounds to 12 significant digits and prints without an exponent.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        "0".to_string()
    } else {
        r.to_string()
    }
}

/// `start:stop:steps` with `steps >= 2` points, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::parse(format!("a grid needs at least 2 points, got {steps}")));
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err(Error::parse("grid ends must be finite"));
        }
        Ok(Grid { start, stop, steps })
    }

    pub fn points(&self) -> Vec<f64> {
        let h = (self.stop - self.start) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i == self.steps - 1 {
                    self.stop
                } else {
                    self.start + i as f64 * h
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::parse(format!("grid {s:?} is not start:stop:steps")));
        }
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::parse(format!("bad number {t:?} in grid")))
        };
        let steps = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("bad step count {:?} in grid", parts[2])))?;
        Grid::new(num(parts[0])?, num(parts[1])?, steps)
    }
}

/// A header plus rows, written with LF record endings.
#[derive(Debug, Clone, Default)]
pub struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        Csv {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn render(&self) -> String {
        self.render_with(b',')
    }

    /// Tab-separated variant for terminal output.
    pub fn render_tsv(&self) -> String {
        self.render_with(b'\t')
    }

    fn render_with(&self, delimiter: u8) -> String {
        let mut w = csv::WriterBuilder::new()
            .delimiter(delimiter)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
    }
}

#[derive(Serialize)]
struct CyclesJson<'a> {
    d: &'a [usize],
    sigma: Vec<usize>,
    cycles: &'a [Vec<usize>],
}

pub fn cycles_json(cd: &CycleDecomp) -> String {
    serde_json::to_string(&CyclesJson {
        d: cd.d.entries(),
        sigma: cd.sigma.one_based(),
        cycles: &cd.cycles,
    })
    .expect("plain data serializes")
}

/// One `eigenvalue<TAB>dimension` line per eigenvalue.
pub fn spectrum_text(s: &Spectrum) -> String {
    let mut out = String::new();
    for (eta, c) in &s.entries {
        writeln!(out, "{eta}\t{c}").unwrap();
    }
    out
}

pub fn spectrum_csv(s: &Spectrum) -> Csv {
    let mut csv = Csv::new(&["order", "exponent", "eigenvalue", "dimension"]);
    for (eta, c) in &s.entries {
        csv.push(vec![
            eta.order().to_string(),
            eta.exponent().to_string(),
            eta.to_string(),
            c.to_string(),
        ]);
    }
    csv
}

#[derive(Serialize)]
struct SpectrumEntry {
    eigenvalue: RootOfUnity,
    dimension: usize,
}

pub fn spectrum_json(s: &Spectrum) -> String {
    let v: Vec<SpectrumEntry> = s
        .entries
        .iter()
        .map(|&(eigenvalue, dimension)| SpectrumEntry {
            eigenvalue,
            dimension,
        })
        .collect();
    serde_json::to_string(&v).expect("plain data serializes")
}
