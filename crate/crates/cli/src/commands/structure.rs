//! Single-shape queries: cycles, spectra, eigenspaces, projectors.

use std::fmt::Write as _;

use permsym::entanglement::entanglement_et;
use permsym::linalg::rank;
use permsym::partitions::classes;
use permsym::perm_engine::{builtin_kernels, cycle_decomposition_with};
use permsym::report::{cycles_json, fmt_num, spectrum_csv, spectrum_json, spectrum_text, Csv};
use permsym::spectral::{antisymmetric_projector, eigenspace, spectrum, symmetric_projector};
use serde_json::json;

use super::Command;
use crate::config::{CliError, Format, RunArgs};

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn table(csv: &Csv, format: Format) -> String {
    match format {
        Format::Csv => csv.render(),
        _ => csv.render_tsv(),
    }
}

pub struct Cycles;

impl Command for Cycles {
    fn name(&self) -> &'static str {
        "cycles"
    }

    fn about(&self) -> &'static str {
        "Cycle decomposition of the label permutation induced by --perm on --dims"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["dims", "perm", "kernel"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let d = args.dims()?;
        let sigma = args.perm_for(d)?;
        let kernel = builtin_kernels().select(args.kernel.as_deref(), d, &sigma)?;
        let cd = cycle_decomposition_with(kernel, d, &sigma)?;
        Ok(match args.format {
            Format::Text => format!("{}\n", cd.notation()),
            Format::Json => format!("{}\n", cycles_json(&cd)),
            Format::Csv => {
                let mut csv = Csv::new(&["cycle", "length", "labels"]);
                for (i, c) in cd.cycles.iter().enumerate() {
                    let labels: Vec<String> = c.iter().map(|l| l.to_string()).collect();
                    csv.push(vec![i.to_string(), c.len().to_string(), labels.join(" ")]);
                }
                csv.render()
            }
        })
    }
}

pub struct SpectrumCmd;

impl Command for SpectrumCmd {
    fn name(&self) -> &'static str {
        "spectrum"
    }

    fn about(&self) -> &'static str {
        "Eigenvalues of the subsystem permutation operator with their multiplicities"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["dims", "perm"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let d = args.dims()?;
        let s = spectrum(d, &args.perm_for(d)?)?;
        Ok(match args.format {
            Format::Text => spectrum_text(&s),
            Format::Json => format!("{}\n", spectrum_json(&s)),
            Format::Csv => spectrum_csv(&s).render(),
        })
    }
}

pub struct Eigenspace;

impl Command for Eigenspace {
    fn name(&self) -> &'static str {
        "eigenspace"
    }

    fn about(&self) -> &'static str {
        "Orthonormal basis of one eigenspace, built from the cycles"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["dims", "perm", "eigenvalue"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let d = args.dims()?;
        let b = eigenspace(d, &args.perm_for(d)?, args.eigenvalue()?)?;
        Ok(match args.format {
            Format::Json => json_line(serde_json::to_value(&b).expect("plain data serializes")),
            Format::Text => {
                let mut out = format!("eigenvalue {} dimension {}\n", b.eigenvalue, b.dimension);
                for v in &b.vectors {
                    let terms: Vec<String> = v
                        .amplitudes()
                        .iter()
                        .enumerate()
                        .filter(|(_, z)| z.norm() > 1e-15)
                        .map(|(l, z)| format!("{}:{},{}", l, fmt_num(z.re), fmt_num(z.im)))
                        .collect();
                    writeln!(out, "{}", terms.join(" ")).unwrap();
                }
                out
            }
            Format::Csv => {
                let mut csv = Csv::new(&["vector", "label", "re", "im"]);
                for (i, v) in b.vectors.iter().enumerate() {
                    for (l, z) in v.amplitudes().iter().enumerate() {
                        if z.norm() > 1e-15 {
                            csv.push(vec![i.to_string(), l.to_string(), fmt_num(z.re), fmt_num(z.im)]);
                        }
                    }
                }
                csv.render()
            }
        })
    }
}

pub struct Entanglement;

impl Command for Entanglement {
    fn name(&self) -> &'static str {
        "entanglement"
    }

    fn about(&self) -> &'static str {
        "Purity-based entanglement E_t of each basis vector of an eigenspace"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["dims", "perm", "eigenvalue", "t"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let d = args.dims()?;
        let b = eigenspace(d, &args.perm_for(d)?, args.eigenvalue()?)?;
        let mut csv = Csv::new(&["vector", "E"]);
        let mut values = Vec::new();
        for (i, v) in b.vectors.iter().enumerate() {
            let e = entanglement_et(v, d, args.t)?;
            values.push(e);
            csv.push(vec![i.to_string(), fmt_num(e)]);
        }
        Ok(match args.format {
            Format::Json => json_line(json!({
                "eigenvalue": b.eigenvalue,
                "t": args.t,
                "E": values,
            })),
            f => table(&csv, f),
        })
    }
}

pub struct Projector;

impl Command for Projector {
    fn name(&self) -> &'static str {
        "projector"
    }

    fn about(&self) -> &'static str {
        "Dense symmetrizer (or antisymmetrizer) over all slot permutations, with its rank"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["dims", "antisymmetric", "dense_max_n"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let d = args.dims()?;
        let limits = args.limits();
        let m = if args.antisymmetric {
            antisymmetric_projector(d, &limits)?
        } else {
            symmetric_projector(d, &limits)?
        };
        let r = rank(&m, 1e-10);
        Ok(match args.format {
            Format::Json => {
                let rows: Vec<Vec<f64>> = m.row_iter().map(|row| row.iter().copied().collect()).collect();
                json_line(json!({ "rank": r, "matrix": rows }))
            }
            Format::Text => {
                let mut out = format!("rank {r}\n");
                for row in m.row_iter() {
                    let cells: Vec<String> = row.iter().map(|&x| fmt_num(x)).collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
                out
            }
            Format::Csv => {
                let mut csv = Csv::new(&["row", "col", "value"]);
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        let x = m[(i, j)];
                        if x != 0.0 {
                            csv.push(vec![i.to_string(), j.to_string(), fmt_num(x)]);
                        }
                    }
                }
                csv.render()
            }
        })
    }
}

pub struct Partitions;

impl Command for Partitions {
    fn name(&self) -> &'static str {
        "partitions"
    }

    fn about(&self) -> &'static str {
        "Ordered multiplicative partitions of N grouped into reordering classes"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let n = args
            .n
            .ok_or_else(|| CliError::Usage("--N is required".into()))?;
        let cls = classes(n)?;
        let mut csv = Csv::new(&["partition", "class"]);
        for c in &cls {
            for m in &c.members {
                csv.push(vec![m.to_string(), c.representative.to_string()]);
            }
        }
        Ok(match args.format {
            Format::Json => json_line(serde_json::to_value(&cls).expect("plain data serializes")),
            f => table(&csv, f),
        })
    }
}

pub struct Kernels;

impl Command for Kernels {
    fn name(&self) -> &'static str {
        "kernels"
    }

    fn about(&self) -> &'static str {
        "Registered label kernels; with --dims, whether each handles the shape"
    }

    fn flags(&self) -> &'static [&'static str] {
        &["dims", "perm"]
    }

    fn run(&self, args: &RunArgs) -> Result<String, CliError> {
        let target = match &args.dims {
            Some(d) => Some((d, args.perm_for(d)?)),
            None => None,
        };
        let mut csv = Csv::new(&["name", "supported", "description"]);
        let mut rows = Vec::new();
        for k in builtin_kernels().iter() {
            let supported = target.as_ref().map(|(d, s)| k.supports(d, s));
            let shown = supported.map_or("-".to_string(), |b| b.to_string());
            csv.push(vec![k.name().into(), shown, k.description().into()]);
            rows.push(json!({
                "name": k.name(),
                "supported": supported,
                "description": k.description(),
            }));
        }
        Ok(match args.format {
            Format::Json => json_line(serde_json::Value::Array(rows)),
            f => table(&csv, f),
        })
    }
}
