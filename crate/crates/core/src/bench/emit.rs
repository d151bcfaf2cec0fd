use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Metric, PerfRecord, ProfileCurve};
use crate::error::{Error, Result};

const RECORD_HEADER: [&str; 8] = ["solver", "problem", "case", "n", "time_s", "E", "iterations", "converged"];
const PROFILE_HEADER: [&str; 4] = ["solver", "metric", "tau", "rho"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `.json` means JSON; anything else is CSV.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Csv,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidInput(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct ProfileRow {
    solver: String,
    metric: Metric,
    tau: f64,
    rho: f64,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).map_err(|e| Error::io(path, e))?))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(File::open(path).map_err(|e| Error::io(path, e))?))
}

fn write_rows<T: Serialize>(path: &Path, header: &[&str], rows: &[T], format: Format) -> Result<()> {
    let mut out = create(path)?;
    match format {
        Format::Csv => {
            // Write the header explicitly so an empty table still has one.
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(header)?;
            for row in rows {
                w.serialize(row)?;
            }
            w.flush().map_err(|e| Error::io(path, e))?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            out.write_all(b"\n").map_err(|e| Error::io(path, e))?;
            out.flush().map_err(|e| Error::io(path, e))?;
        }
    }
    Ok(())
}

fn read_rows<T: for<'de> Deserialize<'de>>(path: &Path, header: &[&str], format: Format) -> Result<Vec<T>> {
    let input = open(path)?;
    match format {
        Format::Csv => {
            let mut r = csv::Reader::from_reader(input);
            let found = r.headers()?.clone();
            if found.iter().ne(header.iter().copied()) {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    message: format!("expected header `{}`", header.join(",")),
                });
            }
            Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
        }
        Format::Json => Ok(serde_json::from_reader(input)?),
    }
}

pub fn emit_records(records: &[PerfRecord], path: &Path, format: Format) -> Result<()> {
    write_rows(path, &RECORD_HEADER, records, format)
}

pub fn load_records(path: &Path, format: Format) -> Result<Vec<PerfRecord>> {
    read_rows(path, &RECORD_HEADER, format)
}

/// One row per `(solver, τ)`, sorted by solver then τ.
pub fn emit_curves(curves: &[ProfileCurve], path: &Path, format: Format) -> Result<()> {
    let mut rows: Vec<ProfileRow> = curves
        .iter()
        .flat_map(|c| {
            c.points.iter().map(|&(tau, rho)| ProfileRow {
                solver: c.solver.clone(),
                metric: c.metric,
                tau,
                rho,
            })
        })
        .collect();
    rows.sort_by(|a, b| a.solver.cmp(&b.solver).then(a.tau.total_cmp(&b.tau)));
    write_rows(path, &PROFILE_HEADER, &rows, format)
}

pub fn load_curves(path: &Path, format: Format) -> Result<Vec<ProfileCurve>> {
    let rows: Vec<ProfileRow> = read_rows(path, &PROFILE_HEADER, format)?;
    let mut curves: Vec<ProfileCurve> = Vec::new();
    for row in rows {
        match curves.last_mut() {
            Some(c) if c.solver == row.solver && c.metric == row.metric => c.points.push((row.tau, row.rho)),
            _ => curves.push(ProfileCurve {
                solver: row.solver,
                metric: row.metric,
                points: vec![(row.tau, row.rho)],
            }),
        }
    }
    Ok(curves)
}
