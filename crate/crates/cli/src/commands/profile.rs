use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use spdsolve::bench::{dolan_more, emit_curves, load_records, Format, Metric};
use spdsolve::Result;

use super::{write_json, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Time,
    Error,
}

#[derive(Args, Debug)]
pub struct ProfileArgs {
    /// Records written by `bench` (CSV, or JSON by extension).
    #[arg(long)]
    pub records: PathBuf,
    #[arg(long, value_enum, default_value = "time")]
    pub metric: MetricArg,
    /// Profile file; `.json` selects JSON, anything else CSV.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Serialize)]
struct Terminal {
    solver: String,
    rho_at_1: f64,
    rho_max: f64,
}

pub fn run(args: ProfileArgs) -> Result<u8> {
    let records = load_records(&args.records, Format::from_path(&args.records))?;
    let metric = match args.metric {
        MetricArg::Time => Metric::Time,
        MetricArg::Error => Metric::Error,
    };
    let curves = dolan_more(&records, metric)?;
    emit_curves(&curves, &args.out, Format::from_path(&args.out))?;
    let summary: Vec<Terminal> = curves
        .iter()
        .map(|c| Terminal {
            solver: c.solver.clone(),
            rho_at_1: c.rho_at(1.0),
            rho_max: c.terminal_rho(),
        })
        .collect();
    write_json(&summary, None)?;
    Ok(EXIT_OK)
}
