use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rdspectra",
    version,
    about = "Generalized reciprocal distance spectra of graphs, joined unions and power graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Brute-force RD_α spectrum of a graph, plan or group.
    Spectrum(InputArgs),
    /// Closed form against brute force for a group or a plan.
    Verify(InputArgs),
    /// Verify every group in a parameter grid.
    Sweep(SweepArgs),
    /// Quotient matrix over the block partition of a plan or group.
    Quotient(InputArgs),
    /// Joined-union plan of a group's power graph as JSON.
    Decompose(InputArgs),
}

#[derive(Args, Debug)]
pub struct Common {
    /// Comma-separated α values in [0, 1].
    #[arg(long, value_parser = parse_alphas, default_value = "0,0.25,0.5,0.75,1")]
    pub alpha: Alphas,

    /// Match tolerance.
    #[arg(long, value_parser = parse_positive, default_value = "1e-8")]
    pub tol: f64,

    /// Eigenvalues closer than this are reported as one value with multiplicity.
    #[arg(long, value_parser = parse_positive, default_value = "1e-7")]
    pub coalesce: f64,

    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// List every published formula next to its derived value, not only the deviating ones.
    #[arg(long)]
    pub compare_printed: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["graph", "group", "plan"]))]
pub struct InputArgs {
    /// Edge-list file: `n` on the first line, then `u v` per line; JSON `{"n":..,"edges":..}` also accepted.
    #[arg(long)]
    pub graph: Option<PathBuf>,

    /// Group spec such as `cyclic:12`, `dihedral:6`, `quaternion:3`, `elemab:3,2`, `pq:3,7`.
    #[arg(long)]
    pub group: Option<String>,

    /// Joined-union plan JSON: `{"parent": {...}, "components": [{...}, ...]}`.
    #[arg(long)]
    pub plan: Option<PathBuf>,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("grid").required(true).args(["range", "params"]))]
pub struct SweepArgs {
    #[arg(long)]
    pub family: String,

    /// Inclusive range of the family's single parameter, e.g. `3..60`.
    #[arg(long)]
    pub range: Option<String>,

    /// Parameter grid, e.g. `2,1..4;3,1..3`.
    #[arg(long)]
    pub params: Option<String>,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Alphas(pub Vec<f64>);

fn parse_alphas(s: &str) -> Result<Alphas, String> {
    let values = s
        .split(',')
        .map(|v| {
            let a: f64 = v.trim().parse().map_err(|_| format!("bad alpha {v:?}"))?;
            if (0.0..=1.0).contains(&a) {
                Ok(a)
            } else {
                Err(format!("alpha {a} is outside [0, 1]"))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Alphas(values))
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}
