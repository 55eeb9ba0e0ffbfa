use std::fmt;
use std::fs;
use std::path::Path;

use rdspectra::graph::EdgeListObject;
use rdspectra::{parse_edge_list, Error, Graph, GroupSpec, JoinedUnionPlan};

use crate::args::InputArgs;

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;

/// A failure that ends the run with a specific exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DisconnectedGraph(..) | Error::NotRegular { .. } | Error::InvalidPlan(_) => EXIT_PRECONDITION,
            Error::NoConvergence { .. } | Error::ComplexSpectrum { .. } => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub enum Input {
    Graph { label: String, graph: Graph },
    Group(GroupSpec),
    Plan { label: String, plan: JoinedUnionPlan },
}

impl Input {
    pub fn label(&self) -> String {
        match self {
            Input::Graph { label, .. } | Input::Plan { label, .. } => label.clone(),
            Input::Group(spec) => spec.to_string(),
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn json_error(path: &Path, e: serde_json::Error) -> CliError {
    let message = format!("{}: {e}", path.display());
    let precondition =
        e.is_data() && (message.contains("invalid joined-union plan") || message.contains("is not regular"));
    CliError { code: if precondition { EXIT_PRECONDITION } else { EXIT_USAGE }, message }
}

pub fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let obj: EdgeListObject = serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
        return Ok(Graph::try_from(obj)?);
    }
    parse_edge_list(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

pub fn load_plan(path: &Path) -> CliResult<JoinedUnionPlan> {
    serde_json::from_str(&read(path)?).map_err(|e| json_error(path, e))
}

pub fn parse_group(text: &str) -> CliResult<GroupSpec> {
    Ok(text.parse::<GroupSpec>()?)
}

pub fn load(args: &InputArgs) -> CliResult<Input> {
    if let Some(path) = &args.graph {
        return Ok(Input::Graph { label: path.display().to_string(), graph: load_graph(path)? });
    }
    if let Some(path) = &args.plan {
        return Ok(Input::Plan { label: path.display().to_string(), plan: load_plan(path)? });
    }
    match &args.group {
        Some(spec) => Ok(Input::Group(parse_group(spec)?)),
        None => Err(CliError::usage("one of --graph, --group or --plan is required")),
    }
}
