//! Error mapping, descriptor loading and atomic report writing.

use serde::Serialize;
use std::fmt;
use std::fs;
use std::path::Path;
use subreg::{BasePair, ConvexFunction, Error};

pub const SCHEMA: &str = "1";

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit code 2.
    Config(String),
    /// A numerical invariant broke while computing; exit code 1.
    Runtime(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Assertion { .. } | Error::NoSignChange { .. } => CliError::Runtime(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Named boolean assertions gathered by a command.
#[derive(Debug, Default, Serialize)]
pub struct Assertions(Vec<Assertion>);

#[derive(Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
}

impl Assertions {
    pub fn add(&mut self, name: impl Into<String>, pass: bool) {
        self.0.push(Assertion {
            name: name.into(),
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.0.iter().all(|a| a.pass)
    }

    pub fn failures(&self) -> Vec<String> {
        self.0.iter().filter(|a| !a.pass).map(|a| a.name.clone()).collect()
    }
}

/// Inline JSON when the argument starts with `{`, a file path otherwise.
pub fn read_descriptor(arg: &str) -> CliResult<String> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| CliError::Config(format!("cannot read '{arg}': {e}")))
}

pub fn load_function(arg: &str) -> CliResult<ConvexFunction> {
    Ok(ConvexFunction::from_json(&read_descriptor(arg)?)?)
}

pub fn base_pair(f: ConvexFunction, xbar: Option<Vec<f64>>, ystar: Option<Vec<f64>>, radius: f64) -> CliResult<BasePair> {
    let n = f.dim();
    let xbar = xbar.unwrap_or_else(|| vec![0.0; n]);
    let ystar = ystar.unwrap_or_else(|| vec![0.0; n]);
    BasePair::new(f, xbar, ystar, radius).map_err(|e| match e {
        Error::InvalidBasePair(_) => CliError::Config(e.to_string()),
        other => CliError::Config(format!("base pair invalid: {other}")),
    })
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Writes `contents` to `dir/name` through a temporary file and a rename.
pub fn write_atomic(dir: &Path, name: &str, contents: &str) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Config(format!("cannot write {}: {e}", dir.join(name).display()));
    fs::create_dir_all(dir).map_err(io)?;
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, dir.join(name)).map_err(io)
}

pub fn write_json<T: Serialize>(dir: &Path, name: &str, command: &str, body: &T) -> CliResult<()> {
    let env = Envelope {
        schema: SCHEMA,
        command,
        body,
    };
    let mut text = serde_json::to_string_pretty(&env).map_err(|e| CliError::Runtime(e.to_string()))?;
    text.push('\n');
    write_atomic(dir, name, &text)
}
