//! Front end for the `moncoh` binary: input parsing, dispatch and output documents.

pub mod args;
pub mod commands;
pub mod input;

use std::fmt;

use moncoh::{Engine, FieldSpec, PrimeField, Rationals};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub use args::{Cli, Command};
pub use commands::{Context, Rendered};
pub use input::{parse, IdealSpec, ParseError};

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug)]
pub enum Failure {
    Io(String),
    Parse(String, ParseError),
    Usage(String),
    Domain(moncoh::Error),
    Mismatch(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) => EXIT_IO,
            Failure::Parse(..) | Failure::Usage(_) => EXIT_PARSE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(m) | Failure::Usage(m) | Failure::Mismatch(m) => write!(f, "{m}"),
            Failure::Parse(path, e) => write!(f, "{path}:{e}"),
            Failure::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<moncoh::Error> for Failure {
    fn from(e: moncoh::Error) -> Self {
        match e {
            moncoh::Error::Argument(m) => Failure::Usage(m),
            moncoh::Error::DimensionMismatch { .. } => Failure::Usage(e.to_string()),
            moncoh::Error::NotAComplex(m) => Failure::Mismatch(m),
            other => Failure::Domain(other),
        }
    }
}

/// Output of a successful run.
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

pub fn input_hash(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// The JSON document for a command result.
pub fn document(command: &str, hash: &str, field: FieldSpec, results: Value) -> Value {
    json!({
        "command": command,
        "input_hash": hash,
        "field": field.to_string(),
        "results": results,
    })
}

pub fn render_json(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).expect("JSON values always serialize")
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let path = cli.command.file();
    let bytes = std::fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::Io(format!("{}: not valid UTF-8", path.display())))?;
    let spec = parse(&text).map_err(|e| Failure::Parse(path.display().to_string(), e))?;
    let field = match &cli.field {
        Some(f) => f
            .parse::<FieldSpec>()
            .map_err(|e| Failure::Usage(e.to_string()))?,
        None => spec.field.unwrap_or_default(),
    };
    let ctx = Context {
        names: spec.vars.clone(),
        ideal: spec.ideal()?,
    };
    let rendered = match field {
        FieldSpec::Rational => commands::execute(&Engine::new(Rationals), &cli.command, &ctx)?,
        FieldSpec::Prime(p) => {
            commands::execute(&Engine::new(PrimeField::new(p)?), &cli.command, &ctx)?
        }
    };
    let stdout = if cli.json {
        render_json(&document(
            cli.command.name(),
            &input_hash(&bytes),
            field,
            rendered.results,
        ))
    } else {
        rendered.text
    };
    Ok(Outcome {
        stdout,
        exit_code: if rendered.mismatch {
            EXIT_MISMATCH
        } else {
            EXIT_OK
        },
    })
}
