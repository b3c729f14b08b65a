//! The `golod` command-line tool, as a library so that tests can drive it
//! in-process.

mod args;
mod commands;
mod input;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::Parser;
use golod_core::Error;
use serde_json::{json, Value};

pub use args::{Cli, Format};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a subcommand produces: records plus a summary (structured output)
/// and a human-readable rendering.
#[derive(Default)]
pub(crate) struct Report {
    pub records: Vec<Value>,
    pub summary: serde_json::Map<String, Value>,
    pub text: String,
    pub notes: Vec<String>,
    /// Non-zero when the answer itself signals a failure (inconsistent criteria).
    pub code: i32,
}

impl Report {
    pub fn record(&mut self, kind: &str, mut v: Value) {
        if let Value::Object(m) = &mut v {
            m.insert("record".into(), json!(kind));
        }
        self.records.push(v);
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.summary.insert(key.into(), v);
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

/// A failure with its exit status: 2 for bad input, 3 for an exhausted
/// guard, 1 for internal errors.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::GuardExceeded { .. } | Error::CoefficientOverflow => 3,
            Error::Internal(_) | Error::NegativeExponent(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub(crate) fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.common.format;
    let result = match cli.common.threads {
        Some(0) => Err(input_error("--threads must be positive")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| commands::dispatch(&cli)),
            Err(e) => Err(Failure {
                code: 1,
                message: format!("cannot start thread pool: {e}"),
            }),
        },
        None => commands::dispatch(&cli),
    };
    match result {
        Ok(report) => render(report, format),
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn render(mut report: Report, format: Format) -> Outcome {
    let mut stderr = String::new();
    for n in &report.notes {
        let _ = writeln!(stderr, "note: {n}");
    }
    let stdout = match format {
        Format::Text => report.text,
        Format::Json => {
            if !report.notes.is_empty() {
                report.set("notes", json!(report.notes));
            }
            let mut out = String::new();
            for r in &report.records {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            out.push_str(&json!({ "summary": Value::Object(report.summary) }).to_string());
            out.push('\n');
            out
        }
    };
    Outcome {
        code: report.code,
        stdout,
        stderr,
    }
}
