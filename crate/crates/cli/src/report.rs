//! The JSON envelope shared by every command.
//!
//! `serde_json` keeps object keys in a `BTreeMap`, so the printed form has
//! sorted keys and is stable across runs and worker counts.

use serde_json::{json, Value};

/// Why a command produced no result.
pub enum Step {
    Domain(brpic::Error),
    Usage(String),
}

impl From<brpic::Error> for Step {
    fn from(e: brpic::Error) -> Self {
        Step::Domain(e)
    }
}

pub fn usage(msg: impl Into<String>) -> Step {
    Step::Usage(msg.into())
}

pub enum Failure {
    Domain { report: Header, error: brpic::Error },
    Usage(String),
}

/// Command echo and input, known before any computation starts.
pub struct Header {
    command: String,
    input: Value,
}

impl Header {
    pub fn new(command: impl Into<String>, input: Value) -> Self {
        Header { command: command.into(), input }
    }

    pub fn run(self, f: impl FnOnce() -> Result<Outcome, Step>) -> Result<Report, Failure> {
        match f() {
            Ok(out) => Ok(Report { header: self, result: out.result, notes: out.notes, failed: out.failed }),
            Err(Step::Domain(error)) => Err(Failure::Domain { report: self, error }),
            Err(Step::Usage(m)) => Err(Failure::Usage(m)),
        }
    }

    pub fn error_json(&self, error: &brpic::Error) -> String {
        let v = json!({
            "command": self.command,
            "input": self.input,
            "error": { "kind": error_kind(error), "message": error.to_string() },
        });
        pretty(&v)
    }
}

pub struct Outcome {
    pub result: Value,
    pub notes: Vec<String>,
    /// The command ran but its check did not pass (exit status 1).
    pub failed: bool,
}

impl Outcome {
    pub fn new(result: Value) -> Self {
        Outcome { result, notes: Vec::new(), failed: false }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

pub struct Report {
    header: Header,
    pub result: Value,
    pub notes: Vec<String>,
    failed: bool,
}

impl Report {
    pub fn command(&self) -> &str {
        &self.header.command
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.header.command,
            "input": self.header.input,
            "result": self.result,
            "notes": self.notes,
        })
    }

    pub fn to_json(&self) -> String {
        pretty(&self.to_value())
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed)
    }
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

/// Variant name of a library error, e.g. `UnknownName`.
fn error_kind(e: &brpic::Error) -> String {
    format!("{e:?}").chars().take_while(char::is_ascii_alphanumeric).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kind_is_the_variant_name() {
        assert_eq!(error_kind(&brpic::Error::UnknownName("x".into())), "UnknownName");
        assert_eq!(error_kind(&brpic::Error::NotLazy), "NotLazy");
        assert_eq!(error_kind(&brpic::Error::CapExceeded { order: 3, cap: 2 }), "CapExceeded");
    }

    #[test]
    fn keys_are_sorted() {
        let v = json!({ "b": 1, "a": { "d": 2, "c": 3 } });
        let s = pretty(&v);
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(s.find("\"c\"").unwrap() < s.find("\"d\"").unwrap());
    }
}
