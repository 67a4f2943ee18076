//! Machine-readable run reports.
//!
//! Reports are JSON objects with a fixed top-level key order (struct order)
//! and sorted keys inside `results`; apart from the `timing` field, identical
//! inputs and seeds produce identical bytes. The shape is described by
//! `schemas/report.schema.json` at the repository root.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub parameters: Value,
    pub results: Value,
    pub timing: Timing,
    pub tool_version: String,
    pub seed: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub milliseconds: u128,
}

impl Report {
    pub fn new(
        command: &str,
        input: DigestSource<'_>,
        parameters: Value,
        results: Value,
        started: std::time::Instant,
        seed: Option<u64>,
    ) -> Report {
        Report {
            command: command.to_string(),
            input_digest: input.digest(),
            parameters,
            results,
            timing: Timing { milliseconds: started.elapsed().as_millis() },
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// What the input digest is computed over: the bytes of an input file, or the
/// canonical parameter string of a run without file input.
pub enum DigestSource<'a> {
    FileBytes(&'a [u8]),
    Parameters(&'a str),
}

impl DigestSource<'_> {
    fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        match self {
            DigestSource::FileBytes(b) => hasher.update(b),
            DigestSource::Parameters(s) => hasher.update(s.as_bytes()),
        }
        hex::encode(hasher.finalize())
    }
}
