use std::path::Path;

use serde_json::{json, Value};

/// What a subcommand produced, before it is wrapped into a certificate.
#[derive(Debug, Default)]
pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    pub failures: Vec<Value>,
    pub text: String,
}

#[derive(Debug)]
pub struct Certificate(Value);

impl Certificate {
    pub fn new(command: &str, outcome: Outcome, elapsed_ms: u64) -> Self {
        Certificate(json!({
            "tool_version": trw_core::TOOL_VERSION,
            "command": command,
            "inputs": outcome.inputs,
            "results": outcome.results,
            "failures": outcome.failures,
            "elapsed_ms": elapsed_ms,
        }))
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut s = serde_json::to_string_pretty(&self.0)?;
        s.push('\n');
        std::fs::write(path, s)
    }
}
