//! Machine-readable verification reports.
//!
//! Every batch command produces one `Report`: named checks with pass/fail
//! and a detail string, plus optional structured payloads. Reports are
//! deterministic given (inputs, seed); the JSON goes to stdout and a short
//! human summary to stderr.

use serde::Serialize;

#[derive(Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    /// FNV-1a hash of the inputs, so identical runs are recognizable
    pub inputs_digest: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
}

/// FNV-1a over the raw bytes; enough to fingerprint inputs in reports.
pub fn digest(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            command: command.into(),
            inputs_digest: digest(b""),
            seed,
            checks: Vec::new(),
            passed: true,
            data: serde_json::Value::Null,
        }
    }

    /// Records the digest of the run's input text.
    pub fn set_inputs(&mut self, bytes: &[u8]) {
        self.inputs_digest = digest(bytes);
    }

    /// Records one named check; the report fails if any check fails.
    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        self.passed &= passed;
        passed
    }

    /// Attaches a structured payload under the given key.
    pub fn attach<T: Serialize>(&mut self, key: &str, value: &T) {
        if self.data.is_null() {
            self.data = serde_json::json!({});
        }
        if let serde_json::Value::Object(map) = &mut self.data {
            map.insert(
                key.to_string(),
                serde_json::to_value(value).expect("serializable payload"),
            );
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per check, then a verdict.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "ok " } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}: {}\n", c.name, c.detail));
        }
        out.push_str(&format!(
            "{}: {} ({} checks, seed {})\n",
            self.command,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.seed
        ));
        out
    }
}
