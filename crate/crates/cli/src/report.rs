use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use macforge_core::io::ComplexInput;
use macforge_core::SimplicialComplex;

/// Echo of the complex a report was computed from.
#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    /// SHA-256 of the canonical JSON `{"m":..,"facets":[..]}` with facets in bitmask order.
    pub hash: String,
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
}

impl InputEcho {
    pub fn of(k: &SimplicialComplex) -> Self {
        let canonical = ComplexInput::from_complex(k);
        let digest = Sha256::digest(canonical.to_json().as_bytes());
        let hash = digest.iter().map(|b| format!("{b:02x}")).collect();
        InputEcho { hash, m: canonical.m, facets: canonical.facets }
    }
}

/// One internal cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool) -> Self {
        Check { name: name.to_string(), passed, detail: None }
    }

    pub fn with_detail(name: &str, passed: bool, detail: String) -> Self {
        Check { name: name.to_string(), passed, detail: Some(detail) }
    }
}

/// Full output of one subcommand; serialized with a fixed field order.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    pub options: Value,
    pub payload: Value,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub markdown: String,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Markdown body followed by the checks and warnings sections.
    pub fn to_markdown(&self) -> String {
        let mut out = format!("# macforge {}\n\n", self.command);
        if let Some(input) = &self.input {
            out.push_str(&format!("Input: m = {}, facets = {:?}, hash `{}`\n\n", input.m, input.facets, input.hash));
        }
        out.push_str(&self.markdown);
        if !self.checks.is_empty() {
            out.push_str("\n## Checks\n\n| check | result |\n|---|---|\n");
            for c in &self.checks {
                let result = if c.passed { "pass" } else { "FAIL" };
                match &c.detail {
                    Some(d) => out.push_str(&format!("| {} | {result} ({d}) |\n", c.name)),
                    None => out.push_str(&format!("| {} | {result} |\n", c.name)),
                }
            }
        }
        if !self.warnings.is_empty() {
            out.push_str("\n## Warnings\n\n");
            for w in &self.warnings {
                out.push_str(&format!("- {w}\n"));
            }
        }
        out
    }
}
