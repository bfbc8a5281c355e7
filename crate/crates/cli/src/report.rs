//! JSON reports. JSON is canonical; the Markdown form is a summary.

use serde::Serialize;
use serde_json::Value;

/// Diagnostic tag carried by checks that exercise the uncorrected
/// transformation law.
pub const LITERAL_RULE_TAG: &str = "paper-literal-rule";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

impl Check {
    /// Passes when `residual ≤ tolerance`.
    pub fn at_most(suite: &str, name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            suite: suite.into(),
            name: name.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            tag: None,
        }
    }

    pub fn tagged(mut self, tag: &str) -> Self {
        self.tag = Some(tag.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config_hash: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Command-specific payload.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

impl Report {
    pub fn new(command: impl Into<String>, config_hash: impl Into<String>, checks: Vec<Check>, data: Value) -> Self {
        Self {
            tool: "mdgauge",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            config_hash: config_hash.into(),
            pass: checks.iter().all(|c| c.pass),
            checks,
            data,
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# mdgauge {}\n\nconfig sha256: `{}`\n\nresult: {}\n\n",
            self.command,
            self.config_hash,
            if self.pass { "PASS" } else { "FAIL" }
        );
        if !self.checks.is_empty() {
            out.push_str("| suite | check | residual | tolerance | result |\n|---|---|---|---|---|\n");
            for c in &self.checks {
                let tag = c.tag.as_deref().map(|t| format!(" ({t})")).unwrap_or_default();
                out.push_str(&format!(
                    "| {} | {} | {:.3e} | {:.1e} | {}{} |\n",
                    c.suite,
                    c.name,
                    c.residual,
                    c.tolerance,
                    if c.pass { "pass" } else { "FAIL" },
                    tag
                ));
            }
        }
        out
    }
}
