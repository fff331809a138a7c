//! Machine-readable certification reports shared by all verifiers.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of a certification sweep: a list of named checks, each with an
/// optional witness describing the failure.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Certification {
    pub checks: Vec<CheckItem>,
}

impl Certification {
    pub fn new() -> Self {
        Certification { checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(CheckItem { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(CheckItem {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    pub fn record(&mut self, name: impl Into<String>, result: Result<(), String>) {
        match result {
            Ok(()) => self.pass(name),
            Err(w) => self.fail(name, w),
        }
    }

    pub fn certified(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, prefix: &str, other: Certification) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }
}

/// Top-level report emitted by the command-line interface.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub status: ReportStatus,
    pub checks: Vec<CheckItem>,
    pub timing_ms: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Certified,
    Failed,
    Error,
}

impl Report {
    pub fn from_certification(cert: &Certification, timing_ms: u128) -> Self {
        Report {
            status: if cert.certified() { ReportStatus::Certified } else { ReportStatus::Failed },
            checks: cert.checks.clone(),
            timing_ms,
        }
    }

    pub fn error(message: impl Into<String>, timing_ms: u128) -> Self {
        Report {
            status: ReportStatus::Error,
            checks: vec![CheckItem {
                name: "input".into(),
                passed: false,
                witness: Some(message.into()),
            }],
            timing_ms,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  [{w}]"));
            }
            out.push('\n');
        }
        let status = match self.status {
            ReportStatus::Certified => "certified",
            ReportStatus::Failed => "failed",
            ReportStatus::Error => "error",
        };
        out.push_str(&format!("status: {status} ({} ms)\n", self.timing_ms));
        out
    }
}
