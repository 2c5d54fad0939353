use gorenstein::artinian::ArtinianReport;
use gorenstein::geometry::SchemeReport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::checks::Verdict;

pub const TOOL: &str = "gorenstein";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// JSON schema every [`ReportDocument`] validates against.
pub const REPORT_SCHEMA: &str = include_str!("../docs/report.schema.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// `sha256:` followed by the hex digest of the command's inputs.
    pub input_digest: String,
    pub scheme: Option<SchemeReport>,
    pub artinian: Option<ArtinianReport>,
    /// Command-specific payload.
    pub result: Option<serde_json::Value>,
    pub verdicts: Vec<Verdict>,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: &[&[u8]]) -> ReportDocument {
        ReportDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            input_digest: digest(inputs),
            scheme: None,
            artinian: None,
            result: None,
            verdicts: Vec::new(),
        }
    }
}

/// Length-prefixed so that input boundaries matter.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for part in inputs {
        h.update((part.len() as u64).to_le_bytes());
        h.update(part);
    }
    let bytes = h.finalize();
    let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}
