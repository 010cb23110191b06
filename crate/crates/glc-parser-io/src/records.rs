//! JSON record types shared with the command-line surface.
//!
//! Field order is fixed by struct declaration order and must not change:
//! downstream consumers diff these lines textually.

use serde::{Deserialize, Serialize};

/// Which decision procedure produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Sound,
    PaperStrict,
    Oracle,
    VariantOracle,
}

/// One rewrite step in a trace, rendered with printed formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepRecord {
    pub rule: String,
    pub position: Vec<String>,
    pub before: String,
    pub after: String,
}

/// The one-line JSON object every decision command prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub formula: String,
    pub mode: Mode,
    pub result: u8,
    pub frames_checked: u64,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub trace: Option<Vec<TraceStepRecord>>,
}

impl ResultRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

/// The one-line JSON object normalization commands print.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeRecord {
    pub formula: String,
    pub normal_form: String,
    pub steps: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub trace: Option<Vec<TraceStepRecord>>,
}

impl NormalizeRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

/// The one-line JSON object printed when an input cannot be processed;
/// the span fields are set for syntax errors and absent otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub start: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub end: Option<usize>,
}

impl ErrorRecord {
    pub fn plain(error: impl Into<String>) -> Self {
        ErrorRecord {
            error: error.into(),
            start: None,
            end: None,
        }
    }

    pub fn spanned(error: impl Into<String>, start: usize, end: usize) -> Self {
        ErrorRecord {
            error: error.into(),
            start: Some(start),
            end: Some(end),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

/// One line of a strict-versus-oracle divergence report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivergenceRecord {
    pub formula: String,
    pub strict_result: u8,
    pub oracle_result: u8,
}

impl DivergenceRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}
