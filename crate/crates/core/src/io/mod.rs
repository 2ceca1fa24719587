//! Stable CSV and JSON wire formats.
//!
//! Assessment CSV: comma separated, UTF-8, LF line endings. The header row
//! starts with an empty cell followed by attribute ids; each following row is
//! an alternative id followed by its grades as plain decimals.
//!
//! Assessment JSON:
//! `{"alternatives": [..], "attributes": [{"id", "label"}], "grades": [[".."]], "metadata": {}}`
//! with grades as strings.

mod assessment;
mod table;
mod text;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::FssError;

pub use assessment::{
    emit_assessment, emit_document, parse_assessment, parse_document, AssessmentDocument, AttributeRecord,
    DocumentRecord,
};
pub use table::{
    emit_decision_table, emit_explanation, parse_decision_table_json, DecisionRowRecord, DecisionTableRecord,
    ExplanationRecord, OpponentRecord,
};

/// Places used for the human-readable decimal rendering of rationals.
pub const DECIMAL_PLACES: u32 = 4;

/// Assessment document encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses the format from a file name, defaulting to CSV.
    pub fn from_path(path: &str) -> Format {
        if path.to_ascii_lowercase().ends_with(".json") {
            Format::Json
        } else {
            Format::Csv
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected csv or json)")),
        }
    }
}

/// Output encodings for decision tables and explanations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFormat {
    Csv,
    Json,
    /// aligned plain-text table for terminals
    Text,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "table" | "text" => Ok(TableFormat::Text),
            _ => Err(format!("unknown format {s:?} (expected csv, json or table)")),
        }
    }
}

/// Where in the source document a problem was found.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Location {
    /// 1-based line (CSV) when known
    pub line: Option<u64>,
    /// alternative id or row index
    pub row: Option<String>,
    /// attribute id or column index
    pub column: Option<String>,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(line) = self.line {
            parts.push(format!("line {line}"));
        }
        if let Some(row) = &self.row {
            parts.push(format!("row {row}"));
        }
        if let Some(column) = &self.column {
            parts.push(format!("column {column}"));
        }
        if parts.is_empty() {
            f.write_str("document")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("syntax error at {location}: {message}")]
    Syntax { location: Location, message: String },
    #[error("invalid assessment at {location}: {source}")]
    Invalid { location: Location, source: FssError },
}

impl IoError {
    pub fn code(&self) -> &'static str {
        match self {
            IoError::Syntax { .. } => "SyntaxError",
            IoError::Invalid { source, .. } => source.code(),
        }
    }

    pub fn location(&self) -> &Location {
        match self {
            IoError::Syntax { location, .. } | IoError::Invalid { location, .. } => location,
        }
    }

    /// The underlying validation error, if this is not a syntax error.
    pub fn validation(&self) -> Option<&FssError> {
        match self {
            IoError::Invalid { source, .. } => Some(source),
            IoError::Syntax { .. } => None,
        }
    }
}
