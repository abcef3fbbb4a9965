//! File formats, output records and command implementations for the
//! `randic` tool.

pub mod commands;
pub mod formats;
pub mod output;
pub mod verify;

use thiserror::Error;

pub use formats::ParseError;
pub use output::OutputRecord;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] randic_core::Error),
    #[error("cannot read {path}: {source}")]
    Input { path: String, source: std::io::Error },
    #[error("write failed: {0}")]
    Output(std::io::Error),
    #[error("method {method} does not apply: {reason}")]
    Method { method: &'static str, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit status: everything here is a usage, parse or I/O problem.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Oracle,
    Reduction,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Reduction => "reduction",
            Method::ClosedForm => "closed-form",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyKind {
    DoubleStar,
    FixedMiddle,
    Symmetric,
    FixedEnd,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::DoubleStar => "double-star",
            FamilyKind::FixedMiddle => "fixed-middle",
            FamilyKind::Symmetric => "symmetric",
            FamilyKind::FixedEnd => "fixed-end",
        }
    }
}
