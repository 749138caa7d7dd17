//! Crate-wide error type.
//!
//! Analysis never aborts the whole run for a single bad input: the scan
//! pipeline catches per-unit errors and records the unit as skipped. The
//! variants here are therefore fine-grained enough for callers to decide
//! what is recoverable.

use crate::span::Span;
use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A character the lexer has no rule for, or an unterminated literal.
    #[error("lexical error at {span}: {message}")]
    Lex { span: Span, message: String },

    /// Token stream does not match the supported grammar.
    #[error("parse error at {span}: expected {expected}")]
    Parse { span: Span, expected: String },

    /// The unit's language has no registered front end.
    #[error("no front end registered for language `{0}`")]
    UnsupportedLanguage(String),

    /// Export format string was not recognized.
    #[error("unknown export format `{0}` (expected `dot` or `json`)")]
    UnknownFormat(String),

    /// Corpus manifest failed schema validation; `location` is a JSON pointer.
    #[error("corpus manifest invalid at {location}: {message}")]
    ManifestSchema { location: String, message: String },

    /// Split ratios must be positive and sum to 1.
    #[error("invalid split ratios [{0}, {1}, {2}]: must be positive and sum to 1")]
    RatioError(f64, f64, f64),

    /// Matching requires a non-empty label set.
    #[error("known-findings list is empty; nothing to match against")]
    EmptyKnownList,

    /// Two edits in one patch touch overlapping regions.
    #[error("patch edits overlap at {0}")]
    OverlappingEdits(Span),

    /// An edit span points outside the unit text.
    #[error("edit span {0} is out of bounds for the unit")]
    OutOfBounds(Span),

    /// No finding with the requested id exists in the scanned set.
    #[error("no finding with id `{0}`")]
    UnknownFinding(String),

    /// A repair strategy was asked to act on a finding missing the
    /// evidence it needs (e.g. relocating a secret without a literal span).
    #[error("finding `{0}` lacks the evidence required for this repair")]
    MissingEvidence(String),

    /// The function shape does not admit the requested transformation.
    #[error("no extractable region: {0}")]
    NoExtractableRegion(String),

    /// A query rewrite was asked to parameterize an argument that is not
    /// a recognizable concatenation of literals and names.
    #[error("sink argument at {0} is not a rewritable concatenation")]
    UnsupportedShape(Span),

    /// A unified diff could not be parsed.
    #[error("malformed unified diff: {0}")]
    DiffParse(String),

    /// External scorer process produced output that is not the expected
    /// line-delimited JSON.
    #[error("scorer plugin reply malformed: {0}")]
    PluginReply(String),

    /// External scorer process exceeded its time budget.
    #[error("scorer plugin timed out after {0} ms")]
    PluginTimeout(u64),

    /// Configuration file rejected.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
