//! Hybrid structural/semantic analysis of source code.
//!
//! The crate lifts source units through a pipeline of representations —
//! tokens, normalized AST, control-flow graph, def-use/dependence graph,
//! metric vectors — and runs detectors over them that combine structural
//! evidence (metrics, graph shape, dataflow) with lexical-semantic
//! evidence (cue scoring, optionally an external scorer process). On top
//! of detection sit explanation, automated repair with validation,
//! corpus evaluation, and delivery formats (SARIF, PR comments, feedback
//! ingestion).

pub mod ast;
pub mod cfg;
pub mod config;
pub mod dataflow;
pub mod delivery;
pub mod detect;
pub mod error;
pub mod eval;
pub mod explain;
pub mod export;
pub mod frontend;
pub mod lexer;
pub mod metrics;
pub mod parser;
pub mod pdg;
pub mod repair;
pub mod source;
pub mod span;

pub use ast::{NormalizedAst, StmtId};
pub use cfg::{BasicBlock, BlockId, Cfg, CfgEdge, EdgeKind};
pub use config::ToolConfig;
pub use dataflow::DefUseIndex;
pub use delivery::{
    emit_sarif, filter_changed, parse_diff, read_feedback, record_feedback, render_pr_comment,
    tag_in_diff, update_weights, FeedbackRecord, ToolMeta, Verdict,
};
pub use detect::{scan_units, Evidence, Finding, FusionMode, Rule, ScanOutput};
pub use error::{Error, Result};
pub use eval::{
    load_corpus, match_findings, metrics_report, risk_report, stratified_split, ConfusionCounts,
    Corpus, CorpusManifest, MetricsReport, RiskBand, RiskReport, Split, SplitRatios,
};
pub use lexer::{Token, TokenKind, TokenStream};
pub use metrics::MetricVector;
pub use pdg::{DepKind, Pdg, PdgEdge};
pub use repair::{
    apply_patch, repair_finding, unified_diff, Edit, Patch, PatchKind, RepairSuggestion,
    ValidationReport,
};
pub use source::{Language, SourceUnit};
pub use span::Span;
