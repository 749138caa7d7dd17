//! Detection: rules, findings, and the scan pipeline.
//!
//! Each detector inspects one unit's representations and yields
//! *candidates* — locations with a structural score and evidence. The
//! pipeline then attaches a semantic score to every candidate (lexical
//! cues, or an external scorer when configured), fuses the two scores
//! into a confidence, and emits findings that clear the fusion threshold.

pub mod clones;
pub mod fusion;
pub mod secrets;
pub mod semantic;
pub mod smells;
pub mod taint;

use crate::ast::NormalizedAst;
use crate::cfg::{build_cfg, Cfg};
use crate::config::ToolConfig;
use crate::dataflow::{reaching_definitions, DefUseIndex};
use crate::error::Result;
use crate::frontend::FrontEndRegistry;
use crate::lexer::TokenStream;
use crate::metrics::{function_metrics, MetricVector};
use crate::pdg::{build_pdg, Pdg};
use crate::source::SourceUnit;
use crate::span::Span;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

pub use fusion::FusionMode;

/// Detection rules. Vulnerability rules map to a CWE; smells do not.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    LongMethod,
    GodClass,
    DataClass,
    FeatureEnvy,
    DuplicatedCode,
    SqlInjection,
    CommandInjection,
    Xss,
    HardcodedSecret,
}

impl Rule {
    pub const ALL: [Rule; 9] = [
        Rule::LongMethod,
        Rule::GodClass,
        Rule::DataClass,
        Rule::FeatureEnvy,
        Rule::DuplicatedCode,
        Rule::SqlInjection,
        Rule::CommandInjection,
        Rule::Xss,
        Rule::HardcodedSecret,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::LongMethod => "long-method",
            Rule::GodClass => "god-class",
            Rule::DataClass => "data-class",
            Rule::FeatureEnvy => "feature-envy",
            Rule::DuplicatedCode => "duplicated-code",
            Rule::SqlInjection => "sql-injection",
            Rule::CommandInjection => "command-injection",
            Rule::Xss => "xss",
            Rule::HardcodedSecret => "hardcoded-secret",
        }
    }

    pub fn parse(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }

    /// CWE id for vulnerability rules; smells have none.
    pub fn cwe(self) -> Option<u16> {
        match self {
            Rule::SqlInjection => Some(89),
            Rule::CommandInjection => Some(78),
            Rule::Xss => Some(79),
            Rule::HardcodedSecret => Some(798),
            _ => None,
        }
    }

    pub fn is_vulnerability(self) -> bool {
        self.cwe().is_some()
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum EntityKind {
    Function,
    Class,
    Module,
}

/// The program entity a finding is anchored to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EntityRef {
    pub kind: EntityKind,
    pub name: String,
    pub span: Span,
}

/// Rule-specific supporting facts carried by each finding; explanation
/// and repair read these rather than re-deriving them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Evidence {
    /// Metric values and the thresholds they exceeded.
    Metrics {
        values: BTreeMap<String, f64>,
        thresholds: BTreeMap<String, f64>,
    },
    /// Foreign vs. own attribute access paths for feature envy.
    Envy { foreign: Vec<String>, own: Vec<String> },
    /// The twin region of a duplicated block.
    Clone {
        partner_path: String,
        partner_span: Span,
        token_count: u32,
        fingerprint: String,
    },
    /// Credential literal facts.
    Secret {
        named_credential: bool,
        target: Option<String>,
        literal_span: Span,
        literal_len: u32,
        entropy_bits: f64,
    },
    /// Source-to-sink taint trace.
    Taint {
        source_span: Span,
        sink_span: Span,
        sink: String,
        sanitized: bool,
        steps: Vec<TaintStep>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TaintStep {
    pub span: Span,
    pub var: String,
}

/// A confirmed detection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Finding {
    /// Stable id: hash of rule, path, and span.
    pub id: String,
    pub rule: Rule,
    /// Present exactly when the rule is a vulnerability.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cwe: Option<u16>,
    pub path: String,
    pub span: Span,
    pub entity: EntityRef,
    pub structural_score: f64,
    pub semantic_score: f64,
    pub confidence: f64,
    pub evidence: Evidence,
    /// Set when scanning against a diff: whether the finding touches
    /// changed lines.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_diff: Option<bool>,
}

impl Finding {
    pub fn compute_id(rule: Rule, path: &str, span: Span) -> String {
        let mut hasher = Sha256::new();
        hasher.update(rule.name().as_bytes());
        hasher.update(b"|");
        hasher.update(path.as_bytes());
        hasher.update(b"|");
        hasher.update(span.to_string().as_bytes());
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Detector output before semantic scoring and fusion.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub rule: Rule,
    pub span: Span,
    pub entity: EntityRef,
    pub structural_score: f64,
    pub evidence: Evidence,
}

/// Everything derived from one unit: the representation stack detectors
/// and downstream stages work from.
#[derive(Debug, Clone)]
pub struct UnitAnalysis {
    pub unit: SourceUnit,
    pub tokens: TokenStream,
    pub ast: NormalizedAst,
    pub functions: Vec<FunctionArtifacts>,
}

/// Per-function graphs and metrics, index-aligned with
/// `UnitAnalysis::ast.functions()`.
#[derive(Debug, Clone)]
pub struct FunctionArtifacts {
    pub name: String,
    pub class_name: Option<String>,
    pub span: Span,
    pub cfg: Cfg,
    pub defuse: DefUseIndex,
    pub pdg: Pdg,
    pub metrics: MetricVector,
}

/// Lifts one unit through tokens, AST, CFGs, def-use, PDGs, and metrics.
pub fn analyze_unit(unit: &SourceUnit) -> Result<UnitAnalysis> {
    let registry = FrontEndRegistry::default();
    let front_end = registry.for_language(&unit.language)?;
    let tokens = front_end.tokenize(unit)?;
    let ast = front_end.parse(unit)?;

    let mut functions = Vec::new();
    for view in ast.functions() {
        let cfg = build_cfg(&view);
        let defuse = reaching_definitions(&view, &cfg);
        let pdg = build_pdg(&view, &cfg, &defuse);
        let metrics = function_metrics(&view, unit);
        functions.push(FunctionArtifacts {
            name: view.name.clone(),
            class_name: view.class_name.clone(),
            span: view.stmt.span,
            cfg,
            defuse,
            pdg,
            metrics,
        });
    }
    Ok(UnitAnalysis { unit: unit.clone(), tokens, ast, functions })
}

/// A unit the scan could not analyze, with the reason.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SkippedUnit {
    pub path: String,
    pub reason: String,
}

/// Result of scanning a set of units.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanOutput {
    pub findings: Vec<Finding>,
    pub skipped: Vec<SkippedUnit>,
    /// Notes about scorer degradation (external scorer fell back).
    pub scorer_notes: Vec<String>,
    pub units_scanned: u32,
    pub total_loc: u64,
}

/// Scans units with the configured fusion weights.
pub fn scan_units(units: &[SourceUnit], config: &ToolConfig) -> ScanOutput {
    scan_units_with(units, config, FusionMode::Fused)
}

/// Scan entry point with an explicit fusion mode, used by ablation runs.
pub fn scan_units_with(
    units: &[SourceUnit],
    config: &ToolConfig,
    mode: FusionMode,
) -> ScanOutput {
    let mut analyses: Vec<UnitAnalysis> = Vec::new();
    let mut skipped = Vec::new();
    for unit in units {
        match analyze_unit(unit) {
            Ok(analysis) => analyses.push(analysis),
            Err(err) => skipped.push(SkippedUnit {
                path: unit.path.clone(),
                reason: err.to_string(),
            }),
        }
    }

    let mut per_unit: Vec<Vec<Candidate>> = Vec::with_capacity(analyses.len());
    for analysis in &analyses {
        per_unit.push(unit_candidates(analysis, config));
    }
    for (unit_idx, candidate) in clones::detect_duplicated_code(&analyses, config) {
        per_unit[unit_idx].push(candidate);
    }

    let mut scorer_notes = Vec::new();
    let mut findings: Vec<Finding> = Vec::new();
    for (analysis, candidates) in analyses.iter().zip(per_unit) {
        let semantic_scores =
            semantic::score_candidates(analysis, &candidates, &config.scorer, &mut scorer_notes);
        for (candidate, semantic_score) in candidates.into_iter().zip(semantic_scores) {
            if !config.rule_enabled(candidate.rule) {
                continue;
            }
            let confidence = fusion::fuse(
                candidate.rule,
                candidate.structural_score,
                semantic_score,
                &config.fusion,
                &config.scorer,
                mode,
            );
            if confidence + 1e-12 < config.fusion.threshold {
                continue;
            }
            findings.push(Finding {
                id: Finding::compute_id(candidate.rule, &analysis.unit.path, candidate.span),
                rule: candidate.rule,
                cwe: candidate.rule.cwe(),
                path: analysis.unit.path.clone(),
                span: candidate.span,
                entity: candidate.entity,
                structural_score: candidate.structural_score,
                semantic_score,
                confidence,
                evidence: candidate.evidence,
                in_diff: None,
            });
        }
    }

    // Deterministic order; duplicate (rule, path, span) keeps the
    // higher-confidence instance.
    findings.sort_by(|a, b| {
        (&a.path, a.span, a.rule)
            .cmp(&(&b.path, b.span, b.rule))
            .then(b.confidence.total_cmp(&a.confidence))
    });
    findings.dedup_by(|next, kept| next.id == kept.id);

    let units_scanned = analyses.len() as u32;
    let total_loc = analyses.iter().map(|a| u64::from(a.unit.loc)).sum();
    ScanOutput { findings, skipped, scorer_notes, units_scanned, total_loc }
}

/// Runs the per-unit detectors (everything except cross-unit clones).
fn unit_candidates(analysis: &UnitAnalysis, config: &ToolConfig) -> Vec<Candidate> {
    let mut candidates = Vec::new();
    let views = analysis.ast.functions();

    for (view, artifacts) in views.iter().zip(&analysis.functions) {
        candidates.extend(smells::detect_long_method(artifacts, &config.thresholds));
        candidates.extend(smells::detect_feature_envy(view, artifacts, &config.thresholds));
        candidates.extend(taint::detect_injection(view, artifacts, &config.taint));
    }
    for class in analysis.ast.classes() {
        candidates.extend(smells::detect_god_class(&class, &analysis.unit, &config.thresholds));
        candidates.extend(smells::detect_data_class(&class, &analysis.unit, &config.thresholds));
    }
    candidates.extend(secrets::detect_hardcoded_secret(analysis, &config.thresholds));
    candidates
}

/// Innermost entity containing `span`: function, then class, then module.
pub fn enclosing_entity(ast: &NormalizedAst, unit: &SourceUnit, span: Span) -> EntityRef {
    let mut best: Option<(Span, EntityRef)> = None;
    for view in ast.functions() {
        if view.stmt.span.contains(&span) {
            let candidate = EntityRef {
                kind: EntityKind::Function,
                name: view.name.clone(),
                span: view.stmt.span,
            };
            if best.as_ref().is_none_or(|(s, _)| s.contains(&view.stmt.span)) {
                best = Some((view.stmt.span, candidate));
            }
        }
    }
    if let Some((_, entity)) = best {
        return entity;
    }
    for class in ast.classes() {
        if class.stmt.span.contains(&span) {
            return EntityRef {
                kind: EntityKind::Class,
                name: class.name.clone(),
                span: class.stmt.span,
            };
        }
    }
    EntityRef {
        kind: EntityKind::Module,
        name: unit.path.clone(),
        span: ast.module.span,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finding_ids_are_stable_and_distinct() {
        let span = Span::new(3, 1, 9, 20);
        let a = Finding::compute_id(Rule::LongMethod, "a.py", span);
        let b = Finding::compute_id(Rule::LongMethod, "a.py", span);
        let c = Finding::compute_id(Rule::GodClass, "a.py", span);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 16);
    }

    #[test]
    fn cwe_is_present_exactly_for_vulnerability_rules() {
        for rule in Rule::ALL {
            assert_eq!(rule.cwe().is_some(), rule.is_vulnerability());
        }
        assert_eq!(Rule::SqlInjection.cwe(), Some(89));
        assert_eq!(Rule::CommandInjection.cwe(), Some(78));
        assert_eq!(Rule::Xss.cwe(), Some(79));
        assert_eq!(Rule::HardcodedSecret.cwe(), Some(798));
        assert_eq!(Rule::LongMethod.cwe(), None);
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in Rule::ALL {
            assert_eq!(Rule::parse(rule.name()), Some(rule));
        }
        assert_eq!(Rule::parse("nonsense"), None);
    }
}
