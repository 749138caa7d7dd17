//! Repair suggestion, validation, and ranking.
//!
//! Each finding maps to a strategy: long methods get extract-method
//! candidates, hardcoded secrets get an environment relocation,
//! injection findings get a parameterized query. Architectural smells
//! (god class, data class, feature envy, duplicated code) and XSS get
//! an advisory note without edits — mechanical rewrites of those are
//! unreliable. A patch is accepted only when the patched unit still
//! parses, the target finding is gone from a re-scan, and no new
//! findings appeared; suggestions are then ranked by acceptance, risk
//! reduction, edit size, and a content hash as the final tie-break.

pub mod apply;
pub mod extract;
pub mod rewrite;

pub use apply::{apply_patch, unified_diff};
pub use extract::{enumerate_regions, extract_method, region_io, Region};
pub use rewrite::{parameterize_query, relocate_secret};

use crate::config::ToolConfig;
use crate::detect::{analyze_unit, scan_units, Finding, Rule, UnitAnalysis};
use crate::error::Result;
use crate::source::SourceUnit;
use crate::span::Span;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// One replacement of a source span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Edit {
    pub span: Span,
    pub replacement: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatchKind {
    ExtractMethod,
    RelocateSecret,
    ParameterizeQuery,
    Advisory,
}

/// An ordered set of edits plus a one-line description. Advisory
/// patches carry no edits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Patch {
    pub edits: Vec<Edit>,
    pub description: String,
    pub kind: PatchKind,
}

impl Patch {
    /// Total characters of replacement text — the edit-size rank key.
    pub fn edit_chars(&self) -> usize {
        self.edits.iter().map(|e| e.replacement.chars().count()).sum()
    }

    /// Stable content hash used as the final ranking tie-break.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.description.as_bytes());
        for edit in &self.edits {
            hasher.update(edit.span.to_string().as_bytes());
            hasher.update([0x1f]);
            hasher.update(edit.replacement.as_bytes());
            hasher.update([0x1e]);
        }
        let digest = hasher.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

/// Outcome of re-analyzing a patched unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ValidationReport {
    pub parses_ok: bool,
    pub target_cleared: bool,
    pub new_findings: Vec<Finding>,
    /// Complexity change of the enclosing entity (after − before).
    pub delta_cc: i64,
    pub delta_cbo: i64,
    pub delta_loc: i64,
    /// Exit status of the optional user-supplied test command; recorded
    /// but not part of the acceptance verdict.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub test_exit_code: Option<i32>,
    pub accepted: bool,
}

/// A candidate repair for one finding, ranked within its siblings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RepairSuggestion {
    pub finding_id: String,
    pub patch: Patch,
    /// 1-based; consecutive within one finding's suggestions.
    pub rank: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub validation: Option<ValidationReport>,
}

/// Generates unvalidated suggestions for one finding. The list may be
/// empty when no strategy applies (no extractable region, no resolvable
/// query shape, a secret not assigned to anything).
pub fn suggest(
    analysis: &UnitAnalysis,
    finding: &Finding,
    _config: &ToolConfig,
) -> Vec<RepairSuggestion> {
    let patches: Vec<Patch> = match finding.rule {
        Rule::LongMethod => {
            let views = analysis.ast.functions();
            views
                .iter()
                .zip(&analysis.functions)
                .filter(|(v, _)| v.name == finding.entity.name)
                .flat_map(|(view, artifacts)| {
                    enumerate_regions(view)
                        .iter()
                        .enumerate()
                        .filter_map(|(k, region)| {
                            extract_method(view, region, &artifacts.defuse, &analysis.unit, k)
                                .ok()
                        })
                        .collect::<Vec<_>>()
                })
                .collect()
        }
        Rule::HardcodedSecret => relocate_secret(finding, analysis).into_iter().collect(),
        Rule::SqlInjection | Rule::CommandInjection => {
            parameterize_query(finding, analysis).into_iter().collect()
        }
        Rule::GodClass
        | Rule::DataClass
        | Rule::FeatureEnvy
        | Rule::DuplicatedCode
        | Rule::Xss => vec![Patch {
            edits: Vec::new(),
            description: advisory_text(finding.rule).to_string(),
            kind: PatchKind::Advisory,
        }],
    };
    patches
        .into_iter()
        .enumerate()
        .map(|(i, patch)| RepairSuggestion {
            finding_id: finding.id.clone(),
            patch,
            rank: i as u32 + 1,
            validation: None,
        })
        .collect()
}

fn advisory_text(rule: Rule) -> &'static str {
    match rule {
        Rule::GodClass => {
            "split this class along its responsibility seams; move cohesive \
             method groups into collaborators"
        }
        Rule::DataClass => {
            "move behavior that consumes these fields into this class, or \
             inline the record at its call sites"
        }
        Rule::FeatureEnvy => {
            "move this method to the class whose attributes it mostly reads"
        }
        Rule::DuplicatedCode => {
            "unify this block with its twin into one shared helper"
        }
        Rule::Xss => {
            "escape untrusted values before rendering them into markup"
        }
        _ => "no automated repair available",
    }
}

/// Re-analyzes a patched unit and reports whether the patch holds up.
pub fn validate(
    before: &SourceUnit,
    after_text: &str,
    finding: &Finding,
    config: &ToolConfig,
) -> ValidationReport {
    let after_unit =
        SourceUnit::new(before.path.clone(), before.language.clone(), after_text);

    let Ok(after_analysis) = analyze_unit(&after_unit) else {
        return ValidationReport {
            parses_ok: false,
            target_cleared: false,
            new_findings: Vec::new(),
            delta_cc: 0,
            delta_cbo: 0,
            delta_loc: 0,
            test_exit_code: run_test_command(config),
            accepted: false,
        };
    };

    let before_scan = scan_units(std::slice::from_ref(before), config).findings;
    let after_scan = scan_units(std::slice::from_ref(&after_unit), config).findings;

    let key = |f: &Finding| (f.rule, f.entity.name.clone());
    let mut before_counts: BTreeMap<(Rule, String), usize> = BTreeMap::new();
    for f in &before_scan {
        *before_counts.entry(key(f)).or_insert(0) += 1;
    }
    let mut after_counts: BTreeMap<(Rule, String), usize> = BTreeMap::new();
    for f in &after_scan {
        *after_counts.entry(key(f)).or_insert(0) += 1;
    }

    let target_key = key(finding);
    let target_cleared = after_counts.get(&target_key).copied().unwrap_or(0)
        < before_counts.get(&target_key).copied().unwrap_or(0);

    // Findings whose (rule, entity) group grew are new; within a grown
    // group the extras are taken from the end of span order.
    let mut new_findings = Vec::new();
    let mut seen: BTreeMap<(Rule, String), usize> = BTreeMap::new();
    for f in &after_scan {
        let k = key(f);
        let idx = seen.entry(k.clone()).or_insert(0);
        if *idx >= before_counts.get(&k).copied().unwrap_or(0) {
            new_findings.push(f.clone());
        }
        *idx += 1;
    }

    let (delta_cc, delta_cbo, delta_loc) = entity_deltas(
        &analyze_or_unreachable(before),
        &after_analysis,
        finding,
    );

    let accepted = target_cleared && new_findings.is_empty();
    ValidationReport {
        parses_ok: true,
        target_cleared,
        new_findings,
        delta_cc,
        delta_cbo,
        delta_loc,
        test_exit_code: run_test_command(config),
        accepted,
    }
}

/// The unit was already analyzed to produce the finding, so a re-parse
/// cannot fail short of a bug.
fn analyze_or_unreachable(unit: &SourceUnit) -> UnitAnalysis {
    analyze_unit(unit).expect("unit analyzed before patching")
}

/// Metric deltas (after − before) for the finding's enclosing entity:
/// complexity, coupling, and line count. Functions compare cyclomatic
/// complexity; classes compare WMC and CBO; a vanished entity reports
/// zero change.
fn entity_deltas(
    before: &UnitAnalysis,
    after: &UnitAnalysis,
    finding: &Finding,
) -> (i64, i64, i64) {
    let name = finding.entity.name.as_str();
    let fn_metrics = |a: &UnitAnalysis| {
        a.functions.iter().find(|f| f.name == name).map(|f| f.metrics)
    };
    let class_metrics = |a: &UnitAnalysis| {
        let classes = a.ast.classes();
        classes.iter().find(|c| c.name == name).map(|c| {
            crate::metrics::class_metrics(c, &a.unit)
        })
    };
    let pick = |a: &UnitAnalysis| fn_metrics(a).or_else(|| class_metrics(a));
    match (pick(before), pick(after)) {
        (Some(b), Some(a)) => {
            let complexity =
                |m: &crate::metrics::MetricVector| if m.wmc > 0 { m.wmc } else { m.cc };
            (
                i64::from(complexity(&a)) - i64::from(complexity(&b)),
                i64::from(a.cbo) - i64::from(b.cbo),
                i64::from(a.loc) - i64::from(b.loc),
            )
        }
        _ => (0, 0, 0),
    }
}

fn run_test_command(config: &ToolConfig) -> Option<i32> {
    let command = config.validation.test_command.as_ref()?;
    let status = std::process::Command::new("sh")
        .arg("-c")
        .arg(command)
        .status()
        .ok()?;
    status.code()
}

/// Orders suggestions best-first and reassigns consecutive ranks.
///
/// Sort key: accepted first, then larger risk reduction, then fewer
/// edited characters, then patch hash. Risk reduction credits the
/// target rule's severity when cleared and debits every new finding.
pub fn rank(
    finding: &Finding,
    mut suggestions: Vec<RepairSuggestion>,
    config: &ToolConfig,
) -> Vec<RepairSuggestion> {
    let reduction = |s: &RepairSuggestion| -> f64 {
        let Some(v) = &s.validation else { return 0.0 };
        let mut r = if v.target_cleared { config.risk.weight(finding.rule).0 } else { 0.0 };
        for f in &v.new_findings {
            r -= config.risk.weight(f.rule).0;
        }
        r
    };
    suggestions.sort_by(|a, b| {
        let acc_a = a.validation.as_ref().is_some_and(|v| v.accepted);
        let acc_b = b.validation.as_ref().is_some_and(|v| v.accepted);
        acc_b
            .cmp(&acc_a)
            .then_with(|| {
                reduction(b).partial_cmp(&reduction(a)).expect("finite risk weights")
            })
            .then_with(|| a.patch.edit_chars().cmp(&b.patch.edit_chars()))
            .then_with(|| a.patch.content_hash().cmp(&b.patch.content_hash()))
    });
    for (i, s) in suggestions.iter_mut().enumerate() {
        s.rank = i as u32 + 1;
    }
    suggestions
}

/// Full repair flow for one finding: suggest, apply to a copy,
/// validate, rank.
pub fn repair_finding(
    analysis: &UnitAnalysis,
    finding: &Finding,
    config: &ToolConfig,
) -> Vec<RepairSuggestion> {
    let mut suggestions = suggest(analysis, finding, config);
    for suggestion in &mut suggestions {
        if suggestion.patch.edits.is_empty() {
            continue;
        }
        match apply_patch(&analysis.unit.text, &suggestion.patch) {
            Ok(after_text) => {
                suggestion.validation =
                    Some(validate(&analysis.unit, &after_text, finding, config));
            }
            Err(_) => {
                suggestion.validation = Some(ValidationReport {
                    parses_ok: false,
                    target_cleared: false,
                    new_findings: Vec::new(),
                    delta_cc: 0,
                    delta_cbo: 0,
                    delta_loc: 0,
                    test_exit_code: None,
                    accepted: false,
                });
            }
        }
    }
    rank(finding, suggestions, config)
}

/// Writes the patched unit and its diff under `dir`, mirroring the
/// unit's path. Root and parent components are stripped so an absolute
/// or escaping unit path still lands inside `dir`. Returns the path of
/// the patched copy.
pub fn write_branch(dir: &Path, unit: &SourceUnit, patch: &Patch) -> Result<PathBuf> {
    let after = apply_patch(&unit.text, patch)?;
    let relative: PathBuf = Path::new(&unit.path)
        .components()
        .filter(|c| matches!(c, std::path::Component::Normal(_)))
        .collect();
    let target = dir.join(relative);
    if let Some(parent) = target.parent() {
        std::fs::create_dir_all(parent)?;
    }
    std::fs::write(&target, &after)?;
    let diff = unified_diff(&unit.path, &unit.text, &after);
    std::fs::write(target.with_extension("py.diff"), diff)?;
    Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan_one(text: &str) -> (UnitAnalysis, Vec<Finding>) {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        let findings = scan_units(&[unit], &ToolConfig::default()).findings;
        (analysis, findings)
    }

    #[test]
    fn secrets_get_one_relocation_suggestion() {
        let (analysis, findings) = scan_one("api_key = \"zk9f3q8rv2\"\n");
        let got = repair_finding(&analysis, &findings[0], &ToolConfig::default());
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rank, 1);
        assert_eq!(got[0].patch.kind, PatchKind::RelocateSecret);
        let v = got[0].validation.as_ref().expect("validated");
        assert!(v.parses_ok);
        assert!(v.target_cleared);
        assert!(v.new_findings.is_empty());
        assert!(v.accepted);
        assert_eq!(v.delta_loc, 0);
    }

    #[test]
    fn god_class_gets_advisory_without_edits() {
        let mut text = String::from("class Hub:\n");
        for i in 0..16 {
            text.push_str(&format!("    def m{i}(self):\n        return {i}\n"));
        }
        let (analysis, findings) = scan_one(&text);
        let finding = findings.iter().find(|f| f.rule == Rule::GodClass).expect("fires");
        let got = repair_finding(&analysis, finding, &ToolConfig::default());
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].patch.kind, PatchKind::Advisory);
        assert!(got[0].patch.edits.is_empty());
        assert!(got[0].validation.is_none());
    }

    #[test]
    fn parameterized_repair_is_accepted() {
        let (analysis, findings) = scan_one(concat!(
            "def lookup(user_input, db):\n",
            "    db.execute(\"SELECT id=\" + user_input)\n",
        ));
        let sql = findings.iter().find(|f| f.rule == Rule::SqlInjection).unwrap();
        let got = repair_finding(&analysis, sql, &ToolConfig::default());
        assert_eq!(got.len(), 1);
        let v = got[0].validation.as_ref().unwrap();
        assert!(v.accepted, "{v:?}");
    }

    #[test]
    fn long_method_extraction_reduces_complexity() {
        // A method made long by branch count, with an extractable inner
        // block that carries several decisions.
        let mut text = String::from("def dispatch(code):\n    result = 0\n");
        text.push_str("    if code:\n");
        for i in 0..6 {
            text.push_str(&format!(
                "        if code == {i}:\n            result = {i}\n"
            ));
        }
        for i in 0..5 {
            text.push_str(&format!("    if code == {n}:\n        result = {n}\n", n = i + 6));
        }
        text.push_str("    return result\n");
        let (analysis, findings) = scan_one(&text);
        let lm = findings.iter().find(|f| f.rule == Rule::LongMethod).expect("fires");
        let got = repair_finding(&analysis, lm, &ToolConfig::default());
        assert!(!got.is_empty());
        let accepted: Vec<_> = got
            .iter()
            .filter(|s| s.validation.as_ref().is_some_and(|v| v.accepted))
            .collect();
        assert!(!accepted.is_empty(), "{got:?}");
        assert_eq!(accepted[0].rank, 1, "accepted outranks rejected");
        let v = accepted[0].validation.as_ref().unwrap();
        assert!(v.delta_cc <= -1, "extraction moves decisions out: {v:?}");
    }

    #[test]
    fn helper_that_is_itself_long_blocks_acceptance() {
        // 32 straight-line statements: extracting the whole run creates
        // a 32-statement helper that re-fires the same rule.
        let mut text = String::from("def bulk():\n");
        for i in 0..31 {
            text.push_str(&format!("    x{i} = {i}\n"));
        }
        text.push_str("    emit(x0)\n");
        let (analysis, findings) = scan_one(&text);
        let lm = findings.iter().find(|f| f.rule == Rule::LongMethod).expect("fires");
        let got = repair_finding(&analysis, lm, &ToolConfig::default());
        assert!(!got.is_empty());
        for s in &got {
            let v = s.validation.as_ref().unwrap();
            assert!(
                !v.new_findings.is_empty() && !v.accepted,
                "the helper is as long as the original: {v:?}"
            );
        }
    }

    #[test]
    fn ranks_are_consecutive_and_deterministic() {
        let mut text = String::from("def steps(flag):\n    acc = 0\n");
        // Two extractable if-bodies.
        text.push_str("    if flag:\n");
        for i in 0..3 {
            text.push_str(&format!("        if flag == {i}:\n            acc = {i}\n"));
        }
        text.push_str("    if acc:\n");
        for i in 0..3 {
            text.push_str(&format!("        if acc == {i}:\n            acc = {n}\n", n = i + 1));
        }
        for i in 0..20 {
            text.push_str(&format!("    v{i} = {i}\n"));
        }
        text.push_str("    return acc\n");
        let (analysis, findings) = scan_one(&text);
        let lm = findings.iter().find(|f| f.rule == Rule::LongMethod).expect("fires");
        let a = repair_finding(&analysis, lm, &ToolConfig::default());
        let b = repair_finding(&analysis, lm, &ToolConfig::default());
        assert_eq!(a, b, "ranking is deterministic");
        let ranks: Vec<u32> = a.iter().map(|s| s.rank).collect();
        let expect: Vec<u32> = (1..=a.len() as u32).collect();
        assert_eq!(ranks, expect);
    }

    #[test]
    fn test_command_exit_code_is_recorded() {
        let (analysis, findings) = scan_one("password = \"hunter2x\"\n");
        let mut config = ToolConfig::default();
        config.validation.test_command = Some("exit 3".into());
        let got = repair_finding(&analysis, &findings[0], &config);
        let v = got[0].validation.as_ref().unwrap();
        assert_eq!(v.test_exit_code, Some(3));
        assert!(v.accepted, "exit code is recorded, not judged");
    }

    #[test]
    fn branch_mode_writes_patched_copy_and_diff() {
        let dir = tempfile::tempdir().expect("tempdir");
        let (analysis, findings) = scan_one("password = \"hunter2x\"\n");
        let suggestions = repair_finding(&analysis, &findings[0], &ToolConfig::default());
        let path = write_branch(dir.path(), &analysis.unit, &suggestions[0].patch)
            .expect("writes");
        let patched = std::fs::read_to_string(&path).unwrap();
        assert!(patched.contains("os.getenv(\"PASSWORD\")"));
        let diff =
            std::fs::read_to_string(dir.path().join("t.py.diff")).unwrap();
        assert!(diff.starts_with("--- a/t.py\n+++ b/t.py\n"), "{diff}");
        assert!(diff.contains("-password = \"hunter2x\""), "{diff}");
        assert!(diff.contains("+password = os.getenv(\"PASSWORD\")"), "{diff}");
    }
}
