//! CI/CD-facing output: SARIF, PR-comment markdown, changed-files
//! filtering, and the accept/reject feedback loop.
//!
//! The SARIF emitter targets the 2.1.0 subset CI systems actually read:
//! one run, driver rules, results with level, message, and a physical
//! location. The feedback log is line-delimited JSON, append-only and
//! replayable; `update_weights` recalibrates per-rule fusion weights
//! from the trailing acceptance rate, bounded so no amount of feedback
//! can silence either evidence channel.

use crate::config::{FeedbackConfig, FusionConfig, OutputConfig, RuleWeights};
use crate::detect::{Finding, Rule};
use crate::error::{Error, Result};
use crate::eval::LineRange;
use crate::explain::{attribute, render_explanation, ExplanationFormat};
use crate::repair::{apply_patch, unified_diff, RepairSuggestion};
use crate::source::SourceUnit;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::path::Path;

/// Identity block written into SARIF tool metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ToolMeta {
    pub name: String,
    pub version: String,
}

impl Default for ToolMeta {
    fn default() -> Self {
        ToolMeta {
            name: "scour".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

fn rule_description(rule: Rule) -> &'static str {
    match rule {
        Rule::LongMethod => "Method exceeds statement or complexity limits",
        Rule::GodClass => "Class concentrates too many methods, complexity, or coupling",
        Rule::DataClass => "Class is mostly trivial accessors over its fields",
        Rule::FeatureEnvy => "Method reads foreign attributes more than its own",
        Rule::DuplicatedCode => "Token-level twin of another code region",
        Rule::SqlInjection => "Untrusted value reaches a SQL execution sink",
        Rule::CommandInjection => "Untrusted value reaches a shell or process sink",
        Rule::Xss => "Untrusted value reaches an HTML rendering sink",
        Rule::HardcodedSecret => "Credential-looking literal embedded in source",
    }
}

/// Renders findings as a SARIF 2.1.0 document. Findings at or above the
/// configured confidence emit as `error`, the rest as `warning`; output
/// is deterministic for a fixed input order.
pub fn emit_sarif(findings: &[Finding], meta: &ToolMeta, output: &OutputConfig) -> Value {
    let rule_ids: BTreeSet<Rule> = findings.iter().map(|f| f.rule).collect();
    let rules: Vec<Rule> = rule_ids.into_iter().collect();
    let rule_entries: Vec<Value> = rules
        .iter()
        .map(|r| {
            let mut entry = json!({
                "id": r.name(),
                "shortDescription": { "text": rule_description(*r) },
            });
            if let Some(cwe) = r.cwe() {
                entry["properties"] = json!({ "cwe": format!("CWE-{cwe}") });
            }
            entry
        })
        .collect();
    let results: Vec<Value> = findings
        .iter()
        .map(|f| {
            let level = if f.confidence >= output.error_confidence {
                "error"
            } else {
                "warning"
            };
            let rule_index = rules.iter().position(|r| *r == f.rule).expect("rule listed");
            json!({
                "ruleId": f.rule.name(),
                "ruleIndex": rule_index,
                "level": level,
                "message": {
                    "text": format!(
                        "{} in `{}` (confidence {:.2})",
                        rule_description(f.rule),
                        f.entity.name,
                        f.confidence
                    ),
                },
                "locations": [{
                    "physicalLocation": {
                        "artifactLocation": { "uri": f.path },
                        "region": {
                            "startLine": f.span.start_line,
                            "endLine": f.span.end_line,
                        },
                    },
                }],
                "partialFingerprints": { "findingId": f.id },
            })
        })
        .collect();
    json!({
        "$schema": "https://json.schemastore.org/sarif-2.1.0.json",
        "version": "2.1.0",
        "runs": [{
            "tool": {
                "driver": {
                    "name": meta.name,
                    "version": meta.version,
                    "rules": rule_entries,
                },
            },
            "results": results,
        }],
    })
}

/// Renders findings as pull-request comment markdown: one section per
/// finding with its explanation and the top-ranked repair (a fenced diff
/// for edit patches, the advisory text otherwise), capped at
/// `output.pr_comment_max` sections with an overflow line.
pub fn render_pr_comment(
    findings: &[Finding],
    suggestions: &BTreeMap<String, Vec<RepairSuggestion>>,
    units: &BTreeMap<String, SourceUnit>,
    output: &OutputConfig,
) -> String {
    if findings.is_empty() {
        return "No issues found.\n".to_string();
    }
    let mut out = String::new();
    let shown = findings.len().min(output.pr_comment_max);
    for finding in &findings[..shown] {
        out.push_str("---\n\n");
        match attribute(finding)
            .and_then(|a| render_explanation(finding, &a, ExplanationFormat::Markdown))
        {
            Ok(text) => out.push_str(&text),
            Err(_) => out.push_str(&format!(
                "**{}** in `{}` at `{}:{}`\n",
                finding.rule, finding.entity.name, finding.path, finding.span
            )),
        }
        out.push('\n');
        match suggestions.get(&finding.id).and_then(|s| s.first()) {
            None => {}
            Some(top) if top.patch.edits.is_empty() => {
                out.push_str(&format!("**Suggested action:** {}\n\n", top.patch.description));
            }
            Some(top) => {
                let diff = units.get(&finding.path).and_then(|unit| {
                    apply_patch(&unit.text, &top.patch)
                        .ok()
                        .map(|after| unified_diff(&finding.path, &unit.text, &after))
                });
                match diff {
                    Some(diff) if !diff.is_empty() => {
                        out.push_str(&format!(
                            "**Suggested fix:** {}\n\n```diff\n{diff}```\n\n",
                            top.patch.description
                        ));
                    }
                    _ => {
                        out.push_str(&format!(
                            "**Suggested fix:** {}\n\n",
                            top.patch.description
                        ));
                    }
                }
            }
        }
    }
    if findings.len() > shown {
        out.push_str(&format!("...and {} more findings.\n", findings.len() - shown));
    }
    out
}

/// Parses a unified diff into changed files and their new-side hunk
/// ranges. Hunks with no new-side lines (pure deletions) contribute the
/// file but no range. Unrecognized lines (context, `diff --git`,
/// `index`) are ignored.
pub fn parse_diff(text: &str) -> Result<BTreeMap<String, Vec<LineRange>>> {
    let mut changed: BTreeMap<String, Vec<LineRange>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("+++ ") {
            let path = rest.split('\t').next().unwrap_or(rest).trim();
            if path == "/dev/null" {
                current = None;
                continue;
            }
            let path = path.strip_prefix("b/").unwrap_or(path).to_string();
            changed.entry(path.clone()).or_default();
            current = Some(path);
        } else if line.starts_with("@@") {
            let file = current
                .as_ref()
                .ok_or_else(|| Error::DiffParse("hunk header before any file header".into()))?;
            if let Some(range) = parse_hunk_header(line)? {
                changed.get_mut(file).expect("file registered").push(range);
            }
        }
    }
    Ok(changed)
}

/// Extracts the new-side range of one `@@ -a,b +c,d @@` header; `None`
/// for hunks that add no lines.
fn parse_hunk_header(line: &str) -> Result<Option<LineRange>> {
    let bad = || Error::DiffParse(line.to_string());
    let body = line.strip_prefix("@@ ").ok_or_else(bad)?;
    let end = body.find(" @@").ok_or_else(bad)?;
    let mut parts = body[..end].split_whitespace();
    let old = parts.next().ok_or_else(bad)?;
    let new = parts.next().ok_or_else(bad)?;
    if parts.next().is_some() || !old.starts_with('-') {
        return Err(bad());
    }
    let new = new.strip_prefix('+').ok_or_else(bad)?;
    let (start, count) = match new.split_once(',') {
        Some((s, c)) => (
            s.parse::<u32>().map_err(|_| bad())?,
            c.parse::<u32>().map_err(|_| bad())?,
        ),
        None => (new.parse::<u32>().map_err(|_| bad())?, 1),
    };
    if count == 0 {
        return Ok(None);
    }
    Ok(Some(LineRange { start_line: start, end_line: start + count - 1 }))
}

/// Keeps only the scan targets named in the diff.
pub fn filter_changed(targets: &[SourceUnit], diff_text: &str) -> Result<Vec<SourceUnit>> {
    let changed = parse_diff(diff_text)?;
    Ok(targets.iter().filter(|u| changed.contains_key(&u.path)).cloned().collect())
}

/// Stamps every finding with whether its span intersects a changed hunk.
pub fn tag_in_diff(findings: &mut [Finding], changed: &BTreeMap<String, Vec<LineRange>>) {
    for finding in findings {
        let touches = changed
            .get(&finding.path)
            .is_some_and(|ranges| ranges.iter().any(|r| r.overlaps_span(finding.span)));
        finding.in_diff = Some(touches);
    }
}

/// Reviewer verdict on a finding or its suggested repair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

/// One immutable entry of the append-only feedback log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FeedbackRecord {
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub finding_id: String,
    pub rule: Rule,
    pub verdict: Verdict,
}

/// Appends one record to the line-delimited JSON log. The finding id
/// must come from a known scan.
pub fn record_feedback(
    log_path: &Path,
    record: &FeedbackRecord,
    known_ids: &BTreeSet<String>,
) -> Result<()> {
    if !known_ids.contains(&record.finding_id) {
        return Err(Error::UnknownFinding(record.finding_id.clone()));
    }
    let mut file = std::fs::OpenOptions::new().create(true).append(true).open(log_path)?;
    let line = serde_json::to_string(record)?;
    writeln!(file, "{line}")?;
    Ok(())
}

/// Replays the feedback log. A missing log is an empty history, not an
/// error; blank lines are skipped.
pub fn read_feedback(log_path: &Path) -> Result<Vec<FeedbackRecord>> {
    let text = match std::fs::read_to_string(log_path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut records = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(line)?);
    }
    Ok(records)
}

/// Recalibrates per-rule fusion weights from reviewer feedback.
///
/// For each rule with at least `minRecords` entries, over the trailing
/// `window` records: wSem' = clamp(wSem + learningRate · (acceptRate −
/// 0.5), floor, ceiling) and wStruct' = 1 − wSem'. Rules below the
/// evidence minimum keep their current weights.
pub fn update_weights(
    records: &[FeedbackRecord],
    fusion: &FusionConfig,
    feedback: &FeedbackConfig,
) -> FusionConfig {
    let mut updated = fusion.clone();
    for rule in Rule::ALL {
        let rule_records: Vec<&FeedbackRecord> =
            records.iter().filter(|r| r.rule == rule).collect();
        if rule_records.len() < feedback.min_records {
            continue;
        }
        let trailing =
            &rule_records[rule_records.len().saturating_sub(feedback.window)..];
        let accepted =
            trailing.iter().filter(|r| r.verdict == Verdict::Accepted).count();
        let rate = accepted as f64 / trailing.len() as f64;
        let current = fusion.weights_for(rule);
        let w_sem = (current.w_sem + feedback.learning_rate * (rate - 0.5))
            .clamp(feedback.w_sem_floor, feedback.w_sem_ceiling);
        updated
            .per_rule
            .insert(rule.name().to_string(), RuleWeights { w_struct: 1.0 - w_sem, w_sem });
    }
    updated
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ToolConfig;
    use crate::detect::{scan_units, EntityKind, EntityRef, Evidence};
    use crate::span::Span;

    fn mk_finding(path: &str, rule: Rule, start: u32, end: u32, confidence: f64) -> Finding {
        let span = Span { start_line: start, start_col: 1, end_line: end, end_col: 1 };
        Finding {
            id: Finding::compute_id(rule, path, span),
            rule,
            cwe: rule.cwe(),
            path: path.to_string(),
            span,
            entity: EntityRef { kind: EntityKind::Function, name: "f".into(), span },
            structural_score: confidence,
            semantic_score: confidence,
            confidence,
            evidence: Evidence::Metrics {
                values: BTreeMap::new(),
                thresholds: BTreeMap::new(),
            },
            in_diff: None,
        }
    }

    #[test]
    fn empty_scan_is_a_valid_empty_document() {
        let doc = emit_sarif(&[], &ToolMeta::default(), &OutputConfig::default());
        assert_eq!(doc["version"], "2.1.0");
        assert_eq!(doc["runs"][0]["results"], json!([]));
        assert_eq!(doc["runs"][0]["tool"]["driver"]["name"], "scour");
    }

    #[test]
    fn sarif_result_carries_region_and_level() {
        let findings = vec![
            mk_finding("a.py", Rule::SqlInjection, 10, 12, 0.88),
            mk_finding("a.py", Rule::LongMethod, 1, 40, 0.6),
        ];
        let doc = emit_sarif(&findings, &ToolMeta::default(), &OutputConfig::default());
        let results = doc["runs"][0]["results"].as_array().unwrap();
        assert_eq!(results.len(), 2);
        assert_eq!(results[0]["ruleId"], "sql-injection");
        assert_eq!(results[0]["level"], "error");
        let region = &results[0]["locations"][0]["physicalLocation"]["region"];
        assert_eq!(region["startLine"], 10);
        assert_eq!(region["endLine"], 12);
        assert_eq!(results[1]["level"], "warning");
        // ruleIndex points back into the driver rules table.
        let rules = doc["runs"][0]["tool"]["driver"]["rules"].as_array().unwrap();
        let idx = results[0]["ruleIndex"].as_u64().unwrap() as usize;
        assert_eq!(rules[idx]["id"], "sql-injection");
        assert_eq!(rules[idx]["properties"]["cwe"], "CWE-89");
    }

    #[test]
    fn sarif_is_deterministic() {
        let findings = vec![
            mk_finding("a.py", Rule::Xss, 3, 3, 0.9),
            mk_finding("b.py", Rule::HardcodedSecret, 1, 1, 0.7),
        ];
        let a = emit_sarif(&findings, &ToolMeta::default(), &OutputConfig::default());
        let b = emit_sarif(&findings, &ToolMeta::default(), &OutputConfig::default());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn pr_comment_handles_the_empty_case() {
        let comment = render_pr_comment(
            &[],
            &BTreeMap::new(),
            &BTreeMap::new(),
            &OutputConfig::default(),
        );
        assert_eq!(comment, "No issues found.\n");
    }

    #[test]
    fn pr_comment_embeds_the_top_ranked_diff() {
        let unit = SourceUnit::python("t.py", "password = \"hunter2x\"\n");
        let config = ToolConfig::default();
        let scan = scan_units(std::slice::from_ref(&unit), &config);
        let finding = &scan.findings[0];
        let analysis = crate::detect::analyze_unit(&unit).unwrap();
        let suggestions = crate::repair::repair_finding(&analysis, finding, &config);
        let by_id = BTreeMap::from([(finding.id.clone(), suggestions)]);
        let units = BTreeMap::from([(unit.path.clone(), unit)]);
        let comment =
            render_pr_comment(&scan.findings, &by_id, &units, &OutputConfig::default());
        assert!(comment.contains("hardcoded-secret"), "{comment}");
        assert!(comment.contains("```diff"), "{comment}");
        assert!(comment.contains("+password = os.getenv(\"PASSWORD\")"), "{comment}");
    }

    #[test]
    fn pr_comment_caps_sections_with_an_overflow_line() {
        let findings: Vec<Finding> = (0..5)
            .map(|i| mk_finding("a.py", Rule::LongMethod, i * 10 + 1, i * 10 + 5, 0.9))
            .collect();
        let output = OutputConfig { pr_comment_max: 2, ..OutputConfig::default() };
        let comment =
            render_pr_comment(&findings, &BTreeMap::new(), &BTreeMap::new(), &output);
        assert_eq!(comment.matches("---").count(), 2);
        assert!(comment.contains("...and 3 more findings."), "{comment}");
    }

    const DIFF: &str = concat!(
        "diff --git a/a.py b/a.py\n",
        "index 111..222 100644\n",
        "--- a/a.py\n",
        "+++ b/a.py\n",
        "@@ -5,3 +5,5 @@ def f():\n",
        " context\n",
        "+added\n",
        "+added\n",
        " context\n",
        "@@ -40,2 +42,0 @@\n",
        "-gone\n",
        "-gone\n",
    );

    #[test]
    fn diff_parsing_extracts_new_side_ranges() {
        let changed = parse_diff(DIFF).expect("parses");
        assert_eq!(changed.len(), 1);
        let ranges = &changed["a.py"];
        // The deletion-only hunk contributes no range.
        assert_eq!(ranges, &[LineRange { start_line: 5, end_line: 9 }]);
        assert!(parse_diff("").unwrap().is_empty());
    }

    #[test]
    fn filter_keeps_only_files_named_in_the_diff() {
        let targets = vec![
            SourceUnit::python("a.py", "x = 1\n"),
            SourceUnit::python("b.py", "y = 2\n"),
        ];
        let kept = filter_changed(&targets, DIFF).expect("filters");
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].path, "a.py");
    }

    #[test]
    fn findings_inside_hunks_are_tagged() {
        let changed = parse_diff(DIFF).unwrap();
        let mut findings = vec![
            mk_finding("a.py", Rule::SqlInjection, 7, 7, 0.9),
            mk_finding("a.py", Rule::SqlInjection, 20, 20, 0.9),
            mk_finding("b.py", Rule::SqlInjection, 7, 7, 0.9),
        ];
        tag_in_diff(&mut findings, &changed);
        assert_eq!(findings[0].in_diff, Some(true));
        assert_eq!(findings[1].in_diff, Some(false));
        assert_eq!(findings[2].in_diff, Some(false));
    }

    #[test]
    fn malformed_hunk_headers_are_rejected() {
        let err = parse_diff("+++ b/a.py\n@@ nonsense @@\n").unwrap_err();
        assert!(matches!(err, Error::DiffParse(_)));
        let err = parse_diff("@@ -1,2 +1,2 @@\n").unwrap_err();
        assert!(matches!(err, Error::DiffParse(_)), "hunk before file header");
    }

    fn mk_record(rule: Rule, verdict: Verdict, t: u64) -> FeedbackRecord {
        FeedbackRecord {
            timestamp: t,
            finding_id: format!("id{t}"),
            rule,
            verdict,
        }
    }

    #[test]
    fn feedback_log_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let log = dir.path().join("feedback.jsonl");
        let known: BTreeSet<String> = (0..5).map(|t| format!("id{t}")).collect();
        let records: Vec<FeedbackRecord> = (0..5)
            .map(|t| {
                let verdict = if t % 2 == 0 { Verdict::Accepted } else { Verdict::Rejected };
                mk_record(Rule::SqlInjection, verdict, t)
            })
            .collect();
        for r in &records {
            record_feedback(&log, r, &known).expect("appends");
        }
        let replayed = read_feedback(&log).expect("replays");
        assert_eq!(replayed, records);
        assert_eq!(read_feedback(&dir.path().join("absent.jsonl")).unwrap(), vec![]);
    }

    #[test]
    fn unknown_finding_ids_are_refused() {
        let dir = tempfile::tempdir().unwrap();
        let log = dir.path().join("feedback.jsonl");
        let err = record_feedback(
            &log,
            &mk_record(Rule::Xss, Verdict::Accepted, 9),
            &BTreeSet::new(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnknownFinding(_)));
        assert!(!log.exists(), "nothing written on refusal");
    }

    #[test]
    fn balanced_feedback_is_a_fixed_point() {
        let records: Vec<FeedbackRecord> = (0..6)
            .map(|t| {
                let verdict = if t < 3 { Verdict::Accepted } else { Verdict::Rejected };
                mk_record(Rule::SqlInjection, verdict, t)
            })
            .collect();
        let fusion = FusionConfig::default();
        let updated = update_weights(&records, &fusion, &FeedbackConfig::default());
        let w = updated.weights_for(Rule::SqlInjection);
        assert!((w.w_sem - 0.4).abs() < 1e-12);
        assert!((w.w_struct - 0.6).abs() < 1e-12);
    }

    #[test]
    fn all_accepted_nudges_semantic_weight_up() {
        let records: Vec<FeedbackRecord> = (0..5)
            .map(|t| mk_record(Rule::SqlInjection, Verdict::Accepted, t))
            .collect();
        let updated =
            update_weights(&records, &FusionConfig::default(), &FeedbackConfig::default());
        let w = updated.weights_for(Rule::SqlInjection);
        assert!((w.w_sem - 0.45).abs() < 1e-12);
        assert!((w.w_struct + w.w_sem - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sparse_rules_keep_their_weights() {
        let records: Vec<FeedbackRecord> =
            (0..3).map(|t| mk_record(Rule::Xss, Verdict::Accepted, t)).collect();
        let fusion = FusionConfig::default();
        let updated = update_weights(&records, &fusion, &FeedbackConfig::default());
        assert_eq!(updated.weights_for(Rule::Xss), fusion.weights_for(Rule::Xss));
    }

    #[test]
    fn weights_stay_inside_the_bounds() {
        // 50 rejections against an already-low wSem pin it at the floor.
        let mut records: Vec<FeedbackRecord> = (0..50)
            .map(|t| mk_record(Rule::LongMethod, Verdict::Rejected, t))
            .collect();
        let mut fusion = FusionConfig::default();
        for _ in 0..10 {
            fusion = update_weights(&records, &fusion, &FeedbackConfig::default());
        }
        let w = fusion.weights_for(Rule::LongMethod);
        assert!((0.1..=0.9).contains(&w.w_sem), "{w:?}");
        assert!((w.w_struct + w.w_sem - 1.0).abs() < 1e-12);

        // The trailing window governs: 10 rejections drowned by 50
        // acceptances read as a perfect acceptance rate.
        records.extend((50..100).map(|t| mk_record(Rule::LongMethod, Verdict::Accepted, t)));
        let updated =
            update_weights(&records, &FusionConfig::default(), &FeedbackConfig::default());
        let w2 = updated.weights_for(Rule::LongMethod);
        let base = FusionConfig::default().weights_for(Rule::LongMethod).w_sem;
        assert!((w2.w_sem - (base + 0.05).max(0.1)).abs() < 1e-12);
    }
}
