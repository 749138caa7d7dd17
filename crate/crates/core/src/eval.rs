//! Corpus evaluation: labeled manifests, reproducible splits, matching
//! of predictions against labels, detection metrics, and risk scoring.
//!
//! A corpus ships as a JSON manifest naming units, their size class, and
//! per-unit labels (category, optional CWE, line span). Evaluation scans
//! the units, greedily matches findings to labels one-to-one, and
//! reports accuracy/precision/recall/F1 per category and pooled, plus
//! coverage of known vulnerabilities and a risk table before and after
//! validated repairs. Undefined metrics (zero denominators) are reported
//! as null, never as zero.

use crate::config::{RiskConfig, ToolConfig};
use crate::detect::{analyze_unit, scan_units, Finding, Rule, SkippedUnit, UnitAnalysis};
use crate::error::{Error, Result};
use crate::source::{Language, SourceUnit};
use crate::span::Span;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

/// Project scale bucket used for split stratification.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum SizeClass {
    Small,
    Medium,
    Large,
}

impl SizeClass {
    fn parse(s: &str) -> Option<SizeClass> {
        match s {
            "small" => Some(SizeClass::Small),
            "medium" => Some(SizeClass::Medium),
            "large" => Some(SizeClass::Large),
            _ => None,
        }
    }
}

/// A labeled line region; endpoints inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LineRange {
    pub start_line: u32,
    pub end_line: u32,
}

impl LineRange {
    /// Shares at least one line with a source span.
    pub fn overlaps_span(&self, span: Span) -> bool {
        self.start_line <= span.end_line && span.start_line <= self.end_line
    }
}

/// One ground-truth annotation inside a unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Label {
    pub category: Rule,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cwe: Option<u16>,
    pub span: LineRange,
}

/// One unit entry of the corpus manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ManifestUnit {
    pub path: String,
    pub language: String,
    pub size_class: SizeClass,
    #[serde(default)]
    pub labels: Vec<Label>,
}

/// The parsed corpus manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusManifest {
    pub version: u32,
    pub units: Vec<ManifestUnit>,
}

/// A manifest unit joined with its loaded source. Units that cannot be
/// read or analyzed stay in the corpus with `flag` set, so nothing
/// disappears silently.
#[derive(Debug, Clone)]
pub struct CorpusUnit {
    pub decl: ManifestUnit,
    pub source: Option<SourceUnit>,
    pub flag: Option<String>,
}

/// A loaded corpus: every manifest unit, plus load-time warnings.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub version: u32,
    pub units: Vec<CorpusUnit>,
    pub warnings: Vec<String>,
}

/// A label joined with its unit path — the unit of matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LabeledIssue {
    pub path: String,
    pub category: Rule,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cwe: Option<u16>,
    pub span: LineRange,
}

impl Corpus {
    /// All labels flattened with their unit paths, in manifest order.
    pub fn labels(&self) -> Vec<LabeledIssue> {
        self.units
            .iter()
            .flat_map(|u| {
                u.decl.labels.iter().map(|l| LabeledIssue {
                    path: u.decl.path.clone(),
                    category: l.category,
                    cwe: l.cwe,
                    span: l.span,
                })
            })
            .collect()
    }

    /// The readable sources, ready for scanning. Unparseable units are
    /// included; the scanner reports them as skipped.
    pub fn sources(&self) -> Vec<SourceUnit> {
        self.units.iter().filter_map(|u| u.source.clone()).collect()
    }
}

fn schema_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::ManifestSchema { location: location.into(), message: message.into() }
}

fn want_str<'a>(value: &'a Value, ptr: &str) -> Result<&'a str> {
    value.as_str().ok_or_else(|| schema_err(ptr, "expected a string"))
}

fn want_u32(value: &Value, ptr: &str) -> Result<u32> {
    value
        .as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| schema_err(ptr, "expected a non-negative integer"))
}

fn want_object<'a>(
    value: &'a Value,
    ptr: &str,
    allowed: &[&str],
) -> Result<&'a serde_json::Map<String, Value>> {
    let map = value.as_object().ok_or_else(|| schema_err(ptr, "expected an object"))?;
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema_err(format!("{ptr}/{key}"), "unknown key"));
        }
    }
    Ok(map)
}

fn require<'a>(
    map: &'a serde_json::Map<String, Value>,
    key: &str,
    ptr: &str,
) -> Result<&'a Value> {
    map.get(key).ok_or_else(|| schema_err(format!("{ptr}/{key}"), "missing required key"))
}

/// Parses and schema-checks a corpus manifest. Errors carry the JSON
/// pointer of the offending value.
pub fn parse_manifest(text: &str) -> Result<CorpusManifest> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| schema_err("", format!("invalid JSON: {e}")))?;
    let root = want_object(&root, "", &["version", "units"])?;
    let version = want_u32(require(root, "version", "")?, "/version")?;
    let units_value = require(root, "units", "")?;
    let units_arr = units_value
        .as_array()
        .ok_or_else(|| schema_err("/units", "expected an array"))?;

    let mut units = Vec::with_capacity(units_arr.len());
    for (i, unit_value) in units_arr.iter().enumerate() {
        let uptr = format!("/units/{i}");
        let unit = want_object(unit_value, &uptr, &["path", "language", "sizeClass", "labels"])?;
        let path = want_str(require(unit, "path", &uptr)?, &format!("{uptr}/path"))?;
        if path.is_empty() {
            return Err(schema_err(format!("{uptr}/path"), "path must be non-empty"));
        }
        let language =
            want_str(require(unit, "language", &uptr)?, &format!("{uptr}/language"))?;
        let size_ptr = format!("{uptr}/sizeClass");
        let size_str = want_str(require(unit, "sizeClass", &uptr)?, &size_ptr)?;
        let size_class = SizeClass::parse(size_str).ok_or_else(|| {
            schema_err(&size_ptr, format!("unknown size class `{size_str}`"))
        })?;
        let mut labels = Vec::new();
        if let Some(labels_value) = unit.get("labels") {
            let arr = labels_value
                .as_array()
                .ok_or_else(|| schema_err(format!("{uptr}/labels"), "expected an array"))?;
            for (j, label_value) in arr.iter().enumerate() {
                let lptr = format!("{uptr}/labels/{j}");
                labels.push(parse_label(label_value, &lptr)?);
            }
        }
        units.push(ManifestUnit {
            path: path.to_string(),
            language: language.to_string(),
            size_class,
            labels,
        });
    }
    Ok(CorpusManifest { version, units })
}

fn parse_label(value: &Value, ptr: &str) -> Result<Label> {
    let label = want_object(value, ptr, &["category", "cwe", "span"])?;
    let cat_ptr = format!("{ptr}/category");
    let cat_str = want_str(require(label, "category", ptr)?, &cat_ptr)?;
    let category = Rule::parse(cat_str)
        .ok_or_else(|| schema_err(&cat_ptr, format!("unknown category `{cat_str}`")))?;
    let cwe = match label.get("cwe") {
        Some(v) => {
            let n = want_u32(v, &format!("{ptr}/cwe"))?;
            Some(u16::try_from(n).map_err(|_| {
                schema_err(format!("{ptr}/cwe"), "CWE id out of range")
            })?)
        }
        None => None,
    };
    let span_ptr = format!("{ptr}/span");
    let span_obj =
        want_object(require(label, "span", ptr)?, &span_ptr, &["startLine", "endLine"])?;
    let start_line =
        want_u32(require(span_obj, "startLine", &span_ptr)?, &format!("{span_ptr}/startLine"))?;
    let end_line =
        want_u32(require(span_obj, "endLine", &span_ptr)?, &format!("{span_ptr}/endLine"))?;
    if start_line == 0 || end_line < start_line {
        return Err(schema_err(&span_ptr, "lines must be 1-based with startLine <= endLine"));
    }
    Ok(Label { category, cwe, span: LineRange { start_line, end_line } })
}

/// Reads a manifest and loads every unit it names, relative to the
/// manifest's directory. Missing or unparseable units are flagged on the
/// corpus, never dropped.
pub fn load_corpus(manifest_path: &Path) -> Result<Corpus> {
    let text = std::fs::read_to_string(manifest_path)?;
    let manifest = parse_manifest(&text)?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));
    let mut warnings = Vec::new();
    if manifest.units.is_empty() {
        warnings.push("manifest lists no units".to_string());
    }
    let mut units = Vec::with_capacity(manifest.units.len());
    for decl in manifest.units {
        let (source, flag) = match std::fs::read_to_string(base.join(&decl.path)) {
            Err(e) => (None, Some(format!("unreadable: {e}"))),
            Ok(text) => {
                let unit =
                    SourceUnit::new(decl.path.clone(), Language::from(decl.language.as_str()), text);
                let flag = analyze_unit(&unit).err().map(|e| format!("unparseable: {e}"));
                (Some(unit), flag)
            }
        };
        units.push(CorpusUnit { decl, source, flag });
    }
    Ok(Corpus { version: manifest.version, units, warnings })
}

/// Train/validation/test proportions; must sum to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitRatios {
    pub train: f64,
    pub validation: f64,
    pub test: f64,
}

impl Default for SplitRatios {
    fn default() -> Self {
        SplitRatios { train: 0.7, validation: 0.15, test: 0.15 }
    }
}

impl SplitRatios {
    fn validate(&self) -> Result<()> {
        let parts = [self.train, self.validation, self.test];
        let sum: f64 = parts.iter().sum();
        if parts.iter().any(|r| !(0.0..=1.0).contains(r)) || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::RatioError(self.train, self.validation, self.test));
        }
        Ok(())
    }
}

/// A seeded partition of corpus unit paths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Split {
    pub train: Vec<String>,
    pub validation: Vec<String>,
    pub test: Vec<String>,
}

/// The label category a unit carries most often; ties go to the rule
/// that sorts first, no labels to `None`.
fn dominant_category(unit: &ManifestUnit) -> Option<Rule> {
    let mut counts: BTreeMap<Rule, usize> = BTreeMap::new();
    for label in &unit.labels {
        *counts.entry(label.category).or_insert(0) += 1;
    }
    let mut best: Option<(Rule, usize)> = None;
    for rule in Rule::ALL {
        let n = counts.get(&rule).copied().unwrap_or(0);
        if n > 0 && best.is_none_or(|(_, m)| n > m) {
            best = Some((rule, n));
        }
    }
    best.map(|(r, _)| r)
}

/// Allocates `n` items to three buckets by the largest-remainder rule;
/// remainder ties break toward the earlier bucket.
fn largest_remainder(n: usize, ratios: &SplitRatios) -> [usize; 3] {
    let parts = [ratios.train, ratios.validation, ratios.test];
    let exact: Vec<f64> = parts.iter().map(|r| n as f64 * r).collect();
    let mut counts: [usize; 3] = [
        exact[0].floor() as usize,
        exact[1].floor() as usize,
        exact[2].floor() as usize,
    ];
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by(|&a, &b| {
        let fa = exact[a] - exact[a].floor();
        let fb = exact[b] - exact[b].floor();
        fb.partial_cmp(&fa).unwrap().then(a.cmp(&b))
    });
    let mut leftover = n - counts.iter().sum::<usize>();
    for &i in &order {
        if leftover == 0 {
            break;
        }
        counts[i] += 1;
        leftover -= 1;
    }
    counts
}

/// Splits the corpus reproducibly: units are grouped into strata by
/// (language, size class, dominant label category), each stratum is
/// shuffled with a seeded generator, and counts follow the ratios by
/// largest remainder — so per-stratum proportions stay within one unit
/// of the requested split.
pub fn stratified_split(corpus: &Corpus, seed: u64, ratios: SplitRatios) -> Result<Split> {
    ratios.validate()?;
    let mut strata: BTreeMap<(String, SizeClass, Option<Rule>), Vec<String>> = BTreeMap::new();
    for unit in &corpus.units {
        let key = (
            unit.decl.language.clone(),
            unit.decl.size_class,
            dominant_category(&unit.decl),
        );
        strata.entry(key).or_default().push(unit.decl.path.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut split =
        Split { train: Vec::new(), validation: Vec::new(), test: Vec::new() };
    for (_, mut paths) in strata {
        paths.sort();
        paths.shuffle(&mut rng);
        let [n_train, n_val, _] = largest_remainder(paths.len(), &ratios);
        for (i, path) in paths.into_iter().enumerate() {
            if i < n_train {
                split.train.push(path);
            } else if i < n_train + n_val {
                split.validation.push(path);
            } else {
                split.test.push(path);
            }
        }
    }
    split.train.sort();
    split.validation.sort();
    split.test.sort();
    Ok(split)
}

/// The granularity at which negatives are counted for a category.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntityLevel {
    Function,
    Class,
    Statement,
}

/// Negative-counting granularity: method-level smells count functions,
/// class smells count classes, vulnerabilities count statements.
pub fn entity_level(rule: Rule) -> EntityLevel {
    match rule {
        Rule::LongMethod | Rule::FeatureEnvy | Rule::DuplicatedCode => EntityLevel::Function,
        Rule::GodClass | Rule::DataClass => EntityLevel::Class,
        Rule::SqlInjection | Rule::CommandInjection | Rule::Xss | Rule::HardcodedSecret => {
            EntityLevel::Statement
        }
    }
}

/// Entity spans of one analyzed unit.
#[derive(Debug, Clone, Default)]
pub struct UnitEntities {
    pub functions: Vec<Span>,
    pub classes: Vec<Span>,
    pub statements: Vec<Span>,
}

/// Every analyzed entity in the corpus — the universe true negatives
/// are counted against.
#[derive(Debug, Clone, Default)]
pub struct EntityUniverse {
    pub units: BTreeMap<String, UnitEntities>,
}

impl EntityUniverse {
    pub fn from_analyses<'a>(analyses: impl IntoIterator<Item = &'a UnitAnalysis>) -> Self {
        let mut units = BTreeMap::new();
        for analysis in analyses {
            let functions = analysis.functions.iter().map(|f| f.span).collect();
            let classes =
                analysis.ast.classes().iter().map(|c| c.stmt.span).collect();
            let mut statements = Vec::new();
            crate::ast::walk_stmts(&analysis.ast.module.body, &mut |s| {
                statements.push(s.span);
            });
            units.insert(
                analysis.unit.path.clone(),
                UnitEntities { functions, classes, statements },
            );
        }
        EntityUniverse { units }
    }

    fn spans(&self, unit: &str, level: EntityLevel) -> &[Span] {
        self.units.get(unit).map_or(&[], |e| match level {
            EntityLevel::Function => &e.functions,
            EntityLevel::Class => &e.classes,
            EntityLevel::Statement => &e.statements,
        })
    }
}

/// One confusion cell set. Field names follow the conventional
/// abbreviations in serialized form.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    #[serde(rename = "tp")]
    pub true_pos: u64,
    #[serde(rename = "fp")]
    pub false_pos: u64,
    #[serde(rename = "fn")]
    pub false_neg: u64,
    #[serde(rename = "tn")]
    pub true_neg: u64,
}

impl Counts {
    fn add(&mut self, other: &Counts) {
        self.true_pos += other.true_pos;
        self.false_pos += other.false_pos;
        self.false_neg += other.false_neg;
        self.true_neg += other.true_neg;
    }
}

/// Confusion counts per category plus the pooled totals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfusionCounts {
    pub per_category: BTreeMap<Rule, Counts>,
    pub pooled: Counts,
}

/// Matches predictions to labels one-to-one and counts the confusion
/// cells per category.
///
/// A prediction matches a label iff same unit, same category, and their
/// line spans share at least one line. Matching is greedy in canonical
/// span order, so permuting the input changes nothing and overlapping
/// duplicate predictions cannot claim the same label twice. True
/// negatives are entities (at the category's granularity) touched by
/// neither a label nor a prediction of that category.
pub fn match_findings(
    predicted: &[Finding],
    labels: &[LabeledIssue],
    universe: &EntityUniverse,
) -> ConfusionCounts {
    let mut preds: Vec<&Finding> = predicted.iter().collect();
    preds.sort_by(|a, b| {
        (&a.path, a.span, a.rule).cmp(&(&b.path, b.span, b.rule))
    });
    let mut labs: Vec<&LabeledIssue> = labels.iter().collect();
    labs.sort_by(|a, b| {
        (&a.path, a.span.start_line, a.span.end_line, a.category).cmp(&(
            &b.path,
            b.span.start_line,
            b.span.end_line,
            b.category,
        ))
    });

    let mut per_category = BTreeMap::new();
    let mut pooled = Counts::default();
    for rule in Rule::ALL {
        let cat_preds: Vec<&Finding> = preds.iter().copied().filter(|f| f.rule == rule).collect();
        let cat_labs: Vec<&LabeledIssue> =
            labs.iter().copied().filter(|l| l.category == rule).collect();
        let mut taken = vec![false; cat_labs.len()];
        let mut counts = Counts::default();
        for pred in &cat_preds {
            let hit = (0..cat_labs.len()).find(|&i| {
                !taken[i]
                    && cat_labs[i].path == pred.path
                    && cat_labs[i].span.overlaps_span(pred.span)
            });
            match hit {
                Some(i) => {
                    taken[i] = true;
                    counts.true_pos += 1;
                }
                None => counts.false_pos += 1,
            }
        }
        counts.false_neg = taken.iter().filter(|t| !**t).count() as u64;

        let level = entity_level(rule);
        for unit in universe.units.keys() {
            for span in universe.spans(unit, level) {
                let labeled = cat_labs
                    .iter()
                    .any(|l| l.path == *unit && l.span.overlaps_span(*span));
                let predicted_here = cat_preds
                    .iter()
                    .any(|p| p.path == *unit && p.span.overlaps_lines(span));
                if !labeled && !predicted_here {
                    counts.true_neg += 1;
                }
            }
        }

        pooled.add(&counts);
        per_category.insert(rule, counts);
    }
    ConfusionCounts { per_category, pooled }
}

/// Detection quality for one category (or pooled). `None` marks an
/// undefined value — a zero denominator — and serializes as null.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricsRow {
    pub accuracy: Option<f64>,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub f1: Option<f64>,
}

impl MetricsRow {
    pub fn from_counts(c: &Counts) -> MetricsRow {
        let ratio = |num: u64, den: u64| (den > 0).then(|| num as f64 / den as f64);
        let precision = ratio(c.true_pos, c.true_pos + c.false_pos);
        let recall = ratio(c.true_pos, c.true_pos + c.false_neg);
        let total = c.true_pos + c.true_neg + c.false_pos + c.false_neg;
        let accuracy = ratio(c.true_pos + c.true_neg, total);
        let f1 = match (precision, recall) {
            (Some(p), Some(r)) => Some(f1_score(p, r)),
            _ => None,
        };
        MetricsRow { accuracy, precision, recall, f1 }
    }
}

/// Harmonic mean of precision and recall; zero when both are zero.
pub fn f1_score(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

/// The full detection-quality report.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricsReport {
    pub per_category: BTreeMap<Rule, MetricsRow>,
    pub pooled: MetricsRow,
    pub coverage_percent: Option<f64>,
    pub runtime_ms_per_kloc: Option<f64>,
}

/// Derives the metrics report from confusion counts plus scan timing.
/// Coverage is filled in separately by [`coverage`].
pub fn metrics_report(counts: &ConfusionCounts, total_ms: f64, total_loc: u64) -> MetricsReport {
    let per_category = counts
        .per_category
        .iter()
        .map(|(rule, c)| (*rule, MetricsRow::from_counts(c)))
        .collect();
    let runtime_ms_per_kloc =
        (total_loc > 0).then(|| total_ms * 1000.0 / total_loc as f64);
    MetricsReport {
        per_category,
        pooled: MetricsRow::from_counts(&counts.pooled),
        coverage_percent: None,
        runtime_ms_per_kloc,
    }
}

/// Percentage of known issues matched by at least one finding. An issue
/// counts once no matter how many findings land on it.
pub fn coverage(findings: &[Finding], known: &[LabeledIssue]) -> Result<f64> {
    if known.is_empty() {
        return Err(Error::EmptyKnownList);
    }
    let matched = known
        .iter()
        .filter(|issue| {
            findings.iter().any(|f| {
                f.path == issue.path
                    && f.rule == issue.category
                    && issue.span.overlaps_span(f.span)
            })
        })
        .count();
    Ok(matched as f64 / known.len() as f64 * 100.0)
}

/// Severity band of a 10-point risk score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RiskBand {
    High,
    Medium,
    Low,
}

impl RiskBand {
    pub fn of(score: f64) -> RiskBand {
        if score >= 7.0 {
            RiskBand::High
        } else if score >= 4.0 {
            RiskBand::Medium
        } else {
            RiskBand::Low
        }
    }
}

/// One row of the risk table: findings sharing a CWE (or, for smells,
/// sharing the absence of one).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RiskGroup {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cwe: Option<u16>,
    pub count: u64,
    pub base_score: f64,
    pub band: RiskBand,
    /// The CWE had no configured score; the default was used.
    pub unknown_score: bool,
}

/// Risk scores before and after repair, with per-CWE grouping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RiskReport {
    pub groups: Vec<RiskGroup>,
    pub average_before: f64,
    pub average_after: f64,
    pub band_before: RiskBand,
    pub band_after: RiskBand,
}

fn average_score(findings: &[Finding], config: &RiskConfig) -> f64 {
    if findings.is_empty() {
        return 0.0;
    }
    let total: f64 = findings.iter().map(|f| config.weight(f.rule).0).sum();
    total / findings.len() as f64
}

/// Builds the risk table from the pre-repair findings and compares the
/// average score against the post-repair set.
pub fn risk_report(before: &[Finding], after: &[Finding], config: &RiskConfig) -> RiskReport {
    let mut grouped: BTreeMap<Option<u16>, (u64, f64, bool)> = BTreeMap::new();
    for finding in before {
        let (score, unknown) = config.weight(finding.rule);
        let entry = grouped.entry(finding.rule.cwe()).or_insert((0, score, unknown));
        entry.0 += 1;
    }
    let groups = grouped
        .into_iter()
        .map(|(cwe, (count, base_score, unknown_score))| RiskGroup {
            cwe,
            count,
            base_score,
            band: RiskBand::of(base_score),
            unknown_score,
        })
        .collect();
    let average_before = average_score(before, config);
    let average_after = average_score(after, config);
    RiskReport {
        groups,
        average_before,
        average_after,
        band_before: RiskBand::of(average_before),
        band_after: RiskBand::of(average_after),
    }
}

/// Everything the `eval` command reports.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EvalReport {
    pub split: Split,
    pub counts: ConfusionCounts,
    pub metrics: MetricsReport,
    pub risk: RiskReport,
    pub units_scanned: usize,
    pub units_flagged: usize,
    pub skipped: Vec<SkippedUnit>,
}

/// Runs the full evaluation pipeline over a loaded corpus: split, scan
/// (timed), match, metrics, coverage over the CWE-bearing labels, and a
/// risk report whose after-set removes findings cleared by an accepted
/// repair.
pub fn evaluate(corpus: &Corpus, config: &ToolConfig, seed: u64) -> Result<EvalReport> {
    let split = stratified_split(corpus, seed, SplitRatios::default())?;
    let sources = corpus.sources();

    let started = std::time::Instant::now();
    let scan = scan_units(&sources, config);
    let elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;

    let analyses: Vec<UnitAnalysis> =
        sources.iter().filter_map(|u| analyze_unit(u).ok()).collect();
    let universe = EntityUniverse::from_analyses(&analyses);
    let by_path: BTreeMap<&str, &UnitAnalysis> =
        analyses.iter().map(|a| (a.unit.path.as_str(), a)).collect();

    let labels = corpus.labels();
    let counts = match_findings(&scan.findings, &labels, &universe);
    let total_loc: u64 = sources.iter().map(|u| u64::from(u.loc)).sum();
    let mut metrics = metrics_report(&counts, elapsed_ms, total_loc);
    let known: Vec<LabeledIssue> =
        labels.iter().filter(|l| l.cwe.is_some()).cloned().collect();
    if !known.is_empty() {
        metrics.coverage_percent = Some(coverage(&scan.findings, &known)?);
    }

    let mut after: Vec<Finding> = Vec::new();
    for finding in &scan.findings {
        let repaired = by_path.get(finding.path.as_str()).is_some_and(|analysis| {
            crate::repair::repair_finding(analysis, finding, config)
                .iter()
                .any(|s| s.validation.as_ref().is_some_and(|v| v.accepted))
        });
        if !repaired {
            after.push(finding.clone());
        }
    }
    let risk = risk_report(&scan.findings, &after, &config.risk);

    Ok(EvalReport {
        split,
        counts,
        metrics,
        risk,
        units_scanned: scan.units_scanned as usize,
        units_flagged: corpus.units.iter().filter(|u| u.flag.is_some()).count(),
        skipped: scan.skipped,
    })
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "   -".to_string(), |x| format!("{x:.2}"))
}

/// Renders the report as an aligned text table.
pub fn render_report(report: &EvalReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<18} {:>4} {:>4} {:>4} {:>6} {:>9} {:>7} {:>5} {:>5}\n",
        "category", "tp", "fp", "fn", "tn", "precision", "recall", "f1", "acc"
    ));
    let mut rows: Vec<(String, Counts, MetricsRow)> = report
        .counts
        .per_category
        .iter()
        .map(|(rule, c)| {
            let row = report.metrics.per_category.get(rule).copied().unwrap_or_default();
            (rule.name().to_string(), *c, row)
        })
        .collect();
    rows.push(("pooled".to_string(), report.counts.pooled, report.metrics.pooled));
    for (name, c, row) in rows {
        out.push_str(&format!(
            "{:<18} {:>4} {:>4} {:>4} {:>6} {:>9} {:>7} {:>5} {:>5}\n",
            name,
            c.true_pos,
            c.false_pos,
            c.false_neg,
            c.true_neg,
            fmt_opt(row.precision),
            fmt_opt(row.recall),
            fmt_opt(row.f1),
            fmt_opt(row.accuracy),
        ));
    }
    if let Some(cov) = report.metrics.coverage_percent {
        out.push_str(&format!("coverage: {cov:.1}%\n"));
    }
    if let Some(rt) = report.metrics.runtime_ms_per_kloc {
        out.push_str(&format!("runtime: {rt:.2} ms/kloc\n"));
    }
    out.push_str(&format!(
        "risk: before {:.2} ({:?}) -> after {:.2} ({:?})\n",
        report.risk.average_before,
        report.risk.band_before,
        report.risk.average_after,
        report.risk.band_after,
    ));
    out.push_str(&format!(
        "split: train {} / validation {} / test {}\n",
        report.split.train.len(),
        report.split.validation.len(),
        report.split.test.len(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{EntityKind, EntityRef, Evidence};

    fn manifest_json(units: &str) -> String {
        format!("{{\"version\": 1, \"units\": [{units}]}}")
    }

    fn unit_json(path: &str, size: &str, labels: &str) -> String {
        format!(
            "{{\"path\": \"{path}\", \"language\": \"python-subset\", \
             \"sizeClass\": \"{size}\", \"labels\": [{labels}]}}"
        )
    }

    fn mk_finding(path: &str, rule: Rule, start: u32, end: u32) -> Finding {
        let span = Span { start_line: start, start_col: 1, end_line: end, end_col: 1 };
        Finding {
            id: Finding::compute_id(rule, path, span),
            rule,
            cwe: rule.cwe(),
            path: path.to_string(),
            span,
            entity: EntityRef {
                kind: EntityKind::Function,
                name: "f".to_string(),
                span,
            },
            structural_score: 1.0,
            semantic_score: 0.0,
            confidence: 1.0,
            evidence: Evidence::Metrics {
                values: BTreeMap::new(),
                thresholds: BTreeMap::new(),
            },
            in_diff: None,
        }
    }

    fn mk_label(path: &str, rule: Rule, start: u32, end: u32) -> LabeledIssue {
        LabeledIssue {
            path: path.to_string(),
            category: rule,
            cwe: rule.cwe(),
            span: LineRange { start_line: start, end_line: end },
        }
    }

    #[test]
    fn manifest_round_trips() {
        let text = manifest_json(&unit_json(
            "a.py",
            "small",
            "{\"category\": \"sql-injection\", \"cwe\": 89, \
             \"span\": {\"startLine\": 3, \"endLine\": 5}}",
        ));
        let m = parse_manifest(&text).expect("parses");
        assert_eq!(m.version, 1);
        assert_eq!(m.units.len(), 1);
        assert_eq!(m.units[0].size_class, SizeClass::Small);
        assert_eq!(m.units[0].labels[0].category, Rule::SqlInjection);
        assert_eq!(m.units[0].labels[0].cwe, Some(89));
        assert_eq!(m.units[0].labels[0].span, LineRange { start_line: 3, end_line: 5 });
    }

    #[test]
    fn unknown_category_reports_json_pointer() {
        let text = manifest_json(&unit_json(
            "a.py",
            "small",
            "{\"category\": \"spaghetti\", \"span\": {\"startLine\": 1, \"endLine\": 1}}",
        ));
        let err = parse_manifest(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("/units/0/labels/0/category"), "{msg}");
        assert!(msg.contains("spaghetti"), "{msg}");
    }

    #[test]
    fn missing_and_unknown_keys_are_schema_errors() {
        let no_size = manifest_json(
            "{\"path\": \"a.py\", \"language\": \"python-subset\", \"labels\": []}",
        );
        let err = parse_manifest(&no_size).unwrap_err().to_string();
        assert!(err.contains("/units/0/sizeClass"), "{err}");

        let extra = manifest_json(
            "{\"path\": \"a.py\", \"language\": \"python-subset\", \
             \"sizeClass\": \"small\", \"labels\": [], \"notes\": \"x\"}",
        );
        let err = parse_manifest(&extra).unwrap_err().to_string();
        assert!(err.contains("/units/0/notes"), "{err}");
    }

    #[test]
    fn load_flags_missing_and_unparseable_units() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("ok.py"), "x = 1\n").unwrap();
        std::fs::write(dir.path().join("bad.py"), "x = 1 if y else 2\n").unwrap();
        let manifest = manifest_json(&format!(
            "{}, {}, {}",
            unit_json("ok.py", "small", ""),
            unit_json("bad.py", "small", ""),
            unit_json("gone.py", "small", ""),
        ));
        let mpath = dir.path().join("corpus.json");
        std::fs::write(&mpath, manifest).unwrap();
        let corpus = load_corpus(&mpath).expect("loads");
        assert_eq!(corpus.units.len(), 3, "nothing dropped");
        assert!(corpus.units[0].flag.is_none());
        assert!(corpus.units[1].flag.as_deref().unwrap().contains("unparseable"));
        assert!(corpus.units[2].flag.as_deref().unwrap().contains("unreadable"));
        assert!(corpus.warnings.is_empty());
    }

    #[test]
    fn empty_manifest_warns() {
        let dir = tempfile::tempdir().unwrap();
        let mpath = dir.path().join("corpus.json");
        std::fs::write(&mpath, manifest_json("")).unwrap();
        let corpus = load_corpus(&mpath).expect("loads");
        assert!(corpus.units.is_empty());
        assert_eq!(corpus.warnings.len(), 1);
    }

    fn synthetic_corpus(per_stratum: &[(&str, SizeClass, usize)]) -> Corpus {
        let mut units = Vec::new();
        for (lang, size, n) in per_stratum {
            for i in 0..*n {
                units.push(CorpusUnit {
                    decl: ManifestUnit {
                        path: format!("{lang}_{size:?}_{i}.py"),
                        language: lang.to_string(),
                        size_class: *size,
                        labels: Vec::new(),
                    },
                    source: None,
                    flag: None,
                });
            }
        }
        Corpus { version: 1, units, warnings: Vec::new() }
    }

    #[test]
    fn ten_identical_units_split_seven_two_one() {
        let corpus = synthetic_corpus(&[("python-subset", SizeClass::Small, 10)]);
        let split =
            stratified_split(&corpus, 7, SplitRatios::default()).expect("splits");
        assert_eq!(split.train.len(), 7);
        // Remainders tie at 0.5; the earlier bucket (validation) wins.
        assert_eq!(split.validation.len(), 2);
        assert_eq!(split.test.len(), 1);
    }

    #[test]
    fn same_seed_is_identical_different_seed_reshuffles() {
        let corpus = synthetic_corpus(&[
            ("python-subset", SizeClass::Small, 12),
            ("python-subset", SizeClass::Large, 8),
        ]);
        let a = stratified_split(&corpus, 42, SplitRatios::default()).unwrap();
        let b = stratified_split(&corpus, 42, SplitRatios::default()).unwrap();
        assert_eq!(a, b);
        let c = stratified_split(&corpus, 43, SplitRatios::default()).unwrap();
        assert_ne!(a, c, "a different seed lands a different assignment");
    }

    #[test]
    fn per_stratum_counts_stay_within_one_of_exact() {
        let corpus = synthetic_corpus(&[
            ("python-subset", SizeClass::Small, 10),
            ("python-subset", SizeClass::Large, 5),
        ]);
        let ratios = SplitRatios::default();
        let split = stratified_split(&corpus, 3, ratios).unwrap();
        for (needle, n) in [("Small", 10usize), ("Large", 5)] {
            let count = |paths: &[String]| {
                paths.iter().filter(|p| p.contains(needle)).count() as f64
            };
            for (got, ratio) in [
                (count(&split.train), ratios.train),
                (count(&split.validation), ratios.validation),
                (count(&split.test), ratios.test),
            ] {
                assert!(
                    (got - n as f64 * ratio).abs() <= 1.0,
                    "stratum {needle}: {got} vs exact {}",
                    n as f64 * ratio
                );
            }
        }
    }

    #[test]
    fn bad_ratios_are_rejected() {
        let corpus = synthetic_corpus(&[("python-subset", SizeClass::Small, 4)]);
        let err = stratified_split(
            &corpus,
            1,
            SplitRatios { train: 0.5, validation: 0.2, test: 0.2 },
        )
        .unwrap_err();
        assert!(matches!(err, Error::RatioError(..)));
    }

    #[test]
    fn exact_hit_is_one_true_positive() {
        let counts = match_findings(
            &[mk_finding("a.py", Rule::LongMethod, 3, 10)],
            &[mk_label("a.py", Rule::LongMethod, 3, 10)],
            &EntityUniverse::default(),
        );
        let c = counts.per_category[&Rule::LongMethod];
        assert_eq!((c.true_pos, c.false_pos, c.false_neg), (1, 0, 0));
        assert_eq!(counts.pooled.true_pos, 1);
    }

    #[test]
    fn right_category_wrong_place_is_fp_plus_fn() {
        let counts = match_findings(
            &[mk_finding("a.py", Rule::LongMethod, 30, 40)],
            &[mk_label("a.py", Rule::LongMethod, 3, 10)],
            &EntityUniverse::default(),
        );
        let c = counts.per_category[&Rule::LongMethod];
        assert_eq!((c.true_pos, c.false_pos, c.false_neg), (0, 1, 1));
    }

    #[test]
    fn one_to_one_matching_blocks_double_claims() {
        let counts = match_findings(
            &[
                mk_finding("a.py", Rule::LongMethod, 3, 6),
                mk_finding("a.py", Rule::LongMethod, 5, 9),
            ],
            &[mk_label("a.py", Rule::LongMethod, 4, 8)],
            &EntityUniverse::default(),
        );
        let c = counts.per_category[&Rule::LongMethod];
        assert_eq!((c.true_pos, c.false_pos, c.false_neg), (1, 1, 0));
    }

    #[test]
    fn prediction_order_never_changes_counts() {
        let preds = vec![
            mk_finding("a.py", Rule::SqlInjection, 5, 5),
            mk_finding("a.py", Rule::SqlInjection, 2, 3),
            mk_finding("b.py", Rule::SqlInjection, 1, 1),
        ];
        let labels = vec![
            mk_label("a.py", Rule::SqlInjection, 2, 5),
            mk_label("b.py", Rule::SqlInjection, 1, 2),
        ];
        let forward = match_findings(&preds, &labels, &EntityUniverse::default());
        let mut reversed = preds.clone();
        reversed.reverse();
        let backward = match_findings(&reversed, &labels, &EntityUniverse::default());
        assert_eq!(forward, backward);
    }

    #[test]
    fn true_negatives_count_untouched_entities() {
        let unit = SourceUnit::python(
            "a.py",
            concat!(
                "def f():\n    return 1\n",
                "def g():\n    return 2\n",
                "def h():\n    return 3\n",
            ),
        );
        let analysis = analyze_unit(&unit).unwrap();
        let universe = EntityUniverse::from_analyses([&analysis]);
        let counts = match_findings(
            &[mk_finding("a.py", Rule::LongMethod, 1, 2)],
            &[mk_label("a.py", Rule::LongMethod, 1, 2)],
            &universe,
        );
        let c = counts.per_category[&Rule::LongMethod];
        // g and h are long-method negatives; f is claimed by the match.
        assert_eq!(c.true_neg, 2);
        assert_eq!(c.true_pos, 1);
    }

    #[test]
    fn forced_counts_reproduce_the_reference_row() {
        let row = MetricsRow::from_counts(&Counts {
            true_pos: 3,
            false_pos: 1,
            false_neg: 1,
            true_neg: 5,
        });
        assert_eq!(row.accuracy, Some(0.8));
        assert_eq!(row.precision, Some(0.75));
        assert_eq!(row.recall, Some(0.75));
        assert_eq!(row.f1, Some(0.75));
    }

    #[test]
    fn zero_denominators_are_null_not_zero() {
        let row = MetricsRow::from_counts(&Counts::default());
        assert_eq!(row.accuracy, None);
        assert_eq!(row.precision, None);
        assert_eq!(row.recall, None);
        assert_eq!(row.f1, None);
        let json = serde_json::to_string(&row).unwrap();
        assert!(json.contains("\"precision\":null"), "{json}");
    }

    #[test]
    fn f1_is_the_harmonic_mean_with_a_zero_guard() {
        assert_eq!(f1_score(0.0, 0.0), 0.0);
        let f1 = f1_score(0.93, 0.91);
        assert!((f1 - 0.9198913043478261).abs() < 1e-12);
        assert_eq!(format!("{:.2}", f1), "0.92");
    }

    #[test]
    fn runtime_normalizes_per_kloc() {
        let report = metrics_report(&ConfusionCounts::default(), 250.0, 5000);
        assert_eq!(report.runtime_ms_per_kloc, Some(50.0));
        let empty = metrics_report(&ConfusionCounts::default(), 250.0, 0);
        assert_eq!(empty.runtime_ms_per_kloc, None);
    }

    #[test]
    fn coverage_counts_each_issue_once() {
        let known = vec![
            mk_label("a.py", Rule::SqlInjection, 2, 4),
            mk_label("a.py", Rule::CommandInjection, 8, 8),
            mk_label("b.py", Rule::Xss, 1, 2),
        ];
        // Two findings on the same issue still count it once.
        let findings = vec![
            mk_finding("a.py", Rule::SqlInjection, 2, 2),
            mk_finding("a.py", Rule::SqlInjection, 3, 4),
            mk_finding("a.py", Rule::CommandInjection, 8, 8),
        ];
        let pct = coverage(&findings, &known).unwrap();
        assert!((pct - 200.0 / 3.0).abs() < 1e-9);
        assert!((coverage(&[], &known).unwrap() - 0.0).abs() < f64::EPSILON);
        assert!(matches!(coverage(&findings, &[]), Err(Error::EmptyKnownList)));
    }

    #[test]
    fn risk_bands_follow_the_cutoffs() {
        assert_eq!(RiskBand::of(9.0), RiskBand::High);
        assert_eq!(RiskBand::of(7.0), RiskBand::High);
        assert_eq!(RiskBand::of(6.9), RiskBand::Medium);
        assert_eq!(RiskBand::of(4.0), RiskBand::Medium);
        assert_eq!(RiskBand::of(3.9), RiskBand::Low);
    }

    #[test]
    fn single_sql_finding_scores_high() {
        let config = RiskConfig::default();
        let report =
            risk_report(&[mk_finding("a.py", Rule::SqlInjection, 1, 1)], &[], &config);
        assert_eq!(report.average_before, 9.0);
        assert_eq!(report.band_before, RiskBand::High);
        assert_eq!(report.average_after, 0.0);
        assert_eq!(report.band_after, RiskBand::Low);
        assert_eq!(report.groups.len(), 1);
        assert_eq!(report.groups[0].cwe, Some(89));
        assert!(!report.groups[0].unknown_score);
    }

    #[test]
    fn empty_finding_set_is_low_band_zero() {
        let report = risk_report(&[], &[], &RiskConfig::default());
        assert_eq!(report.average_before, 0.0);
        assert_eq!(report.band_before, RiskBand::Low);
        assert!(report.groups.is_empty());
    }

    #[test]
    fn unconfigured_cwe_falls_back_flagged() {
        let mut config = RiskConfig::default();
        config.per_cwe.clear();
        let report =
            risk_report(&[mk_finding("a.py", Rule::Xss, 1, 1)], &[], &config);
        assert_eq!(report.groups[0].base_score, 5.0);
        assert!(report.groups[0].unknown_score);
        assert_eq!(report.average_before, 5.0);
        assert_eq!(report.band_before, RiskBand::Medium);
    }

    #[test]
    fn mixed_findings_average_crosses_the_high_cutoff() {
        let findings = vec![
            mk_finding("a.py", Rule::SqlInjection, 1, 1),
            mk_finding("a.py", Rule::SqlInjection, 3, 3),
            mk_finding("a.py", Rule::CommandInjection, 5, 5),
            mk_finding("b.py", Rule::HardcodedSecret, 1, 1),
            mk_finding("b.py", Rule::HardcodedSecret, 2, 2),
            mk_finding("b.py", Rule::LongMethod, 4, 30),
        ];
        let after = vec![mk_finding("b.py", Rule::LongMethod, 4, 30)];
        let report = risk_report(&findings, &after, &RiskConfig::default());
        let expect = (9.0 + 9.0 + 8.5 + 7.5 + 7.5 + 3.0) / 6.0;
        assert!((report.average_before - expect).abs() < 1e-12);
        assert_eq!(report.band_before, RiskBand::High);
        assert_eq!(report.average_after, 3.0);
        assert_eq!(report.band_after, RiskBand::Low);
    }
}
