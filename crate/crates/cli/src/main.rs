//! `scour` — scan source trees for code smells and injection-style
//! vulnerabilities, explain and repair findings, evaluate against
//! labeled corpora, and record reviewer feedback.
//!
//! Exit codes: 0 when the scan is clean (or the findings stay below
//! `--fail-on`), 1 when findings meet the fail level, 2 for usage or
//! operational errors.

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use scour_core::config::ToolConfig;
use scour_core::delivery::{self, FeedbackRecord, ToolMeta};
use scour_core::detect::{analyze_unit, scan_units, Finding, ScanOutput};
use scour_core::error::Error;
use scour_core::eval::{evaluate, load_corpus, render_report};
use scour_core::explain::{attribute, render_explanation, ExplanationFormat};
use scour_core::repair::{self, apply_patch, repair_finding, Patch, RepairSuggestion};
use scour_core::source::SourceUnit;
use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "scour",
    version,
    about = "Hybrid structural/semantic analyzer for smells and vulnerabilities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan files or directories (*.py) for findings.
    Scan(ScanArgs),
    /// Explain one finding from a fresh scan of the given paths.
    Explain(ExplainArgs),
    /// Suggest, validate, and apply repairs for scan findings.
    Fix(FixArgs),
    /// Evaluate detection quality against a labeled corpus manifest.
    Eval(EvalArgs),
    /// Record an accept/reject verdict for a finding.
    Feedback(FeedbackArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanFormat {
    Text,
    Json,
    Sarif,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FailOn {
    Info,
    Warning,
    Error,
}

#[derive(Args)]
struct ScanArgs {
    /// Files or directories to scan.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    /// JSON config file (falls back to $SCOUR_CONFIG, then defaults).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ScanFormat::Text)]
    format: ScanFormat,
    /// Unified-diff file: scan only files it names and tag findings
    /// that intersect its hunks.
    #[arg(long, value_name = "DIFFFILE")]
    changed_from: Option<PathBuf>,
    /// Exit 1 when any finding reaches this level.
    #[arg(long, value_enum, default_value_t = FailOn::Warning)]
    fail_on: FailOn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExplainFmt {
    Text,
    Markdown,
    Json,
}

#[derive(Args)]
struct ExplainArgs {
    /// Finding id as printed by `scan`.
    finding_id: String,
    /// Files or directories the finding came from.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ExplainFmt::Text)]
    format: ExplainFmt,
}

#[derive(Args)]
struct FixArgs {
    /// Files or directories to repair.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    /// Prompt per suggestion; accepted patches are applied in place and
    /// every verdict lands in the feedback log.
    #[arg(long, conflicts_with_all = ["apply_best", "branch_dir"])]
    interactive: bool,
    /// Apply the best validated patch per file without prompting.
    #[arg(long, conflicts_with = "branch_dir")]
    apply_best: bool,
    /// Write patched copies and diffs under this directory instead of
    /// editing in place.
    #[arg(long, value_name = "DIR")]
    branch_dir: Option<PathBuf>,
    /// Feedback log written by interactive mode.
    #[arg(long, default_value = ".scour-feedback.jsonl")]
    log: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    /// Corpus manifest (JSON).
    #[arg(long)]
    corpus: PathBuf,
    /// Split seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = EvalFormat::Text)]
    format: EvalFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerdictArg {
    Accepted,
    Rejected,
}

#[derive(Args)]
struct FeedbackArgs {
    /// Finding id as printed by `scan`.
    finding_id: String,
    #[arg(value_enum)]
    verdict: VerdictArg,
    /// Files or directories the finding came from.
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = ".scour-feedback.jsonl")]
    log: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("scour: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Scan(args) => cmd_scan(args),
        Command::Explain(args) => cmd_explain(args),
        Command::Fix(args) => cmd_fix(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Feedback(args) => cmd_feedback(args),
    }
}

/// Collects source units from files and directories, in a stable order.
fn collect_units(paths: &[PathBuf]) -> anyhow::Result<Vec<SourceUnit>> {
    let mut files: Vec<PathBuf> = Vec::new();
    for path in paths {
        if path.is_dir() {
            for entry in walkdir::WalkDir::new(path)
                .sort_by_file_name()
                .into_iter()
                .filter_map(|e| e.ok())
            {
                if entry.file_type().is_file()
                    && entry.path().extension().is_some_and(|x| x == "py")
                {
                    files.push(entry.path().to_path_buf());
                }
            }
        } else if path.is_file() {
            files.push(path.clone());
        } else {
            bail!("no such file or directory: {}", path.display());
        }
    }
    files.sort();
    files.dedup();
    let mut units = Vec::with_capacity(files.len());
    for file in files {
        let text = std::fs::read_to_string(&file)
            .with_context(|| format!("reading {}", file.display()))?;
        units.push(SourceUnit::python(file.to_string_lossy(), text));
    }
    Ok(units)
}

fn scan_paths(paths: &[PathBuf], config: &ToolConfig) -> anyhow::Result<ScanOutput> {
    let units = collect_units(paths)?;
    Ok(scan_units(&units, config))
}

fn report_side_channels(scan: &ScanOutput) {
    for skipped in &scan.skipped {
        eprintln!("scour: skipped {}: {}", skipped.path, skipped.reason);
    }
    for note in &scan.scorer_notes {
        eprintln!("scour: scorer: {note}");
    }
}

fn finding_level(finding: &Finding, config: &ToolConfig) -> &'static str {
    if finding.confidence >= config.output.error_confidence {
        "error"
    } else {
        "warning"
    }
}

fn meets_fail_level(finding: &Finding, config: &ToolConfig, fail_on: FailOn) -> bool {
    match fail_on {
        FailOn::Info | FailOn::Warning => true,
        FailOn::Error => finding_level(finding, config) == "error",
    }
}

fn cmd_scan(args: ScanArgs) -> anyhow::Result<ExitCode> {
    let config = ToolConfig::load(args.config.as_deref())?;
    let mut units = collect_units(&args.paths)?;

    let changed = match &args.changed_from {
        Some(diff_path) => {
            let diff_text = std::fs::read_to_string(diff_path)
                .with_context(|| format!("reading {}", diff_path.display()))?;
            let changed = delivery::parse_diff(&diff_text)?;
            units.retain(|u| changed.contains_key(&u.path));
            Some(changed)
        }
        None => None,
    };

    let mut scan = scan_units(&units, &config);
    if let Some(changed) = &changed {
        delivery::tag_in_diff(&mut scan.findings, changed);
    }
    report_side_channels(&scan);

    match args.format {
        ScanFormat::Text => {
            for f in &scan.findings {
                let marker = match f.in_diff {
                    Some(true) => " [in-diff]",
                    _ => "",
                };
                println!(
                    "{}:{}  {}  {}  confidence {:.2}  [{}]  id {}{}",
                    f.path,
                    f.span,
                    f.rule,
                    f.entity.name,
                    f.confidence,
                    finding_level(f, &config),
                    f.id,
                    marker,
                );
            }
            println!(
                "{} findings in {} units ({} loc)",
                scan.findings.len(),
                scan.units_scanned,
                scan.total_loc
            );
        }
        ScanFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&scan)?);
        }
        ScanFormat::Sarif => {
            let doc = delivery::emit_sarif(&scan.findings, &ToolMeta::default(), &config.output);
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }

    let failing = scan
        .findings
        .iter()
        .any(|f| meets_fail_level(f, &config, args.fail_on));
    Ok(if failing { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_explain(args: ExplainArgs) -> anyhow::Result<ExitCode> {
    let config = ToolConfig::load(args.config.as_deref())?;
    let scan = scan_paths(&args.paths, &config)?;
    let finding = scan
        .findings
        .iter()
        .find(|f| f.id == args.finding_id)
        .ok_or_else(|| anyhow!(Error::UnknownFinding(args.finding_id.clone())))?;
    let attribution = attribute(finding)?;
    let format = match args.format {
        ExplainFmt::Text => ExplanationFormat::Text,
        ExplainFmt::Markdown => ExplanationFormat::Markdown,
        ExplainFmt::Json => ExplanationFormat::Json,
    };
    println!("{}", render_explanation(finding, &attribution, format)?);
    Ok(ExitCode::SUCCESS)
}

/// Suggestions per finding, computed against the finding's unit.
fn suggestions_by_finding(
    units: &[SourceUnit],
    findings: &[Finding],
    config: &ToolConfig,
) -> anyhow::Result<BTreeMap<String, Vec<RepairSuggestion>>> {
    let mut analyses = BTreeMap::new();
    for unit in units {
        if let Ok(analysis) = analyze_unit(unit) {
            analyses.insert(unit.path.clone(), analysis);
        }
    }
    let mut by_finding = BTreeMap::new();
    for finding in findings {
        let Some(analysis) = analyses.get(&finding.path) else { continue };
        by_finding.insert(finding.id.clone(), repair_finding(analysis, finding, config));
    }
    Ok(by_finding)
}

/// Merges the accepted top suggestions of one unit's findings into a
/// single patch, dropping any whose edits collide with one already
/// taken. Returns the merged patch and the finding ids it covers.
fn merge_accepted(
    unit: &SourceUnit,
    findings: &[&Finding],
    by_finding: &BTreeMap<String, Vec<RepairSuggestion>>,
    only: Option<&BTreeSet<String>>,
) -> (Option<Patch>, Vec<String>) {
    let mut edits = Vec::new();
    let mut descriptions: Vec<String> = Vec::new();
    let mut kind = None;
    let mut covered = Vec::new();
    for finding in findings {
        if only.is_some_and(|ids| !ids.contains(&finding.id)) {
            continue;
        }
        let Some(top) = by_finding.get(&finding.id).and_then(|s| {
            s.iter().find(|s| {
                !s.patch.edits.is_empty()
                    && s.validation.as_ref().is_some_and(|v| v.accepted)
            })
        }) else {
            continue;
        };
        let mut candidate = edits.clone();
        candidate.extend(top.patch.edits.iter().cloned());
        let trial = Patch {
            edits: candidate.clone(),
            description: String::new(),
            kind: top.patch.kind,
        };
        if apply_patch(&unit.text, &trial).is_ok() {
            edits = candidate;
            descriptions.push(top.patch.description.clone());
            kind.get_or_insert(top.patch.kind);
            covered.push(finding.id.clone());
        } else {
            eprintln!(
                "scour: skipping repair for {} (conflicts with an earlier patch)",
                finding.id
            );
        }
    }
    match kind {
        None => (None, covered),
        Some(kind) => (
            Some(Patch { edits, description: descriptions.join("; "), kind }),
            covered,
        ),
    }
}

fn cmd_fix(args: FixArgs) -> anyhow::Result<ExitCode> {
    let config = ToolConfig::load(args.config.as_deref())?;
    let units = collect_units(&args.paths)?;
    let scan = scan_units(&units, &config);
    report_side_channels(&scan);
    if scan.findings.is_empty() {
        println!("nothing to fix");
        return Ok(ExitCode::SUCCESS);
    }
    let by_finding = suggestions_by_finding(&units, &scan.findings, &config)?;

    let accepted_ids = if args.interactive {
        Some(interactive_verdicts(&scan, &by_finding, &units, &args.log)?)
    } else {
        None
    };

    let mut patched_units = 0usize;
    let mut repaired = 0usize;
    for unit in &units {
        let unit_findings: Vec<&Finding> =
            scan.findings.iter().filter(|f| f.path == unit.path).collect();
        let (patch, covered) =
            merge_accepted(unit, &unit_findings, &by_finding, accepted_ids.as_ref());
        let Some(patch) = patch else { continue };
        if let Some(dir) = &args.branch_dir {
            let target = repair::write_branch(dir, unit, &patch)?;
            println!(
                "wrote {} ({} repairs) and its diff",
                target.display(),
                covered.len()
            );
        } else {
            let after = apply_patch(&unit.text, &patch)?;
            std::fs::write(&unit.path, after)
                .with_context(|| format!("writing {}", unit.path))?;
            println!("patched {} ({} repairs)", unit.path, covered.len());
        }
        patched_units += 1;
        repaired += covered.len();
    }
    if patched_units == 0 {
        println!("no validated repairs to apply");
    } else {
        println!(
            "applied {repaired} repairs across {patched_units} files; re-scan to confirm"
        );
    }
    Ok(ExitCode::SUCCESS)
}

/// Prompt loop for interactive fix mode: shows each validated
/// suggestion, reads `a`(pply)/`s`(kip), logs the verdict, and returns
/// the ids whose patches should be applied.
fn interactive_verdicts(
    scan: &ScanOutput,
    by_finding: &BTreeMap<String, Vec<RepairSuggestion>>,
    units: &[SourceUnit],
    log: &Path,
) -> anyhow::Result<BTreeSet<String>> {
    let known: BTreeSet<String> = scan.findings.iter().map(|f| f.id.clone()).collect();
    let unit_by_path: BTreeMap<&str, &SourceUnit> =
        units.iter().map(|u| (u.path.as_str(), u)).collect();
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    let mut accepted = BTreeSet::new();
    for finding in &scan.findings {
        let Some(top) = by_finding.get(&finding.id).and_then(|s| {
            s.iter().find(|s| {
                !s.patch.edits.is_empty()
                    && s.validation.as_ref().is_some_and(|v| v.accepted)
            })
        }) else {
            continue;
        };
        if let Ok(attribution) = attribute(finding) {
            if let Ok(text) =
                render_explanation(finding, &attribution, ExplanationFormat::Text)
            {
                println!("{text}");
            }
        }
        if let Some(unit) = unit_by_path.get(finding.path.as_str()) {
            if let Ok(after) = apply_patch(&unit.text, &top.patch) {
                print!("{}", repair::unified_diff(&finding.path, &unit.text, &after));
            }
        }
        print!("apply this patch? [a]pply/[s]kip: ");
        std::io::stdout().flush()?;
        let mut line = String::new();
        input.read_line(&mut line)?;
        let apply = matches!(line.trim(), "a" | "A" | "y" | "Y");
        let verdict = if apply {
            accepted.insert(finding.id.clone());
            delivery::Verdict::Accepted
        } else {
            delivery::Verdict::Rejected
        };
        let record = FeedbackRecord {
            timestamp: unix_now(),
            finding_id: finding.id.clone(),
            rule: finding.rule,
            verdict,
        };
        delivery::record_feedback(log, &record, &known)?;
    }
    Ok(accepted)
}

fn unix_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn cmd_eval(args: EvalArgs) -> anyhow::Result<ExitCode> {
    let config = ToolConfig::load(args.config.as_deref())?;
    let corpus = load_corpus(&args.corpus)?;
    for warning in &corpus.warnings {
        eprintln!("scour: {warning}");
    }
    for unit in &corpus.units {
        if let Some(flag) = &unit.flag {
            eprintln!("scour: {}: {flag}", unit.decl.path);
        }
    }
    let report = evaluate(&corpus, &config, args.seed)?;
    match args.format {
        EvalFormat::Text => print!("{}", render_report(&report)),
        EvalFormat::Json => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_feedback(args: FeedbackArgs) -> anyhow::Result<ExitCode> {
    let config = ToolConfig::load(args.config.as_deref())?;
    let scan = scan_paths(&args.paths, &config)?;
    let known: BTreeSet<String> = scan.findings.iter().map(|f| f.id.clone()).collect();
    let finding = scan
        .findings
        .iter()
        .find(|f| f.id == args.finding_id)
        .ok_or_else(|| anyhow!(Error::UnknownFinding(args.finding_id.clone())))?;
    let record = FeedbackRecord {
        timestamp: unix_now(),
        finding_id: finding.id.clone(),
        rule: finding.rule,
        verdict: match args.verdict {
            VerdictArg::Accepted => delivery::Verdict::Accepted,
            VerdictArg::Rejected => delivery::Verdict::Rejected,
        },
    };
    delivery::record_feedback(&args.log, &record, &known)?;
    println!("recorded {:?} for {}", record.verdict, record.finding_id);
    Ok(ExitCode::SUCCESS)
}
