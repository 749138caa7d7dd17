//! Attribution and rendering of findings.
//!
//! Every finding can be traced back to the concrete evidence that made
//! it fire. [`attribute`] turns that evidence into a weighted list of
//! targets — statements on a taint path, metrics over their thresholds,
//! the two halves of a clone pair, a secret literal — whose weights sum
//! to one. [`render_explanation`] turns a finding plus its attribution
//! into text, markdown, or JSON that names the rule, the lines, and the
//! thresholds or chains behind it. Both are deterministic.

use crate::detect::{Evidence, Finding};
use crate::error::{Error, Result};
use crate::span::Span;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::str::FromStr;

/// What kind of evidence an attribution distributes weight over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttributionKind {
    TaintPath,
    MetricExceedance,
    ClonePair,
    Literal,
}

/// One attributed target. Spans point into source; metric names resolve
/// to the finding's entity span. A clone's partner span resolves in the
/// partner unit named by the finding's evidence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "target", rename_all = "camelCase")]
pub enum AttributionTarget {
    Span { span: Span },
    Metric { name: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AttributionItem {
    #[serde(flatten)]
    pub target: AttributionTarget,
    pub weight: f64,
}

/// Weighted evidence behind one finding; weights sum to 1 ± 1e-9.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Attribution {
    pub finding_id: String,
    pub kind: AttributionKind,
    pub items: Vec<AttributionItem>,
}

/// Output shape for [`render_explanation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplanationFormat {
    Text,
    Markdown,
    Json,
}

impl FromStr for ExplanationFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ExplanationFormat::Text),
            "markdown" | "md" => Ok(ExplanationFormat::Markdown),
            "json" => Ok(ExplanationFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Distributes unit weight over the evidence behind `finding`.
///
/// Taint paths weight each step uniformly. Metric findings weight each
/// thresholded metric by its normalized exceedance `(value − t) / t`,
/// dropping metrics at or below their threshold; if every exceedance is
/// zero (possible for inclusive bounds) the weight falls back to uniform
/// over the thresholded metrics. Clone pairs split weight over the two
/// regions, secrets put all weight on the literal.
pub fn attribute(finding: &Finding) -> Result<Attribution> {
    let items = match &finding.evidence {
        Evidence::Taint { steps, .. } => {
            if steps.is_empty() {
                return Err(Error::MissingEvidence(finding.id.clone()));
            }
            let w = 1.0 / steps.len() as f64;
            steps
                .iter()
                .map(|s| AttributionItem {
                    target: AttributionTarget::Span { span: s.span },
                    weight: w,
                })
                .collect()
        }
        Evidence::Metrics { values, thresholds } => {
            if thresholds.is_empty() {
                return Err(Error::MissingEvidence(finding.id.clone()));
            }
            let mut exceedances = Vec::new();
            for (name, &t) in thresholds {
                let Some(&v) = values.get(name) else {
                    return Err(Error::MissingEvidence(finding.id.clone()));
                };
                let e = if t > 0.0 { ((v - t) / t).max(0.0) } else { 0.0 };
                exceedances.push((name.clone(), e));
            }
            let total: f64 = exceedances.iter().map(|(_, e)| e).sum();
            if total > 0.0 {
                exceedances
                    .into_iter()
                    .filter(|(_, e)| *e > 0.0)
                    .map(|(name, e)| AttributionItem {
                        target: AttributionTarget::Metric { name },
                        weight: e / total,
                    })
                    .collect()
            } else {
                // Inclusive bounds can be met exactly; spread evenly.
                let w = 1.0 / exceedances.len() as f64;
                exceedances
                    .into_iter()
                    .map(|(name, _)| AttributionItem {
                        target: AttributionTarget::Metric { name },
                        weight: w,
                    })
                    .collect()
            }
        }
        Evidence::Envy { foreign, own } => {
            let total = (foreign.len() + own.len()) as f64;
            if total == 0.0 {
                return Err(Error::MissingEvidence(finding.id.clone()));
            }
            let mut items = vec![AttributionItem {
                target: AttributionTarget::Metric { name: "foreignAccesses".into() },
                weight: foreign.len() as f64 / total,
            }];
            if !own.is_empty() {
                items.push(AttributionItem {
                    target: AttributionTarget::Metric { name: "ownAccesses".into() },
                    weight: own.len() as f64 / total,
                });
            }
            items
        }
        Evidence::Clone { partner_span, .. } => vec![
            AttributionItem {
                target: AttributionTarget::Span { span: finding.span },
                weight: 0.5,
            },
            AttributionItem {
                target: AttributionTarget::Span { span: *partner_span },
                weight: 0.5,
            },
        ],
        Evidence::Secret { literal_span, .. } => vec![AttributionItem {
            target: AttributionTarget::Span { span: *literal_span },
            weight: 1.0,
        }],
    };
    let kind = match &finding.evidence {
        Evidence::Taint { .. } => AttributionKind::TaintPath,
        Evidence::Metrics { .. } | Evidence::Envy { .. } => AttributionKind::MetricExceedance,
        Evidence::Clone { .. } => AttributionKind::ClonePair,
        Evidence::Secret { .. } => AttributionKind::Literal,
    };
    Ok(Attribution { finding_id: finding.id.clone(), kind, items })
}

/// Renders one finding with its attribution. Text and markdown share a
/// template; JSON serializes the pair so it round-trips through the
/// finding and attribution schemas.
pub fn render_explanation(
    finding: &Finding,
    attribution: &Attribution,
    format: ExplanationFormat,
) -> Result<String> {
    match format {
        ExplanationFormat::Json => {
            let value = serde_json::json!({
                "finding": finding,
                "attribution": attribution,
            });
            Ok(serde_json::to_string_pretty(&value)?)
        }
        ExplanationFormat::Text | ExplanationFormat::Markdown => {
            Ok(render_prose(finding, attribution, format == ExplanationFormat::Markdown))
        }
    }
}

fn render_prose(finding: &Finding, attribution: &Attribution, md: bool) -> String {
    let (b, code) = if md { ("**", "`") } else { ("", "") };
    let mut out = String::new();
    let cwe = finding
        .cwe
        .map(|c| format!(" (CWE-{c})"))
        .unwrap_or_default();
    let _ = writeln!(
        out,
        "{b}{}{b}{cwe} in {code}{}{code} at {code}{}:{}{code} — confidence {:.2}",
        finding.rule.name(),
        finding.entity.name,
        finding.path,
        finding.span,
        finding.confidence,
    );
    match &finding.evidence {
        Evidence::Taint { sink, sanitized, steps, .. } => {
            for (i, step) in steps.iter().enumerate() {
                let role = if i == 0 {
                    "source"
                } else if i == steps.len() - 1 {
                    "sink"
                } else {
                    "flow"
                };
                let _ = writeln!(
                    out,
                    "- {role}: {code}{}{code} at line {}",
                    step.var, step.span.start_line
                );
            }
            let state = if *sanitized { "sanitized" } else { "unsanitized" };
            let _ = writeln!(out, "- reaches {code}{sink}{code} {state}");
        }
        Evidence::Metrics { values, thresholds } => {
            for item in &attribution.items {
                if let AttributionTarget::Metric { name } = &item.target {
                    let v = values.get(name).copied().unwrap_or_default();
                    let t = thresholds.get(name).copied().unwrap_or_default();
                    let _ = writeln!(
                        out,
                        "- {name} = {v} against limit {t} (weight {:.2})",
                        item.weight
                    );
                }
            }
        }
        Evidence::Envy { foreign, own } => {
            let _ = writeln!(
                out,
                "- touches {} foreign attributes ({}) vs {} of its own",
                foreign.len(),
                foreign.join(", "),
                own.len()
            );
        }
        Evidence::Clone { partner_path, partner_span, token_count, .. } => {
            let _ = writeln!(
                out,
                "- duplicates {token_count} normalized tokens of {code}{partner_path}:{partner_span}{code}"
            );
        }
        Evidence::Secret { named_credential, target, literal_len, entropy_bits, .. } => {
            if *named_credential {
                let name = target.as_deref().unwrap_or("<unknown>");
                let _ = writeln!(
                    out,
                    "- literal of {literal_len} chars assigned to credential name {code}{name}{code}"
                );
            } else {
                let _ = writeln!(
                    out,
                    "- literal of {literal_len} chars with entropy {entropy_bits:.2} bits/char"
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ToolConfig;
    use crate::detect::scan_units;
    use crate::source::SourceUnit;

    fn scan(text: &str) -> Vec<Finding> {
        let unit = SourceUnit::python("t.py", text);
        scan_units(&[unit], &ToolConfig::default()).findings
    }

    #[test]
    fn taint_paths_attribute_uniformly() {
        let findings = scan(concat!(
            "def lookup(user_input, db):\n",
            "    q = \"SELECT name\" + user_input\n",
            "    db.execute(q)\n",
        ));
        let finding = findings.iter().find(|f| f.rule.name() == "sql-injection").unwrap();
        let att = attribute(finding).expect("attributes");
        assert_eq!(att.kind, AttributionKind::TaintPath);
        assert_eq!(att.items.len(), 3);
        for item in &att.items {
            assert!((item.weight - 1.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_exceeded_metric_takes_all_weight() {
        // 35 statements, low complexity: only nos exceeds.
        let mut text = String::from("def f():\n");
        for i in 0..35 {
            text.push_str(&format!("    x{i} = {i}\n"));
        }
        let findings = scan(&text);
        let finding = findings.iter().find(|f| f.rule.name() == "long-method").unwrap();
        let att = attribute(finding).expect("attributes");
        assert_eq!(att.items.len(), 1);
        assert_eq!(
            att.items[0].target,
            AttributionTarget::Metric { name: "nos".into() }
        );
        assert!((att.items[0].weight - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_exceeded_metrics_split_by_exceedance() {
        // 40 statements of which 12 are ifs: nos = 40, cc = 13.
        let mut text = String::from("def f(a):\n");
        for i in 0..12 {
            text.push_str(&format!("    if a == {i}:\n        x{i} = {i}\n"));
        }
        for i in 0..16 {
            text.push_str(&format!("    y{i} = {i}\n"));
        }
        let findings = scan(&text);
        let finding = findings.iter().find(|f| f.rule.name() == "long-method").unwrap();
        let att = attribute(finding).expect("attributes");
        assert_eq!(att.items.len(), 2);
        // nos: (40-30)/30 = 1/3; cc: (13-10)/10 = 0.3; total 19/30.
        let e_nos = (40.0 - 30.0) / 30.0;
        let e_cc = (13.0 - 10.0) / 10.0;
        for item in &att.items {
            let AttributionTarget::Metric { name } = &item.target else { panic!() };
            let expect = match name.as_str() {
                "cc" => e_cc / (e_nos + e_cc),
                "nos" => e_nos / (e_nos + e_cc),
                other => panic!("unexpected metric {other}"),
            };
            assert!((item.weight - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn weights_always_sum_to_one() {
        let findings = scan(concat!(
            "password = \"hunter2x\"\n",
            "def lookup(user_input, db):\n",
            "    q = \"SELECT name\" + user_input\n",
            "    db.execute(q)\n",
        ));
        assert!(!findings.is_empty());
        for finding in &findings {
            let att = attribute(finding).expect("attributes");
            let total: f64 = att.items.iter().map(|i| i.weight).sum();
            assert!((total - 1.0).abs() < 1e-9, "{} sums to {total}", finding.rule.name());
        }
    }

    #[test]
    fn markdown_cites_lines_and_chain() {
        let findings = scan(concat!(
            "def lookup(user_input, db):\n",
            "    q = \"SELECT name\" + user_input\n",
            "    db.execute(q)\n",
        ));
        let finding = findings.iter().find(|f| f.rule.name() == "sql-injection").unwrap();
        let att = attribute(finding).unwrap();
        let md = render_explanation(finding, &att, ExplanationFormat::Markdown).unwrap();
        assert!(md.contains("**sql-injection**"), "{md}");
        assert!(md.contains("CWE-89"));
        assert!(md.contains("source: `user_input` at line 1"));
        assert!(md.contains("sink"));
        assert!(md.contains("unsanitized"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let findings = scan("password = \"hunter2x\"\n");
        let att = attribute(&findings[0]).unwrap();
        let a = render_explanation(&findings[0], &att, ExplanationFormat::Text).unwrap();
        let b = render_explanation(&findings[0], &att, ExplanationFormat::Text).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn secret_explanations_never_echo_the_literal() {
        let findings = scan("password = \"hunter2secret\"\n");
        let att = attribute(&findings[0]).unwrap();
        for format in [ExplanationFormat::Text, ExplanationFormat::Markdown] {
            let out = render_explanation(&findings[0], &att, format).unwrap();
            assert!(!out.contains("hunter2secret"), "{out}");
        }
    }

    #[test]
    fn json_round_trips() {
        let findings = scan("password = \"hunter2x\"\n");
        let att = attribute(&findings[0]).unwrap();
        let json = render_explanation(&findings[0], &att, ExplanationFormat::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let back: Finding = serde_json::from_value(value["finding"].clone()).unwrap();
        assert_eq!(back, findings[0]);
        let back: Attribution = serde_json::from_value(value["attribution"].clone()).unwrap();
        assert_eq!(back, att);
    }

    #[test]
    fn format_parsing_rejects_unknown_names() {
        assert!(ExplanationFormat::from_str("markdown").is_ok());
        assert!(ExplanationFormat::from_str("yaml").is_err());
    }
}
