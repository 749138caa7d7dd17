//! Hardcoded-credential detection.
//!
//! Two complementary rules:
//!
//! * **Named credential** — a string literal assigned to a name that
//!   reads like a secret (`password`, `api_key`, …) with at least a
//!   minimal length. These score 1.0: the name is the confession.
//! * **High-entropy literal** — any string literal long enough and
//!   random enough (Shannon entropy in bits/char) to look like key
//!   material, regardless of what it is called. The score scales with
//!   entropy.
//!
//! A literal matching both is reported once, as a named credential.

use super::{enclosing_entity, Candidate, Evidence, Rule, UnitAnalysis};
use crate::ast::{Expr, ExprKind, Literal, StmtKind};
use crate::config::Thresholds;
use crate::span::Span;
use std::collections::BTreeMap;

/// Name fragments that mark a credential wherever they appear.
const CREDENTIAL_FRAGMENTS: &[&str] = &[
    "password",
    "passwd",
    "secret",
    "token",
    "credential",
    "api_key",
    "apikey",
    "access_key",
    "private_key",
];

/// Short credential words matched only as whole `_`-separated segments,
/// so `monkey` and `author` stay innocent.
const CREDENTIAL_SEGMENTS: &[&str] = &["key", "pwd", "auth", "cred"];

/// Shannon entropy of a string in bits per character.
pub fn shannon_entropy(s: &str) -> f64 {
    if s.is_empty() {
        return 0.0;
    }
    let mut counts: BTreeMap<char, u32> = BTreeMap::new();
    let mut total = 0u32;
    for c in s.chars() {
        *counts.entry(c).or_insert(0) += 1;
        total += 1;
    }
    let total = f64::from(total);
    -counts
        .values()
        .map(|&n| {
            let p = f64::from(n) / total;
            p * p.log2()
        })
        .sum::<f64>()
}

/// True when an identifier smells like a credential name.
pub fn is_credential_name(name: &str) -> bool {
    let lower = name.to_ascii_lowercase();
    if CREDENTIAL_FRAGMENTS.iter().any(|w| lower.contains(w)) {
        return true;
    }
    lower.split('_').any(|seg| CREDENTIAL_SEGMENTS.contains(&seg))
}

pub fn detect_hardcoded_secret(
    analysis: &UnitAnalysis,
    thresholds: &Thresholds,
) -> Vec<Candidate> {
    let mut candidates = Vec::new();
    let mut named_literal_spans: Vec<Span> = Vec::new();

    // Rule (a): credential-named assignments of string literals.
    crate::ast::walk_stmts(&analysis.ast.module.body, &mut |stmt| {
        let StmtKind::Assign { target, value } = &stmt.kind else { return };
        let target_name = match &target.kind {
            ExprKind::Name(n) => n.clone(),
            ExprKind::Attribute { attr, .. } => attr.clone(),
            _ => return,
        };
        let ExprKind::Literal(Literal::Str(text)) = &value.kind else { return };
        if !is_credential_name(&target_name) {
            return;
        }
        if (text.chars().count() as u32) < thresholds.secret_min_literal_len {
            return;
        }
        named_literal_spans.push(value.span);
        candidates.push(Candidate {
            rule: Rule::HardcodedSecret,
            span: value.span,
            entity: enclosing_entity(&analysis.ast, &analysis.unit, value.span),
            structural_score: 1.0,
            evidence: Evidence::Secret {
                named_credential: true,
                target: Some(target_name),
                literal_span: value.span,
                literal_len: text.chars().count() as u32,
                entropy_bits: shannon_entropy(text),
            },
        });
    });

    // Rule (b): long, high-entropy literals anywhere.
    for (text, span) in string_literals(analysis) {
        if named_literal_spans.contains(&span) {
            continue;
        }
        let len = text.chars().count() as u32;
        if len < thresholds.secret_entropy_min_len {
            continue;
        }
        let entropy = shannon_entropy(&text);
        if entropy < thresholds.secret_entropy_threshold {
            continue;
        }
        candidates.push(Candidate {
            rule: Rule::HardcodedSecret,
            span,
            entity: enclosing_entity(&analysis.ast, &analysis.unit, span),
            structural_score: (entropy / thresholds.secret_entropy_norm).min(1.0),
            evidence: Evidence::Secret {
                named_credential: false,
                target: None,
                literal_span: span,
                literal_len: len,
                entropy_bits: entropy,
            },
        });
    }
    candidates
}

/// Every string literal in the unit with its span, in source order.
fn string_literals(analysis: &UnitAnalysis) -> Vec<(String, Span)> {
    let mut out = Vec::new();
    let mut visit = |expr: &Expr| {
        expr.walk(&mut |e| {
            if let ExprKind::Literal(Literal::Str(s)) = &e.kind {
                out.push((s.clone(), e.span));
            }
        });
    };
    crate::ast::walk_stmts(&analysis.ast.module.body, &mut |stmt| match &stmt.kind {
        StmtKind::Assign { target, value } => {
            visit(target);
            visit(value);
        }
        StmtKind::AugAssign { target, value, .. } => {
            visit(target);
            visit(value);
        }
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => visit(test),
        StmtKind::For { iter, .. } => visit(iter),
        StmtKind::Return { value } | StmtKind::Raise { value } => {
            if let Some(v) = value {
                visit(v);
            }
        }
        StmtKind::ExprStmt { value } => visit(value),
        _ => {}
    });
    out.sort_by_key(|(_, span)| *span);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::analyze_unit;
    use crate::source::SourceUnit;

    fn detect(text: &str) -> Vec<Candidate> {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        detect_hardcoded_secret(&analysis, &Thresholds::default())
    }

    #[test]
    fn entropy_matches_closed_forms() {
        // Uniform over one symbol: zero bits.
        assert_eq!(shannon_entropy("aaaa"), 0.0);
        // 24 distinct characters: log2(24) bits/char.
        let h = shannon_entropy("aB3xK9mQ2fT7wZ5cJ8nR4vL6");
        assert!((h - 4.584962500721156).abs() < 1e-9, "got {h}");
        // English-ish text sits lower.
        let h = shannon_entropy("hunter2");
        assert!((h - 2.807354922057604).abs() < 1e-9, "got {h}");
    }

    #[test]
    fn named_credential_fires_at_full_score() {
        let got = detect("password = \"hunter2x\"\n");
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].structural_score, 1.0);
        let Evidence::Secret { named_credential, target, .. } = &got[0].evidence else {
            panic!()
        };
        assert!(named_credential);
        assert_eq!(target.as_deref(), Some("password"));
    }

    #[test]
    fn short_literals_do_not_trip_the_name_rule() {
        assert!(detect("password = \"abc\"\n").is_empty());
    }

    #[test]
    fn attribute_targets_count_as_names() {
        let got = detect("def setup(self):\n    self.api_key = \"zk9f3q8r\"\n");
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn innocent_names_with_key_fragments_stay_quiet() {
        assert!(detect("monkey = \"banana\"\nauthor = \"someone\"\n").is_empty());
        // But real segments match.
        assert_eq!(detect("db_pwd = \"hunter2x\"\n").len(), 1);
    }

    #[test]
    fn high_entropy_literal_fires_without_a_telling_name() {
        let got = detect("blob = \"aB3xK9mQ2fT7wZ5cJ8nR4vL6\"\n");
        assert_eq!(got.len(), 1);
        let Evidence::Secret { named_credential, entropy_bits, .. } = &got[0].evidence else {
            panic!()
        };
        assert!(!named_credential);
        // score = min(1, 4.5849.. / 4.5) = 1.0
        assert_eq!(got[0].structural_score, 1.0);
        assert!(*entropy_bits > 4.5);
    }

    #[test]
    fn low_entropy_long_strings_pass() {
        assert!(detect("msg = \"aaaaaaaaaaaaaaaaaaaaaa\"\n").is_empty());
    }

    #[test]
    fn named_rule_wins_when_both_match() {
        let got = detect("api_key = \"aB3xK9mQ2fT7wZ5cJ8nR4vL6\"\n");
        assert_eq!(got.len(), 1);
        let Evidence::Secret { named_credential, .. } = &got[0].evidence else { panic!() };
        assert!(named_credential);
    }
}
