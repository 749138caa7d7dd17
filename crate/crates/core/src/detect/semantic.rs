//! Semantic scoring of candidates.
//!
//! The structural detectors decide *where* something suspicious sits;
//! the semantic layer reads the surrounding code and judges *how much*
//! it looks like the real thing. The built-in scorer matches weighted
//! lexical cues — SQL verbs in string literals, concatenation operators,
//! markup fragments, credential-flavoured identifiers — inside a window
//! of lines around each candidate. Each distinct cue counts once and the
//! weights sum, capped at 1.0.
//!
//! An external scorer can replace the built-in one: it is spawned as a
//! subprocess, receives one JSON object per candidate on stdin, and must
//! answer with `{"id": …, "score": …}` lines on stdout before a global
//! deadline. Any protocol failure falls back to the built-in cues and
//! leaves a note in the scan output.

use super::{Candidate, Rule, UnitAnalysis};
use crate::config::{ScorerConfig, ScorerMode};
use crate::error::Error;
use crate::lexer::TokenKind;
use crate::span::Span;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Write};
use std::process::{Command, Stdio};
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

/// Where a cue must appear to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CueKind {
    /// Case-insensitive substring of a decoded string literal.
    InString,
    /// Exact operator lexeme.
    Op,
    /// Case-insensitive substring of an identifier.
    Ident,
}

struct Cue {
    kind: CueKind,
    pattern: &'static str,
    weight: f64,
}

const fn cue(kind: CueKind, pattern: &'static str, weight: f64) -> Cue {
    Cue { kind, pattern, weight }
}

use CueKind::{Ident, InString, Op};

static SQL_CUES: &[Cue] = &[
    cue(InString, "select", 0.4),
    cue(InString, "insert", 0.4),
    cue(InString, "update", 0.3),
    cue(InString, "delete", 0.3),
    cue(InString, "where", 0.25),
    cue(InString, "from", 0.2),
    cue(Op, "+", 0.3),
    cue(Op, "%", 0.2),
    cue(Ident, "format", 0.2),
    cue(Ident, "execute", 0.15),
];

static COMMAND_CUES: &[Cue] = &[
    cue(InString, "rm ", 0.35),
    cue(InString, "sudo", 0.35),
    cue(InString, "sh ", 0.3),
    cue(InString, "| ", 0.25),
    cue(InString, "&&", 0.25),
    cue(InString, "ping", 0.2),
    cue(InString, "curl", 0.2),
    cue(Op, "+", 0.3),
    cue(Ident, "shell", 0.25),
    cue(Ident, "cmd", 0.2),
    cue(Ident, "system", 0.2),
];

static XSS_CUES: &[Cue] = &[
    cue(InString, "<script", 0.5),
    cue(InString, "<div", 0.25),
    cue(InString, "<a ", 0.25),
    cue(InString, "href", 0.25),
    cue(InString, "<b>", 0.2),
    cue(Op, "+", 0.3),
    cue(Ident, "html", 0.25),
    cue(Ident, "render", 0.2),
];

static SECRET_CUES: &[Cue] = &[
    cue(Ident, "password", 0.5),
    cue(Ident, "passwd", 0.5),
    cue(Ident, "secret", 0.5),
    cue(Ident, "api_key", 0.5),
    cue(Ident, "apikey", 0.5),
    cue(Ident, "credential", 0.5),
    cue(Ident, "token", 0.4),
    cue(Ident, "key", 0.2),
];

/// Weighted cue lexicon for one rule. The metric smells have no lexical
/// signature, so their lexicons are empty and the built-in scorer
/// returns 0 for them; fusion gives those rules structural-only weights.
fn lexicon(rule: Rule) -> &'static [Cue] {
    match rule {
        Rule::SqlInjection => SQL_CUES,
        Rule::CommandInjection => COMMAND_CUES,
        Rule::Xss => XSS_CUES,
        Rule::HardcodedSecret => SECRET_CUES,
        Rule::LongMethod
        | Rule::GodClass
        | Rule::DataClass
        | Rule::FeatureEnvy
        | Rule::DuplicatedCode => &[],
    }
}

/// Scores every candidate of one unit, index-aligned with the input.
pub fn score_candidates(
    analysis: &UnitAnalysis,
    candidates: &[Candidate],
    scorer: &ScorerConfig,
    notes: &mut Vec<String>,
) -> Vec<f64> {
    match scorer.mode {
        ScorerMode::None => vec![0.0; candidates.len()],
        ScorerMode::Builtin => builtin_scores(analysis, candidates, scorer),
        ScorerMode::Command => match command_scores(analysis, candidates, scorer) {
            Ok(scores) => scores,
            Err(err) => {
                notes.push(format!(
                    "semantic scorer {:?} failed ({err}); built-in cues used for {}",
                    scorer.command.join(" "),
                    analysis.unit.path,
                ));
                builtin_scores(analysis, candidates, scorer)
            }
        },
    }
}

/// The built-in lexical scorer.
fn builtin_scores(
    analysis: &UnitAnalysis,
    candidates: &[Candidate],
    scorer: &ScorerConfig,
) -> Vec<f64> {
    candidates
        .iter()
        .map(|c| {
            let cues = lexicon(c.rule);
            if cues.is_empty() {
                return 0.0;
            }
            let window = window_span(c.span, scorer.window_lines);
            let mut total = 0.0;
            for cue in cues {
                if cue_present(analysis, cue, window) {
                    total += cue.weight;
                }
            }
            total.min(1.0)
        })
        .collect()
}

/// Line window around a span, clamped at the top of the file. Only the
/// line fields matter for matching.
fn window_span(span: Span, window_lines: u32) -> Span {
    Span::new(
        span.start_line.saturating_sub(window_lines).max(1),
        1,
        span.end_line + window_lines,
        u32::MAX,
    )
}

fn cue_present(analysis: &UnitAnalysis, cue: &Cue, window: Span) -> bool {
    analysis
        .tokens
        .tokens
        .iter()
        .filter(|t| t.span.overlaps_lines(&window))
        .any(|t| match cue.kind {
            CueKind::InString => {
                t.kind == TokenKind::StringLiteral
                    && t.string_value().to_lowercase().contains(cue.pattern)
            }
            CueKind::Op => t.kind == TokenKind::Operator && t.lexeme == cue.pattern,
            CueKind::Ident => {
                t.kind == TokenKind::Identifier
                    && t.lexeme.to_lowercase().contains(cue.pattern)
            }
        })
}

/// One stdout line from an external scorer.
#[derive(Debug, Deserialize)]
struct PluginReply {
    id: usize,
    score: f64,
}

/// Runs the configured external scorer over all candidates of one unit.
fn command_scores(
    analysis: &UnitAnalysis,
    candidates: &[Candidate],
    scorer: &ScorerConfig,
) -> crate::error::Result<Vec<f64>> {
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let Some((program, args)) = scorer.command.split_first() else {
        return Err(Error::Config("scorer mode is 'command' but no command given".into()));
    };

    let mut child = Command::new(program)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()?;
    let mut stdin = child.stdin.take().expect("piped stdin");
    let stdout = child.stdout.take().expect("piped stdout");

    let lines = analysis.unit.lines();
    let requests: Vec<String> = candidates
        .iter()
        .enumerate()
        .map(|(id, c)| {
            let window = window_span(c.span, scorer.window_lines);
            let lo = (window.start_line as usize).saturating_sub(1);
            let hi = (window.end_line as usize).min(lines.len());
            let text = lines[lo.min(hi)..hi].join("\n");
            serde_json::json!({
                "id": id,
                "rule": c.rule.name(),
                "path": analysis.unit.path,
                "span": c.span,
                "window": text,
            })
            .to_string()
        })
        .collect();

    let expected = candidates.len();
    let (tx, rx) = mpsc::channel();
    let io_thread = thread::spawn(move || {
        let run = || -> crate::error::Result<BTreeMap<usize, f64>> {
            for line in &requests {
                writeln!(stdin, "{line}")?;
            }
            drop(stdin);
            let mut replies = BTreeMap::new();
            for line in BufReader::new(stdout).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let reply: PluginReply = serde_json::from_str(&line)
                    .map_err(|_| Error::PluginReply(line.clone()))?;
                replies.insert(reply.id, reply.score.clamp(0.0, 1.0));
                if replies.len() == expected {
                    break;
                }
            }
            Ok(replies)
        };
        let _ = tx.send(run());
    });

    let outcome = rx.recv_timeout(Duration::from_millis(scorer.timeout_ms));
    let replies = match outcome {
        Ok(result) => {
            let _ = io_thread.join();
            let _ = child.wait();
            result?
        }
        Err(_) => {
            let _ = child.kill();
            let _ = child.wait();
            let _ = io_thread.join();
            return Err(Error::PluginTimeout(scorer.timeout_ms));
        }
    };
    (0..candidates.len())
        .map(|id| {
            replies
                .get(&id)
                .copied()
                .ok_or_else(|| Error::PluginReply(format!("no score for candidate {id}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{analyze_unit, EntityKind, EntityRef, Evidence};
    use crate::source::SourceUnit;

    fn candidate_at(rule: Rule, span: Span) -> Candidate {
        Candidate {
            rule,
            span,
            entity: EntityRef {
                kind: EntityKind::Module,
                name: "t".into(),
                span,
            },
            structural_score: 1.0,
            evidence: Evidence::Metrics {
                values: Default::default(),
                thresholds: Default::default(),
            },
        }
    }

    fn scored(text: &str, rule: Rule, span: Span, scorer: &ScorerConfig) -> f64 {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        let mut notes = Vec::new();
        let scores =
            score_candidates(&analysis, &[candidate_at(rule, span)], scorer, &mut notes);
        scores[0]
    }

    #[test]
    fn sql_cues_add_up() {
        // "select" in-string (0.4) + "+" operator (0.3) = 0.7.
        let text = "q = \"SELECT name\" + uid\n";
        let got = scored(text, Rule::SqlInjection, Span::new(1, 1, 1, 23), &ScorerConfig::default());
        assert!((got - 0.7).abs() < 1e-9, "got {got}");
        // Adding FROM to the literal brings its cue in too.
        let text = "q = \"SELECT name FROM t\" + uid\n";
        let got = scored(text, Rule::SqlInjection, Span::new(1, 1, 1, 30), &ScorerConfig::default());
        assert!((got - 0.9).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn distinct_cues_count_once() {
        let text = "q = \"SELECT a\" + \"SELECT b\" + \"SELECT c\"\n";
        let got = scored(text, Rule::SqlInjection, Span::new(1, 1, 1, 41), &ScorerConfig::default());
        // select (0.4) + "+" (0.3), both counted once.
        assert!((got - 0.7).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn window_bounds_matter() {
        let mut text = String::from("q = make()\n");
        for _ in 0..10 {
            text.push_str("x = 1\n");
        }
        text.push_str("body = \"<script>alert(1)</script>\"\n");
        let scorer = ScorerConfig::default();
        // Candidate on line 1; the script literal is on line 12, far
        // outside the 3-line window.
        let got = scored(&text, Rule::Xss, Span::point(1, 1), &scorer);
        assert_eq!(got, 0.0);
        // A candidate on line 10 sees line 12 inside the window.
        let got = scored(&text, Rule::Xss, Span::point(10, 1), &scorer);
        assert!((got - 0.5).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn smell_rules_have_no_cues() {
        let text = "def f():\n    x = \"SELECT\" + y\n";
        let got = scored(text, Rule::LongMethod, Span::new(1, 1, 2, 18), &ScorerConfig::default());
        assert_eq!(got, 0.0);
    }

    #[test]
    fn scores_cap_at_one() {
        let text = "h = \"<script><div><a href=x><b></b>\" + html + render\n";
        let got = scored(text, Rule::Xss, Span::new(1, 1, 1, 53), &ScorerConfig::default());
        assert_eq!(got, 1.0);
    }

    #[test]
    fn none_mode_returns_zeroes() {
        let scorer = ScorerConfig { mode: ScorerMode::None, ..ScorerConfig::default() };
        let text = "q = \"SELECT\" + uid\n";
        let got = scored(text, Rule::SqlInjection, Span::new(1, 1, 1, 18), &scorer);
        assert_eq!(got, 0.0);
    }

    #[test]
    fn external_scorer_replies_win() {
        let scorer = ScorerConfig {
            mode: ScorerMode::Command,
            command: vec![
                "python3".into(),
                "-c".into(),
                concat!(
                    "import sys, json\n",
                    "for line in sys.stdin:\n",
                    "    req = json.loads(line)\n",
                    "    print(json.dumps({'id': req['id'], 'score': 0.85}))\n",
                )
                .into(),
            ],
            ..ScorerConfig::default()
        };
        let text = "q = \"SELECT\" + uid\n";
        let got = scored(text, Rule::SqlInjection, Span::new(1, 1, 1, 18), &scorer);
        assert!((got - 0.85).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn broken_scorer_falls_back_with_a_note() {
        let scorer = ScorerConfig {
            mode: ScorerMode::Command,
            command: vec!["python3".into(), "-c".into(), "print('not json')".into()],
            ..ScorerConfig::default()
        };
        let unit = SourceUnit::python("t.py", "q = \"SELECT\" + uid\n");
        let analysis = analyze_unit(&unit).expect("analyzes");
        let mut notes = Vec::new();
        let scores = score_candidates(
            &analysis,
            &[candidate_at(Rule::SqlInjection, Span::new(1, 1, 1, 18))],
            &scorer,
            &mut notes,
        );
        assert_eq!(notes.len(), 1, "fallback leaves a note: {notes:?}");
        // Built-in fallback: select + "+".
        assert!((scores[0] - 0.7).abs() < 1e-9, "got {}", scores[0]);
    }

    #[test]
    fn slow_scorer_times_out_and_falls_back() {
        let scorer = ScorerConfig {
            mode: ScorerMode::Command,
            command: vec!["python3".into(), "-c".into(), "import time; time.sleep(30)".into()],
            timeout_ms: 150,
            ..ScorerConfig::default()
        };
        let unit = SourceUnit::python("t.py", "q = \"SELECT\" + uid\n");
        let analysis = analyze_unit(&unit).expect("analyzes");
        let mut notes = Vec::new();
        let scores = score_candidates(
            &analysis,
            &[candidate_at(Rule::SqlInjection, Span::new(1, 1, 1, 18))],
            &scorer,
            &mut notes,
        );
        assert_eq!(notes.len(), 1);
        assert!(notes[0].contains("timed out") || notes[0].contains("deadline"), "{notes:?}");
        assert!((scores[0] - 0.7).abs() < 1e-9);
    }
}
