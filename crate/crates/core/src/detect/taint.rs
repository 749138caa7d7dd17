//! Source-to-sink taint propagation for injection flaws.
//!
//! Taint enters a function through parameters with untrusted-looking
//! names or through calls that read external input. It propagates along
//! def-use chains: a statement that reads a tainted variable and binds a
//! new one passes the taint on, unless every tainted occurrence in its
//! value is wrapped in a sanitizer call. A path ends when a tainted
//! variable reaches a dangerous argument of a sink call.
//!
//! Sanitized paths are still reported, with a structural score of zero:
//! they carry the full trace for explanations but sit below any sane
//! reporting threshold unless a semantic scorer insists otherwise.

use super::{Candidate, EntityKind, EntityRef, Evidence, FunctionArtifacts, Rule, TaintStep};
use crate::ast::{walk_stmts, Expr, ExprKind, FunctionView, Stmt, StmtId, StmtKind};
use crate::error::{Error, Result};
use crate::span::Span;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Where taint may enter a function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct TaintSources {
    /// Parameter-name patterns treated as untrusted input.
    pub params: Vec<String>,
    /// Call-name patterns whose results are untrusted.
    pub calls: Vec<String>,
}

impl Default for TaintSources {
    fn default() -> Self {
        TaintSources {
            params: [
                "request*",
                "req",
                "user_input",
                "untrusted*",
                "query_string",
                "payload",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect(),
            calls: [
                "input",
                "request_args",
                "request_form",
                "request_param",
                "read_line",
                "recv",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        }
    }
}

/// One dangerous call shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SinkSpec {
    /// Call-name pattern (`execute`, `os.system`, `render_*`).
    pub pattern: String,
    /// CWE the sink maps to; decides which rule fires.
    pub cwe: u32,
    /// Argument positions that must not receive taint. `None` means all.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dangerous_args: Option<Vec<usize>>,
}

impl SinkSpec {
    fn new(pattern: &str, cwe: u32, dangerous_args: &[usize]) -> Self {
        SinkSpec {
            pattern: pattern.to_string(),
            cwe,
            dangerous_args: Some(dangerous_args.to_vec()),
        }
    }
}

/// Sources, sinks, and sanitizers driving the taint pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct TaintPolicy {
    pub sources: TaintSources,
    pub sinks: Vec<SinkSpec>,
    /// Call-name patterns that neutralize taint when they wrap a value.
    pub sanitizers: Vec<String>,
}

impl Default for TaintPolicy {
    fn default() -> Self {
        TaintPolicy {
            sources: TaintSources::default(),
            sinks: vec![
                SinkSpec::new("execute", 89, &[0]),
                SinkSpec::new("executemany", 89, &[0]),
                SinkSpec::new("os.system", 78, &[0]),
                SinkSpec::new("system", 78, &[0]),
                SinkSpec::new("subprocess_call", 78, &[0]),
                SinkSpec::new("popen", 78, &[0]),
                SinkSpec::new("render_html", 79, &[0]),
                SinkSpec::new("write_response", 79, &[0]),
            ],
            sanitizers: [
                "int",
                "float",
                "escape",
                "html_escape",
                "sql_quote",
                "shlex_quote",
                "quote",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        }
    }
}

impl TaintPolicy {
    /// Rejects patterns that cannot match and sinks with unknown CWEs.
    pub fn validate(&self) -> Result<()> {
        let all = self
            .sources
            .params
            .iter()
            .chain(self.sources.calls.iter())
            .chain(self.sinks.iter().map(|s| &s.pattern))
            .chain(self.sanitizers.iter());
        for pattern in all {
            if pattern.is_empty() || pattern == "*" {
                return Err(Error::Config(format!(
                    "taint pattern {pattern:?} matches nothing or everything"
                )));
            }
            if pattern[..pattern.len() - 1].contains('*') {
                return Err(Error::Config(format!(
                    "taint pattern {pattern:?}: '*' is only supported as a trailing wildcard"
                )));
            }
        }
        for sink in &self.sinks {
            if rule_for_cwe(sink.cwe).is_none() {
                return Err(Error::Config(format!(
                    "sink {:?} has unsupported CWE {}",
                    sink.pattern, sink.cwe
                )));
            }
        }
        Ok(())
    }
}

/// The injection rule a sink CWE maps to.
pub fn rule_for_cwe(cwe: u32) -> Option<Rule> {
    match cwe {
        89 => Some(Rule::SqlInjection),
        78 => Some(Rule::CommandInjection),
        79 => Some(Rule::Xss),
        _ => None,
    }
}

/// Matches `name` against a policy pattern: trailing `*` is a prefix
/// wildcard, a dotted pattern must match the full call path, and a bare
/// pattern matches either the whole name or its final component.
pub fn matches_pattern(pattern: &str, name: &str) -> bool {
    if let Some(prefix) = pattern.strip_suffix('*') {
        return name.starts_with(prefix);
    }
    if pattern.contains('.') {
        return name == pattern;
    }
    name == pattern || name.rsplit('.').next() == Some(pattern)
}

fn matches_any(patterns: &[String], name: &str) -> bool {
    patterns.iter().any(|p| matches_pattern(p, name))
}

/// A taint path from one source to one sink.
#[derive(Debug, Clone)]
struct TaintPath {
    source_span: Span,
    sink_span: Span,
    sink_name: String,
    rule: Rule,
    sanitized: bool,
    steps: Vec<TaintStep>,
}

/// Runs taint propagation over one function and returns its findings as
/// candidates, ordered by (source span, sink span).
pub fn detect_injection(
    view: &FunctionView<'_>,
    artifacts: &FunctionArtifacts,
    policy: &TaintPolicy,
) -> Vec<Candidate> {
    let stmts = index_stmts(view);
    let mut paths = Vec::new();
    let mut tracer = Tracer {
        policy,
        artifacts,
        stmts: &stmts,
        visited: BTreeSet::new(),
        paths: &mut paths,
    };

    // Parameter sources.
    for param in view.params {
        if matches_any(&policy.sources.params, &param.name) {
            tracer.visited.clear();
            let step = TaintStep { span: param.span, var: param.name.clone() };
            tracer.trace(param.id, &param.name, false, param.span, vec![step]);
        }
    }

    // Calls that read untrusted input, in statement order.
    for (&id, stmt) in &stmts {
        let defs = crate::dataflow::stmt_defs(stmt);
        if defs.is_empty() {
            continue;
        }
        let Some(call_span) = value_exprs(stmt)
            .iter()
            .flat_map(|e| calls_in(e))
            .find(|(name, _, _)| matches_any(&policy.sources.calls, name))
            .map(|(_, _, span)| span)
        else {
            continue;
        };
        for var in defs {
            tracer.visited.clear();
            let step = TaintStep { span: stmt.span, var: var.clone() };
            tracer.trace(id, &var, false, call_span, vec![step]);
        }
    }

    paths.sort_by_key(|p| (p.source_span, p.sink_span));
    let entity = EntityRef {
        kind: EntityKind::Function,
        name: artifacts.name.clone(),
        span: artifacts.span,
    };
    paths
        .into_iter()
        .map(|p| Candidate {
            rule: p.rule,
            span: p.sink_span,
            entity: entity.clone(),
            structural_score: if p.sanitized { 0.0 } else { 1.0 },
            evidence: Evidence::Taint {
                source_span: p.source_span,
                sink_span: p.sink_span,
                sink: p.sink_name,
                sanitized: p.sanitized,
                steps: p.steps,
            },
        })
        .collect()
}

struct Tracer<'a> {
    policy: &'a TaintPolicy,
    artifacts: &'a FunctionArtifacts,
    stmts: &'a BTreeMap<StmtId, &'a Stmt>,
    visited: BTreeSet<(StmtId, String, bool)>,
    paths: &'a mut Vec<TaintPath>,
}

impl Tracer<'_> {
    /// Follows the definition of `var` at `def` to every use it reaches.
    fn trace(
        &mut self,
        def: StmtId,
        var: &str,
        clean: bool,
        source_span: Span,
        steps: Vec<TaintStep>,
    ) {
        if !self.visited.insert((def, var.to_string(), clean)) {
            return;
        }
        for use_site in self.artifacts.defuse.uses_of_def(def, var) {
            let Some(stmt) = self.stmts.get(&use_site) else { continue };

            // Sink check: does this statement pass `var` to a sink?
            for (name, args, call_span) in
                value_exprs(stmt).iter().flat_map(|e| calls_in(e))
            {
                let Some(sink) = self
                    .policy
                    .sinks
                    .iter()
                    .find(|s| matches_pattern(&s.pattern, &name))
                else {
                    continue;
                };
                let dangerous: Vec<&Expr> = match &sink.dangerous_args {
                    Some(idx) => idx.iter().filter_map(|&i| args.get(i).copied()).collect(),
                    None => args.clone(),
                };
                let (occurrences, unwrapped) =
                    count_occurrences(&dangerous, var, &self.policy.sanitizers);
                if occurrences == 0 {
                    continue;
                }
                let mut steps = steps.clone();
                steps.push(TaintStep { span: call_span, var: var.to_string() });
                self.paths.push(TaintPath {
                    source_span,
                    sink_span: call_span,
                    sink_name: name.clone(),
                    rule: rule_for_cwe(sink.cwe).expect("validated policy"),
                    sanitized: clean || unwrapped == 0,
                    steps,
                });
            }

            // Propagation: statements that bind new names from `var`.
            let defs = crate::dataflow::stmt_defs(stmt);
            if defs.is_empty() {
                continue;
            }
            let values = value_exprs(stmt);
            let (occurrences, unwrapped) =
                count_occurrences(&values, var, &self.policy.sanitizers);
            // A use with no occurrence in the value side (an augmented
            // target, say) still carries taint through unchanged.
            let next_clean = clean || (occurrences > 0 && unwrapped == 0);
            for next_var in defs {
                let mut steps = steps.clone();
                steps.push(TaintStep { span: stmt.span, var: next_var.clone() });
                self.trace(use_site, &next_var, next_clean, source_span, steps);
            }
        }
    }
}

/// Maps statement ids to statements for the whole function body,
/// including the header's parameters via their owning statements.
fn index_stmts<'a>(view: &FunctionView<'a>) -> BTreeMap<StmtId, &'a Stmt> {
    let mut map = BTreeMap::new();
    walk_stmts(view.body, &mut |stmt| {
        map.insert(stmt.id, stmt);
    });
    map
}

/// The expressions a statement evaluates to produce or test values.
fn value_exprs(stmt: &Stmt) -> Vec<&Expr> {
    match &stmt.kind {
        StmtKind::Assign { value, .. } => vec![value],
        StmtKind::AugAssign { value, .. } => vec![value],
        StmtKind::For { iter, .. } => vec![iter],
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => vec![test],
        StmtKind::Return { value } | StmtKind::Raise { value } => {
            value.iter().collect()
        }
        StmtKind::ExprStmt { value } => vec![value],
        _ => Vec::new(),
    }
}

/// All calls inside an expression: (dotted name, argument exprs, span).
fn calls_in(expr: &Expr) -> Vec<(String, Vec<&Expr>, Span)> {
    let mut out = Vec::new();
    expr.walk(&mut |e| {
        if let ExprKind::Call { func, args } = &e.kind {
            if let Some(name) = func.dotted_name() {
                out.push((name, args.iter().collect(), e.span));
            }
        }
    });
    out
}

/// Counts occurrences of `var` across `exprs`, and how many of them sit
/// outside any sanitizer call.
fn count_occurrences(exprs: &[&Expr], var: &str, sanitizers: &[String]) -> (u32, u32) {
    let mut total = 0;
    let mut unwrapped = 0;
    for expr in exprs {
        walk_wrapped(expr, var, sanitizers, false, &mut total, &mut unwrapped);
    }
    (total, unwrapped)
}

fn walk_wrapped(
    expr: &Expr,
    var: &str,
    sanitizers: &[String],
    in_sanitizer: bool,
    total: &mut u32,
    unwrapped: &mut u32,
) {
    match &expr.kind {
        ExprKind::Name(n) => {
            if n == var {
                *total += 1;
                if !in_sanitizer {
                    *unwrapped += 1;
                }
            }
        }
        ExprKind::Call { func, args } => {
            let wraps = func
                .dotted_name()
                .map(|n| matches_any(sanitizers, &n))
                .unwrap_or(false);
            // The callee itself is never sanitized by its own call.
            walk_wrapped(func, var, sanitizers, in_sanitizer, total, unwrapped);
            for arg in args {
                walk_wrapped(arg, var, sanitizers, in_sanitizer || wraps, total, unwrapped);
            }
        }
        ExprKind::Literal(_) => {}
        ExprKind::BinOp { left, right, .. } | ExprKind::Compare { left, right, .. } => {
            walk_wrapped(left, var, sanitizers, in_sanitizer, total, unwrapped);
            walk_wrapped(right, var, sanitizers, in_sanitizer, total, unwrapped);
        }
        ExprKind::Attribute { base, .. } => {
            walk_wrapped(base, var, sanitizers, in_sanitizer, total, unwrapped);
        }
        ExprKind::Subscript { value, index } => {
            walk_wrapped(value, var, sanitizers, in_sanitizer, total, unwrapped);
            walk_wrapped(index, var, sanitizers, in_sanitizer, total, unwrapped);
        }
        ExprKind::Tuple(items) => {
            for item in items {
                walk_wrapped(item, var, sanitizers, in_sanitizer, total, unwrapped);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::analyze_unit;
    use crate::source::SourceUnit;

    fn run(text: &str) -> Vec<Candidate> {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        let policy = TaintPolicy::default();
        policy.validate().expect("default policy is valid");
        let mut out = Vec::new();
        for (view, artifacts) in
            analysis.ast.functions().iter().zip(&analysis.functions)
        {
            out.extend(detect_injection(view, artifacts, &policy));
        }
        out
    }

    #[test]
    fn patterns_match_as_documented() {
        assert!(matches_pattern("request*", "request_data"));
        assert!(matches_pattern("os.system", "os.system"));
        assert!(!matches_pattern("os.system", "system"));
        assert!(matches_pattern("execute", "cur.execute"));
        assert!(matches_pattern("execute", "execute"));
        assert!(!matches_pattern("execute", "executemany"));
    }

    #[test]
    fn tainted_param_reaching_execute_is_flagged() {
        let got = run(concat!(
            "def lookup(user_input, db):\n",
            "    q = \"SELECT\" + user_input\n",
            "    db.execute(q)\n",
        ));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::SqlInjection);
        assert_eq!(got[0].structural_score, 1.0);
        let Evidence::Taint { sanitized, steps, sink, .. } = &got[0].evidence else {
            panic!()
        };
        assert!(!sanitized);
        assert_eq!(sink, "db.execute");
        // param -> q -> sink
        assert_eq!(steps.len(), 3);
    }

    #[test]
    fn sanitizer_wrapping_clears_the_path() {
        let got = run(concat!(
            "def lookup(user_input, db):\n",
            "    q = \"SELECT\" + sql_quote(user_input)\n",
            "    db.execute(q)\n",
        ));
        assert_eq!(got.len(), 1);
        let Evidence::Taint { sanitized, .. } = &got[0].evidence else { panic!() };
        assert!(sanitized);
        assert_eq!(got[0].structural_score, 0.0);
    }

    #[test]
    fn partially_sanitized_values_stay_tainted() {
        let got = run(concat!(
            "def lookup(user_input, db):\n",
            "    q = sql_quote(user_input) + user_input\n",
            "    db.execute(q)\n",
        ));
        let Evidence::Taint { sanitized, .. } = &got[0].evidence else { panic!() };
        assert!(!sanitized);
    }

    #[test]
    fn sanitizing_at_the_sink_counts() {
        let got = run(concat!(
            "def lookup(user_input, db):\n",
            "    db.execute(sql_quote(user_input))\n",
        ));
        assert_eq!(got.len(), 1);
        let Evidence::Taint { sanitized, .. } = &got[0].evidence else { panic!() };
        assert!(sanitized);
    }

    #[test]
    fn call_sources_and_command_sinks() {
        let got = run(concat!(
            "def run_it():\n",
            "    cmd = input(\"cmd: \")\n",
            "    os.system(cmd)\n",
        ));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::CommandInjection);
    }

    #[test]
    fn taint_only_matters_in_dangerous_positions() {
        // Position 1 of execute is the parameter tuple, not the query.
        let got = run(concat!(
            "def lookup(user_input, db):\n",
            "    db.execute(\"SELECT ?\", (user_input,))\n",
        ));
        assert!(got.is_empty());
    }

    #[test]
    fn untainted_queries_pass() {
        let got = run(concat!(
            "def lookup(db):\n",
            "    q = \"SELECT 1\"\n",
            "    db.execute(q)\n",
        ));
        assert!(got.is_empty());
    }

    #[test]
    fn loops_do_not_hang_the_tracer() {
        let got = run(concat!(
            "def accumulate(user_input, db):\n",
            "    q = user_input\n",
            "    while True:\n",
            "        q = q + user_input\n",
            "    db.execute(q)\n",
        ));
        // The sink is unreachable past the infinite loop in the CFG, so
        // nothing fires; the point is termination.
        let _ = got;
    }

    #[test]
    fn augmented_assignment_carries_taint() {
        let got = run(concat!(
            "def build(user_input, db):\n",
            "    q = \"SELECT \"\n",
            "    q += user_input\n",
            "    db.execute(q)\n",
        ));
        assert_eq!(got.len(), 1);
        let Evidence::Taint { sanitized, .. } = &got[0].evidence else { panic!() };
        assert!(!sanitized);
    }

    #[test]
    fn policy_validation_rejects_bad_patterns() {
        let mut policy = TaintPolicy::default();
        policy.sanitizers.push("*".into());
        assert!(policy.validate().is_err());

        let mut policy = TaintPolicy::default();
        policy.sinks.push(SinkSpec::new("exec", 999, &[0]));
        assert!(policy.validate().is_err());

        let mut policy = TaintPolicy::default();
        policy.sources.params.push("a*b".into());
        assert!(policy.validate().is_err());
    }

    #[test]
    fn xss_sink_fires_on_rendered_input() {
        let got = run(concat!(
            "def page(request_name):\n",
            "    html = \"<div>\" + request_name\n",
            "    render_html(html)\n",
        ));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::Xss);
    }
}
