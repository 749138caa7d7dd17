//! Targeted rewrites: secret relocation and query parameterization.

use super::{Edit, Patch, PatchKind};
use crate::ast::{walk_stmts, Expr, ExprKind, Literal, Stmt, StmtId, StmtKind};
use crate::detect::{Evidence, Finding, UnitAnalysis};
use crate::error::{Error, Result};
use crate::repair::apply::byte_range;
use crate::span::Span;
use std::collections::BTreeSet;

/// Replaces a hardcoded secret literal with an environment read keyed
/// by the upper-cased assignment target. The description doubles as the
/// provisioning note: the named variable must exist at runtime, and the
/// unit needs `import os` if it lacks one.
pub fn relocate_secret(finding: &Finding, analysis: &UnitAnalysis) -> Result<Patch> {
    let Evidence::Secret { literal_span, target, .. } = &finding.evidence else {
        return Err(Error::MissingEvidence(finding.id.clone()));
    };
    let target = match target {
        Some(name) => name.clone(),
        None => assignment_target(analysis, *literal_span)
            .ok_or_else(|| Error::MissingEvidence(finding.id.clone()))?,
    };
    let key: String = target
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_uppercase() } else { '_' })
        .collect();
    Ok(Patch {
        edits: vec![Edit {
            span: *literal_span,
            replacement: format!("os.getenv(\"{key}\")"),
        }],
        description: format!(
            "read the secret from the environment: provision {key} and ensure `import os`"
        ),
        kind: PatchKind::RelocateSecret,
    })
}

/// Name of the variable a literal is assigned to, when it is the whole
/// right-hand side of an assignment.
fn assignment_target(analysis: &UnitAnalysis, literal_span: Span) -> Option<String> {
    let mut found = None;
    walk_stmts(&analysis.ast.module.body, &mut |stmt| {
        if let StmtKind::Assign { target, value } = &stmt.kind {
            if value.span == literal_span {
                found = match &target.kind {
                    ExprKind::Name(n) => Some(n.clone()),
                    ExprKind::Attribute { attr, .. } => Some(attr.clone()),
                    _ => None,
                };
            }
        }
    });
    found
}

/// A resolved piece of a query expression.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Fragment {
    Lit(String),
    Var(String),
}

/// Rewrites an injection sink into a parameterized call: the query
/// argument becomes a literal template with one `?` per interpolated
/// name and the names move into a trailing argument tuple. Names are
/// resolved through straight-line definitions, so a query assembled
/// over several statements rewrites at the final concatenation.
pub fn parameterize_query(finding: &Finding, analysis: &UnitAnalysis) -> Result<Patch> {
    let Evidence::Taint { sink_span, .. } = &finding.evidence else {
        return Err(Error::MissingEvidence(finding.id.clone()));
    };
    let (stmt_id, call) = find_call(analysis, *sink_span)
        .ok_or_else(|| Error::MissingEvidence(finding.id.clone()))?;
    let ExprKind::Call { func, args } = &call.kind else { unreachable!("found by kind") };
    let Some(query_arg) = args.first() else {
        return Err(Error::UnsupportedShape(*sink_span));
    };

    let resolver = Resolver { analysis, entity: &finding.entity.name };
    let fragments = resolver.flatten(query_arg, stmt_id, &mut BTreeSet::new())?;
    let vars: Vec<&String> = fragments
        .iter()
        .filter_map(|f| match f {
            Fragment::Var(v) => Some(v),
            Fragment::Lit(_) => None,
        })
        .collect();
    if vars.is_empty() {
        return Err(Error::UnsupportedShape(*sink_span));
    }

    let mut template = String::new();
    for fragment in &fragments {
        match fragment {
            Fragment::Lit(text) => template.push_str(text),
            Fragment::Var(_) => template.push('?'),
        }
    }
    let text = analysis.unit.text.as_str();
    let (fs, fe) = byte_range(text, func.span)?;
    let func_src = &text[fs..fe];
    let args_src = vars.iter().map(|v| v.as_str()).collect::<Vec<_>>().join(", ");
    let replacement =
        format!("{func_src}({}, ({args_src}))", quote_py(&template));

    Ok(Patch {
        edits: vec![Edit { span: call.span, replacement }],
        description: format!(
            "parameterize the query: {} placeholder(s) bound as call arguments",
            vars.len()
        ),
        kind: PatchKind::ParameterizeQuery,
    })
}

/// Double-quoted source form of a template string.
fn quote_py(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            other => out.push(other),
        }
    }
    out.push('"');
    out
}

/// The statement containing the sink call plus the call expression.
fn find_call(analysis: &UnitAnalysis, sink_span: Span) -> Option<(StmtId, &Expr)> {
    let mut found = None;
    walk_stmts(&analysis.ast.module.body, &mut |stmt| {
        if found.is_some() {
            return;
        }
        for expr in stmt_exprs(stmt) {
            expr.walk(&mut |e| {
                if e.span == sink_span && matches!(e.kind, ExprKind::Call { .. }) {
                    found = Some((stmt.id, e));
                }
            });
        }
    });
    found
}

fn stmt_exprs(stmt: &Stmt) -> Vec<&Expr> {
    match &stmt.kind {
        StmtKind::Assign { target, value } => vec![target, value],
        StmtKind::AugAssign { target, value, .. } => vec![target, value],
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => vec![test],
        StmtKind::For { target, iter, .. } => vec![target, iter],
        StmtKind::Return { value } | StmtKind::Raise { value } => value.iter().collect(),
        StmtKind::ExprStmt { value } => vec![value],
        _ => Vec::new(),
    }
}

struct Resolver<'a> {
    analysis: &'a UnitAnalysis,
    entity: &'a str,
}

impl Resolver<'_> {
    /// Flattens a query expression into literal and name fragments,
    /// chasing unique straight-line definitions of names.
    fn flatten(
        &self,
        expr: &Expr,
        at: StmtId,
        visiting: &mut BTreeSet<StmtId>,
    ) -> Result<Vec<Fragment>> {
        match &expr.kind {
            ExprKind::Literal(Literal::Str(s)) => Ok(vec![Fragment::Lit(s.clone())]),
            ExprKind::Name(n) => self.resolve_name(n, at, visiting),
            ExprKind::BinOp { op, left, right } if op == "+" => {
                let mut out = self.flatten(left, at, visiting)?;
                out.extend(self.flatten(right, at, visiting)?);
                Ok(out)
            }
            ExprKind::BinOp { op, left, right } if op == "%" => {
                self.flatten_format(left, right, expr.span, "%s")
            }
            ExprKind::Call { func, args } => {
                // "...{}".format(a, b)
                if let ExprKind::Attribute { base, attr } = &func.kind {
                    if attr == "format" {
                        if let Some(parts) = format_call_fragments(base, args) {
                            return Ok(parts);
                        }
                    }
                }
                Err(Error::UnsupportedShape(expr.span))
            }
            _ => Err(Error::UnsupportedShape(expr.span)),
        }
    }

    /// `"... %s ..." % name` or `"..." % (a, b)`.
    fn flatten_format(
        &self,
        left: &Expr,
        right: &Expr,
        span: Span,
        marker: &str,
    ) -> Result<Vec<Fragment>> {
        let ExprKind::Literal(Literal::Str(template)) = &left.kind else {
            return Err(Error::UnsupportedShape(span));
        };
        let names = tuple_names(right).ok_or(Error::UnsupportedShape(span))?;
        interleave(template, marker, &names).ok_or(Error::UnsupportedShape(span))
    }

    /// A name resolves through its definition when exactly one reaches
    /// the point of use and it is a plain assignment; everything else —
    /// parameters, loop variables, merges — stays as a placeholder.
    fn resolve_name(
        &self,
        name: &str,
        at: StmtId,
        visiting: &mut BTreeSet<StmtId>,
    ) -> Result<Vec<Fragment>> {
        let Some(artifacts) =
            self.analysis.functions.iter().find(|f| f.name == self.entity)
        else {
            return Ok(vec![Fragment::Var(name.to_string())]);
        };
        let defs = artifacts.defuse.reaching_defs(at, name);
        let def = match defs {
            Some(set) if set.len() == 1 => *set.iter().next().expect("len 1"),
            _ => return Ok(vec![Fragment::Var(name.to_string())]),
        };
        if !visiting.insert(def) {
            return Ok(vec![Fragment::Var(name.to_string())]);
        }
        let stmt = find_stmt(self.analysis, def);
        let result = match stmt.map(|s| &s.kind) {
            Some(StmtKind::Assign { target, value })
                if matches!(&target.kind, ExprKind::Name(n) if n == name) =>
            {
                self.flatten(value, def, visiting)
            }
            Some(StmtKind::AugAssign { target, op, value })
                if op == "+" && matches!(&target.kind, ExprKind::Name(n) if n == name) =>
            {
                // `q += x` appends: resolve the prior value, then x.
                let mut out = self.resolve_name(name, def, visiting)?;
                out.extend(self.flatten(value, def, visiting)?);
                Ok(out)
            }
            _ => Ok(vec![Fragment::Var(name.to_string())]),
        };
        visiting.remove(&def);
        result
    }
}

fn find_stmt(analysis: &UnitAnalysis, id: StmtId) -> Option<&Stmt> {
    let mut found = None;
    walk_stmts(&analysis.ast.module.body, &mut |stmt| {
        if stmt.id == id {
            found = Some(stmt);
        }
    });
    found
}

/// Names in a parenthesized tuple or a single name.
fn tuple_names(expr: &Expr) -> Option<Vec<String>> {
    match &expr.kind {
        ExprKind::Name(n) => Some(vec![n.clone()]),
        ExprKind::Tuple(items) => items
            .iter()
            .map(|e| match &e.kind {
                ExprKind::Name(n) => Some(n.clone()),
                _ => None,
            })
            .collect(),
        _ => None,
    }
}

/// Splits `template` on `marker` and interleaves the names, failing
/// when the counts disagree.
fn interleave(template: &str, marker: &str, names: &[String]) -> Option<Vec<Fragment>> {
    let parts: Vec<&str> = template.split(marker).collect();
    if parts.len() != names.len() + 1 {
        return None;
    }
    let mut out = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        if !part.is_empty() {
            out.push(Fragment::Lit((*part).to_string()));
        }
        if i < names.len() {
            out.push(Fragment::Var(names[i].clone()));
        }
    }
    Some(out)
}

/// `"…{}…".format(a, b)` fragments, when the receiver is a literal and
/// every argument is a plain name.
fn format_call_fragments(base: &Expr, args: &[Expr]) -> Option<Vec<Fragment>> {
    let ExprKind::Literal(Literal::Str(template)) = &base.kind else {
        return None;
    };
    let names: Option<Vec<String>> = args
        .iter()
        .map(|a| match &a.kind {
            ExprKind::Name(n) => Some(n.clone()),
            _ => None,
        })
        .collect();
    interleave(template, "{}", &names?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ToolConfig;
    use crate::detect::{analyze_unit, scan_units};
    use crate::repair::apply_patch;
    use crate::source::SourceUnit;

    fn scan_one(text: &str) -> (UnitAnalysis, Vec<Finding>) {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        let findings = scan_units(&[unit], &ToolConfig::default()).findings;
        (analysis, findings)
    }

    #[test]
    fn secret_literal_becomes_env_read() {
        let (analysis, findings) = scan_one("password = \"hunter2x\"\n");
        let patch = relocate_secret(&findings[0], &analysis).expect("patches");
        assert_eq!(patch.kind, PatchKind::RelocateSecret);
        assert!(patch.description.contains("PASSWORD"), "{}", patch.description);
        let after = apply_patch(&analysis.unit.text, &patch).unwrap();
        assert_eq!(after, "password = os.getenv(\"PASSWORD\")\n");
    }

    #[test]
    fn entropy_finding_derives_key_from_assignment() {
        let (analysis, findings) = scan_one("blob9 = \"aB3xK9mQ2fT7wZ5cJ8nR4vL6\"\n");
        let patch = relocate_secret(&findings[0], &analysis).expect("patches");
        let after = apply_patch(&analysis.unit.text, &patch).unwrap();
        assert_eq!(after, "blob9 = os.getenv(\"BLOB9\")\n");
    }

    #[test]
    fn single_concat_gets_one_placeholder() {
        let (analysis, findings) = scan_one(concat!(
            "def lookup(user_input, db):\n",
            "    db.execute(\"SELECT id=\" + user_input)\n",
        ));
        let sql = findings.iter().find(|f| f.rule.name() == "sql-injection").unwrap();
        let patch = parameterize_query(sql, &analysis).expect("patches");
        let after = apply_patch(&analysis.unit.text, &patch).unwrap();
        assert!(
            after.contains("db.execute(\"SELECT id=?\", (user_input))"),
            "{after}"
        );
    }

    #[test]
    fn multi_statement_query_rewrites_at_the_sink() {
        let (analysis, findings) = scan_one(concat!(
            "def lookup(user_input, db):\n",
            "    q = \"SELECT id=\"\n",
            "    q += user_input\n",
            "    q = q + \" LIMIT 1\"\n",
            "    db.execute(q)\n",
        ));
        let sql = findings.iter().find(|f| f.rule.name() == "sql-injection").unwrap();
        let patch = parameterize_query(sql, &analysis).expect("patches");
        let after = apply_patch(&analysis.unit.text, &patch).unwrap();
        assert!(
            after.contains("db.execute(\"SELECT id=? LIMIT 1\", (user_input))"),
            "{after}"
        );
    }

    #[test]
    fn percent_format_is_recognized() {
        let (analysis, findings) = scan_one(concat!(
            "def lookup(user_input, db):\n",
            "    db.execute(\"SELECT id=%s\" % user_input)\n",
        ));
        let sql = findings.iter().find(|f| f.rule.name() == "sql-injection");
        // %-interpolation is still tainted flow into arg 0.
        let sql = sql.expect("taint sees the name in the sink arg");
        let patch = parameterize_query(sql, &analysis).expect("patches");
        let after = apply_patch(&analysis.unit.text, &patch).unwrap();
        assert!(after.contains("db.execute(\"SELECT id=?\", (user_input))"), "{after}");
    }

    #[test]
    fn unresolvable_shapes_are_refused() {
        let (analysis, findings) = scan_one(concat!(
            "def lookup(user_input, db):\n",
            "    db.execute(make_query(user_input))\n",
        ));
        if let Some(sql) = findings.iter().find(|f| f.rule.name() == "sql-injection") {
            let got = parameterize_query(sql, &analysis);
            assert!(matches!(got, Err(Error::UnsupportedShape(_))));
        }
    }

    #[test]
    fn two_names_keep_their_order() {
        let (analysis, findings) = scan_one(concat!(
            "def pair(user_input, request_kind, db):\n",
            "    q = \"a=\" + user_input + \" b=\" + request_kind\n",
            "    db.execute(q)\n",
        ));
        let sql = findings.iter().find(|f| f.rule.name() == "sql-injection").unwrap();
        let patch = parameterize_query(sql, &analysis).expect("patches");
        let after = apply_patch(&analysis.unit.text, &patch).unwrap();
        assert!(
            after.contains("db.execute(\"a=? b=?\", (user_input, request_kind))"),
            "{after}"
        );
    }
}
