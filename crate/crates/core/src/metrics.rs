//! Structural metrics over functions and classes.
//!
//! Cyclomatic complexity uses the extended counting rule: every `if`
//! (including ones normalized from `elif`), `while`, `for`, and `except`
//! handler adds one, and so does each boolean operator inside an `if` or
//! `while` predicate. Nested function and class bodies are excluded from
//! a function's own complexity and statement counts belong to whoever
//! declares them — which keeps a class's WMC exactly the sum of its
//! methods' complexities.

use crate::ast::{ClassView, Expr, ExprKind, FunctionView, NormalizedAst, Stmt, StmtKind};
use crate::source::SourceUnit;
use crate::span::Span;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// The metric bundle detectors consume. Function-level metrics leave the
/// class-only fields (`nom`, `wmc`, `atfd`, `accessor_ratio`, `cbo`) at
/// zero; class-level metrics fill everything.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MetricVector {
    /// Non-blank, non-comment lines inside the entity's span.
    pub loc: u32,
    /// Number of statements, nested suites included.
    pub nos: u32,
    /// Extended cyclomatic complexity.
    pub cc: u32,
    /// Parameter count (methods count `self`).
    pub params: u32,
    /// Number of methods (classes only).
    pub nom: u32,
    /// Weighted methods per class: sum of member complexities.
    pub wmc: u32,
    /// Accesses to foreign data: attribute reads whose base is not
    /// `self`/`cls`, counted once per access site.
    pub atfd: u32,
    /// Fraction of methods that are trivial getters or setters.
    pub accessor_ratio: f64,
    /// Coupling between objects: distinct other classes referenced.
    pub cbo: u32,
}

/// Counts non-blank, non-comment lines of `unit` within `span`.
pub fn loc_in_span(unit: &SourceUnit, span: Span) -> u32 {
    unit.text
        .lines()
        .skip(span.start_line as usize - 1)
        .take((span.end_line - span.start_line + 1) as usize)
        .filter(|line| {
            let trimmed = line.trim_start();
            !trimmed.is_empty() && !trimmed.starts_with('#')
        })
        .count() as u32
}

/// Metrics for one function or method.
pub fn function_metrics(function: &FunctionView<'_>, unit: &SourceUnit) -> MetricVector {
    MetricVector {
        loc: loc_in_span(unit, function.stmt.span),
        nos: count_statements(function.body),
        cc: cyclomatic(function.body),
        params: function.params.len() as u32,
        ..MetricVector::default()
    }
}

/// Metrics for a class: aggregates over its direct methods.
pub fn class_metrics(class: &ClassView<'_>, unit: &SourceUnit) -> MetricVector {
    let methods: Vec<&Stmt> = class
        .body
        .iter()
        .filter(|s| matches!(s.kind, StmtKind::FunctionDef { .. }))
        .collect();
    let nom = methods.len() as u32;
    let mut wmc = 0u32;
    let mut accessors = 0u32;
    for method in &methods {
        if let StmtKind::FunctionDef { params, body, .. } = &method.kind {
            wmc += cyclomatic(body);
            if is_getter(params, body) || is_setter(params, body) {
                accessors += 1;
            }
        }
    }
    let accessor_ratio = if nom == 0 { 0.0 } else { f64::from(accessors) / f64::from(nom) };

    MetricVector {
        loc: loc_in_span(unit, class.stmt.span),
        nos: count_statements(class.body),
        cc: 0,
        params: 0,
        nom,
        wmc,
        atfd: class_atfd(class),
        accessor_ratio,
        cbo: coupling(class),
    }
}

/// Metrics for the module itself, used when a change target has no
/// enclosing function or class.
pub fn module_metrics(ast: &NormalizedAst, unit: &SourceUnit) -> MetricVector {
    MetricVector {
        loc: unit.loc,
        nos: count_statements(&ast.module.body),
        cc: cyclomatic(&ast.module.body),
        ..MetricVector::default()
    }
}

/// Attribute names assigned on `self` anywhere in the class, plus
/// class-level simple assignments — the "fields" a data class carries.
pub fn class_fields(class: &ClassView<'_>) -> BTreeSet<String> {
    let mut fields = BTreeSet::new();
    for stmt in class.body {
        if let StmtKind::Assign { target, .. } = &stmt.kind {
            if let ExprKind::Name(n) = &target.kind {
                fields.insert(n.clone());
            }
        }
    }
    crate::ast::walk_stmts(class.body, &mut |stmt| {
        if let StmtKind::Assign { target, .. } = &stmt.kind {
            if let ExprKind::Attribute { base, attr } = &target.kind {
                if matches!(&base.kind, ExprKind::Name(n) if n == "self") {
                    fields.insert(attr.clone());
                }
            }
        }
    });
    fields
}

/// Transitive statement count of a suite.
pub fn count_statements(stmts: &[Stmt]) -> u32 {
    let mut n = 0;
    crate::ast::walk_stmts(stmts, &mut |_| n += 1);
    n
}

/// Extended cyclomatic complexity of a suite (1 + decision points),
/// not descending into nested `def`/`class` bodies.
pub fn cyclomatic(stmts: &[Stmt]) -> u32 {
    1 + decision_points(stmts)
}

fn decision_points(stmts: &[Stmt]) -> u32 {
    let mut n = 0;
    for stmt in stmts {
        match &stmt.kind {
            StmtKind::If { test, body, orelse } => {
                n += 1 + boolean_ops(test);
                n += decision_points(body) + decision_points(orelse);
            }
            StmtKind::While { test, body } => {
                n += 1 + boolean_ops(test);
                n += decision_points(body);
            }
            StmtKind::For { body, .. } => {
                n += 1 + decision_points(body);
            }
            StmtKind::Try { body, handlers, finalbody } => {
                n += handlers.len() as u32;
                n += decision_points(body);
                for h in handlers {
                    n += decision_points(&h.body);
                }
                n += decision_points(finalbody);
            }
            // Nested definitions own their complexity.
            StmtKind::FunctionDef { .. } | StmtKind::ClassDef { .. } => {}
            _ => {}
        }
    }
    n
}

fn boolean_ops(expr: &Expr) -> u32 {
    let mut n = 0;
    expr.walk(&mut |e| {
        if let ExprKind::BinOp { op, .. } = &e.kind {
            if op == "and" || op == "or" {
                n += 1;
            }
        }
    });
    n
}

fn is_getter(params: &[crate::ast::Param], body: &[Stmt]) -> bool {
    if params.len() != 1 || params[0].name != "self" || body.len() != 1 {
        return false;
    }
    match &body[0].kind {
        StmtKind::Return { value: Some(v) } => matches!(
            &v.kind,
            ExprKind::Attribute { base, .. }
                if matches!(&base.kind, ExprKind::Name(n) if n == "self")
        ),
        _ => false,
    }
}

fn is_setter(params: &[crate::ast::Param], body: &[Stmt]) -> bool {
    if params.len() != 2 || params[0].name != "self" || body.len() != 1 {
        return false;
    }
    match &body[0].kind {
        StmtKind::Assign { target, value } => {
            let assigns_self_attr = matches!(
                &target.kind,
                ExprKind::Attribute { base, .. }
                    if matches!(&base.kind, ExprKind::Name(n) if n == "self")
            );
            let stores_param =
                matches!(&value.kind, ExprKind::Name(n) if *n == params[1].name);
            assigns_self_attr && stores_param
        }
        _ => false,
    }
}

/// One record per attribute-access site: `(root, attr, is_call_target)`.
/// Only the innermost attribute of a chain counts, so `a.b.c` is one
/// access through root `a`, and `a.b()` is a call, not a data access.
pub fn attribute_accesses(expr: &Expr) -> Vec<(String, String, bool)> {
    let mut out = Vec::new();
    collect_accesses(expr, false, &mut out);
    out
}

fn collect_accesses(expr: &Expr, is_call_func: bool, out: &mut Vec<(String, String, bool)>) {
    match &expr.kind {
        ExprKind::Call { func, args } => {
            collect_accesses(func, true, out);
            for arg in args {
                collect_accesses(arg, false, out);
            }
        }
        ExprKind::Attribute { base, attr } => {
            let innermost = !matches!(base.kind, ExprKind::Attribute { .. });
            if innermost {
                if let Some(root) = base.root_name() {
                    out.push((root.to_string(), attr.clone(), is_call_func));
                }
            }
            collect_accesses(base, false, out);
        }
        ExprKind::BinOp { left, right, .. } | ExprKind::Compare { left, right, .. } => {
            collect_accesses(left, false, out);
            collect_accesses(right, false, out);
        }
        ExprKind::Subscript { value, index } => {
            collect_accesses(value, false, out);
            collect_accesses(index, false, out);
        }
        ExprKind::Tuple(elems) => {
            for e in elems {
                collect_accesses(e, false, out);
            }
        }
        ExprKind::Name(_) | ExprKind::Literal(_) => {}
    }
}

/// Every expression appearing in a suite, headers included.
pub fn suite_exprs(stmts: &[Stmt]) -> Vec<&Expr> {
    let mut out = Vec::new();
    crate::ast::walk_stmts(stmts, &mut |stmt| match &stmt.kind {
        StmtKind::Assign { target, value } => {
            out.push(target);
            out.push(value);
        }
        StmtKind::AugAssign { target, value, .. } => {
            out.push(target);
            out.push(value);
        }
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => out.push(test),
        StmtKind::For { target, iter, .. } => {
            out.push(target);
            out.push(iter);
        }
        StmtKind::Return { value } | StmtKind::Raise { value } => {
            if let Some(v) = value {
                out.push(v);
            }
        }
        StmtKind::ExprStmt { value } => out.push(value),
        _ => {}
    });
    out
}

fn class_atfd(class: &ClassView<'_>) -> u32 {
    let mut n = 0;
    for expr in suite_exprs(class.body) {
        for (root, _, is_call) in attribute_accesses(expr) {
            if !is_call && root != "self" && root != "cls" {
                n += 1;
            }
        }
    }
    n
}

/// Distinct other classes this class leans on: base classes, uppercase
/// constructor calls, and uppercase attribute-access roots.
fn coupling(class: &ClassView<'_>) -> u32 {
    let mut names: BTreeSet<String> = BTreeSet::new();
    for base in class.bases {
        names.insert(base.split('.').next().unwrap_or(base).to_string());
    }
    for expr in suite_exprs(class.body) {
        expr.walk(&mut |e| {
            if let ExprKind::Call { func, .. } = &e.kind {
                if let Some(name) = func.dotted_name() {
                    let root = name.split('.').next().unwrap_or(&name).to_string();
                    if starts_uppercase(&root) {
                        names.insert(root);
                    }
                }
            }
        });
        for (root, _, _) in attribute_accesses(expr) {
            if starts_uppercase(&root) {
                names.insert(root);
            }
        }
    }
    names.remove(&class.name);
    names.len() as u32
}

fn starts_uppercase(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_unit;

    fn parse(text: &str) -> (SourceUnit, NormalizedAst) {
        let unit = SourceUnit::python("t.py", text);
        let ast = parse_unit(&unit).expect("parses");
        (unit, ast)
    }

    #[test]
    fn straight_line_function_has_cc_one() {
        let (unit, ast) = parse("def f():\n    x = 1\n    y = x\n    return y\n");
        let m = function_metrics(&ast.functions()[0], &unit);
        assert_eq!((m.cc, m.nos, m.params, m.loc), (1, 3, 0, 4));
    }

    #[test]
    fn decisions_and_boolean_operators_count() {
        let text = "def f(a, b):\n    if a and b:\n        return 1\n    for i in a:\n        while i > 0 or b:\n            i -= 1\n    try:\n        go()\n    except Err:\n        pass\n    return 0\n";
        let (unit, ast) = parse(text);
        let m = function_metrics(&ast.functions()[0], &unit);
        // 1 + if + and + for + while + or + except = 7.
        assert_eq!(m.cc, 7);
    }

    #[test]
    fn elif_chain_counts_each_branch() {
        let text = "def f(a):\n    if a == 1:\n        return 1\n    elif a == 2:\n        return 2\n    elif a == 3:\n        return 3\n    return 0\n";
        let (unit, ast) = parse(text);
        assert_eq!(function_metrics(&ast.functions()[0], &unit).cc, 4);
    }

    #[test]
    fn nested_defs_do_not_inflate_outer_complexity() {
        let text = "def f(a):\n    def g(b):\n        if b:\n            return 1\n        return 0\n    return g(a)\n";
        let (unit, ast) = parse(text);
        let functions = ast.functions();
        assert_eq!(function_metrics(&functions[0], &unit).cc, 1);
        assert_eq!(function_metrics(&functions[1], &unit).cc, 2);
    }

    #[test]
    fn wmc_is_exactly_the_sum_of_method_complexities() {
        let text = "class C:\n    def a(self):\n        if self.x:\n            return 1\n        return 0\n    def b(self, v):\n        for i in v:\n            self.x = i\n        return self.x\n";
        let (unit, ast) = parse(text);
        let class = &ast.classes()[0];
        let cm = class_metrics(class, &unit);
        let sum: u32 = ast
            .functions()
            .iter()
            .filter(|f| f.class_name.as_deref() == Some("C"))
            .map(|f| function_metrics(f, &unit).cc)
            .sum();
        assert_eq!(cm.wmc, sum);
        assert_eq!(cm.nom, 2);
    }

    #[test]
    fn accessor_ratio_spots_getters_and_setters() {
        let text = "class P:\n    def get_x(self):\n        return self.x\n    def set_x(self, v):\n        self.x = v\n    def work(self):\n        if self.x:\n            self.x = 0\n        return 1\n";
        let (unit, ast) = parse(text);
        let m = class_metrics(&ast.classes()[0], &unit);
        assert!((m.accessor_ratio - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn fields_come_from_self_assignments_and_class_level_names() {
        let text = "class P:\n    kind = \"point\"\n    def set_x(self, v):\n        self.x = v\n    def set_y(self, v):\n        self.y = v\n";
        let (_, ast) = parse(text);
        let fields = class_fields(&ast.classes()[0]);
        assert_eq!(
            fields.into_iter().collect::<Vec<_>>(),
            vec!["kind".to_string(), "x".to_string(), "y".to_string()]
        );
    }

    #[test]
    fn atfd_counts_foreign_reads_not_method_calls() {
        let text = "class C:\n    def total(self, other):\n        base = other.amount + other.rate\n        other.refresh()\n        return base + self.margin\n";
        let (unit, ast) = parse(text);
        let m = class_metrics(&ast.classes()[0], &unit);
        // other.amount, other.rate are data reads; other.refresh() is a
        // call and self.margin is own data.
        assert_eq!(m.atfd, 2);
    }

    #[test]
    fn coupling_counts_distinct_class_references() {
        let text = "class C(Base):\n    def make(self):\n        a = Helper()\n        b = Helper()\n        c = Registry.lookup(\"x\")\n        return a\n";
        let (unit, ast) = parse(text);
        let m = class_metrics(&ast.classes()[0], &unit);
        // Base, Helper, Registry.
        assert_eq!(m.cbo, 3);
    }
}
