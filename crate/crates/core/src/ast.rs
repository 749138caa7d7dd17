//! Normalized abstract syntax tree.
//!
//! The parser flattens surface sugar before this tree is built: `elif`
//! chains become nested `If` nodes in the else-suite, parenthesized
//! groupings disappear, and a leading minus folds into the number
//! literal. Every statement carries a [`StmtId`] assigned in source
//! (pre-order) order, which the control-flow and dependence layers use
//! as their node identity.

use crate::span::Span;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Identity of a statement (or parameter binding) within one unit.
/// Ids are dense, start at 0 and increase in source order.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct StmtId(pub u32);

impl fmt::Display for StmtId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// Root of a parsed unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NormalizedAst {
    pub unit_id: String,
    pub module: Module,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Module {
    pub body: Vec<Stmt>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stmt {
    pub id: StmtId,
    pub kind: StmtKind,
    pub span: Span,
}

/// Formal parameter. Parameters are definition sites, so they share the
/// statement id space even though they are not statements syntactically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub id: StmtId,
    pub name: String,
    pub span: Span,
}

/// One `except` clause of a `try` statement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Handler {
    pub exc_type: Option<String>,
    pub body: Vec<Stmt>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "camelCase")]
pub enum StmtKind {
    FunctionDef { name: String, params: Vec<Param>, body: Vec<Stmt> },
    ClassDef { name: String, bases: Vec<String>, body: Vec<Stmt> },
    Assign { target: Expr, value: Expr },
    AugAssign { target: Expr, op: String, value: Expr },
    If { test: Expr, body: Vec<Stmt>, orelse: Vec<Stmt> },
    While { test: Expr, body: Vec<Stmt> },
    For { target: Expr, iter: Expr, body: Vec<Stmt> },
    Try { body: Vec<Stmt>, handlers: Vec<Handler>, finalbody: Vec<Stmt> },
    Return { value: Option<Expr> },
    Raise { value: Option<Expr> },
    Import { module: String, names: Vec<String> },
    ExprStmt { value: Expr },
    Pass,
    Break,
    Continue,
}

impl StmtKind {
    /// Short node-kind label used in exports and explanations.
    pub fn label(&self) -> &'static str {
        match self {
            StmtKind::FunctionDef { .. } => "FunctionDef",
            StmtKind::ClassDef { .. } => "ClassDef",
            StmtKind::Assign { .. } => "Assign",
            StmtKind::AugAssign { .. } => "AugAssign",
            StmtKind::If { .. } => "If",
            StmtKind::While { .. } => "While",
            StmtKind::For { .. } => "For",
            StmtKind::Try { .. } => "Try",
            StmtKind::Return { .. } => "Return",
            StmtKind::Raise { .. } => "Raise",
            StmtKind::Import { .. } => "Import",
            StmtKind::ExprStmt { .. } => "ExprStmt",
            StmtKind::Pass => "Pass",
            StmtKind::Break => "Break",
            StmtKind::Continue => "Continue",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "camelCase")]
pub enum ExprKind {
    Name(String),
    Literal(Literal),
    BinOp { left: Box<Expr>, op: String, right: Box<Expr> },
    Compare { left: Box<Expr>, op: String, right: Box<Expr> },
    Call { func: Box<Expr>, args: Vec<Expr> },
    Attribute { base: Box<Expr>, attr: String },
    Subscript { value: Box<Expr>, index: Box<Expr> },
    /// Tuple display, e.g. the argument pair in `execute(q, (a, b))`.
    Tuple(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "camelCase")]
pub enum Literal {
    Str(String),
    /// Raw number lexeme; the analyzer never needs its numeric value.
    Num(String),
    Bool(bool),
    None,
}

impl Expr {
    /// Visits this expression and all sub-expressions, outside-in.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        match &self.kind {
            ExprKind::Name(_) | ExprKind::Literal(_) => {}
            ExprKind::BinOp { left, right, .. } | ExprKind::Compare { left, right, .. } => {
                left.walk(f);
                right.walk(f);
            }
            ExprKind::Call { func, args } => {
                func.walk(f);
                for arg in args {
                    arg.walk(f);
                }
            }
            ExprKind::Attribute { base, .. } => base.walk(f),
            ExprKind::Subscript { value, index } => {
                value.walk(f);
                index.walk(f);
            }
            ExprKind::Tuple(elems) => {
                for e in elems {
                    e.walk(f);
                }
            }
        }
    }

    /// All identifiers read by this expression, in source order.
    pub fn names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let ExprKind::Name(n) = &e.kind {
                out.push(n.as_str());
            }
        });
        out
    }

    /// For `a`, `a.b.c`, `a[i]` and calls thereof: the leftmost name.
    pub fn root_name(&self) -> Option<&str> {
        match &self.kind {
            ExprKind::Name(n) => Some(n),
            ExprKind::Attribute { base, .. } => base.root_name(),
            ExprKind::Subscript { value, .. } => value.root_name(),
            ExprKind::Call { func, .. } => func.root_name(),
            _ => None,
        }
    }

    /// Dotted rendering of a name/attribute chain (`os.system`), if the
    /// expression is such a chain.
    pub fn dotted_name(&self) -> Option<String> {
        match &self.kind {
            ExprKind::Name(n) => Some(n.clone()),
            ExprKind::Attribute { base, attr } => {
                Some(format!("{}.{}", base.dotted_name()?, attr))
            }
            _ => None,
        }
    }
}

/// Visits `stmts` and every transitively nested statement, pre-order.
pub fn walk_stmts<'a>(stmts: &'a [Stmt], f: &mut impl FnMut(&'a Stmt)) {
    for stmt in stmts {
        f(stmt);
        match &stmt.kind {
            StmtKind::FunctionDef { body, .. } | StmtKind::ClassDef { body, .. } => {
                walk_stmts(body, f);
            }
            StmtKind::If { body, orelse, .. } => {
                walk_stmts(body, f);
                walk_stmts(orelse, f);
            }
            StmtKind::While { body, .. } | StmtKind::For { body, .. } => walk_stmts(body, f),
            StmtKind::Try { body, handlers, finalbody } => {
                walk_stmts(body, f);
                for h in handlers {
                    walk_stmts(&h.body, f);
                }
                walk_stmts(finalbody, f);
            }
            _ => {}
        }
    }
}

/// A function (or method) seen in isolation: the unit most analyses
/// operate on.
#[derive(Debug, Clone)]
pub struct FunctionView<'a> {
    pub stmt: &'a Stmt,
    /// Qualified name: `Class.method` for methods, plain name otherwise.
    pub name: String,
    pub params: &'a [Param],
    pub body: &'a [Stmt],
    pub class_name: Option<String>,
}

/// A class definition plus direct method list.
#[derive(Debug, Clone)]
pub struct ClassView<'a> {
    pub stmt: &'a Stmt,
    pub name: String,
    pub bases: &'a [String],
    pub body: &'a [Stmt],
}

impl NormalizedAst {
    /// Every function and method in the unit, in source order. Nested
    /// functions are qualified through their enclosing scope.
    pub fn functions(&self) -> Vec<FunctionView<'_>> {
        let mut out = Vec::new();
        collect_functions(&self.module.body, None, &mut out);
        out
    }

    /// Every class definition, in source order.
    pub fn classes(&self) -> Vec<ClassView<'_>> {
        let mut out = Vec::new();
        for stmt in &self.module.body {
            if let StmtKind::ClassDef { name, bases, body } = &stmt.kind {
                out.push(ClassView { stmt, name: name.clone(), bases, body });
            }
        }
        out
    }

    /// Span and kind-label lookup for all statements, parameters included.
    pub fn stmt_index(&self) -> StmtIndex {
        let mut map = BTreeMap::new();
        walk_stmts(&self.module.body, &mut |stmt| {
            map.insert(stmt.id, StmtMeta { span: stmt.span, label: stmt.kind.label() });
            if let StmtKind::FunctionDef { params, .. } = &stmt.kind {
                for p in params {
                    map.insert(p.id, StmtMeta { span: p.span, label: "Param" });
                }
            }
        });
        StmtIndex { map }
    }
}

fn collect_functions<'a>(
    stmts: &'a [Stmt],
    scope: Option<&str>,
    out: &mut Vec<FunctionView<'a>>,
) {
    for stmt in stmts {
        match &stmt.kind {
            StmtKind::FunctionDef { name, params, body } => {
                let qualified = match scope {
                    Some(prefix) => format!("{prefix}.{name}"),
                    None => name.clone(),
                };
                out.push(FunctionView {
                    stmt,
                    name: qualified.clone(),
                    params,
                    body,
                    class_name: scope.map(str::to_string),
                });
                collect_functions(body, Some(&qualified), out);
            }
            StmtKind::ClassDef { name, body, .. } => {
                collect_functions(body, Some(name), out);
            }
            _ => {}
        }
    }
}

/// Where a statement lives and what kind of node it is.
#[derive(Debug, Clone, Copy)]
pub struct StmtMeta {
    pub span: Span,
    pub label: &'static str,
}

/// Id-to-location map for one unit.
#[derive(Debug, Clone, Default)]
pub struct StmtIndex {
    map: BTreeMap<StmtId, StmtMeta>,
}

impl StmtIndex {
    pub fn get(&self, id: StmtId) -> Option<StmtMeta> {
        self.map.get(&id).copied()
    }

    pub fn span(&self, id: StmtId) -> Span {
        self.map
            .get(&id)
            .map(|m| m.span)
            .unwrap_or_else(|| Span::point(1, 1))
    }

    pub fn label(&self, id: StmtId) -> &'static str {
        self.map.get(&id).map(|m| m.label).unwrap_or("Unknown")
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}
