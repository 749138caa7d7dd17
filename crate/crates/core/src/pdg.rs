//! Program dependence graph.
//!
//! Nodes are statement ids (parameters included); edges capture data
//! dependence (a definition reaches a use) and control dependence (a
//! predicate governs a statement). Control dependence follows the
//! structured shape of the tree: an `if`/`while`/`for` header depends
//! every statement inside its suites on itself, transitively through
//! nested suites, so a statement two loops deep has an edge from each
//! enclosing header.

use crate::ast::{FunctionView, Stmt, StmtId, StmtKind};
use crate::cfg::Cfg;
use crate::dataflow::DefUseIndex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum DepKind {
    /// The definition at `from` reaches a use of `var` at `to`.
    Data { var: String },
    /// `from` is a predicate governing the execution of `to`.
    Control,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PdgEdge {
    pub from: StmtId,
    pub to: StmtId,
    #[serde(flatten)]
    pub dep: DepKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Pdg {
    pub function: String,
    pub nodes: Vec<StmtId>,
    pub edges: Vec<PdgEdge>,
}

impl Pdg {
    /// Direct data dependents of a definition site.
    pub fn data_dependents(&self, def: StmtId) -> Vec<(StmtId, &str)> {
        self.edges
            .iter()
            .filter_map(|e| match (&e.dep, e.from) {
                (DepKind::Data { var }, from) if from == def => Some((e.to, var.as_str())),
                _ => None,
            })
            .collect()
    }

    /// Predicates that govern `stmt`.
    pub fn controllers(&self, stmt: StmtId) -> Vec<StmtId> {
        self.edges
            .iter()
            .filter(|e| e.dep == DepKind::Control && e.to == stmt)
            .map(|e| e.from)
            .collect()
    }
}

/// Assembles the PDG for one function from its CFG and def-use facts.
pub fn build_pdg(function: &FunctionView<'_>, cfg: &Cfg, defuse: &DefUseIndex) -> Pdg {
    let mut nodes: BTreeSet<StmtId> = BTreeSet::new();
    for block in &cfg.blocks {
        nodes.extend(block.stmts.iter().copied());
    }

    let mut edges: Vec<PdgEdge> = Vec::new();
    for ((use_stmt, var), defs) in &defuse.reaching {
        for def in defs {
            edges.push(PdgEdge {
                from: *def,
                to: *use_stmt,
                dep: DepKind::Data { var: var.clone() },
            });
        }
    }

    let mut control: Vec<(StmtId, StmtId)> = Vec::new();
    collect_control(function.body, &mut control);
    for (pred, governed) in control {
        if nodes.contains(&pred) && nodes.contains(&governed) {
            edges.push(PdgEdge { from: pred, to: governed, dep: DepKind::Control });
        }
    }

    edges.sort();
    edges.dedup();
    Pdg { function: function.name.clone(), nodes: nodes.into_iter().collect(), edges }
}

/// Emits (predicate, governed statement) pairs for every statement in a
/// predicate's suites, transitively.
fn collect_control(stmts: &[Stmt], out: &mut Vec<(StmtId, StmtId)>) {
    for stmt in stmts {
        match &stmt.kind {
            StmtKind::If { body, orelse, .. } => {
                govern_all(stmt.id, body, out);
                govern_all(stmt.id, orelse, out);
                collect_control(body, out);
                collect_control(orelse, out);
            }
            StmtKind::While { body, .. } | StmtKind::For { body, .. } => {
                govern_all(stmt.id, body, out);
                collect_control(body, out);
            }
            StmtKind::Try { body, handlers, finalbody } => {
                collect_control(body, out);
                for h in handlers {
                    collect_control(&h.body, out);
                }
                collect_control(finalbody, out);
            }
            _ => {}
        }
    }
}

fn govern_all(pred: StmtId, stmts: &[Stmt], out: &mut Vec<(StmtId, StmtId)>) {
    crate::ast::walk_stmts(stmts, &mut |s| out.push((pred, s.id)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfg::build_cfg;
    use crate::dataflow::reaching_definitions;
    use crate::frontend::parse_unit;
    use crate::source::SourceUnit;

    fn pdg_of(text: &str) -> Pdg {
        let unit = SourceUnit::python("t.py", text);
        let ast = parse_unit(&unit).expect("parses");
        let functions = ast.functions();
        let cfg = build_cfg(&functions[0]);
        let defuse = reaching_definitions(&functions[0], &cfg);
        build_pdg(&functions[0], &cfg, &defuse)
    }

    #[test]
    fn data_edges_mirror_reaching_definitions() {
        let pdg = pdg_of("def f(c):\n    x = 1\n    if c:\n        x = 2\n    y = x\n");
        let deps = pdg.data_dependents(StmtId(2));
        assert!(deps.iter().any(|(to, var)| *to == StmtId(5) && *var == "x"));
        let deps4 = pdg.data_dependents(StmtId(4));
        assert!(deps4.iter().any(|(to, var)| *to == StmtId(5) && *var == "x"));
    }

    #[test]
    fn nested_statements_depend_on_every_enclosing_predicate() {
        let pdg = pdg_of(
            "def f(a, b):\n    while a:\n        if b:\n            x = 1\n    return a\n",
        );
        // while=3, if=4, x=1 is s5.
        let controllers = pdg.controllers(StmtId(5));
        assert_eq!(controllers, vec![StmtId(3), StmtId(4)]);
        // The if itself is governed by the while.
        assert_eq!(pdg.controllers(StmtId(4)), vec![StmtId(3)]);
    }

    #[test]
    fn parameters_are_nodes() {
        let pdg = pdg_of("def f(a):\n    return a\n");
        assert!(pdg.nodes.contains(&StmtId(1)));
        let deps = pdg.data_dependents(StmtId(1));
        assert!(deps.iter().any(|(to, var)| *to == StmtId(2) && *var == "a"));
    }

    #[test]
    fn edges_are_sorted_and_unique() {
        let pdg = pdg_of(
            "def f(a):\n    x = a\n    y = x + x\n    return y\n",
        );
        let mut sorted = pdg.edges.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(pdg.edges, sorted);
    }
}
