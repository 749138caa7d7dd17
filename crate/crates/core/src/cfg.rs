//! Intraprocedural control-flow graphs.
//!
//! One CFG per function. Blocks hold statement ids in execution order;
//! two synthetic blocks (`entry`, carrying the parameter bindings, and
//! `exit`) bracket the function. Edge kinds distinguish fall-through,
//! branch outcomes, loop back-edges, and exceptional transfer into
//! `except` handlers.
//!
//! Structured-control shape guarantees: `TrueBranch`/`FalseBranch` leave
//! predicate blocks in pairs, every statement lives in exactly one block,
//! and code after a terminator (`return`, `break`, …) lands in a block
//! with no incoming edges, flagged unreachable.

use crate::ast::{FunctionView, Stmt, StmtKind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Index of a block within its CFG. Stable across runs: entry is 0,
/// bodies follow in construction order, exit is last.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct BlockId(pub u32);

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum EdgeKind {
    Seq,
    TrueBranch,
    FalseBranch,
    LoopBack,
    Exception,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CfgEdge {
    pub from: BlockId,
    pub to: BlockId,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BasicBlock {
    pub id: BlockId,
    /// Statement ids in execution order; parameter bindings for entry.
    pub stmts: Vec<crate::ast::StmtId>,
    /// True for the entry/exit markers, which have no source counterpart.
    pub synthetic: bool,
    /// False when no path from entry reaches this block (dead code).
    pub reachable: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Cfg {
    /// Qualified name of the function this graph belongs to.
    pub function: String,
    pub blocks: Vec<BasicBlock>,
    pub edges: Vec<CfgEdge>,
    pub entry: BlockId,
    pub exit: BlockId,
}

impl Cfg {
    pub fn block(&self, id: BlockId) -> &BasicBlock {
        &self.blocks[id.0 as usize]
    }

    pub fn successors(&self, id: BlockId) -> impl Iterator<Item = &CfgEdge> {
        self.edges.iter().filter(move |e| e.from == id)
    }

    pub fn predecessors(&self, id: BlockId) -> impl Iterator<Item = &CfgEdge> {
        self.edges.iter().filter(move |e| e.to == id)
    }

    /// Blocks excluding the synthetic entry/exit pair.
    pub fn body_blocks(&self) -> impl Iterator<Item = &BasicBlock> {
        self.blocks.iter().filter(|b| !b.synthetic)
    }
}

/// Builds the CFG for one function.
pub fn build_cfg(function: &FunctionView<'_>) -> Cfg {
    let mut b = Builder::new();
    let entry = b.new_block(true);
    for param in function.params {
        b.blocks[entry].stmts.push(param.id);
    }
    let exit = b.new_block(true);
    b.exit = exit;

    let first = b.new_block(false);
    b.edge(entry, first, EdgeKind::Seq);
    b.current = Some(first);
    b.build_suite(function.body);
    if let Some(open) = b.current {
        b.edge(open, exit, EdgeKind::Seq);
    }
    b.finish(function.name.clone(), entry, exit)
}

struct ProtoBlock {
    stmts: Vec<crate::ast::StmtId>,
    synthetic: bool,
    /// Handler-entry blocks that an exception raised here would reach.
    handler_targets: Vec<usize>,
}

struct Builder {
    blocks: Vec<ProtoBlock>,
    edges: Vec<(usize, usize, EdgeKind)>,
    current: Option<usize>,
    /// (header, after) pairs for enclosing loops.
    loops: Vec<(usize, usize)>,
    /// Handler entries of the innermost `try` whose body is being built.
    handler_stack: Vec<Vec<usize>>,
    exit: usize,
}

impl Builder {
    fn new() -> Self {
        Builder {
            blocks: Vec::new(),
            edges: Vec::new(),
            current: None,
            loops: Vec::new(),
            handler_stack: Vec::new(),
            exit: 0,
        }
    }

    fn new_block(&mut self, synthetic: bool) -> usize {
        let handler_targets = self.handler_stack.last().cloned().unwrap_or_default();
        self.blocks.push(ProtoBlock { stmts: Vec::new(), synthetic, handler_targets });
        self.blocks.len() - 1
    }

    fn edge(&mut self, from: usize, to: usize, kind: EdgeKind) {
        self.edges.push((from, to, kind));
    }

    /// The block receiving the next statement; statements after a
    /// terminator open a fresh, unreachable block.
    fn here(&mut self) -> usize {
        match self.current {
            Some(b) => b,
            None => {
                let b = self.new_block(false);
                self.current = Some(b);
                b
            }
        }
    }

    fn build_suite(&mut self, stmts: &[Stmt]) {
        for stmt in stmts {
            self.build_stmt(stmt);
        }
    }

    fn build_stmt(&mut self, stmt: &Stmt) {
        match &stmt.kind {
            StmtKind::Assign { .. }
            | StmtKind::AugAssign { .. }
            | StmtKind::ExprStmt { .. }
            | StmtKind::Import { .. }
            | StmtKind::Pass
            // Nested definitions bind a name here; their bodies get their
            // own graphs.
            | StmtKind::FunctionDef { .. }
            | StmtKind::ClassDef { .. } => {
                let b = self.here();
                self.blocks[b].stmts.push(stmt.id);
            }
            StmtKind::Return { .. } => {
                let b = self.here();
                self.blocks[b].stmts.push(stmt.id);
                self.edge(b, self.exit, EdgeKind::Seq);
                self.current = None;
            }
            StmtKind::Raise { .. } => {
                let b = self.here();
                self.blocks[b].stmts.push(stmt.id);
                match self.handler_stack.last() {
                    Some(handlers) => {
                        for &h in handlers.clone().iter() {
                            self.edge(b, h, EdgeKind::Exception);
                        }
                    }
                    None => self.edge(b, self.exit, EdgeKind::Exception),
                }
                self.current = None;
            }
            StmtKind::Break => {
                let b = self.here();
                self.blocks[b].stmts.push(stmt.id);
                if let Some(&(_, after)) = self.loops.last() {
                    self.edge(b, after, EdgeKind::Seq);
                }
                self.current = None;
            }
            StmtKind::Continue => {
                let b = self.here();
                self.blocks[b].stmts.push(stmt.id);
                if let Some(&(header, _)) = self.loops.last() {
                    self.edge(b, header, EdgeKind::LoopBack);
                }
                self.current = None;
            }
            StmtKind::If { body, orelse, .. } => {
                let pred = self.here();
                self.blocks[pred].stmts.push(stmt.id);
                let after = self.new_block(false);

                let then_start = self.new_block(false);
                self.edge(pred, then_start, EdgeKind::TrueBranch);
                self.current = Some(then_start);
                self.build_suite(body);
                if let Some(open) = self.current {
                    self.edge(open, after, EdgeKind::Seq);
                }

                if orelse.is_empty() {
                    self.edge(pred, after, EdgeKind::FalseBranch);
                } else {
                    let else_start = self.new_block(false);
                    self.edge(pred, else_start, EdgeKind::FalseBranch);
                    self.current = Some(else_start);
                    self.build_suite(orelse);
                    if let Some(open) = self.current {
                        self.edge(open, after, EdgeKind::Seq);
                    }
                }
                self.current = Some(after);
            }
            StmtKind::While { body, .. } | StmtKind::For { body, .. } => {
                let header = self.new_block(false);
                if let Some(open) = self.current {
                    self.edge(open, header, EdgeKind::Seq);
                }
                self.blocks[header].stmts.push(stmt.id);
                let after = self.new_block(false);
                self.edge(header, after, EdgeKind::FalseBranch);

                let body_start = self.new_block(false);
                self.edge(header, body_start, EdgeKind::TrueBranch);
                self.loops.push((header, after));
                self.current = Some(body_start);
                self.build_suite(body);
                if let Some(open) = self.current {
                    self.edge(open, header, EdgeKind::LoopBack);
                }
                self.loops.pop();
                self.current = Some(after);
            }
            StmtKind::Try { body, handlers, finalbody } => {
                let b = self.here();
                self.blocks[b].stmts.push(stmt.id);

                let handler_entries: Vec<usize> =
                    handlers.iter().map(|_| self.new_block(false)).collect();
                let after = self.new_block(false);
                let join = if finalbody.is_empty() {
                    after
                } else {
                    self.new_block(false)
                };

                // Body blocks record the handler entries they can reach so
                // the implicit Exception edges can be added at the end.
                self.handler_stack.push(handler_entries.clone());
                let body_start = self.new_block(false);
                self.edge(b, body_start, EdgeKind::Seq);
                self.current = Some(body_start);
                self.build_suite(body);
                if let Some(open) = self.current {
                    self.edge(open, join, EdgeKind::Seq);
                }
                self.handler_stack.pop();

                for (handler, &entry) in handlers.iter().zip(&handler_entries) {
                    self.current = Some(entry);
                    self.build_suite(&handler.body);
                    if let Some(open) = self.current {
                        self.edge(open, join, EdgeKind::Seq);
                    }
                }

                if !finalbody.is_empty() {
                    self.current = Some(join);
                    self.build_suite(finalbody);
                    if let Some(open) = self.current {
                        self.edge(open, after, EdgeKind::Seq);
                    }
                }
                self.current = Some(after);
            }
        }
    }

    fn finish(mut self, function: String, entry: usize, exit: usize) -> Cfg {
        // Implicit exception transfer: every statement-bearing block built
        // inside a try body can jump to that try's handler entries. Empty
        // blocks hold nothing that could raise.
        let mut implicit = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            if block.stmts.is_empty() {
                continue;
            }
            for &h in &block.handler_targets {
                implicit.push((i, h, EdgeKind::Exception));
            }
        }
        self.edges.extend(implicit);

        // Splice out empty non-synthetic blocks (unfilled join points).
        let mut spliced = vec![false; self.blocks.len()];
        while let Some(victim) = self.blocks.iter().enumerate().position(|(i, b)| {
            !b.synthetic && b.stmts.is_empty() && i != entry && i != exit && !spliced[i]
        }) {
            let outgoing: Vec<(usize, EdgeKind)> = self
                .edges
                .iter()
                .filter(|(f, _, _)| *f == victim)
                .map(|(_, t, k)| (*t, *k))
                .collect();
            let incoming: Vec<(usize, EdgeKind)> = self
                .edges
                .iter()
                .filter(|(_, t, _)| *t == victim)
                .map(|(f, _, k)| (*f, *k))
                .collect();
            self.edges.retain(|(f, t, _)| *f != victim && *t != victim);
            for &(from, kind) in &incoming {
                for &(to, _) in &outgoing {
                    // The incoming kind wins: a TrueBranch into a join stays
                    // a TrueBranch to wherever the join fell through.
                    self.edges.push((from, to, kind));
                }
            }
            spliced[victim] = true;
        }

        // Renumber: entry, body blocks in creation order, exit.
        let mut order: Vec<usize> = Vec::new();
        order.push(entry);
        for (i, (block, gone)) in self.blocks.iter().zip(&spliced).enumerate() {
            if i != entry && i != exit && !gone && !block.synthetic {
                order.push(i);
            }
        }
        order.push(exit);

        let mut remap = vec![usize::MAX; self.blocks.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }

        let blocks: Vec<BasicBlock> = order
            .iter()
            .enumerate()
            .map(|(new, &old)| BasicBlock {
                id: BlockId(new as u32),
                stmts: std::mem::take(&mut self.blocks[old].stmts),
                synthetic: self.blocks[old].synthetic,
                reachable: true,
            })
            .collect();

        let mut edges: Vec<CfgEdge> = self
            .edges
            .iter()
            .filter(|(f, t, _)| remap[*f] != usize::MAX && remap[*t] != usize::MAX)
            .map(|(f, t, k)| CfgEdge {
                from: BlockId(remap[*f] as u32),
                to: BlockId(remap[*t] as u32),
                kind: *k,
            })
            .collect();
        edges.sort_by_key(|e| (e.from, e.to, e.kind));
        edges.dedup();

        let mut cfg = Cfg {
            function,
            blocks,
            edges,
            entry: BlockId(remap[entry] as u32),
            exit: BlockId(remap[exit] as u32),
        };
        mark_reachable(&mut cfg);
        cfg
    }
}

fn mark_reachable(cfg: &mut Cfg) {
    let mut seen: BTreeSet<BlockId> = BTreeSet::new();
    let mut stack = vec![cfg.entry];
    while let Some(b) = stack.pop() {
        if !seen.insert(b) {
            continue;
        }
        for edge in cfg.edges.iter().filter(|e| e.from == b) {
            stack.push(edge.to);
        }
    }
    for block in &mut cfg.blocks {
        block.reachable = seen.contains(&block.id);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse_unit;
    use crate::source::SourceUnit;

    fn cfg_of(text: &str) -> Cfg {
        let unit = SourceUnit::python("t.py", text);
        let ast = parse_unit(&unit).expect("parses");
        let functions = ast.functions();
        build_cfg(&functions[0])
    }

    #[test]
    fn straight_line_is_one_body_block() {
        let cfg = cfg_of("def f():\n    x = 1\n    y = 2\n    return y\n");
        assert_eq!(cfg.body_blocks().count(), 1);
        assert_eq!(cfg.edges.len(), 2);
        assert!(cfg.block(cfg.entry).synthetic);
        assert!(cfg.block(cfg.exit).synthetic);
    }

    #[test]
    fn if_else_with_join_makes_four_body_blocks() {
        let cfg = cfg_of(
            "def g(c):\n    if c:\n        x = 1\n    else:\n        x = 2\n    return x\n",
        );
        assert_eq!(cfg.body_blocks().count(), 4);
        let kinds: Vec<EdgeKind> = cfg.edges.iter().map(|e| e.kind).collect();
        assert_eq!(kinds.iter().filter(|k| **k == EdgeKind::TrueBranch).count(), 1);
        assert_eq!(kinds.iter().filter(|k| **k == EdgeKind::FalseBranch).count(), 1);
    }

    #[test]
    fn branch_edges_come_in_pairs_from_the_same_block() {
        let cfg = cfg_of(
            "def g(c, d):\n    if c:\n        x = 1\n    if d:\n        x = 2\n    return x\n",
        );
        let true_from: Vec<BlockId> = cfg
            .edges
            .iter()
            .filter(|e| e.kind == EdgeKind::TrueBranch)
            .map(|e| e.from)
            .collect();
        for from in true_from {
            assert!(
                cfg.edges
                    .iter()
                    .any(|e| e.from == from && e.kind == EdgeKind::FalseBranch),
                "TrueBranch from {from} lacks FalseBranch twin"
            );
        }
    }

    #[test]
    fn while_loop_has_one_back_edge() {
        let cfg = cfg_of("def h(n):\n    i = 0\n    while i < n:\n        i += 1\n    return i\n");
        let back = cfg.edges.iter().filter(|e| e.kind == EdgeKind::LoopBack).count();
        assert_eq!(back, 1);
    }

    #[test]
    fn code_after_return_is_unreachable() {
        let cfg = cfg_of("def d():\n    return 1\n    x = 2\n");
        let dead: Vec<&BasicBlock> = cfg.blocks.iter().filter(|b| !b.reachable).collect();
        assert_eq!(dead.len(), 1);
        assert!(!dead[0].stmts.is_empty());
        assert_eq!(cfg.predecessors(dead[0].id).count(), 0);
    }

    #[test]
    fn every_statement_lands_in_exactly_one_block() {
        let text = "def f(a, b):\n    x = a\n    if x:\n        for i in b:\n            x += i\n    try:\n        risky()\n    except Err:\n        x = 0\n    return x\n";
        let unit = SourceUnit::python("t.py", text);
        let ast = parse_unit(&unit).expect("parses");
        let functions = ast.functions();
        let cfg = build_cfg(&functions[0]);
        let mut seen = std::collections::BTreeMap::new();
        for block in &cfg.blocks {
            for stmt in &block.stmts {
                *seen.entry(*stmt).or_insert(0) += 1;
            }
        }
        // Every id except the FunctionDef itself appears exactly once.
        let index = ast.stmt_index();
        let total = index.len() - 1;
        assert_eq!(seen.len(), total);
        assert!(seen.values().all(|&n| n == 1));
    }

    #[test]
    fn try_body_blocks_reach_the_handler() {
        let cfg = cfg_of(
            "def f():\n    try:\n        a = 1\n        risky()\n    except Err:\n        a = 0\n    return a\n",
        );
        let exceptional = cfg.edges.iter().filter(|e| e.kind == EdgeKind::Exception).count();
        assert!(exceptional >= 1, "try body should have an exception edge");
    }

    #[test]
    fn break_exits_loop_and_continue_restarts_it() {
        let cfg = cfg_of(
            "def f(n):\n    while n > 0:\n        if n == 5:\n            break\n        if n == 3:\n            continue\n        n -= 1\n    return n\n",
        );
        assert!(cfg.edges.iter().filter(|e| e.kind == EdgeKind::LoopBack).count() >= 2);
    }

    #[test]
    fn raise_outside_try_leaves_via_exception_edge() {
        let cfg = cfg_of("def f():\n    raise ValueError(\"bad\")\n");
        assert!(cfg
            .edges
            .iter()
            .any(|e| e.kind == EdgeKind::Exception && e.to == cfg.exit));
    }
}
