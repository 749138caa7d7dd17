//! Shared helpers for the integration suites: fixture loading plus
//! brute-force oracles that recompute dataflow and taint results by a
//! deliberately different route than the library (statement-slot BFS
//! over the CFG instead of a worklist, a per-source state closure
//! instead of the tracer), so agreement is meaningful.
#![allow(dead_code)]

use scour_core::ast::{Expr, ExprKind, FunctionView, Stmt, StmtKind};
use scour_core::cfg::Cfg;
use scour_core::detect::taint::TaintPolicy;
use scour_core::detect::{analyze_unit, Candidate, Evidence, UnitAnalysis};
use scour_core::{Rule, SourceUnit, Span, StmtId};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::PathBuf;

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .and_then(|p| p.parent())
        .expect("crate lives two levels under the workspace root")
        .to_path_buf()
}

pub fn fixture_path(rel: &str) -> PathBuf {
    workspace_root().join("fixtures").join(rel)
}

pub fn load_unit(rel: &str) -> SourceUnit {
    let path = fixture_path(rel);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
    SourceUnit::python(format!("fixtures/{rel}"), &text)
}

pub fn analyze_fixture(rel: &str) -> UnitAnalysis {
    let unit = load_unit(rel);
    analyze_unit(&unit).unwrap_or_else(|e| panic!("analyze {rel}: {e}"))
}

/// Shannon entropy in bits per character, recomputed from scratch.
pub fn entropy_oracle(text: &str) -> f64 {
    let chars: Vec<char> = text.chars().collect();
    if chars.is_empty() {
        return 0.0;
    }
    let mut counts: BTreeMap<char, usize> = BTreeMap::new();
    for &c in &chars {
        *counts.entry(c).or_insert(0) += 1;
    }
    let n = chars.len() as f64;
    -counts
        .values()
        .map(|&k| {
            let p = k as f64 / n;
            p * p.log2()
        })
        .sum::<f64>()
}

// ---------------------------------------------------------------------
// Independent def/use extraction (the documented statement contract,
// re-implemented rather than called).
// ---------------------------------------------------------------------

fn names_in(expr: &Expr, out: &mut Vec<String>) {
    match &expr.kind {
        ExprKind::Name(n) => out.push(n.clone()),
        ExprKind::Literal(_) => {}
        ExprKind::BinOp { left, right, .. } | ExprKind::Compare { left, right, .. } => {
            names_in(left, out);
            names_in(right, out);
        }
        ExprKind::Call { func, args } => {
            names_in(func, out);
            for a in args {
                names_in(a, out);
            }
        }
        ExprKind::Attribute { base, .. } => names_in(base, out),
        ExprKind::Subscript { value, index } => {
            names_in(value, out);
            names_in(index, out);
        }
        ExprKind::Tuple(items) => {
            for item in items {
                names_in(item, out);
            }
        }
    }
}

pub fn oracle_defs(stmt: &Stmt) -> Vec<String> {
    match &stmt.kind {
        StmtKind::Assign { target, .. }
        | StmtKind::AugAssign { target, .. }
        | StmtKind::For { target, .. } => match &target.kind {
            ExprKind::Name(n) => vec![n.clone()],
            _ => Vec::new(),
        },
        StmtKind::FunctionDef { name, .. } | StmtKind::ClassDef { name, .. } => {
            vec![name.clone()]
        }
        StmtKind::Import { names, .. } => names.clone(),
        _ => Vec::new(),
    }
}

pub fn oracle_uses(stmt: &Stmt) -> Vec<String> {
    let mut out = Vec::new();
    match &stmt.kind {
        StmtKind::Assign { target, value } => {
            match &target.kind {
                ExprKind::Name(_) => {}
                ExprKind::Attribute { base, .. } => names_in(base, &mut out),
                ExprKind::Subscript { value: v, index } => {
                    names_in(v, &mut out);
                    names_in(index, &mut out);
                }
                other_target => {
                    let mut probe = Vec::new();
                    names_in(
                        &Expr { kind: other_target.clone(), span: target.span },
                        &mut probe,
                    );
                    out.extend(probe);
                }
            }
            names_in(value, &mut out);
        }
        StmtKind::AugAssign { target, value, .. } => {
            match &target.kind {
                ExprKind::Name(n) => out.push(n.clone()),
                ExprKind::Attribute { base, .. } => names_in(base, &mut out),
                ExprKind::Subscript { value: v, index } => {
                    names_in(v, &mut out);
                    names_in(index, &mut out);
                }
                _ => names_in(target, &mut out),
            }
            names_in(value, &mut out);
        }
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => names_in(test, &mut out),
        StmtKind::For { iter, .. } => names_in(iter, &mut out),
        StmtKind::Return { value } | StmtKind::Raise { value } => {
            if let Some(v) = value {
                names_in(v, &mut out);
            }
        }
        StmtKind::ExprStmt { value } => names_in(value, &mut out),
        StmtKind::ClassDef { bases, .. } => {
            out.extend(bases.iter().map(|b| {
                b.split('.').next().unwrap_or(b.as_str()).to_string()
            }));
        }
        _ => {}
    }
    out
}

fn walk_tree<'a>(stmts: &'a [Stmt], f: &mut impl FnMut(&'a Stmt)) {
    for stmt in stmts {
        f(stmt);
        match &stmt.kind {
            StmtKind::FunctionDef { body, .. } | StmtKind::ClassDef { body, .. } => {
                walk_tree(body, f);
            }
            StmtKind::If { body, orelse, .. } => {
                walk_tree(body, f);
                walk_tree(orelse, f);
            }
            StmtKind::While { body, .. } | StmtKind::For { body, .. } => walk_tree(body, f),
            StmtKind::Try { body, handlers, finalbody } => {
                walk_tree(body, f);
                for h in handlers {
                    walk_tree(&h.body, f);
                }
                walk_tree(finalbody, f);
            }
            _ => {}
        }
    }
}

pub fn stmt_table<'a>(view: &FunctionView<'a>) -> BTreeMap<StmtId, &'a Stmt> {
    let mut map = BTreeMap::new();
    walk_tree(view.body, &mut |s| {
        map.insert(s.id, s);
    });
    map
}

// ---------------------------------------------------------------------
// Statement-slot reaching-definitions oracle.
//
// Every (block, position) pair is a slot. A definition of `v` reaches a
// use at the first slots hit by a BFS along slot successors that does
// not pass another definition of `v`. Parameters are definition slots
// inside the entry block. Empty blocks chain through to their
// successors' first slots.
// ---------------------------------------------------------------------

type Slot = (usize, usize); // (block index, position within block)

struct SlotGraph<'a> {
    cfg: &'a Cfg,
    stmts: &'a BTreeMap<StmtId, &'a Stmt>,
    params: BTreeMap<StmtId, String>,
}

impl<'a> SlotGraph<'a> {
    fn defs_at(&self, id: StmtId) -> Vec<String> {
        if let Some(name) = self.params.get(&id) {
            return vec![name.clone()];
        }
        self.stmts.get(&id).map(|s| oracle_defs(s)).unwrap_or_default()
    }

    fn uses_at(&self, id: StmtId) -> Vec<String> {
        if self.params.contains_key(&id) {
            return Vec::new();
        }
        self.stmts.get(&id).map(|s| oracle_uses(s)).unwrap_or_default()
    }

    fn stmt_at(&self, slot: Slot) -> StmtId {
        self.cfg.blocks[slot.0].stmts[slot.1]
    }

    /// First occupied slots at or after the head of `block`, chasing
    /// through empty blocks (the synthetic exit ends every chase).
    fn first_slots(&self, block: usize, seen: &mut BTreeSet<usize>) -> Vec<Slot> {
        if !seen.insert(block) {
            return Vec::new();
        }
        if !self.cfg.blocks[block].stmts.is_empty() {
            return vec![(block, 0)];
        }
        self.cfg
            .successors(scour_core::cfg::BlockId(block as u32))
            .flat_map(|e| self.first_slots(e.to.0 as usize, seen))
            .collect()
    }

    fn succ_slots(&self, slot: Slot) -> Vec<Slot> {
        let (b, i) = slot;
        if i + 1 < self.cfg.blocks[b].stmts.len() {
            return vec![(b, i + 1)];
        }
        self.cfg
            .successors(scour_core::cfg::BlockId(b as u32))
            .flat_map(|e| self.first_slots(e.to.0 as usize, &mut BTreeSet::new()))
            .collect()
    }
}

/// All (definition site, use site, variable) triples, by brute force.
pub fn oracle_data_edges(
    view: &FunctionView<'_>,
    cfg: &Cfg,
    stmts: &BTreeMap<StmtId, &Stmt>,
) -> BTreeSet<(StmtId, StmtId, String)> {
    let params: BTreeMap<StmtId, String> =
        view.params.iter().map(|p| (p.id, p.name.clone())).collect();
    let graph = SlotGraph { cfg, stmts, params };

    let mut edges = BTreeSet::new();
    for (b, block) in cfg.blocks.iter().enumerate() {
        for (i, _) in block.stmts.iter().enumerate() {
            let def_id = graph.stmt_at((b, i));
            for var in graph.defs_at(def_id) {
                let mut queue: VecDeque<Slot> = graph.succ_slots((b, i)).into();
                let mut visited: BTreeSet<Slot> = queue.iter().copied().collect();
                while let Some(slot) = queue.pop_front() {
                    let id = graph.stmt_at(slot);
                    if graph.uses_at(id).contains(&var) {
                        edges.insert((def_id, id, var.clone()));
                    }
                    if graph.defs_at(id).contains(&var) {
                        continue; // killed; do not look past this slot
                    }
                    for next in graph.succ_slots(slot) {
                        if visited.insert(next) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    edges
}

// ---------------------------------------------------------------------
// Taint-path oracle: a per-source closure over the slot-graph def-use
// relation, with its own pattern matcher and sanitizer-wrapping count.
// ---------------------------------------------------------------------

pub fn oracle_matches_pattern(pattern: &str, name: &str) -> bool {
    if let Some(prefix) = pattern.strip_suffix('*') {
        return name.starts_with(prefix);
    }
    if pattern.contains('.') {
        return name == pattern;
    }
    name == pattern || name.rsplit('.').next() == Some(pattern)
}

fn matches_any(patterns: &[String], name: &str) -> bool {
    patterns.iter().any(|p| oracle_matches_pattern(p, name))
}

fn dotted(expr: &Expr) -> Option<String> {
    match &expr.kind {
        ExprKind::Name(n) => Some(n.clone()),
        ExprKind::Attribute { base, attr } => Some(format!("{}.{attr}", dotted(base)?)),
        _ => None,
    }
}

fn calls_within<'e>(expr: &'e Expr, out: &mut Vec<(String, Vec<&'e Expr>, Span)>) {
    if let ExprKind::Call { func, args } = &expr.kind {
        if let Some(name) = dotted(func) {
            out.push((name, args.iter().collect(), expr.span));
        }
    }
    match &expr.kind {
        ExprKind::Name(_) | ExprKind::Literal(_) => {}
        ExprKind::BinOp { left, right, .. } | ExprKind::Compare { left, right, .. } => {
            calls_within(left, out);
            calls_within(right, out);
        }
        ExprKind::Call { func, args } => {
            calls_within(func, out);
            for a in args {
                calls_within(a, out);
            }
        }
        ExprKind::Attribute { base, .. } => calls_within(base, out),
        ExprKind::Subscript { value, index } => {
            calls_within(value, out);
            calls_within(index, out);
        }
        ExprKind::Tuple(items) => {
            for item in items {
                calls_within(item, out);
            }
        }
    }
}

fn value_exprs(stmt: &Stmt) -> Vec<&Expr> {
    match &stmt.kind {
        StmtKind::Assign { value, .. } | StmtKind::AugAssign { value, .. } => vec![value],
        StmtKind::For { iter, .. } => vec![iter],
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => vec![test],
        StmtKind::Return { value } | StmtKind::Raise { value } => value.iter().collect(),
        StmtKind::ExprStmt { value } => vec![value],
        _ => Vec::new(),
    }
}

fn count_wrapped(
    expr: &Expr,
    var: &str,
    sanitizers: &[String],
    inside: bool,
    total: &mut u32,
    unwrapped: &mut u32,
) {
    match &expr.kind {
        ExprKind::Name(n) => {
            if n == var {
                *total += 1;
                if !inside {
                    *unwrapped += 1;
                }
            }
        }
        ExprKind::Literal(_) => {}
        ExprKind::Call { func, args } => {
            let wraps = dotted(func).map(|n| matches_any(sanitizers, &n)).unwrap_or(false);
            count_wrapped(func, var, sanitizers, inside, total, unwrapped);
            for a in args {
                count_wrapped(a, var, sanitizers, inside || wraps, total, unwrapped);
            }
        }
        ExprKind::BinOp { left, right, .. } | ExprKind::Compare { left, right, .. } => {
            count_wrapped(left, var, sanitizers, inside, total, unwrapped);
            count_wrapped(right, var, sanitizers, inside, total, unwrapped);
        }
        ExprKind::Attribute { base, .. } => {
            count_wrapped(base, var, sanitizers, inside, total, unwrapped);
        }
        ExprKind::Subscript { value, index } => {
            count_wrapped(value, var, sanitizers, inside, total, unwrapped);
            count_wrapped(index, var, sanitizers, inside, total, unwrapped);
        }
        ExprKind::Tuple(items) => {
            for item in items {
                count_wrapped(item, var, sanitizers, inside, total, unwrapped);
            }
        }
    }
}

fn count_occurs(exprs: &[&Expr], var: &str, sanitizers: &[String]) -> (u32, u32) {
    let mut total = 0;
    let mut unwrapped = 0;
    for e in exprs {
        count_wrapped(e, var, sanitizers, false, &mut total, &mut unwrapped);
    }
    (total, unwrapped)
}

fn rule_of_cwe(cwe: u32) -> Rule {
    match cwe {
        89 => Rule::SqlInjection,
        78 => Rule::CommandInjection,
        79 => Rule::Xss,
        other => panic!("no rule for cwe {other}"),
    }
}

/// The comparable essence of one taint path.
pub type PathKey = (Span, Span, String, Rule, bool);

/// Every source-to-sink flow, by brute-force closure: seeds from the
/// policy's parameter patterns and source calls, states advanced over
/// the slot-graph def-use edges, sink hits recorded with the same
/// sanitizer accounting the scanner documents.
pub fn oracle_taint_paths(
    view: &FunctionView<'_>,
    cfg: &Cfg,
    policy: &TaintPolicy,
) -> BTreeSet<PathKey> {
    let stmts = stmt_table(view);
    let edges = oracle_data_edges(view, cfg, &stmts);
    let mut uses_of: BTreeMap<(StmtId, String), BTreeSet<StmtId>> = BTreeMap::new();
    for (def, use_site, var) in &edges {
        uses_of.entry((*def, var.clone())).or_default().insert(*use_site);
    }

    let mut seeds: Vec<(StmtId, String, Span)> = Vec::new();
    for param in view.params {
        if matches_any(&policy.sources.params, &param.name) {
            seeds.push((param.id, param.name.clone(), param.span));
        }
    }
    for (&id, stmt) in &stmts {
        let defs = oracle_defs(stmt);
        if defs.is_empty() {
            continue;
        }
        let mut calls = Vec::new();
        for e in value_exprs(stmt) {
            calls_within(e, &mut calls);
        }
        let Some(call_span) = calls
            .iter()
            .find(|(name, _, _)| matches_any(&policy.sources.calls, name))
            .map(|(_, _, span)| *span)
        else {
            continue;
        };
        for var in defs {
            seeds.push((id, var, call_span));
        }
    }

    let mut paths = BTreeSet::new();
    for (seed_def, seed_var, source_span) in seeds {
        let mut visited: BTreeSet<(StmtId, String, bool)> = BTreeSet::new();
        let mut queue = VecDeque::from([(seed_def, seed_var, false)]);
        while let Some((def, var, clean)) = queue.pop_front() {
            if !visited.insert((def, var.clone(), clean)) {
                continue;
            }
            let Some(use_sites) = uses_of.get(&(def, var.clone())) else { continue };
            for &site in use_sites {
                let Some(stmt) = stmts.get(&site) else { continue };

                let mut calls = Vec::new();
                for e in value_exprs(stmt) {
                    calls_within(e, &mut calls);
                }
                for (name, args, call_span) in &calls {
                    let Some(sink) =
                        policy.sinks.iter().find(|s| oracle_matches_pattern(&s.pattern, name))
                    else {
                        continue;
                    };
                    let dangerous: Vec<&Expr> = match &sink.dangerous_args {
                        Some(idx) => {
                            idx.iter().filter_map(|&i| args.get(i).copied()).collect()
                        }
                        None => args.clone(),
                    };
                    let (occ, unwrapped) =
                        count_occurs(&dangerous, &var, &policy.sanitizers);
                    if occ == 0 {
                        continue;
                    }
                    paths.insert((
                        source_span,
                        *call_span,
                        name.clone(),
                        rule_of_cwe(sink.cwe),
                        clean || unwrapped == 0,
                    ));
                }

                let defs = oracle_defs(stmt);
                if defs.is_empty() {
                    continue;
                }
                let (occ, unwrapped) =
                    count_occurs(&value_exprs(stmt), &var, &policy.sanitizers);
                let next_clean = clean || (occ > 0 && unwrapped == 0);
                for next_var in defs {
                    queue.push_back((site, next_var, next_clean));
                }
            }
        }
    }
    paths
}

/// Collapses taint candidates to comparable path keys.
pub fn candidate_path_keys(candidates: &[Candidate]) -> BTreeSet<PathKey> {
    candidates
        .iter()
        .filter_map(|c| match &c.evidence {
            Evidence::Taint { source_span, sink_span, sink, sanitized, .. } => Some((
                *source_span,
                *sink_span,
                sink.clone(),
                c.rule,
                *sanitized,
            )),
            _ => None,
        })
        .collect()
}
