//! Reaching definitions and the def-use index.
//!
//! Definitions are variable bindings: assignments to a plain name,
//! augmented assignments, `for` targets, parameter bindings, and the
//! names bound by `def`/`class`/`import`. Assigning through an attribute
//! or subscript (`self.x = v`, `a[i] = v`) defines no variable — it reads
//! the base. The analysis runs the classic forward worklist at block
//! granularity, then replays each block to attach reaching-definition
//! sets to individual uses.

use crate::ast::{Expr, ExprKind, FunctionView, Stmt, StmtId, StmtKind};
use crate::cfg::Cfg;
use std::collections::{BTreeMap, BTreeSet};

/// Definition/use facts for one function, plus reaching-definition sets.
#[derive(Debug, Clone, Default)]
pub struct DefUseIndex {
    /// Variables each statement defines.
    pub defs: BTreeMap<StmtId, Vec<String>>,
    /// Variables each statement reads.
    pub uses: BTreeMap<StmtId, Vec<String>>,
    /// For a (use site, variable) pair: the definition sites that reach it.
    pub reaching: BTreeMap<(StmtId, String), BTreeSet<StmtId>>,
    /// All definition sites per variable, in id order.
    pub def_sites: BTreeMap<String, Vec<StmtId>>,
}

impl DefUseIndex {
    /// Definition sites of `var` reaching the use at `stmt`, if any.
    pub fn reaching_defs(&self, stmt: StmtId, var: &str) -> Option<&BTreeSet<StmtId>> {
        self.reaching.get(&(stmt, var.to_string()))
    }

    /// Every use reached by the definition at `def_stmt` of `var`.
    pub fn uses_of_def(&self, def_stmt: StmtId, var: &str) -> Vec<StmtId> {
        self.reaching
            .iter()
            .filter(|((_, v), defs)| v == var && defs.contains(&def_stmt))
            .map(|((use_stmt, _), _)| *use_stmt)
            .collect()
    }
}

/// Variables a statement defines. Headers count only their own binding:
/// a `for` defines its target, suite statements carry their own ids.
pub fn stmt_defs(stmt: &Stmt) -> Vec<String> {
    match &stmt.kind {
        StmtKind::Assign { target, .. } => match &target.kind {
            ExprKind::Name(n) => vec![n.clone()],
            _ => Vec::new(),
        },
        StmtKind::AugAssign { target, .. } => match &target.kind {
            ExprKind::Name(n) => vec![n.clone()],
            _ => Vec::new(),
        },
        StmtKind::For { target, .. } => match &target.kind {
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

/// Variables a statement reads. Compound headers read only their own
/// expressions (`if`/`while` tests, `for` iterables).
pub fn stmt_uses(stmt: &Stmt) -> Vec<String> {
    let mut out = Vec::new();
    match &stmt.kind {
        StmtKind::Assign { target, value } => {
            // Attribute/subscript targets read their base and index.
            collect_target_reads(target, &mut out);
            collect_names(value, &mut out);
        }
        StmtKind::AugAssign { target, value, .. } => {
            match &target.kind {
                ExprKind::Name(n) => out.push(n.clone()),
                _ => collect_target_reads(target, &mut out),
            }
            collect_names(value, &mut out);
        }
        StmtKind::If { test, .. } | StmtKind::While { test, .. } => collect_names(test, &mut out),
        StmtKind::For { iter, .. } => collect_names(iter, &mut out),
        StmtKind::Return { value } | StmtKind::Raise { value } => {
            if let Some(v) = value {
                collect_names(v, &mut out);
            }
        }
        StmtKind::ExprStmt { value } => collect_names(value, &mut out),
        StmtKind::ClassDef { bases, .. } => out.extend(bases
            .iter()
            .map(|b| b.split('.').next().unwrap_or(b).to_string())),
        _ => {}
    }
    out
}

fn collect_names(expr: &Expr, out: &mut Vec<String>) {
    expr.walk(&mut |e| {
        if let ExprKind::Name(n) = &e.kind {
            out.push(n.clone());
        }
    });
}

/// Reads performed by an assignment target that is not a plain name.
fn collect_target_reads(target: &Expr, out: &mut Vec<String>) {
    match &target.kind {
        ExprKind::Name(_) => {}
        ExprKind::Attribute { base, .. } => collect_names(base, out),
        ExprKind::Subscript { value, index } => {
            collect_names(value, out);
            collect_names(index, out);
        }
        _ => collect_names(target, out),
    }
}

/// Computes reaching definitions over `cfg` and assembles the def-use
/// index for the function.
pub fn reaching_definitions(function: &FunctionView<'_>, cfg: &Cfg) -> DefUseIndex {
    let stmt_lookup = build_stmt_lookup(function);
    let mut index = DefUseIndex::default();

    // Per-statement facts. Parameters define their own name.
    for param in function.params {
        index.defs.insert(param.id, vec![param.name.clone()]);
        index.uses.insert(param.id, Vec::new());
        index.def_sites.entry(param.name.clone()).or_default().push(param.id);
    }
    let mut all_ids: Vec<StmtId> = Vec::new();
    for block in &cfg.blocks {
        for &sid in &block.stmts {
            all_ids.push(sid);
            if let Some(stmt) = stmt_lookup.get(&sid) {
                let defs = stmt_defs(stmt);
                for d in &defs {
                    index.def_sites.entry(d.clone()).or_default().push(sid);
                }
                index.defs.insert(sid, defs);
                index.uses.insert(sid, stmt_uses(stmt));
            }
        }
    }
    for sites in index.def_sites.values_mut() {
        sites.sort();
        sites.dedup();
    }

    // Block-level gen/kill.
    type Facts = BTreeMap<String, BTreeSet<StmtId>>;
    let n = cfg.blocks.len();
    let mut gen_facts: Vec<Facts> = vec![BTreeMap::new(); n];
    let mut kill_vars: Vec<BTreeSet<String>> = vec![BTreeSet::new(); n];
    for (i, block) in cfg.blocks.iter().enumerate() {
        for &sid in &block.stmts {
            if let Some(defs) = index.defs.get(&sid) {
                for var in defs {
                    kill_vars[i].insert(var.clone());
                    gen_facts[i].insert(var.clone(), BTreeSet::from([sid]));
                }
            }
        }
    }

    let mut ins: Vec<Facts> = vec![BTreeMap::new(); n];
    let mut outs: Vec<Facts> = vec![BTreeMap::new(); n];
    let mut work: Vec<usize> = (0..n).collect();
    while let Some(i) = work.pop() {
        let mut input: Facts = BTreeMap::new();
        for edge in cfg.edges.iter().filter(|e| e.to.0 as usize == i) {
            for (var, defs) in &outs[edge.from.0 as usize] {
                input.entry(var.clone()).or_default().extend(defs.iter().copied());
            }
        }
        let mut output = input.clone();
        for var in &kill_vars[i] {
            output.remove(var);
        }
        for (var, defs) in &gen_facts[i] {
            output.entry(var.clone()).or_default().extend(defs.iter().copied());
        }
        ins[i] = input;
        if output != outs[i] {
            outs[i] = output;
            for edge in cfg.edges.iter().filter(|e| e.from.0 as usize == i) {
                let succ = edge.to.0 as usize;
                if !work.contains(&succ) {
                    work.push(succ);
                }
            }
        }
    }

    // Replay each block to attach reaching sets to individual uses.
    for (i, block) in cfg.blocks.iter().enumerate() {
        let mut state = ins[i].clone();
        for &sid in &block.stmts {
            if let Some(uses) = index.uses.get(&sid) {
                for var in uses.clone() {
                    if let Some(defs) = state.get(&var) {
                        index
                            .reaching
                            .entry((sid, var))
                            .or_default()
                            .extend(defs.iter().copied());
                    }
                }
            }
            if let Some(defs) = index.defs.get(&sid) {
                for var in defs.clone() {
                    state.insert(var, BTreeSet::from([sid]));
                }
            }
        }
    }
    index
}

/// Maps statement ids back to nodes for everything the CFG references.
fn build_stmt_lookup<'a>(function: &FunctionView<'a>) -> BTreeMap<StmtId, &'a Stmt> {
    let mut map = BTreeMap::new();
    crate::ast::walk_stmts(function.body, &mut |stmt| {
        map.insert(stmt.id, stmt);
    });
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfg::build_cfg;
    use crate::frontend::parse_unit;
    use crate::source::SourceUnit;

    fn index_of(text: &str) -> (DefUseIndex, crate::ast::NormalizedAst) {
        let unit = SourceUnit::python("t.py", text);
        let ast = parse_unit(&unit).expect("parses");
        let index = {
            let functions = ast.functions();
            let cfg = build_cfg(&functions[0]);
            reaching_definitions(&functions[0], &cfg)
        };
        (index, ast)
    }

    #[test]
    fn both_branch_defs_reach_the_join_use() {
        // x = 1; if c: x = 2; y = x  — the use of x sees both definitions.
        let (index, _) =
            index_of("def f(c):\n    x = 1\n    if c:\n        x = 2\n    y = x\n");
        // Ids: f=0, c=1, x=1 is s2, if=3, x=2 is s4, y=x is s5.
        let defs = index.reaching_defs(StmtId(5), "x").expect("x is used");
        assert_eq!(defs.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2, 4]);
    }

    #[test]
    fn redefinition_kills_the_earlier_def() {
        let (index, _) = index_of("def f():\n    x = 1\n    x = 2\n    y = x\n");
        let defs = index.reaching_defs(StmtId(3), "x").expect("x is used");
        assert_eq!(defs.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn loop_carried_definition_reaches_header_use() {
        let (index, _) =
            index_of("def f(n):\n    i = 0\n    while i < n:\n        i += 1\n    return i\n");
        // while test (s3) uses i: reached by i=0 (s2) and i+=1 (s4).
        let defs = index.reaching_defs(StmtId(3), "i").expect("i used in test");
        assert_eq!(defs.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2, 4]);
    }

    #[test]
    fn aug_assign_reads_before_writing() {
        let (index, _) = index_of("def f(a):\n    a += 1\n    return a\n");
        // a += 1 is s2; its use of a is reached by the parameter (s1).
        let defs = index.reaching_defs(StmtId(2), "a").expect("a read by +=");
        assert_eq!(defs.iter().map(|s| s.0).collect::<Vec<_>>(), vec![1]);
        let at_return = index.reaching_defs(StmtId(3), "a").expect("a returned");
        assert_eq!(at_return.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn attribute_assignment_defines_nothing_but_reads_base() {
        let (index, _) = index_of("def f(self, v):\n    self.x = v\n");
        let sid = StmtId(3);
        assert!(index.defs.get(&sid).expect("indexed").is_empty());
        let uses = index.uses.get(&sid).expect("indexed");
        assert!(uses.contains(&"self".to_string()));
        assert!(uses.contains(&"v".to_string()));
    }

    #[test]
    fn for_target_is_defined_by_the_header() {
        let (index, _) =
            index_of("def f(items):\n    total = 0\n    for it in items:\n        total += it\n    return total\n");
        let for_id = StmtId(3);
        assert_eq!(index.defs.get(&for_id).expect("indexed"), &vec!["it".to_string()]);
        let defs = index.reaching_defs(StmtId(4), "it").expect("it used in body");
        assert!(defs.contains(&for_id));
    }
}
