//! Method extraction for oversized functions.
//!
//! Candidate regions are whole nested suites (`if`/`for`/`while` bodies)
//! and maximal straight-line runs of at least five simple statements.
//! A region qualifies when nothing escapes it: no `return`, no
//! `break`/`continue` bound to a loop outside the region, no nested
//! `def`/`class` (which may close over locals). The helper's parameters
//! are the variables flowing in (defined before, used inside) and its
//! return value is the variable flowing out (defined inside, used
//! after); more than one outgoing variable disqualifies the region
//! because the target language subset has no tuple assignment.

use super::{Edit, Patch, PatchKind};
use crate::ast::{walk_stmts, FunctionView, Stmt, StmtId, StmtKind};
use crate::dataflow::DefUseIndex;
use crate::error::{Error, Result};
use crate::source::SourceUnit;
use crate::span::Span;
use std::collections::BTreeSet;

/// A contiguous run of sibling statements, a candidate for extraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    /// Ids of the range members (not their nested statements).
    pub stmts: Vec<StmtId>,
    /// Source span covering the whole range.
    pub span: Span,
}

impl Region {
    fn from_slice(stmts: &[Stmt]) -> Region {
        let span = stmts
            .iter()
            .map(|s| s.span)
            .reduce(Span::merge)
            .expect("non-empty region");
        Region { stmts: stmts.iter().map(|s| s.id).collect(), span }
    }
}

/// Minimum length for a straight-line run to be worth extracting.
const MIN_RUN: usize = 5;

/// Enumerates candidate regions of a function in source order: each
/// nested `if`/`for`/`while` suite, and each maximal run of at least
/// [`MIN_RUN`] simple statements at any suite level.
pub fn enumerate_regions(view: &FunctionView<'_>) -> Vec<Region> {
    let mut regions = Vec::new();
    collect_regions(view.body, &mut regions);
    regions.sort_by_key(|r| r.span);
    regions
}

fn collect_regions(suite: &[Stmt], out: &mut Vec<Region>) {
    // Maximal straight-line runs at this level.
    let mut run_start = None;
    for (i, stmt) in suite.iter().enumerate() {
        if is_simple(stmt) {
            run_start.get_or_insert(i);
        } else {
            flush_run(suite, run_start.take(), i, out);
        }
    }
    flush_run(suite, run_start, suite.len(), out);

    // Whole nested suites, recursively.
    for stmt in suite {
        match &stmt.kind {
            StmtKind::If { body, orelse, .. } => {
                out.push(Region::from_slice(body));
                collect_regions(body, out);
                if !orelse.is_empty() {
                    out.push(Region::from_slice(orelse));
                    collect_regions(orelse, out);
                }
            }
            StmtKind::While { body, .. } | StmtKind::For { body, .. } => {
                out.push(Region::from_slice(body));
                collect_regions(body, out);
            }
            StmtKind::Try { body, handlers, finalbody } => {
                // Try suites are not candidates themselves (extraction
                // would change exception scope) but may contain some.
                collect_regions(body, out);
                for h in handlers {
                    collect_regions(&h.body, out);
                }
                collect_regions(finalbody, out);
            }
            _ => {}
        }
    }
}

fn flush_run(suite: &[Stmt], start: Option<usize>, end: usize, out: &mut Vec<Region>) {
    if let Some(s) = start {
        if end - s >= MIN_RUN {
            out.push(Region::from_slice(&suite[s..end]));
        }
    }
}

fn is_simple(stmt: &Stmt) -> bool {
    matches!(
        stmt.kind,
        StmtKind::Assign { .. }
            | StmtKind::AugAssign { .. }
            | StmtKind::ExprStmt { .. }
            | StmtKind::Pass
    )
}

/// Variables crossing the region boundary: `(params, returns)`.
///
/// A variable is a parameter when a use inside the region is reached by
/// a definition outside it, and a return when a definition inside the
/// region reaches a use outside it. Both come straight from the
/// reaching-definitions index.
pub fn region_io(
    view: &FunctionView<'_>,
    region: &Region,
    defuse: &DefUseIndex,
) -> (Vec<String>, Vec<String>) {
    let (lo, hi) = id_range(view, region);
    let inside = |id: StmtId| id.0 >= lo && id.0 <= hi;

    let mut params = BTreeSet::new();
    let mut returns = BTreeSet::new();
    for ((use_stmt, var), defs) in &defuse.reaching {
        if inside(*use_stmt) {
            if defs.iter().any(|d| !inside(*d)) {
                params.insert(var.clone());
            }
        } else if defs.iter().any(|d| inside(*d)) {
            returns.insert(var.clone());
        }
    }
    (params.into_iter().collect(), returns.into_iter().collect())
}

/// Dense pre-order ids make a region's statements (with everything
/// nested in them) one contiguous id interval.
fn id_range(view: &FunctionView<'_>, region: &Region) -> (u32, u32) {
    let first = region.stmts[0].0;
    let last = *region.stmts.last().expect("non-empty region");
    let mut max = last.0;
    walk_stmts(view.body, &mut |stmt| {
        if region.stmts.contains(&stmt.id) {
            walk_stmts(std::slice::from_ref(stmt), &mut |inner| {
                max = max.max(inner.id.0);
            });
        }
    });
    (first, max)
}

/// Rejects regions from which control or closures escape.
fn check_escapes(view: &FunctionView<'_>, region: &Region) -> Result<()> {
    let mut err = None;
    walk_stmts(view.body, &mut |stmt| {
        if region.stmts.contains(&stmt.id) && err.is_none() {
            if let Some(reason) = escape_reason(stmt, 0) {
                err = Some(reason);
            }
        }
    });
    match err {
        Some(reason) => Err(Error::NoExtractableRegion(reason.to_string())),
        None => Ok(()),
    }
}

fn escape_reason(stmt: &Stmt, loop_depth: u32) -> Option<&'static str> {
    match &stmt.kind {
        StmtKind::Return { .. } => Some("region returns from the enclosing function"),
        StmtKind::Break | StmtKind::Continue if loop_depth == 0 => {
            Some("region breaks out of an enclosing loop")
        }
        StmtKind::FunctionDef { .. } | StmtKind::ClassDef { .. } => {
            Some("region defines a nested function or class")
        }
        StmtKind::While { body, .. } | StmtKind::For { body, .. } => {
            body.iter().find_map(|s| escape_reason(s, loop_depth + 1))
        }
        StmtKind::If { body, orelse, .. } => body
            .iter()
            .chain(orelse.iter())
            .find_map(|s| escape_reason(s, loop_depth)),
        StmtKind::Try { body, handlers, finalbody } => body
            .iter()
            .chain(handlers.iter().flat_map(|h| h.body.iter()))
            .chain(finalbody.iter())
            .find_map(|s| escape_reason(s, loop_depth)),
        _ => None,
    }
}

/// Builds an extract-method patch: the region becomes a call to a new
/// sibling function holding its statements. The single edit replaces
/// the whole enclosing function so the helper can be appended after it.
pub fn extract_method(
    view: &FunctionView<'_>,
    region: &Region,
    defuse: &DefUseIndex,
    unit: &SourceUnit,
    ordinal: usize,
) -> Result<Patch> {
    if view.class_name.is_some() {
        return Err(Error::NoExtractableRegion(
            "extraction is only supported for module-level functions".into(),
        ));
    }
    check_escapes(view, region)?;
    let (params, returns) = region_io(view, region, defuse);
    if returns.len() > 1 {
        return Err(Error::NoExtractableRegion(format!(
            "region defines {} variables used later; at most one is supported",
            returns.len()
        )));
    }

    let lines = unit.lines();
    let fn_span = view.stmt.span;
    let first = region.span.start_line as usize;
    let last = region.span.end_line as usize;
    if first <= fn_span.start_line as usize {
        return Err(Error::NoExtractableRegion("region shares the header line".into()));
    }
    let region_lines = &lines[first - 1..last];
    let indent: String = region_lines[0]
        .chars()
        .take_while(|c| c.is_whitespace())
        .collect();
    if region.span.start_col as usize != indent.chars().count() + 1 {
        return Err(Error::NoExtractableRegion("region does not start its line".into()));
    }

    let helper = format!("_{}_extracted_{}", view.name, ordinal);
    let arg_list = params.join(", ");
    let call = match returns.first() {
        Some(ret) => format!("{indent}{ret} = {helper}({arg_list})"),
        None => format!("{indent}{helper}({arg_list})"),
    };

    let mut helper_lines = vec![format!("def {helper}({arg_list}):")];
    for line in region_lines {
        let stripped = line.strip_prefix(indent.as_str()).unwrap_or(line.trim_start());
        if stripped.is_empty() {
            helper_lines.push(String::new());
        } else {
            helper_lines.push(format!("    {stripped}"));
        }
    }
    if let Some(ret) = returns.first() {
        helper_lines.push(format!("    return {ret}"));
    }

    let mut new_text = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let n = i + 1;
        if n < fn_span.start_line as usize || n > fn_span.end_line as usize {
            continue;
        }
        if n == first {
            new_text.push(call.clone());
        }
        if n < first || n > last {
            new_text.push((*line).to_string());
        }
    }
    new_text.push(String::new());
    new_text.extend(helper_lines);

    Ok(Patch {
        edits: vec![Edit { span: fn_span, replacement: new_text.join("\n") }],
        description: format!(
            "extract {} statement(s) into {helper}({arg_list})",
            region.stmts.len()
        ),
        kind: PatchKind::ExtractMethod,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::analyze_unit;
    use crate::repair::apply_patch;

    fn with_function<T>(text: &str, f: impl FnOnce(&FunctionView<'_>, &DefUseIndex) -> T) -> T {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        let views = analysis.ast.functions();
        f(&views[0], &analysis.functions[0].defuse)
    }

    #[test]
    fn io_covers_in_and_out_variables() {
        let text = concat!(
            "def f(x):\n",
            "    if x:\n",
            "        y = x + 1\n",
            "        z = y * 2\n",
            "    return z\n",
        );
        with_function(text, |view, defuse| {
            let regions = enumerate_regions(view);
            assert_eq!(regions.len(), 1, "the if body");
            let (params, returns) = region_io(view, &regions[0], defuse);
            assert_eq!(params, vec!["x".to_string()]);
            assert_eq!(returns, vec!["z".to_string()]);
        });
    }

    #[test]
    fn self_contained_region_has_no_io() {
        let text = concat!(
            "def f():\n",
            "    a = 1\n",
            "    b = a + 1\n",
            "    c = b + 1\n",
            "    d = c + 1\n",
            "    log(d)\n",
            "    return 0\n",
        );
        with_function(text, |view, defuse| {
            let regions = enumerate_regions(view);
            assert_eq!(regions.len(), 1, "the 5-statement run");
            let (params, returns) = region_io(view, &regions[0], defuse);
            assert!(params.is_empty(), "{params:?}");
            assert!(returns.is_empty(), "{returns:?}");
        });
    }

    #[test]
    fn short_runs_are_not_candidates() {
        let text = "def f():\n    a = 1\n    b = 2\n    c = 3\n    d = 4\n    return a\n";
        with_function(text, |view, _| {
            assert!(enumerate_regions(view).is_empty());
        });
    }

    #[test]
    fn escaping_return_disqualifies() {
        let text = concat!(
            "def f(x):\n",
            "    if x:\n",
            "        y = 1\n",
            "        return y\n",
            "    return 0\n",
        );
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).unwrap();
        let views = analysis.ast.functions();
        let regions = enumerate_regions(&views[0]);
        let got = extract_method(&views[0], &regions[0], &analysis.functions[0].defuse, &unit, 0);
        assert!(matches!(got, Err(Error::NoExtractableRegion(_))));
    }

    #[test]
    fn loop_local_break_is_fine() {
        let text = concat!(
            "def f(items):\n",
            "    if items:\n",
            "        for i in items:\n",
            "            if i:\n",
            "                break\n",
            "    return 0\n",
        );
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).unwrap();
        let views = analysis.ast.functions();
        // Region 0 is the outer if body (contains the for, whose break
        // binds inside the region).
        let regions = enumerate_regions(&views[0]);
        let got = extract_method(&views[0], &regions[0], &analysis.functions[0].defuse, &unit, 0);
        assert!(got.is_ok(), "{got:?}");
    }

    #[test]
    fn extraction_round_trips_through_the_parser() {
        let text = concat!(
            "def process(data):\n",
            "    total = 0\n",
            "    if data:\n",
            "        n = data.count\n",
            "        total = n * 2\n",
            "    emit(total)\n",
            "    return total\n",
        );
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).unwrap();
        let views = analysis.ast.functions();
        let regions = enumerate_regions(&views[0]);
        assert_eq!(regions.len(), 1);
        let patch =
            extract_method(&views[0], &regions[0], &analysis.functions[0].defuse, &unit, 0)
                .expect("extracts");
        let after = apply_patch(text, &patch).expect("applies");
        let after_unit = SourceUnit::python("t.py", &after);
        let re = analyze_unit(&after_unit).expect("patched text parses");
        let names: Vec<String> =
            re.ast.functions().iter().map(|v| v.name.clone()).collect();
        assert!(names.contains(&"process".to_string()));
        assert!(names.contains(&"_process_extracted_0".to_string()), "{names:?}");
        // `data` flows in; `total` is defined inside and used after.
        assert!(after.contains("        total = _process_extracted_0(data)"), "{after}");
    }
}
