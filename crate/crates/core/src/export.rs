//! Graph export for inspection and tooling: Graphviz DOT and JSON.

use crate::ast::StmtIndex;
use crate::cfg::Cfg;
use crate::error::{Error, Result};
use crate::pdg::{DepKind, Pdg};
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Renders a CFG. Blocks are labeled `entry`/`exit`/`b<n>` with their
/// statement ids; edges carry their kind.
pub fn export_cfg(cfg: &Cfg, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => Ok(serde_json::to_string_pretty(cfg)?),
        ExportFormat::Dot => {
            let mut out = String::new();
            writeln!(out, "digraph cfg {{").expect("write to string");
            writeln!(out, "  label=\"{}\";", escape(&cfg.function)).expect("write");
            for block in &cfg.blocks {
                let name = block_name(cfg, block.id);
                let stmts: Vec<String> =
                    block.stmts.iter().map(|s| s.to_string()).collect();
                let shape = if block.synthetic { "ellipse" } else { "box" };
                let suffix = if block.reachable { "" } else { " (unreachable)" };
                writeln!(
                    out,
                    "  {} [shape={}, label=\"{}{}\"];",
                    name,
                    shape,
                    if stmts.is_empty() { name.clone() } else { stmts.join("\\n") },
                    suffix
                )
                .expect("write");
            }
            for edge in &cfg.edges {
                writeln!(
                    out,
                    "  {} -> {} [label=\"{}\"];",
                    block_name(cfg, edge.from),
                    block_name(cfg, edge.to),
                    kind_label(edge.kind)
                )
                .expect("write");
            }
            writeln!(out, "}}").expect("write");
            Ok(out)
        }
    }
}

/// Renders a PDG; node labels show the statement kind and line so the
/// graph reads without the source open.
pub fn export_pdg(pdg: &Pdg, index: &StmtIndex, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => {
            let nodes: Vec<serde_json::Value> = pdg
                .nodes
                .iter()
                .map(|id| {
                    serde_json::json!({
                        "id": id.to_string(),
                        "label": index.label(*id),
                        "span": index.span(*id),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "function": pdg.function,
                "nodes": nodes,
                "edges": pdg.edges,
            });
            Ok(serde_json::to_string_pretty(&doc)?)
        }
        ExportFormat::Dot => {
            let mut out = String::new();
            writeln!(out, "digraph pdg {{").expect("write");
            writeln!(out, "  label=\"{}\";", escape(&pdg.function)).expect("write");
            for id in &pdg.nodes {
                let meta_label = index.label(*id);
                let line = index.span(*id).start_line;
                writeln!(out, "  {} [label=\"{} {}@L{}\"];", id, id, meta_label, line)
                    .expect("write");
            }
            for edge in &pdg.edges {
                let label = match &edge.dep {
                    DepKind::Data { var } => format!("data:{var}"),
                    DepKind::Control => "control".to_string(),
                };
                let style = match edge.dep {
                    DepKind::Control => ", style=dashed",
                    _ => "",
                };
                writeln!(
                    out,
                    "  {} -> {} [label=\"{}\"{}];",
                    edge.from, edge.to, escape(&label), style
                )
                .expect("write");
            }
            writeln!(out, "}}").expect("write");
            Ok(out)
        }
    }
}

fn block_name(cfg: &Cfg, id: crate::cfg::BlockId) -> String {
    if id == cfg.entry {
        "entry".to_string()
    } else if id == cfg.exit {
        "exit".to_string()
    } else {
        id.to_string()
    }
}

fn kind_label(kind: crate::cfg::EdgeKind) -> &'static str {
    match kind {
        crate::cfg::EdgeKind::Seq => "seq",
        crate::cfg::EdgeKind::TrueBranch => "true",
        crate::cfg::EdgeKind::FalseBranch => "false",
        crate::cfg::EdgeKind::LoopBack => "loop",
        crate::cfg::EdgeKind::Exception => "except",
    }
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfg::build_cfg;
    use crate::dataflow::reaching_definitions;
    use crate::frontend::parse_unit;
    use crate::pdg::build_pdg;
    use crate::source::SourceUnit;

    fn artifacts(text: &str) -> (Cfg, Pdg, StmtIndex) {
        let unit = SourceUnit::python("t.py", text);
        let ast = parse_unit(&unit).expect("parses");
        let functions = ast.functions();
        let cfg = build_cfg(&functions[0]);
        let defuse = reaching_definitions(&functions[0], &cfg);
        let pdg = build_pdg(&functions[0], &cfg, &defuse);
        (cfg, pdg, ast.stmt_index())
    }

    #[test]
    fn unknown_format_string_is_rejected() {
        let err = "yaml".parse::<ExportFormat>().unwrap_err();
        assert!(matches!(err, Error::UnknownFormat(f) if f == "yaml"));
    }

    #[test]
    fn dot_export_names_entry_and_exit() {
        let (cfg, _, _) = artifacts("def f():\n    return 1\n");
        let dot = export_cfg(&cfg, ExportFormat::Dot).expect("renders");
        assert!(dot.contains("entry"));
        assert!(dot.contains("exit"));
        assert!(dot.contains("digraph cfg"));
    }

    #[test]
    fn json_export_round_trips() {
        let (cfg, pdg, index) = artifacts("def f(a):\n    if a:\n        a = 1\n    return a\n");
        let json = export_cfg(&cfg, ExportFormat::Json).expect("renders");
        let value: serde_json::Value = serde_json::from_str(&json).expect("valid json");
        assert_eq!(value["function"], "f");
        let pdg_json = export_pdg(&pdg, &index, ExportFormat::Json).expect("renders");
        let value: serde_json::Value = serde_json::from_str(&pdg_json).expect("valid json");
        assert!(value["nodes"].as_array().is_some_and(|n| !n.is_empty()));
    }

    #[test]
    fn exports_are_deterministic() {
        let text = "def f(a, b):\n    while a:\n        if b:\n            a -= 1\n    return a\n";
        let (cfg1, pdg1, idx1) = artifacts(text);
        let (cfg2, pdg2, idx2) = artifacts(text);
        assert_eq!(
            export_cfg(&cfg1, ExportFormat::Dot).expect("renders"),
            export_cfg(&cfg2, ExportFormat::Dot).expect("renders"),
        );
        assert_eq!(
            export_pdg(&pdg1, &idx1, ExportFormat::Json).expect("renders"),
            export_pdg(&pdg2, &idx2, ExportFormat::Json).expect("renders"),
        );
    }
}
