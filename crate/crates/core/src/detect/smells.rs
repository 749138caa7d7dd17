//! Metric-based smell detectors.
//!
//! All threshold comparisons on size metrics are strict: a method at
//! exactly the statement limit is not long yet. Structural scores map
//! twice-the-threshold to 1.0, so a barely-over entity scores just above
//! 0.5 and egregious ones saturate.

use super::{Candidate, EntityKind, EntityRef, Evidence, FunctionArtifacts, Rule};
use crate::ast::{ClassView, FunctionView, StmtKind};
use crate::config::Thresholds;
use crate::metrics::{attribute_accesses, class_fields, class_metrics, suite_exprs};
use crate::source::SourceUnit;
use std::collections::{BTreeMap, BTreeSet};

fn ratio(value: u32, threshold: u32) -> f64 {
    f64::from(value) / (2.0 * f64::from(threshold))
}

/// A method with too many statements or too much branching.
pub fn detect_long_method(
    artifacts: &FunctionArtifacts,
    thresholds: &Thresholds,
) -> Option<Candidate> {
    let m = artifacts.metrics;
    let fires = m.nos > thresholds.long_method_nos || m.cc > thresholds.long_method_cc;
    if !fires {
        return None;
    }
    let score = ratio(m.nos, thresholds.long_method_nos)
        .max(ratio(m.cc, thresholds.long_method_cc))
        .min(1.0);
    Some(Candidate {
        rule: Rule::LongMethod,
        span: artifacts.span,
        entity: EntityRef {
            kind: EntityKind::Function,
            name: artifacts.name.clone(),
            span: artifacts.span,
        },
        structural_score: score,
        evidence: Evidence::Metrics {
            values: BTreeMap::from([
                ("nos".to_string(), f64::from(m.nos)),
                ("cc".to_string(), f64::from(m.cc)),
                ("loc".to_string(), f64::from(m.loc)),
                ("params".to_string(), f64::from(m.params)),
            ]),
            thresholds: BTreeMap::from([
                ("nos".to_string(), f64::from(thresholds.long_method_nos)),
                ("cc".to_string(), f64::from(thresholds.long_method_cc)),
            ]),
        },
    })
}

/// A class that concentrates too much of the design: many methods, high
/// aggregate complexity, or large and widely coupled.
pub fn detect_god_class(
    class: &ClassView<'_>,
    unit: &SourceUnit,
    thresholds: &Thresholds,
) -> Option<Candidate> {
    let m = class_metrics(class, unit);
    let fires = m.nom > thresholds.god_class_nom
        || m.wmc > thresholds.god_class_wmc
        || (m.loc > thresholds.god_class_loc && m.cbo > thresholds.god_class_cbo);
    if !fires {
        return None;
    }
    let score = ratio(m.nom, thresholds.god_class_nom)
        .max(ratio(m.wmc, thresholds.god_class_wmc))
        .max(ratio(m.cbo, thresholds.god_class_cbo))
        .min(1.0);
    Some(Candidate {
        rule: Rule::GodClass,
        span: class.stmt.span,
        entity: EntityRef {
            kind: EntityKind::Class,
            name: class.name.clone(),
            span: class.stmt.span,
        },
        structural_score: score,
        evidence: Evidence::Metrics {
            values: BTreeMap::from([
                ("nom".to_string(), f64::from(m.nom)),
                ("wmc".to_string(), f64::from(m.wmc)),
                ("loc".to_string(), f64::from(m.loc)),
                ("cbo".to_string(), f64::from(m.cbo)),
            ]),
            thresholds: BTreeMap::from([
                ("nom".to_string(), f64::from(thresholds.god_class_nom)),
                ("wmc".to_string(), f64::from(thresholds.god_class_wmc)),
                ("loc".to_string(), f64::from(thresholds.god_class_loc)),
                ("cbo".to_string(), f64::from(thresholds.god_class_cbo)),
            ]),
        },
    })
}

/// A class that is mostly getters/setters around a bag of fields, with
/// no behavior of its own. Unlike the size smells this uses inclusive
/// bounds: a perfectly accessor-shaped class at the minimum field count
/// is already a data class.
pub fn detect_data_class(
    class: &ClassView<'_>,
    unit: &SourceUnit,
    thresholds: &Thresholds,
) -> Option<Candidate> {
    let m = class_metrics(class, unit);
    let fields = class_fields(class).len() as u32;
    let fires = m.accessor_ratio >= thresholds.data_class_accessor_ratio
        && fields >= thresholds.data_class_min_fields
        && m.wmc <= m.nom + 2;
    if !fires {
        return None;
    }
    Some(Candidate {
        rule: Rule::DataClass,
        span: class.stmt.span,
        entity: EntityRef {
            kind: EntityKind::Class,
            name: class.name.clone(),
            span: class.stmt.span,
        },
        structural_score: m.accessor_ratio.min(1.0),
        evidence: Evidence::Metrics {
            values: BTreeMap::from([
                ("accessorRatio".to_string(), m.accessor_ratio),
                ("fields".to_string(), f64::from(fields)),
                ("nom".to_string(), f64::from(m.nom)),
                ("wmc".to_string(), f64::from(m.wmc)),
            ]),
            thresholds: BTreeMap::from([
                ("accessorRatio".to_string(), thresholds.data_class_accessor_ratio),
                ("fields".to_string(), f64::from(thresholds.data_class_min_fields)),
            ]),
        },
    })
}

/// A method that reads another object's data more than its own. Only
/// methods participate — free functions have no "own" data to envy.
pub fn detect_feature_envy(
    view: &FunctionView<'_>,
    artifacts: &FunctionArtifacts,
    thresholds: &Thresholds,
) -> Option<Candidate> {
    view.class_name.as_ref()?;
    let mut foreign: BTreeSet<String> = BTreeSet::new();
    let mut own: BTreeSet<String> = BTreeSet::new();
    for expr in suite_exprs(view.body) {
        for (root, attr, is_call) in attribute_accesses(expr) {
            if is_call {
                continue;
            }
            let path = format!("{root}.{attr}");
            if root == "self" || root == "cls" {
                own.insert(path);
            } else {
                foreign.insert(path);
            }
        }
    }
    let nf = foreign.len() as u32;
    let no = own.len() as u32;
    if nf < thresholds.feature_envy_min_foreign || nf <= no {
        return None;
    }
    let score = f64::from(nf) / f64::from(nf + no);
    Some(Candidate {
        rule: Rule::FeatureEnvy,
        span: artifacts.span,
        entity: EntityRef {
            kind: EntityKind::Function,
            name: artifacts.name.clone(),
            span: artifacts.span,
        },
        structural_score: score,
        evidence: Evidence::Envy {
            foreign: foreign.into_iter().collect(),
            own: own.into_iter().collect(),
        },
    })
}

/// True when the class body consists only of methods and simple
/// assignments (helper shared with repair planning).
pub fn is_plain_class(class: &ClassView<'_>) -> bool {
    class.body.iter().all(|s| {
        matches!(
            s.kind,
            StmtKind::FunctionDef { .. } | StmtKind::Assign { .. } | StmtKind::Pass
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::analyze_unit;

    fn candidates_for(text: &str) -> Vec<Candidate> {
        let unit = SourceUnit::python("t.py", text);
        let analysis = analyze_unit(&unit).expect("analyzes");
        let thresholds = Thresholds::default();
        let mut out = Vec::new();
        let views = analysis.ast.functions();
        for (view, artifacts) in views.iter().zip(&analysis.functions) {
            out.extend(detect_long_method(artifacts, &thresholds));
            out.extend(detect_feature_envy(view, artifacts, &thresholds));
        }
        for class in analysis.ast.classes() {
            out.extend(detect_god_class(&class, &analysis.unit, &thresholds));
            out.extend(detect_data_class(&class, &analysis.unit, &thresholds));
        }
        out
    }

    fn make_method(lines: usize) -> String {
        let mut text = String::from("def f():\n");
        for i in 0..lines {
            text.push_str(&format!("    x{i} = {i}\n"));
        }
        text.push_str("    return 0\n");
        text
    }

    #[test]
    fn exactly_at_the_statement_threshold_does_not_fire() {
        // 29 assignments + return = 30 statements: at the boundary.
        let none = candidates_for(&make_method(29));
        assert!(none.is_empty());
        // One more statement crosses it.
        let some = candidates_for(&make_method(30));
        assert_eq!(some.len(), 1);
        assert_eq!(some[0].rule, Rule::LongMethod);
        assert!((some[0].structural_score - 31.0 / 60.0).abs() < 1e-12);
    }

    #[test]
    fn complexity_alone_can_make_a_method_long() {
        let mut text = String::from("def f(a):\n");
        for i in 0..11 {
            text.push_str(&format!("    if a == {i}:\n        return {i}\n"));
        }
        text.push_str("    return 0\n");
        let got = candidates_for(&text);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::LongMethod);
        // cc = 12 > 10; score = 12/20.
        assert!((got[0].structural_score - 0.6).abs() < 1e-12);
    }

    #[test]
    fn data_class_boundary_is_inclusive() {
        // Exactly 4 accessors out of 4 methods, 3 fields: fires (>= bounds).
        let text = "class Point:\n    def get_x(self):\n        return self.x\n    def set_x(self, v):\n        self.x = v\n    def set_y(self, v):\n        self.y = v\n    def set_z(self, v):\n        self.z = v\n";
        let got = candidates_for(text);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::DataClass);
        assert!((got[0].structural_score - 1.0).abs() < 1e-12);
    }

    #[test]
    fn feature_envy_needs_strictly_more_foreign_than_own() {
        let envious = "class Calc:\n    def fee(self, other):\n        a = other.total\n        b = other.rate\n        c = other.fee\n        return a + b + c + self.margin\n";
        let got = candidates_for(envious);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::FeatureEnvy);
        assert!((got[0].structural_score - 0.75).abs() < 1e-12);

        // Three foreign vs three own: not envy.
        let balanced = "class Calc:\n    def fee(self, other):\n        a = other.total + self.x\n        b = other.rate + self.y\n        c = other.fee + self.z\n        return a + b + c\n";
        assert!(candidates_for(balanced).is_empty());
    }

    #[test]
    fn god_class_fires_on_method_count() {
        let mut text = String::from("class Hub:\n");
        for i in 0..16 {
            text.push_str(&format!("    def m{i}(self):\n        return {i}\n"));
        }
        let got = candidates_for(&text);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].rule, Rule::GodClass);
        // nom = 16 > 15; score = 16/30.
        assert!((got[0].structural_score - 16.0 / 30.0).abs() < 1e-12);
    }

    #[test]
    fn fifteen_methods_is_not_yet_a_god_class() {
        let mut text = String::from("class Hub:\n");
        for i in 0..15 {
            text.push_str(&format!("    def m{i}(self):\n        return {i}\n"));
        }
        assert!(candidates_for(&text).is_empty());
    }
}
