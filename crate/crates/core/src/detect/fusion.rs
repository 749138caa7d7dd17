//! Linear fusion of structural and semantic scores.
//!
//! Each confirmed candidate carries a structural score from its
//! detector and a semantic score from the scorer. Confidence is their
//! weighted sum; the weights come from the fusion configuration, with
//! per-rule overrides taking precedence. The ablation modes bypass one
//! side entirely so the two signal paths can be compared on the same
//! corpus.

use super::Rule;
use crate::config::{FusionConfig, ScorerConfig, ScorerMode};

/// Which signals feed the confidence score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FusionMode {
    /// Weighted sum of both scores — the normal pipeline.
    #[default]
    Fused,
    /// Structural score alone, as if no scorer existed.
    StructuralOnly,
    /// Semantic score alone, as if no structural thresholds existed.
    SemanticOnly,
}

/// Combines one candidate's scores into a confidence in [0, 1].
///
/// With the scorer disabled (`mode: none`) the semantic side carries no
/// information, so its weight folds into the structural side rather
/// than silently deflating every confidence.
pub fn fuse(
    rule: Rule,
    structural: f64,
    semantic: f64,
    fusion: &FusionConfig,
    scorer: &ScorerConfig,
    mode: FusionMode,
) -> f64 {
    let weights = fusion.weights_for(rule);
    let (w_struct, w_sem) = if scorer.mode == ScorerMode::None {
        (weights.w_struct + weights.w_sem, 0.0)
    } else {
        (weights.w_struct, weights.w_sem)
    };
    let confidence = match mode {
        FusionMode::Fused => w_struct * structural + w_sem * semantic,
        FusionMode::StructuralOnly => structural,
        FusionMode::SemanticOnly => semantic,
    };
    confidence.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_weights_blend_both_scores() {
        let fusion = FusionConfig::default();
        let scorer = ScorerConfig::default();
        let got = fuse(Rule::SqlInjection, 1.0, 0.7, &fusion, &scorer, FusionMode::Fused);
        assert!((got - 0.88).abs() < 1e-9, "0.6*1.0 + 0.4*0.7, got {got}");
    }

    #[test]
    fn metric_smells_are_structural_by_default() {
        let fusion = FusionConfig::default();
        let scorer = ScorerConfig::default();
        let got = fuse(Rule::LongMethod, 0.6, 0.9, &fusion, &scorer, FusionMode::Fused);
        assert!((got - 0.6).abs() < 1e-9, "semantic side weighs 0, got {got}");
    }

    #[test]
    fn disabling_the_scorer_folds_weight_into_structure() {
        let fusion = FusionConfig::default();
        let scorer = ScorerConfig { mode: ScorerMode::None, ..ScorerConfig::default() };
        let got = fuse(Rule::SqlInjection, 0.8, 0.0, &fusion, &scorer, FusionMode::Fused);
        assert!((got - 0.8).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn ablation_modes_pass_one_side_through() {
        let fusion = FusionConfig::default();
        let scorer = ScorerConfig::default();
        let s = fuse(Rule::Xss, 0.9, 0.2, &fusion, &scorer, FusionMode::StructuralOnly);
        assert_eq!(s, 0.9);
        let l = fuse(Rule::Xss, 0.9, 0.2, &fusion, &scorer, FusionMode::SemanticOnly);
        assert_eq!(l, 0.2);
    }

    #[test]
    fn confidence_stays_in_unit_range() {
        let mut fusion = FusionConfig::default();
        fusion.per_rule.clear();
        fusion.w_struct = 0.9;
        fusion.w_sem = 0.9;
        let scorer = ScorerConfig::default();
        let got = fuse(Rule::Xss, 1.0, 1.0, &fusion, &scorer, FusionMode::Fused);
        assert_eq!(got, 1.0);
    }
}
