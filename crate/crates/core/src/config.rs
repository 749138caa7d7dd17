//! Analyzer configuration.
//!
//! Everything tunable lives here: detector thresholds, score-fusion
//! weights, the taint policy, semantic-scorer selection, risk weighting,
//! and output shaping. `ToolConfig::default()` is the documented baseline;
//! a JSON file (`--config`, or the `SCOUR_CONFIG` environment variable)
//! overrides it wholesale, and unknown keys are rejected rather than
//! ignored so typos surface immediately.

use crate::detect::taint::TaintPolicy;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

/// Environment variable consulted for a config path when the caller
/// passes none.
pub const CONFIG_ENV_VAR: &str = "SCOUR_CONFIG";

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct ToolConfig {
    /// Rule names to run; empty means all rules.
    pub enabled_rules: Vec<String>,
    pub thresholds: Thresholds,
    pub fusion: FusionConfig,
    pub taint: TaintPolicy,
    pub scorer: ScorerConfig,
    pub risk: RiskConfig,
    pub output: OutputConfig,
    pub feedback: FeedbackConfig,
    pub validation: ValidationConfig,
}

impl ToolConfig {
    /// Loads a config file, or the baseline when `path` is `None` and the
    /// environment names nothing.
    pub fn load(path: Option<&Path>) -> Result<ToolConfig> {
        let from_env = std::env::var(CONFIG_ENV_VAR).ok();
        let chosen: Option<std::path::PathBuf> = match path {
            Some(p) => Some(p.to_path_buf()),
            None => from_env.map(std::path::PathBuf::from),
        };
        let config = match chosen {
            Some(p) => {
                let text = std::fs::read_to_string(&p)?;
                serde_json::from_str::<ToolConfig>(&text)
                    .map_err(|e| Error::Config(format!("{}: {e}", p.display())))?
            }
            None => ToolConfig::default(),
        };
        config.validate()?;
        Ok(config)
    }

    /// Rejects configurations that would make scores meaningless.
    pub fn validate(&self) -> Result<()> {
        self.fusion.validate()?;
        if self.thresholds.secret_entropy_norm <= 0.0 {
            return Err(Error::Config("secretEntropyNorm must be positive".into()));
        }
        if self.scorer.timeout_ms == 0 {
            return Err(Error::Config("scorer timeoutMs must be positive".into()));
        }
        self.taint.validate()?;
        for rule in &self.enabled_rules {
            if crate::detect::Rule::parse(rule).is_none() {
                return Err(Error::Config(format!("unknown rule `{rule}` in enabledRules")));
            }
        }
        Ok(())
    }

    pub fn rule_enabled(&self, rule: crate::detect::Rule) -> bool {
        self.enabled_rules.is_empty()
            || self.enabled_rules.iter().any(|r| r == rule.name())
    }
}

/// Detector thresholds. The comparisons are strict (`>`), so a method of
/// exactly 30 statements is not long yet; the documented defaults land
/// where the structural literature puts them.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct Thresholds {
    /// LongMethod: statements above this fire.
    pub long_method_nos: u32,
    /// LongMethod: cyclomatic complexity above this fires.
    pub long_method_cc: u32,
    /// GodClass: method count above this fires.
    pub god_class_nom: u32,
    /// GodClass: weighted methods per class above this fires.
    pub god_class_wmc: u32,
    /// GodClass: lines paired with coupling (both must exceed).
    pub god_class_loc: u32,
    pub god_class_cbo: u32,
    /// DataClass: accessor fraction at or above this counts (inclusive).
    pub data_class_accessor_ratio: f64,
    /// DataClass: minimum field count (inclusive).
    pub data_class_min_fields: u32,
    /// FeatureEnvy: minimum distinct foreign accesses (inclusive), and
    /// foreign must strictly exceed own.
    pub feature_envy_min_foreign: u32,
    /// DuplicatedCode: minimum normalized tokens a clone must span.
    pub clone_min_tokens: u32,
    /// HardcodedSecret rule (a): minimum literal length for a
    /// credential-named assignment.
    pub secret_min_literal_len: u32,
    /// HardcodedSecret rule (b): minimum literal length for the entropy
    /// check.
    pub secret_entropy_min_len: u32,
    /// HardcodedSecret rule (b): bits/char at or above this is suspicious.
    pub secret_entropy_threshold: f64,
    /// HardcodedSecret rule (b): entropy that maps to score 1.0.
    pub secret_entropy_norm: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            long_method_nos: 30,
            long_method_cc: 10,
            god_class_nom: 15,
            god_class_wmc: 47,
            god_class_loc: 200,
            god_class_cbo: 8,
            data_class_accessor_ratio: 0.8,
            data_class_min_fields: 3,
            feature_envy_min_foreign: 3,
            clone_min_tokens: 30,
            secret_min_literal_len: 6,
            secret_entropy_min_len: 16,
            secret_entropy_threshold: 3.5,
            secret_entropy_norm: 4.5,
        }
    }
}

/// Per-rule fusion weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RuleWeights {
    pub w_struct: f64,
    pub w_sem: f64,
}

/// Linear score fusion: `confidence = wStruct·structural + wSem·semantic`,
/// emitted when confidence reaches `threshold`.
///
/// The default gives structure 0.6 and semantics 0.4. The five purely
/// metric smells carry per-rule overrides of (1.0, 0.0) because the
/// built-in lexical scorer defines no cues for them — an external scorer
/// configured for those rules can remove the overrides.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct FusionConfig {
    pub w_struct: f64,
    pub w_sem: f64,
    pub threshold: f64,
    pub per_rule: BTreeMap<String, RuleWeights>,
}

impl Default for FusionConfig {
    fn default() -> Self {
        let mut per_rule = BTreeMap::new();
        for rule in ["long-method", "god-class", "data-class", "feature-envy", "duplicated-code"]
        {
            per_rule.insert(rule.to_string(), RuleWeights { w_struct: 1.0, w_sem: 0.0 });
        }
        FusionConfig { w_struct: 0.6, w_sem: 0.4, threshold: 0.5, per_rule }
    }
}

impl FusionConfig {
    pub fn validate(&self) -> Result<()> {
        let check = |ws: f64, wl: f64, what: &str| -> Result<()> {
            if ws < 0.0 || wl < 0.0 || (ws + wl - 1.0).abs() > 1e-9 {
                return Err(Error::Config(format!(
                    "{what} fusion weights must be non-negative and sum to 1 (got {ws} + {wl})"
                )));
            }
            Ok(())
        };
        check(self.w_struct, self.w_sem, "global")?;
        for (rule, w) in &self.per_rule {
            check(w.w_struct, w.w_sem, rule)?;
        }
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(Error::Config(format!(
                "fusion threshold must lie in [0, 1], got {}",
                self.threshold
            )));
        }
        Ok(())
    }

    /// Effective weights for a rule, honoring per-rule overrides.
    pub fn weights_for(&self, rule: crate::detect::Rule) -> RuleWeights {
        self.per_rule
            .get(rule.name())
            .copied()
            .unwrap_or(RuleWeights { w_struct: self.w_struct, w_sem: self.w_sem })
    }
}

/// Which semantic scorer runs over candidate windows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct ScorerConfig {
    /// `builtin` (lexical cues), `none` (structural only: wStruct becomes
    /// 1), or `command` (external process, falling back to builtin).
    pub mode: ScorerMode,
    /// Command line for `command` mode; first element is the executable.
    pub command: Vec<String>,
    /// Overall reply deadline for the external scorer.
    pub timeout_ms: u64,
    /// Context lines included above and below a finding's span.
    pub window_lines: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ScorerMode {
    Builtin,
    None,
    Command,
}

impl Default for ScorerConfig {
    fn default() -> Self {
        ScorerConfig {
            mode: ScorerMode::Builtin,
            command: Vec::new(),
            timeout_ms: 2000,
            window_lines: 3,
        }
    }
}

/// CWE-weighted risk scoring for evaluation reports.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct RiskConfig {
    /// Severity weight per CWE id.
    pub per_cwe: BTreeMap<u16, f64>,
    /// Weight applied to structural smells (no CWE).
    pub smell_weight: f64,
    /// Weight for vulnerabilities whose CWE has no entry; their use is
    /// flagged in the report.
    pub unknown_cwe_weight: f64,
}

impl Default for RiskConfig {
    fn default() -> Self {
        let per_cwe = BTreeMap::from([(89, 9.0), (78, 8.5), (798, 7.5), (79, 7.0)]);
        RiskConfig { per_cwe, smell_weight: 3.0, unknown_cwe_weight: 5.0 }
    }
}

impl RiskConfig {
    /// Severity weight for a rule, and whether the fallback for an
    /// unlisted CWE was used (callers flag those in reports).
    pub fn weight(&self, rule: crate::detect::Rule) -> (f64, bool) {
        match rule.cwe() {
            Some(cwe) => match self.per_cwe.get(&cwe) {
                Some(&w) => (w, false),
                None => (self.unknown_cwe_weight, true),
            },
            None => (self.smell_weight, false),
        }
    }
}

/// Output shaping shared by the CLI and report writers.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct OutputConfig {
    /// Findings at or above this confidence render as SARIF `error`.
    pub error_confidence: f64,
    /// Cap on findings shown in a PR comment before the overflow note.
    pub pr_comment_max: usize,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig { error_confidence: 0.8, pr_comment_max: 10 }
    }
}

/// Feedback-driven weight recalibration.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct FeedbackConfig {
    /// Trailing records per rule considered.
    pub window: usize,
    /// Minimum records before weights move at all.
    pub min_records: usize,
    /// Step size applied to (acceptRate − 0.5).
    pub learning_rate: f64,
    /// wSem is clamped to [floor, ceiling] after every update.
    pub w_sem_floor: f64,
    pub w_sem_ceiling: f64,
}

impl Default for FeedbackConfig {
    fn default() -> Self {
        FeedbackConfig {
            window: 50,
            min_records: 5,
            learning_rate: 0.1,
            w_sem_floor: 0.1,
            w_sem_ceiling: 0.9,
        }
    }
}

/// Hooks run while validating a repair.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields, default)]
pub struct ValidationConfig {
    /// Optional shell command run against the patched tree; its exit
    /// status is recorded in the validation report but does not change
    /// the acceptance verdict.
    pub test_command: Option<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        ToolConfig::default().validate().expect("defaults validate");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = serde_json::from_str::<ToolConfig>("{\"bogus\": 1}").unwrap_err();
        assert!(err.to_string().contains("bogus"));
    }

    #[test]
    fn weights_must_sum_to_one() {
        let mut config = ToolConfig::default();
        config.fusion.w_struct = 0.9;
        config.fusion.w_sem = 0.9;
        assert!(config.validate().is_err());
    }

    #[test]
    fn per_rule_overrides_shadow_global_weights() {
        let config = FusionConfig::default();
        let lm = config.weights_for(crate::detect::Rule::LongMethod);
        assert_eq!(lm, RuleWeights { w_struct: 1.0, w_sem: 0.0 });
        let sql = config.weights_for(crate::detect::Rule::SqlInjection);
        assert_eq!(sql, RuleWeights { w_struct: 0.6, w_sem: 0.4 });
    }

    #[test]
    fn config_round_trips_through_json() {
        let config = ToolConfig::default();
        let json = serde_json::to_string_pretty(&config).expect("serializes");
        let back: ToolConfig = serde_json::from_str(&json).expect("deserializes");
        assert_eq!(back.thresholds.long_method_nos, 30);
        assert_eq!(back.fusion.threshold, 0.5);
    }
}
