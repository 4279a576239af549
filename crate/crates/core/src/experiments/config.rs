use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::corpus::{builtin, parse_templates, NoteTemplate};
use crate::deid::AdapterKind;
use crate::metrics::{ScoreMode, DEFAULT_REPEATS, DEFAULT_TIMING_NOTES};
use crate::Locale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExperimentKind {
    Efficiency,
    CrossFormat,
    Multicultural,
    Gender,
    GeneralizationGap,
    ExportTraining,
}

impl ExperimentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExperimentKind::Efficiency => "efficiency",
            ExperimentKind::CrossFormat => "cross_format",
            ExperimentKind::Multicultural => "multicultural",
            ExperimentKind::Gender => "gender",
            ExperimentKind::GeneralizationGap => "generalization_gap",
            ExperimentKind::ExportTraining => "export_training",
        }
    }
}

/// A de-identifier under test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SystemSpec {
    /// The rule engine. `rules` is `default` or a rule file path.
    Builtin {
        #[serde(default = "default_rules")]
        rules: String,
    },
    Subprocess {
        command: Vec<String>,
        #[serde(default = "default_timeout_ms")]
        timeout_ms: u64,
        #[serde(default = "default_batch_size")]
        batch_size: usize,
    },
    Http {
        endpoint: String,
        #[serde(default = "default_timeout_ms")]
        timeout_ms: u64,
        #[serde(default = "default_batch_size")]
        batch_size: usize,
    },
    /// Precomputed predictions. `{locale}` in the path is replaced by the
    /// locale code of the notes being scored.
    Predictions { path: String },
    /// Returns gold spans.
    Loopback,
}

fn default_rules() -> String {
    "default".into()
}

fn default_timeout_ms() -> u64 {
    60_000
}

fn default_batch_size() -> usize {
    32
}

impl SystemSpec {
    pub(crate) fn adapter_kind(&self) -> Option<(AdapterKind, u64, usize)> {
        match self {
            SystemSpec::Subprocess {
                command,
                timeout_ms,
                batch_size,
            } => Some((AdapterKind::Subprocess { command: command.clone() }, *timeout_ms, *batch_size)),
            SystemSpec::Http {
                endpoint,
                timeout_ms,
                batch_size,
            } => Some((AdapterKind::Http { endpoint: endpoint.clone() }, *timeout_ms, *batch_size)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemConfig {
    pub name: String,
    #[serde(flatten)]
    pub spec: SystemSpec,
}

/// The two prediction sets compared for one model in the leave-one-out study.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GapPair {
    pub model: String,
    /// System trained on every locale.
    pub all: SystemSpec,
    /// System trained on every locale except the one scored; its path
    /// normally contains `{locale}`.
    pub all_minus: SystemSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JudgeConfig {
    pub url: String,
    pub model: String,
    #[serde(default = "default_token_env")]
    pub token_env: String,
    /// Prompt template file; the bundled template when absent.
    #[serde(default)]
    pub prompt: Option<PathBuf>,
    #[serde(default = "default_cire_notes")]
    pub notes: usize,
    #[serde(default = "default_concurrency")]
    pub concurrency: usize,
    #[serde(default = "default_timeout_ms")]
    pub timeout_ms: u64,
}

pub const DEFAULT_TOKEN_ENV: &str = "DEIDBENCH_JUDGE_TOKEN";

fn default_token_env() -> String {
    DEFAULT_TOKEN_ENV.into()
}

fn default_cire_notes() -> usize {
    100
}

fn default_concurrency() -> usize {
    4
}

/// Everything an experiment needs. Parsed from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    /// Template sources: `builtin:discharge`, `builtin:referral` or file paths.
    #[serde(default = "default_templates")]
    pub templates: Vec<String>,
    /// Second template set for the cross-format experiment.
    #[serde(default)]
    pub cross_format_templates: Vec<String>,
    #[serde(default = "default_locales")]
    pub locales: Vec<Locale>,
    #[serde(default = "default_base")]
    pub base_locale: Locale,
    pub seed: u64,
    /// Notes per locale for the locale and gender runs.
    #[serde(default = "default_test_size")]
    pub test_size: usize,
    /// Notes in the main accuracy corpus of the efficiency and cross-format runs.
    #[serde(default = "default_eval_size")]
    pub eval_size: usize,
    /// Notes in the timing corpus.
    #[serde(default = "default_timing_notes")]
    pub timing_notes: usize,
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    #[serde(default = "default_train_sizes")]
    pub train_sizes: Vec<usize>,
    #[serde(default)]
    pub mode: ScoreMode,
    #[serde(default = "default_gender_threshold")]
    pub gender_threshold: f64,
    #[serde(default = "default_minimal_gap")]
    pub minimal_gap: f64,
    #[serde(default = "yes")]
    pub consistent_mentions: bool,
    #[serde(default)]
    pub systems: Vec<SystemConfig>,
    #[serde(default)]
    pub gap: Vec<GapPair>,
    #[serde(default)]
    pub judge: Option<JudgeConfig>,
    #[serde(default = "default_output")]
    pub output_dir: PathBuf,
}

fn default_templates() -> Vec<String> {
    vec!["builtin:discharge".into()]
}

fn default_locales() -> Vec<Locale> {
    Locale::ALL.to_vec()
}

fn default_base() -> Locale {
    Locale::EnUs
}

pub const DEFAULT_TEST_SIZE: usize = 500;
pub const DEFAULT_EVAL_SIZE: usize = 1000;
pub const DEFAULT_TRAIN_SIZES: [usize; 4] = [250, 500, 1000, 2000];

fn default_test_size() -> usize {
    DEFAULT_TEST_SIZE
}

fn default_eval_size() -> usize {
    DEFAULT_EVAL_SIZE
}

fn default_timing_notes() -> usize {
    DEFAULT_TIMING_NOTES
}

fn default_repeats() -> usize {
    DEFAULT_REPEATS
}

fn default_train_sizes() -> Vec<usize> {
    DEFAULT_TRAIN_SIZES.to_vec()
}

fn default_gender_threshold() -> f64 {
    0.05
}

fn default_minimal_gap() -> f64 {
    0.01
}

fn yes() -> bool {
    true
}

fn default_output() -> PathBuf {
    PathBuf::from("bench-out")
}

impl ExperimentConfig {
    /// A config with defaults for everything but the kind and seed.
    pub fn new(experiment: ExperimentKind, seed: u64) -> Self {
        ExperimentConfig {
            experiment,
            templates: default_templates(),
            cross_format_templates: Vec::new(),
            locales: default_locales(),
            base_locale: default_base(),
            seed,
            test_size: default_test_size(),
            eval_size: default_eval_size(),
            timing_notes: default_timing_notes(),
            repeats: default_repeats(),
            train_sizes: default_train_sizes(),
            mode: ScoreMode::default(),
            gender_threshold: default_gender_threshold(),
            minimal_gap: default_minimal_gap(),
            consistent_mentions: true,
            systems: Vec::new(),
            gap: Vec::new(),
            judge: None,
            output_dir: default_output(),
        }
    }

    pub fn from_toml(src: &str) -> Result<Self, ExperimentError> {
        let cfg: ExperimentConfig = toml::from_str(src).map_err(|e| ExperimentError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, ExperimentError> {
        let src = std::fs::read_to_string(path).map_err(|e| ExperimentError::Io(path.to_path_buf(), e))?;
        ExperimentConfig::from_toml(&src)
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |m: &str| Err(ExperimentError::Config(m.to_string()));
        if self.templates.is_empty() {
            return bad("at least one template source is required");
        }
        if self.locales.is_empty() {
            return bad("at least one locale is required");
        }
        if self.test_size == 0 || self.eval_size == 0 || self.timing_notes == 0 || self.repeats == 0 {
            return bad("test_size, eval_size, timing_notes and repeats must be at least 1");
        }
        if self.train_sizes.contains(&0) {
            return bad("train_sizes must be at least 1");
        }
        if !(0.0..=1.0).contains(&self.gender_threshold) || !(0.0..=1.0).contains(&self.minimal_gap) {
            return bad("thresholds must lie in [0, 1]");
        }
        let mut names = std::collections::HashSet::new();
        for s in &self.systems {
            if s.name.is_empty() || !names.insert(s.name.as_str()) {
                return Err(ExperimentError::Config(format!("system names must be unique and non-empty: {:?}", s.name)));
            }
        }
        match self.experiment {
            ExperimentKind::Efficiency | ExperimentKind::CrossFormat | ExperimentKind::Multicultural | ExperimentKind::Gender
                if self.systems.is_empty() =>
            {
                bad("at least one system is required")
            }
            ExperimentKind::CrossFormat if self.cross_format_templates.is_empty() => {
                bad("cross_format needs cross_format_templates")
            }
            ExperimentKind::GeneralizationGap if self.gap.is_empty() => bad("generalization_gap needs [[gap]] pairs"),
            _ => Ok(()),
        }
    }

    pub fn load_templates(&self) -> Result<Vec<NoteTemplate>, ExperimentError> {
        load_template_sources(&self.templates)
    }
}

/// Loads and concatenates template sources.
pub fn load_template_sources(sources: &[String]) -> Result<Vec<NoteTemplate>, ExperimentError> {
    let mut out = Vec::new();
    for src in sources {
        match src.as_str() {
            "builtin:discharge" => out.extend(builtin::discharge()),
            "builtin:referral" => out.extend(builtin::referral()),
            path => {
                let f = std::fs::File::open(path).map_err(|e| ExperimentError::Io(PathBuf::from(path), e))?;
                out.extend(parse_templates(std::io::BufReader::new(f))?);
            }
        }
    }
    let mut ids = std::collections::HashSet::new();
    for t in &out {
        if !ids.insert(t.id.clone()) {
            return Err(ExperimentError::Config(format!("duplicate template id {}", t.id)));
        }
    }
    Ok(out)
}
