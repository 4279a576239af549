//! Experiment orchestration: efficiency, cross-format, multi-locale, gender
//! and leave-one-locale-out studies, training-corpus export and reporting.

mod config;
mod export;
mod report;
mod systems;
pub mod stubs;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::{AnnotatedNote, CorpusError, NoteTemplate};
use crate::deid::{mask, DeidError, Deidentifier, MaskPolicy, Prediction};
use crate::metrics::{
    cire, measure_throughput, recall_by_gender, relative_recall_drop, score, ChatJudge, CireError, CireOptions,
    CireReport, EvalReport, Judge, MetricsError, PromptTemplate, ThroughputReport,
};
use crate::surrogate::{bundled_checksums, FallbackWarning, SurrogateError, SurrogateGenerator};
use crate::Locale;

pub use config::{
    load_template_sources, ExperimentConfig, ExperimentKind, GapPair, JudgeConfig, SystemConfig, SystemSpec,
    DEFAULT_EVAL_SIZE, DEFAULT_TEST_SIZE, DEFAULT_TOKEN_ENV, DEFAULT_TRAIN_SIZES,
};
pub use export::{export_training_corpora, ExportedCorpus, TRAIN_SEED_OFFSET};
pub use report::{emit_report, read_csv_table, render_main_table, DropBar, ReportFormat, ScatterPoint};
pub use systems::{build_spec, build_system, build_systems, FailedSystem, PredictionFileSystem};

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error("invalid experiment config: {0}")]
    Config(String),
    #[error("{0}: {1}")]
    Io(PathBuf, #[source] std::io::Error),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Surrogate(#[from] SurrogateError),
    #[error(transparent)]
    Deid(#[from] DeidError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Cire(#[from] CireError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> ExperimentError + '_ {
    move |e| ExperimentError::Io(path.to_path_buf(), e)
}

/// `n` notes for one locale. Templates take turns, so any prefix is
/// balanced across templates; note `i` of a template is the same whatever
/// `n` is.
pub fn test_corpus(
    templates: &[NoteTemplate],
    locale: Locale,
    seed: u64,
    n: usize,
    consistent_mentions: bool,
) -> Result<(Vec<AnnotatedNote>, Vec<FallbackWarning>), ExperimentError> {
    if templates.is_empty() {
        return Err(ExperimentError::Config("no templates".into()));
    }
    let per_template = n.div_ceil(templates.len()).max(1);
    let generator = SurrogateGenerator::for_locale(locale)?.consistent_mentions(consistent_mentions);
    let (notes, warnings) = generator.build_corpus_with_warnings(templates, seed, per_template)?;
    let t = templates.len();
    let mut order: Vec<usize> = (0..notes.len()).collect();
    order.sort_by_key(|&k| (k % per_template, k / per_template));
    let mut slots: Vec<Option<AnnotatedNote>> = notes.into_iter().map(Some).collect();
    let out = order
        .into_iter()
        .take(n)
        .map(|k| slots[k].take().expect("each note taken once"))
        .collect::<Vec<_>>();
    debug_assert!(out.len() == n.min(per_template * t));
    Ok((out, warnings))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemStatus {
    pub name: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Pointer to a result file written during a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRef {
    pub system: String,
    /// Locale code or corpus label.
    pub scope: String,
    pub kind: String,
    /// Relative to the output directory.
    pub path: String,
}

/// Envelope of every result file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile<T> {
    pub run_id: String,
    pub system: String,
    pub scope: String,
    pub kind: String,
    pub data: T,
}

/// One row of the efficiency table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EfficiencyRow {
    pub system: String,
    /// `ok`, `failed` or `published`.
    pub status: String,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
    pub cire: Option<f64>,
    pub time_s: Option<f64>,
    pub std_s: Option<f64>,
    pub words_per_sec: Option<f64>,
}

/// Published figures for four systems (100 notes, 10 runs, GPU inference
/// for the neural ones), rendered next to measured rows for comparison.
pub fn published_rows() -> Vec<EfficiencyRow> {
    let row = |system: &str, p, r, c, t, s, w| EfficiencyRow {
        system: format!("{system} (published)"),
        status: "published".into(),
        precision: Some(p),
        recall: Some(r),
        cire: Some(c),
        time_s: Some(t),
        std_s: Some(s),
        words_per_sec: Some(w),
    };
    vec![
        row("pyDeid", 0.67, 0.68, 0.99, 31.0, 0.2, 4490.0),
        row("Presidio", 0.61, 0.91, 0.89, 28.0, 0.1, 4931.0),
        row("obi-deid-bert", 0.91, 0.94, 0.99, 41.0, 1.4, 3333.0),
        row("BERT", 0.99, 0.99, 0.99, 67.0, 2.0, 2048.0),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossFormatRow {
    pub system: String,
    pub corpus: String,
    pub precision: f64,
    pub recall: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocaleRow {
    pub system: String,
    pub locale: Locale,
    pub precision: f64,
    pub recall: f64,
    /// Relative recall drop against the base locale.
    pub drop: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenderRow {
    pub system: String,
    pub locale: Locale,
    pub r_f: Option<f64>,
    pub r_m: Option<f64>,
    pub gap: Option<f64>,
    pub highlight: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapResult {
    pub model: String,
    pub locale: Locale,
    pub r_all: f64,
    pub r_all_minus: f64,
    pub gap: f64,
    pub p_all: f64,
    pub p_all_minus: f64,
    pub p_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapSummary {
    pub model: String,
    pub max_gap: f64,
    /// True when every locale's gap is below the configured threshold.
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Tables {
    #[serde(default)]
    pub efficiency: Vec<EfficiencyRow>,
    #[serde(default)]
    pub cross_format: Vec<CrossFormatRow>,
    #[serde(default)]
    pub multicultural: Vec<LocaleRow>,
    #[serde(default)]
    pub gender: Vec<GenderRow>,
    #[serde(default)]
    pub gap: Vec<GapResult>,
    #[serde(default)]
    pub gap_summary: Vec<GapSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub run_id: String,
    pub experiment: ExperimentKind,
    pub tool_version: String,
    pub config: ExperimentConfig,
    pub pool_checksums: BTreeMap<Locale, String>,
    pub started_at: String,
    pub finished_at: String,
    pub systems: Vec<SystemStatus>,
    pub fallback_warnings: Vec<FallbackWarning>,
    pub results: Vec<ResultRef>,
    pub tables: Tables,
}

pub const MANIFEST_FILE: &str = "manifest.json";

impl RunManifest {
    fn start(cfg: &ExperimentConfig) -> RunManifest {
        let started_at = chrono::Utc::now().to_rfc3339();
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(cfg).expect("config serializes"));
        h.update(started_at.as_bytes());
        let run_id = hex::encode(&h.finalize()[..6]);
        RunManifest {
            run_id,
            experiment: cfg.experiment,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config: cfg.clone(),
            pool_checksums: bundled_checksums(),
            started_at,
            finished_at: String::new(),
            systems: Vec::new(),
            fallback_warnings: Vec::new(),
            results: Vec::new(),
            tables: Tables::default(),
        }
    }

    fn warn(&mut self, warnings: Vec<FallbackWarning>) {
        let mut all: BTreeSet<FallbackWarning> = self.fallback_warnings.drain(..).collect();
        all.extend(warnings);
        self.fallback_warnings = all.into_iter().collect();
    }

    fn record<T: Serialize>(&mut self, dir: &Path, system: &str, scope: &str, kind: &str, data: &T) -> Result<(), ExperimentError> {
        let rel = format!("results/{}.{}.{kind}.json", file_safe(system), file_safe(scope));
        let path = dir.join(&rel);
        fs::create_dir_all(path.parent().expect("has parent")).map_err(io_err(dir))?;
        let file = ResultFile {
            run_id: self.run_id.clone(),
            system: system.to_string(),
            scope: scope.to_string(),
            kind: kind.to_string(),
            data,
        };
        fs::write(&path, serde_json::to_vec_pretty(&file)?).map_err(io_err(&path))?;
        self.results.push(ResultRef {
            system: system.to_string(),
            scope: scope.to_string(),
            kind: kind.to_string(),
            path: rel,
        });
        Ok(())
    }

    fn status(&mut self, name: &str, result: Result<(), String>) {
        if let Err(e) = &result {
            log::error!("system {name} failed: {e}");
        }
        self.systems.push(SystemStatus {
            name: name.to_string(),
            ok: result.is_ok(),
            error: result.err(),
        });
    }

    /// Stamps the finish time and writes `manifest.json` into `dir`.
    fn finish(mut self, dir: &Path) -> Result<RunManifest, ExperimentError> {
        self.finished_at = chrono::Utc::now().to_rfc3339();
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        let path = dir.join(MANIFEST_FILE);
        fs::write(&path, serde_json::to_vec_pretty(&self)?).map_err(io_err(&path))?;
        Ok(self)
    }

    pub fn read(path: &Path) -> Result<RunManifest, ExperimentError> {
        let bytes = fs::read(path).map_err(io_err(path))?;
        Ok(serde_json::from_slice(&bytes)?)
    }
}

fn file_safe(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

fn evaluate(
    system: &dyn Deidentifier,
    notes: &[AnnotatedNote],
    cfg: &ExperimentConfig,
) -> Result<(Vec<Prediction>, EvalReport), ExperimentError> {
    let preds = system.deidentify(notes)?;
    let report = score(notes, &preds, cfg.mode)?;
    Ok((preds, report))
}

fn build_judge(cfg: &JudgeConfig) -> Result<(Box<dyn Judge>, CireOptions), ExperimentError> {
    let template = match &cfg.prompt {
        Some(p) => PromptTemplate::from_file(p)?,
        None => PromptTemplate::default(),
    };
    let judge = ChatJudge::new(&cfg.url, &cfg.model, &cfg.token_env, Duration::from_millis(cfg.timeout_ms));
    Ok((
        Box::new(judge),
        CireOptions {
            template,
            concurrency: cfg.concurrency,
        },
    ))
}

/// Masks the first `limit` notes with category tags and scores retention.
pub fn cire_for(
    notes: &[AnnotatedNote],
    preds: &[Prediction],
    limit: usize,
    judge: &dyn Judge,
    options: &CireOptions,
) -> Result<CireReport, ExperimentError> {
    let n = limit.min(notes.len());
    let masked = notes[..n]
        .iter()
        .zip(preds)
        .map(|(note, p)| mask(&note.text, &p.spans, MaskPolicy::CategoryTag))
        .collect::<Result<Vec<_>, _>>()?;
    let originals: Vec<(&str, &str)> = notes[..n].iter().map(|n| (n.id.as_str(), n.text.as_str())).collect();
    Ok(cire(&originals, &masked, judge, options)?)
}

/// Accuracy, timing and optionally retention for each system on the base
/// locale, plus the published reference rows.
pub fn run_efficiency(cfg: &ExperimentConfig, systems: &[Box<dyn Deidentifier>]) -> Result<RunManifest, ExperimentError> {
    let judge = cfg.judge.as_ref().map(build_judge).transpose()?;
    run_efficiency_with(cfg, systems, judge.as_ref().map(|(j, o)| (j.as_ref(), o)))
}

/// As [`run_efficiency`] with an explicit judge.
pub fn run_efficiency_with(
    cfg: &ExperimentConfig,
    systems: &[Box<dyn Deidentifier>],
    judge: Option<(&dyn Judge, &CireOptions)>,
) -> Result<RunManifest, ExperimentError> {
    if systems.is_empty() {
        return Err(ExperimentError::Config("at least one system is required".into()));
    }
    let mut m = RunManifest::start(cfg);
    let dir = cfg.output_dir.clone();
    let templates = cfg.load_templates()?;
    let (eval, w) = test_corpus(&templates, cfg.base_locale, cfg.seed, cfg.eval_size, cfg.consistent_mentions)?;
    m.warn(w);
    let (timing, _) = test_corpus(&templates, cfg.base_locale, cfg.seed, cfg.timing_notes, cfg.consistent_mentions)?;
    let cire_notes = cfg.judge.as_ref().map_or(100, |j| j.notes);

    for sys in systems {
        let name = sys.name().to_string();
        let outcome = (|| -> Result<EfficiencyRow, ExperimentError> {
            let (preds, report) = evaluate(sys.as_ref(), &eval, cfg)?;
            m.record(&dir, &name, cfg.base_locale.code(), "eval", &report)?;
            let throughput: Option<ThroughputReport> = if sys.is_timed() {
                let t = measure_throughput(|n| sys.deidentify(n).map(|_| ()), &timing, cfg.repeats)?;
                m.record(&dir, &name, cfg.base_locale.code(), "throughput", &t)?;
                Some(t)
            } else {
                None
            };
            let retention = match judge {
                Some((j, opts)) => {
                    let c = cire_for(&eval, &preds, cire_notes, j, opts)?;
                    m.record(&dir, &name, cfg.base_locale.code(), "cire", &c)?;
                    let rel = format!("results/{}.cire-transcript.jsonl", file_safe(&name));
                    c.write_transcript(&dir.join(&rel))?;
                    m.results.push(ResultRef {
                        system: name.clone(),
                        scope: cfg.base_locale.code().into(),
                        kind: "cire-transcript".into(),
                        path: rel,
                    });
                    Some(c.cire)
                }
                None => None,
            };
            Ok(EfficiencyRow {
                system: name.clone(),
                status: "ok".into(),
                precision: Some(report.precision()),
                recall: Some(report.recall()),
                cire: retention,
                time_s: throughput.as_ref().map(|t| t.mean_seconds),
                std_s: throughput.as_ref().map(|t| t.std_seconds),
                words_per_sec: throughput.as_ref().map(|t| t.words_per_sec),
            })
        })();
        match outcome {
            Ok(row) => {
                m.tables.efficiency.push(row);
                m.status(&name, Ok(()));
            }
            Err(e) => {
                m.tables.efficiency.push(EfficiencyRow {
                    system: name.clone(),
                    status: "failed".into(),
                    precision: None,
                    recall: None,
                    cire: None,
                    time_s: None,
                    std_s: None,
                    words_per_sec: None,
                });
                m.status(&name, Err(e.to_string()));
            }
        }
    }
    m.tables.efficiency.extend(published_rows());
    m.finish(&dir)
}

/// Accuracy of each system on two template sets of the base locale.
pub fn run_cross_format(cfg: &ExperimentConfig, systems: &[Box<dyn Deidentifier>]) -> Result<RunManifest, ExperimentError> {
    if systems.is_empty() {
        return Err(ExperimentError::Config("at least one system is required".into()));
    }
    let mut m = RunManifest::start(cfg);
    let dir = cfg.output_dir.clone();
    let sets = [
        ("primary", cfg.load_templates()?),
        ("cross", load_template_sources(&cfg.cross_format_templates)?),
    ];
    let mut corpora = Vec::new();
    for (label, templates) in &sets {
        let (notes, w) = test_corpus(templates, cfg.base_locale, cfg.seed, cfg.eval_size, cfg.consistent_mentions)?;
        m.warn(w);
        corpora.push((*label, notes));
    }
    for sys in systems {
        let name = sys.name().to_string();
        let outcome = (|| -> Result<Vec<CrossFormatRow>, ExperimentError> {
            let mut rows = Vec::new();
            for (label, notes) in &corpora {
                let (_, report) = evaluate(sys.as_ref(), notes, cfg)?;
                m.record(&dir, &name, label, "eval", &report)?;
                rows.push(CrossFormatRow {
                    system: name.clone(),
                    corpus: label.to_string(),
                    precision: report.precision(),
                    recall: report.recall(),
                });
            }
            Ok(rows)
        })();
        match outcome {
            Ok(rows) => {
                m.tables.cross_format.extend(rows);
                m.status(&name, Ok(()));
            }
            Err(e) => m.status(&name, Err(e.to_string())),
        }
    }
    m.finish(&dir)
}

/// Per-locale reports for every system, collected before tables are built.
fn locale_reports(
    cfg: &ExperimentConfig,
    m: &mut RunManifest,
    sys: &dyn Deidentifier,
    locales: &[Locale],
    templates: &[NoteTemplate],
) -> Result<BTreeMap<Locale, EvalReport>, ExperimentError> {
    let dir = cfg.output_dir.clone();
    let mut out = BTreeMap::new();
    for &locale in locales {
        let (notes, w) = test_corpus(templates, locale, cfg.seed, cfg.test_size, cfg.consistent_mentions)?;
        m.warn(w);
        let (_, report) = evaluate(sys, &notes, cfg)?;
        m.record(&dir, sys.name(), locale.code(), "eval", &report)?;
        out.insert(locale, report);
    }
    Ok(out)
}

/// Recall per locale and its relative drop against the base locale.
pub fn run_multicultural(cfg: &ExperimentConfig, systems: &[Box<dyn Deidentifier>]) -> Result<RunManifest, ExperimentError> {
    if systems.is_empty() {
        return Err(ExperimentError::Config("at least one system is required".into()));
    }
    let mut m = RunManifest::start(cfg);
    let templates = cfg.load_templates()?;
    let mut locales = vec![cfg.base_locale];
    locales.extend(cfg.locales.iter().filter(|&&l| l != cfg.base_locale));
    for sys in systems {
        let name = sys.name().to_string();
        match locale_reports(cfg, &mut m, sys.as_ref(), &locales, &templates) {
            Ok(reports) => {
                let base = reports[&cfg.base_locale].recall();
                for &locale in &cfg.locales {
                    let r = &reports[&locale];
                    m.tables.multicultural.push(LocaleRow {
                        system: name.clone(),
                        locale,
                        precision: r.precision(),
                        recall: r.recall(),
                        drop: relative_recall_drop(base, r.recall()).ok(),
                    });
                }
                m.status(&name, Ok(()));
            }
            Err(e) => m.status(&name, Err(e.to_string())),
        }
    }
    m.finish(&cfg.output_dir)
}

/// Feminine and masculine name recall per locale, flagged when the gap
/// exceeds the threshold.
pub fn run_gender(cfg: &ExperimentConfig, systems: &[Box<dyn Deidentifier>]) -> Result<RunManifest, ExperimentError> {
    if systems.is_empty() {
        return Err(ExperimentError::Config("at least one system is required".into()));
    }
    let mut m = RunManifest::start(cfg);
    let templates = cfg.load_templates()?;
    for sys in systems {
        let name = sys.name().to_string();
        match locale_reports(cfg, &mut m, sys.as_ref(), &cfg.locales, &templates) {
            Ok(reports) => {
                for &locale in &cfg.locales {
                    let g = recall_by_gender(&reports[&locale]);
                    let gap = g.gap();
                    m.tables.gender.push(GenderRow {
                        system: name.clone(),
                        locale,
                        r_f: g.r_f,
                        r_m: g.r_m,
                        gap,
                        highlight: gap.is_some_and(|d| d > cfg.gender_threshold),
                    });
                }
                m.status(&name, Ok(()));
            }
            Err(e) => m.status(&name, Err(e.to_string())),
        }
    }
    m.finish(&cfg.output_dir)
}

/// Recall gap between a model trained on every locale and one trained on
/// every locale but the scored one.
pub fn gap_results(
    cfg: &ExperimentConfig,
    model: &str,
    all: &dyn Deidentifier,
    all_minus: &dyn Deidentifier,
) -> Result<(Vec<GapResult>, GapSummary), ExperimentError> {
    let templates = cfg.load_templates()?;
    let mut rows = Vec::new();
    for &locale in &cfg.locales {
        let (notes, _) = test_corpus(&templates, locale, cfg.seed, cfg.test_size, cfg.consistent_mentions)?;
        let (_, a) = evaluate(all, &notes, cfg)?;
        let (_, b) = evaluate(all_minus, &notes, cfg)?;
        rows.push(GapResult {
            model: model.to_string(),
            locale,
            r_all: a.recall(),
            r_all_minus: b.recall(),
            gap: a.recall() - b.recall(),
            p_all: a.precision(),
            p_all_minus: b.precision(),
            p_gap: a.precision() - b.precision(),
        });
    }
    let max_gap = rows.iter().map(|r| r.gap).fold(f64::NEG_INFINITY, f64::max);
    let summary = GapSummary {
        model: model.to_string(),
        max_gap,
        minimal: max_gap < cfg.minimal_gap,
    };
    Ok((rows, summary))
}

pub fn run_generalization_gap(cfg: &ExperimentConfig) -> Result<RunManifest, ExperimentError> {
    if cfg.gap.is_empty() {
        return Err(ExperimentError::Config("generalization_gap needs [[gap]] pairs".into()));
    }
    let mut m = RunManifest::start(cfg);
    for pair in &cfg.gap {
        let all = build_spec(&format!("{}-all", pair.model), &pair.all)?;
        let minus = build_spec(&format!("{}-all-minus", pair.model), &pair.all_minus)?;
        let (rows, summary) = gap_results(cfg, &pair.model, all.as_ref(), minus.as_ref())?;
        m.record(&cfg.output_dir.clone(), &pair.model, "all-locales", "gap", &rows)?;
        m.tables.gap.extend(rows);
        m.tables.gap_summary.push(summary);
        m.status(&pair.model, Ok(()));
    }
    m.finish(&cfg.output_dir)
}

/// Runs the configured experiment with systems built from the config.
pub fn run(cfg: &ExperimentConfig) -> Result<RunManifest, ExperimentError> {
    cfg.validate()?;
    let systems = || build_systems(&cfg.systems);
    match cfg.experiment {
        ExperimentKind::Efficiency => run_efficiency(cfg, &systems()),
        ExperimentKind::CrossFormat => run_cross_format(cfg, &systems()),
        ExperimentKind::Multicultural => run_multicultural(cfg, &systems()),
        ExperimentKind::Gender => run_gender(cfg, &systems()),
        ExperimentKind::GeneralizationGap => run_generalization_gap(cfg),
        ExperimentKind::ExportTraining => {
            let mut m = RunManifest::start(cfg);
            for c in export_training_corpora(cfg)? {
                m.results.push(ResultRef {
                    system: "export".into(),
                    scope: format!("{}/{}", c.size, c.name),
                    kind: "corpus".into(),
                    path: c.path.to_string_lossy().into_owned(),
                });
            }
            m.finish(&cfg.output_dir)
        }
    }
}
