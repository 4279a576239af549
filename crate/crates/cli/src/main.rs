use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use deidbench_core::corpus::{parse_corpus, write_corpus};
use deidbench_core::deid::{
    mask, predictions_from_wire, read_predictions, write_predictions, Deidentifier, MaskPolicy, Prediction,
};
use deidbench_core::experiments::{
    build_spec, emit_report, export_training_corpora, load_template_sources, render_main_table, run,
    test_corpus, ExperimentConfig, ExperimentKind, ReportFormat, RunManifest, SystemSpec, MANIFEST_FILE,
};
use deidbench_core::metrics::{
    measure_throughput, score, ConfusionCounts, EvalReport, ScoreMode, DEFAULT_REPEATS, DEFAULT_TIMING_NOTES,
};
use deidbench_core::surrogate::SurrogateGenerator;
use deidbench_core::{AnnotatedNote, Locale};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "deidbench", version, about = "Synthetic clinical de-identification corpora and benchmarks")]
struct Cli {
    /// Cap on worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an annotated corpus for one locale.
    GenCorpus(GenCorpus),
    /// Write the per-locale, all and all-minus-X training corpora.
    ExportTraining(ExportTraining),
    /// Run a de-identifier over a corpus and write masked text and predictions.
    Deid(Deid),
    /// Score predictions against a gold corpus.
    Score(Score),
    /// Time a de-identifier over a generated corpus.
    BenchThroughput(BenchThroughput),
    /// Run an experiment described by a config file.
    BenchSuite(BenchSuite),
    /// Render tables from a finished run.
    Report(Report),
}

#[derive(Args)]
struct TemplateArgs {
    /// Template source: `builtin:discharge`, `builtin:referral` or a template file. Repeatable.
    #[arg(long = "templates", default_value = "builtin:discharge")]
    templates: Vec<String>,
    /// Draw a fresh surrogate for every mention instead of reusing one per key.
    #[arg(long)]
    inconsistent_mentions: bool,
}

#[derive(Args)]
struct GenCorpus {
    #[command(flatten)]
    templates: TemplateArgs,
    #[arg(long)]
    locale: Locale,
    #[arg(long)]
    seed: u64,
    /// Notes per template. Overrides --notes.
    #[arg(long)]
    per_template: Option<usize>,
    /// Total notes, cycling through templates.
    #[arg(long, default_value_t = 500)]
    notes: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportTraining {
    #[command(flatten)]
    templates: TemplateArgs,
    #[arg(long)]
    seed: u64,
    /// Locales to include. Defaults to all nine.
    #[arg(long, value_delimiter = ',')]
    locales: Vec<Locale>,
    /// Training set sizes.
    #[arg(long, value_delimiter = ',', default_value = "250,500,1000,2000")]
    sizes: Vec<usize>,
    #[arg(long, default_value = "train-out")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct SystemArgs {
    /// Rule set: `default` or a rule file.
    #[arg(long, default_value = "default")]
    rules: String,
    /// External adapter command (whitespace separated). Replaces --rules.
    #[arg(long, conflicts_with = "adapter_url")]
    adapter_cmd: Option<String>,
    /// External adapter HTTP endpoint. Replaces --rules.
    #[arg(long)]
    adapter_url: Option<String>,
    #[arg(long, default_value_t = 60_000)]
    timeout_ms: u64,
    #[arg(long, default_value_t = 32)]
    batch_size: usize,
}

impl SystemArgs {
    fn spec(&self) -> anyhow::Result<(String, SystemSpec)> {
        Ok(if let Some(cmd) = &self.adapter_cmd {
            let command: Vec<String> = cmd.split_whitespace().map(String::from).collect();
            if command.is_empty() {
                bail!("--adapter-cmd is empty");
            }
            let spec = SystemSpec::Subprocess {
                command,
                timeout_ms: self.timeout_ms,
                batch_size: self.batch_size,
            };
            ("adapter".into(), spec)
        } else if let Some(url) = &self.adapter_url {
            let spec = SystemSpec::Http {
                endpoint: url.clone(),
                timeout_ms: self.timeout_ms,
                batch_size: self.batch_size,
            };
            ("adapter".into(), spec)
        } else {
            ("rules".into(), SystemSpec::Builtin { rules: self.rules.clone() })
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MaskKind {
    Category,
    Fixed,
    Surrogate,
    None,
}

#[derive(Args)]
struct Deid {
    /// Input corpus.
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, value_enum, default_value = "category")]
    mask: MaskKind,
    /// Surrogate locale for `--mask surrogate`.
    #[arg(long, default_value = "en_US")]
    mask_locale: Locale,
    /// Required with `--mask surrogate`.
    #[arg(long)]
    seed: Option<u64>,
    /// Masked notes as id/text records (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Prediction file.
    #[arg(long)]
    pred: Option<PathBuf>,
}

#[derive(Args)]
struct Score {
    #[arg(long)]
    gold: PathBuf,
    #[arg(long)]
    pred: PathBuf,
    #[arg(long, default_value = "binary")]
    mode: ScoreMode,
    /// Write the full report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct BenchThroughput {
    #[command(flatten)]
    templates: TemplateArgs,
    #[command(flatten)]
    system: SystemArgs,
    #[arg(long, default_value = "en_US")]
    locale: Locale,
    #[arg(long)]
    seed: u64,
    /// Notes in the timing corpus.
    #[arg(long, default_value_t = DEFAULT_TIMING_NOTES)]
    notes: usize,
    /// Timed runs after one warm-up.
    #[arg(long, default_value_t = DEFAULT_REPEATS)]
    repeats: usize,
    /// Write the full report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct BenchSuite {
    /// Experiment config (TOML).
    #[arg(long)]
    config: PathBuf,
    /// Overrides `output_dir` from the config.
    #[arg(long)]
    output_dir: Option<PathBuf>,
    /// Overrides `seed` from the config.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct Report {
    /// Run directory or manifest file.
    #[arg(long)]
    run: PathBuf,
    /// table-text, csv or structured. Repeatable.
    #[arg(long = "format", default_value = "table-text")]
    formats: Vec<ReportFormat>,
    /// Defaults to `<run>/report`.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit status classes.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(anyhow::anyhow!(msg.into()))
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            log::warn!("could not size thread pool: {e}");
        }
    }
    let outcome = match cli.command {
        Command::GenCorpus(a) => gen_corpus(a),
        Command::ExportTraining(a) => export_training(a),
        Command::Deid(a) => deid(a),
        Command::Score(a) => score_cmd(a),
        Command::BenchThroughput(a) => bench_throughput(a),
        Command::BenchSuite(a) => bench_suite(a),
        Command::Report(a) => report(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_corpus(path: &Path) -> anyhow::Result<Vec<AnnotatedNote>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    parse_corpus(BufReader::new(f)).with_context(|| format!("reading {}", path.display()))
}

fn build(system: &SystemArgs) -> Result<Box<dyn Deidentifier>, Failure> {
    let (name, spec) = system.spec().map_err(Failure::Usage)?;
    Ok(build_spec(&name, &spec).context("building de-identifier")?)
}

fn gen_corpus(a: GenCorpus) -> Outcome {
    if a.per_template == Some(0) || a.notes == 0 {
        return Err(usage("note count must be positive"));
    }
    let templates = load_template_sources(&a.templates.templates).context("loading templates")?;
    let consistent = !a.templates.inconsistent_mentions;
    let (notes, warnings) = match a.per_template {
        Some(k) => SurrogateGenerator::for_locale(a.locale)
            .context("loading pool")?
            .consistent_mentions(consistent)
            .build_corpus_with_warnings(&templates, a.seed, k)
            .context("generating corpus")?,
        None => test_corpus(&templates, a.locale, a.seed, a.notes, consistent).context("generating corpus")?,
    };
    for w in &warnings {
        eprintln!("warning: {}", serde_json::to_string(w).unwrap_or_default());
    }
    let mut out = output(a.out.as_deref())?;
    write_corpus(&mut out, &notes).context("writing corpus")?;
    out.flush().context("writing corpus")?;
    Ok(())
}

fn export_training(a: ExportTraining) -> Outcome {
    let mut cfg = ExperimentConfig::new(ExperimentKind::ExportTraining, a.seed);
    cfg.templates = a.templates.templates;
    cfg.consistent_mentions = !a.templates.inconsistent_mentions;
    if !a.locales.is_empty() {
        cfg.locales = a.locales;
    }
    cfg.train_sizes = a.sizes;
    cfg.output_dir = a.out_dir;
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    for c in export_training_corpora(&cfg).context("exporting")? {
        println!("{}\t{}\t{}", c.size, c.name, cfg.output_dir.join(&c.path).display());
    }
    Ok(())
}

#[derive(Serialize)]
struct MaskedNote<'a> {
    id: &'a str,
    text: String,
}

fn deid(a: Deid) -> Outcome {
    let policy = match a.mask {
        MaskKind::Category => Some(MaskPolicy::CategoryTag),
        MaskKind::Fixed => Some(MaskPolicy::FixedToken),
        MaskKind::Surrogate => {
            let seed = a.seed.ok_or_else(|| usage("--mask surrogate requires --seed"))?;
            Some(MaskPolicy::Surrogate {
                locale: a.mask_locale,
                seed,
            })
        }
        MaskKind::None => None,
    };
    let notes = read_corpus(&a.input)?;
    let system = build(&a.system)?;
    let preds = system.deidentify(&notes).context("de-identifying")?;
    if let Some(p) = &a.pred {
        write_predictions(output(Some(p))?, system.name(), &preds).context("writing predictions")?;
    }
    if let Some(policy) = policy {
        let mut out = output(a.out.as_deref())?;
        for (note, pred) in notes.iter().zip(&preds) {
            let spans = Prediction::normalized(pred.note_id.clone(), pred.spans.clone()).spans;
            let text = mask(&note.text, &spans, policy).with_context(|| format!("masking {}", note.id))?;
            serde_json::to_writer(&mut out, &MaskedNote { id: &note.id, text }).context("writing output")?;
            out.write_all(b"\n").context("writing output")?;
        }
        out.flush().context("writing output")?;
    }
    Ok(())
}

fn load_predictions(path: &Path, notes: &[AnnotatedNote]) -> anyhow::Result<Vec<Prediction>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let (header, wire) = read_predictions(BufReader::new(f)).with_context(|| format!("reading {}", path.display()))?;
    log::info!("predictions from {}", header.system);
    let run = predictions_from_wire(notes, &wire)?;
    for w in &run.warnings {
        eprintln!("warning: {w}");
    }
    Ok(run.predictions)
}

fn row(label: &str, c: &ConfusionCounts) -> String {
    format!(
        "{label:<16} {:>9.2} {:>6.2} {:>7} {:>7} {:>7}\n",
        c.precision(),
        c.recall(),
        c.tp,
        c.fp,
        c.fn_
    )
}

fn render_eval(r: &EvalReport) -> String {
    let mut s = format!("{:<16} {:>9} {:>6} {:>7} {:>7} {:>7}\n", "slice", "precision", "recall", "tp", "fp", "fn");
    s += &row("overall", &r.overall);
    for (cat, c) in &r.per_category {
        s += &row(cat.as_str(), c);
    }
    for (g, c) in &r.per_gender {
        s += &row(&format!("name/{}", g.as_str()), c);
    }
    s
}

fn score_cmd(a: Score) -> Outcome {
    let gold = read_corpus(&a.gold)?;
    let preds = load_predictions(&a.pred, &gold)?;
    let report = score(&gold, &preds, a.mode).context("scoring")?;
    print!("{}", render_eval(&report));
    if let Some(p) = &a.json {
        let mut out = output(Some(p))?;
        serde_json::to_writer_pretty(&mut out, &report).context("writing report")?;
        out.flush().context("writing report")?;
    }
    Ok(())
}

fn bench_throughput(a: BenchThroughput) -> Outcome {
    if a.notes == 0 || a.repeats == 0 {
        return Err(usage("--notes and --repeats must be positive"));
    }
    let templates = load_template_sources(&a.templates.templates).context("loading templates")?;
    let (notes, _) = test_corpus(&templates, a.locale, a.seed, a.notes, !a.templates.inconsistent_mentions)
        .context("generating corpus")?;
    let system = build(&a.system)?;
    let r = measure_throughput(|n| system.deidentify(n).map(|_| ()), &notes, a.repeats).context("timing")?;
    println!("{:<12} {:>8} {:>8} {:>8} {:>12}", "system", "runs", "time_s", "std_s", "words/sec");
    println!(
        "{:<12} {:>8} {:>8.2} {:>8.2} {:>12.0}",
        system.name(),
        r.runs,
        r.mean_seconds,
        r.std_seconds,
        r.words_per_sec
    );
    if let Some(p) = &a.json {
        let mut out = output(Some(p))?;
        serde_json::to_writer_pretty(&mut out, &r).context("writing report")?;
        out.flush().context("writing report")?;
    }
    Ok(())
}

fn bench_suite(a: BenchSuite) -> Outcome {
    let src = std::fs::read_to_string(&a.config).with_context(|| format!("reading {}", a.config.display()))?;
    let mut cfg = ExperimentConfig::from_toml(&src).map_err(|e| usage(format!("{}: {e}", a.config.display())))?;
    if let Some(d) = a.output_dir {
        cfg.output_dir = d;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    let m = run(&cfg).context("running experiment")?;
    for s in m.systems.iter().filter(|s| !s.ok) {
        eprintln!("warning: system {} failed: {}", s.name, s.error.as_deref().unwrap_or("unknown"));
    }
    print!("{}", render_main_table(&m));
    eprintln!("manifest: {}", cfg.output_dir.join(MANIFEST_FILE).display());
    Ok(())
}

fn report(a: Report) -> Outcome {
    let manifest_path = if a.run.is_dir() { a.run.join(MANIFEST_FILE) } else { a.run.clone() };
    let m = RunManifest::read(&manifest_path).with_context(|| format!("reading {}", manifest_path.display()))?;
    let dir = a.out.unwrap_or_else(|| manifest_path.parent().unwrap_or(Path::new(".")).join("report"));
    for p in emit_report(&m, &a.formats, &dir).context("writing report")? {
        println!("{}", p.display());
    }
    print!("{}", render_main_table(&m));
    Ok(())
}
