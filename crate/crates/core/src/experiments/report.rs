use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::{
    io_err, CrossFormatRow, EfficiencyRow, ExperimentError, ExperimentKind, GapResult, GapSummary, GenderRow, LocaleRow,
    RunManifest,
};
use crate::Locale;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    /// Aligned columns, metrics to two decimals.
    TableText,
    Csv,
    /// JSON with full precision.
    Structured,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table-text" | "text" => Ok(ReportFormat::TableText),
            "csv" => Ok(ReportFormat::Csv),
            "structured" | "json" => Ok(ReportFormat::Structured),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

enum Cell {
    Text(String),
    Num(Option<f64>),
    Flag(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(Some(v)) if v.abs() >= 1000.0 => format!("{v:.0}"),
            Cell::Num(Some(v)) => format!("{v:.2}"),
            Cell::Num(None) => "n/a".into(),
            Cell::Flag(true) => "*".into(),
            Cell::Flag(false) => String::new(),
        }
    }
}

trait Row: Serialize + DeserializeOwned {
    const HEADERS: &'static [&'static str];

    fn cells(&self) -> Vec<Cell>;
}

fn text(s: impl Into<String>) -> Cell {
    Cell::Text(s.into())
}

impl Row for EfficiencyRow {
    const HEADERS: &'static [&'static str] =
        &["system", "status", "precision", "recall", "cire", "time_s", "std_s", "words_per_sec"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            text(&self.system),
            text(&self.status),
            Cell::Num(self.precision),
            Cell::Num(self.recall),
            Cell::Num(self.cire),
            Cell::Num(self.time_s),
            Cell::Num(self.std_s),
            Cell::Num(self.words_per_sec),
        ]
    }
}

impl Row for CrossFormatRow {
    const HEADERS: &'static [&'static str] = &["system", "corpus", "precision", "recall"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            text(&self.system),
            text(&self.corpus),
            Cell::Num(Some(self.precision)),
            Cell::Num(Some(self.recall)),
        ]
    }
}

impl Row for LocaleRow {
    const HEADERS: &'static [&'static str] = &["system", "locale", "precision", "recall", "drop"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            text(&self.system),
            text(self.locale.code()),
            Cell::Num(Some(self.precision)),
            Cell::Num(Some(self.recall)),
            Cell::Num(self.drop),
        ]
    }
}

impl Row for GenderRow {
    const HEADERS: &'static [&'static str] = &["system", "locale", "r_f", "r_m", "gap", "highlight"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            text(&self.system),
            text(self.locale.code()),
            Cell::Num(self.r_f),
            Cell::Num(self.r_m),
            Cell::Num(self.gap),
            Cell::Flag(self.highlight),
        ]
    }
}

impl Row for GapResult {
    const HEADERS: &'static [&'static str] =
        &["model", "locale", "r_all", "r_all_minus", "gap", "p_all", "p_all_minus", "p_gap"];

    fn cells(&self) -> Vec<Cell> {
        vec![
            text(&self.model),
            text(self.locale.code()),
            Cell::Num(Some(self.r_all)),
            Cell::Num(Some(self.r_all_minus)),
            Cell::Num(Some(self.gap)),
            Cell::Num(Some(self.p_all)),
            Cell::Num(Some(self.p_all_minus)),
            Cell::Num(Some(self.p_gap)),
        ]
    }
}

impl Row for GapSummary {
    const HEADERS: &'static [&'static str] = &["model", "max_gap", "minimal"];

    fn cells(&self) -> Vec<Cell> {
        vec![text(&self.model), Cell::Num(Some(self.max_gap)), text(self.minimal.to_string())]
    }
}

/// Recall against throughput, one point per system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScatterPoint {
    pub system: String,
    pub recall: f64,
    pub words_per_sec: f64,
}

impl Row for ScatterPoint {
    const HEADERS: &'static [&'static str] = &["system", "recall", "words_per_sec"];

    fn cells(&self) -> Vec<Cell> {
        vec![text(&self.system), Cell::Num(Some(self.recall)), Cell::Num(Some(self.words_per_sec))]
    }
}

/// Relative recall drop per locale, one bar each.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DropBar {
    pub system: String,
    pub locale: Locale,
    pub drop: f64,
}

impl Row for DropBar {
    const HEADERS: &'static [&'static str] = &["system", "locale", "drop"];

    fn cells(&self) -> Vec<Cell> {
        vec![text(&self.system), text(self.locale.code()), Cell::Num(Some(self.drop))]
    }
}

fn render_text<R: Row>(rows: &[R]) -> String {
    let body: Vec<Vec<String>> = rows.iter().map(|r| r.cells().iter().map(Cell::render).collect()).collect();
    let mut widths: Vec<usize> = R::HEADERS.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(R::HEADERS.iter().map(|h| h.to_string()).collect());
    out += &line(widths.iter().map(|w| "-".repeat(*w)).collect());
    for row in body {
        out += &line(row);
    }
    out
}

fn write_csv<R: Row>(path: &Path, rows: &[R]) -> Result<(), ExperimentError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
    w.write_record(R::HEADERS)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(())
}

/// Reads a table written by [`emit_report`] in CSV form.
pub fn read_csv_table<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>, ExperimentError> {
    let mut r = csv::Reader::from_path(path)?;
    Ok(r.deserialize().collect::<Result<Vec<T>, _>>()?)
}

struct Emitter<'a> {
    dir: &'a Path,
    formats: &'a [ReportFormat],
    written: Vec<PathBuf>,
}

impl Emitter<'_> {
    fn table<R: Row>(&mut self, name: &str, rows: &[R]) -> Result<(), ExperimentError> {
        for f in self.formats {
            let path = match f {
                ReportFormat::TableText => {
                    let p = self.dir.join(format!("{name}.txt"));
                    fs::write(&p, render_text(rows)).map_err(io_err(&p))?;
                    p
                }
                ReportFormat::Csv => {
                    let p = self.dir.join(format!("{name}.csv"));
                    write_csv(&p, rows)?;
                    p
                }
                ReportFormat::Structured => {
                    let p = self.dir.join(format!("{name}.json"));
                    fs::write(&p, serde_json::to_vec_pretty(rows)?).map_err(io_err(&p))?;
                    p
                }
            };
            self.written.push(path);
        }
        Ok(())
    }

    fn plot<R: Row>(&mut self, name: &str, rows: &[R]) -> Result<(), ExperimentError> {
        let p = self.dir.join(format!("plot_{name}.csv"));
        write_csv(&p, rows)?;
        self.written.push(p);
        Ok(())
    }
}

/// Writes the manifest's tables in each format, plus plot data: a
/// recall/words-per-second scatter for efficiency runs and per-locale drop
/// bars for multi-locale runs. Returns the files written.
pub fn emit_report(manifest: &RunManifest, formats: &[ReportFormat], dir: &Path) -> Result<Vec<PathBuf>, ExperimentError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut e = Emitter {
        dir,
        formats,
        written: Vec::new(),
    };
    let t = &manifest.tables;
    match manifest.experiment {
        ExperimentKind::Efficiency => {
            e.table("efficiency", &t.efficiency)?;
            let points: Vec<ScatterPoint> = t
                .efficiency
                .iter()
                .filter_map(|r| {
                    Some(ScatterPoint {
                        system: r.system.clone(),
                        recall: r.recall?,
                        words_per_sec: r.words_per_sec?,
                    })
                })
                .collect();
            e.plot("scatter", &points)?;
        }
        ExperimentKind::CrossFormat => e.table("cross_format", &t.cross_format)?,
        ExperimentKind::Multicultural => {
            e.table("multicultural", &t.multicultural)?;
            let bars: Vec<DropBar> = t
                .multicultural
                .iter()
                .filter_map(|r| {
                    Some(DropBar {
                        system: r.system.clone(),
                        locale: r.locale,
                        drop: r.drop?,
                    })
                })
                .collect();
            e.plot("drops", &bars)?;
        }
        ExperimentKind::Gender => e.table("gender", &t.gender)?,
        ExperimentKind::GeneralizationGap => {
            e.table("gap", &t.gap)?;
            e.table("gap_summary", &t.gap_summary)?;
        }
        ExperimentKind::ExportTraining => {}
    }
    Ok(e.written)
}

/// The text rendering of one manifest's main table.
pub fn render_main_table(manifest: &RunManifest) -> String {
    let t = &manifest.tables;
    match manifest.experiment {
        ExperimentKind::Efficiency => render_text(&t.efficiency),
        ExperimentKind::CrossFormat => render_text(&t.cross_format),
        ExperimentKind::Multicultural => render_text(&t.multicultural),
        ExperimentKind::Gender => render_text(&t.gender),
        ExperimentKind::GeneralizationGap => render_text(&t.gap) + "\n" + &render_text(&t.gap_summary),
        ExperimentKind::ExportTraining => String::new(),
    }
}
