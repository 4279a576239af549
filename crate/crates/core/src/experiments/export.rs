use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::{io_err, test_corpus, ExperimentConfig, ExperimentError};
use crate::corpus::{write_corpus, AnnotatedNote};
use crate::Locale;

/// Added to the experiment seed for training corpora so they never share
/// derived seeds with the test corpora.
pub const TRAIN_SEED_OFFSET: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedCorpus {
    pub size: usize,
    /// Locale code, `all`, or `all-minus-<code>`.
    pub name: String,
    /// Relative to the output directory.
    pub path: PathBuf,
    pub locale_counts: BTreeMap<Locale, usize>,
}

/// Interleaves per-locale corpora one note at a time until `n` notes.
fn round_robin(per_locale: &[&[AnnotatedNote]], n: usize) -> Vec<AnnotatedNote> {
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while out.len() < n {
        let mut any = false;
        for notes in per_locale {
            if out.len() == n {
                break;
            }
            if let Some(note) = notes.get(i) {
                out.push(note.clone());
                any = true;
            }
        }
        if !any {
            break;
        }
        i += 1;
    }
    out
}

/// Writes training corpora for every requested size: one per locale, one
/// mixing all locales, and one mixing all but each locale. Files go to
/// `<output>/train/<size>/<name>.jsonl`.
pub fn export_training_corpora(cfg: &ExperimentConfig) -> Result<Vec<ExportedCorpus>, ExperimentError> {
    cfg.validate()?;
    let templates = cfg.load_templates()?;
    let seed = cfg.seed.wrapping_add(TRAIN_SEED_OFFSET);
    let mut out = Vec::new();
    for &size in &cfg.train_sizes {
        let mut per_locale = BTreeMap::new();
        for &l in &cfg.locales {
            per_locale.insert(l, test_corpus(&templates, l, seed, size, cfg.consistent_mentions)?.0);
        }
        let mut sets: Vec<(String, Vec<AnnotatedNote>)> = Vec::new();
        for &l in &cfg.locales {
            sets.push((l.code().to_string(), per_locale[&l].clone()));
        }
        let all: Vec<&[AnnotatedNote]> = cfg.locales.iter().map(|l| per_locale[l].as_slice()).collect();
        sets.push(("all".into(), round_robin(&all, size)));
        for &skip in &cfg.locales {
            let rest: Vec<&[AnnotatedNote]> = cfg
                .locales
                .iter()
                .filter(|&&l| l != skip)
                .map(|l| per_locale[l].as_slice())
                .collect();
            sets.push((format!("all-minus-{}", skip.code()), round_robin(&rest, size)));
        }
        let dir = cfg.output_dir.join("train").join(size.to_string());
        fs::create_dir_all(&dir).map_err(io_err(&dir))?;
        for (name, notes) in sets {
            let rel = PathBuf::from("train").join(size.to_string()).join(format!("{name}.jsonl"));
            let path = cfg.output_dir.join(&rel);
            let f = File::create(&path).map_err(io_err(&path))?;
            write_corpus(BufWriter::new(f), &notes)?;
            let mut locale_counts = BTreeMap::new();
            for n in &notes {
                *locale_counts.entry(n.locale).or_insert(0) += 1;
            }
            out.push(ExportedCorpus {
                size,
                name,
                path: rel,
                locale_counts,
            });
        }
    }
    Ok(out)
}
