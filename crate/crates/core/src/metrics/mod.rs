//! Token-level precision/recall with category and gender slices, relative
//! recall drop, throughput measurement and clinical-information retention.

mod cire;
mod throughput;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{project, spans_to_labels, tokenize, AnnotatedNote, CorpusError, Gender, PiiCategory, Span};
use crate::deid::Prediction;

pub use cire::{
    cire, parse_verdict, split_sentences, ChatJudge, CireError, CireOptions, CireReport, Judge, JudgeError,
    JudgeRequest, NoteCire, PromptTemplate, TranscriptEntry, Verdict, DEFAULT_PROMPT,
};
pub use throughput::{count_words, measure_throughput, ThroughputReport, DEFAULT_REPEATS, DEFAULT_TIMING_NOTES};

#[derive(Debug, thiserror::Error)]
pub enum MetricsError {
    #[error("gold and predicted note ids differ: missing predictions {missing:?}, unexpected predictions {unexpected:?}")]
    IdMismatch {
        missing: Vec<String>,
        unexpected: Vec<String>,
    },
    #[error("baseline recall is zero; relative drop is undefined")]
    DegenerateBaseline,
    #[error("{name} = {value} is outside its allowed range")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("throughput needs at least one note and one repeat")]
    EmptyThroughputInput,
    #[error("run {run} failed: {message}")]
    RunFailed { run: usize, message: String },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScoreMode {
    #[default]
    Binary,
    Multiclass,
}

impl std::str::FromStr for ScoreMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binary" => Ok(ScoreMode::Binary),
            "multiclass" => Ok(ScoreMode::Multiclass),
            other => Err(format!("unknown score mode {other:?} (expected binary or multiclass)")),
        }
    }
}

/// Token counts. Precision is 1.0 when nothing was predicted and recall is
/// 1.0 when there was nothing to find.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
    pub tn: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.fn_ + self.tn
    }

    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp)
    }

    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_)
    }

    /// Number of gold PII tokens in the slice.
    pub fn positives(&self) -> u64 {
        self.tp + self.fn_
    }

    fn add(&mut self, o: &ConfusionCounts) {
        self.tp += o.tp;
        self.fp += o.fp;
        self.fn_ += o.fn_;
        self.tn += o.tn;
    }
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        1.0
    } else {
        num as f64 / den as f64
    }
}

/// Scores for one system over one corpus.
///
/// Category slices count gold tokens of that category as tp/fn, and gold
/// non-PII tokens predicted as that category as fp (tn otherwise). Gender
/// slices only count gold Name tokens, so they carry tp and fn alone.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EvalReport {
    pub mode: ScoreMode,
    pub note_count: usize,
    pub token_count: u64,
    pub overall: ConfusionCounts,
    pub per_category: BTreeMap<PiiCategory, ConfusionCounts>,
    pub per_gender: BTreeMap<Gender, ConfusionCounts>,
}

impl EvalReport {
    pub fn precision(&self) -> f64 {
        self.overall.precision()
    }

    pub fn recall(&self) -> f64 {
        self.overall.recall()
    }

    /// Recall over gold tokens of `category`; None when there are none.
    pub fn category_recall(&self, category: PiiCategory) -> Option<f64> {
        self.per_category
            .get(&category)
            .filter(|c| c.positives() > 0)
            .map(ConfusionCounts::recall)
    }

    fn merge(&mut self, o: &EvalReport) {
        self.note_count += o.note_count;
        self.token_count += o.token_count;
        self.overall.add(&o.overall);
        for (k, v) in &o.per_category {
            self.per_category.entry(*k).or_default().add(v);
        }
        for (k, v) in &o.per_gender {
            self.per_gender.entry(*k).or_default().add(v);
        }
    }
}

/// Scores predictions against gold notes, pairing them by note id.
pub fn score(gold: &[AnnotatedNote], predictions: &[Prediction], mode: ScoreMode) -> Result<EvalReport, MetricsError> {
    let mut by_id: HashMap<&str, &Prediction> = HashMap::with_capacity(predictions.len());
    let mut unexpected = Vec::new();
    for p in predictions {
        if by_id.insert(p.note_id.as_str(), p).is_some() {
            unexpected.push(p.note_id.clone());
        }
    }
    let mut missing = Vec::new();
    for g in gold {
        if by_id.remove(g.id.as_str()).is_none() {
            missing.push(g.id.clone());
        }
    }
    unexpected.extend(by_id.keys().map(|k| k.to_string()));
    if !missing.is_empty() || !unexpected.is_empty() {
        unexpected.sort();
        return Err(MetricsError::IdMismatch { missing, unexpected });
    }
    let by_id: HashMap<&str, &Prediction> = predictions.iter().map(|p| (p.note_id.as_str(), p)).collect();

    let parts = gold
        .par_iter()
        .map(|note| score_note(note, &by_id[note.id.as_str()].spans, mode))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = EvalReport {
        mode,
        ..Default::default()
    };
    for p in &parts {
        report.merge(p);
    }
    Ok(report)
}

/// Scores a single note against predicted spans.
pub fn score_note(note: &AnnotatedNote, predicted: &[Span], mode: ScoreMode) -> Result<EvalReport, MetricsError> {
    let tokens = tokenize(&note.text);
    let gold = spans_to_labels(note, &tokens)?;
    let mut pred = predicted.to_vec();
    pred.sort_by_key(|s| (s.start, s.end));
    let (hits, _) = project(&tokens, &pred);

    let mut r = EvalReport {
        mode,
        note_count: 1,
        token_count: tokens.len() as u64,
        ..Default::default()
    };
    for (label, hit) in gold.labels.iter().zip(hits) {
        let predicted_cat = hit.map(|k| pred[k].category);
        match label.category {
            Some(gold_cat) => {
                let correct = match mode {
                    ScoreMode::Binary => predicted_cat.is_some(),
                    ScoreMode::Multiclass => predicted_cat == Some(gold_cat),
                };
                let bump = |c: &mut ConfusionCounts| {
                    if correct {
                        c.tp += 1
                    } else {
                        c.fn_ += 1
                    }
                };
                bump(&mut r.overall);
                bump(r.per_category.entry(gold_cat).or_default());
                if gold_cat == PiiCategory::Name {
                    bump(r.per_gender.entry(label.gender).or_default());
                }
            }
            None => {
                match predicted_cat {
                    Some(_) => r.overall.fp += 1,
                    None => r.overall.tn += 1,
                }
                for c in PiiCategory::ALL {
                    let slice = r.per_category.entry(c).or_default();
                    if predicted_cat == Some(c) {
                        slice.fp += 1;
                    } else {
                        slice.tn += 1;
                    }
                }
            }
        }
    }
    // Categories absent from both gold and predictions add nothing useful.
    r.per_category.retain(|_, c| c.tp + c.fp + c.fn_ > 0);
    Ok(r)
}

/// Recall over feminine and masculine Name tokens. A gender without gold
/// tokens is absent rather than zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenderRecall {
    pub r_f: Option<f64>,
    pub r_m: Option<f64>,
}

impl GenderRecall {
    /// |r_f − r_m| when both are present.
    pub fn gap(&self) -> Option<f64> {
        Some((self.r_f? - self.r_m?).abs())
    }
}

pub fn recall_by_gender(report: &EvalReport) -> GenderRecall {
    let r = |g| {
        report
            .per_gender
            .get(&g)
            .filter(|c| c.positives() > 0)
            .map(ConfusionCounts::recall)
    };
    GenderRecall {
        r_f: r(Gender::Feminine),
        r_m: r(Gender::Masculine),
    }
}

/// (r_base − r_variant) / r_base. Negative values mean the variant did better.
pub fn relative_recall_drop(r_base: f64, r_variant: f64) -> Result<f64, MetricsError> {
    if r_base == 0.0 {
        return Err(MetricsError::DegenerateBaseline);
    }
    if !(0.0..=1.0).contains(&r_base) {
        return Err(MetricsError::OutOfRange {
            name: "r_base",
            value: r_base,
        });
    }
    if !(0.0..=1.0).contains(&r_variant) {
        return Err(MetricsError::OutOfRange {
            name: "r_variant",
            value: r_variant,
        });
    }
    Ok((r_base - r_variant) / r_base)
}

#[cfg(test)]
mod tests;
