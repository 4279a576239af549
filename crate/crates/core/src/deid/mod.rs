//! Rule-based de-identification, the external adapter protocol and masking.

mod adapter;
mod mask;
mod rules;

use serde::{Deserialize, Serialize};

use crate::corpus::{AnnotatedNote, PiiCategory, Span};
use crate::surrogate::SurrogateError;

pub use adapter::{
    predictions_from_wire, read_predictions, run_external, write_predictions, AdapterConfig, AdapterKind, ExternalAdapter,
    ExternalRun, PredictionHeader, WireRequest, WireResponse, WireSpan,
};
pub use mask::{mask, MaskPolicy};
pub use rules::{deid_rules, normalize, Dictionary, PatternRule, RuleSet, DEFAULT_RULES};

use rules::Candidate;

#[derive(Debug, thiserror::Error)]
pub enum DeidError {
    #[error("invalid rule set: {0}")]
    InvalidRules(String),
    #[error("invalid adapter config: {0}")]
    InvalidConfig(String),
    #[error("adapter timed out waiting for notes {0:?}")]
    AdapterTimeout(Vec<String>),
    #[error("malformed adapter response ({reason}): {raw}")]
    MalformedResponse { raw: String, reason: String },
    #[error("adapter exited with status {0:?}")]
    NonZeroExit(Option<i32>),
    #[error("adapter returned HTTP status {status}: {body}")]
    HttpStatus { status: u16, body: String },
    #[error("adapter unavailable: {0}")]
    AdapterUnavailable(String),
    #[error("spans {first:?} and {second:?} overlap")]
    Overlap { first: (usize, usize), second: (usize, usize) },
    #[error("span {0:?} is invalid for the text")]
    InvalidSpan((usize, usize)),
    #[error(transparent)]
    Surrogate(#[from] SurrogateError),
}

/// One system's spans for one note.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub note_id: String,
    pub spans: Vec<Span>,
}

impl Prediction {
    /// Sorts spans and merges overlapping ones. A merged span keeps the
    /// category of the span that starts first.
    pub fn normalized(note_id: impl Into<String>, mut spans: Vec<Span>) -> Prediction {
        spans.sort_by_key(|s| (s.start, s.end));
        let mut out: Vec<Span> = Vec::with_capacity(spans.len());
        for s in spans {
            match out.last_mut() {
                Some(last) if s.start < last.end => last.end = last.end.max(s.end),
                _ => out.push(s),
            }
        }
        Prediction {
            note_id: note_id.into(),
            spans: out,
        }
    }

    /// The gold spans of a note as a prediction.
    pub fn from_gold(note: &AnnotatedNote) -> Prediction {
        Prediction::normalized(note.id.clone(), note.spans.clone())
    }
}

/// Anything that turns notes into predictions, one per note, in order.
pub trait Deidentifier: Send + Sync {
    fn name(&self) -> &str;

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError>;

    /// False for systems whose timing means nothing, such as replayed
    /// prediction files.
    fn is_timed(&self) -> bool {
        true
    }
}

/// The rule engine as a [`Deidentifier`].
#[derive(Debug, Clone)]
pub struct RuleEngine {
    name: String,
    rules: RuleSet,
}

impl RuleEngine {
    pub fn new(name: impl Into<String>, rules: RuleSet) -> Self {
        RuleEngine {
            name: name.into(),
            rules,
        }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }
}

impl Deidentifier for RuleEngine {
    fn name(&self) -> &str {
        &self.name
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        Ok(notes.iter().map(|n| self.rules.deidentify_note(n)).collect())
    }
}

/// Returns the gold spans unchanged. Useful as an upper bound and for
/// checking the scoring path.
#[derive(Debug, Clone, Default)]
pub struct GoldLoopback;

impl Deidentifier for GoldLoopback {
    fn name(&self) -> &str {
        "loopback"
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        Ok(notes.iter().map(Prediction::from_gold).collect())
    }
}

/// Greedy overlap resolution: higher priority, then longer, then earlier
/// candidates win. Output is sorted by start.
pub(crate) fn resolve(mut candidates: Vec<Candidate>) -> Vec<Span> {
    candidates.sort_by(|a, b| {
        b.priority
            .cmp(&a.priority)
            .then((b.end - b.start).cmp(&(a.end - a.start)))
            .then(a.start.cmp(&b.start))
    });
    let mut taken: Vec<Span> = Vec::new();
    for c in candidates {
        if !taken.iter().any(|s| s.overlaps(c.start, c.end)) {
            taken.push(Span::new(c.start, c.end, c.category));
        }
    }
    taken.sort_by_key(|s| s.start);
    taken
}

/// Category assigned to spans from predictors that report none.
pub const BINARY_CATEGORY: PiiCategory = PiiCategory::Other;

#[cfg(test)]
mod tests;
