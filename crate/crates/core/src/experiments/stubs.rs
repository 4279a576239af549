//! Predictors with known behaviour, for checking the harness itself.

use std::collections::BTreeMap;
use std::time::Duration;

use crate::corpus::{spans_to_labels, tokenize, AnnotatedNote, Gender, PiiCategory, Span};
use crate::deid::{DeidError, Deidentifier, Prediction};
use crate::Locale;

/// Sleeps a fixed time per note and predicts nothing.
pub struct SleepStub {
    pub per_note: Duration,
}

impl Deidentifier for SleepStub {
    fn name(&self) -> &str {
        "sleep-stub"
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        Ok(notes
            .iter()
            .map(|n| {
                std::thread::sleep(self.per_note);
                Prediction::normalized(n.id.clone(), vec![])
            })
            .collect())
    }
}

/// Which gold tokens a [`ScriptedRecall`] finds, as fractions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecallScript {
    /// Fraction of all gold PII tokens found.
    pub overall: f64,
    /// Overrides for feminine and masculine Name tokens.
    pub feminine: Option<f64>,
    pub masculine: Option<f64>,
}

impl RecallScript {
    pub fn overall(r: f64) -> Self {
        RecallScript {
            overall: r,
            feminine: None,
            masculine: None,
        }
    }

    pub fn gendered(r_f: f64, r_m: f64) -> Self {
        RecallScript {
            overall: 1.0,
            feminine: Some(r_f),
            masculine: Some(r_m),
        }
    }
}

/// Finds gold PII tokens with the scripted recall per locale and nothing
/// else. Within each group, the first `round(r * n)` tokens in corpus order
/// are found, so recall over a whole corpus is `round(r * n) / n`.
pub struct ScriptedRecall {
    pub name: String,
    pub scripts: BTreeMap<Locale, RecallScript>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Group {
    Feminine,
    Masculine,
    Rest,
}

impl ScriptedRecall {
    pub fn new(name: impl Into<String>, scripts: impl IntoIterator<Item = (Locale, RecallScript)>) -> Self {
        ScriptedRecall {
            name: name.into(),
            scripts: scripts.into_iter().collect(),
        }
    }

    /// Tokens found per group for a corpus: `round(r * n)`.
    pub fn quota(r: f64, n: usize) -> usize {
        (r * n as f64).round() as usize
    }
}

impl Deidentifier for ScriptedRecall {
    fn name(&self) -> &str {
        &self.name
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        let mut labelled = Vec::with_capacity(notes.len());
        let mut totals: BTreeMap<(Locale, Group), usize> = BTreeMap::new();
        for n in notes {
            let tokens = tokenize(&n.text);
            let labels = spans_to_labels(n, &tokens).map_err(|e| DeidError::InvalidConfig(e.to_string()))?;
            let mut pii = Vec::new();
            for (t, l) in tokens.iter().zip(&labels.labels) {
                if let Some(cat) = l.category {
                    let script = self.scripts.get(&n.locale).copied().unwrap_or(RecallScript::overall(1.0));
                    let group = match (cat, l.gender) {
                        (PiiCategory::Name, Gender::Feminine) if script.feminine.is_some() => Group::Feminine,
                        (PiiCategory::Name, Gender::Masculine) if script.masculine.is_some() => Group::Masculine,
                        _ => Group::Rest,
                    };
                    *totals.entry((n.locale, group)).or_default() += 1;
                    pii.push((Span::new(t.start, t.end, cat), group));
                }
            }
            labelled.push(pii);
        }
        let mut left: BTreeMap<(Locale, Group), usize> = totals
            .iter()
            .map(|(&(locale, group), &n)| {
                let s = self.scripts.get(&locale).copied().unwrap_or(RecallScript::overall(1.0));
                let r = match group {
                    Group::Feminine => s.feminine.unwrap_or(s.overall),
                    Group::Masculine => s.masculine.unwrap_or(s.overall),
                    Group::Rest => s.overall,
                };
                ((locale, group), ScriptedRecall::quota(r, n))
            })
            .collect();
        Ok(notes
            .iter()
            .zip(labelled)
            .map(|(n, pii)| {
                let spans = pii
                    .into_iter()
                    .filter_map(|(span, group)| {
                        let q = left.get_mut(&(n.locale, group)).expect("counted above");
                        (*q > 0).then(|| {
                            *q -= 1;
                            span
                        })
                    })
                    .collect();
                Prediction::normalized(n.id.clone(), spans)
            })
            .collect())
    }
}
