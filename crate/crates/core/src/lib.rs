//! Synthetic multi-locale clinical de-identification corpora, a rule-based
//! de-identifier with an external adapter protocol, and token-level
//! evaluation (precision/recall, gender and locale slices, CIRE, throughput).

pub mod corpus;
pub mod deid;
pub mod experiments;
pub mod locale;
pub mod metrics;
pub mod surrogate;

pub use corpus::{AnnotatedNote, Gender, NoteTemplate, PiiCategory, Span, Token, TokenLabels};
pub use deid::{Deidentifier, Prediction};
pub use locale::Locale;
pub use metrics::{ConfusionCounts, EvalReport, ScoreMode};
