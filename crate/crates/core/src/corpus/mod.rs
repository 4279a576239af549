//! Annotated notes, note templates, tokenization and the projection from
//! gold character spans onto token labels.

mod io;
mod labels;
mod template;
mod tokenize;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use crate::locale::Locale;
pub use io::{parse_corpus, parse_templates, write_corpus, write_templates};
pub use labels::{spans_to_labels, TokenLabel, TokenLabels};
pub(crate) use labels::project;
pub use template::{NoteTemplate, Placeholder};
pub use tokenize::{is_separator_punct, tokenize, Token};

/// The closed PII taxonomy. `Other` absorbs MRN, account and similar numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiiCategory {
    Name,
    PhoneFax,
    Hospital,
    City,
    State,
    Address,
    Country,
    Company,
    University,
    Date,
    Email,
    Other,
}

impl PiiCategory {
    pub const ALL: [PiiCategory; 12] = [
        PiiCategory::Name,
        PiiCategory::PhoneFax,
        PiiCategory::Hospital,
        PiiCategory::City,
        PiiCategory::State,
        PiiCategory::Address,
        PiiCategory::Country,
        PiiCategory::Company,
        PiiCategory::University,
        PiiCategory::Date,
        PiiCategory::Email,
        PiiCategory::Other,
    ];

    /// Stable serialized name.
    pub fn as_str(self) -> &'static str {
        match self {
            PiiCategory::Name => "name",
            PiiCategory::PhoneFax => "phone_fax",
            PiiCategory::Hospital => "hospital",
            PiiCategory::City => "city",
            PiiCategory::State => "state",
            PiiCategory::Address => "address",
            PiiCategory::Country => "country",
            PiiCategory::Company => "company",
            PiiCategory::University => "university",
            PiiCategory::Date => "date",
            PiiCategory::Email => "email",
            PiiCategory::Other => "other",
        }
    }

    /// Upper-case tag used by category masking, e.g. `PHONE_FAX`.
    pub fn tag(self) -> String {
        self.as_str().to_ascii_uppercase()
    }
}

impl fmt::Display for PiiCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown PII category `{0}`")]
pub struct UnknownCategory(pub String);

impl FromStr for PiiCategory {
    type Err = UnknownCategory;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PiiCategory::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCategory(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Gender {
    Feminine,
    Masculine,
    #[default]
    Unspecified,
}

impl Gender {
    pub fn as_str(self) -> &'static str {
        match self {
            Gender::Feminine => "feminine",
            Gender::Masculine => "masculine",
            Gender::Unspecified => "unspecified",
        }
    }
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A half-open byte range `[start, end)` carrying one category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub category: PiiCategory,
    #[serde(default)]
    pub gender: Gender,
}

impl Span {
    pub fn new(start: usize, end: usize, category: PiiCategory) -> Self {
        Span {
            start,
            end,
            category,
            gender: Gender::Unspecified,
        }
    }

    pub fn with_gender(mut self, gender: Gender) -> Self {
        self.gender = gender;
        self
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    /// True when the two half-open ranges share at least one byte.
    pub fn overlaps(&self, start: usize, end: usize) -> bool {
        self.start < end && start < self.end
    }

    /// Checks bounds, character boundaries and the gender rule against `text`.
    pub fn check(&self, text: &str) -> Result<(), String> {
        if self.start >= self.end {
            return Err(format!("span {}..{} is empty or reversed", self.start, self.end));
        }
        if self.end > text.len() {
            return Err(format!(
                "span {}..{} exceeds text length {}",
                self.start,
                self.end,
                text.len()
            ));
        }
        if !text.is_char_boundary(self.start) || !text.is_char_boundary(self.end) {
            return Err(format!(
                "span {}..{} does not fall on character boundaries",
                self.start, self.end
            ));
        }
        if self.category != PiiCategory::Name && self.gender != Gender::Unspecified {
            return Err(format!(
                "span {}..{} has category {} but gender {}; only name spans carry a gender",
                self.start, self.end, self.category, self.gender
            ));
        }
        Ok(())
    }
}

/// Where a generated note came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub template_id: String,
    pub seed: u64,
}

/// A note with gold PII spans: the unit of evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnotatedNote {
    pub id: String,
    pub text: String,
    pub locale: Locale,
    pub spans: Vec<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl AnnotatedNote {
    /// Checks every span against the text and that spans are sorted and
    /// non-overlapping.
    pub fn validate(&self) -> Result<(), String> {
        if self.id.is_empty() {
            return Err("note id is empty".into());
        }
        let mut prev_end = 0usize;
        for (i, span) in self.spans.iter().enumerate() {
            span.check(&self.text)?;
            if i > 0 && span.start < prev_end {
                return Err(format!(
                    "span {}..{} overlaps or precedes the previous span ending at {}",
                    span.start, span.end, prev_end
                ));
            }
            prev_end = span.end;
        }
        Ok(())
    }

    /// The gold text of a span.
    pub fn span_text(&self, span: &Span) -> &str {
        &self.text[span.start..span.end]
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: record `{id}` is invalid: {reason}")]
    Validation { line: usize, id: String, reason: String },
    #[error("line {line}: template `{template_id}` has a bad placeholder `{placeholder}` at byte {offset}: {reason}")]
    Placeholder {
        line: usize,
        template_id: String,
        placeholder: String,
        offset: usize,
        reason: String,
    },
    #[error("note `{note_id}`: span {start}..{end} overlaps no token")]
    SpanTokenMismatch {
        note_id: String,
        start: usize,
        end: usize,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn category_names_are_stable() {
        let names: Vec<_> = PiiCategory::ALL.iter().map(|c| c.as_str()).collect();
        assert_eq!(
            names,
            [
                "name",
                "phone_fax",
                "hospital",
                "city",
                "state",
                "address",
                "country",
                "company",
                "university",
                "date",
                "email",
                "other"
            ]
        );
        for c in PiiCategory::ALL {
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.as_str()));
            assert_eq!(c.as_str().parse::<PiiCategory>().unwrap(), c);
        }
        assert_eq!(PiiCategory::PhoneFax.tag(), "PHONE_FAX");
    }

    fn note(text: &str, spans: Vec<Span>) -> AnnotatedNote {
        AnnotatedNote {
            id: "n".into(),
            text: text.into(),
            locale: Locale::EnUs,
            spans,
            provenance: None,
        }
    }

    #[test]
    fn validate_rejects_reversed_and_overlapping_spans() {
        assert!(note("abcdef", vec![Span::new(3, 2, PiiCategory::Name)]).validate().is_err());
        assert!(note("abcdef", vec![Span::new(0, 7, PiiCategory::Name)]).validate().is_err());
        let overlapping = vec![Span::new(0, 3, PiiCategory::Name), Span::new(2, 4, PiiCategory::City)];
        assert!(note("abcdef", overlapping).validate().is_err());
        let unsorted = vec![Span::new(4, 5, PiiCategory::Name), Span::new(0, 2, PiiCategory::City)];
        assert!(note("abcdef", unsorted).validate().is_err());
        let ok = vec![Span::new(0, 2, PiiCategory::Name), Span::new(2, 4, PiiCategory::City)];
        assert!(note("abcdef", ok).validate().is_ok());
    }

    #[test]
    fn validate_checks_char_boundaries_and_gender() {
        // "王芳" is two 3-byte characters.
        assert!(note("王芳", vec![Span::new(0, 2, PiiCategory::Name)]).validate().is_err());
        assert!(note("王芳", vec![Span::new(0, 6, PiiCategory::Name)]).validate().is_ok());
        let gendered_city = Span::new(0, 2, PiiCategory::City).with_gender(Gender::Feminine);
        assert!(note("ab", vec![gendered_city]).validate().is_err());
    }
}

/// Template sets shipped with the crate: 20 discharge-summary style notes and
/// 8 referral letters.
pub mod builtin {
    use super::{parse_templates, NoteTemplate};

    pub const DISCHARGE: &str = include_str!("../../data/templates/discharge.tpl");
    pub const REFERRAL: &str = include_str!("../../data/templates/referral.tpl");

    pub fn discharge() -> Vec<NoteTemplate> {
        parse_templates(DISCHARGE.as_bytes()).expect("bundled discharge templates parse")
    }

    pub fn referral() -> Vec<NoteTemplate> {
        parse_templates(REFERRAL.as_bytes()).expect("bundled referral templates parse")
    }
}
