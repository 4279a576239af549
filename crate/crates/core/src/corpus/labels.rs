use super::{AnnotatedNote, CorpusError, Gender, PiiCategory, Span, Token};

/// Gold label of one token. `category == None` means non-PII.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TokenLabel {
    pub category: Option<PiiCategory>,
    pub gender: Gender,
}

impl TokenLabel {
    pub fn is_pii(&self) -> bool {
        self.category.is_some()
    }
}

/// Per-token binary and multiclass labels for one note.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenLabels {
    pub labels: Vec<TokenLabel>,
}

impl TokenLabels {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn binary(&self) -> impl Iterator<Item = bool> + '_ {
        self.labels.iter().map(TokenLabel::is_pii)
    }

    pub fn multiclass(&self) -> impl Iterator<Item = Option<PiiCategory>> + '_ {
        self.labels.iter().map(|l| l.category)
    }

    pub fn pii_count(&self) -> usize {
        self.binary().filter(|b| *b).count()
    }
}

/// For every token, the index of the first span (in start order) it overlaps.
/// `spans` must be sorted by start. Also reports which spans overlapped at
/// least one token.
pub(crate) fn project(tokens: &[Token<'_>], spans: &[Span]) -> (Vec<Option<usize>>, Vec<bool>) {
    let mut hits = vec![None; tokens.len()];
    let mut covered = vec![false; spans.len()];
    let mut first = 0;
    for (ti, tok) in tokens.iter().enumerate() {
        while first < spans.len() && spans[first].end <= tok.start {
            first += 1;
        }
        let mut k = first;
        while k < spans.len() && spans[k].start < tok.end {
            if spans[k].overlaps(tok.start, tok.end) {
                covered[k] = true;
                hits[ti].get_or_insert(k);
            }
            k += 1;
        }
    }
    (hits, covered)
}

/// Labels a token PII when it shares at least one byte with a gold span, taking
/// that span's category and gender.
pub fn spans_to_labels(note: &AnnotatedNote, tokens: &[Token<'_>]) -> Result<TokenLabels, CorpusError> {
    let mut spans = note.spans.clone();
    spans.sort_by_key(|s| (s.start, s.end));
    let (hits, covered) = project(tokens, &spans);
    if let Some(missed) = covered.iter().position(|c| !c) {
        return Err(CorpusError::SpanTokenMismatch {
            note_id: note.id.clone(),
            start: spans[missed].start,
            end: spans[missed].end,
        });
    }
    let labels = hits
        .into_iter()
        .map(|hit| match hit {
            Some(k) => TokenLabel {
                category: Some(spans[k].category),
                gender: spans[k].gender,
            },
            None => TokenLabel::default(),
        })
        .collect();
    Ok(TokenLabels { labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{tokenize, Locale};

    fn note(text: &str, spans: Vec<Span>) -> AnnotatedNote {
        AnnotatedNote {
            id: "n1".into(),
            text: text.into(),
            locale: Locale::EnUs,
            spans,
            provenance: None,
        }
    }

    /// Brute force: every token against every span.
    fn brute(note: &AnnotatedNote) -> Vec<Option<PiiCategory>> {
        tokenize(&note.text)
            .iter()
            .map(|t| {
                note.spans
                    .iter()
                    .filter(|s| s.start < t.end && t.start < s.end)
                    .min_by_key(|s| s.start)
                    .map(|s| s.category)
            })
            .collect()
    }

    #[test]
    fn no_spans_means_all_clean() {
        let n = note("Patient seen today.", vec![]);
        let labels = spans_to_labels(&n, &tokenize(&n.text)).unwrap();
        assert_eq!(labels.len(), 4);
        assert_eq!(labels.pii_count(), 0);
    }

    #[test]
    fn doctor_name_is_labeled() {
        let n = note(
            "Dr. John saw pt",
            vec![Span::new(4, 8, PiiCategory::Name).with_gender(Gender::Masculine)],
        );
        let toks = tokenize(&n.text);
        let words: Vec<_> = toks.iter().map(|t| t.text).collect();
        assert_eq!(words, ["Dr", ".", "John", "saw", "pt"]);
        let labels = spans_to_labels(&n, &toks).unwrap();
        let multi: Vec<_> = labels.multiclass().collect();
        assert_eq!(multi, [None, None, Some(PiiCategory::Name), None, None]);
        assert_eq!(multi, brute(&n));
        assert_eq!(labels.labels[2].gender, Gender::Masculine);
    }

    #[test]
    fn phone_span_covers_three_tokens() {
        let n = note("call 555-1234 now", vec![Span::new(5, 13, PiiCategory::PhoneFax)]);
        let labels = spans_to_labels(&n, &tokenize(&n.text)).unwrap();
        let multi: Vec<_> = labels.multiclass().collect();
        let p = Some(PiiCategory::PhoneFax);
        assert_eq!(multi, [None, p, p, p, None]);
        assert_eq!(multi, brute(&n));
    }

    #[test]
    fn partial_overlap_counts() {
        // Span covers only "Smi" of "Smith".
        let n = note("Mr Smith", vec![Span::new(3, 6, PiiCategory::Name)]);
        let labels = spans_to_labels(&n, &tokenize(&n.text)).unwrap();
        assert_eq!(labels.binary().collect::<Vec<_>>(), [false, true]);
    }

    #[test]
    fn whitespace_only_span_is_a_mismatch() {
        let n = note("a   b", vec![Span::new(1, 4, PiiCategory::Other)]);
        let err = spans_to_labels(&n, &tokenize(&n.text)).unwrap_err();
        assert!(matches!(err, CorpusError::SpanTokenMismatch { start: 1, end: 4, .. }));
    }

    #[test]
    fn span_order_does_not_matter() {
        let spans = vec![Span::new(0, 4, PiiCategory::Name), Span::new(9, 15, PiiCategory::City)];
        let a = note("John went Boston", spans.clone());
        let mut reversed = spans;
        reversed.reverse();
        let b = note("John went Boston", reversed);
        let toks = tokenize(&a.text);
        assert_eq!(spans_to_labels(&a, &toks).unwrap(), spans_to_labels(&b, &toks).unwrap());
    }
}
