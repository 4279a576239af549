use serde::{Deserialize, Serialize};

use super::DeidError;
use crate::corpus::Span;
use crate::surrogate::{draw, load_pool, note_rng};
use crate::Locale;

/// How masked regions are rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MaskPolicy {
    /// `[NAME]`, `[PHONE_FAX]`, ...
    CategoryTag,
    /// `[REDACTED]`
    FixedToken,
    /// A surrogate drawn from the locale's pool.
    Surrogate { locale: Locale, seed: u64 },
}

pub const FIXED_TOKEN: &str = "[REDACTED]";

/// Replaces each span of `text` according to `policy`. Text outside spans is
/// kept byte for byte. Spans may arrive in any order but must not overlap.
pub fn mask(text: &str, spans: &[Span], policy: MaskPolicy) -> Result<String, DeidError> {
    let mut sorted = spans.to_vec();
    sorted.sort_by_key(|s| (s.start, s.end));
    for s in &sorted {
        if s.start >= s.end || s.end > text.len() || !text.is_char_boundary(s.start) || !text.is_char_boundary(s.end) {
            return Err(DeidError::InvalidSpan((s.start, s.end)));
        }
    }
    for w in sorted.windows(2) {
        if w[1].start < w[0].end {
            return Err(DeidError::Overlap {
                first: (w[0].start, w[0].end),
                second: (w[1].start, w[1].end),
            });
        }
    }

    // Replacements are chosen left to right so surrogate draws do not depend
    // on application order.
    let replacements: Vec<String> = match policy {
        MaskPolicy::CategoryTag => sorted.iter().map(|s| format!("[{}]", s.category.tag())).collect(),
        MaskPolicy::FixedToken => vec![FIXED_TOKEN.to_string(); sorted.len()],
        MaskPolicy::Surrogate { locale, seed } => {
            let pool = load_pool(locale)?;
            let mut rng = note_rng("mask", seed);
            sorted
                .iter()
                .map(|s| draw(&pool, s.category, s.gender, &mut rng).map(|d| d.value))
                .collect::<Result<_, _>>()?
        }
    };

    let mut out = text.to_string();
    for (s, r) in sorted.iter().zip(&replacements).rev() {
        out.replace_range(s.start..s.end, r);
    }
    Ok(out)
}
