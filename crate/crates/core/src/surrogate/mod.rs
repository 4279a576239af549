//! Locale- and gender-aware surrogate generation and template substitution.
//!
//! Every note is generated from a `ChaCha8` stream seeded with the note seed
//! and keyed by the FNV-1a hash of the template id, so `(template, locale,
//! seed)` fully determines the output on every platform.

mod pattern;
mod pool;

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{AnnotatedNote, Gender, NoteTemplate, PiiCategory, Provenance, Span};
pub use crate::locale::Locale;
pub use pattern::Pattern;
pub use pool::{bundled_checksums, load_pool, IdentifierPool, PoolLibrary, SubPool};

#[derive(Debug, thiserror::Error)]
pub enum SurrogateError {
    #[error("pool data for {locale} is corrupt: {reason}")]
    PoolDataCorrupt { locale: String, reason: String },
    #[error("no {category} entries for {locale} (gender {gender}), native or fallback")]
    EmptyPool {
        locale: Locale,
        category: PiiCategory,
        gender: Gender,
    },
    #[error("per-template count must be at least 1")]
    InvalidCount,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A machine-readable notice that a draw used fallback data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FallbackWarning {
    pub locale: Locale,
    pub category: PiiCategory,
}

/// Result of one draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawn {
    pub value: String,
    /// Gender asserted for the surrogate. Unspecified when the first name
    /// came from fallback data, since the locale has no gendered list.
    pub gender: Gender,
    pub fallback: bool,
}

fn pick<'a, R: Rng + ?Sized>(
    rng: &mut R,
    entries: &'a [String],
    pool: &IdentifierPool,
    category: PiiCategory,
    gender: Gender,
) -> Result<&'a str, SurrogateError> {
    if entries.is_empty() {
        return Err(SurrogateError::EmptyPool {
            locale: pool.locale,
            category,
            gender,
        });
    }
    Ok(&entries[rng.random_range(0..entries.len())])
}

/// Draws one surrogate. Names combine a first name from the gendered
/// sub-pool with a surname; list categories draw uniformly; pattern
/// categories expand a uniformly chosen pattern.
pub fn draw<R: Rng + ?Sized>(
    pool: &IdentifierPool,
    category: PiiCategory,
    gender: Gender,
    rng: &mut R,
) -> Result<Drawn, SurrogateError> {
    match category {
        PiiCategory::Name => {
            let (first, first_fallback) = match pool.name_subpool(gender) {
                Some(sub) => (pick(rng, sub.entries(), pool, category, gender)?, sub.fallback),
                None => {
                    // Unspecified: uniform over both sub-pools.
                    let (f, m) = (&pool.name_feminine, &pool.name_masculine);
                    let total = f.entries().len() + m.entries().len();
                    if total == 0 {
                        return Err(SurrogateError::EmptyPool {
                            locale: pool.locale,
                            category,
                            gender,
                        });
                    }
                    let i = rng.random_range(0..total);
                    if i < f.entries().len() {
                        (f.entries()[i].as_str(), f.fallback)
                    } else {
                        (m.entries()[i - f.entries().len()].as_str(), m.fallback)
                    }
                }
            };
            let last = pick(rng, pool.surnames.entries(), pool, category, gender)?;
            Ok(Drawn {
                value: pool.format_name(first, last),
                gender: if first_fallback { Gender::Unspecified } else { gender },
                fallback: first_fallback || pool.surnames.fallback,
            })
        }
        c => {
            if let Some(sub) = pool.list(c) {
                let value = pick(rng, sub.entries(), pool, c, Gender::Unspecified)?.to_string();
                return Ok(Drawn {
                    value,
                    gender: Gender::Unspecified,
                    fallback: sub.fallback,
                });
            }
            let patterns = pool.patterns(c).unwrap_or(&[]);
            if patterns.is_empty() {
                return Err(SurrogateError::EmptyPool {
                    locale: pool.locale,
                    category: c,
                    gender: Gender::Unspecified,
                });
            }
            let p = &patterns[rng.random_range(0..patterns.len())];
            let (users, domains) = (pool.email_users.entries(), pool.email_domains.entries());
            if p.needs_email_parts() && (users.is_empty() || domains.is_empty()) {
                return Err(SurrogateError::EmptyPool {
                    locale: pool.locale,
                    category: c,
                    gender: Gender::Unspecified,
                });
            }
            let email_fallback = p.needs_email_parts() && (pool.email_users.fallback || pool.email_domains.fallback);
            Ok(Drawn {
                value: p.expand(rng, users, domains),
                gender: Gender::Unspecified,
                fallback: pool.is_fallback(c) || email_fallback,
            })
        }
    }
}

/// The surrogate bound to one `(category, key)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub category: PiiCategory,
    pub key: String,
    pub gender: Gender,
    pub value: String,
}

/// Key → surrogate bindings for one generated note. With inconsistent
/// mentions enabled there is one binding per placeholder occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionPlan {
    pub template_id: String,
    pub locale: Locale,
    pub seed: u64,
    pub bindings: Vec<Binding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    pub note: AnnotatedNote,
    pub plan: SubstitutionPlan,
    pub warnings: Vec<FallbackWarning>,
}

fn fnv1a64(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// The generator used for one `(template, seed)` pair.
pub fn note_rng(template_id: &str, seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a64(template_id));
    rng
}

/// Substitutes templates with surrogates from one locale's pool.
#[derive(Debug, Clone)]
pub struct SurrogateGenerator {
    pool: Arc<IdentifierPool>,
    consistent_mentions: bool,
}

impl SurrogateGenerator {
    pub fn new(pool: Arc<IdentifierPool>) -> Self {
        SurrogateGenerator {
            pool,
            consistent_mentions: true,
        }
    }

    pub fn for_locale(locale: Locale) -> Result<Self, SurrogateError> {
        Ok(Self::new(load_pool(locale)?))
    }

    /// When false, every placeholder occurrence draws its own surrogate even
    /// if the key repeats.
    pub fn consistent_mentions(mut self, on: bool) -> Self {
        self.consistent_mentions = on;
        self
    }

    pub fn pool(&self) -> &IdentifierPool {
        &self.pool
    }

    pub fn locale(&self) -> Locale {
        self.pool.locale
    }

    pub fn substitute(&self, template: &NoteTemplate, seed: u64) -> Result<Substitution, SurrogateError> {
        let mut rng = note_rng(&template.id, seed);
        let mut bindings: Vec<Binding> = Vec::new();
        let mut genders: Vec<Gender> = Vec::new();
        let mut warnings: Vec<FallbackWarning> = Vec::new();
        let mut draw_binding = |category, key: &str, gender, bindings: &mut Vec<Binding>| {
            let d = draw(&self.pool, category, gender, &mut rng)?;
            if d.fallback {
                let w = FallbackWarning {
                    locale: self.pool.locale,
                    category,
                };
                if !warnings.contains(&w) {
                    log::debug!("{}: {} surrogates use fallback pool data", w.locale, w.category);
                    warnings.push(w);
                }
            }
            bindings.push(Binding {
                category,
                key: key.to_string(),
                gender,
                value: d.value,
            });
            genders.push(d.gender);
            Ok::<usize, SurrogateError>(bindings.len() - 1)
        };

        let mut slots = Vec::with_capacity(template.placeholders.len());
        if self.consistent_mentions {
            let mut by_key: HashMap<(PiiCategory, &str), usize> = HashMap::new();
            for (category, key, gender) in template.bindings() {
                let idx = draw_binding(category, key, gender, &mut bindings)?;
                by_key.insert((category, key), idx);
            }
            for p in &template.placeholders {
                slots.push(by_key[&(p.category, p.key.as_str())]);
            }
        } else {
            for p in &template.placeholders {
                slots.push(draw_binding(p.category, &p.key, p.gender, &mut bindings)?);
            }
        }

        let mut text = String::with_capacity(template.body.len());
        let mut spans = Vec::with_capacity(slots.len());
        let mut cursor = 0;
        for (p, slot) in template.placeholders.iter().zip(slots) {
            text.push_str(&template.body[cursor..p.start]);
            let start = text.len();
            text.push_str(&bindings[slot].value);
            spans.push(Span::new(start, text.len(), p.category).with_gender(genders[slot]));
            cursor = p.end;
        }
        text.push_str(&template.body[cursor..]);

        let locale = self.pool.locale;
        Ok(Substitution {
            note: AnnotatedNote {
                id: format!("{}#{}#0", template.id, locale),
                text,
                locale,
                spans,
                provenance: Some(Provenance {
                    template_id: template.id.clone(),
                    seed,
                }),
            },
            plan: SubstitutionPlan {
                template_id: template.id.clone(),
                locale,
                seed,
                bindings,
            },
            warnings,
        })
    }

    /// `per_template` notes per template with seeds `seed + i` (wrapping) and
    /// ids `{template_id}#{locale}#{i}`, template-major. Fallback warnings
    /// are deduplicated across the corpus.
    pub fn build_corpus_with_warnings(
        &self,
        templates: &[NoteTemplate],
        seed: u64,
        per_template: usize,
    ) -> Result<(Vec<AnnotatedNote>, Vec<FallbackWarning>), SurrogateError> {
        if per_template == 0 {
            return Err(SurrogateError::InvalidCount);
        }
        let locale = self.pool.locale;
        let per: Vec<Vec<Substitution>> = templates
            .par_iter()
            .map(|t| {
                (0..per_template)
                    .map(|i| {
                        let mut s = self.substitute(t, seed.wrapping_add(i as u64))?;
                        s.note.id = format!("{}#{}#{}", t.id, locale, i);
                        Ok(s)
                    })
                    .collect::<Result<Vec<_>, SurrogateError>>()
            })
            .collect::<Result<_, _>>()?;
        let mut warnings: Vec<FallbackWarning> = Vec::new();
        let mut notes = Vec::with_capacity(templates.len() * per_template);
        for s in per.into_iter().flatten() {
            for w in s.warnings {
                if !warnings.contains(&w) {
                    warnings.push(w);
                }
            }
            notes.push(s.note);
        }
        warnings.sort();
        Ok((notes, warnings))
    }

    pub fn build_corpus(
        &self,
        templates: &[NoteTemplate],
        seed: u64,
        per_template: usize,
    ) -> Result<Vec<AnnotatedNote>, SurrogateError> {
        self.build_corpus_with_warnings(templates, seed, per_template).map(|(n, _)| n)
    }
}

/// Substitutes `template` with the bundled pool for `locale`.
pub fn substitute(template: &NoteTemplate, locale: Locale, seed: u64) -> Result<AnnotatedNote, SurrogateError> {
    Ok(SurrogateGenerator::for_locale(locale)?.substitute(template, seed)?.note)
}

/// Builds a corpus from the bundled pool for `locale`.
pub fn build_corpus(
    templates: &[NoteTemplate],
    locale: Locale,
    seed: u64,
    per_template: usize,
) -> Result<Vec<AnnotatedNote>, SurrogateError> {
    SurrogateGenerator::for_locale(locale)?.build_corpus(templates, seed, per_template)
}

#[cfg(test)]
mod tests;
