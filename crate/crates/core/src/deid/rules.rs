use std::collections::{BTreeMap, HashMap, HashSet};

use regex::Regex;
use serde::Deserialize;

use super::{resolve, DeidError, Prediction};
use crate::corpus::{tokenize, AnnotatedNote, PiiCategory, Span};
use crate::surrogate::{load_pool, IdentifierPool};
use crate::Locale;

pub const DEFAULT_RULES: &str = include_str!("../../data/rules/default.toml");

/// One compiled regular-expression rule.
#[derive(Debug, Clone)]
pub struct PatternRule {
    pub name: String,
    pub category: PiiCategory,
    pub priority: i32,
    pub regex: Regex,
}

/// A phrase list matched on token boundaries. Lookups are case-insensitive;
/// entries are stored lower-cased with whitespace collapsed.
#[derive(Debug, Clone)]
pub struct Dictionary {
    pub category: PiiCategory,
    pub priority: i32,
    phrases: HashSet<String>,
    max_tokens: usize,
}

impl Dictionary {
    pub fn new<I, S>(category: PiiCategory, priority: i32, entries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut phrases = HashSet::new();
        let mut max_tokens = 0;
        for e in entries {
            let norm = normalize(e.as_ref());
            if norm.is_empty() {
                continue;
            }
            max_tokens = max_tokens.max(tokenize(&norm).len());
            phrases.insert(norm);
        }
        Dictionary {
            category,
            priority,
            phrases,
            max_tokens,
        }
    }

    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn contains(&self, phrase: &str) -> bool {
        self.phrases.contains(&normalize(phrase))
    }
}

/// Lower-cases and collapses runs of whitespace to one space.
pub fn normalize(s: &str) -> String {
    s.split_whitespace()
        .map(str::to_lowercase)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleFile {
    #[serde(default = "yes")]
    require_capitalized: bool,
    #[serde(default)]
    exclusions: Vec<String>,
    #[serde(default)]
    dictionary_priority: BTreeMap<PiiCategory, i32>,
    #[serde(default)]
    pattern: Vec<RuleRecord>,
}

fn yes() -> bool {
    true
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleRecord {
    name: String,
    category: PiiCategory,
    priority: i32,
    regex: String,
}

/// Patterns, dictionaries and the exclusion list of the rule engine.
#[derive(Debug, Clone)]
pub struct RuleSet {
    patterns: Vec<PatternRule>,
    dictionaries: Vec<Dictionary>,
    exclusions: HashSet<String>,
    require_capitalized: bool,
}

impl RuleSet {
    /// Builds a rule set, checking that priorities are unique across patterns
    /// and dictionaries. Exclusions are normalized.
    pub fn new(
        patterns: Vec<PatternRule>,
        dictionaries: Vec<Dictionary>,
        exclusions: impl IntoIterator<Item = String>,
        require_capitalized: bool,
    ) -> Result<RuleSet, DeidError> {
        let mut seen = HashMap::new();
        let owners = patterns
            .iter()
            .map(|p| (p.priority, p.name.clone()))
            .chain(dictionaries.iter().map(|d| (d.priority, format!("{} dictionary", d.category))));
        for (prio, owner) in owners {
            if let Some(prev) = seen.insert(prio, owner.clone()) {
                return Err(DeidError::InvalidRules(format!(
                    "priority {prio} is used by both {prev} and {owner}"
                )));
            }
        }
        let mut patterns = patterns;
        patterns.sort_by_key(|p| std::cmp::Reverse(p.priority));
        Ok(RuleSet {
            patterns,
            dictionaries,
            exclusions: exclusions.into_iter().map(|e| normalize(&e)).collect(),
            require_capitalized,
        })
    }

    /// Parses a rule file. Dictionary priorities declared in the file are
    /// applied to the dictionaries built from `pool`; categories without a
    /// declared priority get no dictionary.
    pub fn from_toml(src: &str, pool: Option<&IdentifierPool>) -> Result<RuleSet, DeidError> {
        let file: RuleFile = toml::from_str(src).map_err(|e| DeidError::InvalidRules(e.to_string()))?;
        let mut patterns = Vec::with_capacity(file.pattern.len());
        for r in file.pattern {
            let regex = Regex::new(&r.regex)
                .map_err(|e| DeidError::InvalidRules(format!("rule {}: {e}", r.name)))?;
            patterns.push(PatternRule {
                name: r.name,
                category: r.category,
                priority: r.priority,
                regex,
            });
        }
        let mut dictionaries = Vec::new();
        if let Some(pool) = pool {
            for (&category, &priority) in &file.dictionary_priority {
                let entries = pool_entries(pool, category);
                if !entries.is_empty() {
                    dictionaries.push(Dictionary::new(category, priority, entries));
                }
            }
        }
        RuleSet::new(patterns, dictionaries, file.exclusions, file.require_capitalized)
    }

    /// The bundled rules with dictionaries from the en_US pool.
    pub fn default_rules() -> Result<RuleSet, DeidError> {
        let pool = load_pool(Locale::EnUs)?;
        RuleSet::from_toml(DEFAULT_RULES, Some(&pool))
    }

    pub fn patterns(&self) -> &[PatternRule] {
        &self.patterns
    }

    pub fn dictionaries(&self) -> &[Dictionary] {
        &self.dictionaries
    }

    pub fn is_excluded(&self, text: &str) -> bool {
        self.exclusions.contains(&normalize(text))
    }

    /// Finds PII spans in `text`. Overlapping candidates are resolved by
    /// priority, then length, then position.
    pub fn apply(&self, text: &str) -> Vec<Span> {
        let mut candidates = Vec::new();
        for rule in &self.patterns {
            for caps in rule.regex.captures_iter(text) {
                let m = caps.name("pii").or_else(|| caps.get(0)).expect("group 0 always matches");
                if m.start() < m.end() {
                    candidates.push(Candidate {
                        start: m.start(),
                        end: m.end(),
                        category: rule.category,
                        priority: rule.priority,
                    });
                }
            }
        }
        if !self.dictionaries.is_empty() {
            self.dictionary_hits(text, &mut candidates);
        }
        candidates.retain(|c| !self.is_excluded(&text[c.start..c.end]));
        resolve(candidates)
    }

    fn dictionary_hits(&self, text: &str, out: &mut Vec<Candidate>) {
        let tokens = tokenize(text);
        let max = self.dictionaries.iter().map(|d| d.max_tokens).max().unwrap_or(0);
        for i in 0..tokens.len() {
            let first = tokens[i].text.chars().next().expect("tokens are non-empty");
            if self.require_capitalized && first.is_lowercase() {
                continue;
            }
            if !first.is_alphanumeric() {
                continue;
            }
            let mut phrase = String::new();
            for j in i..tokens.len().min(i + max) {
                if j > i {
                    let gap = &text[tokens[j - 1].end..tokens[j].start];
                    if gap.contains('\n') {
                        break;
                    }
                    if !gap.is_empty() {
                        phrase.push(' ');
                    }
                }
                phrase.push_str(&tokens[j].text.to_lowercase());
                for d in &self.dictionaries {
                    if j - i < d.max_tokens && d.phrases.contains(&phrase) {
                        out.push(Candidate {
                            start: tokens[i].start,
                            end: tokens[j].end,
                            category: d.category,
                            priority: d.priority,
                        });
                    }
                }
            }
        }
    }

    pub fn deidentify_note(&self, note: &AnnotatedNote) -> Prediction {
        Prediction {
            note_id: note.id.clone(),
            spans: self.apply(&note.text),
        }
    }
}

/// Entries a pool offers as dictionary phrases for one category. Names use
/// first names of both genders and surnames as separate words.
fn pool_entries(pool: &IdentifierPool, category: PiiCategory) -> Vec<String> {
    match category {
        PiiCategory::Name => pool
            .name_feminine
            .entries()
            .iter()
            .chain(pool.name_masculine.entries())
            .chain(pool.surnames.entries())
            .cloned()
            .collect(),
        c => pool.list(c).map(|s| s.entries().to_vec()).unwrap_or_default(),
    }
}

/// A span proposed by one rule before overlap resolution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub start: usize,
    pub end: usize,
    pub category: PiiCategory,
    pub priority: i32,
}

/// Applies `rules` to `text`.
pub fn deid_rules(text: &str, rules: &RuleSet) -> Vec<Span> {
    rules.apply(text)
}
