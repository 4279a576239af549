//! Bundled per-locale identifier pools.
//!
//! Each locale has a `<locale>.pool` file of `[section]` headers followed by
//! one entry per line, and `manifest.toml` records the expected entry count
//! per section, the SHA-256 of each file, and which sections are declared to
//! fall back to the fallback locale (en_US).

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Deserialize;
use sha2::{Digest, Sha256};

use super::pattern::Pattern;
use super::SurrogateError;
use crate::corpus::{Gender, PiiCategory};
use crate::locale::Locale;

const BUNDLED_MANIFEST: &str = include_str!("../../data/pools/manifest.toml");
const BUNDLED_FILES: [(&str, &str); 9] = [
    ("en_US.pool", include_str!("../../data/pools/en_US.pool")),
    ("en_GB.pool", include_str!("../../data/pools/en_GB.pool")),
    ("en_AU.pool", include_str!("../../data/pools/en_AU.pool")),
    ("en_CA.pool", include_str!("../../data/pools/en_CA.pool")),
    ("zh.pool", include_str!("../../data/pools/zh.pool")),
    ("es.pool", include_str!("../../data/pools/es.pool")),
    ("hi.pool", include_str!("../../data/pools/hi.pool")),
    ("fr.pool", include_str!("../../data/pools/fr.pool")),
    ("bn.pool", include_str!("../../data/pools/bn.pool")),
];

const NAME_FORMAT: &str = "format.name";
const FEMININE: &str = "name.feminine";
const MASCULINE: &str = "name.masculine";
const SURNAME: &str = "surname";
const EMAIL_USER: &str = "email.user";
const EMAIL_DOMAIN: &str = "email.domain";

/// Every section a complete pool has, natively or through fallback.
const SECTIONS: [&str; 17] = [
    NAME_FORMAT,
    FEMININE,
    MASCULINE,
    SURNAME,
    "hospital",
    "city",
    "state",
    "address",
    "country",
    "company",
    "university",
    EMAIL_USER,
    EMAIL_DOMAIN,
    "pattern.phone_fax",
    "pattern.date",
    "pattern.email",
    "pattern.other",
];

const LIST_CATEGORIES: [PiiCategory; 7] = [
    PiiCategory::Hospital,
    PiiCategory::City,
    PiiCategory::State,
    PiiCategory::Address,
    PiiCategory::Country,
    PiiCategory::Company,
    PiiCategory::University,
];

const PATTERN_CATEGORIES: [PiiCategory; 4] = [
    PiiCategory::PhoneFax,
    PiiCategory::Date,
    PiiCategory::Email,
    PiiCategory::Other,
];

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    fallback_locale: Locale,
    locales: BTreeMap<Locale, ManifestEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestEntry {
    file: String,
    sha256: String,
    #[serde(default)]
    fallback: Vec<String>,
    counts: BTreeMap<String, usize>,
}

/// Entries of one pool section. When the locale has no native data the
/// entries come from the fallback locale and `fallback` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPool {
    pub native: Vec<String>,
    pub fallback_entries: Vec<String>,
    pub fallback: bool,
}

impl SubPool {
    fn native(entries: Vec<String>) -> Self {
        SubPool {
            native: entries,
            fallback_entries: Vec::new(),
            fallback: false,
        }
    }

    /// The entries draws use: native ones, or the fallback's.
    pub fn entries(&self) -> &[String] {
        if self.fallback {
            &self.fallback_entries
        } else {
            &self.native
        }
    }
}

/// Identifier lists and synthesis patterns for one locale.
#[derive(Debug, Clone)]
pub struct IdentifierPool {
    pub locale: Locale,
    pub checksum: String,
    pub(crate) name_format: String,
    pub name_feminine: SubPool,
    pub name_masculine: SubPool,
    pub surnames: SubPool,
    pub(crate) lists: BTreeMap<PiiCategory, SubPool>,
    pub(crate) patterns: BTreeMap<PiiCategory, (Vec<Pattern>, bool)>,
    pub(crate) email_users: SubPool,
    pub(crate) email_domains: SubPool,
}

impl IdentifierPool {
    /// Whether draws for `category` use declared fallback data. For names this
    /// is true when either gendered sub-pool or the surname list falls back.
    pub fn is_fallback(&self, category: PiiCategory) -> bool {
        match category {
            PiiCategory::Name => {
                self.name_feminine.fallback || self.name_masculine.fallback || self.surnames.fallback
            }
            c if LIST_CATEGORIES.contains(&c) => self.lists[&c].fallback,
            c => self.patterns[&c].1,
        }
    }

    pub fn name_subpool(&self, gender: Gender) -> Option<&SubPool> {
        match gender {
            Gender::Feminine => Some(&self.name_feminine),
            Gender::Masculine => Some(&self.name_masculine),
            Gender::Unspecified => None,
        }
    }

    /// Entries of a list-backed category; `None` for names and pattern-backed
    /// categories.
    pub fn list(&self, category: PiiCategory) -> Option<&SubPool> {
        self.lists.get(&category)
    }

    pub fn patterns(&self, category: PiiCategory) -> Option<&[Pattern]> {
        self.patterns.get(&category).map(|(p, _)| p.as_slice())
    }

    pub(crate) fn format_name(&self, first: &str, last: &str) -> String {
        self.name_format.replace("{first}", first).replace("{last}", last)
    }

    /// A pool with the given lists, for tests and custom data. Pattern-backed
    /// categories take their patterns from `patterns`.
    pub fn from_parts(
        locale: Locale,
        feminine: Vec<String>,
        masculine: Vec<String>,
        surnames: Vec<String>,
        lists: BTreeMap<PiiCategory, Vec<String>>,
        patterns: BTreeMap<PiiCategory, Vec<String>>,
    ) -> Result<IdentifierPool, SurrogateError> {
        let corrupt = |reason: String| SurrogateError::PoolDataCorrupt {
            locale: locale.to_string(),
            reason,
        };
        let mut compiled = BTreeMap::new();
        for c in PATTERN_CATEGORIES {
            let srcs = patterns.get(&c).cloned().unwrap_or_default();
            let ps = srcs
                .iter()
                .map(|s| Pattern::parse(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(corrupt)?;
            compiled.insert(c, (ps, false));
        }
        Ok(IdentifierPool {
            locale,
            checksum: String::new(),
            name_format: "{first} {last}".into(),
            name_feminine: SubPool::native(feminine),
            name_masculine: SubPool::native(masculine),
            surnames: SubPool::native(surnames),
            lists: LIST_CATEGORIES
                .iter()
                .map(|c| (*c, SubPool::native(lists.get(c).cloned().unwrap_or_default())))
                .collect(),
            patterns: compiled,
            email_users: SubPool::native(vec!["user".into()]),
            email_domains: SubPool::native(vec!["example.org".into()]),
        })
    }
}

/// Parses `[section]` blocks. Lines starting with `#` before the first
/// section are comments; inside sections every non-empty line is an entry.
fn parse_sections(text: &str) -> Result<BTreeMap<String, Vec<String>>, String> {
    let mut sections: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if !SECTIONS.contains(&name) {
                return Err(format!("line {}: unknown section `{name}`", i + 1));
            }
            if sections.insert(name.to_string(), Vec::new()).is_some() {
                return Err(format!("line {}: section `{name}` repeated", i + 1));
            }
            current = Some(name.to_string());
            continue;
        }
        match &current {
            None if line.starts_with('#') => continue,
            None => return Err(format!("line {}: entry outside any section", i + 1)),
            Some(name) => {
                if line.trim() != line {
                    return Err(format!("line {}: entry has surrounding whitespace", i + 1));
                }
                if line.contains("{{") || line.contains("}}") {
                    return Err(format!("line {}: entry contains placeholder syntax", i + 1));
                }
                sections.get_mut(name).expect("current section exists").push(line.to_string());
            }
        }
    }
    Ok(sections)
}

/// Raw, validated section data for one locale before fallback filling.
#[derive(Debug, Clone)]
struct RawPool {
    sections: BTreeMap<String, Vec<String>>,
    fallback: HashSet<String>,
    checksum: String,
}

/// Pool files plus their manifest, either bundled or read from a directory.
#[derive(Debug, Clone)]
pub struct PoolLibrary {
    manifest: Manifest,
    files: HashMap<String, String>,
}

impl PoolLibrary {
    pub fn bundled() -> PoolLibrary {
        Self::from_parts(
            BUNDLED_MANIFEST,
            BUNDLED_FILES.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect(),
        )
        .expect("bundled pool manifest parses")
    }

    /// Reads `manifest.toml` and the files it names from `dir`.
    pub fn from_dir(dir: &Path) -> Result<PoolLibrary, SurrogateError> {
        let manifest_text = std::fs::read_to_string(dir.join("manifest.toml"))?;
        let manifest: Manifest = toml::from_str(&manifest_text).map_err(|e| SurrogateError::PoolDataCorrupt {
            locale: "*".into(),
            reason: format!("manifest: {e}"),
        })?;
        let mut files = HashMap::new();
        for entry in manifest.locales.values() {
            files.insert(entry.file.clone(), std::fs::read_to_string(dir.join(&entry.file))?);
        }
        Ok(PoolLibrary { manifest, files })
    }

    pub fn from_parts(manifest: &str, files: HashMap<String, String>) -> Result<PoolLibrary, SurrogateError> {
        let manifest: Manifest = toml::from_str(manifest).map_err(|e| SurrogateError::PoolDataCorrupt {
            locale: "*".into(),
            reason: format!("manifest: {e}"),
        })?;
        Ok(PoolLibrary { manifest, files })
    }

    /// SHA-256 of every locale's pool file as recorded in the manifest.
    pub fn checksums(&self) -> BTreeMap<Locale, String> {
        self.manifest
            .locales
            .iter()
            .map(|(l, e)| (*l, e.sha256.clone()))
            .collect()
    }

    fn raw(&self, locale: Locale) -> Result<RawPool, SurrogateError> {
        let corrupt = |reason: String| SurrogateError::PoolDataCorrupt {
            locale: locale.to_string(),
            reason,
        };
        let entry = self
            .manifest
            .locales
            .get(&locale)
            .ok_or_else(|| corrupt("locale missing from manifest".into()))?;
        let text = self
            .files
            .get(&entry.file)
            .ok_or_else(|| corrupt(format!("pool file `{}` missing", entry.file)))?;
        let checksum = hex::encode(Sha256::digest(text.as_bytes()));
        if checksum != entry.sha256 {
            return Err(corrupt(format!(
                "checksum mismatch for `{}`: manifest {}, file {}",
                entry.file, entry.sha256, checksum
            )));
        }
        let sections = parse_sections(text).map_err(corrupt)?;
        for (name, expected) in &entry.counts {
            let got = sections.get(name).map_or(0, Vec::len);
            if got != *expected {
                return Err(corrupt(format!("section `{name}` has {got} entries, manifest says {expected}")));
            }
        }
        if let Some(extra) = sections.keys().find(|k| !entry.counts.contains_key(*k)) {
            return Err(corrupt(format!("section `{extra}` not listed in manifest counts")));
        }
        let fallback: HashSet<String> = entry.fallback.iter().cloned().collect();
        for name in SECTIONS {
            let present = sections.get(name).is_some_and(|v| !v.is_empty());
            let declared = fallback.contains(name);
            if present && declared {
                return Err(corrupt(format!("section `{name}` is both native and declared fallback")));
            }
            if !present && !declared {
                return Err(corrupt(format!("section `{name}` is missing and not declared fallback")));
            }
        }
        if let (Some(f), Some(m)) = (sections.get(FEMININE), sections.get(MASCULINE)) {
            let fem: HashSet<_> = f.iter().collect();
            if let Some(both) = m.iter().find(|n| fem.contains(n)) {
                return Err(corrupt(format!("`{both}` is in both gendered name sub-pools")));
            }
        }
        Ok(RawPool {
            sections,
            fallback,
            checksum,
        })
    }

    pub fn load(&self, locale: Locale) -> Result<IdentifierPool, SurrogateError> {
        let raw = self.raw(locale)?;
        let base = if raw.fallback.is_empty() {
            None
        } else {
            let fb = self.manifest.fallback_locale;
            let base = self.raw(fb)?;
            if !base.fallback.is_empty() {
                return Err(SurrogateError::PoolDataCorrupt {
                    locale: fb.to_string(),
                    reason: "the fallback locale itself declares fallbacks".into(),
                });
            }
            Some(base)
        };
        let sub = |name: &str| -> SubPool {
            if raw.fallback.contains(name) {
                SubPool {
                    native: Vec::new(),
                    fallback_entries: base.as_ref().expect("fallback base loaded").sections[name].clone(),
                    fallback: true,
                }
            } else {
                SubPool::native(raw.sections[name].clone())
            }
        };
        let corrupt = |reason: String| SurrogateError::PoolDataCorrupt {
            locale: locale.to_string(),
            reason,
        };
        let name_format = sub(NAME_FORMAT).entries()[0].clone();
        if !name_format.contains("{first}") || !name_format.contains("{last}") {
            return Err(corrupt(format!("name format `{name_format}` lacks {{first}} or {{last}}")));
        }
        let mut patterns = BTreeMap::new();
        for c in PATTERN_CATEGORIES {
            let section = format!("pattern.{}", c.as_str());
            let s = sub(&section);
            let compiled = s
                .entries()
                .iter()
                .map(|p| Pattern::parse(p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(corrupt)?;
            patterns.insert(c, (compiled, s.fallback));
        }
        Ok(IdentifierPool {
            locale,
            checksum: raw.checksum.clone(),
            name_format,
            name_feminine: sub(FEMININE),
            name_masculine: sub(MASCULINE),
            surnames: sub(SURNAME),
            lists: LIST_CATEGORIES.iter().map(|c| (*c, sub(c.as_str()))).collect(),
            patterns,
            email_users: sub(EMAIL_USER),
            email_domains: sub(EMAIL_DOMAIN),
        })
    }
}

/// Loads the bundled pool for `locale`. Pools are parsed once and shared.
pub fn load_pool(locale: Locale) -> Result<Arc<IdentifierPool>, SurrogateError> {
    static LIBRARY: OnceLock<PoolLibrary> = OnceLock::new();
    static CACHE: OnceLock<Mutex<HashMap<Locale, Arc<IdentifierPool>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("pool cache poisoned").get(&locale) {
        return Ok(Arc::clone(p));
    }
    let pool = Arc::new(LIBRARY.get_or_init(PoolLibrary::bundled).load(locale)?);
    cache
        .lock()
        .expect("pool cache poisoned")
        .insert(locale, Arc::clone(&pool));
    Ok(pool)
}

/// Checksums of the bundled pool files, keyed by locale.
pub fn bundled_checksums() -> BTreeMap<Locale, String> {
    PoolLibrary::bundled().checksums()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundled_files() -> HashMap<String, String> {
        BUNDLED_FILES.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect()
    }

    #[test]
    fn en_us_is_fully_native() {
        let pool = load_pool(Locale::EnUs).unwrap();
        for c in PiiCategory::ALL {
            assert!(!pool.is_fallback(c), "{c}");
        }
        let manifest: Manifest = toml::from_str(BUNDLED_MANIFEST).unwrap();
        let counts = &manifest.locales[&Locale::EnUs].counts;
        assert_eq!(pool.name_feminine.native.len(), counts[FEMININE]);
        assert_eq!(pool.surnames.native.len(), counts[SURNAME]);
        for c in LIST_CATEGORIES {
            assert_eq!(pool.list(c).unwrap().native.len(), counts[c.as_str()], "{c}");
        }
    }

    #[test]
    fn australian_names_fall_back() {
        let pool = load_pool(Locale::EnAu).unwrap();
        assert!(pool.name_feminine.native.is_empty());
        assert!(pool.name_feminine.fallback);
        assert!(!pool.name_feminine.entries().is_empty());
        assert!(pool.is_fallback(PiiCategory::Name));
        assert!(!pool.is_fallback(PiiCategory::City));
        assert!(load_pool(Locale::EnCa).unwrap().name_masculine.fallback);
    }

    #[test]
    fn every_locale_loads() {
        for l in Locale::ALL {
            let pool = load_pool(l).unwrap();
            for c in LIST_CATEGORIES {
                assert!(!pool.list(c).unwrap().entries().is_empty(), "{l} {c}");
            }
        }
    }

    #[test]
    fn truncated_file_is_corrupt() {
        let mut files = bundled_files();
        let text = files.get_mut("fr.pool").unwrap();
        let cut = text.len() / 2;
        let cut = (0..=cut).rev().find(|i| text.is_char_boundary(*i)).unwrap();
        text.truncate(cut);
        let lib = PoolLibrary::from_parts(BUNDLED_MANIFEST, files).unwrap();
        assert!(matches!(lib.load(Locale::Fr), Err(SurrogateError::PoolDataCorrupt { .. })));
        assert!(lib.load(Locale::Es).is_ok());
    }

    #[test]
    fn count_mismatch_is_corrupt_even_with_matching_checksum() {
        let mut files = bundled_files();
        let text = files.get_mut("es.pool").unwrap();
        text.push_str("Extra Entry\n");
        let sum = hex::encode(Sha256::digest(text.as_bytes()));
        let mut manifest: toml::Table = toml::from_str(BUNDLED_MANIFEST).unwrap();
        manifest["locales"]["es"]["sha256"] = toml::Value::String(sum);
        let lib = PoolLibrary::from_parts(&toml::to_string(&manifest).unwrap(), files).unwrap();
        let err = lib.load(Locale::Es).unwrap_err();
        assert!(err.to_string().contains("pattern.other"), "{err}");
    }

    #[test]
    fn section_parser_rejects_garbage() {
        assert!(parse_sections("stray\n").is_err());
        assert!(parse_sections("[bogus]\nx\n").is_err());
        assert!(parse_sections("[city]\n{{city:a}}\n").is_err());
        assert!(parse_sections("[city]\n a\n").is_err());
        assert!(parse_sections("[city]\na\n[city]\nb\n").is_err());
        let ok = parse_sections("# comment\n[city]\nParis\n\nLyon\n").unwrap();
        assert_eq!(ok["city"], ["Paris", "Lyon"]);
    }
}
