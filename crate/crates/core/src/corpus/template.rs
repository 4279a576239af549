use std::collections::HashMap;

use super::{Gender, PiiCategory};

/// One `{{category:key}}` or `{{name:key:gender}}` occurrence in a template body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placeholder {
    /// Byte range of the whole `{{...}}` in the body.
    pub start: usize,
    pub end: usize,
    pub category: PiiCategory,
    pub key: String,
    pub gender: Gender,
}

/// A note body with typed, keyed placeholders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoteTemplate {
    pub id: String,
    pub body: String,
    pub placeholders: Vec<Placeholder>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PlaceholderError {
    pub placeholder: String,
    pub offset: usize,
    pub reason: String,
}

fn parse_gender(s: &str) -> Option<Gender> {
    match s {
        "f" | "feminine" => Some(Gender::Feminine),
        "m" | "masculine" => Some(Gender::Masculine),
        "u" | "unspecified" => Some(Gender::Unspecified),
        _ => None,
    }
}

fn valid_key(k: &str) -> bool {
    !k.is_empty() && !k.chars().any(|c| c.is_whitespace() || matches!(c, '{' | '}' | ':'))
}

impl NoteTemplate {
    pub(crate) fn parse(id: &str, body: &str) -> Result<NoteTemplate, PlaceholderError> {
        let mut placeholders = Vec::new();
        let mut genders: HashMap<String, Gender> = HashMap::new();
        let mut pos = 0;
        while let Some(rel) = body[pos..].find("{{") {
            let start = pos + rel;
            let inner_start = start + 2;
            let Some(close) = body[inner_start..].find("}}") else {
                return Err(PlaceholderError {
                    placeholder: body[start..].chars().take(40).collect(),
                    offset: start,
                    reason: "unterminated placeholder".into(),
                });
            };
            let end = inner_start + close + 2;
            let inner = &body[inner_start..inner_start + close];
            let fail = |reason: String| PlaceholderError {
                placeholder: body[start..end].to_string(),
                offset: start,
                reason,
            };
            if inner.contains("{{") {
                return Err(fail("nested placeholder".into()));
            }
            let parts: Vec<&str> = inner.split(':').collect();
            if !(2..=3).contains(&parts.len()) {
                return Err(fail("expected `category:key` or `name:key:gender`".into()));
            }
            let category: PiiCategory = parts[0].parse().map_err(|e| fail(format!("{e}")))?;
            let key = parts[1];
            if !valid_key(key) {
                return Err(fail(format!("invalid key `{key}`")));
            }
            let gender = match parts.get(2) {
                None => Gender::Unspecified,
                Some(g) if category == PiiCategory::Name => {
                    parse_gender(g).ok_or_else(|| fail(format!("unknown gender `{g}`")))?
                }
                Some(_) => return Err(fail(format!("category {category} takes no gender"))),
            };
            if category == PiiCategory::Name {
                if let Some(prev) = genders.insert(key.to_string(), gender) {
                    if prev != gender {
                        return Err(fail(format!("name key `{key}` used with genders {prev} and {gender}")));
                    }
                }
            }
            placeholders.push(Placeholder {
                start,
                end,
                category,
                key: key.to_string(),
                gender,
            });
            pos = end;
        }
        Ok(NoteTemplate {
            id: id.to_string(),
            body: body.to_string(),
            placeholders,
        })
    }

    /// Distinct `(category, key)` bindings in first-appearance order.
    pub fn bindings(&self) -> Vec<(PiiCategory, &str, Gender)> {
        let mut seen = Vec::new();
        for p in &self.placeholders {
            if !seen.iter().any(|(c, k, _)| *c == p.category && *k == p.key.as_str()) {
                seen.push((p.category, p.key.as_str(), p.gender));
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_placeholders() {
        let t = NoteTemplate::parse("t", "Seen by {{name:doc1:m}} on {{date:d1}}").unwrap();
        assert_eq!(t.placeholders.len(), 2);
        assert_eq!(t.placeholders[0].category, PiiCategory::Name);
        assert_eq!(t.placeholders[0].gender, Gender::Masculine);
        assert_eq!(t.placeholders[0].key, "doc1");
        assert_eq!(&t.body[t.placeholders[1].start..t.placeholders[1].end], "{{date:d1}}");
    }

    #[test]
    fn unknown_category_is_rejected() {
        let err = NoteTemplate::parse("t", "x {{bogus:x}} y").unwrap_err();
        assert_eq!(err.placeholder, "{{bogus:x}}");
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn no_placeholders_is_fine() {
        let t = NoteTemplate::parse("t", "Plain text, no identifiers.").unwrap();
        assert!(t.placeholders.is_empty());
    }

    #[test]
    fn grammar_violations() {
        for body in [
            "{{name:}}",
            "{{date}}",
            "{{date:a:b:c}}",
            "{{date:d:f}}",
            "{{name:p:x}}",
            "{{name:p:f}} {{name:p:m}}",
            "open {{name:p:f",
            "{{name:a b:f}}",
        ] {
            assert!(NoteTemplate::parse("t", body).is_err(), "{body}");
        }
    }

    #[test]
    fn repeated_keys_bind_once() {
        let t = NoteTemplate::parse("t", "{{name:p:f}} and {{name:p:f}} at {{city:c}}").unwrap();
        assert_eq!(t.placeholders.len(), 3);
        assert_eq!(t.bindings().len(), 2);
    }
}
