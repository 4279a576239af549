//! Line-delimited JSON records for corpora and templates.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{AnnotatedNote, CorpusError, NoteTemplate};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TemplateRecord {
    id: String,
    body: String,
}

/// Calls `f` with each non-blank line and its 1-based line number.
fn for_each_record<R: BufRead>(
    source: R,
    mut f: impl FnMut(usize, &str) -> Result<(), CorpusError>,
) -> Result<(), CorpusError> {
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        f(i + 1, trimmed)?;
    }
    Ok(())
}

pub fn parse_corpus<R: BufRead>(source: R) -> Result<Vec<AnnotatedNote>, CorpusError> {
    let mut notes = Vec::new();
    let mut ids = HashSet::new();
    for_each_record(source, |line, raw| {
        let note: AnnotatedNote = serde_json::from_str(raw).map_err(|e| CorpusError::Parse {
            line,
            message: e.to_string(),
        })?;
        note.validate().map_err(|reason| CorpusError::Validation {
            line,
            id: note.id.clone(),
            reason,
        })?;
        if !ids.insert(note.id.clone()) {
            return Err(CorpusError::Validation {
                line,
                id: note.id.clone(),
                reason: "duplicate note id".into(),
            });
        }
        notes.push(note);
        Ok(())
    })?;
    Ok(notes)
}

pub fn write_corpus<W: Write>(mut out: W, notes: &[AnnotatedNote]) -> Result<(), CorpusError> {
    for note in notes {
        serde_json::to_writer(&mut out, note).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn parse_templates<R: BufRead>(source: R) -> Result<Vec<NoteTemplate>, CorpusError> {
    let mut templates = Vec::new();
    let mut ids = HashSet::new();
    for_each_record(source, |line, raw| {
        let rec: TemplateRecord = serde_json::from_str(raw).map_err(|e| CorpusError::Parse {
            line,
            message: e.to_string(),
        })?;
        if rec.id.is_empty() || !ids.insert(rec.id.clone()) {
            return Err(CorpusError::Validation {
                line,
                id: rec.id,
                reason: "template id is empty or duplicated".into(),
            });
        }
        let t = NoteTemplate::parse(&rec.id, &rec.body).map_err(|e| CorpusError::Placeholder {
            line,
            template_id: rec.id.clone(),
            placeholder: e.placeholder,
            offset: e.offset,
            reason: e.reason,
        })?;
        templates.push(t);
        Ok(())
    })?;
    Ok(templates)
}

pub fn write_templates<W: Write>(mut out: W, templates: &[NoteTemplate]) -> Result<(), CorpusError> {
    for t in templates {
        let rec = TemplateRecord {
            id: t.id.clone(),
            body: t.body.clone(),
        };
        serde_json::to_writer(&mut out, &rec).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}
