use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::sync::OnceLock;
use std::time::Duration;

use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};

/// Default judge prompt with `{original_sentence}` and `{masked_sentence}`
/// slots. Replaceable through [`PromptTemplate::from_file`].
pub const DEFAULT_PROMPT: &str = include_str!("../../data/prompts/cire.txt");

#[derive(Debug, thiserror::Error)]
pub enum JudgeError {
    #[error("judge request failed: {0}")]
    Transport(String),
    #[error("judge reply has an unexpected shape: {0}")]
    BadReply(String),
    #[error("judge credentials missing: environment variable {0} is not set")]
    MissingToken(String),
}

#[derive(Debug, thiserror::Error)]
pub enum CireError {
    #[error("judge unavailable: {0}")]
    JudgeUnavailable(#[from] JudgeError),
    #[error("verdict for sentence {sentence_id} unparseable after retry: {raw:?}")]
    UnparseableVerdict { sentence_id: String, raw: String },
    #[error("{originals} originals but {masked} masked texts")]
    LengthMismatch { originals: usize, masked: usize },
    #[error("prompt template lacks the {0} slot")]
    BadTemplate(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Changed,
    Unchanged,
}

/// Reads a verdict: the reply must contain exactly one of the words CHANGED
/// or UNCHANGED (upper case, as whole words).
pub fn parse_verdict(reply: &str) -> Option<Verdict> {
    static WORDS: OnceLock<Regex> = OnceLock::new();
    let re = WORDS.get_or_init(|| Regex::new(r"\b(UN)?CHANGED\b").expect("static regex"));
    let mut found = None;
    for c in re.captures_iter(reply) {
        let v = if c.get(1).is_some() {
            Verdict::Unchanged
        } else {
            Verdict::Changed
        };
        match found {
            None => found = Some(v),
            Some(prev) if prev != v => return None,
            _ => {}
        }
    }
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromptTemplate(String);

impl PromptTemplate {
    pub fn new(text: impl Into<String>) -> Result<Self, CireError> {
        let text = text.into();
        for slot in ["{original_sentence}", "{masked_sentence}"] {
            if !text.contains(slot) {
                return Err(CireError::BadTemplate(slot));
            }
        }
        Ok(PromptTemplate(text))
    }

    pub fn from_file(path: &Path) -> Result<Self, CireError> {
        PromptTemplate::new(std::fs::read_to_string(path)?)
    }

    pub fn render(&self, original: &str, masked: &str) -> String {
        self.0
            .replace("{original_sentence}", original)
            .replace("{masked_sentence}", masked)
    }

    pub fn text(&self) -> &str {
        &self.0
    }
}

impl Default for PromptTemplate {
    fn default() -> Self {
        PromptTemplate(DEFAULT_PROMPT.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JudgeRequest {
    pub sentence_id: String,
    pub prompt: String,
    pub original: String,
    pub masked: String,
    /// 0 for the first ask, 1 for the retry.
    pub attempt: u32,
}

/// Something that answers a rendered prompt with free text.
pub trait Judge: Send + Sync {
    fn ask(&self, request: &JudgeRequest) -> Result<String, JudgeError>;
}

impl<F> Judge for F
where
    F: Fn(&JudgeRequest) -> Result<String, JudgeError> + Send + Sync,
{
    fn ask(&self, request: &JudgeRequest) -> Result<String, JudgeError> {
        self(request)
    }
}

/// OpenAI-style chat completion endpoint used as a judge at temperature 0.
#[derive(Debug, Clone)]
pub struct ChatJudge {
    pub url: String,
    pub model: String,
    token: Option<String>,
    agent: ureq::Agent,
}

impl ChatJudge {
    /// Reads the bearer token from `token_env` when it is set.
    pub fn new(url: impl Into<String>, model: impl Into<String>, token_env: &str, timeout: Duration) -> Self {
        let agent: ureq::Agent = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .http_status_as_error(false)
            .build()
            .into();
        ChatJudge {
            url: url.into(),
            model: model.into(),
            token: std::env::var(token_env).ok(),
            agent,
        }
    }
}

impl Judge for ChatJudge {
    fn ask(&self, request: &JudgeRequest) -> Result<String, JudgeError> {
        let body = serde_json::json!({
            "model": self.model,
            "temperature": 0,
            "messages": [{"role": "user", "content": request.prompt}],
        });
        let mut req = self.agent.post(&self.url);
        if let Some(t) = &self.token {
            req = req.header("Authorization", &format!("Bearer {t}"));
        }
        let mut resp = req.send_json(&body).map_err(|e| JudgeError::Transport(e.to_string()))?;
        let status = resp.status().as_u16();
        let raw = resp
            .body_mut()
            .read_to_string()
            .map_err(|e| JudgeError::Transport(e.to_string()))?;
        if status != 200 {
            return Err(JudgeError::Transport(format!("status {status}: {raw}")));
        }
        let v: serde_json::Value = serde_json::from_str(&raw).map_err(|_| JudgeError::BadReply(raw.clone()))?;
        v["choices"][0]["message"]["content"]
            .as_str()
            .map(str::to_string)
            .ok_or(JudgeError::BadReply(raw))
    }
}

/// Byte ranges of sentences. A sentence ends after `.`, `!` or `?` followed
/// by whitespace or the end of text, except inside square brackets (mask
/// tags). Surrounding whitespace is trimmed and empty sentences skipped.
pub fn split_sentences(text: &str) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut depth = 0usize;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            '.' | '!' | '?' if depth == 0 => {
                let at_break = chars.peek().is_none_or(|&(_, n)| n.is_whitespace());
                if at_break {
                    push_trimmed(text, start, i + 1, &mut out);
                    start = i + 1;
                }
            }
            _ => {}
        }
    }
    push_trimmed(text, start, text.len(), &mut out);
    out
}

fn push_trimmed(text: &str, start: usize, end: usize, out: &mut Vec<(usize, usize)>) {
    let s = &text[start..end];
    let lead = s.len() - s.trim_start().len();
    let trimmed = s.trim();
    if !trimmed.is_empty() {
        out.push((start + lead, start + lead + trimmed.len()));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptEntry {
    pub sentence_id: String,
    pub attempt: u32,
    pub prompt: String,
    pub reply: String,
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoteCire {
    pub note_id: String,
    pub sentences: usize,
    pub changed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CireReport {
    pub sentence_total: usize,
    pub sentence_changed: usize,
    /// Fraction of original sentences judged unchanged; 1.0 for no sentences.
    pub cire: f64,
    pub judge_calls: usize,
    pub per_note: Vec<NoteCire>,
    #[serde(skip)]
    pub transcript: Vec<TranscriptEntry>,
}

impl CireReport {
    /// Writes the judge transcript, one record per line.
    pub fn write_transcript(&self, path: &Path) -> Result<(), CireError> {
        let mut w = BufWriter::new(File::create(path)?);
        for t in &self.transcript {
            serde_json::to_writer(&mut w, t).map_err(std::io::Error::from)?;
            w.write_all(b"\n")?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CireOptions {
    pub template: PromptTemplate,
    /// Upper bound on concurrent judge calls.
    pub concurrency: usize,
}

impl Default for CireOptions {
    fn default() -> Self {
        CireOptions {
            template: PromptTemplate::default(),
            concurrency: 4,
        }
    }
}

/// A run of original sentences to judge against a run of masked ones.
struct Job {
    note: usize,
    sentence_id: String,
    originals: usize,
    original: String,
    masked: String,
}

/// Pairs sentences by longest common subsequence over identical sentences.
/// Returns runs `(orig_range, masked_range)` between matches that differ.
fn unmatched_runs(orig: &[&str], masked: &[&str]) -> Vec<((usize, usize), (usize, usize))> {
    let (n, m) = (orig.len(), masked.len());
    let mut lcs = vec![vec![0u32; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            lcs[i][j] = if orig[i] == masked[j] {
                lcs[i + 1][j + 1] + 1
            } else {
                lcs[i + 1][j].max(lcs[i][j + 1])
            };
        }
    }
    let mut runs = Vec::new();
    let (mut i, mut j) = (0, 0);
    let (mut ri, mut rj) = (0, 0);
    while i < n && j < m {
        if orig[i] == masked[j] {
            if (ri, rj) != (i, j) {
                runs.push(((ri, i), (rj, j)));
            }
            i += 1;
            j += 1;
            ri = i;
            rj = j;
        } else if lcs[i + 1][j] >= lcs[i][j + 1] {
            i += 1;
        } else {
            j += 1;
        }
    }
    if (ri, rj) != (n, m) {
        runs.push(((ri, n), (rj, m)));
    }
    runs
}

/// Clinical information retention: the fraction of original sentences whose
/// clinical content the judge considers unchanged after masking.
///
/// Identical notes and identical sentences never reach the judge. Runs of
/// differing sentences are paired one to one when both sides have the same
/// length. Otherwise masking changed sentence boundaries, and the run of
/// originals is judged as one pair and the verdict applies to each sentence in it; an
/// original run with nothing left on the masked side counts as changed.
pub fn cire(
    originals: &[(&str, &str)],
    masked: &[String],
    judge: &dyn Judge,
    options: &CireOptions,
) -> Result<CireReport, CireError> {
    if originals.len() != masked.len() {
        return Err(CireError::LengthMismatch {
            originals: originals.len(),
            masked: masked.len(),
        });
    }
    let mut per_note = Vec::with_capacity(originals.len());
    let mut jobs = Vec::new();
    for (ni, ((id, text), masked_text)) in originals.iter().zip(masked).enumerate() {
        let o: Vec<&str> = split_sentences(text).into_iter().map(|(s, e)| &text[s..e]).collect();
        per_note.push(NoteCire {
            note_id: id.to_string(),
            sentences: o.len(),
            changed: 0,
        });
        if text == masked_text {
            continue;
        }
        let m: Vec<&str> = split_sentences(masked_text)
            .into_iter()
            .map(|(s, e)| &masked_text[s..e])
            .collect();
        for ((os, oe), (ms, me)) in unmatched_runs(&o, &m) {
            if os == oe {
                continue;
            }
            if ms == me {
                per_note[ni].changed += oe - os;
                continue;
            }
            if oe - os == me - ms {
                for k in 0..oe - os {
                    jobs.push(Job {
                        note: ni,
                        sentence_id: format!("{id}:{}", os + k),
                        originals: 1,
                        original: o[os + k].to_string(),
                        masked: m[ms + k].to_string(),
                    });
                }
                continue;
            }
            jobs.push(Job {
                note: ni,
                sentence_id: format!("{id}:{os}"),
                originals: oe - os,
                original: o[os..oe].join(" "),
                masked: m[ms..me].join(" "),
            });
        }
    }

    let ask = |job: &Job| -> Result<(Verdict, Vec<TranscriptEntry>), CireError> {
        let prompt = options.template.render(&job.original, &job.masked);
        let mut log = Vec::new();
        for attempt in 0..2 {
            let req = JudgeRequest {
                sentence_id: job.sentence_id.clone(),
                prompt: prompt.clone(),
                original: job.original.clone(),
                masked: job.masked.clone(),
                attempt,
            };
            let reply = judge.ask(&req)?;
            let verdict = parse_verdict(&reply);
            log.push(TranscriptEntry {
                sentence_id: job.sentence_id.clone(),
                attempt,
                prompt: prompt.clone(),
                reply: reply.clone(),
                verdict,
            });
            if let Some(v) = verdict {
                return Ok((v, log));
            }
            if attempt == 1 {
                return Err(CireError::UnparseableVerdict {
                    sentence_id: job.sentence_id.clone(),
                    raw: reply,
                });
            }
        }
        unreachable!("loop returns on the second attempt")
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.concurrency.max(1))
        .build()
        .map_err(|e| CireError::JudgeUnavailable(JudgeError::Transport(e.to_string())))?;
    let results = pool.install(|| jobs.par_iter().map(ask).collect::<Result<Vec<_>, _>>())?;

    let mut transcript = Vec::new();
    let mut judge_calls = 0;
    for (job, (verdict, log)) in jobs.iter().zip(results) {
        judge_calls += log.len();
        transcript.extend(log);
        if verdict == Verdict::Changed {
            per_note[job.note].changed += job.originals;
        }
    }
    let sentence_total: usize = per_note.iter().map(|n| n.sentences).sum();
    let sentence_changed: usize = per_note.iter().map(|n| n.changed).sum();
    let cire = if sentence_total == 0 {
        1.0
    } else {
        (sentence_total - sentence_changed) as f64 / sentence_total as f64
    };
    Ok(CireReport {
        sentence_total,
        sentence_changed,
        cire,
        judge_calls,
        per_note,
        transcript,
    })
}
