use std::collections::{HashMap, HashSet};
use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, Command, ExitStatus, Stdio};
use std::sync::mpsc::{self, Receiver, RecvTimeoutError};
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{DeidError, Deidentifier, Prediction, BINARY_CATEGORY};
use crate::corpus::{AnnotatedNote, PiiCategory, Span};

/// Request line sent to an external de-identifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireRequest<'a> {
    pub id: &'a str,
    pub text: &'a str,
}

/// One span as reported by an external de-identifier. A missing category
/// means the predictor is binary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireSpan {
    pub start: usize,
    pub end: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<PiiCategory>,
}

/// Response line: the spans found in one note.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireResponse {
    pub id: String,
    pub spans: Vec<WireSpan>,
}

impl WireResponse {
    pub fn from_prediction(p: &Prediction) -> WireResponse {
        WireResponse {
            id: p.note_id.clone(),
            spans: p
                .spans
                .iter()
                .map(|s| WireSpan {
                    start: s.start,
                    end: s.end,
                    category: Some(s.category),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AdapterKind {
    /// Program and arguments. The child speaks the line protocol on stdio.
    Subprocess { command: Vec<String> },
    /// Endpoint receiving a JSON array of requests per batch.
    Http { endpoint: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdapterConfig {
    #[serde(flatten)]
    pub kind: AdapterKind,
    #[serde(default = "default_timeout_ms")]
    pub timeout_ms: u64,
    #[serde(default = "default_batch_size")]
    pub batch_size: usize,
}

fn default_timeout_ms() -> u64 {
    60_000
}

fn default_batch_size() -> usize {
    32
}

impl AdapterConfig {
    pub fn subprocess<S: Into<String>>(command: impl IntoIterator<Item = S>) -> Self {
        AdapterConfig {
            kind: AdapterKind::Subprocess {
                command: command.into_iter().map(Into::into).collect(),
            },
            timeout_ms: default_timeout_ms(),
            batch_size: default_batch_size(),
        }
    }

    pub fn http(endpoint: impl Into<String>) -> Self {
        AdapterConfig {
            kind: AdapterKind::Http {
                endpoint: endpoint.into(),
            },
            timeout_ms: default_timeout_ms(),
            batch_size: default_batch_size(),
        }
    }

    pub fn with_timeout_ms(mut self, ms: u64) -> Self {
        self.timeout_ms = ms;
        self
    }

    pub fn with_batch_size(mut self, n: usize) -> Self {
        self.batch_size = n;
        self
    }

    pub fn validate(&self) -> Result<(), DeidError> {
        if self.timeout_ms == 0 {
            return Err(DeidError::InvalidConfig("timeout must be positive".into()));
        }
        if self.batch_size == 0 {
            return Err(DeidError::InvalidConfig("batch size must be at least 1".into()));
        }
        match &self.kind {
            AdapterKind::Subprocess { command } if command.is_empty() => {
                Err(DeidError::InvalidConfig("subprocess command is empty".into()))
            }
            AdapterKind::Http { endpoint } if endpoint.is_empty() => {
                Err(DeidError::InvalidConfig("http endpoint is empty".into()))
            }
            _ => Ok(()),
        }
    }

    fn timeout(&self) -> Duration {
        Duration::from_millis(self.timeout_ms)
    }
}

/// Predictions from an external run plus any clipping warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExternalRun {
    pub predictions: Vec<Prediction>,
    pub warnings: Vec<String>,
}

/// Runs an external de-identifier over `notes`. Any failed batch fails the
/// whole run.
pub fn run_external(adapter: &AdapterConfig, notes: &[AnnotatedNote]) -> Result<ExternalRun, DeidError> {
    adapter.validate()?;
    let mut ids = HashSet::new();
    for n in notes {
        if !ids.insert(n.id.as_str()) {
            return Err(DeidError::InvalidConfig(format!("duplicate note id {}", n.id)));
        }
    }
    let responses = if notes.is_empty() {
        Vec::new()
    } else {
        match &adapter.kind {
            AdapterKind::Subprocess { command } => run_subprocess(adapter, command, notes)?,
            AdapterKind::Http { endpoint } => run_http(adapter, endpoint, notes)?,
        }
    };
    Ok(assemble(notes, responses))
}

/// Validates and clips wire spans against their notes.
fn assemble(notes: &[AnnotatedNote], responses: Vec<Vec<WireSpan>>) -> ExternalRun {
    let mut warnings = Vec::new();
    let predictions = notes
        .iter()
        .zip(responses)
        .map(|(note, spans)| {
            let spans = spans
                .into_iter()
                .filter_map(|w| clip(note, w, &mut warnings))
                .collect();
            Prediction::normalized(note.id.clone(), spans)
        })
        .collect();
    for w in &warnings {
        log::warn!("{w}");
    }
    ExternalRun { predictions, warnings }
}

/// Pairs wire responses with `notes` by id, in note order. Every note needs
/// exactly one response; responses for other ids are ignored.
pub fn predictions_from_wire(notes: &[AnnotatedNote], responses: &[WireResponse]) -> Result<ExternalRun, DeidError> {
    let mut by_id: HashMap<&str, &WireResponse> = HashMap::with_capacity(responses.len());
    for r in responses {
        if by_id.insert(r.id.as_str(), r).is_some() {
            return Err(DeidError::MalformedResponse {
                raw: r.id.clone(),
                reason: "duplicate prediction id".into(),
            });
        }
    }
    let mut spans = Vec::with_capacity(notes.len());
    let mut missing = Vec::new();
    for n in notes {
        match by_id.get(n.id.as_str()) {
            Some(r) => spans.push(r.spans.clone()),
            None => missing.push(n.id.clone()),
        }
    }
    if !missing.is_empty() {
        return Err(DeidError::MalformedResponse {
            raw: String::new(),
            reason: format!("no prediction for notes {missing:?}"),
        });
    }
    Ok(assemble(notes, spans))
}

/// First line of a prediction file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PredictionHeader {
    pub system: String,
}

/// Reads a prediction file: a header line naming the system, then one
/// response record per line.
pub fn read_predictions<R: BufRead>(source: R) -> Result<(PredictionHeader, Vec<WireResponse>), DeidError> {
    let mut lines = source.lines().enumerate().filter(|(_, l)| l.as_ref().map_or(true, |l| !l.trim().is_empty()));
    let bad = |line: usize, raw: String, e: String| DeidError::MalformedResponse {
        raw,
        reason: format!("line {}: {e}", line + 1),
    };
    let header = match lines.next() {
        Some((i, l)) => {
            let l = l.map_err(|e| DeidError::AdapterUnavailable(e.to_string()))?;
            serde_json::from_str(&l).map_err(|e| bad(i, l.clone(), e.to_string()))?
        }
        None => {
            return Err(DeidError::MalformedResponse {
                raw: String::new(),
                reason: "empty prediction file".into(),
            })
        }
    };
    let mut out = Vec::new();
    for (i, l) in lines {
        let l = l.map_err(|e| DeidError::AdapterUnavailable(e.to_string()))?;
        out.push(serde_json::from_str(&l).map_err(|e| bad(i, l.clone(), e.to_string()))?);
    }
    Ok((header, out))
}

pub fn write_predictions<W: Write>(mut out: W, system: &str, predictions: &[Prediction]) -> std::io::Result<()> {
    serde_json::to_writer(&mut out, &PredictionHeader { system: system.into() })?;
    out.write_all(b"\n")?;
    for p in predictions {
        serde_json::to_writer(&mut out, &WireResponse::from_prediction(p))?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

fn floor_boundary(text: &str, mut i: usize) -> usize {
    i = i.min(text.len());
    while !text.is_char_boundary(i) {
        i -= 1;
    }
    i
}

fn clip(note: &AnnotatedNote, w: WireSpan, warnings: &mut Vec<String>) -> Option<Span> {
    let start = floor_boundary(&note.text, w.start);
    let end = floor_boundary(&note.text, w.end);
    if start >= end {
        warnings.push(format!(
            "note {}: dropped span {}..{} (empty after clipping to text length {})",
            note.id,
            w.start,
            w.end,
            note.text.len()
        ));
        return None;
    }
    if (start, end) != (w.start, w.end) {
        warnings.push(format!(
            "note {}: span {}..{} clipped to {}..{}",
            note.id, w.start, w.end, start, end
        ));
    }
    Some(Span::new(start, end, w.category.unwrap_or(BINARY_CATEGORY)))
}

/// Kills the child when dropped unless it has been reaped.
struct ChildGuard(Option<Child>);

impl ChildGuard {
    fn child(&mut self) -> &mut Child {
        self.0.as_mut().expect("child present until finish")
    }

    fn status_now(&mut self) -> Option<ExitStatus> {
        self.child().try_wait().ok().flatten()
    }

    /// Waits up to `timeout` for a normal exit.
    fn finish(mut self, timeout: Duration) -> Result<(), DeidError> {
        let deadline = Instant::now() + timeout;
        loop {
            if let Some(status) = self.status_now() {
                self.0 = None;
                return exit_result(status);
            }
            if Instant::now() >= deadline {
                log::warn!("adapter did not exit after its input closed; killing it");
                return Ok(());
            }
            thread::sleep(Duration::from_millis(5));
        }
    }

    /// After the child closed its output: its exit status as an error.
    fn closed_error(&mut self, unanswered: Vec<String>) -> DeidError {
        let status = self.child().wait();
        self.0 = None;
        match status {
            Ok(s) if !s.success() => DeidError::NonZeroExit(s.code()),
            _ => DeidError::MalformedResponse {
                raw: String::new(),
                reason: format!("adapter closed its output without answering {unanswered:?}"),
            },
        }
    }
}

impl Drop for ChildGuard {
    fn drop(&mut self) {
        if let Some(mut c) = self.0.take() {
            let _ = c.kill();
            let _ = c.wait();
        }
    }
}

fn exit_result(status: ExitStatus) -> Result<(), DeidError> {
    if status.success() {
        Ok(())
    } else {
        Err(DeidError::NonZeroExit(status.code()))
    }
}

fn spawn_line_reader(stdout: impl std::io::Read + Send + 'static) -> Receiver<std::io::Result<String>> {
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        for line in BufReader::new(stdout).lines() {
            if tx.send(line).is_err() {
                break;
            }
        }
    });
    rx
}

fn write_batch(stdin: &mut ChildStdin, batch: &[AnnotatedNote]) -> std::io::Result<()> {
    let mut buf = Vec::new();
    for n in batch {
        serde_json::to_writer(&mut buf, &WireRequest { id: &n.id, text: &n.text })?;
        buf.push(b'\n');
    }
    stdin.write_all(&buf)?;
    stdin.flush()
}

fn run_subprocess(cfg: &AdapterConfig, command: &[String], notes: &[AnnotatedNote]) -> Result<Vec<Vec<WireSpan>>, DeidError> {
    let child = Command::new(&command[0])
        .args(&command[1..])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::inherit())
        .spawn()
        .map_err(|e| DeidError::AdapterUnavailable(format!("cannot start {:?}: {e}", command[0])))?;
    let mut guard = ChildGuard(Some(child));
    let mut stdin = guard.child().stdin.take();
    let rx = spawn_line_reader(guard.child().stdout.take().expect("stdout is piped"));
    let timeout = cfg.timeout();

    let first_ids = || notes.iter().take(cfg.batch_size).map(|n| n.id.clone()).collect::<Vec<_>>();
    match rx.recv_timeout(timeout) {
        Ok(Ok(line)) if line.trim() == "READY" => {}
        Ok(Ok(line)) => {
            return Err(DeidError::MalformedResponse {
                raw: line,
                reason: "expected READY".into(),
            })
        }
        Ok(Err(e)) => return Err(DeidError::AdapterUnavailable(e.to_string())),
        Err(RecvTimeoutError::Timeout) => return Err(DeidError::AdapterTimeout(first_ids())),
        Err(RecvTimeoutError::Disconnected) => return Err(guard.closed_error(first_ids())),
    }

    let mut results: Vec<Option<Vec<WireSpan>>> = vec![None; notes.len()];
    let batches = notes.chunks(cfg.batch_size).count();
    for (bi, batch) in notes.chunks(cfg.batch_size).enumerate() {
        let offset = bi * cfg.batch_size;
        let pipe = stdin.as_mut().expect("stdin open until the last batch");
        if let Err(e) = write_batch(pipe, batch) {
            return Err(match guard.status_now() {
                Some(s) if !s.success() => DeidError::NonZeroExit(s.code()),
                _ => DeidError::AdapterUnavailable(format!("writing requests: {e}")),
            });
        }
        if bi + 1 == batches {
            stdin = None;
        }
        let mut outstanding: HashMap<&str, usize> =
            batch.iter().enumerate().map(|(i, n)| (n.id.as_str(), offset + i)).collect();
        while !outstanding.is_empty() {
            let unanswered = |o: &HashMap<&str, usize>| {
                let mut v: Vec<_> = o.iter().map(|(id, &i)| (i, id.to_string())).collect();
                v.sort();
                v.into_iter().map(|(_, id)| id).collect::<Vec<_>>()
            };
            match rx.recv_timeout(timeout) {
                Ok(Ok(line)) => {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let resp: WireResponse = serde_json::from_str(&line).map_err(|e| DeidError::MalformedResponse {
                        raw: line.clone(),
                        reason: e.to_string(),
                    })?;
                    match outstanding.remove(resp.id.as_str()) {
                        Some(i) => results[i] = Some(resp.spans),
                        None => {
                            return Err(DeidError::MalformedResponse {
                                raw: line,
                                reason: format!("unexpected note id {:?}", resp.id),
                            })
                        }
                    }
                }
                Ok(Err(e)) => return Err(DeidError::AdapterUnavailable(e.to_string())),
                Err(RecvTimeoutError::Timeout) => return Err(DeidError::AdapterTimeout(unanswered(&outstanding))),
                Err(RecvTimeoutError::Disconnected) => return Err(guard.closed_error(unanswered(&outstanding))),
            }
        }
    }
    drop(stdin);
    guard.finish(timeout)?;
    Ok(results.into_iter().map(|r| r.expect("every note answered")).collect())
}

fn run_http(cfg: &AdapterConfig, endpoint: &str, notes: &[AnnotatedNote]) -> Result<Vec<Vec<WireSpan>>, DeidError> {
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(cfg.timeout()))
        .http_status_as_error(false)
        .build()
        .into();
    let mut out = Vec::with_capacity(notes.len());
    for batch in notes.chunks(cfg.batch_size) {
        let body: Vec<WireRequest<'_>> = batch.iter().map(|n| WireRequest { id: &n.id, text: &n.text }).collect();
        let ids = || batch.iter().map(|n| n.id.clone()).collect::<Vec<_>>();
        let mut resp = agent.post(endpoint).send_json(&body).map_err(|e| match e {
            ureq::Error::Timeout(_) => DeidError::AdapterTimeout(ids()),
            e => DeidError::AdapterUnavailable(e.to_string()),
        })?;
        let status = resp.status().as_u16();
        let raw = resp.body_mut().read_to_string().map_err(|e| match e {
            ureq::Error::Timeout(_) => DeidError::AdapterTimeout(ids()),
            e => DeidError::AdapterUnavailable(e.to_string()),
        })?;
        if status != 200 {
            return Err(DeidError::HttpStatus { status, body: raw });
        }
        let parsed: Vec<WireResponse> = serde_json::from_str(&raw).map_err(|e| DeidError::MalformedResponse {
            raw: raw.clone(),
            reason: e.to_string(),
        })?;
        if parsed.len() != batch.len() {
            return Err(DeidError::MalformedResponse {
                raw,
                reason: format!("expected {} responses, got {}", batch.len(), parsed.len()),
            });
        }
        for (note, r) in batch.iter().zip(parsed) {
            if r.id != note.id {
                return Err(DeidError::MalformedResponse {
                    raw,
                    reason: format!("expected note id {:?}, got {:?}", note.id, r.id),
                });
            }
            out.push(r.spans);
        }
    }
    Ok(out)
}

/// An external de-identifier as a [`Deidentifier`].
#[derive(Debug, Clone)]
pub struct ExternalAdapter {
    name: String,
    config: AdapterConfig,
}

impl ExternalAdapter {
    pub fn new(name: impl Into<String>, config: AdapterConfig) -> Self {
        ExternalAdapter {
            name: name.into(),
            config,
        }
    }

    pub fn config(&self) -> &AdapterConfig {
        &self.config
    }
}

impl Deidentifier for ExternalAdapter {
    fn name(&self) -> &str {
        &self.name
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        run_external(&self.config, notes).map(|r| r.predictions)
    }
}
