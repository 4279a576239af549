use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::MetricsError;
use crate::corpus::AnnotatedNote;

/// Timing protocol defaults: 100 notes, 10 timed runs.
pub const DEFAULT_TIMING_NOTES: usize = 100;
pub const DEFAULT_REPEATS: usize = 10;

/// Number of maximal runs of non-whitespace characters.
pub fn count_words(text: &str) -> usize {
    text.split_whitespace().count()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThroughputReport {
    pub runs: usize,
    pub notes: usize,
    /// Requests in flight during timing. Always 1 for this harness.
    pub concurrency: usize,
    pub warmup_seconds: f64,
    pub seconds_per_run: Vec<f64>,
    pub mean_seconds: f64,
    /// Population standard deviation of `seconds_per_run`.
    pub std_seconds: f64,
    pub total_seconds: f64,
    pub total_words: u64,
    /// `total_words / mean_seconds`.
    pub words_per_sec: f64,
}

impl ThroughputReport {
    pub fn from_runs(seconds_per_run: Vec<f64>, total_words: u64, notes: usize, warmup_seconds: f64) -> Self {
        let n = seconds_per_run.len() as f64;
        let total_seconds: f64 = seconds_per_run.iter().sum();
        let mean = total_seconds / n;
        let var = seconds_per_run.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / n;
        ThroughputReport {
            runs: seconds_per_run.len(),
            notes,
            concurrency: 1,
            warmup_seconds,
            mean_seconds: mean,
            std_seconds: var.sqrt(),
            total_seconds,
            total_words,
            words_per_sec: if mean > 0.0 { total_words as f64 / mean } else { 0.0 },
            seconds_per_run,
        }
    }
}

/// Times `run` over all of `notes`: one untimed warm-up pass, then `repeats`
/// timed passes, strictly one after another. A failing pass aborts.
pub fn measure_throughput<E: Display>(
    mut run: impl FnMut(&[AnnotatedNote]) -> Result<(), E>,
    notes: &[AnnotatedNote],
    repeats: usize,
) -> Result<ThroughputReport, MetricsError> {
    if notes.is_empty() || repeats == 0 {
        return Err(MetricsError::EmptyThroughputInput);
    }
    let total_words = notes.iter().map(|n| count_words(&n.text) as u64).sum();
    let mut pass = |i: usize| -> Result<f64, MetricsError> {
        let t = Instant::now();
        run(notes).map_err(|e| MetricsError::RunFailed {
            run: i,
            message: e.to_string(),
        })?;
        Ok(t.elapsed().as_secs_f64())
    };
    let warmup = pass(0)?;
    let times = (1..=repeats).map(&mut pass).collect::<Result<Vec<_>, _>>()?;
    Ok(ThroughputReport::from_runs(times, total_words, notes.len(), warmup))
}
