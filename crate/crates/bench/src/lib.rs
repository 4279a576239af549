//! Fixtures for the criterion benchmarks.

use deidbench_core::corpus::builtin;
use deidbench_core::experiments::test_corpus;
use deidbench_core::{AnnotatedNote, Locale};

/// A deterministic en_US discharge corpus of `n` notes.
pub fn corpus(n: usize) -> Vec<AnnotatedNote> {
    test_corpus(&builtin::discharge(), Locale::EnUs, 1, n, true)
        .expect("builtin templates generate")
        .0
}
