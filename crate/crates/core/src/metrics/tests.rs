use std::sync::atomic::{AtomicUsize, Ordering};

use proptest::prelude::*;

use super::*;
use crate::Locale;

fn note(id: &str, text: &str, spans: Vec<Span>) -> AnnotatedNote {
    AnnotatedNote {
        id: id.into(),
        text: text.into(),
        locale: Locale::EnUs,
        spans,
        provenance: None,
    }
}

fn pred(id: &str, spans: Vec<Span>) -> Prediction {
    Prediction {
        note_id: id.into(),
        spans,
    }
}

/// Ten single-token names separated by filler, so span i covers token 2i.
fn ten_names() -> AnnotatedNote {
    let mut text = String::new();
    let mut spans = Vec::new();
    for i in 0..10 {
        let start = text.len();
        text.push_str(&format!("N{i}"));
        let g = if i < 5 { Gender::Feminine } else { Gender::Masculine };
        spans.push(Span::new(start, text.len(), PiiCategory::Name).with_gender(g));
        text.push_str(" x ");
    }
    note("n", text.trim_end(), spans)
}

#[test]
fn identity_is_perfect() {
    let n = ten_names();
    let r = score(std::slice::from_ref(&n), &[Prediction::from_gold(&n)], ScoreMode::Multiclass).unwrap();
    assert_eq!((r.precision(), r.recall()), (1.0, 1.0));
    assert_eq!(r.overall.total(), r.token_count);
    assert_eq!(r.token_count, 20);
}

#[test]
fn eight_of_ten_plus_two_clean() {
    let n = ten_names();
    let mut spans: Vec<Span> = n.spans[..8].to_vec();
    // two filler tokens "x" after names 8 and 9
    for k in [8, 9] {
        let s = n.spans[k].end + 1;
        spans.push(Span::new(s, s + 1, PiiCategory::Name));
    }
    let r = score(std::slice::from_ref(&n), &[pred("n", spans)], ScoreMode::Binary).unwrap();
    assert_eq!(r.overall, ConfusionCounts { tp: 8, fp: 2, fn_: 2, tn: 8 });
    assert!((r.precision() - 0.8).abs() < 1e-15);
    assert!((r.recall() - 0.8).abs() < 1e-15);
}

#[test]
fn wrong_category_counts_only_in_binary() {
    let n = note("n", "Seen by John Smith today", vec![Span::new(8, 18, PiiCategory::Name)]);
    let p = [pred("n", vec![Span::new(8, 18, PiiCategory::City)])];
    let b = score(std::slice::from_ref(&n), &p, ScoreMode::Binary).unwrap();
    let m = score(std::slice::from_ref(&n), &p, ScoreMode::Multiclass).unwrap();
    assert_eq!(b.overall.tp, 2);
    assert_eq!(m.overall.tp, 0);
    assert_eq!(m.overall.fn_, 2);
    assert_eq!(m.overall.fp, 0);
    assert_eq!(m.category_recall(PiiCategory::Name), Some(0.0));
}

#[test]
fn empty_conventions() {
    let n = note("n", "nothing here", vec![]);
    let r = score(std::slice::from_ref(&n), &[pred("n", vec![])], ScoreMode::Binary).unwrap();
    assert_eq!((r.precision(), r.recall()), (1.0, 1.0));
    let r = score(&[], &[], ScoreMode::Binary).unwrap();
    assert_eq!(r.token_count, 0);
}

#[test]
fn id_mismatch_lists_ids() {
    let a = note("a", "x", vec![]);
    let b = note("b", "x", vec![]);
    match score(&[a, b], &[pred("a", vec![]), pred("z", vec![])], ScoreMode::Binary) {
        Err(MetricsError::IdMismatch { missing, unexpected }) => {
            assert_eq!(missing, ["b"]);
            assert_eq!(unexpected, ["z"]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn gender_recall() {
    let n = ten_names();
    // every feminine name and two of the five masculine ones
    let spans: Vec<Span> = n.spans[..5].iter().chain(&n.spans[5..7]).copied().collect();
    let r = score(std::slice::from_ref(&n), &[pred("n", spans)], ScoreMode::Binary).unwrap();
    let g = recall_by_gender(&r);
    assert_eq!(g.r_f, Some(1.0));
    assert_eq!(g.r_m, Some(2.0 / 5.0));
    let empty = note("e", "no names", vec![]);
    let r = score(std::slice::from_ref(&empty), &[pred("e", vec![])], ScoreMode::Binary).unwrap();
    assert_eq!(recall_by_gender(&r), GenderRecall { r_f: None, r_m: None });
}

#[test]
fn gender_half_found() {
    let text = "Ann Bob Cal";
    let n = note(
        "n",
        text,
        vec![
            Span::new(0, 3, PiiCategory::Name).with_gender(Gender::Feminine),
            Span::new(4, 7, PiiCategory::Name).with_gender(Gender::Masculine),
            Span::new(8, 11, PiiCategory::Name).with_gender(Gender::Masculine),
        ],
    );
    let p = pred("n", vec![Span::new(0, 7, PiiCategory::Name)]);
    let g = recall_by_gender(&score(&[n], &[p], ScoreMode::Binary).unwrap());
    assert_eq!((g.r_f, g.r_m), (Some(1.0), Some(0.5)));
}

#[test]
fn relative_drop_examples() {
    assert_eq!(relative_recall_drop(0.99, 0.99).unwrap(), 0.0);
    assert!((relative_recall_drop(0.99, 0.80).unwrap() - 0.191919).abs() < 1e-6);
    assert_eq!(relative_recall_drop(0.5, 0.75).unwrap(), -0.5);
    assert!(matches!(relative_recall_drop(0.0, 0.5), Err(MetricsError::DegenerateBaseline)));
    assert!(relative_recall_drop(1.5, 0.5).is_err());
}

#[test]
fn count_words_examples() {
    assert_eq!(count_words(""), 0);
    assert_eq!(count_words("a  b\nc"), 3);
    let note_text = vec!["w"; 1444].join(" ");
    let total: usize = (0..100).map(|_| count_words(&note_text)).sum();
    assert_eq!(total, 144_400);
}

#[test]
fn throughput_singleton_has_zero_std() {
    let notes = [note("a", "one two three", vec![])];
    let r = measure_throughput(|_| Ok::<_, String>(()), &notes, 1).unwrap();
    assert_eq!(r.runs, 1);
    assert_eq!(r.std_seconds, 0.0);
    assert_eq!(r.total_words, 3);
}

#[test]
fn throughput_counts_warmup_separately_and_propagates_errors() {
    let notes = [note("a", "w", vec![])];
    let calls = AtomicUsize::new(0);
    let r = measure_throughput(
        |_| {
            calls.fetch_add(1, Ordering::SeqCst);
            Ok::<_, String>(())
        },
        &notes,
        DEFAULT_REPEATS,
    )
    .unwrap();
    assert_eq!(calls.load(Ordering::SeqCst), 11);
    assert_eq!(r.seconds_per_run.len(), 10);
    let err = measure_throughput(|_| Err("boom"), &notes, 3).unwrap_err();
    assert!(matches!(err, MetricsError::RunFailed { run: 0, .. }));
    assert!(measure_throughput(|_| Ok::<_, String>(()), &[], 3).is_err());
    assert!(measure_throughput(|_| Ok::<_, String>(()), &notes, 0).is_err());
}

#[test]
fn throughput_report_statistics() {
    let r = ThroughputReport::from_runs(vec![1.0, 3.0], 100, 5, 0.0);
    assert_eq!(r.mean_seconds, 2.0);
    assert_eq!(r.std_seconds, 1.0);
    assert_eq!(r.total_seconds, 4.0);
    assert_eq!(r.words_per_sec, 50.0);
}

#[test]
fn sentence_splitting() {
    let text = "Pt stable. Seen by [NAME]. Dose 2.5 mg! Next? [ADDR. X] ok";
    let got: Vec<&str> = split_sentences(text).into_iter().map(|(s, e)| &text[s..e]).collect();
    assert_eq!(got, ["Pt stable.", "Seen by [NAME].", "Dose 2.5 mg!", "Next?", "[ADDR. X] ok"]);
    assert!(split_sentences("  ").is_empty());
}

#[test]
fn verdict_grammar() {
    assert_eq!(parse_verdict("UNCHANGED"), Some(Verdict::Unchanged));
    assert_eq!(parse_verdict("Answer: CHANGED."), Some(Verdict::Changed));
    assert_eq!(parse_verdict("changed"), None);
    assert_eq!(parse_verdict("CHANGED or UNCHANGED"), None);
    assert_eq!(parse_verdict("UNCHANGEDX"), None);
}

fn ten_sentences() -> (String, String) {
    let o: Vec<String> = (0..10).map(|i| format!("Patient {i} seen by Smith.")).collect();
    let m: Vec<String> = (0..10).map(|i| format!("Patient {i} seen by [NAME].")).collect();
    (o.join(" "), m.join(" "))
}

#[test]
fn cire_with_scripted_judge() {
    let (o, m) = ten_sentences();
    let flagged = ["Patient 2 ", "Patient 5 ", "Patient 7 "];
    let judge = |r: &JudgeRequest| -> Result<String, JudgeError> {
        Ok(if flagged.iter().any(|f| r.original.starts_with(f)) {
            "CHANGED".into()
        } else {
            "UNCHANGED".into()
        })
    };
    let rep = cire(&[("n", &o)], &[m], &judge, &CireOptions::default()).unwrap();
    assert_eq!(rep.sentence_total, 10);
    assert_eq!(rep.sentence_changed, 3);
    assert_eq!(rep.cire, 0.7);
    assert_eq!(rep.judge_calls, 10);
    assert_eq!(rep.transcript.len(), 10);
}

#[test]
fn cire_fast_path_skips_judge() {
    let (o, _) = ten_sentences();
    let calls = AtomicUsize::new(0);
    let judge = |_: &JudgeRequest| -> Result<String, JudgeError> {
        calls.fetch_add(1, Ordering::SeqCst);
        Ok("CHANGED".into())
    };
    let rep = cire(&[("n", &o)], std::slice::from_ref(&o), &judge, &CireOptions::default()).unwrap();
    assert_eq!(rep.cire, 1.0);
    assert_eq!(calls.load(Ordering::SeqCst), 0);
}

#[test]
fn cire_judges_only_differing_sentences() {
    let o = "A is fine. Seen by Smith. B is fine.";
    let m = "A is fine. Seen by [NAME]. B is fine.".to_string();
    let calls = AtomicUsize::new(0);
    let judge = |r: &JudgeRequest| -> Result<String, JudgeError> {
        calls.fetch_add(1, Ordering::SeqCst);
        assert_eq!(r.original, "Seen by Smith.");
        assert_eq!(r.masked, "Seen by [NAME].");
        assert!(r.prompt.contains("Seen by Smith.") && r.prompt.contains("Seen by [NAME]."));
        Ok("UNCHANGED".into())
    };
    let rep = cire(&[("n", o)], &[m], &judge, &CireOptions::default()).unwrap();
    assert_eq!(calls.load(Ordering::SeqCst), 1);
    assert_eq!(rep.cire, 1.0);
}

#[test]
fn cire_merged_boundaries_share_a_verdict() {
    let o = "Seen at St. Mary Hospital today. Stable.";
    let m = "Seen at [HOSPITAL] today. Stable.".to_string();
    let judge = |r: &JudgeRequest| -> Result<String, JudgeError> {
        assert_eq!(r.original, "Seen at St. Mary Hospital today.");
        Ok("CHANGED".into())
    };
    let rep = cire(&[("n", o)], &[m], &judge, &CireOptions::default()).unwrap();
    assert_eq!(rep.sentence_total, 3);
    assert_eq!(rep.sentence_changed, 2);
}

#[test]
fn cire_retries_once_then_fails() {
    let (o, m) = ten_sentences();
    let judge = |r: &JudgeRequest| -> Result<String, JudgeError> {
        Ok(if r.attempt == 0 { "maybe".into() } else { "UNCHANGED".into() })
    };
    let rep = cire(&[("n", &o)], std::slice::from_ref(&m), &judge, &CireOptions::default()).unwrap();
    assert_eq!(rep.judge_calls, 20);
    assert_eq!(rep.cire, 1.0);
    let bad = |_: &JudgeRequest| -> Result<String, JudgeError> { Ok("no idea".into()) };
    assert!(matches!(
        cire(&[("n", &o)], std::slice::from_ref(&m), &bad, &CireOptions::default()),
        Err(CireError::UnparseableVerdict { .. })
    ));
    let down = |_: &JudgeRequest| -> Result<String, JudgeError> { Err(JudgeError::Transport("down".into())) };
    assert!(matches!(
        cire(&[("n", &o)], &[m], &down, &CireOptions::default()),
        Err(CireError::JudgeUnavailable(_))
    ));
}

#[test]
fn constant_unchanged_judge_matches_fast_path() {
    let (o, m) = ten_sentences();
    let judge = |_: &JudgeRequest| -> Result<String, JudgeError> { Ok("UNCHANGED".into()) };
    let judged = cire(&[("n", &o)], &[m], &judge, &CireOptions::default()).unwrap();
    let fast = cire(&[("n", &o)], std::slice::from_ref(&o), &judge, &CireOptions::default()).unwrap();
    assert_eq!(judged.cire, fast.cire);
}

#[test]
fn prompt_template_requires_slots() {
    assert!(PromptTemplate::new("only {original_sentence}").is_err());
    let t = PromptTemplate::default();
    assert!(t.render("A", "B").contains('A'));
}

fn arb_note() -> impl Strategy<Value = (AnnotatedNote, Vec<Span>)> {
    (1usize..12).prop_flat_map(|n| {
        (
            proptest::collection::vec(proptest::option::of(0usize..12), n),
            proptest::collection::vec(proptest::option::of(0usize..12), n),
        )
            .prop_map(move |(gold, predicted)| {
                let mut text = String::new();
                let mut g = Vec::new();
                let mut p = Vec::new();
                for (i, (gc, pc)) in gold.iter().zip(&predicted).enumerate() {
                    let s = text.len();
                    text.push_str(&format!("w{i}"));
                    if let Some(c) = gc {
                        g.push(Span::new(s, text.len(), PiiCategory::ALL[*c]));
                    }
                    if let Some(c) = pc {
                        p.push(Span::new(s, text.len(), PiiCategory::ALL[*c]));
                    }
                    text.push(' ');
                }
                (note("n", &text, g), p)
            })
    })
}

proptest! {
    #[test]
    fn scoring_invariants((n, p) in arb_note(), extra in 0usize..12) {
        let b = score(std::slice::from_ref(&n), &[pred("n", p.clone())], ScoreMode::Binary).unwrap();
        let m = score(std::slice::from_ref(&n), &[pred("n", p.clone())], ScoreMode::Multiclass).unwrap();
        prop_assert!(m.overall.tp <= b.overall.tp);
        prop_assert!(b.recall() >= m.recall());
        for r in [&b, &m] {
            prop_assert_eq!(r.overall.total(), r.token_count);
            prop_assert!((0.0..=1.0).contains(&r.precision()));
            prop_assert!((0.0..=1.0).contains(&r.recall()));
        }
        let cat_tp: u64 = m.per_category.values().map(|c| c.tp).sum();
        prop_assert!(m.overall.tp >= cat_tp);

        // Adding a span never lowers recall.
        let tokens = crate::corpus::tokenize(&n.text);
        let t = &tokens[extra % tokens.len()];
        let mut more: Vec<Span> = p.iter().filter(|s| !s.overlaps(t.start, t.end)).copied().collect();
        let hit = p.iter().find(|s| s.overlaps(t.start, t.end)).copied();
        more.push(hit.unwrap_or(Span::new(t.start, t.end, PiiCategory::Other)));
        let b2 = score(std::slice::from_ref(&n), &[pred("n", more)], ScoreMode::Binary).unwrap();
        prop_assert!(b2.recall() >= b.recall());
        prop_assert!(b2.overall.fn_ <= b.overall.fn_);

        // Permuting spans changes nothing.
        let mut rev = p.clone();
        rev.reverse();
        let r2 = score(std::slice::from_ref(&n), &[pred("n", rev)], ScoreMode::Multiclass).unwrap();
        prop_assert_eq!(r2, m);
    }

    #[test]
    fn drop_of_equal_recalls_is_zero(r in 0.0001f64..=1.0) {
        prop_assert_eq!(relative_recall_drop(r, r).unwrap(), 0.0);
    }
}
