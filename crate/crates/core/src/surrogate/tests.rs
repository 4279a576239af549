use std::collections::BTreeMap;

use proptest::prelude::*;
use regex::Regex;

use super::*;
use crate::corpus::builtin;

fn template(body: &str) -> NoteTemplate {
    NoteTemplate::parse("t", body).unwrap()
}

#[test]
fn singleton_pool_draw() {
    let pool = IdentifierPool::from_parts(
        Locale::Es,
        vec!["Ana".into()],
        vec!["Juan".into()],
        vec!["Ruiz".into()],
        BTreeMap::new(),
        BTreeMap::new(),
    )
    .unwrap();
    let mut rng = note_rng("x", 1);
    let d = draw(&pool, PiiCategory::Name, Gender::Feminine, &mut rng).unwrap();
    assert_eq!(d.value, "Ana Ruiz");
    assert_eq!(d.gender, Gender::Feminine);
    assert!(!d.fallback);
}

#[test]
fn empty_pool_is_an_error() {
    let pool = IdentifierPool::from_parts(Locale::Es, vec![], vec![], vec![], BTreeMap::new(), BTreeMap::new())
        .unwrap();
    let mut rng = note_rng("x", 1);
    for (c, g) in [
        (PiiCategory::Name, Gender::Feminine),
        (PiiCategory::Name, Gender::Unspecified),
        (PiiCategory::City, Gender::Unspecified),
        (PiiCategory::Date, Gender::Unspecified),
    ] {
        assert!(matches!(draw(&pool, c, g, &mut rng), Err(SurrogateError::EmptyPool { .. })), "{c}");
    }
}

#[test]
fn identical_seeds_draw_identically() {
    let pool = load_pool(Locale::Hi).unwrap();
    for c in PiiCategory::ALL {
        let a = draw(&pool, c, Gender::Unspecified, &mut note_rng("t", 42)).unwrap();
        let b = draw(&pool, c, Gender::Unspecified, &mut note_rng("t", 42)).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn us_phone_matches_documented_pattern() {
    let pool = load_pool(Locale::EnUs).unwrap();
    let re = Regex::new(r"^\(\d{3}\) \d{3}-\d{4}$").unwrap();
    let mut rng = note_rng("phones", 0);
    for _ in 0..200 {
        let d = draw(&pool, PiiCategory::PhoneFax, Gender::Unspecified, &mut rng).unwrap();
        assert!(re.is_match(&d.value), "{}", d.value);
    }
}

#[test]
fn gendered_draws_come_from_the_right_sub_pool() {
    let pool = load_pool(Locale::Fr).unwrap();
    let mut rng = note_rng("g", 3);
    for _ in 0..100 {
        let d = draw(&pool, PiiCategory::Name, Gender::Masculine, &mut rng).unwrap();
        let first = d.value.split(' ').next().unwrap();
        assert!(pool.name_masculine.native.iter().any(|n| n == first), "{}", d.value);
        assert_eq!(d.gender, Gender::Masculine);
    }
}

#[test]
fn fallback_names_lose_their_gender_and_warn() {
    let gen = SurrogateGenerator::for_locale(Locale::EnAu).unwrap();
    let s = gen.substitute(&template("Seen by {{name:d:f}} in {{city:c}}."), 5).unwrap();
    assert_eq!(s.note.spans[0].gender, Gender::Unspecified);
    assert_eq!(
        s.warnings,
        [FallbackWarning {
            locale: Locale::EnAu,
            category: PiiCategory::Name
        }]
    );
    let json = serde_json::to_string(&s.warnings[0]).unwrap();
    assert_eq!(json, r#"{"locale":"en_AU","category":"name"}"#);
}

#[test]
fn no_placeholders_copies_body() {
    let t = template("Nothing to replace here.");
    let note = substitute(&t, Locale::EnUs, 1).unwrap();
    assert_eq!(note.text, t.body);
    assert!(note.spans.is_empty());
}

#[test]
fn repeated_key_gets_the_same_surrogate() {
    let t = template("{{name:p:m}} was seen. Later {{name:p:m}} left.");
    let note = substitute(&t, Locale::Es, 9).unwrap();
    assert_eq!(note.spans.len(), 2);
    let a = note.span_text(&note.spans[0]);
    let b = note.span_text(&note.spans[1]);
    assert_eq!(a, b);
    assert!(note.spans.iter().all(|s| s.gender == Gender::Masculine));
}

#[test]
fn inconsistent_mentions_redraw() {
    let t = template(&"{{name:p:m}} ".repeat(20));
    let gen = SurrogateGenerator::for_locale(Locale::EnUs).unwrap().consistent_mentions(false);
    let s = gen.substitute(&t, 1).unwrap();
    assert_eq!(s.plan.bindings.len(), 20);
    let distinct: std::collections::HashSet<_> = s.note.spans.iter().map(|sp| s.note.span_text(sp)).collect();
    assert!(distinct.len() > 1);
}

#[test]
fn substitution_is_deterministic() {
    let t = &builtin::discharge()[0];
    let a = substitute(t, Locale::Zh, 7).unwrap();
    let b = substitute(t, Locale::Zh, 7).unwrap();
    assert_eq!(serde_json::to_vec(&a).unwrap(), serde_json::to_vec(&b).unwrap());
    let c = substitute(t, Locale::Zh, 8).unwrap();
    assert_ne!(a.text, c.text);
}

#[test]
fn build_corpus_counts_and_ids() {
    let templates = builtin::discharge()[..10].to_vec();
    let notes = build_corpus(&templates, Locale::Fr, 11, 50).unwrap();
    assert_eq!(notes.len(), 500);
    assert_eq!(notes[0].id, "dc01#fr#0");
    assert_eq!(notes[51].id, "dc02#fr#1");
    assert_eq!(notes[51].provenance.as_ref().unwrap().seed, 12);
    assert!(matches!(build_corpus(&templates, Locale::Fr, 11, 0), Err(SurrogateError::InvalidCount)));
    assert_eq!(build_corpus(&templates, Locale::Fr, 11, 50).unwrap(), notes);
}

#[test]
fn seed_derivation_wraps() {
    let templates = builtin::discharge()[..1].to_vec();
    let notes = build_corpus(&templates, Locale::EnUs, u64::MAX, 2).unwrap();
    assert_eq!(notes[1].provenance.as_ref().unwrap().seed, 0);
}

#[test]
fn spans_match_plan_bindings() {
    for t in builtin::discharge() {
        let gen = SurrogateGenerator::for_locale(Locale::Bn).unwrap();
        let s = gen.substitute(&t, 3).unwrap();
        s.note.validate().unwrap();
        for (p, span) in t.placeholders.iter().zip(&s.note.spans) {
            let b = s
                .plan
                .bindings
                .iter()
                .find(|b| b.category == p.category && b.key == p.key)
                .unwrap();
            assert_eq!(s.note.span_text(span), b.value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_notes_are_valid_and_gender_pure(li in 0usize..9, seed in any::<u64>(), ti in 0usize..20) {
        let locale = Locale::ALL[li];
        let t = &builtin::discharge()[ti];
        let gen = SurrogateGenerator::for_locale(locale).unwrap();
        let s = gen.substitute(t, seed).unwrap();
        prop_assert!(s.note.validate().is_ok());
        prop_assert!(!s.note.text.contains("{{"));
        let gendered_native = !gen.pool().name_feminine.fallback;
        for (p, span) in t.placeholders.iter().zip(&s.note.spans) {
            prop_assert_eq!(p.category, span.category);
            if p.category == PiiCategory::Name && gendered_native {
                prop_assert_eq!(span.gender, p.gender);
            }
        }
    }
}
