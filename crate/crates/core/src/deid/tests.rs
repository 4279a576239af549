use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpListener;
use std::thread;

use proptest::prelude::*;
use regex::Regex;

use super::*;
use crate::corpus::{tokenize, Gender};
use crate::Locale;

fn default_rules() -> &'static RuleSet {
    static RULES: std::sync::OnceLock<RuleSet> = std::sync::OnceLock::new();
    RULES.get_or_init(|| RuleSet::default_rules().unwrap())
}

fn found<'a>(text: &'a str, spans: &[Span]) -> Vec<(&'a str, PiiCategory)> {
    spans.iter().map(|s| (&text[s.start..s.end], s.category)).collect()
}

fn note(id: &str, text: &str) -> AnnotatedNote {
    AnnotatedNote {
        id: id.into(),
        text: text.into(),
        locale: Locale::EnUs,
        spans: vec![],
        provenance: None,
    }
}

#[test]
fn empty_text_has_no_spans() {
    assert!(deid_rules("", default_rules()).is_empty());
}

#[test]
fn date_and_phone() {
    let text = "DOB 04/12/1985, call (617) 555-0100";
    let spans = deid_rules(text, default_rules());
    assert_eq!(
        found(text, &spans),
        [("04/12/1985", PiiCategory::Date), ("(617) 555-0100", PiiCategory::PhoneFax)]
    );
}

#[test]
fn exclusion_beats_dictionary() {
    let rules = RuleSet::new(
        vec![],
        vec![Dictionary::new(PiiCategory::Name, 1, ["coumadin", "Ruth"])],
        vec!["Coumadin".to_string()],
        false,
    )
    .unwrap();
    assert!(deid_rules("prescribed coumadin", &rules).is_empty());
    assert_eq!(deid_rules("prescribed coumadin by ruth", &rules).len(), 1);
}

#[test]
fn labelled_identifiers_mask_only_the_number() {
    let rules = default_rules();
    for (text, id) in [
        ("MRN: 12345678", "12345678"),
        ("Unit No: 4411223", "4411223"),
        ("Account reference 1234 5678 and more", "1234 5678"),
        ("MR#: 998877", "998877"),
    ] {
        let spans = deid_rules(text, rules);
        assert_eq!(found(text, &spans), [(id, PiiCategory::Other)], "{text}");
    }
}

#[test]
fn pattern_families() {
    let rules = default_rules();
    let cases = [
        ("seen March 3, 2019 in clinic", "March 3, 2019", PiiCategory::Date),
        ("on 3 March 2019", "3 March 2019", PiiCategory::Date),
        ("on 2019-03-03.", "2019-03-03", PiiCategory::Date),
        ("write to jane.doe@example.org today", "jane.doe@example.org", PiiCategory::Email),
        ("ring +44 7700 900123 now", "+44 7700 900123", PiiCategory::PhoneFax),
        ("ssn 123-45-6789", "123-45-6789", PiiCategory::Other),
        ("ref 45678912 noted", "45678912", PiiCategory::Other),
        ("lives at 12 Oak Street near", "12 Oak Street", PiiCategory::Address),
        ("postcode SW1A 1AA", "SW1A 1AA", PiiCategory::Address),
        ("seen by Dr. Okonkwo today", "Okonkwo", PiiCategory::Name),
        ("admitted to Riverside General Hospital", "Riverside General Hospital", PiiCategory::Hospital),
    ];
    for (text, want, cat) in cases {
        let spans = deid_rules(text, rules);
        assert!(found(text, &spans).contains(&(want, cat)), "{text}: {:?}", found(text, &spans));
    }
}

#[test]
fn dictionary_longest_match_and_capitalization() {
    let rules = RuleSet::new(
        vec![],
        vec![
            Dictionary::new(PiiCategory::City, 2, ["New York", "York"]),
            Dictionary::new(PiiCategory::Name, 1, ["Paris"]),
        ],
        Vec::<String>::new(),
        true,
    )
    .unwrap();
    let text = "moved from New York to Paris; new york";
    assert_eq!(
        found(text, &deid_rules(text, &rules)),
        [("New York", PiiCategory::City), ("Paris", PiiCategory::Name)]
    );
}

#[test]
fn priority_then_length_then_start() {
    let rule = |name: &str, cat, prio, re: &str| PatternRule {
        name: name.into(),
        category: cat,
        priority: prio,
        regex: Regex::new(re).unwrap(),
    };
    let a = rule("short_high", PiiCategory::Date, 10, r"12/03");
    let b = rule("long_low", PiiCategory::Other, 5, r"\d+/\d+/\d+");
    let c = rule("longer_lower", PiiCategory::Other, 4, r"x \d+/\d+/\d+");
    let rules = RuleSet::new(vec![c.clone(), b.clone(), a.clone()], vec![], Vec::<String>::new(), true).unwrap();
    let text = "x 12/03/2020";
    assert_eq!(found(text, &deid_rules(text, &rules)), [("12/03", PiiCategory::Date)]);
    let reordered = RuleSet::new(vec![a, b, c], vec![], Vec::<String>::new(), true).unwrap();
    assert_eq!(deid_rules(text, &rules), deid_rules(text, &reordered));
}

#[test]
fn duplicate_priority_is_rejected() {
    let r = |n: &str| PatternRule {
        name: n.into(),
        category: PiiCategory::Date,
        priority: 1,
        regex: Regex::new("x").unwrap(),
    };
    assert!(matches!(
        RuleSet::new(vec![r("a"), r("b")], vec![], Vec::<String>::new(), true),
        Err(DeidError::InvalidRules(_))
    ));
}

#[test]
fn bad_rule_file_is_rejected() {
    let src = "[[pattern]]\nname='x'\ncategory='date'\npriority=1\nregex='('\n";
    assert!(matches!(RuleSet::from_toml(src, None), Err(DeidError::InvalidRules(_))));
    let src = "[[pattern]]\nname='x'\ncategory='nope'\npriority=1\nregex='a'\n";
    assert!(matches!(RuleSet::from_toml(src, None), Err(DeidError::InvalidRules(_))));
}

#[test]
fn bundled_rules_load_with_dictionaries() {
    let rules = default_rules();
    assert!(rules.patterns().len() >= 15);
    let cats: Vec<_> = rules.dictionaries().iter().map(|d| d.category).collect();
    for c in [PiiCategory::Name, PiiCategory::City, PiiCategory::Hospital, PiiCategory::State] {
        assert!(cats.contains(&c), "{c}");
    }
    assert!(rules.is_excluded("Coumadin"));
}

#[test]
fn prediction_normalization_merges_overlaps() {
    let p = Prediction::normalized(
        "n",
        vec![
            Span::new(5, 9, PiiCategory::City),
            Span::new(0, 3, PiiCategory::Name),
            Span::new(2, 6, PiiCategory::Date),
        ],
    );
    assert_eq!(p.spans, [Span::new(0, 9, PiiCategory::Name)]);
}

#[test]
fn mask_policies() {
    let text = "John saw Mary";
    let spans = [Span::new(9, 13, PiiCategory::Name), Span::new(0, 4, PiiCategory::Name)];
    assert_eq!(mask(text, &spans, MaskPolicy::CategoryTag).unwrap(), "[NAME] saw [NAME]");
    assert_eq!(mask(text, &spans, MaskPolicy::FixedToken).unwrap(), "[REDACTED] saw [REDACTED]");
    assert_eq!(mask(text, &[], MaskPolicy::CategoryTag).unwrap(), text);
    let policy = MaskPolicy::Surrogate {
        locale: Locale::Es,
        seed: 3,
    };
    let a = mask(text, &spans, policy).unwrap();
    assert_eq!(a, mask(text, &spans, policy).unwrap());
    assert!(a.contains(" saw "));
    assert!(!a.contains("John"));
}

#[test]
fn mask_rejects_overlap_and_bad_spans() {
    let overlapping = [Span::new(0, 4, PiiCategory::Name), Span::new(3, 6, PiiCategory::Name)];
    assert!(matches!(
        mask("John saw Mary", &overlapping, MaskPolicy::FixedToken),
        Err(DeidError::Overlap { .. })
    ));
    assert!(matches!(
        mask("abc", &[Span::new(1, 9, PiiCategory::Name)], MaskPolicy::FixedToken),
        Err(DeidError::InvalidSpan(_))
    ));
}

#[test]
fn mask_keeps_gendered_surrogates() {
    let spans = [Span::new(0, 4, PiiCategory::Name).with_gender(Gender::Feminine)];
    let out = mask("Mary left", &spans, MaskPolicy::Surrogate { locale: Locale::Fr, seed: 1 }).unwrap();
    let pool = crate::surrogate::load_pool(Locale::Fr).unwrap();
    let first = out.split(' ').next().unwrap();
    assert!(pool.name_feminine.entries().iter().any(|n| n == first), "{out}");
}

proptest! {
    #[test]
    fn rule_spans_are_sorted_disjoint_and_in_bounds(text in "[A-Za-z0-9 ().:/@+#-]{0,80}") {
        let rules = default_rules();
        let spans = deid_rules(&text, rules);
        for w in spans.windows(2) {
            prop_assert!(w[0].end <= w[1].start);
        }
        for s in &spans {
            prop_assert!(s.check(&text).is_ok());
        }
    }

    #[test]
    fn masking_preserves_tokens_outside_spans(text in "[a-z]{1,6}( [A-Za-z0-9/]{1,8}){0,12}") {
        let spans = deid_rules(&text, default_rules());
        let masked = mask(&text, &spans, MaskPolicy::CategoryTag).unwrap();
        let outside = |t: &str, spans: &[Span]| -> Vec<String> {
            let mut out = Vec::new();
            let mut pos = 0;
            for s in spans {
                out.extend(tokenize(&t[pos..s.start]).iter().map(|k| k.text.to_string()));
                pos = s.end;
            }
            out.extend(tokenize(&t[pos..]).iter().map(|k| k.text.to_string()));
            out
        };
        // Recompute where tags landed in the masked text.
        let mut shifted = Vec::new();
        let mut delta: isize = 0;
        for s in &spans {
            let tag = format!("[{}]", s.category.tag()).len();
            let start = (s.start as isize + delta) as usize;
            shifted.push(Span::new(start, start + tag, s.category));
            delta += tag as isize - s.len() as isize;
        }
        prop_assert_eq!(outside(&text, &spans), outside(&masked, &shifted));
    }
}

#[test]
fn loopback_returns_gold() {
    let mut n = note("a", "Call John");
    n.spans = vec![Span::new(5, 9, PiiCategory::Name).with_gender(Gender::Masculine)];
    let preds = GoldLoopback.deidentify(std::slice::from_ref(&n)).unwrap();
    assert_eq!(preds[0].spans, n.spans);
}

const ECHO: &str = r#"echo READY; while IFS= read -r line; do id=$(printf '%s' "$line" | sed 's/^{"id":"\([^"]*\)".*/\1/'); printf '{"id":"%s","spans":%s}\n' "$id" "$SPANS"; done"#;

fn sh_adapter(script: &str, spans_json: &str) -> AdapterConfig {
    AdapterConfig::subprocess(["sh", "-c", &format!("SPANS='{spans_json}'; {script}")])
        .with_timeout_ms(5_000)
        .with_batch_size(2)
}

fn notes3() -> Vec<AnnotatedNote> {
    vec![note("a", "hello there"), note("b", "Jo é"), note("c", "x")]
}

#[test]
fn echo_adapter_gives_empty_predictions_in_order() {
    let run = run_external(&sh_adapter(ECHO, "[]"), &notes3()).unwrap();
    let ids: Vec<_> = run.predictions.iter().map(|p| p.note_id.as_str()).collect();
    assert_eq!(ids, ["a", "b", "c"]);
    assert!(run.predictions.iter().all(|p| p.spans.is_empty()));
    assert!(run.warnings.is_empty());
}

#[test]
fn adapter_spans_are_clipped_with_warning() {
    let run = run_external(&sh_adapter(ECHO, r#"[{"start":0,"end":40}]"#), &notes3()).unwrap();
    assert_eq!(run.predictions[0].spans, [Span::new(0, 11, PiiCategory::Other)]);
    assert_eq!(run.predictions[1].spans, [Span::new(0, 5, PiiCategory::Other)]);
    assert_eq!(run.warnings.len(), 3);
}

#[test]
fn adapter_category_is_kept() {
    let run = run_external(&sh_adapter(ECHO, r#"[{"start":0,"end":1,"category":"city"}]"#), &notes3()).unwrap();
    assert_eq!(run.predictions[2].spans, [Span::new(0, 1, PiiCategory::City)]);
}

#[test]
fn adapter_omitting_an_id_is_malformed() {
    let script = r#"echo READY; while IFS= read -r line; do case "$line" in *'"id":"c"'*) ;; *) id=$(printf '%s' "$line" | sed 's/^{"id":"\([^"]*\)".*/\1/'); printf '{"id":"%s","spans":[]}\n' "$id";; esac; done"#;
    let err = run_external(&sh_adapter(script, "[]"), &notes3()).unwrap_err();
    assert!(matches!(err, DeidError::MalformedResponse { .. }), "{err}");
}

#[test]
fn adapter_unknown_id_is_malformed() {
    let script = r#"echo READY; while IFS= read -r line; do echo '{"id":"zzz","spans":[]}'; done"#;
    let err = run_external(&sh_adapter(script, "[]"), &notes3()).unwrap_err();
    assert!(matches!(err, DeidError::MalformedResponse { .. }), "{err}");
}

#[test]
fn adapter_nonzero_exit() {
    let err = run_external(&sh_adapter("echo READY; read -r line; exit 3", "[]"), &notes3()).unwrap_err();
    assert!(matches!(err, DeidError::NonZeroExit(Some(3))), "{err}");
}

#[test]
fn adapter_timeout_names_notes() {
    let cfg = sh_adapter("echo READY; sleep 5", "[]").with_timeout_ms(200);
    match run_external(&cfg, &notes3()).unwrap_err() {
        DeidError::AdapterTimeout(ids) => assert_eq!(ids, ["a", "b"]),
        e => panic!("{e}"),
    }
}

#[test]
fn adapter_config_validation() {
    assert!(run_external(&AdapterConfig::subprocess(["true"]).with_batch_size(0), &[]).is_err());
    assert!(run_external(&AdapterConfig::subprocess(["true"]).with_timeout_ms(0), &[]).is_err());
    assert!(run_external(&AdapterConfig::subprocess(Vec::<String>::new()), &[]).is_err());
    assert!(matches!(
        run_external(&AdapterConfig::subprocess(["/nonexistent/adapter"]), &notes3()),
        Err(DeidError::AdapterUnavailable(_))
    ));
}

#[test]
fn adapter_config_serde_shape() {
    let cfg: AdapterConfig =
        serde_json::from_str(r#"{"kind":"http","endpoint":"http://x","timeout_ms":5,"batch_size":2}"#).unwrap();
    assert_eq!(cfg, AdapterConfig::http("http://x").with_timeout_ms(5).with_batch_size(2));
    let cfg: AdapterConfig = toml::from_str("kind = 'subprocess'\ncommand = ['a', 'b']\n").unwrap();
    assert_eq!(cfg, AdapterConfig::subprocess(["a", "b"]));
}

/// Serves `responses.len()` requests, answering each with (status, body)
/// built from the request body.
type Responder = Box<dyn Fn(&str) -> (u16, String) + Send>;

fn serve(responses: Vec<Responder>) -> String {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap();
    thread::spawn(move || {
        for respond in responses {
            let (mut stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut len = 0;
            loop {
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                if line == "\r\n" || line.is_empty() {
                    break;
                }
                if let Some(v) = line.to_ascii_lowercase().strip_prefix("content-length:") {
                    len = v.trim().parse().unwrap();
                }
            }
            let mut body = vec![0; len];
            reader.read_exact(&mut body).unwrap();
            let (status, out) = respond(&String::from_utf8(body).unwrap());
            write!(
                stream,
                "HTTP/1.1 {status} X\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{out}",
                out.len()
            )
            .unwrap();
        }
    });
    format!("http://{addr}/deid")
}

fn echo_http(body: &str) -> (u16, String) {
    let reqs: Vec<serde_json::Value> = serde_json::from_str(body).unwrap();
    let out: Vec<_> = reqs
        .iter()
        .map(|r| serde_json::json!({"id": r["id"], "spans": [{"start": 0, "end": 1, "category": "name"}]}))
        .collect();
    (200, serde_json::to_string(&out).unwrap())
}

#[test]
fn http_adapter_round_trip() {
    let url = serve(vec![Box::new(echo_http), Box::new(echo_http)]);
    let cfg = AdapterConfig::http(url).with_batch_size(2).with_timeout_ms(5_000);
    let run = run_external(&cfg, &notes3()).unwrap();
    assert_eq!(run.predictions.len(), 3);
    assert!(run.predictions.iter().all(|p| p.spans == [Span::new(0, 1, PiiCategory::Name)]));
}

#[test]
fn http_adapter_status_and_shape_errors() {
    let url = serve(vec![Box::new(|_: &str| (500, "boom".to_string()))]);
    let err = run_external(&AdapterConfig::http(url).with_timeout_ms(5_000), &notes3()).unwrap_err();
    assert!(matches!(err, DeidError::HttpStatus { status: 500, .. }), "{err}");

    let url = serve(vec![Box::new(|_: &str| (200, r#"[{"id":"a","spans":[]}]"#.to_string()))]);
    let err = run_external(&AdapterConfig::http(url).with_timeout_ms(5_000), &notes3()).unwrap_err();
    assert!(matches!(err, DeidError::MalformedResponse { .. }), "{err}");
}

#[test]
fn prediction_file_round_trip() {
    let notes = notes3();
    let preds = vec![
        Prediction::normalized("a", vec![Span::new(0, 5, PiiCategory::Name)]),
        Prediction::normalized("b", vec![]),
        Prediction::normalized("c", vec![Span::new(0, 1, PiiCategory::Date)]),
    ];
    let mut buf = Vec::new();
    write_predictions(&mut buf, "sys", &preds).unwrap();
    let (header, wire) = read_predictions(&buf[..]).unwrap();
    assert_eq!(header.system, "sys");
    assert_eq!(predictions_from_wire(&notes, &wire).unwrap().predictions, preds);
    assert!(matches!(
        predictions_from_wire(&notes, &wire[..2]),
        Err(DeidError::MalformedResponse { .. })
    ));
    assert!(read_predictions(&b""[..]).is_err());
    assert!(read_predictions(&b"{\"system\":\"s\"}\n{\"id\":1}\n"[..]).is_err());
}
