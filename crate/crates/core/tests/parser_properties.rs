use proptest::prelude::*;
use splitroots::parser::parse_with_variable;
use splitroots::{parse_polynomial, ParseErrorKind, RealPolynomial};

fn coefficient() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => Just(0.0),
        1 => Just(1.0),
        1 => Just(-1.0),
        2 => -1e3f64..1e3,
        1 => (-50i32..50).prop_map(f64::from),
        1 => -1e-3f64..1e-3,
    ]
}

fn polynomial() -> impl Strategy<Value = RealPolynomial> {
    prop::collection::vec(coefficient(), 1..=8)
        .prop_filter_map("zero polynomial", |c| RealPolynomial::new(c).ok())
}

/// Splits canonical text into tokens: numbers, the variable and single symbols.
fn tokens(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        let numeric = ch.is_ascii_digit() || ch == '.';
        match out.last_mut() {
            Some(last) if numeric && last.chars().all(|c| c.is_ascii_digit() || c == '.') => {
                last.push(ch)
            }
            _ => out.push(ch.to_string()),
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn printer_round_trip(p in polynomial(), var in prop::sample::select(vec!['z', 'x', 'w', 't'])) {
        let text = p.to_text(var);
        let parsed = parse_with_variable(&text).unwrap();
        prop_assert_eq!(&parsed.polynomial, &p);
        if p.degree() > 0 {
            prop_assert_eq!(parsed.variable, Some(var));
        }
    }

    #[test]
    fn whitespace_between_tokens_is_ignored(p in polynomial(), gaps in prop::collection::vec(0usize..3, 64)) {
        let toks = tokens(&p.to_text('z'));
        let mut spaced = String::new();
        for (i, t) in toks.iter().enumerate() {
            spaced.push_str(&" ".repeat(gaps[i % gaps.len()]));
            spaced.push_str(t);
        }
        spaced.push_str(&"\t".repeat(gaps[0]));
        prop_assert_eq!(parse_polynomial(&spaced).unwrap(), p);
    }

    /// Inserting a stray symbol makes the text invalid no later than the insertion point.
    #[test]
    fn error_position_is_not_past_the_defect(
        p in polynomial(),
        at in any::<prop::sample::Index>(),
        junk in prop::sample::select(vec!['#', '?', ')', '$', '=']),
    ) {
        let text = p.to_text('z');
        let chars: Vec<char> = text.chars().collect();
        let i = at.index(chars.len() + 1);
        let mut broken: String = chars[..i].iter().collect();
        broken.push(junk);
        broken.extend(&chars[i..]);
        let e = parse_polynomial(&broken).unwrap_err();
        prop_assert!(e.position <= i, "{broken:?}: position {} after defect at {i}", e.position);
    }

    #[test]
    fn errors_stay_in_bounds(text in "[z0-9 .+\\-^*x]{0,16}") {
        if let Err(e) = parse_polynomial(&text) {
            let len = text.chars().count();
            prop_assert!(e.position < len.max(1), "{text:?}: position {}", e.position);
            let rendered = e.render(&text);
            prop_assert!(rendered.contains('^'));
        }
    }

    #[test]
    fn large_exponents_are_rejected(exp in 1025u32..100_000) {
        let e = parse_polynomial(&format!("z^{exp} + 1")).unwrap_err();
        prop_assert!(matches!(e.kind, ParseErrorKind::BadExponent | ParseErrorKind::Overflow));
    }
}
