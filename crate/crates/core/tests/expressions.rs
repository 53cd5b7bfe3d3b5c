use proptest::prelude::*;

use triality::expr::evaluate;
use triality::Error;

#[test]
fn printed_examples() {
    assert_eq!(evaluate("psi(X[e1-e2](t))", 4).unwrap().render(), "(x[e3+e4](-t), x[-e1-e2](t))");
    assert_eq!(evaluate("X[e1-e2](t) * X[e1-e2](s)", 4).unwrap().render(), "1 + (s+t)*v1*w2");
    assert_eq!(evaluate("x[-e1+e2](1/2)", 4).unwrap().render(), "x[-e1+e2](1/2)");
    assert!(matches!(evaluate("chi(v1)", 4), Err(Error::Domain(_))));
}

fn fragment() -> impl Strategy<Value = String> {
    prop::sample::select(vec![
        "X", "x", "W", "h", "[", "]", "(", ")", "*", "e1", "-e2", "+e3", "t", "1/2", "-1", "chi", "psi", "theta+",
        "v1", "w2", " ", "e9", "0", "/", "^",
    ])
    .prop_map(String::from)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn malformed_inputs_never_crash(parts in prop::collection::vec(fragment(), 0..10)) {
        let src = parts.concat();
        if let Err(e) = evaluate(&src, 4) {
            prop_assert!(matches!(e.exit_code(), 1 | 2), "{src}: {e}");
        }
    }

    #[test]
    fn arbitrary_text_is_a_parse_error_or_value(src in "\\PC{0,20}") {
        if let Err(e) = evaluate(&src, 4) {
            prop_assert!(matches!(e.exit_code(), 1 | 2), "{src}: {e}");
        }
    }
}
