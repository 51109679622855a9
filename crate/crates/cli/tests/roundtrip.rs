mod common;

use common::{expr, value};
use proptest::prelude::*;
use w22_cli::eval::Value;
use w22_cli::expr::parse;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_inverts_print(e in expr()) {
        let text = e.to_string();
        let back = parse(&text);
        prop_assert!(back.is_ok(), "{} failed to parse: {:?}", text, back);
        prop_assert_eq!(back.unwrap(), e, "{}", text);
    }

    #[test]
    fn json_value_round_trip(v in value()) {
        let text = serde_json::to_string(&v.to_json()).unwrap();
        let back = Value::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        prop_assert_eq!(back, v);
    }
}
