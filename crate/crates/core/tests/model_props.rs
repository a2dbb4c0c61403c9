use proptest::prelude::*;

use repairforge::model::{parse_facts, Database, Fact, Value};

fn value() -> impl Strategy<Value = Value> {
    prop_oneof![
        (-50i64..50).prop_map(Value::Int),
        (-20i64..20, 1i64..7).prop_map(|(n, d)| Value::rational(n, d).unwrap()),
        "[a-z][a-z0-9_]{0,4}".prop_map(Value::Symbol),
        "[A-Z ]{1,4}".prop_map(Value::Symbol),
    ]
}

fn fact() -> impl Strategy<Value = Fact> {
    ("[a-z]{1,3}", prop::collection::vec(value(), 0..4)).prop_map(|(r, args)| Fact::new(r, args))
}

proptest! {
    #[test]
    fn fact_order_is_total(a in fact(), b in fact(), c in fact()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b).is_eq(), a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn fact_text_round_trips(f in fact()) {
        let text = f.to_string();
        prop_assert_eq!(Fact::parse(&text).unwrap(), f);
    }

    #[test]
    fn rationals_order_by_value(a in -30i64..30, b in 1i64..9, c in -30i64..30, d in 1i64..9) {
        let x = Value::rational(a, b).unwrap();
        let y = Value::rational(c, d).unwrap();
        prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
    }

    #[test]
    fn database_text_round_trips(facts in prop::collection::vec(fact(), 0..12)) {
        let mut db = Database::new();
        for f in facts {
            // facts sharing a relation name but not an arity are rejected
            let _ = db.insert(f);
        }
        let back = parse_facts(&db.to_facts_text()).unwrap();
        prop_assert_eq!(back.facts(), db.facts());
        prop_assert_eq!(back.schema(), db.schema());
    }
}

#[test]
fn zero_denominator_is_rejected() {
    assert!(Value::rational(1, 0).is_err());
    assert_eq!(Value::rational(4, 2).unwrap(), Value::Int(2));
}
