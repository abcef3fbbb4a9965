//! JSON records re-parse to equal values.

use proptest::prelude::*;
use randic::output::{
    format_fixed, round9, write_json, CheckLine, ExtremalRow, FamilyRow, Inputs, OutputRecord, Results,
};

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![-10.0f64..10.0, any::<f64>().prop_filter("finite", |x| x.is_finite())]
}

fn inputs() -> impl Strategy<Value = Inputs> {
    (
        proptest::option::of("[ -~]{0,12}"),
        proptest::option::of(0usize..1000),
        proptest::option::of(1u64..100_000),
        proptest::option::of(1u64..100_000),
        proptest::collection::vec("[a-z-]{1,12}", 0..4),
    )
        .prop_map(|(graph, order, n, b, scopes)| Inputs { graph, order, n, b, scopes, ..Inputs::default() })
}

fn results() -> impl Strategy<Value = Results> {
    prop_oneof![
        proptest::collection::vec(finite(), 0..20).prop_map(|spectrum| Results::Spectrum { spectrum }),
        finite().prop_map(|e| Results::Energy { energy: round9(e) }),
        proptest::collection::vec(
            (1u64..500, proptest::option::of(1u64..50), finite(), finite(), 1u64..200, proptest::option::of(finite()), finite()),
            0..5
        )
        .prop_map(|rows| Results::ExtremalTable {
            rows: rows
                .into_iter()
                .map(|(n, b, r, s, z, before, e)| ExtremalRow {
                    n,
                    b,
                    r,
                    s,
                    z,
                    energy_before: before,
                    energy: e,
                    energy_after: None,
                    extremal_graph: format!("T({z},{n},{z})"),
                })
                .collect()
        }),
        proptest::collection::vec((1u64..100, finite()), 0..6).prop_map(|rows| Results::FamilyTable {
            rows: rows.into_iter().map(|(p, energy)| FamilyRow { p, graph: format!("T({p},1)"), energy }).collect()
        }),
        proptest::collection::vec((any::<bool>(), "[ -~]{0,30}"), 0..5).prop_map(|c| Results::Verify {
            passed: c.iter().all(|x| x.0),
            checks: c.into_iter().map(|(passed, detail)| CheckLine { name: "check".into(), passed, detail }).collect()
        }),
    ]
}

proptest! {
    #[test]
    fn json_round_trip(command in "[a-z]{1,10}", inputs in inputs(), results in results(), prov in "[a-z-]{1,12}") {
        let rec = OutputRecord::new(&command, inputs, results, &prov);
        let mut buf = Vec::new();
        write_json(&rec, &mut buf).unwrap();
        let back: OutputRecord = serde_json::from_slice(&buf).unwrap();
        prop_assert_eq!(&back, &rec);
        let mut again = Vec::new();
        write_json(&back, &mut again).unwrap();
        prop_assert_eq!(buf, again);
    }

    #[test]
    fn nine_decimal_rounding(x in -1e6f64..1e6) {
        let s = format_fixed(x, 9);
        let (_, frac) = s.split_once('.').unwrap();
        prop_assert_eq!(frac.len(), 9);
        let parsed: f64 = s.parse().unwrap();
        prop_assert!((parsed - x).abs() <= 5e-10 + 1e-15 * x.abs().max(1.0));
        prop_assert_eq!(format_fixed(round9(x), 9), s);
    }
}

#[test]
fn field_order_is_fixed() {
    let rec = OutputRecord::new("energy", Inputs::default(), Results::Energy { energy: 2.0 }, "oracle");
    let mut buf = Vec::new();
    write_json(&rec, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let keys = ["\"command\"", "\"inputs\"", "\"results\"", "\"provenance\"", "\"version\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}
