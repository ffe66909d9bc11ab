use ellgenus::catalog;
use ellgenus::file::{parse_manifold_file, serialize_manifold, FileError};
use ellgenus_core::localization::{FixedPoint, S1ManifoldData};
use proptest::prelude::*;

fn err(text: &str) -> FileError {
    parse_manifold_file(text).expect_err("should be rejected")
}

#[test]
fn cp2_file_parses_and_evaluates() {
    let text = r#"{"name": "CP2", "dimension": 4,
        "fixed_points": [{"weights": [1, 2]}, {"weights": [-1, 1]}, {"weights": [-2, -1]}],
        "pontryagin_numbers": {"[1]": "3"}}"#;
    let m = parse_manifold_file(text).unwrap();
    let out = ellgenus::run_command(["ellgenus", "compute", "--manifold", "builtin:cp2_12", "--genus", "a-hat"]);
    assert!(out.stdout.contains("a-hat: -1/8\n"));
    assert_eq!(m.fixed_points().len(), 3);
    assert_eq!(m.pontryagin().unwrap().numbers().len(), 1);
}

#[test]
fn zero_weight_is_named() {
    let e = err(r#"{"name": "x", "dimension": 4, "fixed_points": [{"weights": [0, 1]}]}"#);
    assert!(matches!(e, FileError::ZeroWeight { point: 0, index: 0 }));
    assert!(e.to_string().contains("zero weight"));
}

#[test]
fn short_weight_list_is_named() {
    let e = err(r#"{"name": "x", "dimension": 4, "fixed_points": [{"weights": [1]}]}"#);
    assert!(matches!(e, FileError::WeightListLength { point: 0, expected: 2, found: 1 }));
    assert!(e.to_string().contains("weight-list length"));
}

#[test]
fn malformed_rationals_are_rejected() {
    for bad in ["1.5", "1/0", "x", "", "1/-2", " 3"] {
        let text = format!(
            r#"{{"name": "x", "dimension": 4, "fixed_points": [{{"weights": [1, 2]}}],
                "pontryagin_numbers": {{"[1]": "{bad}"}}}}"#
        );
        assert!(matches!(err(&text), FileError::MalformedRational { .. }), "{bad:?}");
    }
}

#[test]
fn schema_and_key_errors() {
    assert!(matches!(err("{"), FileError::Schema(_)));
    assert!(matches!(
        err(r#"{"name": "x", "dimension": 2, "fixed_points": [{"weights": [1]}], "extra": 1}"#),
        FileError::Schema(_)
    ));
    assert!(matches!(
        err(r#"{"name": "x", "dimension": 3, "fixed_points": [{"weights": [1]}]}"#),
        FileError::OddDimension(3)
    ));
    assert!(matches!(err(r#"{"name": "x", "dimension": 2, "fixed_points": []}"#), FileError::NoFixedPoints));
    assert!(matches!(
        err(r#"{"name": "x", "dimension": 2, "fixed_points": [{"weights": [1], "sign": 2}]}"#),
        FileError::InvalidSign { point: 0, sign: 2 }
    ));
    let base = r#"{"name": "x", "dimension": 8, "fixed_points": [{"weights": [1, 2, 3, 4]}], "pontryagin_numbers": "#;
    assert!(matches!(err(&format!(r#"{base}{{"[1,2]": "1"}}}}"#)), FileError::PartitionKey { .. }));
    assert!(matches!(err(&format!(r#"{base}{{"[1]": "1"}}}}"#)), FileError::PartitionWeight { .. }));
    assert!(parse_manifold_file(&format!(r#"{base}{{"[2]": "1", "[1,1]": "-2/3"}}}}"#)).is_ok());
}

#[test]
fn catalog_round_trips_byte_for_byte() {
    for (name, m) in catalog::all() {
        let text = serialize_manifold(&m);
        let back = parse_manifold_file(&text).unwrap();
        assert_eq!(back, m, "{name}");
        assert_eq!(serialize_manifold(&back), text, "{name}");
    }
}

#[test]
fn shipped_data_files_are_canonical() {
    for (name, m) in catalog::all() {
        let path = format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let on_disk = std::fs::read_to_string(&path).unwrap();
        assert_eq!(on_disk, serialize_manifold(&m), "{path}");
    }
}

fn arb_manifold() -> impl Strategy<Value = S1ManifoldData> {
    (1usize..=3, 1usize..=4).prop_flat_map(|(n, k)| {
        let weight = prop_oneof![-5i64..=-1, 1i64..=5];
        let point = (prop::collection::vec(weight, n), prop::bool::ANY)
            .prop_map(|(w, neg)| FixedPoint::with_sign(w, if neg { -1 } else { 1 }));
        (prop::collection::vec(point, k), "[a-zA-Z0-9 ]{0,12}").prop_map(move |(pts, name)| {
            S1ManifoldData::new(name, 2 * n as u32, pts, None).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn random_files_round_trip(m in arb_manifold()) {
        let text = serialize_manifold(&m);
        let back = parse_manifold_file(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(serialize_manifold(&back), text);
    }
}
