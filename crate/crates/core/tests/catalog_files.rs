mod common;

use std::path::PathBuf;

use twistspec_core::catalog::{self, load_dir, save_dir, standard_catalog};
use twistspec_core::spectra::{classify, ClassifyOptions};
use twistspec_core::{Error, GroupDefinition};

fn shipped_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

#[test]
fn every_catalog_entry_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let defs = standard_catalog();
    save_dir(dir.path(), &defs).unwrap();
    let loaded: Vec<GroupDefinition> = load_dir(dir.path())
        .unwrap()
        .into_iter()
        .map(|(_, d)| d.unwrap())
        .collect();
    assert_eq!(loaded.len(), defs.len());
    for d in &defs {
        assert!(loaded.contains(d), "{} lost in round trip", d.name);
    }
}

#[test]
fn shipped_catalog_matches_builders() {
    let mut shipped: Vec<GroupDefinition> = load_dir(&shipped_dir())
        .unwrap()
        .into_iter()
        .map(|(_, d)| d.unwrap())
        .collect();
    let mut built = standard_catalog();
    shipped.sort_by(|a, b| a.name.cmp(&b.name));
    built.sort_by(|a, b| a.name.cmp(&b.name));
    assert_eq!(shipped, built);
}

#[test]
fn every_builder_meets_its_expectations() {
    for d in standard_catalog() {
        let g = d
            .materialize()
            .unwrap_or_else(|e| panic!("{}: {e}", d.name));
        if let Some(n) = d.expected_order() {
            assert_eq!(g.order(), n, "{}", d.name);
        }
        if let Some(k) = d.expected_class_number() {
            assert_eq!(common::class_count(&g), k, "{}", d.name);
        }
    }
}

#[test]
fn loaded_s3_has_three_classes() {
    let d = GroupDefinition::load(&shipped_dir().join("s3.json")).unwrap();
    let g = d.materialize().unwrap();
    let r = classify(&d.name, &g, ClassifyOptions::default()).unwrap();
    assert_eq!(r.order, 6);
    assert_eq!(r.class_number, 3);
    assert_eq!(r.spectrum.values(), vec![3]);
}

#[test]
fn non_bijective_images_fail_validation() {
    let text = r#"{"name": "bad", "degree": 3, "generators": [[1, 1, 2]]}"#;
    match GroupDefinition::from_json(text, "bad.json") {
        Err(Error::Validation { message, .. }) => assert!(message.contains("appears twice")),
        other => panic!("expected validation error, got {other:?}"),
    }
}

#[test]
fn parse_errors_carry_a_position() {
    let text = "{\n  \"name\": \"x\",\n  \"degree\": \"three\",\n  \"generators\": []\n}";
    match GroupDefinition::from_json(text, "x.json") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{"name": "x", "degree": 1, "generators": [], "colour": 1}"#;
    assert!(GroupDefinition::from_json(text, "x.json").is_err());
}

#[test]
fn wrong_expected_order_is_reported() {
    let d = catalog::cyclic(4).unwrap().with_order(5);
    assert!(matches!(
        d.materialize(),
        Err(Error::ExpectationMismatch { .. })
    ));
}

#[test]
fn load_dir_reports_bad_files_individually() {
    let dir = tempfile::tempdir().unwrap();
    catalog::cyclic(3)
        .unwrap()
        .save(&dir.path().join("a.json"))
        .unwrap();
    std::fs::write(dir.path().join("b.json"), "not json").unwrap();
    let entries = load_dir(dir.path()).unwrap();
    assert_eq!(entries.len(), 2);
    assert!(entries[0].1.is_ok());
    assert!(entries[1].1.is_err());
}
