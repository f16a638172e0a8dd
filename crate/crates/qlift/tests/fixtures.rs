//! The checked-in fixtures are exactly what the selection rules produce.
//! Run with `QLIFT_REGENERATE=1` to rewrite them.

use qlift::fixtures::{self, CORRUPTED, SPEC_FIXTURES};

#[test]
fn fixtures_match_their_generators() {
    let regenerate = std::env::var_os("QLIFT_REGENERATE").is_some();
    for name in SPEC_FIXTURES.iter().chain([&CORRUPTED]) {
        let expected = fixtures::generate(name).expect("known fixture");
        let path = fixtures::dir().join(name);
        if regenerate {
            std::fs::write(&path, &expected).unwrap();
        }
        let actual = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(actual, expected, "{name} is stale; rerun with QLIFT_REGENERATE=1");
    }
}

#[test]
fn fixture_specs_are_admissible_and_round_trip() {
    for name in SPEC_FIXTURES {
        let spec = fixtures::load_spec(name).unwrap();
        assert!(spec.admissible().is_ok(), "{name}");
        assert_eq!(Some(spec), fixtures::generate_spec(name));
    }
    let corrupted = fixtures::load_pres(CORRUPTED).unwrap();
    assert_eq!(corrupted, fixtures::corrupted());
    assert!(corrupted.build().is_ok());
}

#[test]
fn canonical_data() {
    let z33 = fixtures::load_spec(fixtures::B2_Z3Z3).unwrap();
    assert!(z33.is_zero());
    assert_eq!(z33.datum.group().factors(), [3, 3]);
    let z99 = fixtures::load_spec(fixtures::B2_Z9Z9).unwrap();
    assert_eq!((z99.mu1, z99.mu2), (1, 1));
    assert!(qlift_core::liftings::is_z49_datum(&fixtures::load_spec(fixtures::A2_Z49).unwrap().datum));
}
