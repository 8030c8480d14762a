use moufang::fixtures::{generate_fixture, FIXTURES};
use moufang::format::{digest, load_document, parse_document, write_document, Document};
use moufang::BinaryAlgebra;

#[test]
fn every_fixture_round_trips_bitwise() {
    for name in FIXTURES {
        let doc = generate_fixture(name, 7).unwrap();
        let text = write_document(&doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(write_document(&back), text, "{name}");
    }
}

#[test]
fn octonion_file_matches_in_memory_construction() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("octonions.json");
    let text = write_document(&generate_fixture("octonions", 0).unwrap());
    std::fs::write(&path, &text).unwrap();
    let (doc, bytes) = load_document(&path).unwrap();
    assert_eq!(doc, Document::Binary(BinaryAlgebra::octonions()));
    assert_eq!(bytes, text.as_bytes());
    assert_eq!(digest(&bytes), digest(text.as_bytes()));
}

#[test]
fn pair_round_trip_keeps_operators() {
    let pair = moufang::pair_from_alternative(&BinaryAlgebra::split_octonions()).unwrap();
    let text = write_document(&Document::Pair(pair.clone()));
    let Document::Pair(back) = parse_document(&text).unwrap() else {
        panic!("wrong kind")
    };
    assert_eq!(back, pair);
    assert!(back.is_faithful());
}
