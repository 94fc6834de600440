use std::fs;
use std::path::Path;

use holefree::io::{detect_format, read_graph};
use holefree_core::format::{parse_graph, serialize_graph, to_graph6, Format};
use holefree_core::generate::{complete_bipartite, cycle, grotzsch, petersen};
use proptest::prelude::*;

#[test]
fn format_detection() {
    assert_eq!(detect_format(Path::new("a.g6"), b"n 3\n"), Format::Graph6);
    assert_eq!(detect_format(Path::new("a.txt"), b"Dhc"), Format::EdgeList);
    assert_eq!(detect_format(Path::new("a"), b"  n 3\n0 1\n"), Format::EdgeList);
    assert_eq!(detect_format(Path::new("a"), b"Dhc\n"), Format::Graph6);
}

#[test]
fn both_encodings_read_back() {
    let d = tempfile::tempdir().unwrap();
    for g in [petersen(), grotzsch(), cycle(5).unwrap(), complete_bipartite(3, 4)] {
        let p6 = d.path().join("g.g6");
        let pe = d.path().join("g.txt");
        fs::write(&p6, serialize_graph(&g, Format::Graph6)).unwrap();
        fs::write(&pe, serialize_graph(&g, Format::EdgeList)).unwrap();
        assert_eq!(read_graph(&p6, None).unwrap(), g);
        assert_eq!(read_graph(&pe, None).unwrap(), g);
        assert!(read_graph(&pe, Some(Format::Graph6)).is_err());
    }
}

#[test]
fn graph6_bytes_follow_the_published_layout() {
    // K2, the empty graph on two vertices and C5 encoded by hand.
    assert_eq!(to_graph6(&complete_bipartite(1, 1)), "A_");
    assert_eq!(parse_graph(b"A?", Format::Graph6).unwrap().edge_count(), 0);
    assert_eq!(to_graph6(&cycle(5).unwrap()), "Dhc");
    // Petersen as numbered here: outer 0..5, spokes i-(i+5), inner pentagram.
    let p = to_graph6(&petersen());
    assert_eq!(p.len(), 9);
    assert_eq!(parse_graph(p.as_bytes(), Format::Graph6).unwrap(), petersen());
}

#[test]
fn read_errors_name_the_file() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path().join("x.txt");
    fs::write(&p, "n 3\n0 1\n1 3\n").unwrap();
    let e = read_graph(&p, None).unwrap_err().to_string();
    assert!(e.contains("x.txt") && e.contains("line 3"), "{e}");
    let e = read_graph(&d.path().join("nope.g6"), None).unwrap_err().to_string();
    assert!(e.contains("nope.g6"), "{e}");
}

proptest! {
    #[test]
    fn arbitrary_bytes_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        let _ = parse_graph(&bytes, Format::Graph6);
        let _ = parse_graph(&bytes, Format::EdgeList);
    }

    #[test]
    fn printable_graph6_noise_round_trips_when_accepted(bytes in proptest::collection::vec(63u8..=126, 1..20)) {
        if let Ok(g) = parse_graph(&bytes, Format::Graph6) {
            let s = to_graph6(&g);
            let body: Vec<u8> = bytes.clone();
            prop_assert_eq!(s.as_bytes(), body.as_slice());
        }
    }
}
