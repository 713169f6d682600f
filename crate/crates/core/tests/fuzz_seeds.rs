//! Replays the checked-in fuzz seeds through the same entry points the fuzz
//! targets drive.

use std::fs;
use std::path::PathBuf;

use pcube::export::parse_graph_json;
use pcube::verify::IntRange;
use pcube::{BivarPoly, PString, Polynomial};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| fs::read_to_string(entry.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn pstring_seeds() {
    let parsed = seeds("pstring").iter().filter(|t| t.parse::<PString>().is_ok()).count();
    assert_eq!(parsed, 3);
}

#[test]
fn int_range_seeds() {
    for text in seeds("int_range") {
        let r: IntRange = text.parse().unwrap();
        assert_eq!(r.to_string().parse::<IntRange>().unwrap(), r);
    }
}

#[test]
fn polynomial_seeds() {
    for text in seeds("polynomial_json") {
        let f = Polynomial::from_json(&text).unwrap();
        assert_eq!(Polynomial::from_json(&serde_json::to_string(&f.to_json()).unwrap()).unwrap(), f);
    }
    for text in seeds("bivar_json") {
        let f = BivarPoly::from_json(&text).unwrap();
        assert_eq!(BivarPoly::from_json(&serde_json::to_string(&f.to_json()).unwrap()).unwrap(), f);
    }
}

#[test]
fn graph_seeds() {
    for text in seeds("graph_json") {
        parse_graph_json(&text).unwrap();
    }
}
