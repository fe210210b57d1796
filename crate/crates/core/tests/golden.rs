//! Canonical printed hierarchies compared against checked-in text.
//! Set `BLESS=1` to rewrite the files after an intended change.

use std::path::PathBuf;

use filament_core::curvegeom::pf_hierarchy;
use filament_core::exprio::{parse, parse_field, print, print_field};
use filament_core::hamiltonian::mkdv_hierarchy;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check(name: &str, lines: Vec<String>) {
    let path = golden_path(name);
    let text = lines.join("\n") + "\n";
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, expected, "{name} differs from golden output");
}

#[test]
fn pf_hierarchy_golden() {
    let h = pf_hierarchy(3).unwrap();
    let lines: Vec<String> = h.iter().map(|v| print_field(v.field())).collect();
    for (line, v) in lines.iter().zip(&h) {
        assert_eq!(&parse_field(line).unwrap(), v.field());
    }
    check("pf_hierarchy.txt", lines);
}

#[test]
fn mkdv_hierarchy_golden() {
    let h = mkdv_hierarchy(3).unwrap();
    let lines: Vec<String> = h.iter().map(|a| print(a.poly())).collect();
    for (line, a) in lines.iter().zip(&h) {
        assert_eq!(&parse(line).unwrap(), a.poly());
    }
    check("mkdv_hierarchy.txt", lines);
}
