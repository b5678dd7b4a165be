use std::fs;

use dncat::catalog::{size_dir, Catalog, CLASSES_FILE, META_FILE, TRIANGULATIONS_FILE};
use dncat::geometry::Polygon;

fn files(dir: &std::path::Path) -> Vec<Vec<u8>> {
    [TRIANGULATIONS_FILE, CLASSES_FILE, META_FILE].iter().map(|f| fs::read(dir.join(f)).unwrap()).collect()
}

#[test]
fn write_read_write_is_byte_identical() {
    let first = tempfile::tempdir().unwrap();
    let second = tempfile::tempdir().unwrap();
    let built = Catalog::build(Polygon::new(6).unwrap()).unwrap();
    let dir = built.write(first.path()).unwrap();
    assert_eq!(dir, size_dir(first.path(), 6));

    let read = Catalog::read(first.path(), 6).unwrap();
    assert_eq!(read, built);
    read.write(second.path()).unwrap();
    assert_eq!(files(&dir), files(&size_dir(second.path(), 6)));

    let rebuilt = Catalog::build(Polygon::new(6).unwrap()).unwrap();
    rebuilt.write(second.path()).unwrap();
    assert_eq!(files(&dir), files(&size_dir(second.path(), 6)));
}

#[test]
fn meta_counts() {
    let c = Catalog::build(Polygon::new(5).unwrap()).unwrap();
    assert_eq!(c.meta.triangulation_count, 182);
    assert_eq!(c.meta.class_count, 26);
    assert_eq!(c.meta.class_census.values().sum::<usize>(), 26);
    assert_eq!(c.meta.triangulation_census.values().sum::<usize>(), 182);
    assert_eq!(c.classes.iter().map(|r| r.orbit_size).sum::<usize>(), 182);
    for r in &c.classes {
        assert_eq!(r.quiver.vertices.len(), 5);
    }
}

#[test]
fn corruption_is_detected() {
    let root = tempfile::tempdir().unwrap();
    let dir = Catalog::build(Polygon::new(5).unwrap()).unwrap().write(root.path()).unwrap();
    let path = dir.join(CLASSES_FILE);
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replacen("\"orbitSize\":", "\"orbitSize\": ", 1)).unwrap();
    let err = Catalog::read(root.path(), 5).unwrap_err();
    assert!(err.to_string().contains("checksum"), "{err}");
}

#[test]
fn missing_catalog_is_an_error() {
    let root = tempfile::tempdir().unwrap();
    assert!(Catalog::read(root.path(), 5).is_err());
}
