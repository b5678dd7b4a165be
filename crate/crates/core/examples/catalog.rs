//! Builds the catalog for n = 5 in a temporary directory and reads it back.

use dncat::catalog::Catalog;
use dncat::geometry::Polygon;

fn main() -> dncat::error::Result<()> {
    let root = std::env::temp_dir().join(format!("dncat-example-{}", std::process::id()));
    let built = Catalog::build(Polygon::new(5)?)?;
    let dir = built.write(&root)?;
    let read = Catalog::read(&root, 5)?;
    assert_eq!(read, built);
    println!("wrote {}", dir.display());
    println!("{} triangulations, {} classes", read.meta.triangulation_count, read.meta.class_count);
    for (file, sum) in &read.meta.checksums {
        println!("sha256 {sum}  {file}");
    }
    let first = &read.classes[0];
    println!("first class: {} ({}, orbit {})", first.representative, first.kind, first.orbit_size);
    let _ = std::fs::remove_dir_all(&root);
    Ok(())
}
