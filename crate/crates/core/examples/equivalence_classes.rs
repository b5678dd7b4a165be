//! Classes of triangulations under rotation and tag swap, with the census
//! by type.

use std::collections::BTreeMap;

use dncat::geometry::Polygon;
use dncat::triangulation::{classes, enumerate_all};

fn main() -> dncat::error::Result<()> {
    for n in 4..=8 {
        let all = enumerate_all(Polygon::new(n)?);
        let found = classes(&all)?;
        let mut census = BTreeMap::new();
        for c in &found {
            *census.entry(c.kind.to_string()).or_insert(0) += 1;
        }
        println!("n = {n}: {} triangulations, {} classes, {census:?}", all.len(), found.len());
    }
    let all = enumerate_all(Polygon::new(5)?);
    for c in classes(&all)?.iter().take(6) {
        println!("{}  orbit {}  {}", c.representative, c.orbit_size, c.kind);
    }
    Ok(())
}
