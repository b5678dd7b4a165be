//! Walks the flip graph: flips every edge of the fan and checks that
//! flipping back returns it, then measures the graph at n = 6.

use dncat::geometry::Polygon;
use dncat::triangulation::{enumerate_all, Triangulation};

fn main() -> dncat::error::Result<()> {
    let p = Polygon::new(5)?;
    let fan = Triangulation::fan(p);
    println!("fan: {fan}");
    for e in fan.edges() {
        let (next, added) = fan.flip(e)?;
        assert_eq!(next.flip(&added)?.0, fan);
        println!("  flip {e} -> {added}: {next}");
    }

    let p = Polygon::new(6)?;
    let all = enumerate_all(p);
    let edges: usize = all.iter().map(|t| t.edges().len()).sum::<usize>() / 2;
    println!("n = 6: {} vertices and {edges} edges in the flip graph", all.len());
    Ok(())
}
