//! Counts triangulations for n = 4..9 and prints the first few at n = 5.

use dncat::geometry::Polygon;
use dncat::triangulation::enumerate_all;

fn main() -> dncat::error::Result<()> {
    for n in 4..=9 {
        let all = enumerate_all(Polygon::new(n)?);
        println!("n = {n}: {} triangulations", all.len());
    }
    for t in enumerate_all(Polygon::new(5)?).iter().take(5) {
        println!("{t}  ({})", t.classify_type()?);
    }
    Ok(())
}
