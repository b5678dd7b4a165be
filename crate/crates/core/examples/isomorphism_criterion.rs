//! Classes of triangulations against isomorphism classes of quivers: one to
//! one from n = 5 on, but not for the punctured square.

use dncat::geometry::Polygon;
use dncat::verify::{d4_witness, Verifier};

fn main() -> dncat::error::Result<()> {
    for n in 4..=7 {
        let v = Verifier::new(Polygon::new(n)?);
        let codes = v.class_codes()?;
        let mut distinct: Vec<_> = codes.iter().map(|(_, c)| c).collect();
        distinct.sort();
        distinct.dedup();
        println!("n = {n}: {} classes, {} quivers up to isomorphism", codes.len(), distinct.len());
    }
    if let Some((a, b)) = d4_witness()? {
        println!("n = 4 witness: {a} and {b}");
    }
    Ok(())
}
