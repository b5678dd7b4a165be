//! Runs every verification suite for n = 4..7.

use dncat::geometry::Polygon;
use dncat::verify::{Suite, Verifier};

fn main() -> dncat::error::Result<()> {
    for n in 4..=7 {
        let report = Verifier::new(Polygon::new(n)?).run(Suite::All);
        println!("{report}\n");
    }
    Ok(())
}
