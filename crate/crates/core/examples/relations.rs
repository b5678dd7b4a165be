//! Relations of the cluster-tilted algebra for one triangulation of each
//! type.

use dncat::geometry::Polygon;
use dncat::quiver::{quiver_of, relations_of};
use dncat::triangulation::Triangulation;

fn main() -> dncat::error::Result<()> {
    let p = Polygon::new(6)?;
    for spec in ["p:1-3,p:1-4,p:1-5,p:1-6,s:1:+,s:1:-", "p:2-4,p:4-2,p:4-6,p:6-2,s:4:+,s:4:-", "p:1-3,p:3-5,p:5-1,s:1:+,s:3:+,s:5:+"] {
        let t = Triangulation::parse(p, spec)?;
        let q = quiver_of(&t)?;
        let r = relations_of(&t, &q)?;
        println!("{t} ({})", t.classify_type()?);
        println!("  {q}");
        if r.is_empty() {
            println!("  no relations");
        }
        for line in r.to_string().lines() {
            println!("  {line}");
        }
    }
    Ok(())
}
