//! The translation quiver on Z_n x {1..n} and the map phi from tagged edges.

use dncat::arquiver::{phi, tau_ar, ArQuiver};
use dncat::geometry::Polygon;

fn main() -> dncat::error::Result<()> {
    let p = Polygon::new(5)?;
    let ar = ArQuiver::build(p);
    println!("{} vertices, {} arrows", ar.vertices().len(), ar.arrows().len());
    for e in p.all_edges() {
        let v = phi(p, &e)?;
        assert_eq!(phi(p, &p.tau(&e))?, tau_ar(p, v)?);
        println!("{e:<8} -> {v}");
    }
    println!("{}", ar.to_dot(true));
    Ok(())
}
