//! Quiver of a triangulation by flip transport and by the direct triangle
//! rule, with DOT output.

use dncat::geometry::Polygon;
use dncat::quiver::{direct_quiver_of, quiver_of};
use dncat::triangulation::Triangulation;

fn main() -> dncat::error::Result<()> {
    let p = Polygon::new(6)?;
    let t = Triangulation::parse(p, "p:1-3,p:3-5,p:5-1,s:1:+,s:3:+,s:5:+")?;
    let q = quiver_of(&t)?;
    println!("{t} ({})", t.classify_type()?);
    println!("arrows: {q}");
    assert!(q.same_labelled(&direct_quiver_of(&t)?));

    let flipped = q.mutate_at(&p.parse_edge("s:3:+")?)?;
    println!("mutated at s:3:+: {flipped}");
    println!("{}", q.to_dot("example"));
    Ok(())
}
