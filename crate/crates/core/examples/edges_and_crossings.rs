//! Lists the tagged edges of a punctured pentagon with their lengths and
//! classes, then prints the crossing matrix.

use dncat::geometry::Polygon;

fn main() -> dncat::error::Result<()> {
    let p = Polygon::new(5)?;
    let edges = p.all_edges();
    for e in &edges {
        println!("{e:<8} length {:>2}  {:?}", p.length(e), p.classify(e));
    }
    println!();
    print!("{:8}", "");
    for e in &edges {
        print!("{:>3}", p.edge_id(e));
    }
    println!();
    for m in &edges {
        print!("{m:<8}");
        for e in &edges {
            print!("{:>3}", p.crossing(m, e));
        }
        println!();
    }
    let m = p.parse_edge("p:1-4")?;
    println!("\ntau(p:1-4) = {}, sigma(s:2:+) = {}", p.tau(&m), p.sigma(&p.parse_edge("s:2:+")?));
    Ok(())
}
