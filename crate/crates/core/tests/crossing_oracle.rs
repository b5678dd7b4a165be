//! Crossing numbers against a planar model: boundary vertices on the unit
//! circle, the puncture at the origin, plain edges drawn as staples (radial
//! leg in, arc around at a fixed depth, radial leg out) and spokes as radii.
//! The oracle minimises the number of proper intersections over the two
//! depth orders and small angular perturbations of the leg endpoints.

use std::f64::consts::TAU;

use dncat::geometry::{Polygon, Tag, TaggedEdge};

type Pt = (f64, f64);

const STEPS_PER_SIDE: usize = 3;
const EPS: f64 = 0.0371;

fn at(r: f64, angle: f64) -> Pt {
    (r * angle.cos(), r * angle.sin())
}

fn vertex_angle(n: u32, v: u32) -> f64 {
    TAU * f64::from(v - 1) / f64::from(n)
}

/// Polyline of an edge. `depth` is the staple radius, `da`/`db` perturb the
/// angles where the legs meet the arc.
fn curve(n: u32, e: &TaggedEdge, depth: f64, da: f64, db: f64) -> Vec<Pt> {
    match *e {
        TaggedEdge::Spoke { a, .. } => vec![at(1.0, vertex_angle(n, a)), (0.0, 0.0)],
        TaggedEdge::Plain { a, b } => {
            let start = vertex_angle(n, a);
            let steps = (b + n - a) % n;
            let end = start + TAU * f64::from(steps) / f64::from(n);
            let (s, t) = (start + da, end + db);
            let pieces = STEPS_PER_SIDE * steps as usize + 1;
            let mut pts = vec![at(1.0, start)];
            pts.extend((0..=pieces).map(|k| at(depth, s + (t - s) * k as f64 / pieces as f64)));
            pts.push(at(1.0, end));
            pts
        }
    }
}

fn orient(a: Pt, b: Pt, c: Pt) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn proper(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool {
    let tol = 1e-12;
    let (d1, d2) = (orient(q1, q2, p1), orient(q1, q2, p2));
    let (d3, d4) = (orient(p1, p2, q1), orient(p1, p2, q2));
    d1.abs() > tol && d2.abs() > tol && d3.abs() > tol && d4.abs() > tol && (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0)
}

fn intersections(x: &[Pt], y: &[Pt]) -> usize {
    let mut count = 0;
    for s in x.windows(2) {
        for t in y.windows(2) {
            if proper(s[0], s[1], t[0], t[1]) {
                count += 1;
            }
        }
    }
    count
}

fn oracle(n: u32, m: &TaggedEdge, e: &TaggedEdge) -> u8 {
    if m == e {
        return 0;
    }
    if let (TaggedEdge::Spoke { a, tag: s }, TaggedEdge::Spoke { a: b, tag: t }) = (m, e) {
        // both radii meet only at the puncture; the tag rule decides
        return u8::from(a != b && s != t);
    }
    let perturb = [-EPS, EPS];
    let mut best = usize::MAX;
    for (dm, de) in [(0.45, 0.75), (0.75, 0.45)] {
        for &ma in &perturb {
            for &mb in &perturb {
                for &ea in &perturb {
                    for &eb in &perturb {
                        let k = intersections(&curve(n, m, dm, ma, mb), &curve(n, e, de, ea, eb));
                        best = best.min(k);
                    }
                }
            }
        }
    }
    best as u8
}

#[test]
fn crossing_matches_planar_oracle() {
    for n in 4..=7 {
        let p = Polygon::new(n).unwrap();
        let edges = p.all_edges();
        for (i, m) in edges.iter().enumerate() {
            for e in &edges[i..] {
                assert_eq!(p.crossing(m, e), oracle(n, m, e), "n = {n}, {m} vs {e}");
            }
        }
    }
}

#[test]
fn oracle_reproduces_reference_values() {
    let p = Polygon::new(6).unwrap();
    let e = |s: &str| p.parse_edge(s).unwrap();
    assert_eq!(oracle(6, &e("p:1-4"), &e("p:3-2")), 2);
    assert_eq!(oracle(6, &e("p:1-4"), &e("p:4-1")), 0);
    assert_eq!(oracle(6, &e("p:1-4"), &e("s:2:+")), 1);
    assert_eq!(oracle(6, &e("p:1-4"), &e("s:2:-")), 1);
    assert_eq!(oracle(6, &e("p:1-5"), &e("p:2-4")), 0);
    assert_eq!(p.crossing(&e("p:1-4"), &e("p:3-2")), 2);
    assert_eq!(p.crossing(&TaggedEdge::spoke(2, Tag::Plus), &TaggedEdge::spoke(3, Tag::Minus)), 1);
}

#[test]
fn hom_and_ext_dimensions() {
    let p = Polygon::new(8).unwrap();
    assert_eq!(p.hom_dim(&TaggedEdge::plain(1, 3), &TaggedEdge::plain(1, 4)), 1);
    for m in p.all_edges() {
        assert_eq!(p.ext_dim(&m, &m), 0);
        for e in p.all_edges() {
            assert_eq!(p.ext_dim(&m, &e), p.ext_dim(&e, &m));
            assert_eq!(p.hom_dim(&m, &e), p.crossing(&m, &p.tau_inv(&e)));
        }
    }
}
