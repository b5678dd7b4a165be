//! Quivers of triangulations: mutation transport from the fan, and a direct
//! construction from the triangles of the cut-open polygon.

use std::collections::{HashMap, VecDeque};

use super::Quiver;
use crate::error::{Error, Result};
use crate::geometry::{Polygon, TaggedEdge};
use crate::triangulation::{FlipTable, Triangulation};

/// The linear quiver `1 -> 2 -> ... -> k`.
pub fn linear_a(k: usize) -> Quiver<usize> {
    Quiver::from_arrows((1..=k).collect(), (1..k).map(|i| (i - 1, i)))
}

/// `1 -> 2 -> ... -> n-2` forking into `n-1` and `n`, with vertices labelled
/// by the fan at vertex 1: `p:1-(k+2)` is vertex `k`, `s:1:+` is `n-1` and
/// `s:1:-` is `n`.
pub fn base_quiver(polygon: Polygon) -> Quiver<TaggedEdge> {
    let n = polygon.n() as usize;
    let fan = Triangulation::fan(polygon);
    let mut arrows: Vec<(usize, usize)> = (1..n - 2).map(|i| (i - 1, i)).collect();
    arrows.push((n - 3, n - 2));
    arrows.push((n - 3, n - 1));
    Quiver::from_arrows(fan.edges().to_vec(), arrows)
}

/// Order in which the flip breadth-first search visits the edges of a
/// triangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlipOrder {
    Canonical,
    Reversed,
}

/// Quivers of every triangulation of one polygon, transported from the fan by
/// flip-mutation along a breadth-first spanning tree of the flip graph.
#[derive(Clone, Debug)]
pub struct QuiverAtlas {
    table: FlipTable,
    quivers: HashMap<Triangulation, Quiver<TaggedEdge>>,
}

impl QuiverAtlas {
    pub fn build(polygon: Polygon) -> Result<Self> {
        Self::build_with(polygon, FlipOrder::Canonical)
    }

    pub fn build_with(polygon: Polygon, order: FlipOrder) -> Result<Self> {
        let table = FlipTable::new(polygon);
        let fan = Triangulation::fan(polygon);
        let mut quivers = HashMap::new();
        quivers.insert(fan.clone(), base_quiver(polygon));
        let mut queue = VecDeque::from([fan]);
        while let Some(t) = queue.pop_front() {
            let q = quivers[&t].clone();
            let mut edges = t.edges().to_vec();
            if order == FlipOrder::Reversed {
                edges.reverse();
            }
            for e in &edges {
                let (next, _) = table.flip(&t, e)?;
                if quivers.contains_key(&next) {
                    continue;
                }
                let moved = transport(&q, &t, &next, e, &table)?;
                quivers.insert(next.clone(), moved);
                queue.push_back(next);
            }
        }
        Ok(QuiverAtlas { table, quivers })
    }

    pub fn polygon(&self) -> Polygon {
        self.table.polygon()
    }

    pub fn flip_table(&self) -> &FlipTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.quivers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quivers.is_empty()
    }

    /// The transported quiver, vertices in the triangulation's edge order.
    pub fn get(&self, t: &Triangulation) -> Result<&Quiver<TaggedEdge>> {
        self.quivers.get(t).ok_or_else(|| Error::ModelInconsistency(format!("{t} is not reachable from the fan by flips")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Triangulation, &Quiver<TaggedEdge>)> {
        self.quivers.iter()
    }

    /// The first flip (in triangulation, then edge order) whose transported
    /// quiver differs from the mutated one, if any.
    pub fn first_commutation_failure(&self) -> Result<Option<(Triangulation, TaggedEdge)>> {
        let mut keys: Vec<&Triangulation> = self.quivers.keys().collect();
        keys.sort();
        for t in keys {
            let q = &self.quivers[t];
            for e in t.edges() {
                let (next, _) = self.table.flip(t, e)?;
                let expected = transport(q, t, &next, e, &self.table)?;
                if self.get(&next)? != &expected {
                    return Ok(Some((t.clone(), *e)));
                }
            }
        }
        Ok(None)
    }
}

/// Mutates `q` (the quiver of `from`) at `edge` and relabels the vertex by the
/// replacement edge, listing vertices in the order of `to`.
fn transport(
    q: &Quiver<TaggedEdge>,
    from: &Triangulation,
    to: &Triangulation,
    edge: &TaggedEdge,
    table: &FlipTable,
) -> Result<Quiver<TaggedEdge>> {
    let (_, replacement) = table.flip(from, edge)?;
    let v = q.index_of(edge).ok_or_else(|| Error::UnknownVertex(edge.to_string()))?;
    let mut m = q.mutate(v);
    m.relabel(v, replacement);
    m.reorder(to.edges())
}

/// Quiver of one triangulation by mutation transport along a shortest flip
/// path from the fan.
pub fn quiver_of(t: &Triangulation) -> Result<Quiver<TaggedEdge>> {
    let polygon = t.polygon();
    let table = FlipTable::new(polygon);
    let fan = Triangulation::fan(polygon);
    let mut parent: HashMap<Triangulation, Option<(Triangulation, TaggedEdge)>> = HashMap::new();
    parent.insert(fan.clone(), None);
    let mut queue = VecDeque::from([fan.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == t {
            break;
        }
        for e in cur.edges() {
            let (next, _) = table.flip(&cur, e)?;
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), *e)));
                queue.push_back(next);
            }
        }
    }
    if !parent.contains_key(t) {
        return Err(Error::ModelInconsistency(format!("{t} is not reachable from the fan by flips")));
    }
    let mut path = Vec::new();
    let mut cur = t.clone();
    while let Some(Some((prev, e))) = parent.get(&cur) {
        path.push((prev.clone(), *e));
        cur = prev.clone();
    }
    let mut q = base_quiver(polygon);
    for (prev, e) in path.into_iter().rev() {
        let (next, _) = table.flip(&prev, &e)?;
        q = transport(&q, &prev, &next, &e, &table)?;
    }
    Ok(q)
}

/// A side of a cut-open polygon, or a diagonal, and the triangulation edges
/// whose quiver vertices it stands for.
struct Cut {
    /// Corners in counterclockwise order.
    corners: Vec<u32>,
    /// Marks for pairs of corner positions joined by an edge of the
    /// triangulation, with the vertices that pair feeds.
    arcs: HashMap<(usize, usize), Vec<TaggedEdge>>,
}

impl Cut {
    fn add(&mut self, i: usize, j: usize, feeds: Vec<TaggedEdge>) {
        self.arcs.insert((i.min(j), i.max(j)), feeds);
    }

    fn arc(&self, i: usize, j: usize) -> Option<&Vec<TaggedEdge>> {
        self.arcs.get(&(i.min(j), i.max(j)))
    }

    fn joined(&self, i: usize, j: usize) -> bool {
        let k = self.corners.len();
        (i + 1) % k == j || (j + 1) % k == i || self.arc(i, j).is_some()
    }

    /// Adds the triangle contributions to the skew matrix `b`.
    fn accumulate(&self, index: &HashMap<TaggedEdge, usize>, b: &mut [Vec<i32>]) {
        let k = self.corners.len();
        for u in 0..k {
            for v in u + 1..k {
                for w in v + 1..k {
                    if !(self.joined(u, v) && self.joined(v, w) && self.joined(w, u)) {
                        continue;
                    }
                    let sides = [self.arc(u, v), self.arc(v, w), self.arc(w, u)];
                    // arrows e2 -> e1, e3 -> e2, e1 -> e3
                    for (s, t) in [(1, 0), (2, 1), (0, 2)] {
                        if let (Some(xs), Some(ys)) = (sides[s], sides[t]) {
                            for x in xs {
                                for y in ys {
                                    b[index[x]][index[y]] += 1;
                                    b[index[y]][index[x]] -= 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Quiver read off the triangles of the polygon obtained by cutting along
/// the spokes (or, for a pair of spokes at one vertex, along the loop they
/// enclose). Each triangle contributes a clockwise 3-cycle on its sides that
/// are triangulation edges; opposite arrows cancel.
pub fn direct_quiver_of(t: &Triangulation) -> Result<Quiver<TaggedEdge>> {
    let p = t.polygon();
    let n = p.n();
    let edges = t.edges();
    let index: HashMap<TaggedEdge, usize> = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let spokes: Vec<TaggedEdge> = t.spokes().copied().collect();
    let plains: Vec<(u32, u32, TaggedEdge)> = edges
        .iter()
        .filter_map(|e| match *e {
            TaggedEdge::Plain { a, b } => Some((a, b, *e)),
            TaggedEdge::Spoke { .. } => None,
        })
        .collect();
    let mut cuts = Vec::new();
    let double = spokes.len() == 2 && spokes[0].start() == spokes[1].start();
    if double {
        // corners a, a+1, ..., a-1, a*; the side a* -> a is the loop
        let a = spokes[0].start();
        let corners: Vec<u32> = (0..n).map(|i| p.wrap(i64::from(a + i))).chain([a]).collect();
        let mut cut = Cut { corners, arcs: HashMap::new() };
        cut.add(n as usize, 0, spokes.clone());
        for &(x, y, e) in &plains {
            let i = p.offset(a, x) as usize;
            let j = if y == a { n as usize } else { p.offset(a, y) as usize };
            cut.add(i, j, vec![e]);
        }
        cuts.push(cut);
    } else {
        let mut bases: Vec<u32> = spokes.iter().map(TaggedEdge::start).collect();
        bases.sort_unstable();
        if bases.windows(2).any(|w| w[0] == w[1]) || bases.len() < 2 {
            return Err(Error::ModelInconsistency(format!("unexpected spoke configuration in {t}")));
        }
        let spoke_at = |v: u32| *spokes.iter().find(|s| s.start() == v).unwrap();
        for (i, &start) in bases.iter().enumerate() {
            let end = bases[(i + 1) % bases.len()];
            let span = p.offset(start, end);
            // corners start, ..., end, puncture
            let mut corners: Vec<u32> = (0..=span).map(|d| p.wrap(i64::from(start + d))).collect();
            corners.push(0);
            let centre = corners.len() - 1;
            let mut cut = Cut { corners, arcs: HashMap::new() };
            cut.add(centre, 0, vec![spoke_at(start)]);
            cut.add(span as usize, centre, vec![spoke_at(end)]);
            for &(x, y, e) in &plains {
                let (ox, oy) = (p.offset(start, x), p.offset(start, y));
                if ox < oy && oy <= span {
                    cut.add(ox as usize, oy as usize, vec![e]);
                }
            }
            cuts.push(cut);
        }
    }
    let k = edges.len();
    let mut b = vec![vec![0i32; k]; k];
    for cut in &cuts {
        cut.accumulate(&index, &mut b);
    }
    let mut q = Quiver::new(edges.to_vec());
    for (i, row) in b.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            for _ in 0..x.max(0) {
                q.add_arrow(i, j);
            }
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::is_isomorphic;
    use crate::triangulation::enumerate_all;

    fn p(n: u32) -> Polygon {
        Polygon::new(n).unwrap()
    }

    #[test]
    fn base_quiver_shape() {
        let q = base_quiver(p(5));
        let idx = q.map_labels(|_| 0).labels().len();
        assert_eq!(idx, 5);
        assert_eq!(q.to_string(), "p:1-3 -> p:1-4, p:1-4 -> p:1-5, p:1-5 -> s:1:+, p:1-5 -> s:1:-");
        assert!(p(8).hom_dim(&TaggedEdge::plain(1, 3), &TaggedEdge::plain(1, 4)) == 1);
        for n in 4..=9 {
            let q = base_quiver(p(n));
            assert!(q.is_acyclic() && q.is_connected());
            assert_eq!(q.arrow_total(), n - 1);
        }
    }

    #[test]
    fn direct_matches_transport_on_fan_and_examples() {
        for n in 4..=7 {
            let fan = Triangulation::fan(p(n));
            assert_eq!(direct_quiver_of(&fan).unwrap(), base_quiver(p(n)));
        }
        let spokes = Triangulation::parse(p(5), "s:1:+,s:2:+,s:3:+,s:4:+,s:5:+").unwrap();
        let q = quiver_of(&spokes).unwrap();
        assert_eq!(q.oriented_cycles().len(), 1);
        assert_eq!(q.oriented_cycles()[0].len(), 5);
        assert_eq!(q.arrow_total(), 5);
        assert_eq!(direct_quiver_of(&spokes).unwrap(), q);
    }

    #[test]
    fn atlas_covers_flip_graph() {
        let atlas = QuiverAtlas::build(p(5)).unwrap();
        assert_eq!(atlas.len(), 182);
        let all = enumerate_all(p(5));
        for t in &all {
            let q = atlas.get(t).unwrap();
            assert!(q.same_labelled(&direct_quiver_of(t).unwrap()), "{t}");
            assert!(is_isomorphic(q, atlas.get(&t.tau()).unwrap()));
            assert!(is_isomorphic(q, atlas.get(&t.sigma()).unwrap()));
        }
        assert_eq!(atlas.first_commutation_failure().unwrap(), None);
        let t = &all[100];
        assert_eq!(&quiver_of(t).unwrap(), atlas.get(t).unwrap());
    }
}
