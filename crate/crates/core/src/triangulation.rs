//! Triangulations of the punctured polygon: validation, exhaustive
//! enumeration, flips, the `<tau, sigma>` orbit canonical form, the four-way
//! type classification and quotients at edges close to the border.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{EdgeClass, Polygon, TaggedEdge};

/// Default upper bound for exhaustive enumeration.
pub const DEFAULT_MAX_N: u32 = 9;

/// A maximal set of pairwise non-crossing tagged edges, stored in canonical
/// edge order. Ordering is lexicographic on the sorted edge ids.
#[derive(Clone, Debug)]
pub struct Triangulation {
    polygon: Polygon,
    ids: Vec<u8>,
    edges: Vec<TaggedEdge>,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.polygon.n() == other.polygon.n() && self.ids == other.ids
    }
}

impl Eq for Triangulation {}

impl Hash for Triangulation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.polygon.n().hash(state);
        self.ids.hash(state);
    }
}

impl PartialOrd for Triangulation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Triangulation {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.polygon.n(), &self.ids).cmp(&(other.polygon.n(), &other.ids))
    }
}

/// The four structural types of triangulations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TriangulationType {
    /// Contains a plain edge of length `n`.
    Type1,
    /// Exactly two spokes forming a double, no edge of length `n`.
    Type2,
    /// Exactly two spokes at distinct vertices, no edge of length `n`.
    Type3,
    /// At least three spokes.
    Type4,
}

impl TriangulationType {
    pub const ALL: [TriangulationType; 4] =
        [TriangulationType::Type1, TriangulationType::Type2, TriangulationType::Type3, TriangulationType::Type4];

    pub fn number(self) -> u8 {
        match self {
            TriangulationType::Type1 => 1,
            TriangulationType::Type2 => 2,
            TriangulationType::Type3 => 3,
            TriangulationType::Type4 => 4,
        }
    }

    pub fn from_number(k: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.number() == k)
    }
}

impl fmt::Display for TriangulationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type{}", self.number())
    }
}

/// An equivalence class under `Δ ~ tau^i Δ ~ sigma tau^j Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationClass {
    pub representative: Triangulation,
    pub orbit_size: usize,
    pub kind: TriangulationType,
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Whether `edges` (all legal for `polygon`) form a triangulation.
///
/// Checks pairwise compatibility, maximality against the full alphabet and
/// the size-`n` criterion; the latter two must agree on any non-crossing set.
pub fn is_triangulation(polygon: Polygon, edges: &[TaggedEdge]) -> Result<bool> {
    let mut distinct = edges.to_vec();
    distinct.sort();
    distinct.dedup();
    let non_crossing = distinct.iter().enumerate().all(|(i, m)| distinct[i + 1..].iter().all(|e| polygon.compatible(m, e)));
    if !non_crossing {
        return Ok(false);
    }
    let maximal = polygon.all_edges().iter().filter(|e| !distinct.contains(e)).all(|e| distinct.iter().any(|m| !polygon.compatible(m, e)));
    let full_size = distinct.len() == polygon.n() as usize;
    if maximal != full_size {
        return Err(Error::ModelInconsistency(format!(
            "non-crossing set of {} edges has maximal = {maximal} for n = {}",
            distinct.len(),
            polygon.n()
        )));
    }
    Ok(maximal)
}

impl Triangulation {
    /// Builds and validates a triangulation.
    pub fn new(polygon: Polygon, edges: impl IntoIterator<Item = TaggedEdge>) -> Result<Self> {
        let mut ids = Vec::new();
        for e in edges {
            polygon.validate(&e)?;
            ids.push(polygon.edge_id(&e));
        }
        ids.sort_unstable();
        ids.dedup();
        let edges: Vec<TaggedEdge> = ids.iter().map(|&i| polygon.edge(i)).collect();
        for (i, m) in edges.iter().enumerate() {
            if let Some(e) = edges[i + 1..].iter().find(|e| !polygon.compatible(m, e)) {
                return Err(Error::Crossing(*m, *e));
            }
        }
        if let Some(witness) =
            polygon.all_edges().into_iter().find(|e| !edges.contains(e) && edges.iter().all(|m| polygon.compatible(m, e)))
        {
            return Err(Error::NotMaximal(witness));
        }
        if edges.len() != polygon.n() as usize {
            return Err(Error::ModelInconsistency(format!("maximal non-crossing set with {} edges for n = {}", edges.len(), polygon.n())));
        }
        Ok(Self::from_ids(polygon, ids))
    }

    fn from_ids(polygon: Polygon, ids: Vec<usize>) -> Self {
        let edges = ids.iter().map(|&i| polygon.edge(i)).collect();
        Triangulation { polygon, ids: ids.into_iter().map(|i| i as u8).collect(), edges }
    }

    fn from_mask(polygon: Polygon, mask: u128) -> Self {
        Self::from_ids(polygon, bits(mask).collect())
    }

    /// Parses the comma-separated token format, e.g. `p:1-3,p:1-4,s:1:+`.
    pub fn parse(polygon: Polygon, spec: &str) -> Result<Self> {
        let edges = spec.split(',').map(str::trim).filter(|t| !t.is_empty()).map(|t| polygon.parse_edge(t)).collect::<Result<Vec<_>>>()?;
        Self::new(polygon, edges)
    }

    /// The fan at vertex 1: `p:1-3, ..., p:1-n` and both spokes at 1.
    pub fn fan(polygon: Polygon) -> Self {
        let n = polygon.n();
        let mut edges: Vec<TaggedEdge> = (3..=n).map(|b| TaggedEdge::plain(1, b)).collect();
        edges.push(TaggedEdge::spoke(1, crate::geometry::Tag::Plus));
        edges.push(TaggedEdge::spoke(1, crate::geometry::Tag::Minus));
        let mut ids: Vec<usize> = edges.iter().map(|e| polygon.edge_id(e)).collect();
        ids.sort_unstable();
        Self::from_ids(polygon, ids)
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn n(&self) -> u32 {
        self.polygon.n()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[TaggedEdge] {
        &self.edges
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids.iter().map(|&i| usize::from(i))
    }

    pub fn mask(&self) -> u128 {
        self.ids().fold(0, |acc, i| acc | (1u128 << i))
    }

    pub fn contains(&self, e: &TaggedEdge) -> bool {
        self.edges.contains(e)
    }

    pub fn spokes(&self) -> impl Iterator<Item = &TaggedEdge> {
        self.edges.iter().filter(|e| e.is_spoke())
    }

    pub fn degenerate_count(&self) -> usize {
        self.spokes().count()
    }

    /// Applies an edge map to every member.
    pub fn map_edges(&self, f: impl Fn(&TaggedEdge) -> TaggedEdge) -> Self {
        let mut ids: Vec<usize> = self.edges.iter().map(|e| self.polygon.edge_id(&f(e))).collect();
        ids.sort_unstable();
        Self::from_ids(self.polygon, ids)
    }

    pub fn tau(&self) -> Self {
        self.map_edges(|e| self.polygon.tau(e))
    }

    pub fn tau_pow(&self, k: i64) -> Self {
        self.map_edges(|e| self.polygon.tau_pow(e, k))
    }

    pub fn sigma(&self) -> Self {
        self.map_edges(|e| self.polygon.sigma(e))
    }

    /// Replaces `edge` by the unique other edge that restores maximality.
    pub fn flip(&self, edge: &TaggedEdge) -> Result<(Triangulation, TaggedEdge)> {
        if !self.contains(edge) {
            return Err(Error::EdgeNotInTriangulation(*edge));
        }
        let p = self.polygon;
        let rest: Vec<TaggedEdge> = self.edges.iter().filter(|e| *e != edge).copied().collect();
        let candidates: Vec<TaggedEdge> =
            p.all_edges().into_iter().filter(|c| c != edge && !rest.contains(c) && rest.iter().all(|m| p.compatible(m, c))).collect();
        match candidates.as_slice() {
            [replacement] => {
                let mut ids: Vec<usize> = rest.iter().chain(std::iter::once(replacement)).map(|e| p.edge_id(e)).collect();
                ids.sort_unstable();
                Ok((Self::from_ids(p, ids), *replacement))
            }
            _ => Err(Error::ModelInconsistency(format!("flip of {edge} in {self} has {} replacements", candidates.len()))),
        }
    }

    /// The lexicographically smallest member of the `<tau, sigma>` orbit and
    /// the orbit's size.
    pub fn canonical_form(&self) -> (Triangulation, usize) {
        let mut orbit = self.orbit();
        let min = orbit.remove(0);
        (min, orbit.len() + 1)
    }

    /// The sorted, duplicate-free `<tau, sigma>` orbit.
    pub fn orbit(&self) -> Vec<Triangulation> {
        let n = i64::from(self.n());
        let mut orbit = Vec::with_capacity(2 * n as usize);
        let mut current = self.clone();
        for _ in 0..n {
            orbit.push(current.sigma());
            let next = current.tau();
            orbit.push(current);
            current = next;
        }
        orbit.sort();
        orbit.dedup();
        orbit
    }

    /// Structural type; exactly one applies to every triangulation.
    pub fn classify_type(&self) -> Result<TriangulationType> {
        let p = self.polygon;
        let spokes: Vec<&TaggedEdge> = self.spokes().collect();
        if self.edges.iter().any(|e| e.is_plain() && p.length(e) == p.n()) {
            return Ok(TriangulationType::Type1);
        }
        match spokes.len() {
            2 if spokes[0].start() == spokes[1].start() => Ok(TriangulationType::Type2),
            2 => Ok(TriangulationType::Type3),
            t if t >= 3 => Ok(TriangulationType::Type4),
            t => Err(Error::ModelInconsistency(format!("{self} has only {t} degenerate edges"))),
        }
    }

    /// Factors out an edge `p:a-(a+2)` close to the border: removes it, deletes
    /// vertex `a+1` and relabels the remaining vertices downwards.
    pub fn quotient(&self, edge: &TaggedEdge) -> Result<Triangulation> {
        let p = self.polygon;
        if !self.contains(edge) {
            return Err(Error::EdgeNotInTriangulation(*edge));
        }
        if p.classify(edge) != EdgeClass::CloseToBorder || p.n() <= crate::geometry::MIN_N {
            return Err(Error::InvalidQuotient(*edge));
        }
        let removed = p.wrap(i64::from(edge.start()) + 1);
        let smaller = Polygon::new(p.n() - 1)?;
        let relabel = |v: u32| if v > removed { v - 1 } else { v };
        let edges = self.edges.iter().filter(|e| *e != edge).map(|e| match *e {
            TaggedEdge::Plain { a, b } => TaggedEdge::plain(relabel(a), relabel(b)),
            TaggedEdge::Spoke { a, tag } => TaggedEdge::spoke(relabel(a), tag),
        });
        Triangulation::new(smaller, edges)
    }

    /// `hom_dim(edge_i, edge_j)` for all ordered pairs, in canonical order.
    pub fn hom_matrix(&self) -> Vec<Vec<u8>> {
        let p = self.polygon;
        self.edges.iter().map(|m| self.edges.iter().map(|e| p.hom_dim(m, e)).collect()).collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    n: u32,
    edges: Vec<TaggedEdge>,
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriangulationJson { n: self.n(), edges: self.edges.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TriangulationJson::deserialize(d)?;
        let polygon = Polygon::new(raw.n).map_err(serde::de::Error::custom)?;
        Triangulation::new(polygon, raw.edges).map_err(serde::de::Error::custom)
    }
}

/// Precomputed compatibility rows for fast flips on a fixed polygon.
#[derive(Clone, Debug)]
pub struct FlipTable {
    polygon: Polygon,
    compat: Vec<u128>,
}

impl FlipTable {
    pub fn new(polygon: Polygon) -> Self {
        FlipTable { polygon, compat: polygon.compatibility_rows() }
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    /// Same contract as [`Triangulation::flip`], computed on bitmasks.
    pub fn flip(&self, t: &Triangulation, edge: &TaggedEdge) -> Result<(Triangulation, TaggedEdge)> {
        if !t.contains(edge) {
            return Err(Error::EdgeNotInTriangulation(*edge));
        }
        let id = self.polygon.edge_id(edge);
        let mask = t.mask();
        let rest = mask & !(1u128 << id);
        let candidates = bits(rest).fold(!mask, |acc, j| acc & self.compat[j]) & self.alphabet();
        if candidates.count_ones() != 1 {
            return Err(Error::ModelInconsistency(format!("flip of {edge} in {t} has {} replacements", candidates.count_ones())));
        }
        let replacement = self.polygon.edge(candidates.trailing_zeros() as usize);
        Ok((Triangulation::from_mask(self.polygon, rest | candidates), replacement))
    }

    fn alphabet(&self) -> u128 {
        let count = self.polygon.edge_count();
        if count == 128 {
            u128::MAX
        } else {
            (1u128 << count) - 1
        }
    }
}

/// Checks `n` against the enumeration bound.
pub fn check_bound(n: u32, max_n: u32) -> Result<Polygon> {
    if n > max_n {
        return Err(Error::UnsupportedSize { n, min: crate::geometry::MIN_N, max: max_n });
    }
    Polygon::new(n)
}

struct Search<'a> {
    polygon: Polygon,
    compat: &'a [u128],
    out: Vec<Triangulation>,
}

impl Search<'_> {
    /// Depth-first search over edge ids in increasing order, including an
    /// edge before excluding it, so maximal sets come out lexicographically.
    /// `skipped` holds excluded edges still compatible with `chosen`; each must
    /// eventually be blocked by a later choice.
    fn run(&mut self, chosen: u128, candidates: u128, skipped: u128) {
        if bits(skipped).any(|j| candidates & !self.compat[j] == 0) {
            return;
        }
        if candidates == 0 {
            if skipped == 0 {
                self.out.push(Triangulation::from_mask(self.polygon, chosen));
            }
            return;
        }
        let i = candidates.trailing_zeros() as usize;
        let bit = 1u128 << i;
        let above = !((bit << 1) - 1);
        self.run(chosen | bit, candidates & self.compat[i] & above, skipped & self.compat[i]);
        self.run(chosen, candidates & !bit, skipped | bit);
    }
}

/// Every triangulation of the punctured `n`-gon, in lexicographic order.
///
/// The search is sharded by the smallest edge id and runs on the current
/// rayon pool; shards are concatenated in order, so the output does not
/// depend on the number of workers.
pub fn enumerate_all(polygon: Polygon) -> Vec<Triangulation> {
    let compat = polygon.compatibility_rows();
    let count = polygon.edge_count();
    let shards: Vec<Vec<Triangulation>> = (0..count)
        .into_par_iter()
        .map(|first| {
            let bit = 1u128 << first;
            let below = bit - 1;
            let above = !((bit << 1) - 1) & if count == 128 { u128::MAX } else { (1u128 << count) - 1 };
            let mut search = Search { polygon, compat: &compat, out: Vec::new() };
            search.run(bit, compat[first] & above, compat[first] & below);
            search.out
        })
        .collect();
    shards.into_iter().flatten().collect()
}

/// Groups triangulations into `<tau, sigma>` classes, keyed by canonical form.
pub fn classes(all: &[Triangulation]) -> Result<Vec<TriangulationClass>> {
    let forms: Vec<(Triangulation, usize)> = all.par_iter().map(Triangulation::canonical_form).collect();
    let mut groups: BTreeMap<Triangulation, (usize, usize)> = BTreeMap::new();
    for (rep, size) in forms {
        let entry = groups.entry(rep).or_insert((size, 0));
        entry.1 += 1;
    }
    groups
        .into_iter()
        .map(|(representative, (orbit_size, members))| {
            if orbit_size != members {
                return Err(Error::ModelInconsistency(format!(
                    "class of {representative} has orbit size {orbit_size} but {members} members were enumerated"
                )));
            }
            let kind = representative.classify_type()?;
            Ok(TriangulationClass { representative, orbit_size, kind })
        })
        .collect()
}
