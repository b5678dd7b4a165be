//! The punctured polygon: boundary arithmetic, tagged edges, crossing numbers
//! and the two symmetries `tau` (rotation with tag flip) and `sigma` (tag swap).
//!
//! Boundary vertices are labelled `1..=n` counterclockwise. A plain edge
//! `p:a-b` is the arc homotopic to the counterclockwise boundary path from `a`
//! to `b`; the puncture lies on the other side. A spoke `s:a:+` / `s:a:-`
//! joins boundary vertex `a` to the puncture.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Smallest supported polygon.
pub const MIN_N: u32 = 4;
/// Edge sets are stored as `u128` bitmasks, so `n * n` must fit in 128 bits.
pub const MAX_SUPPORTED_N: u32 = 11;

/// Tag of a spoke. Stored as the integers `+1` / `-1` so that `tau` is a
/// literal negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Tag {
    Plus = 1,
    Minus = -1,
}

impl Tag {
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn from_value(v: i64) -> Option<Tag> {
        match v {
            1 => Some(Tag::Plus),
            -1 => Some(Tag::Minus),
            _ => None,
        }
    }

    fn symbol(self) -> char {
        match self {
            Tag::Plus => '+',
            Tag::Minus => '-',
        }
    }
}

impl Neg for Tag {
    type Output = Tag;

    fn neg(self) -> Tag {
        match self {
            Tag::Plus => Tag::Minus,
            Tag::Minus => Tag::Plus,
        }
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Tag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(d)?;
        Tag::from_value(v).ok_or_else(|| serde::de::Error::custom(format!("tag must be 1 or -1, got {v}")))
    }
}

/// A tagged edge of the punctured polygon.
///
/// The derived ordering is structural only; the canonical order used for
/// triangulations is [`Polygon::edge_id`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TaggedEdge {
    Plain { a: u32, b: u32 },
    Spoke { a: u32, tag: Tag },
}

impl TaggedEdge {
    pub fn plain(a: u32, b: u32) -> Self {
        TaggedEdge::Plain { a, b }
    }

    pub fn spoke(a: u32, tag: Tag) -> Self {
        TaggedEdge::Spoke { a, tag }
    }

    pub fn is_spoke(&self) -> bool {
        matches!(self, TaggedEdge::Spoke { .. })
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, TaggedEdge::Plain { .. })
    }

    /// Starting vertex (the base vertex for a spoke).
    pub fn start(&self) -> u32 {
        match *self {
            TaggedEdge::Plain { a, .. } | TaggedEdge::Spoke { a, .. } => a,
        }
    }
}

impl fmt::Display for TaggedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TaggedEdge::Plain { a, b } => write!(f, "p:{a}-{b}"),
            TaggedEdge::Spoke { a, tag } => write!(f, "s:{a}:{}", tag.symbol()),
        }
    }
}

impl FromStr for TaggedEdge {
    type Err = Error;

    /// Parses the token syntax only; use [`Polygon::parse_edge`] to also
    /// check legality for a given `n`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let num = |t: &str| t.parse::<u32>().map_err(|_| err("vertex labels must be positive decimals"));
        if let Some(rest) = s.strip_prefix("p:") {
            let (a, b) = rest.split_once('-').ok_or_else(|| err("expected `p:a-b`"))?;
            Ok(TaggedEdge::plain(num(a)?, num(b)?))
        } else if let Some(rest) = s.strip_prefix("s:") {
            let (a, t) = rest.split_once(':').ok_or_else(|| err("expected `s:a:+` or `s:a:-`"))?;
            let tag = match t {
                "+" => Tag::Plus,
                "-" => Tag::Minus,
                _ => return Err(err("spoke tag must be `+` or `-`")),
            };
            Ok(TaggedEdge::spoke(num(a)?, tag))
        } else {
            Err(err("edge tokens start with `p:` or `s:`"))
        }
    }
}

/// Geometric role of an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum EdgeClass {
    /// Plain edge of length three.
    CloseToBorder,
    /// Plain edge of length at least four.
    Connected,
    /// Spoke.
    Degenerate,
}

/// The punctured polygon with `n` boundary vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    n: u32,
}

impl Polygon {
    pub fn new(n: u32) -> Result<Self> {
        if !(MIN_N..=MAX_SUPPORTED_N).contains(&n) {
            return Err(Error::UnsupportedSize { n, min: MIN_N, max: MAX_SUPPORTED_N });
        }
        Ok(Polygon { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of tagged edges, `n^2`.
    pub fn edge_count(&self) -> usize {
        (self.n * self.n) as usize
    }

    /// Reduces any integer to its representative in `1..=n`.
    pub fn wrap(&self, v: i64) -> u32 {
        let n = i64::from(self.n);
        ((v - 1).rem_euclid(n) + 1) as u32
    }

    pub fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Steps counterclockwise from `a` to `b`, in `0..n`.
    pub(crate) fn offset(&self, a: u32, b: u32) -> u32 {
        (b + self.n - a) % self.n
    }

    /// Number of vertices on the counterclockwise boundary path from `a` to
    /// `b`, endpoints included; `n + 1` when `a == b`.
    pub fn delta_length(&self, a: u32, b: u32) -> Result<u32> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(if a == b { self.n + 1 } else { self.offset(a, b) + 1 })
    }

    /// Whether `x` lies strictly inside the counterclockwise interval `(a, b)`.
    pub(crate) fn strictly_between(&self, x: u32, a: u32, b: u32) -> bool {
        let ox = self.offset(a, x);
        ox > 0 && ox < self.offset(a, b)
    }

    /// Checks that `e` is a legal tagged edge for this polygon.
    pub fn validate(&self, e: &TaggedEdge) -> Result<()> {
        match *e {
            TaggedEdge::Plain { a, b } => {
                self.check_vertex(a)?;
                self.check_vertex(b)?;
                if a == b {
                    return Err(self.illegal(e, "plain edges join distinct vertices; use a spoke `s:a:+` or `s:a:-`"));
                }
                if self.offset(a, b) + 1 < 3 {
                    return Err(self.illegal(e, "the boundary path length |delta(a,b)| must be at least 3"));
                }
                Ok(())
            }
            TaggedEdge::Spoke { a, .. } => self.check_vertex(a),
        }
    }

    fn illegal(&self, e: &TaggedEdge, reason: &str) -> Error {
        Error::IllegalEdge { edge: e.to_string(), n: self.n, reason: reason.to_string() }
    }

    /// Parses and validates an edge token.
    pub fn parse_edge(&self, token: &str) -> Result<TaggedEdge> {
        let e: TaggedEdge = token.trim().parse()?;
        self.validate(&e)?;
        Ok(e)
    }

    /// Length of an edge: `|delta(a,b)|` for plain edges, `1` for spokes.
    pub fn length(&self, e: &TaggedEdge) -> u32 {
        match *e {
            TaggedEdge::Plain { a, b } => self.offset(a, b) + 1,
            TaggedEdge::Spoke { .. } => 1,
        }
    }

    pub fn classify(&self, e: &TaggedEdge) -> EdgeClass {
        match *e {
            TaggedEdge::Spoke { .. } => EdgeClass::Degenerate,
            TaggedEdge::Plain { .. } if self.length(e) == 3 => EdgeClass::CloseToBorder,
            TaggedEdge::Plain { .. } => EdgeClass::Connected,
        }
    }

    /// Position of `e` in the canonical order: plain edges by `(a, length)`,
    /// then spokes by `(a, tag)` with `+` first.
    pub fn edge_id(&self, e: &TaggedEdge) -> usize {
        let n = self.n as usize;
        match *e {
            TaggedEdge::Plain { a, .. } => (a as usize - 1) * (n - 2) + (self.length(e) as usize - 3),
            TaggedEdge::Spoke { a, tag } => n * (n - 2) + 2 * (a as usize - 1) + usize::from(tag == Tag::Minus),
        }
    }

    /// Inverse of [`Polygon::edge_id`].
    pub fn edge(&self, id: usize) -> TaggedEdge {
        let n = self.n as usize;
        if id < n * (n - 2) {
            let a = (id / (n - 2)) as u32 + 1;
            let len = (id % (n - 2)) as i64 + 3;
            TaggedEdge::plain(a, self.wrap(i64::from(a) + len - 1))
        } else {
            let r = id - n * (n - 2);
            let tag = if r.is_multiple_of(2) { Tag::Plus } else { Tag::Minus };
            TaggedEdge::spoke((r / 2) as u32 + 1, tag)
        }
    }

    /// All `n^2` tagged edges in canonical order.
    pub fn all_edges(&self) -> Vec<TaggedEdge> {
        (0..self.edge_count()).map(|id| self.edge(id)).collect()
    }

    /// Crossing number `e(M, N)`, in `{0, 1, 2}`.
    ///
    /// A plain edge is realised as a staple hugging its boundary interval; two
    /// staples at different depths meet once for every endpoint of the deeper
    /// one inside the interval of the shallower one. The crossing number is the
    /// smaller of the two depth orders.
    pub fn crossing(&self, m: &TaggedEdge, other: &TaggedEdge) -> u8 {
        if m == other {
            return 0;
        }
        match (*m, *other) {
            (TaggedEdge::Spoke { a, tag }, TaggedEdge::Spoke { a: b, tag: tag2 }) => u8::from(a != b && tag != tag2),
            (TaggedEdge::Plain { a, b }, TaggedEdge::Spoke { a: s, .. }) | (TaggedEdge::Spoke { a: s, .. }, TaggedEdge::Plain { a, b }) => {
                u8::from(self.strictly_between(s, a, b))
            }
            (TaggedEdge::Plain { a, b }, TaggedEdge::Plain { a: c, b: d }) => {
                let inside = |x: u32, y: u32, lo: u32, hi: u32| {
                    u8::from(self.strictly_between(x, lo, hi)) + u8::from(self.strictly_between(y, lo, hi))
                };
                inside(c, d, a, b).min(inside(a, b, c, d))
            }
        }
    }

    pub fn compatible(&self, m: &TaggedEdge, other: &TaggedEdge) -> bool {
        self.crossing(m, other) == 0
    }

    /// Translation: rotate clockwise by one step; spokes change tag.
    pub fn tau(&self, e: &TaggedEdge) -> TaggedEdge {
        self.rotate(e, -1)
    }

    pub fn tau_inv(&self, e: &TaggedEdge) -> TaggedEdge {
        self.rotate(e, 1)
    }

    /// `tau^k` for any integer `k` (negative powers rotate counterclockwise).
    pub fn tau_pow(&self, e: &TaggedEdge, k: i64) -> TaggedEdge {
        self.rotate(e, -k)
    }

    fn rotate(&self, e: &TaggedEdge, steps: i64) -> TaggedEdge {
        match *e {
            TaggedEdge::Plain { a, b } => TaggedEdge::plain(self.wrap(i64::from(a) + steps), self.wrap(i64::from(b) + steps)),
            TaggedEdge::Spoke { a, tag } => {
                let tag = if steps.rem_euclid(2) == 1 { -tag } else { tag };
                TaggedEdge::spoke(self.wrap(i64::from(a) + steps), tag)
            }
        }
    }

    /// Tag swap: fixes plain edges, flips the tag of spokes.
    pub fn sigma(&self, e: &TaggedEdge) -> TaggedEdge {
        match *e {
            TaggedEdge::Spoke { a, tag } => TaggedEdge::spoke(a, -tag),
            plain => plain,
        }
    }

    /// `dim Ext^1(M, N)`.
    pub fn ext_dim(&self, m: &TaggedEdge, other: &TaggedEdge) -> u8 {
        self.crossing(m, other)
    }

    /// `dim Hom(M, N) = dim Ext^1(M, tau^{-1} N)`.
    pub fn hom_dim(&self, m: &TaggedEdge, other: &TaggedEdge) -> u8 {
        self.crossing(m, &self.tau_inv(other))
    }

    /// Bitmask rows of the compatibility relation, indexed by edge id.
    /// Bit `j` of row `i` is set when edges `i` and `j` do not cross.
    pub(crate) fn compatibility_rows(&self) -> Vec<u128> {
        let edges = self.all_edges();
        edges
            .iter()
            .map(|m| edges.iter().enumerate().filter(|(_, e)| self.compatible(m, e)).fold(0u128, |acc, (j, _)| acc | (1u128 << j)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> Polygon {
        Polygon::new(n).unwrap()
    }

    fn e(s: &str) -> TaggedEdge {
        s.parse().unwrap()
    }

    #[test]
    fn delta_length_examples() {
        let p8 = p(8);
        assert_eq!(p8.delta_length(1, 2).unwrap(), 2);
        assert_eq!(p8.delta_length(3, 3).unwrap(), 9);
        assert_eq!(p8.delta_length(3, 1).unwrap(), 7);
        assert!(matches!(p8.delta_length(0, 1), Err(Error::InvalidVertex { .. })));
        assert!(matches!(p8.delta_length(1, 9), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn alphabet_sizes_and_order() {
        assert!(matches!(Polygon::new(3), Err(Error::UnsupportedSize { .. })));
        let edges = p(4).all_edges();
        assert_eq!(edges.len(), 16);
        assert_eq!(edges.iter().filter(|e| e.is_plain()).count(), 8);
        assert_eq!(p(5).all_edges().len(), 25);
        for n in 4..=9 {
            let poly = p(n);
            let all = poly.all_edges();
            assert_eq!(all.len(), (n * n) as usize);
            for (id, edge) in all.iter().enumerate() {
                assert_eq!(poly.edge_id(edge), id);
                poly.validate(edge).unwrap();
                if edge.is_plain() {
                    assert!((3..=n).contains(&poly.length(edge)));
                }
            }
        }
        let five: Vec<String> = p(5).all_edges().iter().take(4).map(|e| e.to_string()).collect();
        assert_eq!(five, ["p:1-3", "p:1-4", "p:1-5", "p:2-4"]);
        assert_eq!(p(5).edge(15).to_string(), "s:1:+");
        assert_eq!(p(5).edge(16).to_string(), "s:1:-");
    }

    #[test]
    fn classification() {
        let p8 = p(8);
        assert_eq!(p8.classify(&e("p:1-3")), EdgeClass::CloseToBorder);
        assert_eq!(p8.classify(&e("s:2:+")), EdgeClass::Degenerate);
        assert_eq!(p8.classify(&e("p:1-5")), EdgeClass::Connected);
    }

    #[test]
    fn crossing_examples() {
        let p6 = p(6);
        assert_eq!(p6.crossing(&e("s:2:+"), &e("s:3:-")), 1);
        assert_eq!(p6.crossing(&e("s:2:+"), &e("s:3:+")), 0);
        assert_eq!(p6.crossing(&e("s:2:+"), &e("s:2:-")), 0);
        assert_eq!(p6.crossing(&e("p:1-4"), &e("p:3-2")), 2);
        assert_eq!(p6.crossing(&e("p:1-4"), &e("s:2:+")), 1);
        assert_eq!(p6.crossing(&e("p:1-4"), &e("s:2:-")), 1);
        assert_eq!(p6.crossing(&e("p:1-4"), &e("s:1:-")), 0);
        assert_eq!(p6.crossing(&e("p:1-4"), &e("p:4-1")), 0);
        // nested arcs never cross
        assert_eq!(p6.crossing(&e("p:2-4"), &e("p:1-5")), 0);
        assert_eq!(p6.crossing(&e("p:1-5"), &e("p:2-4")), 0);
        for edge in p6.all_edges() {
            assert_eq!(p6.crossing(&edge, &edge), 0);
        }
    }

    #[test]
    fn crossing_is_two_only_for_plain_pairs() {
        for n in 4..=8 {
            let poly = p(n);
            let all = poly.all_edges();
            for m in &all {
                for other in &all {
                    let c = poly.crossing(m, other);
                    assert!(c <= 2);
                    if c == 2 {
                        assert!(m.is_plain() && other.is_plain());
                    }
                }
            }
        }
    }

    #[test]
    fn tau_and_sigma() {
        let p8 = p(8);
        assert_eq!(p8.tau(&e("p:1-3")), e("p:8-2"));
        assert_eq!(p8.tau(&e("s:1:+")), e("s:8:-"));
        assert_eq!(p8.sigma(&e("p:1-4")), e("p:1-4"));
        assert_eq!(p8.sigma(&e("s:3:+")), e("s:3:-"));
        for edge in p8.all_edges() {
            assert_eq!(p8.tau_inv(&p8.tau(&edge)), edge);
            assert_eq!(p8.sigma(&p8.sigma(&edge)), edge);
            assert_eq!(p8.sigma(&p8.tau(&edge)), p8.tau(&p8.sigma(&edge)));
            assert_eq!(p8.tau_pow(&edge, 8), edge);
            assert_eq!(p8.tau_pow(&edge, 3), p8.tau(&p8.tau(&p8.tau(&edge))));
        }
    }

    #[test]
    fn tau_order() {
        for n in 4..=9 {
            let poly = p(n);
            for edge in poly.all_edges() {
                let order = (1..=2 * n as i64).find(|&k| poly.tau_pow(&edge, k) == edge).unwrap();
                let expected = if edge.is_spoke() && n % 2 == 1 { 2 * n } else { n };
                assert_eq!(order, i64::from(expected), "{edge}");
            }
        }
    }

    #[test]
    fn hom_and_ext() {
        let p8 = p(8);
        assert_eq!(p8.hom_dim(&e("p:1-3"), &e("p:1-4")), 1);
        assert_eq!(p8.crossing(&e("p:1-3"), &e("p:2-5")), 1);
        for m in p8.all_edges() {
            assert_eq!(p8.ext_dim(&m, &m), 0);
        }
    }

    #[test]
    fn parse_and_validate() {
        let p5 = p(5);
        assert_eq!(p5.parse_edge("p:1-3").unwrap(), TaggedEdge::plain(1, 3));
        assert_eq!(p5.parse_edge("s:4:-").unwrap(), TaggedEdge::spoke(4, Tag::Minus));
        let err = p5.parse_edge("p:1-2").unwrap_err();
        assert!(err.to_string().contains("|delta(a,b)| must be at least 3"), "{err}");
        assert!(p5.parse_edge("p:2-2").is_err());
        assert!(p5.parse_edge("s:6:+").is_err());
        assert!(p5.parse_edge("s:1:*").is_err());
        assert!(p5.parse_edge("q:1-3").is_err());
    }

    #[test]
    fn json_form() {
        let plain = serde_json::to_string(&e("p:1-3")).unwrap();
        assert_eq!(plain, r#"{"kind":"plain","a":1,"b":3}"#);
        let spoke = serde_json::to_string(&e("s:1:+")).unwrap();
        assert_eq!(spoke, r#"{"kind":"spoke","a":1,"tag":1}"#);
        let back: TaggedEdge = serde_json::from_str(r#"{"kind":"spoke","a":2,"tag":-1}"#).unwrap();
        assert_eq!(back, e("s:2:-"));
        assert!(serde_json::from_str::<TaggedEdge>(r#"{"kind":"spoke","a":2,"tag":0}"#).is_err());
    }
}
