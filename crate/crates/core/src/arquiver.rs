//! The stable translation quiver on `Z_n x {1..n}` modelling the
//! Auslander–Reiten quiver of the cluster category, and the bijection `phi`
//! from tagged edges to its vertices.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Polygon, Tag, TaggedEdge};

/// Vertex `(i, j)` with `i` in `0..n` and `j` in `1..=n`; token `t:i:j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArVertex {
    pub i: u32,
    pub j: u32,
}

impl fmt::Display for ArVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t:{}:{}", self.i, self.j)
    }
}

impl FromStr for ArVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let rest = s.strip_prefix("t:").ok_or_else(|| bad("expected `t:i:j`"))?;
        let (i, j) = rest.split_once(':').ok_or_else(|| bad("expected `t:i:j`"))?;
        let i = i.parse().map_err(|_| bad("`i` is not a number"))?;
        let j = j.parse().map_err(|_| bad("`j` is not a number"))?;
        Ok(ArVertex { i, j })
    }
}

/// Arrows of `Q_n`: `1 -> 2 -> ... -> n-2`, `n-2 -> n-1`, `n-2 -> n`.
fn base_arrows(n: u32) -> Vec<(u32, u32)> {
    let mut arrows: Vec<(u32, u32)> = (1..n - 2).map(|j| (j, j + 1)).collect();
    arrows.push((n - 2, n - 1));
    arrows.push((n - 2, n));
    arrows
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArQuiver {
    n: u32,
    arrows: Vec<(ArVertex, ArVertex)>,
}

impl ArQuiver {
    /// `n` copies of `Q_n`: for each arrow `j -> l` of `Q_n` and each `i`,
    /// the arrows `(i, j) -> (i, l)` and `(i, l) -> (i + 1, j)`.
    pub fn build(polygon: Polygon) -> Self {
        let n = polygon.n();
        let mut arrows = Vec::new();
        for i in 0..n {
            for (j, l) in base_arrows(n) {
                arrows.push((ArVertex { i, j }, ArVertex { i, j: l }));
                arrows.push((ArVertex { i, j: l }, ArVertex { i: (i + 1) % n, j }));
            }
        }
        arrows.sort();
        ArQuiver { n, arrows }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> Vec<ArVertex> {
        (0..self.n).flat_map(|i| (1..=self.n).map(move |j| ArVertex { i, j })).collect()
    }

    pub fn arrows(&self) -> &[(ArVertex, ArVertex)] {
        &self.arrows
    }

    pub fn has_arrow(&self, u: ArVertex, v: ArVertex) -> bool {
        self.arrows.binary_search(&(u, v)).is_ok()
    }

    pub fn successors(&self, u: ArVertex) -> Vec<ArVertex> {
        self.arrows.iter().filter(|(s, _)| *s == u).map(|&(_, t)| t).collect()
    }

    pub fn predecessors(&self, v: ArVertex) -> Vec<ArVertex> {
        self.arrows.iter().filter(|(_, t)| *t == v).map(|&(s, _)| s).collect()
    }

    /// Graphviz rendering; with `ranks`, each `tau`-orbit column `i` is drawn
    /// as one rank.
    pub fn to_dot(&self, ranks: bool) -> String {
        let mut s = format!("digraph \"AR_D{}\" {{\n  rankdir=LR;\n", self.n);
        if ranks {
            for i in 0..self.n {
                let members: Vec<String> = (1..=self.n).map(|j| format!("\"{}\"", ArVertex { i, j })).collect();
                let _ = writeln!(s, "  {{ rank=same; {}; }}", members.join("; "));
            }
        }
        for (u, v) in &self.arrows {
            let _ = writeln!(s, "  \"{u}\" -> \"{v}\";");
        }
        s.push_str("}\n");
        s
    }
}

fn check(polygon: Polygon, v: ArVertex) -> Result<()> {
    let n = polygon.n();
    if v.i >= n || v.j == 0 || v.j > n {
        return Err(Error::Parse { input: v.to_string(), reason: format!("expected i in 0..{n} and j in 1..={n}") });
    }
    Ok(())
}

/// The translation: `(i - 1, j)`, except that for odd `n` the vertices
/// `(0, n)` and `(0, n - 1)` go to `(n - 1, n - 1)` and `(n - 1, n)`.
pub fn tau_ar(polygon: Polygon, v: ArVertex) -> Result<ArVertex> {
    check(polygon, v)?;
    let n = polygon.n();
    let i = (v.i + n - 1) % n;
    let j = if v.i == 0 && n % 2 == 1 && v.j >= n - 1 { 2 * n - 1 - v.j } else { v.j };
    Ok(ArVertex { i, j })
}

pub fn tau_ar_inv(polygon: Polygon, v: ArVertex) -> Result<ArVertex> {
    check(polygon, v)?;
    let n = polygon.n();
    let i = (v.i + 1) % n;
    let j = if i == 0 && n % 2 == 1 && v.j >= n - 1 { 2 * n - 1 - v.j } else { v.j };
    Ok(ArVertex { i, j })
}

/// Swaps the columns `n - 1` and `n`.
pub fn sigma_ar(polygon: Polygon, v: ArVertex) -> Result<ArVertex> {
    check(polygon, v)?;
    let n = polygon.n();
    let j = if v.j >= n - 1 { 2 * n - 1 - v.j } else { v.j };
    Ok(ArVertex { i: v.i, j })
}

/// `p:a-b` goes to `(a mod n, length - 2)`. The spokes at `a` fill the
/// columns `n - 1` and `n` of row `i = a mod n`; the `+` spoke takes column
/// `n - 1` when `i` is even and column `n` when `i` is odd.
pub fn phi(polygon: Polygon, e: &TaggedEdge) -> Result<ArVertex> {
    polygon.validate(e)?;
    let n = polygon.n();
    Ok(match *e {
        TaggedEdge::Plain { a, .. } => ArVertex { i: a % n, j: polygon.length(e) - 2 },
        TaggedEdge::Spoke { a, tag } => {
            let i = a % n;
            let even = i.is_multiple_of(2);
            let upper = (tag == Tag::Plus) == even;
            ArVertex { i, j: if upper { n - 1 } else { n } }
        }
    })
}

pub fn phi_inv(polygon: Polygon, v: ArVertex) -> Result<TaggedEdge> {
    check(polygon, v)?;
    let n = polygon.n();
    let a = if v.i == 0 { n } else { v.i };
    Ok(if v.j <= n - 2 {
        TaggedEdge::plain(a, polygon.wrap(i64::from(a + v.j + 1)))
    } else {
        let upper = v.j == n - 1;
        let even = v.i.is_multiple_of(2);
        TaggedEdge::spoke(a, if upper == even { Tag::Plus } else { Tag::Minus })
    })
}
