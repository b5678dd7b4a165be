//! Mutation classes of the linear `A_k` quiver and of the `D_k` quiver, as
//! sets of isomorphism classes.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rayon::prelude::*;

use super::construct::{base_quiver, linear_a};
use super::iso::{canonical_code, CanonicalCode};
use super::Quiver;
use crate::error::{Error, Result};
use crate::geometry::Polygon;

/// Default upper bound on `k` for mutation-class closures.
pub const DEFAULT_CLASS_BOUND: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DynkinType::A => "A",
            DynkinType::D => "D",
        })
    }
}

/// All quivers mutation equivalent to a seed, one per isomorphism class.
#[derive(Clone, Debug)]
pub struct MutationClass {
    kind: DynkinType,
    rank: usize,
    members: BTreeMap<CanonicalCode, Quiver<usize>>,
}

impl MutationClass {
    /// Closure of the linear `A_k` quiver.
    pub fn a(k: usize) -> Result<Self> {
        Self::a_bounded(k, DEFAULT_CLASS_BOUND)
    }

    /// Closure of `D_k` (`k >= 4`).
    pub fn d(k: usize) -> Result<Self> {
        Self::d_bounded(k, DEFAULT_CLASS_BOUND)
    }

    pub fn a_bounded(k: usize, bound: usize) -> Result<Self> {
        check(k, 1, bound)?;
        let class = Self::closure(DynkinType::A, linear_a(k));
        for q in class.members.values() {
            if let Some(why) = check_bv_facts(q) {
                return Err(Error::ModelInconsistency(format!("A_{k} member {q} violates: {why}")));
            }
        }
        Ok(class)
    }

    pub fn d_bounded(k: usize, bound: usize) -> Result<Self> {
        check(k, 4, bound)?;
        let seed = base_quiver(Polygon::new(k as u32)?).map_labels(|_| 0usize);
        let seed = Quiver::from_arrows((1..=k).collect(), seed.arrows().collect::<Vec<_>>());
        Ok(Self::closure(DynkinType::D, seed))
    }

    /// Breadth-first closure under mutation; each frontier is expanded in
    /// parallel and merged in canonical-code order.
    fn closure(kind: DynkinType, seed: Quiver<usize>) -> Self {
        let rank = seed.vertex_count();
        let mut members = BTreeMap::new();
        members.insert(canonical_code(&seed), seed.clone());
        let mut frontier = VecDeque::from([seed]);
        while !frontier.is_empty() {
            let batch: Vec<Quiver<usize>> = frontier.drain(..).collect();
            let found: Vec<(CanonicalCode, Quiver<usize>)> = batch
                .par_iter()
                .flat_map_iter(|q| (0..q.vertex_count()).map(move |v| q.mutate(v)))
                .map(|m| (canonical_code(&m), m))
                .collect();
            let mut fresh: BTreeMap<CanonicalCode, Quiver<usize>> = BTreeMap::new();
            for (code, m) in found {
                if !members.contains_key(&code) {
                    fresh.entry(code).or_insert(m);
                }
            }
            for (code, m) in fresh {
                frontier.push_back(m.clone());
                members.insert(code, m);
            }
        }
        MutationClass { kind, rank, members }
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of isomorphism classes.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains<L: Clone + PartialEq>(&self, q: &Quiver<L>) -> bool {
        q.vertex_count() == self.rank && self.contains_code(&canonical_code(q))
    }

    pub fn contains_code(&self, code: &CanonicalCode) -> bool {
        self.members.contains_key(code)
    }

    pub fn members(&self) -> impl Iterator<Item = &Quiver<usize>> {
        self.members.values()
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.members.keys()
    }
}

fn check(k: usize, min: usize, bound: usize) -> Result<()> {
    if k < min || k > bound {
        return Err(Error::UnsupportedSize { n: k as u32, min: min as u32, max: bound as u32 });
    }
    Ok(())
}

/// Structural facts shared by all quivers mutation equivalent to a linear
/// `A_k` quiver. Returns a description of the first violated fact.
///
/// 1. every cycle of the underlying graph is an oriented 3-cycle;
/// 2. every vertex has at most four neighbours;
/// 3. a vertex with four neighbours lies on two 3-cycles;
/// 4. a vertex with three neighbours lies on one 3-cycle.
///
/// Multiple arrows, loops and 2-cycles are rejected as well.
pub fn check_bv_facts<L: Clone + PartialEq>(q: &Quiver<L>) -> Option<String> {
    if q.max_multiplicity() > 1 || q.has_loops() || q.has_two_cycles() {
        return Some("multiple arrow, loop or 2-cycle".into());
    }
    let k = q.vertex_count();
    let joined = |u: usize, v: usize| q.has_arrow(u, v) || q.has_arrow(v, u);
    let mut triangles = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            for w in v + 1..k {
                if joined(u, v) && joined(v, w) && joined(w, u) {
                    let oriented = (q.has_arrow(u, v) && q.has_arrow(v, w) && q.has_arrow(w, u))
                        || (q.has_arrow(v, u) && q.has_arrow(w, v) && q.has_arrow(u, w));
                    if !oriented {
                        return Some("non-oriented 3-cycle".into());
                    }
                    triangles.push([u, v, w]);
                }
            }
        }
    }
    let on_edge = |u: usize, v: usize| triangles.iter().filter(|t| t.contains(&u) && t.contains(&v)).count();
    let edges: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).filter(|&(u, v)| joined(u, v)).collect();
    if edges.iter().any(|&(u, v)| on_edge(u, v) > 1) {
        return Some("two 3-cycles share an arrow".into());
    }
    let cyclomatic = edges.len() + q.connected_components() - k;
    if cyclomatic != triangles.len() {
        return Some("cycle of length other than three".into());
    }
    for v in 0..k {
        let degree = q.neighbors(v).len();
        let on = triangles.iter().filter(|t| t.contains(&v)).count();
        match degree {
            0..=2 => {}
            3 if on == 1 => {}
            4 if on == 2 => {}
            3 | 4 => return Some(format!("vertex of degree {degree} on {on} 3-cycles")),
            _ => return Some(format!("vertex of degree {degree}")),
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_class_sizes() {
        let sizes: Vec<usize> = (1..=6).map(|k| MutationClass::a(k).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 1, 4, 6, 19, 49]);
    }

    #[test]
    fn d_class_sizes() {
        assert_eq!(MutationClass::d(4).unwrap().len(), 6);
        assert_eq!(MutationClass::d(5).unwrap().len(), 26);
    }

    #[test]
    fn membership_examples() {
        let a3 = MutationClass::a(3).unwrap();
        assert!(a3.contains(&linear_a(3)));
        let cycle3 = Quiver::from_arrows(vec![1, 2, 3], [(0, 1), (1, 2), (2, 0)]);
        assert!(a3.contains(&cycle3));
        let cycle4 = Quiver::from_arrows(vec![1, 2, 3, 4], [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!MutationClass::a(4).unwrap().contains(&cycle4));
        assert!(MutationClass::d(4).unwrap().contains(&cycle4));
        assert!(check_bv_facts(&cycle4).is_some());
        assert!(matches!(MutationClass::a_bounded(5, 4), Err(Error::UnsupportedSize { .. })));
    }
}
