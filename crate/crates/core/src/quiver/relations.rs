//! Generators of the relation ideal of the cluster-tilted algebra attached to
//! a triangulation. Paths are vertex sequences read along the arrows.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::Quiver;
use crate::error::{Error, Result};
use crate::geometry::TaggedEdge;
use crate::triangulation::{Triangulation, TriangulationType};

type Path = Vec<TaggedEdge>;

/// Zero relations and commutativity relations `p - q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    pub zero_paths: Vec<Path>,
    pub commutativity_pairs: Vec<(Path, Path)>,
}

impl RelationSet {
    pub fn is_empty(&self) -> bool {
        self.zero_paths.is_empty() && self.commutativity_pairs.is_empty()
    }

    /// Every path in the set, commutativity sides included.
    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.zero_paths.iter().chain(self.commutativity_pairs.iter().flat_map(|(p, q)| [p, q]))
    }
}

fn tokens(path: &Path) -> Vec<String> {
    path.iter().map(ToString::to_string).collect()
}

impl Serialize for RelationSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let zero: Vec<Vec<String>> = self.zero_paths.iter().map(tokens).collect();
        let comm: Vec<[Vec<String>; 2]> = self.commutativity_pairs.iter().map(|(p, q)| [tokens(p), tokens(q)]).collect();
        let mut st = s.serialize_struct("RelationSet", 2)?;
        st.serialize_field("zeroPaths", &zero)?;
        st.serialize_field("commutativityPairs", &comm)?;
        st.end()
    }
}

impl std::fmt::Display for RelationSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |p: &Path| p.iter().map(ToString::to_string).collect::<Vec<_>>().join(" -> ");
        for p in &self.zero_paths {
            writeln!(f, "0 = {}", show(p))?;
        }
        for (p, q) in &self.commutativity_pairs {
            writeln!(f, "{} = {}", show(p), show(q))?;
        }
        Ok(())
    }
}

/// Relation generators for `t`, given its quiver `q` (labelled by edges).
///
/// Every oriented 3-cycle avoiding the spoke vertices contributes its three
/// paths of length two. The remaining generators depend on the type:
///
/// * type 2, with the double at `a` and `h: X -> Y` the arrow between
///   `p:a-b` and `p:b-a`: the commutativity `Y -> V+ -> X = Y -> V- -> X`
///   and the zero paths `X Y V+`, `V+ X Y`, `X Y V-`, `V- X Y`;
/// * type 3: the four paths of length three on the central 4-cycle;
/// * type 4, with spokes `V_1, ..., V_t` in counterclockwise order: the
///   three paths of length two on every 3-cycle `V_i -> V_{i+1} -> V_{i,i+1}`,
///   and from each `V_i` the path around the central cycle with `t - 1`
///   arrows, or `t` arrows when `a_{i-1}` and `a_i` are not neighbours.
pub fn relations_of(t: &Triangulation, q: &Quiver<TaggedEdge>) -> Result<RelationSet> {
    let p = t.polygon();
    let idx = |e: &TaggedEdge| q.index_of(e).ok_or_else(|| Error::UnknownVertex(e.to_string()));
    let arrow = |x: &TaggedEdge, y: &TaggedEdge| -> Result<bool> { Ok(q.has_arrow(idx(x)?, idx(y)?)) };
    let mut rel = RelationSet::default();
    for [a, b, c] in q.oriented_three_cycles() {
        let (x, y, z) = (*q.label(a), *q.label(b), *q.label(c));
        if [x, y, z].iter().all(TaggedEdge::is_plain) {
            rel.zero_paths.extend([vec![x, y, z], vec![y, z, x], vec![z, x, y]]);
        }
    }
    let mut spokes: Vec<TaggedEdge> = t.spokes().copied().collect();
    match t.classify_type()? {
        TriangulationType::Type1 => {}
        TriangulationType::Type2 => {
            let a = spokes[0].start();
            let b = (1..=p.n())
                .find(|&b| b != a && t.contains(&TaggedEdge::plain(a, b)) && t.contains(&TaggedEdge::plain(b, a)))
                .ok_or_else(|| Error::ModelInconsistency(format!("type 2 triangulation {t} has no pair p:a-b, p:b-a")))?;
            let (mab, mba) = (TaggedEdge::plain(a, b), TaggedEdge::plain(b, a));
            let (x, y) = if arrow(&mab, &mba)? { (mab, mba) } else { (mba, mab) };
            let (vp, vm) = (spokes[0], spokes[1]);
            rel.commutativity_pairs.push((vec![y, vp, x], vec![y, vm, x]));
            rel.zero_paths.extend([vec![x, y, vp], vec![vp, x, y], vec![x, y, vm], vec![vm, x, y]]);
        }
        TriangulationType::Type3 => {
            let (a, b) = (spokes[0].start(), spokes[1].start());
            let ring = [spokes[0], spokes[1], TaggedEdge::plain(a, b), TaggedEdge::plain(b, a)];
            let mut cycle = vec![ring[0]];
            while cycle.len() < 4 {
                let last = *cycle.last().unwrap();
                let mut next = None;
                for r in ring {
                    if arrow(&last, &r)? {
                        next = Some(r);
                    }
                }
                let next = next.ok_or_else(|| Error::ModelInconsistency(format!("no central 4-cycle in the quiver of {t}")))?;
                cycle.push(next);
            }
            for i in 0..4 {
                rel.zero_paths.push((0..4).map(|d| cycle[(i + d) % 4]).collect());
            }
        }
        TriangulationType::Type4 => {
            spokes.sort_by_key(TaggedEdge::start);
            let k = spokes.len();
            let spike = |i: usize| {
                let (x, y) = (spokes[i % k].start(), spokes[(i + 1) % k].start());
                (p.offset(x, y) > 1).then(|| TaggedEdge::plain(x, y))
            };
            for i in 0..k {
                if let Some(m) = spike(i) {
                    let (vi, vj) = (spokes[i], spokes[(i + 1) % k]);
                    rel.zero_paths.extend([vec![vi, vj, m], vec![vj, m, vi], vec![m, vi, vj]]);
                }
            }
            for i in 0..k {
                let arrows = if spike(i + k - 1).is_some() { k } else { k - 1 };
                rel.zero_paths.push((0..=arrows).map(|d| spokes[(i + d) % k]).collect());
            }
        }
    }
    for path in rel.paths() {
        for w in path.windows(2) {
            if !arrow(&w[0], &w[1])? {
                return Err(Error::ModelInconsistency(format!(
                    "relation path through {} -> {} is not composable in the quiver of {t}",
                    w[0], w[1]
                )));
            }
        }
    }
    Ok(rel)
}
