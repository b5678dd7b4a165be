//! Finite quivers with labelled vertices, Fomin–Zelevinsky mutation and the
//! quivers (with relations) attached to triangulations.

mod construct;
mod iso;
mod mutation_class;
mod relations;

pub use construct::{base_quiver, direct_quiver_of, linear_a, quiver_of, FlipOrder, QuiverAtlas};
pub use iso::{canonical_code, find_isomorphism, is_isomorphic, CanonicalCode};
pub use mutation_class::{check_bv_facts, DynkinType, MutationClass, DEFAULT_CLASS_BOUND};
pub use relations::{relations_of, RelationSet};

use std::collections::VecDeque;
use std::fmt::{self, Display, Write as _};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// A quiver: labelled vertices and an arrow multiset stored as a dense count
/// matrix (`arrows[i * k + j]` arrows from `i` to `j`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver<L> {
    labels: Vec<L>,
    arrows: Vec<u32>,
}

impl<L: Clone + PartialEq> Quiver<L> {
    pub fn new(labels: Vec<L>) -> Self {
        let k = labels.len();
        Quiver { labels, arrows: vec![0; k * k] }
    }

    /// Builds a quiver from `(source, target)` index pairs.
    pub fn from_arrows(labels: Vec<L>, arrows: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut q = Self::new(labels);
        for (s, t) in arrows {
            q.add_arrow(s, t);
        }
        q
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn index_or_err(&self, label: &L) -> Result<usize>
    where
        L: Display,
    {
        self.index_of(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn add_arrow(&mut self, source: usize, target: usize) {
        let k = self.vertex_count();
        self.arrows[source * k + target] += 1;
    }

    /// Number of arrows from `source` to `target`.
    pub fn arrow_count(&self, source: usize, target: usize) -> u32 {
        self.arrows[source * self.vertex_count() + target]
    }

    pub fn has_arrow(&self, source: usize, target: usize) -> bool {
        self.arrow_count(source, target) > 0
    }

    /// Arrows as index pairs, repeated by multiplicity, in row-major order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertex_count();
        (0..k * k).flat_map(move |ij| std::iter::repeat_n((ij / k, ij % k), self.arrows[ij] as usize))
    }

    pub fn arrow_total(&self) -> u32 {
        self.arrows.iter().sum()
    }

    pub fn out_degree(&self, v: usize) -> u32 {
        (0..self.vertex_count()).map(|j| self.arrow_count(v, j)).sum()
    }

    pub fn in_degree(&self, v: usize) -> u32 {
        (0..self.vertex_count()).map(|i| self.arrow_count(i, v)).sum()
    }

    /// Vertices joined to `v` by an arrow in either direction.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&w| w != v && (self.has_arrow(v, w) || self.has_arrow(w, v))).collect()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_degree(v) == 0
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_degree(v) == 0
    }

    pub fn has_loops(&self) -> bool {
        (0..self.vertex_count()).any(|i| self.has_arrow(i, i))
    }

    pub fn has_two_cycles(&self) -> bool {
        let k = self.vertex_count();
        (0..k).any(|i| (i + 1..k).any(|j| self.has_arrow(i, j) && self.has_arrow(j, i)))
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.arrows.iter().copied().max().unwrap_or(0)
    }

    /// Fomin–Zelevinsky mutation at vertex index `v`: for every path
    /// `u -> v -> w` add `u -> w`, reverse the arrows at `v`, then cancel
    /// 2-cycles.
    pub fn mutate(&self, v: usize) -> Self {
        let k = self.vertex_count();
        let mut out = self.clone();
        for u in (0..k).filter(|&u| u != v) {
            for w in (0..k).filter(|&w| w != v && w != u) {
                out.arrows[u * k + w] += self.arrow_count(u, v) * self.arrow_count(v, w);
            }
        }
        for u in 0..k {
            out.arrows[u * k + v] = self.arrow_count(v, u);
            out.arrows[v * k + u] = self.arrow_count(u, v);
        }
        for u in 0..k {
            for w in u + 1..k {
                let c = out.arrows[u * k + w].min(out.arrows[w * k + u]);
                out.arrows[u * k + w] -= c;
                out.arrows[w * k + u] -= c;
            }
        }
        out
    }

    pub fn mutate_at(&self, label: &L) -> Result<Self>
    where
        L: Display,
    {
        Ok(self.mutate(self.index_or_err(label)?))
    }

    /// Renames vertex `i`.
    pub fn relabel(&mut self, i: usize, label: L) {
        self.labels[i] = label;
    }

    pub fn map_labels<M: Clone + PartialEq>(&self, f: impl Fn(&L) -> M) -> Quiver<M> {
        Quiver { labels: self.labels.iter().map(f).collect(), arrows: self.arrows.clone() }
    }

    /// The same quiver with vertices listed in `order` (a permutation of the
    /// labels).
    pub fn reorder(&self, order: &[L]) -> Result<Self>
    where
        L: Display,
    {
        if order.len() != self.vertex_count() {
            return Err(Error::ModelInconsistency("reorder: vertex count mismatch".into()));
        }
        let idx = order.iter().map(|l| self.index_or_err(l)).collect::<Result<Vec<_>>>()?;
        Ok(self.permuted(&idx, order.to_vec()))
    }

    /// New quiver whose vertex `a` is old vertex `idx[a]`.
    fn permuted(&self, idx: &[usize], labels: Vec<L>) -> Self {
        let k = idx.len();
        let mut arrows = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                arrows[a * k + b] = self.arrow_count(idx[a], idx[b]);
            }
        }
        Quiver { labels, arrows }
    }

    /// Full subquiver on the given vertex indices, in that order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        self.permuted(keep, keep.iter().map(|&i| self.labels[i].clone()).collect())
    }

    /// Removes a vertex and its incident arrows.
    pub fn delete_vertex(&self, label: &L) -> Result<Self>
    where
        L: Display,
    {
        let v = self.index_or_err(label)?;
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&i| i != v).collect();
        Ok(self.induced(&keep))
    }

    /// Component id of every vertex under undirected reachability.
    pub fn component_ids(&self) -> Vec<usize> {
        let k = self.vertex_count();
        let mut comp = vec![usize::MAX; k];
        let mut next = 0;
        for start in 0..k {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn connected_components(&self) -> usize {
        self.component_ids().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() <= 1
    }

    /// Whether some oriented cycle passes through `v`.
    pub fn on_oriented_cycle(&self, v: usize) -> bool {
        let k = self.vertex_count();
        let mut seen = vec![false; k];
        let mut stack: Vec<usize> = (0..k).filter(|&w| self.has_arrow(v, w)).collect();
        while let Some(u) = stack.pop() {
            if u == v {
                return true;
            }
            if !std::mem::replace(&mut seen[u], true) {
                stack.extend((0..k).filter(|&w| self.has_arrow(u, w)));
            }
        }
        false
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.vertex_count()).all(|v| !self.on_oriented_cycle(v))
    }

    /// Oriented 3-cycles `a -> b -> c -> a`, each listed once starting at its
    /// smallest index.
    pub fn oriented_three_cycles(&self) -> Vec<[usize; 3]> {
        let k = self.vertex_count();
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                for c in a + 1..k {
                    if b != c && self.has_arrow(a, b) && self.has_arrow(b, c) && self.has_arrow(c, a) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Simple oriented cycles (vertex sequences starting at their smallest
    /// index). Exponential; meant for small quivers.
    pub fn oriented_cycles(&self) -> Vec<Vec<usize>> {
        fn extend<L: Clone + PartialEq>(q: &Quiver<L>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let (start, last) = (path[0], *path.last().unwrap());
            for w in 0..q.vertex_count() {
                if !q.has_arrow(last, w) {
                    continue;
                }
                if w == start {
                    out.push(path.clone());
                } else if w > start && !path.contains(&w) {
                    path.push(w);
                    extend(q, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            extend(self, &mut vec![s], &mut out);
        }
        out
    }

    /// Equality of labelled quivers, ignoring the order in which vertices are
    /// listed.
    pub fn same_labelled(&self, other: &Self) -> bool {
        let k = self.vertex_count();
        if k != other.vertex_count() {
            return false;
        }
        let Some(map) = self.labels.iter().map(|l| other.index_of(l)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        (0..k).all(|i| (0..k).all(|j| self.arrow_count(i, j) == other.arrow_count(map[i], map[j])))
    }
}

impl<L: Clone + PartialEq + Display> Quiver<L> {
    /// Graphviz rendering: one node per vertex, one directed edge per arrow.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n");
        for l in &self.labels {
            let _ = writeln!(s, "  \"{l}\";");
        }
        for (i, j) in self.arrows() {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.labels[i], self.labels[j]);
        }
        s.push_str("}\n");
        s
    }

    /// Renders an index path as a label path.
    pub fn label_path(&self, path: &[usize]) -> Vec<L> {
        path.iter().map(|&i| self.labels[i].clone()).collect()
    }
}

impl<L: Clone + PartialEq + Display> Serialize for Quiver<L> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        let arrows: Vec<[String; 2]> = self.arrows().map(|(i, j)| [vertices[i].clone(), vertices[j].clone()]).collect();
        let mut st = s.serialize_struct("Quiver", 2)?;
        st.serialize_field("vertices", &vertices)?;
        st.serialize_field("arrows", &arrows)?;
        st.end()
    }
}

impl<L: Display> fmt::Display for Quiver<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.labels.len();
        let mut first = true;
        for i in 0..k {
            for j in 0..k {
                for _ in 0..self.arrows[i * k + j] {
                    if !first {
                        f.write_str(", ")?;
                    }
                    first = false;
                    write!(f, "{} -> {}", self.labels[i], self.labels[j])?;
                }
            }
        }
        if first {
            f.write_str("(no arrows)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(k: usize) -> Quiver<usize> {
        Quiver::from_arrows((1..=k).collect(), (0..k - 1).map(|i| (i, i + 1)))
    }

    #[test]
    fn sink_reflection() {
        let q = path(2);
        let m = q.mutate_at(&2).unwrap();
        assert!(m.has_arrow(1, 0) && !m.has_arrow(0, 1));
    }

    #[test]
    fn mutation_creates_three_cycle() {
        let m = path(3).mutate_at(&2).unwrap();
        // 1 -> 3 -> 2 -> 1
        assert_eq!(m.arrow_total(), 3);
        assert!(m.has_arrow(0, 2) && m.has_arrow(2, 1) && m.has_arrow(1, 0));
        assert_eq!(m.oriented_three_cycles(), vec![[0, 2, 1]]);
        assert_eq!(m.mutate_at(&2).unwrap(), path(3));
    }

    #[test]
    fn mutation_cancels_two_cycles() {
        // 1 -> 2 -> 3 and 3 -> 1: mutating at 2 adds 1 -> 3, cancelling 3 -> 1
        let q = Quiver::from_arrows(vec![1, 2, 3], [(0, 1), (1, 2), (2, 0)]);
        let m = q.mutate_at(&2).unwrap();
        assert!(!m.has_arrow(0, 2) && !m.has_arrow(2, 0));
        assert!(m.has_arrow(1, 0) && m.has_arrow(2, 1));
        assert!(matches!(q.mutate_at(&7), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn structure_queries() {
        let q = path(4);
        assert!(q.is_connected());
        assert!(q.is_acyclic());
        assert!(q.is_source(0) && q.is_sink(3));
        let d = q.delete_vertex(&2).unwrap();
        assert_eq!(d.connected_components(), 2);
        assert_eq!(d.labels(), &[1, 3, 4]);
        let cyc = Quiver::from_arrows(vec![1, 2, 3, 4], [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(cyc.oriented_cycles(), vec![vec![0, 1, 2, 3]]);
        assert!(cyc.on_oriented_cycle(2));
        assert!(cyc.oriented_three_cycles().is_empty());
    }

    #[test]
    fn labelled_equality_ignores_order() {
        let q = path(3);
        let r = q.reorder(&[3, 1, 2]).unwrap();
        assert_ne!(q, r);
        assert!(q.same_labelled(&r));
        assert!(!q.same_labelled(&q.mutate(0)));
    }

    #[test]
    fn dot_and_json() {
        let q = path(2);
        assert_eq!(q.to_dot("q"), "digraph \"q\" {\n  \"1\";\n  \"2\";\n  \"1\" -> \"2\";\n}\n");
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"vertices":["1","2"],"arrows":[["1","2"]]}"#);
        assert_eq!(q.to_string(), "1 -> 2");
    }
}
