//! Quiver isomorphism: a canonical code by colour refinement plus
//! individualisation, and an independent backtracking matcher that returns a
//! witness bijection.

use std::fmt;

use super::Quiver;

/// Isomorphism invariant that separates non-isomorphic quivers: the
/// lexicographically least adjacency encoding reachable by the search.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Arrow counts as a plain matrix, detached from labels.
struct Matrix {
    k: usize,
    a: Vec<u32>,
}

impl Matrix {
    fn of<L: Clone + PartialEq>(q: &Quiver<L>) -> Self {
        let k = q.vertex_count();
        let a = (0..k * k).map(|ij| q.arrow_count(ij / k, ij % k)).collect();
        Matrix { k, a }
    }

    fn at(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.k + j]
    }
}

/// Replaces colours by their rank in the sorted list of distinct values.
fn rerank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|key| sorted.binary_search(key).unwrap() as u32).collect()
}

/// Colour, loop count, and the coloured out- and in-neighbourhoods.
type RefineKey = (u32, u32, Vec<(u32, u32)>, Vec<(u32, u32)>);

/// Iterated colour refinement. A vertex's new colour is its old colour
/// followed by the sorted colours of its out- and in-neighbourhoods (with
/// multiplicities); old cell order is preserved, so the result is canonical.
fn refine(m: &Matrix, mut colors: Vec<u32>) -> Vec<u32> {
    loop {
        let keys: Vec<RefineKey> = (0..m.k)
            .map(|v| {
                let mut out: Vec<(u32, u32)> = (0..m.k).filter(|&w| m.at(v, w) > 0).map(|w| (colors[w], m.at(v, w))).collect();
                let mut inn: Vec<(u32, u32)> = (0..m.k).filter(|&w| m.at(w, v) > 0).map(|w| (colors[w], m.at(w, v))).collect();
                out.sort_unstable();
                inn.sort_unstable();
                (colors[v], m.at(v, v), out, inn)
            })
            .collect();
        let next = rerank(&keys);
        let before = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        let after = next.iter().collect::<std::collections::BTreeSet<_>>().len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<u32> = colors.iter().enumerate().map(|(w, &c)| 2 * c + u32::from(w != v)).collect();
    rerank(&keys)
}

/// The vertices of the first colour class with more than one member.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = colors.len();
    let mut counts = vec![0usize; k];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let c = (0..k).find(|&c| counts[c] > 1)? as u32;
    Some((0..k).filter(|&v| colors[v] == c).collect())
}

fn encode(m: &Matrix, colors: &[u32]) -> Vec<u32> {
    let mut order = vec![0usize; m.k];
    for (v, &c) in colors.iter().enumerate() {
        order[c as usize] = v;
    }
    let mut code = Vec::with_capacity(1 + m.k * m.k);
    code.push(m.k as u32);
    for &i in &order {
        for &j in &order {
            code.push(m.at(i, j));
        }
    }
    code
}

/// Vertices `u`, `v` with identical rows and columns outside `{u, v}` and
/// symmetric mutual arrows: swapping them is an automorphism.
fn twins(m: &Matrix, u: usize, v: usize) -> bool {
    m.at(u, v) == m.at(v, u)
        && m.at(u, u) == m.at(v, v)
        && (0..m.k).filter(|&w| w != u && w != v).all(|w| m.at(u, w) == m.at(v, w) && m.at(w, u) == m.at(w, v))
}

fn search(m: &Matrix, colors: Vec<u32>, best: &mut Option<Vec<u32>>) {
    let Some(cell) = target_cell(&colors) else {
        let code = encode(m, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(m, u, v)) {
            continue;
        }
        tried.push(v);
        search(m, refine(m, individualize(&colors, v)), best);
    }
}

/// Canonical code: equal codes if and only if the quivers are isomorphic.
pub fn canonical_code<L: Clone + PartialEq>(q: &Quiver<L>) -> CanonicalCode {
    let m = Matrix::of(q);
    let mut best = None;
    search(&m, refine(&m, vec![0; m.k]), &mut best);
    CanonicalCode(best.unwrap_or_else(|| vec![0]))
}

/// A vertex bijection `f` (as indices, `f[i]` in `b` for `i` in `a`) that
/// carries the arrows of `a` exactly onto those of `b`, if one exists.
pub fn find_isomorphism<L: Clone + PartialEq, M: Clone + PartialEq>(a: &Quiver<L>, b: &Quiver<M>) -> Option<Vec<usize>> {
    let (ma, mb) = (Matrix::of(a), Matrix::of(b));
    if ma.k != mb.k {
        return None;
    }
    let k = ma.k;
    if ma.a.iter().sum::<u32>() != mb.a.iter().sum::<u32>() {
        return None;
    }
    // refine the disjoint union so that colours are comparable across sides
    let mut union = Matrix { k: 2 * k, a: vec![0; 4 * k * k] };
    for i in 0..k {
        for j in 0..k {
            union.a[i * 2 * k + j] = ma.at(i, j);
            union.a[(i + k) * 2 * k + j + k] = mb.at(i, j);
        }
    }
    let colors = refine(&union, vec![0; 2 * k]);
    let (ca, cb) = colors.split_at(k);
    let mut sa = ca.to_vec();
    let mut sb = cb.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| (ca.iter().filter(|&&c| c == ca[v]).count(), ca[v], v));
    let mut matcher = Matcher { order: &order, ma: &ma, mb: &mb, ca, cb, map: vec![usize::MAX; k], used: vec![false; k] };
    matcher.extend(0).then_some(matcher.map)
}

struct Matcher<'a> {
    order: &'a [usize],
    ma: &'a Matrix,
    mb: &'a Matrix,
    ca: &'a [u32],
    cb: &'a [u32],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else { return true };
        let (ma, mb) = (self.ma, self.mb);
        for w in 0..mb.k {
            if self.used[w] || self.cb[w] != self.ca[v] || ma.at(v, v) != mb.at(w, w) {
                continue;
            }
            let consistent =
                self.order[..depth].iter().all(|&u| ma.at(u, v) == mb.at(self.map[u], w) && ma.at(v, u) == mb.at(w, self.map[u]));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

pub fn is_isomorphic<L: Clone + PartialEq, M: Clone + PartialEq>(a: &Quiver<L>, b: &Quiver<M>) -> bool {
    find_isomorphism(a, b).is_some()
}
