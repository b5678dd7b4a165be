//! Test-only oracles that avoid the library's search, mutation and
//! isomorphism code.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use dncat::geometry::{Polygon, TaggedEdge};
use dncat::quiver::Quiver;

/// Cluster count of type D_n, `(3n - 2)/n * C(2n - 2, n - 1)`, in exact
/// integer arithmetic.
pub fn type_d_count(n: u32) -> u128 {
    let n = u128::from(n);
    let mut c = 1u128;
    for i in 0..n - 1 {
        c = c * (2 * n - 2 - i) / (i + 1);
    }
    assert_eq!((3 * n - 2) * c % n, 0);
    (3 * n - 2) * c / n
}

/// Maximal pairwise non-crossing subsets of the edge alphabet, found by
/// include/exclude recursion over every compatible set and a full scan for
/// maximality. No assumption on the size of the sets.
pub fn brute_force_maximal(p: Polygon) -> Vec<Vec<TaggedEdge>> {
    let edges = p.all_edges();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(p, &edges, 0, &mut chosen, &mut out);
    out
}

fn grow(p: Polygon, edges: &[TaggedEdge], i: usize, chosen: &mut Vec<TaggedEdge>, out: &mut Vec<Vec<TaggedEdge>>) {
    if i == edges.len() {
        let maximal = edges.iter().all(|e| chosen.contains(e) || chosen.iter().any(|m| p.crossing(m, e) > 0));
        if maximal {
            out.push(chosen.clone());
        }
        return;
    }
    let e = edges[i];
    if chosen.iter().all(|m| p.crossing(m, &e) == 0) {
        chosen.push(e);
        grow(p, edges, i + 1, chosen, out);
        chosen.pop();
    }
    grow(p, edges, i + 1, chosen, out);
}

/// Skew-symmetric exchange matrix.
pub type Skew = Vec<Vec<i32>>;

pub fn skew<L: Clone + PartialEq>(q: &Quiver<L>) -> Skew {
    let k = q.vertex_count();
    (0..k).map(|i| (0..k).map(|j| q.arrow_count(i, j) as i32 - q.arrow_count(j, i) as i32).collect()).collect()
}

/// Matrix mutation `b'_ij = -b_ij` if `v` is `i` or `j`, otherwise
/// `b_ij + (|b_iv| b_vj + b_iv |b_vj|) / 2`.
pub fn mutate_skew(b: &Skew, v: usize) -> Skew {
    let k = b.len();
    let mut out = b.clone();
    for i in 0..k {
        for j in 0..k {
            out[i][j] = if i == v || j == v { -b[i][j] } else { b[i][j] + (b[i][v].abs() * b[v][j] + b[i][v] * b[v][j].abs()) / 2 };
        }
    }
    out
}

pub fn permute(b: &Skew, perm: &[usize]) -> Skew {
    let k = b.len();
    let mut out = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            out[perm[i]][perm[j]] = b[i][j];
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabelled matrix over all permutations, with a degree-sequence
/// filter so only degree-sorted relabellings are tried.
pub fn brute_canonical(b: &Skew) -> Skew {
    let k = b.len();
    let key = |i: usize| {
        let out: i32 = b[i].iter().filter(|x| **x > 0).sum();
        let inn: i32 = b[i].iter().filter(|x| **x < 0).map(|x| -x).sum();
        (out, inn)
    };
    let keys: Vec<(i32, i32)> = (0..k).map(key).collect();
    let mut best: Option<Skew> = None;
    for perm in permutations(k) {
        // vertex i goes to position perm[i]; keep positions sorted by key
        let mut at = vec![(0, 0); k];
        for i in 0..k {
            at[perm[i]] = keys[i];
        }
        if at.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        let c = permute(b, &perm);
        if best.as_ref().is_none_or(|x| c < *x) {
            best = Some(c);
        }
    }
    best.unwrap_or_default()
}

pub fn brute_isomorphic(a: &Skew, b: &Skew) -> bool {
    a.len() == b.len() && brute_canonical(a) == brute_canonical(b)
}

/// Linear orientation of A_k (k >= 1) or D_k (k >= 4) as a matrix.
pub fn dynkin(d: bool, k: usize) -> Skew {
    let mut b = vec![vec![0; k]; k];
    let mut arrow = |i: usize, j: usize| {
        b[i][j] = 1;
        b[j][i] = -1;
    };
    if d {
        for i in 0..k - 2 {
            arrow(i, i + 1);
        }
        arrow(k - 3, k - 1);
    } else {
        for i in 0..k.saturating_sub(1) {
            arrow(i, i + 1);
        }
    }
    b
}

/// Mutation class up to isomorphism, as brute-force canonical matrices.
pub fn brute_mutation_class(start: Skew) -> BTreeSet<Skew> {
    let k = start.len();
    let mut seen = BTreeSet::from([brute_canonical(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for v in 0..k {
            let next = mutate_skew(&b, v);
            if seen.insert(brute_canonical(&next)) {
                queue.push_back(next);
            }
        }
    }
    seen
}
