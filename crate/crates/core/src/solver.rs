//! Locatability, OLD-set verification and exact `γ_OL`.
//!
//! A set `S` is an OLD set when every vertex has an in-neighbour in `S` and
//! every two vertices are separated by a member of `S` lying in exactly one
//! of their in-neighbourhoods. Supersets of OLD sets are OLD sets, which is
//! what the exhaustive routines below lean on.

use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OldResult {
    pub gamma: Option<usize>,
    pub witness: Option<VertexSet>,
    pub locatable: bool,
}

impl OldResult {
    fn not_locatable() -> Self {
        OldResult { gamma: None, witness: None, locatable: false }
    }
}

/// Unordered pairs `(u, v)`, `u < v`, with `N⁻(u) = N⁻(v)`.
pub fn in_twins(d: &Digraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in d.vertices() {
        for v in u + 1..d.order() {
            if d.in_neighbours(u) == d.in_neighbours(v) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn is_locatable(d: &Digraph) -> bool {
    d.vertices().all(|v| d.in_degree(v) > 0) && in_twins(d).is_empty()
}

pub fn is_old_set(d: &Digraph, s: VertexSet) -> bool {
    let n = d.order();
    for u in 0..n {
        let tu = d.in_neighbours(u) & s;
        if tu.is_empty() {
            return false;
        }
        for v in 0..u {
            if tu == d.in_neighbours(v) & s {
                return false;
            }
        }
    }
    true
}

/// `γ_OL(D) = n`: locatable, and no single-vertex deletion leaves an OLD set.
pub fn is_extremal(d: &Digraph) -> bool {
    if !is_locatable(d) {
        return false;
    }
    let all = d.vertex_set();
    d.vertices().all(|v| !is_old_set(d, all.without(v)))
}

/// Exact `γ_OL` with a witness, by size-increasing subset search per
/// connected component of the underlying graph. Among minimum sets the
/// lexicographically first (by sorted vertex indices) is returned.
pub fn min_old_set(d: &Digraph) -> OldResult {
    if !is_locatable(d) {
        return OldResult::not_locatable();
    }
    let mut witness = VertexSet::EMPTY;
    for comp in d.components() {
        let (sub, old_of) = d.induced(comp);
        let local = min_old_set_connected(&sub);
        witness = witness | local.iter().map(|v| old_of[v]).collect();
    }
    OldResult { gamma: Some(witness.len()), witness: Some(witness), locatable: true }
}

fn min_old_set_connected(d: &Digraph) -> VertexSet {
    let n = d.order();
    let bound = greedy_old_set(d).expect("locatable digraphs admit a greedy OLD set").len();
    for k in 1..=bound {
        if let Some(s) = Combinations::new(n, k).find(|&s| is_old_set(d, s)) {
            return s;
        }
    }
    unreachable!("the greedy set has size {bound}, so some set of that size passes")
}

/// Size of a greedily built OLD set, or `None` if `D` is not locatable.
pub fn greedy_old_upper_bound(d: &Digraph) -> Option<usize> {
    greedy_old_set(d).map(VertexSet::len)
}

/// Repeatedly adds the vertex that settles the most outstanding domination or
/// separation requirements, lowest index first on ties.
pub fn greedy_old_set(d: &Digraph) -> Option<VertexSet> {
    let n = d.order();
    let mut requirements: Vec<VertexSet> = d.vertices().map(|v| d.in_neighbours(v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            requirements.push(d.in_neighbours(u) ^ d.in_neighbours(v));
        }
    }
    if requirements.iter().any(|r| r.is_empty()) {
        return None;
    }
    let mut chosen = VertexSet::EMPTY;
    while !requirements.is_empty() {
        let mut best = (0, 0);
        for x in 0..n {
            let hits = requirements.iter().filter(|r| r.contains(x)).count();
            if hits > best.1 {
                best = (x, hits);
            }
        }
        chosen.insert(best.0);
        requirements.retain(|r| !r.contains(best.0));
    }
    Some(chosen)
}

/// `k`-subsets of `0..n` in lexicographic order of their sorted elements.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().copied().collect();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
