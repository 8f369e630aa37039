//! Deterministic, index-addressable enumerators.
//!
//! Every enumerator is a pure map `index → Digraph` over `0..count`, so the
//! harness can split index ranges between workers.

use crate::digraph::{Digraph, SimpleGraph};
use crate::error::GraphError;

pub const DEFAULT_LABELLED_CAP: usize = 4;
pub const DEFAULT_TREE_CAP: usize = 6;
pub const DEFAULT_UNDIRECTED_CAP: usize = 6;

/// Digraphs of order 8 would need 64 arc bits plus a count of `2^64`.
const MAX_LABELLED_ORDER: usize = 7;
const MAX_TREE_ORDER: usize = 10;
const MAX_UNDIRECTED_ORDER: usize = 11;

fn check_cap(n: usize, cap: usize, hard: usize) -> Result<(), GraphError> {
    let cap = cap.min(hard);
    if n > cap {
        Err(GraphError::CapExceeded { requested: n, cap })
    } else {
        Ok(())
    }
}

/// `2^(n²)`.
pub fn labelled_digraph_count(n: usize) -> u64 {
    1u64 << (n * n)
}

/// The digraph whose arc `u → v` is present iff bit `u·n + v` of `index` is set.
pub fn labelled_digraph(n: usize, index: u64) -> Digraph {
    let mut d = Digraph::new(n);
    for i in 0..n * n {
        if index >> i & 1 == 1 {
            d.add_arc(i / n, i % n);
        }
    }
    d
}

pub fn enumerate_labelled_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>, GraphError> {
    enumerate_labelled_digraphs_with_cap(n, DEFAULT_LABELLED_CAP)
}

pub fn enumerate_labelled_digraphs_with_cap(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Digraph>, GraphError> {
    check_cap(n, cap, MAX_LABELLED_ORDER)?;
    Ok((0..labelled_digraph_count(n)).map(move |i| labelled_digraph(n, i)))
}

/// Number of labelled trees on `n` vertices (Cayley), `n ≥ 1`.
pub fn labelled_tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// The labelled tree whose Prüfer sequence is the base-`n` expansion of
/// `index` (most significant digit first).
pub fn labelled_tree(n: usize, index: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    if n < 2 {
        return g;
    }
    if n == 2 {
        g.add_edge(0, 1);
        return g;
    }
    let mut seq = vec![0usize; n - 2];
    let mut rest = index;
    for slot in seq.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("Prüfer decoding always finds a leaf");
        g.add_edge(leaf, s);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(last[0], last[1]);
    g
}

/// Orientation/loop states per labelled tree: `3^(n-1) · 2^n`.
pub fn tree_states(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    3u64.pow(n as u32 - 1) << n
}

pub fn tree_digraph_count(n: usize) -> u64 {
    labelled_tree_count(n) * tree_states(n)
}

/// Index layout: `tree · tree_states(n) + state`, where `state` holds `n`
/// loop bits in its low part and one base-3 digit per tree edge (edges in
/// lexicographic order) above it: 0 = `u → v`, 1 = `v → u`, 2 = both.
pub fn tree_digraph(n: usize, index: u64) -> Digraph {
    let states = tree_states(n);
    let tree = labelled_tree(n, index / states);
    let state = index % states;
    let mut d = Digraph::new(n);
    for v in 0..n {
        if state >> v & 1 == 1 {
            d.add_arc(v, v);
        }
    }
    let mut dirs = state >> n;
    for (u, v) in tree.edges() {
        match dirs % 3 {
            0 => {
                d.add_arc(u, v);
            }
            1 => {
                d.add_arc(v, u);
            }
            _ => {
                d.add_arc(u, v);
                d.add_arc(v, u);
            }
        }
        dirs /= 3;
    }
    d
}

/// Every digraph whose underlying graph is a tree on `0..n`.
pub fn enumerate_tree_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>, GraphError> {
    enumerate_tree_digraphs_with_cap(n, DEFAULT_TREE_CAP)
}

pub fn enumerate_tree_digraphs_with_cap(n: usize, cap: usize) -> Result<impl Iterator<Item = Digraph>, GraphError> {
    check_cap(n, cap, MAX_TREE_ORDER)?;
    Ok((0..tree_digraph_count(n)).map(move |i| tree_digraph(n, i)))
}

/// `2^(n(n-1)/2)`.
pub fn undirected_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Bit `k` of `index` toggles the `k`-th pair `{u < v}` in lexicographic order.
pub fn undirected_graph(n: usize, index: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if index >> k & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

pub fn enumerate_undirected_graphs(n: usize) -> Result<impl Iterator<Item = SimpleGraph>, GraphError> {
    enumerate_undirected_graphs_with_cap(n, DEFAULT_UNDIRECTED_CAP)
}

pub fn enumerate_undirected_graphs_with_cap(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = SimpleGraph>, GraphError> {
    check_cap(n, cap, MAX_UNDIRECTED_ORDER)?;
    Ok((0..undirected_graph_count(n)).map(move |i| undirected_graph(n, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labelled_counts() {
        assert_eq!(enumerate_labelled_digraphs(1).unwrap().count(), 2);
        assert_eq!(enumerate_labelled_digraphs(2).unwrap().count(), 16);
        assert_eq!(enumerate_labelled_digraphs(4).unwrap().count(), 65_536);
        assert!(matches!(
            enumerate_labelled_digraphs(5),
            Err(GraphError::CapExceeded { requested: 5, cap: 4 })
        ));
    }

    #[test]
    fn labelled_digraphs_are_distinct() {
        let all: HashSet<Digraph> = enumerate_labelled_digraphs(3).unwrap().collect();
        assert_eq!(all.len(), 512);
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_tree_digraphs(1).unwrap().count(), 2);
        assert_eq!(enumerate_tree_digraphs(2).unwrap().count(), 12);
        assert_eq!(enumerate_tree_digraphs(3).unwrap().count(), 216);
        assert!(enumerate_tree_digraphs(7).is_err());
    }

    #[test]
    fn prufer_trees_are_distinct_trees() {
        for n in 1..=6 {
            let trees: HashSet<Vec<(usize, usize)>> = (0..labelled_tree_count(n))
                .map(|i| {
                    let t = labelled_tree(n, i);
                    assert!(t.is_tree());
                    t.edges()
                })
                .collect();
            assert_eq!(trees.len() as u64, labelled_tree_count(n));
        }
    }

    #[test]
    fn tree_digraphs_are_distinct_and_tree_shaped() {
        for n in 1..=4 {
            let all: HashSet<Digraph> = enumerate_tree_digraphs(n)
                .unwrap()
                .inspect(|d| assert!(d.underlying_graph().is_tree()))
                .collect();
            assert_eq!(all.len() as u64, tree_digraph_count(n));
        }
    }

    #[test]
    fn undirected_counts() {
        assert_eq!(enumerate_undirected_graphs(6).unwrap().count(), 1 << 15);
        assert_eq!(undirected_graph(3, 0b111).edge_count(), 3);
    }
}
