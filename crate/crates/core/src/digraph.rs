//! Digraphs with loops on dense vertex sets `0..n`.
//!
//! Arcs have set semantics: a digraph never holds two arcs with the same tail
//! and head. A loop at `v` puts `v` in both `N⁻(v)` and `N⁺(v)` and counts
//! once toward each degree.

use std::fmt;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl Digraph {
    /// The arcless digraph of order `n`.
    ///
    /// Panics if `n > MAX_ORDER`; use [`Digraph::try_new`] for untrusted input.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("digraph order too large")
    }

    pub fn try_new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        Ok(Digraph {
            out_adj: vec![VertexSet::EMPTY; n],
            in_adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::try_new(n)?;
        for (u, v) in arcs {
            d.try_add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn order(&self) -> usize {
        self.out_adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Adds `u → v`; returns `false` if the arc was already present.
    pub fn add_arc(&mut self, u: usize, v: usize) -> bool {
        self.try_add_arc(u, v).expect("arc endpoint out of range")
    }

    pub fn try_add_arc(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        self.in_adj[v].insert(u);
        Ok(self.out_adj[u].insert(v))
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        if u >= self.order() || v >= self.order() {
            return false;
        }
        self.in_adj[v].remove(u);
        self.out_adj[u].remove(v)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.out_adj[u].contains(v)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    pub fn out_neighbours(&self, u: usize) -> VertexSet {
        self.out_adj[u]
    }

    /// `N⁻(v)`. Panics when `v` is out of range, like slice indexing.
    pub fn in_neighbours(&self, v: usize) -> VertexSet {
        self.in_adj[v]
    }

    pub fn try_in_neighbours(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check(v)?;
        Ok(self.in_adj[v])
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|s| s.len()).sum()
    }

    /// Arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |v| (u, v)))
    }

    pub fn underlying_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.order());
        for (u, v) in self.arcs() {
            if u != v {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn classify(&self) -> Classification {
        let n = self.order();
        let symmetric = self.arcs().all(|(u, v)| self.has_arc(v, u));
        let loops = (0..n).filter(|&v| self.has_loop(v)).count();
        let two_cycle = self.arcs().any(|(u, v)| u != v && self.has_arc(v, u));
        Classification {
            symmetric,
            reflexive: loops == n,
            loop_free: loops == 0,
            oriented: loops == 0 && !two_cycle,
            has_two_cycle: two_cycle,
            connected_underlying: self.underlying_graph().is_connected(),
            source_exists: (0..n).any(|v| self.in_degree(v) == 0),
            sink_exists: (0..n).any(|v| self.out_degree(v) == 0),
        }
    }

    /// Adds a loop at every vertex. Idempotent.
    pub fn reflexive_closure(&self) -> Digraph {
        let mut d = self.clone();
        for v in self.vertices() {
            d.add_arc(v, v);
        }
        d
    }

    /// Removes every loop.
    pub fn without_loops(&self) -> Digraph {
        let mut d = self.clone();
        for v in self.vertices() {
            d.remove_arc(v, v);
        }
        d
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut d = Digraph::new(self.order());
        for (u, v) in self.arcs() {
            d.add_arc(perm[u], perm[v]);
        }
        d
    }

    /// The subdigraph induced by `keep`, relabelled to `0..keep.len()` in
    /// increasing order. Returns the digraph and the new→old vertex map.
    pub fn induced(&self, keep: VertexSet) -> (Digraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.order()).collect();
        let mut new_of = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut d = Digraph::new(old.len());
        for (u, v) in self.arcs() {
            if keep.contains(u) && keep.contains(v) {
                d.add_arc(new_of[u], new_of[v]);
            }
        }
        (d, old)
    }

    /// Deletes `vertices` and their incident arcs, relabelling the rest in order.
    pub fn remove_vertices(&self, vertices: VertexSet) -> Digraph {
        self.induced(self.vertex_set() - vertices).0
    }

    /// Adds `extra` arcless vertices, numbered after the existing ones.
    pub fn with_extra_vertices(&self, extra: usize) -> Digraph {
        let mut d = Digraph::new(self.order() + extra);
        for (u, v) in self.arcs() {
            d.add_arc(u, v);
        }
        d
    }

    /// Vertex sets of the connected components of the underlying graph,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.underlying_graph().components()
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.order())?;
        let arcs: Vec<String> = self.arcs().map(|(u, v)| format!("{u}->{v}")).collect();
        write!(f, "{})", arcs.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Classification {
    pub symmetric: bool,
    pub reflexive: bool,
    pub loop_free: bool,
    /// Loop-free with at most one arc between any two vertices.
    pub oriented: bool,
    /// Some pair `u ≠ v` has both `u → v` and `v → u`.
    pub has_two_cycle: bool,
    pub connected_underlying: bool,
    pub source_exists: bool,
    pub sink_exists: bool,
}

/// A loop-free simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order too large");
        SimpleGraph { adj: vec![VertexSet::EMPTY; n] }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "simple graphs have no loops");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `{u, v}` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, s) in self.adj.iter().enumerate() {
            for v in s.iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | self.adj[v];
                }
                frontier = next - comp;
                comp = comp | next;
            }
            seen = seen | comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// The symmetric digraph with both arcs for every edge.
    pub fn to_symmetric_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.order());
        for (u, v) in self.edges() {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
        d
    }
}

/// The directed cycle `0 → 1 → … → n-1 → 0`; for `n = 1` a single loop.
pub fn directed_cycle(n: usize) -> Digraph {
    let mut d = Digraph::new(n);
    for v in 0..n {
        d.add_arc(v, (v + 1) % n);
    }
    d
}
