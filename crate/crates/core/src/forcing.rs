//! Forced vertices, forcing arcs and the structure they impose on extremal
//! digraphs.
//!
//! A vertex `v` is domination-forced when some `w` has `N⁻(w) = {v}` and
//! location-forced when some pair `x ≠ y` has `N⁻(x) ⊖ N⁻(y) = {v}`. An arc
//! `x → y` is forcing when `N⁻(y) = {x}` or `N⁻(y) ⊖ N⁻(z) = {x}` for some
//! `z`, so a vertex is forced exactly when it is the tail of a forcing arc.
//! (Reading the second condition as a plain difference `N⁻(y) ∖ N⁻(z)`
//! agrees on extremal digraphs but breaks the characterization below on
//! non-extremal ones from order 4.) A locatable digraph has `γ_OL = n` exactly when its forcing arcs form
//! a spanning disjoint union of directed cycles; `f⁺`/`f⁻` are then the
//! successor and predecessor maps of that permutation.

use crate::digraph::Digraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexForcing {
    /// Smallest `w` with `N⁻(w) = {v}`.
    pub domination_witness: Option<usize>,
    /// Every unordered pair `(x, y)`, `x < y`, with `N⁻(x) ⊖ N⁻(y) = {v}`.
    pub location_witnesses: Vec<(usize, usize)>,
}

impl VertexForcing {
    pub fn domination_forced(&self) -> bool {
        self.domination_witness.is_some()
    }

    pub fn location_forced(&self) -> bool {
        !self.location_witnesses.is_empty()
    }

    pub fn forced(&self) -> bool {
        self.domination_forced() || self.location_forced()
    }

    pub fn double_forced(&self) -> bool {
        (self.domination_forced() && self.location_forced()) || self.location_witnesses.len() >= 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedReport {
    pub vertices: Vec<VertexForcing>,
}

impl ForcedReport {
    fn collect(&self, pred: impl Fn(&VertexForcing) -> bool) -> VertexSet {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, r)| pred(r))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn domination_forced(&self) -> VertexSet {
        self.collect(VertexForcing::domination_forced)
    }

    pub fn location_forced(&self) -> VertexSet {
        self.collect(VertexForcing::location_forced)
    }

    pub fn forced(&self) -> VertexSet {
        self.collect(VertexForcing::forced)
    }

    pub fn double_forced(&self) -> VertexSet {
        self.collect(VertexForcing::double_forced)
    }

    pub fn all_forced(&self) -> bool {
        self.vertices.iter().all(VertexForcing::forced)
    }
}

pub fn forced_report(d: &Digraph) -> ForcedReport {
    let n = d.order();
    let mut vertices = vec![VertexForcing::default(); n];
    for w in 0..n {
        if let Some(v) = d.in_neighbours(w).single() {
            vertices[v].domination_witness.get_or_insert(w);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if let Some(v) = (d.in_neighbours(x) ^ d.in_neighbours(y)).single() {
                vertices[v].location_witnesses.push((x, y));
            }
        }
    }
    ForcedReport { vertices }
}

pub fn is_forcing_arc(d: &Digraph, x: usize, y: usize) -> bool {
    if !d.has_arc(x, y) {
        return false;
    }
    let target = VertexSet::singleton(x);
    let ny = d.in_neighbours(y);
    ny == target || d.vertices().any(|z| ny ^ d.in_neighbours(z) == target)
}

/// Forcing arcs in lexicographic order.
pub fn forcing_arcs(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().filter(|&(x, y)| is_forcing_arc(d, x, y)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingDecomposition {
    pub forcing_arcs: Vec<(usize, usize)>,
    /// Each cycle starts at its smallest vertex and follows `f⁺`; cycles are
    /// ordered by that vertex.
    pub cycles: Option<Vec<Vec<usize>>>,
    pub f_plus: Option<Vec<usize>>,
    pub f_minus: Option<Vec<usize>>,
}

impl ForcingDecomposition {
    pub fn spans_cycles(&self) -> bool {
        self.f_plus.is_some()
    }
}

pub fn forcing_decomposition(d: &Digraph) -> ForcingDecomposition {
    let arcs = forcing_arcs(d);
    let n = d.order();
    let mut f_plus = vec![usize::MAX; n];
    let mut f_minus = vec![usize::MAX; n];
    let mut ok = arcs.len() == n;
    for &(x, y) in &arcs {
        if f_plus[x] != usize::MAX || f_minus[y] != usize::MAX {
            ok = false;
            break;
        }
        f_plus[x] = y;
        f_minus[y] = x;
    }
    if !ok {
        return ForcingDecomposition { forcing_arcs: arcs, cycles: None, f_plus: None, f_minus: None };
    }
    let mut seen = VertexSet::EMPTY;
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut cycle = vec![start];
        seen.insert(start);
        let mut v = f_plus[start];
        while v != start {
            cycle.push(v);
            seen.insert(v);
            v = f_plus[v];
        }
        cycles.push(cycle);
    }
    ForcingDecomposition {
        forcing_arcs: arcs,
        cycles: Some(cycles),
        f_plus: Some(f_plus),
        f_minus: Some(f_minus),
    }
}

/// Whether the forcing arcs span `D` as disjoint directed cycles. Meaningful
/// as an extremality test only for locatable digraphs; callers check that.
pub fn is_extremal_structural(d: &Digraph) -> bool {
    forcing_decomposition(d).spans_cycles()
}

/// Deletes every non-forcing arc whose tail is `x`.
pub fn strip_non_forcing_arcs(d: &Digraph, x: usize) -> Digraph {
    let mut out = d.clone();
    for y in d.out_neighbours(x) {
        if !is_forcing_arc(d, x, y) {
            out.remove_arc(x, y);
        }
    }
    out
}

/// `𝓗(D)`: arc `x → y` when `N⁻(x) = N⁻(y) ∖ {v}` for a location-forced `v ∈ N⁻(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HForest {
    pub arcs: Vec<(usize, usize)>,
    /// Smallest in-neighbour in `𝓗(D)`, if any.
    pub parent: Vec<Option<usize>>,
    pub roots: VertexSet,
    /// Vertices with two or more parents; empty for extremal digraphs.
    pub multi_parent: Vec<usize>,
    pub acyclic: bool,
}

impl HForest {
    pub fn is_forest(&self) -> bool {
        self.acyclic && self.multi_parent.is_empty()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|&&(x, _)| x == v).map(|&(_, y)| y).collect()
    }
}

pub fn build_h_digraph(d: &Digraph) -> HForest {
    let n = d.order();
    let location_forced = forced_report(d).location_forced();
    let mut arcs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let (nx, ny) = (d.in_neighbours(x), d.in_neighbours(y));
            if let Some(v) = (ny - nx).single() {
                if nx.is_subset(ny) && location_forced.contains(v) {
                    arcs.push((x, y));
                }
            }
        }
    }
    let mut parent = vec![None; n];
    let mut parents = vec![0usize; n];
    for &(x, y) in &arcs {
        parents[y] += 1;
        parent[y].get_or_insert(x);
    }
    let multi_parent = (0..n).filter(|&v| parents[v] > 1).collect();
    let roots = (0..n).filter(|&v| parents[v] == 0).collect();
    let acyclic = is_acyclic(n, &arcs);
    HForest { arcs, parent, roots, multi_parent, acyclic }
}

fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    for &(_, y) in arcs {
        indeg[y] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for &(x, y) in arcs {
            if x == v {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
    }
    removed == n
}
