//! Building extremal digraphs.
//!
//! A blueprint fixes the forcing permutation `f⁺`, the split of the vertices
//! into domination-forced `V_d` and location-forced `V_l`, and a rooted
//! forest `𝓗` whose roots are exactly `f⁺(V_d)`. The digraph it describes has
//! the forcing arcs `v → f⁺(v)` plus an arc from `f⁻(v)` to every proper
//! descendant of `v` in `𝓗`. Every extremal digraph arises this way, and
//! `decompose_to_blueprint` recovers the blueprint from the digraph.

use std::fmt;

use crate::digraph::{Digraph, SimpleGraph};
use crate::error::{ConstructError, GraphError};
use crate::forcing::{build_h_digraph, forced_report, forcing_decomposition};
use crate::solver::is_locatable;
use crate::vertex_set::VertexSet;

pub const DEFAULT_BLUEPRINT_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtremalBlueprint {
    pub f_plus: Vec<usize>,
    pub v_d: VertexSet,
    /// Parent of each vertex in `𝓗`; `None` marks a root.
    pub h_parent: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlueprintViolation {
    LengthMismatch { f_plus: usize, h_parent: usize },
    NotAPermutation,
    VdOutOfRange,
    EmptyVd,
    ParentOutOfRange { vertex: usize, parent: usize },
    ParentCycle { vertex: usize },
    /// `v` is a root but `f⁻(v)` is not in `V_d`.
    RootNotDominated { vertex: usize },
    /// `v` has a parent but `f⁻(v)` is in `V_d`.
    DominatedHasParent { vertex: usize },
}

impl fmt::Display for BlueprintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LengthMismatch { f_plus, h_parent } => {
                write!(f, "f_plus has {f_plus} entries but the parent map has {h_parent}")
            }
            Self::NotAPermutation => write!(f, "f_plus is not a permutation"),
            Self::VdOutOfRange => write!(f, "V_d names a vertex outside the digraph"),
            Self::EmptyVd => write!(f, "V_d is empty"),
            Self::ParentOutOfRange { vertex, parent } => write!(f, "parent {parent} of {vertex} is out of range"),
            Self::ParentCycle { vertex } => write!(f, "vertex {vertex} lies on a parent cycle"),
            Self::RootNotDominated { vertex } => {
                write!(f, "vertex {vertex} is a root but its forcing predecessor is not in V_d")
            }
            Self::DominatedHasParent { vertex } => {
                write!(f, "vertex {vertex} has a parent but its forcing predecessor is in V_d")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlueprintReport {
    pub violations: Vec<BlueprintViolation>,
}

impl BlueprintReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for BlueprintReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

impl ExtremalBlueprint {
    pub fn order(&self) -> usize {
        self.f_plus.len()
    }

    pub fn v_l(&self) -> VertexSet {
        VertexSet::full(self.order()) - self.v_d
    }

    pub fn f_minus(&self) -> Vec<usize> {
        let mut inv = vec![0; self.order()];
        for (v, &w) in self.f_plus.iter().enumerate() {
            inv[w] = v;
        }
        inv
    }

    /// Lengths of the cycles of `f⁺`, ordered by smallest member.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            loop {
                seen.insert(v);
                len += 1;
                v = self.f_plus[v];
                if v == start {
                    break;
                }
            }
            out.push(len);
        }
        out
    }

    pub fn roots(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.h_parent[v].is_none()).collect()
    }

    /// Proper descendants of `v` in `𝓗`.
    pub fn descendants(&self, v: usize) -> VertexSet {
        (0..self.order())
            .filter(|&u| {
                let mut cur = self.h_parent[u];
                while let Some(p) = cur {
                    if p == v {
                        return true;
                    }
                    cur = self.h_parent[p];
                }
                false
            })
            .collect()
    }
}

pub fn validate_blueprint(b: &ExtremalBlueprint) -> BlueprintReport {
    let n = b.order();
    let mut violations = Vec::new();
    if b.h_parent.len() != n {
        violations.push(BlueprintViolation::LengthMismatch { f_plus: n, h_parent: b.h_parent.len() });
        return BlueprintReport { violations };
    }
    let image: VertexSet = b.f_plus.iter().copied().filter(|&w| w < n).collect();
    if n > crate::MAX_ORDER || b.f_plus.iter().any(|&w| w >= n) || image.len() != n {
        violations.push(BlueprintViolation::NotAPermutation);
        return BlueprintReport { violations };
    }
    if !b.v_d.is_subset(VertexSet::full(n)) {
        violations.push(BlueprintViolation::VdOutOfRange);
    }
    if b.v_d.is_empty() {
        violations.push(BlueprintViolation::EmptyVd);
    }
    for (v, p) in b.h_parent.iter().enumerate() {
        if let Some(p) = *p {
            if p >= n {
                violations.push(BlueprintViolation::ParentOutOfRange { vertex: v, parent: p });
            }
        }
    }
    if !violations.iter().any(|x| matches!(x, BlueprintViolation::ParentOutOfRange { .. })) {
        for v in 0..n {
            let mut cur = b.h_parent[v];
            let mut steps = 0;
            while let Some(p) = cur {
                steps += 1;
                if p == v || steps > n {
                    violations.push(BlueprintViolation::ParentCycle { vertex: v });
                    break;
                }
                cur = b.h_parent[p];
            }
        }
    }
    let f_minus = b.f_minus();
    for (v, &fm) in f_minus.iter().enumerate() {
        let dominated = b.v_d.contains(fm);
        match (b.h_parent[v].is_none(), dominated) {
            (true, false) => violations.push(BlueprintViolation::RootNotDominated { vertex: v }),
            (false, true) => violations.push(BlueprintViolation::DominatedHasParent { vertex: v }),
            _ => {}
        }
    }
    BlueprintReport { violations }
}

pub fn construct_from_blueprint(b: &ExtremalBlueprint) -> Result<Digraph, ConstructError> {
    let report = validate_blueprint(b);
    if !report.is_valid() {
        return Err(ConstructError::InvalidBlueprint(report));
    }
    let n = b.order();
    let f_minus = b.f_minus();
    let mut d = Digraph::new(n);
    for (v, &fm) in f_minus.iter().enumerate() {
        d.add_arc(v, b.f_plus[v]);
        for desc in b.descendants(v) {
            d.add_arc(fm, desc);
        }
    }
    Ok(d)
}

/// Reads the blueprint off an extremal digraph.
pub fn decompose_to_blueprint(d: &Digraph) -> Result<ExtremalBlueprint, ConstructError> {
    if !is_locatable(d) {
        return Err(ConstructError::NotLocatable);
    }
    let dec = forcing_decomposition(d);
    let f_plus = dec.f_plus.ok_or(ConstructError::NotExtremal)?;
    let h = build_h_digraph(d);
    if !h.is_forest() {
        return Err(ConstructError::NotExtremal);
    }
    Ok(ExtremalBlueprint {
        f_plus,
        v_d: forced_report(d).domination_forced(),
        h_parent: h.parent,
    })
}

/// Symmetric loop-free realization of the half-graph `H_k`: `v_i = i - 1`,
/// `w_j = k + j - 1`, edge `v_i w_j` iff `i ≤ j`.
pub fn build_half_graph_digraph(k: usize) -> Result<Digraph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidArgument("half-graph index must be at least 1".into()));
    }
    if 2 * k > crate::MAX_ORDER {
        return Err(GraphError::OrderTooLarge { order: 2 * k, max: crate::MAX_ORDER });
    }
    let mut g = SimpleGraph::new(2 * k);
    for i in 0..k {
        for j in i..k {
            g.add_edge(i, k + j);
        }
    }
    Ok(g.to_symmetric_digraph())
}

/// Transitive closure of the rooted tree given by `parent` (one `None` entry,
/// the root): an arc from every proper ancestor to each vertex, plus loops on
/// request.
pub fn build_tc_rooted_tree(parent: &[Option<usize>], add_loops: bool) -> Result<Digraph, GraphError> {
    let n = parent.len();
    if n == 0 {
        return Err(GraphError::MalformedTree("empty tree".into()));
    }
    let roots = parent.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(GraphError::MalformedTree(format!("expected exactly one root, found {roots}")));
    }
    let mut d = Digraph::try_new(n)?;
    for v in 0..n {
        let mut cur = parent[v];
        let mut steps = 0;
        while let Some(p) = cur {
            if p >= n {
                return Err(GraphError::MalformedTree(format!("parent {p} of {v} out of range")));
            }
            steps += 1;
            if p == v || steps > n {
                return Err(GraphError::MalformedTree(format!("vertex {v} lies on a cycle")));
            }
            d.add_arc(p, v);
            cur = parent[p];
        }
        if add_loops {
            d.add_arc(v, v);
        }
    }
    Ok(d)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot has a larger successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// All rooted forests on `0..n` as parent maps, in lexicographic order of the
/// map with `None` before `Some(0)`.
pub fn rooted_forests(n: usize) -> Vec<Vec<Option<usize>>> {
    fn acyclic_upto(parent: &[Option<usize>], v: usize) -> bool {
        let mut cur = parent[v];
        let mut steps = 0;
        while let Some(p) = cur {
            if p == v || steps > parent.len() {
                return false;
            }
            steps += 1;
            cur = if p < parent.len() { parent[p] } else { None };
        }
        true
    }
    fn rec(n: usize, parent: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if parent.len() == n {
            let full = parent.clone();
            if (0..n).all(|v| acyclic_upto(&full, v)) {
                out.push(full);
            }
            return;
        }
        let v = parent.len();
        for choice in std::iter::once(None).chain((0..n).filter(|&p| p != v).map(Some)) {
            parent.push(choice);
            rec(n, parent, out);
            parent.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every valid blueprint on `0..n`: all permutations `f⁺` × all rooted
/// forests, with `V_d = f⁻(roots)` forced by the root condition.
pub fn enumerate_blueprints(n: usize) -> Result<Vec<ExtremalBlueprint>, GraphError> {
    enumerate_blueprints_with_cap(n, DEFAULT_BLUEPRINT_CAP)
}

pub fn enumerate_blueprints_with_cap(n: usize, cap: usize) -> Result<Vec<ExtremalBlueprint>, GraphError> {
    if n > cap {
        return Err(GraphError::CapExceeded { requested: n, cap });
    }
    let forests = rooted_forests(n);
    let mut out = Vec::new();
    for f_plus in permutations(n) {
        let mut f_minus = vec![0; n];
        for (v, &w) in f_plus.iter().enumerate() {
            f_minus[w] = v;
        }
        for forest in &forests {
            let v_d = (0..n).filter(|&v| forest[v].is_none()).map(|v| f_minus[v]).collect();
            out.push(ExtremalBlueprint { f_plus: f_plus.clone(), v_d, h_parent: forest.clone() });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_cycle;
    use crate::gallery;
    use crate::solver::{is_extremal, min_old_set};

    #[test]
    fn construct_example_blueprint_is_valid() {
        assert!(validate_blueprint(&gallery::construct_blueprint()).is_valid());
    }

    #[test]
    fn empty_vd_is_invalid() {
        let mut b = gallery::construct_blueprint();
        b.v_d = VertexSet::EMPTY;
        let r = validate_blueprint(&b);
        assert!(r.violations.contains(&BlueprintViolation::EmptyVd));
    }

    #[test]
    fn parent_two_cycle_is_invalid() {
        let mut b = gallery::construct_blueprint();
        b.h_parent[0] = Some(1);
        b.h_parent[1] = Some(0);
        let r = validate_blueprint(&b);
        assert!(r.violations.iter().any(|v| matches!(v, BlueprintViolation::ParentCycle { .. })));
        assert!(matches!(construct_from_blueprint(&b), Err(ConstructError::InvalidBlueprint(_))));
    }

    #[test]
    fn construct_example_round_trip() {
        let d = construct_from_blueprint(&gallery::construct_blueprint()).unwrap();
        assert_eq!(d, gallery::construct_example());
        assert_eq!(decompose_to_blueprint(&d).unwrap(), gallery::construct_blueprint());
    }

    #[test]
    fn order_one_blueprint() {
        let b = ExtremalBlueprint { f_plus: vec![0], v_d: VertexSet::singleton(0), h_parent: vec![None] };
        let d = construct_from_blueprint(&b).unwrap();
        assert_eq!(d, Digraph::from_arcs(1, [(0, 0)]).unwrap());
        assert_eq!(decompose_to_blueprint(&d).unwrap(), b);
    }

    #[test]
    fn isolated_roots_give_plain_cycle() {
        let b = ExtremalBlueprint { f_plus: vec![1, 2, 0], v_d: VertexSet::full(3), h_parent: vec![None; 3] };
        let d = construct_from_blueprint(&b).unwrap();
        assert_eq!(d, directed_cycle(3));
        assert_eq!(min_old_set(&d).gamma, Some(3));
    }

    #[test]
    fn non_extremal_cannot_be_decomposed() {
        let k3 = Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(decompose_to_blueprint(&k3), Err(ConstructError::NotExtremal));
        assert_eq!(decompose_to_blueprint(&Digraph::new(2)), Err(ConstructError::NotLocatable));
    }

    #[test]
    fn half_graphs() {
        let h1 = build_half_graph_digraph(1).unwrap();
        assert_eq!(h1, directed_cycle(2));
        let h2 = build_half_graph_digraph(2).unwrap();
        assert_eq!(h2.underlying_graph().edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(min_old_set(&h2).gamma, Some(4));
        assert_eq!(min_old_set(&build_half_graph_digraph(3).unwrap()).gamma, Some(6));
        assert!(build_half_graph_digraph(0).is_err());
    }

    #[test]
    fn transitive_closures() {
        let path = build_tc_rooted_tree(&[None, Some(0), Some(1)], true).unwrap();
        let expect = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2), (0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(path, expect);
        assert_eq!(min_old_set(&path).gamma, Some(3));

        let single = build_tc_rooted_tree(&[None], true).unwrap();
        assert_eq!(min_old_set(&single).gamma, Some(1));

        let star = build_tc_rooted_tree(&[None, Some(0), Some(0)], true).unwrap();
        assert_eq!(star.arc_count(), 5);
        assert_eq!(min_old_set(&star).gamma, Some(3));

        assert!(build_tc_rooted_tree(&[Some(1), Some(0)], true).is_err());
        assert!(build_tc_rooted_tree(&[None, None], true).is_err());
        assert!(build_tc_rooted_tree(&[None, Some(2), Some(1)], false).is_err());
    }

    #[test]
    fn transitive_closure_without_loops_then_closed() {
        let bare = build_tc_rooted_tree(&[None, Some(0), Some(1)], false).unwrap();
        assert!(bare.classify().oriented);
        assert!(is_extremal(&bare.reflexive_closure()));
    }

    #[test]
    fn permutation_and_forest_counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
        // labelled rooted forests on n vertices: (n+1)^(n-1)
        for (n, count) in [(1, 1), (2, 3), (3, 16), (4, 125)] {
            assert_eq!(rooted_forests(n).len(), count);
        }
    }

    #[test]
    fn single_blueprint_at_order_one() {
        let all = enumerate_blueprints(1).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].v_d, VertexSet::singleton(0));
        assert!(enumerate_blueprints(6).is_err());
    }

    /// Naive generator: every (permutation, V_d subset, parent map) triple,
    /// filtered by the validator.
    fn naive_blueprint_count(n: usize) -> usize {
        let mut count = 0;
        for f_plus in permutations(n) {
            for vd in 0..1u64 << n {
                let total = (n + 1).pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let h_parent: Vec<Option<usize>> = (0..n)
                        .map(|_| {
                            let digit = c % (n + 1);
                            c /= n + 1;
                            (digit < n).then_some(digit)
                        })
                        .collect();
                    let b = ExtremalBlueprint { f_plus: f_plus.clone(), v_d: VertexSet::from_bits(vd), h_parent };
                    if validate_blueprint(&b).is_valid() {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn blueprint_count_matches_naive_generator() {
        for n in 1..=3 {
            assert_eq!(enumerate_blueprints(n).unwrap().len(), naive_blueprint_count(n), "n = {n}");
        }
        assert_eq!(naive_blueprint_count(2), 6);
    }

    #[test]
    fn cycle_lengths_of_example() {
        assert_eq!(gallery::construct_blueprint().cycle_lengths(), vec![3, 1]);
    }
}
