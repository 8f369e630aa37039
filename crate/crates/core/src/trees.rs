//! The family `𝒯_n` of extremal digraphs whose underlying graph is a tree.
//!
//! `𝒯_1` and `𝒯_2` are given explicitly. From order 3 on every member arises
//! from a smaller member either by hanging a leaf with a forcing loop (one
//! new vertex, rules C¹ i/ii) or by hanging a pendant path whose end pair is
//! a forcing 2-cycle (two new vertices, rules C² i–iv). Catalogs hold one
//! canonical representative per isomorphism class.
//!
//! Every extension is re-checked by brute force before it enters a catalog.
//! Rule C² i with `A = {cb, bc}` applied to a vertex `c` with a forcing loop
//! (only possible when `D′` is the single loop vertex) yields a digraph in
//! which `V ∖ {a}` is an OLD set; such outputs land in
//! [`TreeCatalog::rejected`] instead of the catalog.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::canon::{automorphism_count, canonical_form, CanonicalForm};
use crate::digraph::Digraph;
use crate::enumerate::{tree_digraph, tree_digraph_count, DEFAULT_TREE_CAP};
use crate::error::GraphError;
use crate::forcing::{forced_report, forcing_decomposition, ForcedReport};
use crate::gallery;
use crate::solver::is_extremal;
use crate::vertex_set::VertexSet;

pub const DEFAULT_TREE_FAMILY_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C1Rule {
    /// `b` domination-forced: add `b → a` and a loop at `a`.
    I,
    /// `b` loopless, `f⁻(b)` domination-forced with out-degree 1: add `a → b`
    /// and a loop at `a`.
    II,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C2Rule {
    I,
    II,
    III,
    IV,
}

/// The extra arc set `A` of a C² extension (besides `a ↔ b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PendantArcs {
    /// `{bb, bc}`
    LoopBc,
    /// `{cb, bc}`
    CbBc,
    /// `{bc}`
    Bc,
    /// `{cb}`
    Cb,
}

impl PendantArcs {
    fn arcs(self, a: usize, b: usize, c: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(a, b), (b, a)];
        match self {
            PendantArcs::LoopBc => out.extend([(b, b), (b, c)]),
            PendantArcs::CbBc => out.extend([(c, b), (b, c)]),
            PendantArcs::Bc => out.push((b, c)),
            PendantArcs::Cb => out.push((c, b)),
        }
        out
    }

    fn label(self) -> &'static str {
        match self {
            PendantArcs::LoopBc => "{bb,bc}",
            PendantArcs::CbBc => "{cb,bc}",
            PendantArcs::Bc => "{bc}",
            PendantArcs::Cb => "{cb}",
        }
    }
}

/// How one extension was obtained from its parent `D′`. Vertex indices refer
/// to the parent's catalog representative; the new vertices are numbered
/// after the parent's (`a` first, then `b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    C1 { rule: C1Rule, b: usize },
    C2 { rule: C2Rule, arcs: PendantArcs, c: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Base,
    /// Found by the exhaustive scan in [`oracle_t_n`].
    Scan,
    /// `parent` indexes the catalog of order `n − 1` (C¹) or `n − 2` (C²).
    Extension { parent: usize, step: Step },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Base => write!(f, "base"),
            Provenance::Scan => write!(f, "scan"),
            Provenance::Extension { parent, step: Step::C1 { rule, b } } => {
                write!(f, "C1 rule {} on member {parent}, b={b}", roman_c1(*rule))
            }
            Provenance::Extension { parent, step: Step::C2 { rule, arcs, c } } => {
                write!(f, "C2 rule {} A={} on member {parent}, c={c}", roman_c2(*rule), arcs.label())
            }
        }
    }
}

fn roman_c1(r: C1Rule) -> &'static str {
    match r {
        C1Rule::I => "i",
        C1Rule::II => "ii",
    }
}

fn roman_c2(r: C2Rule) -> &'static str {
    match r {
        C2Rule::I => "i",
        C2Rule::II => "ii",
        C2Rule::III => "iii",
        C2Rule::IV => "iv",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMember {
    pub form: CanonicalForm,
    /// Canonical representative (`form.to_digraph()`).
    pub digraph: Digraph,
    /// Smallest provenance among all derivations.
    pub provenance: Provenance,
    pub derivations: usize,
    pub automorphisms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectedExtension {
    pub provenance: Provenance,
    pub digraph: Digraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeCatalog {
    pub order: usize,
    /// Sorted by canonical form.
    pub members: Vec<TreeMember>,
    /// Number of labelled digraphs on `0..n` isomorphic to some member.
    pub labelled_count: u64,
    /// Rule outputs that failed the brute-force check.
    pub rejected: Vec<RejectedExtension>,
}

impl TreeCatalog {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn forms(&self) -> Vec<CanonicalForm> {
        self.members.iter().map(|m| m.form).collect()
    }

    pub fn contains(&self, d: &Digraph) -> bool {
        canonical_form(d).is_ok_and(|f| self.members.binary_search_by(|m| m.form.cmp(&f)).is_ok())
    }

    fn from_candidates(order: usize, candidates: Vec<(Digraph, Provenance)>) -> Result<Self, GraphError> {
        let mut by_form: BTreeMap<CanonicalForm, (Provenance, usize)> = BTreeMap::new();
        for (d, p) in candidates {
            let form = canonical_form(&d)?;
            let entry = by_form.entry(form).or_insert((p, 0));
            entry.0 = entry.0.min(p);
            entry.1 += 1;
        }
        let factorial: u64 = (1..=order as u64).product();
        let members: Vec<TreeMember> = by_form
            .into_iter()
            .map(|(form, (provenance, derivations))| {
                let digraph = form.to_digraph();
                let automorphisms = automorphism_count(&digraph);
                TreeMember { form, digraph, provenance, derivations, automorphisms }
            })
            .collect();
        let labelled_count = members.iter().map(|m| factorial / m.automorphisms).sum();
        Ok(TreeCatalog { order, members, labelled_count, rejected: Vec::new() })
    }
}

/// Whether `d` is in `𝒯_n`: underlying tree, locatable and extremal.
pub fn is_tree_family_member(d: &Digraph) -> bool {
    d.underlying_graph().is_tree() && is_extremal(d)
}

/// `𝒯_1` and `𝒯_2`.
pub fn base_catalogs() -> (TreeCatalog, TreeCatalog) {
    let one = vec![(gallery::loop_vertex(), Provenance::Base)];
    let two = gallery::order_two_connected_locatable().into_iter().map(|d| (d, Provenance::Base)).collect();
    (
        TreeCatalog::from_candidates(1, one).expect("order 1 is within the canonical cap"),
        TreeCatalog::from_candidates(2, two).expect("order 2 is within the canonical cap"),
    )
}

struct Roles {
    report: ForcedReport,
    f_minus: Vec<usize>,
}

impl Roles {
    fn of(d: &Digraph) -> Option<Self> {
        let f_minus = forcing_decomposition(d).f_minus?;
        Some(Roles { report: forced_report(d), f_minus })
    }

    fn dom(&self, v: usize) -> bool {
        self.report.vertices[v].domination_forced()
    }

    fn loc(&self, v: usize) -> bool {
        self.report.vertices[v].location_forced()
    }
}

fn extend(d: &Digraph, new_vertices: usize, arcs: &[(usize, usize)]) -> Digraph {
    let mut out = d.with_extra_vertices(new_vertices);
    for &(u, v) in arcs {
        out.add_arc(u, v);
    }
    out
}

/// One-vertex extensions of an extremal tree digraph. Returns nothing if the
/// forcing arcs of `d` do not span it.
pub fn c1_extensions(d: &Digraph) -> Vec<(Step, Digraph)> {
    let Some(roles) = Roles::of(d) else { return Vec::new() };
    let a = d.order();
    let mut out = Vec::new();
    for b in d.vertices() {
        if roles.dom(b) {
            out.push((Step::C1 { rule: C1Rule::I, b }, extend(d, 1, &[(b, a), (a, a)])));
        }
        let fb = roles.f_minus[b];
        if !d.has_loop(b) && d.out_degree(fb) == 1 && roles.dom(fb) {
            out.push((Step::C1 { rule: C1Rule::II, b }, extend(d, 1, &[(a, b), (a, a)])));
        }
    }
    out
}

/// Two-vertex extensions of an extremal tree digraph, over every vertex `c`
/// and every admissible arc set.
pub fn c2_extensions(d: &Digraph) -> Vec<(Step, Digraph)> {
    let Some(roles) = Roles::of(d) else { return Vec::new() };
    let (a, b) = (d.order(), d.order() + 1);
    let mut out = Vec::new();
    for c in d.vertices() {
        let fc = roles.f_minus[c];
        let out_one = d.out_degree(fc) == 1;
        let mut push = |rule, choices: &[PendantArcs]| {
            for &arcs in choices {
                out.push((Step::C2 { rule, arcs, c }, extend(d, 2, &arcs.arcs(a, b, c))));
            }
        };
        use PendantArcs::*;
        if roles.dom(c) && roles.dom(fc) && out_one {
            push(C2Rule::I, &[LoopBc, CbBc, Bc, Cb]);
        }
        if roles.loc(c) && roles.dom(fc) && out_one {
            push(C2Rule::II, &[LoopBc, Bc]);
        }
        if roles.dom(c) && roles.dom(fc) && !out_one {
            push(C2Rule::III, &[Cb]);
        }
        if roles.dom(c) && roles.loc(fc) {
            push(C2Rule::IV, &[Cb]);
        }
    }
    out
}

fn next_level(order: usize, minus_one: &TreeCatalog, minus_two: &TreeCatalog) -> Result<TreeCatalog, GraphError> {
    let c1 = minus_one.members.par_iter().enumerate().flat_map_iter(|(parent, m)| {
        c1_extensions(&m.digraph)
            .into_iter()
            .map(move |(step, d)| (d, Provenance::Extension { parent, step }))
    });
    let c2 = minus_two.members.par_iter().enumerate().flat_map_iter(|(parent, m)| {
        c2_extensions(&m.digraph)
            .into_iter()
            .map(move |(step, d)| (d, Provenance::Extension { parent, step }))
    });
    let c1: Vec<_> = c1.collect();
    let c2: Vec<_> = c2.collect();
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for (d, p) in c1.into_iter().chain(c2) {
        if d.components().len() == 1 && is_tree_family_member(&d) {
            accepted.push((d, p));
        } else {
            rejected.push(RejectedExtension { provenance: p, digraph: d });
        }
    }
    let mut catalog = TreeCatalog::from_candidates(order, accepted)?;
    rejected.sort_by_key(|r| r.provenance);
    catalog.rejected = rejected;
    Ok(catalog)
}

/// Catalogs for orders `1..=n` built by the recursion (index `i` holds order `i + 1`).
pub fn enumerate_tree_family(n: usize) -> Result<Vec<TreeCatalog>, GraphError> {
    enumerate_tree_family_with_cap(n, DEFAULT_TREE_FAMILY_CAP)
}

pub fn enumerate_tree_family_with_cap(n: usize, cap: usize) -> Result<Vec<TreeCatalog>, GraphError> {
    if n > cap {
        return Err(GraphError::CapExceeded { requested: n, cap });
    }
    if n == 0 {
        return Err(GraphError::InvalidArgument("order must be at least 1".into()));
    }
    let (one, two) = base_catalogs();
    let mut levels = vec![one, two];
    for order in 3..=n {
        let next = next_level(order, &levels[order - 2], &levels[order - 3])?;
        levels.push(next);
    }
    levels.truncate(n);
    Ok(levels)
}

pub fn enumerate_t_n(n: usize) -> Result<TreeCatalog, GraphError> {
    Ok(enumerate_tree_family(n)?.pop().expect("n ≥ 1 levels"))
}

/// Independent reference: every labelled tree digraph of order `n`, filtered
/// by brute-force extremality and reduced up to isomorphism.
pub fn oracle_t_n(n: usize) -> Result<TreeCatalog, GraphError> {
    oracle_t_n_with_cap(n, DEFAULT_TREE_CAP)
}

pub fn oracle_t_n_with_cap(n: usize, cap: usize) -> Result<TreeCatalog, GraphError> {
    if n > cap {
        return Err(GraphError::CapExceeded { requested: n, cap });
    }
    let found: Vec<Digraph> = (0..tree_digraph_count(n))
        .into_par_iter()
        .map(|i| tree_digraph(n, i))
        .filter(is_extremal)
        .collect();
    let labelled = found.len() as u64;
    let catalog = TreeCatalog::from_candidates(n, found.into_iter().map(|d| (d, Provenance::Scan)).collect())?;
    debug_assert_eq!(catalog.labelled_count, labelled);
    Ok(TreeCatalog { labelled_count: labelled, ..catalog })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TreeLemmaViolation {
    /// In-degree above 2.
    InDegree { v: usize },
    /// Location-forced vertex whose out-degree is not 1.
    LocationForcedOutDegree { v: usize },
    /// Leaf with a forcing loop lying on a directed 2-cycle.
    LoopLeafOnTwoCycle { v: usize },
    /// Neither a leaf with a forcing loop nor a pendant path `c – b – a`
    /// with `a ↔ b` forcing (checked from order 3 on).
    NoReduction,
}

impl fmt::Display for TreeLemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeLemmaViolation::InDegree { v } => write!(f, "vertex {v} has in-degree above 2"),
            TreeLemmaViolation::LocationForcedOutDegree { v } => {
                write!(f, "location-forced vertex {v} has out-degree other than 1")
            }
            TreeLemmaViolation::LoopLeafOnTwoCycle { v } => {
                write!(f, "leaf {v} carries a forcing loop and lies on a 2-cycle")
            }
            TreeLemmaViolation::NoReduction => {
                write!(f, "no leaf with a forcing loop and no pendant path ending in a forcing 2-cycle")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeLemmaReport {
    pub violations: Vec<TreeLemmaViolation>,
}

impl TreeLemmaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Leaves of the underlying tree carrying a forcing loop.
pub fn forcing_loop_leaves(d: &Digraph) -> Vec<usize> {
    let Some(f_plus) = forcing_decomposition(d).f_plus else { return Vec::new() };
    let g = d.underlying_graph();
    d.vertices().filter(|&v| g.degree(v) == 1 && f_plus[v] == v).collect()
}

/// Pendant paths `(c, b, a)` of the underlying tree (`a` a leaf, `b` of
/// degree 2) where `a → b → a` are both forcing arcs.
pub fn forcing_pendant_paths(d: &Digraph) -> Vec<(usize, usize, usize)> {
    let Some(f_plus) = forcing_decomposition(d).f_plus else { return Vec::new() };
    let g = d.underlying_graph();
    let mut out = Vec::new();
    for a in d.vertices() {
        if g.degree(a) != 1 {
            continue;
        }
        let b = g.neighbours(a).min().expect("a leaf has a neighbour");
        if g.degree(b) != 2 || f_plus[a] != b || f_plus[b] != a {
            continue;
        }
        let c = (g.neighbours(b).without(a)).min().expect("b has degree 2");
        out.push((c, b, a));
    }
    out
}

pub fn check_tree_lemmas(d: &Digraph) -> TreeLemmaReport {
    let mut violations = Vec::new();
    let report = forced_report(d);
    let g = d.underlying_graph();
    for v in d.vertices() {
        if d.in_degree(v) > 2 {
            violations.push(TreeLemmaViolation::InDegree { v });
        }
    }
    for v in report.location_forced() {
        if d.out_degree(v) != 1 {
            violations.push(TreeLemmaViolation::LocationForcedOutDegree { v });
        }
    }
    let loop_leaves = forcing_loop_leaves(d);
    for &v in &loop_leaves {
        let u = g.neighbours(v).min().expect("a leaf has a neighbour");
        if d.has_arc(u, v) && d.has_arc(v, u) {
            violations.push(TreeLemmaViolation::LoopLeafOnTwoCycle { v });
        }
    }
    if d.order() >= 3 && loop_leaves.is_empty() && forcing_pendant_paths(d).is_empty() {
        violations.push(TreeLemmaViolation::NoReduction);
    }
    TreeLemmaReport { violations }
}

/// Failures of the deletion direction of the recursion on one member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeletionViolation {
    /// `D ∖ {a}` for a forcing-loop leaf `a` is not in `𝒯_{n−1}`.
    LeafDeletion { a: usize },
    /// `D ∖ {a, b}` for a forcing pendant path is not in `𝒯_{n−2}`.
    PendantDeletion { c: usize, b: usize, a: usize },
    /// A pendant clause fails; `clause` is the roman numeral.
    PendantClause { clause: &'static str, c: usize, b: usize, a: usize },
}

/// Deletes each forcing-loop leaf and each forcing pendant pair in turn and
/// checks that what remains is in the family, together with the structural
/// clauses that accompany the pendant case.
pub fn check_deletion_inverse(d: &Digraph) -> Vec<DeletionViolation> {
    let mut out = Vec::new();
    if d.order() < 3 {
        return out;
    }
    for a in forcing_loop_leaves(d) {
        if !is_tree_family_member(&d.remove_vertices(VertexSet::singleton(a))) {
            out.push(DeletionViolation::LeafDeletion { a });
        }
    }
    let Some(f_minus) = forcing_decomposition(d).f_minus else { return out };
    let report = forced_report(d);
    for (c, b, a) in forcing_pendant_paths(d) {
        let rest = d.remove_vertices([a, b].into_iter().collect());
        if !is_tree_family_member(&rest) {
            out.push(DeletionViolation::PendantDeletion { c, b, a });
        }
        let mut fail = |clause| out.push(DeletionViolation::PendantClause { clause, c, b, a });
        let fc = f_minus[c];
        let dom = |v: usize| report.vertices[v].domination_forced();
        let loc = |v: usize| report.vertices[v].location_forced();
        if d.has_loop(a) {
            fail("i");
        }
        if d.has_loop(b) {
            // f⁻(c) keeps its index in D′ because a and b are the removed vertices
            let fc_rest = fc - [a, b].iter().filter(|&&x| x < fc).count();
            let rest_dom = forced_report(&rest).vertices.get(fc_rest).is_some_and(|r| r.domination_forced());
            if d.has_arc(c, b) || !loc(fc) || !rest_dom {
                fail("ii");
            }
        } else {
            if dom(fc) && (d.in_neighbours(c) != VertexSet::singleton(fc) || fc == b || d.has_arc(b, c) || !d.has_arc(c, b)) {
                fail("iii");
            }
            if dom(c) && loc(fc) && d.out_degree(fc) != 1 {
                fail("iv");
            }
            if loc(c) && loc(fc) && (d.has_arc(c, b) || !d.has_arc(b, c)) {
                fail("v");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn iso(a: &Digraph, b: &Digraph) -> bool {
        are_isomorphic(a, b).unwrap()
    }

    #[test]
    fn base_counts() {
        let (one, two) = base_catalogs();
        assert_eq!(one.len(), 1);
        assert_eq!(two.len(), 3);
        assert_eq!(one.labelled_count, 1);
        assert_eq!(two.labelled_count, 5);
        assert!(one.members.iter().chain(&two.members).all(|m| is_tree_family_member(&m.digraph)));
    }

    #[test]
    fn c1_on_loop_vertex() {
        let ext = c1_extensions(&gallery::loop_vertex());
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].0, Step::C1 { rule: C1Rule::I, b: 0 });
        let expected = Digraph::from_arcs(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(iso(&ext[0].1, &expected));
    }

    #[test]
    fn c1_on_two_cycle_gives_pendant_loop_leaves() {
        let ext = c1_extensions(&Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap());
        let rule_one: Vec<_> = ext.iter().filter(|(s, _)| matches!(s, Step::C1 { rule: C1Rule::I, .. })).collect();
        assert_eq!(rule_one.len(), 2);
        for (_, d) in rule_one {
            assert!(is_tree_family_member(d));
        }
    }

    #[test]
    fn c1_rule_two_needs_loopless_b() {
        // every vertex of the loops-and-arc digraph carries a loop
        let d = Digraph::from_arcs(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(c1_extensions(&d).iter().all(|(s, _)| !matches!(s, Step::C1 { rule: C1Rule::II, .. })));
    }

    #[test]
    fn c2_on_loop_vertex() {
        let ext = c2_extensions(&gallery::loop_vertex());
        let steps: Vec<Step> = ext.iter().map(|e| e.0).collect();
        use PendantArcs::*;
        assert_eq!(
            steps,
            [LoopBc, CbBc, Bc, Cb].map(|arcs| Step::C2 { rule: C2Rule::I, arcs, c: 0 }).to_vec()
        );
        let by = |arcs| &ext.iter().find(|e| e.0 == Step::C2 { rule: C2Rule::I, arcs, c: 0 }).unwrap().1;
        assert!(iso(by(LoopBc), &gallery::pendant_with_loop_at_b()));
        assert!(iso(by(Bc), &gallery::pendant_without_loop_at_b()));
        // the one unsound choice: V ∖ {a} locates everything
        let bad = by(CbBc);
        assert!(!is_extremal(bad));
        assert!(crate::solver::is_old_set(bad, VertexSet::full(3).without(1)));
        assert!(is_extremal(by(Cb)));
    }

    #[test]
    fn order_three_catalog() {
        let cat = enumerate_t_n(3).unwrap();
        assert!(cat.contains(&gallery::pendant_with_loop_at_b()));
        assert!(cat.contains(&gallery::pendant_without_loop_at_b()));
        assert_eq!(cat.rejected.len(), 1);
        assert_eq!(
            cat.rejected[0].provenance,
            Provenance::Extension { parent: 0, step: Step::C2 { rule: C2Rule::I, arcs: PendantArcs::CbBc, c: 0 } }
        );
    }

    #[test]
    fn recursion_against_scan_small() {
        for (n, missing) in [(1, 0), (2, 0), (3, 1), (4, 1)] {
            let rec = enumerate_t_n(n).unwrap();
            let scan = oracle_t_n(n).unwrap();
            assert!(rec.members.iter().all(|m| scan.contains(&m.digraph)), "n={n}");
            let gap: Vec<_> = scan.members.iter().filter(|m| !rec.contains(&m.digraph)).collect();
            assert_eq!(gap.len(), missing, "n={n}");
            for m in gap {
                let v = check_tree_lemmas(&m.digraph).violations;
                assert!(matches!(v[0], TreeLemmaViolation::InDegree { .. }), "n={n}: {v:?}");
            }
        }
    }

    #[test]
    fn looped_pair_on_path_is_extremal() {
        let d = Digraph::from_arcs(3, [(0, 2), (2, 0), (1, 2), (2, 1), (1, 1), (2, 2)]).unwrap();
        assert!(is_tree_family_member(&d));
        assert_eq!(d.in_degree(2), 3);
        assert!(!enumerate_t_n(3).unwrap().contains(&d));
    }

    #[test]
    fn lemma_checks() {
        assert!(check_tree_lemmas(&gallery::pendant_with_loop_at_b()).holds());
        assert!(check_tree_lemmas(&Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap()).holds());
        let star = Digraph::from_arcs(4, [(1, 0), (2, 0), (3, 0)]).unwrap();
        assert!(check_tree_lemmas(&star).violations.contains(&TreeLemmaViolation::InDegree { v: 0 }));
    }

    #[test]
    fn pendant_detection() {
        assert_eq!(forcing_pendant_paths(&gallery::pendant_without_loop_at_b()), vec![(2, 1, 0)]);
        assert_eq!(forcing_loop_leaves(&gallery::pendant_without_loop_at_b()), vec![2]);
        assert!(check_deletion_inverse(&gallery::pendant_with_loop_at_b()).is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_t_n(9), Err(GraphError::CapExceeded { .. })));
        assert!(matches!(oracle_t_n(7), Err(GraphError::CapExceeded { .. })));
    }
}
