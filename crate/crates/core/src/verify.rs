//! Exhaustive checks of the structural claims on small populations.
//!
//! Each claim scans a fixed population (all labelled digraphs, all labelled
//! undirected graphs, or the tree family) up to an order cap, and collects
//! counterexamples. Populations are split into index ranges across a rayon
//! pool; counterexamples are sorted before they are reported, so the text
//! report is identical for any worker count.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::construct::{
    build_half_graph_digraph, build_tc_rooted_tree, construct_from_blueprint, decompose_to_blueprint,
    enumerate_blueprints_with_cap, rooted_forests,
};
use crate::digraph::Digraph;
use crate::enumerate::{labelled_digraph, labelled_digraph_count, undirected_graph, undirected_graph_count};
use crate::error::GraphError;
use crate::forcing::{build_h_digraph, forced_report, forcing_arcs, forcing_decomposition, strip_non_forcing_arcs};
use crate::io::to_compact_edge_list;
use crate::solver::{is_extremal, is_locatable, is_old_set, min_old_set};
use crate::trees::{check_deletion_inverse, check_tree_lemmas, enumerate_tree_family_with_cap, oracle_t_n_with_cap};
use crate::vertex_set::VertexSet;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "OLD_DIGRAPHS_WORKERS";

/// Largest order accepted for full labelled-digraph scans (2^(n²) instances).
pub const MAX_DIGRAPH_SCAN: usize = 5;
pub const MAX_UNDIRECTED_SCAN: usize = 7;
pub const MAX_TREE_SCAN: usize = 6;
pub const MAX_HALF_K: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    Main,
    NoDouble,
    Bondy,
    AllForced,
    ReflexSym,
    ReflexOrient,
    Half,
    Construct,
    Trees,
    SourceSink,
    Corloc,
    HForest,
    Strip,
    TreeLemmas,
}

impl Claim {
    pub const ALL: [Claim; 14] = [
        Claim::Main,
        Claim::NoDouble,
        Claim::Bondy,
        Claim::AllForced,
        Claim::ReflexSym,
        Claim::ReflexOrient,
        Claim::Half,
        Claim::Construct,
        Claim::Trees,
        Claim::SourceSink,
        Claim::Corloc,
        Claim::HForest,
        Claim::Strip,
        Claim::TreeLemmas,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Main => "MAIN",
            Claim::NoDouble => "NO-DOUBLE",
            Claim::Bondy => "BONDY",
            Claim::AllForced => "ALL-FORCED",
            Claim::ReflexSym => "REFLEX-SYM",
            Claim::ReflexOrient => "REFLEX-ORIENT",
            Claim::Half => "HALF",
            Claim::Construct => "CONSTRUCT",
            Claim::Trees => "TREES",
            Claim::SourceSink => "SOURCE-SINK",
            Claim::Corloc => "CORLOC",
            Claim::HForest => "H-FOREST",
            Claim::Strip => "STRIP",
            Claim::TreeLemmas => "TREE-LEMMAS",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Claim::ReflexSym | Claim::Trees | Claim::TreeLemmas => 5,
            Claim::Half => 6,
            _ => 4,
        }
    }

    fn hard_max_n(self) -> usize {
        match self {
            Claim::ReflexSym | Claim::Half => MAX_UNDIRECTED_SCAN,
            Claim::Trees | Claim::TreeLemmas => MAX_TREE_SCAN,
            _ => MAX_DIGRAPH_SCAN,
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::Main => "locatable D: γ_OL(D) = n iff the forcing arcs span D as disjoint directed cycles",
            Claim::NoDouble => "γ_OL(D) = n: no vertex is double-forced",
            Claim::Bondy => "locatable D: at most n − 1 location-forced vertices",
            Claim::AllForced => "locatable D: if v is not forced then V ∖ {v} is an OLD set",
            Claim::ReflexSym => "connected reflexive symmetric locatable D: γ_OL(D) = n iff n = 1",
            Claim::ReflexOrient => {
                "connected reflexive locatable D without 2-cycles: γ_OL(D) = n iff D minus loops is the transitive closure of a rooted tree"
            }
            Claim::Half => "connected symmetric loop-free locatable D: γ_OL(D) = n iff the underlying graph is a half-graph",
            Claim::Construct => "blueprint constructions are exactly the extremal digraphs",
            Claim::Trees => "the recursive tree family equals the extremal tree digraphs",
            Claim::SourceSink => "D with a source or a sink: γ_OL(D) ≤ n − 1",
            Claim::Corloc => "every vertex forced implies locatable",
            Claim::HForest => "γ_OL(D) = n: 𝓗(D) is a forest of rooted trees with the stated root/non-root roles",
            Claim::Strip => "γ_OL(D) = n: deleting the non-forcing out-arcs of any x keeps γ_OL = n",
            Claim::TreeLemmas => "structural lemmas and rule soundness for extremal tree digraphs",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let upper = s.to_ascii_uppercase();
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == upper)
            .ok_or_else(|| GraphError::InvalidArgument(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub order: usize,
    /// Compact edge list `n: u v, …`.
    pub digraph: String,
    pub reason: String,
}

impl Counterexample {
    fn new(d: &Digraph, reason: impl Into<String>) -> Self {
        Counterexample { order: d.order(), digraph: to_compact_edge_list(d), reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: Claim,
    pub population: String,
    pub max_n: usize,
    /// Instances scanned per order.
    pub checked: BTreeMap<usize, u64>,
    /// Instances meeting the claim's hypothesis per order.
    pub applicable: BTreeMap<usize, u64>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn instances_checked(&self) -> u64 {
        self.checked.values().sum()
    }

    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Line-oriented text. Everything except the `elapsed-ms` line depends
    /// only on the claim and the cap.
    pub fn to_text(&self, with_elapsed: bool) -> String {
        let per_order = |m: &BTreeMap<usize, u64>| {
            m.iter().map(|(n, c)| format!("n={n}:{c}")).collect::<Vec<_>>().join(" ")
        };
        let mut out = String::new();
        let _ = writeln!(out, "claim: {}", self.claim);
        let _ = writeln!(out, "statement: {}", self.claim.statement());
        let _ = writeln!(out, "population: {}", self.population);
        let _ = writeln!(out, "max-n: {}", self.max_n);
        let _ = writeln!(out, "checked: {} ({})", self.instances_checked(), per_order(&self.checked));
        let _ = writeln!(out, "applicable: {} ({})", self.applicable.values().sum::<u64>(), per_order(&self.applicable));
        let _ = writeln!(out, "counterexamples: {}", self.counterexamples.len());
        for c in &self.counterexamples {
            let _ = writeln!(out, "counterexample: {} | {}", c.reason, c.digraph);
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(out, "status: {}", if self.verified() { "VERIFIED" } else { "COUNTEREXAMPLE" });
        if with_elapsed {
            let _ = writeln!(out, "elapsed-ms: {}", self.elapsed.as_millis());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: None, workers: default_workers() }
    }
}

/// `OLD_DIGRAPHS_WORKERS` if set to a positive integer, else the available
/// parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w: &usize| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

pub fn verify(claim: Claim, opts: VerifyOptions) -> Result<VerificationReport, GraphError> {
    let max_n = opts.max_n.unwrap_or(claim.default_max_n());
    if max_n > claim.hard_max_n() {
        return Err(GraphError::CapExceeded { requested: max_n, cap: claim.hard_max_n() });
    }
    if max_n == 0 {
        return Err(GraphError::InvalidArgument("max-n must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| GraphError::InvalidArgument(format!("worker pool: {e}")))?;
    let start = Instant::now();
    let mut report = pool.install(|| run(claim, max_n))?;
    report.counterexamples.sort();
    report.counterexamples.dedup();
    report.elapsed = start.elapsed();
    Ok(report)
}

fn empty_report(claim: Claim, max_n: usize, population: String) -> VerificationReport {
    VerificationReport {
        claim,
        population,
        max_n,
        checked: BTreeMap::new(),
        applicable: BTreeMap::new(),
        counterexamples: Vec::new(),
        notes: Vec::new(),
        elapsed: Duration::ZERO,
    }
}

/// Outcome of one instance: `None` if the hypothesis does not apply.
type Check = fn(&Digraph) -> Option<Vec<String>>;

fn scan_digraphs(claim: Claim, max_n: usize, check: Check) -> VerificationReport {
    let mut report = empty_report(claim, max_n, format!("all labelled digraphs with loops, n = 1..{max_n}"));
    for n in 1..=max_n {
        let total = labelled_digraph_count(n);
        let (applicable, bad) = scan_range(total, |i| labelled_digraph(n, i), check);
        report.checked.insert(n, total);
        report.applicable.insert(n, applicable);
        report.counterexamples.extend(bad);
    }
    report
}

fn scan_range(total: u64, make: impl Fn(u64) -> Digraph + Sync, check: Check) -> (u64, Vec<Counterexample>) {
    (0..total)
        .into_par_iter()
        .fold(
            || (0u64, Vec::new()),
            |(mut applicable, mut bad), i| {
                let d = make(i);
                if let Some(reasons) = check(&d) {
                    applicable += 1;
                    bad.extend(reasons.into_iter().map(|r| Counterexample::new(&d, r)));
                }
                (applicable, bad)
            },
        )
        .reduce(
            || (0, Vec::new()),
            |(a, mut x), (b, y)| {
                x.extend(y);
                (a + b, x)
            },
        )
}

fn run(claim: Claim, max_n: usize) -> Result<VerificationReport, GraphError> {
    Ok(match claim {
        Claim::Main => scan_digraphs(claim, max_n, check_main),
        Claim::NoDouble => scan_digraphs(claim, max_n, check_no_double),
        Claim::Bondy => scan_digraphs(claim, max_n, check_bondy),
        Claim::AllForced => scan_digraphs(claim, max_n, check_all_forced),
        Claim::SourceSink => scan_digraphs(claim, max_n, check_source_sink),
        Claim::Corloc => scan_digraphs(claim, max_n, check_corloc),
        Claim::HForest => scan_digraphs(claim, max_n, check_h_forest),
        Claim::Strip => scan_digraphs(claim, max_n, check_strip),
        Claim::ReflexOrient => verify_reflex_orient(max_n),
        Claim::ReflexSym => verify_reflex_sym(max_n),
        Claim::Half => verify_half(max_n)?,
        Claim::Construct => verify_construct(max_n)?,
        Claim::Trees => verify_trees(max_n)?,
        Claim::TreeLemmas => verify_tree_lemmas(max_n)?,
    })
}

fn gamma_is_n(d: &Digraph) -> bool {
    min_old_set(d).gamma == Some(d.order())
}

fn check_main(d: &Digraph) -> Option<Vec<String>> {
    if !is_locatable(d) {
        return None;
    }
    let extremal = gamma_is_n(d);
    let spans = forcing_decomposition(d).spans_cycles();
    let mut out = Vec::new();
    if extremal && !spans {
        out.push("γ_OL = n but forcing arcs do not span disjoint cycles".to_string());
    }
    if !extremal && spans {
        out.push("forcing arcs span disjoint cycles but γ_OL < n".to_string());
    }
    if extremal {
        let tails: VertexSet = forcing_arcs(d).iter().map(|a| a.0).collect();
        if tails != forced_report(d).forced() {
            out.push("tails of forcing arcs differ from the forced vertices".to_string());
        }
    }
    Some(out)
}

fn check_no_double(d: &Digraph) -> Option<Vec<String>> {
    if !is_locatable(d) || !is_extremal(d) {
        return None;
    }
    let double = forced_report(d).double_forced();
    Some(if double.is_empty() { vec![] } else { vec![format!("double-forced vertices {double}")] })
}

fn check_bondy(d: &Digraph) -> Option<Vec<String>> {
    if !is_locatable(d) {
        return None;
    }
    let loc = forced_report(d).location_forced().len();
    Some(if loc < d.order() { vec![] } else { vec![format!("{loc} location-forced vertices")] })
}

fn check_all_forced(d: &Digraph) -> Option<Vec<String>> {
    if !is_locatable(d) {
        return None;
    }
    let forced = forced_report(d).forced();
    let all = d.vertex_set();
    Some(
        (all - forced)
            .iter()
            .filter(|&v| !is_old_set(d, all.without(v)))
            .map(|v| format!("vertex {v} is not forced but V ∖ {{{v}}} is not an OLD set"))
            .collect(),
    )
}

fn check_source_sink(d: &Digraph) -> Option<Vec<String>> {
    let c = d.classify();
    if !c.source_exists && !c.sink_exists {
        return None;
    }
    let mut out = Vec::new();
    if forcing_decomposition(d).spans_cycles() {
        out.push("forcing arcs span disjoint cycles".to_string());
    }
    if is_locatable(d) && gamma_is_n(d) {
        out.push("γ_OL = n".to_string());
    }
    Some(out)
}

fn check_corloc(d: &Digraph) -> Option<Vec<String>> {
    if !forced_report(d).all_forced() {
        return None;
    }
    Some(if is_locatable(d) { vec![] } else { vec!["every vertex forced but not locatable".to_string()] })
}

fn check_h_forest(d: &Digraph) -> Option<Vec<String>> {
    if !is_locatable(d) || !is_extremal(d) {
        return None;
    }
    let mut out = Vec::new();
    let h = build_h_digraph(d);
    if !h.is_forest() {
        out.push("𝓗(D) is not a forest of rooted trees".to_string());
        return Some(out);
    }
    let report = forced_report(d);
    let Some(f_minus) = forcing_decomposition(d).f_minus else {
        out.push("forcing arcs do not span disjoint cycles".to_string());
        return Some(out);
    };
    let mut root_images = VertexSet::EMPTY;
    for v in d.vertices() {
        let fv = f_minus[v];
        if h.roots.contains(v) {
            root_images.insert(fv);
            if !report.vertices[fv].domination_forced() || d.in_degree(v) != 1 {
                out.push(format!("root {v}: f⁻ = {fv} is not domination-forced or d⁻ ≠ 1"));
            }
        } else if !report.vertices[fv].location_forced() {
            out.push(format!("non-root {v}: f⁻ = {fv} is not location-forced"));
        }
    }
    if root_images != report.domination_forced() {
        out.push("f⁻ of the roots differs from the domination-forced set".to_string());
    }
    Some(out)
}

fn check_strip(d: &Digraph) -> Option<Vec<String>> {
    if !is_locatable(d) || !is_extremal(d) {
        return None;
    }
    let report = forced_report(d);
    let arcs = forcing_arcs(d);
    let mut out = Vec::new();
    for x in d.vertices() {
        let s = strip_non_forcing_arcs(d, x);
        if !is_locatable(&s) || !gamma_is_n(&s) {
            out.push(format!("stripping at {x} loses γ_OL = n"));
        } else if !report.vertices[x].location_forced() && forcing_arcs(&s) != arcs {
            out.push(format!("stripping at {x} (not location-forced) changes the forcing arcs"));
        }
    }
    Some(out)
}

fn tc_rooted_trees(n: usize) -> HashSet<Digraph> {
    rooted_forests(n)
        .into_iter()
        .filter(|p| p.iter().filter(|x| x.is_none()).count() == 1)
        .map(|p| build_tc_rooted_tree(&p, false).expect("one root and acyclic"))
        .collect()
}

fn verify_reflex_orient(max_n: usize) -> VerificationReport {
    let mut report = empty_report(
        Claim::ReflexOrient,
        max_n,
        format!("all labelled digraphs with loops, n = 1..{max_n}; hypothesis: connected, reflexive, no 2-cycle, locatable"),
    );
    for n in 1..=max_n {
        let closures = tc_rooted_trees(n);
        let total = labelled_digraph_count(n);
        let (applicable, bad) = (0..total)
            .into_par_iter()
            .filter_map(|i| {
                let d = labelled_digraph(n, i);
                let c = d.classify();
                if !(c.reflexive && !c.has_two_cycle && c.connected_underlying && is_locatable(&d)) {
                    return None;
                }
                let extremal = gamma_is_n(&d);
                let closure = closures.contains(&d.without_loops());
                Some(match (extremal, closure) {
                    (true, false) => vec![Counterexample::new(&d, "γ_OL = n but not a loop-closed rooted-tree closure")],
                    (false, true) => vec![Counterexample::new(&d, "loop-closed rooted-tree closure with γ_OL < n")],
                    _ => vec![],
                })
            })
            .fold(|| (0u64, Vec::new()), |(a, mut x), y| {
                x.extend(y);
                (a + 1, x)
            })
            .reduce(|| (0, Vec::new()), |(a, mut x), (b, y)| {
                x.extend(y);
                (a + b, x)
            });
        report.checked.insert(n, total);
        report.applicable.insert(n, applicable);
        report.counterexamples.extend(bad);
        report.notes.push(format!("n={n}: {} labelled rooted-tree closures", closures.len()));
    }
    report
}

fn scan_graphs(
    claim: Claim,
    max_n: usize,
    min_n: usize,
    population: String,
    check: impl Fn(usize, &Digraph) -> Option<Vec<String>> + Sync,
) -> VerificationReport {
    let mut report = empty_report(claim, max_n, population);
    for n in min_n..=max_n {
        let total = undirected_graph_count(n);
        let (applicable, bad) = (0..total)
            .into_par_iter()
            .filter_map(|i| {
                let g = undirected_graph(n, i);
                if !g.is_connected() {
                    return None;
                }
                let d = g.to_symmetric_digraph();
                check(n, &d).map(|reasons| reasons.into_iter().map(|r| Counterexample::new(&d, r)).collect::<Vec<_>>())
            })
            .fold(|| (0u64, Vec::new()), |(a, mut x), y| {
                x.extend(y);
                (a + 1, x)
            })
            .reduce(|| (0, Vec::new()), |(a, mut x), (b, y)| {
                x.extend(y);
                (a + b, x)
            });
        report.checked.insert(n, total);
        report.applicable.insert(n, applicable);
        report.counterexamples.extend(bad);
    }
    report
}

fn verify_reflex_sym(max_n: usize) -> VerificationReport {
    scan_graphs(
        Claim::ReflexSym,
        max_n,
        1,
        format!("all labelled graphs, n = 1..{max_n}, with a loop added at every vertex; hypothesis: connected, locatable"),
        |n, sym| {
            let d = sym.reflexive_closure();
            if !is_locatable(&d) {
                return None;
            }
            let gamma = min_old_set(&d).gamma.expect("locatable");
            Some(match (gamma == n, n == 1) {
                (true, false) => vec![format!("reflexive closure has γ_OL = n = {n}")],
                (false, true) => vec!["single looped vertex with γ_OL < 1".to_string()],
                _ => vec![],
            })
        },
    )
}

fn verify_half(max_n: usize) -> Result<VerificationReport, GraphError> {
    let mut half_forms = BTreeSet::new();
    let mut notes = Vec::new();
    for k in 1..=MAX_HALF_K.min(max_n / 2) {
        let h = build_half_graph_digraph(k)?;
        let gamma = min_old_set(&h).gamma;
        notes.push(format!("H_{k}: γ_OL = {}", gamma.map_or("undefined".into(), |g| g.to_string())));
        half_forms.insert(canonical_form(&h)?);
    }
    let forms = half_forms.clone();
    let mut report = scan_graphs(
        Claim::Half,
        max_n,
        1,
        format!("all labelled graphs, n = 1..{max_n}, as symmetric loop-free digraphs; hypothesis: connected, locatable"),
        move |_, d| {
            if !is_locatable(d) {
                return None;
            }
            let extremal = gamma_is_n(d);
            let half = forms.contains(&canonical_form(d).expect("order within the canonical cap"));
            Some(match (extremal, half) {
                (true, false) => vec!["γ_OL = n but not a half-graph".to_string()],
                (false, true) => vec!["half-graph with γ_OL < n".to_string()],
                _ => vec![],
            })
        },
    );
    for k in 1..=MAX_HALF_K.min(max_n / 2) {
        let h = build_half_graph_digraph(k)?;
        if min_old_set(&h).gamma != Some(2 * k) {
            report.counterexamples.push(Counterexample::new(&h, format!("γ_OL(H_{k}) ≠ {}", 2 * k)));
        }
    }
    report.notes = notes;
    Ok(report)
}

fn verify_construct(max_n: usize) -> Result<VerificationReport, GraphError> {
    let mut report = empty_report(
        Claim::Construct,
        max_n,
        format!("all blueprints and all labelled digraphs with loops, n = 1..{max_n}"),
    );
    for n in 1..=max_n {
        let blueprints = enumerate_blueprints_with_cap(n, max_n)?;
        let built: Vec<(Digraph, Vec<String>)> = blueprints
            .par_iter()
            .map(|b| match construct_from_blueprint(b) {
                Err(e) => (Digraph::new(n), vec![format!("blueprint rejected: {e}")]),
                Ok(d) => {
                    let mut bad = Vec::new();
                    match decompose_to_blueprint(&d) {
                        Err(e) => bad.push(format!("construction does not decompose: {e}")),
                        Ok(back) => {
                            if construct_from_blueprint(&back).ok().as_ref() != Some(&d) {
                                bad.push("decomposition does not rebuild the same arc set".to_string());
                            }
                        }
                    }
                    (d, bad)
                }
            })
            .collect();
        let total = labelled_digraph_count(n);
        let extremal: HashSet<Digraph> = (0..total)
            .into_par_iter()
            .map(|i| labelled_digraph(n, i))
            .filter(|d| is_locatable(d) && gamma_is_n(d))
            .collect();
        let mut constructed = HashSet::new();
        for (d, bad) in built {
            for reason in bad {
                report.counterexamples.push(Counterexample::new(&d, reason));
            }
            constructed.insert(d);
        }
        let forms = |set: &HashSet<Digraph>| -> Result<BTreeMap<CanonicalForm, Digraph>, GraphError> {
            set.iter().map(|d| Ok((canonical_form(d)?, d.clone()))).collect()
        };
        let (cf, ef) = (forms(&constructed)?, forms(&extremal)?);
        for (f, d) in &cf {
            if !ef.contains_key(f) {
                report.counterexamples.push(Counterexample::new(d, "constructed but γ_OL < n"));
            }
        }
        for (f, d) in &ef {
            if !cf.contains_key(f) {
                report.counterexamples.push(Counterexample::new(d, "γ_OL = n but not constructible"));
            }
        }
        report.checked.insert(n, blueprints.len() as u64 + total);
        report.applicable.insert(n, extremal.len() as u64);
        report.notes.push(format!(
            "n={n}: {} blueprints, {} distinct constructions, {} labelled extremal digraphs, {} classes",
            blueprints.len(),
            constructed.len(),
            extremal.len(),
            ef.len()
        ));
    }
    Ok(report)
}

fn verify_trees(max_n: usize) -> Result<VerificationReport, GraphError> {
    let mut report = empty_report(
        Claim::Trees,
        max_n,
        format!("all labelled digraphs whose underlying graph is a tree, n = 1..{max_n}, against the recursive family"),
    );
    let family = enumerate_tree_family_with_cap(max_n, max_n)?;
    for (i, rec) in family.iter().enumerate() {
        let n = i + 1;
        let scan = oracle_t_n_with_cap(n, max_n)?;
        for m in &scan.members {
            if !rec.contains(&m.digraph) {
                report.counterexamples.push(Counterexample::new(&m.digraph, "extremal tree digraph missing from the recursion"));
            }
        }
        for m in &rec.members {
            if !scan.contains(&m.digraph) {
                report.counterexamples.push(Counterexample::new(&m.digraph, "recursion member not found by the scan"));
            }
        }
        report.checked.insert(n, crate::enumerate::tree_digraph_count(n));
        report.applicable.insert(n, scan.labelled_count);
        report.notes.push(format!(
            "n={n}: recursion {} classes ({} labelled), scan {} classes ({} labelled)",
            rec.len(),
            rec.labelled_count,
            scan.len(),
            scan.labelled_count
        ));
    }
    Ok(report)
}

fn verify_tree_lemmas(max_n: usize) -> Result<VerificationReport, GraphError> {
    let mut report = empty_report(
        Claim::TreeLemmas,
        max_n,
        format!("extremal tree digraphs up to isomorphism and all rule outputs, n = 1..{max_n}"),
    );
    let family = enumerate_tree_family_with_cap(max_n, max_n)?;
    for (i, rec) in family.iter().enumerate() {
        let n = i + 1;
        let scan = oracle_t_n_with_cap(n, max_n)?;
        for m in &scan.members {
            for v in check_tree_lemmas(&m.digraph).violations {
                report.counterexamples.push(Counterexample::new(&m.digraph, v.to_string()));
            }
            for v in check_deletion_inverse(&m.digraph) {
                report.counterexamples.push(Counterexample::new(&m.digraph, format!("{v:?}")));
            }
        }
        for r in &rec.rejected {
            report
                .counterexamples
                .push(Counterexample::new(&r.digraph, format!("rule output is not extremal ({})", r.provenance)));
        }
        report.checked.insert(n, scan.len() as u64 + rec.rejected.len() as u64);
        report.applicable.insert(n, scan.len() as u64);
    }
    Ok(report)
}
