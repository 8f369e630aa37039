//! Exact canonical labelling for small digraphs with loops.
//!
//! Vertices are first split into cells by the invariant `(loop, d⁻, d⁺)`;
//! relabellings must keep cells in a fixed order, and among those the
//! lexicographically smallest adjacency code wins. The code lists the
//! adjacency matrix in "growing square" order (for each new vertex `k`: the
//! pairs `(k, j)`, `(j, k)` for `j < k`, then `(k, k)`), so a partial
//! labelling fixes a prefix of the code and branches that already exceed the
//! best prefix are cut.

use std::cmp::Ordering;

use crate::digraph::Digraph;
use crate::error::GraphError;
use crate::vertex_set::VertexSet;

pub const DEFAULT_CANON_CAP: usize = 10;
/// `n²` adjacency bits must fit in a `u128`.
pub const MAX_CANON_ORDER: usize = 11;

/// Isomorphism-class key. Equal keys ⟺ isomorphic digraphs (loops included).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// The canonical representative of the class.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.order();
        let mut d = Digraph::new(n);
        let mut pos = n * n;
        let mut bit = |code: u128| {
            pos -= 1;
            code >> pos & 1 == 1
        };
        for k in 0..n {
            for j in 0..k {
                if bit(self.code) {
                    d.add_arc(k, j);
                }
                if bit(self.code) {
                    d.add_arc(j, k);
                }
            }
            if bit(self.code) {
                d.add_arc(k, k);
            }
        }
        d
    }
}

pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_cap(d, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(d: &Digraph, cap: usize) -> Result<CanonicalForm, GraphError> {
    canonical_labelling(d, cap).map(|(form, _)| form)
}

/// Canonical form together with a labelling `perm` such that
/// `d.permute(&perm) == form.to_digraph()`.
pub fn canonical_labelling(d: &Digraph, cap: usize) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let cap = cap.min(MAX_CANON_ORDER);
    let n = d.order();
    if n > cap {
        return Err(GraphError::CapExceeded { requested: n, cap });
    }
    let cells = cell_plan(d);
    let mut search = Search {
        d,
        cells: &cells,
        total_bits: (n * n) as u32,
        best: None,
        assigned: Vec::with_capacity(n),
    };
    search.dfs(0, VertexSet::EMPTY, 0);
    let (code, order) = search.best.expect("at least one labelling exists");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { order: n as u8, code }, perm))
}

pub fn are_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool, GraphError> {
    Ok(a.order() == b.order() && canonical_form(a)? == canonical_form(b)?)
}

/// Number of automorphisms of `d`.
pub fn automorphism_count(d: &Digraph) -> u64 {
    fn extend(d: &Digraph, inv: &[u32], image: &mut Vec<usize>, used: VertexSet) -> u64 {
        let k = image.len();
        if k == d.order() {
            return 1;
        }
        let mut total = 0;
        for x in d.vertices() {
            if used.contains(x) || inv[x] != inv[k] {
                continue;
            }
            let consistent = d.has_loop(k) == d.has_loop(x)
                && (0..k).all(|j| {
                    d.has_arc(k, j) == d.has_arc(x, image[j]) && d.has_arc(j, k) == d.has_arc(image[j], x)
                });
            if consistent {
                image.push(x);
                total += extend(d, inv, image, used.with(x));
                image.pop();
            }
        }
        total
    }
    let inv: Vec<u32> = d.vertices().map(|v| invariant(d, v)).collect();
    extend(d, &inv, &mut Vec::with_capacity(d.order()), VertexSet::EMPTY)
}

fn invariant(d: &Digraph, v: usize) -> u32 {
    ((d.has_loop(v) as u32) << 16) | ((d.in_degree(v) as u32) << 8) | d.out_degree(v) as u32
}

/// For each canonical position, the set of vertices allowed there.
fn cell_plan(d: &Digraph) -> Vec<VertexSet> {
    let mut vs: Vec<usize> = d.vertices().collect();
    vs.sort_by_key(|&v| invariant(d, v));
    vs.iter()
        .map(|&v| {
            let key = invariant(d, v);
            d.vertices().filter(|&u| invariant(d, u) == key).collect()
        })
        .collect()
}

struct Search<'a> {
    d: &'a Digraph,
    cells: &'a [VertexSet],
    total_bits: u32,
    best: Option<(u128, Vec<usize>)>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, k: usize, used: VertexSet, code: u128) {
        let n = self.cells.len();
        if k == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.assigned.clone()));
            }
            return;
        }
        for x in self.cells[k] - used {
            let mut next = code;
            for j in 0..k {
                let y = self.assigned[j];
                next = next << 1 | self.d.has_arc(x, y) as u128;
                next = next << 1 | self.d.has_arc(y, x) as u128;
            }
            next = next << 1 | self.d.has_loop(x) as u128;
            if let Some((best, _)) = &self.best {
                let prefix_bits = ((k + 1) * (k + 1)) as u32;
                let best_prefix = best >> (self.total_bits - prefix_bits);
                if next.cmp(&best_prefix) == Ordering::Greater {
                    continue;
                }
            }
            self.assigned.push(x);
            self.dfs(k + 1, used.with(x), next);
            self.assigned.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_cycle;
    use crate::gallery;
    use proptest::prelude::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn cycle_and_reversal_share_a_key() {
        let c = directed_cycle(3);
        let rev = Digraph::from_arcs(3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        // explicit isomorphism by scanning all 6 permutations
        let witness = all_permutations(3).into_iter().any(|p| c.permute(&p) == rev);
        assert!(witness);
        assert_eq!(canonical_form(&c).unwrap(), canonical_form(&rev).unwrap());
    }

    #[test]
    fn cycle_and_path_differ() {
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_ne!(canonical_form(&directed_cycle(3)).unwrap(), canonical_form(&path).unwrap());
    }

    #[test]
    fn representative_round_trips() {
        let d = gallery::construct_example();
        let (form, perm) = canonical_labelling(&d, 10).unwrap();
        assert_eq!(d.permute(&perm), form.to_digraph());
        assert_eq!(canonical_form(&form.to_digraph()).unwrap(), form);
    }

    #[test]
    fn cap_is_enforced() {
        let d = Digraph::new(11);
        assert_eq!(
            canonical_form(&d),
            Err(GraphError::CapExceeded { requested: 11, cap: 10 })
        );
        assert!(canonical_form_with_cap(&d, 11).is_ok());
    }

    #[test]
    fn key_matches_brute_force_minimum_on_order_three() {
        // all 512 labelled order-3 digraphs: classes by canonical form must
        // coincide with classes by explicit permutation search
        let perms = all_permutations(3);
        let all: Vec<Digraph> = (0..512u64).map(|i| crate::enumerate::labelled_digraph(3, i)).collect();
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(5) {
                let iso = perms.iter().any(|p| &a.permute(p) == b);
                assert_eq!(iso, canonical_form(a).unwrap() == canonical_form(b).unwrap(), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn automorphisms() {
        assert_eq!(automorphism_count(&directed_cycle(4)), 4);
        assert_eq!(automorphism_count(&Digraph::new(3)), 6);
        assert_eq!(automorphism_count(&gallery::construct_example()), 1);
    }

    fn arb_digraph() -> impl Strategy<Value = Digraph> {
        (1usize..=7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                let arcs = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n));
                Digraph::from_arcs(n, arcs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(d in arb_digraph(), seed in any::<u64>()) {
            let n = d.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(canonical_form(&d).unwrap(), canonical_form(&d.permute(&perm)).unwrap());
        }
    }
}
