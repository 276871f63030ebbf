//! Induced subtractive edge labels and everything built on them: graceful
//! search, prescribed-sequence search, automorphism groups, enumeration of
//! gracefully labeled conjugates, the path-deletion statistic `rho`, and the
//! min/max distinct-label statistics.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::endograph::EndoFunction;
use crate::monoid::{for_each_permutation, Permutation};
use crate::{Error, Result};

/// Non-decreasing multiset of the `n` induced subtractive edge labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeLabelSequence {
    labels: Vec<u8>,
}

impl EdgeLabelSequence {
    /// Sorts and validates a label multiset (each label below `n = len`).
    pub fn new(mut labels: Vec<u8>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = labels.len();
        for &l in &labels {
            if usize::from(l) >= n {
                return Err(Error::ValueOutOfRange {
                    value: usize::from(l),
                    n,
                });
            }
        }
        labels.sort_unstable();
        Ok(Self { labels })
    }

    /// The graceful sequence `(0, 1, ..., n-1)`.
    pub fn graceful(n: usize) -> Self {
        Self {
            labels: (0..n).map(|l| l as u8).collect(),
        }
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_graceful(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| usize::from(l) == i)
    }
}

/// Sorted multiset `{ |s(f(i)) - s(i)| : i in Z_n }` of the relabeled graph.
pub fn edge_labels(f: &EndoFunction, sigma: &Permutation) -> Result<EdgeLabelSequence> {
    if f.n() != sigma.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: sigma.n(),
        });
    }
    let labels = (0..f.n())
        .map(|i| (sigma.apply(f.apply(i)) as i64 - sigma.apply(i) as i64).unsigned_abs() as u8)
        .collect();
    EdgeLabelSequence::new(labels)
}

/// True iff relabeling by `sigma` induces the labels `(0, 1, ..., n-1)`.
pub fn is_graceful(f: &EndoFunction, sigma: &Permutation) -> Result<bool> {
    Ok(edge_labels(f, sigma)?.is_graceful())
}

/// Distinct-label count of `f` relabeled by the image sequence `image`,
/// without materializing the conjugate.
fn distinct_labels(f: &EndoFunction, image: &[u8]) -> u32 {
    let mut mask: u32 = 0;
    for i in 0..f.n() {
        let l = (i32::from(image[f.apply(i)]) - i32::from(image[i])).unsigned_abs();
        mask |= 1 << l;
    }
    mask.count_ones()
}

/// Search configuration. The default run stops at the first witness found in
/// canonical order (normalized against the complement symmetry); exhaustive
/// runs visit the entire space and report the lexicographically least witness
/// together with the number of distinct witnesses.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    pub exhaustive: bool,
}

/// Result of a labeling search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub found: bool,
    pub witness: Option<Permutation>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Number of distinct witnesses; only populated by exhaustive runs.
    pub witness_count: Option<u64>,
}

/// Witness persistence record (one JSON line per instance).
#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    pub f: EndoFunction,
    pub witness: Option<Permutation>,
    pub labels: Option<EdgeLabelSequence>,
    pub nodes_explored: u64,
}

/// Searches for a permutation `s` making `f` gracefully labeled.
///
/// Requires a rooted-tree shape (a tree function, or any function whose
/// iterates collapse onto a single attractive fixed point); those are exactly
/// the functional graphs that can carry the full label set, since label 0
/// forces a loop and repeated labels forbid a second cycle.
///
/// Backtracking assigns the vertex pair realizing the top label first and
/// then descends, which prunes hard; the complement symmetry is broken by
/// forcing the root label below `ceil(n/2)` (first-witness mode only).
pub fn search_graceful(f: &EndoFunction, options: SearchOptions) -> Result<SearchResult> {
    if !(f.is_tree_function() || f.has_attractive_fixed_point()) {
        return Err(Error::UnsupportedSearchInput);
    }
    search_sequence(f, &EdgeLabelSequence::graceful(f.n()), options)
}

/// Searches for a permutation whose induced labels equal `target` exactly.
pub fn realizes_sequence(
    f: &EndoFunction,
    target: &EdgeLabelSequence,
    options: SearchOptions,
) -> Result<SearchResult> {
    if !(f.is_tree_function() || f.has_attractive_fixed_point()) {
        return Err(Error::UnsupportedSearchInput);
    }
    if f.n() != target.n() {
        return Err(Error::DimensionMismatch {
            left: f.n(),
            right: target.n(),
        });
    }
    search_sequence(f, target, options)
}

fn search_sequence(
    f: &EndoFunction,
    target: &EdgeLabelSequence,
    options: SearchOptions,
) -> Result<SearchResult> {
    let start = Instant::now();
    let n = f.n();

    if n == 1 {
        // A single loop carries label 0.
        let found = target.labels() == [0];
        return Ok(SearchResult {
            found,
            witness: found.then(|| Permutation::identity(1)),
            nodes_explored: 1,
            elapsed: start.elapsed(),
            witness_count: options.exhaustive.then_some(u64::from(found)),
        });
    }

    let root = (0..n).find(|&i| f.apply(i) == i).expect("one fixed point");
    let mut children = vec![Vec::new(); n];
    for u in 0..n {
        if u != root {
            children[f.apply(u)].push(u);
        }
    }
    let mut remaining = vec![0u16; n];
    for &l in target.labels() {
        remaining[usize::from(l)] += 1;
    }

    let mut searcher = Searcher {
        f,
        n,
        root,
        children,
        vertex_label: vec![None; n],
        label_used: vec![false; n],
        remaining,
        remaining_total: n,
        exhaustive: options.exhaustive,
        root_cap: n.div_ceil(2) as u8,
        nodes: 0,
        witnesses: HashSet::new(),
        first_witness: None,
    };
    searcher.search();

    let witness = if options.exhaustive {
        searcher.witnesses.iter().min().cloned()
    } else {
        // Normalize against the complement symmetry for a stable answer.
        searcher.first_witness.map(|image| {
            let flipped: Vec<u8> = image.iter().map(|&l| (n - 1) as u8 - l).collect();
            image.min(flipped)
        })
    };
    let found = witness.is_some();
    Ok(SearchResult {
        found,
        witness: witness
            .map(|image| Permutation::from_image(image).expect("search yields bijections")),
        nodes_explored: searcher.nodes,
        elapsed: start.elapsed(),
        witness_count: options
            .exhaustive
            .then_some(searcher.witnesses.len() as u64),
    })
}

struct Searcher<'a> {
    f: &'a EndoFunction,
    n: usize,
    root: usize,
    children: Vec<Vec<usize>>,
    vertex_label: Vec<Option<u8>>,
    label_used: Vec<bool>,
    /// How many copies of each label the target still needs.
    remaining: Vec<u16>,
    remaining_total: usize,
    exhaustive: bool,
    root_cap: u8,
    nodes: u64,
    witnesses: HashSet<Vec<u8>>,
    first_witness: Option<Vec<u8>>,
}

struct Placement {
    vertices: Vec<usize>,
    consumed: Vec<usize>,
}

impl Searcher<'_> {
    /// Returns true when the caller should stop unwinding (first witness
    /// found in non-exhaustive mode).
    fn search(&mut self) -> bool {
        self.nodes += 1;
        if self.remaining_total == 0 {
            let image: Vec<u8> = self
                .vertex_label
                .iter()
                .map(|l| l.expect("all vertices labeled"))
                .collect();
            if self.exhaustive {
                self.witnesses.insert(image);
                return false;
            }
            self.first_witness = Some(image);
            return true;
        }
        let d = (0..self.n).rev().find(|&l| self.remaining[l] > 0).unwrap();
        if d == 0 {
            // Only the root loop produces label 0 and it is consumed when the
            // root is labeled; leftover zeros are unrealizable.
            return false;
        }
        for u in 0..self.n {
            if u == self.root {
                continue;
            }
            let p = self.f.apply(u);
            if self.vertex_label[u].is_some() && self.vertex_label[p].is_some() {
                continue; // edge already realized
            }
            for a in 0..=(self.n - 1 - d) {
                let (low, high) = (a as u8, (a + d) as u8);
                for (label_u, label_p) in [(high, low), (low, high)] {
                    if let Some(placement) = self.try_place(&[(u, label_u), (p, label_p)]) {
                        if self.search() {
                            return true;
                        }
                        self.undo(placement);
                    }
                }
            }
        }
        false
    }

    /// Attempts to label the given vertices, consuming the labels of every
    /// edge this completes. Returns `None` (with no net state change) on any
    /// conflict.
    fn try_place(&mut self, want: &[(usize, u8)]) -> Option<Placement> {
        // Consistency without state change first.
        let mut fresh = 0;
        for &(v, lab) in want {
            match self.vertex_label[v] {
                Some(existing) if existing != lab => return None,
                Some(_) => {}
                None => {
                    if self.label_used[usize::from(lab)] {
                        return None;
                    }
                    fresh += 1;
                    if !self.exhaustive && v == self.root && lab >= self.root_cap {
                        return None;
                    }
                }
            }
        }
        if fresh == 0 {
            return None;
        }
        // Non-root vertices never map to themselves, so the pair is two
        // distinct vertices.
        debug_assert!(want.len() < 2 || want[0].0 != want[1].0);

        let mut placement = Placement {
            vertices: Vec::with_capacity(2),
            consumed: Vec::with_capacity(4),
        };
        for &(v, lab) in want {
            if self.vertex_label[v].is_some() {
                continue;
            }
            if self.label_used[usize::from(lab)] {
                self.undo(placement);
                return None;
            }
            self.vertex_label[v] = Some(lab);
            self.label_used[usize::from(lab)] = true;
            placement.vertices.push(v);
            if !self.complete_edges_at(v, &mut placement) {
                self.undo(placement);
                return None;
            }
        }
        Some(placement)
    }

    /// Consumes the labels of all edges completed by labeling `v`.
    fn complete_edges_at(&mut self, v: usize, placement: &mut Placement) -> bool {
        if v == self.root {
            if !self.consume(0, placement) {
                return false;
            }
        } else {
            let p = self.f.apply(v);
            if let (Some(a), Some(b)) = (self.vertex_label[v], self.vertex_label[p]) {
                let l = (i32::from(a) - i32::from(b)).unsigned_abs() as usize;
                if !self.consume(l, placement) {
                    return false;
                }
            }
        }
        for idx in 0..self.children[v].len() {
            let c = self.children[v][idx];
            if let (Some(a), Some(b)) = (self.vertex_label[c], self.vertex_label[v]) {
                let l = (i32::from(a) - i32::from(b)).unsigned_abs() as usize;
                if !self.consume(l, placement) {
                    return false;
                }
            }
        }
        true
    }

    fn consume(&mut self, label: usize, placement: &mut Placement) -> bool {
        if self.remaining[label] == 0 {
            return false;
        }
        self.remaining[label] -= 1;
        self.remaining_total -= 1;
        placement.consumed.push(label);
        true
    }

    fn undo(&mut self, placement: Placement) {
        for label in placement.consumed {
            self.remaining[label] += 1;
            self.remaining_total += 1;
        }
        for v in placement.vertices {
            let lab = self.vertex_label[v].take().expect("was placed");
            self.label_used[usize::from(lab)] = false;
        }
    }
}

/// Scans every relabeling of an arbitrary function for the target label
/// multiset (`n <= 9`). Slower than the backtracking search but free of any
/// shape assumption, so it doubles as an independent oracle; the witness is
/// the lexicographically least match.
pub fn exhaustive_sequence_scan(
    f: &EndoFunction,
    target: &EdgeLabelSequence,
) -> Result<SearchResult> {
    let n = f.n();
    if n > 9 {
        return Err(Error::TooLarge {
            n,
            max: 9,
            what: "exhaustive relabeling scan",
        });
    }
    if n != target.n() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: target.n(),
        });
    }
    let start = Instant::now();
    let mut nodes = 0u64;
    let mut witness: Option<Permutation> = None;
    let mut count = 0u64;
    let mut scratch = vec![0u8; n];
    for_each_permutation(n, |image| {
        nodes += 1;
        for i in 0..n {
            scratch[i] = (i32::from(image[f.apply(i)]) - i32::from(image[i])).unsigned_abs() as u8;
        }
        scratch.sort_unstable();
        if scratch == target.labels() {
            count += 1;
            if witness.is_none() {
                witness = Some(Permutation::from_image(image.to_vec()).expect("valid image"));
            }
        }
    });
    Ok(SearchResult {
        found: witness.is_some(),
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        witness_count: Some(count),
    })
}

/// Sorted multiset `{ |i - j| : i in Z_n }`: the label sequence of the star
/// with center label `j`. Valid for `0 <= j <= floor(n/2)`; larger centers
/// repeat these sequences by the complement symmetry.
pub fn star_sequence(n: usize, j: usize) -> Result<EdgeLabelSequence> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    if j > n / 2 {
        return Err(Error::StarCenterOutOfRange { j, max: n / 2 });
    }
    EdgeLabelSequence::new(
        (0..n)
            .map(|i| (i as i64 - j as i64).unsigned_abs() as u8)
            .collect(),
    )
}

/// The distinct gracefully labeled conjugates of `f`, one entry per graph.
#[derive(Debug, Clone)]
pub struct GrlEnumeration {
    /// Gracefully labeled functions `s f s^{-1}`, each listed once, sorted.
    pub graphs: Vec<EndoFunction>,
    /// For each graph, the lexicographically least relabeling producing it.
    pub witnesses: Vec<Permutation>,
    /// Total number of graceful permutations (counted over all of `S_n`).
    pub graceful_sigma_count: u64,
}

impl GrlEnumeration {
    pub fn count(&self) -> usize {
        self.graphs.len()
    }
}

/// Enumerates, by exhaustion over `S_n` (so `n <= 9`), the distinct
/// gracefully labeled functional graphs isomorphic to `G_f`.
pub fn enumerate_grl(f: &EndoFunction) -> Result<GrlEnumeration> {
    let n = f.n();
    if n > 9 {
        return Err(Error::TooLarge {
            n,
            max: 9,
            what: "graceful relabeling enumeration",
        });
    }
    let mut by_graph: BTreeMap<EndoFunction, Permutation> = BTreeMap::new();
    let mut graceful_sigma_count = 0u64;
    for_each_permutation(n, |image| {
        let mut mask: u32 = 0;
        for i in 0..n {
            let l = (i32::from(image[f.apply(i)]) - i32::from(image[i])).unsigned_abs();
            mask |= 1 << l;
        }
        if mask.count_ones() as usize == n {
            graceful_sigma_count += 1;
            let sigma = Permutation::from_image(image.to_vec()).expect("valid image");
            let conj = sigma.conjugate(f).expect("same dimension");
            by_graph.entry(conj).or_insert(sigma);
        }
    });
    let (graphs, witnesses) = by_graph.into_iter().unzip();
    Ok(GrlEnumeration {
        graphs,
        witnesses,
        graceful_sigma_count,
    })
}

/// The automorphism group of `G_f`: all permutations with `s f s^{-1} = f`.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    /// Sorted lexicographically; always contains the identity.
    pub elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Brute-force automorphism group over `S_n` (so `n <= 9`). Uses the
/// commutation form `s(f(i)) = f(s(i))` to avoid building conjugates.
pub fn automorphisms(f: &EndoFunction) -> Result<AutomorphismGroup> {
    let n = f.n();
    if n > 9 {
        return Err(Error::TooLarge {
            n,
            max: 9,
            what: "automorphism enumeration",
        });
    }
    let mut elements = Vec::new();
    for_each_permutation(n, |image| {
        let commutes = (0..n).all(|i| image[f.apply(i)] == f.apply(usize::from(image[i])) as u8);
        if commutes {
            elements.push(Permutation::from_image(image.to_vec()).expect("valid image"));
        }
    });
    Ok(AutomorphismGroup { elements })
}

/// Minimum edge-deletion statistic: how many edges of `G_f` must be removed
/// so the remaining spanning subgraph is a disjoint union of paths (isolated
/// vertices allowed) with no loop edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoStat {
    pub rho: usize,
    /// Tail vertices of the deleted edges (edge `i` is `i -> f(i)`),
    /// lexicographically least among the minimum deletion sets.
    pub witness_deletion: Vec<usize>,
}

/// Exhaustive subset minimization ordered by deletion count; `n <= 12` keeps
/// the `2^n` scan feasible.
pub fn rho(f: &EndoFunction) -> Result<RhoStat> {
    let n = f.n();
    if n > 12 {
        return Err(Error::TooLarge {
            n,
            max: 12,
            what: "deletion-set minimization",
        });
    }
    let mut masks: Vec<u32> = (0u32..(1 << n)).collect();
    masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
    for mask in masks {
        if paths_after_deletion(f, mask) {
            return Ok(RhoStat {
                rho: mask.count_ones() as usize,
                witness_deletion: (0..n).filter(|&i| mask & (1 << i) != 0).collect(),
            });
        }
    }
    unreachable!("deleting every edge always leaves isolated vertices");
}

/// Checks that the undirected multigraph left after deleting the masked edges
/// has no loops, maximum degree two, and no cycles (parallel edges included).
fn paths_after_deletion(f: &EndoFunction, deleted: u32) -> bool {
    let n = f.n();
    let mut degree = vec![0u8; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for i in 0..n {
        if deleted & (1 << i) != 0 {
            continue;
        }
        let j = f.apply(i);
        if i == j {
            return false; // loop edge must go
        }
        degree[i] += 1;
        degree[j] += 1;
        if degree[i] > 2 || degree[j] > 2 {
            return false;
        }
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri == rj {
            return false; // closes a cycle (a parallel pair counts)
        }
        parent[ri] = rj;
    }
    true
}

/// Extremes over `S_n` of the number of distinct induced edge labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LabelExtrema {
    pub min: usize,
    pub max: usize,
}

/// Exact extrema by exhaustion over all `n!` relabelings (`n <= 7`).
pub fn distinct_label_extrema(f: &EndoFunction) -> Result<LabelExtrema> {
    let n = f.n();
    if n > 7 {
        return Err(Error::TooLarge {
            n,
            max: 7,
            what: "exhaustive label extrema",
        });
    }
    let mut min = usize::MAX;
    let mut max = 0;
    for_each_permutation(n, |image| {
        let d = distinct_labels(f, image) as usize;
        min = min.min(d);
        max = max.max(d);
    });
    Ok(LabelExtrema { min, max })
}

/// Sampled lower/upper estimates of the extrema for larger `n`; the true
/// minimum is at most `min` and the true maximum at least `max`. Seeded and
/// reproducible.
pub fn sampled_label_extrema(f: &EndoFunction, samples: u64, seed: u64) -> LabelExtrema {
    let n = f.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut image: Vec<u8> = (0..n).map(|i| i as u8).collect();
    let mut min = distinct_labels(f, &image) as usize;
    let mut max = min;
    for _ in 0..samples {
        image.shuffle(&mut rng);
        let d = distinct_labels(f, &image) as usize;
        min = min.min(d);
        max = max.max(d);
    }
    LabelExtrema { min, max }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{permutations, tree_functions};

    fn f(values: &[u8]) -> EndoFunction {
        EndoFunction::new(values.to_vec()).unwrap()
    }

    fn perm(image: &[u8]) -> Permutation {
        Permutation::from_image(image.to_vec()).unwrap()
    }

    #[test]
    fn edge_label_sequences() {
        let id = Permutation::identity(6);
        let fig = f(&[0, 0, 0, 0, 3, 3]);
        assert_eq!(
            edge_labels(&fig, &id).unwrap().labels(),
            &[0, 1, 1, 2, 2, 3]
        );

        let id4 = Permutation::identity(4);
        let star = EndoFunction::constant(4, 0);
        assert_eq!(edge_labels(&star, &id4).unwrap().labels(), &[0, 1, 2, 3]);

        let path = f(&[0, 0, 1, 2]);
        let sigma = perm(&[0, 3, 1, 2]);
        assert_eq!(edge_labels(&path, &sigma).unwrap().labels(), &[0, 1, 2, 3]);

        assert!(is_graceful(&star, &id4).unwrap());
        assert!(!is_graceful(&path, &id4).unwrap());
        assert_eq!(edge_labels(&path, &id4).unwrap().labels(), &[0, 1, 1, 1]);
        assert!(is_graceful(&path, &sigma).unwrap());
    }

    #[test]
    fn star_sequences() {
        assert_eq!(star_sequence(6, 0).unwrap().labels(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(star_sequence(6, 1).unwrap().labels(), &[0, 1, 1, 2, 3, 4]);
        assert_eq!(star_sequence(4, 2).unwrap().labels(), &[0, 1, 1, 2]);
        assert!(star_sequence(6, 4).is_err());
    }

    #[test]
    fn graceful_search_finds_witnesses() {
        let star = EndoFunction::constant(5, 0);
        let res = search_graceful(&star, SearchOptions::default()).unwrap();
        assert!(res.found);
        assert!(is_graceful(&star, res.witness.as_ref().unwrap()).unwrap());

        let path = f(&[0, 0, 1, 2]);
        let res = search_graceful(&path, SearchOptions::default()).unwrap();
        assert!(res.found);
        assert!(is_graceful(&path, res.witness.as_ref().unwrap()).unwrap());
        assert!(res.nodes_explored > 0);

        // Non-tree root shapes are still searchable when they collapse to a
        // single fixed point.
        let bent = f(&[1, 1, 1, 2, 2, 1]);
        assert!(bent.has_attractive_fixed_point());
        let res = search_graceful(&bent, SearchOptions::default()).unwrap();
        assert!(res.found);
        assert!(is_graceful(&bent, res.witness.as_ref().unwrap()).unwrap());

        assert!(search_graceful(&f(&[1, 2, 0]), SearchOptions::default()).is_err());

        let single = f(&[0]);
        let res = search_graceful(&single, SearchOptions::default()).unwrap();
        assert!(res.found);
    }

    #[test]
    fn exhaustive_search_counts_all_witnesses() {
        // The four-vertex path has exactly four graceful relabelings.
        let path = f(&[0, 0, 1, 2]);
        let res = search_graceful(&path, SearchOptions { exhaustive: true }).unwrap();
        assert_eq!(res.witness_count, Some(4));
        // Brute-force oracle over all of S_4.
        let oracle = permutations(4)
            .filter(|s| is_graceful(&path, s).unwrap())
            .count();
        assert_eq!(oracle, 4);
        // The reported witness is the lex-least graceful permutation.
        let least = permutations(4)
            .find(|s| is_graceful(&path, s).unwrap())
            .unwrap();
        assert_eq!(res.witness.unwrap(), least);
    }

    #[test]
    fn sequence_search() {
        let path = f(&[0, 0, 1, 2]);
        let all_zero = EdgeLabelSequence::new(vec![0, 0, 0, 0]).unwrap();
        let res = realizes_sequence(&path, &all_zero, SearchOptions::default()).unwrap();
        assert!(!res.found);

        let target = star_sequence(4, 1).unwrap();
        assert_eq!(target.labels(), &[0, 1, 1, 2]);
        let res = realizes_sequence(&path, &target, SearchOptions::default()).unwrap();
        assert!(res.found);
        assert_eq!(
            edge_labels(&path, res.witness.as_ref().unwrap()).unwrap(),
            target
        );

        // Every tree on five vertices realizes every star sequence.
        for tree in tree_functions(5) {
            for j in 0..=2 {
                let target = star_sequence(5, j).unwrap();
                let res = realizes_sequence(&tree, &target, SearchOptions::default()).unwrap();
                assert!(res.found, "tree {:?} misses center {}", tree.values(), j);
                assert_eq!(
                    edge_labels(&tree, res.witness.as_ref().unwrap()).unwrap(),
                    target
                );
            }
        }
    }

    #[test]
    fn grl_enumeration() {
        for n in 2..=6 {
            let star = EndoFunction::constant(n, 0);
            assert_eq!(enumerate_grl(&star).unwrap().count(), 2);
        }

        // Brute-force derived: the four-vertex path has four gracefully
        // labeled conjugates and a trivial automorphism group.
        let path = f(&[0, 0, 1, 2]);
        let grl = enumerate_grl(&path).unwrap();
        assert_eq!(grl.count(), 4);
        assert_eq!(grl.graceful_sigma_count, 4);
        let expected: Vec<EndoFunction> = [
            vec![0, 3, 1, 0],
            vec![2, 1, 1, 0],
            vec![3, 2, 0, 3],
            vec![3, 2, 2, 1],
        ]
        .into_iter()
        .map(|v| EndoFunction::new(v).unwrap())
        .collect();
        let mut got = grl.graphs.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        for (graph, witness) in grl.graphs.iter().zip(&grl.witnesses) {
            assert_eq!(&witness.conjugate(&path).unwrap(), graph);
        }
    }

    #[test]
    fn automorphism_groups() {
        let path = f(&[0, 0, 1, 2]);
        assert_eq!(automorphisms(&path).unwrap().order(), 1);

        let star = EndoFunction::constant(4, 0);
        let aut = automorphisms(&star).unwrap();
        assert_eq!(aut.order(), 6);
        assert!(aut.elements.iter().all(|s| s.apply(0) == 0));

        assert_eq!(
            automorphisms(&EndoFunction::identity(3)).unwrap().order(),
            6
        );

        // Group axioms: identity, closure, inverses.
        let aut = automorphisms(&f(&[0, 0, 0, 0, 3, 3])).unwrap();
        assert!(aut.contains(&Permutation::identity(6)));
        for a in &aut.elements {
            assert!(aut.contains(&a.inverse()));
            for b in &aut.elements {
                assert!(aut.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn rho_examples() {
        let path = f(&[0, 0, 1, 2]);
        let stat = rho(&path).unwrap();
        assert_eq!(stat.rho, 1);
        assert_eq!(stat.witness_deletion, vec![0]); // the root loop

        let star = EndoFunction::constant(4, 0);
        assert_eq!(rho(&star).unwrap().rho, 2);

        let cycle = f(&[1, 2, 0]);
        assert_eq!(rho(&cycle).unwrap().rho, 1);

        // An involution's graph is parallel pairs; one of each must go.
        let invol = f(&[1, 0, 3, 2]);
        assert_eq!(rho(&invol).unwrap().rho, 2);

        // Deleting every loop of the identity leaves isolated vertices.
        assert_eq!(rho(&EndoFunction::identity(3)).unwrap().rho, 3);
    }

    #[test]
    fn label_extrema() {
        let invol = f(&[1, 0, 3, 2]);
        let e = distinct_label_extrema(&invol).unwrap();
        assert_eq!(e.min, 1);
        assert_eq!(e.max, 2);

        let cycle = f(&[1, 2, 0]);
        let e = distinct_label_extrema(&cycle).unwrap();
        assert_eq!(e.max, 2);
        assert_eq!(e.min, 2);

        for tree in tree_functions(5) {
            assert_eq!(distinct_label_extrema(&tree).unwrap().max, 5);
        }

        let sampled = sampled_label_extrema(&invol, 200, 7);
        assert!(sampled.min >= e.min.min(sampled.min));
        assert_eq!(
            sampled_label_extrema(&invol, 200, 7),
            sampled_label_extrema(&invol, 200, 7)
        );
    }

    #[test]
    fn backtracker_agrees_with_exhaustive_scan() {
        // The scan is shape-free and independent of the backtracking path,
        // so the two must agree on feasibility (and on counts when the
        // backtracker runs exhaustively).
        for n in 2..=5 {
            for tree in tree_functions(n) {
                for j in 0..=n / 2 {
                    let target = star_sequence(n, j).unwrap();
                    let scan = exhaustive_sequence_scan(&tree, &target).unwrap();
                    let back =
                        realizes_sequence(&tree, &target, SearchOptions { exhaustive: true })
                            .unwrap();
                    assert_eq!(scan.found, back.found);
                    assert_eq!(scan.witness_count, back.witness_count);
                }
                let absent = EdgeLabelSequence::new(vec![1; n]).unwrap();
                let scan = exhaustive_sequence_scan(&tree, &absent).unwrap();
                let back = realizes_sequence(&tree, &absent, SearchOptions::default()).unwrap();
                assert_eq!(scan.found, back.found);
            }
        }
        // Graceful witness counts at n = 6.
        let graceful = EdgeLabelSequence::graceful(6);
        for tree in tree_functions(6) {
            let scan = exhaustive_sequence_scan(&tree, &graceful).unwrap();
            let back = search_graceful(&tree, SearchOptions { exhaustive: true }).unwrap();
            assert_eq!(scan.witness_count, back.witness_count);
            assert!(scan.found);
        }
    }

    #[test]
    fn scan_handles_shapes_the_backtracker_rejects() {
        // A loop plus a directed 3-cycle is gracefully labeled even though it
        // is not a rooted tree: labels (1, 2, 0, 3).
        let f = f(&[1, 3, 2, 0]);
        assert!(search_graceful(&f, SearchOptions::default()).is_err());
        let scan = exhaustive_sequence_scan(&f, &EdgeLabelSequence::graceful(4)).unwrap();
        assert!(scan.found);
        assert!(is_graceful(&f, scan.witness.as_ref().unwrap()).unwrap());

        // A 2-cycle repeats its edge label, so it can never be graceful.
        let swap = EndoFunction::new(vec![1, 0]).unwrap();
        let scan = exhaustive_sequence_scan(&swap, &EdgeLabelSequence::graceful(2)).unwrap();
        assert!(!scan.found);
        assert_eq!(scan.witness_count, Some(0));
    }

    #[test]
    fn graceful_count_factors_through_cosets() {
        // The graceful permutations of f split into cosets of Aut G_f, one
        // per gracefully labeled conjugate; the automorphism order always
        // divides n!.
        for n in 2..=4 {
            for f in crate::monoid::all_functions(n) {
                let aut = automorphisms(&f).unwrap().order() as u64;
                assert_eq!(crate::monoid::factorial(n) % aut, 0);
                let grl = enumerate_grl(&f).unwrap();
                assert_eq!(grl.graceful_sigma_count, grl.count() as u64 * aut);
            }
        }
        for f in tree_functions(6) {
            let aut = automorphisms(&f).unwrap().order() as u64;
            let grl = enumerate_grl(&f).unwrap();
            assert_eq!(grl.graceful_sigma_count, grl.count() as u64 * aut);
        }
    }

    #[test]
    fn witness_record_schema() {
        let path = f(&[0, 0, 1, 2]);
        let res = search_graceful(&path, SearchOptions::default()).unwrap();
        let record = WitnessRecord {
            labels: Some(edge_labels(&path, res.witness.as_ref().unwrap()).unwrap()),
            f: path,
            witness: res.witness,
            nodes_explored: res.nodes_explored,
        };
        let json = serde_json::to_value(&record).unwrap();
        assert_eq!(json["f"]["n"], 4);
        assert!(json["witness"].is_array());
        assert_eq!(json["labels"], serde_json::json!([0, 1, 2, 3]));
        assert!(json["nodes_explored"].as_u64().unwrap() > 0);
    }
}
