//! Permutations with lexicographic ranking, canonical enumeration of
//! functional trees/forests, and composition-closure checks for the small
//! submonoids of `Z_n^{Z_n}`.

use std::collections::HashSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::endograph::EndoFunction;
use crate::{Error, Result};

/// A bijection on `[0, n)`, stored by its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<u8>,
}

/// Lexicographic (Lehmer) rank of a permutation, in `[0, n!)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LexRank(pub u64);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize + 1);
        Self {
            image: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// The complement involution `i -> (n-1) - i`; it preserves every induced
    /// subtractive edge label.
    pub fn complement(n: usize) -> Self {
        assert!(n >= 1);
        Self {
            image: (0..n).map(|i| (n - 1 - i) as u8).collect(),
        }
    }

    pub fn from_image(image: Vec<u8>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if usize::from(v) >= n || seen[usize::from(v)] {
                return Err(Error::NotABijection { len: n, n });
            }
            seen[usize::from(v)] = true;
        }
        Ok(Self { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        usize::from(self.image[i])
    }

    pub fn image(&self) -> &[u8] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[usize::from(v)] = i as u8;
        }
        Permutation { image: inv }
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            image: (0..self.n()).map(|i| self.image[other.apply(i)]).collect(),
        })
    }

    /// Conjugation `s f s^{-1}`; the functional graph of the result is the
    /// graph of `f` with vertex `i` renamed `s(i)`.
    pub fn conjugate(&self, f: &EndoFunction) -> Result<EndoFunction> {
        if self.n() != f.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: f.n(),
            });
        }
        let mut values = vec![0u8; self.n()];
        for i in 0..self.n() {
            values[self.apply(i)] = self.image[f.apply(i)];
        }
        Ok(EndoFunction::new(values).expect("conjugate stays in range"))
    }

    /// Views the permutation as an endofunction.
    pub fn to_endofunction(&self) -> EndoFunction {
        EndoFunction::new(self.image.clone()).expect("bijection is a valid table")
    }

    /// True for even permutations (members of the alternating group).
    pub fn is_even(&self) -> bool {
        let mut inversions = 0usize;
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.image[j] < self.image[i] {
                    inversions += 1;
                }
            }
        }
        inversions.is_multiple_of(2)
    }

    /// Lehmer rank: `sum_k c_k (n-1-k)!` where `c_k` counts the later entries
    /// smaller than `image[k]`. The identity ranks 0 and the complement
    /// involution ranks `n! - 1`, and the map is a bijection onto `[0, n!)`.
    pub fn lex_rank(&self) -> LexRank {
        let n = self.n();
        let mut rank = 0u64;
        for k in 0..n {
            let smaller_later = (k + 1..n)
                .filter(|&i| self.image[i] < self.image[k])
                .count();
            rank += smaller_later as u64 * factorial(n - 1 - k);
        }
        LexRank(rank)
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn lex_unrank(rank: LexRank, n: usize) -> Result<Permutation> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        if rank.0 >= factorial(n) {
            return Err(Error::RankOutOfRange { rank: rank.0, n });
        }
        let mut remaining: Vec<u8> = (0..n).map(|i| i as u8).collect();
        let mut r = rank.0;
        let mut image = Vec::with_capacity(n);
        for k in 0..n {
            let f = factorial(n - 1 - k);
            let d = (r / f) as usize;
            r %= f;
            image.push(remaining.remove(d));
        }
        Ok(Permutation { image })
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.image.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let image = Vec::<u8>::deserialize(deserializer)?;
        Permutation::from_image(image).map_err(D::Error::custom)
    }
}

pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial overflows u64 past 20");
    (1..=n as u64).product()
}

/// Calls `visit` with every permutation of `[0, n)` in lexicographic order of
/// the image sequence. Allocation-free inner loop.
pub fn for_each_permutation<F: FnMut(&[u8])>(n: usize, mut visit: F) {
    let mut image: Vec<u8> = (0..n).map(|i| i as u8).collect();
    loop {
        visit(&image);
        if !next_lex_permutation(&mut image) {
            return;
        }
    }
}

fn next_lex_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All permutations of `[0, n)` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut image: Vec<u8> = (0..n).map(|i| i as u8).collect();
    let mut done = n == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = Permutation {
            image: image.clone(),
        };
        done = !next_lex_permutation(&mut image);
        Some(out)
    })
}

/// Odometer over value tables with per-position digit bounds; the last
/// position moves fastest, so runs are reproducible.
struct MixedRadix {
    current: Option<Vec<u8>>,
    max_digit: Vec<u8>,
}

impl MixedRadix {
    fn new(max_digit: Vec<u8>) -> Self {
        Self {
            current: Some(vec![0; max_digit.len()]),
            max_digit,
        }
    }
}

impl Iterator for MixedRadix {
    type Item = EndoFunction;

    fn next(&mut self) -> Option<EndoFunction> {
        let current = self.current.as_mut()?;
        let out = EndoFunction::new(current.clone()).expect("digits stay in range");
        let mut pos = current.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            if current[pos] < self.max_digit[pos] {
                current[pos] += 1;
                for digit in &mut current[pos + 1..] {
                    *digit = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `(n-1)!` tree functions (`f(0) = 0`, `f(i) < i`), canonical order.
pub fn tree_functions(n: usize) -> impl Iterator<Item = EndoFunction> {
    assert!(n >= 1);
    MixedRadix::new((0..n).map(|i| i.saturating_sub(1) as u8).collect())
}

/// All `n!` forest functions (`f(i) <= i`), canonical order.
pub fn forest_functions(n: usize) -> impl Iterator<Item = EndoFunction> {
    assert!(n >= 1);
    MixedRadix::new((0..n).map(|i| i as u8).collect())
}

/// All `n^n` endofunctions, canonical order.
pub fn all_functions(n: usize) -> impl Iterator<Item = EndoFunction> {
    assert!(n >= 1);
    MixedRadix::new(vec![(n - 1) as u8; n])
}

/// Packs a value table into one integer key; valid for `n <= 16` with values
/// below 16. Used for the large membership sets in closure and census runs.
pub(crate) fn key64(values: &[u8]) -> u64 {
    debug_assert!(values.len() <= 16 && values.iter().all(|&v| v < 16));
    values
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &v)| acc | (u64::from(v) << (4 * i)))
}

/// A composition-closed family of endofunctions to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `{h : h(i) <= i}`, a submonoid of size `n!`.
    ForestMonoid,
    /// `{t : t(0) = 0, t(i) < i}`, a semigroup of size `(n-1)!`.
    TreeSemigroup,
    /// A conjugate `s M s^{-1}` of the forest monoid.
    ConjugatedForest(Permutation),
    /// Everything except the odd permutations, of size `n^n - n!/2`.
    NoOddPermutations,
}

impl Family {
    fn requires_identity(&self) -> bool {
        // The tree family is only claimed to be a semigroup.
        !matches!(self, Family::TreeSemigroup)
    }
}

/// Outcome of an exhaustive closure check.
#[derive(Debug, Clone)]
pub struct ClosureCheck {
    pub closed: bool,
    pub size: u64,
    pub identity_present: bool,
    /// First pair (in canonical order) whose composition escapes the family.
    pub witness: Option<(EndoFunction, EndoFunction)>,
}

/// Materializes the family and checks closure under composition pairwise
/// (plus identity membership for the families claimed to be monoids).
pub fn verify_closure(family: &Family, n: usize) -> Result<ClosureCheck> {
    let members: Vec<EndoFunction> = match family {
        Family::ForestMonoid => {
            cap(n, 7, "forest monoid closure")?;
            forest_functions(n).collect()
        }
        Family::TreeSemigroup => {
            cap(n, 7, "tree semigroup closure")?;
            tree_functions(n).collect()
        }
        Family::ConjugatedForest(sigma) => {
            cap(n, 7, "conjugated forest closure")?;
            if sigma.n() != n {
                return Err(Error::DimensionMismatch {
                    left: sigma.n(),
                    right: n,
                });
            }
            forest_functions(n)
                .map(|h| sigma.conjugate(&h).expect("same dimension"))
                .collect()
        }
        Family::NoOddPermutations => {
            cap(n, 5, "no-odd-permutation closure")?;
            all_functions(n)
                .filter(|f| {
                    match Permutation::from_image(f.values().to_vec()) {
                        Ok(p) => p.is_even(),
                        Err(_) => true, // not a permutation at all
                    }
                })
                .collect()
        }
    };
    Ok(closure_of(&members, family.requires_identity(), n))
}

fn closure_of(members: &[EndoFunction], requires_identity: bool, n: usize) -> ClosureCheck {
    let keys: HashSet<u64> = members.iter().map(|f| key64(f.values())).collect();
    let identity_present = keys.contains(&key64(EndoFunction::identity(n).values()));
    let mut witness = None;
    'outer: for a in members {
        for b in members {
            let ab = a.compose(b).expect("same dimension");
            if !keys.contains(&key64(ab.values())) {
                witness = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    ClosureCheck {
        closed: witness.is_none() && (!requires_identity || identity_present),
        size: members.len() as u64,
        identity_present,
        witness,
    }
}

fn cap(n: usize, max: usize, what: &'static str) -> Result<()> {
    if n < 1 || n > max {
        Err(Error::TooLarge { n, max, what })
    } else {
        Ok(())
    }
}

/// Counting report for the submonoid structure of `Z_n^{Z_n}`.
#[derive(Debug, Clone, Serialize)]
pub struct MonoidCensus {
    pub n: usize,
    pub forest_monoid_size: u64,
    pub tree_semigroup_size: u64,
    /// `|S_n u (U_s s . forest . s^{-1})|`, materialized.
    pub union_count: u64,
    /// `(n+1)^(n-1) + n! - 1`.
    pub cayley_formula: u64,
    #[serde(rename = "match")]
    pub union_matches_formula: bool,
    pub forest_closed: bool,
    pub tree_closed: bool,
    /// Distinctness/closure of the `2 n! + n` small submonoids, for `n > 3`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound_families: Option<FamilyCensus>,
}

/// Report on the families of submonoids of size `(n-1)! + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyCensus {
    /// `2 n! + n`.
    pub expected: u64,
    /// Number of pairwise-distinct families actually materialized.
    pub distinct: u64,
    pub all_closed: bool,
    /// Every family checked pairwise when true; for n = 7 only the base
    /// (unconjugated) families are checked and conjugates inherit closure.
    pub closure_checked_exhaustively: bool,
}

/// Materializes the census for `2 <= n <= 7`.
pub fn census(n: usize) -> Result<MonoidCensus> {
    if !(2..=7).contains(&n) {
        return Err(Error::OutOfSupportedRange {
            n,
            min: 2,
            max: 7,
            what: "monoid census",
        });
    }
    let forests: Vec<EndoFunction> = forest_functions(n).collect();
    let trees: Vec<EndoFunction> = tree_functions(n).collect();
    debug_assert!(forests.iter().all(EndoFunction::is_forest_function));
    debug_assert!(trees.iter().all(EndoFunction::is_tree_function));

    // |S_n u (U_s s.forest.s^{-1})|
    let mut union: HashSet<u64> = HashSet::new();
    for_each_permutation(n, |image| {
        union.insert(key64(image));
        let sigma = Permutation {
            image: image.to_vec(),
        };
        for h in &forests {
            let conj = sigma.conjugate(h).expect("same dimension");
            union.insert(key64(conj.values()));
        }
    });
    let union_count = union.len() as u64;
    let cayley_formula = (n as u64 + 1).pow(n as u32 - 1) + factorial(n) - 1;

    let forest_check = verify_closure(&Family::ForestMonoid, n)?;
    let tree_check = verify_closure(&Family::TreeSemigroup, n)?;

    let lower_bound_families = if n > 3 {
        Some(family_census(n, &trees, &forests))
    } else {
        None
    };

    Ok(MonoidCensus {
        n,
        forest_monoid_size: forests.len() as u64,
        tree_semigroup_size: trees.len() as u64,
        union_count,
        cayley_formula,
        union_matches_formula: union_count == cayley_formula,
        forest_closed: forest_check.closed,
        tree_closed: tree_check.closed,
        lower_bound_families,
    })
}

/// The three families of submonoids of size `(n-1)! + 1`:
///
/// 1. `{id} u s.trees.s^{-1}` for each permutation `s` (`n!` of them);
/// 2. conjugates of "forests fixing the top point, plus the constant map to
///    it" for each permutation (`n!` of them);
/// 3. the stabilizer of `j` adjoined with the constant map to `j` (`n`).
fn family_census(n: usize, trees: &[EndoFunction], forests: &[EndoFunction]) -> FamilyCensus {
    let top = n - 1;
    let fixing_top: Vec<EndoFunction> = forests
        .iter()
        .filter(|h| h.apply(top) == top)
        .cloned()
        .collect();
    let const_top = EndoFunction::constant(n, top);
    let id = EndoFunction::identity(n);

    let mut families: Vec<Vec<EndoFunction>> = Vec::new();
    for_each_permutation(n, |image| {
        let sigma = Permutation {
            image: image.to_vec(),
        };
        let mut with_id: Vec<EndoFunction> = vec![id.clone()];
        with_id.extend(trees.iter().map(|t| sigma.conjugate(t).expect("same n")));
        families.push(with_id);

        let mut pointed: Vec<EndoFunction> = fixing_top
            .iter()
            .map(|h| sigma.conjugate(h).expect("same n"))
            .collect();
        pointed.push(sigma.conjugate(&const_top).expect("same n"));
        families.push(pointed);
    });
    for j in 0..n {
        let mut stab: Vec<EndoFunction> = permutations(n)
            .filter(|p| p.apply(j) == j)
            .map(|p| p.to_endofunction())
            .collect();
        stab.push(EndoFunction::constant(n, j));
        families.push(stab);
    }

    let expected = 2 * factorial(n) + n as u64;
    let mut signatures: HashSet<Vec<u64>> = HashSet::new();
    for family in &families {
        let mut sig: Vec<u64> = family.iter().map(|f| key64(f.values())).collect();
        sig.sort_unstable();
        signatures.insert(sig);
    }

    let exhaustive = n <= 6;
    let all_closed = if exhaustive {
        families
            .iter()
            .all(|family| closure_of(family, true, n).closed)
    } else {
        // Base representatives; the conjugates are images under the
        // relabeling automorphism of the composition monoid.
        let mut base: Vec<Vec<EndoFunction>> = Vec::new();
        let mut first_tree = vec![id.clone()];
        first_tree.extend(trees.iter().cloned());
        base.push(first_tree);
        let mut pointed = fixing_top.clone();
        pointed.push(const_top.clone());
        base.push(pointed);
        for family in families[2 * factorial(n) as usize..].iter() {
            base.push(family.clone());
        }
        base.iter().all(|family| closure_of(family, true, n).closed)
    };

    FamilyCensus {
        expected,
        distinct: signatures.len() as u64,
        all_closed,
        closure_checked_exhaustively: exhaustive,
    }
}

/// Composes a sequence left to right (the last element is applied first);
/// the empty sequence is rejected.
pub fn compose_sequence(fns: &[EndoFunction]) -> Result<EndoFunction> {
    let (first, rest) = fns.split_first().ok_or(Error::EmptyDomain)?;
    rest.iter().try_fold(first.clone(), |acc, f| acc.compose(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_rank_anchors() {
        assert_eq!(Permutation::identity(4).lex_rank(), LexRank(0));
        assert_eq!(Permutation::complement(4).lex_rank(), LexRank(23));
        let p = Permutation::from_image(vec![1, 0, 2]).unwrap();
        assert_eq!(p.lex_rank(), LexRank(2));
    }

    #[test]
    fn lex_rank_matches_enumeration_order() {
        // Lexicographic enumeration of S_3 by image sequence.
        let expected: Vec<Vec<u8>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        let listed: Vec<Vec<u8>> = permutations(3).map(|p| p.image().to_vec()).collect();
        assert_eq!(listed, expected);
        for (rank, image) in expected.iter().enumerate() {
            let p = Permutation::from_image(image.clone()).unwrap();
            assert_eq!(p.lex_rank(), LexRank(rank as u64));
        }
    }

    #[test]
    fn lex_unrank_round_trip() {
        assert_eq!(
            Permutation::lex_unrank(LexRank(0), 5).unwrap(),
            Permutation::identity(5)
        );
        assert_eq!(
            Permutation::lex_unrank(LexRank(119), 5).unwrap(),
            Permutation::complement(5)
        );
        assert_eq!(
            Permutation::lex_unrank(LexRank(2), 3).unwrap(),
            Permutation::from_image(vec![1, 0, 2]).unwrap()
        );
        assert!(Permutation::lex_unrank(LexRank(120), 5).is_err());
        for n in 1..=5 {
            for r in 0..factorial(n) {
                let p = Permutation::lex_unrank(LexRank(r), n).unwrap();
                assert_eq!(p.lex_rank(), LexRank(r));
            }
        }
    }

    #[test]
    fn conjugation() {
        let path = EndoFunction::new(vec![0, 0, 1, 2]).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(id.conjugate(&path).unwrap(), path);

        // Worked four-vertex example: relabeling the path by s = [0,3,1,2]
        // renames edge (i, f(i)) to (s(i), s(f(i))).
        let sigma = Permutation::from_image(vec![0, 3, 1, 2]).unwrap();
        let conj = sigma.conjugate(&path).unwrap();
        let mut edges: Vec<(usize, usize)> = conj.edges().collect();
        edges.sort_unstable();
        assert_eq!(edges, vec![(0, 0), (1, 3), (2, 1), (3, 0)]);
        assert_eq!(conj.values(), &[0, 3, 1, 0]);

        let back = sigma.inverse().conjugate(&conj).unwrap();
        assert_eq!(back, path);
    }

    #[test]
    fn tree_and_forest_enumeration() {
        let trees: Vec<Vec<u8>> = tree_functions(3).map(|f| f.values().to_vec()).collect();
        assert_eq!(trees, vec![vec![0, 0, 0], vec![0, 0, 1]]);
        assert_eq!(tree_functions(1).count(), 1);
        assert_eq!(tree_functions(6).count(), 120);

        let forests: Vec<Vec<u8>> = forest_functions(2).map(|f| f.values().to_vec()).collect();
        assert_eq!(forests, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(forest_functions(1).count(), 1);
        assert_eq!(forest_functions(6).count(), 720);

        assert!(tree_functions(5).all(|f| f.is_tree_function()));
        assert!(forest_functions(5).all(|f| f.is_forest_function()));
        assert_eq!(all_functions(3).count(), 27);
    }

    #[test]
    fn closure_checks() {
        assert!(verify_closure(&Family::ForestMonoid, 4).unwrap().closed);
        assert!(verify_closure(&Family::TreeSemigroup, 5).unwrap().closed);
        assert!(
            verify_closure(&Family::NoOddPermutations, 4)
                .unwrap()
                .closed
        );
        let sigma = Permutation::from_image(vec![2, 0, 1, 3]).unwrap();
        assert!(
            verify_closure(&Family::ConjugatedForest(sigma), 4)
                .unwrap()
                .closed
        );
        assert!(verify_closure(&Family::NoOddPermutations, 6).is_err());

        // The odd permutations on their own are not closed.
        let odd: Vec<EndoFunction> = permutations(3)
            .filter(|p| !p.is_even())
            .map(|p| p.to_endofunction())
            .collect();
        let check = closure_of(&odd, false, 3);
        assert!(!check.closed);
        assert!(check.witness.is_some());
    }

    #[test]
    fn census_counts() {
        let c3 = census(3).unwrap();
        assert_eq!(c3.union_count, 21);
        assert_eq!(c3.cayley_formula, 21);
        assert!(c3.union_matches_formula);
        assert!(c3.lower_bound_families.is_none());

        let c4 = census(4).unwrap();
        assert_eq!(c4.forest_monoid_size, 24);
        assert_eq!(c4.tree_semigroup_size, 6);
        assert_eq!(c4.union_count, 148);
        assert_eq!(c4.cayley_formula, 148);
        assert!(c4.forest_closed && c4.tree_closed);
        let families = c4.lower_bound_families.unwrap();
        assert_eq!(families.expected, 52);
        assert_eq!(families.distinct, 52);
        assert!(families.all_closed);
        assert!(families.closure_checked_exhaustively);

        assert!(census(1).is_err());
        assert!(census(8).is_err());
    }

    #[test]
    fn conjugated_forest_monoids_distinct_and_closed() {
        // Distinct conjugators give distinct (but closed) monoids; the path
        // function's trivial automorphism group is what separates them.
        for n in 2..=5 {
            let mut signatures: HashSet<Vec<u64>> = HashSet::new();
            for sigma in permutations(n) {
                let check = verify_closure(&Family::ConjugatedForest(sigma.clone()), n).unwrap();
                assert!(check.closed);
                assert_eq!(check.size, factorial(n));
                let mut sig: Vec<u64> = forest_functions(n)
                    .map(|h| key64(sigma.conjugate(&h).unwrap().values()))
                    .collect();
                sig.sort_unstable();
                signatures.insert(sig);
            }
            assert_eq!(signatures.len() as u64, factorial(n));
        }
    }

    #[test]
    fn census_serialization_shape() {
        let json = serde_json::to_value(census(4).unwrap()).unwrap();
        assert_eq!(json["n"], 4);
        assert_eq!(json["forest_monoid_size"], 24);
        assert_eq!(json["union_count"], 148);
        assert_eq!(json["cayley_formula"], 148);
        assert_eq!(json["match"], true);
    }

    #[test]
    fn sequence_composition() {
        let trees: Vec<EndoFunction> = tree_functions(4).collect();
        let zero = EndoFunction::constant(4, 0);
        // Any three tree functions on four vertices compose to the constant.
        for a in &trees {
            for b in &trees {
                for c in &trees {
                    let comp = compose_sequence(&[a.clone(), b.clone(), c.clone()]).unwrap();
                    assert_eq!(comp, zero);
                }
            }
        }
    }
}
