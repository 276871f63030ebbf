//! Endofunctions on `Z_n` and their functional directed graphs.
//!
//! Every `f : Z_n -> Z_n` is stored as its value table. The associated graph
//! `G_f` has vertex set `Z_n` and one directed edge `i -> f(i)` per vertex;
//! each connected component contains exactly one cycle, and a fixed point
//! shows up as a loop edge.

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::monoid::Permutation;
use crate::{Error, Result};

/// A total map `Z_n -> Z_n`, the universal graph representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndoFunction {
    values: Vec<u8>,
}

impl EndoFunction {
    /// Builds a function from its value table. Fails on an empty table or an
    /// entry outside `[0, n)`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = values.len();
        for &v in &values {
            if usize::from(v) >= n {
                return Err(Error::ValueOutOfRange {
                    value: usize::from(v),
                    n,
                });
            }
        }
        Ok(Self { values })
    }

    /// The identity map on `Z_n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize + 1);
        Self {
            values: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// The map sending every point to `c`.
    pub fn constant(n: usize, c: usize) -> Self {
        assert!(n >= 1 && c < n);
        Self {
            values: vec![c as u8; n],
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        usize::from(self.values[i])
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// The edge set of `G_f`: one `(i, f(i))` per vertex, loops included.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).map(move |i| (i, self.apply(i)))
    }

    /// Pointwise composition `self(g(i))`.
    pub fn compose(&self, g: &EndoFunction) -> Result<EndoFunction> {
        if self.n() != g.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: g.n(),
            });
        }
        Ok(EndoFunction {
            values: (0..self.n()).map(|i| self.values[g.apply(i)]).collect(),
        })
    }

    /// The `k`-fold composition of `self` with itself; `k = 0` is the identity.
    ///
    /// Plain iteration for `k <= n`, repeated squaring above that.
    pub fn iterate(&self, k: usize) -> EndoFunction {
        let n = self.n();
        if k <= n {
            let mut out = EndoFunction::identity(n);
            for _ in 0..k {
                out = self.compose(&out).expect("same dimension");
            }
            return out;
        }
        let mut out = EndoFunction::identity(n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = base.compose(&out).expect("same dimension");
            }
            base = base.compose(&base).expect("same dimension");
            k >>= 1;
        }
        out
    }

    /// True iff `f(0) = 0` and `f(i) < i` for all `i >= 1`; the graph is then
    /// a rooted tree, edges toward the root, plus the root loop.
    pub fn is_tree_function(&self) -> bool {
        self.apply(0) == 0 && (1..self.n()).all(|i| self.apply(i) < i)
    }

    /// True iff `f(i) <= i` for all `i`; the graph is then a spanning union of
    /// disjoint functional trees.
    pub fn is_forest_function(&self) -> bool {
        (0..self.n()).all(|i| self.apply(i) <= i)
    }

    /// True iff the image of the `(n-1)`-st iterate is a single point, i.e.
    /// every vertex eventually falls into one common fixed point.
    pub fn has_attractive_fixed_point(&self) -> bool {
        let collapsed = self.iterate(self.n() - 1);
        let first = collapsed.apply(0);
        (1..self.n()).all(|i| collapsed.apply(i) == first)
    }

    /// Cycle and component structure of `G_f`.
    pub fn summarize(&self) -> FunctionalGraphSummary {
        let n = self.n();
        // 0 = unvisited, 1 = on the current walk, 2 = finished.
        let mut state = vec![0u8; n];
        let mut cycle_lengths = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                path.push(v);
                v = self.apply(v);
            }
            if state[v] == 1 {
                // v is on the current walk: the tail from v closes a new cycle.
                let pos = path.iter().position(|&u| u == v).expect("on walk");
                cycle_lengths.push(path.len() - pos);
            }
            for u in path {
                state[u] = 2;
            }
        }
        cycle_lengths.sort_unstable();
        let loops = (0..n).filter(|&i| self.apply(i) == i).count();
        let order_lcm = cycle_lengths.iter().fold(1usize, |acc, &l| acc.lcm(&l));
        FunctionalGraphSummary {
            component_count: cycle_lengths.len(),
            cycle_lengths,
            loops,
            order_lcm,
        }
    }

    /// The signed incidence matrix `A_{G_f} - I`.
    pub fn signed_incidence(&self) -> SignedIncidenceMatrix {
        let n = self.n();
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            let j = self.apply(i);
            if j != i {
                entries[i * n + j] += 1;
                entries[i * n + i] -= 1;
            }
        }
        SignedIncidenceMatrix { n, entries }
    }

    /// The label-difference vector of the relabeled graph: entry `i` is
    /// `s(f(s^{-1}(i))) - i`, i.e. the signed incidence matrix of
    /// `s f s^{-1}` applied to `(0, 1, ..., n-1)`.
    pub fn label_differences(&self, sigma: &Permutation) -> Result<Vec<i64>> {
        if self.n() != sigma.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: sigma.n(),
            });
        }
        let inv = sigma.inverse();
        Ok((0..self.n())
            .map(|i| sigma.apply(self.apply(inv.apply(i))) as i64 - i as i64)
            .collect())
    }

    /// GraphViz rendering of `G_f`, one edge per vertex, loop included.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph g {\n");
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -> {j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for EndoFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            f: &'a [u8],
        }
        Repr {
            n: self.n(),
            f: &self.values,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EndoFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            f: Vec<u8>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.n != repr.f.len() {
            return Err(D::Error::custom(format!(
                "declared n = {} but value table has length {}",
                repr.n,
                repr.f.len()
            )));
        }
        EndoFunction::new(repr.f).map_err(D::Error::custom)
    }
}

/// Cycle statistics of a functional graph. Each component contains exactly
/// one cycle, so `component_count == cycle_lengths.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctionalGraphSummary {
    pub component_count: usize,
    /// Sorted multiset of cycle lengths.
    pub cycle_lengths: Vec<usize>,
    /// Number of fixed points (loop edges).
    pub loops: usize,
    /// LCM of the cycle lengths; iterating that many times turns every cycle
    /// into fixed points.
    pub order_lcm: usize,
}

/// Dense integer matrix `A_{G_f} - I`: row `i` has `+1` at column `f(i)` and
/// `-1` at column `i` when `f(i) != i`, and is all zero otherwise. Every row
/// sums to zero, so the all-ones vector is always in the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedIncidenceMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SignedIncidenceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// Rank over the rationals, by fraction-free (Bareiss) elimination.
    /// The kernel is exactly the span of the all-ones vector iff this is n-1.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut rank = 0;
        let mut prev: i128 = 1;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(rank, p);
            let pivot_row = a[rank].clone();
            let pivot = pivot_row[col];
            for row in a.iter_mut().skip(rank + 1) {
                let factor = row[col];
                for (cell, &p_cell) in row.iter_mut().zip(&pivot_row) {
                    *cell = (*cell * pivot - p_cell * factor) / prev;
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}
