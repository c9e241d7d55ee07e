//! Partitions and the rim combinatorics behind the characteristic-2 Mullineux
//! analogue.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction, so `()` is the unique empty partition.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A set of Young diagram nodes `(row, column)`, both 1-indexed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeSet {
    nodes: BTreeSet<(usize, usize)>,
}

impl NodeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, row: usize, col: usize) {
        self.nodes.insert((row, col));
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.nodes.contains(&(row, col))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes.iter().copied()
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.nodes.is_subset(&other.nodes)
    }

    /// Number of nodes in each of the rows `1..=rows`.
    pub fn row_counts(&self, rows: usize) -> Vec<usize> {
        let mut counts = vec![0; rows];
        for &(r, _) in &self.nodes {
            if r >= 1 && r <= rows {
                counts[r - 1] += 1;
            }
        }
        counts
    }
}

impl FromIterator<(usize, usize)> for NodeSet {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        NodeSet {
            nodes: iter.into_iter().collect(),
        }
    }
}

impl Partition {
    /// Builds a partition, trimming trailing zeros. Fails if the parts are not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Internal constructor for sequences already known to be partitions.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Vec<usize> {
        (0..self.first())
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect()
    }

    pub fn contains_node(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row - 1) >= col
    }

    /// Consecutive differences are at most 1, the last part counted against 0.
    pub fn is_two_restricted(&self) -> bool {
        (0..self.parts.len()).all(|i| self.part(i) - self.part(i + 1) <= 1)
    }

    fn require_two_restricted(&self) -> Result<()> {
        if self.is_two_restricted() {
            Ok(())
        } else {
            Err(Error::NotTwoRestricted(self.to_string()))
        }
    }

    /// Splits `λ = λ̄ + λ*` with `λ̄` 2-restricted and `λ*` even.
    ///
    /// Working from the last row up, each part of `λ̄` is forced: it equals
    /// the part below it, or one more, whichever has the parity of `λ_i`.
    pub fn restricted_even_decompose(&self) -> (Partition, Partition) {
        let len = self.parts.len();
        let mut restricted = vec![0usize; len];
        let mut below = 0usize;
        for i in (0..len).rev() {
            let step = (self.parts[i] + below) % 2;
            restricted[i] = below + step;
            below = restricted[i];
        }
        let even: Vec<usize> = self
            .parts
            .iter()
            .zip(&restricted)
            .map(|(p, r)| p - r)
            .collect();
        (
            Partition::from_sorted(restricted),
            Partition::from_sorted(even),
        )
    }

    /// `λ[m]`: drops the first `m` parts.
    pub fn truncate(&self, m: usize) -> Partition {
        Partition {
            parts: self.parts.iter().skip(m).copied().collect(),
        }
    }

    /// Nodes `(i, j) ∈ λ` with `(i + 1, j + 1) ∉ λ`.
    pub fn rim(&self) -> NodeSet {
        let cols = self.conjugate();
        (0..cols.len())
            .flat_map(|c| self.rim_rows(&cols, c).map(move |r| (r, c + 1)))
            .collect()
    }

    /// Rows (ascending) of the rim nodes in 0-indexed column `c`.
    fn rim_rows(&self, cols: &[usize], c: usize) -> std::ops::RangeInclusive<usize> {
        let next = cols.get(c + 1).copied().unwrap_or(0);
        next.max(1)..=cols[c]
    }

    /// Bottommost `k` rim nodes of 0-indexed column `c`.
    fn bottom_rim(&self, cols: &[usize], c: usize, k: usize) -> Vec<(usize, usize)> {
        let rows: Vec<usize> = self.rim_rows(cols, c).collect();
        let skip = rows.len().saturating_sub(k);
        rows[skip..].iter().map(|&r| (r, c + 1)).collect()
    }

    /// The bottommost (up to) two rim nodes of every column.
    pub fn two_rim(&self) -> Result<NodeSet> {
        self.require_two_restricted()?;
        let cols = self.conjugate();
        Ok((0..cols.len())
            .flat_map(|c| self.bottom_rim(&cols, c, 2))
            .collect())
    }

    /// The 4-segments of `λ`, left to right.
    ///
    /// Columns are scanned left to right. A segment starting at the last
    /// column takes its bottom (up to) four rim nodes. Otherwise a column with
    /// at least four rim nodes gives its bottom four; a shorter column gives
    /// its bottom two plus the bottom (up to) two of the next column, and the
    /// following segment starts two columns on.
    pub fn j_segments(&self) -> Result<Vec<NodeSet>> {
        self.require_two_restricted()?;
        let cols = self.conjugate();
        let ncols = cols.len();
        let mut out = Vec::new();
        let mut c = 0;
        while c < ncols {
            let count = self.rim_rows(&cols, c).count();
            if c + 1 == ncols {
                out.push(self.bottom_rim(&cols, c, 4).into_iter().collect());
                break;
            }
            if count >= 4 {
                out.push(self.bottom_rim(&cols, c, 4).into_iter().collect());
                c += 1;
            } else {
                let mut seg: NodeSet = self.bottom_rim(&cols, c, 2).into_iter().collect();
                seg.nodes.extend(self.bottom_rim(&cols, c + 1, 2));
                out.push(seg);
                c += 2;
            }
        }
        Ok(out)
    }

    /// The union of 4-segments `j(λ)`.
    pub fn j_set(&self) -> Result<NodeSet> {
        let mut out = NodeSet::new();
        for seg in self.j_segments()? {
            out.nodes.extend(seg.nodes);
        }
        Ok(out)
    }

    /// Removes a node set given as per-row counts from the ends of the rows.
    fn remove_counts(&self, counts: &[usize]) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(counts)
            .map(|(p, c)| p - c)
            .collect();
        Partition::from_sorted(parts)
    }

    /// `J(λ) = λ \ j(λ)`.
    #[allow(non_snake_case)]
    pub fn J(&self) -> Result<Partition> {
        let j = self.j_set()?;
        Ok(self.remove_counts(&j.row_counts(self.len())))
    }

    /// `[λ, J(λ), J²(λ), …, ()]`.
    pub fn j_chain(&self) -> Result<Vec<Partition>> {
        self.require_two_restricted()?;
        let mut chain = vec![self.clone()];
        let mut cur = self.clone();
        while !cur.is_empty() {
            cur = cur.J()?;
            chain.push(cur.clone());
        }
        Ok(chain)
    }

    /// No three consecutive equal odd parts.
    pub fn is_oddly_regular(&self) -> Result<bool> {
        self.require_two_restricted()?;
        Ok(!self
            .parts
            .windows(3)
            .any(|w| w[0] == w[1] && w[1] == w[2] && w[0] % 2 == 1))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Comma-separated parts, e.g. `4,3,3,1`. The empty partition is `""`, `"0"`
/// or `"()"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part `{}` in `{}`", p.trim(), s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `d`, in decreasing lexicographic order.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// All pairs `(λ, μ)` with `|λ| + 4|μ| = d`, ordered by `|μ|`, then `μ`, then
/// `λ` (each in decreasing lexicographic order).
pub fn enumerate_label_pairs(d: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for mu_size in 0..=d / 4 {
        for mu in enumerate_partitions(mu_size) {
            for lambda in enumerate_partitions(d - 4 * mu_size) {
                out.push((lambda, mu.clone()));
            }
        }
    }
    out
}
