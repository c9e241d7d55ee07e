//! Exact linear algebra over F₂ on packed bit vectors.

use std::fmt;

/// A fixed-length vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "[{s}]")
    }
}

/// An incrementally built row-echelon basis, keyed by pivot column.
///
/// Invariant: each stored row has its pivot set and is zero at the pivots of
/// all earlier rows, so reducing in insertion order is exact.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in place; returns whether it became zero.
    pub fn reduce(&self, v: &mut BitVec) -> bool {
        for (p, row) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        v.is_zero()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len, "length mismatch");
        if self.reduce(&mut v) {
            return false;
        }
        let p = v.first_one().expect("nonzero");
        self.rows.push((p, v));
        true
    }
}

/// Rank of a list of vectors of equal length.
pub fn rank(vectors: &[BitVec]) -> usize {
    let Some(len) = vectors.first().map(BitVec::len) else { return 0 };
    let mut e = Echelon::new(len);
    vectors.iter().filter(|v| e.insert((*v).clone())).count()
}

/// A basis of `{c ∈ F₂^k : Σ c_i images[i] = 0}` for a linear map given by
/// the images of the `k` basis vectors, each of length `codim`.
pub fn kernel_of_images(images: &[BitVec], codim: usize) -> Vec<BitVec> {
    let k = images.len();
    let mut pivots: Vec<(usize, BitVec, BitVec)> = Vec::new();
    let mut kernel = Vec::new();
    for (i, img) in images.iter().enumerate() {
        assert_eq!(img.len(), codim, "image length mismatch");
        let mut v = img.clone();
        let mut tag = BitVec::unit(k, i);
        for (p, row, row_tag) in &pivots {
            if v.get(*p) {
                v.xor_assign(row);
                tag.xor_assign(row_tag);
            }
        }
        match v.first_one() {
            None => kernel.push(tag),
            Some(p) => pivots.push((p, v, tag)),
        }
    }
    kernel
}

/// Reduced row echelon form of `rows`, dropping zero rows.
pub fn rref(rows: &[BitVec]) -> Vec<BitVec> {
    let mut m: Vec<BitVec> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let Some(len) = m.first().map(BitVec::len) else { return m };
    let mut r = 0;
    for col in 0..len {
        let Some(pr) = (r..m.len()).find(|&i| m[i].get(col)) else { continue };
        m.swap(r, pr);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}
