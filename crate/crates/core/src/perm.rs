//! Permutations of `{1..n}`, sets of strand pairs, and the translation
//! between a permutation and its inversion set.
//!
//! Composition is written left to right: `p.compose(&q)` applies `p`
//! first, so `(p·q)(i) = q(p(i))`. This is the order in which braid
//! factors are stacked top to bottom, so the permutation of a product of
//! braids is the product of their permutations.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use smallvec::SmallVec;

use crate::error::{same_n, BraidError, Result};

/// A bijection of `{1..n}`.
///
/// Images are stored zero-based; every public accessor is one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: SmallVec<[u32; 16]>,
}

impl Permutation {
    /// Build from one-line notation (one-based images).
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(BraidError::TooFewStrands { n, min: 1 });
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::NotABijection {
                    n,
                    images: images.to_vec(),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: images.iter().map(|&v| (v - 1) as u32).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations need at least one point");
        Self {
            images: (0..n as u32).collect(),
        }
    }

    /// The order-reversing permutation `i ↦ n+1-i`.
    pub fn omega(n: usize) -> Self {
        assert!(n >= 1, "permutations need at least one point");
        Self {
            images: (0..n as u32).rev().collect(),
        }
    }

    /// The transposition `s_i = (i, i+1)`, `1 ≤ i ≤ n-1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(BraidError::IndexOutOfRange { index: i, n });
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// Uniformly random permutation.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut p = Self::identity(n);
        p.images.shuffle(rng);
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `π(i)`, one-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-line notation, one-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self · other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        same_n(self.n(), other.n())?;
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut out: SmallVec<[u32; 16]> = SmallVec::from_elem(0, self.n());
        for (i, &v) in self.images.iter().enumerate() {
            out[v as usize] = i as u32;
        }
        Self { images: out }
    }

    /// Conjugation by `ω`; on braids this is `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let last = self.n() as u32 - 1;
        Self {
            images: self.images.iter().rev().map(|&v| last - v).collect(),
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for j in 0..self.n() {
            for i in 0..j {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `{(i,j) : i<j, π(i)>π(j)}`.
    pub fn inversion_set(&self) -> PairSet {
        let n = self.n();
        let mut set = PairSet::empty(n);
        for j in 1..n {
            let vj = self.images[j];
            for i in 0..j {
                if self.images[i] > vj {
                    set.insert_zero_based(i, j);
                }
            }
        }
        set
    }

    /// Image of a pair set: each `(i,j)` goes to `(π(i), π(j))` reordered.
    pub fn act_on_pairs(&self, set: &PairSet) -> Result<PairSet> {
        same_n(self.n(), set.n())?;
        Ok(self.act_unchecked(set))
    }

    pub(crate) fn act_unchecked(&self, set: &PairSet) -> PairSet {
        let mut out = PairSet::empty(set.n());
        for (i, j) in set.iter_zero_based() {
            let a = self.images[i] as usize;
            let b = self.images[j] as usize;
            out.insert_zero_based(a.min(b), a.max(b));
        }
        out
    }

    /// Rebuild the permutation whose inversion set is `set`.
    ///
    /// Uses `π(i) = 1 + #{j>i : (i,j)∈S} + #{j<i : (j,i)∉S}`, which counts
    /// the points that `π` sends below `π(i)`.
    pub fn from_inversions(set: &PairSet) -> Result<Self> {
        if !set.is_inversion_set() {
            return Err(BraidError::InvalidInversionSet);
        }
        Ok(Self::from_inversions_unchecked(set))
    }

    pub(crate) fn from_inversions_unchecked(set: &PairSet) -> Self {
        let n = set.n();
        let mut images: SmallVec<[u32; 16]> = SmallVec::from_elem(0, n);
        for (i, slot) in images.iter_mut().enumerate() {
            let mut below = 0u32;
            for j in 0..n {
                if (j > i && set.contains_zero_based(i, j)) || (j < i && !set.contains_zero_based(j, i)) {
                    below += 1;
                }
            }
            *slot = below;
        }
        debug_assert!(is_bijection(&images), "{set} is not an inversion set");
        Self { images }
    }

    /// All permutations of `{1..n}` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some(Self::identity(n));
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.images.clone();
            if next_lexicographic(&mut succ) {
                next = Some(Self { images: succ });
            }
            Some(current)
        })
    }
}

fn is_bijection(images: &[u32]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&v| {
        let v = v as usize;
        v < seen.len() && !std::mem::replace(&mut seen[v], true)
    })
}

fn next_lexicographic(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One-line notation, `[3 1 2]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

/// A pair of strands `(i, j)` with `1 ≤ i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub i: usize,
    pub j: usize,
}

impl Pair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(BraidError::Precondition(format!(
                "pair ({i},{j}) must satisfy 1 <= i < j"
            )));
        }
        Ok(Self { i, j })
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[inline]
fn slot(i: usize, j: usize) -> usize {
    // zero-based i < j; slot of the one-based pair (i+1, j+1) is
    // j(j-1)/2 + i
    j * (j - 1) / 2 + i
}

#[inline]
fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A set of strand pairs for a fixed `n`, stored as a bit array with one
/// slot per pair. Pair `(i,j)` lives in slot `(j-1)(j-2)/2 + (i-1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    n: usize,
    bits: SmallVec<[u64; 2]>,
}

impl PairSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            bits: SmallVec::from_elem(0, slot_count(n).div_ceil(64)),
        }
    }

    /// Every pair; the crossing set of `Ω`.
    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        let slots = slot_count(n);
        for (w, word) in set.bits.iter_mut().enumerate() {
            let used = (slots - w * 64).min(64);
            *word = if used == 64 { u64::MAX } else { (1u64 << used) - 1 };
        }
        set
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = Self::empty(n);
        for (i, j) in pairs {
            if i == 0 || i >= j || j > n {
                return Err(BraidError::Precondition(format!(
                    "pair ({i},{j}) is not valid for {n} strands"
                )));
            }
            set.insert_zero_based(i - 1, j - 1);
        }
        Ok(set)
    }

    /// Subset of all pairs selected by the low bits of `mask`, in slot
    /// order. Used for exhaustive sweeps over small `n`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut set = Self::empty(n);
        if !set.bits.is_empty() {
            set.bits[0] = mask & Self::full(n).bits[0];
        }
        set
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// First 64 slots as a bit mask; the whole set when `n ≤ 11`.
    pub(crate) fn low_word(&self) -> u64 {
        self.bits.first().copied().unwrap_or(0)
    }

    pub fn slot_count(&self) -> usize {
        slot_count(self.n)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, pair: Pair) -> bool {
        pair.j <= self.n && self.contains_zero_based(pair.i - 1, pair.j - 1)
    }

    pub fn insert(&mut self, pair: Pair) {
        assert!(pair.j <= self.n, "pair {pair} out of range for n={}", self.n);
        self.insert_zero_based(pair.i - 1, pair.j - 1);
    }

    pub fn remove(&mut self, pair: Pair) {
        if pair.j <= self.n {
            self.remove_zero_based(pair.i - 1, pair.j - 1);
        }
    }

    #[inline]
    pub(crate) fn contains_zero_based(&self, i: usize, j: usize) -> bool {
        let s = slot(i, j);
        self.bits[s / 64] >> (s % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert_zero_based(&mut self, i: usize, j: usize) {
        let s = slot(i, j);
        self.bits[s / 64] |= 1 << (s % 64);
    }

    #[inline]
    pub(crate) fn remove_zero_based(&mut self, i: usize, j: usize) {
        let s = slot(i, j);
        self.bits[s / 64] &= !(1 << (s % 64));
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Complement within the full pair set.
    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & b == 0)
    }

    /// Pairs in slot order (ascending `j`, then ascending `i`).
    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.iter_zero_based().map(|(i, j)| Pair { i: i + 1, j: j + 1 })
    }

    pub(crate) fn iter_zero_based(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| {
            (0..j).filter_map(move |i| self.contains_zero_based(i, j).then_some((i, j)))
        })
    }

    /// Pairs sorted by first coordinate, then second.
    pub fn sorted_pairs(&self) -> Vec<Pair> {
        let mut pairs: Vec<Pair> = self.iter().collect();
        pairs.sort_unstable();
        pairs
    }

    /// Lemma-style validity test: the set is transitive (`(i,j),(j,k) ⇒
    /// (i,k)`) and its complement is transitive too, which is the same as
    /// `(i,k) ⇒ (i,j) or (j,k)` for every `i<j<k`.
    pub fn is_inversion_set(&self) -> bool {
        let rows = Rows::from_pairs(self);
        if !rows.is_transitive() {
            return false;
        }
        Rows::from_pairs(&self.complement()).is_transitive()
    }

    /// `R_{p·q} = (p⁻¹ R_q) △ R_p`, given `R_p`, `p` and `R_q`.
    pub fn compose_via_inversions(r1: &PairSet, p1: &Permutation, r2: &PairSet) -> Result<PairSet> {
        same_n(r1.n, p1.n())?;
        same_n(r1.n, r2.n)?;
        Ok(p1.inverse().act_unchecked(r2).symmetric_difference(r1))
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Deg-lex listing, `{(1,2),(1,4)}`.
impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.sorted_pairs().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Upper-triangular adjacency rows: row `i` holds bit `j` for `(i,j)`,
/// zero-based. Closure and transitivity checks are row-parallel here.
pub(crate) struct Rows {
    n: usize,
    words: usize,
    data: SmallVec<[u64; 16]>,
}

impl Rows {
    pub(crate) fn from_pairs(set: &PairSet) -> Self {
        let n = set.n;
        let words = n.div_ceil(64).max(1);
        let mut rows = Self {
            n,
            words,
            data: SmallVec::from_elem(0, n * words),
        };
        for (i, j) in set.iter_zero_based() {
            rows.data[i * words + j / 64] |= 1 << (j % 64);
        }
        rows
    }

    pub(crate) fn to_pairs(&self) -> PairSet {
        let mut set = PairSet::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) {
                    set.insert_zero_based(i, j);
                }
            }
        }
        set
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn is_transitive(&self) -> bool {
        let w = self.words;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) {
                    let (ri, rj) = (&self.data[i * w..(i + 1) * w], &self.data[j * w..(j + 1) * w]);
                    if ri.iter().zip(rj).any(|(&a, &b)| b & !a != 0) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Warshall closure. Row `k` only holds columns above `k`, so the
    /// update `row_i |= row_k` for each `(i,k)` is all that is needed.
    pub(crate) fn close_transitively(&mut self) {
        let w = self.words;
        for k in 1..self.n {
            for i in 0..k {
                if self.get(i, k) {
                    for t in 0..w {
                        let v = self.data[k * w + t];
                        self.data[i * w + t] |= v;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    fn pairs(n: usize, v: &[(usize, usize)]) -> PairSet {
        PairSet::from_pairs(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn identity_and_omega() {
        assert_eq!(Permutation::identity(3).one_line(), vec![1, 2, 3]);
        assert_eq!(Permutation::identity(1).one_line(), vec![1]);
        assert!(Permutation::identity(6).inversion_set().is_empty());
        assert_eq!(Permutation::omega(6).one_line(), vec![6, 5, 4, 3, 2, 1]);
        assert_eq!(Permutation::omega(2).one_line(), vec![2, 1]);
        let w = Permutation::omega(5);
        assert!(w.then(&w).is_identity());
    }

    #[test]
    fn transpositions() {
        assert_eq!(Permutation::adjacent_transposition(3, 1).unwrap().one_line(), vec![2, 1, 3]);
        assert_eq!(Permutation::adjacent_transposition(3, 2).unwrap().one_line(), vec![1, 3, 2]);
        assert!(Permutation::adjacent_transposition(3, 3).is_err());
        assert!(Permutation::adjacent_transposition(3, 0).is_err());
        let s1 = Permutation::adjacent_transposition(3, 1).unwrap();
        assert_eq!(s1.inversion_set(), pairs(3, &[(1, 2)]));
    }

    #[test]
    fn compose_examples() {
        let a = perm(&[3, 1, 7, 8, 4, 5, 2, 6]);
        let x = perm(&[2, 7, 1, 3, 4, 8, 5, 6]);
        assert_eq!(a.compose(&x).unwrap().one_line(), vec![1, 2, 5, 6, 3, 4, 7, 8]);
        assert_eq!(a.compose(&Permutation::identity(8)).unwrap(), a);
        let s1 = Permutation::adjacent_transposition(3, 1).unwrap();
        let s2 = Permutation::adjacent_transposition(3, 2).unwrap();
        assert_eq!(s1.compose(&s2).unwrap().one_line(), vec![3, 1, 2]);
        assert!(matches!(
            s1.compose(&Permutation::identity(4)),
            Err(BraidError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm(&[3, 1, 7, 8, 4, 5, 2, 6]).inverse().one_line(), vec![2, 7, 1, 5, 6, 8, 3, 4]);
        assert_eq!(perm(&[2, 7, 1, 3, 4, 8, 5, 6]).inverse().one_line(), vec![3, 1, 4, 5, 7, 8, 2, 6]);
        assert!(Permutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn flip_examples() {
        let s1 = Permutation::adjacent_transposition(3, 1).unwrap();
        let s2 = Permutation::adjacent_transposition(3, 2).unwrap();
        assert_eq!(s1.flip(), s2);
        let w = Permutation::omega(3);
        assert_eq!(s1.flip(), w.then(&s1).then(&w));
        assert_eq!(w.flip(), w);
        for p in Permutation::all(4) {
            assert_eq!(p.flip().flip(), p);
        }
    }

    #[test]
    fn act_on_pairs_examples() {
        let pi = perm(&[4, 2, 6, 1, 5, 3]);
        let r = pi.inversion_set();
        let expected = pairs(6, &[(1, 2), (1, 4), (1, 6), (2, 4), (3, 4), (3, 5), (3, 6), (5, 6)]);
        assert_eq!(pi.act_on_pairs(&r).unwrap(), expected);
        assert_eq!(Permutation::identity(6).act_on_pairs(&r).unwrap(), r);
        let w = Permutation::omega(3);
        assert_eq!(w.act_on_pairs(&pairs(3, &[(1, 2)])).unwrap(), pairs(3, &[(2, 3)]));
    }

    #[test]
    fn inversion_set_examples() {
        let pi = perm(&[4, 2, 6, 1, 5, 3]);
        let expected = pairs(6, &[(1, 2), (1, 4), (1, 6), (2, 4), (3, 4), (3, 5), (3, 6), (5, 6)]);
        assert_eq!(pi.inversion_set(), expected);
        assert_eq!(Permutation::omega(4).inversion_set(), PairSet::full(4));
        assert_eq!(PairSet::full(4).len(), 6);
    }

    #[test]
    fn validity_examples() {
        let s = pairs(6, &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5)]);
        assert!(!s.is_inversion_set());
        assert!(PairSet::empty(6).is_inversion_set());
        assert!(!pairs(3, &[(1, 2), (2, 3)]).is_inversion_set());
    }

    #[test]
    fn reconstruction_examples() {
        let s = pairs(8, &[(1, 3), (2, 3), (2, 4), (2, 5), (2, 7), (2, 8), (6, 7), (6, 8)]);
        assert_eq!(Permutation::from_inversions(&s).unwrap().one_line(), vec![2, 7, 1, 3, 4, 8, 5, 6]);
        assert!(Permutation::from_inversions(&PairSet::empty(5)).unwrap().is_identity());
        assert_eq!(
            Permutation::from_inversions(&pairs(3, &[(1, 2)])).unwrap().one_line(),
            vec![2, 1, 3]
        );
        assert!(matches!(
            Permutation::from_inversions(&pairs(3, &[(1, 2), (2, 3)])),
            Err(BraidError::InvalidInversionSet)
        ));
    }

    #[test]
    fn compose_via_inversions_examples() {
        let s1 = Permutation::adjacent_transposition(3, 1).unwrap();
        let s2 = Permutation::adjacent_transposition(3, 2).unwrap();
        let r = PairSet::compose_via_inversions(&s1.inversion_set(), &s1, &s2.inversion_set()).unwrap();
        assert_eq!(r, pairs(3, &[(1, 2), (1, 3)]));
        assert_eq!(r, perm(&[3, 1, 2]).inversion_set());

        let q = perm(&[3, 5, 4, 2, 6, 1]);
        let p = q.inverse();
        let r = PairSet::compose_via_inversions(&p.inversion_set(), &p, &q.inversion_set()).unwrap();
        assert!(r.is_empty());

        let id = Permutation::identity(6);
        let r = PairSet::compose_via_inversions(&id.inversion_set(), &id, &q.inversion_set()).unwrap();
        assert_eq!(r, q.inversion_set());
    }

    #[test]
    fn bijection_errors() {
        assert!(Permutation::from_images(&[1, 1, 3]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(5).count(), 120);
    }

    #[test]
    fn full_set_for_large_n() {
        let w = Permutation::omega(20);
        assert_eq!(w.inversion_set(), PairSet::full(20));
        assert_eq!(PairSet::full(20).len(), 190);
        assert!(PairSet::full(20).is_inversion_set());
    }

    #[test]
    fn slot_layout() {
        // (1,2) -> 0, (1,3) -> 1, (2,3) -> 2, (1,4) -> 3
        let s = PairSet::from_mask(4, 0b1000);
        assert_eq!(s.sorted_pairs(), vec![Pair { i: 1, j: 4 }]);
        let s = PairSet::from_mask(4, 0b0100);
        assert_eq!(s.sorted_pairs(), vec![Pair { i: 2, j: 3 }]);
    }
}
