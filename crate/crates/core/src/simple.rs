//! Simple (permutation) braids and the two transfer operations.
//!
//! For simple braids `a`, `b` the movable part of `a` is the permutation
//! `m` with `R_m = aR_a ∧ ¬R_b`: the largest bottom piece of `a` that
//! still multiplies into `b` without any strand pair crossing twice.
//! Moving it gives `a·b = (a·m)·(m⁻¹·b)`; the two factors are written
//! `a ≍ b` ([`head_op`]) and `a ⋈ b` ([`tail_op`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{same_n, BraidError, Result};
use crate::lattice::InversionSet;
use crate::perm::Permutation;

/// A positive braid in which any two strands cross at most once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleBraid {
    perm: Permutation,
    inv: InversionSet,
}

impl SimpleBraid {
    pub fn new(perm: Permutation) -> Self {
        let inv = InversionSet::of(&perm);
        Self { perm, inv }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        Ok(Self::new(Permutation::from_images(images)?))
    }

    pub fn from_inversions(inv: InversionSet) -> Self {
        Self {
            perm: inv.permutation(),
            inv,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Permutation::identity(n))
    }

    /// `Ω`: every pair of strands crosses once.
    pub fn omega(n: usize) -> Self {
        Self::new(Permutation::omega(n))
    }

    /// The Artin generator `σ_i`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::new(Permutation::adjacent_transposition(n, i)?))
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn inv(&self) -> &InversionSet {
        &self.inv
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.inv.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inv.is_empty()
    }

    /// Same as [`is_identity`](Self::is_identity).
    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn is_omega(&self) -> bool {
        self.len() == self.n() * (self.n() - 1) / 2
    }

    /// Crossings labelled by bottom positions, `aR_a = R_{a⁻¹}`.
    pub fn star(&self) -> InversionSet {
        InversionSet::new_unchecked(self.perm.act_unchecked(self.inv.pairs()))
    }

    pub fn inverse_perm(&self) -> SimpleBraid {
        Self::new(self.perm.inverse())
    }

    /// Image under `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> Self {
        Self::new(self.perm.flip())
    }

    /// `a·b` when it is again simple, i.e. no strand pair crosses in both.
    pub fn product_in_d(&self, other: &Self) -> Result<Option<Self>> {
        same_n(self.n(), other.n())?;
        if self.star().pairs().is_disjoint(other.inv.pairs()) {
            Ok(Some(Self::new(self.perm.then(&other.perm))))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Debug for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm, f)
    }
}

impl fmt::Display for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm, f)
    }
}

impl From<Permutation> for SimpleBraid {
    fn from(perm: Permutation) -> Self {
        Self::new(perm)
    }
}

impl Serialize for SimpleBraid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.perm.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleBraid {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        SimpleBraid::from_images(&images).map_err(serde::de::Error::custom)
    }
}

/// Result of moving the movable part of `a` into `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    /// The moved piece.
    pub moved: Permutation,
    /// `a ≍ b`
    pub head: SimpleBraid,
    /// `a ⋈ b`
    pub tail: SimpleBraid,
}

impl Transfer {
    pub fn is_trivial(&self) -> bool {
        self.moved.is_identity()
    }
}

pub fn transfer(a: &SimpleBraid, b: &SimpleBraid) -> Result<Transfer> {
    same_n(a.n(), b.n())?;
    Ok(transfer_unchecked(a, b))
}

pub(crate) fn transfer_unchecked(a: &SimpleBraid, b: &SimpleBraid) -> Transfer {
    let movable = a.star().meet_unchecked(&b.inv.complement());
    if movable.is_empty() {
        return Transfer {
            moved: Permutation::identity(a.n()),
            head: a.clone(),
            tail: b.clone(),
        };
    }
    let moved = movable.permutation();
    let head = SimpleBraid::new(a.perm.then(&moved));
    let tail = SimpleBraid::new(moved.inverse().then(&b.perm));
    Transfer { moved, head, tail }
}

/// `a ≍ b`
pub fn head_op(a: &SimpleBraid, b: &SimpleBraid) -> Result<SimpleBraid> {
    Ok(transfer(a, b)?.head)
}

/// `a ⋈ b`
pub fn tail_op(a: &SimpleBraid, b: &SimpleBraid) -> Result<SimpleBraid> {
    Ok(transfer(a, b)?.tail)
}

/// No crossing of `a` can move into `b`: `aR_a ∧ ¬R_b = ∅`.
pub fn is_normal_pair(a: &SimpleBraid, b: &SimpleBraid) -> Result<bool> {
    same_n(a.n(), b.n())?;
    Ok(is_normal_pair_unchecked(a, b))
}

pub(crate) fn is_normal_pair_unchecked(a: &SimpleBraid, b: &SimpleBraid) -> bool {
    // A nonempty inversion set always holds some adjacent pair (i,i+1), and
    // {(i,i+1)} is itself an inversion set, so the meet is empty exactly
    // when the intersection has no adjacent pair.
    let star = a.star();
    let not_b = b.inv.complement();
    let both = star.pairs().intersection(not_b.pairs());
    (1..a.n()).all(|j| !both.contains_zero_based(j - 1, j))
}

/// Checks the two set identities for `a ≍ b` and `(a ⋈ b)*` that hold
/// whenever the movable part is nontrivial:
/// `R_{a≍b} = R_a ∩ a⁻¹R_b` and `(R_{a⋈b})* = bR_b ∪ b·aR_a`.
pub fn head_set_identity_check(a: &SimpleBraid, b: &SimpleBraid) -> Result<bool> {
    let t = transfer(a, b)?;
    if t.is_trivial() {
        return Err(BraidError::Precondition(
            "the movable part of the left factor is trivial".into(),
        ));
    }
    let a_inv = a.perm.inverse();
    let head_set = a.inv.pairs().intersection(&a_inv.act_unchecked(b.inv.pairs()));
    let tail_star = b.star().pairs().union(&b.perm.act_unchecked(a.star().pairs()));
    Ok(t.head.inv.pairs() == &head_set && t.tail.star().pairs() == &tail_star)
}

/// `x` is a head of `a`: `a = x·y` with lengths adding.
pub fn is_head(x: &SimpleBraid, a: &SimpleBraid) -> Result<bool> {
    same_n(x.n(), a.n())?;
    Ok(x.inv.leq(&a.inv))
}

/// `x` is a tail of `a`: `a = y·x` with lengths adding.
pub fn is_tail(x: &SimpleBraid, a: &SimpleBraid) -> Result<bool> {
    same_n(x.n(), a.n())?;
    Ok(x.star().leq(&a.star()))
}

/// One disagreement found by [`commuting_characterization_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutingCounterexample {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// `a ≍ b = b` with `a ≠ b`.
    pub head_is_right_factor: bool,
    /// `b² = 1` and `a` commutes with `b`.
    pub commuting_involution: bool,
}

/// Compares `a ≍ b = b ≠ a` with "`a = x·b` where `x·b = b·x` and
/// `b² = 1`" over all ordered pairs `a ≠ b` in `S_n`. Returns the pairs on
/// which the two sides disagree.
pub fn commuting_characterization_check(n: usize) -> Result<Vec<CommutingCounterexample>> {
    if n > 5 {
        return Err(BraidError::TooManyStrands { n, max: 5 });
    }
    let all: Vec<SimpleBraid> = Permutation::all(n).map(SimpleBraid::new).collect();
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a == b {
                continue;
            }
            let lhs = transfer_unchecked(a, b).head == *b;
            // x = a·b⁻¹; x·b = b·x reduces to a·b = b·a.
            let ab = a.perm.then(&b.perm);
            let ba = b.perm.then(&a.perm);
            let rhs = b.perm.then(&b.perm).is_identity() && ab == ba;
            if lhs != rhs {
                out.push(CommutingCounterexample {
                    a: a.perm.one_line(),
                    b: b.perm.one_line(),
                    head_is_right_factor: lhs,
                    commuting_involution: rhs,
                });
            }
        }
    }
    Ok(out)
}
