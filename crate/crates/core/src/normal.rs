//! Greedy normal forms.
//!
//! A word of simple braids is in (right-)greedy normal form when no
//! adjacent pair admits a transfer: every crossing has been pushed as far
//! right as it can go, so the last factor is the maximal simple tail of
//! the whole braid. Identity factors are dropped. `Ω` factors can only be
//! followed by `Ω`, so they collect at the right end; the group form moves
//! them to the front as a power of `Ω` using `x·Ω = Ω·flip(x)`.

use serde::{Deserialize, Serialize};

use crate::error::{same_n, BraidError, Result};
use crate::perm::Permutation;
use crate::simple::{is_normal_pair_unchecked, transfer_unchecked, SimpleBraid};
use crate::text::{ArtinWord, Token};

/// A finite sequence of simple braids on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveWord {
    n: usize,
    letters: Vec<SimpleBraid>,
}

impl PositiveWord {
    pub fn new(n: usize, letters: Vec<SimpleBraid>) -> Result<Self> {
        for l in &letters {
            same_n(n, l.n())?;
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, letters: Vec::new() }
    }

    /// Word of Artin generators `σ_{i_1} σ_{i_2} …`.
    pub fn from_generators(n: usize, indices: &[usize]) -> Result<Self> {
        let letters = indices
            .iter()
            .map(|&i| SimpleBraid::generator(n, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[SimpleBraid] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Image in the symmetric group.
    pub fn permutation(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.n), |acc, l| acc.then(l.perm()))
    }

    /// Total number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.letters.iter().map(SimpleBraid::len).sum()
    }

    /// `Σ_i (ℓ - i)·|x_i|` (one-based `i`); bounds the number of rewrites.
    pub fn potential(&self) -> usize {
        let len = self.letters.len();
        self.letters
            .iter()
            .enumerate()
            .map(|(k, l)| (len - 1 - k) * l.len())
            .sum()
    }
}

impl From<PositiveNormalForm> for PositiveWord {
    fn from(nf: PositiveNormalForm) -> Self {
        Self {
            n: nf.n,
            letters: nf.factors,
        }
    }
}

/// Greedy normal form of a positive braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PositiveNormalForm {
    n: usize,
    factors: Vec<SimpleBraid>,
}

impl PositiveNormalForm {
    pub fn identity(n: usize) -> Self {
        Self { n, factors: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Last factor: the maximal simple tail of the braid.
    pub fn last(&self) -> SimpleBraid {
        self.factors
            .last()
            .cloned()
            .unwrap_or_else(|| SimpleBraid::identity(self.n))
    }

    fn strip_identities(mut self) -> Self {
        self.factors.retain(|f| !f.is_identity());
        self
    }
}

/// Canonical form `Ω^m · x_1 ⋯ x_k` of a braid group element; the `x_i`
/// form a greedy normal form without any `Ω` factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupNormalForm {
    pub n: usize,
    pub delta_power: i64,
    pub factors: Vec<SimpleBraid>,
}

impl GroupNormalForm {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }
}

/// Replace `(x_i, x_{i+1})` by `(x_i ≍ x_{i+1}, x_i ⋈ x_{i+1})`.
pub fn rewrite_pair_at(w: &PositiveWord, i: usize) -> Result<PositiveWord> {
    if i + 1 >= w.letters.len() {
        return Err(BraidError::IndexOutOfRange {
            index: i,
            n: w.letters.len(),
        });
    }
    let t = transfer_unchecked(&w.letters[i], &w.letters[i + 1]);
    let mut out = w.clone();
    out.letters[i] = t.head;
    out.letters[i + 1] = t.tail;
    Ok(out)
}

/// Normal form of `a · nf` by one left-to-right sweep of transfers.
pub fn prepend_simple(a: &SimpleBraid, nf: &PositiveNormalForm) -> Result<PositiveNormalForm> {
    same_n(a.n(), nf.n)?;
    Ok(prepend_unchecked(a.clone(), &nf.factors, nf.n))
}

fn prepend_unchecked(a: SimpleBraid, factors: &[SimpleBraid], n: usize) -> PositiveNormalForm {
    let mut reversed: Vec<SimpleBraid> = factors.iter().rev().cloned().collect();
    prepend_reversed(&mut reversed, a);
    reversed.reverse();
    PositiveNormalForm { n, factors: reversed }
}

/// Prepend onto a normal form stored last-factor-first, so the sweep
/// touches only the factors it changes.
fn prepend_reversed(reversed: &mut Vec<SimpleBraid>, a: SimpleBraid) {
    let old_len = reversed.len();
    // New logical position j lives at index old_len - j; the old factor at
    // logical position j sits at index old_len - 1 - j.
    reversed.push(a);
    let mut carry_at = old_len;
    while carry_at > 0 {
        let t = transfer_unchecked(&reversed[carry_at], &reversed[carry_at - 1]);
        if t.is_trivial() {
            // (carry, b) is normal and the remaining pairs already were.
            break;
        }
        reversed[carry_at] = t.head;
        reversed[carry_at - 1] = t.tail;
        carry_at -= 1;
    }
    while reversed.last().is_some_and(SimpleBraid::is_identity) {
        reversed.pop();
    }
}

/// Normal form of `nf · x` by one right-to-left sweep of transfers.
pub fn append_simple(nf: &PositiveNormalForm, x: &SimpleBraid) -> Result<PositiveNormalForm> {
    same_n(nf.n, x.n())?;
    let mut factors = nf.factors.clone();
    append_in_place(&mut factors, x.clone());
    Ok(PositiveNormalForm { n: nf.n, factors })
}

fn append_in_place(factors: &mut Vec<SimpleBraid>, x: SimpleBraid) {
    if x.is_identity() {
        return;
    }
    factors.push(x);
    let mut k = factors.len() - 1;
    while k > 0 {
        let t = transfer_unchecked(&factors[k - 1], &factors[k]);
        if t.is_trivial() {
            break;
        }
        factors[k - 1] = t.head;
        factors[k] = t.tail;
        k -= 1;
    }
    if factors[..=k].iter().any(SimpleBraid::is_identity) {
        factors.retain(|f| !f.is_identity());
    }
}

/// Greedy normal form, folding the letters in from the right.
pub fn normalize_positive(w: &PositiveWord) -> PositiveNormalForm {
    let mut reversed = Vec::new();
    for letter in w.letters.iter().rev() {
        if !letter.is_identity() {
            prepend_reversed(&mut reversed, letter.clone());
        }
    }
    reversed.reverse();
    PositiveNormalForm { n: w.n, factors: reversed }
}

/// Greedy normal form, appending the letters from the left.
pub fn normalize_positive_appending(w: &PositiveWord) -> PositiveNormalForm {
    let mut factors = Vec::new();
    for letter in &w.letters {
        append_in_place(&mut factors, letter.clone());
    }
    PositiveNormalForm { n: w.n, factors }
}

/// All adjacent pairs are normal and no factor is trivial.
pub fn is_normal(form: &PositiveNormalForm) -> bool {
    form.factors.iter().all(|f| !f.is_identity() && f.n() == form.n)
        && form
            .factors
            .windows(2)
            .all(|p| is_normal_pair_unchecked(&p[0], &p[1]))
}

/// Accepts factors as a normal form after checking the invariants.
pub fn normal_form_from_factors(n: usize, factors: Vec<SimpleBraid>) -> Result<PositiveNormalForm> {
    let form = PositiveNormalForm { n, factors };
    if is_normal(&form) {
        Ok(form)
    } else {
        Err(BraidError::Precondition("factors are not in greedy normal form".into()))
    }
}

/// Which non-normal position a rewriting run picks next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// Position of the next pair to rewrite, or `None` when every pair is
/// normal. A pair `(x, ε)` with `x ≠ ε` is not normal: all of `x` moves.
pub fn next_redex(w: &PositiveWord, strategy: Strategy) -> Option<usize> {
    let redex = |k: &usize| !is_normal_pair_unchecked(&w.letters[*k], &w.letters[*k + 1]);
    let positions = 0..w.letters.len().saturating_sub(1);
    match strategy {
        Strategy::Leftmost => positions.clone().find(redex),
        Strategy::Rightmost => positions.rev().find(redex),
    }
}

/// Outcome of [`gs_rewrite_to_fixpoint`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRun {
    pub form: PositiveNormalForm,
    pub steps: usize,
}

/// Apply the rewriting rule `ab → (a≍b)(a⋈b)` until no rule applies.
pub fn gs_rewrite_to_fixpoint(w: &PositiveWord, strategy: Strategy) -> RewriteRun {
    let mut word = w.clone();
    let mut steps = 0;
    while let Some(k) = next_redex(&word, strategy) {
        let t = transfer_unchecked(&word.letters[k], &word.letters[k + 1]);
        debug_assert!(!t.is_trivial());
        word.letters[k] = t.head;
        word.letters[k + 1] = t.tail;
        steps += 1;
    }
    RewriteRun {
        form: PositiveNormalForm {
            n: word.n,
            factors: word.letters,
        }
        .strip_identities(),
        steps,
    }
}

/// `u_i` with `u_i · s_i = ω`, so that `σ_i⁻¹ = Ω⁻¹ · u_i`.
pub fn inverse_generator_complement(n: usize, i: usize) -> Result<SimpleBraid> {
    let s = Permutation::adjacent_transposition(n, i)?;
    Ok(SimpleBraid::new(Permutation::omega(n).then(&s)))
}

/// Canonical form of a signed word over `σ_i^{±1}` and `Ω^{±1}`.
pub fn normalize_group(word: &ArtinWord) -> Result<GroupNormalForm> {
    let n = word.n();
    if n < 2 {
        return Err(BraidError::TooFewStrands { n, min: 2 });
    }
    // The element is Ω^power · flip^flipped(stored).
    let mut power: i64 = 0;
    let mut flipped = false;
    let mut stored: Vec<SimpleBraid> = Vec::new();
    let framed = |x: SimpleBraid, flipped: bool| if flipped { x.flip() } else { x };
    for token in word.tokens() {
        match *token {
            Token::Sigma(i) => {
                let s = SimpleBraid::generator(n, i)?;
                append_in_place(&mut stored, framed(s, flipped));
            }
            Token::SigmaInv(i) => {
                // p·Ω⁻¹·u = Ω⁻¹·flip(p)·u
                power -= 1;
                flipped = !flipped;
                let u = inverse_generator_complement(n, i)?;
                append_in_place(&mut stored, framed(u, flipped));
            }
            Token::Delta => {
                power += 1;
                flipped = !flipped;
            }
            Token::DeltaInv => {
                power -= 1;
                flipped = !flipped;
            }
        }
    }
    let mut trailing = 0;
    while stored.last().is_some_and(SimpleBraid::is_omega) {
        stored.pop();
        trailing += 1;
    }
    // q·Ω^k = Ω^k·flip^k(q)
    power += trailing;
    if trailing % 2 == 1 {
        flipped = !flipped;
    }
    let factors = if flipped {
        stored.iter().map(SimpleBraid::flip).collect()
    } else {
        stored
    };
    Ok(GroupNormalForm {
        n,
        delta_power: power,
        factors,
    })
}

/// Word problem: both words name the same braid.
pub fn equal(w1: &ArtinWord, w2: &ArtinWord) -> Result<bool> {
    same_n(w1.n(), w2.n())?;
    Ok(normalize_group(w1)? == normalize_group(w2)?)
}
