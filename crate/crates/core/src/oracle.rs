//! Brute-force references and exhaustive verification sweeps.
//!
//! The references enumerate `S_n` directly and are only meant for small
//! `n`. Each `verify_*` function compares a fast routine with a reference
//! or checks an algebraic identity over every input (or a seeded sample)
//! and returns [`VerificationReport`]s, one per suite part. Sweeps run on
//! the rayon pool; partial tallies are merged in input order so reports
//! are identical from run to run.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automaton::AutomatonGraph;
use crate::error::{same_n, BraidError, Result};
use crate::lattice::InversionSet;
use crate::normal::{
    is_normal, normal_form_from_factors, normalize_group, normalize_positive,
    normalize_positive_appending, next_redex, rewrite_pair_at, GroupNormalForm,
    PositiveNormalForm, PositiveWord, Strategy,
};
use crate::perm::{PairSet, Permutation};
use crate::simple::{
    commuting_characterization_check, is_normal_pair_unchecked, transfer_unchecked, SimpleBraid,
};
use crate::text::{group_form_to_word, parse_word, ArtinWord, Token};

/// Largest `n` the enumeration references accept.
pub const BRUTE_FORCE_MAX_N: usize = 7;

/// Failures kept verbatim in a report; the count is always exact.
pub const MAX_RECORDED_FAILURES: usize = 50;

// ---------------------------------------------------------------------------
// references

struct Table {
    perms: Vec<Permutation>,
    masks: Vec<u64>,
    sorted: Vec<u64>,
}

fn table(n: usize) -> &'static Table {
    static TABLES: [OnceLock<Table>; BRUTE_FORCE_MAX_N + 1] = [const { OnceLock::new() }; BRUTE_FORCE_MAX_N + 1];
    TABLES[n].get_or_init(|| {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let masks: Vec<u64> = perms.iter().map(|p| p.inversion_set().low_word()).collect();
        let mut sorted = masks.clone();
        sorted.sort_unstable();
        Table { perms, masks, sorted }
    })
}

fn check_small(n: usize) -> Result<()> {
    if n == 0 {
        return Err(BraidError::TooFewStrands { n, min: 1 });
    }
    if n > BRUTE_FORCE_MAX_N {
        return Err(BraidError::TooManyStrands {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    Ok(())
}

/// The largest inversion set contained in `set`, by enumeration. Fails if
/// two different inversion sets of maximal size fit.
pub fn greatest_inversion_set_below(set: &PairSet) -> Result<InversionSet> {
    let n = set.n();
    check_small(n)?;
    let bound = set.low_word();
    let t = table(n);
    let mut best: Option<(u32, usize)> = None;
    let mut tied = false;
    for (k, &m) in t.masks.iter().enumerate() {
        if m & !bound != 0 {
            continue;
        }
        let size = m.count_ones();
        match best {
            Some((b, _)) if size < b => {}
            Some((b, _)) if size == b => tied = true,
            _ => {
                best = Some((size, k));
                tied = false;
            }
        }
    }
    // ε always fits, so `best` is set
    let (_, k) = best.expect("the empty set is an inversion set");
    if tied {
        return Err(BraidError::Precondition(format!(
            "several maximal inversion sets inside {set}"
        )));
    }
    Ok(InversionSet::of(&t.perms[k]))
}

pub fn brute_meet(r1: &InversionSet, r2: &InversionSet) -> Result<InversionSet> {
    same_n(r1.n(), r2.n())?;
    greatest_inversion_set_below(&r1.pairs().intersection(r2.pairs()))
}

/// `S` is the inversion set of some permutation, by enumeration.
pub fn brute_validity(set: &PairSet) -> Result<bool> {
    check_small(set.n())?;
    Ok(table(set.n()).sorted.binary_search(&set.low_word()).is_ok())
}

/// The meet computed by deleting pairs that break the "(i,k) needs (i,j)
/// or (j,k)" condition one at a time, in an order chosen by `rng`.
pub fn meet_by_deletion<R: Rng + ?Sized>(r1: &InversionSet, r2: &InversionSet, rng: &mut R) -> Result<PairSet> {
    same_n(r1.n(), r2.n())?;
    let n = r1.n();
    let mut set = r1.pairs().intersection(r2.pairs());
    loop {
        let bad: Vec<(usize, usize)> = set
            .iter_zero_based()
            .filter(|&(i, k)| {
                (i + 1..k).any(|j| !set.contains_zero_based(i, j) && !set.contains_zero_based(j, k))
            })
            .collect();
        if bad.is_empty() {
            return Ok(set);
        }
        let (i, k) = bad[rng.gen_range(0..bad.len())];
        set.remove_zero_based(i, k);
        debug_assert_eq!(set.n(), n);
    }
}

/// Where strands starting at top positions `s < t` cross: entry `k` is
/// true when they cross inside factor `k`.
pub fn strand_crossings(word: &PositiveWord, s: usize, t: usize) -> Result<Vec<bool>> {
    let n = word.n();
    if s == 0 || s >= t || t > n {
        return Err(BraidError::IndexOutOfRange { index: t.max(s), n });
    }
    let (mut ps, mut pt) = (s - 1, t - 1);
    let mut out = Vec::with_capacity(word.len());
    for x in word.letters() {
        let (lo, hi) = (ps.min(pt), ps.max(pt));
        out.push(x.inv().pairs().contains_zero_based(lo, hi));
        ps = x.perm().raw()[ps] as usize;
        pt = x.perm().raw()[pt] as usize;
    }
    Ok(out)
}

/// Crossing totals for every strand pair, flattened as `s*n + t`
/// (zero-based, `s < t`), strands named by their top position.
pub(crate) fn crossing_profile(letters: &[SimpleBraid], n: usize) -> Vec<u32> {
    let mut counts = vec![0u32; n * n];
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut next = vec![0usize; n];
    for x in letters {
        let images = x.perm().raw();
        for p in 0..n {
            for q in p + 1..n {
                if x.inv().pairs().contains_zero_based(p, q) {
                    let (a, b) = (strand_at[p], strand_at[q]);
                    counts[a.min(b) * n + a.max(b)] += 1;
                }
            }
        }
        for p in 0..n {
            next[images[p] as usize] = strand_at[p];
        }
        std::mem::swap(&mut strand_at, &mut next);
    }
    counts
}

// ---------------------------------------------------------------------------
// random inputs

/// A word of `len` random Artin generators.
pub fn random_generator_word<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> PositiveWord {
    let letters = (0..len)
        .map(|_| SimpleBraid::generator(n, rng.gen_range(1..n)).expect("index in range"))
        .collect();
    PositiveWord::new(n, letters).expect("same strand count")
}

/// A word mixing generators, arbitrary simple braids and the odd identity.
pub fn random_positive_word<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> PositiveWord {
    let letters = (0..len)
        .map(|_| match rng.gen_range(0..10) {
            0 => SimpleBraid::identity(n),
            1..=4 => SimpleBraid::generator(n, rng.gen_range(1..n)).expect("index in range"),
            _ => SimpleBraid::new(Permutation::random(n, rng)),
        })
        .collect();
    PositiveWord::new(n, letters).expect("same strand count")
}

pub fn random_signed_word<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> ArtinWord {
    let tokens = (0..len)
        .map(|_| match rng.gen_range(0..20) {
            0 => Token::Delta,
            1 => Token::DeltaInv,
            k => {
                let i = rng.gen_range(1..n);
                if k % 2 == 0 {
                    Token::Sigma(i)
                } else {
                    Token::SigmaInv(i)
                }
            }
        })
        .collect();
    ArtinWord::new(n, tokens).expect("indices in range")
}

/// Image of a signed word in `S_n`.
pub fn word_permutation(w: &ArtinWord) -> Permutation {
    let n = w.n();
    w.tokens().iter().fold(Permutation::identity(n), |acc, t| match *t {
        Token::Sigma(i) | Token::SigmaInv(i) => {
            acc.then(&Permutation::adjacent_transposition(n, i).expect("index in range"))
        }
        Token::Delta | Token::DeltaInv => acc.then(&Permutation::omega(n)),
    })
}

fn group_form_permutation(f: &GroupNormalForm) -> Permutation {
    let start = if f.delta_power.rem_euclid(2) == 1 {
        Permutation::omega(f.n)
    } else {
        Permutation::identity(f.n)
    };
    f.factors.iter().fold(start, |acc, x| acc.then(x.perm()))
}

// ---------------------------------------------------------------------------
// reports

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub cases: u64,
    /// Exact number of failed cases; `failures` keeps the first few.
    pub failed: u64,
    /// Diagnostic reports do not decide the exit status.
    pub gating: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={}: {} cases, {} failed{}",
            self.suite,
            self.n,
            self.cases,
            self.failed,
            if self.gating { "" } else { " (diagnostic)" }
        )
    }
}

/// True when every gating report passed.
pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().filter(|r| r.gating).all(VerificationReport::passed)
}

#[derive(Debug, Default, Clone)]
struct Tally {
    cases: u64,
    failed: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn check(&mut self, ok: bool, inputs: impl FnOnce() -> String, expected: impl FnOnce() -> String, actual: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(inputs(), expected(), actual());
        }
    }

    fn fail(&mut self, inputs: String, expected: String, actual: String) {
        self.failed += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                inputs,
                expected,
                actual,
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failed += other.failed;
        let room = MAX_RECORDED_FAILURES - self.failures.len();
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    fn report(self, suite: &str, n: usize, gating: bool) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            n,
            cases: self.cases,
            failed: self.failed,
            gating,
            failures: self.failures,
        }
    }
}

fn merge_all<const K: usize>(parts: Vec<[Tally; K]>) -> [Tally; K] {
    parts.into_iter().fold(std::array::from_fn(|_| Tally::default()), |acc, part| {
        let mut acc = acc.into_iter();
        let mut part = part.into_iter();
        std::array::from_fn(|_| acc.next().unwrap().merge(part.next().unwrap()))
    })
}

fn bound(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min {
        return Err(BraidError::TooFewStrands { n, min });
    }
    if n > max {
        return Err(BraidError::TooManyStrands { n, max });
    }
    Ok(())
}

fn all_braids(n: usize) -> Vec<SimpleBraid> {
    Permutation::all(n).map(SimpleBraid::new).collect()
}

fn sampled<T: Send, F>(samples: usize, seed: u64, mut draw: F) -> Vec<T>
where
    F: FnMut(&mut ChaCha8Rng) -> T,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| draw(&mut rng)).collect()
}

fn show(items: &[&SimpleBraid]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------------------
// suites

/// Fast meet against [`brute_meet`]: every ordered pair for `n ≤ 5`,
/// otherwise `samples` seeded pairs. Also checks that deleting violating
/// pairs in a random order lands on the same set.
pub fn verify_meet(n: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    bound(n, 1, BRUTE_FORCE_MAX_N)?;
    let pairs: Vec<(SimpleBraid, SimpleBraid)> = if n <= 5 {
        let all = all_braids(n);
        all.iter()
            .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    } else {
        sampled(samples, seed, |rng| {
            (
                SimpleBraid::new(Permutation::random(n, rng)),
                SimpleBraid::new(Permutation::random(n, rng)),
            )
        })
    };
    let parts: Vec<[Tally; 2]> = pairs
        .par_chunks(256)
        .enumerate()
        .map(|(chunk, items)| {
            let mut t: [Tally; 2] = Default::default();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (chunk as u64).wrapping_mul(0x9e37_79b9));
            for (a, b) in items {
                let (r1, r2) = (a.inv(), b.inv());
                let fast = r1.meet_unchecked(r2);
                let inputs = || format!("{} {}", a, b);
                match brute_meet(r1, r2) {
                    Ok(slow) => t[0].check(
                        fast == slow && fast.pairs().is_inversion_set(),
                        inputs,
                        || slow.to_string(),
                        || fast.to_string(),
                    ),
                    Err(e) => {
                        t[0].case();
                        t[0].fail(inputs(), "unique maximum".into(), e.to_string());
                    }
                }
                let deleted = meet_by_deletion(r1, r2, &mut rng).expect("same n");
                t[1].check(&deleted == fast.pairs(), inputs, || fast.to_string(), || deleted.to_string());
            }
            t
        })
        .collect();
    let [meet, order] = merge_all(parts);
    Ok(vec![meet.report("meet", n, true), order.report("meet-deletion-order", n, true)])
}

/// The two-condition inversion-set test on every subset of pairs.
pub fn verify_validity(n: usize) -> Result<Vec<VerificationReport>> {
    bound(n, 1, 6)?;
    let slots = n * (n - 1) / 2;
    let total = 1u64 << slots;
    let parts: Vec<[Tally; 1]> = (0..total.div_ceil(1024))
        .into_par_iter()
        .map(|chunk| {
            let mut t: [Tally; 1] = Default::default();
            for mask in chunk * 1024..((chunk + 1) * 1024).min(total) {
                let set = PairSet::from_mask(n, mask);
                let fast = set.is_inversion_set();
                let slow = brute_validity(&set).expect("n in range");
                let mut ok = fast == slow;
                if ok && fast {
                    ok = Permutation::from_inversions(&set).map(|p| p.inversion_set() == set).unwrap_or(false);
                }
                t[0].check(ok, || set.to_string(), || slow.to_string(), || fast.to_string());
            }
            t
        })
        .collect();
    let [validity] = merge_all(parts);
    Ok(vec![validity.report("validity", n, true)])
}

/// The four crossing equivalences relating `(a, b)` to `(a≍b, a⋈b)`, over
/// every pair with a nontrivial transfer and every strand pair. A second,
/// diagnostic report restricts to pairs where the whole intersection
/// `aR_a ∩ ¬R_b` moves.
pub fn verify_strand_lemma(n: usize) -> Result<Vec<VerificationReport>> {
    bound(n, 2, 5)?;
    let all = all_braids(n);
    let parts: Vec<[Tally; 2]> = all
        .par_iter()
        .map(|a| {
            let mut t: [Tally; 2] = Default::default();
            for b in &all {
                let tr = transfer_unchecked(a, b);
                if tr.is_trivial() {
                    continue;
                }
                let whole = tr.moved.inversion_set() == a.star().pairs().intersection(b.inv().complement().pairs());
                let word = [a.clone(), b.clone()];
                let rewritten = [tr.head.clone(), tr.tail.clone()];
                for s in 1..n {
                    for u in s + 1..=n {
                        let before = pair_crossings(&word, s, u);
                        let after = pair_crossings(&rewritten, s, u);
                        let (xa, xb, xh, xt) = (before[0], before[1], after[0], after[1]);
                        let laws = [
                            (!xh) == (!xa || (xa && !xb)),
                            xh == (xa && xb),
                            (!xt) == (!xa && !xb),
                            xt == (xb || (xa && !xb)),
                        ];
                        for (slot, restricted) in [(0, false), (1, true)] {
                            if restricted && !whole {
                                continue;
                            }
                            for (k, ok) in laws.iter().enumerate() {
                                t[slot].check(
                                    *ok,
                                    || format!("a={a} b={b} strands ({s},{u}) law {}", k + 1),
                                    || "equivalence holds".into(),
                                    || format!("a:{} b:{} head:{} tail:{}", xa as u8, xb as u8, xh as u8, xt as u8),
                                );
                            }
                        }
                    }
                }
            }
            t
        })
        .collect();
    let [lemma, restricted] = merge_all(parts);
    Ok(vec![
        lemma.report("strands", n, true),
        restricted.report("strands-whole-intersection", n, false),
    ])
}

fn pair_crossings(letters: &[SimpleBraid], s: usize, t: usize) -> Vec<bool> {
    let w = PositiveWord::new(letters[0].n(), letters.to_vec()).expect("same strand count");
    strand_crossings(&w, s, t).expect("strands in range")
}

fn triples(n: usize, samples: usize, seed: u64) -> Vec<(SimpleBraid, SimpleBraid, SimpleBraid)> {
    if n <= 4 {
        let all = all_braids(n);
        let mut out = Vec::with_capacity(all.len().pow(3));
        for a in &all {
            for b in &all {
                for c in &all {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    } else {
        sampled(samples, seed, |rng| {
            (
                SimpleBraid::new(Permutation::random(n, rng)),
                SimpleBraid::new(Permutation::random(n, rng)),
                SimpleBraid::new(Permutation::random(n, rng)),
            )
        })
    }
}

fn h(a: &SimpleBraid, b: &SimpleBraid) -> SimpleBraid {
    transfer_unchecked(a, b).head
}

fn t(a: &SimpleBraid, b: &SimpleBraid) -> SimpleBraid {
    transfer_unchecked(a, b).tail
}

fn normal(a: &SimpleBraid, b: &SimpleBraid) -> bool {
    is_normal_pair_unchecked(a, b)
}

/// The transfer identities: idempotence, the head/tail equivalence, the
/// normality of `(a, a⋈b)` and `(a≍b, b)`, and the three three-factor
/// identities; plus factorization, length and order checks on every pair
/// and crossing conservation on every rewrite. Exhaustive for `n ≤ 4`,
/// `samples` seeded triples above. The commuting characterization is a
/// separate diagnostic report.
pub fn verify_gsb(n: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    bound(n, 1, 8)?;
    let pairs: Vec<(SimpleBraid, SimpleBraid)> = if n <= 5 {
        let all = all_braids(n);
        all.iter()
            .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    } else {
        sampled(samples, seed ^ 0x5eed, |rng| {
            (
                SimpleBraid::new(Permutation::random(n, rng)),
                SimpleBraid::new(Permutation::random(n, rng)),
            )
        })
    };
    let pair_parts: Vec<[Tally; 8]> = pairs
        .par_chunks(256)
        .map(|items| {
            let mut r: [Tally; 8] = Default::default();
            for (a, b) in items {
                let tr = transfer_unchecked(a, b);
                let inputs = || show(&[a, b]);
                if a == b {
                    r[0].check(tr.head == *a && tr.tail == *a, || format!("idempotence {}", inputs()), || show(&[a, a]), || show(&[&tr.head, &tr.tail]));
                }
                r[1].check(
                    (tr.head == *a) == (tr.tail == *b),
                    || format!("head fixed iff tail fixed {}", inputs()),
                    || "both or neither".into(),
                    || show(&[&tr.head, &tr.tail]),
                );
                r[2].check(normal(a, &tr.tail), || format!("(a, a⋈b) normal {}", inputs()), || "normal".into(), || tr.tail.to_string());
                r[2].check(normal(&tr.head, b), || format!("(a≍b, b) normal {}", inputs()), || "normal".into(), || tr.head.to_string());
                let m = tr.moved.length();
                r[6].check(
                    tr.head.perm().then(tr.tail.perm()) == a.perm().then(b.perm())
                        && tr.head.len() + m == a.len()
                        && tr.tail.len() == b.len() + m
                        && normal(&tr.head, &tr.tail),
                    || format!("factorization {}", inputs()),
                    || "a·b with lengths adding".into(),
                    || show(&[&tr.head, &tr.tail]),
                );
                let head_order = tr.head.inv().deglex_cmp(a.inv());
                let tail_order = b.inv().deglex_cmp(tr.tail.inv());
                let expect = if m == 0 { std::cmp::Ordering::Equal } else { std::cmp::Ordering::Less };
                r[6].check(
                    head_order == expect && tail_order == expect,
                    || format!("deg-lex order {}", inputs()),
                    || format!("{expect:?}"),
                    || format!("{head_order:?} {tail_order:?}"),
                );
                r[7].check(
                    crossing_profile(&[a.clone(), b.clone()], n) == crossing_profile(&[tr.head.clone(), tr.tail.clone()], n),
                    || format!("rewrite {}", inputs()),
                    || "same crossings".into(),
                    || show(&[&tr.head, &tr.tail]),
                );
            }
            r
        })
        .collect();
    let triple_parts: Vec<[Tally; 8]> = triples(n, samples, seed)
        .par_chunks(512)
        .map(|items| {
            let mut r: [Tally; 8] = Default::default();
            for (a, b, c) in items {
                let (bh, bt) = (h(b, c), t(b, c));
                let (ah, at) = (h(a, b), t(a, b));
                let a_bh = t(a, &bh);
                let inputs = || show(&[a, b, c]);
                let (l4, r4) = (h(a, &bh), h(&ah, &h(&at, c)));
                r[3].check(l4 == r4, || format!("(4) {}", inputs()), || l4.to_string(), || r4.to_string());
                let (l5, r5) = (h(&a_bh, &bt), t(&ah, &h(&at, c)));
                r[4].check(l5 == r5, || format!("(5) {}", inputs()), || l5.to_string(), || r5.to_string());
                let (l6, r6) = (t(&a_bh, &bt), t(&at, c));
                r[5].check(l6 == r6, || format!("(6) {}", inputs()), || l6.to_string(), || r6.to_string());
                let word = [a.clone(), b.clone(), c.clone()];
                let profile = crossing_profile(&word, n);
                for rewritten in [[ah.clone(), at.clone(), c.clone()], [a.clone(), bh.clone(), bt.clone()]] {
                    r[7].check(
                        crossing_profile(&rewritten, n) == profile,
                        || format!("rewrite {}", inputs()),
                        || "same crossings".into(),
                        || show(&[&rewritten[0], &rewritten[1], &rewritten[2]]),
                    );
                }
            }
            r
        })
        .collect();
    let pair_tallies = merge_all(pair_parts);
    let triple_tallies = merge_all(triple_parts);
    let names = ["gsb1", "gsb2", "gsb3", "gsb4", "gsb5", "gsb6", "transfer-factorization", "gsb-crossings"];
    let mut reports: Vec<VerificationReport> = pair_tallies
        .into_iter()
        .zip(triple_tallies)
        .zip(names)
        .map(|((p, t), name)| p.merge(t).report(name, n, true))
        .collect();
    if n <= 5 {
        let mut diag = Tally::default();
        let total = factorial(n) * factorial(n).saturating_sub(1);
        let found = commuting_characterization_check(n)?;
        diag.cases = total;
        for c in found {
            diag.fail(
                format!("a={:?} b={:?}", c.a, c.b),
                format!("a≍b = b ≠ a: {}", c.head_is_right_factor),
                format!("b² = 1 and ab = ba: {}", c.commuting_involution),
            );
        }
        reports.push(diag.report("gsb7", n, false));
    }
    Ok(reports)
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The four stop implications over every triple (`n ≤ 4`) or a seeded
/// sample.
pub fn verify_stop(n: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    bound(n, 1, 8)?;
    let parts: Vec<[Tally; 4]> = triples(n, samples, seed)
        .par_chunks(512)
        .map(|items| {
            let mut r: [Tally; 4] = Default::default();
            for (a, b, c) in items {
                let (bh, bt) = (h(b, c), t(b, c));
                let (ah, at) = (h(a, b), t(a, b));
                let a_bh = t(a, &bh);
                let inputs = |k: u8| format!("stop{k} {}", show(&[a, b, c]));
                let s1 = !normal(a, b) || normal(&a_bh, &bt);
                r[0].check(s1, || inputs(1), || "normal".into(), || show(&[&a_bh, &bt]));
                let at_c = h(&at, c);
                let s2 = !normal(b, c) || normal(&ah, &at_c);
                r[1].check(s2, || inputs(2), || "normal".into(), || show(&[&ah, &at_c]));
                let (x3, y3) = (h(a, &bh), h(&a_bh, &bt));
                r[2].check(normal(&x3, &y3), || inputs(3), || "normal".into(), || show(&[&x3, &y3]));
                let (x4, y4) = (t(&ah, &at_c), t(&at, c));
                r[3].check(normal(&x4, &y4), || inputs(4), || "normal".into(), || show(&[&x4, &y4]));
            }
            r
        })
        .collect();
    Ok(merge_all(parts)
        .into_iter()
        .zip(["stop1", "stop2", "stop3", "stop4"])
        .map(|(t, name)| t.report(name, n, true))
        .collect())
}

struct Stepped {
    form: Result<PositiveNormalForm>,
    crossing_ok: bool,
    potential_ok: bool,
}

/// Rewrite to a fixpoint one step at a time, checking crossing
/// conservation and the potential after every step.
fn stepped(w: &PositiveWord, strategy: Strategy, first: Option<usize>) -> Stepped {
    let n = w.n();
    let profile = crossing_profile(w.letters(), n);
    let mut word = w.clone();
    let mut crossing_ok = true;
    let mut potential_ok = true;
    let mut position = first.filter(|&k| !normal(&word.letters()[k], &word.letters()[k + 1]));
    while let Some(k) = position.take().or_else(|| next_redex(&word, strategy)) {
        let before = word.potential();
        word = rewrite_pair_at(&word, k).expect("position in range");
        crossing_ok &= crossing_profile(word.letters(), n) == profile;
        potential_ok &= word.potential() < before;
    }
    let factors = word.letters().iter().filter(|x| !x.is_identity()).cloned().collect();
    Stepped {
        form: normal_form_from_factors(n, factors),
        crossing_ok,
        potential_ok,
    }
}

fn show_form(f: &PositiveNormalForm) -> String {
    f.factors().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Leftmost and rightmost rewriting, fold-right prepending and
/// left-to-right appending agree on `samples` seeded random words of
/// length at most `len`. For `n ≤ 4` every three-letter word is also
/// rewritten both ways starting with each of its two redexes.
pub fn verify_confluence(n: usize, len: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    bound(n, 2, 8)?;
    let words = sampled(samples, seed, |rng| {
        let l = rng.gen_range(0..=len);
        random_positive_word(n, l, rng)
    });
    let parts: Vec<[Tally; 2]> = words
        .par_chunks(64)
        .map(|items| {
            let mut r: [Tally; 2] = Default::default();
            for w in items {
                let fold = normalize_positive(w);
                let inputs = || show(&w.letters().iter().collect::<Vec<_>>());
                r[0].check(is_normal(&fold), || format!("normal output {}", inputs()), || "normal".into(), || show_form(&fold));
                let sound = PositiveWord::from(fold.clone());
                r[0].check(
                    sound.permutation() == w.permutation() && sound.crossing_count() == w.crossing_count(),
                    || format!("soundness {}", inputs()),
                    || w.permutation().to_string(),
                    || sound.permutation().to_string(),
                );
                let app = normalize_positive_appending(w);
                r[0].check(app == fold, || format!("appending {}", inputs()), || show_form(&fold), || show_form(&app));
                for strategy in [Strategy::Leftmost, Strategy::Rightmost] {
                    let run = stepped(w, strategy, None);
                    let got = run.form.as_ref().map(show_form).unwrap_or_else(|e| e.to_string());
                    r[0].check(
                        run.form.as_ref().ok() == Some(&fold) && run.potential_ok,
                        || format!("{strategy:?} {}", inputs()),
                        || show_form(&fold),
                        || got,
                    );
                    r[1].check(run.crossing_ok, || format!("{strategy:?} {}", inputs()), || "same crossings".into(), || "changed".into());
                }
            }
            r
        })
        .collect();
    let [agree, crossings] = merge_all(parts);
    let mut reports = vec![
        agree.report("confluence", n, true),
        crossings.report("confluence-crossings", n, true),
    ];
    if n <= 4 {
        let parts: Vec<[Tally; 1]> = triples(n, 0, seed)
            .par_chunks(512)
            .map(|items| {
                let mut r: [Tally; 1] = Default::default();
                for (a, b, c) in items {
                    let w = PositiveWord::new(n, vec![a.clone(), b.clone(), c.clone()]).expect("same n");
                    let left = stepped(&w, Strategy::Leftmost, Some(0)).form;
                    let right = stepped(&w, Strategy::Rightmost, Some(1)).form;
                    let fold = normalize_positive(&w);
                    r[0].check(
                        left.as_ref().ok() == Some(&fold) && right.as_ref().ok() == Some(&fold),
                        || show(&[a, b, c]),
                        || show_form(&fold),
                        || format!("{left:?} / {right:?}"),
                    );
                }
                r
            })
            .collect();
        let [critical] = merge_all(parts);
        reports.push(critical.report("critical-pairs", n, true));
    }
    Ok(reports)
}

/// `flip` commutes with both transfer operations, and `ω·a = flip(a)·ω`,
/// over every ordered pair.
pub fn verify_flip(n: usize) -> Result<Vec<VerificationReport>> {
    bound(n, 1, 6)?;
    let all = all_braids(n);
    let omega = Permutation::omega(n);
    let parts: Vec<[Tally; 1]> = all
        .par_iter()
        .map(|a| {
            let mut r: [Tally; 1] = Default::default();
            let fa = a.flip();
            r[0].check(
                omega.then(a.perm()) == fa.perm().then(&omega) && fa.len() == a.len(),
                || format!("Ω exchange {a}"),
                || omega.then(a.perm()).to_string(),
                || fa.perm().then(&omega).to_string(),
            );
            for b in &all {
                let tr = transfer_unchecked(a, b);
                let fl = transfer_unchecked(&fa, &b.flip());
                r[0].check(
                    tr.head.flip() == fl.head && tr.tail.flip() == fl.tail,
                    || show(&[a, b]),
                    || show(&[&tr.head.flip(), &tr.tail.flip()]),
                    || show(&[&fl.head, &fl.tail]),
                );
            }
            r
        })
        .collect();
    let [flip] = merge_all(parts);
    Ok(vec![flip.report("flip", n, true)])
}

/// Group normal forms on `samples` seeded signed words: `w·w̄` is trivial,
/// the form maps to the same permutation as the word, and re-expanding
/// the form gives the same form. Also the braid relations and `Ω`'s
/// expansion.
pub fn verify_group(n: usize, len: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    bound(n, 2, 64)?;
    let words = sampled(samples, seed, |rng| {
        let l = rng.gen_range(0..=len);
        random_signed_word(n, l, rng)
    });
    let parts: Vec<[Tally; 1]> = words
        .par_chunks(64)
        .map(|items| {
            let mut r: [Tally; 1] = Default::default();
            for w in items {
                let trivial = normalize_group(&w.concat(&w.formal_inverse()).expect("same n")).expect("n ≥ 2");
                r[0].check(
                    trivial.is_identity(),
                    || format!("w·w̄ for {w}"),
                    || "D^0 :".into(),
                    || format!("{trivial:?}"),
                );
                let f = normalize_group(w).expect("n ≥ 2");
                r[0].check(
                    group_form_permutation(&f) == word_permutation(w),
                    || format!("image of {w}"),
                    || word_permutation(w).to_string(),
                    || group_form_permutation(&f).to_string(),
                );
                let again = normalize_group(&group_form_to_word(&f)).expect("n ≥ 2");
                r[0].check(again == f, || format!("re-expansion of {w}"), || format!("{f:?}"), || format!("{again:?}"));
            }
            r
        })
        .collect();
    let [mut group] = merge_all(parts);
    let mut fixed = vec![];
    if n >= 3 {
        fixed.push((format!("n={n}; 1 2 1"), format!("n={n}; 2 1 2")));
    }
    if n >= 4 {
        fixed.push((format!("n={n}; 1 3"), format!("n={n}; 3 1")));
    }
    for (x, y) in fixed {
        let same = crate::normal::equal(&parse_word(&x)?, &parse_word(&y)?)?;
        group.check(same, || format!("{x} = {y}"), || "equal".into(), || "not-equal".into());
    }
    let delta = crate::text::simple_to_artin(&SimpleBraid::omega(n));
    let f = normalize_group(&delta)?;
    group.check(
        f.delta_power == 1 && f.factors.is_empty(),
        || format!("Ω expansion {delta}"),
        || "D^1 :".into(),
        || format!("{f:?}"),
    );
    Ok(vec![group.report("group", n, true)])
}

/// Automaton shape, transition consistency, and the maximal-tail property
/// on `samples` seeded generator words.
pub fn verify_automaton(n: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    bound(n, 2, 6)?;
    let g = AutomatonGraph::build(n)?;
    let mut r = Tally::default();
    let states = factorial(n) as usize;
    r.check(
        g.state_count() == states && g.transition_count() == states * (n - 1),
        || "graph size".into(),
        || format!("{states} states"),
        || format!("{} states, {} transitions", g.state_count(), g.transition_count()),
    );
    for (k, state) in g.states().iter().enumerate() {
        for i in 1..n {
            let tr = g.transition(k, i)?;
            let next = &g.states()[tr.next];
            let s = SimpleBraid::generator(n, i)?;
            r.check(
                tr.emitted.perm().then(next.perm()) == state.perm().then(s.perm())
                    && tr.emitted.len() + next.len() == state.len() + 1,
                || format!("transition {state} --{i}-->"),
                || state.perm().then(s.perm()).to_string(),
                || show(&[&tr.emitted, next]),
            );
        }
    }
    let words = sampled(samples, seed, |rng| {
        let l = rng.gen_range(0..=30);
        (0..l).map(|_| rng.gen_range(1..n)).collect::<Vec<usize>>()
    });
    let parts: Vec<[Tally; 1]> = words
        .par_chunks(64)
        .map(|items| {
            let mut t: [Tally; 1] = Default::default();
            for w in items {
                let state = g.run(w).expect("indices in range");
                let form = normalize_positive(&PositiveWord::from_generators(n, w).expect("indices in range"));
                let last = form.last();
                t[0].check(state == last, || format!("{w:?}"), || last.to_string(), || state.to_string());
            }
            t
        })
        .collect();
    let [runs] = merge_all(parts);
    Ok(vec![r.merge(runs).report("automaton", n, true)])
}

// ---------------------------------------------------------------------------
// suite selection

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Meet,
    Validity,
    Strands,
    Gsb,
    Stop,
    Confluence,
    Flip,
    Group,
    Automaton,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Meet,
        Suite::Validity,
        Suite::Strands,
        Suite::Gsb,
        Suite::Stop,
        Suite::Confluence,
        Suite::Flip,
        Suite::Group,
        Suite::Automaton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Meet => "meet",
            Suite::Validity => "validity",
            Suite::Strands => "strands",
            Suite::Gsb => "gsb",
            Suite::Stop => "stop",
            Suite::Confluence => "confluence",
            Suite::Flip => "flip",
            Suite::Group => "group",
            Suite::Automaton => "automaton",
        }
    }

    /// Run one suite. `samples` only matters where the suite samples.
    pub fn run(self, n: usize, samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
        match self {
            Suite::Meet => verify_meet(n, samples, seed),
            Suite::Validity => verify_validity(n),
            Suite::Strands => verify_strand_lemma(n),
            Suite::Gsb => verify_gsb(n, samples, seed),
            Suite::Stop => verify_stop(n, samples, seed),
            Suite::Confluence => verify_confluence(n, 20, samples, seed),
            Suite::Flip => verify_flip(n),
            Suite::Group => verify_group(n, 50, samples, seed),
            Suite::Automaton => verify_automaton(n, samples, seed),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| BraidError::Parse(format!("unknown suite `{s}`")))
    }
}

/// The full standard sweep.
pub fn verify_all(samples: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    let mut plan: Vec<(Suite, usize, usize)> = Vec::new();
    for n in 2..=6 {
        plan.push((Suite::Meet, n, samples));
    }
    for n in 1..=5 {
        plan.push((Suite::Validity, n, 0));
    }
    for n in 3..=4 {
        plan.push((Suite::Strands, n, 0));
        plan.push((Suite::Gsb, n, 0));
        plan.push((Suite::Stop, n, 0));
        plan.push((Suite::Automaton, n, samples));
    }
    for n in 3..=6 {
        plan.push((Suite::Confluence, n, samples));
    }
    plan.push((Suite::Flip, 5, 0));
    for n in 2..=7 {
        plan.push((Suite::Group, n, samples));
    }
    let mut out = Vec::new();
    for (suite, n, s) in plan {
        out.extend(suite.run(n, s, seed)?);
    }
    Ok(out)
}
