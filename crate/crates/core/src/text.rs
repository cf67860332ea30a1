//! Text formats: Artin words, one-line permutations, pair-set listings
//! and normal forms.
//!
//! Word grammar: a header `n=<int>;` followed by whitespace-separated
//! tokens. A nonzero integer `k` with `|k| ≤ n-1` is `σ_|k|` when
//! positive and `σ_|k|⁻¹` when negative; `D` and `-D` are `Ω` and `Ω⁻¹`.
//!
//! ```text
//! n=3; 1 2 -1 D
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{BraidError, Result};
use crate::normal::{is_normal, normal_form_from_factors, GroupNormalForm, PositiveWord};
use crate::perm::{PairSet, Permutation};
use crate::simple::SimpleBraid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    Sigma(usize),
    SigmaInv(usize),
    Delta,
    DeltaInv,
}

impl Token {
    pub fn inverse(self) -> Self {
        match self {
            Token::Sigma(i) => Token::SigmaInv(i),
            Token::SigmaInv(i) => Token::Sigma(i),
            Token::Delta => Token::DeltaInv,
            Token::DeltaInv => Token::Delta,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, Token::Sigma(_) | Token::Delta)
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Sigma(i) => write!(f, "{i}"),
            Token::SigmaInv(i) => write!(f, "-{i}"),
            Token::Delta => f.write_str("D"),
            Token::DeltaInv => f.write_str("-D"),
        }
    }
}

/// A signed word over `σ_1 … σ_{n-1}` and `Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    n: usize,
    tokens: Vec<Token>,
}

impl ArtinWord {
    pub fn new(n: usize, tokens: Vec<Token>) -> Result<Self> {
        for t in &tokens {
            if let Token::Sigma(i) | Token::SigmaInv(i) = *t {
                if i == 0 || i >= n {
                    return Err(BraidError::IndexOutOfRange { index: i, n });
                }
            }
        }
        Ok(Self { n, tokens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Reversed word with every token inverted.
    pub fn formal_inverse(&self) -> Self {
        Self {
            n: self.n,
            tokens: self.tokens.iter().rev().map(|t| t.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        crate::error::same_n(self.n, other.n)?;
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Ok(Self { n: self.n, tokens })
    }
}

impl FromStr for ArtinWord {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self> {
        parse_word(text)
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for t in &self.tokens {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

pub fn parse_word(text: &str) -> Result<ArtinWord> {
    let (header, body) = text
        .split_once(';')
        .ok_or_else(|| BraidError::Parse("missing `n=<int>;` header".into()))?;
    let n = header
        .trim()
        .strip_prefix('n')
        .and_then(|rest| rest.trim_start().strip_prefix('='))
        .ok_or_else(|| BraidError::Parse(format!("bad header `{}`", header.trim())))?
        .trim()
        .parse::<usize>()
        .map_err(|e| BraidError::Parse(format!("bad strand count: {e}")))?;
    if n == 0 {
        return Err(BraidError::TooFewStrands { n, min: 1 });
    }
    let mut tokens = Vec::new();
    for raw in body.split_whitespace() {
        let token = match raw {
            "D" | "+D" => Token::Delta,
            "-D" => Token::DeltaInv,
            _ => {
                let k: i64 = raw
                    .parse()
                    .map_err(|_| BraidError::Parse(format!("unrecognised token `{raw}`")))?;
                if k == 0 {
                    return Err(BraidError::Parse("generator index 0 is not allowed".into()));
                }
                let i = k.unsigned_abs() as usize;
                if i >= n {
                    return Err(BraidError::IndexOutOfRange { index: i, n });
                }
                if k > 0 {
                    Token::Sigma(i)
                } else {
                    Token::SigmaInv(i)
                }
            }
        };
        tokens.push(token);
    }
    Ok(ArtinWord { n, tokens })
}

/// Parse `[v1 v2 … vn]` (spaces or commas between values).
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| BraidError::Parse(format!("expected `[v1 v2 ...]`, got `{text}`")))?;
    let images = inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| BraidError::Parse(format!("bad image `{s}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(&images)
}

pub fn format_permutation(p: &Permutation) -> String {
    p.to_string()
}

impl FromStr for Permutation {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self> {
        parse_permutation(text)
    }
}

/// Parse `{(1,2),(2,4)}` for the given strand count.
pub fn parse_pair_set(n: usize, text: &str) -> Result<PairSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| BraidError::Parse(format!("expected `{{(i,j),...}}`, got `{text}`")))?;
    let compact: String = inner.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pairs = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| BraidError::Parse(format!("expected `(` at `{rest}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| BraidError::Parse("unclosed pair".into()))?;
        let (i, j) = body[..close]
            .split_once(',')
            .ok_or_else(|| BraidError::Parse(format!("bad pair `{}`", &body[..close])))?;
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| BraidError::Parse(format!("bad strand `{s}`")))
        };
        pairs.push((parse(i)?, parse(j)?));
        rest = &body[close + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    PairSet::from_pairs(n, pairs)
}

/// Letters `σ_i ↦ s_i`, `Ω ↦ ω`; fails on inverse tokens.
pub fn word_to_simple_letters(w: &ArtinWord) -> Result<PositiveWord> {
    let letters = w
        .tokens
        .iter()
        .enumerate()
        .map(|(index, t)| match *t {
            Token::Sigma(i) => SimpleBraid::generator(w.n, i),
            Token::Delta => Ok(SimpleBraid::omega(w.n)),
            Token::SigmaInv(_) | Token::DeltaInv => Err(BraidError::InverseToken { index }),
        })
        .collect::<Result<Vec<_>>>()?;
    PositiveWord::new(w.n, letters)
}

/// Reduced word for a simple braid: repeatedly take the smallest descent
/// `i` (`π(i) > π(i+1)`), emit `σ_i`, and strip it off the front.
pub fn simple_to_artin(a: &SimpleBraid) -> ArtinWord {
    ArtinWord {
        n: a.n(),
        tokens: reduced_word(a.perm()).into_iter().map(Token::Sigma).collect(),
    }
}

pub(crate) fn reduced_word(p: &Permutation) -> Vec<usize> {
    let mut current = p.one_line();
    let mut out = Vec::new();
    'outer: loop {
        for i in 0..current.len().saturating_sub(1) {
            if current[i] > current[i + 1] {
                // s_i · current swaps the images at positions i, i+1
                current.swap(i, i + 1);
                out.push(i + 1);
                continue 'outer;
            }
        }
        break;
    }
    out
}

/// A word for a group normal form: `D^m` followed by each factor's
/// reduced word.
pub fn group_form_to_word(f: &GroupNormalForm) -> ArtinWord {
    let delta = if f.delta_power >= 0 { Token::Delta } else { Token::DeltaInv };
    let mut tokens = vec![delta; f.delta_power.unsigned_abs() as usize];
    for factor in &f.factors {
        tokens.extend(reduced_word(factor.perm()).into_iter().map(Token::Sigma));
    }
    ArtinWord { n: f.n, tokens }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormStyle {
    Text,
    Json,
}

/// `D^<m> : [..] [..]` or a JSON object `{n, delta_power, factors}`.
pub fn format_normal_form(f: &GroupNormalForm, style: FormStyle) -> String {
    match style {
        FormStyle::Text => {
            let mut out = format!("D^{} :", f.delta_power);
            for factor in &f.factors {
                out.push(' ');
                out.push_str(&factor.to_string());
            }
            out
        }
        FormStyle::Json => serde_json::to_string(f).expect("normal forms always serialize"),
    }
}

fn check_group_form(f: GroupNormalForm) -> Result<GroupNormalForm> {
    for factor in &f.factors {
        crate::error::same_n(f.n, factor.n())?;
        if factor.is_omega() {
            return Err(BraidError::Precondition("Ω factor inside a group normal form".into()));
        }
    }
    let positive = normal_form_from_factors(f.n, f.factors.clone())?;
    debug_assert!(is_normal(&positive));
    Ok(f)
}

pub fn parse_normal_form_json(text: &str) -> Result<GroupNormalForm> {
    check_group_form(serde_json::from_str(text)?)
}

/// Inverse of the text style; `n` is needed because an empty factor list
/// does not carry it.
pub fn parse_normal_form_text(n: usize, text: &str) -> Result<GroupNormalForm> {
    let (head, rest) = text
        .split_once(':')
        .ok_or_else(|| BraidError::Parse("expected `D^<m> :`".into()))?;
    let delta_power = head
        .trim()
        .strip_prefix("D^")
        .ok_or_else(|| BraidError::Parse(format!("bad power `{}`", head.trim())))?
        .parse::<i64>()
        .map_err(|e| BraidError::Parse(format!("bad power: {e}")))?;
    let mut factors = Vec::new();
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let close = rest
            .find(']')
            .ok_or_else(|| BraidError::Parse("unclosed factor".into()))?;
        factors.push(SimpleBraid::new(parse_permutation(&rest[..=close])?));
        rest = rest[close + 1..].trim_start();
    }
    check_group_form(GroupNormalForm {
        n,
        delta_power,
        factors,
    })
}
