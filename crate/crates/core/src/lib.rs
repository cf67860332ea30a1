//! Braid monoids and groups through permutation (simple) braids.
//!
//! Simple braids on `n` strands are in bijection with permutations of
//! `{1..n}` and are handled through their inversion sets. On top of that
//! the crate provides the weak-order lattice, the transfer operations
//! `a ≍ b` / `a ⋈ b`, greedy normal forms for positive words and for
//! signed words (`Ω^m · x_1 ⋯ x_k`), the word problem, the normal-form
//! automaton for small `n`, brute-force oracles, and text, SVG and ASCII
//! output.
//!
//! ```
//! use braidkit::{normalize_group, parse_word};
//!
//! let w = parse_word("n=3; 1 2 1").unwrap();
//! let f = normalize_group(&w).unwrap();
//! assert_eq!((f.delta_power, f.factors.len()), (1, 0));
//! ```

extern crate self as braidkit;

pub mod automaton;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod normal;
pub mod oracle;
pub mod perm;
pub mod render;
pub mod simple;
pub mod text;

#[cfg(test)]
mod example_runs;
#[cfg(test)]
mod properties;

pub use automaton::AutomatonGraph;
pub use error::{BraidError, Result};
pub use lattice::{deglex_compare, meet_literal, InversionSet, LiteralMeet};
pub use normal::{
    append_simple, equal, gs_rewrite_to_fixpoint, is_normal, normalize_group, normalize_positive,
    prepend_simple, rewrite_pair_at, GroupNormalForm, PositiveNormalForm, PositiveWord, Strategy,
};
pub use oracle::{Suite, VerificationReport};
pub use perm::{Pair, PairSet, Permutation};
pub use render::{render_diagram, DiagramFormat};
pub use simple::{head_op, is_normal_pair, tail_op, transfer, SimpleBraid, Transfer};
pub use text::{
    format_normal_form, parse_permutation, parse_word, simple_to_artin, word_to_simple_letters,
    ArtinWord, FormStyle, Token,
};
