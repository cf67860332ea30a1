//! The normal-form automaton for small `n`.
//!
//! States are the `n!` simple braids. Reading `σ_i` in state `a` moves to
//! `a ⋈ s_i` and emits `a ≍ s_i`; after reading a positive word the state
//! is the last factor of its greedy normal form.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::simple::{transfer_unchecked, SimpleBraid};

/// Largest strand count [`AutomatonGraph::build`] accepts (40320 states).
pub const MAX_AUTOMATON_STRANDS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub next: usize,
    pub emitted: SimpleBraid,
}

#[derive(Debug, Clone)]
pub struct AutomatonGraph {
    n: usize,
    states: Vec<SimpleBraid>,
    index: HashMap<Permutation, usize>,
    // row-major: state * (n-1) + (i-1)
    transitions: Vec<Transition>,
}

impl AutomatonGraph {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::TooFewStrands { n, min: 1 });
        }
        if n > MAX_AUTOMATON_STRANDS {
            return Err(BraidError::TooManyStrands {
                n,
                max: MAX_AUTOMATON_STRANDS,
            });
        }
        let mut states: Vec<SimpleBraid> = Permutation::all(n).map(SimpleBraid::new).collect();
        states.sort_by(|a, b| a.inv().deglex_cmp(b.inv()));
        let index: HashMap<Permutation, usize> = states
            .iter()
            .enumerate()
            .map(|(k, s)| (s.perm().clone(), k))
            .collect();
        let generators: Vec<SimpleBraid> = (1..n)
            .map(|i| SimpleBraid::generator(n, i).expect("index in range"))
            .collect();
        let mut transitions = Vec::with_capacity(states.len() * (n - 1));
        for state in &states {
            for s in &generators {
                let t = transfer_unchecked(state, s);
                transitions.push(Transition {
                    next: index[t.tail.perm()],
                    emitted: t.head,
                });
            }
        }
        Ok(Self {
            n,
            states,
            index,
            transitions,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// States in deg-lex order of their inversion sets; state 0 is `ε`.
    pub fn states(&self) -> &[SimpleBraid] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn index_of(&self, a: &SimpleBraid) -> Option<usize> {
        self.index.get(a.perm()).copied()
    }

    pub fn transition(&self, state: usize, i: usize) -> Result<&Transition> {
        if i == 0 || i >= self.n {
            return Err(BraidError::IndexOutOfRange { index: i, n: self.n });
        }
        self.transitions
            .get(state * (self.n - 1) + i - 1)
            .ok_or_else(|| BraidError::Precondition(format!("no state {state}")))
    }

    /// Final state after reading `σ_{w_1} σ_{w_2} …` from `ε`.
    pub fn run(&self, word: &[usize]) -> Result<SimpleBraid> {
        let mut state = self.initial();
        for &i in word {
            state = self.transition(state, i)?.next;
        }
        Ok(self.states[state].clone())
    }

    /// DOT digraph; node `sK` is the K-th state, edges carry the
    /// generator index.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph normal_form_{} {{", self.n).unwrap();
        out.push_str("  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (k, s) in self.states.iter().enumerate() {
            writeln!(out, "  s{k} [label=\"{s}\"];").unwrap();
        }
        for k in 0..self.states.len() {
            for i in 1..self.n {
                let t = &self.transitions[k * (self.n - 1) + i - 1];
                writeln!(out, "  s{k} -> s{} [label=\"{i}\"];", t.next).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}
