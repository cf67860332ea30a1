// The normal-form automaton on four strands, as Graphviz DOT.
//
// `cargo run --example automaton > s4.dot`

use braidkit::{normalize_positive, AutomatonGraph, PositiveWord, Result};

pub fn run_example() -> Result<String> {
    let g = AutomatonGraph::build(4)?;
    eprintln!("{} states, {} transitions", g.state_count(), g.transition_count());
    let word = [1, 3, 2, 2, 1, 3];
    let state = g.run(&word)?;
    let form = normalize_positive(&PositiveWord::from_generators(4, &word)?);
    eprintln!("state after {word:?}: {state}");
    assert_eq!(state, form.last());
    Ok(g.export_dot())
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
