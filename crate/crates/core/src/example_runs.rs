#![allow(dead_code)]

mod transfer_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/transfer.rs"));
}
mod lattice_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice.rs"));
}
mod normalize_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normalize.rs"));
}
mod word_problem_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/word_problem.rs"));
}
mod automaton_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/automaton.rs"));
}
mod verify_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify.rs"));
}
mod render_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/render.rs"));
}
mod text_formats_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/text_formats.rs"));
}
mod bench_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bench.rs"));
}

#[test]
fn transfer_example_runs() {
    transfer_example::run_example().expect("transfer example should run");
}

#[test]
fn lattice_example_runs() {
    lattice_example::run_example().expect("lattice example should run");
}

#[test]
fn normalize_example_runs() {
    normalize_example::run_example().expect("normalize example should run");
}

#[test]
fn word_problem_example_runs() {
    word_problem_example::run_example().expect("word problem example should run");
}

#[test]
fn automaton_example_runs() {
    let dot = automaton_example::run_example().expect("automaton example should run");
    assert!(dot.starts_with("digraph normal_form_4 {"));
    assert_eq!(dot.matches(" -> ").count(), 72);
}

#[test]
fn verify_example_runs() {
    let reports = verify_example::run_example().expect("verify example should run");
    assert_eq!(reports.iter().filter(|r| r.suite == "automaton").count(), 1);
}

#[test]
fn render_example_runs() {
    let (ascii, svg) = render_example::run_example().expect("render example should run");
    assert!(ascii.starts_with("|   |   |   |\n"));
    assert!(svg.ends_with("</svg>\n"));
}

#[test]
fn text_formats_example_runs() {
    text_formats_example::run_example().expect("text formats example should run");
}

#[test]
fn bench_example_runs() {
    bench_example::run_example().expect("bench example should run");
}
