// Greedy normal form of a positive word, three ways.
//
// `cargo run --example normalize`

use braidkit::{
    gs_rewrite_to_fixpoint, is_normal, normalize_positive, PositiveWord, Result, Strategy,
};

pub fn run_example() -> Result<()> {
    let w = PositiveWord::from_generators(4, &[1, 2, 1, 3, 2, 1, 3, 3, 2])?;
    let fold = normalize_positive(&w);
    println!("{} letters -> {} factors", w.len(), fold.len());
    for x in fold.factors() {
        println!("  {x}");
    }
    assert!(is_normal(&fold));
    for strategy in [Strategy::Leftmost, Strategy::Rightmost] {
        let run = gs_rewrite_to_fixpoint(&w, strategy);
        println!("{strategy:?}: {} rewrite steps", run.steps);
        assert_eq!(run.form, fold);
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
