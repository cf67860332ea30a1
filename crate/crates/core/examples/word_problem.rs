// Normal forms of signed words and the word problem.
//
// `cargo run --example word_problem`

use braidkit::{equal, format_normal_form, normalize_group, parse_word, FormStyle, Result};

pub fn run_example() -> Result<()> {
    for text in ["n=3; 1 2 1", "n=4; 1 -2 3 -1 2", "n=3; -1 -2 -1 D"] {
        let f = normalize_group(&parse_word(text)?)?;
        println!("{text:<20} {}", format_normal_form(&f, FormStyle::Text));
    }
    let same = equal(&parse_word("n=3; 1 2 1")?, &parse_word("n=3; 2 1 2")?)?;
    let different = equal(&parse_word("n=3; 1 2")?, &parse_word("n=3; 2 1")?)?;
    println!("121 = 212: {same}, 12 = 21: {different}");
    assert!(same && !different);
    let w = parse_word("n=5; 1 -4 2 3 -1 D")?;
    let trivial = normalize_group(&w.concat(&w.formal_inverse())?)?;
    assert!(trivial.is_identity());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
