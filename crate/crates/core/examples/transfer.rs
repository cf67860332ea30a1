// Move crossings between two adjacent simple braids.
//
// `cargo run --example transfer`

use braidkit::{is_normal_pair, parse_permutation, transfer, Result, SimpleBraid};

pub fn run_example() -> Result<()> {
    let a = SimpleBraid::new(parse_permutation("[3 1 7 8 4 5 2 6]")?);
    let b = SimpleBraid::new(parse_permutation("[5 2 6 7 8 1 4 3]")?);
    let t = transfer(&a, &b)?;
    println!("a         {a}");
    println!("b         {b}");
    println!("moved x   {}", t.moved);
    println!("a ≍ b     {}", t.head);
    println!("a ⋈ b     {}", t.tail);
    assert_eq!(t.head.perm().compose(t.tail.perm())?, a.perm().compose(b.perm())?);
    assert_eq!(t.head.len() + t.tail.len(), a.len() + b.len());
    assert!(is_normal_pair(&t.head, &t.tail)?);
    assert_eq!(t.head.to_string(), "[1 2 5 6 3 4 7 8]");
    assert_eq!(t.tail.to_string(), "[6 5 7 8 4 3 2 1]");
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
