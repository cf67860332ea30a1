// Inversion sets and the weak-order lattice.
//
// `cargo run --example lattice`

use braidkit::{meet_literal, parse_permutation, InversionSet, LiteralMeet, Permutation, Result};

pub fn run_example() -> Result<()> {
    let p = parse_permutation("[4 2 6 1 5 3]")?;
    let r = InversionSet::of(&p);
    println!("R_p       {r}");
    println!("¬R_p      {}", r.complement());
    println!("p·R_p     {}", r.star(&p)?);
    assert_eq!(r.complement(), InversionSet::of(&p.compose(&Permutation::omega(6))?));

    let a = parse_permutation("[3 5 4 2 6 1]")?;
    let b = parse_permutation("[5 3 6 1 4 2]")?;
    let r = InversionSet::of(&a.inverse());
    let s = InversionSet::of(&b).complement();
    let meet = r.meet(&s)?;
    let join = r.join(&s)?;
    println!("meet      {meet} = R_{}", meet.permutation());
    println!("join      {join} = R_{}", join.permutation());
    assert!(meet.leq(&r) && meet.leq(&s) && r.leq(&join) && s.leq(&join));

    // shortcuts that skip the closure step can leave the lattice
    let one_pass = meet_literal(r.pairs(), s.pairs(), LiteralMeet::OnePass)?;
    println!("one pass  {one_pass} valid={}", one_pass.is_inversion_set());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
