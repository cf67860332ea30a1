// Round trips through the text and JSON formats.
//
// `cargo run --example text_formats`

use braidkit::text::{group_form_to_word, parse_normal_form_json, parse_pair_set};
use braidkit::{
    format_normal_form, normalize_group, parse_word, simple_to_artin, FormStyle, Result,
    SimpleBraid,
};

pub fn run_example() -> Result<()> {
    let w = parse_word("n=4; 2 -3 1 D 3")?;
    let f = normalize_group(&w)?;
    let json = format_normal_form(&f, FormStyle::Json);
    println!("{json}");
    assert_eq!(parse_normal_form_json(&json)?, f);
    let back = group_form_to_word(&f);
    println!("as a word: {back}");
    assert_eq!(normalize_group(&back)?, f);

    let x = SimpleBraid::from_images(&[3, 1, 4, 2])?;
    println!("{x} = {}", simple_to_artin(&x));
    let set = parse_pair_set(4, "{(1,2),(1,4),(3,4)}")?;
    println!("{set} is an inversion set: {}", set.is_inversion_set());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
