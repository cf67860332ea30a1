// Draw a normal form as ASCII art and as SVG.
//
// `cargo run --example render > braid.svg`

use braidkit::{normalize_positive, render_diagram, DiagramFormat, PositiveWord, Result};

pub fn run_example() -> Result<(String, String)> {
    let w = PositiveWord::from_generators(4, &[1, 2, 3, 1, 2])?;
    let form = PositiveWord::from(normalize_positive(&w));
    let ascii = render_diagram(&form, DiagramFormat::Ascii);
    let svg = render_diagram(&form, DiagramFormat::Svg);
    assert_eq!(svg.matches("class=\"crossing\"").count(), w.len());
    Ok((ascii, svg))
}

fn main() -> Result<()> {
    let (ascii, svg) = run_example()?;
    eprint!("{ascii}");
    print!("{svg}");
    Ok(())
}
