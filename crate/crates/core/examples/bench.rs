// Time the positive normal form of a long random word.
//
// `cargo run --release --example bench -- 16 10000`

use std::time::{Duration, Instant};

use braidkit::oracle::random_generator_word;
use braidkit::{is_normal, normalize_positive, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example_with(n: usize, len: usize, seed: u64) -> Result<Duration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = random_generator_word(n, len, &mut rng);
    let start = Instant::now();
    let form = normalize_positive(&w);
    let spent = start.elapsed();
    assert!(is_normal(&form));
    println!("n={n} letters={len} factors={} time={:.3}s", form.len(), spent.as_secs_f64());
    Ok(spent)
}

pub fn run_example() -> Result<Duration> {
    run_example_with(8, 2_000, 42)
}

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(16);
    let len = args.next().unwrap_or(10_000);
    run_example_with(n, len, 42)?;
    Ok(())
}
