//! The `braid` command line.
//!
//! Exit status: 0 on success (or `equal`), 1 for a negative answer
//! (`not-equal`, failed verification), 2 for usage and parse errors.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::automaton::AutomatonGraph;
use crate::error::{BraidError, Result};
use crate::lattice::{meet_literal, InversionSet, LiteralMeet};
use crate::normal::{equal, normalize_group, normalize_positive};
use crate::oracle::{all_passed, random_generator_word, verify_all, Suite};
use crate::render::{render_diagram, DiagramFormat};
use crate::simple::{transfer, SimpleBraid};
use crate::text::{format_normal_form, parse_permutation, parse_word, word_to_simple_letters, FormStyle};

#[derive(Debug, Parser)]
#[command(name = "braid", version, about = "Greedy normal forms and permutation-braid tools")]
pub struct CliConfig {
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the group normal form `D^m : [..] [..]` of a word like "n=3; 1 -2 D".
    Normalize {
        /// The word, or `-` for standard input.
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two words are the same braid.
    Eq { word1: String, word2: String },
    /// Move the movable part of `a` into `b`: prints x, a≍b and a⋈b.
    Transfer { a: String, b: String },
    /// Weak-order meet of two permutations.
    Meet {
        a: String,
        b: String,
        /// Use a single-pass filter or the collapse-to-empty rule instead of the lattice meet.
        #[arg(long, value_parser = parse_literal)]
        literal: Option<LiteralMeet>,
    },
    /// Weak-order join of two permutations.
    Join { a: String, b: String },
    /// Run verification suites and print JSON-lines reports.
    Verify(VerifyArgs),
    /// Build the normal-form automaton and write it as DOT.
    Automaton {
        #[arg(long)]
        n: usize,
        /// `-` for standard output.
        #[arg(long, default_value = "-")]
        dot: String,
    },
    /// Draw a positive word.
    Render {
        word: String,
        #[arg(long, conflicts_with = "ascii")]
        svg: bool,
        #[arg(long)]
        ascii: bool,
    },
    /// Time the normalization of a seeded random positive word.
    Bench {
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        len: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub suite: Option<Suite>,
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

fn parse_literal(s: &str) -> std::result::Result<LiteralMeet, String> {
    match s {
        "onepass" => Ok(LiteralMeet::OnePass),
        "collapse" => Ok(LiteralMeet::Collapse),
        _ => Err(format!("expected `onepass` or `collapse`, got `{s}`")),
    }
}

fn read_arg(text: &str) -> Result<String> {
    if text == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| BraidError::Parse(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        Ok(text.to_string())
    }
}

struct Outcome {
    text: String,
    status: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

fn permutations(a: &str, b: &str) -> Result<(SimpleBraid, SimpleBraid)> {
    let a = SimpleBraid::new(parse_permutation(&read_arg(a)?)?);
    let b = SimpleBraid::new(parse_permutation(&read_arg(b)?)?);
    crate::error::same_n(a.n(), b.n())?;
    Ok((a, b))
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Normalize { word, json } => {
            let w = parse_word(&read_arg(&word)?)?;
            let style = if json { FormStyle::Json } else { FormStyle::Text };
            Ok(Outcome::ok(format_normal_form(&normalize_group(&w)?, style) + "\n"))
        }
        Command::Eq { word1, word2 } => {
            let (w1, w2) = (parse_word(&read_arg(&word1)?)?, parse_word(&read_arg(&word2)?)?);
            Ok(if equal(&w1, &w2)? {
                Outcome::ok("equal\n".into())
            } else {
                Outcome {
                    text: "not-equal\n".into(),
                    status: 1,
                }
            })
        }
        Command::Transfer { a, b } => {
            let (a, b) = permutations(&a, &b)?;
            let t = transfer(&a, &b)?;
            Ok(Outcome::ok(format!(
                "x    {}\nhead {}\ntail {}\n",
                t.moved, t.head, t.tail
            )))
        }
        Command::Meet { a, b, literal } => {
            let (a, b) = permutations(&a, &b)?;
            let text = match literal {
                None => {
                    let m = a.inv().meet(b.inv())?;
                    format!("{} {}\n", m, m.permutation())
                }
                Some(mode) => {
                    let set = meet_literal(a.inv().pairs(), b.inv().pairs(), mode)?;
                    let valid = if set.is_inversion_set() { "valid" } else { "not-an-inversion-set" };
                    format!("{set} {valid}\n")
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Join { a, b } => {
            let (a, b) = permutations(&a, &b)?;
            let j: InversionSet = a.inv().join(b.inv())?;
            Ok(Outcome::ok(format!("{} {}\n", j, j.permutation())))
        }
        Command::Verify(args) => {
            let reports = match args.suite {
                Some(suite) => suite.run(args.n, args.samples, args.seed)?,
                None => verify_all(args.samples, args.seed)?,
            };
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_json_line());
                text.push('\n');
            }
            let status = if all_passed(&reports) { 0 } else { 1 };
            Ok(Outcome { text, status })
        }
        Command::Automaton { n, dot } => {
            let dot_text = AutomatonGraph::build(n)?.export_dot();
            if dot == "-" {
                Ok(Outcome::ok(dot_text))
            } else {
                std::fs::write(&dot, dot_text)
                    .map_err(|e| BraidError::Parse(format!("writing {dot}: {e}")))?;
                Ok(Outcome::ok(String::new()))
            }
        }
        Command::Render { word, svg, ascii: _ } => {
            let w = word_to_simple_letters(&parse_word(&read_arg(&word)?)?)?;
            let format = if svg { DiagramFormat::Svg } else { DiagramFormat::Ascii };
            Ok(Outcome::ok(render_diagram(&w, format)))
        }
        Command::Bench { n, len, seed } => {
            if n < 2 {
                return Err(BraidError::TooFewStrands { n, min: 2 });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let w = random_generator_word(n, len, &mut rng);
            let start = Instant::now();
            let form = normalize_positive(&w);
            let secs = start.elapsed().as_secs_f64();
            Ok(Outcome::ok(format!(
                "n={n} len={len} seed={seed} factors={} time={secs:.3}s letters_per_sec={:.0}\n",
                form.len(),
                len as f64 / secs.max(1e-9)
            )))
        }
    }
}

/// Parse `args` (including the program name) and run; returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(config.command) {
        Ok(outcome) => {
            let written = match &config.output {
                Some(path) => std::fs::write(path, &outcome.text),
                None => stdout.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            outcome.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["braid"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn normalize_command() {
        assert_eq!(call(&["normalize", "n=3; 1 2 1"]), (0, "D^1 :\n".into(), String::new()));
        assert_eq!(call(&["normalize", "n=3;"]).1, "D^0 :\n");
        assert_eq!(call(&["normalize", "n=3; 1 -1"]).1, "D^0 :\n");
        assert_eq!(
            call(&["normalize", "--json", "n=3; 1"]).1,
            "{\"n\":3,\"delta_power\":0,\"factors\":[[2,1,3]]}\n"
        );
        let (code, _, err) = call(&["normalize", "n=3; 3"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn eq_command() {
        assert_eq!(call(&["eq", "n=3; 1 2 1", "n=3; 2 1 2"]).0, 0);
        assert_eq!(call(&["eq", "n=4; 1 3", "n=4; 3 1"]).1, "equal\n");
        assert_eq!(call(&["eq", "n=3; 1", "n=3; 2"]), (1, "not-equal\n".into(), String::new()));
        assert_eq!(call(&["eq", "n=3; 1", "n=3; x"]).0, 2);
        assert_eq!(call(&["eq", "n=3; 1", "n=4; 1"]).0, 2);
    }

    #[test]
    fn transfer_command() {
        let (code, out, _) = call(&["transfer", "[3 1 7 8 4 5 2 6]", "[5 2 6 7 8 1 4 3]"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "x    [2 7 1 3 4 8 5 6]\nhead [1 2 5 6 3 4 7 8]\ntail [6 5 7 8 4 3 2 1]\n"
        );
        let out = call(&["transfer", "[2 1 3]", "[2 1 3]"]).1;
        assert_eq!(out, "x    [1 2 3]\nhead [2 1 3]\ntail [2 1 3]\n");
    }

    #[test]
    fn lattice_commands() {
        assert_eq!(call(&["meet", "[2 1 3]", "[1 3 2]"]).1, "{} [1 2 3]\n");
        assert_eq!(call(&["join", "[2 1 3]", "[1 3 2]"]).1, "{(1,2),(1,3),(2,3)} [3 2 1]\n");
        let (code, out, _) = call(&["meet", "--literal", "collapse", "[2 1 3]", "[1 3 2]"]);
        assert_eq!((code, out.as_str()), (0, "{} valid\n"));
        assert_eq!(call(&["meet", "--literal", "bogus", "[2 1 3]", "[1 3 2]"]).0, 2);
    }

    #[test]
    fn verify_command() {
        let (code, out, _) = call(&["verify", "--suite", "validity", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"suite\":\"validity\""));
        assert!(out.contains("\"cases\":64"));
        assert_eq!(call(&["verify", "--suite", "strands", "--n", "9"]).0, 2);
        assert_eq!(call(&["verify"]).0, 2);
    }

    #[test]
    fn automaton_and_render() {
        let out = call(&["automaton", "--n", "3", "--dot", "-"]).1;
        assert_eq!(out.matches("label=\"[").count(), 6);
        let (code, out, _) = call(&["render", "n=2; 1", "--ascii"]);
        assert_eq!((code, out.as_str()), (0, "|   |\n \\ /\n  /\n / \\\n|   |\n"));
        assert!(call(&["render", "n=2; 1", "--svg"]).1.starts_with("<svg"));
        assert_eq!(call(&["render", "n=2; -1"]).0, 2);
    }

    #[test]
    fn bench_command() {
        let (code, out, _) = call(&["bench", "--n", "5", "--len", "200"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("n=5 len=200 seed=42 factors="));
    }

    #[test]
    fn output_file() {
        let path = std::env::temp_dir().join(format!("braid-cli-{}.txt", std::process::id()));
        let p = path.to_str().unwrap();
        assert_eq!(call(&["normalize", "n=3; 1 2 1", "-o", p]), (0, String::new(), String::new()));
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "D^1 :\n");
        std::fs::remove_file(&path).unwrap();
    }
}
