//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidkit::oracle::{
    self, all_passed, random_generator_word, verify_automaton, verify_confluence, verify_flip,
    verify_group, verify_gsb, verify_meet, verify_stop, verify_strand_lemma, verify_validity,
    VerificationReport,
};
use braidkit::{
    equal, normalize_positive, parse_permutation, parse_word, transfer, InversionSet, PairSet,
    Permutation, SimpleBraid,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

type Check = Result<String, String>;

fn perm(text: &str) -> Permutation {
    parse_permutation(text).expect("valid permutation literal")
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let spent = start.elapsed();
    if spent <= limit {
        Ok(())
    } else {
        Err(format!("took {:.2}s, limit {:.0}s", spent.as_secs_f64(), limit.as_secs_f64()))
    }
}

fn summarize(reports: &[VerificationReport]) -> String {
    reports
        .iter()
        .filter(|r| r.gating)
        .map(|r| format!("{}/n{}: {}/{}", r.suite, r.n, r.failed, r.cases))
        .collect::<Vec<_>>()
        .join(", ")
}

fn gate(reports: &[VerificationReport]) -> Check {
    let line = summarize(reports);
    if all_passed(reports) {
        Ok(line)
    } else {
        let first = reports
            .iter()
            .filter(|r| r.gating && !r.passed())
            .filter_map(|r| r.failures.first().map(|f| format!("{}: {} -> {}", r.suite, f.inputs, f.actual)))
            .next()
            .unwrap_or_default();
        Err(format!("failed/cases {line}; first failure {first}"))
    }
}

fn archive(name: &str, reports: &[VerificationReport]) -> String {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let body: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
    std::fs::write(&path, body).expect("write diagnostic archive");
    path.display().to_string()
}

fn worked_example() -> Check {
    let start = Instant::now();
    let a = perm("[3 1 7 8 4 5 2 6]");
    let b = perm("[5 2 6 7 8 1 4 3]");
    expect_eq("a⁻¹", a.inverse(), perm("[2 7 1 5 6 8 3 4]"))?;
    expect_eq("bω", b.compose(&Permutation::omega(8)).unwrap(), perm("[4 7 3 2 1 8 5 6]"))?;
    let t = transfer(&SimpleBraid::new(a), &SimpleBraid::new(b)).unwrap();
    expect_eq("x", t.moved, perm("[2 7 1 3 4 8 5 6]"))?;
    expect_eq("a≍b", t.head.perm().clone(), perm("[1 2 5 6 3 4 7 8]"))?;
    expect_eq("a⋈b", t.tail.perm().clone(), perm("[6 5 7 8 4 3 2 1]"))?;
    within(Duration::from_secs(1), start)?;
    Ok("a⁻¹, bω, x, a≍b, a⋈b exact".into())
}

fn figure_example() -> Check {
    let a = SimpleBraid::new(perm("[3 5 4 2 6 1]"));
    let b = SimpleBraid::new(perm("[5 3 6 1 4 2]"));
    let m = a.star().meet(&b.inv().complement()).unwrap();
    let want = PairSet::from_pairs(6, [(1, 3), (2, 3), (2, 5), (4, 5)]).unwrap();
    expect_eq("meet", m.pairs().clone(), want)?;
    let t = transfer(&a, &b).unwrap();
    expect_eq("m", t.moved, perm("[2 4 1 5 3 6]"))?;
    expect_eq("head", t.head.perm().clone(), perm("[1 3 5 4 6 2]"))?;
    expect_eq("tail", t.tail.perm().clone(), perm("[6 5 4 3 1 2]"))?;
    Ok(format!("meet {m}, m, head, tail exact"))
}

fn inversion_example() -> Check {
    let p = perm("[4 2 6 1 5 3]");
    let r = InversionSet::of(&p);
    let listed = [(1, 2), (1, 4), (1, 6), (2, 4), (3, 4), (3, 5), (3, 6), (5, 6)];
    expect_eq("R_π", r.pairs().clone(), PairSet::from_pairs(6, listed).unwrap())?;
    let not = PairSet::from_pairs(6, [(1, 3), (1, 5), (2, 3), (2, 5), (2, 6), (4, 5), (4, 6)]).unwrap();
    expect_eq("¬R_π", r.complement().pairs().clone(), not)?;
    expect_eq("πR_π", r.star(&p).unwrap().pairs().clone(), PairSet::from_pairs(6, listed).unwrap())?;
    Ok("R_π, ¬R_π, πR_π exact".into())
}

fn meet_oracle() -> Check {
    let start = Instant::now();
    let mut reports = verify_meet(5, 0, SEED).unwrap();
    reports.extend(verify_meet(6, 100_000, SEED).unwrap());
    if reports[0].cases != 120 * 120 {
        return Err(format!("S_5 sweep covered {} pairs", reports[0].cases));
    }
    within(Duration::from_secs(60), start)?;
    gate(&reports)
}

fn transfer_identities(crossings: &mut Vec<VerificationReport>) -> Check {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut diagnostics = Vec::new();
    for n in [3, 4] {
        for r in verify_gsb(n, 0, SEED).unwrap().into_iter().chain(verify_stop(n, 0, SEED).unwrap()) {
            if r.suite == "gsb-crossings" {
                crossings.push(r);
            } else if r.gating {
                reports.push(r);
            } else {
                diagnostics.push(r);
            }
        }
    }
    let path = archive("gsb7.jsonl", &diagnostics);
    within(Duration::from_secs(60), start)?;
    gate(&reports).map(|line| format!("{line}; item 7 diagnostic in {path}"))
}

fn validity_oracle() -> Check {
    let start = Instant::now();
    let mut reports = verify_validity(4).unwrap();
    reports.extend(verify_validity(5).unwrap());
    if reports[0].cases != 64 || reports[1].cases != 1024 {
        return Err("wrong subset counts".into());
    }
    within(Duration::from_secs(10), start)?;
    gate(&reports)
}

fn strand_lemma() -> Check {
    let mut reports = verify_strand_lemma(3).unwrap();
    reports.extend(verify_strand_lemma(4).unwrap());
    let restricted = reports
        .iter()
        .filter(|r| !r.gating)
        .map(|r| format!("{}/n{}: {}/{}", r.suite, r.n, r.failed, r.cases))
        .collect::<Vec<_>>()
        .join(", ");
    gate(&reports).map_err(|e| format!("{e}; restricted: {restricted}"))
}

fn confluence(crossings: &mut Vec<VerificationReport>) -> Check {
    let mut reports = Vec::new();
    for n in 3..=6 {
        for r in verify_confluence(n, 20, 2_500, SEED).unwrap() {
            if r.suite == "confluence-crossings" {
                crossings.push(r);
            } else {
                reports.push(r);
            }
        }
    }
    let words: u64 = reports.iter().filter(|r| r.suite == "confluence").map(|r| r.cases).sum::<u64>();
    if words < 10_000 {
        return Err(format!("only {words} checks"));
    }
    gate(&reports)
}

fn flip_lemma() -> Check {
    gate(&verify_flip(5).unwrap())
}

fn group_round_trip() -> Check {
    let mut reports = Vec::new();
    for n in 2..=7 {
        reports.extend(verify_group(n, 50, 200, SEED).unwrap());
    }
    let eq = |x: &str, y: &str| equal(&parse_word(x).unwrap(), &parse_word(y).unwrap()).unwrap();
    if !eq("n=3; 1 2 1", "n=3; 2 1 2") || !eq("n=4; 1 3", "n=4; 3 1") {
        return Err("braid relations not recognised".into());
    }
    gate(&reports).map(|line| format!("{line}; braid relations equal"))
}

fn automaton() -> Check {
    let mut reports = verify_automaton(3, 1_000, SEED).unwrap();
    reports.extend(verify_automaton(4, 1_000, SEED).unwrap());
    gate(&reports)
}

fn crossing_conservation(crossings: &[VerificationReport]) -> Check {
    if crossings.is_empty() {
        return Err("no crossing reports collected".into());
    }
    gate(crossings)
}

fn performance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let w = random_generator_word(16, 10_000, &mut rng);
    let start = Instant::now();
    let form = normalize_positive(&w);
    let spent = start.elapsed();
    within(Duration::from_secs(5), start)?;
    if !braidkit::is_normal(&form) {
        return Err("output not normal".into());
    }
    Ok(format!("10^4 letters at n=16 in {:.3}s, {} factors", spent.as_secs_f64(), form.len()))
}

fn main() -> ExitCode {
    let _ = oracle::BRUTE_FORCE_MAX_N;
    let mut crossings = Vec::new();
    let mut results: Vec<(&str, Check, Duration)> = Vec::new();
    let mut run = |name: &'static str, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let outcome = f();
        let spent = start.elapsed();
        let mark = if outcome.is_ok() { "PASS" } else { "FAIL" };
        let detail = match &outcome {
            Ok(s) | Err(s) => s.clone(),
        };
        let number = results.len() + 1;
        let mut err = std::io::stderr();
        let _ = writeln!(err, "criterion {number:>2} {mark} {name} ({:.2}s): {detail}", spent.as_secs_f64());
        results.push((name, outcome, spent));
    };
    run("worked transfer example", &mut worked_example);
    run("figure transfer example", &mut figure_example);
    run("inversion, complement and star sets", &mut inversion_example);
    run("meet matches enumeration", &mut meet_oracle);
    run("transfer identities and stop implications", &mut || transfer_identities(&mut crossings));
    run("inversion-set test matches enumeration", &mut validity_oracle);
    run("colored-strand lemma", &mut strand_lemma);
    run("confluence of rewriting", &mut || confluence(&mut crossings));
    run("flip commutes with transfer", &mut flip_lemma);
    run("group round trip", &mut group_round_trip);
    run("automaton state is the maximal tail", &mut automaton);
    run("crossing conservation", &mut || crossing_conservation(&crossings));
    run("performance smoke", &mut performance);
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, (_, r, _))| r.is_err())
        .map(|(k, _)| k + 1)
        .collect();
    if failed.is_empty() {
        eprintln!("acceptance: all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        eprintln!("acceptance: {} of {} criteria failed: {failed:?}", failed.len(), results.len());
        ExitCode::FAILURE
    }
}
