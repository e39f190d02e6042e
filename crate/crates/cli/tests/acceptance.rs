use std::path::Path;
use std::time::{Duration, Instant};

use slocc_cy::arith::{Rationals, DEFAULT_PRIMES};
use slocc_cy::geometry::{equations_of_y, h0_check, hasse_window_holds, smoothness_witness};
use slocc_cy::invariants::{
    cayley_hyperdet, classify, moduli_dimension, projection_invariants, schlaefli_hyperdet, JInvariant, Status,
    Verdict,
};
use slocc_cy::states::catalog::{four_qubit_family, ghz, separable, swap_symmetric_four_qubit, w_state};
use slocc_cy::states::{random_state, QTensor, SloccOperator};
use slocc_cy::zalgebra::{cubic_hilbert, mu_surjectivity, quadratic_hilbert, roundtrip_check, MuResult};
use slocc_cy::Error;

const CORPUS_SIZE: usize = 50;
const BOUND: i64 = 5;

struct Entry {
    state: QTensor,
    verdict: Verdict,
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// First `CORPUS_SIZE` seeds whose state classifies as SmoothGeneric.
fn generic_corpus(n: usize, d: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < CORPUS_SIZE {
        let state = random_state(n, d, BOUND, seed);
        seed += 1;
        let verdict = classify(&state, &DEFAULT_PRIMES);
        if verdict.status == Status::SmoothGeneric {
            out.push(Entry { state, verdict });
        }
    }
    out
}

fn projection_js(t: &QTensor) -> Vec<JInvariant> {
    let model = equations_of_y(t).expect("generic state");
    projection_invariants(&model).expect("supported format").into_iter().map(|c| c.j).collect()
}

fn good_primes(e: &Entry) -> Vec<u32> {
    e.verdict.primes_used()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let dims: Vec<_> = [(3, 3), (4, 2), (5, 2)].iter().map(|&(n, d)| moduli_dimension(n, d)).collect();
    let elapsed = start.elapsed();
    let ok = dims.iter().map(|r| r.as_ref().ok().copied()).collect::<Vec<_>>() == [Some(2), Some(3), Some(16)];
    outcome(ok && elapsed < Duration::from_millis(1), format!("dims {dims:?} in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let h: Vec<_> = [(3, 3), (4, 2), (5, 2)].iter().map(|&(n, d)| h0_check(n, d).ok()).collect();
    outcome(h == [Some(6), Some(6), Some(14)], format!("h0 {h:?}"))
}

fn criterion_3(cubic: &[Entry], quartic: &[Entry]) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = 0;
    for (k, e) in cubic.iter().chain(quartic).enumerate() {
        let (n, d) = (e.state.n(), e.state.d());
        let before = e.verdict.j.clone().expect("generic verdicts carry j");
        for op in 0..5 {
            let g = SloccOperator::random(n, d, 3, 1000 + 10 * k as u64 + op);
            let moved = e.state.apply_slocc(&Rationals, &g).expect("shapes match");
            checked += 1;
            if projection_js(&moved).iter().any(|j| *j != before) {
                mismatches += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(60),
        format!("{checked} state/operator pairs, {mismatches} mismatches, {elapsed:.1?}"),
    )
}

fn criterion_4(cubic: &[Entry], quartic: &[Entry]) -> Outcome {
    let mut bad = 0;
    for e in cubic.iter().chain(quartic) {
        let js = projection_js(&e.state);
        let expected = if e.state.n() == 3 { 2 } else { 3 };
        if js.len() != expected || js.iter().any(|j| *j != js[0]) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{} states, {bad} disagreements", cubic.len() + quartic.len()))
}

fn criterion_5(cubic: &[Entry], quartic: &[Entry]) -> Outcome {
    let (mut total, mut ok, mut excused, mut wrong) = (0, 0, 0, 0);
    for e in cubic.iter().chain(quartic) {
        for p in [7, 11, 13] {
            total += 1;
            match roundtrip_check(&e.state, p) {
                Ok(true) => ok += 1,
                Err(Error::InsufficientPoints { .. } | Error::BadReduction { .. }) => excused += 1,
                _ => wrong += 1,
            }
        }
    }
    let rate = ok as f64 / total as f64;
    outcome(
        rate >= 0.95 && wrong == 0,
        format!("{ok}/{total} = {:.1}%, {excused} insufficient/bad, {wrong} other", 100.0 * rate),
    )
}

fn criterion_6(cubic: &[Entry], quartic: &[Entry]) -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    for e in cubic.iter().take(20).chain(quartic.iter().take(20)) {
        let primes: Vec<u32> = good_primes(e).into_iter().filter(|&p| p >= 11).take(2).collect();
        if primes.len() < 2 {
            failures.push(format!("{}: fewer than 2 good primes", e.state.content_hash()));
            continue;
        }
        for p in primes {
            runs += 1;
            let profile = if e.state.n() == 3 { quadratic_hilbert(&e.state, p, 4) } else { cubic_hilbert(&e.state, p, 5) };
            match profile {
                Ok(h) if h.matches => {}
                Ok(h) => failures.push(format!("p={p}: {:?}", h.computed)),
                Err(err) => failures.push(format!("p={p}: {err}")),
            }
        }
    }
    outcome(failures.is_empty(), format!("{runs} profiles, failures {failures:?}"))
}

fn criterion_7() -> Outcome {
    use num::Zero;
    let fixed = [
        cayley_hyperdet(&w_state(3)).map(|h| h.is_zero()).unwrap_or(false),
        cayley_hyperdet(&ghz(3, 2)).map(|h| !h.is_zero()).unwrap_or(false),
        schlaefli_hyperdet(&ghz(4, 2)).map(|h| h.is_zero()).unwrap_or(false),
        schlaefli_hyperdet(&four_qubit_family(1, 2, 3, 5)).map(|h| !h.is_zero()).unwrap_or(false),
    ];
    // small entries plus degenerate family members so that both sides occur
    let mut corpus: Vec<QTensor> = (0..80).map(|s| random_state(4, 2, 1, 7000 + s)).collect();
    for k in 0..20i64 {
        let (a, b) = (k % 5 - 2, k / 5 - 1);
        corpus.push(four_qubit_family(a, a, b, k));
    }
    let (mut vanishing, mut nonvanishing, mut skipped, mut inconsistent) = (0, 0, 0, 0);
    for t in &corpus {
        let Ok(model) = equations_of_y(t) else {
            skipped += 1;
            continue;
        };
        let zero = schlaefli_hyperdet(t).expect("4-qubit").is_zero();
        let js: Vec<JInvariant> = projection_invariants(&model).expect("4-qubit").into_iter().map(|c| c.j).collect();
        let singular = js.iter().all(|j| *j == JInvariant::Singular);
        let agree = js.iter().all(|j| (*j == JInvariant::Singular) == singular);
        if zero != singular || !agree {
            inconsistent += 1;
        } else if zero {
            vanishing += 1;
        } else {
            nonvanishing += 1;
        }
    }
    outcome(
        fixed.iter().all(|&b| b) && inconsistent == 0,
        format!(
            "fixed points {fixed:?}; corpus {}: {vanishing} vanishing, {nonvanishing} nonvanishing, {skipped} rank-deficient, {inconsistent} inconsistent",
            corpus.len()
        ),
    )
}

fn criterion_8(cubic: &[Entry], quartic: &[Entry]) -> Outcome {
    let primes_to_31 = DEFAULT_PRIMES;
    let separable_ok = [(3, 3), (4, 2), (5, 2)]
        .iter()
        .all(|&(n, d)| classify(&separable(n, d), &primes_to_31).status == Status::RankDeficient);
    let g = classify(&ghz(3, 3), &primes_to_31);
    let witness_p = g
        .smoothness
        .as_ref()
        .and_then(|r| r.witnesses().next().map(|w| w.point.p))
        .or_else(|| smoothness_witness(&ghz(3, 3), &primes_to_31).ok().and_then(|r| r.witnesses().next().map(|w| w.point.p)));
    let ghz_ok = g.status == Status::SingularModel && witness_p.is_some_and(|p| p <= 31);
    let (mut counts, mut outside) = (0, Vec::new());
    for e in cubic.iter().chain(quartic) {
        for sweep in &e.verdict.smoothness.as_ref().expect("swept").sweeps {
            counts += 1;
            if !hasse_window_holds(sweep.points, sweep.p) {
                outside.push((sweep.p, sweep.points));
            }
        }
    }
    outcome(
        separable_ok && ghz_ok && outside.is_empty() && counts > 0,
        format!(
            "separable {separable_ok}, GHZ3 {:?} witness at p={witness_p:?}, {counts} point counts, outside window {outside:?}",
            g.status
        ),
    )
}

fn criterion_9(quartic: &[Entry]) -> Outcome {
    let mut generic_bad = Vec::new();
    for e in quartic {
        let mut surjective = 0;
        for p in good_primes(e) {
            match mu_surjectivity(&e.state, (0, 1), p) {
                Ok(MuResult::Surjective) => surjective += 1,
                Ok(MuResult::KernelDim(k)) => generic_bad.push(format!("p={p} kernel {k}")),
                Err(_) => {}
            }
        }
        if surjective < 2 {
            generic_bad.push(format!("{} surjective at {surjective} primes", e.state.content_hash()));
        }
    }
    let xis = [[[1, 0], [0, 1]], [[2, 1], [1, 3]], [[0, 1], [-1, 2]], [[3, -1], [2, 5]]];
    let mut symmetric_bad = Vec::new();
    for xi in xis {
        let t = swap_symmetric_four_qubit(xi);
        let hits = [7u32, 11, 13, 17]
            .iter()
            .filter(|&&p| matches!(mu_surjectivity(&t, (0, 1), p), Ok(MuResult::KernelDim(k)) if k >= 1))
            .count();
        if hits < 2 {
            symmetric_bad.push(xi);
        }
    }
    outcome(
        generic_bad.is_empty() && symmetric_bad.is_empty(),
        format!(
            "{} generic states, problems {generic_bad:?}; {} swap-symmetric states, problems {symmetric_bad:?}",
            quartic.len(),
            xis.len()
        ),
    )
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = slocc_cy_cli::run(std::iter::once("slocc-cy").chain(args.iter().copied()), &mut out, &mut err);
    out.extend(err);
    (code, out)
}

fn criterion_10(dir: &Path, cubic: &[Entry], quartic: &[Entry]) -> Outcome {
    let mut states: Vec<QTensor> = cubic.iter().chain(quartic).map(|e| e.state.clone()).collect();
    states.extend([ghz(3, 3), ghz(4, 2), separable(3, 3), w_state(3), four_qubit_family(1, 2, 3, 5)]);
    let mut runs = 0;
    let mut differing = Vec::new();
    for (i, t) in states.iter().enumerate() {
        let path = dir.join(format!("state{i}.json"));
        std::fs::write(&path, t.to_json()).expect("temp dir writable");
        let path = path.to_str().expect("utf-8 path");
        let mut verbs = vec![vec!["classify", path], vec!["jinv", path]];
        if t.d() == 2 && t.n() <= 4 {
            verbs.push(vec!["hyperdet", path]);
        }
        for args in verbs {
            runs += 1;
            if cli(&args) != cli(&args) {
                differing.push(format!("{args:?}"));
            }
        }
    }
    for args in [["moduli-dim", "--n", "5", "--d", "2"], ["sample", "--n", "4", "--d", "2"]] {
        runs += 1;
        if cli(&args) != cli(&args) {
            differing.push(format!("{args:?}"));
        }
    }
    outcome(differing.is_empty(), format!("{runs} commands run twice, differing {differing:?}"))
}

fn main() {
    let start = Instant::now();
    let cubic = generic_corpus(3, 3);
    let quartic = generic_corpus(4, 2);
    println!("corpus: {} + {} SmoothGeneric states in {:.1?}", cubic.len(), quartic.len(), start.elapsed());
    let dir = tempfile::tempdir().expect("temp dir");

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("moduli dimension", Box::new(criterion_1)),
        ("section count", Box::new(criterion_2)),
        ("SLOCC invariance of j", Box::new(|| criterion_3(&cubic, &quartic))),
        ("projection agreement", Box::new(|| criterion_4(&cubic, &quartic))),
        ("roundtrip", Box::new(|| criterion_5(&cubic, &quartic))),
        ("Hilbert functions", Box::new(|| criterion_6(&cubic, &quartic))),
        ("hyperdeterminants", Box::new(criterion_7)),
        ("degeneracy and Hasse window", Box::new(|| criterion_8(&cubic, &quartic))),
        ("Segre map surjectivity", Box::new(|| criterion_9(&quartic))),
        ("determinism", Box::new(|| criterion_10(dir.path(), &cubic, &quartic))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {} [{:.1?}]",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            t.elapsed()
        );
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
