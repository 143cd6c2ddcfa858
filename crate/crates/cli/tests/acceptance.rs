//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the verdict lines always reach the
//! output. The process fails when a criterion fails for any reason other
//! than the documented zero-dimensional defect, which is re-derived here by
//! hand.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ringlab::harness::{
    build_catalog, meta_facts, oracle_agreement, registry, replay_all, run, search_counterexample, Catalog, Recipe,
    Report, SearchDomain,
};
use ringlab::zsym::{Mutation, SymEngine};

struct Outcome {
    pass: bool,
    /// The failure is the known defect, confirmed independently.
    known_defect: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, notes: Vec<String>) -> Self {
        Outcome { pass, known_defect: false, notes }
    }
}

const NON_VACUOUS: [&str; 6] = ["T-EQ", "T-JI", "T-DELTA", "T-QL", "T-P/", "T-PIDE"];

/// Members where the zero-dimensional characterization breaks: condition (3)
/// alone fails.
const DEFECT_RINGS: [&str; 3] = ["idl (Z 4) selfmod", "idl (Z 4) (quotmod <2>)", "quot (idl (Z 4) selfmod) <(0,2)>"];

/// `Z4(+)Z2` by hand: elements `(a, m)`, `(a,m)(b,n) = (ab, an + bm)`.
/// `I = 0(+)Z2` lies in `J`, its radical `P = 2Z4(+)Z2` is the unique
/// maximal ideal, so `I` is quasi J; yet `P^2 = 0`, so `I` is no power of `P`.
fn defect_by_hand() -> Result<(), String> {
    let els: Vec<(u8, u8)> = (0..4).flat_map(|a| (0..2).map(move |m| (a, m))).collect();
    let mul = |(a, m): (u8, u8), (b, n): (u8, u8)| ((a * b) % 4, (a * n + b * m) % 2);
    let add = |(a, m): (u8, u8), (b, n): (u8, u8)| ((a + b) % 4, (m + n) % 2);
    let unit = |x: (u8, u8)| els.iter().any(|&y| mul(x, y) == (1, 0));
    let nilpotent = |x: (u8, u8)| mul(x, x) == (0, 0) || mul(mul(x, x), mul(x, x)) == (0, 0);

    let i: Vec<(u8, u8)> = vec![(0, 0), (0, 1)];
    let p: Vec<(u8, u8)> = els.iter().copied().filter(|&(a, _)| a % 2 == 0).collect();
    let non_units: Vec<(u8, u8)> = els.iter().copied().filter(|&x| !unit(x)).collect();
    if non_units != p {
        return Err("non-units do not form the maximal ideal".into());
    }
    // Local ring, so J(R) = P, and every element of P is nilpotent.
    let rad: Vec<(u8, u8)> = els
        .iter()
        .copied()
        .filter(|&x| {
            let x2 = mul(x, x);
            i.contains(&x) || i.contains(&x2) || i.contains(&mul(x2, x2))
        })
        .collect();
    if rad != p || !p.iter().all(|&x| nilpotent(x)) {
        return Err("radical of 0(+)Z2 is not P".into());
    }
    // P is a J-ideal: ab in P with a outside J = P forces b in P.
    let j_ideal = els.iter().all(|&a| els.iter().all(|&b| !p.contains(&mul(a, b)) || p.contains(&a) || p.contains(&b)));
    if !j_ideal {
        return Err("P is not a J-ideal".into());
    }
    // P^2 is additively generated by products of P, and it is zero.
    let mut p2 = vec![(0u8, 0u8)];
    for &x in &p {
        for &y in &p {
            let z = mul(x, y);
            for w in p2.clone() {
                let s = add(w, z);
                if !p2.contains(&s) {
                    p2.push(s);
                }
            }
        }
    }
    if p2 != vec![(0, 0)] {
        return Err(format!("P^2 = {p2:?}, expected 0"));
    }
    // The powers of P are P and 0; I is neither.
    if i == p || i.len() == 1 {
        return Err("0(+)Z2 is a power of P".into());
    }
    Ok(())
}

fn criterion_1(catalog: &Catalog, report: &Report, elapsed: Duration) -> Outcome {
    let mut notes = vec![format!(
        "{} checks, {} members, {} failures, {:.2}s",
        report.results.len(),
        report.catalog_size,
        report.failure_count(),
        elapsed.as_secs_f64()
    )];
    let mut ok = report.errors.is_empty() && elapsed < Duration::from_secs(120);
    ok &= report.results.len() == registry().len();
    for id in NON_VACUOUS {
        let hyp = report.result(id).map_or(0, |r| r.hypothesis_satisfied);
        if hyp == 0 {
            ok = false;
            notes.push(format!("{id}: no instance satisfies the hypothesis"));
        }
    }
    let failing: Vec<_> = report.results.iter().filter(|r| !r.passed()).collect();
    if failing.is_empty() {
        return Outcome::new(ok, notes);
    }
    for r in &failing {
        notes.push(format!("{} fails on {} instances", r.id, r.failures.len()));
    }
    let only_zero = failing.iter().all(|r| r.id == "T-ZERO");
    let zero = report.result("T-ZERO").unwrap();
    let documented = zero
        .failures
        .iter()
        .all(|f| DEFECT_RINGS.contains(&f.ring.as_str()) && f.detail.ends_with("[true, true, false, true]"));
    let by_hand = defect_by_hand();
    let members_exist = DEFECT_RINGS.iter().all(|l| catalog.finite().any(|b| b.ring.label() == *l));
    if let Err(e) = &by_hand {
        notes.push(format!("hand check failed: {e}"));
    }
    let known = ok && only_zero && documented && by_hand.is_ok() && members_exist;
    if known {
        notes.push(
            "T-ZERO: condition (3) alone is false on Z4(+)M rings; checked by hand on Z4(+)Z2, \
             where 0(+)Z2 is quasi J but P^2 = 0"
                .into(),
        );
    }
    Outcome { pass: false, known_defect: known, notes }
}

fn criterion_2() -> Outcome {
    match replay_all(&SymEngine::default()) {
        Ok(rep) => {
            let notes =
                rep.replays.iter().map(|r| format!("{}: {}", r.id, if r.passed { "pass" } else { "FAIL" })).collect();
            Outcome::new(rep.replays.len() == 5 && rep.all_passed(), notes)
        }
        Err(e) => Outcome::new(false, vec![e.to_string()]),
    }
}

fn criterion_3(catalog: &Catalog) -> Outcome {
    match oracle_agreement(catalog) {
        Ok(o) => {
            let mut notes = vec![format!("{} rings, {} ideals, {} comparisons", o.rings, o.ideals, o.comparisons)];
            notes.extend(o.disagreements.iter().take(5).cloned());
            Outcome::new(o.ok() && o.comparisons > 0, notes)
        }
        Err(e) => Outcome::new(false, vec![e.to_string()]),
    }
}

fn criterion_4(catalog: &Catalog) -> Outcome {
    let finite = search_counterexample("quasiJ_not_J", catalog, SearchDomain::Finite);
    let symbolic = search_counterexample("quasiJ_not_J", catalog, SearchDomain::Symbolic);
    let meta = meta_facts(catalog);
    let (Ok(finite), Ok(symbolic), Ok(meta)) = (finite, symbolic, meta) else {
        return Outcome::new(false, vec!["search or meta-facts errored".into()]);
    };
    let found = symbolic.iter().any(|h| h.ring == "Z(+)Z" && h.ideal.as_deref() == Some("0(+)2Z"));
    let mut notes = vec![
        format!("finite hits: {}", finite.len()),
        format!("symbolic hits: {}", symbolic.iter().map(|h| h.ring.as_str()).collect::<Vec<_>>().join(", ")),
        format!("{} rings, {} quasi-local, {} with a quasi J-ideal", meta.rings, meta.quasi_local, meta.with_quasi_j),
    ];
    notes.extend(meta.violations.iter().take(5).cloned());
    Outcome::new(finite.is_empty() && found && meta.ok(), notes)
}

fn criterion_5(catalog: &Catalog, report: &Report) -> Outcome {
    let bad: Vec<String> =
        catalog.finite().filter(|b| b.ring.check_axioms().is_err()).map(|b| b.ring.label().to_string()).collect();
    let mut notes = vec![format!("{} tables checked, {} invalid", catalog.finite().count(), bad.len())];
    let mut ok = bad.is_empty();
    for id in ["ID-J", "ID-RAD"] {
        let r = report.result(id).unwrap();
        notes.push(format!("{id}: {} instances, {} failures", r.instances, r.failures.len()));
        ok &= r.passed() && r.instances > 0;
    }
    Outcome::new(ok, notes)
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab")).args(args).env("RINGLAB_WORKERS", "1").output().expect("run ringlab")
}

fn criterion_6(catalog: &Catalog) -> Outcome {
    let a = run(catalog, None).map(|r| r.to_canonical_string());
    let b = run(catalog, None).map(|r| r.to_canonical_string());
    let lib_same = matches!((&a, &b), (Ok(x), Ok(y)) if x == y);
    let first = cli(&["--format", "record", "verify", "--all"]);
    let second = cli(&["--format", "record", "verify", "--all"]);
    let cli_same = first.stdout == second.stdout && !first.stdout.is_empty();
    let mut notes =
        vec![format!("library reports identical: {lib_same}"), format!("cli records identical: {cli_same}")];
    let mut caught = 0;
    for m in Mutation::ALL {
        let failed = replay_all(&SymEngine::default().with_mutation(m)).map_or(0, |r| r.failed());
        notes.push(format!("mutation {}: {failed} replay failures", m.id()));
        caught += (failed > 0) as usize;
    }
    Outcome::new(lib_same && cli_same && caught >= 1, notes)
}

fn main() -> ExitCode {
    let catalog = build_catalog(&Recipe::default()).expect("default catalog");
    let start = Instant::now();
    let report = run(&catalog, None).expect("default run");
    let elapsed = start.elapsed();

    let criteria = [
        ("theorem suite on the default catalog", criterion_1(&catalog, &report, elapsed)),
        ("worked example replay", criterion_2()),
        ("definition and characterization oracles agree", criterion_3(&catalog)),
        ("negative-space searches and finite meta-facts", criterion_4(&catalog)),
        ("ring axioms and idealization identities", criterion_5(&catalog, &report)),
        ("determinism and mutation detection", criterion_6(&catalog)),
    ];
    let mut unexpected = 0;
    for (n, (title, o)) in criteria.iter().enumerate() {
        let tag = match (o.pass, o.known_defect) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known defect)",
            (false, false) => "FAIL",
        };
        println!("criterion {}: {tag}: {title}", n + 1);
        for note in &o.notes {
            println!("    {note}");
        }
        unexpected += (!o.pass && !o.known_defect) as usize;
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
