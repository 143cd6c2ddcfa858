//! `ringlab`: build finite rings, classify ideals, run the theorem suite,
//! search for separating examples and replay the worked examples.
//!
//! Exit status: 0 on success, 1 when a verification or replay fails, 2 on a
//! usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ringlab::classify::{classify_ideal, classify_ring, IDEAL_PREDICATES, RING_PREDICATES};
use ringlab::construct::{parse_generators, parse_ring_expr};
use ringlab::harness::{
    build_catalog, replay_all, replay_examples, run_with, search_counterexample, Recipe, RunOptions, SearchDomain,
    SEARCH_PROPERTIES, WORKERS_ENV,
};
use ringlab::zsym::{parse_sym_ideal, parse_sym_ring, Mutation, SymEngine, SYM_IDEAL_PREDICATES};
use ringlab::{IdealSet, Ring, SymIdealI64};

/// `println!` that exits quietly when stdout is closed early.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        quiet_on_pipe(writeln!(std::io::stdout(), $($arg)*));
    }};
}

macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write;
        quiet_on_pipe(write!(std::io::stdout(), $($arg)*));
    }};
}

fn quiet_on_pipe(r: std::io::Result<()>) {
    if let Err(e) = r {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Record,
}

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Quasi J-ideals in finite commutative rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Coordinate bound for symbolic falsification.
    #[arg(long, global = true)]
    bound: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a ring: units, radicals, zero divisors, maximal ideals, flags.
    Info { expr: String },
    /// Classify one ideal under every predicate.
    Classify {
        /// Treat RING and IDEAL as symbolic (e.g. `Z(+)Z` `0(+)2Z`).
        #[arg(long)]
        sym: bool,
        ring: String,
        /// Generators, e.g. `4` or `(0,1),(2,0)`.
        ideal: String,
    },
    /// List every ideal of a ring with its main classes.
    Ideals { expr: String },
    /// Run the theorem suite over a catalog.
    Verify {
        /// Run every registered check (the default).
        #[arg(long, conflicts_with = "only")]
        all: bool,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// TOML catalog recipe; the default catalog otherwise.
        #[arg(long)]
        recipe: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
    },
    /// Search a catalog for members in one class but not a stronger one.
    Search {
        /// One of quasiJ_not_J, quasi_presimpl_not_presimpl, quasiJ_not_delta1n, j_not_n.
        property: String,
        /// Search the symbolic families instead of the table rings.
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        recipe: Option<PathBuf>,
    },
    /// Replay a worked example step by step (`all` replays every one).
    Example {
        id: String,
        /// Corrupt one symbolic rule first.
        #[arg(long)]
        mutate: Option<String>,
    },
}

/// Error raised by user input rather than by a failed check.
fn is_usage(e: &anyhow::Error) -> bool {
    use ringlab::Error as E;
    e.chain().any(|c| c.is::<std::io::Error>())
        || matches!(
            e.downcast_ref::<E>(),
            Some(
                E::Parse(_)
                    | E::Recipe(_)
                    | E::UnknownTheorem(_)
                    | E::UnknownExample(_)
                    | E::UnknownProperty(_)
                    | E::UnknownPredicate(_)
                    | E::NotProper(_)
                    | E::InvalidArgument(_)
                    | E::OrderTooLarge(_)
                    | E::NonHomogeneous(_)
                    | E::NotMultiplicativelyClosed(_)
                    | E::EmptyRegistry
            )
        )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}

/// Returns whether everything checked passed.
fn dispatch(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Info { expr } => info(cli.format, expr),
        Command::Classify { sym: false, ring, ideal } => classify(cli.format, ring, ideal),
        Command::Classify { sym: true, ring, ideal } => classify_sym(cli.format, cli.bound, ring, ideal),
        Command::Ideals { expr } => ideals(cli.format, expr),
        Command::Verify { only, recipe, workers, .. } => verify(cli, only.clone(), recipe.as_ref(), *workers),
        Command::Search { property, symbolic, recipe } => search(cli.format, property, *symbolic, recipe.as_ref()),
        Command::Example { id, mutate } => example(cli, id, mutate.as_deref()),
    }
}

fn print_json(v: &impl serde::Serialize) {
    out!("{}", serde_json::to_string(v).expect("serializable"));
}

fn gens(r: &Ring, s: &ringlab::ElemSet) -> Vec<String> {
    r.canonical_generators(s).into_iter().map(|g| r.name(g).to_string()).collect()
}

fn elems(r: &Ring, s: &ringlab::ElemSet) -> Vec<String> {
    s.iter().map(|e| r.name(e).to_string()).collect()
}

fn info(format: Format, expr: &str) -> Result<bool> {
    let r = parse_ring_expr(expr)?.ring;
    let mut flags = Vec::new();
    for p in RING_PREDICATES {
        flags.push((*p, classify_ring(&r, p)?.holds));
    }
    let (units, nil, jac) = (r.unit_set(), r.nilradical_set(), r.jacobson_set());
    let (zd, nz) = (r.zero_divisor_set(), r.not_quasi_regular_set());
    match format {
        Format::Record => print_json(&json!({
            "ring": r.label(),
            "order": r.order(),
            "units": elems(&r, &units),
            "nilradical": gens(&r, &nil),
            "jacobson": gens(&r, &jac),
            "zero_divisors": elems(&r, &zd),
            "not_quasi_regular": elems(&r, &nz),
            "maximal_ideals": r.maximal_sets().iter().map(|m| gens(&r, m)).collect::<Vec<_>>(),
            "flags": flags.iter().map(|(p, v)| (p.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
        })),
        Format::Table => {
            out!("ring      {}", r.label());
            out!("order     {}", r.order());
            out!("U(R)      {}", r.show_set(&units));
            out!("N(R)      {}", r.show_ideal(&nil));
            out!("J(R)      {}", r.show_ideal(&jac));
            out!("Z(R)      {}", r.show_set(&zd));
            out!("NZ(R)     {}", r.show_set(&nz));
            let maxes: Vec<String> = r.maximal_sets().iter().map(|m| r.show_ideal(m)).collect();
            out!("maximal   {}", maxes.join(", "));
            for (p, v) in flags {
                out!("{p:<22}{v}");
            }
        }
    }
    Ok(true)
}

fn proper_ideal(r: &Ring, text: &str) -> Result<IdealSet> {
    let i = parse_generators(r, text)?;
    if !i.is_proper() {
        return Err(ringlab::Error::NotProper("classify")).context(format!("<{text}> is the whole ring"));
    }
    Ok(i)
}

fn classify(format: Format, expr: &str, ideal: &str) -> Result<bool> {
    let r = parse_ring_expr(expr)?.ring;
    let i = proper_ideal(&r, ideal)?;
    if format == Format::Table {
        out!("ring {}, ideal {}", r.label(), r.show_ideal(i.members()));
        out!("{:<14} {:<6} witness", "predicate", "holds");
    }
    for p in IDEAL_PREDICATES {
        let v = classify_ideal(&i, p)?;
        match format {
            Format::Record => print_json(&v.record(&r, Some(&i))),
            Format::Table => {
                let w = v.witness.as_ref().map(|w| w.show(&r)).unwrap_or_default();
                out!("{p:<14} {:<6} {w}", v.holds);
            }
        }
    }
    Ok(true)
}

fn classify_sym(format: Format, bound: Option<u64>, ring: &str, ideal: &str) -> Result<bool> {
    let r = parse_sym_ring(ring)?;
    let i: SymIdealI64 = parse_sym_ideal(r, ideal)?;
    let e = bound.map_or_else(SymEngine::default, SymEngine::new);
    if format == Format::Table {
        out!("ring {r}, ideal {}, bound {}", r.show_ideal(&i), e.bound);
        out!("{:<14} {:<6} {:<26} evidence", "predicate", "holds", "status");
    }
    for p in SYM_IDEAL_PREDICATES {
        let v = e.sym_classify(r, &i, p)?;
        match format {
            Format::Record => print_json(&v.record(r, Some(&i))),
            Format::Table => {
                let mut evidence: Vec<String> = v.rule.iter().map(|r| r.to_string()).collect();
                if let Some(w) = &v.witness {
                    evidence.push(w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" * "));
                }
                let evidence = evidence.join(" ");
                out!("{p:<14} {:<6} {:<26} {evidence}", v.holds(), format!("{:?}", v.status));
            }
        }
    }
    Ok(true)
}

fn ideals(format: Format, expr: &str) -> Result<bool> {
    let r = parse_ring_expr(expr)?.ring;
    if format == Format::Table {
        out!("{:<24} {:>5}  {:<6} {:<8} {:<8} {:<8}", "ideal", "size", "prime", "maximal", "j_ideal", "quasi_j");
    }
    for s in r.ideal_sets() {
        let i = IdealSet::new(&r, *s)?;
        let proper = i.is_proper();
        let flag = |p: &str| -> Result<Option<bool>> {
            if proper {
                Ok(Some(classify_ideal(&i, p)?.holds))
            } else {
                Ok(None)
            }
        };
        let (prime, maximal, j, qj) = (flag("prime")?, flag("maximal")?, flag("j_ideal")?, flag("quasi_j")?);
        match format {
            Format::Record => print_json(&json!({
                "ring": r.label(),
                "ideal": gens(&r, s),
                "size": s.len(),
                "proper": proper,
                "prime": prime,
                "maximal": maximal,
                "j_ideal": j,
                "quasi_j": qj,
            })),
            Format::Table => {
                let show = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
                out!(
                    "{:<24} {:>5}  {:<6} {:<8} {:<8} {:<8}",
                    r.show_ideal(s),
                    s.len(),
                    show(prime),
                    show(maximal),
                    show(j),
                    show(qj)
                );
            }
        }
    }
    Ok(true)
}

fn load_recipe(path: Option<&PathBuf>) -> Result<Recipe> {
    match path {
        None => Ok(Recipe::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(Recipe::parse(&text)?)
        }
    }
}

fn verify(cli: &Cli, only: Option<Vec<String>>, recipe: Option<&PathBuf>, workers: Option<usize>) -> Result<bool> {
    let catalog = build_catalog(&load_recipe(recipe)?)?;
    let report = run_with(&catalog, &RunOptions { only, workers, bound: cli.bound })?;
    match cli.format {
        Format::Record => out_raw!("{}", report.to_records()),
        Format::Table => out_raw!("{}", report.to_table()),
    }
    Ok(report.ok())
}

fn search(format: Format, property: &str, symbolic: bool, recipe: Option<&PathBuf>) -> Result<bool> {
    let catalog = build_catalog(&load_recipe(recipe)?)?;
    let domain = if symbolic { SearchDomain::Symbolic } else { SearchDomain::Finite };
    let hits = search_counterexample(property, &catalog, domain).map_err(|e| {
        if matches!(e, ringlab::Error::UnknownProperty(_)) {
            eprintln!("known properties: {}", SEARCH_PROPERTIES.join(", "));
        }
        e
    })?;
    match format {
        Format::Record => {
            for h in &hits {
                print_json(h);
            }
        }
        Format::Table => {
            if hits.is_empty() {
                out!("{property}: none found");
            }
            for h in &hits {
                let ideal = h.ideal.as_deref().map(|i| format!(", ideal {i}")).unwrap_or_default();
                let witness = h.witness.as_deref().map(|w| format!(", witness {w}")).unwrap_or_default();
                out!("{property}: {}{ideal}{witness}", h.ring);
            }
        }
    }
    Ok(true)
}

fn example(cli: &Cli, id: &str, mutate: Option<&str>) -> Result<bool> {
    let mut engine = cli.bound.map_or_else(SymEngine::default, SymEngine::new);
    if let Some(m) = mutate {
        engine = engine.with_mutation(Mutation::from_id(m)?);
    }
    let report = if id == "all" { replay_all(&engine)? } else { replay_examples(&engine, &[id])? };
    for r in &report.replays {
        match cli.format {
            Format::Record => print_json(r),
            Format::Table => out_raw!("{}", r.transcript()),
        }
    }
    Ok(report.all_passed())
}
