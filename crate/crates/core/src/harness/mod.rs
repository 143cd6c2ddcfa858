//! Theorem registry and catalog runner.
//!
//! Every registered statement is encoded as an executable check, swept over a
//! catalog of table rings and symbolic families. Reports are deterministic:
//! members are merged in catalog order and failures are sorted.

mod catalog;
mod checks;
mod ctx;
mod explore;
mod symbolic;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use catalog::{
    build_catalog, Catalog, DerivedFamily, IdealizationFamily, Member, PolyFamily, ProductFamily, Recipe,
    SymbolicFamily, ZmodFamily,
};
pub use ctx::{QuotientInfo, RingCtx};
pub use explore::{
    meta_facts, oracle_agreement, replay_all, replay_examples, search_counterexample, Hit, MetaFacts, OracleAgreement,
    ReplayReport, SearchDomain, SEARCH_PROPERTIES,
};

use crate::construct::Built;
use crate::error::{Error, Result};
use crate::zsym::{SymEngine, SymRing};

/// Environment variable that overrides the worker count.
pub const WORKERS_ENV: &str = "RINGLAB_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    PerRing,
    PerIdeal,
    PerIdealPair,
    PerHom,
    Symbolic,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub ring: String,
    pub detail: String,
}

/// Counts for one check on one or more members.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    pub instances: u64,
    pub hypothesis_satisfied: u64,
    pub failures: Vec<Failure>,
}

impl Tally {
    /// One instance of `hyp => concl`; `concl` is evaluated only under `hyp`.
    pub fn implication(
        &mut self,
        ring: &str,
        hyp: bool,
        concl: impl FnOnce() -> bool,
        detail: impl FnOnce() -> String,
    ) {
        self.instances += 1;
        if hyp {
            self.hypothesis_satisfied += 1;
            if !concl() {
                self.failures.push(Failure { ring: ring.to_string(), detail: detail() });
            }
        }
    }

    /// One instance of a full biconditional; counts as satisfied when every
    /// condition holds.
    pub fn equivalence(&mut self, ring: &str, conds: &[bool], detail: impl FnOnce() -> String) {
        self.instances += 1;
        if conds.iter().all(|&c| c) {
            self.hypothesis_satisfied += 1;
        } else if conds.iter().any(|&c| c) {
            let flags: Vec<String> = conds.iter().map(|c| c.to_string()).collect();
            self.failures
                .push(Failure { ring: ring.to_string(), detail: format!("{} [{}]", detail(), flags.join(", ")) });
        }
    }

    /// An instance outside the statement's hypothesis.
    pub fn skip(&mut self) {
        self.instances += 1;
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.hypothesis_satisfied += other.hypothesis_satisfied;
        self.failures.extend(other.failures);
    }
}

type FiniteCheck = fn(&RingCtx, &mut Tally) -> Result<()>;
type SymbolicCheck = fn(SymRing, &SymEngine, &mut Tally) -> Result<()>;

pub struct TheoremCheck {
    pub id: &'static str,
    pub summary: &'static str,
    pub scope: Scope,
    pub finite: Option<FiniteCheck>,
    pub symbolic: Option<SymbolicCheck>,
}

macro_rules! check {
    ($id:literal, $scope:ident, $summary:literal, $finite:expr, $sym:expr) => {
        TheoremCheck { id: $id, summary: $summary, scope: Scope::$scope, finite: $finite, symbolic: $sym }
    };
}

/// The full registry, in report order.
pub fn registry() -> Vec<TheoremCheck> {
    use checks as f;
    use symbolic as s;
    vec![
        check!("T-EQ", PerIdeal, "quasi J-ideal iff aK in I forces a in J(R) or K in rad I, iff the same for ideals K, L, iff ab in I forces a in J(R) or b in rad I", Some(f::t_eq), None),
        check!("C-EQ", PerIdealPair, "for L not in J(R): quasi J-ideals with IL = KL share a radical, and IL quasi J-ideal gives rad IL = rad I", Some(f::c_eq), None),
        check!("T-JI", PerIdeal, "quasi J-ideal iff I in J(R) and ab in I forces a in J(I) or b in rad I", Some(f::t_ji), None),
        check!("T-QL", PerRing, "quasi-local iff every proper (principal) ideal is a J-ideal, iff every proper (principal) ideal is quasi J, iff every maximal ideal is quasi J", Some(f::t_ql), Some(s::t_ql)),
        check!("T-DELTA", PerIdeal, "delta1-n-ideals, and primary ideals inside J(R), are quasi J-ideals", Some(f::t_delta), None),
        check!("T-SEMI", PerRing, "in a semiprimitive ring: domain iff 0 is the only quasi J-ideal; otherwise there are none", Some(f::t_semi), Some(s::t_semi)),
        check!("T-L1", PerIdeal, "for a quasi J-ideal I and S not in J(R): rad(I:S) = (rad I:S)", Some(f::t_l1), Some(s::t_l1)),
        check!("T-L2", PerIdeal, "for a quasi J-ideal I and S not in J(R): (I:S) is a quasi J-ideal", Some(f::t_l2), None),
        check!("T-MAX", PerIdeal, "a maximal quasi J-ideal is a J-ideal", Some(f::t_max), None),
        check!("C-J", PerRing, "J(R) is a J-ideal iff a quasi J-ideal iff prime", Some(f::c_j), None),
        check!("T-ZERO", PerIdeal, "zero-dimensional R, I in J(R): quasi J iff quasi primary iff I = P^n for a prime P iff rad I is the unique maximal ideal", Some(f::t_zero), None),
        check!("C-PIR", PerIdeal, "in Z_n: quasi J-ideal iff I = p^n R for a prime element p in J(R), n >= 1", Some(f::c_pir), None),
        check!("T-SUP", PerIdeal, "quasi J-ideals are superfluous", Some(f::t_sup), None),
        check!("T-INT", PerIdealPair, "intersections of quasi J-ideals are quasi J; quasi primary ideals with incomparable radicals and quasi J intersection are quasi J", Some(f::t_int), None),
        check!("T-PROD", PerIdealPair, "products of quasi J-ideals are quasi J; quasi primary ideals with incomparable radicals and quasi J product are quasi J", Some(f::t_prod), None),
        check!("T-F", PerHom, "along R -> R/K: images of quasi J-ideals containing K, and preimages when K is in J(R), are quasi J", Some(f::t_f), None),
        check!("C-QUOT", PerHom, "K in I proper, I quasi J gives I/K quasi J in R/K", Some(f::c_quot), None),
        check!("T-S", PerHom, "with J(S^-1 R) = S^-1 J(R): extensions of quasi J-ideals missing S are quasi J; contractions back under the Z_I filters", Some(f::t_s), None),
        check!("T-R", PerIdeal, "a ring with a nontrivial idempotent has no quasi J-ideals", Some(f::t_r), None),
        check!("T-PIDE", PerIdeal, "I(+)M is quasi J in R(+)M iff I is quasi J in R", Some(f::t_pide), Some(s::t_pide)),
        check!("T-Q1", PerRing, "quasi presimplifiable iff NZ(R) in J(R)", Some(f::t_q1), None),
        check!("T-P/", PerIdeal, "J-ideal (quasi J-ideal) iff I in J(R) and R/I presimplifiable (quasi presimplifiable)", Some(f::t_pquot), None),
        check!("C-0", PerRing, "presimplifiable (quasi presimplifiable) iff 0 is a J-ideal (quasi J-ideal)", Some(f::c_0), Some(s::c_0)),
        check!("T-VNR", PerRing, "a quasi presimplifiable von Neumann regular ring is a field", Some(f::t_vnr), None),
        check!("T-REG", PerIdeal, "a regular quasi J-ideal is maximal", Some(f::t_reg), None),
        check!("ID-J", PerRing, "J(R(+)M) = J(R)(+)M and 0(+)M lies in N(R(+)M)", Some(f::id_j), None),
        check!("ID-RAD", PerIdeal, "rad(I(+)N) = rad I(+)M whenever IM lies in N", Some(f::id_rad), None),
    ]
}

/// Statements not encoded as checks, with the reason.
pub fn out_of_scope() -> Vec<OutOfScope> {
    let item = |item: &str, reason: &str| OutOfScope { item: item.to_string(), reason: reason.to_string() };
    vec![
        item("radical of I[|x|] in a Noetherian ring", "power series rings are infinite"),
        item("I[|x|] quasi J iff I quasi J, R Noetherian", "power series rings are infinite"),
        item("R[x] quasi presimplifiable iff R is and 0 is a delta1-n-ideal", "polynomial rings are infinite"),
        item(
            "I[x] quasi J forces I quasi J; converse for Hilbert R with delta1-n I in J(R)",
            "polynomial rings are infinite; Hilbert hypothesis",
        ),
        item("direct limits of quasi presimplifiable rings", "directed systems are not finite objects"),
        item("unions of J-ideals (quasi J-ideals) over a direct system", "directed systems are not finite objects"),
        item("the localized ring of continuous functions at the maximal ideal of 0", "uncountable ring"),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutOfScope {
    pub item: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: String,
    pub summary: String,
    pub scope: Scope,
    pub instances: u64,
    pub hypothesis_satisfied: u64,
    pub vacuous: u64,
    pub failures: Vec<Failure>,
}

impl TheoremResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub catalog_size: usize,
    pub results: Vec<TheoremResult>,
    /// Members whose evaluation raised an error, as `label: message`.
    pub errors: Vec<String>,
    pub out_of_scope: Vec<OutOfScope>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl Report {
    pub fn failure_count(&self) -> usize {
        self.results.iter().map(|r| r.failures.len()).sum()
    }

    pub fn ok(&self) -> bool {
        self.errors.is_empty() && self.failure_count() == 0
    }

    pub fn result(&self, id: &str) -> Option<&TheoremResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// Pretty JSON without the wall time; identical inputs give identical text.
    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One JSON object per line: each theorem result, then a summary line.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).expect("result serializes"));
            out.push('\n');
        }
        let summary = serde_json::json!({
            "summary": {
                "catalog_size": self.catalog_size,
                "failures": self.failure_count(),
                "errors": self.errors,
                "out_of_scope": self.out_of_scope,
            }
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    /// Human-readable table.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<8} {:>10} {:>10} {:>10} {:>9}  status\n",
            "check", "instances", "satisfied", "vacuous", "failures"
        );
        for r in &self.results {
            out.push_str(&format!(
                "{:<8} {:>10} {:>10} {:>10} {:>9}  {}\n",
                r.id,
                r.instances,
                r.hypothesis_satisfied,
                r.vacuous,
                r.failures.len(),
                if r.passed() { "pass" } else { "FAIL" }
            ));
        }
        for r in self.results.iter().filter(|r| !r.passed()) {
            for f in r.failures.iter().take(20) {
                out.push_str(&format!("  {} on {}: {}\n", r.id, f.ring, f.detail));
            }
            if r.failures.len() > 20 {
                out.push_str(&format!("  {} ... {} more\n", r.id, r.failures.len() - 20));
            }
        }
        for e in &self.errors {
            out.push_str(&format!("  error: {e}\n"));
        }
        out.push_str(&format!(
            "catalog: {} members, {} failures, {} errors, wall time {:.2}s\n",
            self.catalog_size,
            self.failure_count(),
            self.errors.len(),
            self.wall_time.as_secs_f64()
        ));
        if !self.out_of_scope.is_empty() {
            out.push_str("out of scope:\n");
            for o in &self.out_of_scope {
                out.push_str(&format!("  {} ({})\n", o.item, o.reason));
            }
        }
        out
    }
}

/// Options for [`run_with`].
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Check ids to run; `None` runs the whole registry.
    pub only: Option<Vec<String>>,
    /// Worker threads; `None` reads [`WORKERS_ENV`] or uses the available
    /// parallelism.
    pub workers: Option<usize>,
    /// Overrides the catalog's symbolic bound.
    pub bound: Option<u64>,
}

/// Worker count from the environment, else the machine's parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Resolves check ids against the registry, keeping registry order.
pub fn select_checks(only: Option<&[String]>) -> Result<Vec<TheoremCheck>> {
    let all = registry();
    let Some(ids) = only else { return Ok(all) };
    if let Some(bad) = ids.iter().find(|id| !all.iter().any(|c| c.id == id.as_str())) {
        return Err(Error::UnknownTheorem(bad.clone()));
    }
    Ok(all.into_iter().filter(|c| ids.iter().any(|id| id == c.id)).collect())
}

/// Runs the whole registry (or `only`) over the catalog.
pub fn run(catalog: &Catalog, only: Option<&[String]>) -> Result<Report> {
    run_with(catalog, &RunOptions { only: only.map(|o| o.to_vec()), ..Default::default() })
}

type MemberOutcome = std::result::Result<Vec<Tally>, String>;

fn run_finite(b: &Built, checks: &[TheoremCheck]) -> MemberOutcome {
    let label = b.ring.label().to_string();
    let ctx = RingCtx::new(&b.ring, &b.kind).map_err(|e| format!("{label}: {e}"))?;
    checks
        .iter()
        .map(|c| {
            let mut t = Tally::default();
            if let Some(f) = c.finite {
                f(&ctx, &mut t).map_err(|e| format!("{label}: {} {e}", c.id))?;
            }
            Ok(t)
        })
        .collect()
}

fn run_symbolic(r: SymRing, engine: &SymEngine, checks: &[TheoremCheck]) -> MemberOutcome {
    checks
        .iter()
        .map(|c| {
            let mut t = Tally::default();
            if let Some(f) = c.symbolic {
                f(r, engine, &mut t).map_err(|e| format!("{r}: {} {e}", c.id))?;
            }
            Ok(t)
        })
        .collect()
}

pub fn run_with(catalog: &Catalog, opts: &RunOptions) -> Result<Report> {
    let start = Instant::now();
    let checks = select_checks(opts.only.as_deref())?;
    let engine = SymEngine::new(opts.bound.unwrap_or_else(|| catalog.bound()));
    let workers = opts.workers.unwrap_or_else(default_workers).clamp(1, catalog.len().max(1));
    let next = AtomicUsize::new(0);
    let outcomes: Mutex<Vec<Option<MemberOutcome>>> = Mutex::new((0..catalog.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(member) = catalog.members.get(k) else { break };
                let outcome = match member {
                    Member::Finite(b) => run_finite(b, &checks),
                    Member::Symbolic(r) => run_symbolic(*r, &engine, &checks),
                };
                outcomes.lock().expect("no worker panicked")[k] = Some(outcome);
            });
        }
    });
    let mut totals: Vec<Tally> = checks.iter().map(|_| Tally::default()).collect();
    let mut errors = Vec::new();
    for outcome in outcomes.into_inner().expect("no worker panicked") {
        match outcome.expect("every member evaluated") {
            Ok(tallies) => {
                for (total, t) in totals.iter_mut().zip(tallies) {
                    total.merge(t);
                }
            }
            Err(e) => errors.push(e),
        }
    }
    let results = checks
        .iter()
        .zip(totals)
        .map(|(c, mut t)| {
            t.failures.sort();
            TheoremResult {
                id: c.id.to_string(),
                summary: c.summary.to_string(),
                scope: c.scope,
                instances: t.instances,
                hypothesis_satisfied: t.hypothesis_satisfied,
                vacuous: t.instances - t.hypothesis_satisfied,
                failures: t.failures,
            }
        })
        .collect();
    Ok(Report {
        catalog_size: catalog.len(),
        results,
        errors,
        out_of_scope: out_of_scope(),
        wall_time: start.elapsed(),
    })
}
