//! Counterexample search, example replay, and catalog-wide oracles.

use serde::{Deserialize, Serialize};

use super::catalog::Catalog;
use crate::classify::{
    is_delta1_n_ideal, is_n_ideal, j_ideal_by_definition, j_ideal_by_quotient, presimplifiable_by_definition,
    presimplifiable_by_zero_divisors, quasi_j_by_definition, quasi_j_by_pair_scan, quasi_presimplifiable_by_definition,
    quasi_presimplifiable_by_nz, Verdict,
};
use crate::error::{Error, Result};
use crate::finring::{IdealSet, Ring};
use crate::zsym::{BoundedVerdict, Replay, Status, SymElem, SymEngine, SymRing, EXAMPLE_IDS};

/// Properties understood by [`search_counterexample`].
pub const SEARCH_PROPERTIES: [&str; 4] =
    ["quasiJ_not_J", "quasi_presimpl_not_presimpl", "quasiJ_not_delta1n", "j_not_n"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchDomain {
    Finite,
    Symbolic,
}

/// A member exhibiting a property, with the ideal (if any) and the witness
/// refuting the stronger class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub ring: String,
    pub ideal: Option<String>,
    pub witness: Option<String>,
}

/// `(weaker, stronger)` predicate names for a property.
fn property_pair(property: &str) -> Result<(&'static str, &'static str, bool)> {
    Ok(match property {
        "quasiJ_not_J" => ("quasi_j", "j_ideal", false),
        "quasiJ_not_delta1n" => ("quasi_j", "delta1_n", false),
        "j_not_n" => ("j_ideal", "n_ideal", false),
        "quasi_presimpl_not_presimpl" => ("quasi_presimplifiable", "presimplifiable", true),
        other => return Err(Error::UnknownProperty(other.to_string())),
    })
}

fn finite_ideal_verdict(i: &IdealSet, pred: &str) -> Result<Verdict> {
    match pred {
        "quasi_j" => quasi_j_by_pair_scan(i),
        "j_ideal" => j_ideal_by_definition(i),
        "delta1_n" => is_delta1_n_ideal(i),
        "n_ideal" => is_n_ideal(i),
        other => Err(Error::UnknownPredicate(other.to_string())),
    }
}

fn finite_hit(r: &Ring, weak: &str, strong: &str, ring_level: bool) -> Result<Option<Hit>> {
    if ring_level {
        let w = quasi_presimplifiable_by_definition(r)?;
        let s = presimplifiable_by_definition(r)?;
        debug_assert_eq!((weak, strong), ("quasi_presimplifiable", "presimplifiable"));
        return Ok((w.holds && !s.holds).then(|| Hit {
            ring: r.label().to_string(),
            ideal: None,
            witness: s.witness.map(|x| x.show(r)),
        }));
    }
    for s in r.ideal_sets().iter().filter(|s| !s.contains(r.one())) {
        let i = IdealSet::trusted(r, *s);
        if !finite_ideal_verdict(&i, weak)?.holds {
            continue;
        }
        let v = finite_ideal_verdict(&i, strong)?;
        if !v.holds {
            return Ok(Some(Hit {
                ring: r.label().to_string(),
                ideal: Some(r.show_ideal(s)),
                witness: v.witness.map(|x| x.show(r)),
            }));
        }
    }
    Ok(None)
}

fn show_witness(w: &Option<Vec<SymElem<i64>>>) -> Option<String> {
    w.as_ref().map(|es| es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "))
}

fn refuted(v: &BoundedVerdict<i64>) -> bool {
    v.status == Status::RefutedWithWitness
}

fn symbolic_hit(e: &SymEngine, r: SymRing, weak: &str, strong: &str, ring_level: bool) -> Result<Option<Hit>> {
    if ring_level {
        let s = e.sym_ring_classify::<i64>(r, strong)?;
        let hit = e.sym_ring_classify::<i64>(r, weak)?.holds() && refuted(&s);
        return Ok(hit.then(|| Hit { ring: r.to_string(), ideal: None, witness: show_witness(&s.witness) }));
    }
    for i in r.catalog_ideals::<i64>().into_iter().filter(|i| r.is_proper(i)) {
        if !e.sym_classify(r, &i, weak)?.holds() {
            continue;
        }
        let v = e.sym_classify(r, &i, strong)?;
        if refuted(&v) {
            return Ok(Some(Hit {
                ring: r.to_string(),
                ideal: Some(r.show_ideal(&i)),
                witness: show_witness(&v.witness),
            }));
        }
    }
    Ok(None)
}

/// Exhaustive search for members in the weaker class but not the stronger
/// one; returns the first hit of each member, in catalog order. Symbolic
/// hits need a re-validated refutation of the stronger class.
pub fn search_counterexample(property: &str, catalog: &Catalog, domain: SearchDomain) -> Result<Vec<Hit>> {
    let (weak, strong, ring_level) = property_pair(property)?;
    let mut hits = Vec::new();
    match domain {
        SearchDomain::Finite => {
            for b in catalog.finite() {
                hits.extend(finite_hit(&b.ring, weak, strong, ring_level)?);
            }
        }
        SearchDomain::Symbolic => {
            let e = SymEngine::new(catalog.bound());
            for r in catalog.symbolic() {
                hits.extend(symbolic_hit(&e, r, weak, strong, ring_level)?);
            }
        }
    }
    Ok(hits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub replays: Vec<Replay>,
}

impl ReplayReport {
    pub fn passed(&self) -> usize {
        self.replays.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.replays.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Replays the listed examples; an empty list is an error.
pub fn replay_examples(engine: &SymEngine, ids: &[&str]) -> Result<ReplayReport> {
    if ids.is_empty() {
        return Err(Error::EmptyRegistry);
    }
    let replays = ids.iter().map(|id| engine.replay_example(id)).collect::<Result<_>>()?;
    Ok(ReplayReport { replays })
}

/// Replays every registered example.
pub fn replay_all(engine: &SymEngine) -> Result<ReplayReport> {
    replay_examples(engine, &EXAMPLE_IDS)
}

/// Facts every finite ring satisfies: `N(R) = J(R)`, and a quasi J-ideal
/// exists exactly when the ring is quasi-local.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaFacts {
    pub rings: usize,
    pub quasi_local: usize,
    pub with_quasi_j: usize,
    pub violations: Vec<String>,
}

impl MetaFacts {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn meta_facts(catalog: &Catalog) -> Result<MetaFacts> {
    let mut m = MetaFacts::default();
    for b in catalog.finite() {
        let r = &b.ring;
        m.rings += 1;
        if r.nilradical_set() != r.jacobson_set() {
            m.violations.push(format!("{}: N(R) != J(R)", r.label()));
        }
        let local = r.maximal_sets().len() == 1;
        let mut has_qj = false;
        for s in r.ideal_sets().iter().filter(|s| !s.contains(r.one())) {
            if quasi_j_by_pair_scan(&IdealSet::trusted(r, *s))?.holds {
                has_qj = true;
                break;
            }
        }
        m.quasi_local += local as usize;
        m.with_quasi_j += has_qj as usize;
        if local != has_qj {
            m.violations.push(format!("{}: quasi-local = {local}, has quasi J-ideal = {has_qj}", r.label()));
        }
    }
    Ok(m)
}

/// Agreement between definition- and characterization-based routes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAgreement {
    pub rings: usize,
    pub ideals: usize,
    pub comparisons: usize,
    pub disagreements: Vec<String>,
}

impl OracleAgreement {
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty()
    }
}

pub fn oracle_agreement(catalog: &Catalog) -> Result<OracleAgreement> {
    let mut o = OracleAgreement::default();
    for b in catalog.finite() {
        let r = &b.ring;
        let label = r.label();
        o.rings += 1;
        let mut compare = |what: &str, x: bool, y: bool| {
            o.comparisons += 1;
            if x != y {
                o.disagreements.push(format!("{label}: {what}: definition {x}, characterization {y}"));
            }
        };
        compare("presimplifiable", presimplifiable_by_definition(r)?.holds, presimplifiable_by_zero_divisors(r));
        compare("quasi_presimplifiable", quasi_presimplifiable_by_definition(r)?.holds, quasi_presimplifiable_by_nz(r));
        for s in r.ideal_sets().iter().filter(|s| !s.contains(r.one())) {
            let i = IdealSet::trusted(r, *s);
            let shown = r.show_ideal(s);
            compare(&format!("j_ideal {shown}"), j_ideal_by_definition(&i)?.holds, j_ideal_by_quotient(&i)?);
            compare(&format!("quasi_j {shown}"), quasi_j_by_definition(&i)?, quasi_j_by_pair_scan(&i)?.holds);
            o.ideals += 1;
        }
    }
    Ok(o)
}
