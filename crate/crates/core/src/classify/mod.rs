//! Ideal-class and ring-class predicates.
//!
//! Every predicate returns a [`Verdict`]. A false verdict carries the
//! lexicographically smallest falsifying witness (by element id), and that
//! witness is re-checked against the plain definition before it is returned.
//! Predicates that have a second characterization compute both and fail with
//! [`Error::Inconsistent`] if they disagree.

mod raw;

use serde::{Deserialize, Serialize};

use crate::construct::quotient;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{enumerate_ideals, radical, Elem, IdealSet, Ring, RingTable};

/// Evidence that a predicate fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    Pair(Elem, Elem),
    Element(Elem),
    /// Member ids of an ideal.
    Ideal(Vec<Elem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub predicate: &'static str,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// A pair scan whose hypothesis no pair satisfied.
    pub vacuous: bool,
    /// Pairs satisfying the scan hypothesis; 0 for predicates without a scan.
    pub hypothesis_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessRecord {
    Pair([String; 2]),
    Element(String),
    Ideal(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub predicate: String,
    pub ring: String,
    pub ideal: Option<Vec<String>>,
    pub holds: bool,
    pub witness: Option<WitnessRecord>,
    pub vacuous: bool,
    pub hypothesis_count: u64,
}

impl Witness {
    pub fn show(&self, r: &RingTable) -> String {
        match self {
            Witness::Pair(a, b) => format!("({}, {})", r.name(*a), r.name(*b)),
            Witness::Element(a) => r.name(*a).to_string(),
            Witness::Ideal(m) => r.show_ideal(&m.iter().copied().collect()),
        }
    }

    pub fn record(&self, r: &RingTable) -> WitnessRecord {
        match self {
            Witness::Pair(a, b) => WitnessRecord::Pair([r.name(*a).into(), r.name(*b).into()]),
            Witness::Element(a) => WitnessRecord::Element(r.name(*a).into()),
            Witness::Ideal(m) => {
                let gens = r.canonical_generators(&m.iter().copied().collect());
                WitnessRecord::Ideal(gens.into_iter().map(|g| r.name(g).to_string()).collect())
            }
        }
    }
}

impl Verdict {
    fn decided(predicate: &'static str, witness: Option<Witness>) -> Self {
        Verdict { predicate, holds: witness.is_none(), witness, vacuous: false, hypothesis_count: 0 }
    }

    fn from_scan(predicate: &'static str, scan: Scan) -> Self {
        Verdict {
            predicate,
            holds: scan.first.is_none(),
            witness: scan.first.map(|(a, b)| Witness::Pair(a, b)),
            vacuous: scan.count == 0,
            hypothesis_count: scan.count,
        }
    }

    pub fn record(&self, r: &RingTable, ideal: Option<&IdealSet>) -> VerdictRecord {
        VerdictRecord {
            predicate: self.predicate.to_string(),
            ring: r.label().to_string(),
            ideal: ideal.map(|i| i.generator_names()),
            holds: self.holds,
            witness: self.witness.as_ref().map(|w| w.record(r)),
            vacuous: self.vacuous,
            hypothesis_count: self.hypothesis_count,
        }
    }
}

struct Scan {
    count: u64,
    first: Option<(Elem, Elem)>,
}

/// Counts pairs satisfying `hyp` and returns the first (by `a`, then `b`)
/// where `concl` fails.
fn scan_pairs(r: &RingTable, hyp: impl Fn(Elem, Elem) -> bool, concl: impl Fn(Elem, Elem) -> bool) -> Scan {
    let mut scan = Scan { count: 0, first: None };
    for a in r.elements() {
        for b in r.elements() {
            if hyp(a, b) {
                scan.count += 1;
                if scan.first.is_none() && !concl(a, b) {
                    scan.first = Some((a, b));
                }
            }
        }
    }
    scan
}

pub const IDEAL_PREDICATES: &[&str] = &[
    "prime",
    "maximal",
    "primary",
    "quasi_primary",
    "n_ideal",
    "j_ideal",
    "quasi_j",
    "delta1_n",
    "superfluous",
    "regular",
];

pub const RING_PREDICATES: &[&str] = &[
    "field",
    "domain",
    "reduced",
    "quasi_local",
    "semiprimitive",
    "von_neumann_regular",
    "zero_dimensional",
    "presimplifiable",
    "quasi_presimplifiable",
];

pub fn classify_ideal(i: &IdealSet, predicate: &str) -> Result<Verdict> {
    match predicate {
        "prime" => is_prime(i),
        "maximal" => is_maximal(i),
        "primary" => is_primary(i),
        "quasi_primary" => is_quasi_primary(i),
        "n_ideal" => is_n_ideal(i),
        "j_ideal" => is_j_ideal(i),
        "quasi_j" => is_quasi_j_ideal(i),
        "delta1_n" => is_delta1_n_ideal(i),
        "superfluous" => is_superfluous(i),
        "regular" => is_regular_ideal(i),
        other => Err(Error::UnknownPredicate(other.to_string())),
    }
}

pub fn classify_ring(r: &Ring, predicate: &str) -> Result<Verdict> {
    match predicate {
        "field" => is_field(r),
        "domain" => is_domain(r),
        "reduced" => is_reduced(r),
        "quasi_local" => is_quasi_local(r),
        "semiprimitive" => is_semiprimitive(r),
        "von_neumann_regular" => is_von_neumann_regular(r),
        "zero_dimensional" => is_zero_dimensional_verdict(r),
        "presimplifiable" => is_presimplifiable(r),
        "quasi_presimplifiable" => is_quasi_presimplifiable(r),
        other => Err(Error::UnknownPredicate(other.to_string())),
    }
}

fn require_proper(i: &IdealSet, predicate: &'static str) -> Result<()> {
    if i.is_proper() {
        Ok(())
    } else {
        Err(Error::NotProper(predicate))
    }
}

fn improper_witness(i: &IdealSet) -> Option<Witness> {
    (!i.is_proper()).then(|| Witness::Element(i.ring().one()))
}

// ---- witness re-validation ----

fn in_set(s: &ElemSet, a: Elem) -> bool {
    s.contains(a)
}

/// Re-checks a false verdict's witness against the raw definition.
fn checked(v: Verdict, r: &RingTable, ideal: Option<&ElemSet>) -> Result<Verdict> {
    let Some(w) = &v.witness else {
        return Ok(v);
    };
    let i = ideal.copied().unwrap_or_else(ElemSet::empty);
    let refutes = match (v.predicate, w) {
        ("prime" | "maximal", Witness::Element(a)) => *a == r.one() && in_set(&i, *a),
        ("prime", Witness::Pair(a, b)) => in_set(&i, r.mul(*a, *b)) && !in_set(&i, *a) && !in_set(&i, *b),
        ("maximal", Witness::Ideal(k)) => {
            let k: ElemSet = k.iter().copied().collect();
            r.ideal_violation(&k).is_none() && i.is_subset(&k) && i != k && !k.contains(r.one())
        }
        ("primary", Witness::Pair(a, b)) => in_set(&i, r.mul(*a, *b)) && !in_set(&i, *a) && !raw::in_radical(r, &i, *b),
        ("quasi_primary", Witness::Pair(a, b)) => {
            raw::in_radical(r, &i, r.mul(*a, *b)) && !raw::in_radical(r, &i, *a) && !raw::in_radical(r, &i, *b)
        }
        ("n_ideal", Witness::Pair(a, b)) => in_set(&i, r.mul(*a, *b)) && !raw::nilpotent(r, *a) && !in_set(&i, *b),
        ("j_ideal", Witness::Pair(a, b)) => in_set(&i, r.mul(*a, *b)) && !raw::in_jacobson(r, *a) && !in_set(&i, *b),
        ("quasi_j", Witness::Pair(a, b)) => {
            in_set(&i, r.mul(*a, *b)) && !raw::in_jacobson(r, *a) && !raw::in_radical(r, &i, *b)
        }
        ("delta1_n", Witness::Pair(a, b)) => {
            in_set(&i, r.mul(*a, *b)) && !raw::nilpotent(r, *a) && !raw::in_radical(r, &i, *b)
        }
        ("superfluous", Witness::Ideal(k)) => {
            let k: ElemSet = k.iter().copied().collect();
            r.ideal_violation(&k).is_none() && !k.contains(r.one()) && r.sum_sets(&i, &k).contains(r.one())
        }
        ("regular", Witness::Element(a)) => r.elements().all(|x| !in_set(&i, r.sub(*a, r.mul(r.mul(*a, *a), x)))),
        ("field", Witness::Element(a)) => *a != r.zero() && !raw::unit(r, *a),
        ("domain", Witness::Pair(a, b)) => *a != r.zero() && *b != r.zero() && r.mul(*a, *b) == r.zero(),
        ("reduced", Witness::Element(a)) => *a != r.zero() && raw::nilpotent(r, *a),
        ("quasi_local", Witness::Pair(a, b)) => !raw::unit(r, *a) && !raw::unit(r, *b) && raw::unit(r, r.add(*a, *b)),
        ("semiprimitive", Witness::Element(a)) => *a != r.zero() && raw::in_jacobson(r, *a),
        ("von_neumann_regular", Witness::Element(a)) => r.elements().all(|x| r.mul(r.mul(*a, *a), x) != *a),
        ("zero_dimensional", Witness::Ideal(p)) => {
            let p: ElemSet = p.iter().copied().collect();
            let prime = r.ideal_violation(&p).is_none()
                && !p.contains(r.one())
                && r.elements()
                    .all(|a| r.elements().all(|b| !p.contains(r.mul(a, b)) || p.contains(a) || p.contains(b)));
            let bigger = r.ideal_sets().iter().any(|k| p.is_subset(k) && *k != p && !k.contains(r.one()));
            prime && bigger
        }
        ("presimplifiable", Witness::Pair(a, b)) => r.mul(*a, *b) == *a && *a != r.zero() && !raw::unit(r, *b),
        ("quasi_presimplifiable", Witness::Pair(a, b)) => {
            r.mul(*a, *b) == *a && !raw::nilpotent(r, *a) && !raw::unit(r, *b)
        }
        _ => false,
    };
    if refutes {
        Ok(v)
    } else {
        Err(Error::InvalidWitness { predicate: v.predicate.to_string(), detail: w.show(r) })
    }
}

fn checked_ideal(v: Verdict, i: &IdealSet) -> Result<Verdict> {
    checked(v, i.ring(), Some(i.members()))
}

fn agree(predicate: &str, definition: bool, characterization: bool) -> Result<()> {
    if definition == characterization {
        Ok(())
    } else {
        Err(Error::Inconsistent { predicate: predicate.to_string(), definition, characterization })
    }
}

// ---- ideal predicates ----

pub fn is_proper(i: &IdealSet) -> bool {
    i.is_proper()
}

pub fn is_prime(i: &IdealSet) -> Result<Verdict> {
    if let Some(w) = improper_witness(i) {
        return checked_ideal(Verdict::decided("prime", Some(w)), i);
    }
    let (r, m) = (i.ring(), i.members());
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)), |a, b| m.contains(a) || m.contains(b));
    checked_ideal(Verdict::from_scan("prime", scan), i)
}

/// Maximal: proper with no ideal strictly between it and `R`; the witness
/// is the smallest such ideal.
pub fn is_maximal(i: &IdealSet) -> Result<Verdict> {
    let r = i.ring();
    let witness = improper_witness(i).or_else(|| {
        r.ideal_sets()
            .iter()
            .find(|k| i.members().is_subset(k) && *k != i.members() && !k.contains(r.one()))
            .map(|k| Witness::Ideal(k.to_vec()))
    });
    checked_ideal(Verdict::decided("maximal", witness), i)
}

/// `ab ∈ I` implies `a ∈ I` or `b ∈ √I`.
pub fn is_primary(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "primary")?;
    let (r, m) = (i.ring(), i.members());
    let rad = radical(i);
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)), |a, b| m.contains(a) || rad.contains(b));
    checked_ideal(Verdict::from_scan("primary", scan), i)
}

/// `√I` is prime.
pub fn is_quasi_primary(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "quasi_primary")?;
    let r = i.ring();
    let rad = radical(i);
    let m = rad.members();
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)), |a, b| m.contains(a) || m.contains(b));
    checked_ideal(Verdict::from_scan("quasi_primary", scan), i)
}

/// `ab ∈ I`, `a ∉ N(R)` implies `b ∈ I`.
pub fn is_n_ideal(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "n_ideal")?;
    let (r, m) = (i.ring(), i.members());
    let nil = r.nilradical_set();
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)) && !nil.contains(a), |_, b| m.contains(b));
    checked_ideal(Verdict::from_scan("n_ideal", scan), i)
}

/// Pair scan for `ab ∈ I`, `a ∉ J(R)` implies `b ∈ I`.
pub fn j_ideal_by_definition(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "j_ideal")?;
    let (r, m) = (i.ring(), i.members());
    let j = r.jacobson_set();
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)) && !j.contains(a), |_, b| m.contains(b));
    checked_ideal(Verdict::from_scan("j_ideal", scan), i)
}

/// `I ⊆ J(R)` and `R/I` presimplifiable.
pub fn j_ideal_by_quotient(i: &IdealSet) -> Result<bool> {
    require_proper(i, "j_ideal")?;
    let r = i.ring();
    if !i.members().is_subset(&r.jacobson_set()) {
        return Ok(false);
    }
    let (q, _) = quotient(r, i)?;
    Ok(is_presimplifiable(&q)?.holds)
}

pub fn is_j_ideal(i: &IdealSet) -> Result<Verdict> {
    let v = j_ideal_by_definition(i)?;
    agree("j_ideal", v.holds, j_ideal_by_quotient(i)?)?;
    Ok(v)
}

/// `√I` is a J-ideal.
pub fn quasi_j_by_definition(i: &IdealSet) -> Result<bool> {
    require_proper(i, "quasi_j")?;
    Ok(j_ideal_by_definition(&radical(i))?.holds)
}

/// Pair scan for `ab ∈ I` implies `a ∈ J(R)` or `b ∈ √I`.
pub fn quasi_j_by_pair_scan(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "quasi_j")?;
    let (r, m) = (i.ring(), i.members());
    let j = r.jacobson_set();
    let rad = r.radical_set(m);
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)), |a, b| j.contains(a) || rad.contains(b));
    checked_ideal(Verdict::from_scan("quasi_j", scan), i)
}

pub fn is_quasi_j_ideal(i: &IdealSet) -> Result<Verdict> {
    let v = quasi_j_by_pair_scan(i)?;
    agree("quasi_j", quasi_j_by_definition(i)?, v.holds)?;
    Ok(v)
}

/// `ab ∈ I` implies `a ∈ N(R)` or `b ∈ √I`.
pub fn is_delta1_n_ideal(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "delta1_n")?;
    let (r, m) = (i.ring(), i.members());
    let nil = r.nilradical_set();
    let rad = r.radical_set(m);
    let scan = scan_pairs(r, |a, b| m.contains(r.mul(a, b)), |a, b| nil.contains(a) || rad.contains(b));
    checked_ideal(Verdict::from_scan("delta1_n", scan), i)
}

/// `I + K = R` forces `K = R`; the witness is the smallest proper `K` with
/// `I + K = R`.
pub fn is_superfluous(i: &IdealSet) -> Result<Verdict> {
    let r = i.ring();
    let witness = r
        .ideal_sets()
        .iter()
        .find(|k| !k.contains(r.one()) && r.sum_sets(i.members(), k).contains(r.one()))
        .map(|k| Witness::Ideal(k.to_vec()));
    checked_ideal(Verdict::decided("superfluous", witness), i)
}

/// `R/I` is von Neumann regular. The witness is the smallest element of
/// `R` whose coset has no `x` with `a = a^2 x`.
pub fn is_regular_ideal(i: &IdealSet) -> Result<Verdict> {
    require_proper(i, "regular")?;
    let (q, pi) = quotient(i.ring(), i)?;
    let v = is_von_neumann_regular(&q)?;
    let witness = v.witness.map(|w| match w {
        Witness::Element(c) => {
            Witness::Element(i.ring().elements().find(|&a| pi.apply(a) == c).expect("projection is onto"))
        }
        other => other,
    });
    checked_ideal(Verdict::decided("regular", witness), i)
}

// ---- ring predicates ----

fn checked_ring(v: Verdict, r: &RingTable) -> Result<Verdict> {
    checked(v, r, None)
}

pub fn is_field(r: &Ring) -> Result<Verdict> {
    let w = r.elements().find(|&a| a != r.zero() && !r.is_unit(a)).map(Witness::Element);
    checked_ring(Verdict::decided("field", w), r)
}

pub fn is_domain(r: &Ring) -> Result<Verdict> {
    let z = r.zero();
    let scan = scan_pairs(r, |a, b| a != z && b != z, |a, b| r.mul(a, b) != z);
    checked_ring(Verdict::from_scan("domain", scan), r)
}

pub fn is_reduced(r: &Ring) -> Result<Verdict> {
    let w = r.nilradical_set().iter().find(|&a| a != r.zero()).map(Witness::Element);
    checked_ring(Verdict::decided("reduced", w), r)
}

/// Exactly one maximal ideal. A false verdict carries two non-units whose
/// sum is a unit.
pub fn is_quasi_local(r: &Ring) -> Result<Verdict> {
    let holds = r.maximal_sets().len() == 1;
    let u = r.unit_set();
    let w = if holds {
        None
    } else {
        let scan = scan_pairs(r, |a, b| !u.contains(a) && !u.contains(b), |a, b| !u.contains(r.add(a, b)));
        Some(scan.first.map(|(a, b)| Witness::Pair(a, b)).expect("two maximal ideals give such a pair"))
    };
    checked_ring(Verdict::decided("quasi_local", w), r)
}

pub fn is_semiprimitive(r: &Ring) -> Result<Verdict> {
    let w = r.jacobson_set().iter().find(|&a| a != r.zero()).map(Witness::Element);
    checked_ring(Verdict::decided("semiprimitive", w), r)
}

/// Every `a` has some `x` with `a = a^2 x`.
pub fn is_von_neumann_regular(r: &Ring) -> Result<Verdict> {
    let w = r
        .elements()
        .find(|&a| {
            let a2 = r.mul(a, a);
            r.elements().all(|x| r.mul(a2, x) != a)
        })
        .map(Witness::Element);
    checked_ring(Verdict::decided("von_neumann_regular", w), r)
}

pub fn is_zero_dimensional_verdict(r: &Ring) -> Result<Verdict> {
    let maximal = r.maximal_sets();
    let w = r.prime_sets().iter().find(|p| !maximal.contains(p)).map(|p| Witness::Ideal(p.to_vec()));
    checked_ring(Verdict::decided("zero_dimensional", w), r)
}

/// Pair scan for `a = ab` implies `a = 0` or `b ∈ U(R)`.
pub fn presimplifiable_by_definition(r: &Ring) -> Result<Verdict> {
    let u = r.unit_set();
    let scan = scan_pairs(r, |a, b| r.mul(a, b) == a, |a, b| a == r.zero() || u.contains(b));
    checked_ring(Verdict::from_scan("presimplifiable", scan), r)
}

/// `Z(R) ⊆ J(R)`.
pub fn presimplifiable_by_zero_divisors(r: &Ring) -> bool {
    r.zero_divisor_set().is_subset(&r.jacobson_set())
}

pub fn is_presimplifiable(r: &Ring) -> Result<Verdict> {
    let v = presimplifiable_by_definition(r)?;
    agree("presimplifiable", v.holds, presimplifiable_by_zero_divisors(r))?;
    Ok(v)
}

/// Pair scan for `a = ab` implies `a ∈ N(R)` or `b ∈ U(R)`.
pub fn quasi_presimplifiable_by_definition(r: &Ring) -> Result<Verdict> {
    let u = r.unit_set();
    let nil = r.nilradical_set();
    let scan = scan_pairs(r, |a, b| r.mul(a, b) == a, |a, b| nil.contains(a) || u.contains(b));
    checked_ring(Verdict::from_scan("quasi_presimplifiable", scan), r)
}

/// `NZ(R) ⊆ J(R)`.
pub fn quasi_presimplifiable_by_nz(r: &Ring) -> bool {
    r.not_quasi_regular_set().is_subset(&r.jacobson_set())
}

pub fn is_quasi_presimplifiable(r: &Ring) -> Result<Verdict> {
    let v = quasi_presimplifiable_by_definition(r)?;
    agree("quasi_presimplifiable", v.holds, quasi_presimplifiable_by_nz(r))?;
    Ok(v)
}

/// All ideal predicates that apply to `i` (the proper-only ones are skipped
/// for `I = R`).
pub fn classify_all(i: &IdealSet) -> Result<Vec<Verdict>> {
    IDEAL_PREDICATES.iter().filter(|_| i.is_proper()).map(|p| classify_ideal(i, p)).collect()
}

/// Proper ideals of `r`, smallest first.
pub fn proper_ideals(r: &Ring) -> Vec<IdealSet> {
    enumerate_ideals(r).into_iter().filter(|i| i.is_proper()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{parse_ideal_expr, parse_ring_expr, zmod};

    fn ideal(text: &str) -> IdealSet {
        parse_ideal_expr(text).unwrap().1
    }

    fn ring(text: &str) -> Ring {
        parse_ring_expr(text).unwrap().ring
    }

    #[test]
    fn prime_and_maximal() {
        assert!(is_prime(&ideal("ideal (Z 12) 2")).unwrap().holds);
        let v = is_prime(&ideal("ideal (Z 12) 4")).unwrap();
        assert_eq!(v.witness, Some(Witness::Pair(2, 2)));
        assert!(is_maximal(&ideal("ideal (Z 5) 0")).unwrap().holds);
        let v = is_maximal(&ideal("ideal (Z 12) 4")).unwrap();
        assert_eq!(v.witness, Some(Witness::Ideal(vec![0, 2, 4, 6, 8, 10])));
        assert_eq!(is_prime(&ideal("ideal (Z 4) 1")).unwrap().witness, Some(Witness::Element(1)));
    }

    #[test]
    fn primary_family() {
        assert!(is_primary(&ideal("ideal (Z 12) 4")).unwrap().holds);
        assert_eq!(is_primary(&ideal("ideal (Z 12) 6")).unwrap().witness, Some(Witness::Pair(2, 3)));
        assert!(is_quasi_primary(&ideal("ideal (Z 8) 4")).unwrap().holds);
        assert!(!is_quasi_primary(&ideal("ideal (Z 12) 6")).unwrap().holds);
        assert_eq!(is_primary(&ideal("ideal (Z 4) 1")).unwrap_err(), Error::NotProper("primary"));
    }

    #[test]
    fn n_and_j_ideals() {
        assert!(is_n_ideal(&ideal("ideal (Z 4) 0")).unwrap().holds);
        // 2 * 1 lies in <2>, 2 is not nilpotent, 1 is not in <2>
        let v = is_n_ideal(&ideal("ideal (Z 6) 2")).unwrap();
        assert_eq!(v.witness, Some(Witness::Pair(2, 1)));
        assert!(is_j_ideal(&ideal("ideal (Z 8) 4")).unwrap().holds);
        assert!(!is_j_ideal(&ideal("ideal (Z 6) 2")).unwrap().holds);
    }

    #[test]
    fn quasi_j_and_delta() {
        assert!(is_quasi_j_ideal(&ideal("ideal (Z 8) 4")).unwrap().holds);
        assert!(!is_quasi_j_ideal(&ideal("ideal (Z 6) 3")).unwrap().holds);
        assert!(is_delta1_n_ideal(&ideal("ideal (Z 8) 2")).unwrap().holds);
        assert!(is_delta1_n_ideal(&ideal("ideal (Z 5) 0")).unwrap().holds);
    }

    #[test]
    fn superfluous_and_regular() {
        assert!(is_superfluous(&ideal("ideal (Z 12) 6")).unwrap().holds);
        assert_eq!(is_superfluous(&ideal("ideal (Z 6) 2")).unwrap().witness, Some(Witness::Ideal(vec![0, 3])));
        assert!(is_regular_ideal(&ideal("ideal (Z 12) 2")).unwrap().holds);
        assert_eq!(is_regular_ideal(&ideal("ideal (Z 8) 4")).unwrap().witness, Some(Witness::Element(2)));
        assert!(is_regular_ideal(&ideal("ideal (Z 7) 0")).unwrap().holds);
    }

    #[test]
    fn ring_predicates() {
        assert!(is_quasi_local(&zmod(8).unwrap()).unwrap().holds);
        assert_eq!(is_quasi_local(&zmod(6).unwrap()).unwrap().witness, Some(Witness::Pair(2, 3)));
        assert!(is_semiprimitive(&zmod(6).unwrap()).unwrap().holds);
        assert!(!is_field(&zmod(4).unwrap()).unwrap().holds);
        assert!(is_von_neumann_regular(&zmod(6).unwrap()).unwrap().holds);
        assert_eq!(is_von_neumann_regular(&zmod(4).unwrap()).unwrap().witness, Some(Witness::Element(2)));
        assert!(is_presimplifiable(&zmod(4).unwrap()).unwrap().holds);
        assert!(!is_quasi_presimplifiable(&zmod(6).unwrap()).unwrap().holds);
        assert!(is_quasi_presimplifiable(&zmod(7).unwrap()).unwrap().holds);
        assert!(is_zero_dimensional_verdict(&ring("polyq 2 x^2")).unwrap().holds);
        assert_eq!(is_domain(&zmod(4).unwrap()).unwrap().witness, Some(Witness::Pair(2, 2)));
    }

    #[test]
    fn bad_witness_is_caught() {
        let r = zmod(6).unwrap();
        let fake = Verdict::decided("field", Some(Witness::Element(5)));
        assert!(matches!(checked(fake, &r, None), Err(Error::InvalidWitness { .. })));
    }

    #[test]
    fn records_and_dispatch() {
        let i = ideal("ideal (Z 6) 2");
        let rec = is_j_ideal(&i).unwrap().record(i.ring(), Some(&i));
        assert_eq!(rec.ideal, Some(vec!["2".to_string()]));
        assert!(!rec.holds);
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(serde_json::from_str::<VerdictRecord>(&text).unwrap(), rec);
        assert!(matches!(classify_ideal(&i, "bogus"), Err(Error::UnknownPredicate(_))));
        assert_eq!(classify_all(&i).unwrap().len(), IDEAL_PREDICATES.len());
    }
}
