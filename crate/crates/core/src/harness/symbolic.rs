//! Symbolic variants of a few checks, over the catalog ideals of each family.

use super::Tally;
use crate::error::{Error, Result};
use crate::zsym::{bounded_elements, SymElem, SymEngine, SymIdeal, SymRing};

type I = SymIdeal<i64>;

/// Coordinate bound for the elements `s` used in colon checks.
const COLON_BOUND: u64 = 6;

fn proper_ideals(r: SymRing) -> Vec<I> {
    r.catalog_ideals::<i64>().into_iter().filter(|i| r.is_proper(i)).collect()
}

fn qj(e: &SymEngine, r: SymRing, i: &I) -> Result<bool> {
    Ok(e.sym_classify(r, i, "quasi_j")?.holds())
}

pub(super) fn t_semi(r: SymRing, e: &SymEngine, t: &mut Tally) -> Result<()> {
    if r != SymRing::Z {
        return Ok(());
    }
    let label = r.to_string();
    let semiprimitive = e.sym_jacobson::<i64>(r) == r.zero_ideal();
    let domain = e.sym_ring_classify::<i64>(r, "domain")?.holds();
    for i in proper_ideals(r) {
        let flag = qj(e, r, &i)?;
        t.implication(
            &label,
            semiprimitive && domain,
            || flag == (i == r.zero_ideal()),
            || format!("I = {}, quasi_j = {flag}", r.show_ideal(&i)),
        );
    }
    Ok(())
}

/// Catalog ideals that are maximal: `<p>` in Z, `<p>` in Z_(p), `pZ(+)M`.
fn is_maximal(r: SymRing, i: &I) -> bool {
    let prime = |a: i64| a > 1 && (2..a).all(|d| a % d != 0);
    match (r, i) {
        (SymRing::Z, SymIdeal::Principal(a)) => prime(*a),
        (SymRing::ZLocal(_), SymIdeal::LocalPower(1)) => true,
        (_, SymIdeal::Homogeneous { a, n }) => prime(*a) && *n == 1,
        _ => false,
    }
}

/// Conditions quantifying over ideals range over the catalog ideals.
pub(super) fn t_ql(r: SymRing, e: &SymEngine, t: &mut Tally) -> Result<()> {
    let local = e.sym_ring_classify::<i64>(r, "quasi_local")?.holds();
    let (mut all, mut maximal) = (true, true);
    for i in proper_ideals(r) {
        let flag = qj(e, r, &i)?;
        all &= flag;
        if is_maximal(r, &i) {
            maximal &= flag;
        }
    }
    t.equivalence(&r.to_string(), &[local, all, maximal], || "catalog ideals".into());
    Ok(())
}

pub(super) fn t_pide(r: SymRing, e: &SymEngine, t: &mut Tally) -> Result<()> {
    if !r.is_idealization() {
        return Ok(());
    }
    let label = r.to_string();
    for i in proper_ideals(r) {
        let SymIdeal::Homogeneous { a, n } = i else { continue };
        if n != 1 {
            continue;
        }
        let lifted = qj(e, r, &i)?;
        let base = qj(e, SymRing::Z, &SymIdeal::Principal(a))?;
        t.equivalence(&label, &[lifted, base], || format!("I = {}", r.show_ideal(&i)));
    }
    Ok(())
}

pub(super) fn t_l1(r: SymRing, e: &SymEngine, t: &mut Tally) -> Result<()> {
    let label = r.to_string();
    let jac = e.sym_jacobson::<i64>(r);
    let elems: Vec<SymElem<i64>> = bounded_elements(r, COLON_BOUND);
    for i in proper_ideals(r) {
        if !qj(e, r, &i)? {
            continue;
        }
        let rad = e.sym_radical(r, &i)?;
        for s in elems.iter().filter(|s| !r.contains(&jac, s)) {
            let lhs = match e.sym_colon(r, &i, s) {
                Ok(col) => e.sym_radical(r, &col)?,
                Err(Error::NonHomogeneous(_)) => continue,
                Err(err) => return Err(err),
            };
            let rhs = match e.sym_colon(r, &rad, s) {
                Ok(col) => col,
                Err(Error::NonHomogeneous(_)) => continue,
                Err(err) => return Err(err),
            };
            t.implication(
                &label,
                true,
                || lhs == rhs,
                || format!("I = {}, s = {s}: {} vs {}", r.show_ideal(&i), r.show_ideal(&lhs), r.show_ideal(&rhs)),
            );
        }
    }
    Ok(())
}

pub(super) fn c_0(r: SymRing, e: &SymEngine, t: &mut Tally) -> Result<()> {
    let label = r.to_string();
    let zero = r.zero_ideal::<i64>();
    let pre = e.sym_ring_classify::<i64>(r, "presimplifiable")?.holds();
    let qpre = e.sym_ring_classify::<i64>(r, "quasi_presimplifiable")?.holds();
    let j0 = e.sym_classify(r, &zero, "j_ideal")?.holds();
    let qj0 = qj(e, r, &zero)?;
    t.equivalence(&label, &[pre, j0], || "presimplifiable vs 0 J-ideal".into());
    t.equivalence(&label, &[qpre, qj0], || "quasi presimplifiable vs 0 quasi J-ideal".into());
    Ok(())
}
