//! Finite checks: one function per registered statement, run against the
//! cached lattice of a single ring.

use std::collections::{HashMap, HashSet};

use super::ctx::{quasi_j_flags, RingCtx};
use super::Tally;
use crate::classify::{
    is_delta1_n_ideal, is_primary, presimplifiable_by_definition, quasi_presimplifiable_by_definition,
    quasi_presimplifiable_by_nz,
};
use crate::construct::{extend_ideal, localize_at, powers_of, pull_ideal, push_ideal, submodules, RingKind};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::finring::{is_zero_dimensional, IdealSet};

/// Singletons and two-element subsets not contained in `J(R)`.
fn subsets_outside_jacobson(c: &RingCtx) -> Vec<ElemSet> {
    let n = c.ring.order();
    let mut out = Vec::new();
    for a in 0..n {
        if !c.jac.contains(a) {
            out.push(ElemSet::singleton(a));
        }
        for b in a + 1..n {
            if !c.jac.contains(a) || !c.jac.contains(b) {
                let mut s = ElemSet::singleton(a);
                s.insert(b);
                out.push(s);
            }
        }
    }
    out
}

fn comparable(x: &ElemSet, y: &ElemSet) -> bool {
    x.is_subset(y) || y.is_subset(x)
}

pub(super) fn t_eq(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    let nonjac: Vec<usize> = r.elements().filter(|&a| !c.jac.contains(a)).collect();
    for k in c.proper() {
        let (i, rad) = (&c.ideals[k], &c.radicals[k]);
        let c1 = c.qj_by_definition(k);
        let c2 = nonjac
            .iter()
            .all(|&a| c.ideals.iter().all(|kk| !kk.iter().all(|x| i.contains(r.mul(a, x))) || kk.is_subset(rad)));
        let c3 = (0..c.ideals.len()).all(|x| {
            c.ideals[x].is_subset(&c.jac)
                || (0..c.ideals.len()).all(|y| !c.ideals[c.product(x, y)].is_subset(i) || c.ideals[y].is_subset(rad))
        });
        let c4 = c.qj[k];
        t.equivalence(c.label(), &[c1, c2, c3, c4], || format!("I = {}", c.show(i)));
    }
    Ok(())
}

pub(super) fn c_eq(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let proper: Vec<usize> = c.proper().collect();
    for l in 0..c.ideals.len() {
        if c.ideals[l].is_subset(&c.jac) {
            continue;
        }
        for (x, &i) in proper.iter().enumerate() {
            for &k in &proper[x + 1..] {
                let hyp = c.qj[i] && c.qj[k] && c.product(i, l) == c.product(k, l);
                t.implication(
                    c.label(),
                    hyp,
                    || c.radicals[i] == c.radicals[k],
                    || {
                        format!(
                            "I = {}, K = {}, L = {}",
                            c.show(&c.ideals[i]),
                            c.show(&c.ideals[k]),
                            c.show(&c.ideals[l])
                        )
                    },
                );
            }
        }
        for i in 0..c.ideals.len() {
            let il = c.product(i, l);
            let hyp = c.is_proper(il) && c.qj[il];
            t.implication(
                c.label(),
                hyp,
                || c.radicals[il] == c.radicals[i],
                || format!("I = {}, L = {}", c.show(&c.ideals[i]), c.show(&c.ideals[l])),
            );
        }
    }
    Ok(())
}

/// Intersection of the maximal ideals containing `i`.
fn j_of(c: &RingCtx, i: &ElemSet) -> ElemSet {
    c.ring.maximal_sets().iter().filter(|m| i.is_subset(m)).fold(c.ring.full_set(), |acc, m| acc.intersection(m))
}

pub(super) fn t_ji(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    for k in c.proper() {
        let (i, rad) = (&c.ideals[k], &c.radicals[k]);
        let ji = j_of(c, i);
        let c2 = i.is_subset(&c.jac)
            && r.elements()
                .all(|a| ji.contains(a) || r.elements().all(|b| !i.contains(r.mul(a, b)) || rad.contains(b)));
        t.equivalence(c.label(), &[c.qj[k], c2], || format!("I = {}", c.show(i)));
    }
    Ok(())
}

pub(super) fn t_ql(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    let principal: HashSet<usize> =
        r.elements().map(|a| c.index_of(&r.principal_set(a))).filter(|&k| c.is_proper(k)).collect();
    let conds = [
        r.maximal_sets().len() == 1,
        principal.iter().all(|&k| c.j[k]),
        c.proper().all(|k| c.j[k]),
        c.proper().all(|k| c.qj[k]),
        principal.iter().all(|&k| c.qj[k]),
        r.maximal_sets().iter().all(|m| c.qj_of(m)),
    ];
    t.equivalence(c.label(), &conds, || "ring conditions".into());
    Ok(())
}

pub(super) fn t_delta(c: &RingCtx, t: &mut Tally) -> Result<()> {
    for k in c.proper() {
        let i = c.ideal(k);
        let show = || format!("I = {}", c.show(&c.ideals[k]));
        t.implication(c.label(), is_delta1_n_ideal(&i)?.holds, || c.qj[k], show);
        let hyp = is_primary(&i)?.holds && c.ideals[k].is_subset(&c.jac);
        t.implication(c.label(), hyp, || c.qj[k], show);
    }
    Ok(())
}

fn is_domain(c: &RingCtx) -> bool {
    let r = c.ring;
    r.elements().all(|a| a == r.zero() || r.elements().all(|b| b == r.zero() || r.mul(a, b) != r.zero()))
}

pub(super) fn t_semi(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let semiprimitive = c.jac.len() == 1;
    let qjs: Vec<usize> = c.proper().filter(|&k| c.qj[k]).collect();
    let domain = is_domain(c);
    let only_zero = qjs == [0];
    t.implication(
        c.label(),
        semiprimitive,
        || domain == only_zero,
        || format!("domain = {domain}, quasi-J ideals = {qjs:?}"),
    );
    t.implication(c.label(), semiprimitive && !domain, || qjs.is_empty(), || format!("quasi-J ideals = {qjs:?}"));
    Ok(())
}

pub(super) fn t_l1(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    let subsets = subsets_outside_jacobson(c);
    for k in c.proper() {
        for s in &subsets {
            t.implication(
                c.label(),
                c.qj[k],
                || r.radical_set(&r.colon_set(&c.ideals[k], s)) == r.colon_set(&c.radicals[k], s),
                || format!("I = {}, S = {}", c.show(&c.ideals[k]), r.show_set(s)),
            );
        }
    }
    Ok(())
}

pub(super) fn t_l2(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    let subsets = subsets_outside_jacobson(c);
    for k in c.proper() {
        for s in &subsets {
            t.implication(
                c.label(),
                c.qj[k],
                || {
                    let col = c.index_of(&r.colon_set(&c.ideals[k], s));
                    c.is_proper(col) && c.qj[col]
                },
                || format!("I = {}, S = {}", c.show(&c.ideals[k]), r.show_set(s)),
            );
        }
    }
    Ok(())
}

pub(super) fn t_max(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let qjs: Vec<usize> = c.proper().filter(|&k| c.qj[k]).collect();
    for k in c.proper() {
        let maximal_qj = c.qj[k] && !qjs.iter().any(|&l| l != k && c.ideals[k].is_subset(&c.ideals[l]));
        t.implication(c.label(), maximal_qj, || c.j[k], || format!("I = {}", c.show(&c.ideals[k])));
    }
    Ok(())
}

pub(super) fn c_j(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let k = c.index_of(&c.jac);
    t.equivalence(c.label(), &[c.j[k], c.qj[k], c.prime(&c.jac)], || format!("J(R) = {}", c.show(&c.jac)));
    Ok(())
}

/// `P^n` for every prime `P` and `n >= 1`, as ideal indices.
fn prime_powers(c: &RingCtx) -> HashSet<usize> {
    let mut out = HashSet::new();
    for p in c.ring.prime_sets() {
        let pk = c.index_of(p);
        let mut cur = pk;
        while out.insert(cur) {
            cur = c.product(cur, pk);
        }
    }
    out
}

pub(super) fn t_zero(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let zero_dim = is_zero_dimensional(c.ring);
    let powers = prime_powers(c);
    let maxes = c.ring.maximal_sets();
    for k in 0..c.ideals.len() {
        if !c.ideals[k].is_subset(&c.jac) {
            continue;
        }
        let rad = &c.radicals[k];
        let conds = [c.qj[k], c.prime(rad), powers.contains(&k), maxes.len() == 1 && maxes[0] == *rad];
        if zero_dim {
            t.equivalence(c.label(), &conds, || format!("I = {}", c.show(&c.ideals[k])));
        } else {
            t.skip();
        }
    }
    Ok(())
}

/// Applies to `Z n` members only.
pub(super) fn c_pir(c: &RingCtx, t: &mut Tally) -> Result<()> {
    if !matches!(c.kind, RingKind::Base) || !c.label().starts_with("Z ") {
        return Ok(());
    }
    let r = c.ring;
    let mut generated = HashSet::new();
    for p in r.elements() {
        if !c.jac.contains(p) || !c.prime(&r.principal_set(p)) {
            continue;
        }
        let mut pow = p;
        loop {
            if !generated.insert(c.index_of(&r.principal_set(pow))) {
                break;
            }
            pow = r.mul(pow, p);
        }
    }
    for k in c.proper() {
        t.equivalence(c.label(), &[c.qj[k], generated.contains(&k)], || format!("I = {}", c.show(&c.ideals[k])));
    }
    Ok(())
}

pub(super) fn t_sup(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    for k in c.proper() {
        t.implication(
            c.label(),
            c.qj[k],
            || c.ideals.iter().all(|kk| !r.sum_sets(&c.ideals[k], kk).contains(r.one()) || kk.contains(r.one())),
            || format!("I = {}", c.show(&c.ideals[k])),
        );
    }
    Ok(())
}

/// Pairs and triples of distinct proper ideals.
fn tuples(c: &RingCtx) -> Vec<Vec<usize>> {
    let p: Vec<usize> = c.proper().collect();
    let mut out = Vec::new();
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            out.push(vec![p[x], p[y]]);
            for z in y + 1..p.len() {
                out.push(vec![p[x], p[y], p[z]]);
            }
        }
    }
    out
}

fn combine_checks(c: &RingCtx, t: &mut Tally, combine: impl Fn(usize, usize) -> usize) {
    for tuple in tuples(c) {
        let whole = tuple[1..].iter().fold(tuple[0], |acc, &k| combine(acc, k));
        let show = || tuple.iter().map(|&k| c.show(&c.ideals[k])).collect::<Vec<_>>().join(", ");
        t.implication(c.label(), tuple.iter().all(|&k| c.qj[k]), || c.qj[whole], show);
        let quasi_primary = tuple.iter().all(|&k| c.prime(&c.radicals[k]));
        let incomparable = tuple
            .iter()
            .enumerate()
            .all(|(x, &a)| tuple[x + 1..].iter().all(|&b| !comparable(&c.radicals[a], &c.radicals[b])));
        t.implication(c.label(), quasi_primary && incomparable && c.qj[whole], || tuple.iter().all(|&k| c.qj[k]), show);
    }
}

pub(super) fn t_int(c: &RingCtx, t: &mut Tally) -> Result<()> {
    combine_checks(c, t, |a, b| c.index_of(&c.ideals[a].intersection(&c.ideals[b])));
    Ok(())
}

pub(super) fn t_prod(c: &RingCtx, t: &mut Tally) -> Result<()> {
    combine_checks(c, t, |a, b| c.product(a, b));
    Ok(())
}

pub(super) fn t_f(c: &RingCtx, t: &mut Tally) -> Result<()> {
    for (kern, q) in c.quotients().iter().enumerate() {
        let Some(q) = q else { continue };
        let qr = &q.ring;
        let show_k = c.show(&c.ideals[kern]);
        for i1 in c.proper() {
            let image = *push_ideal(&q.projection, &c.ideal(i1))?.members();
            t.implication(
                c.label(),
                c.qj[i1] && c.ideals[kern].is_subset(&c.ideals[i1]),
                || q.qj.get(&image).copied().unwrap_or(false),
                || format!("push {} along R -> R/{show_k}", c.show(&c.ideals[i1])),
            );
        }
        let kernel_in_jac = c.ideals[kern].is_subset(&c.jac);
        for (i2, &flag) in &q.qj {
            let pre = *pull_ideal(&q.projection, &IdealSet::trusted(qr, *i2))?.members();
            t.implication(
                c.label(),
                flag && kernel_in_jac,
                || c.qj_of(&pre),
                || format!("pull {} along R -> R/{show_k}", qr.show_ideal(i2)),
            );
        }
    }
    Ok(())
}

pub(super) fn c_quot(c: &RingCtx, t: &mut Tally) -> Result<()> {
    for (kern, q) in c.quotients().iter().enumerate() {
        let Some(q) = q else { continue };
        for i in c.proper() {
            if !c.ideals[kern].is_subset(&c.ideals[i]) {
                continue;
            }
            let image = *push_ideal(&q.projection, &c.ideal(i))?.members();
            t.implication(
                c.label(),
                c.qj[i],
                || q.qj.get(&image).copied().unwrap_or(false),
                || format!("I = {}, K = {}", c.show(&c.ideals[i]), c.show(&c.ideals[kern])),
            );
        }
    }
    Ok(())
}

/// `{r : rs ∈ I for some s ∉ I}`.
fn z_of(c: &RingCtx, i: &ElemSet) -> ElemSet {
    let r = c.ring;
    r.elements().filter(|&a| r.elements().any(|s| !i.contains(s) && i.contains(r.mul(a, s)))).collect()
}

pub(super) fn t_s(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    let mut seen = HashSet::new();
    let z_jac = z_of(c, &c.jac);
    let z: Vec<ElemSet> = c.ideals.iter().map(|i| z_of(c, i)).collect();
    for s in r.elements() {
        if c.nil.contains(s) {
            continue;
        }
        let set = *powers_of(r, s).members();
        if !seen.insert(set) {
            continue;
        }
        let (l, map) = localize_at(r, s)?;
        let lqj: HashMap<ElemSet, bool> = quasi_j_flags(&l);
        let jac_ok = *extend_ideal(&map, &c.ideal(c.index_of(&c.jac)))?.members() == l.jacobson_set();
        for k in c.proper() {
            let ext = *extend_ideal(&map, &c.ideal(k))?.members();
            let ext_qj = lqj.get(&ext).copied().unwrap_or(false);
            let show = || format!("I = {}, s = {}", c.show(&c.ideals[k]), r.name(s));
            t.implication(c.label(), jac_ok && c.qj[k] && c.ideals[k].is_disjoint(&set), || ext_qj, show);
            let hyp2 = jac_ok && ext_qj && set.is_disjoint(&z[k]) && set.is_disjoint(&z_jac);
            t.implication(c.label(), hyp2, || c.qj[k], show);
        }
    }
    Ok(())
}

pub(super) fn t_r(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let e = c.ring.nontrivial_idempotent();
    for k in c.proper() {
        t.implication(
            c.label(),
            e.is_some(),
            || !c.qj[k],
            || format!("I = {}, idempotent {}", c.show(&c.ideals[k]), c.name(e.expect("hypothesis"))),
        );
    }
    Ok(())
}

pub(super) fn t_pide(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let RingKind::Idealization(idl) = c.kind else { return Ok(()) };
    let b = idl.base();
    let base_qj = quasi_j_flags(b);
    for s in b.ideal_sets() {
        if s.contains(b.one()) {
            continue;
        }
        let lifted = idl.lift_full(&IdealSet::trusted(b, *s))?;
        t.equivalence(c.label(), &[c.qj_of(lifted.members()), base_qj[s]], || format!("I = {}", b.show_ideal(s)));
    }
    Ok(())
}

pub(super) fn t_q1(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let def = quasi_presimplifiable_by_definition(c.ring)?.holds;
    t.equivalence(c.label(), &[def, quasi_presimplifiable_by_nz(c.ring)], || "ring".into());
    Ok(())
}

pub(super) fn t_pquot(c: &RingCtx, t: &mut Tally) -> Result<()> {
    for (k, q) in c.quotients().iter().enumerate() {
        let Some(q) = q else { continue };
        let inside = c.ideals[k].is_subset(&c.jac);
        let show = || format!("I = {}", c.show(&c.ideals[k]));
        t.equivalence(c.label(), &[c.j[k], inside && q.presimplifiable], show);
        t.equivalence(c.label(), &[c.qj[k], inside && q.quasi_presimplifiable], show);
    }
    Ok(())
}

pub(super) fn c_0(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let zero = c.index_of(&ElemSet::singleton(c.ring.zero()));
    let pre = presimplifiable_by_definition(c.ring)?.holds;
    let qpre = quasi_presimplifiable_by_definition(c.ring)?.holds;
    t.equivalence(c.label(), &[pre, c.j[zero]], || "presimplifiable vs 0 J-ideal".into());
    t.equivalence(c.label(), &[qpre, c.qj[zero]], || "quasi presimplifiable vs 0 quasi J-ideal".into());
    Ok(())
}

fn von_neumann_regular(c: &RingCtx) -> bool {
    let r = c.ring;
    r.elements().all(|a| r.elements().any(|x| r.mul(r.mul(a, a), x) == a))
}

pub(super) fn t_vnr(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let r = c.ring;
    let hyp = quasi_presimplifiable_by_definition(r)?.holds && von_neumann_regular(c);
    t.implication(c.label(), hyp, || c.units.len() == r.order() - 1, || "ring".into());
    Ok(())
}

pub(super) fn t_reg(c: &RingCtx, t: &mut Tally) -> Result<()> {
    for (k, q) in c.quotients().iter().enumerate() {
        let Some(q) = q else { continue };
        t.implication(
            c.label(),
            q.von_neumann_regular && c.qj[k],
            || c.maximal(&c.ideals[k]),
            || format!("I = {}", c.show(&c.ideals[k])),
        );
    }
    Ok(())
}

pub(super) fn id_j(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let RingKind::Idealization(idl) = c.kind else { return Ok(()) };
    let b = idl.base();
    let full = idl.module().full_set();
    let zero = ElemSet::singleton(b.zero());
    t.equivalence(c.label(), &[c.jac == idl.pair_set(&b.jacobson_set(), &full), true], || {
        format!("J = {}", c.show(&c.jac))
    });
    t.equivalence(c.label(), &[idl.pair_set(&zero, &full).is_subset(&c.nil), true], || {
        format!("N = {}", c.show(&c.nil))
    });
    Ok(())
}

pub(super) fn id_rad(c: &RingCtx, t: &mut Tally) -> Result<()> {
    let RingKind::Idealization(idl) = c.kind else { return Ok(()) };
    let (b, m) = (idl.base(), idl.module());
    let subs = submodules(m);
    for i in b.ideal_sets() {
        let im = m.ideal_times(i);
        for n in subs.iter().filter(|n| im.is_subset(n)) {
            let set = idl.pair_set(i, n);
            let ok = c.ring.ideal_violation(&set).is_none()
                && c.ring.radical_set(&set) == idl.pair_set(&b.radical_set(i), &m.full_set());
            t.equivalence(c.label(), &[ok, true], || format!("I = {}, N = {}", b.show_ideal(i), m.show_set(n)));
        }
    }
    Ok(())
}
