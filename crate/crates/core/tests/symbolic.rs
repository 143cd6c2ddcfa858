//! Symbolic backend: worked examples, closed forms against brute force, and
//! agreement between machine and arbitrary-precision scalars.

use num_bigint::BigInt;
use proptest::prelude::*;

use ringlab::harness::{build_catalog, search_counterexample, Recipe, SearchDomain};
use ringlab::zsym::{
    parse_sym_ideal, replay_example, sym_classify, sym_colon, sym_jacobson, sym_nilradical, sym_radical,
    sym_ring_classify, sym_units_contains, Status, SymElem, SymEngine, SymIdeal, SymRing, EXAMPLE_IDS,
    SYM_IDEAL_PREDICATES, SYM_RING_PREDICATES,
};
use ringlab::{SymElemI64, SymIdealI64};

const Z: SymRing = SymRing::Z;
const ZZ: SymRing = SymRing::ZIdealizationZ;
const ZZ2: SymRing = SymRing::ZIdealization(2);
const Z2LOC: SymRing = SymRing::ZLocal(2);

fn p(n: i64) -> SymIdealI64 {
    SymIdeal::Principal(n)
}

fn pair(x: i64, m: i64) -> SymElemI64 {
    SymElem::Pair(x, m)
}

fn frac(num: i64, den: i64) -> SymElemI64 {
    SymElem::Frac { num, den }
}

#[test]
fn closed_forms() {
    assert_eq!(sym_radical(Z, &p(12)).unwrap(), p(6));
    assert_eq!(sym_radical(Z, &p(0)).unwrap(), p(0));
    let i: SymIdealI64 = parse_sym_ideal(ZZ, "0(+)2Z").unwrap();
    assert_eq!(sym_radical(ZZ, &i).unwrap(), parse_sym_ideal(ZZ, "0(+)Z").unwrap());

    assert_eq!(sym_colon(Z, &p(12), &SymElem::Int(2)).unwrap(), p(6));
    assert_eq!(sym_colon(Z, &p(12), &SymElem::Int(5)).unwrap(), p(12));
    for n in [0, 1, 7, 12] {
        assert_eq!(sym_colon(Z, &p(n), &SymElem::Int(1)).unwrap(), p(n));
    }
    // The colon example: rad(<12> : 2) = <6> while (rad<12> : 2) = <3>.
    let lhs = sym_radical(Z, &sym_colon(Z, &p(12), &SymElem::Int(2)).unwrap()).unwrap();
    let rhs = sym_colon(Z, &sym_radical(Z, &p(12)).unwrap(), &SymElem::Int(2)).unwrap();
    assert_eq!((lhs, rhs), (p(6), p(3)));

    assert_eq!(sym_jacobson::<i64>(ZZ), parse_sym_ideal(ZZ, "0(+)Z").unwrap());
    assert_eq!(sym_nilradical::<i64>(Z), p(0));
    assert_eq!(sym_jacobson::<i64>(Z), p(0));
}

#[test]
fn units_of_z_plus_z2() {
    // U(Z(+)Z2) = U(Z)(+)Z2.
    for (x, m, unit) in [(1, 0, true), (1, 1, true), (-1, 1, true), (3, 1, false), (0, 1, false), (2, 0, false)] {
        assert_eq!(sym_units_contains(ZZ2, &pair(x, m)).unwrap(), unit, "({x},{m})");
    }
}

#[test]
fn example_verdicts() {
    let i: SymIdealI64 = parse_sym_ideal(ZZ, "0(+)2Z").unwrap();
    let qj = sym_classify(ZZ, &i, "quasi_j").unwrap();
    assert_eq!(qj.status, Status::ProvenByRule);
    let j = sym_classify(ZZ, &i, "j_ideal").unwrap();
    assert_eq!(j.status, Status::RefutedWithWitness);
    assert_eq!(j.witness, Some(vec![pair(2, 0), pair(0, 1)]));
    assert_eq!(sym_classify(Z, &p(0), "j_ideal").unwrap().status, Status::ProvenByRule);

    let d = sym_classify(Z2LOC, &SymIdealI64::LocalPower(1), "delta1_n").unwrap();
    assert_eq!(d.status, Status::RefutedWithWitness);
    assert_eq!(d.witness, Some(vec![frac(2, 3), frac(3, 5)]));
    assert_eq!(sym_classify(Z2LOC, &SymIdealI64::LocalPower(1), "quasi_j").unwrap().status, Status::ProvenByRule);

    let q = sym_ring_classify::<i64>(ZZ2, "quasi_presimplifiable").unwrap();
    assert_eq!(q.status, Status::ProvenByRule);
    let s = sym_ring_classify::<i64>(ZZ2, "presimplifiable").unwrap();
    assert_eq!(s.status, Status::RefutedWithWitness);
    assert_eq!(s.witness, Some(vec![pair(0, 1), pair(3, 1)]));
    assert_eq!(sym_ring_classify::<i64>(Z2LOC, "quasi_local").unwrap().status, Status::ProvenByRule);
}

#[test]
fn replays_and_searches() {
    for id in EXAMPLE_IDS {
        let r = replay_example(id).unwrap();
        assert!(r.passed, "{}", r.transcript());
    }
    let t = replay_example("colon_example").unwrap().transcript();
    assert!(t.contains("<6>") && t.contains("<3>"));
    assert!(replay_example("nope").is_err());

    let catalog = build_catalog(&Recipe::default()).unwrap();
    let hits = search_counterexample("quasiJ_not_J", &catalog, SearchDomain::Symbolic).unwrap();
    assert!(hits.iter().any(|h| h.ring == "Z(+)Z" && h.ideal.as_deref() == Some("0(+)2Z")));
    let hits = search_counterexample("quasi_presimpl_not_presimpl", &catalog, SearchDomain::Symbolic).unwrap();
    assert!(hits.iter().any(|h| h.ring == "Z(+)Z2"));
}

/// The backend is generic over the scalar; arbitrary precision must not
/// change a single verdict.
#[test]
fn bigint_agrees_with_i64() {
    let e = SymEngine::new(20);
    for r in SymRing::catalog() {
        let small = r.catalog_ideals::<i64>();
        let big = r.catalog_ideals::<BigInt>();
        assert_eq!(small.len(), big.len());
        for (i, bi) in small.iter().zip(&big) {
            assert_eq!(r.show_ideal(i), r.show_ideal(bi));
            for pred in SYM_IDEAL_PREDICATES {
                let a = e.sym_classify(r, i, pred).unwrap();
                let b = e.sym_classify(r, bi, pred).unwrap();
                assert_eq!((a.status, a.rule), (b.status, b.rule), "{r} {} {pred}", r.show_ideal(i));
                let show = |w: Vec<String>| w.join(" ");
                assert_eq!(
                    a.witness.map(|w| show(w.iter().map(|x| x.to_string()).collect())),
                    b.witness.map(|w| show(w.iter().map(|x| x.to_string()).collect()))
                );
            }
        }
        for pred in SYM_RING_PREDICATES {
            let a = e.sym_ring_classify::<i64>(r, pred).unwrap();
            let b = e.sym_ring_classify::<BigInt>(r, pred).unwrap();
            assert_eq!((a.status, a.rule), (b.status, b.rule), "{r} {pred}");
        }
    }
}

#[test]
fn big_coordinates_stay_exact() {
    let n = BigInt::from(2u8).pow(100) * BigInt::from(9u8);
    let rad = sym_radical(Z, &SymIdeal::Principal(n.clone())).unwrap();
    assert_eq!(rad, SymIdeal::Principal(BigInt::from(6u8)));
    let c = sym_colon(Z, &SymIdeal::Principal(n), &SymElem::Int(BigInt::from(2u8).pow(99))).unwrap();
    assert_eq!(c, SymIdeal::Principal(BigInt::from(18u8)));
}

proptest! {
    #[test]
    fn colon_in_z_matches_membership_scan(n in 0i64..60, s in -40i64..40) {
        let c = sym_colon(Z, &p(n), &SymElem::Int(s)).unwrap();
        let SymIdeal::Principal(g) = c else { panic!("colon left Z") };
        let reach = (10 * n).max(50);
        for x in -reach..=reach {
            let in_colon = if n == 0 { x * s == 0 } else { (x * s) % n == 0 };
            let in_g = if g == 0 { x == 0 } else { x % g == 0 };
            prop_assert_eq!(in_colon, in_g, "x = {}", x);
        }
    }

    #[test]
    fn radical_is_idempotent(n in 0i64..500, a in 0i64..40, m in 0i64..40) {
        let r = sym_radical(Z, &p(n)).unwrap();
        prop_assert_eq!(sym_radical(Z, &r).unwrap(), r.clone());
        if n > 0 {
            let SymIdeal::Principal(k) = r else { unreachable!() };
            prop_assert!(n % k == 0);
            // Same prime support, and squarefree.
            prop_assert!((1..=9).any(|e| k.checked_pow(e).is_some_and(|v| v % n == 0)));
            prop_assert!((2..=k).all(|d| k % (d * d) != 0));
        }
        if let Ok(i) = ZZ.homogeneous(a, m) {
            let r = sym_radical(ZZ, &i).unwrap();
            prop_assert_eq!(sym_radical(ZZ, &r).unwrap(), r);
        }
    }

    /// Every representable ideal of an idealization absorbs products.
    #[test]
    fn homogeneous_ideals_absorb(k in prop::sample::select(vec![0u64, 2, 3, 4, 6]),
                                 a in 0i64..12, n in 0i64..12,
                                 x in -12i64..12, m in -12i64..12, y in -12i64..12, w in -12i64..12) {
        let r = if k == 0 { ZZ } else { SymRing::ZIdealization(k) };
        let Ok(i) = r.homogeneous(a, n) else { return Ok(()) };
        let Ok(inside) = r.pair(a * x, n * m) else { return Ok(()) };
        let Ok(any) = r.pair(y, w) else { return Ok(()) };
        prop_assert!(r.contains(&i, &inside));
        prop_assert!(r.contains(&i, &r.mul(&inside, &any)));
        prop_assert!(r.contains(&i, &r.add(&inside, &inside)));
    }
}
