//! The table kernel and classifiers against plain modular arithmetic.
//!
//! The oracle below never touches a ring table: ideals of Z/n are the
//! subgroups dZ/n for d | n, and every predicate is decided by scanning
//! integer pairs.

use std::collections::BTreeSet;

use ringlab::classify::{classify_ideal, classify_ring, is_delta1_n_ideal, is_n_ideal, is_primary, is_prime, Witness};
use ringlab::construct::zmod;
use ringlab::finring::{colon, enumerate_ideals, ideal_generated, j_of_ideal, radical, ElementSubset};
use ringlab::{IdealSet, Ring};

mod zn {
    use std::collections::BTreeSet;

    pub type Set = BTreeSet<usize>;

    pub fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    /// The ideal generated by `d` in Z/n.
    pub fn ideal(n: usize, d: usize) -> Set {
        let g = gcd(d, n);
        (0..n).step_by(g).collect()
    }

    pub fn divisors(n: usize) -> Vec<usize> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    pub fn units(n: usize) -> Set {
        (0..n).filter(|&a| (0..n).any(|x| a * x % n == 1 % n)).collect()
    }

    pub fn nilpotents(n: usize) -> Set {
        (0..n).filter(|&a| (1..=8).any(|k| (a as u128).pow(k) % n as u128 == 0)).collect()
    }

    /// `{a : 1 - ra is a unit for all r}`.
    pub fn jacobson(n: usize) -> Set {
        let u = units(n);
        (0..n).filter(|&a| (0..n).all(|r| u.contains(&((1 + n * n - r * a % n) % n)))).collect()
    }

    pub fn zero_divisors(n: usize) -> Set {
        (0..n).filter(|&a| (1..n).any(|b| a * b % n == 0)).collect()
    }

    pub fn not_quasi_regular(n: usize) -> Set {
        let nil = nilpotents(n);
        (0..n).filter(|&a| (0..n).any(|b| a * b % n == 0 && !nil.contains(&b))).collect()
    }

    pub fn radical(n: usize, i: &Set) -> Set {
        (0..n).filter(|&a| (1..=8).any(|k| i.contains(&(((a as u128).pow(k) % n as u128) as usize)))).collect()
    }

    pub fn colon(n: usize, i: &Set, s: &[usize]) -> Set {
        (0..n).filter(|&r| s.iter().all(|&x| i.contains(&(r * x % n)))).collect()
    }

    pub fn all_ideals(n: usize) -> Vec<Set> {
        divisors(n).into_iter().map(|d| ideal(n, d)).collect()
    }

    pub fn maximal(n: usize) -> Vec<Set> {
        divisors(n).into_iter().filter(|&p| p > 1 && (2..p).all(|q| p % q != 0)).map(|p| ideal(n, p)).collect()
    }

    fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
    }

    pub fn prime(n: usize, i: &Set) -> bool {
        i.len() < n && pairs(n).all(|(a, b)| !i.contains(&(a * b % n)) || i.contains(&a) || i.contains(&b))
    }

    pub fn primary(n: usize, i: &Set) -> bool {
        let rad = radical(n, i);
        i.len() < n && pairs(n).all(|(a, b)| !i.contains(&(a * b % n)) || i.contains(&a) || rad.contains(&b))
    }

    /// `ab in I` forces `a in A` or `b in B`.
    fn pair_rule(n: usize, i: &Set, a_set: &Set, b_set: &Set) -> bool {
        pairs(n).all(|(a, b)| !i.contains(&(a * b % n)) || a_set.contains(&a) || b_set.contains(&b))
    }

    pub fn n_ideal(n: usize, i: &Set) -> bool {
        pair_rule(n, i, &nilpotents(n), i)
    }

    pub fn j_ideal(n: usize, i: &Set) -> bool {
        pair_rule(n, i, &jacobson(n), i)
    }

    /// The radical is a J-ideal.
    pub fn quasi_j(n: usize, i: &Set) -> bool {
        let rad = radical(n, i);
        rad.len() < n && j_ideal(n, &rad)
    }

    pub fn delta1_n(n: usize, i: &Set) -> bool {
        pair_rule(n, i, &nilpotents(n), &radical(n, i))
    }

    pub fn superfluous(n: usize, i: &Set) -> bool {
        all_ideals(n).iter().all(|k| {
            let sum: Set = i.iter().flat_map(|a| k.iter().map(move |b| (a + b) % n)).collect();
            sum.len() < n || k.len() == n
        })
    }
}

fn members(i: &IdealSet) -> BTreeSet<usize> {
    i.members().iter().collect()
}

fn ring(n: usize) -> Ring {
    zmod(n).unwrap()
}

fn ideal(r: &Ring, d: usize) -> IdealSet {
    IdealSet::principal(r, d % r.order())
}

const N_MAX: usize = 40;

#[test]
fn radicals_and_units_match_modular_arithmetic() {
    for n in 2..=N_MAX {
        let r = ring(n);
        let set = |s: ringlab::ElemSet| s.iter().collect::<BTreeSet<_>>();
        assert_eq!(set(r.unit_set()), zn::units(n), "units Z{n}");
        assert_eq!(set(r.nilradical_set()), zn::nilpotents(n), "N(Z{n})");
        assert_eq!(set(r.jacobson_set()), zn::jacobson(n), "J(Z{n})");
        assert_eq!(set(r.zero_divisor_set()), zn::zero_divisors(n), "Z(Z{n})");
        assert_eq!(set(r.not_quasi_regular_set()), zn::not_quasi_regular(n), "NZ(Z{n})");
        let mut got: Vec<_> = enumerate_ideals(&r).iter().map(members).collect();
        let mut want = zn::all_ideals(n);
        got.sort();
        want.sort();
        assert_eq!(got, want, "ideals of Z{n}");
        let mut got: Vec<_> = r.maximal_sets().iter().map(|m| set(*m)).collect();
        let mut want = zn::maximal(n);
        got.sort();
        want.sort();
        assert_eq!(got, want, "maximal ideals of Z{n}");
    }
}

#[test]
fn ideal_operations_match_modular_arithmetic() {
    for n in 2..=N_MAX {
        let r = ring(n);
        for d in zn::divisors(n) {
            let i = ideal(&r, d);
            let want = zn::ideal(n, d);
            assert_eq!(members(&i), want);
            assert_eq!(members(&radical(&i)), zn::radical(n, &want), "rad <{d}> in Z{n}");
            for s in 0..n {
                let c = colon(&i, &ElementSubset::new(&r, [s]).unwrap()).unwrap();
                assert_eq!(members(&c), zn::colon(n, &want, &[s]), "(<{d}> : {s}) in Z{n}");
            }
        }
    }
}

#[test]
fn predicates_match_pair_scans() {
    for n in 2..=N_MAX {
        let r = ring(n);
        for d in zn::divisors(n).into_iter().filter(|&d| d > 1) {
            let i = ideal(&r, d);
            let s = zn::ideal(n, d);
            let expect = [
                ("prime", zn::prime(n, &s)),
                ("primary", zn::primary(n, &s)),
                ("n_ideal", zn::n_ideal(n, &s)),
                ("j_ideal", zn::j_ideal(n, &s)),
                ("quasi_j", zn::quasi_j(n, &s)),
                ("delta1_n", zn::delta1_n(n, &s)),
                ("superfluous", zn::superfluous(n, &s)),
            ];
            for (p, want) in expect {
                assert_eq!(classify_ideal(&i, p).unwrap().holds, want, "{p} <{d}> in Z{n}");
            }
        }
    }
}

/// Refuting witnesses must violate the definition they refute, and be the
/// smallest such pair.
#[test]
fn pair_witnesses_are_smallest_violations() {
    for n in 2..=24 {
        let r = ring(n);
        for d in zn::divisors(n).into_iter().filter(|&d| d > 1) {
            let i = ideal(&r, d);
            let s = zn::ideal(n, d);
            let nil = zn::nilpotents(n);
            let v = is_n_ideal(&i).unwrap();
            let first = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| s.contains(&(a * b % n)) && !nil.contains(&a) && !s.contains(&b));
            assert_eq!(v.witness, first.map(|(a, b)| Witness::Pair(a, b)), "n-ideal witness <{d}> in Z{n}");
        }
    }
}

#[test]
fn kernel_examples() {
    let z6 = ring(6);
    let z12 = ring(12);
    let z8 = ring(8);
    let z4 = ring(4);
    let set = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<_>>();
    assert_eq!(zn::units(6), set(&[1, 5]));
    assert_eq!(z6.unit_set().to_vec(), vec![1, 5]);
    assert_eq!(zn::nilpotents(12), set(&[0, 6]));
    assert_eq!(z12.nilradical_set().to_vec(), vec![0, 6]);
    assert_eq!(zn::jacobson(12), set(&[0, 6]));
    assert_eq!(z12.jacobson_set().to_vec(), vec![0, 6]);
    assert_eq!(zn::jacobson(8), set(&[0, 2, 4, 6]));
    assert_eq!(z8.jacobson_set().to_vec(), vec![0, 2, 4, 6]);
    assert_eq!(z6.zero_divisor_set().to_vec(), vec![0, 2, 3, 4]);
    assert_eq!(z4.zero_divisor_set().to_vec(), vec![0, 2]);
    assert_eq!(z6.not_quasi_regular_set().to_vec(), vec![0, 2, 3, 4]);
    // Ann(2) = {0, 2} lies in N(Z4), so 2 is quasi-regular.
    assert_eq!(zn::not_quasi_regular(4), set(&[0]));
    assert_eq!(z4.not_quasi_regular_set().to_vec(), vec![0]);

    let g = ideal_generated(&z12, &ElementSubset::new(&z12, [8]).unwrap()).unwrap();
    assert_eq!(g.members().to_vec(), vec![0, 4, 8]);
    assert_eq!(enumerate_ideals(&z12).len(), 6);
    assert_eq!(members(&radical(&ideal(&z8, 4))), zn::ideal(8, 2));
    assert_eq!(members(&radical(&IdealSet::zero(&z12))), set(&[0, 6]));
    let c = colon(&IdealSet::zero(&z6), &ElementSubset::new(&z6, [3]).unwrap()).unwrap();
    assert_eq!(members(&c), set(&[0, 2, 4]));
    assert_eq!(members(&j_of_ideal(&ideal(&z12, 4)).unwrap()), zn::ideal(12, 2));
    assert_eq!(members(&j_of_ideal(&IdealSet::zero(&z12)).unwrap()), zn::ideal(12, 6));
}

#[test]
fn classifier_examples() {
    let z12 = ring(12);
    let z8 = ring(8);
    let z6 = ring(6);
    let z4 = ring(4);
    assert!(is_prime(&ideal(&z12, 2)).unwrap().holds);
    let v = is_prime(&ideal(&z12, 4)).unwrap();
    assert_eq!((v.holds, v.witness), (false, Some(Witness::Pair(2, 2))));
    assert!(is_primary(&ideal(&z12, 4)).unwrap().holds);
    let v = is_primary(&ideal(&z12, 6)).unwrap();
    assert_eq!((v.holds, v.witness), (false, Some(Witness::Pair(2, 3))));
    assert!(classify_ideal(&ideal(&z8, 4), "quasi_primary").unwrap().holds);
    assert!(!classify_ideal(&ideal(&z12, 6), "quasi_primary").unwrap().holds);
    assert!(is_n_ideal(&IdealSet::zero(&z4)).unwrap().holds);

    // 2 * 1 lies in <2>, 2 is not nilpotent and 1 is outside <2>.
    assert!(!zn::n_ideal(6, &zn::ideal(6, 2)));
    assert_eq!(is_n_ideal(&ideal(&z6, 2)).unwrap().witness, Some(Witness::Pair(2, 1)));

    assert!(classify_ideal(&ideal(&z8, 4), "j_ideal").unwrap().holds);
    assert!(!classify_ideal(&ideal(&z6, 2), "j_ideal").unwrap().holds);
    assert!(classify_ideal(&ideal(&z8, 4), "quasi_j").unwrap().holds);
    assert!(!classify_ideal(&ideal(&z6, 3), "quasi_j").unwrap().holds);
    assert!(is_delta1_n_ideal(&ideal(&z8, 2)).unwrap().holds);
    assert!(classify_ideal(&ideal(&z12, 6), "superfluous").unwrap().holds);
    let v = classify_ideal(&ideal(&z6, 2), "superfluous").unwrap();
    assert_eq!(v.witness, Some(Witness::Ideal(vec![0, 3])));
    assert!(classify_ideal(&ideal(&z12, 2), "regular").unwrap().holds);
    assert!(!classify_ideal(&ideal(&z8, 4), "regular").unwrap().holds);

    assert!(classify_ring(&z8, "quasi_local").unwrap().holds);
    assert!(classify_ring(&z6, "semiprimitive").unwrap().holds);
    assert!(!classify_ring(&z4, "field").unwrap().holds);
    assert!(classify_ring(&z6, "von_neumann_regular").unwrap().holds);
    let v = classify_ring(&z4, "von_neumann_regular").unwrap();
    assert_eq!((v.holds, v.witness), (false, Some(Witness::Element(2))));
    assert!(classify_ring(&z4, "presimplifiable").unwrap().holds);
    assert!(!classify_ring(&z6, "quasi_presimplifiable").unwrap().holds);
    for n in 2..=N_MAX {
        assert!(classify_ring(&ring(n), "zero_dimensional").unwrap().holds);
    }
}

/// Fields satisfy every trivial example at once.
#[test]
fn field_examples() {
    for p in [2, 3, 5, 7, 11] {
        let f = ring(p);
        let zero = IdealSet::zero(&f);
        assert_eq!(f.unit_set().len(), p - 1);
        assert_eq!(f.nilradical_set().to_vec(), vec![0]);
        assert_eq!(f.jacobson_set().to_vec(), vec![0]);
        assert_eq!(f.zero_divisor_set().to_vec(), vec![0]);
        assert_eq!(f.not_quasi_regular_set().to_vec(), vec![0]);
        assert_eq!(enumerate_ideals(&f).len(), 2);
        assert_eq!(f.prime_sets().len(), 1);
        for p in ["maximal", "n_ideal", "delta1_n", "regular", "superfluous"] {
            assert!(classify_ideal(&zero, p).unwrap().holds, "{p}");
        }
        for p in ["field", "von_neumann_regular", "presimplifiable", "quasi_presimplifiable", "zero_dimensional"] {
            assert!(classify_ring(&f, p).unwrap().holds, "{p}");
        }
    }
}
