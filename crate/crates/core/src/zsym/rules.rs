//! The named decision rules. A rule either proves a predicate or refutes it
//! with an explicit witness; every witness is re-checked before it leaves.

use super::{
    int, is_prime_power, rad, smallest_prime_factor, BoundedVerdict, Mutation, Scalar, Status, SymElem, SymEngine,
    SymIdeal, SymRing,
};
use crate::error::{Error, Result};

pub const SYM_IDEAL_PREDICATES: [&str; 7] =
    ["prime", "primary", "quasi_primary", "n_ideal", "j_ideal", "quasi_j", "delta1_n"];

pub const SYM_RING_PREDICATES: [&str; 7] =
    ["field", "domain", "reduced", "quasi_local", "semiprimitive", "presimplifiable", "quasi_presimplifiable"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleInfo {
    pub id: &'static str,
    pub justification: &'static str,
}

pub const RULES: &[RuleInfo] = &[
    RuleInfo {
        id: "Z-DOMAIN-ZERO",
        justification: "Z is a domain with J(Z) = N(Z) = 0, so ab = 0 forces a = 0 or b = 0",
    },
    RuleInfo {
        id: "Z-SEMIPRIMITIVE",
        justification: "J(Z) = 0, so the only quasi J-ideal of Z is 0; n·1 = n refutes <n>",
    },
    RuleInfo { id: "Z-PRIME-GEN", justification: "<n> is prime iff n is prime; n = d·(n/d) otherwise" },
    RuleInfo { id: "Z-PRIMARY", justification: "<n> is primary iff n is a prime power" },
    RuleInfo { id: "Z-QUASI-PRIMARY", justification: "rad<n> = <rad n> is prime iff n is a prime power" },
    RuleInfo { id: "Z-DOMAIN", justification: "Z is a domain: Z(R) = N(R) = 0" },
    RuleInfo { id: "Z-NOT-FIELD", justification: "2 is a nonzero non-unit of Z" },
    RuleInfo {
        id: "ZL-QUASI-LOCAL",
        justification: "Z_(p) is quasi-local with J = <p>; every proper ideal is a J-ideal",
    },
    RuleInfo { id: "ZL-DOMAIN-ZERO", justification: "Z_(p) is a domain, so 0 is prime and N = 0" },
    RuleInfo {
        id: "ZL-POWER-NOT-N",
        justification: "(p^e/q)(q/r) = p^e/r lies in <p^e> with p^e/q non-nilpotent and q/r a unit",
    },
    RuleInfo { id: "ZL-PRIME", justification: "<p> is the maximal ideal; p·p^(e-1) refutes <p^e> for e >= 2" },
    RuleInfo { id: "ZL-PRIMARY", justification: "every nonzero proper ideal of Z_(p) has maximal radical <p>" },
    RuleInfo { id: "ZL-DOMAIN", justification: "Z_(p) is a domain" },
    RuleInfo { id: "ZL-JACOBSON", justification: "p lies in J(Z_(p)) = <p>" },
    RuleInfo { id: "ZI-QJ-PIDE", justification: "I(+)M is quasi-J iff I is quasi-J in Z, i.e. iff I = 0" },
    RuleInfo {
        id: "ZI-OUTSIDE-J",
        justification: "J(R) = N(R) = 0(+)M, so (a,0)(1,0) = (a,0) refutes aZ(+)N for a != 0",
    },
    RuleInfo { id: "ZI-J-TORSION", justification: "0(+)N is a J-ideal iff nm' in N with n != 0 forces m' in N" },
    RuleInfo { id: "ZI-PRIME", justification: "(0,m)^2 = 0, so a prime aZ(+)N has N = M and aZ prime" },
    RuleInfo {
        id: "ZI-QUASI-PRIMARY",
        justification: "rad(aZ(+)N) = rad(a)Z(+)M is prime iff a is 0 or a prime power",
    },
    RuleInfo { id: "ZI-NILPOTENT-MODULE", justification: "(0,1) is a nonzero nilpotent lying in J(R)" },
    RuleInfo { id: "ZI-QPS", justification: "(x,m)(y,m') = (x,m) with x != 0 forces y = 1, so y is a unit" },
    RuleInfo { id: "ZI-TORSION-ZD", justification: "(0,1)(1+k,1) = (0,1) with 1+k a non-unit of Z" },
    RuleInfo { id: "ZZ-TORSION-FREE", justification: "Z(R) = 0(+)Z lies inside J(R) = 0(+)Z" },
];

/// One-line justification for a rule id.
pub fn justification(id: &str) -> Option<&'static str> {
    RULES.iter().find(|r| r.id == id).map(|r| r.justification)
}

enum Outcome<T> {
    Holds(&'static str),
    Fails(&'static str, Vec<SymElem<T>>),
}

use Outcome::{Fails, Holds};

fn ints<T: Scalar>(r: SymRing, xs: &[T]) -> Vec<SymElem<T>> {
    xs.iter().map(|x| r.int(x.clone()).expect("integer embeds")).collect()
}

fn pairs<T: Scalar>(r: SymRing, xs: &[(T, T)]) -> Vec<SymElem<T>> {
    xs.iter().map(|(x, m)| r.pair(x.clone(), m.clone()).expect("pair ring")).collect()
}

fn local_frac<T: Scalar>(r: SymRing, num: T, den: T) -> SymElem<T> {
    r.frac(num, den).expect("denominator prime to p")
}

/// The two smallest primes different from `p`.
fn other_primes(p: u64) -> (u64, u64) {
    let mut it = (2..).filter(|&q| q != p && super::is_prime_u64(q));
    (it.next().expect("infinitely many primes"), it.next().expect("infinitely many primes"))
}

/// Splits `n` (not a prime power, `|n| >= 2`) as `p^e · m` with `m > 1` prime to `p`.
fn split_prime_power<T: Scalar>(n: &T) -> (T, T) {
    let p = smallest_prime_factor(n);
    let mut pe = T::one();
    let mut m = n.abs();
    while m.is_multiple_of(&p) {
        m = m / p.clone();
        pe = pe * p.clone();
    }
    (pe, m)
}

impl SymEngine {
    fn ideal_rule<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, pred: &str) -> Option<Outcome<T>> {
        let zero = T::zero();
        let one = T::one();
        Some(match (r, i) {
            (SymRing::Z, SymIdeal::Principal(n)) if n.is_zero() => Holds("Z-DOMAIN-ZERO"),
            (SymRing::Z, SymIdeal::Principal(n)) => match pred {
                "j_ideal" | "quasi_j" | "n_ideal" | "delta1_n" => Fails("Z-SEMIPRIMITIVE", ints(r, &[n.clone(), one])),
                "prime" => {
                    let d = smallest_prime_factor(n);
                    if d == *n {
                        Holds("Z-PRIME-GEN")
                    } else {
                        Fails("Z-PRIME-GEN", ints(r, &[d.clone(), n.clone() / d]))
                    }
                }
                "primary" if is_prime_power(n) => Holds("Z-PRIMARY"),
                "primary" => {
                    let (pe, m) = split_prime_power(n);
                    Fails("Z-PRIMARY", ints(r, &[pe, m]))
                }
                "quasi_primary" if is_prime_power(n) => Holds("Z-QUASI-PRIMARY"),
                "quasi_primary" => {
                    let p = smallest_prime_factor(n);
                    Fails("Z-QUASI-PRIMARY", ints(r, &[p.clone(), rad(n) / p]))
                }
                _ => return None,
            },
            (SymRing::ZLocal(_), _) if matches!(pred, "j_ideal" | "quasi_j") => Holds("ZL-QUASI-LOCAL"),
            (SymRing::ZLocal(_), SymIdeal::LocalZero) => Holds("ZL-DOMAIN-ZERO"),
            (SymRing::ZLocal(p), SymIdeal::LocalPower(e)) => {
                let pt: T = T::from_u64(p).expect("prime fits");
                let pow = |k: u32| num_traits::pow(pt.clone(), k as usize);
                match pred {
                    "n_ideal" | "delta1_n" => {
                        let (q, s) = other_primes(p);
                        let (q, s): (T, T) = (T::from_u64(q).expect("fits"), T::from_u64(s).expect("fits"));
                        Fails("ZL-POWER-NOT-N", vec![local_frac(r, pow(*e), q.clone()), local_frac(r, q, s)])
                    }
                    "prime" if *e == 1 => Holds("ZL-PRIME"),
                    "prime" => {
                        Fails("ZL-PRIME", vec![local_frac(r, pt.clone(), one), local_frac(r, pow(e - 1), T::one())])
                    }
                    "primary" | "quasi_primary" => Holds("ZL-PRIMARY"),
                    _ => return None,
                }
            }
            (_, SymIdeal::Homogeneous { a, n }) => {
                let full_module = n.is_one();
                match pred {
                    "quasi_j" | "delta1_n" => {
                        let holds =
                            a.is_zero() != self.mutation.is_some_and(|m| m == Mutation::IdealizationQuasiJInverted);
                        if holds {
                            Holds("ZI-QJ-PIDE")
                        } else {
                            Fails("ZI-QJ-PIDE", pairs(r, &[(a.clone(), zero.clone()), (one, zero)]))
                        }
                    }
                    "j_ideal" | "n_ideal" if !a.is_zero() => {
                        Fails("ZI-OUTSIDE-J", pairs(r, &[(a.clone(), zero.clone()), (one, zero)]))
                    }
                    "j_ideal" | "n_ideal" => {
                        let torsion_free_zero = r == SymRing::ZIdealizationZ && n.is_zero();
                        if full_module || torsion_free_zero {
                            Holds("ZI-J-TORSION")
                        } else {
                            Fails("ZI-J-TORSION", pairs(r, &[(n.clone(), zero.clone()), (zero, one)]))
                        }
                    }
                    "prime" if !full_module => Fails("ZI-PRIME", pairs(r, &[(zero.clone(), one.clone()), (zero, one)])),
                    "prime" => {
                        if a.is_zero() || smallest_prime_factor(a) == *a {
                            Holds("ZI-PRIME")
                        } else {
                            let d = smallest_prime_factor(a);
                            Fails("ZI-PRIME", pairs(r, &[(d.clone(), zero.clone()), (a.clone() / d, zero)]))
                        }
                    }
                    "quasi_primary" => {
                        if a.is_zero() || is_prime_power(a) {
                            Holds("ZI-QUASI-PRIMARY")
                        } else {
                            let p = smallest_prime_factor(a);
                            Fails("ZI-QUASI-PRIMARY", pairs(r, &[(p.clone(), zero.clone()), (rad(a) / p, zero)]))
                        }
                    }
                    _ => return None,
                }
            }
            _ => return None,
        })
    }

    fn ring_rule<T: Scalar>(&self, r: SymRing, pred: &str) -> Option<Outcome<T>> {
        let zero = T::zero();
        let one = T::one();
        Some(match r {
            SymRing::Z => match pred {
                "domain" | "reduced" | "presimplifiable" | "quasi_presimplifiable" | "semiprimitive" => {
                    Holds("Z-DOMAIN")
                }
                "field" => Fails("Z-NOT-FIELD", ints(r, &[int(2)])),
                _ => return None,
            },
            SymRing::ZLocal(p) => {
                let pt = T::from_u64(p).expect("prime fits");
                match pred {
                    "domain" | "reduced" | "presimplifiable" | "quasi_presimplifiable" => Holds("ZL-DOMAIN"),
                    "quasi_local" => Holds("ZL-QUASI-LOCAL"),
                    "semiprimitive" | "field" => Fails("ZL-JACOBSON", vec![local_frac(r, pt, one)]),
                    _ => return None,
                }
            }
            SymRing::ZIdealization(_) | SymRing::ZIdealizationZ => match pred {
                "domain" => Fails("ZI-NILPOTENT-MODULE", pairs(r, &[(zero.clone(), one.clone()), (zero, one)])),
                "reduced" | "field" | "semiprimitive" => Fails("ZI-NILPOTENT-MODULE", pairs(r, &[(zero, one)])),
                "quasi_presimplifiable" => Holds("ZI-QPS"),
                "presimplifiable" => match r {
                    SymRing::ZIdealization(k) => {
                        let k1 = T::from_u64(k + 1).expect("fits");
                        Fails("ZI-TORSION-ZD", pairs(r, &[(zero, one.clone()), (k1, one)]))
                    }
                    _ => Holds("ZZ-TORSION-FREE"),
                },
                _ => return None,
            },
        })
    }

    /// Decides an ideal predicate by rule, or by bounded search when no rule
    /// applies.
    pub fn sym_classify<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, predicate: &str) -> Result<BoundedVerdict<T>> {
        let Some(pred) = SYM_IDEAL_PREDICATES.iter().find(|p| **p == predicate) else {
            return Err(Error::UnknownPredicate(predicate.to_string()));
        };
        r.check_ideal(i)?;
        if !r.is_proper(i) {
            return Err(Error::NotProper("symbolic ideal predicates"));
        }
        match self.ideal_rule(r, i, pred) {
            Some(out) => self.finish(pred, out, |w| self.refutes_ideal(r, i, pred, w)),
            None => Ok(self.search_ideal(r, i, pred)),
        }
    }

    pub fn sym_ring_classify<T: Scalar>(&self, r: SymRing, predicate: &str) -> Result<BoundedVerdict<T>> {
        let Some(pred) = SYM_RING_PREDICATES.iter().find(|p| **p == predicate) else {
            return Err(Error::UnknownPredicate(predicate.to_string()));
        };
        match self.ring_rule(r, pred) {
            Some(out) => self.finish(pred, out, |w| self.refutes_ring(r, pred, w)),
            None => Ok(self.search_ring(r, pred)),
        }
    }

    fn finish<T: Scalar>(
        &self,
        pred: &'static str,
        out: Outcome<T>,
        valid: impl Fn(&[SymElem<T>]) -> bool,
    ) -> Result<BoundedVerdict<T>> {
        Ok(match out {
            Holds(rule) => BoundedVerdict {
                predicate: pred.to_string(),
                status: Status::ProvenByRule,
                bound: self.bound,
                rule: Some(rule),
                witness: None,
            },
            Fails(rule, w) => {
                if !valid(&w) {
                    let shown: Vec<String> = w.iter().map(|e| e.to_string()).collect();
                    return Err(Error::InvalidWitness {
                        predicate: pred.to_string(),
                        detail: format!("rule {rule} produced ({}), which does not refute it", shown.join(", ")),
                    });
                }
                BoundedVerdict {
                    predicate: pred.to_string(),
                    status: Status::RefutedWithWitness,
                    bound: self.bound,
                    rule: Some(rule),
                    witness: Some(w),
                }
            }
        })
    }

    /// Whether `w` is a counterexample to `pred` for `i`, using the
    /// unmutated closed forms for `J`, `N` and radicals.
    pub fn refutes_ideal<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, pred: &str, w: &[SymElem<T>]) -> bool {
        let [a, b] = w else { return false };
        if r.check_elem(a).is_err() || r.check_elem(b).is_err() {
            return false;
        }
        let clean = SymEngine::new(self.bound);
        let ab = r.mul(a, b);
        let in_i = |x: &SymElem<T>| r.contains(i, x);
        let in_rad = |x: &SymElem<T>| clean.in_radical(r, i, x);
        let in_j = |x: &SymElem<T>| clean.in_jacobson(r, x);
        let nil = |x: &SymElem<T>| r.is_nilpotent(x);
        match pred {
            "prime" => in_i(&ab) && !in_i(a) && !in_i(b),
            "primary" => in_i(&ab) && !in_i(a) && !in_rad(b),
            "quasi_primary" => in_rad(&ab) && !in_rad(a) && !in_rad(b),
            "n_ideal" => in_i(&ab) && !nil(a) && !in_i(b),
            "j_ideal" => in_i(&ab) && !in_j(a) && !in_i(b),
            "quasi_j" => in_i(&ab) && !in_j(a) && !in_rad(b),
            "delta1_n" => in_i(&ab) && !nil(a) && !in_rad(b),
            _ => false,
        }
    }

    pub fn refutes_ring<T: Scalar>(&self, r: SymRing, pred: &str, w: &[SymElem<T>]) -> bool {
        if w.iter().any(|e| r.check_elem(e).is_err()) {
            return false;
        }
        let clean = SymEngine::new(self.bound);
        let nz = |x: &SymElem<T>| !r.is_zero(x);
        match (pred, w) {
            ("field", [a]) => nz(a) && !r.is_unit(a),
            ("reduced", [a]) => nz(a) && r.is_nilpotent(a),
            ("semiprimitive", [a]) => nz(a) && clean.in_jacobson(r, a),
            ("domain", [a, b]) => nz(a) && nz(b) && r.is_zero(&r.mul(a, b)),
            ("presimplifiable", [a, b]) => r.mul(a, b) == *a && nz(a) && !r.is_unit(b),
            ("quasi_presimplifiable", [a, b]) => r.mul(a, b) == *a && !r.is_nilpotent(a) && !r.is_unit(b),
            ("quasi_local", [a, b]) => !r.is_unit(a) && !r.is_unit(b) && r.is_unit(&r.add(a, b)),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_rule_id_has_a_justification() {
        let e = SymEngine::default();
        for r in SymRing::catalog() {
            for i in r.catalog_ideals::<i64>() {
                for p in SYM_IDEAL_PREDICATES {
                    if let Some(Holds(id) | Fails(id, _)) = e.ideal_rule(r, &i, p) {
                        assert!(justification(id).is_some(), "{id}");
                    }
                }
            }
            for p in SYM_RING_PREDICATES {
                if let Some(Holds(id) | Fails(id, _)) = e.ring_rule::<i64>(r, p) {
                    assert!(justification(id).is_some(), "{id}");
                }
            }
        }
    }

    #[test]
    fn idealization_verdicts() {
        let zz = SymRing::ZIdealizationZ;
        let i = zz.homogeneous(0i64, 2).unwrap();
        let qj = super::super::sym_classify(zz, &i, "quasi_j").unwrap();
        assert_eq!(qj.status, Status::ProvenByRule);
        let j = super::super::sym_classify(zz, &i, "j_ideal").unwrap();
        assert_eq!(j.status, Status::RefutedWithWitness);
        assert_eq!(j.witness.unwrap(), vec![SymElem::Pair(2, 0), SymElem::Pair(0, 1)]);
        let zero = zz.zero_ideal::<i64>();
        assert!(super::super::sym_classify(zz, &zero, "j_ideal").unwrap().holds());
    }

    #[test]
    fn local_verdicts() {
        let l = SymRing::ZLocal(2);
        let v = super::super::sym_classify(l, &SymIdeal::<i64>::LocalPower(1), "delta1_n").unwrap();
        let w: Vec<String> = v.witness.unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(w, ["2/3", "3/5"]);
        assert!(super::super::sym_ring_classify::<i64>(l, "quasi_local").unwrap().holds());
    }

    #[test]
    fn ring_verdicts() {
        let z2 = SymRing::ZIdealization(2);
        assert_eq!(
            super::super::sym_ring_classify::<i64>(z2, "quasi_presimplifiable").unwrap().status,
            Status::ProvenByRule
        );
        let v = super::super::sym_ring_classify::<i64>(z2, "presimplifiable").unwrap();
        assert_eq!(v.witness.unwrap(), vec![SymElem::Pair(0, 1), SymElem::Pair(3, 1)]);
    }

    #[test]
    fn z_verdicts() {
        let z = SymRing::Z;
        let w = |n: i64, p: &str| super::super::sym_classify(z, &SymIdeal::Principal(n), p).unwrap();
        assert!(w(0, "quasi_j").holds());
        assert_eq!(w(6, "prime").witness.unwrap(), vec![SymElem::Int(2), SymElem::Int(3)]);
        assert_eq!(w(12, "primary").witness.unwrap(), vec![SymElem::Int(4), SymElem::Int(3)]);
        assert!(w(8, "primary").holds());
        assert!(!w(4, "quasi_j").holds());
        assert!(matches!(super::super::sym_classify(z, &SymIdeal::Principal(1i64), "prime"), Err(Error::NotProper(_))));
        assert!(matches!(
            super::super::sym_classify(z, &SymIdeal::Principal(2i64), "bogus"),
            Err(Error::UnknownPredicate(_))
        ));
    }
}
