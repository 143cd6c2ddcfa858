//! Exhaustive falsification over elements whose coordinates are bounded by `B`.
//!
//! Elements are visited shell by shell (largest absolute coordinate), integers
//! in the order `0, 1, -1, 2, -2, ...`, so the first witness found is the
//! smallest in that order.

use super::{int, valuation, BoundedVerdict, Scalar, Status, SymElem, SymEngine, SymIdeal, SymRing};

/// `0, 1, -1, 2, -2, ..., bound, -bound`.
pub fn canonical_integers(bound: u64) -> Vec<i64> {
    let b = bound as i64;
    std::iter::once(0).chain((1..=b).flat_map(|v| [v, -v])).collect()
}

fn canonical_index(v: i64) -> u64 {
    match v {
        0 => 0,
        v if v > 0 => 2 * v as u64 - 1,
        v => 2 * v.unsigned_abs(),
    }
}

/// All elements of `r` with coordinates bounded by `bound`, in search order.
pub(crate) fn elements<T: Scalar>(r: SymRing, bound: u64) -> Vec<SymElem<T>> {
    let ints = canonical_integers(bound);
    let b = bound as i64;
    let mut keyed: Vec<((u64, u64, u64), SymElem<T>)> = match r {
        SymRing::Z => return ints.into_iter().map(|v| SymElem::Int(int(v))).collect(),
        SymRing::ZLocal(p) => {
            let mut v = Vec::new();
            for &num in &ints {
                for den in 1..=b.max(1) {
                    if num.unsigned_abs().max(den as u64) > bound.max(1)
                        || num_integer::gcd(num, den) != 1
                        || valuation(&den, p) > 0
                    {
                        continue;
                    }
                    let shell = num.unsigned_abs().max(den as u64);
                    v.push(((shell, canonical_index(num), den as u64), SymElem::Frac { num: int(num), den: int(den) }));
                }
            }
            v
        }
        SymRing::ZIdealization(k) => {
            let mut v = Vec::new();
            for &x in &ints {
                for m in 0..k {
                    v.push(((x.unsigned_abs(), canonical_index(x), m), SymElem::Pair(int(x), int(m as i64))));
                }
            }
            v
        }
        SymRing::ZIdealizationZ => {
            let mut v = Vec::new();
            for &x in &ints {
                for &m in &ints {
                    let shell = x.unsigned_abs().max(m.unsigned_abs());
                    v.push(((shell, canonical_index(x), canonical_index(m)), SymElem::Pair(int(x), int(m))));
                }
            }
            v
        }
    };
    keyed.sort_by_key(|(k, _)| *k);
    keyed.into_iter().map(|(_, e)| e).collect()
}

/// First `(a, b)` in lexicographic index order with `hyp(a, b)`.
fn first_pair<'a, T>(
    left: &[&'a SymElem<T>],
    right: &[&'a SymElem<T>],
    hyp: impl Fn(&SymElem<T>, &SymElem<T>) -> bool,
) -> Option<Vec<SymElem<T>>>
where
    T: Clone,
{
    for a in left {
        for b in right {
            if hyp(a, b) {
                return Some(vec![(*a).clone(), (*b).clone()]);
            }
        }
    }
    None
}

impl SymEngine {
    fn verdict<T>(&self, pred: &str, witness: Option<Vec<SymElem<T>>>) -> BoundedVerdict<T> {
        BoundedVerdict {
            predicate: pred.to_string(),
            status: if witness.is_some() { Status::RefutedWithWitness } else { Status::UnfalsifiedUpToBound },
            bound: self.bound,
            rule: None,
            witness,
        }
    }

    /// Bounded search only, ignoring the rule set.
    pub fn search_only_ideal<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, pred: &str) -> BoundedVerdict<T> {
        self.search_ideal(r, i, pred)
    }

    pub fn search_only_ring<T: Scalar>(&self, r: SymRing, pred: &str) -> BoundedVerdict<T> {
        self.search_ring(r, pred)
    }

    pub(crate) fn search_ideal<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, pred: &str) -> BoundedVerdict<T> {
        let elems = elements::<T>(r, self.bound);
        let rad_i = self.sym_radical(r, i).expect("canonical ideal");
        let jac = self.sym_jacobson::<T>(r);
        let in_i = |x: &SymElem<T>| r.contains(i, x);
        let in_rad = |x: &SymElem<T>| r.contains(&rad_i, x);
        let a_ok = |x: &SymElem<T>| match pred {
            "prime" | "primary" => !in_i(x),
            "quasi_primary" => !in_rad(x),
            "n_ideal" | "delta1_n" => !r.is_nilpotent(x),
            _ => !r.contains(&jac, x),
        };
        let b_ok = |x: &SymElem<T>| match pred {
            "prime" | "n_ideal" | "j_ideal" => !in_i(x),
            _ => !in_rad(x),
        };
        let left: Vec<&SymElem<T>> = elems.iter().filter(|x| a_ok(x)).collect();
        let right: Vec<&SymElem<T>> = elems.iter().filter(|x| b_ok(x)).collect();
        let w = if pred == "quasi_primary" {
            first_pair(&left, &right, |a, b| in_rad(&r.mul(a, b)))
        } else {
            first_pair(&left, &right, |a, b| in_i(&r.mul(a, b)))
        };
        self.verdict(pred, w)
    }

    pub(crate) fn search_ring<T: Scalar>(&self, r: SymRing, pred: &str) -> BoundedVerdict<T> {
        let elems = elements::<T>(r, self.bound);
        let jac = self.sym_jacobson::<T>(r);
        let nonzero: Vec<&SymElem<T>> = elems.iter().filter(|x| !r.is_zero(x)).collect();
        let nonunit: Vec<&SymElem<T>> = elems.iter().filter(|x| !r.is_unit(x)).collect();
        let single = |keep: &dyn Fn(&SymElem<T>) -> bool| nonzero.iter().find(|x| keep(x)).map(|x| vec![(*x).clone()]);
        let w = match pred {
            "field" => single(&|x| !r.is_unit(x)),
            "reduced" => single(&|x| r.is_nilpotent(x)),
            "semiprimitive" => single(&|x| r.contains(&jac, x)),
            "domain" => first_pair(&nonzero, &nonzero, |a, b| r.is_zero(&r.mul(a, b))),
            "presimplifiable" => first_pair(&nonzero, &nonunit, |a, b| r.mul(a, b) == *a),
            "quasi_presimplifiable" => {
                let left: Vec<&SymElem<T>> = elems.iter().filter(|x| !r.is_nilpotent(x)).collect();
                first_pair(&left, &nonunit, |a, b| r.mul(a, b) == *a)
            }
            "quasi_local" => first_pair(&nonunit, &nonunit, |a, b| r.is_unit(&r.add(a, b))),
            _ => None,
        };
        self.verdict(pred, w)
    }
}
