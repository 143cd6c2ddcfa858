//! Finite commutative unital rings given by explicit operation tables.
//!
//! A [`RingTable`] is validated once on construction (all ring axioms on
//! every triple) and is immutable afterwards. Derived invariants such as the
//! unit group, the radicals and the ideal lattice are computed lazily and
//! cached inside the table.

mod ideal;
mod serial;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

pub use ideal::{
    colon, enumerate_ideals, ideal_generated, ideal_intersection, ideal_power, ideal_product, ideal_sum,
    is_zero_dimensional, j_of_ideal, jacobson, maximal_ideals, nilradical, not_quasi_regular, prime_ideals, radical,
    units, zero_divisors, ElementSubset, IdealSet,
};
pub use serial::{IdealRecord, RingRecord};

/// Element id inside a [`RingTable`].
pub type Elem = usize;

/// Shared handle to a validated ring.
pub type Ring = Arc<RingTable>;

/// Largest accepted ring order.
pub const MAX_ORDER: usize = 256;

pub struct RingTable {
    label: String,
    names: Vec<String>,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    cache: Cache,
}

#[derive(Default)]
struct Cache {
    units: OnceLock<ElemSet>,
    nilradical: OnceLock<ElemSet>,
    jacobson: OnceLock<ElemSet>,
    zero_divisors: OnceLock<ElemSet>,
    not_quasi_regular: OnceLock<ElemSet>,
    powers: OnceLock<Vec<ElemSet>>,
    principal: OnceLock<Vec<ElemSet>>,
    ideals: OnceLock<Vec<ElemSet>>,
    maximal: OnceLock<Vec<ElemSet>>,
    primes: OnceLock<Vec<ElemSet>>,
}

impl RingTable {
    /// Builds and validates a ring from flat row-major tables.
    ///
    /// `names` gives a display string per element; they must be distinct.
    pub fn new(
        label: impl Into<String>,
        names: Vec<String>,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
        one: Elem,
    ) -> Result<Ring> {
        let order = names.len();
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        if order < 2 {
            return Err(Error::Shape("a ring needs 0 != 1, so at least two elements".into()));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::Shape(format!(
                "tables must have {} entries, got add={} mul={}",
                order * order,
                add.len(),
                mul.len()
            )));
        }
        if let Some(bad) = add.iter().chain(mul.iter()).find(|&&e| e >= order) {
            return Err(Error::Shape(format!("table entry {bad} out of range 0..{order}")));
        }
        if zero >= order || one >= order {
            return Err(Error::Shape("zero/one id out of range".into()));
        }
        {
            let mut seen = std::collections::HashSet::new();
            if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
                return Err(Error::Shape(format!("duplicate element name `{dup}`")));
            }
        }
        let mut ring = RingTable {
            label: label.into(),
            names,
            order,
            add: add.iter().map(|&e| e as u16).collect(),
            mul: mul.iter().map(|&e| e as u16).collect(),
            neg: Vec::new(),
            zero,
            one,
            cache: Cache::default(),
        };
        ring.validate()?;
        Ok(Arc::new(ring))
    }

    /// Builds a ring by evaluating the operations on every pair of ids.
    pub fn from_fns(
        label: impl Into<String>,
        names: Vec<String>,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
        zero: Elem,
        one: Elem,
    ) -> Result<Ring> {
        let n = names.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut a = Vec::with_capacity(n * n);
        let mut m = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                a.push(add(x, y));
                m.push(mul(x, y));
            }
        }
        RingTable::new(label, names, a, m, zero, one)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.order;
        let (z, o) = (self.zero, self.one);
        if z == o {
            return Err(Error::Axiom { law: "one != zero", witness: vec![z] });
        }
        for a in 0..n {
            if self.add(a, z) != a {
                return Err(Error::Axiom { law: "additive identity", witness: vec![a] });
            }
            if self.mul(a, o) != a {
                return Err(Error::Axiom { law: "multiplicative identity", witness: vec![a] });
            }
        }
        let mut neg = vec![0u16; n];
        for (a, slot) in neg.iter_mut().enumerate() {
            match (0..n).find(|&b| self.add(a, b) == z) {
                Some(b) => *slot = b as u16,
                None => return Err(Error::Axiom { law: "additive inverse", witness: vec![a] }),
            }
        }
        self.neg = neg;
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::Axiom { law: "additive commutativity", witness: vec![a, b] });
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::Axiom { law: "multiplicative commutativity", witness: vec![a, b] });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::Axiom { law: "additive associativity", witness: vec![a, b, c] });
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Axiom { law: "multiplicative associativity", witness: vec![a, b, c] });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_mul, self.mul(a, c)) {
                        return Err(Error::Axiom { law: "distributivity", witness: vec![a, b, c] });
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-runs the exhaustive axiom check on an already built table.
    pub fn check_axioms(&self) -> Result<()> {
        let mut copy = RingTable {
            label: self.label.clone(),
            names: self.names.clone(),
            order: self.order,
            add: self.add.clone(),
            mul: self.mul.clone(),
            neg: Vec::new(),
            zero: self.zero,
            one: self.one,
            cache: Cache::default(),
        };
        copy.validate()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Construction expression that rebuilds this ring.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by its display name (whitespace-insensitive).
    pub fn find_element(&self, name: &str) -> Option<Elem> {
        let wanted: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        self.names.iter().position(|n| *n == wanted).or_else(|| {
            if wanted.starts_with('(') {
                None
            } else {
                let wrapped = format!("({wanted})");
                self.names.iter().position(|n| *n == wrapped)
            }
        })
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn add_table(&self) -> Vec<Elem> {
        self.add.iter().map(|&e| e as Elem).collect()
    }

    pub fn mul_table(&self) -> Vec<Elem> {
        self.mul.iter().map(|&e| e as Elem).collect()
    }

    // ---- cached invariants (as bitsets) ----

    pub fn unit_set(&self) -> ElemSet {
        *self
            .cache
            .units
            .get_or_init(|| self.elements().filter(|&a| self.elements().any(|b| self.mul(a, b) == self.one)).collect())
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.unit_set().contains(a)
    }

    /// All positive powers `a, a^2, ...` of each element.
    fn powers(&self) -> &[ElemSet] {
        self.cache.powers.get_or_init(|| {
            self.elements()
                .map(|a| {
                    let mut seen = ElemSet::empty();
                    let mut p = a;
                    while seen.insert(p) {
                        p = self.mul(p, a);
                    }
                    seen
                })
                .collect()
        })
    }

    /// `{a^k : k >= 1}`.
    pub fn power_orbit(&self, a: Elem) -> ElemSet {
        self.powers()[a]
    }

    pub fn nilradical_set(&self) -> ElemSet {
        *self
            .cache
            .nilradical
            .get_or_init(|| self.elements().filter(|&a| self.power_orbit(a).contains(self.zero)).collect())
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.nilradical_set().contains(a)
    }

    /// Jacobson radical as the intersection of all maximal ideals.
    ///
    /// Asserts agreement with the quasi-regular characterization
    /// `{a : 1 - ra is a unit for every r}`.
    pub fn jacobson_set(&self) -> ElemSet {
        *self.cache.jacobson.get_or_init(|| {
            let by_maximals = self.maximal_sets().iter().fold(self.full_set(), |acc, m| acc.intersection(m));
            let by_units = self.jacobson_by_units();
            assert_eq!(by_maximals, by_units, "Jacobson radical routes disagree on ring `{}`", self.label);
            by_maximals
        })
    }

    /// `{a : for all r, 1 - ra is a unit}`.
    pub fn jacobson_by_units(&self) -> ElemSet {
        let u = self.unit_set();
        self.elements().filter(|&a| self.elements().all(|r| u.contains(self.sub(self.one, self.mul(r, a))))).collect()
    }

    pub fn zero_divisor_set(&self) -> ElemSet {
        *self.cache.zero_divisors.get_or_init(|| {
            self.elements()
                .filter(|&a| self.elements().any(|b| b != self.zero && self.mul(a, b) == self.zero))
                .collect()
        })
    }

    /// `{a : there is b not nilpotent with ab = 0}`.
    pub fn not_quasi_regular_set(&self) -> ElemSet {
        *self.cache.not_quasi_regular.get_or_init(|| {
            let nil = self.nilradical_set();
            self.elements()
                .filter(|&a| self.elements().any(|b| !nil.contains(b) && self.mul(a, b) == self.zero))
                .collect()
        })
    }

    /// The principal ideal `Ra`.
    pub fn principal_set(&self, a: Elem) -> ElemSet {
        self.cache
            .principal
            .get_or_init(|| self.elements().map(|g| self.elements().map(|r| self.mul(r, g)).collect()).collect())[a]
    }

    /// Additive subgroup generated by `gens` (always contains zero).
    pub fn additive_closure(&self, gens: &ElemSet) -> ElemSet {
        let mut out = ElemSet::singleton(self.zero);
        let mut frontier = vec![self.zero];
        let g: Vec<Elem> = gens.iter().collect();
        while let Some(x) = frontier.pop() {
            for &y in &g {
                let s = self.add(x, y);
                if out.insert(s) {
                    frontier.push(s);
                }
            }
        }
        out
    }

    /// `I + K` for additive subgroups.
    pub fn sum_sets(&self, i: &ElemSet, k: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty();
        for a in i.iter() {
            for b in k.iter() {
                out.insert(self.add(a, b));
            }
        }
        out
    }

    /// Ideal generated by all products `ik`.
    pub fn product_sets(&self, i: &ElemSet, k: &ElemSet) -> ElemSet {
        let mut prods = ElemSet::empty();
        for a in i.iter() {
            for b in k.iter() {
                prods.insert(self.mul(a, b));
            }
        }
        self.additive_closure(&prods)
    }

    /// Smallest ideal containing `gens`.
    pub fn generated_set(&self, gens: &ElemSet) -> ElemSet {
        gens.iter().fold(ElemSet::singleton(self.zero), |acc, g| self.sum_sets(&acc, &self.principal_set(g)))
    }

    /// `{r : r^k in I for some k >= 1}`.
    pub fn radical_set(&self, i: &ElemSet) -> ElemSet {
        self.elements().filter(|&r| !self.power_orbit(r).is_disjoint(i)).collect()
    }

    /// `{r : rs in I for all s in S}`.
    pub fn colon_set(&self, i: &ElemSet, s: &ElemSet) -> ElemSet {
        self.elements().filter(|&r| s.iter().all(|x| i.contains(self.mul(r, x)))).collect()
    }

    /// Checks the ideal axioms for a subset; returns a description of the
    /// first violation.
    pub fn ideal_violation(&self, s: &ElemSet) -> Option<String> {
        if !s.contains(self.zero) {
            return Some("does not contain zero".into());
        }
        if let Some(a) = s.iter().find(|&a| a >= self.order) {
            return Some(format!("element id {a} out of range"));
        }
        for a in s.iter() {
            for b in s.iter() {
                if !s.contains(self.add(a, b)) {
                    return Some(format!("not closed under addition: {} + {}", self.name(a), self.name(b)));
                }
            }
            for r in self.elements() {
                if !s.contains(self.mul(r, a)) {
                    return Some(format!("not absorbing: {} * {}", self.name(r), self.name(a)));
                }
            }
        }
        None
    }

    /// All ideals, smallest first; computed as the join-closure of the
    /// principal ideals under ideal sum.
    pub fn ideal_sets(&self) -> &[ElemSet] {
        self.cache.ideals.get_or_init(|| {
            use std::collections::BTreeSet;
            let principals: BTreeSet<ElemSet> = self.elements().map(|a| self.principal_set(a)).collect();
            let mut all: BTreeSet<ElemSet> = principals.clone();
            let mut frontier: Vec<ElemSet> = principals.iter().copied().collect();
            while let Some(i) = frontier.pop() {
                for p in &principals {
                    if p.is_subset(&i) {
                        continue;
                    }
                    let s = self.sum_sets(&i, p);
                    if all.insert(s) {
                        frontier.push(s);
                    }
                }
            }
            all.into_iter().collect()
        })
    }

    pub fn maximal_sets(&self) -> &[ElemSet] {
        self.cache.maximal.get_or_init(|| {
            let full = self.full_set();
            let proper: Vec<&ElemSet> = self.ideal_sets().iter().filter(|i| **i != full).collect();
            proper.iter().filter(|i| !proper.iter().any(|k| k != *i && i.is_subset(k))).map(|i| **i).collect()
        })
    }

    pub fn prime_sets(&self) -> &[ElemSet] {
        self.cache.primes.get_or_init(|| {
            let full = self.full_set();
            self.ideal_sets().iter().filter(|p| **p != full && self.is_prime_set(p)).copied().collect()
        })
    }

    fn is_prime_set(&self, p: &ElemSet) -> bool {
        self.elements().all(|a| p.contains(a) || self.elements().all(|b| p.contains(b) || !p.contains(self.mul(a, b))))
    }

    /// Nontrivial idempotent (`e^2 = e`, `e != 0, 1`), smallest id first.
    pub fn nontrivial_idempotent(&self) -> Option<Elem> {
        self.elements().find(|&e| e != self.zero && e != self.one && self.mul(e, e) == e)
    }

    /// Display form of a set of element ids, e.g. `{0, 6}`.
    pub fn show_set(&self, s: &ElemSet) -> String {
        let parts: Vec<&str> = s.iter().map(|e| self.name(e)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Greedy canonical generating set of an ideal: scan ids ascending and
    /// keep each element not already in the ideal generated so far.
    pub fn canonical_generators(&self, i: &ElemSet) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = ElemSet::singleton(self.zero);
        for e in i.iter() {
            if span == *i {
                break;
            }
            if !span.contains(e) {
                gens.push(e);
                span = self.sum_sets(&span, &self.principal_set(e));
            }
        }
        if gens.is_empty() {
            gens.push(self.zero);
        }
        gens
    }

    /// `<g1,g2,...>` display of an ideal.
    pub fn show_ideal(&self, i: &ElemSet) -> String {
        let gens: Vec<&str> = self.canonical_generators(i).into_iter().map(|g| self.name(g)).collect();
        format!("<{}>", gens.join(","))
    }
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable").field("label", &self.label).field("order", &self.order).finish()
    }
}

impl fmt::Display for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> Ring {
        RingTable::from_fns(
            format!("Z {n}"),
            (0..n).map(|i| i.to_string()).collect(),
            |a, b| (a + b) % n,
            |a, b| (a * b) % n,
            0,
            1 % n,
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_tables() {
        // x*y = 0 everywhere has no multiplicative identity
        let err = RingTable::from_fns("bad", vec!["0".into(), "1".into()], |a, b| (a + b) % 2, |_, _| 0, 0, 1);
        assert!(matches!(err, Err(Error::Axiom { law: "multiplicative identity", .. })));
        // subtraction is not associative
        let err = RingTable::from_fns(
            "bad",
            (0..3).map(|i| i.to_string()).collect(),
            |a, b| (a + 3 - b) % 3,
            |a, b| (a * b) % 3,
            0,
            1,
        );
        assert!(err.is_err());
        let err = RingTable::from_fns("tiny", vec!["0".into()], |_, _| 0, |_, _| 0, 0, 0);
        assert!(matches!(err, Err(Error::Shape(_))));
        let big = RingTable::from_fns(
            "big",
            (0..257).map(|i| i.to_string()).collect(),
            |a, b| (a + b) % 257,
            |a, b| (a * b) % 257,
            0,
            1,
        );
        assert_eq!(big.unwrap_err(), Error::OrderTooLarge(257));
    }

    #[test]
    fn cached_invariants_on_z12() {
        let r = zn(12);
        assert_eq!(r.unit_set().to_vec(), vec![1, 5, 7, 11]);
        assert_eq!(r.nilradical_set().to_vec(), vec![0, 6]);
        assert_eq!(r.jacobson_set().to_vec(), vec![0, 6]);
        assert_eq!(r.ideal_sets().len(), 6);
        assert_eq!(r.maximal_sets().len(), 2);
        assert_eq!(r.nontrivial_idempotent(), Some(4));
        assert_eq!(r.canonical_generators(&r.principal_set(8)), vec![4]);
        assert_eq!(r.show_ideal(&r.principal_set(9)), "<3>");
    }

    #[test]
    fn find_element_by_name() {
        let r = zn(5);
        assert_eq!(r.find_element(" 3 "), Some(3));
        assert_eq!(r.find_element("7"), None);
    }
}
