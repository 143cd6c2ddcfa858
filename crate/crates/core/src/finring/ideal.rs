use std::fmt;
use std::sync::Arc;

use super::{Elem, Ring};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// An ideal of a finite ring. The whole ring is representable; properness
/// is a predicate, not an invariant.
#[derive(Clone)]
pub struct IdealSet {
    ring: Ring,
    members: ElemSet,
}

/// An arbitrary subset of a ring's elements.
#[derive(Clone)]
pub struct ElementSubset {
    ring: Ring,
    members: ElemSet,
}

impl IdealSet {
    pub fn new(ring: &Ring, members: ElemSet) -> Result<Self> {
        if let Some(why) = ring.ideal_violation(&members) {
            return Err(Error::NotAnIdeal(format!("{} in {}: {why}", ring.show_set(&members), ring.label())));
        }
        Ok(IdealSet { ring: Arc::clone(ring), members })
    }

    /// Wraps a set already known to be an ideal (e.g. taken from the cached
    /// lattice). Checked in debug builds only.
    pub(crate) fn trusted(ring: &Ring, members: ElemSet) -> Self {
        debug_assert!(ring.ideal_violation(&members).is_none());
        IdealSet { ring: Arc::clone(ring), members }
    }

    pub fn zero(ring: &Ring) -> Self {
        IdealSet::trusted(ring, ElemSet::singleton(ring.zero()))
    }

    pub fn full(ring: &Ring) -> Self {
        IdealSet::trusted(ring, ring.full_set())
    }

    /// The principal ideal generated by `a`.
    pub fn principal(ring: &Ring, a: Elem) -> Self {
        IdealSet::trusted(ring, ring.principal_set(a))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_ring(&self, other: &IdealSet) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring)
    }

    pub fn generators(&self) -> Vec<Elem> {
        self.ring.canonical_generators(&self.members)
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators().into_iter().map(|g| self.ring.name(g).to_string()).collect()
    }

    pub fn as_subset(&self) -> ElementSubset {
        ElementSubset { ring: Arc::clone(&self.ring), members: self.members }
    }
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.members == other.members
    }
}

impl Eq for IdealSet {}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.ring.show_ideal(&self.members), self.ring.label())
    }
}

impl fmt::Display for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.show_ideal(&self.members))
    }
}

impl ElementSubset {
    pub fn new(ring: &Ring, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let members: Vec<Elem> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|&&e| e >= ring.order()) {
            return Err(Error::InvalidArgument(format!("element id {bad} not in {}", ring.label())));
        }
        Ok(ElementSubset { ring: Arc::clone(ring), members: members.into_iter().collect() })
    }

    pub(crate) fn from_set(ring: &Ring, members: ElemSet) -> Self {
        ElementSubset { ring: Arc::clone(ring), members }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }
}

impl PartialEq for ElementSubset {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.show_set(&self.members))
    }
}

fn same_ring(i: &IdealSet, k: &IdealSet) -> Result<()> {
    if i.same_ring(k) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn units(r: &Ring) -> ElementSubset {
    ElementSubset::from_set(r, r.unit_set())
}

pub fn nilradical(r: &Ring) -> IdealSet {
    IdealSet::trusted(r, r.nilradical_set())
}

pub fn jacobson(r: &Ring) -> IdealSet {
    IdealSet::trusted(r, r.jacobson_set())
}

pub fn zero_divisors(r: &Ring) -> ElementSubset {
    ElementSubset::from_set(r, r.zero_divisor_set())
}

/// `NZ(R)`: elements annihilating some non-nilpotent element.
pub fn not_quasi_regular(r: &Ring) -> ElementSubset {
    ElementSubset::from_set(r, r.not_quasi_regular_set())
}

pub fn ideal_generated(r: &Ring, gens: &ElementSubset) -> Result<IdealSet> {
    if !Arc::ptr_eq(r, gens.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(IdealSet::trusted(r, r.generated_set(gens.members())))
}

pub fn enumerate_ideals(r: &Ring) -> Vec<IdealSet> {
    r.ideal_sets().iter().map(|s| IdealSet::trusted(r, *s)).collect()
}

pub fn radical(i: &IdealSet) -> IdealSet {
    IdealSet::trusted(i.ring(), i.ring().radical_set(i.members()))
}

/// `(I : S) = {r : rS ⊆ I}`.
pub fn colon(i: &IdealSet, s: &ElementSubset) -> Result<IdealSet> {
    if !Arc::ptr_eq(i.ring(), s.ring()) {
        return Err(Error::RingMismatch);
    }
    if s.is_empty() {
        return Err(Error::InvalidArgument("colon by an empty subset".into()));
    }
    Ok(IdealSet::trusted(i.ring(), i.ring().colon_set(i.members(), s.members())))
}

pub fn ideal_sum(i: &IdealSet, k: &IdealSet) -> Result<IdealSet> {
    same_ring(i, k)?;
    Ok(IdealSet::trusted(i.ring(), i.ring().sum_sets(i.members(), k.members())))
}

pub fn ideal_product(i: &IdealSet, k: &IdealSet) -> Result<IdealSet> {
    same_ring(i, k)?;
    Ok(IdealSet::trusted(i.ring(), i.ring().product_sets(i.members(), k.members())))
}

pub fn ideal_intersection(i: &IdealSet, k: &IdealSet) -> Result<IdealSet> {
    same_ring(i, k)?;
    Ok(IdealSet::trusted(i.ring(), i.members().intersection(k.members())))
}

pub fn ideal_power(i: &IdealSet, n: u32) -> Result<IdealSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("ideal power exponent must be positive".into()));
    }
    let r = i.ring();
    let mut acc = *i.members();
    for _ in 1..n {
        acc = r.product_sets(&acc, i.members());
    }
    Ok(IdealSet::trusted(r, acc))
}

pub fn maximal_ideals(r: &Ring) -> Vec<IdealSet> {
    r.maximal_sets().iter().map(|s| IdealSet::trusted(r, *s)).collect()
}

pub fn prime_ideals(r: &Ring) -> Vec<IdealSet> {
    r.prime_sets().iter().map(|s| IdealSet::trusted(r, *s)).collect()
}

/// Intersection of the maximal ideals containing `I`.
pub fn j_of_ideal(i: &IdealSet) -> Result<IdealSet> {
    if !i.is_proper() {
        return Err(Error::NotProper("j_of_ideal"));
    }
    let r = i.ring();
    let set =
        r.maximal_sets().iter().filter(|m| i.members().is_subset(m)).fold(r.full_set(), |acc, m| acc.intersection(m));
    Ok(IdealSet::trusted(r, set))
}

/// Every prime ideal is maximal.
pub fn is_zero_dimensional(r: &Ring) -> bool {
    let maximal = r.maximal_sets();
    r.prime_sets().iter().all(|p| maximal.contains(p))
}
