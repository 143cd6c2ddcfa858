//! Per-ring data shared by every check: the ideal lattice, radicals, class
//! flags, and lazily built quotients.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::classify::{
    is_presimplifiable, is_quasi_presimplifiable, is_von_neumann_regular, j_ideal_by_definition, quasi_j_by_pair_scan,
};
use crate::construct::{quotient, RingHom, RingKind};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::finring::{Elem, IdealSet, Ring};

/// What a quotient `R/K` looks like, by ideal index of `K`.
pub struct QuotientInfo {
    pub ring: Ring,
    pub projection: RingHom,
    pub presimplifiable: bool,
    pub quasi_presimplifiable: bool,
    pub von_neumann_regular: bool,
    /// Pair-scan quasi-J flag for every proper ideal of the quotient.
    pub qj: HashMap<ElemSet, bool>,
}

pub struct RingCtx<'a> {
    pub ring: &'a Ring,
    pub kind: &'a RingKind,
    /// All ideals, smallest first; the last one is `R`.
    pub ideals: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    pub radicals: Vec<ElemSet>,
    /// Pair-scan J-ideal flag; false for `R`.
    pub j: Vec<bool>,
    /// Pair-scan quasi-J flag; false for `R`.
    pub qj: Vec<bool>,
    pub jac: ElemSet,
    pub nil: ElemSet,
    pub units: ElemSet,
    products: OnceLock<Vec<Vec<usize>>>,
    quotients: OnceLock<Vec<Option<QuotientInfo>>>,
}

impl<'a> RingCtx<'a> {
    pub fn new(ring: &'a Ring, kind: &'a RingKind) -> Result<Self> {
        let ideals: Vec<ElemSet> = ring.ideal_sets().to_vec();
        let index = ideals.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        let radicals = ideals.iter().map(|s| ring.radical_set(s)).collect();
        let mut j = Vec::with_capacity(ideals.len());
        let mut qj = Vec::with_capacity(ideals.len());
        for s in &ideals {
            if s.contains(ring.one()) {
                j.push(false);
                qj.push(false);
            } else {
                let i = IdealSet::trusted(ring, *s);
                j.push(j_ideal_by_definition(&i)?.holds);
                qj.push(quasi_j_by_pair_scan(&i)?.holds);
            }
        }
        Ok(RingCtx {
            ring,
            kind,
            ideals,
            index,
            radicals,
            j,
            qj,
            jac: ring.jacobson_set(),
            nil: ring.nilradical_set(),
            units: ring.unit_set(),
            products: OnceLock::new(),
            quotients: OnceLock::new(),
        })
    }

    /// Index of an ideal of this ring; panics on a non-ideal.
    pub fn index_of(&self, s: &ElemSet) -> usize {
        *self.index.get(s).expect("set is an ideal of this ring")
    }

    pub fn is_proper(&self, k: usize) -> bool {
        !self.ideals[k].contains(self.ring.one())
    }

    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ideals.len()).filter(|&k| self.is_proper(k))
    }

    pub fn qj_of(&self, s: &ElemSet) -> bool {
        self.qj[self.index_of(s)]
    }

    /// The quasi-J definition: `√I` is a J-ideal.
    pub fn qj_by_definition(&self, k: usize) -> bool {
        self.is_proper(k) && self.j[self.index_of(&self.radicals[k])]
    }

    pub fn ideal(&self, k: usize) -> IdealSet {
        IdealSet::trusted(self.ring, self.ideals[k])
    }

    pub fn show(&self, s: &ElemSet) -> String {
        self.ring.show_ideal(s)
    }

    pub fn name(&self, e: Elem) -> &str {
        self.ring.name(e)
    }

    pub fn label(&self) -> &str {
        self.ring.label()
    }

    /// Index of the ideal product of ideals `x` and `y`.
    pub fn product(&self, x: usize, y: usize) -> usize {
        let table = self.products.get_or_init(|| {
            (0..self.ideals.len())
                .map(|a| {
                    (0..self.ideals.len())
                        .map(|b| self.index_of(&self.ring.product_sets(&self.ideals[a], &self.ideals[b])))
                        .collect()
                })
                .collect()
        });
        table[x][y]
    }

    pub fn prime(&self, s: &ElemSet) -> bool {
        self.ring.prime_sets().contains(s)
    }

    pub fn maximal(&self, s: &ElemSet) -> bool {
        self.ring.maximal_sets().contains(s)
    }

    /// `R/K` for every proper `K`, built on first use.
    pub fn quotients(&self) -> &[Option<QuotientInfo>] {
        self.quotients.get_or_init(|| {
            (0..self.ideals.len())
                .map(|k| {
                    if !self.is_proper(k) {
                        return None;
                    }
                    let (q, pi) = quotient(self.ring, &self.ideal(k)).expect("proper ideal has a quotient");
                    Some(QuotientInfo {
                        qj: quasi_j_flags(&q),
                        presimplifiable: is_presimplifiable(&q).expect("consistent classifier").holds,
                        quasi_presimplifiable: is_quasi_presimplifiable(&q).expect("consistent classifier").holds,
                        von_neumann_regular: is_von_neumann_regular(&q).expect("consistent classifier").holds,
                        ring: q,
                        projection: pi,
                    })
                })
                .collect()
        })
    }
}

/// Pair-scan quasi-J flags of every proper ideal of `r`.
pub fn quasi_j_flags(r: &Ring) -> HashMap<ElemSet, bool> {
    r.ideal_sets()
        .iter()
        .filter(|s| !s.contains(r.one()))
        .map(|s| (*s, quasi_j_by_pair_scan(&IdealSet::trusted(r, *s)).expect("proper ideal").holds))
        .collect()
}
