use std::sync::Arc;

use super::{paren, FinModule};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, IdealSet, Ring, RingTable, MAX_ORDER};

/// `R(+)M` together with the data it was built from. Element `(r,m)` has id
/// `r * |M| + m`.
#[derive(Clone, Debug)]
pub struct Idealization {
    ring: Ring,
    base: Ring,
    module: FinModule,
}

/// Builds `R(+)M` with `(r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)`.
pub fn idealization(base: &Ring, module: &FinModule) -> Result<Idealization> {
    if !Arc::ptr_eq(base, module.ring()) {
        return Err(Error::RingMismatch);
    }
    let mo = module.order();
    let n = base.order() * mo;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let split = |e: Elem| (e / mo, e % mo);
    let names = (0..n)
        .map(|e| {
            let (r, m) = split(e);
            format!("({},{})", base.name(r), module.name(m))
        })
        .collect();
    let ring = RingTable::from_fns(
        format!("idl {} {}", paren(base.label()), paren(module.label())),
        names,
        |x, y| {
            let ((r1, m1), (r2, m2)) = (split(x), split(y));
            base.add(r1, r2) * mo + module.add(m1, m2)
        },
        |x, y| {
            let ((r1, m1), (r2, m2)) = (split(x), split(y));
            base.mul(r1, r2) * mo + module.add(module.act(r1, m2), module.act(r2, m1))
        },
        base.zero() * mo + module.zero(),
        base.one() * mo + module.zero(),
    )?;
    Ok(Idealization { ring, base: Arc::clone(base), module: module.clone() })
}

impl Idealization {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn module(&self) -> &FinModule {
        &self.module
    }

    pub fn pair(&self, r: Elem, m: usize) -> Elem {
        r * self.module.order() + m
    }

    pub fn split(&self, e: Elem) -> (Elem, usize) {
        (e / self.module.order(), e % self.module.order())
    }

    /// The set `I × N` (not checked to be an ideal).
    pub fn pair_set(&self, i: &ElemSet, n: &ElemSet) -> ElemSet {
        i.iter().flat_map(|r| n.iter().map(move |m| (r, m))).map(|(r, m)| self.pair(r, m)).collect()
    }

    /// `I(+)M`.
    pub fn lift_full(&self, i: &IdealSet) -> Result<IdealSet> {
        ideal_in_idealization(self, i, &self.module.full_set())
    }

    /// Whether an ideal of `R(+)M` has the form `I × N`; returns the parts.
    pub fn homogeneous_parts(&self, k: &IdealSet) -> Option<(ElemSet, ElemSet)> {
        let first: ElemSet = k.members().iter().map(|e| self.split(e).0).collect();
        let second: ElemSet =
            k.members().iter().map(|e| self.split(e)).filter(|&(r, _)| r == self.base.zero()).map(|(_, m)| m).collect();
        (self.pair_set(&first, &second) == *k.members()).then_some((first, second))
    }
}

/// `I(+)N`, which is an ideal exactly when `IM ⊆ N`.
pub fn ideal_in_idealization(idl: &Idealization, i: &IdealSet, n: &ElemSet) -> Result<IdealSet> {
    if !Arc::ptr_eq(idl.base(), i.ring()) {
        return Err(Error::RingMismatch);
    }
    let module = idl.module();
    if n.iter().any(|m| m >= module.order()) || !module.is_submodule(n) {
        return Err(Error::InvalidArgument(format!("{} is not a submodule", module.show_set(n))));
    }
    let im = module.ideal_times(i.members());
    if !im.is_subset(n) {
        return Err(Error::NotAnIdeal(format!(
            "IM = {} is not inside N = {}",
            module.show_set(&im),
            module.show_set(n)
        )));
    }
    IdealSet::new(idl.ring(), idl.pair_set(i.members(), n))
}
