use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, IdealSet, Ring};

/// A unital ring homomorphism given by its value on every element id.
#[derive(Clone)]
pub struct RingHom {
    source: Ring,
    target: Ring,
    map: Vec<Elem>,
}

impl std::fmt::Debug for RingHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RingHom({} -> {})", self.source.label(), self.target.label())
    }
}

impl RingHom {
    pub fn new(source: &Ring, target: &Ring, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::NotAHomomorphism(format!(
                "map has {} entries for a ring of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(bad) = map.iter().find(|&&e| e >= target.order()) {
            return Err(Error::NotAHomomorphism(format!("image id {bad} out of range")));
        }
        if map[source.one()] != target.one() {
            return Err(Error::NotAHomomorphism("1 is not sent to 1".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "addition fails at ({}, {})",
                        source.name(a),
                        source.name(b)
                    )));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "multiplication fails at ({}, {})",
                        source.name(a),
                        source.name(b)
                    )));
                }
            }
        }
        Ok(RingHom { source: Arc::clone(source), target: Arc::clone(target), map })
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn image_set(&self, s: &ElemSet) -> ElemSet {
        s.iter().map(|a| self.map[a]).collect()
    }

    pub fn kernel(&self) -> IdealSet {
        let z = self.target.zero();
        let set = self.source.elements().filter(|&a| self.map[a] == z).collect();
        IdealSet::trusted(&self.source, set)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set(&self.source.full_set()).len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// `f(I)` for a surjective `f`, where the image of an ideal is an ideal.
pub fn push_ideal(f: &RingHom, i: &IdealSet) -> Result<IdealSet> {
    if !Arc::ptr_eq(f.source(), i.ring()) {
        return Err(Error::RingMismatch);
    }
    if !f.is_surjective() {
        return Err(Error::InvalidArgument("push_ideal needs a surjective map".into()));
    }
    Ok(IdealSet::trusted(f.target(), f.image_set(i.members())))
}

/// `f^{-1}(K)`.
pub fn pull_ideal(f: &RingHom, k: &IdealSet) -> Result<IdealSet> {
    if !Arc::ptr_eq(f.target(), k.ring()) {
        return Err(Error::RingMismatch);
    }
    let set = f.source().elements().filter(|&a| k.contains(f.apply(a))).collect();
    Ok(IdealSet::trusted(f.source(), set))
}

/// The ideal generated by `f(I)`; for a localization map this is `S^{-1}I`.
pub fn extend_ideal(f: &RingHom, i: &IdealSet) -> Result<IdealSet> {
    if !Arc::ptr_eq(f.source(), i.ring()) {
        return Err(Error::RingMismatch);
    }
    let set = f.target().generated_set(&f.image_set(i.members()));
    Ok(IdealSet::trusted(f.target(), set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{localize_at, product, quotient, zmod};

    #[test]
    fn rejects_non_homomorphisms() {
        let z4 = zmod(4).unwrap();
        let z2 = zmod(2).unwrap();
        assert!(RingHom::new(&z4, &z2, vec![0, 1, 0, 1]).is_ok());
        assert!(RingHom::new(&z4, &z2, vec![0, 1, 1, 1]).is_err());
        assert!(RingHom::new(&z2, &z4, vec![0, 1]).is_err());
        assert!(RingHom::new(&z4, &z2, vec![0, 1]).is_err());
    }

    #[test]
    fn projection_kernel_and_ideal_transport() {
        let z2 = zmod(2).unwrap();
        let z3 = zmod(3).unwrap();
        let p = product(&z2, &z3).unwrap();
        let pr = RingHom::new(&p, &z3, p.elements().map(|e| e % 3).collect()).unwrap();
        assert!(pr.is_surjective());
        assert!(!pr.is_injective());
        assert_eq!(pr.kernel().members().to_vec(), vec![0, 3]);
        let zero3 = IdealSet::zero(&z3);
        let back = pull_ideal(&pr, &zero3).unwrap();
        assert_eq!(push_ideal(&pr, &back).unwrap(), zero3);
    }

    #[test]
    fn extension_to_a_localization() {
        let z12 = zmod(12).unwrap();
        let (l, h) = localize_at(&z12, 3).unwrap();
        // <2> survives inverting 3; <3> becomes the whole ring
        assert!(extend_ideal(&h, &IdealSet::principal(&z12, 2)).unwrap().is_proper());
        assert!(!extend_ideal(&h, &IdealSet::principal(&z12, 3)).unwrap().is_proper());
        assert!(push_ideal(&h, &IdealSet::principal(&z12, 2)).is_ok() == h.is_surjective());
        let (q, pi) = quotient(&z12, &IdealSet::principal(&z12, 6)).unwrap();
        assert!(push_ideal(&pi, &IdealSet::principal(&z12, 2)).unwrap().is_proper());
        assert_eq!(l.order(), 4);
        assert_eq!(q.order(), 6);
    }
}
