use std::collections::BTreeSet;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, IdealSet, Ring};

/// A finite unitary module over a table ring.
#[derive(Clone)]
pub struct FinModule {
    ring: Ring,
    label: String,
    names: Vec<String>,
    add: Vec<usize>,
    action: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
}

impl FinModule {
    /// `add` is `order × order`, `action` is `|R| × order`, both row-major.
    pub fn new(
        ring: &Ring,
        label: impl Into<String>,
        names: Vec<String>,
        add: Vec<usize>,
        action: Vec<usize>,
        zero: usize,
    ) -> Result<Self> {
        let n = names.len();
        let rn = ring.order();
        if n == 0 || add.len() != n * n || action.len() != rn * n || zero >= n {
            return Err(Error::Shape(format!("module tables do not match order {n}")));
        }
        if add.iter().chain(&action).any(|&e| e >= n) {
            return Err(Error::Shape("module table entry out of range".into()));
        }
        let plus = |a: usize, b: usize| add[a * n + b];
        let act = |r: Elem, m: usize| action[r * n + m];
        let mut neg = vec![usize::MAX; n];
        for (a, slot) in neg.iter_mut().enumerate() {
            if plus(a, zero) != a {
                return Err(Error::ModuleAxiom { law: "additive identity", witness: vec![a] });
            }
            match (0..n).find(|&b| plus(a, b) == zero) {
                Some(b) => *slot = b,
                None => return Err(Error::ModuleAxiom { law: "additive inverse", witness: vec![a] }),
            }
            for b in 0..n {
                if plus(a, b) != plus(b, a) {
                    return Err(Error::ModuleAxiom { law: "additive commutativity", witness: vec![a, b] });
                }
                for c in 0..n {
                    if plus(plus(a, b), c) != plus(a, plus(b, c)) {
                        return Err(Error::ModuleAxiom { law: "additive associativity", witness: vec![a, b, c] });
                    }
                }
            }
        }
        for m in 0..n {
            if act(ring.one(), m) != m {
                return Err(Error::ModuleAxiom { law: "1m = m", witness: vec![m] });
            }
        }
        for r in ring.elements() {
            for m in 0..n {
                for k in 0..n {
                    if act(r, plus(m, k)) != plus(act(r, m), act(r, k)) {
                        return Err(Error::ModuleAxiom { law: "r(m+n) = rm+rn", witness: vec![r, m, k] });
                    }
                }
                for s in ring.elements() {
                    if act(ring.add(r, s), m) != plus(act(r, m), act(s, m)) {
                        return Err(Error::ModuleAxiom { law: "(r+s)m = rm+sm", witness: vec![r, s, m] });
                    }
                    if act(ring.mul(r, s), m) != act(r, act(s, m)) {
                        return Err(Error::ModuleAxiom { law: "(rs)m = r(sm)", witness: vec![r, s, m] });
                    }
                }
            }
        }
        Ok(FinModule { ring: Arc::clone(ring), label: label.into(), names, add, action, neg, zero })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn act(&self, r: Elem, m: usize) -> usize {
        self.action[r * self.order() + m]
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    /// `IM` as a set: the additive closure of all `im`.
    pub fn ideal_times(&self, i: &ElemSet) -> ElemSet {
        let gens = i.iter().flat_map(|r| (0..self.order()).map(move |m| (r, m)));
        self.additive_closure(gens.map(|(r, m)| self.act(r, m)).collect())
    }

    fn additive_closure(&self, gens: ElemSet) -> ElemSet {
        let mut set = ElemSet::singleton(self.zero);
        let mut frontier: Vec<usize> = vec![self.zero];
        while let Some(x) = frontier.pop() {
            for g in gens.iter() {
                let y = self.add(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// `Rm`.
    pub fn cyclic(&self, m: usize) -> ElemSet {
        self.ring.elements().map(|r| self.act(r, m)).collect()
    }

    pub fn is_submodule(&self, n: &ElemSet) -> bool {
        n.contains(self.zero)
            && n.iter().all(|a| n.iter().all(|b| n.contains(self.add(a, b))))
            && n.iter().all(|m| self.ring.elements().all(|r| n.contains(self.act(r, m))))
    }

    pub fn show_set(&self, s: &ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|m| self.name(m)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl std::fmt::Debug for FinModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinModule({} over {})", self.label, self.ring.label())
    }
}

/// `R` as a module over itself.
pub fn module_self(r: &Ring) -> FinModule {
    FinModule::new(r, "selfmod", r.names().to_vec(), r.add_table(), r.mul_table(), r.zero())
        .expect("a ring is a module over itself")
}

/// The zero module.
pub fn zero_module(r: &Ring) -> FinModule {
    FinModule::new(r, "zeromod", vec!["0".into()], vec![0], vec![0; r.order()], 0).expect("the zero module is a module")
}

/// `R/I` as an `R`-module; cosets are numbered by smallest representative.
pub fn module_from_quotient(r: &Ring, i: &IdealSet) -> Result<FinModule> {
    if !Arc::ptr_eq(r, i.ring()) {
        return Err(Error::RingMismatch);
    }
    if !i.is_proper() {
        return Err(Error::NotProper("module_from_quotient"));
    }
    let mut coset_of = vec![usize::MAX; r.order()];
    let mut reps = Vec::new();
    for a in r.elements() {
        if coset_of[a] == usize::MAX {
            for x in i.members().iter() {
                coset_of[r.add(a, x)] = reps.len();
            }
            reps.push(a);
        }
    }
    let n = reps.len();
    let mut add = Vec::with_capacity(n * n);
    for &a in &reps {
        for &b in &reps {
            add.push(coset_of[r.add(a, b)]);
        }
    }
    let mut action = Vec::with_capacity(r.order() * n);
    for s in r.elements() {
        for &a in &reps {
            action.push(coset_of[r.mul(s, a)]);
        }
    }
    let names = reps.iter().map(|&a| format!("[{}]", r.name(a))).collect();
    FinModule::new(r, format!("quotmod <{}>", i.generator_names().join(",")), names, add, action, 0)
}

/// All submodules, as the join-closure of the cyclic ones; smallest first.
pub fn submodules(m: &FinModule) -> Vec<ElemSet> {
    let cyclic: BTreeSet<ElemSet> = (0..m.order()).map(|x| m.cyclic(x)).collect();
    let mut all = cyclic.clone();
    let mut frontier: Vec<ElemSet> = cyclic.iter().copied().collect();
    while let Some(a) = frontier.pop() {
        for c in &cyclic {
            let s = m.additive_closure(a.union(c));
            if all.insert(s) {
                frontier.push(s);
            }
        }
    }
    all.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::zmod;

    #[test]
    fn submodule_lattices() {
        let z4 = zmod(4).unwrap();
        let subs = submodules(&module_self(&z4));
        let v: Vec<Vec<usize>> = subs.iter().map(|s| s.to_vec()).collect();
        assert_eq!(v, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(submodules(&module_self(&zmod(5).unwrap())).len(), 2);
        assert_eq!(submodules(&zero_module(&z4)).len(), 1);
    }

    #[test]
    fn quotient_module() {
        let z4 = zmod(4).unwrap();
        let m = module_from_quotient(&z4, &IdealSet::principal(&z4, 2)).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.act(3, 1), 1);
        assert_eq!(m.act(2, 1), 0);
        assert_eq!(m.ideal_times(&IdealSet::principal(&z4, 2).members().clone()).to_vec(), vec![0]);
    }

    #[test]
    fn rejects_bad_actions() {
        let z2 = zmod(2).unwrap();
        // 1 acting as zero on Z2
        let bad = FinModule::new(&z2, "bad", vec!["0".into(), "1".into()], vec![0, 1, 1, 0], vec![0, 0, 0, 0], 0);
        assert!(matches!(bad, Err(Error::ModuleAxiom { law: "1m = m", .. })));
        // Z2 is not a Z3-module via the identity action
        let z3 = zmod(3).unwrap();
        let bad = FinModule::new(&z3, "bad", vec!["0".into(), "1".into()], vec![0, 1, 1, 0], vec![0, 0, 0, 1, 0, 1], 0);
        assert!(bad.is_err());
    }
}
