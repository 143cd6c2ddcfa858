//! Plain definitional checks used to re-validate witnesses. These avoid the
//! ring's caches on purpose.

use crate::elemset::ElemSet;
use crate::finring::{Elem, RingTable};

pub(crate) fn unit(r: &RingTable, a: Elem) -> bool {
    r.elements().any(|b| r.mul(a, b) == r.one())
}

/// Some power `a^k` with `1 <= k <= |R|` lies in `target`.
pub(crate) fn some_power_in(r: &RingTable, a: Elem, target: &ElemSet) -> bool {
    let mut p = a;
    for _ in 0..=r.order() {
        if target.contains(p) {
            return true;
        }
        p = r.mul(p, a);
    }
    false
}

pub(crate) fn nilpotent(r: &RingTable, a: Elem) -> bool {
    some_power_in(r, a, &ElemSet::singleton(r.zero()))
}

pub(crate) fn in_radical(r: &RingTable, i: &ElemSet, a: Elem) -> bool {
    some_power_in(r, a, i)
}

pub(crate) fn in_jacobson(r: &RingTable, a: Elem) -> bool {
    r.elements().all(|x| unit(r, r.sub(r.one(), r.mul(x, a))))
}
