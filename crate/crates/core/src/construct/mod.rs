//! Ring constructors and structure maps.
//!
//! Every constructor returns a validated [`RingTable`] whose label is an
//! expression in the grammar of [`expr`], so a ring can always be rebuilt
//! from its label.

mod expr;
mod hom;
mod idealization;
mod module;

use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, ElementSubset, IdealSet, Ring, RingTable, MAX_ORDER};

pub use expr::{parse_generators, parse_ideal_expr, parse_ring_expr, Built, RingKind};
pub use hom::{extend_ideal, pull_ideal, push_ideal, RingHom};
pub use idealization::{ideal_in_idealization, idealization, Idealization};
pub use module::{module_from_quotient, module_self, submodules, zero_module, FinModule};

/// Wraps a label in parentheses when it is not a single token.
pub(crate) fn paren(label: &str) -> String {
    if label.contains(' ') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// `Z/nZ`.
pub fn zmod(n: usize) -> Result<Ring> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Z n needs n >= 2, got {n}")));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    RingTable::from_fns(
        format!("Z {n}"),
        (0..n).map(|i| i.to_string()).collect(),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        0,
        1,
    )
}

/// Direct product with componentwise operations; element `(a,b)` has id
/// `a * |R2| + b`.
pub fn product(r1: &Ring, r2: &Ring) -> Result<Ring> {
    let (n1, n2) = (r1.order(), r2.order());
    if n1 * n2 > MAX_ORDER {
        return Err(Error::OrderTooLarge(n1 * n2));
    }
    let names = (0..n1 * n2).map(|e| format!("({},{})", r1.name(e / n2), r2.name(e % n2))).collect();
    let split = |e: Elem| (e / n2, e % n2);
    RingTable::from_fns(
        format!("prod {} {}", paren(r1.label()), paren(r2.label())),
        names,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            r1.add(a, c) * n2 + r2.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            r1.mul(a, c) * n2 + r2.mul(b, d)
        },
        r1.zero() * n2 + r2.zero(),
        r1.one() * n2 + r2.one(),
    )
}

/// `R/I` with cosets numbered by their smallest representative, together
/// with the canonical projection.
pub fn quotient(r: &Ring, i: &IdealSet) -> Result<(Ring, RingHom)> {
    if !std::sync::Arc::ptr_eq(r, i.ring()) {
        return Err(Error::RingMismatch);
    }
    if !i.is_proper() {
        return Err(Error::NotProper("quotient"));
    }
    let mut coset_of = vec![usize::MAX; r.order()];
    let mut reps = Vec::new();
    for a in r.elements() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(a);
        for x in i.members().iter() {
            coset_of[r.add(a, x)] = id;
        }
    }
    let names = reps.iter().map(|&a| format!("[{}]", r.name(a))).collect();
    let gens: Vec<String> = i.generator_names();
    let q = RingTable::from_fns(
        format!("quot {} <{}>", paren(r.label()), gens.join(",")),
        names,
        |x, y| coset_of[r.add(reps[x], reps[y])],
        |x, y| coset_of[r.mul(reps[x], reps[y])],
        coset_of[r.zero()],
        coset_of[r.one()],
    )?;
    let hom = RingHom::new(r, &q, coset_of)?;
    Ok((q, hom))
}

/// `F_p[x]/(f)` for a monic `f` of degree 2 or 3, `p` in {2, 3, 5}.
///
/// `coeffs` lists `f` from the constant term up; elements are encoded as
/// `c0 + c1 p + c2 p^2`.
pub fn poly_quotient(p: usize, coeffs: &[usize]) -> Result<Ring> {
    if ![2, 3, 5].contains(&p) {
        return Err(Error::InvalidArgument(format!("polyq needs p in {{2,3,5}}, got {p}")));
    }
    let f: Vec<usize> = coeffs.iter().map(|c| c % p).collect();
    let deg = f.len().saturating_sub(1);
    if !(2..=3).contains(&deg) {
        return Err(Error::InvalidArgument(format!("polyq needs deg f in {{2,3}}, got {deg}")));
    }
    if f[deg] != 1 {
        return Err(Error::InvalidArgument("polyq needs a monic modulus".into()));
    }
    let order = p.pow(deg as u32);
    let digits = |e: Elem| -> Vec<usize> {
        let mut e = e;
        (0..deg)
            .map(|_| {
                let d = e % p;
                e /= p;
                d
            })
            .collect()
    };
    let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
    let mul = |x: Elem, y: Elem| {
        let (a, b) = (digits(x), digits(y));
        let mut prod = vec![0usize; 2 * deg - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        for k in (deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &fj) in f.iter().enumerate() {
                let idx = k - deg + j;
                prod[idx] = (prod[idx] + p * p - (c * fj) % p) % p;
            }
        }
        encode(&prod[..deg])
    };
    let add = |x: Elem, y: Elem| {
        let (a, b) = (digits(x), digits(y));
        let s: Vec<usize> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
        encode(&s)
    };
    let names = (0..order).map(|e| poly_to_string(&digits(e))).collect();
    RingTable::from_fns(format!("polyq {p} {}", poly_to_string(&f)), names, add, mul, 0, 1)
}

/// Formats coefficients (constant first) as e.g. `2x^2+x+1`.
pub fn poly_to_string(c: &[usize]) -> String {
    let mut terms = Vec::new();
    for (k, &ck) in c.iter().enumerate().rev() {
        if ck == 0 {
            continue;
        }
        let coef = if ck == 1 && k > 0 { String::new() } else { ck.to_string() };
        terms.push(match k {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{k}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Parses `x^2+x+1`-style polynomials over `F_p`; returns coefficients
/// constant first.
pub fn parse_poly(text: &str, p: usize) -> Result<Vec<usize>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let normalized = s.replace('-', "+-");
    for term in normalized.split('+').filter(|t| !t.is_empty()) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term),
        };
        let (coef, power) = match body.find('x') {
            None => (body.parse::<i64>().map_err(|_| Error::Parse(format!("bad term `{term}`")))?, 0),
            Some(pos) => {
                let c = &body[..pos];
                let c = if c.is_empty() {
                    1
                } else {
                    c.trim_end_matches('*').parse::<i64>().map_err(|_| Error::Parse(format!("bad term `{term}`")))?
                };
                let rest = &body[pos + 1..];
                let e = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("bad exponent in `{term}`")))?
                };
                (c, e)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += if neg { -coef } else { coef };
    }
    let p = p as i64;
    let mut out: Vec<usize> = coeffs.iter().map(|c| c.rem_euclid(p) as usize).collect();
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

/// `{1, s, s^2, ...}`.
pub fn powers_of(r: &Ring, s: Elem) -> ElementSubset {
    let mut set = ElemSet::singleton(r.one());
    set = set.union(&r.power_orbit(s));
    ElementSubset::new(r, set.iter()).expect("powers stay in range")
}

/// Localization at powers of a single element.
pub fn localize_at(r: &Ring, s: Elem) -> Result<(Ring, RingHom)> {
    let set = powers_of(r, s);
    localize_labeled(r, &set, format!("loc {} {}", paren(r.label()), r.name(s)))
}

/// `S^{-1}R` by the fraction-pair equivalence `(r,s) ~ (r',s')` iff
/// `t(rs' - r's) = 0` for some `t` in `S`; also returns `r -> r/1`.
pub fn localize(r: &Ring, s: &ElementSubset) -> Result<(Ring, RingHom)> {
    let names: Vec<&str> = s.members().iter().map(|e| r.name(e)).collect();
    localize_labeled(r, s, format!("loc {} {{{}}}", paren(r.label()), names.join(",")))
}

fn localize_labeled(r: &Ring, s: &ElementSubset, label: String) -> Result<(Ring, RingHom)> {
    if !std::sync::Arc::ptr_eq(r, s.ring()) {
        return Err(Error::RingMismatch);
    }
    let sm = *s.members();
    if !sm.contains(r.one()) {
        return Err(Error::NotMultiplicativelyClosed("1 is not in S".into()));
    }
    if sm.contains(r.zero()) {
        return Err(Error::InvalidArgument("0 in S gives the zero ring".into()));
    }
    for a in sm.iter() {
        for b in sm.iter() {
            if !sm.contains(r.mul(a, b)) {
                return Err(Error::NotMultiplicativelyClosed(format!(
                    "{} * {} = {} not in S",
                    r.name(a),
                    r.name(b),
                    r.name(r.mul(a, b))
                )));
            }
        }
    }
    let svec: Vec<Elem> = sm.iter().collect();
    let equiv = |(a, u): (Elem, Elem), (b, v): (Elem, Elem)| {
        let diff = r.sub(r.mul(a, v), r.mul(b, u));
        svec.iter().any(|&t| r.mul(t, diff) == r.zero())
    };
    // class representatives, in discovery order
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    let mut class_of: HashMap<(Elem, Elem), usize> = HashMap::new();
    for &u in &svec {
        for a in r.elements() {
            let id = match reps.iter().position(|&rep| equiv(rep, (a, u))) {
                Some(id) => id,
                None => {
                    reps.push((a, u));
                    reps.len() - 1
                }
            };
            class_of.insert((a, u), id);
        }
    }
    // canonical key: prefer denominators equal to 1, then the smallest
    // numerator, then the smallest denominator
    let mut best: Vec<(bool, Elem, Elem)> = vec![(true, usize::MAX, usize::MAX); reps.len()];
    for (&(a, u), &id) in &class_of {
        let key = (u != r.one(), a, u);
        if key < best[id] {
            best[id] = key;
        }
    }
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by_key(|&id| best[id]);
    let mut new_id = vec![0; reps.len()];
    for (pos, &id) in order.iter().enumerate() {
        new_id[id] = pos;
    }
    let canon: Vec<(Elem, Elem)> = order.iter().map(|&id| (best[id].1, best[id].2)).collect();
    let lookup = |pair: (Elem, Elem)| new_id[class_of[&pair]];
    let names = canon
        .iter()
        .map(|&(a, u)| if u == r.one() { r.name(a).to_string() } else { format!("{}/{}", r.name(a), r.name(u)) })
        .collect();
    let loc = RingTable::from_fns(
        label,
        names,
        |x, y| {
            let ((a, u), (b, v)) = (canon[x], canon[y]);
            lookup((r.add(r.mul(a, v), r.mul(b, u)), r.mul(u, v)))
        },
        |x, y| {
            let ((a, u), (b, v)) = (canon[x], canon[y]);
            lookup((r.mul(a, b), r.mul(u, v)))
        },
        lookup((r.zero(), r.one())),
        lookup((r.one(), r.one())),
    )?;
    let map = r.elements().map(|a| lookup((a, r.one()))).collect();
    let hom = RingHom::new(r, &loc, map)?;
    Ok((loc, hom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{enumerate_ideals, jacobson, nilradical};

    fn iso(a: &Ring, b: &Ring, map: Vec<Elem>) -> bool {
        RingHom::new(a, b, map).map(|h| h.is_isomorphism()).unwrap_or(false)
    }

    #[test]
    fn zmod_bounds() {
        assert!(zmod(1).is_err());
        assert_eq!(zmod(257).unwrap_err(), Error::OrderTooLarge(257));
        assert_eq!(zmod(2).unwrap().order(), 2);
        assert_eq!(enumerate_ideals(&zmod(12).unwrap()).len(), 6);
    }

    #[test]
    fn product_z2_z3_is_z6_by_crt() {
        let z6 = zmod(6).unwrap();
        let p = product(&zmod(2).unwrap(), &zmod(3).unwrap()).unwrap();
        assert_eq!(p.label(), "prod (Z 2) (Z 3)");
        // x -> (x mod 2, x mod 3), id = (x%2)*3 + x%3
        let map = (0..6).map(|x| (x % 2) * 3 + x % 3).collect();
        assert!(iso(&z6, &p, map));
        assert_eq!(enumerate_ideals(&product(&zmod(2).unwrap(), &zmod(2).unwrap()).unwrap()).len(), 4);
    }

    #[test]
    fn quotients() {
        let z12 = zmod(12).unwrap();
        let (q, h) = quotient(&z12, &IdealSet::principal(&z12, 4)).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.label(), "quot (Z 12) <4>");
        // Z4 -> Z12/<4>: k -> coset of k
        assert!(iso(&zmod(4).unwrap(), &q, (0..4).map(|k| h.apply(k)).collect()));
        let (q0, h0) = quotient(&z12, &IdealSet::zero(&z12)).unwrap();
        assert!(iso(&z12, &q0, (0..12).map(|k| h0.apply(k)).collect()));
        let z8 = zmod(8).unwrap();
        let (q2, _) = quotient(&z8, &IdealSet::principal(&z8, 2)).unwrap();
        assert!(iso(&zmod(2).unwrap(), &q2, vec![0, 1]));
        assert_eq!(quotient(&z8, &IdealSet::full(&z8)).unwrap_err(), Error::NotProper("quotient"));
    }

    #[test]
    fn quotient_then_pull_zero_recovers_ideal() {
        let z12 = zmod(12).unwrap();
        for i in enumerate_ideals(&z12).into_iter().filter(|i| i.is_proper()) {
            let (q, h) = quotient(&z12, &i).unwrap();
            assert_eq!(pull_ideal(&h, &IdealSet::zero(&q)).unwrap(), i);
        }
    }

    #[test]
    fn poly_quotients() {
        let dual = poly_quotient(2, &[0, 0, 1]).unwrap();
        assert_eq!(dual.label(), "polyq 2 x^2");
        let x = dual.find_element("x").unwrap();
        assert_eq!(nilradical(&dual).members().to_vec(), vec![0, x]);
        assert_eq!(jacobson(&dual).members().to_vec(), vec![0, x]);

        let f4 = poly_quotient(2, &[1, 1, 1]).unwrap();
        assert_eq!(f4.unit_set().len(), 3);

        // x^2 + x = x(x+1): x -> (0,1), x+1 -> (1,0) in Z2 x Z2, i.e.
        // c0 + c1 x -> (c0, c0 + c1)
        let split = poly_quotient(2, &[0, 1, 1]).unwrap();
        let p = product(&zmod(2).unwrap(), &zmod(2).unwrap()).unwrap();
        let map = (0..4).map(|e| {
            let (c0, c1) = (e % 2, e / 2);
            c0 * 2 + (c0 + c1) % 2
        });
        assert!(iso(&split, &p, map.collect()));

        assert!(poly_quotient(7, &[0, 0, 1]).is_err());
        assert!(poly_quotient(2, &[1, 1]).is_err());
        assert!(poly_quotient(3, &[1, 0, 2]).is_err());
        assert_eq!(poly_quotient(3, &[0, 0, 0, 1]).unwrap().order(), 27);
    }

    #[test]
    fn polynomial_text() {
        assert_eq!(parse_poly("x^2+x+1", 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_poly("x^3 + 2x + 1", 3).unwrap(), vec![1, 2, 0, 1]);
        assert_eq!(parse_poly("x^2-1", 3).unwrap(), vec![2, 0, 1]);
        assert_eq!(poly_to_string(&[1, 2, 0, 1]), "x^3+2x+1");
        assert_eq!(poly_to_string(&[0, 0]), "0");
        assert!(parse_poly("x^", 2).is_err());
    }

    #[test]
    fn localizations() {
        let z12 = zmod(12).unwrap();
        let (l, h) = localize_at(&z12, 3).unwrap();
        assert_eq!(l.order(), 4);
        // Z4 -> Z12[1/3] : k -> image of 9k (9 = 1 mod 4, 0 mod 3) ... any
        // isomorphism will do; use the canonical map restricted to 0,9,6,3
        let z4 = zmod(4).unwrap();
        let map = (0..4).map(|k| h.apply((9 * k) % 12)).collect();
        assert!(iso(&z4, &l, map));
        for s in powers_of(&z12, 3).members().iter() {
            assert!(l.is_unit(h.apply(s)));
        }

        let z6 = zmod(6).unwrap();
        let (l6, h6) = localize_at(&z6, 2).unwrap();
        assert_eq!(l6.order(), 3);
        let z3 = zmod(3).unwrap();
        assert!(iso(&z3, &l6, (0..3).map(|k| h6.apply((4 * k) % 6)).collect()));

        let (same, h1) = localize(&z6, &ElementSubset::new(&z6, [1]).unwrap()).unwrap();
        assert!(h1.is_isomorphism());
        assert_eq!(same.order(), 6);

        assert!(matches!(
            localize(&z6, &ElementSubset::new(&z6, [1, 2]).unwrap()),
            Err(Error::NotMultiplicativelyClosed(_))
        ));
        assert!(localize_at(&zmod(8).unwrap(), 2).is_err());
    }
}
