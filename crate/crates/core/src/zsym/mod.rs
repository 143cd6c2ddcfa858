//! Symbolic backend for ℤ, ℤ₍ₚ₎, ℤ(+)ℤₖ and ℤ(+)ℤ.
//!
//! Ideals are kept in canonical form; decisions come from a closed set of
//! named rules, and anything outside that set falls back to an exhaustive
//! search over elements with coordinates bounded by `B`.
//!
//! Everything is generic over an exact integer scalar; see the `*I64`
//! aliases at the crate root for the default choice.

mod parse;
mod replay;
mod rules;
mod search;

use std::fmt;
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use parse::{parse_sym_elem, parse_sym_ideal, parse_sym_ring};
pub use replay::{replay_example, Replay, ReplayStep, EXAMPLE_IDS};
pub use rules::{justification, RuleInfo, RULES, SYM_IDEAL_PREDICATES, SYM_RING_PREDICATES};
pub use search::canonical_integers;
pub(crate) use search::elements as bounded_elements;

/// Exact integer scalars usable by the symbolic backend.
pub trait Scalar:
    Integer + Signed + Clone + fmt::Debug + fmt::Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + fmt::Debug + fmt::Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

pub(crate) fn int<T: Scalar>(x: i64) -> T {
    T::from_i64(x).expect("small integers fit every scalar")
}

/// The families handled symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymRing {
    Z,
    /// ℤ localized at the prime `p`.
    ZLocal(u64),
    /// ℤ(+)ℤₖ.
    ZIdealization(u64),
    /// ℤ(+)ℤ.
    ZIdealizationZ,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymElem<T> {
    Int(T),
    /// Reduced fraction with positive denominator prime to `p`.
    Frac {
        num: T,
        den: T,
    },
    /// `(r, m)`; for ℤₖ the second coordinate is kept in `0..k`.
    Pair(T, T),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymIdeal<T> {
    /// `nℤ`, `n >= 0`.
    Principal(T),
    LocalZero,
    /// `pᵉℤ₍ₚ₎`; `e = 0` is the whole ring.
    LocalPower(u32),
    /// `aℤ(+)N` with `a >= 0`. `N` is stored by its generator: a divisor of
    /// `k` for ℤₖ (so `n = k` is the zero submodule), or `n >= 0` for ℤ.
    Homogeneous {
        a: T,
        n: T,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    ProvenByRule,
    RefutedWithWitness,
    UnfalsifiedUpToBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedVerdict<T> {
    pub predicate: String,
    pub status: Status,
    pub bound: u64,
    pub rule: Option<&'static str>,
    pub witness: Option<Vec<SymElem<T>>>,
}

impl<T> BoundedVerdict<T> {
    /// True unless refuted.
    pub fn holds(&self) -> bool {
        self.status != Status::RefutedWithWitness
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymVerdictRecord {
    pub predicate: String,
    pub ring: String,
    pub ideal: Option<String>,
    pub status: Status,
    pub bound: u64,
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub justification: Option<String>,
    pub witness: Option<Vec<String>>,
}

impl<T: Scalar> BoundedVerdict<T> {
    pub fn record(&self, r: SymRing, ideal: Option<&SymIdeal<T>>) -> SymVerdictRecord {
        SymVerdictRecord {
            predicate: self.predicate.clone(),
            ring: r.to_string(),
            ideal: ideal.map(|i| r.show_ideal(i)),
            status: self.status,
            bound: self.bound,
            rule: self.rule.map(str::to_string),
            justification: self.rule.and_then(justification).map(str::to_string),
            witness: self.witness.as_ref().map(|w| w.iter().map(|e| e.to_string()).collect()),
        }
    }
}

/// Deliberate rule corruptions, used to check that example replay notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// `√(I(+)N)` keeps `N` instead of growing to the whole module.
    IdealizationRadicalKeepsModule,
    /// `J(ℤ₍ₚ₎)` reported as zero.
    LocalJacobsonZero,
    /// `(⟨n⟩ : s)` returns `⟨n⟩` unchanged.
    ColonSkipsGcd,
    /// Idealization quasi-J rule answers the opposite way.
    IdealizationQuasiJInverted,
}

impl Mutation {
    pub const ALL: [Mutation; 4] = [
        Mutation::IdealizationRadicalKeepsModule,
        Mutation::LocalJacobsonZero,
        Mutation::ColonSkipsGcd,
        Mutation::IdealizationQuasiJInverted,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Mutation::IdealizationRadicalKeepsModule => "idealization-radical",
            Mutation::LocalJacobsonZero => "local-jacobson",
            Mutation::ColonSkipsGcd => "colon-gcd",
            Mutation::IdealizationQuasiJInverted => "idealization-quasi-j",
        }
    }

    pub fn from_id(id: &str) -> Result<Mutation> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.id() == id)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown mutation `{id}`")))
    }
}

pub const DEFAULT_BOUND: u64 = 50;

/// Decision procedures with a falsification bound and an optional mutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymEngine {
    pub bound: u64,
    pub mutation: Option<Mutation>,
}

impl Default for SymEngine {
    fn default() -> Self {
        SymEngine { bound: DEFAULT_BOUND, mutation: None }
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Product of the distinct prime factors of `|n|`; `rad(0) = 0`.
pub fn rad<T: Scalar>(n: &T) -> T {
    let mut n = n.abs();
    if n.is_zero() {
        return n;
    }
    let mut out = T::one();
    let mut d: T = int(2);
    while d.clone() * d.clone() <= n {
        if n.is_multiple_of(&d) {
            out = out * d.clone();
            while n.is_multiple_of(&d) {
                n = n / d.clone();
            }
        }
        d = d + T::one();
    }
    if n > T::one() {
        out = out * n;
    }
    out
}

/// Smallest prime factor of `|n| >= 2`.
pub(crate) fn smallest_prime_factor<T: Scalar>(n: &T) -> T {
    let n = n.abs();
    let mut d: T = int(2);
    while d.clone() * d.clone() <= n {
        if n.is_multiple_of(&d) {
            return d;
        }
        d = d + T::one();
    }
    n
}

pub(crate) fn is_prime_power<T: Scalar>(n: &T) -> bool {
    let n = n.abs();
    n > T::one() && {
        let p = smallest_prime_factor(&n);
        let mut m = n;
        while m.is_multiple_of(&p) {
            m = m / p.clone();
        }
        m.is_one()
    }
}

/// `p`-adic valuation of a nonzero integer.
pub(crate) fn valuation<T: Scalar>(x: &T, p: u64) -> u32 {
    let p: T = T::from_u64(p).expect("prime fits");
    let mut x = x.abs();
    let mut v = 0;
    while !x.is_zero() && x.is_multiple_of(&p) {
        x = x / p.clone();
        v += 1;
    }
    v
}

fn divides<T: Scalar>(d: &T, x: &T) -> bool {
    if d.is_zero() {
        x.is_zero()
    } else {
        x.is_multiple_of(d)
    }
}

impl SymRing {
    pub fn new_local(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(SymRing::ZLocal(p))
        } else {
            Err(Error::InvalidArgument(format!("Z_(p) needs a prime, got {p}")))
        }
    }

    pub fn new_idealization(k: u64) -> Result<Self> {
        if k >= 2 {
            Ok(SymRing::ZIdealization(k))
        } else {
            Err(Error::InvalidArgument(format!("Z(+)Zk needs k >= 2, got {k}")))
        }
    }

    /// The symbolic part of the default catalog.
    pub fn catalog() -> Vec<SymRing> {
        vec![
            SymRing::Z,
            SymRing::ZLocal(2),
            SymRing::ZLocal(3),
            SymRing::ZIdealization(2),
            SymRing::ZIdealization(4),
            SymRing::ZIdealizationZ,
        ]
    }

    pub fn is_idealization(self) -> bool {
        matches!(self, SymRing::ZIdealization(_) | SymRing::ZIdealizationZ)
    }

    fn modulus<T: Scalar>(self) -> Option<T> {
        match self {
            SymRing::ZIdealization(k) => Some(T::from_u64(k).expect("modulus fits")),
            _ => None,
        }
    }

    // ---- elements ----

    pub fn int<T: Scalar>(self, x: T) -> Result<SymElem<T>> {
        match self {
            SymRing::Z => Ok(SymElem::Int(x)),
            SymRing::ZLocal(_) => self.frac(x, T::one()),
            _ => self.pair(x, T::zero()),
        }
    }

    pub fn frac<T: Scalar>(self, num: T, den: T) -> Result<SymElem<T>> {
        let SymRing::ZLocal(p) = self else {
            return Err(Error::InvalidArgument(format!("fractions live in Z_(p), not {self}")));
        };
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let sign: T = if den.is_negative() { -T::one() } else { T::one() };
        let (num, den) = (num / g.clone() * sign.clone(), den / g * sign);
        if valuation(&den, p) > 0 {
            return Err(Error::InvalidArgument(format!("{num}/{den} is not in Z_({p})")));
        }
        Ok(SymElem::Frac { num, den })
    }

    pub fn pair<T: Scalar>(self, x: T, m: T) -> Result<SymElem<T>> {
        match self {
            SymRing::ZIdealization(_) => {
                let k: T = self.modulus().expect("idealization modulus");
                Ok(SymElem::Pair(x, m.mod_floor(&k)))
            }
            SymRing::ZIdealizationZ => Ok(SymElem::Pair(x, m)),
            _ => Err(Error::InvalidArgument(format!("pairs live in idealizations, not {self}"))),
        }
    }

    /// Checks that `e` is a canonical element of this ring.
    pub fn check_elem<T: Scalar>(self, e: &SymElem<T>) -> Result<()> {
        let ok = match (self, e) {
            (SymRing::Z, SymElem::Int(_)) => true,
            (SymRing::ZLocal(_), SymElem::Frac { num, den }) => {
                self.frac(num.clone(), den.clone()).ok().as_ref() == Some(e)
            }
            (SymRing::ZIdealization(_) | SymRing::ZIdealizationZ, SymElem::Pair(x, m)) => {
                self.pair(x.clone(), m.clone()).ok().as_ref() == Some(e)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{e} is not a canonical element of {self}")))
        }
    }

    pub fn zero<T: Scalar>(self) -> SymElem<T> {
        self.int(T::zero()).expect("zero exists")
    }

    pub fn one<T: Scalar>(self) -> SymElem<T> {
        self.int(T::one()).expect("one exists")
    }

    pub fn add<T: Scalar>(self, a: &SymElem<T>, b: &SymElem<T>) -> SymElem<T> {
        match (a, b) {
            (SymElem::Int(x), SymElem::Int(y)) => SymElem::Int(x.clone() + y.clone()),
            (SymElem::Frac { num: a, den: b }, SymElem::Frac { num: c, den: d }) => self
                .frac(a.clone() * d.clone() + c.clone() * b.clone(), b.clone() * d.clone())
                .expect("Z_(p) is closed under addition"),
            (SymElem::Pair(x, m), SymElem::Pair(y, n)) => {
                self.pair(x.clone() + y.clone(), m.clone() + n.clone()).expect("pair ring")
            }
            _ => panic!("elements {a} and {b} are not from the same family"),
        }
    }

    pub fn neg<T: Scalar>(self, a: &SymElem<T>) -> SymElem<T> {
        match a {
            SymElem::Int(x) => SymElem::Int(-x.clone()),
            SymElem::Frac { num, den } => SymElem::Frac { num: -num.clone(), den: den.clone() },
            SymElem::Pair(x, m) => self.pair(-x.clone(), -m.clone()).expect("pair ring"),
        }
    }

    /// `(r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)` on pairs.
    pub fn mul<T: Scalar>(self, a: &SymElem<T>, b: &SymElem<T>) -> SymElem<T> {
        match (a, b) {
            (SymElem::Int(x), SymElem::Int(y)) => SymElem::Int(x.clone() * y.clone()),
            (SymElem::Frac { num: a, den: b }, SymElem::Frac { num: c, den: d }) => {
                self.frac(a.clone() * c.clone(), b.clone() * d.clone()).expect("Z_(p) is closed under multiplication")
            }
            (SymElem::Pair(r1, m1), SymElem::Pair(r2, m2)) => self
                .pair(r1.clone() * r2.clone(), r1.clone() * m2.clone() + r2.clone() * m1.clone())
                .expect("pair ring"),
            _ => panic!("elements {a} and {b} are not from the same family"),
        }
    }

    pub fn is_zero<T: Scalar>(self, a: &SymElem<T>) -> bool {
        *a == self.zero()
    }

    /// The "integer part": the value itself, the numerator, or the first
    /// coordinate.
    fn head<T: Scalar>(a: &SymElem<T>) -> &T {
        match a {
            SymElem::Int(x) | SymElem::Pair(x, _) => x,
            SymElem::Frac { num, .. } => num,
        }
    }

    pub fn is_unit<T: Scalar>(self, a: &SymElem<T>) -> bool {
        match (self, a) {
            (SymRing::ZLocal(p), SymElem::Frac { num, .. }) => !num.is_zero() && valuation(num, p) == 0,
            _ => Self::head(a).abs().is_one(),
        }
    }

    pub fn is_nilpotent<T: Scalar>(self, a: &SymElem<T>) -> bool {
        Self::head(a).is_zero()
    }

    // ---- ideals ----

    pub fn principal<T: Scalar>(self, n: T) -> Result<SymIdeal<T>> {
        match self {
            SymRing::Z => Ok(SymIdeal::Principal(n.abs())),
            SymRing::ZLocal(p) => {
                if n.is_zero() {
                    Ok(SymIdeal::LocalZero)
                } else {
                    Ok(SymIdeal::LocalPower(valuation(&n, p)))
                }
            }
            _ => Err(Error::InvalidArgument(format!("{self} ideals are written aZ(+)N"))),
        }
    }

    /// `aℤ(+)N` with the homogeneity constraint `aM ⊆ N` checked.
    pub fn homogeneous<T: Scalar>(self, a: T, n: T) -> Result<SymIdeal<T>> {
        let a = a.abs();
        let n = match self.modulus::<T>() {
            Some(k) => n.gcd(&k),
            None if self == SymRing::ZIdealizationZ => n.abs(),
            None => return Err(Error::InvalidArgument(format!("{self} is not an idealization"))),
        };
        let a_m = match self.modulus::<T>() {
            Some(k) => a.gcd(&k),
            None => a.clone(),
        };
        if !divides(&n, &a_m) {
            return Err(Error::NonHomogeneous(format!(
                "{}: aM is not inside N",
                self.show_ideal(&SymIdeal::Homogeneous { a, n })
            )));
        }
        Ok(SymIdeal::Homogeneous { a, n })
    }

    /// The whole module `M` as a submodule generator.
    fn full_module<T: Scalar>(self) -> T {
        T::one()
    }

    pub fn check_ideal<T: Scalar>(self, i: &SymIdeal<T>) -> Result<()> {
        let canonical = match (self, i) {
            (SymRing::Z, SymIdeal::Principal(n)) => self.principal(n.clone())?,
            (SymRing::ZLocal(_), SymIdeal::LocalZero | SymIdeal::LocalPower(_)) => i.clone(),
            (SymRing::ZIdealization(_) | SymRing::ZIdealizationZ, SymIdeal::Homogeneous { a, n }) => {
                self.homogeneous(a.clone(), n.clone())?
            }
            _ => return Err(Error::InvalidArgument(format!("{i:?} is not an ideal form for {self}"))),
        };
        if canonical == *i {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{i:?} is not in canonical form")))
        }
    }

    pub fn zero_ideal<T: Scalar>(self) -> SymIdeal<T> {
        match self {
            SymRing::Z => SymIdeal::Principal(T::zero()),
            SymRing::ZLocal(_) => SymIdeal::LocalZero,
            SymRing::ZIdealization(k) => SymIdeal::Homogeneous { a: T::zero(), n: T::from_u64(k).expect("fits") },
            SymRing::ZIdealizationZ => SymIdeal::Homogeneous { a: T::zero(), n: T::zero() },
        }
    }

    pub fn unit_ideal<T: Scalar>(self) -> SymIdeal<T> {
        match self {
            SymRing::Z => SymIdeal::Principal(T::one()),
            SymRing::ZLocal(_) => SymIdeal::LocalPower(0),
            _ => SymIdeal::Homogeneous { a: T::one(), n: T::one() },
        }
    }

    pub fn is_proper<T: Scalar>(self, i: &SymIdeal<T>) -> bool {
        match i {
            SymIdeal::Principal(n) => !n.is_one(),
            SymIdeal::LocalZero => true,
            SymIdeal::LocalPower(e) => *e > 0,
            SymIdeal::Homogeneous { a, .. } => !a.is_one(),
        }
    }

    pub fn contains<T: Scalar>(self, i: &SymIdeal<T>, x: &SymElem<T>) -> bool {
        match (i, x) {
            (SymIdeal::Principal(n), SymElem::Int(v)) => divides(n, v),
            (SymIdeal::LocalZero, SymElem::Frac { num, .. }) => num.is_zero(),
            (SymIdeal::LocalPower(e), SymElem::Frac { num, .. }) => {
                let SymRing::ZLocal(p) = self else { return false };
                num.is_zero() || valuation(num, p) >= *e
            }
            (SymIdeal::Homogeneous { a, n }, SymElem::Pair(r, m)) => divides(a, r) && divides(n, m),
            _ => false,
        }
    }

    /// Ideal product; for idealizations `(aℤ(+)N)(bℤ(+)N') = abℤ(+)(aN' + bN)`.
    pub fn ideal_product<T: Scalar>(self, i: &SymIdeal<T>, k: &SymIdeal<T>) -> Result<SymIdeal<T>> {
        match (i, k) {
            (SymIdeal::Principal(a), SymIdeal::Principal(b)) => Ok(SymIdeal::Principal(a.clone() * b.clone())),
            (SymIdeal::LocalZero, _) | (_, SymIdeal::LocalZero) => Ok(SymIdeal::LocalZero),
            (SymIdeal::LocalPower(e), SymIdeal::LocalPower(f)) => Ok(SymIdeal::LocalPower(e + f)),
            (SymIdeal::Homogeneous { a, n }, SymIdeal::Homogeneous { a: b, n: n2 }) => {
                let g = (a.clone() * n2.clone()).gcd(&(b.clone() * n.clone()));
                self.homogeneous(a.clone() * b.clone(), g)
            }
            _ => Err(Error::InvalidArgument("ideals from different families".into())),
        }
    }

    pub fn show_ideal<T: Scalar>(self, i: &SymIdeal<T>) -> String {
        let part = |g: &T, z: &str| {
            if g.is_zero() {
                "0".to_string()
            } else if g.is_one() {
                z.to_string()
            } else {
                format!("{g}{z}")
            }
        };
        match (self, i) {
            (_, SymIdeal::Principal(n)) => format!("<{n}>"),
            (_, SymIdeal::LocalZero) => "<0>".into(),
            (SymRing::ZLocal(p), SymIdeal::LocalPower(e)) => match e {
                0 => "<1>".into(),
                1 => format!("<{p}>"),
                _ => format!("<{p}^{e}>"),
            },
            (SymRing::ZIdealization(k), SymIdeal::Homogeneous { a, n }) => {
                let m = if n.to_u64() == Some(k) { "0".to_string() } else { part(n, &format!("Z{k}")) };
                format!("{}(+){m}", part(a, "Z"))
            }
            (_, SymIdeal::Homogeneous { a, n }) => format!("{}(+){}", part(a, "Z"), part(n, "Z")),
            (_, SymIdeal::LocalPower(e)) => format!("<p^{e}>"),
        }
    }

    /// Proper ideals used when sweeping the symbolic catalog.
    pub fn catalog_ideals<T: Scalar>(self) -> Vec<SymIdeal<T>> {
        match self {
            SymRing::Z => std::iter::once(0).chain(2..=12).map(|n| SymIdeal::Principal(int(n))).collect(),
            SymRing::ZLocal(_) => {
                let mut v = vec![SymIdeal::LocalZero];
                v.extend((1..=3).map(SymIdeal::LocalPower));
                v
            }
            SymRing::ZIdealization(k) => {
                let divisors: Vec<i64> = (1..=k as i64).filter(|d| k as i64 % d == 0).collect();
                [0i64, 2, 3, 4, 5, 6]
                    .iter()
                    .flat_map(|&a| {
                        let mut ns: Vec<i64> = divisors.clone();
                        // zero submodule first, then larger submodules
                        ns.sort_by_key(|&d| std::cmp::Reverse(d));
                        ns.into_iter().filter_map(move |n| self.homogeneous(int::<T>(a), int(n)).ok())
                    })
                    .collect()
            }
            SymRing::ZIdealizationZ => [0i64, 2, 3, 4, 5, 6]
                .iter()
                .flat_map(|&a| (0..=6).filter_map(move |n| self.homogeneous(int::<T>(a), int(n)).ok()))
                .collect(),
        }
    }
}

impl fmt::Display for SymRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymRing::Z => write!(f, "Z"),
            SymRing::ZLocal(p) => write!(f, "Z_({p})"),
            SymRing::ZIdealization(k) => write!(f, "Z(+)Z{k}"),
            SymRing::ZIdealizationZ => write!(f, "Z(+)Z"),
        }
    }
}

impl<T: fmt::Display + Integer> fmt::Display for SymElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymElem::Int(x) => write!(f, "{x}"),
            SymElem::Frac { num, den } if den.is_one() => write!(f, "{num}"),
            SymElem::Frac { num, den } => write!(f, "{num}/{den}"),
            SymElem::Pair(x, m) => write!(f, "({x},{m})"),
        }
    }
}

impl SymEngine {
    pub fn new(bound: u64) -> Self {
        SymEngine { bound, mutation: None }
    }

    pub fn with_mutation(self, m: Mutation) -> Self {
        SymEngine { mutation: Some(m), ..self }
    }

    fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    /// Closed-form radicals: `rad(n)` in ℤ, `⟨p⟩` or `0` in ℤ₍ₚ₎, and
    /// `√(aℤ(+)N) = rad(a)ℤ(+)M` for idealizations.
    pub fn sym_radical<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>) -> Result<SymIdeal<T>> {
        r.check_ideal(i)?;
        Ok(match i {
            SymIdeal::Principal(n) => SymIdeal::Principal(rad(n)),
            SymIdeal::LocalZero => SymIdeal::LocalZero,
            SymIdeal::LocalPower(e) => SymIdeal::LocalPower((*e).min(1)),
            SymIdeal::Homogeneous { a, n } => {
                let module =
                    if self.mutated(Mutation::IdealizationRadicalKeepsModule) { n.clone() } else { r.full_module() };
                r.homogeneous(rad(a), module)?
            }
        })
    }

    /// `(I : s) = {x : xs ∈ I}`.
    pub fn sym_colon<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, s: &SymElem<T>) -> Result<SymIdeal<T>> {
        r.check_ideal(i)?;
        r.check_elem(s)?;
        let quot = |n: &T, s: &T| -> T {
            if n.is_zero() && s.is_zero() {
                T::one()
            } else if self.mutated(Mutation::ColonSkipsGcd) {
                n.clone()
            } else {
                n.clone() / n.gcd(s)
            }
        };
        Ok(match (i, s) {
            (SymIdeal::Principal(n), SymElem::Int(v)) => SymIdeal::Principal(quot(n, v)),
            (SymIdeal::LocalZero, SymElem::Frac { num, .. }) => {
                if num.is_zero() {
                    SymIdeal::LocalPower(0)
                } else {
                    SymIdeal::LocalZero
                }
            }
            (SymIdeal::LocalPower(e), SymElem::Frac { num, .. }) => {
                let SymRing::ZLocal(p) = r else { unreachable!("checked above") };
                if num.is_zero() {
                    SymIdeal::LocalPower(0)
                } else {
                    SymIdeal::LocalPower(e.saturating_sub(valuation(num, p)))
                }
            }
            (SymIdeal::Homogeneous { a, n }, SymElem::Pair(x0, m0)) => {
                if x0.is_zero() {
                    // only r m0 ∈ N constrains the first coordinate
                    r.homogeneous(quot(n, m0), r.full_module())?
                } else if r.contains(i, &SymElem::Pair(T::zero(), m0.clone())) {
                    r.homogeneous(quot(a, x0), quot(n, x0))?
                } else {
                    return Err(Error::NonHomogeneous(format!(
                        "({} : {s}) couples the two coordinates",
                        r.show_ideal(i)
                    )));
                }
            }
            _ => unreachable!("checked above"),
        })
    }

    pub fn sym_jacobson<T: Scalar>(&self, r: SymRing) -> SymIdeal<T> {
        match r {
            SymRing::Z => SymIdeal::Principal(T::zero()),
            SymRing::ZLocal(_) if self.mutated(Mutation::LocalJacobsonZero) => SymIdeal::LocalZero,
            SymRing::ZLocal(_) => SymIdeal::LocalPower(1),
            _ => r.homogeneous(T::zero(), r.full_module()).expect("0(+)M is homogeneous"),
        }
    }

    pub fn sym_nilradical<T: Scalar>(&self, r: SymRing) -> SymIdeal<T> {
        match r {
            SymRing::Z => SymIdeal::Principal(T::zero()),
            SymRing::ZLocal(_) => SymIdeal::LocalZero,
            _ => r.homogeneous(T::zero(), r.full_module()).expect("0(+)M is homogeneous"),
        }
    }

    pub fn sym_units_contains<T: Scalar>(&self, r: SymRing, x: &SymElem<T>) -> Result<bool> {
        r.check_elem(x)?;
        Ok(r.is_unit(x))
    }

    pub(crate) fn in_jacobson<T: Scalar>(&self, r: SymRing, x: &SymElem<T>) -> bool {
        r.contains(&self.sym_jacobson(r), x)
    }

    pub(crate) fn in_radical<T: Scalar>(&self, r: SymRing, i: &SymIdeal<T>, x: &SymElem<T>) -> bool {
        r.contains(&self.sym_radical(r, i).expect("canonical ideal"), x)
    }
}

/// `sym_radical` with the default engine.
pub fn sym_radical<T: Scalar>(r: SymRing, i: &SymIdeal<T>) -> Result<SymIdeal<T>> {
    SymEngine::default().sym_radical(r, i)
}

pub fn sym_colon<T: Scalar>(r: SymRing, i: &SymIdeal<T>, s: &SymElem<T>) -> Result<SymIdeal<T>> {
    SymEngine::default().sym_colon(r, i, s)
}

pub fn sym_jacobson<T: Scalar>(r: SymRing) -> SymIdeal<T> {
    SymEngine::default().sym_jacobson(r)
}

pub fn sym_nilradical<T: Scalar>(r: SymRing) -> SymIdeal<T> {
    SymEngine::default().sym_nilradical(r)
}

pub fn sym_units_contains<T: Scalar>(r: SymRing, x: &SymElem<T>) -> Result<bool> {
    SymEngine::default().sym_units_contains(r, x)
}

pub fn sym_classify<T: Scalar>(r: SymRing, i: &SymIdeal<T>, predicate: &str) -> Result<BoundedVerdict<T>> {
    SymEngine::default().sym_classify(r, i, predicate)
}

pub fn sym_ring_classify<T: Scalar>(r: SymRing, predicate: &str) -> Result<BoundedVerdict<T>> {
    SymEngine::default().sym_ring_classify(r, predicate)
}

#[cfg(test)]
mod tests {
    use super::*;

    type I = SymIdeal<i64>;

    #[test]
    fn radicals() {
        assert_eq!(sym_radical(SymRing::Z, &I::Principal(12)).unwrap(), I::Principal(6));
        assert_eq!(sym_radical(SymRing::Z, &I::Principal(0)).unwrap(), I::Principal(0));
        let zz = SymRing::ZIdealizationZ;
        let i = zz.homogeneous(0i64, 2).unwrap();
        assert_eq!(sym_radical(zz, &i).unwrap(), zz.homogeneous(0, 1).unwrap());
        assert_eq!(sym_radical(SymRing::ZLocal(2), &I::LocalPower(3)).unwrap(), I::LocalPower(1));
        assert_eq!(rad(&360i64), 30);
        assert_eq!(rad(&-7i64), 7);
    }

    #[test]
    fn colons() {
        let z = SymRing::Z;
        assert_eq!(sym_colon(z, &I::Principal(12), &SymElem::Int(2)).unwrap(), I::Principal(6));
        assert_eq!(sym_colon(z, &I::Principal(12), &SymElem::Int(1)).unwrap(), I::Principal(12));
        assert_eq!(sym_colon(z, &I::Principal(12), &SymElem::Int(5)).unwrap(), I::Principal(12));
        assert_eq!(sym_colon(z, &I::Principal(0), &SymElem::Int(0)).unwrap(), I::Principal(1));
        let l = SymRing::ZLocal(2);
        assert_eq!(sym_colon(l, &I::LocalPower(3), &l.frac(4i64, 3).unwrap()).unwrap(), I::LocalPower(1));
        let zz = SymRing::ZIdealizationZ;
        let i = zz.homogeneous(4i64, 2).unwrap();
        assert_eq!(sym_colon(zz, &i, &SymElem::Pair(2, 0)).unwrap(), zz.homogeneous(2, 1).unwrap());
        assert_eq!(sym_colon(zz, &i, &SymElem::Pair(0, 3)).unwrap(), zz.homogeneous(2, 1).unwrap());
        assert!(matches!(sym_colon(zz, &i, &SymElem::Pair(2, 1)), Err(Error::NonHomogeneous(_))));
    }

    #[test]
    fn closed_forms() {
        let zz = SymRing::ZIdealizationZ;
        assert_eq!(sym_jacobson::<i64>(zz), zz.homogeneous(0, 1).unwrap());
        assert_eq!(sym_nilradical::<i64>(SymRing::Z), I::Principal(0));
        assert_eq!(sym_jacobson::<i64>(SymRing::ZLocal(3)), I::LocalPower(1));
        let z2 = SymRing::ZIdealization(2);
        // (3,1) has first coordinate 3, which is not a unit of Z
        assert!(!sym_units_contains(z2, &SymElem::Pair(3i64, 1)).unwrap());
        assert!(sym_units_contains(z2, &SymElem::Pair(-1i64, 1)).unwrap());
        assert!(sym_units_contains(SymRing::ZLocal(2), &SymRing::ZLocal(2).frac(3i64, 5).unwrap()).unwrap());
    }

    #[test]
    fn homogeneity() {
        let z4 = SymRing::ZIdealization(4);
        assert!(z4.homogeneous(2i64, 2).is_ok());
        // 2·Z4 = {0,2} is not inside the zero submodule
        assert!(matches!(z4.homogeneous(2i64, 4), Err(Error::NonHomogeneous(_))));
        assert!(z4.homogeneous(4i64, 4).is_ok());
        assert_eq!(z4.homogeneous(0i64, 0).unwrap(), I::Homogeneous { a: 0, n: 4 });
        let zz = SymRing::ZIdealizationZ;
        assert!(zz.homogeneous(6i64, 3).is_ok());
        assert!(zz.homogeneous(6i64, 4).is_err());
        for r in SymRing::catalog() {
            for i in r.catalog_ideals::<i64>() {
                r.check_ideal(&i).unwrap();
                assert!(r.is_proper(&i));
            }
        }
    }

    #[test]
    fn arithmetic_and_display() {
        let z2 = SymRing::ZIdealization(2);
        let a = z2.pair(0i64, 1).unwrap();
        let b = z2.pair(3i64, 1).unwrap();
        assert_eq!(z2.mul(&a, &b), a);
        assert_eq!(z2.pair(2i64, 3).unwrap(), SymElem::Pair(2, 1));
        let l = SymRing::ZLocal(2);
        let p = l.mul(&l.frac(2i64, 3).unwrap(), &l.frac(3, 5).unwrap());
        assert_eq!(p.to_string(), "2/5");
        assert!(l.frac(1i64, 2).is_err());
        assert_eq!(z2.show_ideal(&z2.homogeneous(0i64, 1).unwrap()), "0(+)Z2");
        assert_eq!(z2.show_ideal(&z2.zero_ideal::<i64>()), "0(+)0");
        let zz = SymRing::ZIdealizationZ;
        assert_eq!(zz.show_ideal(&zz.homogeneous(0i64, 2).unwrap()), "0(+)2Z");
        let prod = z2.ideal_product(&z2.homogeneous(0i64, 1).unwrap(), &z2.homogeneous(0i64, 1).unwrap()).unwrap();
        assert_eq!(prod, z2.zero_ideal());
    }
}
