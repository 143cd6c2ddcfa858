//! Catalog recipes and their realization as a deterministic ring sequence.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::construct::{
    idealization, localize_at, module_from_quotient, module_self, poly_quotient, powers_of, product, quotient, zmod,
    Built, RingKind,
};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{IdealSet, Ring, MAX_ORDER};
use crate::zsym::{SymRing, DEFAULT_BOUND};

const MAX_PRODUCT_FACTOR: usize = 16;
const MAX_IDEALIZATION_BASE: usize = 16;
const MAX_DERIVED_SOURCE: usize = 64;
const MAX_SYM_BOUND: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ZmodFamily {
    pub min: usize,
    pub max: usize,
}

impl Default for ZmodFamily {
    fn default() -> Self {
        ZmodFamily { min: 2, max: 32 }
    }
}

/// `Z_a x Z_b` for `2 <= a <= b <= max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ProductFamily {
    pub max: usize,
}

impl Default for ProductFamily {
    fn default() -> Self {
        ProductFamily { max: 8 }
    }
}

/// `F_p[x]/(f)` for every monic `f` of each listed degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PolyFamily {
    pub primes: Vec<usize>,
    pub degrees: Vec<usize>,
}

impl Default for PolyFamily {
    fn default() -> Self {
        PolyFamily { primes: vec![2, 3], degrees: vec![2] }
    }
}

/// `Z_n(+)M` for `2 <= n <= max`, with `M = Z_n` and optionally every
/// `Z_n/I` for a nonzero proper `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IdealizationFamily {
    pub max: usize,
    pub quotient_modules: bool,
}

impl Default for IdealizationFamily {
    fn default() -> Self {
        IdealizationFamily { max: 6, quotient_modules: true }
    }
}

/// Quotients and single-generator localizations of the product, polynomial
/// and idealization members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DerivedFamily {
    /// Sources up to this order contribute `R/K` for each nonzero proper `K`.
    pub quotient_max_order: usize,
    /// Product and idealization sources up to this order contribute
    /// `R_s` for non-unit, non-nilpotent `s`, one per kernel.
    pub localization_max_order: usize,
}

impl Default for DerivedFamily {
    fn default() -> Self {
        DerivedFamily { quotient_max_order: 16, localization_max_order: 36 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SymbolicFamily {
    pub bound: u64,
}

impl Default for SymbolicFamily {
    fn default() -> Self {
        SymbolicFamily { bound: DEFAULT_BOUND }
    }
}

/// Which families to generate. A missing section omits that family; the
/// default recipe has every section at its default bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    pub zmod: Option<ZmodFamily>,
    pub products: Option<ProductFamily>,
    pub polyq: Option<PolyFamily>,
    pub idealizations: Option<IdealizationFamily>,
    pub derived: Option<DerivedFamily>,
    pub symbolic: Option<SymbolicFamily>,
}

impl Default for Recipe {
    fn default() -> Self {
        Recipe {
            zmod: Some(ZmodFamily::default()),
            products: Some(ProductFamily::default()),
            polyq: Some(PolyFamily::default()),
            idealizations: Some(IdealizationFamily::default()),
            derived: Some(DerivedFamily::default()),
            symbolic: Some(SymbolicFamily::default()),
        }
    }
}

impl Recipe {
    /// Parses a TOML recipe.
    pub fn parse(text: &str) -> Result<Recipe> {
        let r: Recipe = toml::from_str(text).map_err(|e| Error::Recipe(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("recipe serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Recipe(msg));
        if let Some(z) = &self.zmod {
            if z.min < 2 || z.min > z.max || z.max > MAX_ORDER {
                return bad(format!("zmod needs 2 <= min <= max <= {MAX_ORDER}, got {}..{}", z.min, z.max));
            }
        }
        if let Some(p) = &self.products {
            if p.max > MAX_PRODUCT_FACTOR {
                return bad(format!("products.max {} exceeds {MAX_PRODUCT_FACTOR}", p.max));
            }
        }
        if let Some(p) = &self.polyq {
            if let Some(q) = p.primes.iter().find(|q| ![2, 3, 5].contains(*q)) {
                return bad(format!("polyq prime {q} not in {{2,3,5}}"));
            }
            if let Some(d) = p.degrees.iter().find(|d| ![2, 3].contains(*d)) {
                return bad(format!("polyq degree {d} not in {{2,3}}"));
            }
        }
        if let Some(i) = &self.idealizations {
            if i.max > MAX_IDEALIZATION_BASE {
                return bad(format!("idealizations.max {} exceeds {MAX_IDEALIZATION_BASE}", i.max));
            }
        }
        if let Some(d) = &self.derived {
            if d.quotient_max_order > MAX_DERIVED_SOURCE || d.localization_max_order > MAX_DERIVED_SOURCE {
                return bad(format!("derived source orders are capped at {MAX_DERIVED_SOURCE}"));
            }
        }
        if let Some(s) = &self.symbolic {
            if s.bound > MAX_SYM_BOUND {
                return bad(format!("symbolic.bound {} exceeds {MAX_SYM_BOUND}", s.bound));
            }
        }
        Ok(())
    }
}

pub enum Member {
    Finite(Built),
    Symbolic(SymRing),
}

impl Member {
    pub fn label(&self) -> String {
        match self {
            Member::Finite(b) => b.ring.label().to_string(),
            Member::Symbolic(r) => r.to_string(),
        }
    }
}

pub struct Catalog {
    pub recipe: Recipe,
    pub members: Vec<Member>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn finite(&self) -> impl Iterator<Item = &Built> {
        self.members.iter().filter_map(|m| match m {
            Member::Finite(b) => Some(b),
            Member::Symbolic(_) => None,
        })
    }

    pub fn symbolic(&self) -> impl Iterator<Item = SymRing> + '_ {
        self.members.iter().filter_map(|m| match m {
            Member::Symbolic(r) => Some(*r),
            Member::Finite(_) => None,
        })
    }

    /// Falsification bound for symbolic members.
    pub fn bound(&self) -> u64 {
        self.recipe.symbolic.as_ref().map_or(DEFAULT_BOUND, |s| s.bound)
    }
}

fn base(ring: Ring) -> Built {
    Built { ring, kind: RingKind::Base }
}

/// Every monic polynomial of degree `deg` over `F_p`, constant term first,
/// in increasing order of the lower coefficients read as base-`p` digits.
fn monic_polys(p: usize, deg: usize) -> Vec<Vec<usize>> {
    (0..p.pow(deg as u32))
        .map(|code| {
            let mut c: Vec<usize> = (0..deg).map(|k| code / p.pow(k as u32) % p).collect();
            c.push(1);
            c
        })
        .collect()
}

fn nonzero_proper(r: &Ring) -> Vec<IdealSet> {
    r.ideal_sets().iter().filter(|s| s.len() > 1 && !s.contains(r.one())).map(|s| IdealSet::trusted(r, *s)).collect()
}

/// Kernel of `r -> r/1` in the localization at powers of `s`.
fn localization_kernel(r: &Ring, s: usize) -> ElemSet {
    let powers = powers_of(r, s);
    r.elements().filter(|&a| powers.members().iter().any(|t| r.mul(t, a) == r.zero())).collect()
}

/// Realizes a recipe. Members appear family by family in a fixed order.
pub fn build_catalog(recipe: &Recipe) -> Result<Catalog> {
    recipe.validate()?;
    let mut members = Vec::new();
    if let Some(z) = &recipe.zmod {
        for n in z.min..=z.max {
            members.push(Member::Finite(base(zmod(n)?)));
        }
    }
    let mut products = Vec::new();
    if let Some(p) = &recipe.products {
        for a in 2..=p.max {
            for b in a..=p.max {
                let (left, right) = (zmod(a)?, zmod(b)?);
                let ring = product(&left, &right)?;
                products.push(Built { ring, kind: RingKind::Product { left, right } });
            }
        }
    }
    let mut polys = Vec::new();
    if let Some(p) = &recipe.polyq {
        for &q in &p.primes {
            for &d in &p.degrees {
                for f in monic_polys(q, d) {
                    polys.push(base(poly_quotient(q, &f)?));
                }
            }
        }
    }
    let mut idls = Vec::new();
    if let Some(i) = &recipe.idealizations {
        for n in 2..=i.max {
            let r = zmod(n)?;
            let mut modules = vec![module_self(&r)];
            if i.quotient_modules {
                for k in nonzero_proper(&r) {
                    modules.push(module_from_quotient(&r, &k)?);
                }
            }
            for m in modules {
                let idl = idealization(&r, &m)?;
                idls.push(Built { ring: idl.ring().clone(), kind: RingKind::Idealization(idl) });
            }
        }
    }
    let mut derived = Vec::new();
    if let Some(d) = &recipe.derived {
        for src in products.iter().chain(&polys).chain(&idls) {
            if src.ring.order() > d.quotient_max_order {
                continue;
            }
            for ideal in nonzero_proper(&src.ring) {
                let (ring, projection) = quotient(&src.ring, &ideal)?;
                derived.push(Built { ring, kind: RingKind::Quotient { projection, ideal } });
            }
        }
        for src in products.iter().chain(&idls) {
            let r = &src.ring;
            if r.order() > d.localization_max_order {
                continue;
            }
            let mut kernels = HashSet::new();
            for s in r.elements() {
                if r.is_unit(s) || r.is_nilpotent(s) {
                    continue;
                }
                let kernel = localization_kernel(r, s);
                if kernel.len() == 1 || !kernels.insert(kernel) {
                    continue;
                }
                let (ring, map) = localize_at(r, s)?;
                derived.push(Built { ring, kind: RingKind::Localization { map, generator: s } });
            }
        }
    }
    members.extend(products.into_iter().map(Member::Finite));
    members.extend(polys.into_iter().map(Member::Finite));
    members.extend(idls.into_iter().map(Member::Finite));
    members.extend(derived.into_iter().map(Member::Finite));
    if recipe.symbolic.is_some() {
        members.extend(SymRing::catalog().into_iter().map(Member::Symbolic));
    }
    Ok(Catalog { recipe: recipe.clone(), members })
}
