//! Prefix construction grammar.
//!
//! ```text
//! ring   := "Z" n | "prod" ring ring | "quot" ring ideal | "polyq" p poly
//!         | "idl" ring module | "loc" ring elem | "(" ring ")"
//! module := "selfmod" | "zeromod" | "quotmod" ideal | "(" module ")"
//! ideal  := "<" elem ("," elem)* ">"
//! ```
//!
//! Elements are written by their display names, e.g. `3`, `(0,1)`, `x+1`.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{ideal_generated, Elem, ElementSubset, IdealSet, Ring};

use super::{
    idealization, localize_at, module_from_quotient, module_self, parse_poly, poly_quotient, product, quotient,
    zero_module, zmod, FinModule, Idealization, RingHom,
};

/// A ring built from an expression, with the structure it came from.
#[derive(Clone, Debug)]
pub struct Built {
    pub ring: Ring,
    pub kind: RingKind,
}

#[derive(Clone)]
pub enum RingKind {
    Base,
    Product { left: Ring, right: Ring },
    Quotient { projection: RingHom, ideal: IdealSet },
    Idealization(Idealization),
    Localization { map: RingHom, generator: Elem },
}

impl std::fmt::Debug for RingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            RingKind::Base => "Base",
            RingKind::Product { .. } => "Product",
            RingKind::Quotient { .. } => "Quotient",
            RingKind::Idealization(_) => "Idealization",
            RingKind::Localization { .. } => "Localization",
        };
        f.write_str(tag)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Paren(String),
    Angle(String),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' || c == '<' {
            let close = if c == '(' { ')' } else { '>' };
            let mut depth = 0usize;
            let start = i + 1;
            loop {
                if i >= chars.len() {
                    return Err(Error::Parse(format!("unbalanced `{c}` in `{text}`")));
                }
                let d = chars[i];
                if d == '(' || d == '<' {
                    depth += 1;
                } else if d == ')' || d == '>' {
                    depth -= 1;
                    if depth == 0 {
                        if d != close {
                            return Err(Error::Parse(format!("mismatched `{d}` in `{text}`")));
                        }
                        break;
                    }
                }
                i += 1;
            }
            let inner: String = chars[start..i].iter().collect();
            out.push(if c == '(' { Tok::Paren(inner) } else { Tok::Angle(inner) });
            i += 1;
        } else if c == ')' || c == '>' {
            return Err(Error::Parse(format!("unexpected `{c}` in `{text}`")));
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() && !"()<>".contains(chars[i]) {
                i += 1;
            }
            out.push(Tok::Word(chars[start..i].iter().collect()));
        }
    }
    Ok(out)
}

/// Splits on commas outside parentheses.
pub(crate) fn split_top_level(text: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '<' => depth += 1,
            ')' | '>' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    parts.into_iter().map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect()
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn next(&mut self, what: &str) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("expected {what}, found end of input")))?;
        self.pos += 1;
        Ok(t)
    }

    fn word(&mut self, what: &str) -> Result<String> {
        match self.next(what)? {
            Tok::Word(w) => Ok(w),
            other => Err(Error::Parse(format!("expected {what}, found {other:?}"))),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let w = self.word(what)?;
        w.parse().map_err(|_| Error::Parse(format!("expected {what}, found `{w}`")))
    }

    fn element(&mut self, r: &Ring) -> Result<Elem> {
        let text = match self.next("an element")? {
            Tok::Word(w) => w,
            Tok::Paren(p) => format!("({p})"),
            Tok::Angle(a) => return Err(Error::Parse(format!("expected an element, found <{a}>"))),
        };
        element_by_name(r, &text)
    }

    fn ring(&mut self) -> Result<Built> {
        match self.next("a ring")? {
            Tok::Paren(inner) => parse_ring_expr(&inner),
            Tok::Angle(a) => Err(Error::Parse(format!("expected a ring, found <{a}>"))),
            Tok::Word(w) => match w.as_str() {
                "Z" => Ok(base(zmod(self.number("a modulus")?)?)),
                "prod" => {
                    let left = self.ring()?.ring;
                    let right = self.ring()?.ring;
                    let ring = product(&left, &right)?;
                    Ok(Built { ring, kind: RingKind::Product { left, right } })
                }
                "quot" => {
                    let parent = self.ring()?.ring;
                    let ideal = self.ideal(&parent)?;
                    let (ring, projection) = quotient(&parent, &ideal)?;
                    Ok(Built { ring, kind: RingKind::Quotient { projection, ideal } })
                }
                "polyq" => {
                    let p = self.number("a prime")?;
                    let f = parse_poly(&self.word("a polynomial")?, p)?;
                    Ok(base(poly_quotient(p, &f)?))
                }
                "idl" => {
                    let parent = self.ring()?.ring;
                    let module = self.module(&parent)?;
                    let idl = idealization(&parent, &module)?;
                    Ok(Built { ring: idl.ring().clone(), kind: RingKind::Idealization(idl) })
                }
                "loc" => {
                    let parent = self.ring()?.ring;
                    let generator = self.element(&parent)?;
                    let (ring, map) = localize_at(&parent, generator)?;
                    Ok(Built { ring, kind: RingKind::Localization { map, generator } })
                }
                other => Err(Error::Parse(format!("unknown ring constructor `{other}`"))),
            },
        }
    }

    fn module(&mut self, r: &Ring) -> Result<FinModule> {
        match self.next("a module")? {
            Tok::Paren(inner) => {
                let mut sub = Parser { toks: tokenize(&inner)?, pos: 0 };
                let m = sub.module(r)?;
                sub.finish()?;
                Ok(m)
            }
            Tok::Word(w) => match w.as_str() {
                "selfmod" => Ok(module_self(r)),
                "zeromod" => Ok(zero_module(r)),
                "quotmod" => {
                    let i = self.ideal(r)?;
                    module_from_quotient(r, &i)
                }
                other => Err(Error::Parse(format!("unknown module `{other}`"))),
            },
            Tok::Angle(a) => Err(Error::Parse(format!("expected a module, found <{a}>"))),
        }
    }

    fn ideal(&mut self, r: &Ring) -> Result<IdealSet> {
        match self.next("an ideal")? {
            Tok::Angle(inner) => parse_generators(r, &inner),
            other => Err(Error::Parse(format!("expected <generators>, found {other:?}"))),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(Error::Parse(format!("trailing input {t:?}"))),
        }
    }
}

fn base(ring: Ring) -> Built {
    Built { ring, kind: RingKind::Base }
}

fn element_by_name(r: &Ring, text: &str) -> Result<Elem> {
    r.find_element(text).ok_or_else(|| Error::Parse(format!("no element `{text}` in {}", r.label())))
}

/// Parses a ring expression such as `quot (Z 12) <4>`.
pub fn parse_ring_expr(text: &str) -> Result<Built> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let built = p.ring()?;
    p.finish()?;
    Ok(built)
}

/// Closes a generator list such as `4,6`, `<4,6>` or `(0,1),(2,0)` into an
/// ideal of `r`.
pub fn parse_generators(r: &Ring, text: &str) -> Result<IdealSet> {
    let t = text.trim();
    let t = t.strip_prefix('<').and_then(|s| s.strip_suffix('>')).unwrap_or(t);
    let gens: Vec<Elem> = match r.find_element(t) {
        Some(e) if !t.is_empty() => vec![e],
        _ => split_top_level(t).iter().map(|g| element_by_name(r, g)).collect::<Result<_>>()?,
    };
    let set: ElemSet = gens.into_iter().collect();
    ideal_generated(r, &ElementSubset::new(r, set.iter())?)
}

/// Parses `ideal RING g1 g2 ...` or `ideal RING <g1,g2>`.
pub fn parse_ideal_expr(text: &str) -> Result<(Built, IdealSet)> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0 };
    let kw = p.word("`ideal`")?;
    if kw != "ideal" {
        return Err(Error::Parse(format!("expected `ideal`, found `{kw}`")));
    }
    let built = p.ring()?;
    let r = built.ring.clone();
    let mut set = ElemSet::empty();
    while p.pos < p.toks.len() {
        if let Tok::Angle(_) = p.toks[p.pos] {
            set = set.union(p.ideal(&r)?.members());
        } else {
            set.insert(p.element(&r)?);
        }
    }
    let ideal = ideal_generated(&r, &ElementSubset::new(&r, set.iter())?)?;
    Ok((built, ideal))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_grammar_examples() {
        for (text, order) in [
            ("Z 12", 12),
            ("prod (Z 2) (Z 3)", 6),
            ("quot (Z 12) <4>", 4),
            ("idl (Z 4) selfmod", 16),
            ("idl (Z 4) (quotmod <2>)", 8),
            ("idl (Z 3) zeromod", 3),
            ("polyq 2 x^2", 4),
            ("loc (Z 12) 3", 4),
            ("(Z 5)", 5),
        ] {
            let b = parse_ring_expr(text).unwrap();
            assert_eq!(b.ring.order(), order, "{text}");
            // labels are expressions that rebuild the same tables
            let again = parse_ring_expr(b.ring.label()).unwrap();
            assert_eq!(again.ring.mul_table(), b.ring.mul_table(), "{text}");
        }
        let (b, i) = parse_ideal_expr("ideal (Z 8) 4").unwrap();
        assert_eq!(b.ring.label(), "Z 8");
        assert_eq!(i.members().to_vec(), vec![0, 4]);
    }

    #[test]
    fn nested_and_element_syntax() {
        let b = parse_ring_expr("quot (prod (Z 2) (Z 4)) <(0,2)>").unwrap();
        assert_eq!(b.ring.order(), 4);
        assert!(matches!(b.kind, RingKind::Quotient { .. }));
        let l = parse_ring_expr("loc (prod (Z 2) (Z 3)) (1,0)").unwrap();
        assert_eq!(l.ring.order(), 2);
        let (_, i) = parse_ideal_expr("ideal (idl (Z 2) selfmod) (0,1)").unwrap();
        assert_eq!(i.len(), 2);
        let (_, k) = parse_ideal_expr("ideal (Z 12) <4,6>").unwrap();
        assert_eq!(k.generator_names(), vec!["2"]);
        let qq = parse_ring_expr("quot (quot (Z 12) <6>) <[2]>").unwrap();
        assert_eq!(qq.ring.order(), 2);
    }

    #[test]
    fn generator_lists() {
        let r = parse_ring_expr("idl (Z 2) selfmod").unwrap().ring;
        assert_eq!(parse_generators(&r, "0,1").unwrap().len(), 2);
        assert_eq!(parse_generators(&r, "(0,1),(1,0)").unwrap().len(), 4);
        assert_eq!(parse_generators(&r, "<>").unwrap().len(), 1);
    }

    #[test]
    fn parse_errors() {
        for bad in
            ["", "Z", "Z x", "Q 3", "prod (Z 2)", "quot (Z 4) 2", "Z 4 extra", "(Z 4", "idl (Z 2) foo", "loc (Z 4) 9"]
        {
            assert!(parse_ring_expr(bad).is_err(), "{bad}");
        }
        assert!(parse_ideal_expr("ideal (Z 4) 7").is_err());
        assert!(parse_ideal_expr("ring (Z 4) 2").is_err());
    }
}
