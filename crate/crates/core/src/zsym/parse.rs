//! Text forms for symbolic rings, ideals and elements.
//!
//! ```text
//! ring   := "Z" | "Z_(p)" | "Z(p)" | "ZplusZk" | "Z(+)Zk" | "ZplusZ" | "Z(+)Z"
//! ideal  := n | "<" n ">" | p "^" e          (Z and Z_(p))
//!         | part ("," | "(+)") part          (idealizations), part := "0" | "Z" | n "Z" | n
//! elem   := n | n "/" d | "(" x "," m ")" | x "," m
//! ```

use super::{Scalar, SymElem, SymIdeal, SymRing};
use crate::error::{Error, Result};

fn parse_err(what: &str, text: &str) -> Error {
    Error::Parse(format!("cannot read {what} from `{text}`"))
}

fn scalar<T: Scalar>(text: &str) -> Result<T> {
    let t = text.trim();
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err("an integer", text));
    }
    let v = T::from_str_radix(digits, 10).map_err(|_| parse_err("an integer", text))?;
    Ok(if neg { -v } else { v })
}

pub fn parse_sym_ring(text: &str) -> Result<SymRing> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.replace("plus", "(+)");
    if t == "Z" {
        return Ok(SymRing::Z);
    }
    if let Some(rest) = t.strip_prefix("Z(+)Z") {
        return if rest.is_empty() {
            Ok(SymRing::ZIdealizationZ)
        } else {
            SymRing::new_idealization(rest.parse().map_err(|_| parse_err("a symbolic ring", text))?)
        };
    }
    let local = t
        .strip_prefix("Z_(")
        .or_else(|| t.strip_prefix("Z("))
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("Z_"));
    match local.and_then(|p| p.parse::<u64>().ok()) {
        Some(p) => SymRing::new_local(p),
        None => Err(parse_err("a symbolic ring", text)),
    }
}

fn generator_part<T: Scalar>(text: &str, whole: &str) -> Result<T> {
    let t = text.trim();
    if t.is_empty() || t == "Z" || t == whole {
        return Ok(T::one());
    }
    let digits = t.strip_suffix(whole).or_else(|| t.strip_suffix('Z')).unwrap_or(t);
    scalar(digits)
}

pub fn parse_sym_ideal<T: Scalar>(r: SymRing, text: &str) -> Result<SymIdeal<T>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.strip_prefix('<').and_then(|s| s.strip_suffix('>')).unwrap_or(&t);
    match r {
        SymRing::Z => r.principal(scalar(t)?),
        SymRing::ZLocal(p) => match t.split_once('^') {
            Some((base, e)) => {
                if base.parse::<u64>().ok() != Some(p) {
                    return Err(parse_err(&format!("a power of {p}"), text));
                }
                Ok(SymIdeal::LocalPower(e.parse().map_err(|_| parse_err("an exponent", text))?))
            }
            None => r.principal(scalar(t)?),
        },
        SymRing::ZIdealization(_) | SymRing::ZIdealizationZ => {
            let (a, n) =
                t.split_once("(+)").or_else(|| t.split_once(',')).ok_or_else(|| parse_err("an ideal aZ(+)N", text))?;
            let whole = match r {
                SymRing::ZIdealization(k) => format!("Z{k}"),
                _ => "Z".to_string(),
            };
            let n: T = if n.trim() == "0" { T::zero() } else { generator_part(n, &whole)? };
            r.homogeneous(generator_part(a, "Z")?, n)
        }
    }
}

pub fn parse_sym_elem<T: Scalar>(r: SymRing, text: &str) -> Result<SymElem<T>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match r {
        SymRing::Z => Ok(SymElem::Int(scalar(&t)?)),
        SymRing::ZLocal(_) => match t.split_once('/') {
            Some((n, d)) => r.frac(scalar(n)?, scalar(d)?),
            None => r.int(scalar(&t)?),
        },
        _ => {
            let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(&t);
            let (x, m) = inner.split_once(',').ok_or_else(|| parse_err("a pair (x,m)", text))?;
            r.pair(scalar(x)?, scalar(m)?)
        }
    }
}
