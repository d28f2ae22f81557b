//! Text formats.
//!
//! ```text
//! uni   := "0" | hex ("," hex)*               coefficients, lowest degree first
//! bi    := "0" | term (";" term)*             term := dec "," dec ":" hex
//! form  := term3 (";" term3)*                 term3 := dec "," dec "," dec ":" hex
//! ```
//!
//! Whitespace around separators is ignored; hex digits may carry a `0x`
//! prefix. Coefficients are checked against the field they will live in.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::{BiPoly, UniPoly};

pub fn parse_elem(ctx: &FieldCtx, s: &str) -> Result<FieldElem> {
    let s = s.trim();
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    let bits = u32::from_str_radix(digits, 16)
        .map_err(|_| Error::Parse(format!("bad hex coefficient {s:?}")))?;
    ctx.elem(bits)
}

pub fn parse_uni(ctx: &FieldCtx, s: &str) -> Result<UniPoly> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let coeffs = s
        .split(',')
        .map(|c| parse_elem(ctx, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(coeffs))
}

fn parse_exponent(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent {s:?}")))
}

fn parse_terms<const N: usize>(ctx: &FieldCtx, s: &str) -> Result<Vec<([u32; N], FieldElem)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|term| {
            let (exps, coeff) = term
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("term {term:?} lacks ':'")))?;
            let parts: Vec<&str> = exps.split(',').collect();
            if parts.len() != N {
                return Err(Error::Parse(format!(
                    "term {term:?} needs {N} exponents"
                )));
            }
            let mut e = [0u32; N];
            for (slot, part) in e.iter_mut().zip(parts) {
                *slot = parse_exponent(part)?;
            }
            Ok((e, parse_elem(ctx, coeff)?))
        })
        .collect()
}

pub fn parse_bi(ctx: &FieldCtx, s: &str) -> Result<BiPoly> {
    let terms = parse_terms::<2>(ctx, s)?;
    Ok(BiPoly::from_terms(
        terms.into_iter().map(|([i, j], c)| ((i, j), c)),
    ))
}

/// Raw exponent triples of a ternary form; homogeneity is checked by the caller.
pub fn parse_ternary(ctx: &FieldCtx, s: &str) -> Result<Vec<([u32; 3], FieldElem)>> {
    parse_terms::<3>(ctx, s)
}
