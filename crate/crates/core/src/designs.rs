//! Relative difference sets with parameters `(q, q, q, 1)` from planar
//! functions.
//!
//! The ambient group is GF(q) x GF(q) with
//! `(u1, v1) * (u2, v2) = (u1 + u2, v1 + v2 + u1 u2)` and the forbidden
//! subgroup is `{0} x GF(q)`. The quotient of `(c + b, f(c + b))` by
//! `(c, f(c))` is `(b, f(c + b) + f(c) + b c)`, so the graph of `f` is a
//! relative difference set exactly when `f` is planar.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistedElem {
    pub u: FieldElem,
    pub v: FieldElem,
}

impl TwistedElem {
    pub const IDENTITY: TwistedElem = TwistedElem {
        u: FieldElem::ZERO,
        v: FieldElem::ZERO,
    };

    pub fn new(u: FieldElem, v: FieldElem) -> Self {
        TwistedElem { u, v }
    }

    pub fn is_forbidden(&self) -> bool {
        self.u.is_zero()
    }

    fn index(&self, q: u32) -> usize {
        self.u.bits() as usize * q as usize + self.v.bits() as usize
    }
}

impl std::fmt::Display for TwistedElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:x},{:x})", self.u, self.v)
    }
}

pub fn twisted_compose(ctx: &FieldCtx, g: TwistedElem, h: TwistedElem) -> TwistedElem {
    TwistedElem {
        u: ctx.add(g.u, h.u),
        v: ctx.add(ctx.add(g.v, h.v), ctx.mul(g.u, h.u)),
    }
}

pub fn twisted_inverse(ctx: &FieldCtx, g: TwistedElem) -> TwistedElem {
    TwistedElem {
        u: g.u,
        v: ctx.add(g.v, ctx.square(g.u)),
    }
}

/// The graph `{(c, f(c))}` of a function table.
pub fn build_rds(ctx: &FieldCtx, f: &[FieldElem]) -> Result<Vec<TwistedElem>> {
    if f.len() != ctx.q() as usize {
        return Err(Error::Precondition(format!(
            "table has {} entries, field has {}",
            f.len(),
            ctx.q()
        )));
    }
    Ok(ctx
        .elements()
        .zip(f)
        .map(|(c, &v)| TwistedElem::new(c, v))
        .collect())
}

/// Census of the ordered quotients `d1 * d2^-1`, `d1 != d2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RdsCertificate {
    pub q: u64,
    /// Occurrences of each element outside the forbidden subgroup, keyed `(u,v)` in hex.
    pub lambda_outside: BTreeMap<String, u32>,
    /// Occurrences of each non-identity forbidden element that was hit.
    pub forbidden_hits: BTreeMap<String, u32>,
    pub total: u64,
    pub valid: bool,
}

/// Largest `r` for which [`verify_rds`] runs; its census has `q^2` cells.
pub const RDS_MAX_R: u32 = 8;

pub fn verify_rds(ctx: &FieldCtx, d: &[TwistedElem]) -> Result<RdsCertificate> {
    let q = ctx.q();
    if d.len() != q as usize {
        return Err(Error::Precondition(format!(
            "set has {} elements, expected q = {q}",
            d.len()
        )));
    }
    if ctx.r() > RDS_MAX_R {
        return Err(Error::Capacity(format!("census is limited to r <= {RDS_MAX_R}")));
    }
    if let Some(g) = d.iter().find(|g| !ctx.contains(g.u) || !ctx.contains(g.v)) {
        return Err(Error::range("group element", format!("{g} not in GF(2^{})^2", ctx.r())));
    }
    let cells = q as usize * q as usize;
    let tally = d
        .par_iter()
        .enumerate()
        .fold(
            || vec![0u32; cells],
            |mut acc, (i, &d1)| {
                for (j, &d2) in d.iter().enumerate() {
                    if i != j {
                        let x = twisted_compose(ctx, d1, twisted_inverse(ctx, d2));
                        acc[x.index(q)] += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u32; cells],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let mut lambda_outside = BTreeMap::new();
    let mut forbidden_hits = BTreeMap::new();
    let mut valid = true;
    for u in ctx.elements() {
        for v in ctx.elements() {
            let g = TwistedElem::new(u, v);
            let n = tally[g.index(q)];
            if g.is_forbidden() {
                if g != TwistedElem::IDENTITY && n > 0 {
                    forbidden_hits.insert(g.to_string(), n);
                    valid = false;
                }
            } else {
                valid &= n == 1;
                lambda_outside.insert(g.to_string(), n);
            }
        }
    }
    Ok(RdsCertificate {
        q: q as u64,
        lambda_outside,
        forbidden_hits,
        total: tally.iter().map(|&n| n as u64).sum(),
        valid,
    })
}
