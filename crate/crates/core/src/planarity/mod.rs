//! The characteristic-2 planarity test and monomial scans.
//!
//! A table `f` of length `q` is planar when, for every nonzero `b`, the
//! difference map `c -> f(c+b) + f(c) + b*c` is a bijection of GF(q).

mod scan;
mod threshold;

pub use scan::{scan_monomials, AMode, MonomialVerdict, ScanVerdict, TRange};
pub use threshold::{remark_threshold, ThresholdReport};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// The monomial `c -> a * c^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonomialSpec {
    #[serde(serialize_with = "crate::cli::report::hex_elem")]
    pub a: FieldElem,
    pub t: u64,
}

impl MonomialSpec {
    pub fn new(ctx: &FieldCtx, a: FieldElem, t: u64) -> Result<Self> {
        if !ctx.contains(a) {
            return Err(Error::range("coefficient", format!("0x{a:x} not in GF(2^{})", ctx.r())));
        }
        if a.is_zero() {
            return Err(Error::Precondition("monomial coefficient must be nonzero".into()));
        }
        if t == 0 {
            return Err(Error::range("exponent", "t must be positive"));
        }
        Ok(MonomialSpec { a, t })
    }
}

/// `c -> c^t` for every `c`, with `0^t = 0`.
pub fn power_table(ctx: &FieldCtx, t: u64) -> Vec<FieldElem> {
    ctx.elements()
        .map(|c| {
            if c.is_zero() {
                FieldElem::ZERO
            } else {
                ctx.pow_unchecked(c, t)
            }
        })
        .collect()
}

/// Multiplies every entry by `a`. Multiplication by a constant is
/// GF(2)-linear, so it is tabulated per input byte.
pub fn scale_table(ctx: &FieldCtx, a: FieldElem, table: &[FieldElem]) -> Vec<FieldElem> {
    let lanes = ctx.r().div_ceil(8) as usize;
    let mut by_byte = vec![[FieldElem::ZERO; 256]; lanes];
    for (lane, entries) in by_byte.iter_mut().enumerate() {
        for (byte, slot) in entries.iter_mut().enumerate() {
            let v = (byte as u64) << (8 * lane);
            if v < ctx.q() as u64 {
                *slot = ctx.mul(a, FieldElem::from_bits(v as u32));
            }
        }
    }
    table
        .iter()
        .map(|v| {
            let mut acc = 0u32;
            for (lane, entries) in by_byte.iter().enumerate() {
                acc ^= entries[((v.bits() >> (8 * lane)) & 0xff) as usize].bits();
            }
            FieldElem::from_bits(acc)
        })
        .collect()
}

/// Function table of `c -> a * c^t`, indexed by the bits of `c`.
pub fn monomial_table(ctx: &FieldCtx, spec: &MonomialSpec) -> Vec<FieldElem> {
    scale_table(ctx, spec.a, &power_table(ctx, spec.t))
}

/// Two inputs with the same image under the difference map for `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    #[serde(serialize_with = "crate::cli::report::hex_elem")]
    pub b: FieldElem,
    #[serde(serialize_with = "crate::cli::report::hex_elem")]
    pub c1: FieldElem,
    #[serde(serialize_with = "crate::cli::report::hex_elem")]
    pub c2: FieldElem,
}

/// Order in which `b` ranges over GF(q)*.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BOrder {
    #[default]
    Ascending,
    Descending,
}

/// Outcome of a planarity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<MonomialSpec>,
    pub planar: bool,
    pub failing_b: Vec<Collision>,
}

/// Reusable planarity checker over one table.
///
/// Tables of algebraic degree at most 2 have affine difference maps, so for
/// them each `b` is decided by the GF(2)-rank of `r` images. Every other
/// table, and every witness, goes through a `q`-bit occupancy pass.
pub struct PlanarityTest<'a> {
    ctx: &'a FieldCtx,
    table: &'a [FieldElem],
    affine_maps: bool,
}

impl<'a> PlanarityTest<'a> {
    pub fn new(ctx: &'a FieldCtx, table: &'a [FieldElem]) -> Result<Self> {
        if table.len() != ctx.q() as usize {
            return Err(Error::Precondition(format!(
                "table has {} entries, field has {}",
                table.len(),
                ctx.q()
            )));
        }
        let affine_maps = algebraic_degree_at_most_two(table, ctx.r());
        Ok(PlanarityTest {
            ctx,
            table,
            affine_maps,
        })
    }

    /// Disables the rank shortcut so every `b` uses the occupancy pass.
    pub fn occupancy_only(mut self) -> Self {
        self.affine_maps = false;
        self
    }

    pub fn has_affine_difference_maps(&self) -> bool {
        self.affine_maps
    }

    /// `None` when the difference map for `b` is a bijection; otherwise the
    /// first collision in ascending order of `c`.
    pub fn check(&self, b: FieldElem) -> Result<Option<Collision>> {
        self.check_with(b, &mut Vec::new())
    }

    fn check_with(&self, b: FieldElem, seen: &mut Vec<u64>) -> Result<Option<Collision>> {
        if b.is_zero() {
            return Err(Error::Precondition("b must be nonzero".into()));
        }
        if !self.ctx.contains(b) {
            return Err(Error::range("b", format!("0x{b:x} not in GF(2^{})", self.ctx.r())));
        }
        if self.affine_maps && self.affine_map_is_injective(b) {
            return Ok(None);
        }
        Ok(self.first_collision(b, seen))
    }

    pub fn run(&self, witness_cap: usize, order: BOrder) -> PlanarReport {
        let cap = witness_cap.max(1);
        let mut seen = Vec::new();
        let mut failing = Vec::new();
        let bs: Box<dyn Iterator<Item = FieldElem>> = match order {
            BOrder::Ascending => Box::new(self.ctx.nonzero_elements()),
            BOrder::Descending => Box::new((1..self.ctx.q()).rev().map(FieldElem::from_bits)),
        };
        for b in bs {
            if let Some(col) = self.check_with(b, &mut seen).expect("b ranges over GF(q)*") {
                failing.push(col);
                if failing.len() >= cap {
                    break;
                }
            }
        }
        PlanarReport {
            monomial: None,
            planar: failing.is_empty(),
            failing_b: failing,
        }
    }

    #[inline]
    fn diff(&self, b: FieldElem, c: u32, bc: u32) -> u32 {
        self.table[(c ^ b.bits()) as usize].bits() ^ self.table[c as usize].bits() ^ bc
    }

    fn first_collision(&self, b: FieldElem, seen: &mut Vec<u64>) -> Option<Collision> {
        let ctx = self.ctx;
        let q = ctx.q();
        // b*c is linear in c and c ^ (c-1) = 2^(k+1) - 1 with k = tz(c), so
        // b*c = b*(c-1) + b*(2^(k+1) - 1).
        let masks: Vec<u32> = (0..ctx.r())
            .map(|k| ctx.mul(b, FieldElem::from_bits(((2u64 << k) - 1) as u32)).bits())
            .collect();
        seen.clear();
        seen.resize((q as usize).div_ceil(64), 0);
        let mut bc = 0u32;
        let mut hit = None;
        for c in 0..q {
            if c != 0 {
                bc ^= masks[c.trailing_zeros() as usize];
            }
            let v = self.diff(b, c, bc);
            let (word, bit) = ((v >> 6) as usize, 1u64 << (v & 63));
            if seen[word] & bit != 0 {
                hit = Some((c, v));
                break;
            }
            seen[word] |= bit;
        }
        let (c2, v) = hit?;
        let c1 = (0..c2)
            .find(|&c| self.diff(b, c, ctx.mul(b, FieldElem::from_bits(c)).bits()) == v)
            .expect("an earlier input produced the repeated value");
        Some(Collision {
            b,
            c1: FieldElem::from_bits(c1),
            c2: FieldElem::from_bits(c2),
        })
    }

    /// For affine difference maps, injectivity is full rank of the linear part.
    fn affine_map_is_injective(&self, b: FieldElem) -> bool {
        let ctx = self.ctx;
        let d0 = self.diff(b, 0, 0);
        let mut basis = [0u32; 32];
        let mut b_xi = b;
        for i in 0..ctx.r() {
            let mut v = self.diff(b, 1 << i, b_xi.bits()) ^ d0;
            b_xi = ctx.mul_by_x(b_xi);
            while v != 0 {
                let top = (31 - v.leading_zeros()) as usize;
                if basis[top] == 0 {
                    basis[top] = v;
                    break;
                }
                v ^= basis[top];
            }
            if v == 0 {
                return false;
            }
        }
        true
    }
}

/// Whether every coordinate of the table has algebraic normal form of
/// degree at most 2 (Moebius transform over all output bits at once).
pub fn algebraic_degree_at_most_two(table: &[FieldElem], r: u32) -> bool {
    let mut anf: Vec<u32> = table.iter().map(|v| v.bits()).collect();
    for i in 0..r {
        let bit = 1usize << i;
        for c in 0..anf.len() {
            if c & bit != 0 {
                anf[c] ^= anf[c ^ bit];
            }
        }
    }
    anf.iter()
        .enumerate()
        .all(|(c, &v)| v == 0 || c.count_ones() <= 2)
}

/// Single-`b` check of the difference map.
pub fn diff_map_is_bijective(
    ctx: &FieldCtx,
    f: &[FieldElem],
    b: FieldElem,
) -> Result<Option<Collision>> {
    PlanarityTest::new(ctx, f)?.check(b)
}

/// Runs the difference-map check for every nonzero `b` in ascending order,
/// stopping after `witness_cap` failures.
pub fn is_planar(ctx: &FieldCtx, f: &[FieldElem], witness_cap: usize) -> Result<PlanarReport> {
    Ok(PlanarityTest::new(ctx, f)?.run(witness_cap, BOrder::Ascending))
}

/// Planarity of `a * c^t`.
pub fn is_planar_monomial(
    ctx: &FieldCtx,
    spec: &MonomialSpec,
    witness_cap: usize,
) -> Result<PlanarReport> {
    let table = monomial_table(ctx, spec);
    let mut report = is_planar(ctx, &table, witness_cap)?;
    report.monomial = Some(*spec);
    Ok(report)
}
