use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{power_table, scale_table, Collision, PlanarityTest, BOrder};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::is_power_of_two;

/// Which coefficients `a` a scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AMode {
    All,
    /// `count` distinct nonzero coefficients drawn from a ChaCha8 stream seeded with `seed`.
    Sampled { count: u32, seed: u64 },
}

impl AMode {
    /// The coefficients to test, ascending.
    pub fn coefficients(&self, ctx: &FieldCtx) -> Vec<FieldElem> {
        let nonzero = ctx.q() - 1;
        match *self {
            AMode::Sampled { count, seed } if count < nonzero => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut picked: Vec<FieldElem> =
                    rand::seq::index::sample(&mut rng, nonzero as usize, count as usize)
                        .into_iter()
                        .map(|i| FieldElem::from_bits(i as u32 + 1))
                        .collect();
                picked.sort();
                picked
            }
            _ => ctx.nonzero_elements().collect(),
        }
    }
}

/// Which exponents a scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TRange {
    /// `1..=t_max` where `t_max` is the largest `t` with `t^4 <= q`.
    Theorem,
    Explicit { lo: u64, hi: u64 },
}

/// Largest `t` with `t^4 <= q`.
pub fn theorem_t_max(q: u64) -> u64 {
    let mut t = 1u64;
    while (t + 1).pow(4) <= q {
        t += 1;
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialVerdict {
    pub t: u64,
    #[serde(serialize_with = "crate::cli::report::hex_elem")]
    pub a: FieldElem,
    pub planar: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Collision>,
}

impl MonomialVerdict {
    /// What the power-of-two characterization predicts, if anything: powers
    /// of two are always planar; other `t` are not once `t^4 <= q`.
    pub fn predicted(&self, q: u64) -> Option<bool> {
        if is_power_of_two(self.t) {
            Some(true)
        } else if self.t.checked_pow(4).is_some_and(|t4| t4 <= q) {
            Some(false)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanVerdict {
    pub r: u32,
    pub t_max: u64,
    pub t_lo: u64,
    pub t_hi: u64,
    pub a_mode: AMode,
    /// One entry per `(t, a)`, sorted by `(t, a)`.
    pub verdicts: Vec<MonomialVerdict>,
    pub theorem_consistent: bool,
}

impl ScanVerdict {
    pub fn planar_pairs(&self) -> impl Iterator<Item = (u64, FieldElem)> + '_ {
        self.verdicts.iter().filter(|v| v.planar).map(|v| (v.t, v.a))
    }

    /// Verdicts that contradict the power-of-two prediction.
    pub fn exceptions(&self) -> impl Iterator<Item = &MonomialVerdict> + '_ {
        let q = 1u64 << self.r;
        self.verdicts
            .iter()
            .filter(move |v| v.predicted(q).is_some_and(|p| p != v.planar))
    }
}

/// Tests `a * c^t` for every `t` in range and every selected `a`.
///
/// Work units run in parallel on the ambient rayon pool; results are
/// collected in `(t, a)` order, so the verdict never depends on scheduling.
pub fn scan_monomials(ctx: &FieldCtx, t_range: TRange, a_mode: AMode) -> Result<ScanVerdict> {
    let q = ctx.q() as u64;
    let t_max = theorem_t_max(q);
    let (t_lo, t_hi) = match t_range {
        TRange::Theorem => (1, t_max),
        TRange::Explicit { lo, hi } => (lo, hi),
    };
    if t_lo == 0 || t_lo > t_hi {
        return Err(Error::range("t range", format!("{t_lo}..{t_hi}")));
    }
    if t_hi > q - 1 {
        return Err(Error::range(
            "t range",
            format!("t = {t_hi} exceeds q - 1 = {}", q - 1),
        ));
    }
    let coefficients = a_mode.coefficients(ctx);
    let mut verdicts = Vec::with_capacity(coefficients.len() * (t_hi - t_lo + 1) as usize);
    for t in t_lo..=t_hi {
        let powers = power_table(ctx, t);
        let row: Vec<MonomialVerdict> = coefficients
            .par_iter()
            .map(|&a| {
                let table = scale_table(ctx, a, &powers);
                let test = PlanarityTest::new(ctx, &table).expect("table has q entries");
                let report = test.run(1, BOrder::Ascending);
                MonomialVerdict {
                    t,
                    a,
                    planar: report.planar,
                    witness: report.failing_b.first().copied(),
                }
            })
            .collect();
        verdicts.extend(row);
    }
    let theorem_consistent = verdicts
        .iter()
        .all(|v| v.predicted(q).is_none_or(|p| p == v.planar));
    Ok(ScanVerdict {
        r: ctx.r(),
        t_max,
        t_lo,
        t_hi,
        a_mode,
        verdicts,
        theorem_consistent,
    })
}
