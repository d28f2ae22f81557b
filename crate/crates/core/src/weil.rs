//! Zero counting on plane curves and the Weil-type lower bound
//! `N >= q + 1 - (d-1)(d-2) sqrt(q) - d` for absolutely irreducible curves.
//!
//! Every comparison against `sqrt(q)` is done in exact integer arithmetic by
//! squaring with explicit sign handling, so odd `r` needs no floating point.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::is_power_of_two;
use crate::poly::{count_roots_in_field, BiPoly};

/// Largest `r` for which all `q^2` points are enumerated.
pub const EXHAUSTIVE_MAX_R: u32 = 12;
/// Largest `r` for the per-row root-counting path.
pub const PER_ROW_MAX_R: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountStrategy {
    /// Evaluate at every point of GF(q)^2.
    Exhaustive,
    /// For each `y`, count the distinct roots of `p(X, y)` in GF(q).
    PerRow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroCount {
    pub q: u64,
    pub n: u64,
    /// Zeros with `x = 0` or `y = 0`.
    pub on_axes: u64,
    pub axis_only: bool,
    pub strategy: CountStrategy,
}

fn zeros_on_axes(ctx: &FieldCtx, p: &BiPoly) -> Result<u64> {
    let row0 = p.specialize_y(ctx, FieldElem::ZERO);
    let on_x_axis = if row0.is_zero() {
        ctx.q() as u64
    } else {
        count_roots_in_field(ctx, &row0)? as u64
    };
    let col0 = p.specialize_x(ctx, FieldElem::ZERO);
    let on_y_axis = ctx
        .nonzero_elements()
        .filter(|&y| col0.eval(ctx, y).is_zero())
        .count() as u64;
    Ok(on_x_axis + on_y_axis)
}

fn row_zeros(ctx: &FieldCtx, p: &BiPoly, y: FieldElem, strategy: CountStrategy) -> Result<u64> {
    let row = p.specialize_y(ctx, y);
    if row.is_zero() {
        return Ok(ctx.q() as u64);
    }
    Ok(match strategy {
        CountStrategy::Exhaustive => ctx
            .elements()
            .filter(|&x| row.eval(ctx, x).is_zero())
            .count() as u64,
        CountStrategy::PerRow => count_roots_in_field(ctx, &row)? as u64,
    })
}

/// Number of zeros of `p` in GF(q) x GF(q) with the given strategy.
pub fn count_affine_zeros_with(
    ctx: &FieldCtx,
    p: &BiPoly,
    strategy: CountStrategy,
) -> Result<ZeroCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let limit = match strategy {
        CountStrategy::Exhaustive => EXHAUSTIVE_MAX_R,
        CountStrategy::PerRow => PER_ROW_MAX_R,
    };
    if ctx.r() > limit {
        return Err(Error::Capacity(format!(
            "{strategy:?} counting is limited to r <= {limit}, got r = {}",
            ctx.r()
        )));
    }
    let rows: Vec<FieldElem> = ctx.elements().collect();
    let n = rows
        .par_iter()
        .map(|&y| row_zeros(ctx, p, y, strategy))
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .sum();
    let on_axes = zeros_on_axes(ctx, p)?;
    Ok(ZeroCount {
        q: ctx.q() as u64,
        n,
        on_axes,
        axis_only: n == on_axes,
        strategy,
    })
}

/// Per-row counting; scales to larger fields than enumeration.
pub fn count_affine_zeros(ctx: &FieldCtx, p: &BiPoly) -> Result<ZeroCount> {
    count_affine_zeros_with(ctx, p, CountStrategy::PerRow)
}

/// A homogeneous polynomial in `X, Y, Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    terms: BTreeMap<[u32; 3], FieldElem>,
    degree: u32,
}

impl TernaryForm {
    pub fn new(terms: impl IntoIterator<Item = ([u32; 3], FieldElem)>) -> Result<Self> {
        let mut map: BTreeMap<[u32; 3], FieldElem> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert(FieldElem::ZERO);
            *slot = FieldElem::from_bits(slot.bits() ^ c.bits());
        }
        map.retain(|_, c| !c.is_zero());
        let mut degrees = map.keys().map(|e| e[0] + e[1] + e[2]);
        let degree = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.any(|d| d != degree) {
            return Err(Error::Precondition("form is not homogeneous".into()));
        }
        Ok(TernaryForm { terms: map, degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn eval(&self, ctx: &FieldCtx, p: [FieldElem; 3]) -> FieldElem {
        self.terms.iter().fold(FieldElem::ZERO, |acc, (e, &c)| {
            let m = (0..3).fold(c, |m, k| ctx.mul(m, ctx.pow_unchecked(p[k], e[k] as u64)));
            ctx.add(acc, m)
        })
    }
}

impl std::fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{},{}:{c:x}", e[0], e[1], e[2])?;
        }
        Ok(())
    }
}

/// Points of the projective plane over GF(q), each as the representative
/// whose last nonzero coordinate is 1.
pub fn projective_points(ctx: &FieldCtx) -> impl Iterator<Item = [FieldElem; 3]> + '_ {
    let one = FieldElem::ONE;
    let zero = FieldElem::ZERO;
    let affine = ctx
        .elements()
        .flat_map(move |x| ctx.elements().map(move |y| [x, y, one]));
    let at_infinity = ctx.elements().map(move |x| [x, one, zero]);
    affine
        .chain(at_infinity)
        .chain(std::iter::once([one, zero, zero]))
}

pub fn count_projective_zeros(ctx: &FieldCtx, form: &TernaryForm) -> Result<u64> {
    if ctx.r() > EXHAUSTIVE_MAX_R {
        return Err(Error::Capacity(format!(
            "projective enumeration is limited to r <= {EXHAUSTIVE_MAX_R}"
        )));
    }
    Ok(projective_points(ctx)
        .filter(|&p| form.eval(ctx, p).is_zero())
        .count() as u64)
}

/// Integer square root (floor).
fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Exact `lhs >= coeff * sqrt(q)` for `coeff >= 0`.
fn ge_multiple_of_sqrt(lhs: i128, coeff: i128, q: u64) -> bool {
    debug_assert!(coeff >= 0);
    if lhs < 0 {
        return false;
    }
    let l = lhs as u128;
    l * l >= (coeff as u128) * (coeff as u128) * q as u128
}

/// Exact `lhs > coeff * sqrt(q)` for `coeff >= 0`.
fn gt_multiple_of_sqrt(lhs: i128, coeff: i128, q: u64) -> bool {
    if lhs < 0 {
        return false;
    }
    let l = lhs as u128;
    l * l > (coeff as u128) * (coeff as u128) * q as u128
}

/// `q + 1 - (d-1)(d-2) sqrt(q) - d`, held as `base - sqrt_coeff * sqrt(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeilBound {
    pub q: u64,
    pub d: u64,
    /// `q + 1 - d`
    pub base: i128,
    /// `(d-1)(d-2)`
    pub sqrt_coeff: i128,
    /// Exact value when `q` is a perfect square.
    pub exact_value: Option<i128>,
    /// Least integer at or above the bound; an integer count satisfies the
    /// bound iff it is at least this.
    pub ceiling: i128,
}

impl WeilBound {
    pub fn is_satisfied_by(&self, n: u64) -> bool {
        // n >= base - c sqrt(q)  <=>  n - base >= -c sqrt(q)
        let deficit = self.base - n as i128;
        deficit <= 0 || !gt_multiple_of_sqrt(deficit, self.sqrt_coeff, self.q)
    }
}

pub fn weil_lower_bound(q: u64, d: u64) -> Result<WeilBound> {
    if !is_power_of_two(q) || q < 2 {
        return Err(Error::range("field size", format!("q = {q} is not a power of 2")));
    }
    if d == 0 {
        return Err(Error::range("degree", "d must be at least 1"));
    }
    let base = q as i128 + 1 - d as i128;
    let sqrt_coeff = (d as i128 - 1) * (d as i128 - 2);
    let root = isqrt(q as u128);
    let exact_value = (root * root == q as u128).then(|| base - sqrt_coeff * root as i128);
    // Least integer n with n >= base - c sqrt(q) is base - floor(c sqrt(q)).
    let floor_c_sqrt = {
        let sq = (sqrt_coeff as u128).pow(2) * q as u128;
        isqrt(sq) as i128
    };
    Ok(WeilBound {
        q,
        d,
        base,
        sqrt_coeff,
        exact_value,
        ceiling: base - floor_c_sqrt,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilReport {
    pub bound: WeilBound,
    pub count: ZeroCount,
    /// The bound only applies to absolutely irreducible curves.
    pub applicable: bool,
    /// `None` when not applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfied: Option<bool>,
}

/// Counts the zeros of `p` and compares with the bound for its degree.
pub fn weil_consistency_check(ctx: &FieldCtx, p: &BiPoly, abs_irred: bool) -> Result<WeilReport> {
    let d = p.total_degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::Degenerate("constant polynomial".into()));
    }
    let bound = weil_lower_bound(ctx.q() as u64, d as u64)?;
    let count = count_affine_zeros(ctx, p)?;
    let satisfied = abs_irred.then(|| bound.is_satisfied_by(count.n));
    Ok(WeilReport {
        bound,
        count,
        applicable: abs_irred,
        satisfied,
    })
}

/// Every line of the chain that turns planarity of `a c^t` into a
/// contradiction, recomputed in integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainBreakdown {
    pub t: u64,
    pub q: u64,
    /// `2(t-2)`: at most this many zeros of `H` lie on the axes.
    pub axis_bound: i128,
    /// `q + 1 - (t-3)(t-4) sqrt(q) - (t-2)`.
    pub weil: WeilBound,
    /// `t^4 + 1 - (t-3)(t-4) t^2 - (t-2)`.
    pub at_t4: i128,
    /// `7t^3 - 12t^2 - 3t + 7`.
    pub cubic: i128,
    /// `at_t4 == 2(t-2) + cubic`
    pub identity_holds: bool,
    pub cubic_positive: bool,
    /// Weil bound at `q` is at least its value at `q = t^4`.
    pub monotone_step_holds: bool,
    /// `weil > 2(t-2)`, so no planar `a c^t` survives.
    pub contradiction: bool,
}

impl ChainBreakdown {
    pub fn passes(&self) -> bool {
        self.identity_holds && self.cubic_positive && self.monotone_step_holds && self.contradiction
    }
}

pub fn inequality_chain_check(t: u64, q: u64) -> Result<ChainBreakdown> {
    if t < 3 {
        return Err(Error::range("exponent", format!("t = {t}, expected t >= 3")));
    }
    if t > 1 << 20 {
        return Err(Error::range("exponent", format!("t = {t} is too large")));
    }
    let t4 = (t as u128).pow(4);
    if !is_power_of_two(q) || (q as u128) < t4 {
        return Err(Error::Precondition(format!(
            "q = {q} must be a power of 2 with q >= t^4 = {t4}"
        )));
    }
    if q > 1 << 62 {
        return Err(Error::range("field size", format!("q = {q} is too large")));
    }
    let ti = t as i128;
    let c = (ti - 3) * (ti - 4);
    let weil = weil_lower_bound(q, t - 2)?;
    let at_t4 = t4 as i128 + 1 - c * ti * ti - (ti - 2);
    let cubic = 7 * ti.pow(3) - 12 * ti.pow(2) - 3 * ti + 7;
    let axis_bound = 2 * (ti - 2);
    Ok(ChainBreakdown {
        t,
        q,
        axis_bound,
        weil,
        at_t4,
        cubic,
        identity_holds: at_t4 == axis_bound + cubic,
        cubic_positive: cubic > 0,
        monotone_step_holds: ge_multiple_of_sqrt(weil.base - at_t4, c, q),
        contradiction: gt_multiple_of_sqrt(weil.base - axis_bound, c, q),
    })
}

/// The two singular cubics over GF(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cubic {
    /// `XYZ + Y^3 + Y^2 Z + Z^3`
    First,
    /// `XY^2 + XYZ + XZ^2 + Y^3 + Y^2 Z + Z^3`
    Second,
}

impl Cubic {
    pub fn form(self) -> TernaryForm {
        let exps: &[[u32; 3]] = match self {
            Cubic::First => &[[1, 1, 1], [0, 3, 0], [0, 2, 1], [0, 0, 3]],
            Cubic::Second => &[[1, 2, 0], [1, 1, 1], [1, 0, 2], [0, 3, 0], [0, 2, 1], [0, 0, 3]],
        };
        TernaryForm::new(exps.iter().map(|&e| (e, FieldElem::ONE))).expect("cubic is homogeneous")
    }

    pub fn note(self) -> &'static str {
        match self {
            Cubic::First => {
                "singular cubic: point counts of singular curves are not governed by the smooth-curve bound for their arithmetic genus"
            }
            Cubic::Second => {
                "singular cubic: projective point count can exceed the number of degree-one places of its function field (places not computed here)"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicCount {
    pub q: u64,
    pub points: u64,
    /// `(d-1)(d-2)` for the smooth-curve band `q + 1 +- (d-1)(d-2) sqrt(q)`.
    pub band_sqrt_coeff: i128,
    pub below_band: bool,
    pub above_band: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub curve: Cubic,
    pub form: String,
    pub counts: Vec<CubicCount>,
    pub note: &'static str,
}

pub fn counterexample_report(curve: Cubic) -> Result<CounterexampleReport> {
    let form = curve.form();
    let d = form.degree() as i128;
    let c = (d - 1) * (d - 2);
    let counts = [1u32, 2]
        .into_iter()
        .map(|r| {
            let ctx = FieldCtx::new(r)?;
            let q = ctx.q() as u64;
            let points = count_projective_zeros(&ctx, &form)?;
            let centre = q as i128 + 1;
            Ok(CubicCount {
                q,
                points,
                band_sqrt_coeff: c,
                below_band: gt_multiple_of_sqrt(centre - points as i128, c, q),
                above_band: gt_multiple_of_sqrt(points as i128 - centre, c, q),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CounterexampleReport {
        curve,
        form: form.to_string(),
        counts,
        note: curve.note(),
    })
}
