//! The auxiliary polynomials of the non-planarity argument and the
//! absolute-irreducibility decision for `H(X, Y) = a g(X) + Y^(t-2)`.
//!
//! Over GF(2), `(X+1)^t = sum X^k` over the submasks `k` of `t` (Lucas), so
//! `(X+1)^t + X^t + 1` collects the proper nonempty submasks and
//! `g(X) = ((X+1)^t + X^t + 1) / X` is read off directly.

mod brute;

pub use brute::{
    bruteforce_bivariate_irreducible, brute_force_work, reducible_translate_census,
    BRUTE_FORCE_WORK_LIMIT,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::is_power_of_two;
use crate::poly::{root_multiplicity, squarefree_decomposition, BiPoly, SquarefreeDecomposition, UniPoly};

fn submasks(t: u64) -> impl Iterator<Item = u64> {
    // Descending enumeration of every submask of t, ending with 0.
    let mut next = Some(t);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & t) };
        Some(cur)
    })
}

fn require_non_power_of_two(t: u64) -> Result<()> {
    if t == 0 {
        return Err(Error::range("exponent", "t must be positive"));
    }
    if is_power_of_two(t) {
        return Err(Error::Degenerate(format!(
            "t = {t} is a power of 2, so (X+1)^t + X^t + 1 vanishes identically"
        )));
    }
    Ok(())
}

/// `g(X) = ((X+1)^t + X^t + 1) / X` for `t >= 3` not a power of 2.
pub fn build_g(t: u64) -> Result<UniPoly> {
    require_non_power_of_two(t)?;
    let top = submasks(t).filter(|&k| k != t && k != 0).max().unwrap_or(0);
    let mut coeffs = vec![FieldElem::ZERO; top as usize];
    for k in submasks(t).filter(|&k| k != t && k != 0) {
        coeffs[k as usize - 1] = FieldElem::ONE;
    }
    Ok(UniPoly::new(coeffs))
}

/// `H(X, Y) = a g(X) + Y^(t-2)`.
pub fn build_h(ctx: &FieldCtx, a: FieldElem, t: u64) -> Result<BiPoly> {
    if a.is_zero() || !ctx.contains(a) {
        return Err(Error::Precondition(format!(
            "coefficient 0x{a:x} must be a nonzero element of GF(2^{})",
            ctx.r()
        )));
    }
    let g = build_g(t)?.scale(ctx, a);
    let mut h = BiPoly::from_uni_in_x(&g);
    h.add_term(0, (t - 2) as u32, FieldElem::ONE);
    Ok(h)
}

/// `H-bar(X, Y) = ((X+1)^t + X^t + (Y+1)^t + Y^t) / (X + Y)`.
///
/// Each submask `k >= 1` of `t` other than `t` contributes
/// `(X^k + Y^k) / (X + Y) = sum_{i+j=k-1} X^i Y^j`. For `t` a power of two the
/// numerator is zero and so is the result.
pub fn build_hbar(t: u64) -> Result<BiPoly> {
    if t < 3 {
        return Err(Error::range("exponent", format!("t = {t}, expected t >= 3")));
    }
    let mut out = BiPoly::zero();
    for k in submasks(t).filter(|&k| k != t && k != 0) {
        for i in 0..k as u32 {
            out.add_term(i, k as u32 - 1 - i, FieldElem::ONE);
        }
    }
    Ok(out)
}

/// Root multiplicities of `g` at 0 and 1 with `t = 2^m o`, `o` odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub t: u64,
    pub m: u32,
    pub o: u64,
    pub mult_at_0: u32,
    pub mult_at_1: u32,
    pub decomposition: SquarefreeDecomposition,
}

impl MultiplicityProfile {
    /// `mult_at_0 = 2^m - 1` and `mult_at_1 = 2^m`.
    pub fn identity_holds(&self) -> bool {
        let pm = 1u64 << self.m;
        self.mult_at_0 as u64 == pm - 1 && self.mult_at_1 as u64 == pm
    }
}

pub fn multiplicity_profile(ctx: &FieldCtx, t: u64) -> Result<MultiplicityProfile> {
    let g = build_g(t)?;
    let m = t.trailing_zeros();
    Ok(MultiplicityProfile {
        t,
        m,
        o: t >> m,
        mult_at_0: root_multiplicity(ctx, &g, FieldElem::ZERO)?,
        mult_at_1: root_multiplicity(ctx, &g, FieldElem::ONE)?,
        decomposition: squarefree_decomposition(ctx, &g)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CapelliVerdict {
    pub abs_irreducible: bool,
    /// A prime `l | n` with `base` an `l`-th power over the algebraic closure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_prime: Option<u64>,
    /// Multiplicities of the squarefree decomposition of `base`.
    pub multiplicities: Vec<u32>,
}

fn primes_dividing(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Absolute irreducibility of `Y^n + base(X)`.
///
/// The binomial is reducible over the closure iff `base` is an `l`-th power
/// there for some prime `l | n` (the `-4 w^4` case is empty in
/// characteristic 2). Constants are `l`-th powers over the closure, and
/// squarefree parts over a perfect field stay squarefree, so this is
/// divisibility of every multiplicity in the decomposition over GF(q).
pub fn capelli_abs_irreducible(ctx: &FieldCtx, n: u64, base: &UniPoly) -> Result<CapelliVerdict> {
    if n == 0 {
        return Err(Error::range("Y exponent", "n must be positive"));
    }
    if base.is_constant() {
        return Err(Error::Degenerate("base must be non-constant".into()));
    }
    let decomposition = squarefree_decomposition(ctx, base)?;
    let multiplicities: Vec<u32> = decomposition.multiplicities().collect();
    let witness_prime = primes_dividing(n)
        .into_iter()
        .find(|&l| multiplicities.iter().all(|&e| (e as u64).is_multiple_of(l)));
    Ok(CapelliVerdict {
        abs_irreducible: witness_prime.is_none(),
        witness_prime,
        multiplicities,
    })
}

/// Capelli verdict for `H = a g(X) + Y^(t-2)`.
pub fn capelli_for_h(ctx: &FieldCtx, a: FieldElem, t: u64) -> Result<CapelliVerdict> {
    if a.is_zero() || !ctx.contains(a) {
        return Err(Error::Precondition("coefficient must be a nonzero field element".into()));
    }
    let base = build_g(t)?.scale(ctx, a);
    capelli_abs_irreducible(ctx, t - 2, &base)
}
