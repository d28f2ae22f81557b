//! Exhaustive factor search for bivariate polynomials over small extensions.
//!
//! Independent of the binomial criterion: it only multiplies and divides.
//! A reducible `p` of total degree `d` has a factor of degree `j <= d/2`
//! whose top homogeneous form divides the top form of `p`, so candidates are
//! enumerated top form first (normalized so the leading coefficient in
//! graded order is 1), and only surviving top forms get their lower-degree
//! coefficients enumerated, axis coefficients through univariate divisibility.
//!
//! Absolute irreducibility: if `p` of degree `d` factors over the closure,
//! the Galois orbit of one absolutely irreducible factor has at most `d`
//! members, so that factor is defined over an extension of degree `<= d`.
//! Checking every extension degree `1..=d` therefore decides it.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, MAX_DEGREE};
use crate::poly::{BiPoly, UniPoly};

/// Most candidate factors tried in one enumeration phase: top forms of one
/// degree, or full candidates over the surviving top forms of one degree.
pub const BRUTE_FORCE_WORK_LIMIT: u128 = 1 << 22;

fn pow_u128(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// Size of the top-form phase for factors of degree `j` over GF(2^(r e)):
/// `Q^j`, or `None` on overflow.
pub fn brute_force_work(r: u32, extension_degree: u32, j: u32) -> Option<u128> {
    pow_u128(1u128.checked_shl(r * extension_degree)?, j)
}

/// Embedding of GF(2^r) into GF(2^(r e)), sending the class of `X` to the
/// smallest root of the small field's modulus.
struct Embedding {
    basis: Vec<FieldElem>,
}

impl Embedding {
    fn new(small: &FieldCtx, big: &FieldCtx) -> Self {
        if small == big {
            let basis = (0..small.r()).map(|i| FieldElem::from_bits(1 << i)).collect();
            return Embedding { basis };
        }
        let modulus = small.modulus();
        let root = big
            .elements()
            .find(|&z| {
                let mut acc = FieldElem::ZERO;
                for i in (0..=small.r()).rev() {
                    acc = big.mul(acc, z);
                    if modulus >> i & 1 == 1 {
                        acc = big.add(acc, FieldElem::ONE);
                    }
                }
                acc.is_zero()
            })
            .expect("GF(2^r) embeds in GF(2^(r e))");
        let mut basis = Vec::with_capacity(small.r() as usize);
        let mut power = FieldElem::ONE;
        for _ in 0..small.r() {
            basis.push(power);
            power = big.mul(power, root);
        }
        Embedding { basis }
    }

    fn apply(&self, x: FieldElem) -> FieldElem {
        self.basis
            .iter()
            .enumerate()
            .filter(|(i, _)| x.bits() >> i & 1 == 1)
            .fold(FieldElem::ZERO, |acc, (_, &b)| FieldElem::from_bits(acc.bits() ^ b.bits()))
    }
}

/// Calls `visit` with every vector in GF(Q)^len until it returns `true`.
fn for_each_vector(q: u32, len: usize, mut visit: impl FnMut(&[FieldElem]) -> bool) -> bool {
    let mut digits = vec![FieldElem::ZERO; len];
    loop {
        if visit(&digits) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == len {
                return false;
            }
            let next = digits[i].bits() + 1;
            if next < q {
                digits[i] = FieldElem::from_bits(next);
                break;
            }
            digits[i] = FieldElem::ZERO;
            i += 1;
        }
    }
}

/// `T(X, 1)` and the power of `Y` dividing a homogeneous `T`.
fn dehomogenize(top: &BiPoly) -> (UniPoly, u32) {
    let d = top.total_degree().unwrap_or(0);
    let mut coeffs = vec![FieldElem::ZERO; d as usize + 1];
    for ((a, _), c) in top.terms() {
        coeffs[a as usize] = c;
    }
    let affine = UniPoly::new(coeffs);
    let y_power = d - affine.degree().unwrap_or(0) as u32;
    (affine, y_power)
}

/// Top forms of degree `j` dividing `top`, normalized so the coefficient of
/// the smallest power of `Y` is 1.
///
/// A homogeneous `F` divides a homogeneous `T` iff `F(X, 1) | T(X, 1)` and
/// `Y` divides `F` no more often than it divides `T`.
fn dividing_top_forms(ctx: &FieldCtx, top: &BiPoly, j: u32) -> Result<Vec<BiPoly>> {
    let (target, target_y) = dehomogenize(top);
    let mut out = Vec::new();
    let mut err = None;
    for lead in 0..=j.min(target_y) {
        // F = X^(j-lead) Y^lead + sum over i > lead of f_i X^(j-i) Y^i.
        for_each_vector(ctx.q(), (j - lead) as usize, |tail| {
            let mut affine = vec![FieldElem::ZERO; (j - lead) as usize + 1];
            affine[(j - lead) as usize] = FieldElem::ONE;
            for (k, &c) in tail.iter().enumerate() {
                affine[(j - lead) as usize - 1 - k] = c;
            }
            match target.rem(ctx, &UniPoly::new(affine)) {
                Ok(rem) if rem.is_zero() => {
                    let mut form = BiPoly::monomial(FieldElem::ONE, j - lead, lead);
                    for (k, &c) in tail.iter().enumerate() {
                        let i = lead + 1 + k as u32;
                        form.add_term(j - i, i, c);
                    }
                    out.push(form);
                }
                Ok(_) => {}
                Err(e) => {
                    err = Some(e);
                    return true;
                }
            }
            false
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn over_budget(what: &str, j: u32, work: Option<u128>) -> Result<()> {
    if work.is_none_or(|w| w > BRUTE_FORCE_WORK_LIMIT) {
        return Err(Error::Capacity(format!(
            "{what} for factors of degree {j} exceed the brute-force budget of {BRUTE_FORCE_WORK_LIMIT}"
        )));
    }
    Ok(())
}

/// Coefficient vectors for one axis of a candidate: every choice such that
/// the resulting univariate restriction divides `target` (or all choices when
/// `target` is zero).
fn axis_choices(
    ctx: &FieldCtx,
    target: &UniPoly,
    prefix: &[FieldElem],
    free: usize,
    lead: FieldElem,
) -> Result<Vec<Vec<FieldElem>>> {
    let mut out = Vec::new();
    let mut err = None;
    for_each_vector(ctx.q(), free, |tail| {
        let mut coeffs: Vec<FieldElem> = prefix.iter().chain(tail).copied().collect();
        coeffs.push(lead);
        let restriction = UniPoly::new(coeffs);
        let divides = if target.is_zero() {
            true
        } else if restriction.is_zero() {
            false
        } else {
            match target.rem(ctx, &restriction) {
                Ok(rem) => rem.is_zero(),
                Err(e) => {
                    err = Some(e);
                    return true;
                }
            }
        };
        if divides {
            out.push(tail.to_vec());
        }
        false
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Restriction to the line `Y = lambda X`: a factor `c` of `p` gives a
/// divisor `c(X, lambda X)` of `p(X, lambda X)`. Used to discard candidates
/// before the bivariate division.
struct Line {
    /// `lambda^k` for `k <= j`.
    powers: Vec<FieldElem>,
    target: UniPoly,
}

impl Line {
    fn new(ctx: &FieldCtx, p: &BiPoly, lambda: FieldElem, j: u32) -> Self {
        let d = p.total_degree().unwrap_or(0);
        let mut powers = vec![FieldElem::ONE];
        for _ in 0..d.max(j) {
            let last = *powers.last().expect("nonempty");
            powers.push(ctx.mul(last, lambda));
        }
        let mut coeffs = vec![FieldElem::ZERO; d as usize + 1];
        for ((a, b), c) in p.terms() {
            let k = (a + b) as usize;
            coeffs[k] = ctx.add(coeffs[k], ctx.mul(c, powers[b as usize]));
        }
        Line {
            powers,
            target: UniPoly::new(coeffs),
        }
    }

    fn restrict(&self, ctx: &FieldCtx, c: &BiPoly, j: u32) -> Vec<FieldElem> {
        let mut coeffs = vec![FieldElem::ZERO; j as usize + 1];
        for ((a, b), v) in c.terms() {
            let k = (a + b) as usize;
            coeffs[k] = ctx.add(coeffs[k], ctx.mul(v, self.powers[b as usize]));
        }
        coeffs
    }

    fn admits(
        &self,
        ctx: &FieldCtx,
        base: &[FieldElem],
        interior: &[(u32, u32)],
        coeffs: &[FieldElem],
    ) -> Result<bool> {
        if self.target.is_zero() {
            return Ok(true);
        }
        let mut line = base.to_vec();
        for (&(a, b), &c) in interior.iter().zip(coeffs) {
            let k = (a + b) as usize;
            line[k] = ctx.add(line[k], ctx.mul(c, self.powers[b as usize]));
        }
        let restricted = UniPoly::new(line);
        if restricted.is_zero() {
            return Ok(false);
        }
        Ok(self.target.rem(ctx, &restricted)?.is_zero())
    }
}

/// Whether `p` has a factor of total degree `j` over `ctx`.
///
/// A factor `c` restricts to divisors `c(X, 0) | p(X, 0)` and
/// `c(0, Y) | p(0, Y)`, so axis coefficients are enumerated as univariate
/// divisors and only interior monomials are enumerated in full.
fn has_factor_of_degree(ctx: &FieldCtx, p: &BiPoly, top: &BiPoly, j: u32) -> Result<bool> {
    let q = ctx.q() as u128;
    over_budget("top forms", j, pow_u128(q, j).and_then(|w| w.checked_mul(j as u128 + 1)))?;
    let forms = dividing_top_forms(ctx, top, j)?;
    let on_x = p.specialize_y(ctx, FieldElem::ZERO);
    let on_y = p.specialize_x(ctx, FieldElem::ZERO);
    let interior: Vec<(u32, u32)> = (2..j)
        .flat_map(|deg| (1..deg).map(move |i| (deg - i, i)))
        .collect();
    let interior_size = pow_u128(q, interior.len() as u32);
    let mut lambdas = vec![FieldElem::ONE];
    if ctx.q() > 2 {
        lambdas.push(ctx.primitive_element());
    }
    let lines: Vec<Line> = lambdas.into_iter().map(|l| Line::new(ctx, p, l, j)).collect();
    let mut err = None;
    for form in &forms {
        // X-axis: c_0 + c_1 X + ... + c_(j-1) X^(j-1) + form(1, 0) X^j.
        over_budget("axis candidates", j, pow_u128(q, j))?;
        let xs = axis_choices(ctx, &on_x, &[], j as usize, form.coeff(j, 0))?;
        for x in &xs {
            let ys = axis_choices(ctx, &on_y, &x[..1], j as usize - 1, form.coeff(0, j))?;
            over_budget(
                "candidates",
                j,
                interior_size.and_then(|w| w.checked_mul(ys.len() as u128)),
            )?;
            for y in &ys {
                let mut base = form.clone();
                for (i, &c) in x.iter().enumerate() {
                    base.add_term(i as u32, 0, c);
                }
                for (i, &c) in y.iter().enumerate() {
                    base.add_term(0, i as u32 + 1, c);
                }
                let base_lines: Vec<Vec<FieldElem>> =
                    lines.iter().map(|l| l.restrict(ctx, &base, j)).collect();
                let found = for_each_vector(ctx.q(), interior.len(), |coeffs| {
                    for (line, restricted) in lines.iter().zip(&base_lines) {
                        match line.admits(ctx, restricted, &interior, coeffs) {
                            Ok(true) => {}
                            Ok(false) => return false,
                            Err(e) => {
                                err = Some(e);
                                return true;
                            }
                        }
                    }
                    let mut cand = base.clone();
                    for (&(a, b), &c) in interior.iter().zip(coeffs) {
                        cand.add_term(a, b, c);
                    }
                    match p.div_exact(ctx, &cand) {
                        Ok(found) => found.is_some(),
                        Err(e) => {
                            err = Some(e);
                            true
                        }
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                if found {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Irreducibility of `p` over GF(q^extension_degree) by exhaustive factor search.
pub fn bruteforce_bivariate_irreducible(
    ctx: &FieldCtx,
    p: &BiPoly,
    extension_degree: u32,
) -> Result<bool> {
    if extension_degree == 0 {
        return Err(Error::range("extension degree", "must be at least 1"));
    }
    let d = p.total_degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::Degenerate("constant polynomial has no factorization".into()));
    }
    let big_r = ctx.r() * extension_degree;
    if big_r > MAX_DEGREE {
        return Err(Error::Capacity(format!("GF(2^{big_r}) exceeds the largest supported field")));
    }
    let k = d / 2;
    over_budget(
        "top forms",
        k,
        brute_force_work(ctx.r(), extension_degree, k).and_then(|w| w.checked_mul(k as u128 + 1)),
    )?;
    let big = FieldCtx::new(big_r)?;
    let embed = Embedding::new(ctx, &big);
    let lifted = p.map_coeffs(|c| embed.apply(c));
    let top = lifted.homogeneous_part(d);
    for j in 1..=d / 2 {
        if has_factor_of_degree(&big, &lifted, &top, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reducibility of `p + shift` over GF(q^extension_degree) for every shift.
pub fn reducible_translate_census(
    ctx: &FieldCtx,
    p: &BiPoly,
    shifts: &[FieldElem],
    extension_degree: u32,
) -> Result<Vec<(FieldElem, bool)>> {
    shifts
        .iter()
        .map(|&s| {
            let shifted = p.add(&BiPoly::constant(s));
            Ok((s, !bruteforce_bivariate_irreducible(ctx, &shifted, extension_degree)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::{build_h, build_hbar, capelli_abs_irreducible};

    fn gf(r: u32) -> FieldCtx {
        FieldCtx::new(r).unwrap()
    }

    fn e(b: u32) -> FieldElem {
        FieldElem::from_bits(b)
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let small = gf(2);
        let big = gf(6);
        let emb = Embedding::new(&small, &big);
        for x in small.elements() {
            for y in small.elements() {
                assert_eq!(emb.apply(small.mul(x, y)), big.mul(emb.apply(x), emb.apply(y)));
                assert_eq!(emb.apply(small.add(x, y)), big.add(emb.apply(x), emb.apply(y)));
            }
        }
        assert_eq!(emb.apply(FieldElem::ONE), FieldElem::ONE);
    }

    #[test]
    fn simple_verdicts() {
        let f = gf(1);
        let line = BiPoly::from_terms([((1, 0), e(1)), ((0, 1), e(1)), ((0, 0), e(1))]);
        assert!(bruteforce_bivariate_irreducible(&f, &line, 1).unwrap());
        let sq = BiPoly::from_terms([((2, 0), e(1)), ((0, 2), e(1))]);
        assert!(!bruteforce_bivariate_irreducible(&f, &sq, 1).unwrap());
        assert!(bruteforce_bivariate_irreducible(&f, &BiPoly::zero(), 1).is_err());
        assert!(bruteforce_bivariate_irreducible(&f, &BiPoly::constant(e(1)), 1).is_err());
        assert!(bruteforce_bivariate_irreducible(&f, &line, 0).is_err());
    }

    #[test]
    fn finds_product_of_random_factors() {
        let f = gf(2);
        let a = BiPoly::from_terms([((1, 1), e(2)), ((0, 1), e(1)), ((1, 0), e(3)), ((0, 0), e(1))]);
        let b = BiPoly::from_terms([((0, 1), e(1)), ((1, 0), e(2)), ((0, 0), e(3))]);
        assert!(!bruteforce_bivariate_irreducible(&f, &a.mul(&f, &b), 1).unwrap());
    }

    #[test]
    fn h6_irreducible_at_every_level_over_gf2() {
        let f = gf(1);
        let h = build_h(&f, FieldElem::ONE, 6).unwrap();
        for ext in 1..=4 {
            assert!(bruteforce_bivariate_irreducible(&f, &h, ext).unwrap(), "ext={ext}");
        }
    }

    #[test]
    fn reducibility_that_needs_an_extension() {
        // Y^3 + w X^3 over GF(4): w is not a cube in GF(4) or GF(16), but is in GF(64).
        let f = gf(2);
        let w = e(2);
        let p = BiPoly::from_terms([((0, 3), e(1)), ((3, 0), w)]);
        assert!(bruteforce_bivariate_irreducible(&f, &p, 1).unwrap());
        assert!(bruteforce_bivariate_irreducible(&f, &p, 2).unwrap());
        assert!(!bruteforce_bivariate_irreducible(&f, &p, 3).unwrap());
        let base = UniPoly::monomial(w, 3);
        let v = capelli_abs_irreducible(&f, 3, &base).unwrap();
        assert_eq!((v.abs_irreducible, v.witness_prime), (false, Some(3)));
    }

    #[test]
    fn top_form_divisors_match_bivariate_division() {
        let f = gf(2);
        let tops = [
            BiPoly::from_terms([((3, 0), e(1)), ((0, 3), e(2))]),
            BiPoly::from_terms([((2, 2), e(1)), ((1, 3), e(3))]),
            BiPoly::from_terms([((0, 4), e(1))]),
            BiPoly::from_terms([((4, 0), e(3)), ((2, 2), e(1))]),
        ];
        for top in &tops {
            for j in 1..=3 {
                let fast: Vec<BiPoly> = dividing_top_forms(&f, top, j).unwrap();
                let mut slow = Vec::new();
                for lead in 0..=j {
                    for_each_vector(f.q(), (j - lead) as usize, |tail| {
                        let mut form = BiPoly::monomial(e(1), j - lead, lead);
                        for (k, &c) in tail.iter().enumerate() {
                            let i = lead + 1 + k as u32;
                            form.add_term(j - i, i, c);
                        }
                        if top.div_exact(&f, &form).unwrap().is_some() {
                            slow.push(form);
                        }
                        false
                    });
                }
                assert_eq!(fast, slow, "top={top} j={j}");
            }
        }
    }

    #[test]
    fn capacity_errors() {
        let f = gf(3);
        let h = build_h(&f, FieldElem::ONE, 12).unwrap();
        for ext in [4, 9] {
            assert!(matches!(
                bruteforce_bivariate_irreducible(&f, &h, ext),
                Err(Error::Capacity(_))
            ));
        }
        assert_eq!(brute_force_work(1, 4, 4), Some(1 << 16));
    }

    #[test]
    fn census_examples() {
        let f4 = gf(2);
        let line = build_hbar(3).unwrap();
        let shifts: Vec<FieldElem> = f4.elements().collect();
        let census = reducible_translate_census(&f4, &line, &shifts, 1).unwrap();
        assert!(census.iter().all(|&(_, red)| !red));

        // H-bar for t = 5 is X^3 + X^2 Y + X Y^2 + Y^3 + 1 = (X+Y)^3 + 1 over GF(2);
        // with shift 1 it becomes (X+Y)^3, reducible, and with shift 0 it
        // splits as (X+Y+1)((X+Y)^2 + (X+Y) + 1).
        let f2 = gf(1);
        let hb5 = build_hbar(5).unwrap();
        let census = reducible_translate_census(&f2, &hb5, &[e(0), e(1)], 1).unwrap();
        assert_eq!(census, vec![(e(0), true), (e(1), true)]);
    }
}
