use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::UniPoly;

/// Sparse bivariate polynomial: exponent pair `(i, j)` for `X^i Y^j`
/// mapped to a nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), FieldElem>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: FieldElem, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(FieldElem::ONE, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(FieldElem::ONE, 0, 1)
    }

    /// Collects terms, summing repeated exponent pairs and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), FieldElem)>) -> Self {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// `u(X)` viewed as a bivariate polynomial.
    pub fn from_uni_in_x(u: &UniPoly) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(i, &c)| ((i as u32, 0), c)))
    }

    /// `u(Y)` viewed as a bivariate polynomial.
    pub fn from_uni_in_y(u: &UniPoly) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(j, &c)| ((0, j as u32), c)))
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert(FieldElem::ZERO);
        *slot = FieldElem::from_bits(slot.bits() ^ c.bits());
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), FieldElem)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElem {
        self.terms.get(&(i, j)).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_in_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|&(i, j)| i + j);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> BiPoly {
        Self::from_terms(self.terms().filter(|&((i, j), _)| i + j == k))
    }

    pub fn swap_xy(&self) -> BiPoly {
        Self::from_terms(self.terms().map(|((i, j), c)| ((j, i), c)))
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElem) -> BiPoly {
        Self::from_terms(self.terms().map(|(k, a)| (k, ctx.mul(a, c))))
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), a) in self.terms() {
            for ((i2, j2), b) in other.terms() {
                out.add_term(i1 + i2, j1 + j2, ctx.mul(a, b));
            }
        }
        out
    }

    /// Applies `f` to every coefficient, e.g. to embed into an extension field.
    pub fn map_coeffs(&self, mut f: impl FnMut(FieldElem) -> FieldElem) -> BiPoly {
        Self::from_terms(self.terms().map(|(k, c)| (k, f(c))))
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem, y: FieldElem) -> FieldElem {
        // Powers are cached per exponent since H has few distinct ones.
        let mut xp: BTreeMap<u32, FieldElem> = BTreeMap::new();
        let mut yp: BTreeMap<u32, FieldElem> = BTreeMap::new();
        let mut acc = FieldElem::ZERO;
        for ((i, j), c) in self.terms() {
            let xi = *xp.entry(i).or_insert_with(|| ctx.pow_unchecked(x, i as u64));
            let yj = *yp.entry(j).or_insert_with(|| ctx.pow_unchecked(y, j as u64));
            acc = ctx.add(acc, ctx.mul(c, ctx.mul(xi, yj)));
        }
        acc
    }

    /// `p(X, y)` for a fixed `y`.
    pub fn specialize_y(&self, ctx: &FieldCtx, y: FieldElem) -> UniPoly {
        let mut coeffs = vec![FieldElem::ZERO; self.degree_in_x().map_or(0, |d| d as usize + 1)];
        let mut yp: BTreeMap<u32, FieldElem> = BTreeMap::new();
        for ((i, j), c) in self.terms() {
            let yj = *yp.entry(j).or_insert_with(|| ctx.pow_unchecked(y, j as u64));
            let slot = &mut coeffs[i as usize];
            *slot = ctx.add(*slot, ctx.mul(c, yj));
        }
        UniPoly::new(coeffs)
    }

    /// `p(x, Y)` for a fixed `x`.
    pub fn specialize_x(&self, ctx: &FieldCtx, x: FieldElem) -> UniPoly {
        self.swap_xy().specialize_y(ctx, x)
    }

    /// Leading term in graded order (total degree first, then `X` degree).
    pub fn leading_term(&self) -> Option<((u32, u32), FieldElem)> {
        self.terms()
            .max_by_key(|&((i, j), _)| (i + j, i))
    }

    /// Division by a single polynomial in graded order. Since `{den}` is a
    /// Groebner basis of the ideal it generates, the remainder is zero
    /// exactly when `den` divides `self`.
    pub fn divrem(&self, ctx: &FieldCtx, den: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        self.divide(ctx, den, false)
            .map(|(q, r)| (q, r.expect("full division keeps the remainder")))
    }

    /// Exact quotient, or `None` when `den` does not divide `self`.
    pub fn div_exact(&self, ctx: &FieldCtx, den: &BiPoly) -> Result<Option<BiPoly>> {
        let (q, r) = self.divide(ctx, den, true)?;
        Ok(r.is_some_and(|r| r.is_zero()).then_some(q))
    }

    /// Shared division loop. With `early_exit`, the first irreducible
    /// leading term aborts and the remainder is reported as `None`.
    fn divide(
        &self,
        ctx: &FieldCtx,
        den: &BiPoly,
        early_exit: bool,
    ) -> Result<(BiPoly, Option<BiPoly>)> {
        let ((gi, gj), gc) = den.leading_term().ok_or(Error::DivisionByZero)?;
        let gc_inv = ctx.inv(gc)?;
        // Working copy keyed by (total degree, x degree) so the leading
        // term is the last entry.
        let mut work: BTreeMap<(u32, u32), FieldElem> =
            self.terms().map(|((i, j), c)| ((i + j, i), c)).collect();
        let mut quo = BiPoly::zero();
        let mut rem = BiPoly::zero();
        while let Some((&(deg, i), &c)) = work.iter().next_back() {
            let j = deg - i;
            if i < gi || j < gj {
                if early_exit {
                    return Ok((quo, None));
                }
                work.remove(&(deg, i));
                rem.add_term(i, j, c);
                continue;
            }
            let factor = ctx.mul(c, gc_inv);
            let (si, sj) = (i - gi, j - gj);
            quo.add_term(si, sj, factor);
            for ((di, dj), dc) in den.terms() {
                let key = (di + dj + si + sj, di + si);
                let slot = work.entry(key).or_insert(FieldElem::ZERO);
                *slot = ctx.add(*slot, ctx.mul(factor, dc));
                if slot.is_zero() {
                    work.remove(&key);
                }
            }
        }
        Ok((quo, Some(rem)))
    }
}

impl fmt::Display for BiPoly {
    /// `i,j:hexcoeff` triples separated by semicolons, ascending by `(i, j)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(";")?;
            }
            write!(f, "{i},{j}:{c:x}")?;
        }
        Ok(())
    }
}
