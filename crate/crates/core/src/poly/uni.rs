use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `X^i`.
///
/// Always canonical: no zero coefficient above the degree. The zero
/// polynomial has an empty coefficient vector and `degree() == None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<FieldElem>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_bits(bits: &[u32]) -> Self {
        Self::new(bits.iter().map(|&b| FieldElem::from_bits(b)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::ONE)
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let mut coeffs = vec![FieldElem::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(FieldElem::ONE, 1)
    }

    /// `X - alpha`, which is `X + alpha` in characteristic 2.
    pub fn linear(alpha: FieldElem) -> Self {
        Self::new(vec![alpha, FieldElem::ONE])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [FieldElem::ONE]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn leading(&self) -> Option<FieldElem> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| FieldElem::from_bits(self.coeff(i).bits() ^ other.coeff(i).bits()))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElem) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, ctx: &FieldCtx, mut e: u64) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e != 0 {
            if e & 1 == 1 {
                acc = acc.mul(ctx, &base);
            }
            e >>= 1;
            if e != 0 {
                base = base.mul(ctx, &base);
            }
        }
        acc
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElem::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// Splits off the leading coefficient: returns `(unit, monic)`.
    pub fn monic(&self, ctx: &FieldCtx) -> Result<(FieldElem, UniPoly)> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = ctx.inv(lc)?;
        Ok((lc, self.scale(ctx, inv)))
    }

    /// Euclidean division: `self = den * quotient + remainder` with
    /// `deg(remainder) < deg(den)`.
    pub fn divrem(&self, ctx: &FieldCtx, den: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = den.degree().ok_or(Error::DivisionByZero)?;
        let Some(dn) = self.degree() else {
            return Ok((UniPoly::zero(), UniPoly::zero()));
        };
        if dn < dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let lc_inv = ctx.inv(den.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![FieldElem::ZERO; dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let factor = ctx.mul(c, lc_inv);
            quo[k] = factor;
            for (j, &dc) in den.coeffs.iter().enumerate() {
                rem[k + j] = ctx.add(rem[k + j], ctx.mul(factor, dc));
            }
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quo), UniPoly::new(rem)))
    }

    pub fn rem(&self, ctx: &FieldCtx, den: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(ctx, den)?.1)
    }

    /// Exact quotient; errors if `den` does not divide `self`.
    pub fn div_exact(&self, ctx: &FieldCtx, den: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(ctx, den)?;
        if !r.is_zero() {
            return Err(Error::Precondition("division is not exact".into()));
        }
        Ok(q)
    }

    /// Formal derivative. In characteristic 2 the even-degree terms vanish.
    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c } else { FieldElem::ZERO })
            .collect();
        UniPoly::new(coeffs)
    }

    /// Square root of a polynomial whose odd-degree coefficients all vanish.
    pub(crate) fn sqrt_of_square(&self, ctx: &FieldCtx) -> Result<UniPoly> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(Error::Precondition("polynomial is not a square".into()));
        }
        Ok(UniPoly::new(
            self.coeffs.iter().step_by(2).map(|&c| ctx.sqrt(c)).collect(),
        ))
    }

    /// `X^(2^k)` reduced modulo `self`.
    pub(crate) fn x_pow_two_pow_mod(&self, ctx: &FieldCtx, k: u32) -> Result<UniPoly> {
        let mut acc = UniPoly::x().rem(ctx, self)?;
        for _ in 0..k {
            acc = acc.mul(ctx, &acc).rem(ctx, self)?;
        }
        Ok(acc)
    }
}

/// Monic greatest common divisor.
pub fn gcd(ctx: &FieldCtx, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(ctx, &y)?;
        x = y;
        y = r;
    }
    Ok(x.monic(ctx)?.1)
}

/// One squarefree part and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreePart {
    pub factor: UniPoly,
    pub multiplicity: u32,
}

/// `unit * prod(factor^multiplicity)` with monic, squarefree, pairwise
/// coprime, non-constant factors, sorted by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: FieldElem,
    pub parts: Vec<SquarefreePart>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self, ctx: &FieldCtx) -> UniPoly {
        self.parts
            .iter()
            .fold(UniPoly::constant(self.unit), |acc, part| {
                acc.mul(ctx, &part.factor.pow(ctx, part.multiplicity as u64))
            })
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts.iter().map(|p| p.multiplicity)
    }
}

/// Squarefree decomposition over GF(2^r), including the characteristic-2
/// branch where the derivative vanishes and the input is a perfect square.
pub fn squarefree_decomposition(ctx: &FieldCtx, p: &UniPoly) -> Result<SquarefreeDecomposition> {
    let (unit, monic) = p.monic(ctx)?;
    let mut parts = Vec::new();
    squarefree_monic(ctx, monic, 1, &mut parts)?;
    parts.sort_by_key(|part| part.multiplicity);
    Ok(SquarefreeDecomposition { unit, parts })
}

fn squarefree_monic(
    ctx: &FieldCtx,
    f: UniPoly,
    scale: u32,
    out: &mut Vec<SquarefreePart>,
) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let df = f.derivative();
    if df.is_zero() {
        return squarefree_monic(ctx, f.sqrt_of_square(ctx)?, scale * 2, out);
    }
    // c collects every factor with multiplicity reduced by one (odd
    // multiplicities) or kept whole (even multiplicities).
    let mut c = gcd(ctx, &f, &df)?;
    let mut w = f.div_exact(ctx, &c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = gcd(ctx, &w, &c)?;
        let fac = w.div_exact(ctx, &y)?;
        if !fac.is_constant() {
            out.push(SquarefreePart {
                factor: fac,
                multiplicity: i * scale,
            });
        }
        w = y;
        c = c.div_exact(ctx, &w)?;
        i += 1;
    }
    if !c.is_one() {
        squarefree_monic(ctx, c.sqrt_of_square(ctx)?, scale * 2, out)?;
    }
    Ok(())
}

/// Largest `k` with `(X - alpha)^k` dividing `p`.
pub fn root_multiplicity(ctx: &FieldCtx, p: &UniPoly, alpha: FieldElem) -> Result<u32> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lin = UniPoly::linear(alpha);
    let mut cur = p.clone();
    let mut k = 0;
    loop {
        let (q, r) = cur.divrem(ctx, &lin)?;
        if !r.is_zero() {
            return Ok(k);
        }
        cur = q;
        k += 1;
    }
}

/// Number of distinct roots of `p` in GF(2^r): `deg gcd(p, X^q - X)`.
pub fn count_roots_in_field(ctx: &FieldCtx, p: &UniPoly) -> Result<u32> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(0);
    }
    let xq = p.x_pow_two_pow_mod(ctx, ctx.r())?;
    let g = gcd(ctx, p, &xq.add(&UniPoly::x()))?;
    Ok(g.degree().unwrap_or(0) as u32)
}

impl fmt::Display for UniPoly {
    /// Comma-separated lowercase hex coefficients, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c:x}")?;
        }
        Ok(())
    }
}
