//! Arithmetic in GF(2^r) over a polynomial basis.
//!
//! Elements are plain integers whose bit `i` is the coefficient of `X^i`.
//! The modulus for a given `r` is the numerically smallest irreducible
//! polynomial of degree `r` over GF(2), so a context is a pure function of `r`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 24;

/// An element of GF(2^r): the coefficient vector of its polynomial-basis
/// representative, packed into an integer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Wraps raw bits without checking them against a field; use
    /// [`FieldCtx::elem`] when the bits come from outside.
    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        FieldElem(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// A concrete model of GF(2^r). Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    r: u32,
    modulus: u32,
}

impl FieldCtx {
    /// Builds GF(2^r) with the smallest irreducible modulus of degree `r`.
    pub fn new(r: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&r) {
            return Err(Error::range(
                "field degree",
                format!("r = {r}, expected 1..={MAX_DEGREE}"),
            ));
        }
        let modulus = smallest_irreducible(r);
        Ok(FieldCtx { r, modulus })
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Field size `2^r`.
    #[inline]
    pub fn q(&self) -> u32 {
        1 << self.r
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Modulus as a bit string, highest degree first (`"1011"` for X^3+X+1).
    pub fn modulus_string(&self) -> String {
        format!("{:b}", self.modulus)
    }

    /// Validates raw bits as an element of this field.
    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if bits >= self.q() {
            return Err(Error::range(
                "field element",
                format!("0x{bits:x} does not fit GF(2^{})", self.r),
            ));
        }
        Ok(FieldElem(bits))
    }

    #[inline]
    pub fn contains(&self, x: FieldElem) -> bool {
        x.0 < self.q()
    }

    /// All elements in ascending bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.q()).map(FieldElem)
    }

    /// Nonzero elements in ascending bit order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (1..self.q()).map(FieldElem)
    }

    #[inline]
    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldElem(x.0 ^ y.0)
    }

    #[inline]
    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldElem(self.reduce(clmul(x.0 as u64, y.0 as u64)))
    }

    #[inline]
    pub fn square(&self, x: FieldElem) -> FieldElem {
        self.mul(x, x)
    }

    /// Multiplication by the class of `X`.
    #[inline]
    pub fn mul_by_x(&self, x: FieldElem) -> FieldElem {
        let v = (x.0 as u64) << 1;
        FieldElem(self.reduce(v))
    }

    /// `x^e` by square-and-multiply. `0^0` is rejected.
    pub fn pow(&self, x: FieldElem, e: u64) -> Result<FieldElem> {
        if x.is_zero() && e == 0 {
            return Err(Error::Precondition("0^0 is undefined here".into()));
        }
        Ok(self.pow_unchecked(x, e))
    }

    /// `x^e` with `0^0 = 1`; internal callers guarantee the precondition.
    #[inline]
    pub(crate) fn pow_unchecked(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut base = x;
        let mut acc = FieldElem::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, computed as `x^(q-2)`.
    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_unchecked(x, self.q() as u64 - 2))
    }

    pub fn div(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// Square root: the inverse of Frobenius, `x^(2^(r-1))`.
    pub fn sqrt(&self, x: FieldElem) -> FieldElem {
        let mut v = x;
        for _ in 1..self.r {
            v = self.square(v);
        }
        v
    }

    /// Smallest element (by bits) generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        let order = self.q() as u64 - 1;
        let primes = prime_factors(order);
        self.nonzero_elements()
            .find(|&g| {
                primes
                    .iter()
                    .all(|&p| self.pow_unchecked(g, order / p) != FieldElem::ONE)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// Reduces a carryless product (degree < 2r) modulo the field modulus.
    #[inline]
    fn reduce(&self, mut v: u64) -> u32 {
        let m = self.modulus as u64;
        let r = self.r;
        while v >> r != 0 {
            let top = 63 - v.leading_zeros();
            v ^= m << (top - r);
        }
        v as u32
    }
}

/// Carryless product of two binary polynomials of degree < 32.
#[inline]
pub(crate) fn clmul(mut a: u64, mut b: u64) -> u64 {
    let mut acc = 0u64;
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    while b != 0 {
        let low = b.trailing_zeros();
        acc ^= a << low;
        b &= b - 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
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

fn smallest_irreducible(r: u32) -> u32 {
    let lo = 1u32 << r;
    (lo..lo << 1)
        .find(|&m| gf2x::is_irreducible(m as u64))
        .expect("irreducible polynomials exist in every degree")
}

/// Polynomials over GF(2) packed into `u64`, used for modulus selection.
pub(crate) mod gf2x {
    use super::clmul;

    #[inline]
    pub fn degree(a: u64) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(63 - a.leading_zeros())
        }
    }

    pub fn rem(mut a: u64, m: u64) -> u64 {
        let dm = degree(m).expect("nonzero modulus");
        while let Some(da) = degree(a) {
            if da < dm {
                break;
            }
            a ^= m << (da - dm);
        }
        a
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = rem(a, b);
            a = b;
            b = t;
        }
        a
    }

    pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
        rem(clmul(a, b), m)
    }

    /// Ben-Or: `m` of degree `d` is irreducible iff
    /// `gcd(X^(2^k) - X, m) = 1` for every `1 <= k <= d/2`.
    pub fn is_irreducible(m: u64) -> bool {
        let Some(d) = degree(m) else { return false };
        if d == 0 {
            return false;
        }
        let x = rem(0b10, m);
        let mut power = x;
        for _ in 1..=d / 2 {
            power = mulmod(power, power, m);
            if gcd(m, power ^ x) != 1 {
                return false;
            }
        }
        true
    }
}
