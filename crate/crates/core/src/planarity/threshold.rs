//! The sharper hypothesis on `r`: the chain of inequalities already breaks
//! once `2^(r/2) > B(t)` with
//!
//! ```text
//! B(t) = P + (6t - 14) / ((t - 2) * sqrt(D) + P),   P = t^2 - 7t + 12,  D = t^2 - 10t + 29.
//! ```
//!
//! The comparison is decided exactly in `Q(sqrt 2, sqrt D)` with big integers.
//! Floating point is used only for the displayed value of `B(t)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdReport {
    pub t: u64,
    /// `B(t)` rounded to double precision, for display only.
    pub bound_approx: f64,
    /// Least `r` with `2^(r/2) > B(t)`.
    pub min_r: u32,
    /// Least `r` with `t^4 <= 2^r`.
    pub plain_r: u32,
}

impl ThresholdReport {
    pub fn is_weaker_hypothesis(&self) -> bool {
        self.min_r <= self.plain_r
    }
}

fn sign(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

/// Sign of `a + b * sqrt(d)` for `d >= 0`.
fn sign_with_root(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    match (sign(a), sign(b)) {
        (Ordering::Equal, sb) => sb,
        (sa, Ordering::Equal) => sa,
        (sa, sb) if sa == sb => sa,
        (sa, _) => {
            // Opposite signs: |a| against |b| sqrt(d).
            let diff = a * a - b * b * d;
            match sa {
                Ordering::Greater => sign(&diff),
                _ => sign(&diff).reverse(),
            }
        }
    }
}

/// Sign of `m + sqrt(2) n` with `m = m0 + m1 sqrt(d)` and `n = n0 + n1 sqrt(d)`.
fn sign_with_two_roots(m: (&BigInt, &BigInt), n: (&BigInt, &BigInt), d: &BigInt) -> Ordering {
    let sm = sign_with_root(m.0, m.1, d);
    let sn = sign_with_root(n.0, n.1, d);
    match (sm, sn) {
        (Ordering::Equal, s) => s,
        (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        (sm, _) => {
            // m^2 - 2 n^2 expressed as e0 + e1 sqrt(d).
            let two = BigInt::from(2);
            let e0 = m.0 * m.0 + m.1 * m.1 * d - &two * (n.0 * n.0 + n.1 * n.1 * d);
            let e1 = &two * m.0 * m.1 - BigInt::from(4) * n.0 * n.1;
            let s = sign_with_root(&e0, &e1, d);
            match sm {
                Ordering::Greater => s,
                _ => s.reverse(),
            }
        }
    }
}

/// Whether `2^(r/2) > B(t)`, decided exactly.
///
/// With `s = sqrt(D)` and denominator `(t-2)s + P > 0`, the inequality is
/// `f(x) = (t-2) x s + P x - (t-2) P s - P^2 - (6t - 14) > 0` at `x = 2^(r/2)`.
pub fn exceeds_bound(t: u64, r: u32) -> bool {
    let t = BigInt::from(t);
    let p: BigInt = &t * &t - BigInt::from(7) * &t + 12;
    let d: BigInt = &t * &t - BigInt::from(10) * &t + 29;
    let c: BigInt = BigInt::from(6) * &t - 14;
    let a: BigInt = &t - 2;
    let k = BigInt::from(1) << (r / 2);
    let const_part: BigInt = -(&p * &p) - &c;
    let root_part: BigInt = -(&a * &p);
    let ord = if r.is_multiple_of(2) {
        sign_with_root(&(&const_part + &p * &k), &(&root_part + &a * &k), &d)
    } else {
        sign_with_two_roots((&const_part, &root_part), (&(&p * &k), &(&a * &k)), &d)
    };
    ord == Ordering::Greater
}

fn bound_approx(t: u64) -> f64 {
    let t = t as f64;
    let p = t * t - 7.0 * t + 12.0;
    let d = t * t - 10.0 * t + 29.0;
    p + (6.0 * t - 14.0) / ((t - 2.0) * d.sqrt() + p)
}

/// Least `r` with `t^4 <= 2^r`, i.e. `ceil(4 log2 t)`.
pub fn plain_hypothesis_r(t: u64) -> u32 {
    let t4 = (t as u128).pow(4);
    (0..128).find(|&r| t4 <= 1u128 << r).expect("t^4 fits in u128")
}

/// Minimal `r` under the sharper hypothesis, next to the plain `t^4 <= 2^r` one.
pub fn remark_threshold(t: u64) -> Result<ThresholdReport> {
    if t < 3 {
        return Err(Error::range("exponent", format!("t = {t}, expected t >= 3")));
    }
    if t > 1 << 20 {
        return Err(Error::range("exponent", format!("t = {t} is too large")));
    }
    let min_r = (1..)
        .find(|&r| exceeds_bound(t, r))
        .expect("2^(r/2) eventually exceeds any fixed bound");
    Ok(ThresholdReport {
        t,
        bound_approx: bound_approx(t),
        min_r,
        plain_r: plain_hypothesis_r(t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t3_bound_is_sqrt2_and_threshold_is_2() {
        // P(3) = 0 and D(3) = 8, so B(3) = 4 / sqrt(8) = sqrt(2) exactly:
        // r = 1 ties and must not count.
        assert!((bound_approx(3) - 2f64.sqrt()).abs() < 1e-12);
        assert!(!exceeds_bound(3, 1));
        assert!(exceeds_bound(3, 2));
        let rep = remark_threshold(3).unwrap();
        assert_eq!(rep.min_r, 2);
        assert_eq!(rep.plain_r, 7);
    }

    #[test]
    fn t5_has_rational_root() {
        // D(5) = 4: B(5) = 2 + 16 / (3*2 + 2) = 4; 2^(r/2) > 4 first at r = 5.
        assert_eq!(bound_approx(5), 4.0);
        assert!(!exceeds_bound(5, 4));
        assert!(exceeds_bound(5, 5));
        assert_eq!(remark_threshold(5).unwrap().min_r, 5);
    }

    #[test]
    fn agrees_with_floating_point_away_from_ties() {
        for t in 3..=200u64 {
            let b = bound_approx(t);
            for r in 1..60 {
                let x = 2f64.powf(r as f64 / 2.0);
                if (x - b).abs() > 1e-9 * b.max(1.0) {
                    assert_eq!(exceeds_bound(t, r), x > b, "t={t} r={r}");
                }
            }
        }
    }

    #[test]
    fn plain_r_values() {
        assert_eq!(plain_hypothesis_r(3), 7);
        assert_eq!(plain_hypothesis_r(4), 8);
        assert_eq!(plain_hypothesis_r(5), 10);
        assert_eq!(plain_hypothesis_r(16), 16);
    }

    #[test]
    fn small_t_rejected() {
        assert!(remark_threshold(2).is_err());
        assert!(remark_threshold(0).is_err());
    }

    #[test]
    fn sign_helpers() {
        let b = BigInt::from;
        // 3 - sqrt(8) > 0, 2 - sqrt(8) < 0, 2 - sqrt(4) = 0
        assert_eq!(sign_with_root(&b(3), &b(-1), &b(8)), Ordering::Greater);
        assert_eq!(sign_with_root(&b(2), &b(-1), &b(8)), Ordering::Less);
        assert_eq!(sign_with_root(&b(2), &b(-1), &b(4)), Ordering::Equal);
        // sqrt(2) * 1 - 2 < 0 ; sqrt(2)*sqrt(2) - 2 = 0
        assert_eq!(sign_with_two_roots((&b(-2), &b(0)), (&b(1), &b(0)), &b(3)), Ordering::Less);
        assert_eq!(sign_with_two_roots((&b(-2), &b(0)), (&b(0), &b(1)), &b(2)), Ordering::Equal);
    }
}
