//! Planar monomials in characteristic two.
//!
//! A function `f` on GF(q), `q = 2^r`, is planar when `c -> f(c+b) + f(c) + b*c`
//! is a bijection for every nonzero `b`. The monomial `a*c^t` with `t^4 <= q`
//! is planar exactly when `t` is a power of two. This crate makes every step
//! of that argument executable:
//!
//! * [`field`]: GF(2^r) arithmetic with a deterministic modulus.
//! * [`poly`]: univariate and bivariate polynomials, squarefree decomposition,
//!   root counting.
//! * [`planarity`]: the planarity test, monomial scans, and the sharper
//!   threshold on `r`.
//! * [`irreducibility`]: the auxiliary polynomials `g`, `H`, `H-bar`, the
//!   binomial (Capelli) criterion and a brute-force factor search.
//! * [`weil`]: zero counting, the Weil-type lower bound, the inequality chain
//!   and two singular cubics.
//! * [`designs`]: the `(q, q, q, 1)` relative difference set built from a
//!   planar function.
//! * [`cli`]: the `planarlab` command line.

pub mod cli;
pub mod designs;
pub mod error;
pub mod field;
pub mod irreducibility;
pub mod planarity;
pub mod poly;
pub mod weil;

pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElem};
pub use poly::{BiPoly, UniPoly};

/// `t = 2^k` for some `k >= 0`; `1 = 2^0` counts.
pub fn is_power_of_two(t: u64) -> bool {
    t != 0 && t & (t - 1) == 0
}
