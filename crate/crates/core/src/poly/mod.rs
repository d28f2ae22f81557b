//! Polynomials over GF(2^r): dense univariate, sparse bivariate, and the
//! text formats used on the command line.

mod bi;
pub mod text;
mod uni;

pub use bi::BiPoly;
pub use uni::{
    count_roots_in_field, gcd, root_multiplicity, squarefree_decomposition,
    SquarefreeDecomposition, SquarefreePart, UniPoly,
};
