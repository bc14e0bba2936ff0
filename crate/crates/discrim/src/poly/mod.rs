//! Exact polynomial arithmetic: dense univariate, sparse multivariate, and
//! sparse Laurent polynomials over [`Rational`](crate::rational::Rational).
//!
//! All division is exact: a nonzero remainder is a hard error, never a
//! truncation. The zero polynomial's degree is `None` rather than a fake
//! integer.

mod laurent;
mod multi;
mod uni;

pub use laurent::LaurentPoly;
pub use multi::MultiPoly;
pub use uni::UniPoly;
