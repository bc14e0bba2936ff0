//! Exact computation of the degree of the projective dual (discriminant) of
//! the closed orbit of an irreducible representation of a reductive group.
//!
//! Given a product of classical factors (types A, B, C, D, G₂ and reductive
//! GL(n)) and a highest weight, the [`engine`] module evaluates exact
//! localization sums over the Weyl orbit at random integer points and reads
//! off the degree; every number it produces is recomputed along an
//! independent route and the two must agree bit for bit. The [`symfun`]
//! module provides three more, purely symmetric-function routes for a single
//! GL(n), and [`closed`] collects closed-form formulas for classical
//! families (Veronese, Grassmannians, two-row weights, hyperdeterminants)
//! that serve as external oracles. All arithmetic is exact rational; there
//! are no floating-point tolerances anywhere.
//!
//! Quick tour:
//!
//! ```
//! use discrim::{engine, roots::{FactorType, RootSystem, Weight}};
//!
//! // the Plücker embedding of Gr₃(C⁸): GL(8) with weight L₆+L₇+L₈
//! let rs = RootSystem::build(&[(FactorType::Gl, 8)]).unwrap();
//! let lam = Weight::from_ints(&[0, 0, 0, 0, 0, 1, 1, 1]);
//! let report = engine::degree(&rs, &lam, 1).unwrap();
//! assert_eq!(report.degree, 16);
//! ```

pub mod closed;
pub mod engine;
pub mod error;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod symfun;

pub use engine::{DegreeReport, Method};
pub use error::{Error, Result};
pub use rational::Rational;
pub use roots::{FactorType, RootSystem, Weight};
