//! Exact enumerative geometry of hyperplane arrangements.
//!
//! * [`ring`]: truncated polynomial rings (Chow rings of products of projective spaces)
//! * [`schubert`]: Schubert classes on Grassmannians and the dual Pieri rule
//! * [`arrangements`]: rational arrangements, intersection lattices, multivariate Tutte polynomial
//! * [`incidence`]: virtual and actual dimension of incidence correspondences
//! * [`enumeration`]: degrees and characteristic numbers of arrangement families
//! * [`cli`]: the `arrcount` command-line interface
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod arrangements;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod incidence;
pub mod linalg;
pub mod ring;
pub mod schubert;
mod textio;

pub use error::{Error, ParseError, Result};
pub use textio::parse_rational;
