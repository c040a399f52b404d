//! Exact spectral certification for cubic graphs.
//!
//! The crate decides, with integer and rational arithmetic only, whether a
//! cubic graph has eigenvalues in a rational interval such as `(-2, 0)`.
//! The central object is `M = A(A + 2I)`: a graph avoids `(-2, 0)` exactly
//! when `M` is positive semidefinite, so a principal submatrix of `M` with
//! negative determinant is a certificate that the gap is violated.
//!
//! Modules:
//! - [`graph`]: bitset graphs, graph6, named constructions.
//! - [`algebra`]: polynomials and matrices generic over the scalar ring,
//!   characteristic polynomials, determinants and Sturm root counting.
//! - [`certify`]: the `M` matrix, gap verdicts, PSD tests, minor witnesses
//!   and replay of the forbidden-configuration determinants.
//! - [`local`]: coronas of girth cycles, strong open neighbourhoods and the
//!   girth-five configuration enumeration.
//! - [`families`]: the `X(n)` family and the five sporadic graphs.
//! - [`enumerate`]: isomorph-free generation of connected cubic graphs and
//!   the exhaustive classification check.

pub mod algebra;
pub mod canon;
pub mod certify;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod local;

pub use error::{Error, Result};
pub use graph::{Girth, Graph, VertexSet};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Square matrix of arbitrary-precision integers.
pub type IntMatrix = algebra::Matrix<BigInt>;
/// Dense integer polynomial, lowest degree first.
pub type IntPolynomial = algebra::Polynomial<BigInt>;
/// Arbitrary-precision rational.
pub type Rational = BigRational;
/// Interval with rational endpoints.
pub type Interval = algebra::Interval<BigInt>;
/// Sturm chain over the integers.
pub type SturmChain = algebra::SturmChain<BigInt>;
