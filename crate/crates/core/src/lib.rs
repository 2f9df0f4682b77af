//! Exact rational machinery for inner-harmonic matrices.
//!
//! A square rational matrix is *inner-harmonic* when the five-point discrete
//! Laplacian `4f(x,y) - f(x-1,y) - f(x+1,y) - f(x,y-1) - f(x,y+1)` vanishes at
//! every interior lattice site. This crate decides that property, fills an
//! arbitrary border with its unique inner-harmonic completion, and builds a
//! discrete harmonic bivariate polynomial that interpolates any inner-harmonic
//! matrix of size `L >= 3` with degree at most `2(L-1)`.
//!
//! All arithmetic is exact ([`Rational`] is a reduced big rational); there is
//! no floating-point path anywhere in the crate.
//!
//! Matrices and lattice functions are related by a fixed correspondence: the
//! entry in (1-based) row `i`, column `j` of an `L x L` matrix is the value at
//! lattice point `(x, y) = (j - 1, L - i)`, so the lower-left corner sits at
//! the origin.

pub mod completion;
mod error;
pub mod fixtures;
pub mod format;
pub mod grid;
pub mod interpolate;
pub mod linalg;
pub mod poly;
pub mod sandpile;

pub use completion::{complete, BorderSpec, CompletionSystem};
pub use error::{Error, Result};
pub use grid::{LatticePoint, RatMatrix};
pub use interpolate::{bilinear, extend, interpolate_3x3, telescopic, LPolySet};
pub use poly::{BiPoly, DHBasis, Monomial};
pub use sandpile::SandConfig;

/// The sole scalar type: an arbitrary-precision rational kept in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a small rational from machine integers.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// An integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
