//! Exact arithmetic: rationals, sparse Laurent polynomials in q, t, u,
//! and the canonically reduced fraction field Q(q,t).
//!
//! All higher modules build on three value types:
//!
//! * [`Laurent`] — a finite map from exponent triples (e_q, e_t, e_u) to
//!   nonzero rational coefficients, with negative exponents allowed.
//! * [`RatQt`] — a reduced fraction num/den of u-free Laurent
//!   polynomials; the denominator is a genuine polynomial with no
//!   monomial factor and leading coefficient +1, so equal values are
//!   structurally equal.
//! * [`UPoly`] — a polynomial in u with [`RatQt`] coefficients, for the
//!   intermediate sums whose u-dependence is polynomial while the (q,t)
//!   part is a fraction.
//!
//! The monomial order is fixed globally (see [`Mono`]) so that printing,
//! hashing and iteration are deterministic everywhere.

mod laurent;
mod mono;
mod ratqt;
mod text;
mod upoly;
mod zpoly;

pub use laurent::{Laurent, QQ};
pub use mono::Mono;
pub use ratqt::{RatQt, RatSum};
pub use text::parse_laurent;
pub use upoly::UPoly;

use thiserror::Error;

/// Failure modes of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// A fraction was constructed with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,
    /// A substitution made a denominator vanish identically.
    #[error("substitution makes the denominator vanish")]
    SingularSubstitution,
    /// A fraction was asked for its Laurent-polynomial form, but the
    /// denominator does not divide the numerator.
    #[error("denominator does not divide numerator")]
    NotPolynomial,
    /// A malformed polynomial string was handed to the parser.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exact substitutions applied to polynomials and fractions.
///
/// Each variant is a ring homomorphism on Laurent polynomials, so
/// composing substitutions equals substituting the composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// t -> 1.
    TOne,
    /// q -> 1.
    QOne,
    /// t -> q^{-1}.
    TQInverse,
    /// t -> t^{-1}.
    TInverse,
    /// u -> 0.
    UZero,
    /// u -> t^N.
    UTPower(i32),
    /// Exchange q and t.
    SwapQT,
}
