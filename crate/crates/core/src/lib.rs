//! Specht polynomials, Specht ideals, Gröbner bases and Hilbert series over
//! the rationals and prime fields.
//!
//! Everything is generic over a [`Field`] descriptor; the aliases below fix
//! the two coefficient fields in use.

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod specht;

pub use algebra::{parse_polynomial, Field, FieldDescriptor, Monomial, MonomialOrder, Polynomial, PrimeField, Rationals};
pub use combinatorics::{Partition, YoungTableau};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, GroebnerConfig, Ideal, MonomialIdeal};
pub use hilbert::HilbertSeries;
pub use specht::{Family, SpechtIdealSpec};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

pub type QPolynomial = Polynomial<Rationals>;
pub type FpPolynomial = Polynomial<PrimeField>;
pub type QIdeal = Ideal<Rationals>;
pub type FpIdeal = Ideal<PrimeField>;
pub type QGroebnerBasis = GroebnerBasis<Rationals>;
pub type FpGroebnerBasis = GroebnerBasis<PrimeField>;
