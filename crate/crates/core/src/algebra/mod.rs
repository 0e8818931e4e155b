//! Coefficient fields, monomials, the default lexicographic order and sparse
//! polynomial arithmetic.

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{is_prime, Field, FieldDescriptor, PrimeField, Rationals, LARGE_PRIME};
pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT, MAX_VARS};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Term};

pub(crate) use polynomial::merge_add;
