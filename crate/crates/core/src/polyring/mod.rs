//! Sparse multivariate polynomials over a coefficient field.

mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use monomial::{ExponentVector, EXPONENT_BOUND};
pub use order::MonomialOrder;
pub use parse::{format_poly, parse_poly};
pub use poly::{Polynomial, Term};
pub use ring::{PolyRing, VariableTable};
