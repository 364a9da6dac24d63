//! Exact integer, rational and prime-field arithmetic, plus the integer linear
//! algebra behind toric ideals.

mod field;
mod matrix;

pub use field::{
    dth_roots, is_prime, Field, Integer, PrimeField, PrimeFieldElement, Rational, Rationals,
    MODULUS_BOUND,
};
pub use matrix::{hermite_normal_form, kernel_lattice, rank, IntegerMatrix, LatticeBasis};
