//! Toric ideals of lattice point configurations, a Buchberger engine over the
//! rationals and prime fields, and exact certificates that a list of binomials
//! cuts out an affine toric variety set-theoretically.

pub mod cli;
pub mod error;
pub mod exactmath;
pub mod family;
pub mod groebner;
pub mod polyring;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
