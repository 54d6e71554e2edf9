//! Ideals of a generic skew-symmetric matrix cogenerated by a Pfaffian:
//! Pfaffian expansion, tableau correspondences, Gröbner bases, the
//! Stanley-Reisner complex of the initial ideal, and its multiplicity.

pub mod cli;
pub mod complex;
pub mod error;
pub mod groebner;
pub mod ideals;
pub mod json;
pub mod multiplicity;
pub mod pfaffian;
pub mod poly;
pub mod tableaux;

pub use error::{Error, Result};
