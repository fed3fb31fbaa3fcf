//! Exact chromatic polynomials of structured graph families, factorization
//! over the integers, Galois groups of the resulting factors, and searches
//! for chromatic-root realizations of algebraic integers.

pub mod cli;
pub mod conjecture;
pub mod factor;
pub mod families;
pub mod galois;
pub mod graphs;
pub mod intpoly;
pub mod survey;

pub use factor::{factor, is_irreducible, Factorization};
pub use galois::{classify, GaloisResult};
pub use graphs::{chromatic_polynomial, FamilySpec, Graph};
pub use intpoly::{IntPoly, PolyError, ShiftResult};
