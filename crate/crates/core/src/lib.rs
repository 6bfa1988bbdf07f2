//! Computational commutative algebra for Artinian quotients of polynomial rings.
//!
//! The crate computes reduced Gröbner bases, ideal colons, intersections and
//! powers, Hilbert functions and socles, and uses them to check the colon
//! identity `I : m^i = I + m^(δ+1-i)` for complete intersections and its
//! Gorenstein analogue on concrete instances. The [`oracle`] module re-derives lengths and colons by
//! plain linear algebra over the standard-monomial basis.

pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal_ops;
pub mod oracle;
pub mod poly;
pub mod theorems;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
