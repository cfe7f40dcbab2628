//! Graded commutative algebra over prime fields: Gröbner bases, Hilbert
//! series, minimal free resolutions over quotient rings, and certificates
//! that a standard graded Cohen–Macaulay ring is strictly CM-infinite or
//! CM-wild, together with explicit families of maximal Cohen–Macaulay
//! modules witnessing it.

pub mod cli;
pub mod error;
pub mod family;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod intertwine;
pub mod io;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod upoly;
pub mod wildness;

pub use error::{Error, Result};
pub use field::{FieldElem, PrimeField, DEFAULT_PRIME};
pub use groebner::{buchberger, normal_form, GradedFreeModule, GroebnerBasis, ModuleElem};
pub use monomial::{monomial_compare, Monomial, MonomialOrder};
pub use poly::{parse_poly, Polynomial};
pub use ring::QuotientRingSpec;
