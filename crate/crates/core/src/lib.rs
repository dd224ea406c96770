//! Exact intersection lattices of complex hyperplane arrangements over
//! cyclotomic fields, with modular elements, supersolvability certificates
//! and Poincaré polynomials.

pub mod analysis;
pub mod arrangement;
pub mod cache;
pub mod claims;
pub mod cyclo;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod reflection;
pub mod source;
pub mod support;

pub use arrangement::Arrangement;
pub use cyclo::{Cyclo, CyclotomicField, Rational};
pub use error::{Error, Result};
pub use lattice::{build_lattice, build_lattice_limited, closure, Flat, IntersectionLattice};
pub use linalg::{LinearForm, Row, Subspace};
pub use source::ArrangementSpec;
pub use support::Support;
