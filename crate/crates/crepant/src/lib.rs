//! Exact lattice computations for crepant, torus-equivariant resolutions of
//! Gorenstein cyclic quotient singularities.
//!
//! The crate is organised bottom-up: continued fractions ([`cfrac`]), planar
//! rational cones ([`cone2d`]), quotient types and their Hilbert bases
//! ([`quotient`]), the arithmetic decision procedures ([`criterion`]), explicit
//! resolution fans ([`fan`]) and cohomology dimensions via Ehrhart data
//! ([`ehrhart`]).

pub mod cfrac;
pub mod cone2d;
pub mod criterion;
pub mod ehrhart;
mod error;
pub mod exact;
pub mod fan;
pub mod geom;
pub mod quotient;

pub use error::{Error, Result};
