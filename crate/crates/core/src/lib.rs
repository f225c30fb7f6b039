//! Exact lattice-polygon combinatorics for curves in toric surfaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: points, polygons, hulls, unimodular maps and canonical forms.
//! * [`analysis`]: interior hulls, relaxations, maximality, column vectors and
//!   the moduli-dimension statistics gathered in a [`PolygonReport`].
//! * [`loops`]: legal moves and legal loops, their duals, winding numbers and
//!   the twelve-theorem check.
//! * [`enumerate`]: genus-indexed enumeration of polygons up to equivalence.
//! * [`nondeg`]: Laurent polynomials over prime fields and the face-by-face
//!   nondegeneracy decision.
//!
//! Everything is exact integer (or modular) arithmetic.

pub mod analysis;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod lattice;
pub mod loops;
pub mod nondeg;

pub use analysis::{analyze, InteriorHull, PolygonReport};
pub use error::{Error, Result};
pub use lattice::{convex_hull, Hull, Point, Polygon, Segment, UnimodularMap};
pub use loops::{LegalLoop, LegalMove, TwelveCheck};
pub use nondeg::{LaurentPolynomial, PrimeField};

