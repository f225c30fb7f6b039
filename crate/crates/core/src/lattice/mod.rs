//! Exact plane lattice geometry.

mod canonical;
mod halfplane;
mod hull;
mod map;
mod point;
mod polygon;
mod width;

pub use canonical::{canonical_form, canonical_point_set, equivalence, is_equivalent};
pub use halfplane::{intersect_halfplanes, lattice_points_within, line_intersection, HalfPlane, RatPoint, Rational};
pub use hull::{convex_hull, Hull};
pub use map::UnimodularMap;
pub use point::{cross, gcd, Point};
pub use polygon::{Facet, Polygon, Segment};
pub use width::lattice_width;
