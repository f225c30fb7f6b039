//! Polytope-level functors and statistics: interior hulls, relaxations,
//! maximality, hyperellipticity, column vectors and moduli-dimension formulas.

mod columns;
mod relax;
mod report;
mod stats;

pub use columns::{column_vectors, ColumnVector};
pub use relax::{interior_hull, is_maximal, relax, relaxed_vertex, InteriorHull, Relaxation};
pub use report::{analyze, PolygonReport};
pub use stats::{classify_genus4_hull, dim_aut, is_hyperelliptic_polytope, koelman_dim, m_bound, Arrangement};
