use serde::{Deserialize, Serialize};

use super::columns::column_vectors;
use super::relax::{interior_hull, is_maximal};
use crate::lattice::{Hull, Polygon};

/// The combinatorial statistics of a polygon in one record.
///
/// `is_maximal` is absent for genus 0, `is_hyperelliptic` for genus ≤ 1, and
/// `koelman_dim` unless the polygon is maximal and nonhyperelliptic. For a
/// degenerate interior hull every lattice point of it counts as boundary, so
/// `genus = interior_hull_genus + interior_hull_boundary` always holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonReport {
    pub genus: usize,
    pub boundary: usize,
    pub lattice_points: usize,
    pub interior_hull: Hull,
    pub interior_hull_boundary: usize,
    pub interior_hull_genus: usize,
    pub column_vectors: usize,
    pub m: i64,
    pub dim_aut: i64,
    pub is_maximal: Option<bool>,
    pub is_hyperelliptic: Option<bool>,
    #[serde(rename = "dim_M_Delta_upper")]
    pub dim_m_delta_upper: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub koelman_dim: Option<i64>,
}

pub fn analyze(poly: &Polygon) -> PolygonReport {
    let genus = poly.genus();
    let lattice_points = poly.lattice_point_count();
    let hull = interior_hull(poly);
    let c = column_vectors(poly).len();
    let is_maximal = (genus >= 1).then(|| is_maximal(poly).expect("genus checked"));
    let is_hyperelliptic = (genus >= 2).then_some(!matches!(hull, Hull::Polygon(_)));
    let dim_aut = c as i64 + 2;
    let koelman_dim = (is_maximal == Some(true) && is_hyperelliptic == Some(false))
        .then(|| lattice_points as i64 - 1 - dim_aut);
    PolygonReport {
        genus,
        boundary: poly.boundary_count(),
        lattice_points,
        interior_hull_boundary: hull.boundary_count(),
        interior_hull_genus: hull.interior_count(),
        interior_hull: hull,
        column_vectors: c,
        m: lattice_points as i64 - c as i64 - 3,
        dim_aut,
        is_maximal,
        is_hyperelliptic,
        dim_m_delta_upper: lattice_points as i64 - 1,
        koelman_dim,
    }
}
