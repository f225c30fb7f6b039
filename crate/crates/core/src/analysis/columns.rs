use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::lattice::{Point, Polygon, Segment};

/// A nonzero vector `v` with the facets `τ` for which `v + ((Δ ∖ τ) ∩ ℤ²) ⊆ Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnVector {
    pub v: Point,
    pub base_facets: Vec<Segment>,
}

/// All column vectors of `poly`, sorted by vector.
///
/// For a facet `τ`, any fixed lattice point `s₀ ∈ Δ ∖ τ` must land in `Δ`, so
/// `v = q − s₀` for some lattice point `q ∈ Δ`; each such candidate is then
/// checked against every lattice point of `Δ ∖ τ`.
pub fn column_vectors(poly: &Polygon) -> Vec<ColumnVector> {
    let points = poly.lattice_points();
    let inside: HashSet<Point> = points.iter().copied().collect();
    let mut found: BTreeMap<Point, Vec<Segment>> = BTreeMap::new();
    for facet in poly.facets() {
        let off_facet: Vec<Point> = points.iter().copied().filter(|&p| facet.excess(p) != 0).collect();
        let s0 = off_facet[0];
        for &q in &points {
            let v = q - s0;
            if v.is_zero() {
                continue;
            }
            if off_facet.iter().all(|&s| inside.contains(&(s + v))) {
                found.entry(v).or_default().push(facet.edge);
            }
        }
    }
    found.into_iter().map(|(v, base_facets)| ColumnVector { v, base_facets }).collect()
}
