//! Growth of polygon classes by adjoining one lattice point at a time.

use std::collections::HashSet;

use crate::lattice::{canonical_form, lattice_points_within, HalfPlane, Point, Polygon};

pub(crate) fn unimodular_triangle() -> Polygon {
    Polygon::new(&[Point::new(0, 0), Point::new(1, 0), Point::new(0, 1)]).expect("valid triangle")
}

/// Polygons `conv(P ∪ {q})` with exactly one lattice point more than `P`.
///
/// Such a `q` lies at lattice distance exactly one beyond every facet it
/// violates, since the triangle over that facet with apex `q` has no other
/// lattice points.
pub(crate) fn single_point_extensions(poly: &Polygon) -> Vec<Polygon> {
    let planes: Vec<HalfPlane> =
        poly.facets().iter().map(|f| HalfPlane { normal: f.normal, offset: f.offset + 1 }).collect();
    let count = poly.lattice_point_count();
    let mut vertices = poly.vertices().to_vec();
    vertices.push(Point::ORIGIN);
    let last = vertices.len() - 1;
    lattice_points_within(&planes)
        .into_iter()
        .filter(|&q| !poly.contains(q))
        .filter_map(|q| {
            vertices[last] = q;
            let grown = Polygon::hull_of(&vertices).expect("two-dimensional");
            (grown.lattice_point_count() == count + 1).then_some(grown)
        })
        .collect()
}

/// Canonical classes of the next level, keeping only those accepted by `keep`.
pub(crate) fn grow_level(level: &[Polygon], keep: impl Fn(&Polygon) -> bool) -> Vec<Polygon> {
    let mut seen = HashSet::new();
    let mut next = Vec::new();
    for p in level {
        for child in single_point_extensions(p) {
            if !keep(&child) {
                continue;
            }
            let (c, _) = canonical_form(&child);
            if seen.insert(c.clone()) {
                next.push(c);
            }
        }
    }
    next.sort_by(class_order);
    next
}

/// Every class of two-dimensional polygons with exactly `n` lattice points.
///
/// Removing a suitable vertex from a polygon with `n ≥ 4` lattice points leaves
/// a two-dimensional polygon with `n − 1`, so growth from the unimodular
/// triangle reaches every class.
pub fn polygons_with_lattice_points(n: usize) -> Vec<Polygon> {
    if n < 3 {
        return vec![];
    }
    let mut level = vec![canonical_form(&unimodular_triangle()).0];
    for _ in 3..n {
        level = grow_level(&level, |_| true);
    }
    level
}

pub(crate) fn class_order(a: &Polygon, b: &Polygon) -> std::cmp::Ordering {
    (a.num_vertices(), a.vertices()).cmp(&(b.num_vertices(), b.vertices()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_point_counts() {
        // 3 points: the unimodular triangle. 4 points: unit square, the
        // triangle with an edge of length 2, and the triangle with one interior point.
        assert_eq!(polygons_with_lattice_points(3).len(), 1);
        assert_eq!(polygons_with_lattice_points(4).len(), 3);
        for p in polygons_with_lattice_points(6) {
            assert_eq!(p.lattice_point_count(), 6);
            assert_eq!(p.lattice_points().len(), 6);
        }
    }

    #[test]
    fn extensions_add_one_point() {
        let t = unimodular_triangle();
        let ext = single_point_extensions(&t);
        assert!(!ext.is_empty());
        assert!(ext.iter().all(|p| p.lattice_point_count() == 4 && p.contains_polygon(&t)));
    }
}
