//! Hyperelliptic classes: polygons whose interior lattice points are collinear.
//!
//! Up to equivalence the interior points are `(1, 1), …, (g, 1)`. A vertex at
//! height 3 or more would span, with `(1, 1)` and `(2, 1)`, a triangle of
//! twice-area at least 2 whose only lattice points are its vertices, which
//! contradicts Pick's theorem; so the polygon lies in `0 ≤ y ≤ 2`. A shear
//! fixing the interior row moves the top-left vertex to `(0, 2)`.

use std::collections::HashSet;

use super::growth::class_order;
use crate::lattice::{canonical_form, Point, Polygon};

pub(crate) fn hyperelliptic_classes(g: usize) -> Vec<Polygon> {
    assert!(g >= 2);
    let g = g as i64;
    let expected: Vec<Point> = (1..=g).map(|x| Point::new(x, 1)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // Top row [0, b] at y = 2, bottom row [c, d] at y = 0. The row y = 1 must not
    // reach past x = 0 or x = g + 1 in its interior, so c ≥ 0 and b + d ≤ 2g + 2.
    for b in 0..=2 * g + 2 {
        for d in 0..=2 * g + 2 - b {
            for c in 0..=d {
                for (left, right) in [(false, false), (true, false), (false, true), (true, true)] {
                    let mut pts = vec![Point::new(0, 2), Point::new(b, 2), Point::new(c, 0), Point::new(d, 0)];
                    if left {
                        pts.push(Point::new(0, 1));
                    }
                    if right {
                        pts.push(Point::new(g + 1, 1));
                    }
                    let Some(poly) = Polygon::hull_of(&pts) else { continue };
                    if poly.genus() != expected.len() || poly.interior_lattice_points() != expected {
                        continue;
                    }
                    let (canon, _) = canonical_form(&poly);
                    if seen.insert(canon.clone()) {
                        out.push(canon);
                    }
                }
            }
        }
    }
    out.sort_by(class_order);
    out
}
