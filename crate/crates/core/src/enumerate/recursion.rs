//! Classes with two-dimensional interior hull, found as sub-polygons of
//! relaxations, and the genus-one classes found by fixed-position growth.

use std::collections::{HashMap, HashSet};

use super::growth::{class_order, polygons_with_lattice_points};
use crate::analysis::{relax, Relaxation};
use crate::lattice::{canonical_form, Point, Polygon};

/// Every polygon `Δ ⊆ outer` (up to equivalence) whose interior lattice points
/// are exactly those of `outer`.
///
/// Any such `Δ ⊊ Q` misses a vertex `p` of `Q`, and `conv(Q ∩ ℤ² ∖ {p})` still
/// contains `Δ`, so single-vertex removals from `outer` reach all of them.
pub(crate) fn subpolygons_with_same_interior(outer: &Polygon) -> Vec<Polygon> {
    let points = outer.lattice_points();
    assert!(points.len() <= 128, "too many lattice points for a bitmask");
    let index: HashMap<Point, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let genus = outer.genus();
    let full: u128 = if points.len() == 128 { u128::MAX } else { (1u128 << points.len()) - 1 };

    let mut visited = HashSet::new();
    let mut classes = HashSet::new();
    let mut stack = vec![(full, outer.clone())];
    visited.insert(full);
    while let Some((mask, poly)) = stack.pop() {
        for &v in poly.vertices() {
            let child_mask = mask & !(1u128 << index[&v]);
            if visited.contains(&child_mask) {
                continue;
            }
            let remaining: Vec<Point> = (0..points.len()).filter(|i| child_mask >> i & 1 == 1).map(|i| points[i]).collect();
            let Some(child) = Polygon::hull_of(&remaining) else { continue };
            if child.genus() != genus {
                continue;
            }
            visited.insert(child_mask);
            stack.push((child_mask, child));
        }
        classes.insert(canonical_form(&poly).0);
    }
    let mut out: Vec<Polygon> = classes.into_iter().collect();
    out.sort_by(class_order);
    out
}

/// Classes of genus `g ≥ 3` whose interior hull is two-dimensional.
///
/// The interior hull `H` has exactly `g` lattice points; the polygon lies in
/// `relax(H)`, which must be a lattice polygon with interior points `H ∩ ℤ²`.
pub(crate) fn nonhyperelliptic_classes(g: usize) -> Vec<Polygon> {
    let mut seen = HashSet::new();
    for hull in polygons_with_lattice_points(g) {
        let Relaxation::Polygon(outer) = relax(&hull) else { continue };
        if outer.interior_lattice_points() != hull.lattice_points() {
            continue;
        }
        seen.extend(subpolygons_with_same_interior(&outer));
    }
    let mut out: Vec<Polygon> = seen.into_iter().collect();
    out.sort_by(class_order);
    out
}

/// Radius of the window, around the interior point, searched for genus one.
pub(crate) const GENUS_ONE_WINDOW: i64 = 3;

/// Genus-one classes by growth in fixed position inside the window
/// `[−3, 3]²` around the interior point `0`.
///
/// Seeds are triangles and quadrilaterals with `0` as their only interior
/// lattice point; a polygon with interior point `0` contains such a seed among
/// its vertices, and adding its remaining vertices one at a time keeps the
/// interior equal to `{0}`.
pub(crate) fn genus_one_classes() -> Vec<Polygon> {
    let r = GENUS_ONE_WINDOW;
    let window: Vec<Point> =
        (-r..=r).flat_map(|y| (-r..=r).map(move |x| Point::new(x, y))).filter(|p| !p.is_zero()).collect();
    let only_origin = |p: &Polygon| p.genus() == 1 && p.contains_strictly(Point::ORIGIN);

    let mut visited: HashSet<Polygon> = HashSet::new();
    let mut stack = Vec::new();
    let n = window.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let tri = [window[i], window[j], window[k]];
                if let Some(p) = Polygon::hull_of(&tri) {
                    if p.num_vertices() == 3 && only_origin(&p) && visited.insert(p.clone()) {
                        stack.push(p);
                    }
                }
                for l in k + 1..n {
                    let quad = [window[i], window[j], window[k], window[l]];
                    if let Some(p) = Polygon::hull_of(&quad) {
                        if p.num_vertices() == 4 && only_origin(&p) && visited.insert(p.clone()) {
                            stack.push(p);
                        }
                    }
                }
            }
        }
    }
    while let Some(p) = stack.pop() {
        let mut pts = p.vertices().to_vec();
        pts.push(Point::ORIGIN);
        let last = pts.len() - 1;
        for &q in &window {
            if p.contains(q) {
                continue;
            }
            pts[last] = q;
            let grown = Polygon::hull_of(&pts).expect("two-dimensional");
            if only_origin(&grown) && visited.insert(grown.clone()) {
                stack.push(grown);
            }
        }
    }
    let classes: HashSet<Polygon> = visited.iter().map(|p| canonical_form(p).0).collect();
    let mut out: Vec<Polygon> = classes.into_iter().collect();
    out.sort_by(class_order);
    out
}
