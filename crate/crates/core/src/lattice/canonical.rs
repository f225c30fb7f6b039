use num_integer::Integer;

use super::hull::{convex_hull, Hull};
use super::map::UnimodularMap;
use super::point::Point;
use super::polygon::Polygon;

const REFLECTION: [[i64; 2]; 2] = [[1, 0], [0, -1]];

/// The linear map in SL₂(ℤ) sending the primitive vector `e` to `(1, 0)`.
fn align_to_x_axis(e: Point) -> [[i64; 2]; 2] {
    let r = e.x.extended_gcd(&e.y);
    let (s, t) = if r.gcd < 0 { (-r.x, -r.y) } else { (r.x, r.y) };
    [[s, t], [-e.y, e.x]]
}

fn mat_mul(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    [
        [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
        [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
    ]
}

/// The `2n` normalizing maps of a polygon: one per vertex and orientation.
///
/// Each sends the chosen vertex to the origin, the following edge (in the
/// orientation) onto the positive x-axis, and the preceding vertex to a point
/// `(a, b)` with `0 ≤ a < b`. Any unimodular equivalence permutes this set.
fn normalizing_maps(poly: &Polygon) -> Vec<UnimodularMap> {
    let mut maps = Vec::with_capacity(2 * poly.num_vertices());
    for reflect in [false, true] {
        let pre = if reflect { REFLECTION } else { [[1, 0], [0, 1]] };
        let pre_map = UnimodularMap::linear(pre).expect("unimodular");
        let image = pre_map.apply_polygon(poly);
        let vs = image.vertices();
        let n = vs.len();
        for i in 0..n {
            let e = (vs[(i + 1) % n] - vs[i]).primitive();
            let a = align_to_x_axis(e);
            let prev = UnimodularMap::linear(a).unwrap().apply_linear(vs[(i + n - 1) % n] - vs[i]);
            debug_assert!(prev.y > 0);
            let k = -prev.x.div_euclid(prev.y);
            let m = mat_mul([[1, k], [0, 1]], a);
            let lin = UnimodularMap::linear(m).unwrap();
            let to_origin = UnimodularMap::translation_by(-lin.apply_linear(vs[i]));
            maps.push(to_origin.compose(&lin).compose(&pre_map));
        }
    }
    maps
}

/// Canonical representative of the unimodular equivalence class of `poly`,
/// together with a map sending `poly` onto it.
///
/// Two polygons are equivalent exactly when their canonical forms are equal.
/// The canonical polygon has the origin as a vertex and the positive x-axis
/// along its first edge.
pub fn canonical_form(poly: &Polygon) -> (Polygon, UnimodularMap) {
    let mut best: Option<(Vec<Point>, UnimodularMap)> = None;
    for map in normalizing_maps(poly) {
        let image = map.apply_polygon(poly);
        // The image starts at its (y, x)-minimal vertex, which is the origin.
        let key = image.vertices().to_vec();
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, map));
        }
    }
    let (vs, map) = best.expect("polygon has vertices");
    (Polygon::from_ccw_unchecked(vs), map)
}

pub fn is_equivalent(p: &Polygon, q: &Polygon) -> bool {
    canonical_form(p).0 == canonical_form(q).0
}

/// A unimodular map sending `p` onto `q`, if they are equivalent.
pub fn equivalence(p: &Polygon, q: &Polygon) -> Option<UnimodularMap> {
    let (cp, mp) = canonical_form(p);
    let (cq, mq) = canonical_form(q);
    (cp == cq).then(|| mq.inverse().compose(&mp))
}

/// Canonical form of a finite point set up to unimodular equivalence, as a
/// sorted point list.
pub fn canonical_point_set(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let sorted_image = |m: &UnimodularMap| {
        let mut v: Vec<Point> = pts.iter().map(|&p| m.apply(p)).collect();
        v.sort_unstable();
        v
    };
    match convex_hull(&pts) {
        Hull::Empty => vec![],
        Hull::Point(_) => vec![Point::ORIGIN],
        Hull::Segment(s) => {
            let a = align_to_x_axis(s.direction());
            let lin = UnimodularMap::linear(a).unwrap();
            [s.start, s.end]
                .into_iter()
                .map(|base| {
                    let sign = if base == s.start { 1 } else { -1 };
                    let flip = UnimodularMap::linear([[sign, 0], [0, sign]]).unwrap();
                    let m = flip.compose(&UnimodularMap::translation_by(-lin.apply_linear(base)).compose(&lin));
                    sorted_image(&m)
                })
                .min()
                .unwrap()
        }
        Hull::Polygon(poly) => normalizing_maps(&poly).iter().map(sorted_image).min().unwrap(),
    }
}
