use crate::error::{Error, Result};
use crate::lattice::{convex_hull, intersect_halfplanes, lattice_points_within, line_intersection, HalfPlane, Hull, Point, Polygon, RatPoint};

/// Convex hull of the interior lattice points of a polygon.
pub type InteriorHull = Hull;

pub fn interior_hull(poly: &Polygon) -> InteriorHull {
    convex_hull(&poly.interior_lattice_points())
}

/// Result of moving every facet of a polygon outward by one lattice unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relaxation {
    Polygon(Polygon),
    /// The relaxed half-planes meet in at least one non-lattice vertex.
    NotLattice,
}

impl Relaxation {
    pub fn into_polygon(self) -> Option<Polygon> {
        match self {
            Relaxation::Polygon(p) => Some(p),
            Relaxation::NotLattice => None,
        }
    }
}

fn relaxed_planes(poly: &Polygon, extra: impl Fn(usize) -> i128) -> Vec<HalfPlane> {
    poly.facets()
        .iter()
        .enumerate()
        .map(|(i, f)| HalfPlane { normal: f.normal, offset: f.offset + extra(i) })
        .collect()
}

/// The intersection of the relaxed inequalities `n·X ≤ b + 1` over all facets.
pub fn relax(poly: &Polygon) -> Relaxation {
    let vertices = intersect_halfplanes(&relaxed_planes(poly, |_| 1));
    match vertices.iter().map(|v| v.to_lattice()).collect::<Option<Vec<Point>>>() {
        Some(vs) => Relaxation::Polygon(Polygon::from_ccw_unchecked(vs)),
        None => Relaxation::NotLattice,
    }
}

/// The intersection of the two relaxed facet lines adjacent to the vertex `p`.
pub fn relaxed_vertex(poly: &Polygon, p: Point) -> Result<RatPoint> {
    let vs = poly.vertices();
    let i = vs.iter().position(|&v| v == p).ok_or(Error::NotAVertex(p))?;
    let n = vs.len();
    let planes = relaxed_planes(poly, |_| 1);
    Ok(line_intersection(&planes[(i + n - 1) % n], &planes[i]).expect("adjacent edges are not parallel"))
}

/// Whether no lattice polygon properly containing `poly` has the same
/// interior lattice points.
///
/// With a two-dimensional interior hull this is the fixed-point test
/// `poly = relax(interior_hull(poly))`. Otherwise every single-point
/// augmentation is tried: if a larger polygon with the same interior points
/// exists, then so does one of the form `conv(poly ∪ {q})`. Such `q` lies
/// within lattice distance `(4g + 5 − 2·area)/ℓ(τ)` of each facet `τ`, since
/// the augmented polygon has at most `2g + 7` boundary points.
pub fn is_maximal(poly: &Polygon) -> Result<bool> {
    let g = poly.genus();
    if g == 0 {
        return Err(Error::Precondition("maximality is only defined for polygons with interior lattice points".into()));
    }
    if let Hull::Polygon(h) = interior_hull(poly) {
        return Ok(relax(&h) == Relaxation::Polygon(poly.clone()));
    }
    let budget = 4 * g as i128 + 5 - poly.twice_area();
    if budget <= 0 {
        return Ok(true);
    }
    Ok(augmentation_candidates(poly, budget).into_iter().all(|q| {
        let mut pts = poly.vertices().to_vec();
        pts.push(q);
        Polygon::hull_of(&pts).expect("two-dimensional").genus() != g
    }))
}

/// Lattice points outside `poly` in the region where a single-point augmentation
/// adds at most `budget` to twice the area per facet.
fn augmentation_candidates(poly: &Polygon, budget: i128) -> Vec<Point> {
    let facets = poly.facets();
    let planes = relaxed_planes(poly, |i| budget / facets[i].edge.lattice_length() as i128);
    lattice_points_within(&planes).into_iter().filter(|&q| !poly.contains(q)).collect()
}
