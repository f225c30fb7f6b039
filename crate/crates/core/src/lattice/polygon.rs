use std::fmt;

use serde::{Deserialize, Serialize};

use super::hull::{convex_hull, Hull};
use super::point::{cross, Point};
use crate::error::{Error, Result};

/// A lattice segment with distinct endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Result<Self> {
        if start == end {
            return Err(Error::Precondition("segment endpoints must be distinct".into()));
        }
        Ok(Segment { start, end })
    }

    /// Endpoints in increasing lexicographic order, so that equal segments compare equal.
    pub fn normalized(self) -> Segment {
        if self.start <= self.end {
            self
        } else {
            Segment { start: self.end, end: self.start }
        }
    }

    /// `ℓ(τ)`: the number of lattice points on the segment minus one.
    pub fn lattice_length(&self) -> i64 {
        (self.end - self.start).content()
    }

    pub fn direction(&self) -> Point {
        (self.end - self.start).primitive()
    }

    /// All lattice points from `start` to `end`, in order.
    pub fn lattice_points(&self) -> Vec<Point> {
        let step = self.direction();
        (0..=self.lattice_length()).map(|k| self.start + step * k).collect()
    }

    pub fn contains(&self, p: Point) -> bool {
        if cross(self.end - self.start, p - self.start) != 0 {
            return false;
        }
        let t = (p - self.start).dot(self.end - self.start);
        t >= 0 && t <= (self.end - self.start).dot(self.end - self.start)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.start, self.end)
    }
}

/// Supporting inequality `normal · X ≤ offset` of an edge, with a primitive outward normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Point,
    pub offset: i128,
    pub edge: Segment,
}

impl Facet {
    /// Lattice distance of `p` beyond the facet line; negative inside.
    pub fn excess(&self, p: Point) -> i128 {
        self.normal.dot(p) - self.offset
    }
}

/// A two-dimensional convex lattice polygon.
///
/// Vertices are stored counterclockwise with no three consecutive collinear,
/// starting from the vertex that is smallest in `(y, x)` order. Two polygons
/// compare equal exactly when they have the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PolygonRepr", into = "PolygonRepr")]
pub struct Polygon {
    vertices: Vec<Point>,
}

/// Wire format `{"vertices": [[x, y], ...]}`; vertices may come in any order.
#[derive(Serialize, Deserialize)]
struct PolygonRepr {
    vertices: Vec<Point>,
}

impl TryFrom<PolygonRepr> for Polygon {
    type Error = Error;
    fn try_from(r: PolygonRepr) -> Result<Self> {
        Polygon::new(&r.vertices)
    }
}

impl From<Polygon> for PolygonRepr {
    fn from(p: Polygon) -> Self {
        PolygonRepr { vertices: p.vertices }
    }
}

impl Polygon {
    /// Builds a polygon from its vertices, given in any order or orientation.
    ///
    /// Every input point must be a vertex of the convex hull, and the hull
    /// must be two-dimensional.
    pub fn new(points: &[Point]) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::DuplicateVertex(*p));
            }
        }
        match convex_hull(points) {
            Hull::Polygon(poly) => {
                if let Some(p) = points.iter().find(|p| !poly.vertices.contains(p)) {
                    return Err(Error::NotAVertex(*p));
                }
                Ok(poly)
            }
            _ => Err(Error::Degenerate),
        }
    }

    /// Convex hull of `points` if it is two-dimensional.
    pub fn hull_of(points: &[Point]) -> Option<Self> {
        convex_hull(points).into_polygon()
    }

    pub(crate) fn from_ccw_unchecked(mut vertices: Vec<Point>) -> Self {
        let start = (0..vertices.len())
            .min_by_key(|&i| (vertices[i].y, vertices[i].x))
            .expect("nonempty vertex list");
        vertices.rotate_left(start);
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Edges in counterclockwise order; edge `i` starts at vertex `i`.
    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Segment { start: self.vertices[i], end: self.vertices[(i + 1) % n] })
    }

    pub fn facets(&self) -> Vec<Facet> {
        self.edges()
            .map(|edge| {
                let d = edge.end - edge.start;
                let normal = Point::new(d.y, -d.x).primitive();
                Facet { normal, offset: normal.dot(edge.start), edge }
            })
            .collect()
    }

    /// Twice the Euclidean area (shoelace), always a positive integer.
    pub fn twice_area(&self) -> i128 {
        let n = self.vertices.len();
        (0..n).map(|i| cross(self.vertices[i], self.vertices[(i + 1) % n])).sum()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.edges().all(|e| cross(e.end - e.start, p - e.start) >= 0)
    }

    pub fn contains_strictly(&self, p: Point) -> bool {
        self.edges().all(|e| cross(e.end - e.start, p - e.start) > 0)
    }

    pub fn contains_polygon(&self, other: &Polygon) -> bool {
        other.vertices.iter().all(|&v| self.contains(v))
    }

    /// Inclusive bounding box `(min, max)`.
    pub fn bounding_box(&self) -> (Point, Point) {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        (
            Point::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            Point::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    fn scan(&self, strict: bool) -> Vec<Point> {
        let facets = self.facets();
        let (lo, hi) = self.bounding_box();
        let slack = if strict { 1 } else { 0 };
        let mut out = Vec::new();
        for y in lo.y..=hi.y {
            let mut xmin = lo.x as i128;
            let mut xmax = hi.x as i128;
            let mut empty = false;
            for f in &facets {
                // normal.x * x <= offset - normal.y * y - slack
                let rhs = f.offset - f.normal.y as i128 * y as i128 - slack;
                let a = f.normal.x as i128;
                if a > 0 {
                    xmax = xmax.min(rhs.div_euclid(a));
                } else if a < 0 {
                    xmin = xmin.max(-(rhs.div_euclid(-a)));
                } else if rhs < 0 {
                    empty = true;
                    break;
                }
            }
            if empty {
                continue;
            }
            for x in xmin..=xmax {
                out.push(Point::new(x as i64, y));
            }
        }
        out
    }

    /// All lattice points of the closed polygon, sorted by `(y, x)`.
    pub fn lattice_points(&self) -> Vec<Point> {
        self.scan(false)
    }

    /// Lattice points strictly inside, sorted by `(y, x)`.
    pub fn interior_lattice_points(&self) -> Vec<Point> {
        self.scan(true)
    }

    pub fn boundary_lattice_points(&self) -> Vec<Point> {
        self.edges().flat_map(|e| {
            let mut pts = e.lattice_points();
            pts.pop();
            pts
        })
        .collect()
    }

    /// Number of lattice points, from Pick's theorem.
    pub fn lattice_point_count(&self) -> usize {
        self.genus() + self.boundary_count()
    }

    /// Number of interior lattice points, from Pick's theorem `2A = 2g + r − 2`.
    pub fn genus(&self) -> usize {
        ((self.twice_area() - self.boundary_count() as i128 + 2) / 2) as usize
    }

    /// `r`: number of lattice points on the boundary, the sum of edge lattice lengths.
    pub fn boundary_count(&self) -> usize {
        self.edges().map(|e| e.lattice_length() as usize).sum()
    }

    pub fn translate(&self, t: Point) -> Polygon {
        Polygon::from_ccw_unchecked(self.vertices.iter().map(|&v| v + t).collect())
    }

}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::new(&pts.iter().map(|&p| p.into()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn counts_for_small_triangles() {
        let t = poly(&[(0, 0), (3, 0), (0, 2)]);
        assert_eq!(t.lattice_point_count(), 7);
        assert_eq!(t.interior_lattice_points(), vec![Point::new(1, 1)]);
        let t = poly(&[(0, 0), (6, 0), (0, 2)]);
        assert_eq!(t.lattice_point_count(), 12);
        assert_eq!(t.boundary_count(), 10);
        assert_eq!(t.genus(), 2);
        assert_eq!(poly(&[(0, 0), (2, 0), (0, 2)]).genus(), 0);
        assert_eq!(poly(&[(0, 0), (4, 0), (0, 4)]).boundary_count(), 12);
        assert_eq!(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).boundary_count(), 4);
    }

    #[test]
    fn hexagon_of_genus_seven() {
        let h = poly(&[(2, 0), (0, 2), (-2, 2), (-2, 0), (0, -2), (2, -2)]);
        assert_eq!(h.lattice_point_count(), 19);
        assert_eq!(h.lattice_points().len(), 19);
        assert_eq!(h.genus(), 7);
        assert_eq!(h.interior_lattice_points().len(), 7);
    }

    #[test]
    fn edge_lengths() {
        let s = |a: (i64, i64), b: (i64, i64)| Segment::new(a.into(), b.into()).unwrap().lattice_length();
        assert_eq!(s((0, 0), (6, 0)), 6);
        assert_eq!(s((6, 0), (0, 2)), 2);
        assert_eq!(s((5, 0), (0, 2)), 1);
        assert!(Segment::new(Point::ORIGIN, Point::ORIGIN).is_err());
    }

    #[test]
    fn input_validation() {
        let pts: Vec<Point> = [(0, 0), (1, 1), (2, 2)].iter().map(|&p| p.into()).collect();
        assert_eq!(Polygon::new(&pts), Err(Error::Degenerate));
        let pts: Vec<Point> = [(0, 0), (2, 0), (1, 0), (0, 2)].iter().map(|&p| p.into()).collect();
        assert_eq!(Polygon::new(&pts), Err(Error::NotAVertex(Point::new(1, 0))));
        let pts: Vec<Point> = [(0, 0), (2, 0), (0, 2), (0, 0)].iter().map(|&p| p.into()).collect();
        assert_eq!(Polygon::new(&pts), Err(Error::DuplicateVertex(Point::ORIGIN)));
        // clockwise input is normalized
        let cw = poly(&[(0, 2), (2, 0), (0, 0)]);
        assert_eq!(cw.vertices(), &[Point::new(0, 0), Point::new(2, 0), Point::new(0, 2)]);
        assert!(cw.twice_area() > 0);
    }

    #[test]
    fn facets_are_outward_and_primitive() {
        let t = poly(&[(0, 0), (6, 0), (0, 2)]);
        for f in t.facets() {
            assert!(f.normal.is_primitive());
            for p in t.lattice_points() {
                assert!(f.excess(p) <= 0);
            }
        }
        let hyp = t.facets().into_iter().find(|f| f.normal == Point::new(1, 3)).unwrap();
        assert_eq!(hyp.offset, 6);
    }
}
