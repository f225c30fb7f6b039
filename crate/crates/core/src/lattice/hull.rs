use serde::{Deserialize, Serialize};

use super::point::{cross, Point};
use super::polygon::{Polygon, Segment};

/// Convex hull of a finite point set, classified by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Hull {
    Empty,
    Point(Point),
    Segment(Segment),
    Polygon(Polygon),
}

impl Hull {
    pub fn polygon(&self) -> Option<&Polygon> {
        match self {
            Hull::Polygon(p) => Some(p),
            _ => None,
        }
    }

    pub fn into_polygon(self) -> Option<Polygon> {
        match self {
            Hull::Polygon(p) => Some(p),
            _ => None,
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        match self {
            Hull::Empty => None,
            Hull::Point(_) => Some(0),
            Hull::Segment(_) => Some(1),
            Hull::Polygon(_) => Some(2),
        }
    }

    /// Lattice points of the hull (closed).
    pub fn lattice_points(&self) -> Vec<Point> {
        match self {
            Hull::Empty => vec![],
            Hull::Point(p) => vec![*p],
            Hull::Segment(s) => s.lattice_points(),
            Hull::Polygon(p) => p.lattice_points(),
        }
    }

    /// Number of lattice points on the relative boundary; every lattice point of a
    /// point or segment counts as boundary.
    pub fn boundary_count(&self) -> usize {
        match self {
            Hull::Polygon(p) => p.boundary_count(),
            other => other.lattice_points().len(),
        }
    }

    /// Number of lattice points in the relative interior of a polygon; zero otherwise.
    pub fn interior_count(&self) -> usize {
        match self {
            Hull::Polygon(p) => p.genus(),
            _ => 0,
        }
    }
}

impl From<Polygon> for Hull {
    fn from(p: Polygon) -> Self {
        Hull::Polygon(p)
    }
}

/// Convex hull by Andrew's monotone chain, dropping collinear boundary points.
pub fn convex_hull(points: &[Point]) -> Hull {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    match pts.len() {
        0 => return Hull::Empty,
        1 => return Hull::Point(pts[0]),
        _ => {}
    }
    let first = pts[0];
    let last = *pts.last().unwrap();
    if pts.iter().all(|&p| cross(last - first, p - first) == 0) {
        return Hull::Segment(Segment { start: first, end: last });
    }
    let mut chain: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for &p in pts.iter() {
        while chain.len() >= 2 && cross(chain[chain.len() - 1] - chain[chain.len() - 2], p - chain[chain.len() - 2]) <= 0 {
            chain.pop();
        }
        chain.push(p);
    }
    let lower = chain.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while chain.len() >= lower && cross(chain[chain.len() - 1] - chain[chain.len() - 2], p - chain[chain.len() - 2]) <= 0 {
            chain.pop();
        }
        chain.push(p);
    }
    chain.pop();
    Hull::Polygon(Polygon::from_ccw_unchecked(chain))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn hull_classification() {
        let h = convex_hull(&pts(&[(0, 0), (2, 0), (0, 2), (1, 1)]));
        assert_eq!(h.polygon().unwrap().vertices(), &pts(&[(0, 0), (2, 0), (0, 2)])[..]);
        let h = convex_hull(&pts(&[(0, 0), (3, 3)]));
        assert_eq!(h, Hull::Segment(Segment { start: Point::new(0, 0), end: Point::new(3, 3) }));
        assert_eq!(convex_hull(&pts(&[(5, 7)])), Hull::Point(Point::new(5, 7)));
        assert_eq!(convex_hull(&[]), Hull::Empty);
    }

    #[test]
    fn collinear_points_on_edges_are_dropped() {
        let h = convex_hull(&pts(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 1), (0, 2), (0, 1)]));
        assert_eq!(h.polygon().unwrap().num_vertices(), 4);
        let seg = convex_hull(&pts(&[(0, 0), (1, 1), (2, 2), (3, 3)]));
        assert_eq!(seg.lattice_points().len(), 4);
    }
}
