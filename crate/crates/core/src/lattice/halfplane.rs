use num_rational::Ratio;

use super::point::Point;

pub type Rational = Ratio<i128>;

/// The closed half-plane `normal · X ≤ offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub normal: Point,
    pub offset: i128,
}

impl HalfPlane {
    fn satisfied_by(&self, p: &RatPoint) -> bool {
        Rational::from(self.normal.x as i128) * p.x + Rational::from(self.normal.y as i128) * p.y
            <= Rational::from(self.offset)
    }
}

/// A point with rational coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RatPoint {
    pub fn to_lattice(&self) -> Option<Point> {
        (self.x.is_integer() && self.y.is_integer()).then(|| Point::new(self.x.to_integer() as i64, self.y.to_integer() as i64))
    }
}

impl From<Point> for RatPoint {
    fn from(p: Point) -> Self {
        RatPoint { x: Rational::from(p.x as i128), y: Rational::from(p.y as i128) }
    }
}

/// Intersection point of the boundary lines of two half-planes, if not parallel.
pub fn line_intersection(a: &HalfPlane, b: &HalfPlane) -> Option<RatPoint> {
    let det = a.normal.x as i128 * b.normal.y as i128 - a.normal.y as i128 * b.normal.x as i128;
    if det == 0 {
        return None;
    }
    let x = a.offset * b.normal.y as i128 - b.offset * a.normal.y as i128;
    let y = a.normal.x as i128 * b.offset - b.normal.x as i128 * a.offset;
    Some(RatPoint { x: Rational::new(x, det), y: Rational::new(y, det) })
}

/// Vertices, in counterclockwise order, of the intersection of half-planes.
///
/// Intended for bounded intersections; returns an empty list when the
/// intersection has no vertex.
pub fn intersect_halfplanes(planes: &[HalfPlane]) -> Vec<RatPoint> {
    let mut pts: Vec<RatPoint> = Vec::new();
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            if let Some(p) = line_intersection(&planes[i], &planes[j]) {
                if planes.iter().all(|h| h.satisfied_by(&p)) {
                    pts.push(p);
                }
            }
        }
    }
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let n = Rational::from(pts.len() as i128);
    let cx = pts.iter().map(|p| p.x).sum::<Rational>() / n;
    let cy = pts.iter().map(|p| p.y).sum::<Rational>() / n;
    let zero = Rational::from(0);
    // Angular order about the centroid, starting from the negative y-axis side.
    let half = |p: &RatPoint| {
        let (dx, dy) = (p.x - cx, p.y - cy);
        if dy < zero || (dy == zero && dx > zero) { 0 } else { 1 }
    };
    pts.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let c = (a.x - cx) * (b.y - cy) - (a.y - cy) * (b.x - cx);
            zero.cmp(&c)
        })
    });
    pts
}

/// Lattice points satisfying every half-plane, sorted by `(y, x)`. The
/// intersection must be bounded.
pub fn lattice_points_within(planes: &[HalfPlane]) -> Vec<Point> {
    let region = intersect_halfplanes(planes);
    if region.is_empty() {
        return vec![];
    }
    let xs = region.iter().map(|p| p.x);
    let ys = region.iter().map(|p| p.y);
    let (x0, x1) = (xs.clone().min().unwrap().floor().to_integer(), xs.max().unwrap().ceil().to_integer());
    let (y0, y1) = (ys.clone().min().unwrap().floor().to_integer(), ys.max().unwrap().ceil().to_integer());
    let mut out = Vec::new();
    for y in y0..=y1 {
        for x in x0..=x1 {
            let q = Point::new(x as i64, y as i64);
            if planes.iter().all(|h| h.normal.dot(q) <= h.offset) {
                out.push(q);
            }
        }
    }
    out
}
