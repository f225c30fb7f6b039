use serde::{Deserialize, Serialize};

use super::point::Point;
use super::polygon::Polygon;
use crate::error::{Error, Result};

/// Unimodular affine map `X ↦ M·X + t` with `M ∈ GL₂(ℤ)`.
///
/// `matrix` is row-major: `[[a, b], [c, d]]` sends `(x, y)` to `(a·x + b·y, c·x + d·y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct UnimodularMap {
    matrix: [[i64; 2]; 2],
    translation: Point,
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    matrix: [[i64; 2]; 2],
    translation: Point,
}

impl TryFrom<MapRepr> for UnimodularMap {
    type Error = Error;
    fn try_from(r: MapRepr) -> Result<Self> {
        UnimodularMap::new(r.matrix, r.translation)
    }
}

impl From<UnimodularMap> for MapRepr {
    fn from(m: UnimodularMap) -> Self {
        MapRepr { matrix: m.matrix, translation: m.translation }
    }
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap { matrix: [[1, 0], [0, 1]], translation: Point::ORIGIN };

    /// Returns `Error::NotUnimodular` if `det M ≠ ±1`.
    pub fn new(matrix: [[i64; 2]; 2], translation: Point) -> Result<Self> {
        let det = matrix[0][0] as i128 * matrix[1][1] as i128 - matrix[0][1] as i128 * matrix[1][0] as i128;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularMap { matrix, translation })
    }

    pub fn linear(matrix: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(matrix, Point::ORIGIN)
    }

    pub fn translation_by(t: Point) -> Self {
        UnimodularMap { matrix: [[1, 0], [0, 1]], translation: t }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn translation(&self) -> Point {
        self.translation
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    /// Image of a vector under the linear part only.
    pub fn apply_linear(&self, v: Point) -> Point {
        let [[a, b], [c, d]] = self.matrix;
        Point::new(a * v.x + b * v.y, c * v.x + d * v.y)
    }

    pub fn apply(&self, p: Point) -> Point {
        self.apply_linear(p) + self.translation
    }

    pub fn apply_polygon(&self, poly: &Polygon) -> Polygon {
        let mut vs: Vec<Point> = poly.vertices().iter().map(|&v| self.apply(v)).collect();
        if self.det() < 0 {
            vs.reverse();
        }
        Polygon::from_ccw_unchecked(vs)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let [[a, b], [c, d]] = self.matrix;
        let [[e, f], [g, h]] = other.matrix;
        UnimodularMap {
            matrix: [[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]],
            translation: self.apply(other.translation),
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let [[a, b], [c, d]] = self.matrix;
        let det = self.det();
        let inv = [[d * det, -b * det], [-c * det, a * det]];
        let lin = UnimodularMap { matrix: inv, translation: Point::ORIGIN };
        UnimodularMap { matrix: inv, translation: -lin.apply_linear(self.translation) }
    }
}
