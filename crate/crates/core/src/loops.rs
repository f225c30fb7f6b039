//! Legal moves and legal loops: cyclic sequences of lattice vectors in which
//! consecutive pairs span empty triangles with the origin.

use serde::{Deserialize, Serialize};

use crate::analysis::{interior_hull, relax, relaxed_vertex, Relaxation};
use crate::error::{Error, Result};
use crate::lattice::{cross, Hull, Point, Polygon};

/// A pair `(v, w)` such that the only nonzero lattice points of `conv{0, v, w}`
/// lie on the segment from `v` to `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegalMove {
    pub v: Point,
    pub w: Point,
}

impl LegalMove {
    /// Validates via `gcd(v) = gcd(w) = 1` and `|det(v, w)| = gcd(w − v)`.
    pub fn new(v: Point, w: Point) -> Result<Self> {
        let det = cross(v, w);
        if det == 0 || !v.is_primitive() || !w.is_primitive() || det.abs() != (w - v).content() as i128 {
            return Err(Error::IllegalMove(v, w));
        }
        Ok(LegalMove { v, w })
    }

    /// Signed length `det(v, w)`; its absolute value is the lattice length of the segment.
    pub fn length(&self) -> i64 {
        cross(self.v, self.w) as i64
    }
}

pub fn move_length(v: Point, w: Point) -> Result<i64> {
    LegalMove::new(v, w).map(|m| m.length())
}

/// A cyclic sequence of at least three vectors, consecutive pairs (cyclically)
/// forming legal moves, with no three consecutive vectors collinear.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LoopRepr", into = "LoopRepr")]
pub struct LegalLoop {
    vectors: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct LoopRepr {
    vectors: Vec<Point>,
}

impl TryFrom<LoopRepr> for LegalLoop {
    type Error = Error;
    fn try_from(r: LoopRepr) -> Result<Self> {
        LegalLoop::new(r.vectors)
    }
}

impl From<LegalLoop> for LoopRepr {
    fn from(l: LegalLoop) -> Self {
        LoopRepr { vectors: l.vectors }
    }
}

/// `ℓ(P)`, `ℓ(P∨)` and the winding number, with whether `ℓ(P) + ℓ(P∨) = 12·w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwelveCheck {
    pub loop_length: i64,
    pub dual_length: i64,
    pub winding_number: i64,
    pub holds: bool,
}

impl LegalLoop {
    pub fn new(vectors: Vec<Point>) -> Result<Self> {
        let n = vectors.len();
        if n < 3 {
            return Err(Error::InvalidLoop(format!("need at least 3 vectors, got {n}")));
        }
        for i in 0..n {
            let (a, b, c) = (vectors[i], vectors[(i + 1) % n], vectors[(i + 2) % n]);
            LegalMove::new(a, b)?;
            if cross(b - a, c - b) == 0 {
                return Err(Error::InvalidLoop(format!("{a}, {b}, {c} are collinear")));
            }
        }
        Ok(LegalLoop { vectors })
    }

    pub fn vectors(&self) -> &[Point] {
        &self.vectors
    }

    pub fn moves(&self) -> impl Iterator<Item = LegalMove> + '_ {
        let n = self.vectors.len();
        (0..n).map(move |i| LegalMove { v: self.vectors[i], w: self.vectors[(i + 1) % n] })
    }

    /// Sum of the move lengths.
    pub fn length(&self) -> i64 {
        self.moves().map(|m| m.length()).sum()
    }

    /// The loop of primitive directions `(v_{i+1} − v_i) / ℓ(v_i, v_{i+1})`.
    pub fn dual(&self) -> Result<LegalLoop> {
        let vectors = self
            .moves()
            .map(|m| {
                let l = m.length();
                let d = m.w - m.v;
                Point::new(d.x / l, d.y / l)
            })
            .collect();
        LegalLoop::new(vectors)
    }

    /// Winding number of the closed polygonal path around the origin.
    ///
    /// Counts signed crossings of the positive x-axis with half-open edges, so
    /// vertices on the axis are counted once.
    pub fn winding_number(&self) -> i64 {
        let mut wn = 0;
        for m in self.moves() {
            let (a, b) = (m.v, m.w);
            let side = cross(b - a, -a);
            if a.y <= 0 && b.y > 0 && side > 0 {
                wn += 1;
            } else if a.y > 0 && b.y <= 0 && side < 0 {
                wn -= 1;
            }
        }
        wn
    }

    pub fn verify_twelve(&self) -> Result<TwelveCheck> {
        let loop_length = self.length();
        let dual_length = self.dual()?.length();
        let winding_number = self.winding_number();
        Ok(TwelveCheck { loop_length, dual_length, winding_number, holds: loop_length + dual_length == 12 * winding_number })
    }

    /// The loop with every vector negated.
    pub fn rotated_half_turn(&self) -> LegalLoop {
        LegalLoop { vectors: self.vectors.iter().map(|&v| -v).collect() }
    }

    /// Whether `other` lists the same vectors up to a cyclic shift.
    pub fn is_cyclic_shift_of(&self, other: &LegalLoop) -> bool {
        let n = self.vectors.len();
        n == other.vectors.len() && (0..n).any(|s| (0..n).all(|i| self.vectors[(i + s) % n] == other.vectors[i]))
    }
}

/// The loop `q_i = p_i⁽⁻¹⁾ − p_i` over the counterclockwise vertices `p_i` of
/// the interior hull, for a maximal polygon with two-dimensional interior hull.
///
/// An interior-hull edge that is pushed out by one vector at both ends gives
/// `q_i = q_{i+1}`, a move of length zero; such repeats are merged, as is the
/// middle of three collinear vectors. Neither changes the length or the winding.
pub fn loop_of_polytope(poly: &Polygon) -> Result<LegalLoop> {
    let hull = match interior_hull(poly) {
        Hull::Polygon(h) => h,
        _ => return Err(Error::Precondition("interior hull is not two-dimensional".into())),
    };
    if relax(&hull) != Relaxation::Polygon(poly.clone()) {
        return Err(Error::Precondition("polygon is not maximal".into()));
    }
    let vectors = hull
        .vertices()
        .iter()
        .map(|&p| {
            let q = relaxed_vertex(&hull, p)?.to_lattice().expect("relaxation is a lattice polygon");
            Ok(q - p)
        })
        .collect::<Result<Vec<_>>>()?;
    LegalLoop::new(simplify_cycle(vectors))
}

fn simplify_cycle(mut v: Vec<Point>) -> Vec<Point> {
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let redundant = (0..n).find(|&i| {
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            b == c || cross(b - a, c - b) == 0
        });
        match redundant {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}
