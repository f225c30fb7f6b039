use serde::{Deserialize, Serialize};

use super::columns::column_vectors;
use super::relax::{interior_hull, is_maximal};
use crate::error::{Error, Result};
use crate::lattice::{canonical_point_set, Hull, Point, Polygon};

/// `m(Δ) = #(Δ ∩ ℤ²) − c(Δ) − 3`.
pub fn m_bound(poly: &Polygon) -> i64 {
    poly.lattice_point_count() as i64 - column_vectors(poly).len() as i64 - 3
}

/// Dimension of the automorphism group of the toric surface: `c(Δ) + 2`.
pub fn dim_aut(poly: &Polygon) -> i64 {
    column_vectors(poly).len() as i64 + 2
}

/// Whether the interior lattice points are collinear. Defined for genus ≥ 2.
pub fn is_hyperelliptic_polytope(poly: &Polygon) -> Result<bool> {
    let g = poly.genus();
    if g <= 1 {
        return Err(Error::NotApplicable(format!("hyperellipticity needs genus at least 2, got {g}")));
    }
    Ok(!matches!(interior_hull(poly), Hull::Polygon(_)))
}

/// `#(Δ ∩ ℤ²) − 1 − dim Aut`, the moduli dimension of a maximal
/// nonhyperelliptic polygon.
pub fn koelman_dim(poly: &Polygon) -> Result<i64> {
    if is_hyperelliptic_polytope(poly)? {
        return Err(Error::NotApplicable("polygon is hyperelliptic".into()));
    }
    if !is_maximal(poly)? {
        return Err(Error::NotApplicable("polygon is not maximal".into()));
    }
    Ok(poly.lattice_point_count() as i64 - 1 - dim_aut(poly))
}

/// The three configurations of four non-collinear interior lattice points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arrangement {
    /// The unit square.
    A,
    /// Three collinear points plus one adjacent.
    B,
    /// A triangle with one interior point.
    C,
}

impl Arrangement {
    pub fn reference_points(self) -> [Point; 4] {
        let p = Point::new;
        match self {
            Arrangement::A => [p(0, 0), p(1, 0), p(0, 1), p(1, 1)],
            Arrangement::B => [p(0, 0), p(1, 0), p(2, 0), p(0, 1)],
            Arrangement::C => [p(0, 1), p(1, 1), p(1, 2), p(2, 0)],
        }
    }
}

/// Which configuration the interior points of a nonhyperelliptic genus-4 polygon form.
pub fn classify_genus4_hull(poly: &Polygon) -> Result<Arrangement> {
    let g = poly.genus();
    if g != 4 {
        return Err(Error::Precondition(format!("expected genus 4, got {g}")));
    }
    if is_hyperelliptic_polytope(poly)? {
        return Err(Error::NotApplicable("interior points are collinear".into()));
    }
    let form = canonical_point_set(&poly.interior_lattice_points());
    [Arrangement::A, Arrangement::B, Arrangement::C]
        .into_iter()
        .find(|a| canonical_point_set(&a.reference_points()) == form)
        .ok_or_else(|| Error::Precondition("interior points match no reference arrangement".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(i64, i64)]) -> Polygon {
        Polygon::new(&v.iter().map(|&p| p.into()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn golden_statistics() {
        let hexagon = poly(&[(2, 0), (0, 2), (-2, 2), (-2, 0), (0, -2), (2, -2)]);
        assert_eq!(m_bound(&hexagon), 16);
        assert_eq!(koelman_dim(&hexagon).unwrap(), 16);
        assert_eq!(dim_aut(&poly(&[(0, 0), (0, 3), (4, 3), (4, 0)])), 6);
        assert_eq!(dim_aut(&poly(&[(0, 0), (5, 0), (0, 5)])), 8);
        assert_eq!(m_bound(&poly(&[(0, 0), (6, 0), (0, 2)])), 3);
        assert_eq!(m_bound(&poly(&[(0, 0), (5, 0), (0, 2)])), 3);
        let pruned = poly(&[(0, 0), (3, 0), (3, 2), (2, 3), (0, 3)]);
        assert_eq!(m_bound(&pruned), 10);
        assert!(koelman_dim(&pruned).is_err());
        assert_eq!(koelman_dim(&poly(&[(0, 0), (3, 0), (3, 3), (0, 3)])).unwrap(), 9);
    }

    #[test]
    fn koelman_of_multiples_of_sigma() {
        for d in 4..=8i64 {
            let p = poly(&[(0, 0), (d, 0), (0, d)]);
            let g = p.genus() as i64;
            assert_eq!(koelman_dim(&p).unwrap(), (d + 1) * (d + 2) / 2 - 9);
            assert_eq!(koelman_dim(&p).unwrap(), g + 3 * d - 9);
        }
    }

    #[test]
    fn hyperellipticity() {
        assert!(is_hyperelliptic_polytope(&poly(&[(0, 0), (10, 0), (0, 2)])).unwrap());
        assert!(!is_hyperelliptic_polytope(&poly(&[(0, 0), (4, 0), (0, 4)])).unwrap());
        assert!(!is_hyperelliptic_polytope(&poly(&[(0, 0), (5, 0), (0, 5)])).unwrap());
        assert!(is_hyperelliptic_polytope(&poly(&[(0, 0), (3, 0), (0, 3)])).is_err());
        assert!(koelman_dim(&poly(&[(0, 0), (10, 0), (0, 2)])).is_err());
        assert!(koelman_dim(&poly(&[(1, 0), (4, 0), (0, 4), (0, 1)])).is_err());
    }

    #[test]
    fn genus_four_arrangements() {
        assert_eq!(classify_genus4_hull(&poly(&[(0, 0), (3, 0), (3, 2), (2, 3), (0, 3)])).unwrap(), Arrangement::A);
        assert_eq!(classify_genus4_hull(&poly(&[(0, 0), (6, 0), (0, 3)])).unwrap(), Arrangement::B);
        // Relaxation of the arrangement (c) hull has exactly those interior points.
        let c = poly(&[(-1, 1), (3, -1), (1, 3)]);
        assert_eq!(c.genus(), 4);
        assert_eq!(classify_genus4_hull(&c).unwrap(), Arrangement::C);
    }
}
