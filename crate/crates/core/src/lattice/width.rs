use super::point::{cross, Point};
use super::polygon::Polygon;

fn width_in(poly: &Polygon, u: Point) -> i128 {
    let vals = poly.vertices().iter().map(|&v| u.dot(v));
    vals.clone().max().unwrap() - vals.min().unwrap()
}

/// Lattice width of `poly` with a primitive direction attaining it.
///
/// The direction is normalized so that its first nonzero coordinate is
/// positive; among ties the lexicographically smallest is returned.
pub fn lattice_width(poly: &Polygon) -> (i64, Point) {
    let mut best = (width_in(poly, Point::new(0, 1)), Point::new(0, 1));
    let wx = width_in(poly, Point::new(1, 0));
    if wx <= best.0 {
        best = (wx, Point::new(1, 0));
    }
    // A direction u of width w satisfies |u·e| ≤ w for every edge vector e, so
    // it is determined by its values on two independent edges at one vertex.
    let vs = poly.vertices();
    let e1 = vs[1] - vs[0];
    let e2 = vs[vs.len() - 1] - vs[0];
    let det = cross(e1, e2);
    let bound = best.0 as i64;
    for a in -bound..=bound {
        for b in -bound..=bound {
            // Solve u·e1 = a, u·e2 = b.
            let nx = a as i128 * e2.y as i128 - b as i128 * e1.y as i128;
            let ny = b as i128 * e1.x as i128 - a as i128 * e2.x as i128;
            if nx % det != 0 || ny % det != 0 {
                continue;
            }
            let mut u = Point::new((nx / det) as i64, (ny / det) as i64);
            if u.is_zero() || !u.is_primitive() {
                continue;
            }
            if u.x < 0 || (u.x == 0 && u.y < 0) {
                u = -u;
            }
            let w = width_in(poly, u);
            if (w, u) < best {
                best = (w, u);
            }
        }
    }
    (best.0 as i64, best.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(i64, i64)]) -> Polygon {
        Polygon::new(&v.iter().map(|&p| p.into()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn widths() {
        assert_eq!(lattice_width(&poly(&[(0, 0), (1, 0), (0, 1)])).0, 1);
        assert_eq!(lattice_width(&poly(&[(0, 0), (3, 0), (0, 3)])).0, 3);
        assert_eq!(lattice_width(&poly(&[(0, 0), (6, 0), (0, 2)])).0, 2);
        assert_eq!(lattice_width(&poly(&[(2, 0), (0, 2), (-2, 2), (-2, 0), (0, -2), (2, -2)])).0, 4);
        // A sheared thin triangle: width 1 only along a skew direction.
        let thin = poly(&[(0, 0), (10, 7), (3, 2)]);
        let (w, u) = lattice_width(&thin);
        assert_eq!(w, 1);
        assert!(u.is_primitive());
    }
}
