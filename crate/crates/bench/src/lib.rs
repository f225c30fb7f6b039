//! Benchmark fixtures.

use ndcurves_core::{LaurentPolynomial, Point, Polygon, PrimeField};

pub fn polygon(coords: &[(i64, i64)]) -> Polygon {
    let pts: Vec<Point> = coords.iter().map(|&(x, y)| Point::new(x, y)).collect();
    Polygon::new(&pts).expect("fixture polygon")
}

/// Polynomial with coefficient `1 + (i·7 + j·3) mod (p − 1)` at every lattice point of `poly`.
pub fn dense_polynomial(p: u64, poly: &Polygon) -> LaurentPolynomial {
    let field = PrimeField::new(p).expect("fixture prime");
    let span = p as i64 - 1;
    let terms = poly.lattice_points().into_iter().map(|q| (q, 1 + (q.x * 7 + q.y * 3).rem_euclid(span)));
    LaurentPolynomial::from_terms(field, terms)
}
