#![allow(dead_code)]

use ndcurves_core::nondeg::{LaurentPolynomial, PrimeField};
use ndcurves_core::{Point, Polygon, UnimodularMap};
use rand::Rng;

pub fn pts(coords: &[(i64, i64)]) -> Vec<Point> {
    coords.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

pub fn poly(coords: &[(i64, i64)]) -> Polygon {
    Polygon::new(&pts(coords)).expect("test polygon is valid")
}

pub fn simplex(d: i64) -> Polygon {
    poly(&[(0, 0), (d, 0), (0, d)])
}

/// A random element of GL2(Z) ⋉ Z² built from a short word in standard generators.
pub fn random_map<R: Rng>(rng: &mut R, word_len: usize, shift: i64) -> UnimodularMap {
    const GENERATORS: [[[i64; 2]; 2]; 4] = [[[0, -1], [1, 0]], [[1, 1], [0, 1]], [[1, -1], [0, 1]], [[1, 0], [0, -1]]];
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..=word_len) {
        let g = GENERATORS[rng.gen_range(0..GENERATORS.len())];
        m = [
            [m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]],
            [m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]],
        ];
    }
    let t = Point::new(rng.gen_range(-shift..=shift), rng.gen_range(-shift..=shift));
    UnimodularMap::new(m, t).expect("product of unimodular generators")
}

/// Sparse random polynomial with support in `[0, n]²`, each exponent kept with
/// probability `density`, resampled until the Newton polytope is two-dimensional.
pub fn random_sparse_poly<R: Rng>(rng: &mut R, field: PrimeField, n: i64, density: f64) -> LaurentPolynomial {
    let p = field.modulus() as i64;
    loop {
        let mut terms = Vec::new();
        for i in 0..=n {
            for j in 0..=n {
                if rng.gen_bool(density) {
                    terms.push((Point::new(i, j), rng.gen_range(1..p)));
                }
            }
        }
        let f = LaurentPolynomial::from_terms(field, terms);
        if !f.is_zero() && f.newton_polytope().unwrap().dimension() == Some(2) {
            return f;
        }
    }
}

/// Seed from `--seed <n>` on the command line or `NDCURVES_SEED`, else the default.
pub fn seed(default: u64) -> u64 {
    let args: Vec<String> = std::env::args().collect();
    args.windows(2)
        .find(|w| w[0] == "--seed")
        .and_then(|w| w[1].parse().ok())
        .or_else(|| std::env::var("NDCURVES_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(default)
}
