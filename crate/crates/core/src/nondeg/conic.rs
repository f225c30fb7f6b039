use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use crate::error::{Error, Result};

/// The principal determinant of the plane conic and its seven factors, in the order
/// `c00, c02, c20, c11² − 4c02c20, c10² − 4c00c20, c01² − 4c00c02, D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicDeterminant {
    pub value: u32,
    pub factors: [u32; 7],
}

/// Coefficients of `c00 + c10 x + c01 y + c20 x² + c11 xy + c02 y²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConicCoefficients {
    pub c00: u32,
    pub c10: u32,
    pub c01: u32,
    pub c20: u32,
    pub c11: u32,
    pub c02: u32,
}

impl ConicCoefficients {
    pub fn polynomial(&self, field: PrimeField) -> super::LaurentPolynomial {
        use crate::lattice::Point;
        super::LaurentPolynomial::from_terms(
            field,
            [
                (Point::new(0, 0), self.c00),
                (Point::new(1, 0), self.c10),
                (Point::new(0, 1), self.c01),
                (Point::new(2, 0), self.c20),
                (Point::new(1, 1), self.c11),
                (Point::new(0, 2), self.c02),
            ]
            .map(|(e, c)| (e, c as i64)),
        )
    }
}

/// Evaluates `E_A` for the universal conic over an odd prime field.
pub fn conic_ea(field: PrimeField, c: ConicCoefficients) -> Result<ConicDeterminant> {
    if field.modulus() == 2 {
        return Err(Error::Precondition("conic determinant needs odd characteristic".into()));
    }
    let f = field;
    let r = |x: u32| f.reduce(x as i64);
    let (c00, c10, c01, c20, c11, c02) = (r(c.c00), r(c.c10), r(c.c01), r(c.c20), r(c.c11), r(c.c02));
    let four = f.reduce(4);
    let disc = |a: u32, b: u32, d: u32| f.sub(f.mul(a, a), f.mul(four, f.mul(b, d)));
    let big_d = [
        f.mul(four, f.mul(c00, f.mul(c20, c02))),
        f.neg(f.mul(c00, f.mul(c11, c11))),
        f.neg(f.mul(f.mul(c10, c10), c02)),
        f.neg(f.mul(f.mul(c01, c01), c20)),
        f.mul(c10, f.mul(c01, c11)),
    ]
    .into_iter()
    .fold(0, |acc, t| f.add(acc, t));
    let factors = [c00, c02, c20, disc(c11, c02, c20), disc(c10, c00, c20), disc(c01, c00, c02), big_d];
    let value = factors.iter().fold(1, |acc, &x| f.mul(acc, x));
    Ok(ConicDeterminant { value, factors })
}
