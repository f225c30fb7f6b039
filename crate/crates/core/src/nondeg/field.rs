use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field `𝔽_p` for a prime `p < 2¹⁶`; elements are `u32` in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces any integer into `[0, p)`.
    pub fn reduce(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    /// The element as a signed integer in `(−p/2, p/2]`.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }
}

impl TryFrom<u64> for PrimeField {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u64 {
    fn from(f: PrimeField) -> u64 {
        f.p as u64
    }
}

/// Dense univariate polynomial over a prime field, coefficients low to high,
/// with no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DensePoly {
    pub coeffs: Vec<u32>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self, f: &PrimeField) -> DensePoly {
        DensePoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.reduce(i as i64))).collect(),
        )
    }

    pub fn rem(&self, m: &DensePoly, f: &PrimeField) -> DensePoly {
        let mut r = self.coeffs.clone();
        let dm = m.degree().expect("nonzero modulus");
        let lead_inv = f.inv(m.coeffs[dm]);
        while r.len() > dm {
            let top = *r.last().unwrap();
            if top != 0 {
                let q = f.mul(top, lead_inv);
                let shift = r.len() - 1 - dm;
                for (i, &c) in m.coeffs.iter().enumerate() {
                    r[shift + i] = f.sub(r[shift + i], f.mul(q, c));
                }
            }
            r.pop();
        }
        DensePoly::new(r)
    }

    pub fn monic(&self, f: &PrimeField) -> DensePoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&l) => {
                let inv = f.inv(l);
                DensePoly::new(self.coeffs.iter().map(|&c| f.mul(c, inv)).collect())
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &DensePoly, f: &PrimeField) -> DensePoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_only() {
        assert!(PrimeField::new(7).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeField::new(65521).is_ok());
        assert_eq!(PrimeField::new(65537), Err(Error::NotPrime(65537)));
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.reduce(-1), 6);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.to_signed(6), -1);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn dense_gcd() {
        let f = PrimeField::new(7).unwrap();
        // (x + 1)^2 and its derivative 2(x + 1)
        let u = DensePoly::new(vec![1, 2, 1]);
        assert_eq!(u.gcd(&u.derivative(&f), &f), DensePoly::new(vec![1, 1]));
        let v = DensePoly::new(vec![1, 1, 1]);
        assert_eq!(v.gcd(&v.derivative(&f), &f), DensePoly::new(vec![1]));
    }
}
