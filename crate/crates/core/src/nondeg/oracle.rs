//! Exhaustive search for torus zeros of a face system over small extension fields.
//!
//! `𝔽_{p^m}` is built as `𝔽_p[α]/(μ)` with `μ` the monic irreducible of degree `m`
//! whose coefficient vector, read as a base-`p` number, is smallest. Elements are
//! encoded as `Σ aᵢ pⁱ` for `Σ aᵢ αⁱ`; multiplication goes through log tables.
//! A solution certifies degeneracy; finding none is only evidence.

use serde::{Deserialize, Serialize};

use super::field::{DensePoly, PrimeField};
use super::poly::{Face, LaurentPolynomial};
use crate::error::{Error, Result};

/// Largest field size the oracle will tabulate.
pub const MAX_ORACLE_FIELD: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct ExtensionField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    negation: Vec<u32>,
    /// Full addition table, kept only for small fields.
    sums: Option<Vec<u32>>,
}

/// Fields up to this size get a precomputed addition table.
const ADD_TABLE_LIMIT: u32 = 2401;

impl ExtensionField {
    pub fn new(base: PrimeField, m: u32) -> Result<Self> {
        let p = base.modulus();
        let q = (p as u64).checked_pow(m).filter(|&q| m >= 1 && q <= MAX_ORACLE_FIELD).ok_or_else(|| {
            Error::Precondition(format!("extension F_{p}^{m} is outside the oracle's range"))
        })? as u32;
        let modulus = smallest_irreducible(&base, m);
        let mut field =
            ExtensionField { p, m, q, modulus, exp: Vec::new(), log: Vec::new(), negation: Vec::new(), sums: None };
        field.build_tables(&base);
        field.negation = (0..q)
            .map(|a| {
                let d: Vec<u32> = field.digits(a).into_iter().map(|x| (p - x) % p).collect();
                field.encode(&d)
            })
            .collect();
        if q <= ADD_TABLE_LIMIT {
            field.sums = Some((0..q * q).map(|ab| field.add_digits(ab / q, ab % q)).collect());
        }
        Ok(field)
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Coefficients of the defining polynomial, low to high (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.sums {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.negation[a as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q as u64 - 1);
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let l = self.log[a as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }

    /// `a^e` for a nonzero `a` and any integer `e`.
    pub fn pow(&self, a: u32, e: i64) -> u32 {
        assert!(a != 0);
        let order = self.q as i64 - 1;
        let l = (self.log[a as usize] as i64 * e.rem_euclid(order)).rem_euclid(order);
        self.exp[l as usize]
    }

    /// Product of polynomials in `α`, reduced by the modulus (schoolbook, for table building).
    fn mul_slow(&self, base: &PrimeField, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; 2 * self.m as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(x, y));
            }
        }
        let r = DensePoly::new(prod).rem(&DensePoly::new(self.modulus.clone()), base);
        let mut d = r.coeffs;
        d.resize(self.m as usize, 0);
        self.encode(&d)
    }

    fn build_tables(&mut self, base: &PrimeField) {
        let order = self.q as usize - 1;
        for g in 1..self.q {
            let mut exp = Vec::with_capacity(order);
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = self.mul_slow(base, x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == order {
                let mut log = vec![0u32; self.q as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("finite field has a primitive element");
    }
}

fn smallest_irreducible(base: &PrimeField, m: u32) -> Vec<u32> {
    let p = base.modulus() as u64;
    let count = p.pow(m);
    (0..count)
        .map(|code| {
            let mut c: Vec<u32> = (0..m).scan(code, |rest, _| {
                let d = (*rest % p) as u32;
                *rest /= p;
                Some(d)
            }).collect();
            c.push(1);
            c
        })
        .find(|c| is_irreducible(base, c))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree at most half.
fn is_irreducible(base: &PrimeField, coeffs: &[u32]) -> bool {
    let f = DensePoly::new(coeffs.to_vec());
    let n = f.degree().unwrap() as u32;
    let p = base.modulus() as u64;
    for d in 1..=n / 2 {
        for code in 0..p.pow(d) {
            let mut c: Vec<u32> = (0..d).scan(code, |rest, _| {
                let x = (*rest % p) as u32;
                *rest /= p;
                Some(x)
            }).collect();
            c.push(1);
            if f.rem(&DensePoly::new(c), base).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A torus point over `𝔽_{p^m}`; coordinates are coefficient vectors in `α`, low to high.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSolution {
    pub degree: u32,
    pub modulus: Vec<u32>,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

/// Caches the tower `𝔽_p, 𝔽_{p²}, …, 𝔽_{p^m_max}`.
#[derive(Clone, Debug)]
pub struct BruteForceOracle {
    base: PrimeField,
    fields: Vec<ExtensionField>,
}

impl BruteForceOracle {
    pub fn new(base: PrimeField, m_max: u32) -> Result<Self> {
        if m_max == 0 {
            return Err(Error::Precondition("m_max must be at least 1".into()));
        }
        let fields = (1..=m_max).map(|m| ExtensionField::new(base, m)).collect::<Result<_>>()?;
        Ok(BruteForceOracle { base, fields })
    }

    /// The first solution of `f|τ = ∂_x f|τ = ∂_y f|τ = 0` in `(𝔽_{p^m}*)²`, in order of
    /// increasing `m`, then increasing encoded `x`, then `y`.
    pub fn search(&self, f: &LaurentPolynomial, face: &Face) -> Result<Option<OracleSolution>> {
        if f.field() != self.base {
            return Err(Error::Precondition("polynomial and oracle fields differ".into()));
        }
        let h = f.face_restriction(face)?;
        if h.num_terms() <= 1 {
            // a single monomial never vanishes on the torus
            return Ok(None);
        }
        let (hx, hy) = h.log_derivatives();
        let ymin = h.terms().map(|(e, _)| e.y).min().unwrap();
        let ymax = h.terms().map(|(e, _)| e.y).max().unwrap();
        let width = (ymax - ymin + 1) as usize;
        for k in &self.fields {
            for x0 in 1..k.size() {
                let column = |g: &LaurentPolynomial| {
                    let mut c = vec![0u32; width];
                    for (e, coef) in g.terms() {
                        let j = (e.y - ymin) as usize;
                        c[j] = k.add(c[j], k.mul(coef, k.pow(x0, e.x)));
                    }
                    c
                };
                let (a, b, c) = (column(&h), column(&hx), column(&hy));
                let g = ext_gcd(k, &ext_gcd(k, &a, &b), &c);
                let y0 = if g.is_empty() {
                    Some(1)
                } else if g.len() == 1 {
                    None
                } else {
                    (1..k.size()).find(|&y| ext_eval(k, &g, y) == 0)
                };
                if let Some(y0) = y0 {
                    return Ok(Some(OracleSolution {
                        degree: k.degree(),
                        modulus: k.modulus().to_vec(),
                        x: k.digits(x0),
                        y: k.digits(y0),
                    }));
                }
            }
        }
        Ok(None)
    }
}

/// One-shot search; see [`BruteForceOracle::search`].
pub fn brute_force_face_check(f: &LaurentPolynomial, face: &Face, m_max: u32) -> Result<Option<OracleSolution>> {
    BruteForceOracle::new(f.field(), m_max)?.search(f, face)
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn ext_eval(k: &ExtensionField, a: &[u32], y: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| k.add(k.mul(acc, y), c))
}

fn ext_rem(k: &ExtensionField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let lead_inv = k.inv(*b.last().unwrap());
    while r.len() >= b.len() {
        let top = *r.last().unwrap();
        if top != 0 {
            let q = k.mul(top, lead_inv);
            let shift = r.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = k.sub(r[shift + i], k.mul(q, c));
            }
        }
        r.pop();
    }
    trim(r)
}

/// A gcd (not normalized); the zero polynomial is the empty vector.
fn ext_gcd(k: &ExtensionField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = ext_rem(k, &a, &b);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Point, Segment};

    #[test]
    fn extension_tables() {
        let f7 = PrimeField::new(7).unwrap();
        let k = ExtensionField::new(f7, 2).unwrap();
        assert_eq!(k.size(), 49);
        // x^2 + 1 is the smallest irreducible quadratic over F_7 (-1 is a non-square)
        assert_eq!(k.modulus(), &[1, 0, 1]);
        for a in 1..49 {
            assert_eq!(k.mul(a, k.inv(a)), 1);
            assert_eq!(k.add(a, k.neg(a)), 0);
        }
        let f2 = PrimeField::new(2).unwrap();
        // x^2 + x + 1 over F_2, x^4 + x + 1 for degree 4
        assert_eq!(ExtensionField::new(f2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(ExtensionField::new(f2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert!(ExtensionField::new(f7, 9).is_err());
    }

    #[test]
    fn finds_the_edge_root() {
        let f: LaurentPolynomial = "p=7; 1:0,0; 2:1,0; 1:2,0; 1:0,1".parse().unwrap();
        let edge = Face::Edge(Segment::new(Point::new(0, 0), Point::new(2, 0)).unwrap());
        let sol = brute_force_face_check(&f, &edge, 1).unwrap().unwrap();
        assert_eq!((sol.degree, sol.x.clone(), sol.y.clone()), (1, vec![6], vec![1]));
    }

    #[test]
    fn nothing_to_find() {
        let f: LaurentPolynomial = "p=7; 1:0,0; 1:1,0; 1:0,1".parse().unwrap();
        assert_eq!(brute_force_face_check(&f, &Face::Full, 3).unwrap(), None);
        let g: LaurentPolynomial = "p=5; 1:0,2; -1:3,0".parse().unwrap();
        let edge = Face::Edge(Segment::new(Point::new(0, 2), Point::new(3, 0)).unwrap());
        assert_eq!(brute_force_face_check(&g, &edge, 2).unwrap(), None);
        assert!(brute_force_face_check(&g, &edge, 0).is_err());
    }

    #[test]
    fn zero_needs_an_extension() {
        // (x^2 + 1)^2 has its double roots ±i outside F_7
        let f: LaurentPolynomial = "p=7; 1:0,0; 2:2,0; 1:4,0; 1:0,1".parse().unwrap();
        let edge = Face::Edge(Segment::new(Point::new(0, 0), Point::new(4, 0)).unwrap());
        assert_eq!(brute_force_face_check(&f, &edge, 1).unwrap(), None);
        let sol = brute_force_face_check(&f, &edge, 2).unwrap().unwrap();
        assert_eq!(sol.degree, 2);
        assert_eq!(sol.x, vec![0, 1]);
    }
}
