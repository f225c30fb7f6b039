use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use crate::error::{Error, Result};
use crate::lattice::{convex_hull, Hull, Point, Polygon, Segment, UnimodularMap};

/// A Laurent polynomial `Σ c_ij xⁱ yʲ` over a prime field.
///
/// Only nonzero coefficients are stored. The text form is
/// `p=7; 1:0,0; 1:1,0; 1:0,1` (coefficient, then exponents).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LaurentPolynomial {
    field: PrimeField,
    terms: BTreeMap<Point, u32>,
}

/// A face of a Newton polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Face {
    Vertex(Point),
    Edge(Segment),
    Full,
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Face::Vertex(p) => write!(f, "vertex {p}"),
            Face::Edge(s) => write!(f, "edge {s}"),
            Face::Full => write!(f, "full polygon"),
        }
    }
}

impl LaurentPolynomial {
    pub fn zero(field: PrimeField) -> Self {
        LaurentPolynomial { field, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from signed integer coefficients; duplicates are summed.
    pub fn from_terms<I>(field: PrimeField, terms: I) -> Self
    where
        I: IntoIterator<Item = (Point, i64)>,
    {
        let mut f = LaurentPolynomial::zero(field);
        for (e, c) in terms {
            f.add_term(e, field.reduce(c));
        }
        f
    }

    pub fn add_term(&mut self, exponent: Point, c: u32) {
        let field = self.field;
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry = field.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coefficient(&self, exponent: Point) -> u32 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Point, u32)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn support(&self) -> Vec<Point> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.x >= 0 && e.y >= 0)
    }

    /// `Δ(f)`, the convex hull of the support.
    pub fn newton_polytope(&self) -> Result<Hull> {
        if self.is_zero() {
            return Err(Error::Precondition("the zero polynomial has no Newton polytope".into()));
        }
        Ok(convex_hull(&self.support()))
    }

    /// The faces of `Δ(f)`: vertices, then edges, then the whole polytope when it is
    /// two-dimensional. A segment's only edge is the segment itself.
    pub fn faces(&self) -> Result<Vec<Face>> {
        Ok(match self.newton_polytope()? {
            Hull::Empty => unreachable!(),
            Hull::Point(p) => vec![Face::Vertex(p)],
            Hull::Segment(s) => vec![Face::Vertex(s.start), Face::Vertex(s.end), Face::Edge(s)],
            Hull::Polygon(poly) => poly
                .vertices()
                .iter()
                .map(|&v| Face::Vertex(v))
                .chain(poly.edges().map(Face::Edge))
                .chain(std::iter::once(Face::Full))
                .collect(),
        })
    }

    /// `f|τ`: the terms whose exponents lie on the face `τ`.
    pub fn face_restriction(&self, face: &Face) -> Result<LaurentPolynomial> {
        let hull = self.newton_polytope()?;
        let on_face: Box<dyn Fn(Point) -> bool> = match (face, &hull) {
            (Face::Full, _) => return Ok(self.clone()),
            (Face::Vertex(v), _) if is_vertex(&hull, *v) => {
                let v = *v;
                Box::new(move |e| e == v)
            }
            (Face::Edge(s), Hull::Segment(h)) if s.normalized() == h.normalized() => {
                return Ok(self.clone())
            }
            (Face::Edge(s), Hull::Polygon(poly)) if is_edge(poly, s) => {
                let s = *s;
                Box::new(move |e| s.contains(e))
            }
            _ => return Err(Error::Precondition(format!("{face} is not a face of the Newton polytope"))),
        };
        Ok(LaurentPolynomial {
            field: self.field,
            terms: self.terms.iter().filter(|(&e, _)| on_face(e)).map(|(&e, &c)| (e, c)).collect(),
        })
    }

    /// The logarithmic derivatives `x ∂f/∂x` and `y ∂f/∂y`.
    pub fn log_derivatives(&self) -> (LaurentPolynomial, LaurentPolynomial) {
        let fp = self.field;
        let scale = |pick: fn(Point) -> i64| {
            LaurentPolynomial::from_terms(
                fp,
                self.terms().map(|(e, c)| (e, fp.to_signed(fp.mul(c, fp.reduce(pick(e)))))),
            )
        };
        (scale(|e| e.x), scale(|e| e.y))
    }

    /// Applies an affine unimodular map to every exponent vector.
    pub fn transform(&self, map: &UnimodularMap) -> LaurentPolynomial {
        LaurentPolynomial {
            field: self.field,
            terms: self.terms.iter().map(|(&e, &c)| (map.apply(e), c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^s.x y^s.y`.
    pub fn shift(&self, s: Point) -> LaurentPolynomial {
        LaurentPolynomial {
            field: self.field,
            terms: self.terms.iter().map(|(&e, &c)| (e + s, c)).collect(),
        }
    }

    /// `f(x − x0, y − y0)` for a polynomial `f`.
    pub fn translate_variables(&self, x0: u32, y0: u32) -> Result<LaurentPolynomial> {
        if !self.is_polynomial() {
            return Err(Error::Precondition("translation needs nonnegative exponents".into()));
        }
        let fp = self.field;
        // (z − a)^n expanded, coefficients low to high
        let expand = |a: u32, n: usize| {
            let mut out = vec![1u32];
            for _ in 0..n {
                let mut next = vec![0u32; out.len() + 1];
                for (k, &c) in out.iter().enumerate() {
                    next[k + 1] = fp.add(next[k + 1], c);
                    next[k] = fp.sub(next[k], fp.mul(c, a));
                }
                out = next;
            }
            out
        };
        let mut g = LaurentPolynomial::zero(fp);
        for (e, c) in self.terms() {
            let xs = expand(x0, e.x as usize);
            let ys = expand(y0, e.y as usize);
            for (i, &a) in xs.iter().enumerate() {
                for (j, &b) in ys.iter().enumerate() {
                    g.add_term(Point::new(i as i64, j as i64), fp.mul(c, fp.mul(a, b)));
                }
            }
        }
        Ok(g)
    }

    /// Evaluates at a point of `𝔽_p*²`.
    pub fn evaluate(&self, x: u32, y: u32) -> u32 {
        let fp = self.field;
        let p = fp.modulus() as i64;
        let pow = |a: u32, e: i64| {
            let e = e.rem_euclid(p - 1) as u64;
            fp.pow(a, e)
        };
        self.terms().fold(0, |acc, (e, c)| fp.add(acc, fp.mul(c, fp.mul(pow(x, e.x), pow(y, e.y)))))
    }
}

fn is_vertex(hull: &Hull, v: Point) -> bool {
    match hull {
        Hull::Empty => false,
        Hull::Point(p) => *p == v,
        Hull::Segment(s) => s.start == v || s.end == v,
        Hull::Polygon(poly) => poly.vertices().contains(&v),
    }
}

fn is_edge(poly: &Polygon, s: &Segment) -> bool {
    poly.edges().any(|e| e.normalized() == s.normalized())
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={};", self.field.modulus())?;
        for (e, c) in self.terms() {
            write!(f, " {}:{},{};", self.field.to_signed(c), e.x, e.y)?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parts = compact.split(';').filter(|t| !t.is_empty());
        let header = parts.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let p = header
            .strip_prefix("p=")
            .ok_or_else(|| Error::Parse(format!("expected header p=<prime>, got {header:?}")))?;
        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad modulus {p:?}")))?;
        let field = PrimeField::new(p)?;
        let mut terms = Vec::new();
        for term in parts {
            let bad = || Error::Parse(format!("bad term {term:?}, expected <coeff>:<i>,<j>"));
            let (c, e) = term.split_once(':').ok_or_else(bad)?;
            let (i, j) = e.split_once(',').ok_or_else(bad)?;
            let c: i64 = c.parse().map_err(|_| bad())?;
            let i: i64 = i.parse().map_err(|_| bad())?;
            let j: i64 = j.parse().map_err(|_| bad())?;
            terms.push((Point::new(i, j), c.rem_euclid(p as i64)));
        }
        Ok(LaurentPolynomial::from_terms(field, terms))
    }
}

impl TryFrom<String> for LaurentPolynomial {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LaurentPolynomial> for String {
    fn from(f: LaurentPolynomial) -> String {
        f.to_string()
    }
}
