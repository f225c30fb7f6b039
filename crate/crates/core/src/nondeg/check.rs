use serde::{Deserialize, Serialize};

use super::field::DensePoly;
use super::groebner::{complete, Completion, SparsePoly};
use super::poly::{Face, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::lattice::{Hull, Point, Polygon, Segment};

/// Evidence behind a face verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The (nonzero) coefficient at a vertex.
    VertexCoefficient { coefficient: u32 },
    /// `gcd(u, u')` of the edge polynomial `u`, coefficients from low to high degree.
    /// Nondegenerate exactly when it is the constant 1.
    EdgeGcd { gcd: Vec<u32> },
    /// The completion reached a nonzero constant.
    UnitIdeal,
    /// The completion closed without a constant; the face system has a torus zero.
    ProperIdeal { basis_size: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVerdict {
    pub face: Face,
    pub nondegenerate: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NondegeneracyReport {
    pub nondegenerate: bool,
    pub faces: Vec<FaceVerdict>,
}

/// Decides nondegeneracy face by face.
///
/// Needs a two-dimensional Newton polytope. Vertices are always fine (their
/// coefficient is in the support), edges reduce to a square-free test of a
/// univariate polynomial, and the full face is a unit-ideal test with the
/// torus relation `xyt − 1`.
pub fn is_nondegenerate(f: &LaurentPolynomial) -> Result<NondegeneracyReport> {
    let hull = f.newton_polytope()?;
    if !matches!(hull, Hull::Polygon(_)) {
        return Err(Error::Precondition(format!(
            "the Newton polytope must be two-dimensional, got {}",
            match hull {
                Hull::Point(_) => "a point",
                _ => "a segment",
            }
        )));
    }
    let faces: Vec<FaceVerdict> = f.faces()?.into_iter().map(|face| check_face(f, face)).collect::<Result<_>>()?;
    Ok(NondegeneracyReport { nondegenerate: faces.iter().all(|v| v.nondegenerate), faces })
}

/// The verdict for a single face of `Δ(f)`.
pub fn check_face(f: &LaurentPolynomial, face: Face) -> Result<FaceVerdict> {
    let restricted = f.face_restriction(&face)?;
    Ok(match face {
        Face::Vertex(v) => {
            let c = restricted.coefficient(v);
            FaceVerdict { face, nondegenerate: c != 0, witness: Some(Witness::VertexCoefficient { coefficient: c }) }
        }
        Face::Edge(s) => {
            let g = edge_gcd(&restricted, s);
            FaceVerdict { face, nondegenerate: g.degree() == Some(0), witness: Some(Witness::EdgeGcd { gcd: g.coeffs }) }
        }
        Face::Full => match full_face_completion(&restricted) {
            Completion::Unit => FaceVerdict { face, nondegenerate: true, witness: Some(Witness::UnitIdeal) },
            Completion::Proper(basis) => FaceVerdict {
                face,
                nondegenerate: false,
                witness: Some(Witness::ProperIdeal { basis_size: basis.len() }),
            },
        },
    })
}

/// Writes `f|τ = x^a · u(x^e)` along the edge and returns `gcd(u, u')`.
///
/// On the torus `∂_x(f|τ) = x^a (a₁u + e₁ s u'(s))` with `s = x^e`, and likewise for
/// `∂_y`; since `e ≠ 0` and `s` ranges over all of `k̄*`, the face system has a
/// solution iff `u` and `u'` share a root, which is never 0 because `u(0) ≠ 0`.
fn edge_gcd(restricted: &LaurentPolynomial, edge: Segment) -> DensePoly {
    let fp = restricted.field();
    let step = edge.direction();
    let len = edge.lattice_length();
    let u = DensePoly::new((0..=len).map(|k| restricted.coefficient(edge.start + step * k)).collect());
    u.gcd(&u.derivative(&fp), &fp)
}

fn full_face_completion(f: &LaurentPolynomial) -> Completion {
    let fp = f.field();
    let support = f.support();
    let min = Point::new(
        support.iter().map(|e| e.x).min().unwrap(),
        support.iter().map(|e| e.y).min().unwrap(),
    );
    let (fx, fy) = f.log_derivatives();
    let to_sparse = |g: &LaurentPolynomial| {
        SparsePoly::from_terms(
            &fp,
            g.terms().map(|(e, c)| ([(e.x - min.x) as u16, (e.y - min.y) as u16, 0], c)).collect(),
        )
    };
    let mut generators: Vec<SparsePoly> =
        [f, &fx, &fy].into_iter().map(to_sparse).filter(|g| !g.terms.is_empty()).collect();
    generators.push(SparsePoly::from_terms(&fp, vec![([1, 1, 1], 1), ([0, 0, 0], fp.neg(1))]));
    complete(&fp, generators)
}

/// `genus(Δ(f))` for a nondegenerate `f`; refuses degenerate input.
pub fn genus_of_model(f: &LaurentPolynomial) -> Result<usize> {
    let report = is_nondegenerate(f)?;
    if !report.nondegenerate {
        return Err(Error::Precondition("genus formula only holds for nondegenerate polynomials".into()));
    }
    Ok(f.newton_polytope()?.interior_count())
}

/// The first `(x0, y0) ∈ 𝔽_p²` in lexicographic order with `f(x − x0, y − y0)`
/// nondegenerate with respect to its own Newton polytope.
pub fn find_nondegenerate_translation(f: &LaurentPolynomial) -> Result<Option<(u32, u32)>> {
    search_translations(f, |_| true)
}

/// Like [`find_nondegenerate_translation`], but the translate must also have Newton
/// polygon exactly `target`, e.g. to move a Weierstrass model off the origin.
pub fn find_translation_onto(f: &LaurentPolynomial, target: &Polygon) -> Result<Option<(u32, u32)>> {
    search_translations(f, |hull| hull.polygon() == Some(target))
}

fn search_translations(f: &LaurentPolynomial, accept: impl Fn(&Hull) -> bool) -> Result<Option<(u32, u32)>> {
    let p = f.field().modulus();
    for x0 in 0..p {
        for y0 in 0..p {
            let g = f.translate_variables(x0, y0)?;
            if g.is_zero() {
                continue;
            }
            let hull = g.newton_polytope()?;
            if hull.dimension() == Some(2) && accept(&hull) && is_nondegenerate(&g)?.nondegenerate {
                return Ok(Some((x0, y0)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn plane_line_is_nondegenerate() {
        let r = is_nondegenerate(&poly("p=7; 1:0,0; 1:1,0; 1:0,1")).unwrap();
        assert!(r.nondegenerate);
        assert_eq!(r.faces.len(), 7);
    }

    #[test]
    fn square_on_an_edge() {
        let r = is_nondegenerate(&poly("p=7; 1:0,0; 2:1,0; 1:2,0; 1:0,1")).unwrap();
        assert!(!r.nondegenerate);
        let bad: Vec<_> = r.faces.iter().filter(|v| !v.nondegenerate).collect();
        assert_eq!(bad.len(), 1);
        assert!(matches!(bad[0].face, Face::Edge(_)));
        // gcd is x + 1
        assert_eq!(bad[0].witness, Some(Witness::EdgeGcd { gcd: vec![1, 1] }));
    }

    #[test]
    fn full_conic() {
        assert!(is_nondegenerate(&poly("p=7; 1:0,0; 1:1,0; 1:0,1; 1:2,0; 1:1,1; 1:0,2")).unwrap().nondegenerate);
        // (x + y + 1)^2 is singular along a line
        let sq = poly("p=7; 1:0,0; 2:1,0; 2:0,1; 1:2,0; 2:1,1; 1:0,2");
        let r = is_nondegenerate(&sq).unwrap();
        assert!(!r.nondegenerate);
        // y^2 = x^3 + x^2 has its node at the origin, off the torus
        let nodal = poly("p=7; 1:0,2; -1:3,0; -1:2,0");
        let full = check_face(&nodal, Face::Full).unwrap();
        assert!(full.nondegenerate);
        // (x - 1)^2 (x + 1) - (y - 1)^2 has a node at (1, 1)
        let torus_node = poly("p=7; 1:3,0; -1:2,0; -1:1,0; 1:0,0; -1:0,2; 2:0,1; -1:0,0");
        assert!(!check_face(&torus_node, Face::Full).unwrap().nondegenerate);
    }

    #[test]
    fn lower_dimensional_rejected() {
        assert!(is_nondegenerate(&poly("p=7; 1:0,0")).is_err());
        assert!(is_nondegenerate(&poly("p=7; 1:1,0; 1:3,0")).is_err());
    }

    #[test]
    fn char_p_edge() {
        // over F_3, u = 1 + t^3 = (1 + t)^3 has u' = 0
        let f = poly("p=3; 1:0,0; 1:3,0; 1:0,1");
        assert!(!is_nondegenerate(&f).unwrap().nondegenerate);
    }

    #[test]
    fn genus_and_translation() {
        assert_eq!(genus_of_model(&poly("p=7; 1:0,0; 1:1,0; 1:0,1")).unwrap(), 0);
        let w = poly("p=5; 1:0,2; -1:3,0; -1:1,0; -1:0,0");
        assert_eq!(genus_of_model(&w).unwrap(), 1);
        assert!(genus_of_model(&poly("p=7; 1:0,0; 2:1,0; 1:2,0; 1:0,1")).is_err());

        assert_eq!(find_nondegenerate_translation(&poly("p=7; 1:0,0; 1:1,0; 1:0,1")).unwrap(), Some((0, 0)));
        assert_eq!(find_nondegenerate_translation(&poly("p=3; 1:2,0; 2:1,1; 1:0,2")).unwrap(), None);
        let e = poly("p=5; 1:0,2; -1:3,0; -1:1,0");
        // already nondegenerate on its own polygon, which misses the origin
        assert_eq!(find_nondegenerate_translation(&e).unwrap(), Some((0, 0)));
        let target = w.newton_polytope().unwrap().into_polygon().unwrap();
        let (x0, y0) = find_translation_onto(&e, &target).unwrap().unwrap();
        let g = e.translate_variables(x0, y0).unwrap();
        assert_eq!(g.newton_polytope().unwrap(), w.newton_polytope().unwrap());
        assert!(is_nondegenerate(&g).unwrap().nondegenerate);
    }
}
