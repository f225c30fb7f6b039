mod common;

use common::{pts, random_map, random_sparse_poly};
use ndcurves_core::enumerate::{enumerate_by_genus, Method};
use ndcurves_core::nondeg::{
    brute_force_face_check, conic_ea, find_nondegenerate_translation, find_translation_onto, genus_of_model,
    is_nondegenerate, ConicCoefficients, Face, LaurentPolynomial, PrimeField,
};
use ndcurves_core::{Hull, Point, Polygon, Segment};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f(s: &str) -> LaurentPolynomial {
    s.parse().unwrap()
}

fn x_axis(a: i64, b: i64) -> Face {
    Face::Edge(Segment::new(Point::new(a, 0), Point::new(b, 0)).unwrap())
}

fn dense(field: PrimeField, poly: &Polygon, rng: &mut ChaCha8Rng) -> LaurentPolynomial {
    let p = field.modulus() as i64;
    LaurentPolynomial::from_terms(field, poly.lattice_points().into_iter().map(|q| (q, rng.gen_range(1..p))))
}

#[test]
fn newton_polytopes() {
    assert_eq!(f("p=7; 1:0,0; 1:1,0; 1:0,1").newton_polytope().unwrap(), Hull::Polygon(common::simplex(1)));
    let weierstrass = f("p=5; 1:0,2; -1:3,0; -1:1,0; -1:0,0");
    assert_eq!(weierstrass.newton_polytope().unwrap(), Hull::Polygon(common::poly(&[(0, 0), (3, 0), (0, 2)])));
    let segment = f("p=5; 1:1,0; 1:3,0").newton_polytope().unwrap();
    assert_eq!(segment.dimension(), Some(1));
    assert_eq!(segment.lattice_points(), pts(&[(1, 0), (2, 0), (3, 0)]));
    assert!(LaurentPolynomial::zero(PrimeField::new(5).unwrap()).newton_polytope().is_err());
}

#[test]
fn face_restrictions() {
    let line = f("p=7; 1:0,0; 1:1,0; 1:0,1");
    let hyp = Face::Edge(Segment::new(Point::new(1, 0), Point::new(0, 1)).unwrap());
    assert_eq!(line.face_restriction(&hyp).unwrap(), f("p=7; 1:1,0; 1:0,1"));
    let w = f("p=5; 1:0,2; -1:3,0; -1:1,0; -1:0,0");
    assert_eq!(w.face_restriction(&x_axis(0, 3)).unwrap(), f("p=5; -1:3,0; -1:1,0; -1:0,0"));
    assert_eq!(w.face_restriction(&Face::Vertex(Point::new(0, 2))).unwrap(), f("p=5; 1:0,2"));
    assert!(w.face_restriction(&x_axis(0, 2)).is_err());
    assert!(w.face_restriction(&Face::Vertex(Point::new(1, 0))).is_err());
}

#[test]
fn small_verdicts() {
    assert!(is_nondegenerate(&f("p=7; 1:0,0; 1:1,0; 1:0,1")).unwrap().nondegenerate);
    let square = f("p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1");
    let report = is_nondegenerate(&square).unwrap();
    assert!(!report.nondegenerate);
    let bad: Vec<_> = report.faces.iter().filter(|v| !v.nondegenerate).map(|v| v.face).collect();
    assert_eq!(bad, vec![x_axis(0, 2)]);
    assert!(is_nondegenerate(&f("p=7; 1:0,0; 1:1,0; 1:0,1; 1:2,0; 1:1,1; 1:0,2"))
        .unwrap()
        .nondegenerate);
    assert!(is_nondegenerate(&f("p=7; 1:0,0; 1:3,0")).is_err());
}

#[test]
fn oracle_examples() {
    let square = f("p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1");
    let hit = brute_force_face_check(&square, &x_axis(0, 2), 1).unwrap().unwrap();
    assert_eq!((hit.degree, hit.x.clone(), hit.y.clone()), (1, vec![6], vec![1]));
    assert!(brute_force_face_check(&f("p=7; 1:0,0; 1:1,0; 1:0,1"), &Face::Full, 3).unwrap().is_none());
    let cusp = f("p=5; 1:0,2; -1:3,0");
    let edge = Face::Edge(Segment::new(Point::new(3, 0), Point::new(0, 2)).unwrap());
    assert!(brute_force_face_check(&cusp, &edge, 2).unwrap().is_none());
}

#[test]
fn degeneracy_only_visible_over_an_extension() {
    // the edge restriction (x² + x + 1)² over F₂ has its double roots in F₄ only
    let edge = x_axis(0, 4);
    let sq = f("p=2; 1:0,0; 1:2,0; 1:4,0; 1:0,1");
    let report = is_nondegenerate(&sq).unwrap();
    let verdict = report.faces.iter().find(|v| v.face == edge).unwrap();
    assert!(!verdict.nondegenerate);
    assert!(brute_force_face_check(&sq, &edge, 1).unwrap().is_none());
    assert_eq!(brute_force_face_check(&sq, &edge, 2).unwrap().unwrap().degree, 2);
}

#[test]
fn conic_examples() {
    let field = PrimeField::new(7).unwrap();
    let ones = ConicCoefficients { c00: 1, c10: 1, c01: 1, c20: 1, c11: 1, c02: 1 };
    let e = conic_ea(field, ones).unwrap();
    assert_eq!((e.factors, e.value), ([1, 1, 1, 4, 4, 4, 2], 2));
    assert_eq!(conic_ea(field, ConicCoefficients { c00: 0, ..ones }).unwrap().value, 0);
    assert_eq!(conic_ea(field, ConicCoefficients { c11: 2, ..ones }).unwrap().value, 0);
    assert!(conic_ea(PrimeField::new(2).unwrap(), ones).is_err());
}

fn conic_agrees(field: PrimeField, c: [u32; 6]) {
    let [c00, c10, c01, c20, c11, c02] = c;
    let coeffs = ConicCoefficients { c00, c10, c01, c20, c11, c02 };
    let ea = conic_ea(field, coeffs).unwrap().value;
    let verdict = is_nondegenerate(&coeffs.polynomial(field)).unwrap().nondegenerate;
    assert_eq!(ea != 0, verdict, "{c:?} over F{}", field.modulus());
}

#[test]
fn conics_exhaustive_over_f5() {
    let field = PrimeField::new(5).unwrap();
    for code in 0..4u32.pow(6) {
        let c: [u32; 6] = std::array::from_fn(|i| code / 4u32.pow(i as u32) % 4 + 1);
        conic_agrees(field, c);
    }
}

#[test]
fn conics_random_over_f11() {
    let field = PrimeField::new(11).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(common::seed(11));
    for _ in 0..3000 {
        conic_agrees(field, std::array::from_fn(|_| rng.gen_range(1..11)));
    }
}

#[test]
fn translations() {
    let w = f("p=5; 1:0,2; -1:3,0; -1:1,0");
    assert_eq!(find_nondegenerate_translation(&w).unwrap(), Some((0, 0)));
    let target = common::poly(&[(0, 0), (3, 0), (0, 2)]);
    let (x0, y0) = find_translation_onto(&w, &target).unwrap().unwrap();
    let moved = w.translate_variables(x0, y0).unwrap();
    assert_eq!(moved.newton_polytope().unwrap(), Hull::Polygon(target));
    assert!(is_nondegenerate(&moved).unwrap().nondegenerate);
    assert_eq!(find_nondegenerate_translation(&f("p=3; 1:2,0; 2:1,1; 1:0,2")).unwrap(), None);
}

#[test]
fn genus_of_small_models() {
    assert_eq!(genus_of_model(&f("p=5; 1:0,2; -1:3,0; -1:1,0; -1:0,0")).unwrap(), 1);
    assert_eq!(genus_of_model(&f("p=7; 1:0,0; 1:1,0; 1:0,1")).unwrap(), 0);
    assert!(genus_of_model(&f("p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1")).is_err());
}

#[test]
fn dense_quartic_has_genus_three() {
    let field = PrimeField::new(7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(common::seed(4));
    let quartic = (0..100)
        .map(|_| dense(field, &common::simplex(4), &mut rng))
        .find(|q| is_nondegenerate(q).unwrap().nondegenerate)
        .expect("a nondegenerate quartic within 100 samples");
    assert_eq!(quartic.num_terms(), 15);
    assert_eq!(genus_of_model(&quartic).unwrap(), 3);
}

#[test]
fn genus_of_models_over_the_corpus() {
    let field = PrimeField::new(11).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(common::seed(3));
    let mut checked = 0;
    for g in 1..=3 {
        for poly in enumerate_by_genus(g, Method::HullRecursion).unwrap().classes {
            let model = dense(field, &poly, &mut rng);
            if is_nondegenerate(&model).unwrap().nondegenerate {
                assert_eq!(genus_of_model(&model).unwrap(), poly.genus());
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "only {checked} nondegenerate models");
}

#[test]
fn text_round_trip() {
    let g = f("p=7; 3:-1,2; 1:0,0; 5:2,-3; 4:0,0");
    assert_eq!(g.coefficient(Point::new(0, 0)), 5);
    assert_eq!(g.to_string().parse::<LaurentPolynomial>().unwrap(), g);
    assert!("p=6; 1:0,0".parse::<LaurentPolynomial>().is_err());
    assert!("p=7; 1:0".parse::<LaurentPolynomial>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn verdict_survives_unimodular_maps(seed in any::<u64>(), pi in 0..3usize) {
        let field = PrimeField::new([3, 5, 7][pi]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_sparse_poly(&mut rng, field, 3, 0.35);
        let moved = g.transform(&random_map(&mut rng, 6, 5));
        let a = is_nondegenerate(&g).unwrap();
        let b = is_nondegenerate(&moved).unwrap();
        prop_assert_eq!(a.nondegenerate, b.nondegenerate);
        let bad = |r: &ndcurves_core::nondeg::NondegeneracyReport| r.faces.iter().filter(|v| !v.nondegenerate).count();
        prop_assert_eq!(bad(&a), bad(&b));
    }

    #[test]
    fn vertex_verdicts_follow_coefficients(seed in any::<u64>()) {
        let field = PrimeField::new(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_sparse_poly(&mut rng, field, 4, 0.3);
        for v in is_nondegenerate(&g).unwrap().faces {
            if let Face::Vertex(q) = v.face {
                prop_assert!(v.nondegenerate);
                prop_assert_ne!(g.coefficient(q), 0);
            }
        }
    }
}
