//! Laurent polynomials over prime fields and the face-by-face nondegeneracy test.

mod check;
mod conic;
mod field;
mod groebner;
mod oracle;
mod poly;

pub use check::{
    check_face, find_nondegenerate_translation, find_translation_onto, genus_of_model, is_nondegenerate, FaceVerdict,
    NondegeneracyReport, Witness,
};
pub use conic::{conic_ea, ConicCoefficients, ConicDeterminant};
pub use field::PrimeField;
pub use oracle::{brute_force_face_check, BruteForceOracle, ExtensionField, OracleSolution, MAX_ORACLE_FIELD};
pub use poly::{Face, LaurentPolynomial};
