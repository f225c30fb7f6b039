//! Enumeration of lattice polygons with a given number of interior lattice
//! points, up to unimodular equivalence, and the tables derived from it.

mod growth;
mod recursion;
mod strip;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Polygon;

pub use growth::polygons_with_lattice_points;
pub use tables::{
    claimed_moduli_dimension, exceptional_g1_polytopes, format_moduli_table, genus0_classifier, moduli_table,
    moduli_table_with_progress, Genus0Class, ModuliRow,
};

/// Largest genus accepted by [`enumerate_by_genus`] with [`Method::HullRecursion`].
pub const MAX_GENUS: usize = 10;
/// Largest genus accepted by the brute-force [`Method::BoundedBox`] oracle.
pub const MAX_ORACLE_GENUS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Sub-polygons of relaxations of interior hulls plus the strip search.
    HullRecursion,
    /// Exhaustive single-point growth from the unimodular triangle.
    BoundedBox,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hull_recursion" => Ok(Method::HullRecursion),
            "bounded_box" => Ok(Method::BoundedBox),
            other => Err(Error::Parse(format!("unknown enumeration method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::HullRecursion => "hull_recursion",
            Method::BoundedBox => "bounded_box",
        })
    }
}

/// All equivalence classes of a genus, as canonical polygons sorted by
/// vertex count and then vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCorpus {
    pub genus: usize,
    pub classes: Vec<Polygon>,
    pub method: Method,
}

pub fn enumerate_by_genus(g: usize, method: Method) -> Result<GenusCorpus> {
    if g == 0 {
        return Err(Error::UnsupportedGenus(
            0,
            "genus 0 has infinitely many classes (polygons of lattice width one)".into(),
        ));
    }
    let limit = match method {
        Method::HullRecursion => MAX_GENUS,
        Method::BoundedBox => MAX_ORACLE_GENUS,
    };
    if g > limit {
        return Err(Error::UnsupportedGenus(g, format!("{method} supports genus at most {limit}")));
    }
    let mut classes = match method {
        Method::HullRecursion if g == 1 => recursion::genus_one_classes(),
        Method::HullRecursion => {
            let mut all = strip::hyperelliptic_classes(g);
            if g >= 3 {
                all.extend(recursion::nonhyperelliptic_classes(g));
            }
            all
        }
        Method::BoundedBox => bounded_growth(g),
    };
    classes.sort_by(growth::class_order);
    Ok(GenusCorpus { genus: g, classes, method })
}

/// Classes of genus `g` by growth through every polygon of genus at most `g`
/// with at most `3g + 7` lattice points, the most a genus-`g` polygon can have.
fn bounded_growth(g: usize) -> Vec<Polygon> {
    let max_points = 3 * g + 7;
    let mut level = vec![crate::lattice::canonical_form(&growth::unimodular_triangle()).0];
    let mut found = Vec::new();
    for _ in 3..max_points {
        level = growth::grow_level(&level, |p| p.genus() <= g);
        found.extend(level.iter().filter(|p| p.genus() == g).cloned());
    }
    found
}

pub(crate) use recursion::subpolygons_with_same_interior;
