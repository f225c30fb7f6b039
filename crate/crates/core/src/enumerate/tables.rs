use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::growth::class_order;
use super::{enumerate_by_genus, subpolygons_with_same_interior, Method, MAX_GENUS};
use crate::analysis::{analyze, m_bound, relax, Relaxation};
use crate::error::{Error, Result};
use crate::lattice::{is_equivalent, lattice_width, Point, Polygon};

/// Polygons whose interior hull has exactly one interior lattice point and
/// which attain `m = 2g + 2`, as sorted canonical classes.
///
/// The interior hull is one of the genus-one classes and the polygon lies in
/// its relaxation, so the search is finite.
pub fn exceptional_g1_polytopes() -> Vec<Polygon> {
    let genus_one = enumerate_by_genus(1, Method::HullRecursion).expect("genus one is supported");
    let mut found = HashSet::new();
    for hull in genus_one.classes {
        let Relaxation::Polygon(outer) = relax(&hull) else { continue };
        if outer.interior_lattice_points() != hull.lattice_points() {
            continue;
        }
        let g = outer.genus() as i64;
        for p in subpolygons_with_same_interior(&outer) {
            if m_bound(&p) == 2 * g + 2 {
                found.insert(p);
            }
        }
    }
    let mut out: Vec<Polygon> = found.into_iter().collect();
    out.sort_by(class_order);
    out
}

/// Per-genus summary of the moduli-dimension bounds over an enumerated corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliRow {
    pub g: usize,
    /// Largest `m(Δ)` over maximal nonhyperelliptic classes; absent when there are none.
    pub max_m_maximal_nonhyp: Option<i64>,
    pub hyperelliptic_dim: i64,
    pub claimed_dim: i64,
    pub witnesses: Vec<Polygon>,
}

impl ModuliRow {
    /// The larger of the nonhyperelliptic maximum and the hyperelliptic dimension.
    pub fn computed_dim(&self) -> i64 {
        self.max_m_maximal_nonhyp.map_or(self.hyperelliptic_dim, |m| m.max(self.hyperelliptic_dim))
    }

    pub fn is_consistent(&self) -> bool {
        self.computed_dim() == self.claimed_dim
    }
}

/// `min(2g + 1, 3g − 3)`, except 16 in genus seven.
pub fn claimed_moduli_dimension(g: usize) -> i64 {
    let g = g as i64;
    if g == 7 {
        16
    } else {
        (2 * g + 1).min(3 * g - 3)
    }
}

pub fn moduli_table(g_max: usize) -> Result<Vec<ModuliRow>> {
    moduli_table_with_progress(g_max, |_| {})
}

/// [`moduli_table`], calling `progress(g)` before each genus is enumerated.
pub fn moduli_table_with_progress(g_max: usize, mut progress: impl FnMut(usize)) -> Result<Vec<ModuliRow>> {
    if !(2..=MAX_GENUS).contains(&g_max) {
        return Err(Error::UnsupportedGenus(g_max, format!("moduli table needs 2 ≤ gmax ≤ {MAX_GENUS}")));
    }
    let mut rows = Vec::new();
    for g in 2..=g_max {
        progress(g);
        let corpus = enumerate_by_genus(g, Method::HullRecursion)?;
        let mut best: Option<i64> = None;
        let mut witnesses = Vec::new();
        for p in corpus.classes {
            let r = analyze(&p);
            if r.is_maximal != Some(true) || r.is_hyperelliptic != Some(false) {
                continue;
            }
            match best {
                Some(b) if r.m < b => {}
                Some(b) if r.m == b => witnesses.push(p),
                _ => {
                    best = Some(r.m);
                    witnesses = vec![p];
                }
            }
        }
        rows.push(ModuliRow {
            g,
            max_m_maximal_nonhyp: best,
            hyperelliptic_dim: 2 * g as i64 - 1,
            claimed_dim: claimed_moduli_dimension(g),
            witnesses,
        });
    }
    Ok(rows)
}

/// Human-readable rendering of a moduli table.
pub fn format_moduli_table(rows: &[ModuliRow]) -> String {
    let mut out = String::from(" g  max m (maximal nonhyp)  hyperelliptic  claimed  witnesses\n");
    for r in rows {
        let m = r.max_m_maximal_nonhyp.map_or("-".to_string(), |m| m.to_string());
        let w: Vec<String> = r.witnesses.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("{:>2}  {:>22}  {:>13}  {:>7}  {}\n", r.g, m, r.hyperelliptic_dim, r.claimed_dim, w.join(" ")));
    }
    out
}

/// The two shapes a polygon without interior lattice points can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Genus0Class {
    #[serde(rename = "multiple_of_2Sigma")]
    TwiceStandardSimplex,
    #[serde(rename = "width_le_1")]
    WidthAtMostOne,
    #[serde(rename = "neither")]
    Neither,
}

pub fn genus0_classifier(poly: &Polygon) -> Result<Genus0Class> {
    if poly.genus() != 0 {
        return Err(Error::Precondition(format!("expected genus 0, got {}", poly.genus())));
    }
    let twice_simplex = Polygon::new(&[Point::new(0, 0), Point::new(2, 0), Point::new(0, 2)])?;
    let class = if is_equivalent(poly, &twice_simplex) {
        Genus0Class::TwiceStandardSimplex
    } else if lattice_width(poly).0 <= 1 {
        Genus0Class::WidthAtMostOne
    } else {
        Genus0Class::Neither
    };
    assert_ne!(class, Genus0Class::Neither, "genus-0 polygon {poly} is neither 2Σ nor of width 1");
    Ok(class)
}
