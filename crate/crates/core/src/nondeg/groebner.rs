//! Buchberger completion over `𝔽_p[x, y, t]` in degree-reverse-lex order with `x > y > t`.
//!
//! Only used to decide whether an ideal is the unit ideal, so the basis is
//! never interreduced and the loop stops as soon as a nonzero constant appears.

use std::cmp::Ordering;
use std::collections::HashSet;

use super::field::PrimeField;

pub(crate) type Mono = [u16; 3];

fn key(m: &Mono) -> u64 {
    let deg = m[0] as u64 + m[1] as u64 + m[2] as u64;
    (deg << 32) | ((0xFFFF - m[2] as u64) << 16) | (0xFFFF - m[1] as u64)
}

fn cmp(a: &Mono, b: &Mono) -> Ordering {
    key(a).cmp(&key(b))
}

fn divides(a: &Mono, b: &Mono) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

fn lcm(a: &Mono, b: &Mono) -> Mono {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])]
}

fn quotient(a: &Mono, b: &Mono) -> Mono {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn times(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// Terms in strictly decreasing monomial order, coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SparsePoly {
    pub terms: Vec<(Mono, u32)>,
}

impl SparsePoly {
    pub fn from_terms(fp: &PrimeField, mut raw: Vec<(Mono, u32)>) -> Self {
        raw.sort_by(|a, b| cmp(&b.0, &a.0));
        let mut terms: Vec<(Mono, u32)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == m => last.1 = fp.add(last.1, c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        SparsePoly { terms }
    }

    fn lead(&self) -> &Mono {
        &self.terms[0].0
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0, 0, 0]
    }

    fn make_monic(&mut self, fp: &PrimeField) {
        let inv = fp.inv(self.terms[0].1);
        for t in &mut self.terms {
            t.1 = fp.mul(t.1, inv);
        }
    }
}

/// `a − c·m·b`, with both inputs given as decreasing term slices.
fn sub_scaled(fp: &PrimeField, a: &[(Mono, u32)], c: u32, m: &Mono, b: &[(Mono, u32)]) -> Vec<(Mono, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let bj = b.get(j).map(|t| (times(m, &t.0), fp.neg(fp.mul(c, t.1))));
        match (a.get(i), bj) {
            (Some(&ta), Some(tb)) => match cmp(&ta.0, &tb.0) {
                Ordering::Greater => {
                    out.push(ta);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(tb);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = fp.add(ta.1, tb.1);
                    if s != 0 {
                        out.push((ta.0, s));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(&ta), None) => {
                out.push(ta);
                i += 1;
            }
            (None, Some(tb)) => {
                out.push(tb);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Full reduction of `f` modulo a basis of monic polynomials.
fn reduce(fp: &PrimeField, f: &SparsePoly, basis: &[SparsePoly]) -> SparsePoly {
    let mut rest = f.terms.clone();
    let mut pos = 0;
    let mut remainder = Vec::new();
    while pos < rest.len() {
        let (m, c) = rest[pos];
        match basis.iter().find(|g| divides(g.lead(), &m)) {
            Some(g) => {
                let q = quotient(&m, g.lead());
                rest = sub_scaled(fp, &rest[pos + 1..], c, &q, &g.terms[1..]);
                pos = 0;
            }
            None => {
                remainder.push((m, c));
                pos += 1;
            }
        }
    }
    SparsePoly { terms: remainder }
}

fn s_polynomial(fp: &PrimeField, f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let l = lcm(f.lead(), g.lead());
    let mf = quotient(&l, f.lead());
    let mg = quotient(&l, g.lead());
    let scaled_f: Vec<_> = f.terms[1..].iter().map(|t| (times(&mf, &t.0), t.1)).collect();
    SparsePoly { terms: sub_scaled(fp, &scaled_f, 1, &mg, &g.terms[1..]) }
}

/// Outcome of a completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Completion {
    Unit,
    /// A Gröbner basis not containing a constant; the ideal is proper.
    Proper(Vec<SparsePoly>),
}

/// Decides whether the generators span the unit ideal.
pub(crate) fn complete(fp: &PrimeField, generators: Vec<SparsePoly>) -> Completion {
    let mut basis: Vec<SparsePoly> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();

    let add = |mut r: SparsePoly, basis: &mut Vec<SparsePoly>, pending: &mut Vec<(usize, usize)>| -> bool {
        r.make_monic(fp);
        if r.is_constant() {
            return true;
        }
        let k = basis.len();
        pending.extend((0..k).map(|i| (i, k)));
        basis.push(r);
        false
    };

    for g in generators {
        let r = reduce(fp, &g, &basis);
        if !r.terms.is_empty() && add(r, &mut basis, &mut pending) {
            return Completion::Unit;
        }
    }

    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first
        let idx = (0..pending.len())
            .min_by(|&a, &b| {
                let (i, j) = pending[a];
                let (k, l) = pending[b];
                cmp(&lcm(basis[i].lead(), basis[j].lead()), &lcm(basis[k].lead(), basis[l].lead()))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(idx);
        done.insert((i, j));
        let (li, lj) = (basis[i].lead(), basis[j].lead());
        let l = lcm(li, lj);
        if l == times(li, lj) {
            continue;
        }
        let pair = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lead(), &l)
                && done.contains(&pair(i, k))
                && done.contains(&pair(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fp, &basis[i], &basis[j]);
        let r = reduce(fp, &s, &basis);
        if !r.terms.is_empty() && add(r, &mut basis, &mut pending) {
            return Completion::Unit;
        }
    }
    Completion::Proper(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(fp: &PrimeField, terms: &[([u16; 3], i64)]) -> SparsePoly {
        SparsePoly::from_terms(fp, terms.iter().map(|&(m, c)| (m, fp.reduce(c))).collect())
    }

    #[test]
    fn grevlex_order() {
        assert_eq!(cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(cmp(&[0, 1, 0], &[0, 0, 1]), Ordering::Greater);
        // x z^0 y^2 vs x^2 z: same degree, smaller t-exponent wins
        assert_eq!(cmp(&[1, 2, 0], &[2, 0, 1]), Ordering::Greater);
        assert_eq!(cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn unit_and_proper() {
        let fp = PrimeField::new(7).unwrap();
        // x, x - 1 generate the unit ideal
        let unit = complete(&fp, vec![sp(&fp, &[([1, 0, 0], 1)]), sp(&fp, &[([1, 0, 0], 1), ([0, 0, 0], -1)])]);
        assert_eq!(unit, Completion::Unit);
        // x - 1, y - 1, xyt - 1 has the point (1, 1, 1)
        let proper = complete(
            &fp,
            vec![
                sp(&fp, &[([1, 0, 0], 1), ([0, 0, 0], -1)]),
                sp(&fp, &[([0, 1, 0], 1), ([0, 0, 0], -1)]),
                sp(&fp, &[([1, 1, 1], 1), ([0, 0, 0], -1)]),
            ],
        );
        assert!(matches!(proper, Completion::Proper(_)));
        // x, xyt - 1 is the unit ideal: t·y·x - (xyt - 1) = 1
        let torus = complete(&fp, vec![sp(&fp, &[([1, 0, 0], 1)]), sp(&fp, &[([1, 1, 1], 1), ([0, 0, 0], -1)])]);
        assert_eq!(torus, Completion::Unit);
    }
}
