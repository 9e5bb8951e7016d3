//! Exact linear algebra over `Q(t1, ..., tk)`.
//!
//! [`SpanBasis`] is an incremental echelon form for vectors indexed by
//! words (stored as [`NCPoly`]), optionally remembering how each basis row
//! was combined from the inserted vectors. [`rank_fraction_free`] computes
//! ranks of matrices by fraction-free sparse elimination over `Z[t1, ..., tk]`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::freealg::{NCPoly, Word};
use crate::scalars::{gcd, MPoly, Scalar};

#[derive(Clone, Debug)]
struct Row {
    vec: NCPoly,
    /// Coefficients over the ids of inserted vectors; empty unless tracking.
    combo: BTreeMap<usize, Scalar>,
}

/// Echelon basis of a subspace of the free algebra, pivoted on leading words.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    rows: BTreeMap<Word, Row>,
    track: bool,
}

/// Result of reducing a vector against a [`SpanBasis`].
#[derive(Clone, Debug)]
pub struct Reduced {
    /// What is left after subtracting basis rows; zero iff the vector is in the span.
    pub residual: NCPoly,
    /// `vector - residual` as a combination of inserted ids (only when tracking).
    pub combination: BTreeMap<usize, Scalar>,
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
            track: false,
        }
    }

    /// Basis that records combinations, for producing certificates.
    pub fn tracking() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
            track: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &NCPoly) -> Reduced {
        let mut cur = v.clone();
        let mut combo: BTreeMap<usize, Scalar> = BTreeMap::new();
        let mut kept: Vec<(Word, Scalar)> = Vec::new();
        // terms are consumed from the top; rows only touch smaller words
        while let Some((w, c)) = cur.terms().first().cloned() {
            match self.rows.get(&w) {
                Some(row) => {
                    cur = cur.try_sub(&row.vec.scale(&c)).expect("same context");
                    if self.track {
                        for (id, a) in &row.combo {
                            add_to(&mut combo, *id, &(a * &c));
                        }
                    }
                }
                None => {
                    kept.push((w, c));
                    cur = NCPoly::from_sorted(cur.ngens(), cur.terms()[1..].to_vec());
                }
            }
        }
        Reduced {
            residual: NCPoly::from_sorted(v.ngens(), kept),
            combination: combo,
        }
    }

    pub fn contains(&self, v: &NCPoly) -> bool {
        self.reduce(v).residual.is_zero()
    }

    /// Adds `v` (tagged `id`) to the span; returns false if it was dependent.
    pub fn insert(&mut self, v: &NCPoly, id: usize) -> bool {
        let red = self.reduce(v);
        if red.residual.is_zero() {
            return false;
        }
        let lead = red.residual.leading_coeff().expect("nonzero").clone();
        let inv = lead.inv().expect("nonzero");
        let vec = red.residual.scale(&inv);
        let mut combo = BTreeMap::new();
        if self.track {
            // residual = v - sum(combination)
            combo.insert(id, inv.clone());
            for (k, a) in red.combination {
                add_to(&mut combo, k, &-(&a * &inv));
            }
        }
        let pivot = vec.leading_word().expect("nonzero").clone();
        self.rows.insert(pivot, Row { vec, combo });
        true
    }

    /// Expresses `v` as a combination of inserted ids, if it is in the span.
    pub fn express(&self, v: &NCPoly) -> Option<BTreeMap<usize, Scalar>> {
        let red = self.reduce(v);
        if red.residual.is_zero() {
            Some(red.combination)
        } else {
            None
        }
    }
}

impl Default for SpanBasis {
    fn default() -> Self {
        SpanBasis::new()
    }
}

fn add_to(map: &mut BTreeMap<usize, Scalar>, k: usize, a: &Scalar) {
    let s = match map.get(&k) {
        Some(x) => x + a,
        None => a.clone(),
    };
    if s.is_zero() {
        map.remove(&k);
    } else {
        map.insert(k, s);
    }
}

/// Rank of a matrix over `Q(t1, ..., tk)` by fraction-free elimination.
///
/// Rows are scaled into `Z[t]`. Specializing `t` can only lower the rank,
/// so if an integer specialization already has rank `min(rows, cols)` that
/// is the answer. Otherwise the rows are eliminated symbolically: each
/// incoming row is reduced against the pivot rows by cross-multiplying with
/// the cofactors of the gcd of the two leading entries, then divided by its
/// content, so entries stay in `Z[t]` and stay small when the input is
/// sparse.
pub fn rank_fraction_free(rows: &[Vec<Scalar>]) -> usize {
    let cleared: Vec<Vec<MPoly>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let ncols = cleared.first().map_or(0, Vec::len);
    let full = cleared.len().min(ncols);
    let width = cleared
        .iter()
        .flatten()
        .map(MPoly::width)
        .max()
        .unwrap_or(0);
    if width > 0 {
        for start in [3u32, 11] {
            let point: Vec<BigInt> = (0..width as u32)
                .map(|v| BigInt::from(start + 2 * v))
                .collect();
            let special: Vec<Vec<MPoly>> = cleared
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| MPoly::constant(evaluate(x, &point)))
                        .collect()
                })
                .collect();
            if echelon_rank(&special) == full {
                return full;
            }
        }
    }
    echelon_rank(&cleared)
}

fn evaluate(p: &MPoly, point: &[BigInt]) -> BigInt {
    p.terms()
        .iter()
        .map(|(m, c)| {
            m.exponents()
                .iter()
                .zip(point)
                .fold(c.clone(), |acc, (&e, x)| acc * x.pow(e))
        })
        .sum()
}

fn echelon_rank(rows: &[Vec<MPoly>]) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, MPoly>> = BTreeMap::new();
    for r in rows {
        let mut row: BTreeMap<usize, MPoly> = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        make_primitive(&mut row);
        while let Some((&col, lead)) = row.iter().next() {
            let Some(piv) = pivots.get(&col) else {
                break;
            };
            let plead = &piv[&col];
            let g = gcd(lead, plead);
            let a = plead.div_exact(&g).expect("gcd divides");
            let b = lead.div_exact(&g).expect("gcd divides");
            let mut next = BTreeMap::new();
            for (&c, x) in &row {
                next.insert(c, a.mul(x));
            }
            for (&c, y) in piv {
                let v = match next.remove(&c) {
                    Some(x) => x.sub(&b.mul(y)),
                    None => b.mul(y).neg(),
                };
                if !v.is_zero() {
                    next.insert(c, v);
                }
            }
            row = next;
            make_primitive(&mut row);
        }
        if let Some(&col) = row.keys().next() {
            pivots.insert(col, row);
        }
    }
    pivots.len()
}

/// Divides a sparse row by the gcd of its entries.
fn make_primitive(row: &mut BTreeMap<usize, MPoly>) {
    let mut g = MPoly::zero();
    for x in row.values() {
        g = if g.is_zero() { x.clone() } else { gcd(&g, x) };
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for x in row.values_mut() {
        *x = x.div_exact(&g).expect("content divides");
    }
}

/// Multiplies a row by the lcm of its denominators.
fn clear_denominators(row: &[Scalar]) -> Vec<MPoly> {
    let mut l = MPoly::one();
    for x in row {
        let d = x.denominator();
        if !d.is_one() {
            let g = gcd(&l, d);
            l = l.mul(&d.div_exact(&g).expect("gcd divides"));
        }
    }
    row.iter()
        .map(|x| {
            let f = l.div_exact(x.denominator()).expect("lcm is a multiple");
            x.numerator().mul(&f)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn fraction_free_rank() {
        let m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ];
        assert_eq!(rank_fraction_free(&m), 2);
        let t = Scalar::var(0);
        let m2 = vec![vec![q(2), t.clone()], vec![t.clone(), q(2)]];
        assert_eq!(rank_fraction_free(&m2), 2);
        let half = Scalar::from_ratio(1, 2).unwrap();
        let m3 = vec![vec![half.clone(), &t * &half], vec![q(1), t.clone()]];
        assert_eq!(rank_fraction_free(&m3), 1);
        assert_eq!(rank_fraction_free(&[]), 0);
    }

    #[test]
    fn rank_survives_a_bad_specialization() {
        let t = Scalar::var(0);
        // singular at t = 3, the first specialization point
        let m = vec![vec![&t - &q(3), q(0)], vec![q(0), q(1)]];
        assert_eq!(rank_fraction_free(&m), 2);
        // rank one over Q(t) although every entry is nonzero
        let m = vec![vec![t.clone(), q(1)], vec![&t * &t, t.clone()]];
        assert_eq!(rank_fraction_free(&m), 1);
        let u = Scalar::var(1);
        let m = vec![
            vec![t.clone(), u.clone(), q(0)],
            vec![&t * &u, &u * &u, q(0)],
            vec![q(1), q(1), &t - &u],
        ];
        assert_eq!(rank_fraction_free(&m), 2);
    }

    #[test]
    fn span_with_certificates() {
        let x = |i| NCPoly::gen(2, i);
        let mut s = SpanBasis::tracking();
        let a = &x(0) + &x(1);
        let b = &x(0) - &x(1);
        assert!(s.insert(&a, 0));
        assert!(s.insert(&b, 1));
        assert!(!s.insert(&x(0), 2));
        let combo = s.express(&x(1)).unwrap();
        // x2 = (a - b) / 2
        assert_eq!(combo.get(&0), Some(&Scalar::from_ratio(1, 2).unwrap()));
        assert_eq!(combo.get(&1), Some(&Scalar::from_ratio(-1, 2).unwrap()));
        assert!(s.express(&NCPoly::one(2)).is_none());
        assert_eq!(s.dim(), 2);
    }
}
