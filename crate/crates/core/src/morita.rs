//! Matrix algebras `M_n(B)` over a presented algebra `B`, presented by
//! matrix units `e_ij` and central lifts `z_k` of the generators of `B`,
//! together with idempotent checks, fullness certificates and filtered
//! dimensions of corners `e M_n(B) e`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::linalg::SpanBasis;
use crate::presentation::Presentation;
use crate::rewrite::{groebner, TruncatedGB};
use crate::scalars::{FieldAutomorphism, Scalar};

/// Presentation of `M_n(B)`.
///
/// Generators are `e_11, e_12, ..., e_nn` followed by `z_1, ..., z_m`.
/// Relations, in order: `e_ij e_kl - δ_jk e_il` for all `i, j, k, l`;
/// `sum_i e_ii - 1`; `z_k e_ij - e_ij z_k` for all `k, i, j`; and every base
/// relation rewritten in the `z_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPresentation {
    base: Presentation,
    n: usize,
    pres: Presentation,
}

impl MatrixPresentation {
    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pres(&self) -> &Presentation {
        &self.pres
    }

    /// Generator index of `e_{i+1, j+1}`.
    pub fn unit_index(&self, i: usize, j: usize) -> usize {
        assert!(i < self.n && j < self.n);
        i * self.n + j
    }

    /// Generator index of the lift `z_{k+1}`.
    pub fn lift_index(&self, k: usize) -> usize {
        assert!(k < self.base.ngens());
        self.n * self.n + k
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens()
    }

    /// The matrix unit `e_{i+1, j+1}` as a polynomial.
    pub fn unit(&self, i: usize, j: usize) -> NCPoly {
        NCPoly::gen(self.ngens(), self.unit_index(i, j))
    }

    pub fn one(&self) -> NCPoly {
        NCPoly::one(self.ngens())
    }
}

fn unit_name(n: usize, i: usize, j: usize) -> String {
    if n <= 9 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{}_{}", i + 1, j + 1)
    }
}

pub fn matrix_presentation(p: &Presentation, n: usize) -> Result<MatrixPresentation> {
    if n == 0 {
        return Err(Error::InvalidArgument("matrix size must be at least 1"));
    }
    let m = p.ngens();
    let total = n * n + m;
    let mut names: Vec<String> = Vec::with_capacity(total);
    for i in 0..n {
        for j in 0..n {
            names.push(unit_name(n, i, j));
        }
    }
    names.extend((1..=m).map(|k| format!("z{k}")));

    let e = |i: usize, j: usize| NCPoly::gen(total, i * n + j);
    let z = |k: usize| NCPoly::gen(total, n * n + k);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut r = &e(i, j) * &e(k, l);
                    if j == k {
                        r = &r - &e(i, l);
                    }
                    rels.push(r);
                }
            }
        }
    }
    let mut unit_sum = -&NCPoly::one(total);
    for i in 0..n {
        unit_sum = &unit_sum + &e(i, i);
    }
    rels.push(unit_sum);
    for k in 0..m {
        for i in 0..n {
            for j in 0..n {
                rels.push(&(&z(k) * &e(i, j)) - &(&e(i, j) * &z(k)));
            }
        }
    }
    let lifts: Vec<NCPoly> = (0..m).map(z).collect();
    for r in p.relations() {
        let lifted = r.substitute(&lifts)?;
        if lifted.is_zero() {
            return Err(Error::InvalidArgument("base relation vanished"));
        }
        rels.push(lifted);
    }
    let pres = Presentation::new(format!("M{n}({})", p.name()), p.field(), names, rels)?;
    Ok(MatrixPresentation {
        base: p.clone(),
        n,
        pres,
    })
}

/// Matrix construction commutes with twisting: the unit and commutation
/// relations have rational coefficients, so only the lifted base relations
/// move, identically on both sides.
pub fn twist_matrix_commutes(
    p: &Presentation,
    n: usize,
    sigma: &FieldAutomorphism,
) -> Result<bool> {
    let left = matrix_presentation(&p.twist(sigma)?, n)?;
    let right = matrix_presentation(p, n)?.pres.twist(sigma)?;
    Ok(left.pres == right)
}

/// Completion used for questions about elements of degree at most `deg`.
fn basis_for(mp: &MatrixPresentation, deg: usize) -> Result<TruncatedGB> {
    groebner(&mp.pres, deg.max(2) + 2)
}

/// Dimension of the image of the words of length at most `d`.
pub fn filtered_dimension(mp: &MatrixPresentation, d: usize) -> Result<usize> {
    let gb = basis_for(mp, d)?;
    Ok(filtered_dims_with(&gb, mp.ngens(), d)
        .pop()
        .expect("d + 1 entries"))
}

/// Filtered dimensions for `0..=d` from one completion.
pub fn filtered_dimensions(mp: &MatrixPresentation, d: usize) -> Result<Vec<usize>> {
    let gb = basis_for(mp, d)?;
    Ok(filtered_dims_with(&gb, mp.ngens(), d))
}

fn filtered_dims_with(gb: &TruncatedGB, m: usize, d: usize) -> Vec<usize> {
    let mut span = SpanBasis::new();
    let mut dims = Vec::with_capacity(d + 1);
    for len in 0..=d {
        for w in Word::all_of_length(m, len) {
            let v = gb.normal_form(&NCPoly::monomial(m, w, Scalar::one())).poly;
            span.insert(&v, 0);
        }
        dims.push(span.dim());
    }
    dims
}

fn check_element(e: &NCPoly, mp: &MatrixPresentation) -> Result<()> {
    if e.ngens() != mp.ngens() {
        return Err(Error::GeneratorMismatch {
            expected: mp.ngens(),
            found: e.ngens(),
        });
    }
    let w = e.field_width();
    if w > mp.pres.field().k {
        return Err(Error::FieldMismatch {
            expected: mp.pres.field().k,
            found: w,
        });
    }
    Ok(())
}

fn idempotent_with(e: &NCPoly, gb: &TruncatedGB) -> Result<bool> {
    let sq = e.try_mul(e)?.try_sub(e)?;
    let deg = sq.degree().unwrap_or(0);
    if deg > gb.complete_to() {
        return Err(Error::DegreeBudget {
            needed: deg,
            available: gb.complete_to(),
        });
    }
    Ok(gb.normal_form(&sq).poly.is_zero())
}

/// Checks `e^2 = e` using the completion truncated at degree `d`.
pub fn verify_idempotent(e: &NCPoly, mp: &MatrixPresentation, d: usize) -> Result<bool> {
    check_element(e, mp)?;
    let gb = groebner(&mp.pres, d.max(2))?;
    idempotent_with(e, &gb)
}

/// `1 = sum coeff * u * e * v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullnessCertificate {
    pub terms: Vec<(Scalar, Word, Word)>,
    /// Largest `|u| + |v|` searched.
    pub bound: usize,
    /// The combination minus 1 reduces to zero.
    pub verified: bool,
}

impl FullnessCertificate {
    /// The element `sum coeff * u * e * v`.
    pub fn combination(&self, e: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero(e.ngens());
        for (c, u, v) in &self.terms {
            acc = &acc + &e.sandwich(u, v).scale(c);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fullness {
    Full(FullnessCertificate),
    /// No expression of 1 with `|u| + |v| <= bound`.
    UnknownAt {
        bound: usize,
    },
}

/// Semi-decides whether `e` generates the unit ideal, i.e.
/// `M_n(B) e M_n(B) = M_n(B)`, searching `u e v` with `|u| + |v| <= d`.
pub fn is_full_idempotent(e: &NCPoly, mp: &MatrixPresentation, d: usize) -> Result<Fullness> {
    check_element(e, mp)?;
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let de = e.degree().unwrap_or(0);
    let gb = basis_for(mp, (d + de).max(2 * de))?;
    if !idempotent_with(e, &gb)? {
        return Err(Error::NotIdempotent);
    }
    let m = mp.ngens();
    let one = gb.normal_form(&NCPoly::one(m)).poly;
    let mut span = SpanBasis::tracking();
    let mut pairs: Vec<(Word, Word)> = Vec::new();
    for total in 0..=d {
        for left_len in 0..=total {
            for u in Word::all_of_length(m, left_len) {
                for v in Word::all_of_length(m, total - left_len) {
                    let nf = gb.normal_form(&e.sandwich(&u, &v)).poly;
                    span.insert(&nf, pairs.len());
                    pairs.push((u.clone(), v));
                }
            }
        }
        if let Some(combo) = span.express(&one) {
            let terms: Vec<(Scalar, Word, Word)> = combo
                .into_iter()
                .map(|(id, c)| (c, pairs[id].0.clone(), pairs[id].1.clone()))
                .collect();
            let mut cert = FullnessCertificate {
                terms,
                bound: total,
                verified: false,
            };
            let diff = cert.combination(e).try_sub(&NCPoly::one(m))?;
            cert.verified = gb.normal_form(&diff).poly.is_zero();
            return Ok(Fullness::Full(cert));
        }
    }
    Ok(Fullness::UnknownAt { bound: d })
}

/// For each `c` in `0..=d`, the dimension of the span of `e w e` over words
/// `w` of length at most `c`.
pub fn corner_filtered_dims(e: &NCPoly, mp: &MatrixPresentation, d: usize) -> Result<Vec<usize>> {
    check_element(e, mp)?;
    let de = e.degree().unwrap_or(0);
    let gb = basis_for(mp, d + 2 * de)?;
    if !idempotent_with(e, &gb)? {
        return Err(Error::NotIdempotent);
    }
    let m = mp.ngens();
    let mut span = SpanBasis::new();
    let mut dims = Vec::with_capacity(d + 1);
    for len in 0..=d {
        for w in Word::all_of_length(m, len) {
            let ewe = e
                .try_mul(&NCPoly::monomial(m, w, Scalar::one()))?
                .try_mul(e)?;
            span.insert(&gb.normal_form(&ewe).poly, 0);
        }
        dims.push(span.dim());
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::FieldSpec;
    use alloc::vec;

    fn rationals() -> Presentation {
        Presentation::free(FieldSpec::new(0), 0)
    }

    #[test]
    fn shape_over_rationals() {
        let mp = matrix_presentation(&rationals(), 2).unwrap();
        assert_eq!(mp.pres().generators(), &["e11", "e12", "e21", "e22"]);
        assert_eq!(mp.pres().relations().len(), 17);
        assert_eq!(mp.unit_index(1, 0), 2);
    }

    #[test]
    fn lifts_and_commutators() {
        let free = Presentation::free(FieldSpec::new(0), 1);
        let mp = matrix_presentation(&free, 2).unwrap();
        assert_eq!(mp.ngens(), 5);
        assert_eq!(mp.lift_index(0), 4);
        assert_eq!(mp.pres().relations().len(), 17 + 4);
    }

    #[test]
    fn dimensions_over_rationals() {
        let mp = matrix_presentation(&rationals(), 2).unwrap();
        assert_eq!(filtered_dimension(&mp, 2).unwrap(), 4);
        let one = matrix_presentation(&Presentation::free(FieldSpec::new(0), 1), 1).unwrap();
        assert_eq!(filtered_dimensions(&one, 3).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn idempotents() {
        let mp = matrix_presentation(&rationals(), 2).unwrap();
        let e11 = mp.unit(0, 0);
        let e12 = mp.unit(0, 1);
        assert!(verify_idempotent(&e11, &mp, 2).unwrap());
        assert!(verify_idempotent(&(&e11 + &e12), &mp, 2).unwrap());
        assert!(!verify_idempotent(&e12, &mp, 2).unwrap());
        let cube = &(&e11 * &e11) * &e11;
        assert!(matches!(
            verify_idempotent(&cube, &mp, 3),
            Err(Error::DegreeBudget {
                needed: 6,
                available: 3
            })
        ));
    }

    #[test]
    fn fullness() {
        let mp = matrix_presentation(&rationals(), 2).unwrap();
        let e11 = mp.unit(0, 0);
        match is_full_idempotent(&e11, &mp, 2).unwrap() {
            Fullness::Full(cert) => {
                assert!(cert.verified);
                assert_eq!(cert.bound, 2);
            }
            other => panic!("{other:?}"),
        }
        match is_full_idempotent(&mp.one(), &mp, 0).unwrap() {
            Fullness::Full(cert) => assert_eq!(cert.bound, 0),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            is_full_idempotent(&NCPoly::zero(4), &mp, 2),
            Err(Error::ZeroElement)
        );
        assert_eq!(
            is_full_idempotent(&mp.unit(0, 1), &mp, 2),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn corner_of_rationals() {
        let mp = matrix_presentation(&rationals(), 2).unwrap();
        let dims = corner_filtered_dims(&mp.unit(0, 0), &mp, 3).unwrap();
        assert_eq!(dims, vec![1, 1, 1, 1]);
        let whole = corner_filtered_dims(&mp.one(), &mp, 3).unwrap();
        assert_eq!(whole, filtered_dimensions(&mp, 3).unwrap());
    }

    #[test]
    fn twisting_commutes() {
        let t = Scalar::var(0);
        let a = crate::aalpha::make_aalpha(&t);
        let s = FieldAutomorphism::affine(1, 0, Scalar::one(), Scalar::one()).unwrap();
        assert!(twist_matrix_commutes(&a, 2, &s).unwrap());
        assert!(twist_matrix_commutes(&a, 3, &FieldAutomorphism::identity(1)).unwrap());
    }
}
