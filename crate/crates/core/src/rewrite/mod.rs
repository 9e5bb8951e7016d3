//! Degree-truncated noncommutative Groebner bases (Buchberger-Mora
//! completion under deglex) and the questions they answer: normal forms,
//! ideal membership, graded dimensions and generation of the quotient.

mod groebner;

pub use groebner::{groebner, groebner_with_budget, NormalForm, Strategy, TruncatedGB};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::NCPoly;
use crate::linalg::SpanBasis;
use crate::presentation::Presentation;

/// Outcome of an ideal membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    /// The normal form up to `maxdeg` is nonzero. `exact` is set when the
    /// relations are homogeneous and the completion covers `deg(f)`, in
    /// which case the element is certainly not in the ideal.
    NotMember {
        maxdeg: usize,
        exact: bool,
    },
}

pub fn ideal_membership(f: &NCPoly, p: &Presentation, maxdeg: usize) -> Result<Membership> {
    check_context(f, p)?;
    let deg = f.degree().unwrap_or(0);
    if deg > maxdeg {
        return Err(Error::DegreeBudget {
            needed: deg,
            available: maxdeg,
        });
    }
    let gb = groebner(p, maxdeg.max(p.max_relation_degree()))?;
    let nf = gb.normal_form(f);
    if nf.poly.is_zero() {
        return Ok(Membership::Member);
    }
    Ok(Membership::NotMember {
        maxdeg,
        exact: p.is_homogeneous() && nf.verified,
    })
}

fn check_context(f: &NCPoly, p: &Presentation) -> Result<()> {
    if f.ngens() != p.ngens() {
        return Err(Error::GeneratorMismatch {
            expected: p.ngens(),
            found: f.ngens(),
        });
    }
    let w = f.field_width();
    if w > p.field().k {
        return Err(Error::FieldMismatch {
            expected: p.field().k,
            found: w,
        });
    }
    Ok(())
}

/// Dimension of the degree-`n` component of a graded quotient, counted as
/// normal words of length `n` with respect to `groebner(p, maxdeg)`.
pub fn graded_dimension(p: &Presentation, n: usize, maxdeg: usize) -> Result<usize> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    if n > maxdeg {
        return Err(Error::DegreeBudget {
            needed: n,
            available: maxdeg,
        });
    }
    let gb = groebner(p, maxdeg.max(p.max_relation_degree()))?;
    Ok(gb.count_normal_words(n))
}

/// Graded dimensions for degrees `0..=upto` from a single completion.
pub fn hilbert_series(p: &Presentation, upto: usize) -> Result<Vec<usize>> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let gb = groebner(p, upto.max(p.max_relation_degree()))?;
    Ok((0..=upto).map(|n| gb.count_normal_words(n)).collect())
}

/// Verdict of the generation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generation {
    /// Every generator is a combination of products of at most `factors`
    /// of the given elements.
    Yes { factors: usize },
    /// Not found among products of at most `maxdeg` factors.
    NoUpTo { maxdeg: usize },
}

/// Do `elems` generate the quotient algebra `p` as a unital algebra?
///
/// Saturates the span of normal forms of products of at most `maxdeg`
/// factors from `elems` (plus 1) and checks whether each generator's normal
/// form lies in it. A "yes" is a certificate; a "no" is bounded.
pub fn is_generating(elems: &[NCPoly], p: &Presentation, maxdeg: usize) -> Result<Generation> {
    if maxdeg < p.max_relation_degree() {
        return Err(Error::InvalidArgument(
            "maxdeg is below the degree of a relation",
        ));
    }
    for e in elems {
        check_context(e, p)?;
    }
    let m = p.ngens();
    let gb = groebner(p, maxdeg)?;
    let nf = |f: &NCPoly| gb.normal_form(f).poly;
    let targets: Vec<NCPoly> = (0..m).map(|i| nf(&NCPoly::gen(m, i))).collect();
    let mut span = SpanBasis::new();
    let one = nf(&NCPoly::one(m));
    let mut frontier = Vec::new();
    if span.insert(&one, 0) {
        frontier.push(one);
    }
    for factors in 1..=maxdeg {
        let mut next = Vec::new();
        for s in &frontier {
            for y in elems {
                let v = nf(&s.try_mul(y)?);
                if span.insert(&v, 0) {
                    next.push(v);
                }
            }
        }
        if targets.iter().all(|t| span.contains(t)) {
            return Ok(Generation::Yes { factors });
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(Generation::NoUpTo { maxdeg })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;
    use crate::presentation::FieldSpec;
    use crate::scalars::Scalar;
    use alloc::vec;

    fn x(letters: &[u32]) -> NCPoly {
        NCPoly::monomial(2, Word::from_letters(letters.to_vec()), Scalar::one())
    }

    fn a(alpha: Scalar, k: usize) -> (Presentation, NCPoly) {
        let g = &(&x(&[0, 0]) + &x(&[1, 1])) + &x(&[0, 1]).scale(&alpha);
        (
            Presentation::with_default_names("A", FieldSpec::new(k), 2, vec![g.clone()]).unwrap(),
            g,
        )
    }

    #[test]
    fn membership_examples() {
        let (p, g) = a(Scalar::var(0), 1);
        assert_eq!(ideal_membership(&g, &p, 2).unwrap(), Membership::Member);
        let h = &g.sandwich(&Word::gen(0), &Word::gen(1)) + &g;
        assert_eq!(ideal_membership(&h, &p, 4).unwrap(), Membership::Member);
        assert_eq!(
            ideal_membership(&x(&[0]), &p, 2).unwrap(),
            Membership::NotMember {
                maxdeg: 2,
                exact: true
            }
        );
    }

    #[test]
    fn dimensions() {
        let free = Presentation::free(FieldSpec::new(0), 2);
        assert_eq!(graded_dimension(&free, 3, 3).unwrap(), 8);
        let (p, _) = a(Scalar::var(0), 1);
        assert_eq!(graded_dimension(&p, 2, 2).unwrap(), 3);
        assert_eq!(hilbert_series(&p, 5).unwrap(), vec![1, 2, 3, 4, 5, 6]);
        let inhom = Presentation::with_default_names(
            "B",
            FieldSpec::new(0),
            2,
            vec![&x(&[0, 0]) - &x(&[1])],
        )
        .unwrap();
        assert_eq!(graded_dimension(&inhom, 2, 2), Err(Error::Inhomogeneous));
    }

    #[test]
    fn generation_examples() {
        let (p, _) = a(Scalar::from_int(3), 0);
        assert_eq!(
            is_generating(&[x(&[0]), x(&[1])], &p, 2).unwrap(),
            Generation::Yes { factors: 1 }
        );
        assert_eq!(
            is_generating(&[x(&[0])], &p, 3).unwrap(),
            Generation::NoUpTo { maxdeg: 3 }
        );
        assert_eq!(
            is_generating(&[&x(&[0]) + &x(&[1]), x(&[1])], &p, 2).unwrap(),
            Generation::Yes { factors: 1 }
        );
        assert!(is_generating(&[x(&[0])], &p, 1).is_err());
    }
}
