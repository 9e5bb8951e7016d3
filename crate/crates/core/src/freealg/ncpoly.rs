use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::word::Word;
use crate::error::{Error, Result};
use crate::scalars::{FieldAutomorphism, Scalar};

/// Element of the free algebra `Q(t)<x1, ..., xm>`.
///
/// Terms are stored in strictly descending deglex order with no zero
/// coefficients; the first term is the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly {
    ngens: usize,
    terms: Vec<(Word, Scalar)>,
}

impl NCPoly {
    pub fn zero(ngens: usize) -> Self {
        NCPoly {
            ngens,
            terms: Vec::new(),
        }
    }

    pub fn one(ngens: usize) -> Self {
        NCPoly::constant(ngens, Scalar::one())
    }

    pub fn constant(ngens: usize, c: Scalar) -> Self {
        NCPoly::monomial(ngens, Word::one(), c)
    }

    /// The generator `x_{i+1}`.
    pub fn gen(ngens: usize, i: usize) -> Self {
        assert!(i < ngens, "generator index out of range");
        NCPoly::monomial(ngens, Word::gen(i), Scalar::one())
    }

    pub fn monomial(ngens: usize, w: Word, c: Scalar) -> Self {
        assert!(w.width() <= ngens, "word uses an undeclared generator");
        if c.is_zero() {
            NCPoly::zero(ngens)
        } else {
            NCPoly {
                ngens,
                terms: alloc::vec![(w, c)],
            }
        }
    }

    /// Collects arbitrary terms, summing repeated words.
    pub fn from_terms<I>(ngens: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in terms {
            assert!(w.width() <= ngens, "word uses an undeclared generator");
            accumulate(&mut acc, w, c);
        }
        NCPoly::from_map(ngens, acc)
    }

    pub(crate) fn from_map(ngens: usize, acc: BTreeMap<Word, Scalar>) -> Self {
        NCPoly {
            ngens,
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Takes terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(ngens: usize, terms: Vec<(Word, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|p| p[0].0 > p[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        NCPoly { ngens, terms }
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Word, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Word length of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(|(w, _)| w.len())
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms
            .iter()
            .find(|(x, _)| x == w)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((w, _)) => self.terms.iter().all(|(x, _)| x.len() == w.len()),
        }
    }

    /// Smallest `k` such that all coefficients lie in `Q(t1, ..., tk)`.
    pub fn field_width(&self) -> usize {
        self.terms.iter().map(|(_, c)| c.width()).max().unwrap_or(0)
    }

    fn check(&self, other: &NCPoly) -> Result<()> {
        if self.ngens != other.ngens {
            return Err(Error::GeneratorMismatch {
                expected: self.ngens,
                found: other.ngens,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(NCPoly::zero(self.ngens));
        }
        let mut acc = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                accumulate(&mut acc, u.concat(v), a * b);
            }
        }
        Ok(NCPoly::from_map(self.ngens, acc))
    }

    fn merge(&self, other: &NCPoly, negate: bool) -> NCPoly {
        use core::cmp::Ordering;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        NCPoly {
            ngens: self.ngens,
            terms: out,
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.ngens);
        }
        if c.is_one() {
            return self.clone();
        }
        NCPoly {
            ngens: self.ngens,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `left * self * right` for words; order is preserved since deglex is a
    /// monoid order.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NCPoly {
        NCPoly {
            ngens: self.ngens,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(left, right), c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> NCPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Sum of the terms of word length exactly `d`.
    pub fn homogeneous_component(&self, d: usize) -> NCPoly {
        NCPoly {
            ngens: self.ngens,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .cloned()
                .collect(),
        }
    }

    /// Evaluates the homomorphism `x_i -> images[i]`.
    pub fn substitute(&self, images: &[NCPoly]) -> Result<NCPoly> {
        if images.len() != self.ngens {
            return Err(Error::GeneratorMismatch {
                expected: self.ngens,
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ngens,
            None => 0,
        };
        if let Some(bad) = images.iter().find(|p| p.ngens != target) {
            return Err(Error::GeneratorMismatch {
                expected: target,
                found: bad.ngens,
            });
        }
        let mut acc = NCPoly::zero(target);
        for (w, c) in &self.terms {
            let mut prod = NCPoly::constant(target, c.clone());
            for l in w.letters() {
                prod = prod.try_mul(&images[*l as usize])?;
            }
            acc = acc.try_add(&prod)?;
        }
        Ok(acc)
    }

    /// Replaces every coefficient by its image under `sigma`.
    pub fn map_coefficients(&self, sigma: &FieldAutomorphism) -> Result<NCPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| Ok((w.clone(), sigma.apply(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(NCPoly {
            ngens: self.ngens,
            terms,
        })
    }

    /// Same polynomial viewed in a free algebra with `ngens` generators.
    pub fn with_ngens(&self, ngens: usize) -> Result<NCPoly> {
        let used = self.terms.iter().map(|(w, _)| w.width()).max().unwrap_or(0);
        if used > ngens {
            return Err(Error::GeneratorMismatch {
                expected: ngens,
                found: used,
            });
        }
        Ok(NCPoly {
            ngens,
            terms: self.terms.clone(),
        })
    }

    /// Writes the polynomial with the given generator names.
    ///
    /// Integer coefficients are written bare, all others parenthesized, as in
    /// `x1*x1 + (t1)*x1*x2 - (1/2)`.
    pub fn write_with<N: AsRef<str>>(&self, f: &mut dyn fmt::Write, names: &[N]) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff_one = abs.is_one();
            if w.is_empty() {
                if abs.is_integer() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
                continue;
            }
            if !coeff_one {
                if abs.is_integer() {
                    write!(f, "{abs}*")?;
                } else {
                    write!(f, "({abs})*")?;
                }
            }
            w.write_with(f, names)?;
        }
        Ok(())
    }
}

pub(crate) fn accumulate(acc: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    use alloc::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Default generator names `x1, ..., xm`.
pub fn default_names(m: usize) -> Vec<alloc::string::String> {
    (1..=m).map(|i| alloc::format!("x{i}")).collect()
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, &default_names(self.ngens))
    }
}

// Operator forms panic on mismatched generator counts; use the `try_*`
// methods where that can happen.
impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &'a NCPoly) -> NCPoly {
        self.try_add(rhs).expect("generator count mismatch")
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &'a NCPoly) -> NCPoly {
        self.try_sub(rhs).expect("generator count mismatch")
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &'a NCPoly) -> NCPoly {
        self.try_mul(rhs).expect("generator count mismatch")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            ngens: self.ngens,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn x(i: usize) -> NCPoly {
        NCPoly::gen(2, i)
    }

    fn t() -> Scalar {
        Scalar::var(0)
    }

    fn a_rel(alpha: &Scalar) -> NCPoly {
        &(&(&x(0) * &x(0)) + &(&x(1) * &x(1))) + &(&x(0) * &x(1)).scale(alpha)
    }

    #[test]
    fn arithmetic_examples() {
        let p = &(&x(0) + &x(1)) * &x(0);
        assert_eq!(format!("{p}"), "x1*x1 + x2*x1");
        assert!((&p - &p).is_zero());
        assert!(p.scale(&Scalar::zero()).is_zero());
        assert!(x(0).try_add(&NCPoly::gen(3, 0)).is_err());
    }

    #[test]
    fn components() {
        let f = &(&NCPoly::constant(2, Scalar::from_int(3)) + &x(0)) + &(&x(0) * &x(1));
        assert_eq!(f.homogeneous_component(2), &x(0) * &x(1));
        assert_eq!(
            f.homogeneous_component(0),
            NCPoly::constant(2, Scalar::from_int(3))
        );
        assert!(f.homogeneous_component(5).is_zero());
        assert_eq!(f.degree(), Some(2));
        assert_eq!(NCPoly::zero(2).degree(), None);
    }

    #[test]
    fn substitution_examples() {
        let f = &x(0) * &x(1);
        assert_eq!(f.substitute(&[x(1), x(0)]).unwrap(), &x(1) * &x(0));
        let g = a_rel(&t());
        let flipped = g.substitute(&[x(0), -&x(1)]).unwrap();
        assert_eq!(flipped, a_rel(&-t()));
        assert_eq!(g.substitute(&[x(0), x(1)]).unwrap(), g);
        assert!(g.substitute(&[x(0)]).is_err());
    }

    #[test]
    fn coefficient_maps() {
        let s = FieldAutomorphism::affine(1, 0, Scalar::one(), Scalar::one()).unwrap();
        let f = (&x(0) * &x(1)).scale(&t());
        let expect = (&x(0) * &x(1)).scale(&(&t() + &Scalar::one()));
        assert_eq!(f.map_coefficients(&s).unwrap(), expect);
        assert_eq!(
            f.map_coefficients(&FieldAutomorphism::identity(1)).unwrap(),
            f
        );
        assert_eq!(x(0).map_coefficients(&s).unwrap(), x(0));
    }

    #[test]
    fn printing() {
        let f = &a_rel(&t()) - &NCPoly::constant(2, Scalar::from_ratio(1, 2).unwrap());
        assert_eq!(format!("{f}"), "x1*x1 + (t1)*x1*x2 + x2*x2 - (1/2)");
        let g = (&x(0) * &x(1)).scale(&Scalar::from_int(-3));
        assert_eq!(format!("{g}"), "-3*x1*x2");
    }
}
