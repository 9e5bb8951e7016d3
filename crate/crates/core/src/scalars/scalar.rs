use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::mpoly::{gcd, MPoly};
use crate::error::{Error, Result};

/// An element of `Q(t1, ..., tk)` in canonical form.
///
/// `num / den` with `gcd(num, den) = 1` in `Z[t]` and the graded-lex leading
/// coefficient of `den` positive. Two scalars are equal as field elements
/// exactly when their representations are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: MPoly,
    den: MPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Scalar {
            num: MPoly::constant(v),
            den: MPoly::one(),
        }
    }

    /// `p / q` for integers; `None` when `q = 0`.
    pub fn from_ratio(p: i64, q: i64) -> Option<Self> {
        Scalar::from_int(p).checked_div(&Scalar::from_int(q)).ok()
    }

    /// The transcendental generator `t_{i+1}` (0-based index).
    pub fn var(i: usize) -> Self {
        Scalar {
            num: MPoly::var(i),
            den: MPoly::one(),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        Scalar {
            num: p,
            den: MPoly::one(),
        }
    }

    /// Reduces `num / den` to canonical form.
    pub fn from_fraction(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Ok(Scalar::signed(num, den))
    }

    /// Canonical form for a fraction already known to be coprime up to an
    /// integer factor.
    pub(crate) fn from_coprime_up_to_content(num: MPoly, den: MPoly) -> Self {
        let g = num.content().gcd(&den.content());
        if g.is_one() {
            Scalar::signed(num, den)
        } else {
            Scalar::signed(
                num.div_exact_int(&g).expect("content divides"),
                den.div_exact_int(&g).expect("content divides"),
            )
        }
    }

    fn signed(num: MPoly, den: MPoly) -> Self {
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            Scalar {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            Scalar { num, den }
        }
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the scalar lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// True when the scalar is an integer.
    pub fn is_integer(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// `(p, q)` for a rational scalar `p/q` with `q > 0`.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        Some((self.num.as_constant()?, self.den.as_constant()?))
    }

    /// Sign of the numerator's leading coefficient; used for printing.
    pub fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }

    /// Number of transcendental generators needed to write this scalar.
    pub fn width(&self) -> usize {
        self.num.width().max(self.den.width())
    }

    /// Generators that occur: numerator first, then denominator, each in
    /// descending graded-lex term order and increasing index within a term.
    /// Repetitions are not removed.
    pub fn variables_in_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.num
            .variables_in_term_order()
            .chain(self.den.variables_in_term_order())
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::signed(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    fn add_impl(&self, other: &Scalar, negate: bool) -> Scalar {
        let rhs_num = if negate {
            other.num.neg()
        } else {
            other.num.clone()
        };
        if self.is_zero() {
            return Scalar {
                num: rhs_num,
                den: other.den.clone(),
            };
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&rhs_num);
            if self.den.is_one() {
                return Scalar::from_poly(num);
            }
            return Scalar::from_fraction(num, self.den.clone()).expect("nonzero denominator");
        }
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)) with g = gcd(b, d)
        let g = gcd(&self.den, &other.den);
        let b_g = self.den.div_exact(&g).expect("gcd divides");
        let d_g = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d_g).add(&rhs_num.mul(&b_g));
        let den = self.den.mul(&d_g);
        if g.is_one() {
            // no common factor with either denominator can survive
            return Scalar::from_coprime_up_to_content(num, den);
        }
        Scalar::from_fraction(num, den).expect("nonzero denominator")
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_poly(self.num.mul(&other.num));
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::signed(a.mul(&c), b.mul(&d))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_bigint(v)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.mul_impl(rhs)
    }
}

/// Panics on division by zero; see [`Scalar::checked_div`].
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order on representations (not a field order).
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        fn key(p: &MPoly) -> impl Iterator<Item = &(super::mpoly::Monomial, BigInt)> {
            p.terms().iter()
        }
        key(&self.num)
            .cmp(key(&other.num))
            .then_with(|| key(&self.den).cmp(key(&other.den)))
    }
}

fn is_atom(p: &MPoly) -> bool {
    // a nonnegative integer or a single power product with coefficient 1
    match p.terms() {
        [(m, c)] => {
            (m.is_one() && !c.is_negative())
                || (c.is_one() && m.exponents().iter().filter(|e| **e > 0).count() == 1)
        }
        _ => false,
    }
}

fn is_product(p: &MPoly) -> bool {
    p.terms().len() == 1
}

impl fmt::Display for Scalar {
    /// `num`, or `num/den` with parentheses where precedence needs them.
    /// The output parses back to the same scalar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if is_product(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if is_atom(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}
