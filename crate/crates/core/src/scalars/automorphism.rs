use alloc::vec::Vec;
use core::fmt;

use super::mpoly::AffineSubst;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Image of one generator: `t_i -> scale * t_target + shift` with rational
/// `scale != 0` and `shift`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineImage {
    scale: Scalar,
    target: usize,
    shift: Scalar,
}

impl AffineImage {
    pub fn new(scale: Scalar, target: usize, shift: Scalar) -> Result<Self> {
        if !scale.is_rational() || !shift.is_rational() {
            return Err(Error::InvalidAutomorphism(
                "scale and shift must be rational",
            ));
        }
        if scale.is_zero() {
            return Err(Error::InvalidAutomorphism("zero scale is not invertible"));
        }
        Ok(AffineImage {
            scale,
            target,
            shift,
        })
    }

    pub fn identity(i: usize) -> Self {
        AffineImage {
            scale: Scalar::one(),
            target: i,
            shift: Scalar::zero(),
        }
    }

    pub fn scale(&self) -> &Scalar {
        &self.scale
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn shift(&self) -> &Scalar {
        &self.shift
    }

    pub fn to_scalar(&self) -> Scalar {
        &(&self.scale * &Scalar::var(self.target)) + &self.shift
    }

    fn to_subst(&self) -> AffineSubst {
        let (sn, sd) = self.scale.as_rational().expect("rational scale");
        let (hn, hd) = self.shift.as_rational().expect("rational shift");
        AffineSubst {
            scale: &sn * &hd,
            target: self.target,
            shift: &hn * &sd,
            den: &sd * &hd,
        }
    }
}

/// Automorphism of `Q(t1, ..., tk)` of the form
/// `t_i -> a_i * t_{pi(i)} + b_i` with `pi` a permutation and `a_i != 0`.
///
/// The class is closed under composition and inversion; both directions are
/// stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldAutomorphism {
    forward: Vec<AffineImage>,
    backward: Vec<AffineImage>,
}

impl FieldAutomorphism {
    pub fn identity(k: usize) -> Self {
        let id: Vec<_> = (0..k).map(AffineImage::identity).collect();
        FieldAutomorphism {
            forward: id.clone(),
            backward: id,
        }
    }

    /// Automorphism with the given generator images (0-based targets).
    pub fn from_images(images: Vec<AffineImage>) -> Result<Self> {
        let k = images.len();
        let mut seen = alloc::vec![false; k];
        for img in &images {
            if img.target >= k {
                return Err(Error::FieldMismatch {
                    expected: k,
                    found: img.target + 1,
                });
            }
            if seen[img.target] {
                return Err(Error::InvalidAutomorphism(
                    "generator images do not form a permutation",
                ));
            }
            seen[img.target] = true;
        }
        let backward = invert_images(&images);
        Ok(FieldAutomorphism {
            forward: images,
            backward,
        })
    }

    /// `t_i -> t_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        FieldAutomorphism::from_images(
            perm.iter()
                .map(|&j| AffineImage {
                    scale: Scalar::one(),
                    target: j,
                    shift: Scalar::zero(),
                })
                .collect(),
        )
    }

    /// `t_i -> a * t_i + b`, all other generators fixed.
    pub fn affine(k: usize, i: usize, a: Scalar, b: Scalar) -> Result<Self> {
        if i >= k {
            return Err(Error::FieldMismatch {
                expected: k,
                found: i + 1,
            });
        }
        let mut images: Vec<_> = (0..k).map(AffineImage::identity).collect();
        images[i] = AffineImage::new(a, i, b)?;
        FieldAutomorphism::from_images(images)
    }

    /// Number of generators of the field acted on.
    pub fn k(&self) -> usize {
        self.forward.len()
    }

    pub fn forward(&self) -> &[AffineImage] {
        &self.forward
    }

    pub fn backward(&self) -> &[AffineImage] {
        &self.backward
    }

    pub fn is_identity(&self) -> bool {
        self.forward
            .iter()
            .enumerate()
            .all(|(i, img)| *img == AffineImage::identity(i))
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &FieldAutomorphism) -> Result<FieldAutomorphism> {
        if self.k() != other.k() {
            return Err(Error::FieldMismatch {
                expected: self.k(),
                found: other.k(),
            });
        }
        Ok(FieldAutomorphism {
            forward: compose_images(&self.forward, &other.forward),
            backward: compose_images(&other.backward, &self.backward),
        })
    }

    pub fn invert(&self) -> FieldAutomorphism {
        FieldAutomorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// Applies the ring homomorphism `t_i -> image_i`.
    pub fn apply(&self, a: &Scalar) -> Result<Scalar> {
        let w = a.width();
        if w > self.k() {
            return Err(Error::FieldMismatch {
                expected: self.k(),
                found: w,
            });
        }
        if a.is_rational() || self.is_identity() {
            return Ok(a.clone());
        }
        let subst: Vec<AffineSubst> = self.forward.iter().map(AffineImage::to_subst).collect();
        let (n, dn) = a.numerator().substitute_affine(&subst);
        let (d, dd) = a.denominator().substitute_affine(&subst);
        // automorphisms keep num and den coprime over Q[t]; only integer
        // content can be shared
        let num = n.scale(&dd);
        let den = d.scale(&dn);
        Ok(Scalar::from_coprime_up_to_content(num, den))
    }
}

/// `(f ∘ g)(t_i) = f(g(t_i))` for image lists.
fn compose_images(f: &[AffineImage], g: &[AffineImage]) -> Vec<AffineImage> {
    g.iter()
        .map(|gi| {
            // g(t_i) = a * t_j + b;  f(t_j) = a' * t_l + b'
            let fj = &f[gi.target];
            AffineImage {
                scale: &gi.scale * &fj.scale,
                target: fj.target,
                shift: &(&gi.scale * &fj.shift) + &gi.shift,
            }
        })
        .collect()
}

/// From `t_i -> a_i t_{pi(i)} + b_i` we get `t_{pi(i)} -> (t_i - b_i) / a_i`.
fn invert_images(images: &[AffineImage]) -> Vec<AffineImage> {
    let mut out: Vec<Option<AffineImage>> = alloc::vec![None; images.len()];
    for (i, img) in images.iter().enumerate() {
        let inv = img.scale.inv().expect("nonzero scale");
        out[img.target] = Some(AffineImage {
            shift: -&(&img.shift * &inv),
            scale: inv,
            target: i,
        });
    }
    out.into_iter().map(|x| x.expect("permutation")).collect()
}

impl fmt::Display for AffineImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scalar())
    }
}

impl fmt::Display for FieldAutomorphism {
    /// Lists the generators that move, `t1 -> t1 + 1, t2 -> ...`; the
    /// identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, img) in self.forward.iter().enumerate() {
            if *img == AffineImage::identity(i) {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "t{} -> {}", i + 1, img)?;
        }
        if first {
            write!(f, "id")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn t(i: usize) -> Scalar {
        Scalar::var(i)
    }

    fn q(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn shift1(k: usize, i: usize, b: i64) -> FieldAutomorphism {
        FieldAutomorphism::affine(k, i, q(1), q(b)).unwrap()
    }

    #[test]
    fn substitution() {
        let s = shift1(1, 0, 1);
        let x = q(1).checked_div(&t(0)).unwrap();
        let expect = q(1).checked_div(&(&t(0) + &q(1))).unwrap();
        assert_eq!(s.apply(&x).unwrap(), expect);
        let id = FieldAutomorphism::identity(2);
        let y = (&t(0) + &t(1)).checked_div(&(&t(0) - &q(3))).unwrap();
        assert_eq!(id.apply(&y).unwrap(), y);
        let swap = FieldAutomorphism::permutation(&[1, 0]).unwrap();
        let z = t(0).checked_div(&t(1)).unwrap();
        assert_eq!(swap.apply(&z).unwrap(), t(1).checked_div(&t(0)).unwrap());
    }

    #[test]
    fn mismatched_field() {
        let s = shift1(1, 0, 1);
        assert!(matches!(
            s.apply(&t(1)),
            Err(Error::FieldMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn composition_examples() {
        let double = FieldAutomorphism::affine(1, 0, q(2), q(0)).unwrap();
        let half =
            FieldAutomorphism::affine(1, 0, Scalar::from_ratio(1, 2).unwrap(), q(0)).unwrap();
        assert!(double.compose(&half).unwrap().is_identity());
        let swap = FieldAutomorphism::permutation(&[1, 0]).unwrap();
        assert!(swap.compose(&swap).unwrap().is_identity());
        let s = shift1(1, 0, 1);
        assert_eq!(s.compose(&s).unwrap(), shift1(1, 0, 2));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(shift1(1, 0, 1).invert(), shift1(1, 0, -1));
        assert_eq!(
            FieldAutomorphism::identity(3).invert(),
            FieldAutomorphism::identity(3)
        );
        let swap = FieldAutomorphism::permutation(&[1, 0]).unwrap();
        assert_eq!(swap.invert(), swap);
    }

    #[test]
    fn zero_scale_rejected() {
        assert!(FieldAutomorphism::affine(1, 0, q(0), q(1)).is_err());
        assert!(FieldAutomorphism::permutation(&[0, 0]).is_err());
    }

    #[test]
    fn display() {
        let a = FieldAutomorphism::affine(2, 1, q(2), q(-1)).unwrap();
        assert_eq!(format!("{a}"), "t2 -> 2*t2 - 1");
        assert_eq!(format!("{}", FieldAutomorphism::identity(2)), "id");
    }

    #[test]
    fn composite_matches_stepwise_application() {
        let a = FieldAutomorphism::permutation(&[2, 0, 1]).unwrap();
        let b = FieldAutomorphism::affine(3, 0, q(3), q(2)).unwrap();
        let x = (&(&t(0) * &t(1)) + &t(2))
            .checked_div(&(&t(2) - &q(1)))
            .unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(
            ab.apply(&x).unwrap(),
            a.apply(&b.apply(&x).unwrap()).unwrap()
        );
        assert_eq!(ab.backward(), ab.invert().forward());
        assert_eq!(ab.invert().apply(&ab.apply(&x).unwrap()).unwrap(), x);
    }
}
