//! The family `A_a = <x1, x2 | x1^2 + x2^2 + a*x1*x2 = 0>`.
//!
//! `A_a` and `A_b` are isomorphic exactly when `b = a` or `b = -a`. The
//! degree-two part of the argument reduces to congruence of the forms
//! `(1 a; 0 1)` up to a scalar:
//!
//! ```text
//! Q^T (1 b; 0 1) Q = g (1 a; 0 1)
//! ```
//!
//! Splitting both sides into antisymmetric and symmetric parts gives
//! `b det Q = g a` and `(4 - b^2) det(Q)^2 = g^2 (4 - a^2)`, which together
//! force `b^2 = a^2` in characteristic zero (and in any odd characteristic).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Word};
use crate::presentation::{FieldSpec, Presentation};
use crate::scalars::{FieldAutomorphism, PrimeField, Scalar};

/// A 2x2 matrix of scalars, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[Scalar; 2]; 2]);

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Mat2::diag(Scalar::one(), Scalar::one())
    }

    pub fn diag(a: Scalar, d: Scalar) -> Self {
        Mat2::new(a, Scalar::zero(), Scalar::zero(), d)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.0[i][j]
    }

    pub fn det(&self) -> Scalar {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    pub fn transpose(&self) -> Mat2 {
        let m = &self.0;
        Mat2::new(
            m[0][0].clone(),
            m[1][0].clone(),
            m[0][1].clone(),
            m[1][1].clone(),
        )
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &other.0);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, c: &Scalar) -> Mat2 {
        let m = &self.0;
        Mat2::new(&m[0][0] * c, &m[0][1] * c, &m[1][0] * c, &m[1][1] * c)
    }

    /// `x M x^T = sum M_ij x_i x_j` in the free algebra on two generators.
    pub fn quadratic_poly(&self) -> NCPoly {
        NCPoly::from_terms(
            2,
            (0..2).flat_map(|i| {
                (0..2).map(move |j| {
                    (
                        Word::from_letters(vec![i as u32, j as u32]),
                        self.0[i][j].clone(),
                    )
                })
            }),
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "({} {}; {} {})", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// The coefficient matrix `(1 a; 0 1)` of `x1^2 + x2^2 + a*x1*x2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm2(pub Mat2);

/// Change of generators `Q` and scale `gamma` with
/// `Q^T form(beta) Q = gamma form(alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CongruenceWitness {
    pub q: Mat2,
    pub gamma: Scalar,
}

impl CongruenceWitness {
    pub fn new(q: Mat2, gamma: Scalar) -> Result<Self> {
        if q.det().is_zero() {
            return Err(Error::InvalidArgument("witness matrix is singular"));
        }
        if gamma.is_zero() {
            return Err(Error::InvalidArgument("witness scale is zero"));
        }
        Ok(CongruenceWitness { q, gamma })
    }
}

pub fn form_of(alpha: &Scalar) -> BilinearForm2 {
    BilinearForm2(Mat2::new(
        Scalar::one(),
        alpha.clone(),
        Scalar::zero(),
        Scalar::one(),
    ))
}

/// The defining relation `x1^2 + x2^2 + alpha*x1*x2`.
pub fn aalpha_relation(alpha: &Scalar) -> NCPoly {
    form_of(alpha).0.quadratic_poly()
}

/// `A_alpha` over the smallest field containing `alpha`.
pub fn make_aalpha(alpha: &Scalar) -> Presentation {
    make_aalpha_over(alpha, FieldSpec::new(alpha.width())).expect("alpha fits its own field")
}

pub fn make_aalpha_over(alpha: &Scalar, field: FieldSpec) -> Result<Presentation> {
    Presentation::with_default_names("A", field, 2, vec![aalpha_relation(alpha)])
}

/// `(2 beta; beta 2) Q`. Its columns hold the coefficients of the two
/// linear equations that the constant terms of new generators must satisfy;
/// when it is nonsingular both constant terms vanish.
pub fn linear_constraint_matrix(beta: &Scalar, q: &Mat2) -> Mat2 {
    let two = Scalar::from_int(2);
    Mat2::new(two.clone(), beta.clone(), beta.clone(), two).mul(q)
}

/// The linear part of `y1^2 + y2^2 + beta*y1*y2` for
/// `y_i = c_i + q_i1 x1 + q_i2 x2`.
pub fn linear_part(beta: &Scalar, constants: [&Scalar; 2], q: &Mat2) -> NCPoly {
    let y = |i: usize| {
        let lin = NCPoly::from_terms(
            2,
            [
                (Word::one(), constants[i].clone()),
                (Word::gen(0), q.get(i, 0).clone()),
                (Word::gen(1), q.get(i, 1).clone()),
            ],
        );
        lin
    };
    relation_image(beta, &[y(0), y(1)])
        .expect("two images")
        .homogeneous_component(1)
}

/// `y1^2 + y2^2 + beta*y1*y2` for the given images.
pub fn relation_image(beta: &Scalar, images: &[NCPoly]) -> Result<NCPoly> {
    aalpha_relation(beta).substitute(images)
}

/// Exact test of `Q^T form(beta) Q == gamma form(alpha)`.
pub fn congruence_check(alpha: &Scalar, beta: &Scalar, w: &CongruenceWitness) -> bool {
    let lhs = w.q.transpose().mul(&form_of(beta).0).mul(&w.q);
    lhs == form_of(alpha).0.scale(&w.gamma)
}

/// The two identities implied by a congruence and their consequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantChain {
    /// `beta det Q == gamma alpha`
    pub antisymmetric: bool,
    /// `(4 - beta^2) det(Q)^2 == gamma^2 (4 - alpha^2)`
    pub symmetric: bool,
    /// `beta^2 == alpha^2`
    pub squares_agree: bool,
}

impl InvariantChain {
    pub fn holds(&self) -> bool {
        self.antisymmetric && self.symmetric && self.squares_agree
    }
}

pub fn invariant_chain(alpha: &Scalar, beta: &Scalar, w: &CongruenceWitness) -> InvariantChain {
    let det = w.q.det();
    let four = Scalar::from_int(4);
    let a2 = alpha * alpha;
    let b2 = beta * beta;
    InvariantChain {
        antisymmetric: beta * &det == &w.gamma * alpha,
        symmetric: &(&four - &b2) * &(&det * &det) == &(&w.gamma * &w.gamma) * &(&four - &a2),
        squares_agree: a2 == b2,
    }
}

/// Why two forms cannot be congruent: `beta^2 != alpha^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCongruence {
    pub alpha_sq: Scalar,
    pub beta_sq: Scalar,
}

impl fmt::Display for NonCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "beta^2 != alpha^2 ({} != {})",
            self.beta_sq, self.alpha_sq
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormCongruence {
    Congruent(CongruenceWitness),
    NotCongruent(NonCongruence),
}

/// Decides whether `form(beta)` is congruent to a multiple of `form(alpha)`.
pub fn decide_form_congruence(alpha: &Scalar, beta: &Scalar) -> FormCongruence {
    if beta == alpha {
        return FormCongruence::Congruent(CongruenceWitness {
            q: Mat2::identity(),
            gamma: Scalar::one(),
        });
    }
    if *beta == -alpha {
        return FormCongruence::Congruent(CongruenceWitness {
            q: Mat2::diag(Scalar::one(), Scalar::from_int(-1)),
            gamma: Scalar::one(),
        });
    }
    FormCongruence::NotCongruent(NonCongruence {
        alpha_sq: alpha * alpha,
        beta_sq: beta * beta,
    })
}

/// `A_alpha ≅ A_beta` iff `beta = ±alpha`.
pub fn iso_aalpha(alpha: &Scalar, beta: &Scalar) -> bool {
    beta == alpha || *beta == -alpha
}

/// Images of `x1, x2` defining an isomorphism `A_beta -> A_alpha`, when one
/// exists: the identity for `beta = alpha`, `x2 -> -x2` for `beta = -alpha`.
pub fn iso_witness(alpha: &Scalar, beta: &Scalar) -> Option<[NCPoly; 2]> {
    let x1 = NCPoly::gen(2, 0);
    let x2 = NCPoly::gen(2, 1);
    if beta == alpha {
        Some([x1, x2])
    } else if *beta == -alpha {
        Some([x1, -&x2])
    } else {
        None
    }
}

/// 2x2 matrix over a prime field.
pub type FpMat2 = [[u64; 2]; 2];

/// A congruence witness over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpWitness {
    pub q: FpMat2,
    pub gamma: u64,
}

/// Exhaustive search over `GL_2(F_p) x F_p^*` for `Q^T form(beta) Q =
/// gamma form(alpha)`. Matrices are scanned with entries `(q11, q12, q21,
/// q22)` in lexicographic order, `gamma` ascending; the first hit is
/// returned.
pub fn search_iso_degree2(alpha: i64, beta: i64, p: u64) -> Result<Option<FpWitness>> {
    let f = PrimeField::new(p)?;
    let a = f.reduce(alpha);
    let b = f.reduce(beta);
    for q11 in f.elements() {
        for q12 in f.elements() {
            for q21 in f.elements() {
                for q22 in f.elements() {
                    let det = f.sub(f.mul(q11, q22), f.mul(q12, q21));
                    if det == 0 {
                        continue;
                    }
                    let q = [[q11, q12], [q21, q22]];
                    let lhs = fp_congruence(&f, &q, b);
                    for gamma in 1..p {
                        if lhs == [[gamma, f.mul(gamma, a)], [0, gamma]] {
                            return Ok(Some(FpWitness { q, gamma }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `Q^T (1 b; 0 1) Q` over `F_p`.
fn fp_congruence(f: &PrimeField, q: &FpMat2, b: u64) -> FpMat2 {
    let m = [[1, b], [0, 1]];
    let mut mq = [[0u64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            mq[i][j] = f.add(f.mul(m[i][0], q[0][j]), f.mul(m[i][1], q[1][j]));
        }
    }
    let mut out = [[0u64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = f.add(f.mul(q[0][i], mq[0][j]), f.mul(q[1][i], mq[1][j]));
        }
    }
    out
}

/// The orbit values `sigma(alpha)`, duplicates removed, first occurrence kept.
///
/// Each `A_{sigma(alpha)}` is the twist of `A_alpha` by `sigma^{-1}`, hence
/// semilinearly isomorphic to it.
pub fn orbit_sample(alpha: &Scalar, autos: &[FieldAutomorphism]) -> Result<Vec<Scalar>> {
    let mut out: Vec<Scalar> = Vec::new();
    for s in autos {
        let v = s.apply(alpha)?;
        if !out.contains(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::{ideal_membership, is_generating, Generation, Membership};

    fn q(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn t() -> Scalar {
        Scalar::var(0)
    }

    #[test]
    fn presentations() {
        let p0 = make_aalpha(&q(0));
        assert_eq!(p0.field().k, 0);
        assert_eq!(alloc::format!("{}", p0.relations()[0]), "x1*x1 + x2*x2");
        let pt = make_aalpha(&t());
        assert_eq!(pt.field().k, 1);
        assert_eq!(
            alloc::format!("{}", pt.relations()[0]),
            "x1*x1 + (t1)*x1*x2 + x2*x2"
        );
        assert_eq!(crate::rewrite::graded_dimension(&pt, 2, 2).unwrap(), 3);
    }

    #[test]
    fn forms() {
        assert_eq!(form_of(&q(0)).0, Mat2::identity());
        assert_eq!(form_of(&q(2)).0, Mat2::from_ints(1, 2, 0, 1));
        assert_eq!(form_of(&t()).0.quadratic_poly(), aalpha_relation(&t()));
    }

    #[test]
    fn linear_constraints() {
        let m = linear_constraint_matrix(&q(0), &Mat2::identity());
        assert_eq!(m, Mat2::from_ints(2, 0, 0, 2));
        assert!(!m.det().is_zero());
        let qm = Mat2::from_ints(3, 1, 4, 1);
        assert!(linear_constraint_matrix(&q(2), &qm).det().is_zero());
        let d = linear_constraint_matrix(&t(), &Mat2::identity()).det();
        assert_eq!(d, &q(4) - &(&t() * &t()));
    }

    #[test]
    fn linear_part_matches_constraint_matrix() {
        // coefficient of x_j is sum_i c_i * M[i][j] with M = (2 b; b 2) Q
        let beta = Scalar::from_ratio(1, 3).unwrap();
        let qm = Mat2::from_ints(2, -1, 5, 7);
        let (c1, c2) = (q(3), Scalar::from_ratio(-2, 5).unwrap());
        let lin = linear_part(&beta, [&c1, &c2], &qm);
        let m = linear_constraint_matrix(&beta, &qm);
        for j in 0..2 {
            let expect = &(&c1 * m.get(0, j)) + &(&c2 * m.get(1, j));
            assert_eq!(lin.coefficient(&Word::gen(j)), expect);
        }
    }

    #[test]
    fn degree_two_component_is_the_congruent_form() {
        let beta = &t() + &q(1);
        let qm = Mat2::new(t(), q(2), q(-1), &t() * &t());
        let y: Vec<NCPoly> = (0..2)
            .map(|i| {
                NCPoly::from_terms(
                    2,
                    [
                        (Word::gen(0), qm.get(i, 0).clone()),
                        (Word::gen(1), qm.get(i, 1).clone()),
                    ],
                )
            })
            .collect();
        let image = relation_image(&beta, &y).unwrap();
        let form = qm.transpose().mul(&form_of(&beta).0).mul(&qm);
        assert_eq!(image, form.quadratic_poly());
    }

    #[test]
    fn congruence_examples() {
        let id = CongruenceWitness::new(Mat2::identity(), q(1)).unwrap();
        assert!(congruence_check(&q(5), &q(5), &id));
        let flip = CongruenceWitness::new(Mat2::from_ints(1, 0, 0, -1), q(1)).unwrap();
        assert!(congruence_check(&q(3), &q(-3), &flip));
        assert!(!congruence_check(&q(1), &q(2), &id));
        assert!(CongruenceWitness::new(Mat2::from_ints(1, 1, 1, 1), q(1)).is_err());
        assert!(CongruenceWitness::new(Mat2::identity(), q(0)).is_err());
    }

    #[test]
    fn decisions() {
        match decide_form_congruence(&t(), &t()) {
            FormCongruence::Congruent(w) => assert_eq!(w.q, Mat2::identity()),
            other => panic!("{other:?}"),
        }
        match decide_form_congruence(&t(), &-t()) {
            FormCongruence::Congruent(w) => {
                assert_eq!(w.q, Mat2::from_ints(1, 0, 0, -1));
                assert!(congruence_check(&t(), &-t(), &w));
                assert!(invariant_chain(&t(), &-t(), &w).holds());
            }
            other => panic!("{other:?}"),
        }
        match decide_form_congruence(&q(2), &q(3)) {
            FormCongruence::NotCongruent(c) => {
                assert_eq!(c.beta_sq, q(9));
                assert_eq!(c.alpha_sq, q(4));
                assert_eq!(alloc::format!("{c}"), "beta^2 != alpha^2 (9 != 4)");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn isomorphism_criterion() {
        assert!(iso_aalpha(&t(), &t()));
        assert!(iso_aalpha(&t(), &-t()));
        assert!(!iso_aalpha(&q(1), &q(2)));
        assert!(iso_witness(&q(1), &q(3)).is_none());
        let [a, b] = iso_witness(&t(), &t()).unwrap();
        assert_eq!((a, b), (NCPoly::gen(2, 0), NCPoly::gen(2, 1)));
    }

    #[test]
    fn witness_images_pass_both_contracts() {
        let alpha = t();
        let beta = -t();
        let images = iso_witness(&alpha, &beta).unwrap();
        let img = relation_image(&beta, &images).unwrap();
        assert_eq!(img, aalpha_relation(&alpha));
        let p = make_aalpha(&alpha);
        assert_eq!(ideal_membership(&img, &p, 2).unwrap(), Membership::Member);
        assert!(matches!(
            is_generating(&images, &p, 2).unwrap(),
            Generation::Yes { .. }
        ));
    }

    #[test]
    fn finite_field_search() {
        let w = search_iso_degree2(1, 1, 5).unwrap().unwrap();
        assert_eq!(w.gamma, 1);
        assert!(search_iso_degree2(1, 4, 5).unwrap().is_some());
        assert!(search_iso_degree2(1, 2, 5).unwrap().is_none());
        assert!(search_iso_degree2(1, 2, 4).is_err());
    }

    #[test]
    fn gl2_f5_has_480_elements() {
        let f = PrimeField::new(5).unwrap();
        let mut n = 0;
        for a in 0..5 {
            for b in 0..5 {
                for c in 0..5 {
                    for d in 0..5 {
                        if f.sub(f.mul(a, d), f.mul(b, c)) != 0 {
                            n += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(n, 480);
    }

    #[test]
    fn orbit_examples() {
        let plus1 = FieldAutomorphism::affine(1, 0, q(1), q(1)).unwrap();
        let times2 = FieldAutomorphism::affine(1, 0, q(2), q(0)).unwrap();
        let sample = orbit_sample(&t(), &[plus1.clone(), times2, plus1.clone()]).unwrap();
        assert_eq!(sample, vec![&t() + &q(1), &q(2) * &t()]);
        assert_eq!(
            orbit_sample(&t(), &[FieldAutomorphism::identity(1)]).unwrap(),
            vec![t()]
        );
        assert!(!iso_aalpha(&t(), &(&t() + &q(1))));
        // A_{t+1} is the twist of A_t by the inverse shift
        let twisted = make_aalpha(&t()).twist(&plus1.invert()).unwrap();
        assert_eq!(twisted, make_aalpha(&(&t() + &q(1))));
    }
}
