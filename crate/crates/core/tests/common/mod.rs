#![allow(dead_code)]

use fpalg_core::scalars::AffineImage;
use fpalg_core::{FieldAutomorphism, FieldSpec, NCPoly, Presentation, Scalar, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(v: i64) -> Scalar {
    Scalar::from_int(v)
}

pub fn ratio(a: i64, b: i64) -> Scalar {
    Scalar::from_ratio(a, b).expect("nonzero denominator")
}

fn nonzero(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    loop {
        let v = rng.gen_range(lo..=hi);
        if v != 0 {
            return v;
        }
    }
}

/// A small rational function in `t1..tk`.
pub fn scalar(rng: &mut ChaCha8Rng, k: usize) -> Scalar {
    let mut num = q(rng.gen_range(-3..=3));
    if k > 0 {
        for _ in 0..rng.gen_range(0..=2) {
            let v = Scalar::var(rng.gen_range(0..k)).pow(rng.gen_range(1..=2));
            num = num + &v * &q(rng.gen_range(-3..=3));
        }
    }
    let mut den = q(rng.gen_range(1..=3));
    if k > 0 && rng.gen_bool(0.3) {
        den = den + Scalar::var(rng.gen_range(0..k));
    }
    num.checked_div(&den).expect("denominator is nonzero")
}

pub fn word(rng: &mut ChaCha8Rng, m: usize, maxlen: usize) -> Word {
    let len = rng.gen_range(0..=maxlen);
    Word::from_letters((0..len).map(|_| rng.gen_range(0..m as u32)).collect())
}

pub fn poly(rng: &mut ChaCha8Rng, m: usize, k: usize, maxlen: usize) -> NCPoly {
    let terms: Vec<(Word, Scalar)> = (0..rng.gen_range(0..=3))
        .map(|_| (word(rng, m, maxlen), scalar(rng, k)))
        .collect();
    NCPoly::from_terms(m, terms)
}

pub fn automorphism(rng: &mut ChaCha8Rng, k: usize) -> FieldAutomorphism {
    let mut perm: Vec<usize> = (0..k).collect();
    perm.shuffle(rng);
    let images = perm
        .into_iter()
        .map(|target| {
            let scale = ratio(nonzero(rng, -3, 3), rng.gen_range(1..=3));
            let shift = ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
            AffineImage::new(scale, target, shift).expect("nonzero scale")
        })
        .collect();
    FieldAutomorphism::from_images(images).expect("permutation")
}

pub fn presentation(rng: &mut ChaCha8Rng, m: usize, k: usize, maxlen: usize) -> Presentation {
    let mut relations = Vec::new();
    let want = rng.gen_range(1..=2);
    while relations.len() < want {
        let r = poly(rng, m, k, maxlen);
        if !r.is_zero() {
            relations.push(r);
        }
    }
    Presentation::with_default_names("R", FieldSpec::new(k), m, relations).expect("valid")
}

/// Homogeneous quadratic relations with coefficients in `Q(t1..tk)`.
pub fn quadratic(rng: &mut ChaCha8Rng, m: usize, k: usize) -> Presentation {
    let mut relations = Vec::new();
    let want = rng.gen_range(1..=2);
    while relations.len() < want {
        let mut terms = Vec::new();
        for w in Word::all_of_length(m, 2) {
            if rng.gen_bool(0.5) {
                terms.push((w, scalar(rng, k)));
            }
        }
        let r = NCPoly::from_terms(m, terms);
        if !r.is_zero() {
            relations.push(r);
        }
    }
    Presentation::with_default_names("H", FieldSpec::new(k), m, relations).expect("valid")
}
