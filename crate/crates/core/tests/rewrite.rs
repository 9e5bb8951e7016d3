mod common;

use common::{poly, presentation, quadratic, scalar};
use fpalg_core::aalpha::make_aalpha;
use fpalg_core::rewrite::{
    groebner, ideal_membership, is_generating, Generation, Membership, Strategy,
};
use fpalg_core::{NCPoly, Scalar, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn reduction_strategies_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0;
    while checked < 200 {
        let k = rng.gen_range(0..=1);
        let p = presentation(&mut rng, 2, k, 3);
        let gb = groebner(&p, 5).unwrap();
        for _ in 0..5 {
            let f = poly(&mut rng, 2, p.field().k, 4);
            let left = gb.reduce(&f, Strategy::Leftmost);
            let right = gb.reduce(&f, Strategy::Rightmost);
            assert_eq!(left, right, "{f} modulo {p:?}");
            assert!(left.terms().iter().all(|(w, _)| gb.is_normal_word(w)));
            checked += 1;
        }
    }
}

#[test]
fn ideal_elements_are_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let k = rng.gen_range(0..=1);
        let p = quadratic(&mut rng, 2, k);
        let mut f = NCPoly::zero(2);
        for r in p.relations() {
            let (u, v) = (common::word(&mut rng, 2, 2), common::word(&mut rng, 2, 2));
            f = &f + &r.sandwich(&u, &v).scale(&scalar(&mut rng, k));
        }
        let deg = f.degree().unwrap_or(0);
        assert_eq!(
            ideal_membership(&f, &p, deg.max(2)).unwrap(),
            Membership::Member
        );
    }
}

#[test]
fn normal_words_are_not_members() {
    let p = make_aalpha(&Scalar::var(0));
    let gb = groebner(&p, 6).unwrap();
    for n in 1..=4 {
        for w in Word::all_of_length(2, n) {
            if gb.is_normal_word(&w) {
                let f = NCPoly::monomial(2, w, Scalar::one());
                assert!(matches!(
                    ideal_membership(&f, &p, 6).unwrap(),
                    Membership::NotMember { exact: true, .. }
                ));
            }
        }
    }
}

#[test]
fn generation_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let p = make_aalpha(&Scalar::var(0));
    let x = |i| NCPoly::gen(2, i);
    for _ in 0..20 {
        let extra = poly(&mut rng, 2, 1, 2);
        let mut elems = vec![&x(0) + &x(1), x(1)];
        assert!(matches!(
            is_generating(&elems, &p, 2).unwrap(),
            Generation::Yes { .. }
        ));
        elems.push(extra);
        assert!(matches!(
            is_generating(&elems, &p, 2).unwrap(),
            Generation::Yes { .. }
        ));
    }
    assert!(matches!(
        is_generating(&[x(0)], &p, 3).unwrap(),
        Generation::NoUpTo { .. }
    ));
}
