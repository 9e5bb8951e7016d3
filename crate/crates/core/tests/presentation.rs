mod common;

use common::{automorphism, presentation, quadratic};
use fpalg_core::rewrite::hilbert_series;
use fpalg_core::FieldAutomorphism;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn twisting_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let k = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let p = presentation(&mut rng, m, k, 3);
        let (s, t) = (automorphism(&mut rng, k), automorphism(&mut rng, k));
        let stepwise = p.twist(&s).unwrap().twist(&t).unwrap();
        assert_eq!(stepwise, p.twist(&s.compose(&t).unwrap()).unwrap());
        assert_eq!(p.twist(&FieldAutomorphism::identity(k)).unwrap(), p);
    }
}

#[test]
fn canonical_form_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..100 {
        let k = rng.gen_range(0..=6);
        let m = rng.gen_range(1..=3);
        let p = presentation(&mut rng, m, k, 2);
        let (p0, sigma) = p.canonicalize();
        let r = p.transcendental_support().len();
        let (again, tau) = p0.canonicalize();
        assert_eq!(again, p0);
        assert!(tau.is_identity());
        assert_eq!(p0.transcendental_support(), (0..r).collect::<Vec<_>>());
        assert_eq!(p0.twist(&sigma.invert()).unwrap(), p);
    }
}

#[test]
fn support_follows_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..100 {
        let k = rng.gen_range(1..=6);
        let p = presentation(&mut rng, 2, k, 2);
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(&mut rng);
        let pi = FieldAutomorphism::permutation(&perm).unwrap();
        let moved = p.twist(&pi).unwrap();
        // twist by pi applies pi^{-1} to coefficients: t_{perm[i]} -> t_i
        let renamed: Vec<usize> = p
            .transcendental_support()
            .into_iter()
            .map(|v| perm.iter().position(|&x| x == v).unwrap())
            .collect();
        // equal up to generators with interchangeable roles, which the
        // canonical form cannot tell apart
        let mut got = moved.transcendental_support();
        let mut want = renamed.clone();
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want);
        assert_eq!(moved.canonicalize().0, p.canonicalize().0);
        let by_renaming =
            moved.twist(&FieldAutomorphism::permutation(&complete(&renamed, k)).unwrap());
        assert_eq!(by_renaming.unwrap(), p.canonicalize().0);
    }
}

/// `order` followed by the unused indices in increasing order.
fn complete(order: &[usize], k: usize) -> Vec<usize> {
    let mut perm = order.to_vec();
    perm.extend((0..k).filter(|i| !order.contains(i)));
    perm
}

#[test]
fn twisting_preserves_graded_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..20 {
        let k = rng.gen_range(1..=2);
        let p = quadratic(&mut rng, 2, k);
        let s = automorphism(&mut rng, k);
        let twisted = p.twist(&s).unwrap();
        assert_eq!(
            hilbert_series(&p, 4).unwrap(),
            hilbert_series(&twisted, 4).unwrap()
        );
    }
}
