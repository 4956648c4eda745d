use equivar::fixtures::{random_complex, random_involutive};
use equivar::simplicial::{
    barycentric_subdivision, fixed_subcomplex, lefschetz_number, mod2_betti, mod2_cohomology,
    mod2_homology, product_complex, quotient_complex, rational_betti, regularize,
    InvolutiveComplex,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alternating(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_numbers_are_consistent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(&mut rng, 8, 3, 120);
        let mod2 = mod2_betti(&k);
        let rational = rational_betti(&k);
        prop_assert_eq!(alternating(&mod2), k.euler_characteristic());
        prop_assert_eq!(alternating(&rational), k.euler_characteristic());
        prop_assert!(mod2.iter().zip(&rational).all(|(m, r)| m >= r));
        prop_assert_eq!(mod2_homology(&k).dims(), mod2_cohomology(&k).dims());
    }

    #[test]
    fn subdivision_preserves_homology(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(&mut rng, 6, 2, 50);
        let (sd, _) = barycentric_subdivision(&k);
        prop_assert_eq!(mod2_betti(&sd), mod2_betti(&k));
        prop_assert_eq!(rational_betti(&sd), rational_betti(&k));
    }

    #[test]
    fn products_satisfy_kunneth(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_complex(&mut rng, 5, 1, 20);
        let b = random_complex(&mut rng, 4, 2, 20);
        let p = product_complex(&a, &b);
        let (ba, bb) = (mod2_betti(&a), mod2_betti(&b));
        let mut expected = vec![0; ba.len() + bb.len() - 1];
        for (i, x) in ba.iter().enumerate() {
            for (j, y) in bb.iter().enumerate() {
                expected[i + j] += x * y;
            }
        }
        prop_assert_eq!(mod2_betti(&p), expected);
    }

    #[test]
    fn orbit_counting_and_lefschetz(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ic = random_involutive(&mut rng, 7, 2, 60);
        prop_assert!(ic.is_regular());
        let (fixed, _) = fixed_subcomplex(&ic).unwrap();
        let (quotient, _) = quotient_complex(&ic).unwrap();
        // χ(K) = 2χ(K/G) − χ(K^G)
        prop_assert_eq!(
            ic.complex().euler_characteristic(),
            2 * quotient.euler_characteristic() - fixed.euler_characteristic()
        );
        prop_assert_eq!(lefschetz_number(&ic), fixed.euler_characteristic());
    }
}

#[test]
fn regularize_handles_every_small_involution() {
    // every involution of the 2-simplex and of the square
    let tri = equivar::simplicial::SimplicialComplex::from_maximal(3, [[0, 1, 2]]).unwrap();
    for g in [vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]] {
        let (ic, rounds) = regularize(&InvolutiveComplex::new(tri.clone(), g).unwrap());
        assert!(ic.is_regular() && rounds <= 2);
        assert_eq!(mod2_betti(ic.complex()), vec![1, 0, 0]);
    }
}
