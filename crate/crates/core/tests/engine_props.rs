use equivar::equivariant::{
    build_double_complex, krasnov_test, total_equivariant_dims, FiltrationKind, PageMethod,
    SpectralSequence,
};
use equivar::fixtures::{self, random_complex, random_involutive};
use equivar::simplicial::{fixed_subcomplex, mod2_betti, quotient_complex, InvolutiveComplex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn infinity_totals(ss: &SpectralSequence, top: usize) -> Vec<usize> {
    let inf = ss.infinity();
    (0..=top)
        .map(|n| inf.iter().filter(|(&(p, q), _)| p + q == n).map(|(_, &d)| d).sum())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn trivial_action_gives_partial_sums(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ic = InvolutiveComplex::identity(random_complex(&mut rng, 8, 3, 120));
        let top = ic.complex().dimension().unwrap() + 3;
        let dc = build_double_complex(&ic, top).unwrap();
        let dims = total_equivariant_dims(&dc, top).unwrap();
        let betti = mod2_betti(ic.complex());
        let partial: Vec<usize> = (0..=top).map(|n| betti.iter().take(n + 1).sum()).collect();
        prop_assert_eq!(&dims, &partial);
        let ss = SpectralSequence::new(&dc, FiltrationKind::I, PageMethod::Pairing);
        for r in 2..=dc.rows() + 1 {
            prop_assert!(ss.page(r).all_differentials_vanish());
        }
    }

    #[test]
    fn stabilization_and_infinity_totals(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ic = random_involutive(&mut rng, 7, 2, 60);
        let dim = ic.complex().dimension().unwrap();
        let top = dim + 3;
        let dc = build_double_complex(&ic, top).unwrap();
        let dims = total_equivariant_dims(&dc, top).unwrap();
        let (fixed, _) = fixed_subcomplex(&ic).unwrap();
        let fixed_total: usize = mod2_betti(&fixed).iter().sum();
        prop_assert!(dims[dim + 1..].iter().all(|&d| d == fixed_total));
        for kind in [FiltrationKind::I, FiltrationKind::II] {
            let ss = SpectralSequence::new(&dc, kind, PageMethod::Pairing);
            prop_assert_eq!(infinity_totals(&ss, top), dims.clone());
        }
        if fixed.dimension().is_none() {
            let (quotient, _) = quotient_complex(&ic).unwrap();
            let qb = mod2_betti(&quotient);
            let padded: Vec<usize> = (0..=top).map(|n| qb.get(n).copied().unwrap_or(0)).collect();
            prop_assert_eq!(dims, padded);
        }
    }

    #[test]
    fn pairing_matches_subquotient_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ic = random_involutive(&mut rng, 5, 2, 30);
        let dc = build_double_complex(&ic, 4).unwrap();
        for kind in [FiltrationKind::I, FiltrationKind::II] {
            let fast = SpectralSequence::new(&dc, kind, PageMethod::Pairing);
            let slow = SpectralSequence::new(&dc, kind, PageMethod::Subquotient);
            for r in 1..=dc.rows() + 2 {
                let (a, b) = (fast.page(r), slow.page(r));
                prop_assert_eq!(a.entries, b.entries);
                prop_assert_eq!(a.differential_ranks, b.differential_ranks);
            }
            prop_assert_eq!(fast.infinity(), slow.infinity());
        }
    }

    #[test]
    fn krasnov_flag_matches_second_sequence(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ic = random_involutive(&mut rng, 6, 2, 40);
        let k = krasnov_test(&ic).unwrap();
        prop_assert!(k.lhs <= k.rhs);
        prop_assert_eq!(k.degenerate, k.ii_differentials_vanish);
    }
}

#[test]
fn fixtures_stabilize() {
    for name in fixtures::NAMES {
        let ic = fixtures::named(name).unwrap();
        let dim = ic.complex().dimension().unwrap();
        let dc = build_double_complex(&ic, dim + 2).unwrap();
        let dims = total_equivariant_dims(&dc, dim + 2).unwrap();
        let (fixed, _) = fixed_subcomplex(&ic).unwrap();
        let total: usize = mod2_betti(&fixed).iter().sum();
        assert_eq!(&dims[dim + 1..], &[total, total], "{name}");
    }
}
