use equivar::gf2::{BitMatrix, BitVec, Subspace};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rows: usize, cols: usize, seed: u64) -> BitMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // vary density so low-rank and full-rank cases both appear
    let density: f64 = rng.gen_range(0.02..0.6);
    BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(density))
}

fn random_subspace(ambient: usize, max_gens: usize, seed: u64) -> Subspace {
    let gens = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed).gen_range(0..=max_gens);
    Subspace::from_matrix(ambient, random_matrix(gens, ambient, seed))
}

/// Random subspace of `a`, spanned by random combinations of its basis.
fn random_subspace_of(a: &Subspace, seed: u64) -> Subspace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = a.basis_vectors();
    let count = rng.gen_range(0..=basis.len());
    let vectors: Vec<BitVec> = (0..count)
        .map(|_| {
            let mut v = BitVec::zeros(a.ambient_dim());
            for b in &basis {
                if rng.gen_bool(0.5) {
                    v.xor_assign(b);
                }
            }
            v
        })
        .collect();
    Subspace::from_vectors(a.ambient_dim(), &vectors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_nullity_and_transpose(rows in 0usize..=128, cols in 0usize..=128, seed in any::<u64>()) {
        let m = random_matrix(rows, cols, seed);
        let (kernel, image) = m.decompose();
        prop_assert_eq!(kernel.dim() + image.dim(), cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(image.dim(), m.rank());
        for v in kernel.basis_vectors() {
            prop_assert!(m.apply(&v).is_zero());
        }
    }

    #[test]
    fn dimension_formula_and_modular_law(n in 1usize..=128, seed in any::<u64>()) {
        let a = random_subspace(n, n.min(40), seed);
        let b = random_subspace(n, n.min(40), seed.wrapping_add(1));
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
        prop_assert!(sum.contains(&a).unwrap() && a.contains(&meet).unwrap());
        // C ⊆ A  ⇒  A ∩ (B + C) = (A ∩ B) + C
        let c = random_subspace_of(&a, seed.wrapping_add(2));
        let lhs = a.intersect(&b.sum(&c).unwrap()).unwrap();
        let rhs = meet.sum(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.quotient_dim(&c).unwrap(), a.dim() - c.dim());
    }

    #[test]
    fn preimage_laws(rows in 0usize..=128, cols in 0usize..=128, seed in any::<u64>()) {
        let m = random_matrix(rows, cols, seed);
        prop_assert_eq!(Subspace::full(rows).preimage(&m).unwrap(), Subspace::full(cols));
        prop_assert_eq!(Subspace::zero(rows).preimage(&m).unwrap(), m.kernel());
        let target = random_subspace(rows, rows.min(30), seed.wrapping_add(3));
        let pre = target.preimage(&m).unwrap();
        for v in pre.basis_vectors() {
            prop_assert!(target.contains_vector(&m.apply(&v)));
        }
        // m(pre) = target ∩ im m
        let pushed = pre.image_under(&m).unwrap();
        prop_assert_eq!(pushed, target.intersect(&m.image()).unwrap());
    }
}

#[test]
fn dimension_mismatch_and_containment_errors() {
    let a = Subspace::full(2);
    let b = Subspace::full(3);
    assert_eq!(a.sum(&b).unwrap_err().code(), "linalg.dimension_mismatch");
    let line = Subspace::from_vectors(2, &[BitVec::from_bools(&[true, true])]);
    let axis = Subspace::coordinate(2, [0]);
    assert!(line.quotient_dim(&axis).is_err());
}
