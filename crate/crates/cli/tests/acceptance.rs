//! Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
//! Runs without the libtest harness so the lines always reach stdout.

use std::process::{Command, ExitCode};
use std::time::Instant;

use equivar::equivariant::{
    build_double_complex, component_map_rank, krasnov_test, total_equivariant_dims,
    FiltrationKind, PageMethod, SpectralSequence,
};
use equivar::fixtures::{self, random_complex, random_involutive};
use equivar::formulas::{
    brauer_dim_surface, cross_check_surface, enriques_formulas, EnriquesLatticeInvariants,
    HodgeInput, SurfaceCohomologyProfile,
};
use equivar::gf2::{BitMatrix, Subspace};
use equivar::simplicial::{fixed_subcomplex, mod2_betti, InvolutiveComplex};
use equivar::smith::{build_smith_sequence, lefschetz_check, smith_report};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn all_fixtures() -> Vec<(&'static str, InvolutiveComplex)> {
    fixtures::NAMES
        .iter()
        .map(|&n| (n, fixtures::named(n).expect("listed fixture")))
        .collect()
}

fn trivial_action_partial_sums() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1_2);
    for case in 0..20 {
        let k = random_complex(&mut rng, 10, 3, 200);
        ensure(k.total_simplices() <= 200, || format!("case {case} too large"))?;
        let ic = InvolutiveComplex::identity(k);
        let top = ic.complex().dimension().unwrap() + 3;
        let dc = build_double_complex(&ic, top).map_err(|e| e.to_string())?;
        let dims = total_equivariant_dims(&dc, top).map_err(|e| e.to_string())?;
        let betti = mod2_betti(ic.complex());
        let partial: Vec<usize> = (0..=top).map(|n| betti.iter().take(n + 1).sum()).collect();
        ensure(dims == partial, || format!("case {case}: {dims:?} vs {partial:?}"))?;
        let ss = SpectralSequence::new(&dc, FiltrationKind::I, PageMethod::Pairing);
        for r in 2..=dc.rows() + 1 {
            ensure(ss.page(r).all_differentials_vanish(), || {
                format!("case {case}: nonzero I differential on page {r}")
            })?;
        }
    }
    Ok(())
}

fn stabilization() -> Outcome {
    for (name, ic) in all_fixtures() {
        let dim = ic.complex().dimension().unwrap();
        let dc = build_double_complex(&ic, dim + 2).map_err(|e| e.to_string())?;
        let dims = total_equivariant_dims(&dc, dim + 2).map_err(|e| e.to_string())?;
        let (fixed, _) = fixed_subcomplex(&ic).map_err(|e| e.to_string())?;
        let total: usize = mod2_betti(&fixed).iter().sum();
        ensure(dims[dim + 1] == total && dims[dim + 2] == total, || {
            format!("{name}: {:?} vs {total}", &dims[dim + 1..])
        })?;
    }
    Ok(())
}

fn krasnov_equivalence() -> Outcome {
    let mut seen = (false, false);
    for (name, ic) in all_fixtures() {
        let k = krasnov_test(&ic).map_err(|e| e.to_string())?;
        let sm = smith_report(&ic).map_err(|e| e.to_string())?;
        let flags = [
            k.degenerate,
            k.ii_differentials_vanish,
            sm.harnack_lhs == sm.harnack_rhs,
            sm.saturated_everywhere(),
        ];
        ensure(flags.iter().all(|&f| f == flags[0]), || format!("{name}: {flags:?}"))?;
        if flags[0] {
            seen.0 = true;
        } else {
            seen.1 = true;
        }
    }
    ensure(seen == (true, true), || "fixtures do not cover both outcomes".into())
}

fn smith_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5_417);
    let random: Vec<(String, InvolutiveComplex)> = (0..20)
        .map(|i| (format!("random #{i}"), random_involutive(&mut rng, 7, 3, 60)))
        .collect();
    let named = all_fixtures().into_iter().map(|(n, ic)| (n.to_string(), ic));
    for (name, ic) in named.chain(random) {
        ensure(ic.is_regular(), || format!("{name}: not regular"))?;
        let sm = build_smith_sequence(&ic).map_err(|e| e.to_string())?;
        ensure(sm.is_exact(), || format!("{name}: {:?}", sm.exactness_defects()))?;
        ensure(sm.transfer_identity_holds(), || format!("{name}: transfer identity"))?;
        ensure(sm.connecting_identity_holds(), || format!("{name}: connecting identity"))?;
    }
    Ok(())
}

fn lefschetz() -> Outcome {
    for (name, ic) in all_fixtures() {
        let c = lefschetz_check(&ic).map_err(|e| e.to_string())?;
        let expected = match name {
            "octahedron-reflection" | "octahedron-antipodal" | "hexagon-antipodal" => Some(0),
            _ if ic.is_identity() => Some(ic.complex().euler_characteristic()),
            _ => None,
        };
        ensure(c.consistent, || format!("{name}: {} vs {}", c.lefschetz_number, c.chi_fixed))?;
        if let Some(v) = expected {
            ensure(c.lefschetz_number == v && c.chi_fixed == v, || {
                format!("{name}: expected {v}, got {}", c.lefschetz_number)
            })?;
        }
    }
    Ok(())
}

const QUADRIC_HODGE: HodgeInput = HodgeInput {
    h20: 0,
    h11_minus: 2,
    rho_plus: 2,
};

fn quadric_reproduction() -> Outcome {
    let start = Instant::now();
    let cc = cross_check_surface(&fixtures::quadric(), &QUADRIC_HODGE).map_err(|e| e.to_string())?;
    for key in ["fixed_set_nonempty", "quotient_h1_zero", "quotient_h3_zero"] {
        ensure(cc.hypotheses.get(key) == Some(&true), || format!("hypothesis {key}"))?;
    }
    ensure(cc.profile.s == 1, || format!("s = {}", cc.profile.s))?;
    ensure(cc.engine_dims[..5] == [1, 1, 3, 3, 4], || format!("engine {:?}", cc.engine_dims))?;
    ensure(cc.engine_dims == cc.formula_dims, || {
        format!("engine {:?} vs formula {:?}", cc.engine_dims, cc.formula_dims)
    })?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 30.0, || format!("took {secs:.1}s"))
}

fn random_profile(rng: &mut ChaCha8Rng) -> Option<(SurfaceCohomologyProfile, HodgeInput)> {
    let s = rng.gen_range(1..=4usize);
    let (mut tfb, mut chi) = (0usize, 0i64);
    for _ in 0..s {
        if rng.gen_bool(0.5) {
            let g = rng.gen_range(0..4usize);
            tfb += 2 + 2 * g;
            chi += 2 - 2 * g as i64;
        } else {
            let k = rng.gen_range(1..6usize);
            tfb += 2 + k;
            chi += 2 - k as i64;
        }
    }
    let b2_plus = rng.gen_range(0..12usize);
    let b2 = 2 + 2 * b2_plus as i64 - chi;
    if b2 < b2_plus as i64 {
        return None;
    }
    let b2 = b2 as usize;
    let minus = b2 - b2_plus;
    let h20 = rng.gen_range(0..=minus.min(3));
    let h11_minus = minus - h20;
    let rho_plus = rng.gen_range(0..=h11_minus);
    let b1 = rng.gen_range(0..3usize);
    let h2 = b2 + 2 * b1;
    let h2g = (tfb + b2 - 2) / 2;
    (h2g <= h2).then_some((
        SurfaceCohomologyProfile {
            b1_mod2: b1,
            b2,
            h2_mod2: h2,
            h2g_mod2: h2g,
            b2_plus,
            s,
            total_fixed_betti: tfb,
        },
        HodgeInput {
            h20,
            h11_minus,
            rho_plus,
        },
    ))
}

fn brauer_routes() -> Outcome {
    let quadric = SurfaceCohomologyProfile {
        b1_mod2: 0,
        b2: 2,
        h2_mod2: 2,
        h2g_mod2: 2,
        b2_plus: 0,
        s: 1,
        total_fixed_betti: 4,
    };
    let r = brauer_dim_surface(&quadric, &QUADRIC_HODGE).map_err(|e| e.to_string())?;
    ensure(r.value() == 1 && r.value() == 2 * quadric.s as i64 - 1, || format!("quadric {r:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xB_7A0);
    let mut done = 0;
    while done < 100 {
        let Some((p, h)) = random_profile(&mut rng) else { continue };
        let r = brauer_dim_surface(&p, &h).map_err(|e| format!("{p:?} {h:?}: {e}"))?;
        let routes = [r.via_04, r.via_221, r.via_223, r.via_kummer];
        ensure(routes.iter().all(|&v| v == routes[0]), || format!("{p:?} {h:?}: {routes:?}"))?;
        done += 1;
    }
    Ok(())
}

fn component_maps() -> Outcome {
    for name in ["octahedron-reflection", "quadric"] {
        let ic = fixtures::named(name).unwrap();
        for n in [1, 2] {
            let c = component_map_rank(&ic, n).map_err(|e| e.to_string())?;
            ensure(c.surjective, || format!("{name}, n = {n}: {c:?}"))?;
        }
    }
    for (name, ic) in all_fixtures().into_iter().filter(|(_, ic)| ic.is_identity()) {
        let top = ic.complex().dimension().unwrap() + 3;
        for n in 0..=top {
            let c = component_map_rank(&ic, n).map_err(|e| e.to_string())?;
            ensure(c.surjective, || format!("{name}, n = {n}: {c:?}"))?;
        }
    }
    Ok(())
}

fn enriques_grid() -> Outcome {
    let mut beta_zero = false;
    for alpha in 0..2u8 {
        for delta in 0..2u8 {
            for r_minus_a in [0usize, 2, 4] {
                let inv = EnriquesLatticeInvariants {
                    r_theta: 6 + r_minus_a,
                    a_theta: 6,
                    alpha_sigma: alpha,
                    delta1: delta,
                    delta2: delta,
                    both_liftings_real: true,
                    ..Default::default()
                };
                let e = enriques_formulas(&inv).map_err(|e| format!("{inv:?}: {e}"))?;
                ensure(
                    e.b == 2 * e.s - 2 && e.s == e.s_or + e.s_nor && e.dim_2br == 2 * e.s - 1,
                    || format!("{inv:?}: {e:?}"),
                )?;
                if alpha == 1 && delta == 0 {
                    ensure(e.beta == 0, || format!("{inv:?}: beta = {}", e.beta))?;
                    beta_zero = true;
                } else {
                    ensure(e.beta == 1, || format!("{inv:?}: beta = {}", e.beta))?;
                }
            }
        }
    }
    ensure(beta_zero, || "beta = 0 case not reached".into())
}

/// Rank by elimination on `u128` rows, independent of the library.
fn oracle_rank(m: &BitMatrix) -> usize {
    let mut rows: Vec<u128> = (0..m.rows())
        .map(|r| (0..m.cols()).filter(|&c| m.get(r, c)).fold(0, |acc, c| acc | 1 << c))
        .collect();
    let mut rank = 0;
    for bit in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i] >> bit & 1 == 1 {
                rows[i] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

fn random_matrix(rng: &mut ChaCha8Rng) -> BitMatrix {
    let (m, n) = (rng.gen_range(1..=128), rng.gen_range(1..=128));
    if rng.gen_bool(0.5) {
        let density = rng.gen_range(0.02..0.6);
        BitMatrix::from_fn(m, n, |_, _| rng.gen_bool(density))
    } else {
        let k = rng.gen_range(0..=m.min(n));
        let a = BitMatrix::from_fn(m, k, |_, _| rng.gen_bool(0.5));
        let b = BitMatrix::from_fn(k, n, |_, _| rng.gen_bool(0.5));
        a.mul(&b)
    }
}

fn linear_algebra_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6F2);
    for case in 0..1000 {
        let a = random_matrix(&mut rng);
        let rank = a.rank();
        ensure(rank == oracle_rank(&a), || format!("case {case}: rank"))?;
        ensure(rank + a.kernel().dim() == a.cols(), || format!("case {case}: rank-nullity"))?;
        ensure(a.transpose().rank() == rank, || format!("case {case}: transpose rank"))?;
        // modular law U ⊆ W ⇒ W ∩ (U + V) = U + (W ∩ V), with ambient = rows
        let ambient = a.rows();
        let w = a.image();
        let wb = w.basis_vectors();
        let u = Subspace::from_vectors(ambient, &wb[..wb.len() / 2]);
        let v = random_matrix_with_rows(&mut rng, ambient).image();
        let lhs = w.intersect(&u.sum(&v).unwrap()).unwrap();
        let rhs = u.sum(&w.intersect(&v).unwrap()).unwrap();
        let equal = lhs.contains(&rhs).unwrap() && rhs.contains(&lhs).unwrap();
        ensure(equal, || format!("case {case}: modular law"))?;
        let dim_formula = u.sum(&v).unwrap().dim() + u.intersect(&v).unwrap().dim();
        ensure(dim_formula == u.dim() + v.dim(), || format!("case {case}: dimension formula"))?;
    }
    Ok(())
}

fn random_matrix_with_rows(rng: &mut ChaCha8Rng, rows: usize) -> BitMatrix {
    let cols = rng.gen_range(1..=rows.min(64));
    BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.3))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_equivar"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited with {:?}", out.status.code())
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    linear_algebra_laws()?;
    let runs: [&[&str]; 4] = [
        &["verify", "--fixture", "octahedron-reflection"],
        &["pages", "--fixture", "octahedron-antipodal", "--kind", "II"],
        &["smith", "--fixture", "edge-swap", "--format", "text"],
        &["formulas", "enriques", "--r", "4", "--a", "2", "--alpha", "1", "--delta", "0"],
    ];
    for args in runs {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        ensure(first == second, || format!("{args:?}: reports differ between runs"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("trivial action: equivariant dims are partial Betti sums", trivial_action_partial_sums),
        ("stabilization at dim K + 1 and dim K + 2", stabilization),
        ("degeneration criteria agree", krasnov_equivalence),
        ("Smith sequence exact with transfer and connecting identities", smith_exactness),
        ("Lefschetz number equals Euler characteristic of the fixed part", lefschetz),
        ("quadric: engine matches closed form (1,1,3,3,4)", quadric_reproduction),
        ("Brauer dimension routes agree", brauer_routes),
        ("component map surjective where expected", component_maps),
        ("Enriques evaluator identities on the grid", enriques_grid),
        ("GF(2) laws on 1000 matrices and deterministic reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
