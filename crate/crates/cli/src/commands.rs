use std::collections::BTreeMap;

use equivar::equivariant::{
    brauer_obstruction, build_double_complex, component_map_rank, krasnov_test,
    total_equivariant_dims, FiltrationKind, PageMethod, SpectralPage,
    SpectralSequence,
};
use equivar::formulas::{
    brauer_dim_kummer, brauer_dim_surface, cross_check_surface, enriques_brauer_bounds,
    enriques_formulas, etale_dims_formula, lefschetz_euler, surface_hypotheses,
    EnriquesLatticeInvariants, HodgeInput, SurfaceCohomologyProfile,
};
use equivar::simplicial::{
    fixed_subcomplex, mod2_betti, mod2_homology_pair, quotient_complex, quotient_pair,
    rational_betti, rational_homology_trace, InvolutiveComplex,
};
use equivar::smith::{
    build_smith_sequence, harnack_thom, image_criterion, image_is_invariant, lefschetz_check,
};
use serde_json::json;

use crate::error::CliError;
use crate::input::Loaded;
use crate::report::Report;

type Result<T> = std::result::Result<T, CliError>;

/// Largest complex on which `verify` also runs the literal subquotient pages.
const ORACLE_LIMIT: usize = 400;

fn dimension(ic: &InvolutiveComplex) -> usize {
    ic.complex().dimension().unwrap_or(0)
}

fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(n, &v)| if n % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

fn start(command: &str, loaded: &Loaded) -> Report {
    let mut r = Report::new(command, loaded.digest.clone());
    r.result("subdivisions", loaded.subdivisions);
    r.result("f_vector", loaded.ic.complex().f_vector());
    r
}

fn require_regular(r: &mut Report, ic: &InvolutiveComplex) -> bool {
    let regular = ic.is_regular();
    r.hypothesis("regular_action", regular);
    regular
}

pub fn cohomology(loaded: &Loaded) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("cohomology", loaded);
    let k = ic.complex();
    let betti = mod2_betti(k);
    let rational = rational_betti(k);
    r.result("mod2_betti", &betti);
    r.result("rational_betti", &rational);
    r.result("euler_characteristic", k.euler_characteristic());
    r.check("euler_characteristic_mod2", alternating_sum(&betti) == k.euler_characteristic());
    r.check("euler_characteristic_rational", alternating_sum(&rational) == k.euler_characteristic());
    if require_regular(&mut r, ic) {
        let (fixed, _) = fixed_subcomplex(ic)?;
        let (quotient, _) = quotient_complex(ic)?;
        let pair = quotient_pair(ic)?;
        r.result("fixed_mod2_betti", mod2_betti(&fixed));
        r.result("quotient_mod2_betti", mod2_betti(&quotient));
        r.result("quotient_relative_mod2_betti", mod2_homology_pair(&pair).dims());
    }
    Ok(r)
}

fn fixed_total_betti(ic: &InvolutiveComplex) -> Result<usize> {
    let (fixed, _) = fixed_subcomplex(ic)?;
    Ok(mod2_betti(&fixed).iter().sum())
}

pub fn equivariant(loaded: &Loaded, max_degree: Option<usize>) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("equivariant", loaded);
    if !require_regular(&mut r, ic) {
        return Ok(r);
    }
    let dim = dimension(ic);
    let top = max_degree.unwrap_or(dim + 3);
    let dc = build_double_complex(ic, top)?;
    let dims = total_equivariant_dims(&dc, top)?;
    let fixed_total = fixed_total_betti(ic)?;
    r.result("max_degree", top);
    r.result("equivariant_dims", &dims);
    r.result("fixed_total_betti", fixed_total);
    if top > dim {
        r.check(
            "stabilizes_to_fixed_total_betti",
            dims[dim + 1..].iter().all(|&d| d == fixed_total),
        );
    }
    if ic.is_identity() {
        let betti = mod2_betti(ic.complex());
        let partial: Vec<usize> = (0..=top)
            .map(|n| betti.iter().take(n + 1).sum())
            .collect();
        r.check("trivial_action_partial_sums", dims == partial);
    }
    Ok(r)
}

fn page_json(page: &SpectralPage) -> serde_json::Value {
    let entries: Vec<[usize; 3]> = page
        .entries
        .iter()
        .map(|(&(p, q), &d)| [p, q, d])
        .collect();
    let ranks: Vec<[usize; 3]> = page
        .differential_ranks
        .iter()
        .filter(|(_, &rk)| rk > 0)
        .map(|(&(p, q), &rk)| [p, q, rk])
        .collect();
    json!({ "r": page.r, "entries": entries, "nonzero_differentials": ranks })
}

/// `E_{r+1} = ker d_r / im d_r` on every entry of total degree `≤ n_max`.
fn page_recursion_holds(a: &SpectralPage, b: &SpectralPage, n_max: usize) -> bool {
    let r = a.r;
    a.entries.iter().all(|(&(p, q), &e)| {
        if p + q > n_max {
            return true;
        }
        let out = a.differential_rank(p, q);
        let incoming = if p >= r { a.differential_rank(p - r, q + r - 1) } else { 0 };
        e >= out + incoming && b.entry(p, q) == e - out - incoming
    })
}

pub fn pages(
    loaded: &Loaded,
    kind: FiltrationKind,
    method: PageMethod,
    r_max: Option<usize>,
    max_degree: Option<usize>,
) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("pages", loaded);
    if !require_regular(&mut r, ic) {
        return Ok(r);
    }
    let top = max_degree.unwrap_or(dimension(ic) + 3);
    let dc = build_double_complex(ic, top)?;
    let r_max = r_max.unwrap_or(dc.rows() + 1).max(2);
    let ss = SpectralSequence::new(&dc, kind, method);
    let pages: Vec<SpectralPage> = (2..=r_max + 1).map(|p| ss.page(p)).collect();
    r.result("kind", format!("{kind:?}"));
    r.result("method", format!("{method:?}"));
    r.result("max_degree", top);
    r.result("pages", pages[..pages.len() - 1].iter().map(page_json).collect::<Vec<_>>());
    let infinity: Vec<[usize; 3]> = ss.infinity().iter().map(|(&(p, q), &d)| [p, q, d]).collect();
    r.result("infinity", &infinity);
    r.result(
        "differentials_vanish_from_page_2",
        pages.iter().all(|p| p.all_differentials_vanish()),
    );
    let dims = total_equivariant_dims(&dc, top)?;
    let totals_ok = (0..=top).all(|n| {
        infinity
            .iter()
            .filter(|e| e[0] + e[1] == n)
            .map(|e| e[2])
            .sum::<usize>()
            == dims[n]
    });
    r.check("infinity_totals_match_equivariant_dims", totals_ok);
    r.check(
        "page_recursion",
        pages.windows(2).all(|w| page_recursion_holds(&w[0], &w[1], top)),
    );
    Ok(r)
}

fn smith_into(r: &mut Report, ic: &InvolutiveComplex) -> Result<bool> {
    let sm = build_smith_sequence(ic)?;
    let sat = image_criterion(&sm);
    let table: Vec<serde_json::Value> = sm
        .degrees
        .iter()
        .zip(&sat)
        .map(|(d, s)| {
            json!({
                "n": d.n,
                "dim_relative": d.dim_relative,
                "dim_fixed": d.dim_fixed,
                "dim_total": d.dim_total,
                "rank_i": d.i.rank(),
                "rank_rho": d.rho.rank(),
                "rank_delta": d.delta.rank(),
                "invariant_dim": s.invariant_dim,
                "composite_image": s.composite_image,
                "composite_in_kernel": s.composite_in_kernel,
                "saturated": s.saturated,
            })
        })
        .collect();
    let ht = harnack_thom(ic)?;
    let lf = lefschetz_check(ic)?;
    let saturated = sat.iter().all(|s| s.saturated);
    r.result("degrees", table);
    r.result("harnack", json!({ "lhs": ht.lhs, "rhs": ht.rhs, "slack": ht.slack }));
    r.result("saturated_everywhere", saturated);
    r.result("lefschetz_number", lf.lefschetz_number);
    r.result("chi_fixed", lf.chi_fixed);
    r.check("exact", sm.is_exact());
    r.check("transfer_identity", sm.transfer_identity_holds());
    r.check("connecting_identity", sm.connecting_identity_holds());
    r.check("betti_bookkeeping", sm.betti_bookkeeping_holds());
    r.check("lift_independent", sm.lift_independent());
    r.check("image_in_invariants", sm.degrees.iter().all(image_is_invariant));
    r.check("invariant_images_match_composite", sat.iter().all(|s| s.images_agree));
    r.check("saturation_iff_composite_in_kernel_zero", sat.iter().all(|s| s.saturated == (s.composite_in_kernel == 0)));
    r.check("saturation_iff_harnack_equality", saturated == (ht.slack == 0));
    Ok(saturated && ht.slack == 0)
}

pub fn smith(loaded: &Loaded) -> Result<Report> {
    let mut r = start("smith", loaded);
    if require_regular(&mut r, &loaded.ic) {
        smith_into(&mut r, &loaded.ic)?;
    }
    Ok(r)
}

pub fn obstruction(loaded: &Loaded) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("obstruction", loaded);
    if !require_regular(&mut r, ic) {
        return Ok(r);
    }
    let (fixed, _) = fixed_subcomplex(ic)?;
    r.hypothesis("fixed_set_nonempty", fixed.dimension().is_some());
    if !r.hypotheses_hold() {
        return Ok(r);
    }
    let o = brauer_obstruction(ic)?;
    r.result("s", o.s);
    r.result("h3_quotient", o.h3_quotient);
    r.result("dim_ker_istar", o.dim_ker_istar);
    r.result("dim_im_d2_11", o.dim_im_d2_11);
    r.result("dim_ker_d3_02", o.dim_ker_d3_02);
    r.result("surjective", o.surjective);
    let mut maps = BTreeMap::new();
    for n in [1, 2] {
        let m = component_map_rank(ic, n)?;
        maps.insert(n.to_string(), json!({ "image_dim": m.image_dim, "surjective": m.surjective }));
    }
    r.result("component_map", maps);
    r.check("d2_image_within_kernel", o.dim_im_d2_11 <= o.dim_ker_istar);
    r.check("bounded_by_components", o.dim_ker_d3_02 <= o.s);
    Ok(r)
}

pub fn krasnov(loaded: &Loaded) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("krasnov", loaded);
    if !require_regular(&mut r, ic) {
        return Ok(r);
    }
    let k = krasnov_test(ic)?;
    let ht = harnack_thom(ic)?;
    let sm = build_smith_sequence(ic)?;
    let saturated = image_criterion(&sm).iter().all(|s| s.saturated);
    r.result("lhs", k.lhs);
    r.result("rhs", k.rhs);
    r.result("degenerate", k.degenerate);
    r.result("ii_differentials_vanish", k.ii_differentials_vanish);
    r.result("harnack_slack", ht.slack);
    r.result("smith_saturated", saturated);
    r.check(
        "criteria_agree",
        k.degenerate == k.ii_differentials_vanish
            && k.degenerate == (ht.slack == 0)
            && k.degenerate == saturated,
    );
    r.check("harnack_sides_agree", (k.lhs, k.rhs) == (ht.lhs, ht.rhs));
    Ok(r)
}

pub fn lefschetz(loaded: &Loaded) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("lefschetz", loaded);
    let c = lefschetz_check(ic)?;
    let traces: Vec<[i64; 3]> = (0..ic.complex().levels())
        .map(|n| {
            let (b, t) = rational_homology_trace(ic, n);
            [n as i64, b as i64, t]
        })
        .collect();
    r.result("traces", traces);
    r.result("lefschetz_number", c.lefschetz_number);
    r.result("chi_fixed", c.chi_fixed);
    r.result("surface_form", c.surface_form);
    r.check("lefschetz_equals_chi_fixed", c.consistent);
    if let Some(f) = c.surface_form {
        r.check("surface_form_equals_chi_fixed", f == c.chi_fixed);
    }
    Ok(r)
}

/// Arguments of the pure formula commands.
pub enum FormulaArgs {
    Etale {
        profile: SurfaceCohomologyProfile,
        max_degree: usize,
    },
    Kummer {
        h2_et: usize,
        pic: usize,
    },
    Brauer {
        profile: SurfaceCohomologyProfile,
        hodge: HodgeInput,
    },
    Lefschetz {
        b2_plus: usize,
        b2: usize,
    },
    Enriques(EnriquesLatticeInvariants),
    Bounds {
        b: usize,
        epsilon: u8,
        s: usize,
        real_nonempty: bool,
    },
}

pub fn formulas(args: &FormulaArgs, digest: String) -> Result<Report> {
    let mut r = Report::new("formulas", digest);
    match args {
        FormulaArgs::Etale {
            profile,
            max_degree,
        } => {
            let dims = etale_dims_formula(profile, (*max_degree).max(4))?;
            r.result("etale_dims", &dims);
            r.result("stable_value", dims[4]);
        }
        FormulaArgs::Kummer { h2_et, pic } => {
            r.result("dim_2br", brauer_dim_kummer(*h2_et, *pic)?);
        }
        FormulaArgs::Brauer { profile, hodge } => {
            let b = brauer_dim_surface(profile, hodge)?;
            r.result("via_04", b.via_04);
            r.result("via_221", b.via_221);
            r.result("via_223", b.via_223);
            r.result("via_kummer", b.via_kummer);
            r.result("dim_2br", b.value());
        }
        FormulaArgs::Lefschetz { b2_plus, b2 } => {
            let chi = lefschetz_euler(*b2_plus, *b2)?;
            r.result("chi_real", chi);
            r.result("chi_real_via_minus", 2 + *b2 as i64 - 2 * (*b2 - *b2_plus) as i64);
        }
        FormulaArgs::Enriques(inv) => {
            let e = enriques_formulas(inv)?;
            r.result("b_prime", e.b_prime);
            r.result("beta", e.beta);
            r.result("b", e.b);
            r.result("s", e.s);
            r.result("s_nor", e.s_nor);
            r.result("s_or", e.s_or);
            r.result("dim_2br", e.dim_2br);
            r.check("b_equals_2s_minus_2", e.b == 2 * e.s - 2);
            r.check("components_add_up", e.s == e.s_or + e.s_nor);
        }
        FormulaArgs::Bounds {
            b,
            epsilon,
            s,
            real_nonempty,
        } => {
            let bounds = enriques_brauer_bounds(*b, *epsilon, *s, *real_nonempty)?;
            r.result("dim_2br", bounds.dim_2br);
            r.result("lower_bound", bounds.lower_bound);
            for (name, ok) in &bounds.checks {
                r.hypothesis(name, *ok);
            }
        }
    }
    Ok(r)
}

pub fn cross_check(loaded: &Loaded, hodge: &HodgeInput) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("cross-check", loaded);
    if !require_regular(&mut r, ic) {
        return Ok(r);
    }
    for (name, ok) in surface_hypotheses(ic)? {
        r.hypothesis(name, ok);
    }
    if !r.hypotheses_hold() {
        return Ok(r);
    }
    let c = cross_check_surface(ic, hodge)?;
    let p = &c.profile;
    r.result(
        "profile",
        json!({
            "b1_mod2": p.b1_mod2, "b2": p.b2, "h2_mod2": p.h2_mod2, "h2g_mod2": p.h2g_mod2,
            "b2_plus": p.b2_plus, "s": p.s, "total_fixed_betti": p.total_fixed_betti,
        }),
    );
    r.result("formula_dims", &c.formula_dims);
    r.result("engine_dims", &c.engine_dims);
    r.result("real_part_surface_like", c.real_part_surface_like);
    r.result(
        "brauer",
        c.brauer.map(|b| {
            json!({ "via_04": b.via_04, "via_221": b.via_221, "via_223": b.via_223,
                    "via_kummer": b.via_kummer })
        }),
    );
    r.result("lefschetz_euler", c.lefschetz_euler);
    r.result("chi_fixed", c.chi_fixed);
    r.check("formula_matches_engine", c.formula_dims == c.engine_dims);
    r.check(
        "stable_value_equals_fixed_betti",
        c.formula_dims.last() == Some(&(p.total_fixed_betti as i64)),
    );
    r.check("lefschetz_matches_fixed_euler", c.lefschetz_euler == c.chi_fixed);
    Ok(r)
}

/// Runs every invariant the library knows on one complex.
pub fn verify(loaded: &Loaded) -> Result<Report> {
    let ic = &loaded.ic;
    let mut r = start("verify", loaded);
    let k = ic.complex();
    r.check(
        "boundary_squares_to_zero",
        (1..k.levels()).all(|q| k.boundary(q - 1).mul(&k.boundary(q)).is_zero()),
    );
    r.check(
        "involution_is_a_chain_map",
        (1..k.levels()).all(|q| {
            k.boundary(q).mul(&ic.g_matrix(q)) == ic.g_matrix(q - 1).mul(&k.boundary(q))
        }),
    );
    r.check(
        "euler_characteristic_mod2",
        alternating_sum(&mod2_betti(k)) == k.euler_characteristic(),
    );
    let lf = lefschetz_check(ic)?;
    r.check("lefschetz_equals_chi_fixed", lf.consistent);
    if !require_regular(&mut r, ic) {
        return Ok(r);
    }
    let dim = dimension(ic);
    let top = dim + 3;
    let dc = build_double_complex(ic, top)?;
    r.check(
        "total_differential_squares_to_zero",
        (0..top).all(|n| dc.total_differential(n + 1).mul(&dc.total_differential(n)).is_zero()),
    );
    let dims = total_equivariant_dims(&dc, top)?;
    let fixed_total = fixed_total_betti(ic)?;
    r.result("equivariant_dims", &dims);
    r.check(
        "stabilizes_to_fixed_total_betti",
        dims[dim + 1..].iter().all(|&d| d == fixed_total),
    );
    let small = k.total_simplices() <= ORACLE_LIMIT;
    for kind in [FiltrationKind::I, FiltrationKind::II] {
        let ss = SpectralSequence::new(&dc, kind, PageMethod::Pairing);
        let inf = ss.infinity();
        let totals_ok = (0..=top).all(|n| {
            inf.iter()
                .filter(|(&(p, q), _)| p + q == n)
                .map(|(_, &d)| d)
                .sum::<usize>()
                == dims[n]
        });
        r.check(&format!("{kind:?}_infinity_totals"), totals_ok);
        let pages: Vec<SpectralPage> = (1..=dc.rows() + 2).map(|p| ss.page(p)).collect();
        r.check(
            &format!("{kind:?}_page_recursion"),
            pages.windows(2).all(|w| page_recursion_holds(&w[0], &w[1], top)),
        );
        if small {
            let oracle = SpectralSequence::new(&dc, kind, PageMethod::Subquotient);
            let agree = (1..=dc.rows() + 1).all(|p| {
                let (a, b) = (ss.page(p), oracle.page(p));
                a.entries == b.entries && a.differential_ranks == b.differential_ranks
            });
            r.check(&format!("{kind:?}_pages_match_subquotient_oracle"), agree);
        }
        if kind == FiltrationKind::I && ic.is_identity() {
            r.check(
                "trivial_action_I_differentials_vanish",
                pages[1..].iter().all(|p| p.all_differentials_vanish()),
            );
        }
    }
    let degenerate_by_smith = smith_into(&mut r, ic)?;
    let kr = krasnov_test(ic)?;
    r.result("krasnov_degenerate", kr.degenerate);
    r.check(
        "krasnov_criteria_agree",
        kr.degenerate == kr.ii_differentials_vanish && kr.degenerate == degenerate_by_smith,
    );
    if ic.is_identity() {
        let betti = mod2_betti(k);
        let partial: Vec<usize> = (0..=top).map(|n| betti.iter().take(n + 1).sum()).collect();
        r.check("trivial_action_partial_sums", dims == partial);
    }
    let (fixed, _) = fixed_subcomplex(ic)?;
    if fixed.dimension().is_some() {
        let o = brauer_obstruction(ic)?;
        r.check("d2_image_within_kernel", o.dim_im_d2_11 <= o.dim_ker_istar);
    }
    Ok(r)
}
