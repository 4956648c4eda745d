//! Closed-form dimension formulas for real surfaces and the checks that tie
//! them to the equivariant engine.
//!
//! Every evaluator is total over integers and validates its inputs; the
//! geometric hypotheses behind a formula are the caller's responsibility,
//! except in [`cross_check_surface`] where the engine verifies them.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::equivariant::{build_double_complex, total_equivariant_dims, EngineError};
use crate::gf2::BitMatrix;
use crate::simplicial::{
    fixed_subcomplex, induced_map_mod2, mod2_betti, mod2_cohomology, quotient_complex,
    rational_homology_trace, ComplexError, InvolutiveComplex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("inadmissible invariants: {0}")]
    Inadmissible(String),
    #[error("outside the proven range: {0}")]
    Unproven(String),
    #[error("routes disagree: {via_04} / {via_221} / {via_223} / {via_kummer}")]
    RouteMismatch {
        via_04: i64,
        via_221: i64,
        via_223: i64,
        via_kummer: i64,
    },
    #[error("formula and engine disagree in degrees {0:?} (degree, formula, engine)")]
    EngineMismatch(Vec<(usize, i64, i64)>),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl FormulaError {
    pub fn code(&self) -> &'static str {
        match self {
            FormulaError::Hypothesis(_) => "formula.hypothesis_failed",
            FormulaError::Inconsistent(_) => "formula.inconsistent_inputs",
            FormulaError::Constraint(_) => "formula.constraint_violation",
            FormulaError::Inadmissible(_) => "formula.inadmissible",
            FormulaError::Unproven(_) => "formula.unproven_regime",
            FormulaError::RouteMismatch { .. } => "formula.route_mismatch",
            FormulaError::EngineMismatch(_) => "formula.engine_mismatch",
            FormulaError::Engine(e) => e.code(),
            FormulaError::Complex(e) => e.code(),
        }
    }
}

type Result<T> = std::result::Result<T, FormulaError>;

/// Topological input of the surface formulas.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SurfaceCohomologyProfile {
    /// `dim H¹(X(ℂ); F₂)`.
    pub b1_mod2: usize,
    /// Second Betti number.
    pub b2: usize,
    /// `dim H²(X(ℂ); F₂)`.
    pub h2_mod2: usize,
    /// `dim H²(X(ℂ); F₂)^G`.
    pub h2g_mod2: usize,
    /// `dim H²(X(ℂ); ℂ)^G`.
    pub b2_plus: usize,
    /// Components of the real part.
    pub s: usize,
    /// `dim H^*(X(ℝ); F₂)`.
    pub total_fixed_betti: usize,
}

impl SurfaceCohomologyProfile {
    pub fn validate(&self) -> Result<()> {
        if self.h2g_mod2 > self.h2_mod2 {
            return Err(FormulaError::Inconsistent(format!(
                "invariant part {} exceeds dim H² = {}",
                self.h2g_mod2, self.h2_mod2
            )));
        }
        if self.b2_plus > self.b2 {
            return Err(FormulaError::Inconsistent(format!(
                "(b2)_+ = {} exceeds b2 = {}",
                self.b2_plus, self.b2
            )));
        }
        Ok(())
    }

    /// `(b₂)₋ = b₂ − (b₂)₊`.
    pub fn b2_minus(&self) -> usize {
        self.b2 - self.b2_plus
    }
}

/// Hodge-side input; never computed, always supplied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HodgeInput {
    pub h20: usize,
    pub h11_minus: usize,
    pub rho_plus: usize,
}

impl HodgeInput {
    pub fn validate(&self) -> Result<()> {
        if self.rho_plus > self.h11_minus {
            return Err(FormulaError::Inconsistent(format!(
                "rho_plus = {} exceeds h11_minus = {}",
                self.rho_plus, self.h11_minus
            )));
        }
        Ok(())
    }
}

/// Dimensions of `H^k_et(X; F₂)` for `k = 0..=k_max`, constant from `k = 4` on.
pub fn etale_dims_formula(p: &SurfaceCohomologyProfile, k_max: usize) -> Result<Vec<i64>> {
    p.validate()?;
    if p.s == 0 {
        return Err(FormulaError::Hypothesis("the real part is empty".into()));
    }
    let (b1, h2, h2g) = (p.b1_mod2 as i64, p.h2_mod2 as i64, p.h2g_mod2 as i64);
    let known = [
        1,
        b1 + 1,
        h2g + b1 + 1,
        2 * h2g - h2 + 2 * b1 + 1,
        2 * h2g - h2 + 2 * b1 + 2,
    ];
    if let Some(k) = known.iter().position(|&v| v < 0) {
        return Err(FormulaError::Hypothesis(format!(
            "degree {k} evaluates to {}",
            known[k]
        )));
    }
    Ok((0..=k_max).map(|k| known[k.min(4)]).collect())
}

/// `dim ₂Br′ = dim H²_et − dim Pic/2`.
pub fn brauer_dim_kummer(h2_et: usize, pic_mod2: usize) -> Result<usize> {
    h2_et.checked_sub(pic_mod2).ok_or_else(|| {
        FormulaError::Inconsistent(format!("Pic/2 has dimension {pic_mod2} > {h2_et}"))
    })
}

/// `dim Pic X / 2 = ρ₊ + dim H¹(X(ℂ); F₂)`.
pub fn pic_mod2(p: &SurfaceCohomologyProfile, h: &HodgeInput) -> usize {
    h.rho_plus + p.b1_mod2
}

/// `χ(X(ℝ)) = 2 + 2(b₂)₊ − b₂`.
pub fn lefschetz_euler(b2_plus: usize, b2: usize) -> Result<i64> {
    if b2_plus > b2 {
        return Err(FormulaError::Inconsistent(format!(
            "(b2)_+ = {b2_plus} exceeds b2 = {b2}"
        )));
    }
    Ok(2 + 2 * b2_plus as i64 - b2 as i64)
}

/// The Brauer dimension computed along four independent routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrauerRoutes {
    /// `2s − 1 + h^{2,0} + h^{1,1}_− − ρ₊`.
    pub via_04: i64,
    /// `dim H^*(X(ℝ))/2 + b₂/2 − ρ₊`.
    pub via_221: i64,
    /// `dim H^*(X(ℝ))/2 + χ(X(ℝ))/2 − 1 + (b₂)₋ − ρ₊`.
    pub via_223: i64,
    /// `dim H²_et − dim Pic/2` with the étale dimension from the profile.
    pub via_kummer: i64,
}

impl BrauerRoutes {
    pub fn value(&self) -> i64 {
        self.via_04
    }
}

fn halve(v: i64, what: &str) -> Result<i64> {
    if v % 2 != 0 {
        return Err(FormulaError::Inconsistent(format!("{what} = {v} is odd")));
    }
    Ok(v / 2)
}

pub fn brauer_dim_surface(p: &SurfaceCohomologyProfile, h: &HodgeInput) -> Result<BrauerRoutes> {
    p.validate()?;
    h.validate()?;
    if p.s == 0 {
        return Err(FormulaError::Hypothesis("the real part is empty".into()));
    }
    if p.h2_mod2 != p.b2 + 2 * p.b1_mod2 {
        return Err(FormulaError::Inconsistent(format!(
            "dim H² = {} but b2 + 2 b1 = {}",
            p.h2_mod2,
            p.b2 + 2 * p.b1_mod2
        )));
    }
    if p.b2_minus() != h.h20 + h.h11_minus {
        return Err(FormulaError::Inconsistent(format!(
            "(b2)_- = {} but h20 + h11_minus = {}",
            p.b2_minus(),
            h.h20 + h.h11_minus
        )));
    }
    let (s, rho) = (p.s as i64, h.rho_plus as i64);
    let tfb = p.total_fixed_betti as i64;
    let chi = lefschetz_euler(p.b2_plus, p.b2)?;
    let via_04 = 2 * s - 1 + (h.h20 + h.h11_minus) as i64 - rho;
    let via_221 = halve(tfb + p.b2 as i64, "dim H^*(real) + b2")? - rho;
    let via_223 = halve(tfb + chi, "dim H^*(real) + chi(real)")? - 1 + p.b2_minus() as i64 - rho;
    let h2_et = etale_dims_formula(p, 2)?[2];
    let via_kummer = h2_et - pic_mod2(p, h) as i64;
    let routes = BrauerRoutes {
        via_04,
        via_221,
        via_223,
        via_kummer,
    };
    if via_04 != via_221 || via_04 != via_223 || via_04 != via_kummer {
        return Err(FormulaError::RouteMismatch {
            via_04,
            via_221,
            via_223,
            via_kummer,
        });
    }
    if via_04 < 0 {
        return Err(FormulaError::Inconsistent(format!("dimension {via_04} is negative")));
    }
    Ok(routes)
}

/// Lattice invariants of the `(ℤ/2)²` action behind a real Enriques surface.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnriquesLatticeInvariants {
    pub r_theta: usize,
    pub a_theta: usize,
    pub alpha_sigma: u8,
    pub delta1: u8,
    pub delta2: u8,
    pub dim_h_minus: usize,
    pub dim_hperp_cap: usize,
    /// Optional observed counts, compared against the computed ones.
    pub s_or: Option<usize>,
    pub s_nor: Option<usize>,
    /// Both liftings of the real structure have real points.
    pub both_liftings_real: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnriquesFormulas {
    pub b_prime: i64,
    pub beta: i64,
    pub b: i64,
    pub s_nor: i64,
    pub s: i64,
    pub s_or: i64,
    pub dim_2br: i64,
}

pub fn enriques_formulas(inv: &EnriquesLatticeInvariants) -> Result<EnriquesFormulas> {
    for (name, v) in [
        ("alpha", inv.alpha_sigma),
        ("delta1", inv.delta1),
        ("delta2", inv.delta2),
    ] {
        if v > 1 {
            return Err(FormulaError::Constraint(format!("{name} = {v} is not 0 or 1")));
        }
    }
    if inv.r_theta % 2 != inv.a_theta % 2 {
        return Err(FormulaError::Constraint(format!(
            "r = {} and a = {} differ in parity",
            inv.r_theta, inv.a_theta
        )));
    }
    if inv.delta1 != inv.delta2 {
        return Err(FormulaError::Constraint("delta1 differs from delta2".into()));
    }
    let alpha = inv.alpha_sigma as i64;
    let delta = inv.delta1 as i64;
    let r_minus_a = inv.r_theta as i64 - inv.a_theta as i64;
    let m = (1 - alpha).max(delta);
    let b_prime = r_minus_a + m;
    if !inv.both_liftings_real {
        return Err(FormulaError::Unproven(format!(
            "b' = {b_prime}; beta, b and s are only known when both liftings have real points"
        )));
    }
    let beta = m;
    let b = b_prime + beta;
    let s = 1 + r_minus_a / 2 + m;
    let s_nor = 1 + alpha * (2 * delta - 1) + inv.dim_h_minus as i64 - inv.dim_hperp_cap as i64;
    let s_or = s - s_nor;
    let out = EnriquesFormulas {
        b_prime,
        beta,
        b,
        s_nor,
        s,
        s_or,
        dim_2br: 2 * s - 1,
    };
    if b_prime < 0 || s_nor < 0 || s_or < 0 || s < 1 {
        return Err(FormulaError::Inadmissible(format!("{out:?}")));
    }
    if b != 2 * s - 2 {
        return Err(FormulaError::Inadmissible(format!("b = {b} but 2s − 2 = {}", 2 * s - 2)));
    }
    // b through the component counts, with min + max = 1 + α(2δ − 1)
    let b_by_components = 2 * s_or + s_nor - 1 + alpha * (2 * delta - 1)
        + inv.dim_h_minus as i64
        - inv.dim_hperp_cap as i64;
    if b_by_components != b {
        return Err(FormulaError::Inadmissible(format!(
            "b = {b} but the component form gives {b_by_components}"
        )));
    }
    for (name, given, computed) in [("s_or", inv.s_or, s_or), ("s_nor", inv.s_nor, s_nor)] {
        if let Some(g) = given {
            if g as i64 != computed {
                return Err(FormulaError::Inconsistent(format!(
                    "{name} given as {g}, computed {computed}"
                )));
            }
        }
    }
    Ok(out)
}

/// Brauer dimension of a real Enriques surface from `b` and `ε`, with the
/// inequalities it must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerBounds {
    /// `b + ε`, known when the real part is nonempty.
    pub dim_2br: Option<i64>,
    /// Best lower bound on the dimension.
    pub lower_bound: i64,
    /// Named inequality checks; a `false` entry marks inconsistent inputs.
    pub checks: BTreeMap<&'static str, bool>,
}

impl BrauerBounds {
    pub fn consistent(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

pub fn enriques_brauer_bounds(
    b: usize,
    epsilon: u8,
    s: usize,
    real_nonempty: bool,
) -> Result<BrauerBounds> {
    if epsilon > 1 {
        return Err(FormulaError::Constraint(format!("epsilon = {epsilon} is not 0 or 1")));
    }
    if real_nonempty != (s > 0) {
        return Err(FormulaError::Constraint(format!(
            "s = {s} contradicts real_nonempty = {real_nonempty}"
        )));
    }
    let (b, eps, s) = (b as i64, epsilon as i64, s as i64);
    let mut checks = BTreeMap::new();
    checks.insert("b_at_least_2s_minus_2", b >= 2 * s - 2);
    let dim_2br = real_nonempty.then_some(b + eps);
    if let Some(d) = dim_2br {
        checks.insert("dim_at_least_2s_minus_2_plus_eps", d >= 2 * s - 2 + eps);
        checks.insert("dim_at_least_2s_minus_1", d >= 2 * s - 1);
    }
    Ok(BrauerBounds {
        dim_2br,
        lower_bound: (2 * s - 2 + eps).max(2 * s - 1).max(0),
        checks,
    })
}

/// Engine-verified hypotheses of the surface formulas, by name.
pub fn surface_hypotheses(ic: &InvolutiveComplex) -> Result<BTreeMap<&'static str, bool>> {
    let (fixed, _) = fixed_subcomplex(ic)?;
    let (quotient, _) = quotient_complex(ic)?;
    let hq = mod2_cohomology(&quotient);
    let mut out = BTreeMap::new();
    out.insert("four_dimensional", ic.complex().dimension() == Some(4));
    out.insert("fixed_set_nonempty", fixed.dimension().is_some());
    out.insert("quotient_h1_zero", hq.dim(1) == 0);
    out.insert("quotient_h3_zero", hq.dim(3) == 0);
    Ok(out)
}

/// Reads the cohomology profile of a model off the engine.
pub fn surface_profile(ic: &InvolutiveComplex) -> Result<SurfaceCohomologyProfile> {
    let k = ic.complex();
    let betti = mod2_betti(k);
    let at = |n: usize| betti.get(n).copied().unwrap_or(0);
    let g2 = if k.levels() > 2 {
        induced_map_mod2(&ic.as_map(), k, k, 2)?
    } else {
        BitMatrix::zeros(0, 0)
    };
    let h2g = g2.add(&BitMatrix::identity(g2.rows())).kernel().dim();
    let (b2, trace) = rational_homology_trace(ic, 2);
    let (fixed, _) = fixed_subcomplex(ic)?;
    let fixed_betti = mod2_betti(&fixed);
    Ok(SurfaceCohomologyProfile {
        b1_mod2: at(1),
        b2,
        h2_mod2: at(2),
        h2g_mod2: h2g,
        b2_plus: ((b2 as i64 + trace) / 2) as usize,
        s: fixed_betti.first().copied().unwrap_or(0),
        total_fixed_betti: fixed_betti.iter().sum(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCrossCheck {
    pub hypotheses: BTreeMap<&'static str, bool>,
    pub profile: SurfaceCohomologyProfile,
    pub formula_dims: Vec<i64>,
    pub engine_dims: Vec<i64>,
    /// Every component of the fixed part is a closed surface:
    /// 2-dimensional, with `dim H^*(F) + χ(F) = 4` per component.
    pub real_part_surface_like: bool,
    /// `None` when the real part is not surface-like.
    pub brauer: Option<BrauerRoutes>,
    pub lefschetz_euler: i64,
    pub chi_fixed: i64,
}

pub fn cross_check_surface(ic: &InvolutiveComplex, h: &HodgeInput) -> Result<SurfaceCrossCheck> {
    let hypotheses = surface_hypotheses(ic)?;
    let failed: Vec<&str> = hypotheses
        .iter()
        .filter(|(_, &ok)| !ok)
        .map(|(&name, _)| name)
        .collect();
    if !failed.is_empty() {
        return Err(FormulaError::Hypothesis(failed.join(", ")));
    }
    let profile = surface_profile(ic)?;
    let top = ic.complex().dimension().unwrap_or(0) + 3;
    let formula_dims = etale_dims_formula(&profile, top)?;
    let dc = build_double_complex(ic, top)?;
    let engine_dims: Vec<i64> = total_equivariant_dims(&dc, top)?
        .into_iter()
        .map(|d| d as i64)
        .collect();
    let diffs: Vec<(usize, i64, i64)> = formula_dims
        .iter()
        .zip(&engine_dims)
        .enumerate()
        .filter(|(_, (f, e))| f != e)
        .map(|(n, (&f, &e))| (n, f, e))
        .collect();
    if !diffs.is_empty() {
        return Err(FormulaError::EngineMismatch(diffs));
    }
    let (fixed, _) = fixed_subcomplex(ic)?;
    let chi_fixed = fixed.euler_characteristic();
    let lefschetz = lefschetz_euler(profile.b2_plus, profile.b2)?;
    if lefschetz != chi_fixed {
        return Err(FormulaError::Inconsistent(format!(
            "2 + 2(b2)_+ − b2 = {lefschetz} but χ(fixed) = {chi_fixed}"
        )));
    }
    let real_part_surface_like = fixed.dimension() == Some(2)
        && profile.total_fixed_betti as i64 + chi_fixed == 4 * profile.s as i64;
    let brauer = if real_part_surface_like {
        Some(brauer_dim_surface(&profile, h)?)
    } else {
        None
    };
    Ok(SurfaceCrossCheck {
        hypotheses,
        profile,
        formula_dims,
        engine_dims,
        real_part_surface_like,
        brauer,
        lefschetz_euler: lefschetz,
        chi_fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn quadric_profile() -> SurfaceCohomologyProfile {
        SurfaceCohomologyProfile {
            b1_mod2: 0,
            b2: 2,
            h2_mod2: 2,
            h2g_mod2: 2,
            b2_plus: 0,
            s: 1,
            total_fixed_betti: 4,
        }
    }

    const QUADRIC_HODGE: HodgeInput = HodgeInput {
        h20: 0,
        h11_minus: 2,
        rho_plus: 2,
    };

    #[test]
    fn etale_dims_examples() {
        assert_eq!(etale_dims_formula(&quadric_profile(), 4).unwrap(), vec![1, 1, 3, 3, 4]);
        let sphere_like = SurfaceCohomologyProfile {
            s: 1,
            ..Default::default()
        };
        assert_eq!(etale_dims_formula(&sphere_like, 6).unwrap(), vec![1, 1, 1, 1, 2, 2, 2]);
        assert_eq!(
            etale_dims_formula(&SurfaceCohomologyProfile::default(), 4).unwrap_err().code(),
            "formula.hypothesis_failed"
        );
    }

    #[test]
    fn negative_degree_is_a_hypothesis_error() {
        let p = SurfaceCohomologyProfile {
            h2_mod2: 6,
            h2g_mod2: 1,
            b2: 6,
            s: 1,
            ..Default::default()
        };
        assert!(matches!(etale_dims_formula(&p, 4), Err(FormulaError::Hypothesis(_))));
    }

    #[test]
    fn kummer_examples() {
        assert_eq!(brauer_dim_kummer(3, 2).unwrap(), 1);
        assert_eq!(brauer_dim_kummer(5, 5).unwrap(), 0);
        assert_eq!(brauer_dim_kummer(1, 2).unwrap_err().code(), "formula.inconsistent_inputs");
        let pic = pic_mod2(&quadric_profile(), &QUADRIC_HODGE);
        assert_eq!(brauer_dim_kummer(3, pic).unwrap(), 1);
    }

    #[test]
    fn lefschetz_euler_examples() {
        assert_eq!(lefschetz_euler(0, 2).unwrap(), 0);
        assert_eq!(lefschetz_euler(5, 5).unwrap(), 7);
        assert_eq!(lefschetz_euler(0, 0).unwrap(), 2);
        assert!(lefschetz_euler(3, 2).is_err());
    }

    #[test]
    fn quadric_routes_agree() {
        let r = brauer_dim_surface(&quadric_profile(), &QUADRIC_HODGE).unwrap();
        assert_eq!((r.via_04, r.via_221, r.via_223, r.via_kummer), (1, 1, 1, 1));
    }

    #[test]
    fn trivial_sphere_like_profile() {
        let p = SurfaceCohomologyProfile {
            s: 1,
            b2: 0,
            total_fixed_betti: 2,
            ..Default::default()
        };
        let r = brauer_dim_surface(&p, &HodgeInput::default()).unwrap();
        assert_eq!(r.value(), 1);
    }

    #[test]
    fn enriques_like_profile_gives_2s_minus_1() {
        // h20 = 0, h11_minus = rho_plus; real part: s spheres
        for s in 1..5usize {
            let tfb = 2 * s;
            let chi = 2 * s as i64;
            // 2 + 2 b2_plus − b2 = chi with b2 = 10, b2_plus chosen to match
            let b2 = 10usize;
            let b2_plus = ((chi - 2 + b2 as i64) / 2) as usize;
            let p = SurfaceCohomologyProfile {
                b1_mod2: 0,
                b2,
                h2_mod2: b2,
                h2g_mod2: (tfb + b2 - 2) / 2,
                b2_plus,
                s,
                total_fixed_betti: tfb,
            };
            let minus = b2 - b2_plus;
            let h = HodgeInput {
                h20: 0,
                h11_minus: minus,
                rho_plus: minus,
            };
            assert_eq!(brauer_dim_surface(&p, &h).unwrap().value(), 2 * s as i64 - 1);
        }
    }

    #[test]
    fn hodge_identity_is_enforced() {
        let h = HodgeInput {
            h20: 1,
            h11_minus: 2,
            rho_plus: 2,
        };
        assert_eq!(
            brauer_dim_surface(&quadric_profile(), &h).unwrap_err().code(),
            "formula.inconsistent_inputs"
        );
    }

    #[test]
    fn non_surface_real_part_gives_mismatching_routes() {
        let mut p = quadric_profile();
        p.total_fixed_betti = 6;
        p.h2g_mod2 = 3;
        p.h2_mod2 = 2;
        assert!(brauer_dim_surface(&p, &QUADRIC_HODGE).is_err());
    }

    fn inv(r: usize, a: usize, alpha: u8, delta: u8, dh: usize, dc: usize) -> EnriquesLatticeInvariants {
        EnriquesLatticeInvariants {
            r_theta: r,
            a_theta: a,
            alpha_sigma: alpha,
            delta1: delta,
            delta2: delta,
            dim_h_minus: dh,
            dim_hperp_cap: dc,
            s_or: None,
            s_nor: None,
            both_liftings_real: true,
        }
    }

    #[test]
    fn enriques_command_line_example() {
        let e = enriques_formulas(&inv(2, 0, 1, 0, 1, 1)).unwrap();
        assert_eq!((e.b, e.s, e.s_nor, e.dim_2br), (2, 2, 0, 3));
        assert_eq!((e.beta, e.b_prime, e.s_or), (0, 2, 2));
    }

    #[test]
    fn enriques_alpha_zero() {
        let e = enriques_formulas(&inv(2, 0, 0, 0, 0, 0)).unwrap();
        assert_eq!((e.s, e.dim_2br, e.beta, e.b), (3, 5, 1, 4));
        assert_eq!(e.s_nor, 1);
    }

    #[test]
    fn enriques_constraints() {
        assert_eq!(enriques_formulas(&inv(3, 0, 1, 0, 0, 0)).unwrap_err().code(), "formula.constraint_violation");
        let mut bad = inv(2, 0, 1, 0, 0, 0);
        bad.delta2 = 1;
        assert_eq!(enriques_formulas(&bad).unwrap_err().code(), "formula.constraint_violation");
        assert_eq!(enriques_formulas(&inv(2, 0, 1, 0, 0, 3)).unwrap_err().code(), "formula.inadmissible");
        let mut unproven = inv(2, 0, 0, 0, 0, 0);
        unproven.both_liftings_real = false;
        assert_eq!(enriques_formulas(&unproven).unwrap_err().code(), "formula.unproven_regime");
        let mut observed = inv(2, 0, 1, 0, 1, 1);
        observed.s_nor = Some(1);
        assert_eq!(enriques_formulas(&observed).unwrap_err().code(), "formula.inconsistent_inputs");
    }

    #[test]
    fn bounds_examples() {
        for s in 1..4 {
            let ok = enriques_brauer_bounds(2 * s - 2, 1, s, true).unwrap();
            assert_eq!(ok.dim_2br, Some(2 * s as i64 - 1));
            assert!(ok.consistent());
            let flagged = enriques_brauer_bounds(2 * s - 2, 0, s, true).unwrap();
            assert_eq!(flagged.dim_2br, Some(2 * s as i64 - 2));
            assert!(!flagged.checks["dim_at_least_2s_minus_1"]);
            assert!(!flagged.consistent());
        }
        assert_eq!(enriques_brauer_bounds(0, 1, 1, true).unwrap().dim_2br, Some(1));
        let empty = enriques_brauer_bounds(3, 0, 0, false).unwrap();
        assert_eq!(empty.dim_2br, None);
        assert!(enriques_brauer_bounds(0, 2, 1, true).is_err());
    }

    #[test]
    fn quadric_cross_check() {
        let c = cross_check_surface(&fixtures::quadric(), &QUADRIC_HODGE).unwrap();
        assert_eq!(c.profile, quadric_profile());
        assert_eq!(&c.formula_dims[..5], &[1, 1, 3, 3, 4]);
        assert_eq!(c.formula_dims, c.engine_dims);
        assert!(c.real_part_surface_like);
        assert_eq!(c.brauer.unwrap().value(), 1);
        assert_eq!((c.lefschetz_euler, c.chi_fixed), (0, 0));
    }

    #[test]
    fn trivial_quadric_cross_check() {
        let c = cross_check_surface(&fixtures::quadric_identity(), &QUADRIC_HODGE).unwrap();
        assert_eq!(c.engine_dims, vec![1, 1, 3, 3, 4, 4, 4, 4]);
        assert!(!c.real_part_surface_like);
        assert_eq!(c.brauer, None);
    }

    #[test]
    fn free_or_low_dimensional_models_fail_hypotheses() {
        let e = cross_check_surface(&fixtures::octahedron_antipodal(), &QUADRIC_HODGE).unwrap_err();
        assert_eq!(e.code(), "formula.hypothesis_failed");
        let hyp = surface_hypotheses(&fixtures::hexagon_antipodal()).unwrap();
        assert!(!hyp["fixed_set_nonempty"]);
    }
}
