use super::pages::{FiltrationKind, PageMethod, SpectralSequence};
use super::{build_double_complex, group_cohomology_dims, EngineError};
use crate::simplicial::{
    fixed_subcomplex, induced_map_mod2, induced_map_with, mod2_betti, mod2_cohomology, quotient_pair,
    InvolutiveComplex,
};

/// Degeneration test for spectral sequence II.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrasnovReport {
    /// `lhs == rhs`.
    pub degenerate: bool,
    /// Total mod-2 Betti number of the fixed subcomplex.
    pub lhs: usize,
    /// `Σ_q dim H^1(G; H^q(K; F₂))`.
    pub rhs: usize,
    /// Every differential `d_r`, `r ≥ 2`, of spectral sequence II has rank 0
    /// over a window that covers all of them up to periodicity.
    pub ii_differentials_vanish: bool,
}

pub fn krasnov_test(ic: &InvolutiveComplex) -> Result<KrasnovReport, EngineError> {
    let (fixed, _) = fixed_subcomplex(ic)?;
    let lhs: usize = mod2_betti(&fixed).iter().sum();
    let k = ic.complex();
    let g = ic.as_map();
    let h = mod2_cohomology(k);
    let mut rhs = 0;
    for q in 0..k.levels() {
        let gstar = induced_map_with(&g, k, k, &h, &h, q)?;
        rhs += group_cohomology_dims(&gstar)?.1;
    }
    // differentials have length ≤ dim K + 1 and, from column dim K + 1 on,
    // repeat with the columns; sources up to degree 2·dim K + 1 cover them all
    let dim = k.dimension().unwrap_or(0);
    let dc = build_double_complex(ic, 2 * dim + 1)?;
    let ss = SpectralSequence::new(&dc, FiltrationKind::II, PageMethod::Pairing);
    let ii_differentials_vanish =
        (2..=dc.rows() + 1).all(|r| ss.page(r).all_differentials_vanish());
    Ok(KrasnovReport {
        degenerate: lhs == rhs,
        lhs,
        rhs,
        ii_differentials_vanish,
    })
}

/// Image of `I_∞^{0,n} ⊂ H^0(K^G)`, the topological form of the map that
/// evaluates classes on the components of the real part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentMap {
    pub image_dim: usize,
    pub s: usize,
    pub surjective: bool,
}

fn components_of_fixed(ic: &InvolutiveComplex) -> Result<usize, EngineError> {
    let (fixed, _) = fixed_subcomplex(ic)?;
    match fixed.dimension() {
        None => Err(EngineError::EmptyFixedSet),
        Some(_) => Ok(mod2_cohomology(&fixed).dim(0)),
    }
}

pub fn component_map_rank(ic: &InvolutiveComplex, n: usize) -> Result<ComponentMap, EngineError> {
    let s = components_of_fixed(ic)?;
    let dc = build_double_complex(ic, n)?;
    let ss = SpectralSequence::new(&dc, FiltrationKind::I, PageMethod::Pairing);
    let image_dim = ss.infinity().get(&(0, n)).copied().unwrap_or(0);
    Ok(ComponentMap {
        image_dim,
        s,
        surjective: image_dim == s,
    })
}

/// Obstruction to surjectivity of the degree-2 component map, read off
/// spectral sequence I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub s: usize,
    /// `dim H^3(K/G; F₂)`.
    pub h3_quotient: usize,
    /// `dim ker(i*: H^3(K/G) → H^3(K^G))`.
    pub dim_ker_istar: usize,
    /// `rank d_2^{1,1}: H^1(K^G) → H^3(K/G)`.
    pub dim_im_d2_11: usize,
    /// `dim ker d_3^{0,2}` on `E_3^{0,2}`, equal to `dim I_∞^{0,2}`.
    pub dim_ker_d3_02: usize,
    pub surjective: bool,
}

pub fn brauer_obstruction(ic: &InvolutiveComplex) -> Result<ObstructionReport, EngineError> {
    let s = components_of_fixed(ic)?;
    let pair = quotient_pair(ic)?;
    let h3_quotient = mod2_cohomology(&pair.total).dim(3);
    let istar = induced_map_mod2(&pair.embedding, &pair.sub, &pair.total, 3)?;
    let dim_ker_istar = h3_quotient - istar.rank();

    let dc = build_double_complex(ic, 3)?;
    let ss = SpectralSequence::new(&dc, FiltrationKind::I, PageMethod::Pairing);
    let dim_im_d2_11 = ss.page(2).differential_rank(1, 1);
    let e3 = ss.page(3);
    let dim_ker_d3_02 = e3.entry(0, 2) - e3.differential_rank(0, 2);
    let image_dim = ss.infinity().get(&(0, 2)).copied().unwrap_or(0);
    debug_assert_eq!(image_dim, dim_ker_d3_02);
    Ok(ObstructionReport {
        s,
        h3_quotient,
        dim_ker_istar,
        dim_im_d2_11,
        dim_ker_d3_02,
        surjective: image_dim == s,
    })
}
