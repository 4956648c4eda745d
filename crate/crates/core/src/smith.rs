//! The homological Smith exact sequence of an involution, mod 2.
//!
//! Chains split as `0 → C(K/G, K^G) ⊕ C(K^G) → C(K) → C(K/G, K^G) → 0`:
//! the first map sends an orbit `[σ]` to `σ + gσ` and includes fixed chains,
//! the second sends `x` to `(1 + g)x` read on orbits. The long exact
//! sequence in homology is
//!
//! ```text
//!                             i        ρ              δ
//! … → H_n(K/G,K^G) ⊕ H_n(K^G) → H_n(K) → H_n(K/G,K^G) → H_{n−1}(K/G,K^G) ⊕ H_{n−1}(K^G) → …
//! ```
//!
//! Every map is a matrix in the canonical homology bases; the fixed part of
//! a direct sum always comes after the relative part.

use thiserror::Error;

use crate::gf2::{BitMatrix, BitVec, Subspace};
use crate::simplicial::{
    fixed_subcomplex, induced_homology_map_with, lefschetz_number, mod2_betti, mod2_homology,
    mod2_homology_pair, quotient_complex, quotient_pair, rational_homology_trace, regularize,
    ComplexError, Homology, InvolutiveComplex, SimplicialComplex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmithError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl SmithError {
    pub fn code(&self) -> &'static str {
        match self {
            SmithError::Complex(e) => e.code(),
            SmithError::Invariant(_) => "smith.invariant_violation",
        }
    }
}

impl From<crate::gf2::LinalgError> for SmithError {
    fn from(e: crate::gf2::LinalgError) -> Self {
        SmithError::Complex(e.into())
    }
}

/// Which member of an orbit `{σ, gσ}` lifts the orbit in the connecting map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftChoice {
    Lower,
    Upper,
}

/// Spaces and maps of the sequence around degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDegree {
    pub n: usize,
    /// `dim H_n(K/G, K^G)`.
    pub dim_relative: usize,
    /// `dim H_n(K^G)`.
    pub dim_fixed: usize,
    /// `dim H_n(K)`.
    pub dim_total: usize,
    /// `i_n : H_n(K/G,K^G) ⊕ H_n(K^G) → H_n(K)`.
    pub i: BitMatrix,
    /// `ρ_n : H_n(K) → H_n(K/G,K^G)`.
    pub rho: BitMatrix,
    /// `δ_n : H_n(K/G,K^G) → H_{n−1}(K/G,K^G) ⊕ H_{n−1}(K^G)`.
    pub delta: BitMatrix,
    /// `g_*` on `H_n(K)`.
    pub g_star: BitMatrix,
    /// Connecting map of the pair, `H_n(K/G,K^G) → H_{n−1}(K^G)`.
    pub pair_boundary: BitMatrix,
    /// `j_n : H_n(K/G) → H_n(K/G,K^G)`.
    pub j: BitMatrix,
}

#[derive(Clone, Debug)]
pub struct SmithSequence {
    pub degrees: Vec<SmithDegree>,
    /// `δ` recomputed with the other lift, degree by degree.
    pub delta_other_lift: Vec<BitMatrix>,
}

/// Index bookkeeping between `K`, `K/G` and `K^G` in one degree.
struct DegreeMaps {
    k_count: usize,
    // relative coordinate → (lower member, upper member) in K
    members: Vec<(usize, usize)>,
    // K simplex → relative coordinate, for non-fixed simplices
    k_to_rel: Vec<Option<usize>>,
    // fixed-complex simplex → K simplex
    fixed_to_k: Vec<usize>,
    // quotient simplex → fixed-complex simplex, for simplices of K^G
    q_to_fixed: Vec<Option<usize>>,
    // relative coordinate → quotient simplex
    rel_to_q: Vec<usize>,
}

struct Parts {
    k: SimplicialComplex,
    quotient: SimplicialComplex,
    h_k: Homology,
    h_fixed: Homology,
    h_rel: Homology,
    h_quotient: Homology,
    maps: Vec<DegreeMaps>,
}

fn concat(a: &BitVec, b: &BitVec) -> BitVec {
    BitVec::from_indices(a.len() + b.len(), a.ones().chain(b.ones().map(|i| i + a.len())))
}

fn coords(h: &Homology, n: usize, v: &BitVec, what: &str) -> Result<BitVec, SmithError> {
    h.group(n)
        .coordinates(v)
        .ok_or_else(|| SmithError::Invariant(format!("{what} in degree {n} is not a cycle")))
}

impl Parts {
    fn new(ic: &InvolutiveComplex) -> Result<Self, SmithError> {
        let k = ic.complex().clone();
        let (fixed, embedding) = fixed_subcomplex(ic)?;
        let (quotient, projection) = quotient_complex(ic)?;
        let pair = quotient_pair(ic)?;
        let h_k = mod2_homology(&k);
        let h_fixed = mod2_homology(&fixed);
        let h_rel = mod2_homology_pair(&pair);
        let h_quotient = mod2_homology(&quotient);
        let mut maps = Vec::new();
        for n in 0..=k.levels() {
            let rel_cells = h_rel.cells(n);
            let mut q_to_rel = vec![None; quotient.count(n)];
            for (c, &qi) in rel_cells.iter().enumerate() {
                q_to_rel[qi] = Some(c);
            }
            let mut members = vec![(usize::MAX, usize::MAX); rel_cells.len()];
            let mut k_to_rel = vec![None; k.count(n)];
            for (s, simplex) in k.simplices(n).iter().enumerate() {
                if ic.is_pointwise_fixed(simplex) {
                    continue;
                }
                let qi = quotient.index_of(&projection.image(simplex)).ok_or_else(|| {
                    SmithError::Invariant(format!("orbit of {simplex:?} is not a quotient simplex"))
                })?;
                let c = q_to_rel[qi].ok_or_else(|| {
                    SmithError::Invariant(format!("orbit of {simplex:?} lies in the fixed part"))
                })?;
                k_to_rel[s] = Some(c);
                let gs = ic.simplex_image(n, s);
                members[c] = (s.min(gs), s.max(gs));
            }
            let fixed_to_k: Vec<usize> = fixed
                .simplices(n)
                .iter()
                .map(|f| k.index_of(&embedding.image(f)).expect("fixed simplex of K"))
                .collect();
            let mut q_to_fixed = vec![None; quotient.count(n)];
            for (fi, f) in fixed.simplices(n).iter().enumerate() {
                let qi = quotient
                    .index_of(&pair.embedding.image(f))
                    .expect("fixed simplex of K/G");
                q_to_fixed[qi] = Some(fi);
            }
            maps.push(DegreeMaps {
                k_count: k.count(n),
                members,
                k_to_rel,
                fixed_to_k,
                q_to_fixed,
                rel_to_q: rel_cells.to_vec(),
            });
        }
        Ok(Parts {
            k,
            quotient,
            h_k,
            h_fixed,
            h_rel,
            h_quotient,
            maps,
        })
    }

    /// Chain-level inclusion of invariant chains: `[σ] ↦ σ + gσ`, fixed chains as is.
    fn iota(&self, n: usize, y: &BitVec, f: &BitVec) -> BitVec {
        let m = &self.maps[n];
        let mut x = BitVec::zeros(m.k_count);
        for c in y.ones() {
            let (a, b) = m.members[c];
            x.flip(a);
            x.flip(b);
        }
        for fi in f.ones() {
            x.flip(m.fixed_to_k[fi]);
        }
        x
    }

    /// `x ↦ (1 + g)x` read on orbits.
    fn pi(&self, n: usize, x: &BitVec) -> BitVec {
        let m = &self.maps[n];
        let mut y = BitVec::zeros(m.members.len());
        for s in x.ones() {
            if let Some(c) = m.k_to_rel[s] {
                y.flip(c);
            }
        }
        y
    }

    /// Connecting map at chain level: lift, take the boundary, split into
    /// relative and fixed parts.
    fn delta_chain(
        &self,
        n: usize,
        y: &BitVec,
        lift: LiftChoice,
    ) -> Result<(BitVec, BitVec), SmithError> {
        let m = &self.maps[n];
        let below = &self.maps[n - 1];
        let mut x = BitVec::zeros(m.k_count);
        for c in y.ones() {
            let (a, b) = m.members[c];
            x.flip(match lift {
                LiftChoice::Lower => a,
                LiftChoice::Upper => b,
            });
        }
        let bx = self.k.boundary(n).apply(&x);
        let mut rel = BitVec::zeros(below.members.len());
        for (c, &(a, b)) in below.members.iter().enumerate() {
            if bx.get(a) != bx.get(b) {
                return Err(SmithError::Invariant(format!(
                    "boundary of a lift is not invariant in degree {}",
                    n - 1
                )));
            }
            if bx.get(a) {
                rel.set(c, true);
            }
        }
        let fixed = BitVec::from_bools(
            &below.fixed_to_k.iter().map(|&s| bx.get(s)).collect::<Vec<_>>(),
        );
        Ok((rel, fixed))
    }

    fn delta_matrix(&self, n: usize, lift: LiftChoice) -> Result<BitMatrix, SmithError> {
        let rows = if n == 0 {
            0
        } else {
            self.h_rel.dim(n - 1) + self.h_fixed.dim(n - 1)
        };
        let mut columns = Vec::new();
        for y in self.h_rel.representatives(n) {
            if n == 0 {
                columns.push(BitVec::zeros(0));
                continue;
            }
            let (r, f) = self.delta_chain(n, &y, lift)?;
            let a = coords(&self.h_rel, n - 1, &r, "relative part of δ")?;
            let b = coords(&self.h_fixed, n - 1, &f, "fixed part of δ")?;
            columns.push(concat(&a, &b));
        }
        Ok(BitMatrix::from_columns(rows, &columns))
    }

    fn pair_boundary(&self, n: usize) -> Result<BitMatrix, SmithError> {
        let rows = if n == 0 { 0 } else { self.h_fixed.dim(n - 1) };
        let mut columns = Vec::new();
        for y in self.h_rel.representatives(n) {
            if n == 0 {
                columns.push(BitVec::zeros(0));
                continue;
            }
            let m = &self.maps[n];
            let below = &self.maps[n - 1];
            let chain = BitVec::from_indices(self.quotient.count(n), y.ones().map(|c| m.rel_to_q[c]));
            let b = self.quotient.boundary(n).apply(&chain);
            let f = BitVec::from_indices(
                below.fixed_to_k.len(),
                b.ones().filter_map(|qi| below.q_to_fixed[qi]),
            );
            columns.push(coords(&self.h_fixed, n - 1, &f, "pair boundary")?);
        }
        Ok(BitMatrix::from_columns(rows, &columns))
    }
}

pub fn build_smith_sequence(ic: &InvolutiveComplex) -> Result<SmithSequence, SmithError> {
    build_smith_sequence_with(ic, LiftChoice::Lower)
}

/// Builds the sequence using the given lift for `δ`; the other lift is also
/// computed and kept for comparison.
pub fn build_smith_sequence_with(
    ic: &InvolutiveComplex,
    lift: LiftChoice,
) -> Result<SmithSequence, SmithError> {
    let parts = Parts::new(ic)?;
    let other = match lift {
        LiftChoice::Lower => LiftChoice::Upper,
        LiftChoice::Upper => LiftChoice::Lower,
    };
    let g = ic.as_map();
    let mut degrees = Vec::new();
    let mut delta_other_lift = Vec::new();
    for n in 0..=parts.k.levels() {
        let (dr, df, dk) = (parts.h_rel.dim(n), parts.h_fixed.dim(n), parts.h_k.dim(n));
        let rel_reps = parts.h_rel.representatives(n);
        let fixed_reps = parts.h_fixed.representatives(n);
        let mut i_cols = Vec::with_capacity(dr + df);
        for y in &rel_reps {
            let zero = BitVec::zeros(parts.maps[n].fixed_to_k.len());
            i_cols.push(coords(&parts.h_k, n, &parts.iota(n, y, &zero), "transfer")?);
        }
        for f in &fixed_reps {
            let zero = BitVec::zeros(parts.maps[n].members.len());
            i_cols.push(coords(&parts.h_k, n, &parts.iota(n, &zero, f), "fixed inclusion")?);
        }
        let mut rho_cols = Vec::with_capacity(dk);
        for x in parts.h_k.representatives(n) {
            rho_cols.push(coords(&parts.h_rel, n, &parts.pi(n, &x), "orbit projection")?);
        }
        let mut j_cols = Vec::new();
        for z in parts.h_quotient.representatives(n) {
            let m = &parts.maps[n];
            let y = BitVec::from_bools(&m.rel_to_q.iter().map(|&qi| z.get(qi)).collect::<Vec<_>>());
            j_cols.push(coords(&parts.h_rel, n, &y, "relative class")?);
        }
        let g_star = if n < parts.k.levels() {
            induced_homology_map_with(&g, &parts.k, &parts.k, &parts.h_k, &parts.h_k, n)?
        } else {
            BitMatrix::zeros(0, 0)
        };
        degrees.push(SmithDegree {
            n,
            dim_relative: dr,
            dim_fixed: df,
            dim_total: dk,
            i: BitMatrix::from_columns(dk, &i_cols),
            rho: BitMatrix::from_columns(dr, &rho_cols),
            delta: parts.delta_matrix(n, lift)?,
            g_star,
            pair_boundary: parts.pair_boundary(n)?,
            j: BitMatrix::from_columns(dr, &j_cols),
        });
        delta_other_lift.push(parts.delta_matrix(n, other)?);
    }
    Ok(SmithSequence {
        degrees,
        delta_other_lift,
    })
}

impl SmithSequence {
    fn degree(&self, n: usize) -> Option<&SmithDegree> {
        self.degrees.get(n)
    }

    /// Nodes where exactness fails, as readable descriptions; empty when the
    /// sequence is exact everywhere.
    pub fn exactness_defects(&self) -> Vec<String> {
        let mut out = Vec::new();
        for d in &self.degrees {
            let n = d.n;
            // at H_n(K): ρ∘i = 0 and rank i + rank ρ = dim
            if !d.rho.mul(&d.i).is_zero() || d.i.rank() + d.rho.rank() != d.dim_total {
                out.push(format!("H_{n}(K)"));
            }
            // at H_n(K/G,K^G): δ∘ρ = 0 and rank ρ + rank δ = dim
            if !d.delta.mul(&d.rho).is_zero() || d.rho.rank() + d.delta.rank() != d.dim_relative {
                out.push(format!("H_{n}(K/G,K^G)"));
            }
            // at H_n(K/G,K^G) ⊕ H_n(K^G): i∘δ_{n+1} = 0 and rank δ_{n+1} + rank i = dim
            let incoming = self.degree(n + 1).map(|u| &u.delta);
            let ok = match incoming {
                Some(delta) => {
                    d.i.mul(delta).is_zero()
                        && delta.rank() + d.i.rank() == d.dim_relative + d.dim_fixed
                }
                None => d.i.rank() == d.dim_relative + d.dim_fixed,
            };
            if !ok {
                out.push(format!("H_{n}(K/G,K^G) ⊕ H_{n}(K^G)"));
            }
        }
        out
    }

    pub fn is_exact(&self) -> bool {
        self.exactness_defects().is_empty()
    }

    /// `i_n(ρ_n ⊕ 0) = 1 + g_*` in every degree, entrywise.
    pub fn transfer_identity_holds(&self) -> bool {
        self.degrees.iter().all(|d| {
            let rel_cols: Vec<usize> = (0..d.dim_relative).collect();
            let all_rows: Vec<usize> = (0..d.dim_total).collect();
            let i_rel = d.i.submatrix(&all_rows, &rel_cols);
            let lhs = i_rel.mul(&d.rho);
            let rhs = d.g_star.add(&BitMatrix::identity(d.dim_total));
            lhs == rhs
        })
    }

    /// The fixed component of `δ_n` equals the connecting map of the pair.
    pub fn connecting_identity_holds(&self) -> bool {
        self.degrees.iter().all(|d| {
            if d.n == 0 {
                return true;
            }
            let below = &self.degrees[d.n - 1];
            let rows: Vec<usize> =
                (below.dim_relative..below.dim_relative + below.dim_fixed).collect();
            let cols: Vec<usize> = (0..d.dim_relative).collect();
            d.delta.submatrix(&rows, &cols) == d.pair_boundary
        })
    }

    /// The two lifts give the same connecting maps.
    pub fn lift_independent(&self) -> bool {
        self.degrees
            .iter()
            .zip(&self.delta_other_lift)
            .all(|(d, other)| d.delta == *other)
    }

    pub fn total_betti(&self) -> usize {
        self.degrees.iter().map(|d| d.dim_total).sum()
    }

    pub fn fixed_betti(&self) -> usize {
        self.degrees.iter().map(|d| d.dim_fixed).sum()
    }

    /// `dim H_*(K^G) = 2 Σ dim Im i_n − dim H_*(K)`.
    pub fn betti_bookkeeping_holds(&self) -> bool {
        let im: usize = self.degrees.iter().map(|d| d.i.rank()).sum();
        self.fixed_betti() + self.total_betti() == 2 * im
    }
}

/// Saturation data for one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationDegree {
    pub n: usize,
    /// `dim Im i_n`.
    pub image_i: usize,
    /// `dim H_n(K; F₂)^G`.
    pub invariant_dim: usize,
    /// Rank of `H_{n+1}(K/G) → H_{n+1}(K/G,K^G) → H_n(K/G,K^G)`.
    pub composite_image: usize,
    /// Dimension of that image intersected with `ker δ_n`.
    pub composite_in_kernel: usize,
    /// `Im i_n = H_n(K)^G`.
    pub saturated: bool,
    /// `ρ_n(H_n(K)^G)` equals the image of the composite, as subspaces.
    pub images_agree: bool,
}

pub fn image_criterion(sm: &SmithSequence) -> Vec<SaturationDegree> {
    let mut out = Vec::new();
    for d in &sm.degrees {
        let invariants = d.g_star.add(&BitMatrix::identity(d.dim_total)).kernel();
        let invariant_dim = invariants.dim();
        let image_i = d.i.rank();
        let composite = match sm.degrees.get(d.n + 1) {
            Some(up) => {
                let rows: Vec<usize> = (0..d.dim_relative).collect();
                let cols: Vec<usize> = (0..up.dim_relative).collect();
                up.delta.submatrix(&rows, &cols).mul(&up.j)
            }
            None => BitMatrix::zeros(d.dim_relative, 0),
        };
        let rho_invariants = invariants.image_under(&d.rho).expect("shapes");
        let composite_space = composite.image();
        // the composite can leave ker δ_n (free antipodal sphere, n = 1);
        // only the part inside it is hit by invariant classes
        let in_kernel = composite_space.intersect(&d.delta.kernel()).expect("shapes");
        let images_agree = rho_invariants == in_kernel;
        out.push(SaturationDegree {
            n: d.n,
            image_i,
            invariant_dim,
            composite_image: composite_space.dim(),
            composite_in_kernel: in_kernel.dim(),
            saturated: image_i == invariant_dim,
            images_agree,
        });
    }
    out
}

/// Harnack–Thom: `dim H_*(K^G) ≤ 2 dim H_*(K)^G − dim H_*(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnackThom {
    pub lhs: usize,
    pub rhs: usize,
    pub slack: usize,
}

pub fn harnack_thom(ic: &InvolutiveComplex) -> Result<HarnackThom, SmithError> {
    let (fixed, _) = fixed_subcomplex(ic)?;
    let lhs: usize = mod2_betti(&fixed).iter().sum();
    let k = ic.complex();
    let g = ic.as_map();
    let h = mod2_homology(k);
    let mut invariant = 0;
    let mut total = 0;
    for n in 0..k.levels() {
        let gs = induced_homology_map_with(&g, k, k, &h, &h, n)?;
        invariant += gs.add(&BitMatrix::identity(gs.rows())).kernel().dim();
        total += gs.rows();
    }
    let rhs = 2 * invariant - total;
    if lhs > rhs {
        return Err(SmithError::Invariant(format!(
            "Harnack–Thom inequality fails: {lhs} > {rhs}"
        )));
    }
    Ok(HarnackThom {
        lhs,
        rhs,
        slack: rhs - lhs,
    })
}

/// Lefschetz number of `g` against the Euler characteristic of the fixed part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzCheck {
    pub lefschetz_number: i64,
    pub chi_fixed: i64,
    pub consistent: bool,
    /// `2 + 2 (b_2)_+ − b_2`, for 4-dimensional models with `b_1 = 0`.
    pub surface_form: Option<i64>,
}

pub fn lefschetz_check(ic: &InvolutiveComplex) -> Result<LefschetzCheck, SmithError> {
    // the fixed point set is the pointwise-fixed subcomplex only for regular actions
    let (ic, _) = regularize(ic);
    let lefschetz = lefschetz_number(&ic);
    let (fixed, _) = fixed_subcomplex(&ic)?;
    let chi_fixed = fixed.euler_characteristic();
    let surface_form = if ic.complex().dimension() == Some(4) && rational_homology_trace(&ic, 1).0 == 0 {
        let (b2, t2) = rational_homology_trace(&ic, 2);
        let b2_plus = (b2 as i64 + t2) / 2;
        Some(2 + 2 * b2_plus - b2 as i64)
    } else {
        None
    };
    Ok(LefschetzCheck {
        lefschetz_number: lefschetz,
        chi_fixed,
        consistent: lefschetz == chi_fixed,
        surface_form,
    })
}

/// Everything the Smith machinery says about one involutive complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithReport {
    pub saturation: Vec<SaturationDegree>,
    pub harnack_lhs: usize,
    pub harnack_rhs: usize,
    pub lefschetz_number: i64,
    pub chi_fixed: i64,
    pub exact: bool,
    pub transfer_identity: bool,
    pub connecting_identity: bool,
    pub betti_bookkeeping: bool,
    pub lift_independent: bool,
}

impl SmithReport {
    pub fn saturated_everywhere(&self) -> bool {
        self.saturation.iter().all(|s| s.saturated)
    }
}

pub fn smith_report(ic: &InvolutiveComplex) -> Result<SmithReport, SmithError> {
    let sm = build_smith_sequence(ic)?;
    let ht = harnack_thom(ic)?;
    let lf = lefschetz_check(ic)?;
    Ok(SmithReport {
        saturation: image_criterion(&sm),
        harnack_lhs: ht.lhs,
        harnack_rhs: ht.rhs,
        lefschetz_number: lf.lefschetz_number,
        chi_fixed: lf.chi_fixed,
        exact: sm.is_exact(),
        transfer_identity: sm.transfer_identity_holds(),
        connecting_identity: sm.connecting_identity_holds(),
        betti_bookkeeping: sm.betti_bookkeeping_holds(),
        lift_independent: sm.lift_independent(),
    })
}

/// `Im i_n ⊆ H_n(K)^G`, as subspaces of `H_n(K)`.
pub fn image_is_invariant(d: &SmithDegree) -> bool {
    let invariants = d.g_star.add(&BitMatrix::identity(d.dim_total)).kernel();
    let image: Subspace = d.i.image();
    invariants.contains(&image).unwrap_or(false)
}
