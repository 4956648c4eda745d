//! Equivariant mod-2 cohomology of an involutive complex.
//!
//! The double complex has the cochains `C^j(K; F₂)` in every column `i ≥ 0`,
//! horizontal maps `1 + g` and vertical coboundaries. Its total cohomology is
//! `H^n(K; G, F₂)`. Over F₂ all columns from the first on are identical, so a
//! finite window of columns computes every degree up to a cap exactly.

mod obstruction;
mod pages;

pub use obstruction::{
    brauer_obstruction, component_map_rank, krasnov_test, ComponentMap, KrasnovReport,
    ObstructionReport,
};
pub use pages::{
    default_r_max, spectral_pages, spectral_pages_with, FiltrationKind, PageMethod, SpectralPage,
    SpectralSequence,
};

use thiserror::Error;

use crate::gf2::{BitMatrix, BitVec};
use crate::simplicial::{ComplexError, InvolutiveComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("degree {requested} needs a horizontal window of {needed}, but only {available} was built")]
    WindowTooSmall {
        requested: usize,
        needed: usize,
        available: usize,
    },
    #[error("matrix is not an involution")]
    NotAnInvolution,
    #[error("the fixed subcomplex is empty")]
    EmptyFixedSet,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl EngineError {
    pub fn code(&self) -> &'static str {
        match self {
            EngineError::WindowTooSmall { .. } => "engine.window_too_small",
            EngineError::NotAnInvolution => "engine.not_an_involution",
            EngineError::EmptyFixedSet => "engine.empty_fixed_set",
            EngineError::Complex(e) => e.code(),
        }
    }
}

/// The periodic double complex truncated to columns `0..=window`.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    ic: InvolutiveComplex,
    n_max: usize,
    window: usize,
    // cofaces[j][k]: (j+1)-simplices having the k-th j-simplex as a face
    cofaces: Vec<Vec<Vec<usize>>>,
}

/// Builds the double complex for total degrees up to `n_max`, with
/// horizontal window `n_max + 2`.
pub fn build_double_complex(
    ic: &InvolutiveComplex,
    n_max: usize,
) -> Result<DoubleComplex, EngineError> {
    ic.require_regular()?;
    let k = ic.complex();
    let mut cofaces: Vec<Vec<Vec<usize>>> = (0..k.levels())
        .map(|q| vec![Vec::new(); k.count(q)])
        .collect();
    for q in 1..k.levels() {
        for s in 0..k.count(q) {
            for f in k.face_indices(q, s) {
                cofaces[q - 1][f].push(s);
            }
        }
    }
    Ok(DoubleComplex {
        ic: ic.clone(),
        n_max,
        window: n_max + 2,
        cofaces,
    })
}

impl DoubleComplex {
    pub fn involutive_complex(&self) -> &InvolutiveComplex {
        &self.ic
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn horizontal_window(&self) -> usize {
        self.window
    }

    /// Number of simplicial degrees (rows), `dim K + 1`.
    pub fn rows(&self) -> usize {
        self.ic.complex().levels()
    }

    /// Dimension of the cell `(i, j)`; zero outside the window.
    pub fn cell_dim(&self, i: usize, j: usize) -> usize {
        if i > self.window {
            0
        } else {
            self.ic.complex().count(j)
        }
    }

    /// Horizontal map out of any column in row `j`.
    pub fn horizontal(&self, j: usize) -> BitMatrix {
        self.ic.one_plus_g(j)
    }

    /// Vertical map `d^j` out of row `j` in any column.
    pub fn vertical(&self, j: usize) -> BitMatrix {
        self.ic.complex().coboundary(j)
    }

    pub(crate) fn cofaces(&self, j: usize, k: usize) -> &[usize] {
        &self.cofaces[j][k]
    }

    fn check_degree(&self, n: usize) -> Result<(), EngineError> {
        if n + 2 > self.window {
            return Err(EngineError::WindowTooSmall {
                requested: n,
                needed: n + 2,
                available: self.window,
            });
        }
        Ok(())
    }

    /// `dim Tot^n`.
    pub fn total_dim(&self, n: usize) -> usize {
        (0..self.rows().min(n + 1))
            .map(|j| self.cell_dim(n - j, j))
            .sum()
    }

    /// The total differential `D_n : Tot^n → Tot^{n+1}` with blocks ordered
    /// by increasing `j` (column index `i = n − j`).
    pub fn total_differential(&self, n: usize) -> BitMatrix {
        let src = self.block_offsets(n);
        let dst = self.block_offsets(n + 1);
        let len = self.total_dim(n + 1);
        let position = |j: usize, k: usize| dst[j].expect("target block inside the window") + k;
        let mut columns = Vec::with_capacity(self.total_dim(n));
        for (j, off) in src.iter().enumerate() {
            if off.is_some() {
                for k in 0..self.ic.complex().count(j) {
                    columns.push(self.column_in(n, j, k, &position, len));
                }
            }
        }
        BitMatrix::from_columns(len, &columns)
    }

    /// Offsets of row blocks `(n − j, j)` inside `Tot^n`, by `j`.
    fn block_offsets(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = Vec::with_capacity(self.rows());
        let mut acc = 0;
        for j in 0..self.rows() {
            if j <= n && n - j <= self.window {
                out.push(Some(acc));
                acc += self.ic.complex().count(j);
            } else {
                out.push(None);
            }
        }
        out
    }

    /// The image `D(e)` for a basis vector in the given order of `Tot^{n+1}`:
    /// `position[j]` maps a simplex index of row `j` to its coordinate.
    pub(crate) fn column_in(
        &self,
        n: usize,
        j: usize,
        k: usize,
        target_position: &dyn Fn(usize, usize) -> usize,
        len: usize,
    ) -> BitVec {
        let mut v = BitVec::zeros(len);
        let i = n - j;
        if i < self.window {
            let gk = self.ic.simplex_image(j, k);
            if gk != k {
                v.flip(target_position(j, k));
                v.flip(target_position(j, gk));
            }
        }
        if j + 1 < self.rows() {
            for &c in self.cofaces(j, k) {
                v.flip(target_position(j + 1, c));
            }
        }
        v
    }
}

/// `dim H^n(K; G, F₂)` for `n = 0..=up_to`.
pub fn total_equivariant_dims(
    dc: &DoubleComplex,
    up_to: usize,
) -> Result<Vec<usize>, EngineError> {
    dc.check_degree(up_to)?;
    let ranks: Vec<usize> = (0..=up_to).map(|n| dc.total_differential(n).rank()).collect();
    Ok((0..=up_to)
        .map(|n| dc.total_dim(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect())
}

/// Group cohomology of `Z/2` acting on F₂^k through `g`: `(h0, hp)` with
/// `h0 = dim ker(1 + g)` and `hp = h0 − rank(1 + g)` for every `p ≥ 1`.
pub fn group_cohomology_dims(g: &BitMatrix) -> Result<(usize, usize), EngineError> {
    if g.rows() != g.cols() || !g.mul(g).is_identity() {
        return Err(EngineError::NotAnInvolution);
    }
    let h = g.add(&BitMatrix::identity(g.rows()));
    let rank = h.rank();
    let h0 = g.rows() - rank;
    Ok((h0, h0 - rank))
}
