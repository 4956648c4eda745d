//! Both spectral sequences of the double complex.
//!
//! Kind I filters the total complex by simplicial degree `j`, kind II by
//! column (group degree) `i`. In either case `p` is the filtration level and
//! `q = n − p`, and `d_r` maps `(p, q)` to `(p + r, q − r + 1)`.
//!
//! Pages are computed by a persistence-style reduction of each total
//! differential `D_n`, with basis vectors ordered by decreasing level. A
//! reduced column at level `p_a` whose lowest entry sits at level `p_b` is a
//! pair of length `ℓ = p_b − p_a`: both ends survive to `E_ℓ` and cancel
//! through `d_ℓ`. Unpaired vectors survive to `E_∞`. The textbook
//! approximate-cycle subquotients are also available, as an independent
//! check on small complexes.

use std::collections::BTreeMap;

use super::{DoubleComplex, EngineError};
use crate::gf2::{BitMatrix, BitVec, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiltrationKind {
    /// Filtration by simplicial degree; `E_2^{p,0} = H^p(K/G)`,
    /// `E_2^{p,q} = H^p(K^G)` for `q > 0`.
    I,
    /// Filtration by group degree; `E_2^{p,q} = H^p(G; H^q(K))`.
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PageMethod {
    /// Persistence pairing of the filtered total complex.
    Pairing,
    /// Dense subquotients `Z_r / (Z_{r−1}^{p+1} + D Z_{r−1}^{p−r+1})`.
    Subquotient,
}

/// Entry dimensions and differential ranks of one page.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPage {
    pub kind: FiltrationKind,
    pub r: usize,
    /// `(p, q) → dim E_r^{p,q}` for every position with `p + q ≤ n_max + 1`.
    pub entries: BTreeMap<(usize, usize), usize>,
    /// `(p, q) → rank d_r^{p,q}` for sources with `p + q ≤ n_max`.
    pub differential_ranks: BTreeMap<(usize, usize), usize>,
}

impl SpectralPage {
    pub fn entry(&self, p: usize, q: usize) -> usize {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn differential_rank(&self, p: usize, q: usize) -> usize {
        self.differential_ranks.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Total dimension of the entries with `p + q = n`.
    pub fn degree_total(&self, n: usize) -> usize {
        self.entries
            .iter()
            .filter(|(&(p, q), _)| p + q == n)
            .map(|(_, &d)| d)
            .sum()
    }

    pub fn all_differentials_vanish(&self) -> bool {
        self.differential_ranks.values().all(|&r| r == 0)
    }
}

/// Basis of `Tot^n` ordered by decreasing filtration level.
#[derive(Clone, Debug)]
struct OrderedTotal {
    // (j, k) for each coordinate
    basis: Vec<(usize, usize)>,
    level: Vec<usize>,
    // position[j][k]
    position: Vec<Vec<usize>>,
}

impl OrderedTotal {
    fn new(dc: &DoubleComplex, kind: FiltrationKind, n: usize) -> Self {
        let k = dc.involutive_complex().complex();
        let mut rows: Vec<usize> = (0..dc.rows().min(n + 1))
            .filter(|&j| n - j <= dc.horizontal_window())
            .collect();
        match kind {
            FiltrationKind::I => rows.sort_by(|a, b| b.cmp(a)),
            FiltrationKind::II => rows.sort(),
        }
        let mut basis = Vec::new();
        let mut level = Vec::new();
        let mut position: Vec<Vec<usize>> = vec![Vec::new(); dc.rows()];
        for j in rows {
            let lvl = match kind {
                FiltrationKind::I => j,
                FiltrationKind::II => n - j,
            };
            position[j] = (basis.len()..basis.len() + k.count(j)).collect();
            for s in 0..k.count(j) {
                basis.push((j, s));
                level.push(lvl);
            }
        }
        OrderedTotal {
            basis,
            level,
            position,
        }
    }

    fn len(&self) -> usize {
        self.basis.len()
    }
}

fn level_range(dc: &DoubleComplex, kind: FiltrationKind, n: usize) -> Vec<(usize, usize)> {
    // valid (p, q) with p + q = n
    (0..=n)
        .filter_map(|p| {
            let q = n - p;
            let j = match kind {
                FiltrationKind::I => p,
                FiltrationKind::II => q,
            };
            (j < dc.rows()).then_some((p, q))
        })
        .collect()
}

#[derive(Clone, Debug)]
enum Engine {
    Pairing {
        // ess[n][p]
        ess: Vec<BTreeMap<usize, usize>>,
        // pairs[n]: (level of the source in degree n, level of the low in degree n+1)
        pairs: Vec<Vec<(usize, usize)>>,
    },
    Subquotient {
        totals: Vec<OrderedTotal>,
        // differentials[n] : Tot^n → Tot^{n+1} in the ordered bases
        differentials: Vec<BitMatrix>,
    },
}

/// One spectral sequence of a double complex, from which any page can be read.
#[derive(Clone, Debug)]
pub struct SpectralSequence {
    kind: FiltrationKind,
    n_max: usize,
    rows: usize,
    dc: DoubleComplex,
    engine: Engine,
}

impl SpectralSequence {
    pub fn new(dc: &DoubleComplex, kind: FiltrationKind, method: PageMethod) -> Self {
        let top = dc.n_max() + 1;
        let totals: Vec<OrderedTotal> = (0..=top + 1).map(|n| OrderedTotal::new(dc, kind, n)).collect();
        let engine = match method {
            PageMethod::Pairing => pairing(dc, &totals, top),
            PageMethod::Subquotient => {
                let differentials = (0..=top)
                    .map(|n| ordered_differential(dc, &totals[n], &totals[n + 1], n))
                    .collect();
                Engine::Subquotient {
                    totals,
                    differentials,
                }
            }
        };
        SpectralSequence {
            kind,
            n_max: dc.n_max(),
            rows: dc.rows(),
            dc: dc.clone(),
            engine,
        }
    }

    pub fn kind(&self) -> FiltrationKind {
        self.kind
    }

    /// Page `E_r` for `r ≥ 1`.
    pub fn page(&self, r: usize) -> SpectralPage {
        assert!(r >= 1, "pages start at E_1");
        let mut entries = BTreeMap::new();
        let mut differential_ranks = BTreeMap::new();
        for n in 0..=self.n_max + 1 {
            for (p, q) in level_range(&self.dc, self.kind, n) {
                entries.insert((p, q), self.entry_dim(n, p, Some(r)));
                if n <= self.n_max && q + 1 >= r {
                    differential_ranks.insert((p, q), self.differential_rank(n, p, r));
                }
            }
        }
        SpectralPage {
            kind: self.kind,
            r,
            entries,
            differential_ranks,
        }
    }

    /// `E_∞` entry dimensions.
    pub fn infinity(&self) -> BTreeMap<(usize, usize), usize> {
        let mut entries = BTreeMap::new();
        for n in 0..=self.n_max + 1 {
            for (p, q) in level_range(&self.dc, self.kind, n) {
                entries.insert((p, q), self.entry_dim(n, p, None));
            }
        }
        entries
    }

    /// The page after which nothing changes: differentials have length at
    /// most the spread of filtration levels in a degree.
    fn stable_r(&self) -> usize {
        self.rows.max(self.n_max + 2) + 1
    }

    fn entry_dim(&self, n: usize, p: usize, r: Option<usize>) -> usize {
        match &self.engine {
            Engine::Pairing { ess, pairs } => {
                let e = ess[n].get(&p).copied().unwrap_or(0);
                let Some(r) = r else { return e };
                let out = pairs[n].iter().filter(|&&(a, b)| a == p && b - a >= r).count();
                let inc = if n == 0 {
                    0
                } else {
                    pairs[n - 1].iter().filter(|&&(a, b)| b == p && b - a >= r).count()
                };
                e + out + inc
            }
            Engine::Subquotient { .. } => {
                let r = r.unwrap_or_else(|| self.stable_r()) as i64;
                let z = self.z(n, p as i64, r);
                let den = self.den(n, p as i64, r);
                z.quotient_dim(&den).expect("boundaries lie in the cycles")
            }
        }
    }

    fn differential_rank(&self, n: usize, p: usize, r: usize) -> usize {
        match &self.engine {
            Engine::Pairing { pairs, .. } => pairs[n]
                .iter()
                .filter(|&&(a, b)| a == p && b - a == r)
                .count(),
            Engine::Subquotient { differentials, .. } => {
                let r = r as i64;
                let image = self.z(n, p as i64, r).image_under(&differentials[n]).expect("shapes");
                let den = self.den(n + 1, p as i64 + r, r);
                image.sum(&den).expect("shapes").dim() - den.dim()
            }
        }
    }

    fn sq(&self) -> (&[OrderedTotal], &[BitMatrix]) {
        match &self.engine {
            Engine::Subquotient {
                totals,
                differentials,
            } => (totals, differentials),
            Engine::Pairing { .. } => unreachable!("only used by the subquotient engine"),
        }
    }

    /// `F^p Tot^n`.
    fn filt(&self, n: usize, p: i64) -> Subspace {
        let (totals, _) = self.sq();
        let t = &totals[n];
        Subspace::coordinate(t.len(), (0..t.len()).filter(|&c| t.level[c] as i64 >= p))
    }

    /// `Z_r^p(n) = {x ∈ F^p : D x ∈ F^{p+r}}`; `r < 0` gives `F^p`.
    fn z(&self, n: usize, p: i64, r: i64) -> Subspace {
        if r < 0 {
            return self.filt(n, p);
        }
        let (totals, differentials) = self.sq();
        let (src, dst) = (&totals[n], &totals[n + 1]);
        let cols: Vec<usize> = (0..src.len()).filter(|&c| src.level[c] as i64 >= p).collect();
        let rows: Vec<usize> = (0..dst.len()).filter(|&c| (dst.level[c] as i64) < p + r).collect();
        let ker = differentials[n].submatrix(&rows, &cols).kernel();
        let vectors: Vec<BitVec> = ker
            .basis_vectors()
            .iter()
            .map(|v| BitVec::from_indices(src.len(), v.ones().map(|t| cols[t])))
            .collect();
        Subspace::from_vectors(src.len(), &vectors)
    }

    /// `Z_{r−1}^{p+1}(n) + D Z_{r−1}^{p−r+1}(n−1)`.
    fn den(&self, n: usize, p: i64, r: i64) -> Subspace {
        let mut d = self.z(n, p + 1, r - 1);
        if n > 0 {
            let (_, differentials) = self.sq();
            let b = self
                .z(n - 1, p - r + 1, r - 1)
                .image_under(&differentials[n - 1])
                .expect("shapes");
            d = d.sum(&b).expect("shapes");
        }
        d
    }
}

fn ordered_differential(
    dc: &DoubleComplex,
    src: &OrderedTotal,
    dst: &OrderedTotal,
    n: usize,
) -> BitMatrix {
    let position = |j: usize, k: usize| dst.position[j][k];
    let columns: Vec<BitVec> = src
        .basis
        .iter()
        .map(|&(j, k)| dc.column_in(n, j, k, &position, dst.len()))
        .collect();
    BitMatrix::from_columns(dst.len(), &columns)
}

/// Column reduction of `D_0 … D_top` in increasing degree. Columns that were
/// lows of the previous differential are cleared without reduction: the
/// reduced column they pivot is a cocycle with the same low, so the column
/// reduces to zero.
fn pairing(dc: &DoubleComplex, totals: &[OrderedTotal], top: usize) -> Engine {
    let mut ess = Vec::with_capacity(top + 1);
    let mut pairs = Vec::with_capacity(top + 1);
    let mut cleared = vec![false; totals[0].len()];
    for n in 0..=top {
        let (src, dst) = (&totals[n], &totals[n + 1]);
        let position = |j: usize, k: usize| dst.position[j][k];
        let mut pivot_of_low: Vec<Option<usize>> = vec![None; dst.len()];
        let mut reduced: Vec<BitVec> = Vec::new();
        let mut degree_pairs = Vec::new();
        let mut degree_ess: BTreeMap<usize, usize> = BTreeMap::new();
        for (c, &(j, k)) in src.basis.iter().enumerate() {
            if cleared[c] {
                continue;
            }
            let mut col = dc.column_in(n, j, k, &position, dst.len());
            let mut low = col.last_one();
            while let Some(l) = low {
                match pivot_of_low[l] {
                    Some(idx) => {
                        col.xor_assign(&reduced[idx]);
                        low = col.last_one();
                    }
                    None => break,
                }
            }
            match low {
                Some(l) => {
                    pivot_of_low[l] = Some(reduced.len());
                    reduced.push(col);
                    degree_pairs.push((src.level[c], dst.level[l]));
                }
                None => *degree_ess.entry(src.level[c]).or_insert(0) += 1,
            }
        }
        cleared = pivot_of_low.iter().map(Option::is_some).collect();
        ess.push(degree_ess);
        pairs.push(degree_pairs);
    }
    Engine::Pairing { ess, pairs }
}

/// Default last page: no differential is longer than `dim K + 1`.
pub fn default_r_max(dc: &DoubleComplex) -> usize {
    dc.rows() + 1
}

/// Pages `E_2 … E_{r_max}` by the pairing method.
pub fn spectral_pages(
    dc: &DoubleComplex,
    kind: FiltrationKind,
    r_max: usize,
) -> Result<Vec<SpectralPage>, EngineError> {
    spectral_pages_with(dc, kind, r_max, PageMethod::Pairing)
}

/// Pages `E_2 … E_{r_max}` by the chosen method.
pub fn spectral_pages_with(
    dc: &DoubleComplex,
    kind: FiltrationKind,
    r_max: usize,
    method: PageMethod,
) -> Result<Vec<SpectralPage>, EngineError> {
    let ss = SpectralSequence::new(dc, kind, method);
    Ok((2..=r_max).map(|r| ss.page(r)).collect())
}
