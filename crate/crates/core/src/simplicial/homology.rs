use std::borrow::Cow;

use super::complex::{ComplexPair, SimplicialComplex, SimplicialMap};
use super::ComplexError;
use crate::gf2::{BitMatrix, BitVec, Subquotient, Subspace};

/// Mod-2 (co)homology groups in every degree, as canonical subquotients of
/// the (relative) chain spaces.
///
/// For a pair, chains live on the simplices outside the subcomplex; `cells`
/// records which simplex each coordinate stands for.
#[derive(Clone, Debug)]
pub struct Homology {
    groups: Vec<Subquotient>,
    cells: Vec<Vec<usize>>,
}

impl Homology {
    pub fn dims(&self) -> Vec<usize> {
        self.groups.iter().map(Subquotient::dim).collect()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.groups.get(n).map_or(0, Subquotient::dim)
    }

    pub fn total_dim(&self) -> usize {
        self.groups.iter().map(Subquotient::dim).sum()
    }

    /// Degree-`n` group; degrees past the top are the zero group.
    pub fn group(&self, n: usize) -> Cow<'_, Subquotient> {
        match self.groups.get(n) {
            Some(g) => Cow::Borrowed(g),
            None => Cow::Owned(
                Subquotient::new(Subspace::zero(0), Subspace::zero(0)).expect("zero in zero"),
            ),
        }
    }

    /// Simplex index (within its dimension) of each chain coordinate in degree `n`.
    pub fn cells(&self, n: usize) -> &[usize] {
        self.cells.get(n).map_or(&[], |v| v.as_slice())
    }

    /// Cocycle (or cycle) basis representatives in degree `n`.
    pub fn representatives(&self, n: usize) -> Vec<BitVec> {
        self.groups.get(n).map_or_else(Vec::new, Subquotient::representatives)
    }
}

/// Assembles `ker(out_n) / im(in_n)` from per-degree differentials.
/// `outgoing[n]` leaves degree n; `incoming[n]` arrives in degree n.
fn assemble(
    sizes: &[usize],
    outgoing: impl Fn(usize) -> BitMatrix,
    incoming: impl Fn(usize) -> BitMatrix,
    cells: Vec<Vec<usize>>,
) -> Homology {
    let groups = (0..sizes.len())
        .map(|n| {
            let z = outgoing(n).kernel();
            let b = incoming(n).image();
            Subquotient::new(z, b).expect("boundaries are cycles")
        })
        .collect();
    Homology { groups, cells }
}

fn complement_cells(k: &SimplicialComplex, mask: Option<&[Vec<bool>]>) -> Vec<Vec<usize>> {
    (0..k.levels())
        .map(|q| {
            (0..k.count(q))
                .filter(|&i| mask.is_none_or(|m| !m[q][i]))
                .collect()
        })
        .collect()
}

fn coboundary_on(k: &SimplicialComplex, cells: &[Vec<usize>], q: usize) -> BitMatrix {
    let empty = Vec::new();
    let rows = cells.get(q + 1).unwrap_or(&empty);
    let cols = cells.get(q).unwrap_or(&empty);
    if rows.is_empty() || cols.is_empty() {
        return BitMatrix::zeros(rows.len(), cols.len());
    }
    k.coboundary(q).submatrix(rows, cols)
}

fn cohomology_on(k: &SimplicialComplex, cells: Vec<Vec<usize>>) -> Homology {
    let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
    let size = |q: usize| sizes.get(q).copied().unwrap_or(0);
    assemble(
        &sizes,
        |n| coboundary_on(k, &cells, n),
        |n| match n {
            0 => BitMatrix::zeros(size(0), 0),
            _ => coboundary_on(k, &cells, n - 1),
        },
        cells.clone(),
    )
}

fn homology_on(k: &SimplicialComplex, cells: Vec<Vec<usize>>) -> Homology {
    let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
    let size = |q: usize| sizes.get(q).copied().unwrap_or(0);
    assemble(
        &sizes,
        |n| match n {
            0 => BitMatrix::zeros(0, size(0)),
            _ => coboundary_on(k, &cells, n - 1).transpose(),
        },
        |n| coboundary_on(k, &cells, n).transpose(),
        cells.clone(),
    )
}

/// `H^*(K; F₂)`.
pub fn mod2_cohomology(k: &SimplicialComplex) -> Homology {
    cohomology_on(k, complement_cells(k, None))
}

/// `H^*(K, L; F₂)`: cochains vanishing on the subcomplex.
pub fn mod2_cohomology_pair(pair: &ComplexPair) -> Homology {
    let mask = pair.sub_mask();
    cohomology_on(&pair.total, complement_cells(&pair.total, Some(&mask)))
}

/// `H_*(K; F₂)`.
pub fn mod2_homology(k: &SimplicialComplex) -> Homology {
    homology_on(k, complement_cells(k, None))
}

/// `H_*(K, L; F₂)`: chains modulo the subcomplex.
pub fn mod2_homology_pair(pair: &ComplexPair) -> Homology {
    let mask = pair.sub_mask();
    homology_on(&pair.total, complement_cells(&pair.total, Some(&mask)))
}

/// Mod-2 Betti numbers of a complex.
pub fn mod2_betti(k: &SimplicialComplex) -> Vec<usize> {
    let sizes = k.f_vector();
    let ranks: Vec<usize> = (0..sizes.len()).map(|q| k.coboundary(q).rank()).collect();
    (0..sizes.len())
        .map(|q| sizes[q] - ranks[q] - if q > 0 { ranks[q - 1] } else { 0 })
        .collect()
}

/// Chain-level map `f_#` on degree-n chains; degenerate images go to zero.
fn chain_map(
    f: &SimplicialMap,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    n: usize,
) -> Result<BitMatrix, ComplexError> {
    let mut m = BitMatrix::zeros(target.count(n), source.count(n));
    for (k, s) in source.simplices(n).iter().enumerate() {
        let img = f.image(s);
        if img.len() == s.len() {
            let t = target.index_of(&img).ok_or_else(|| {
                ComplexError::NotSimplicial(format!("image of {s:?} is not a simplex"))
            })?;
            m.set(t, k, true);
        }
    }
    Ok(m)
}

/// Matrix of `f^*: H^n(target) → H^n(source)` in the canonical cocycle bases.
/// Degrees beyond either complex give a matrix with a zero dimension.
pub fn induced_map_mod2(
    f: &SimplicialMap,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    n: usize,
) -> Result<BitMatrix, ComplexError> {
    induced_map_with(f, source, target, &mod2_cohomology(source), &mod2_cohomology(target), n)
}

/// [`induced_map_mod2`] with both cohomologies already computed.
pub fn induced_map_with(
    f: &SimplicialMap,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    hs: &Homology,
    ht: &Homology,
    n: usize,
) -> Result<BitMatrix, ComplexError> {
    f.validate(source, target)?;
    let pullback = chain_map(f, source, target, n)?.transpose();
    Ok(hs.group(n).induced_from(&ht.group(n), |x| pullback.apply(x))?)
}

/// Matrix of `f_*: H_n(source) → H_n(target)` in the canonical cycle bases.
pub fn induced_homology_map_mod2(
    f: &SimplicialMap,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    n: usize,
) -> Result<BitMatrix, ComplexError> {
    induced_homology_map_with(f, source, target, &mod2_homology(source), &mod2_homology(target), n)
}

/// [`induced_homology_map_mod2`] with both homologies already computed.
pub fn induced_homology_map_with(
    f: &SimplicialMap,
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    hs: &Homology,
    ht: &Homology,
    n: usize,
) -> Result<BitMatrix, ComplexError> {
    f.validate(source, target)?;
    let push = chain_map(f, source, target, n)?;
    Ok(ht.group(n).induced_from(&hs.group(n), |x| push.apply(x))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sphere_and_circle() {
        assert_eq!(mod2_cohomology(&fixtures::octahedron()).dims(), vec![1, 0, 1]);
        assert_eq!(mod2_cohomology(&fixtures::hexagon()).dims(), vec![1, 1]);
        assert_eq!(mod2_homology(&fixtures::octahedron()).dims(), vec![1, 0, 1]);
        assert_eq!(mod2_betti(&fixtures::hexagon()), vec![1, 1]);
    }

    #[test]
    fn empty_complex_has_no_cohomology() {
        let h = mod2_cohomology(&SimplicialComplex::empty());
        assert_eq!(h.total_dim(), 0);
        assert_eq!(h.dim(4), 0);
    }

    #[test]
    fn disk_relative_to_boundary() {
        let pair = fixtures::disk_pair();
        assert_eq!(mod2_cohomology_pair(&pair).dims(), vec![0, 0, 1]);
        assert_eq!(mod2_homology_pair(&pair).dims(), vec![0, 0, 1]);
    }

    #[test]
    fn identity_induces_identity() {
        let k = fixtures::octahedron();
        let id = SimplicialMap::identity(k.vertex_count());
        for n in 0..3 {
            let m = induced_map_mod2(&id, &k, &k, n).unwrap();
            assert!(m.is_identity());
        }
    }

    #[test]
    fn equator_inclusion_in_degree_one_is_zero() {
        let ic = fixtures::octahedron_reflection();
        let (fixed, emb) = super::super::fixed_subcomplex(&ic).unwrap();
        let m = induced_map_mod2(&emb, &fixed, ic.complex(), 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 0));
    }

    #[test]
    fn boundary_into_disk_degree_zero() {
        let pair = fixtures::disk_pair();
        let m = induced_map_mod2(&pair.embedding, &pair.sub, &pair.total, 0).unwrap();
        assert!(m.is_identity() && m.rows() == 1);
    }

    #[test]
    fn out_of_range_degree_is_empty() {
        let k = fixtures::hexagon();
        let id = SimplicialMap::identity(6);
        let m = induced_map_mod2(&id, &k, &k, 7).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }
}
