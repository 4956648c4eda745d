use std::collections::{BTreeSet, HashMap};

use super::ComplexError;
use crate::gf2::BitMatrix;

/// A simplex as a strictly increasing list of vertex indices.
pub type Simplex = Vec<usize>;

/// Hard ceiling on simplex dimension accepted from input; face closure of a
/// d-simplex has 2^(d+1) − 1 faces.
const MAX_INPUT_DIMENSION: usize = 24;

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
///
/// Every vertex is a 0-simplex. Simplices of each dimension are kept in
/// lexicographic order, fixed at construction; every matrix built from the
/// complex indexes rows and columns by that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    by_dim: Vec<Vec<Simplex>>,
    lookup: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            by_dim: Vec::new(),
            lookup: Vec::new(),
        }
    }

    /// Face closure of the given simplices.
    pub fn from_maximal<I>(vertex_count: usize, simplices: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator,
        I::Item: AsRef<[usize]>,
    {
        Self::from_maximal_capped(vertex_count, simplices, usize::MAX)
    }

    /// Face closure with a guard: fails once more than `cap` simplices exist.
    pub fn from_maximal_capped<I>(
        vertex_count: usize,
        simplices: I,
        cap: usize,
    ) -> Result<Self, ComplexError>
    where
        I: IntoIterator,
        I::Item: AsRef<[usize]>,
    {
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        let mut total = 0usize;
        let insert = |s: Simplex, sets: &mut Vec<BTreeSet<Simplex>>, total: &mut usize| {
            let d = s.len() - 1;
            if sets.len() <= d {
                sets.resize_with(d + 1, BTreeSet::new);
            }
            if sets[d].insert(s) {
                *total += 1;
                true
            } else {
                false
            }
        };
        for v in 0..vertex_count {
            insert(vec![v], &mut sets, &mut total);
        }
        if total > cap {
            return Err(ComplexError::SimplexCapExceeded { cap });
        }
        for raw in simplices {
            let raw = raw.as_ref();
            if raw.is_empty() {
                return Err(ComplexError::InvalidSimplex {
                    simplex: Vec::new(),
                    reason: "empty simplex".into(),
                });
            }
            let mut s = raw.to_vec();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::InvalidSimplex {
                    simplex: raw.to_vec(),
                    reason: "repeated vertex".into(),
                });
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            if s.len() > MAX_INPUT_DIMENSION + 1 {
                return Err(ComplexError::InvalidSimplex {
                    simplex: raw.to_vec(),
                    reason: format!("dimension exceeds {MAX_INPUT_DIMENSION}"),
                });
            }
            // depth-first closure; a face already present has all its faces
            let mut stack = vec![s];
            while let Some(f) = stack.pop() {
                if f.len() == 1 || !insert(f.clone(), &mut sets, &mut total) {
                    continue;
                }
                if total > cap {
                    return Err(ComplexError::SimplexCapExceeded { cap });
                }
                for skip in 0..f.len() {
                    let mut face = f.clone();
                    face.remove(skip);
                    stack.push(face);
                }
            }
        }
        while sets.last().is_some_and(|s| s.is_empty()) {
            sets.pop();
        }
        let by_dim: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let lookup = by_dim
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Ok(SimplicialComplex {
            vertex_count,
            by_dim,
            lookup,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// Number of dimension slots (`dimension + 1`, or 0 when empty).
    pub fn levels(&self) -> usize {
        self.by_dim.len()
    }

    pub fn simplices(&self, q: usize) -> &[Simplex] {
        self.by_dim.get(q).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, q: usize) -> usize {
        self.simplices(q).len()
    }

    pub fn total_simplices(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// Index of a sorted simplex within its dimension.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.lookup.get(d)?.get(simplex).copied()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.index_of(simplex).is_some()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(q, s)| if q % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// Indices of the codimension-one faces of simplex `k` in dimension `q`,
    /// in the order obtained by deleting vertex 0, 1, ….
    pub fn face_indices(&self, q: usize, k: usize) -> Vec<usize> {
        if q == 0 {
            return Vec::new();
        }
        let s = &self.by_dim[q][k];
        (0..s.len())
            .map(|skip| {
                let face: Simplex = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                self.lookup[q - 1][&face]
            })
            .collect()
    }

    /// Mod-2 coboundary `d^q : C^q → C^{q+1}` (rows: (q+1)-simplices).
    pub fn coboundary(&self, q: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.count(q + 1), self.count(q));
        for k in 0..self.count(q + 1) {
            for f in self.face_indices(q + 1, k) {
                m.set(k, f, true);
            }
        }
        m
    }

    /// Mod-2 boundary `∂_q : C_q → C_{q−1}` (rows: (q−1)-simplices).
    pub fn boundary(&self, q: usize) -> BitMatrix {
        if q == 0 {
            return BitMatrix::zeros(0, self.count(0));
        }
        self.coboundary(q - 1).transpose()
    }

    /// Integer boundary columns: for each q-simplex, `(face index, ±1)`.
    pub fn signed_boundary(&self, q: usize) -> Vec<Vec<(usize, i64)>> {
        (0..self.count(q))
            .map(|k| {
                self.face_indices(q, k)
                    .into_iter()
                    .enumerate()
                    .map(|(i, f)| (f, if i % 2 == 0 { 1 } else { -1 }))
                    .collect()
            })
            .collect()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self.by_dim.iter().map(|s| vec![false; s.len()]).collect();
        for q in 1..self.by_dim.len() {
            for k in 0..self.by_dim[q].len() {
                for f in self.face_indices(q, k) {
                    covered[q - 1][f] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (q, list) in self.by_dim.iter().enumerate() {
            for (k, s) in list.iter().enumerate() {
                if !covered[q][k] {
                    out.push(s.clone());
                }
            }
        }
        out
    }
}

/// A simplicial map given by its vertex assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub vertex_map: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(vertex_map: Vec<usize>) -> Self {
        SimplicialMap { vertex_map }
    }

    pub fn identity(n: usize) -> Self {
        SimplicialMap::new((0..n).collect())
    }

    /// Image of a simplex, sorted and with repeated vertices merged.
    pub fn image(&self, simplex: &[usize]) -> Simplex {
        let mut out: Simplex = simplex.iter().map(|&v| self.vertex_map[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn compose(&self, after: &SimplicialMap) -> SimplicialMap {
        SimplicialMap::new(self.vertex_map.iter().map(|&v| after.vertex_map[v]).collect())
    }

    /// Checks that the map sends every simplex of `source` onto a simplex of `target`.
    pub fn validate(
        &self,
        source: &SimplicialComplex,
        target: &SimplicialComplex,
    ) -> Result<(), ComplexError> {
        if self.vertex_map.len() != source.vertex_count() {
            return Err(ComplexError::NotSimplicial(format!(
                "vertex map has {} entries for {} vertices",
                self.vertex_map.len(),
                source.vertex_count()
            )));
        }
        for q in 0..source.levels() {
            for s in source.simplices(q) {
                let img = self.image(s);
                if img.iter().any(|&v| v >= target.vertex_count()) || !target.contains(&img) {
                    return Err(ComplexError::NotSimplicial(format!(
                        "image of {s:?} is {img:?}, not a simplex of the target"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A complex together with a subcomplex embedded by a vertex map.
#[derive(Clone, Debug)]
pub struct ComplexPair {
    pub total: SimplicialComplex,
    pub sub: SimplicialComplex,
    pub embedding: SimplicialMap,
}

impl ComplexPair {
    pub fn new(
        total: SimplicialComplex,
        sub: SimplicialComplex,
        embedding: SimplicialMap,
    ) -> Result<Self, ComplexError> {
        embedding.validate(&sub, &total)?;
        let mut seen = embedding.vertex_map.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::NotASubcomplex(
                "embedding identifies vertices".into(),
            ));
        }
        Ok(ComplexPair {
            total,
            sub,
            embedding,
        })
    }

    /// Per dimension, whether each simplex of `total` lies in the subcomplex.
    pub fn sub_mask(&self) -> Vec<Vec<bool>> {
        let mut mask: Vec<Vec<bool>> = (0..self.total.levels())
            .map(|q| vec![false; self.total.count(q)])
            .collect();
        for (q, row) in mask.iter_mut().enumerate().take(self.sub.levels()) {
            for s in self.sub.simplices(q) {
                let img = self.embedding.image(s);
                let k = self.total.index_of(&img).expect("validated embedding");
                row[k] = true;
            }
        }
        mask
    }
}
