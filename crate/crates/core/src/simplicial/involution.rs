use super::complex::{ComplexPair, Simplex, SimplicialComplex, SimplicialMap};
use super::subdivision::subdivide;
use super::ComplexError;
use crate::gf2::BitMatrix;

/// A simplicial complex with a simplicial involution `g`, given on vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveComplex {
    complex: SimplicialComplex,
    involution: Vec<usize>,
    // simplex_perm[q][k] = index of g(σ) for the k-th q-simplex σ
    simplex_perm: Vec<Vec<usize>>,
}

impl InvolutiveComplex {
    pub fn new(complex: SimplicialComplex, involution: Vec<usize>) -> Result<Self, ComplexError> {
        let n = complex.vertex_count();
        if involution.len() != n {
            return Err(ComplexError::InvalidInvolution(format!(
                "permutation has length {}, expected {n}",
                involution.len()
            )));
        }
        if let Some(v) = (0..n).find(|&v| involution[v] >= n) {
            return Err(ComplexError::InvalidInvolution(format!(
                "vertex {v} maps to {} which is out of range",
                involution[v]
            )));
        }
        if let Some(v) = (0..n).find(|&v| involution[involution[v]] != v) {
            return Err(ComplexError::InvalidInvolution(format!(
                "not of order 2: g(g({v})) = {}",
                involution[involution[v]]
            )));
        }
        let g = SimplicialMap::new(involution.clone());
        let mut simplex_perm = Vec::with_capacity(complex.levels());
        for q in 0..complex.levels() {
            let mut perm = Vec::with_capacity(complex.count(q));
            for s in complex.simplices(q) {
                let img = g.image(s);
                let k = complex.index_of(&img).ok_or_else(|| {
                    ComplexError::InvalidInvolution(format!(
                        "image {img:?} of simplex {s:?} is not a simplex"
                    ))
                })?;
                perm.push(k);
            }
            simplex_perm.push(perm);
        }
        Ok(InvolutiveComplex {
            complex,
            involution,
            simplex_perm,
        })
    }

    pub fn identity(complex: SimplicialComplex) -> Self {
        let g = (0..complex.vertex_count()).collect();
        InvolutiveComplex::new(complex, g).expect("identity is an involution")
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn as_map(&self) -> SimplicialMap {
        SimplicialMap::new(self.involution.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.involution.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Index of `g(σ)` for the `k`-th `q`-simplex `σ`.
    pub fn simplex_image(&self, q: usize, k: usize) -> usize {
        self.simplex_perm[q][k]
    }

    pub fn simplex_permutation(&self, q: usize) -> &[usize] {
        self.simplex_perm.get(q).map_or(&[], |v| v.as_slice())
    }

    /// Whether every vertex of the simplex is fixed.
    pub fn is_pointwise_fixed(&self, simplex: &[usize]) -> bool {
        simplex.iter().all(|&v| self.involution[v] == v)
    }

    /// Permutation matrix of `g` on q-chains (equal to its transpose on cochains).
    pub fn g_matrix(&self, q: usize) -> BitMatrix {
        let n = self.complex.count(q);
        let mut m = BitMatrix::zeros(n, n);
        for (k, &img) in self.simplex_permutation(q).iter().enumerate() {
            m.set(img, k, true);
        }
        m
    }

    /// `1 + g` on q-(co)chains.
    pub fn one_plus_g(&self, q: usize) -> BitMatrix {
        self.g_matrix(q).add(&BitMatrix::identity(self.complex.count(q)))
    }

    /// First violation of regularity, if any.
    ///
    /// Two conditions are checked on every simplex `s`. First, if `v` and
    /// `g(v)` both lie in `s` then `g(v) = v`. Second, moving only some of the
    /// non-fixed vertices of `s` by `g` must never produce a simplex. The
    /// first alone keeps orbits apart inside a simplex; the second is what
    /// makes the orbit-vertex quotient a triangulation of `|K|/G` (the
    /// antipodal octahedron passes the first and fails the second).
    pub fn regularity_violation(&self) -> Option<String> {
        let g = &self.involution;
        for q in 1..self.complex.levels() {
            for s in self.complex.simplices(q) {
                if let Some(&v) = s.iter().find(|&&v| g[v] != v && s.binary_search(&g[v]).is_ok()) {
                    return Some(format!("simplex {s:?} contains {v} and its image {}", g[v]));
                }
                let moved: Vec<usize> = s.iter().copied().filter(|&v| g[v] != v).collect();
                if moved.len() < 2 {
                    continue;
                }
                // proper nonempty subsets of the moved vertices
                for mask in 1..(1u64 << moved.len()) - 1 {
                    let mut t: Simplex = s
                        .iter()
                        .map(|&v| match moved.iter().position(|&m| m == v) {
                            Some(i) if mask >> i & 1 == 1 => g[v],
                            _ => v,
                        })
                        .collect();
                    t.sort_unstable();
                    if self.complex.contains(&t) {
                        return Some(format!(
                            "simplex {s:?} is partially moved onto the simplex {t:?}"
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn is_regular(&self) -> bool {
        self.regularity_violation().is_none()
    }

    pub(crate) fn require_regular(&self) -> Result<(), ComplexError> {
        match self.regularity_violation() {
            None => Ok(()),
            Some(why) => Err(ComplexError::NonRegularAction(why)),
        }
    }

    /// Per dimension, whether each simplex is pointwise fixed.
    pub fn fixed_mask(&self) -> Vec<Vec<bool>> {
        (0..self.complex.levels())
            .map(|q| {
                self.complex
                    .simplices(q)
                    .iter()
                    .map(|s| self.is_pointwise_fixed(s))
                    .collect()
            })
            .collect()
    }
}

/// The subcomplex of pointwise fixed simplices, with its embedding into `K`.
pub fn fixed_subcomplex(
    ic: &InvolutiveComplex,
) -> Result<(SimplicialComplex, SimplicialMap), ComplexError> {
    ic.require_regular()?;
    let g = ic.involution();
    let fixed: Vec<usize> = (0..g.len()).filter(|&v| g[v] == v).collect();
    let mut new_index = vec![usize::MAX; g.len()];
    for (i, &v) in fixed.iter().enumerate() {
        new_index[v] = i;
    }
    let k = ic.complex();
    let simplices: Vec<Simplex> = k
        .maximal_simplices()
        .into_iter()
        .flat_map(|s| {
            // the fixed part of a simplex is its face on the fixed vertices
            let f: Simplex = s.iter().filter(|&&v| g[v] == v).map(|&v| new_index[v]).collect();
            (!f.is_empty()).then_some(f)
        })
        .collect();
    let sub = SimplicialComplex::from_maximal(fixed.len(), simplices)?;
    Ok((sub, SimplicialMap::new(fixed)))
}

/// The orbit complex `K/G` and the projection `K → K/G`.
///
/// Orbits are numbered by their smallest vertex.
pub fn quotient_complex(
    ic: &InvolutiveComplex,
) -> Result<(SimplicialComplex, SimplicialMap), ComplexError> {
    ic.require_regular()?;
    let g = ic.involution();
    let mut orbit = vec![usize::MAX; g.len()];
    let mut count = 0;
    for v in 0..g.len() {
        if orbit[v] == usize::MAX {
            orbit[v] = count;
            orbit[g[v]] = count;
            count += 1;
        }
    }
    let projection = SimplicialMap::new(orbit);
    let images: Vec<Simplex> = ic
        .complex()
        .maximal_simplices()
        .iter()
        .map(|s| projection.image(s))
        .collect();
    let quotient = SimplicialComplex::from_maximal(count, images)?;
    Ok((quotient, projection))
}

/// The pair `(K/G, K^G)`, with the fixed part embedded through the projection.
pub fn quotient_pair(ic: &InvolutiveComplex) -> Result<ComplexPair, ComplexError> {
    let (quotient, projection) = quotient_complex(ic)?;
    let (fixed, embedding) = fixed_subcomplex(ic)?;
    let into_quotient = embedding.compose(&projection);
    ComplexPair::new(quotient, fixed, into_quotient)
}

/// Subdivides until the action is regular; returns the result and the number
/// of barycentric subdivisions applied (0, 1 or 2).
pub fn regularize(ic: &InvolutiveComplex) -> (InvolutiveComplex, usize) {
    let mut current = ic.clone();
    let mut rounds = 0;
    while !current.is_regular() {
        // one subdivision separates orbits inside simplices, a second one
        // always yields a regular action
        assert!(rounds < 2, "two barycentric subdivisions must give a regular action");
        current = subdivide(&current);
        rounds += 1;
    }
    (current, rounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_non_involutions() {
        let k = SimplicialComplex::from_maximal(3, [[0, 1, 2]]).unwrap();
        assert!(matches!(
            InvolutiveComplex::new(k.clone(), vec![1, 2, 0]),
            Err(ComplexError::InvalidInvolution(_))
        ));
        assert!(InvolutiveComplex::new(k.clone(), vec![0, 1]).is_err());
        let path = SimplicialComplex::from_maximal(3, [[0, 1], [1, 2]]).unwrap();
        // swapping 0 and 1 sends the edge {1,2} to {0,2}
        assert!(InvolutiveComplex::new(path, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn reflection_fixes_the_equator() {
        let ic = fixtures::octahedron_reflection();
        assert!(ic.is_regular());
        let (fixed, emb) = fixed_subcomplex(&ic).unwrap();
        assert_eq!(fixed.f_vector(), vec![4, 4]);
        assert_eq!(emb.vertex_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn reflection_quotient_is_a_disk() {
        let ic = fixtures::octahedron_reflection();
        let (q, _) = quotient_complex(&ic).unwrap();
        assert_eq!(q.f_vector(), vec![5, 8, 4]);
        assert_eq!(q.euler_characteristic(), 1);
    }

    #[test]
    fn free_hexagon() {
        let ic = fixtures::hexagon_antipodal();
        assert!(ic.is_regular());
        let (fixed, _) = fixed_subcomplex(&ic).unwrap();
        assert_eq!(fixed.dimension(), None);
        let (q, _) = quotient_complex(&ic).unwrap();
        assert_eq!(q.f_vector(), vec![3, 3]);
    }

    #[test]
    fn identity_fixes_everything() {
        let ic = InvolutiveComplex::identity(fixtures::octahedron());
        let (fixed, _) = fixed_subcomplex(&ic).unwrap();
        assert_eq!(fixed, *ic.complex());
        let (q, _) = quotient_complex(&ic).unwrap();
        assert_eq!(q, *ic.complex());
    }

    #[test]
    fn antipodal_octahedron_needs_subdivision() {
        let ic = fixtures::octahedron_antipodal_raw();
        assert!(!ic.is_regular());
        assert!(matches!(
            quotient_complex(&ic),
            Err(ComplexError::NonRegularAction(_))
        ));
        let (reg, rounds) = regularize(&ic);
        assert!(reg.is_regular());
        assert!((1..=2).contains(&rounds));
    }

    #[test]
    fn swapped_edge_gains_a_fixed_midpoint() {
        let k = SimplicialComplex::from_maximal(2, [[0, 1]]).unwrap();
        let ic = InvolutiveComplex::new(k, vec![1, 0]).unwrap();
        let (reg, rounds) = regularize(&ic);
        assert_eq!(rounds, 1);
        let (fixed, _) = fixed_subcomplex(&reg).unwrap();
        assert_eq!(fixed.f_vector(), vec![1]);
    }

    #[test]
    fn one_plus_g_commutes_with_coboundary() {
        let ic = fixtures::octahedron_antipodal();
        let k = ic.complex();
        for q in 0..2 {
            let lhs = k.coboundary(q).mul(&ic.one_plus_g(q).transpose());
            let rhs = ic.one_plus_g(q + 1).transpose().mul(&k.coboundary(q));
            assert_eq!(lhs, rhs);
        }
    }
}
