use super::complex::{Simplex, SimplicialComplex};
use super::involution::InvolutiveComplex;

/// Barycentric subdivision.
///
/// The barycenter of the `k`-th `q`-simplex becomes vertex
/// `offset[q] + k`, so vertices are ordered by dimension of the simplex they
/// replace. Returns the subdivision and the offsets.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> (SimplicialComplex, Vec<usize>) {
    let mut offsets = Vec::with_capacity(k.levels());
    let mut total = 0;
    for q in 0..k.levels() {
        offsets.push(total);
        total += k.count(q);
    }
    let mut flags: Vec<Simplex> = Vec::new();
    for max in k.maximal_simplices() {
        let mut order = max.clone();
        each_permutation(&mut order, 0, &mut |perm| {
            // the flag {v0} ⊂ {v0,v1} ⊂ … read off a vertex ordering
            let mut flag = Vec::with_capacity(perm.len());
            let mut face: Simplex = Vec::with_capacity(perm.len());
            for (q, &v) in perm.iter().enumerate() {
                let pos = face.binary_search(&v).unwrap_err();
                face.insert(pos, v);
                flag.push(offsets[q] + k.index_of(&face).expect("face of a simplex"));
            }
            flags.push(flag);
        });
    }
    let sd = SimplicialComplex::from_maximal(total, flags).expect("flags are valid simplices");
    (sd, offsets)
}

fn each_permutation(items: &mut [usize], start: usize, f: &mut impl FnMut(&[usize])) {
    if start + 1 >= items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        each_permutation(items, start + 1, f);
        items.swap(start, i);
    }
}

/// Barycentric subdivision carrying the involution to barycenters:
/// `g(b(σ)) = b(g(σ))`.
pub fn subdivide(ic: &InvolutiveComplex) -> InvolutiveComplex {
    let k = ic.complex();
    let (sd, offsets) = barycentric_subdivision(k);
    let mut g = Vec::with_capacity(sd.vertex_count());
    for (q, &offset) in offsets.iter().enumerate().take(k.levels()) {
        for j in 0..k.count(q) {
            g.push(offset + ic.simplex_image(q, j));
        }
    }
    InvolutiveComplex::new(sd, g).expect("subdivision of an involution is an involution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn subdivided_triangle() {
        let k = SimplicialComplex::from_maximal(3, [[0, 1, 2]]).unwrap();
        let (sd, offsets) = barycentric_subdivision(&k);
        assert_eq!(offsets, vec![0, 3, 6]);
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
        assert_eq!(sd.euler_characteristic(), 1);
    }

    #[test]
    fn subdivided_octahedron() {
        let (sd, _) = barycentric_subdivision(&fixtures::octahedron());
        assert_eq!(sd.f_vector(), vec![26, 72, 48]);
        assert_eq!(sd.euler_characteristic(), 2);
    }

    #[test]
    fn involution_survives_subdivision() {
        let ic = subdivide(&fixtures::octahedron_antipodal_raw());
        assert_eq!(ic.complex().vertex_count(), 26);
        assert!(ic.involution().iter().enumerate().all(|(v, &w)| v != w));
    }

    #[test]
    fn empty_and_point() {
        let (sd, _) = barycentric_subdivision(&SimplicialComplex::empty());
        assert_eq!(sd.dimension(), None);
        let (sd, _) = barycentric_subdivision(&fixtures::point());
        assert_eq!(sd.f_vector(), vec![1]);
    }
}
