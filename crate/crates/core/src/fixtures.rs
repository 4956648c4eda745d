//! Small named models and random generators.
//!
//! Octahedron vertices: 0 = +x, 1 = −x, 2 = +y, 3 = −y, 4 = +z, 5 = −z.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::simplicial::{
    product_involutive, regularize, ComplexPair, InvolutiveComplex, SimplicialComplex,
    SimplicialMap,
};

pub fn point() -> SimplicialComplex {
    SimplicialComplex::from_maximal(1, [[0]]).expect("point")
}

/// Circle as a 4-cycle.
pub fn square() -> SimplicialComplex {
    cycle(4)
}

/// Circle as a 6-cycle.
pub fn hexagon() -> SimplicialComplex {
    cycle(6)
}

fn cycle(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_maximal(n, (0..n).map(|i| [i, (i + 1) % n])).expect("cycle")
}

/// Boundary of the octahedron, a 2-sphere with 8 triangles.
pub fn octahedron() -> SimplicialComplex {
    let mut tris = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                tris.push([a, b, c]);
            }
        }
    }
    SimplicialComplex::from_maximal(6, tris).expect("octahedron")
}

/// Triangulated disk (cone on the square) with its boundary circle.
pub fn disk_pair() -> ComplexPair {
    let disk = SimplicialComplex::from_maximal(5, (0..4).map(|i| [i, (i + 1) % 4, 4]))
        .expect("disk");
    ComplexPair::new(disk, square(), SimplicialMap::identity(4)).expect("boundary circle")
}

pub fn point_identity() -> InvolutiveComplex {
    InvolutiveComplex::identity(point())
}

pub fn square_identity() -> InvolutiveComplex {
    InvolutiveComplex::identity(square())
}

/// Hexagon with the free rotation `i ↦ i + 3`.
pub fn hexagon_antipodal() -> InvolutiveComplex {
    InvolutiveComplex::new(hexagon(), (0..6).map(|i| (i + 3) % 6).collect()).expect("rotation")
}

pub fn octahedron_identity() -> InvolutiveComplex {
    InvolutiveComplex::identity(octahedron())
}

/// Reflection `z ↦ −z`, fixing the equator 0-2-1-3.
pub fn octahedron_reflection() -> InvolutiveComplex {
    InvolutiveComplex::new(octahedron(), vec![0, 1, 2, 3, 5, 4]).expect("reflection")
}

/// Antipodal map on the raw octahedron; not regular.
pub fn octahedron_antipodal_raw() -> InvolutiveComplex {
    InvolutiveComplex::new(octahedron(), vec![1, 0, 3, 2, 5, 4]).expect("antipodal map")
}

/// Antipodal map after regularization.
pub fn octahedron_antipodal() -> InvolutiveComplex {
    regularize(&octahedron_antipodal_raw()).0
}

/// An edge with its endpoints swapped, regularized.
pub fn edge_swap() -> InvolutiveComplex {
    let edge = SimplicialComplex::from_maximal(2, [[0, 1]]).expect("edge");
    regularize(&InvolutiveComplex::new(edge, vec![1, 0]).expect("swap")).0
}

/// Octahedron squared with reflection × reflection: a model of a real
/// quadric whose real part is a torus.
pub fn quadric() -> InvolutiveComplex {
    let r = octahedron_reflection();
    product_involutive(&r, &r)
}

/// Octahedron squared with the identity.
pub fn quadric_identity() -> InvolutiveComplex {
    let id = octahedron_identity();
    product_involutive(&id, &id)
}

/// Names accepted by [`named`], in a stable order.
pub const NAMES: &[&str] = &[
    "point",
    "square-identity",
    "hexagon-antipodal",
    "octahedron-identity",
    "octahedron-reflection",
    "octahedron-antipodal",
    "edge-swap",
    "quadric",
    "quadric-identity",
];

pub fn named(name: &str) -> Option<InvolutiveComplex> {
    Some(match name {
        "point" => point_identity(),
        "square-identity" => square_identity(),
        "hexagon-antipodal" => hexagon_antipodal(),
        "octahedron-identity" => octahedron_identity(),
        "octahedron-reflection" => octahedron_reflection(),
        "octahedron-antipodal" => octahedron_antipodal(),
        "edge-swap" => edge_swap(),
        "quadric" => quadric(),
        "quadric-identity" => quadric_identity(),
        _ => return None,
    })
}

fn random_simplex<R: Rng>(rng: &mut R, vertices: usize, max_dim: usize) -> Vec<usize> {
    let dim = rng.gen_range(0..=max_dim.min(vertices - 1));
    let mut all: Vec<usize> = (0..vertices).collect();
    all.shuffle(rng);
    all.truncate(dim + 1);
    all.sort_unstable();
    all
}

/// Random complex with at most `cap` simplices: random simplices are added
/// while the face closure stays within the cap.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    vertices: usize,
    max_dim: usize,
    cap: usize,
) -> SimplicialComplex {
    assert!(vertices > 0 && vertices <= cap, "need 0 < vertices <= cap");
    let mut tops: Vec<Vec<usize>> = Vec::new();
    let mut current = SimplicialComplex::from_maximal(vertices, &tops).expect("vertices");
    for _ in 0..4 * vertices {
        let s = random_simplex(rng, vertices, max_dim);
        tops.push(s);
        match SimplicialComplex::from_maximal_capped(vertices, &tops, cap) {
            Ok(k) => current = k,
            Err(_) => {
                tops.pop();
            }
        }
    }
    current
}

/// Random regular involutive complex: a random vertex involution, simplices
/// added together with their images, then regularized.
pub fn random_involutive<R: Rng>(
    rng: &mut R,
    vertices: usize,
    max_dim: usize,
    cap: usize,
) -> InvolutiveComplex {
    assert!(vertices > 0 && vertices <= cap, "need 0 < vertices <= cap");
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(rng);
    let mut g: Vec<usize> = (0..vertices).collect();
    let pairs = rng.gen_range(0..=vertices / 2);
    for p in 0..pairs {
        let (a, b) = (order[2 * p], order[2 * p + 1]);
        g[a] = b;
        g[b] = a;
    }
    let mut tops: Vec<Vec<usize>> = Vec::new();
    let mut current = SimplicialComplex::from_maximal(vertices, &tops).expect("vertices");
    for _ in 0..4 * vertices {
        let s = random_simplex(rng, vertices, max_dim);
        let image: Vec<usize> = s.iter().map(|&v| g[v]).collect();
        tops.push(s);
        tops.push(image);
        match SimplicialComplex::from_maximal_capped(vertices, &tops, cap) {
            Ok(k) => current = k,
            Err(_) => {
                tops.truncate(tops.len() - 2);
            }
        }
    }
    let ic = InvolutiveComplex::new(current, g).expect("closed under the involution");
    regularize(&ic).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_fixtures_load() {
        for name in NAMES {
            assert!(named(name).is_some(), "{name}");
        }
        assert!(named("torus").is_none());
    }

    #[test]
    fn quadric_is_regular() {
        let q = quadric();
        assert_eq!(q.complex().f_vector(), vec![36, 288, 832, 960, 384]);
        assert!(q.is_regular());
    }

    #[test]
    fn random_generators_respect_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let k = random_complex(&mut rng, 8, 3, 60);
            assert!(k.total_simplices() <= 60);
            let ic = random_involutive(&mut rng, 7, 2, 40);
            assert!(ic.is_regular());
        }
    }
}
