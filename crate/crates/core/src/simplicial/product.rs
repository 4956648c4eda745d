use super::complex::{Simplex, SimplicialComplex};
use super::involution::InvolutiveComplex;
use super::subdivision::subdivide;

/// Staircase triangulation of `|a| × |b|`.
///
/// Vertex `(x, y)` gets index `x·|b| + y`. Each pair of maximal simplices
/// contributes one top simplex per monotone lattice path through the grid of
/// their vertices, using the vertex index order of each factor.
pub fn product_complex(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let nb = b.vertex_count();
    let mut tops: Vec<Simplex> = Vec::new();
    let (ma, mb) = (a.maximal_simplices(), b.maximal_simplices());
    for s in &ma {
        for t in &mb {
            let (p, q) = (s.len() - 1, t.len() - 1);
            // a path is a choice of which of the p+q steps move in the first factor
            for mask in 0u64..(1u64 << (p + q)) {
                if mask.count_ones() as usize != p {
                    continue;
                }
                let (mut i, mut j) = (0, 0);
                let mut path = vec![s[0] * nb + t[0]];
                for step in 0..p + q {
                    if mask >> step & 1 == 1 {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    path.push(s[i] * nb + t[j]);
                }
                tops.push(path);
            }
        }
    }
    SimplicialComplex::from_maximal(a.vertex_count() * nb, tops)
        .expect("staircase simplices are valid")
}

/// Whether `g` preserves the vertex order inside every simplex, which is
/// what the staircase construction needs to be invariant.
fn order_compatible(ic: &InvolutiveComplex) -> bool {
    let g = ic.involution();
    ic.complex()
        .simplices(1)
        .iter()
        .all(|e| g[e[0]] < g[e[1]])
}

/// Product with the diagonal involution `g × h`.
///
/// A factor whose involution reverses the vertex order on some edge is
/// subdivided once first; barycentric vertices are ordered by dimension, which
/// every simplicial map preserves.
pub fn product_involutive(a: &InvolutiveComplex, b: &InvolutiveComplex) -> InvolutiveComplex {
    let a = if order_compatible(a) { a.clone() } else { subdivide(a) };
    let b = if order_compatible(b) { b.clone() } else { subdivide(b) };
    let k = product_complex(a.complex(), b.complex());
    let nb = b.complex().vertex_count();
    let (ga, gb) = (a.involution(), b.involution());
    let g = (0..k.vertex_count())
        .map(|v| ga[v / nb] * nb + gb[v % nb])
        .collect();
    InvolutiveComplex::new(k, g).expect("order-compatible factors give an invariant product")
}
